# This code is part of the Decoupling Toolbox.

# (C) Copyright the Decoupling Toolbox developers 2026.

# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

"""Hamilton cycles in the Cayley graph of Z_d^k with the forward unit generators."""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from ..utils.settings import settings

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CycleSpec:
    """The group Z_d^k with generators e_0, ..., e_{k-1}."""

    d: int
    k: int

    def __post_init__(self) -> None:
        """
        Check the modulus, the coordinate count and the vertex cap.

        Raises:
            - ValueError: if d < 2, k < 1 or d^k exceeds the cycle vertex cap
        """
        if self.d < 2:
            raise ValueError("The modulus d must be at least 2.")
        if self.k < 1:
            raise ValueError("The coordinate count k must be at least 1.")
        if self.d**self.k > settings.cycle_vertex_cap:
            raise ValueError(
                f"Z_{self.d}^{self.k} has {self.d ** self.k} vertices, above the cap "
                f"of {settings.cycle_vertex_cap}."
            )

    @property
    def num_vertices(self) -> int:
        """Group order d^k."""
        return self.d**self.k


@dataclass(frozen=True)
class StepList:
    """A closed walk given by the generator index used at each step."""

    spec: CycleSpec
    steps: tuple[int, ...]

    def __post_init__(self) -> None:
        """Store the steps as a tuple of ints."""
        object.__setattr__(self, "steps", tuple(int(s) for s in self.steps))

    def __len__(self) -> int:
        return len(self.steps)

    def render(self) -> str:
        """Comma-separated generator indices."""
        return ",".join(str(s) for s in self.steps)


@dataclass(frozen=True)
class HamiltonReport:
    """Outcome of :func:`verify_hamilton`.

    ``kind`` is one of ``"length"``, ``"step"``, ``"repeat"`` and
    ``"endpoint"`` on failure. For ``"step"`` the index is the offending step;
    for ``"repeat"`` it is the position of the first revisited vertex.
    """

    passed: bool
    kind: str | None = None
    index: int | None = None
    vertex: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.passed


def hamilton_cycle(spec: CycleSpec) -> StepList:
    """
    Build a Hamilton cycle that uses only forward generators.

    For k = 1 the cycle takes d steps along e_0. A cycle on Z_d^k is obtained
    from the cycle on the last k - 1 coordinates by inserting d - 1 steps
    along e_0 before each of its edges. For d = 2 this is the reflected binary
    Gray code.

    Args:
        - spec (CycleSpec): the group

    Returns:
        - (StepList): the d^k generator indices

    >>> hamilton_cycle(CycleSpec(2, 3)).steps
    (0, 1, 0, 2, 0, 1, 0, 2)
    """
    d, k = spec.d, spec.k
    steps = [0] * d
    for _ in range(1, k):
        inner = steps
        steps = []
        for edge in inner:
            steps.extend([0] * (d - 1))
            steps.append(edge + 1)
    logger.debug("Hamilton cycle on Z_%d^%d with %d steps.", d, k, len(steps))
    return StepList(spec, tuple(steps))


def _walk_codes(sl: StepList) -> np.ndarray:
    """Packed vertices after 0, 1, ..., len(steps) steps; coordinate c weighs d^c."""
    d, k = sl.spec.d, sl.spec.k
    steps = np.asarray(sl.steps, dtype=np.int64)
    codes = np.zeros(len(steps) + 1, dtype=np.int64)
    for c in range(k):
        coordinate = np.cumsum(steps == c) % d
        codes[1:] += coordinate * d**c
    return codes


def _unpack(code: int, d: int, k: int) -> tuple[int, ...]:
    return tuple(int(code // d**c % d) for c in range(k))


def vertices(sl: StepList) -> np.ndarray:
    """
    Walk the steps from the zero vertex.

    Args:
        - sl (StepList): the walk

    Returns:
        - (np.ndarray): len(steps) x k array of visited vertices, the first
            one all-zero; the final return to zero is not repeated
    """
    d, k = sl.spec.d, sl.spec.k
    codes = _walk_codes(sl)[:-1]
    powers = d ** np.arange(k, dtype=np.int64)
    return (codes[:, None] // powers[None, :]) % d


def verify_hamilton(sl: StepList) -> HamiltonReport:
    """
    Check that the walk visits every vertex once and returns to zero.

    Args:
        - sl (StepList): the walk

    Returns:
        - (HamiltonReport): pass, or the first violation found
    """
    d, k = sl.spec.d, sl.spec.k
    if len(sl.steps) != sl.spec.num_vertices:
        return HamiltonReport(False, "length", len(sl.steps))
    for index, step in enumerate(sl.steps):
        if not 0 <= step < k:
            return HamiltonReport(False, "step", index)
    codes = _walk_codes(sl)
    visited = codes[:-1]
    order = np.argsort(visited, kind="stable")
    repeated = order[1:][visited[order[1:]] == visited[order[:-1]]]
    if repeated.size:
        index = int(repeated.min())
        vertex = _unpack(int(visited[index]), d, k)
        return HamiltonReport(False, "repeat", index, vertex)
    if codes[-1] != 0:
        vertex = _unpack(int(codes[-1]), d, k)
        return HamiltonReport(False, "endpoint", len(sl.steps), vertex)
    return HamiltonReport(True)


def gray_code(k: int) -> list[int]:
    """
    The binary cycle on k bits as integers, bit c holding coordinate c.

    >>> gray_code(3)
    [0, 1, 3, 2, 6, 7, 5, 4]
    """
    return _walk_codes(hamilton_cycle(CycleSpec(2, k)))[:-1].tolist()


def generator_usage(sl: StepList) -> list[int]:
    """
    Count how often each generator is used.

    >>> generator_usage(hamilton_cycle(CycleSpec(3, 2)))
    [6, 3]
    """
    steps = np.asarray(sl.steps, dtype=np.int64)
    return np.bincount(steps, minlength=sl.spec.k).tolist()
