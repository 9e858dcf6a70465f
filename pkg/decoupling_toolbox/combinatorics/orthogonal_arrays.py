# This code is part of the Decoupling Toolbox.

# (C) Copyright the Decoupling Toolbox developers 2026.

# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

"""Orthogonal arrays built from linear codes, and the exhaustive strength check."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Sequence

import numpy as np

from ..utils.settings import settings
from .linear_codes import LinearCode, dual_code, enumerate_codewords, min_distance

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class StrengthReport:
    """Outcome of :func:`verify_strength`.

    On failure ``rows`` and ``symbols`` name the lexicographically least row
    subset and, within it, the least symbol tuple whose count is off, and
    ``count`` is how often that tuple occurs.
    """

    passed: bool
    t: int
    lam: int | None = None
    rows: tuple[int, ...] | None = None
    symbols: tuple[int, ...] | None = None
    count: int | None = None

    def __bool__(self) -> bool:
        return self.passed


class OrthogonalArray:
    """An n x N array over the symbols [0, s) with claimed strength t.

    The claimed strength is not re-checked on construction; that is the job
    of :func:`verify_strength`.
    """

    def __init__(self, matrix, s: int, t: int):
        """
        Assign the necessary member variables.

        Args:
            - matrix: n x N integer array
            - s (int): number of symbols
            - t (int): claimed strength

        Raises:
            - ValueError: if an entry is out of range, t is out of range, or
                s^t does not divide N
        """
        array = np.array(matrix, dtype=np.int64)
        if array.ndim != 2 or array.shape[0] < 1 or array.shape[1] < 1:
            raise ValueError(
                "An orthogonal array needs a non-empty two-dimensional matrix."
            )
        if s < 2:
            raise ValueError("An orthogonal array needs at least two symbols.")
        if array.min() < 0 or array.max() >= s:
            raise ValueError(f"Array entries must lie in [0, {s}).")
        if not 1 <= t <= array.shape[0]:
            raise ValueError(f"Strength {t} is out of range for {array.shape[0]} rows.")
        if array.shape[1] % s**t:
            raise ValueError(
                f"{s}^{t} does not divide the number of runs {array.shape[1]}."
            )
        array.setflags(write=False)
        self._matrix = array
        self._s = s
        self._t = t

    @property
    def matrix(self) -> np.ndarray:
        """Read-only n x N symbol matrix."""
        return self._matrix

    @property
    def s(self) -> int:
        """Number of symbols."""
        return self._s

    @property
    def t(self) -> int:
        """Claimed strength."""
        return self._t

    @property
    def n(self) -> int:
        """Number of factors (rows)."""
        return int(self._matrix.shape[0])

    @property
    def N(self) -> int:  # noqa: N802
        """Number of runs (columns)."""
        return int(self._matrix.shape[1])

    @property
    def lam(self) -> int:
        """The index N / s^t."""
        return self.N // self._s**self._t

    def truncate(self, rows: int) -> OrthogonalArray:
        """
        Keep the first rows; deleting rows preserves strength.

        Raises:
            - ValueError: if rows is not in [1, n]
        """
        if not 1 <= rows <= self.n:
            raise ValueError(f"Cannot keep {rows} of {self.n} rows.")
        return OrthogonalArray(self._matrix[:rows], self._s, min(self._t, rows))

    def permute_columns(self, order: Sequence[int]) -> OrthogonalArray:
        """
        Reorder the runs.

        Raises:
            - ValueError: if order is not a permutation of range(N)
        """
        order = np.asarray(order, dtype=np.int64)
        if sorted(order.tolist()) != list(range(self.N)):
            raise ValueError("The column order must be a permutation of all runs.")
        return OrthogonalArray(self._matrix[:, order], self._s, self._t)

    def to_text(self) -> str:
        """
        Export as ``OA N n s t lambda`` followed by one line per row.

        >>> print(OrthogonalArray([[0, 1]], 2, 1).to_text())
        OA 2 1 2 1 1
        0 1
        """
        lines = [f"OA {self.N} {self.n} {self._s} {self._t} {self.lam}"]
        lines.extend(" ".join(str(v) for v in row) for row in self._matrix.tolist())
        return "\n".join(lines)

    def __repr__(self) -> str:
        return f"OrthogonalArray(N={self.N}, n={self.n}, s={self._s}, t={self._t})"


def parse_oa_text(text: str) -> OrthogonalArray:
    """
    Parse the export format of :meth:`OrthogonalArray.to_text`.

    Raises:
        - ValueError: if the text is malformed or inconsistent with its header
    """
    lines = [line.split() for line in text.strip().splitlines() if line.strip()]
    if not lines or lines[0][:1] != ["OA"] or len(lines[0]) != 6:
        raise ValueError("Expected a header of the form 'OA N n s t lambda'.")
    try:
        N, n, s, t, lam = (int(v) for v in lines[0][1:])
        rows = [[int(v) for v in line] for line in lines[1:]]
    except ValueError as ex:
        raise ValueError("Orthogonal array entries must be integers.") from ex
    if len(rows) != n or any(len(row) != N for row in rows):
        raise ValueError(f"Expected {n} rows of {N} entries.")
    array = OrthogonalArray(rows, s, t)
    if array.lam != lam:
        raise ValueError(f"Header index {lam} disagrees with N / s^t = {array.lam}.")
    return array


def verify_strength(
    array: OrthogonalArray, t: int, force: bool = False
) -> StrengthReport:
    """
    Check exhaustively whether every t rows of the array contain every t-tuple
    of symbols equally often.

    Args:
        - array (OrthogonalArray): the array
        - t (int): the strength to check, 1 <= t <= n
        - force (bool): lift the cap on C(n, t) * N elementary counts

    Returns:
        - (StrengthReport): pass with the index N / s^t, or the first failing
            row subset and tuple

    Raises:
        - ValueError: if t is out of range or the check exceeds the cap
    """
    n, N, s = array.n, array.N, array.s
    if not 1 <= t <= n:
        raise ValueError(f"Strength {t} is out of range for {n} rows.")
    cost = comb(n, t) * N
    if cost > settings.strength_check_cap and not force:
        raise ValueError(
            f"The strength check needs {cost} counts, above the cap of "
            f"{settings.strength_check_cap}; use force to run it anyway."
        )
    matrix = array.matrix
    weights = s ** np.arange(t - 1, -1, -1, dtype=np.int64)
    num_tuples = s**t
    if N % num_tuples:
        rows = tuple(range(t))
        count = int(np.count_nonzero(~matrix[list(rows)].any(axis=0)))
        return StrengthReport(False, t, rows=rows, symbols=(0,) * t, count=count)
    lam = N // num_tuples
    for rows in combinations(range(n), t):
        codes = weights @ matrix[list(rows)]
        counts = np.bincount(codes, minlength=num_tuples)
        bad = np.flatnonzero(counts != lam)
        if bad.size:
            code = int(bad[0])
            symbols = tuple(int(code // w % s) for w in weights)
            logger.debug("Strength %d fails on rows %s at %s.", t, rows, symbols)
            return StrengthReport(
                False, t, rows=tuple(rows), symbols=symbols, count=int(counts[code])
            )
    return StrengthReport(True, t, lam=lam)


def oa_from_code(
    code: LinearCode,
    symbol_map: Sequence[int] | None = None,
    messages: np.ndarray | None = None,
) -> OrthogonalArray:
    """
    Arrange the codewords of a linear code as the columns of an orthogonal array.

    The strength is d^perp - 1, with d^perp the minimum distance of the dual.

    Args:
        - code (LinearCode): the code
        - symbol_map (Sequence[int]): image of each field element, indexed by
            its integer representation; defaults to the identity, which sends
            0, 1, w, W to 0, 1, 2, 3
        - messages (np.ndarray): message ordering forwarded to
            :func:`enumerate_codewords`

    Returns:
        - (OrthogonalArray): the OA(q^k, n, q, d^perp - 1)

    Raises:
        - ValueError: for the zero code, a dual of distance 1 or a symbol map
            that is not a bijection
    """
    if code.k == 0:
        raise ValueError("The zero code does not define an orthogonal array.")
    if symbol_map is None:
        symbol_map = list(range(code.q))
    lookup = np.asarray(symbol_map, dtype=np.int64)
    if sorted(lookup.tolist()) != list(range(code.q)):
        raise ValueError(f"The symbol map must be a bijection onto [0, {code.q}).")
    dual = dual_code(code)
    if dual.k == 0:
        raise ValueError("The dual is the zero code, so the strength is undefined.")
    dual_distance = min_distance(dual)
    if dual_distance < 2:
        raise ValueError("The dual code has distance 1, so the strength would be 0.")
    words = enumerate_codewords(code, messages).view(np.ndarray)
    logger.debug(
        "Orthogonal array from a [%d,%d] code over GF(%d): strength %d.",
        code.n,
        code.k,
        code.q,
        dual_distance - 1,
    )
    return OrthogonalArray(lookup[words].T, code.q, dual_distance - 1)


def hamming_oa_parameters(q: int, m: int) -> tuple[int, int, int, int]:
    """
    Parameters (N, n, s, t) of the array built from the simplex code.

    >>> hamming_oa_parameters(4, 3)
    (64, 21, 4, 2)
    """
    return q**m, (q**m - 1) // (q - 1), q, 2
