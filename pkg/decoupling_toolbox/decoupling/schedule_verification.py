# This code is part of the Decoupling Toolbox.

# (C) Copyright the Decoupling Toolbox developers 2026.

# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

"""Dense and combinatorial verification of decoupling schedules."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations
from multiprocessing.pool import ThreadPool
from typing import Any, Callable, Sequence

import numpy as np
from qiskit.quantum_info import SparsePauliOp
from scipy.linalg import expm

from ..utils.conversion import pack_rows, symbol_to_label
from ..utils.metrics import phase_aligned_distance, relative_residual
from .pauli_labels import (
    QUBIT_NAMES,
    NodeSpec,
    PauliLabel,
    conjugate,
    label_action,
    label_matrix,
    operator_basis,
)
from .pulse_schedule import PulseSchedule

logger = logging.getLogger(__name__)

VERIFY_MODES = ("dense", "pairwise", "auto")
DEFAULT_SEEDS = (0, 1, 2, 3, 4)

# Depth of the summation tree whose subtrees are evaluated in parallel.
_PARALLEL_DEPTH = 3


def local_labels(d: int) -> list[PauliLabel]:
    """The d^2 - 1 nonidentity single-node labels in row-major order."""
    return operator_basis(d)[1:]


@dataclass(frozen=True, eq=False)
class PairHamiltonian:
    """Coefficients of a pair-interaction Hamiltonian.

    Every nonidentity label L carries a pair (c, c') and contributes
    c (L + L^dagger)/2 + c' i (L - L^dagger)/2, which is Hermitian for every
    node dimension. For qubits this is c X, c Z and c' Y for the labels X, Z
    and XZ.

    Attributes:
        - spec (NodeSpec): the network
        - r (np.ndarray): local coefficients of shape (n, d^2 - 1, 2)
        - J (dict): maps node pairs (k, l) with k < l to coupling coefficients
            of shape (d^2 - 1, d^2 - 1, 2)
    """

    spec: NodeSpec
    r: np.ndarray
    J: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        """
        Check the coefficient shapes.

        Raises:
            - ValueError: on a shape mismatch or an invalid node pair
        """
        num_labels = self.spec.d**2 - 1
        if np.shape(self.r) != (self.spec.n, num_labels, 2):
            raise ValueError(
                f"Local coefficients must have shape ({self.spec.n}, {num_labels}, 2)."
            )
        for (k, ell), coupling in self.J.items():
            if not 0 <= k < ell < self.spec.n:
                raise ValueError(f"Invalid node pair ({k}, {ell}).")
            if np.shape(coupling) != (num_labels, num_labels, 2):
                raise ValueError(
                    "Coupling coefficients must have shape "
                    f"({num_labels}, {num_labels}, 2)."
                )

    def terms(self) -> list[tuple[PauliLabel, float, float]]:
        """
        List every term as (label, c, c').

        Returns:
            - (list[tuple[PauliLabel, float, float]]): local terms node by node,
                then coupling terms pair by pair
        """
        n, d = self.spec.n, self.spec.d
        labels = local_labels(d)
        terms = []
        for k in range(n):
            for i, label in enumerate(labels):
                nodes = [(0, 0)] * n
                nodes[k] = label.nodes[0]
                terms.append((PauliLabel(tuple(nodes), d), *self.r[k, i]))
        for k, ell in sorted(self.J):
            coupling = self.J[(k, ell)]
            for i, first in enumerate(labels):
                for j, second in enumerate(labels):
                    nodes = [(0, 0)] * n
                    nodes[k] = first.nodes[0]
                    nodes[ell] = second.nodes[0]
                    terms.append((PauliLabel(tuple(nodes), d), *coupling[i, j]))
        return [(label, float(c), float(c2)) for label, c, c2 in terms]

    def to_sparse_pauli_op(self) -> SparsePauliOp:
        """
        Export a qubit Hamiltonian to Qiskit.

        The label XZ equals -iY, so a label with phase p relative to its
        Pauli string P contributes (c Re p - c' Im p) P.

        Raises:
            - ValueError: if the nodes are not qubits
        """
        if self.spec.d != 2:
            raise ValueError("Only qubit Hamiltonians export to Qiskit.")
        n = self.spec.n
        pauli_terms = []
        for label, c, c2 in self.terms():
            phase = (-1j) ** sum(1 for node in label.nodes if node == (1, 1))
            coefficient = c * phase.real - c2 * phase.imag
            name = "".join(QUBIT_NAMES[node] for node in label.nodes)
            pauli_terms.append((name, coefficient))
        if not pauli_terms:
            return SparsePauliOp("I" * n, coeffs=[0.0])
        return SparsePauliOp.from_list(pauli_terms)


@dataclass(frozen=True)
class SequenceTimes:
    """Relative lengths of the free-evolution intervals."""

    taus: tuple[float, ...]

    def __post_init__(self) -> None:
        """
        Check that all times are positive.

        Raises:
            - ValueError: if the list is empty or a time is not positive
        """
        object.__setattr__(self, "taus", tuple(float(t) for t in self.taus))
        if not self.taus or min(self.taus) <= 0:
            raise ValueError(
                "Sequence times must be a non-empty list of positive reals."
            )

    @classmethod
    def uniform(cls, num_steps: int, total: float = 1.0) -> SequenceTimes:
        """Equal slices of a total time."""
        return cls((total / num_steps,) * num_steps)

    @classmethod
    def random(cls, num_steps: int, seed: int) -> SequenceTimes:
        """Times drawn uniformly from [0.1, 1)."""
        rng = np.random.default_rng(seed)
        return cls(tuple(rng.uniform(0.1, 1.0, num_steps)))


@dataclass(frozen=True)
class DecouplingReport:
    """Outcome of :func:`verify_decoupling`."""

    residual: float
    passed: bool
    closed: bool = True

    def __bool__(self) -> bool:
        return self.passed


@dataclass(frozen=True)
class PairwiseReport:
    """Outcome of :func:`pairwise_verify`.

    On failure ``kind`` is ``"single"`` or ``"pair"``, ``nodes`` names the
    first offending node or node pair, ``symbols`` the first offending block
    symbol combination, and ``count`` / ``expected`` its observed and
    required number of occurrences.
    """

    passed: bool
    lam: int | None
    pairs_checked: int
    kind: str | None = None
    nodes: tuple[int, ...] | None = None
    symbols: tuple[int, ...] | None = None
    count: int | None = None
    expected: float | None = None

    def __bool__(self) -> bool:
        return self.passed

    def witness(self) -> dict[str, Any] | None:
        """The failure witness as a JSON-ready dictionary."""
        if self.passed:
            return None
        return {
            "kind": self.kind,
            "nodes": list(self.nodes or ()),
            "symbols": list(self.symbols or ()),
            "count": self.count,
            "expected": self.expected,
        }


@dataclass(frozen=True)
class EquivalenceReport:
    """Outcome of :func:`sequence_equivalence`."""

    distance: float
    passed: bool

    def __bool__(self) -> bool:
        return self.passed


@dataclass
class VerificationReport:
    """Summary of a full schedule verification, as serialized by the CLI."""

    scenario: str
    n: int
    d: int
    N: int
    distinct_pulses: int
    residual: float | None
    passed: bool
    seeds: list[int]
    mode: str
    witness: dict[str, Any] | None = None

    def to_dict(self) -> dict[str, Any]:
        """The report with a fixed key order; the witness only on failure."""
        report: dict[str, Any] = {
            "scenario": self.scenario,
            "n": self.n,
            "d": self.d,
            "N": self.N,
            "distinct_pulses": self.distinct_pulses,
            "residual": self.residual,
            "pass": self.passed,
            "seeds": list(self.seeds),
            "mode": self.mode,
        }
        if not self.passed:
            report["witness"] = self.witness
        return report


def random_pair_hamiltonian(
    spec: NodeSpec,
    seed: int,
    local: bool = True,
    coupling: bool = True,
) -> PairHamiltonian:
    """
    Draw a pair-interaction Hamiltonian with i.i.d. uniform coefficients in [-1, 1].

    Args:
        - spec (NodeSpec): the network
        - seed (int): seed of ``numpy.random.default_rng``
        - local (bool): whether to draw the single-node terms
        - coupling (bool): whether to draw the two-node terms

    Returns:
        - (PairHamiltonian): the Hamiltonian

    Raises:
        - ValueError: if the network exceeds the dense cap
    """
    spec.check_dense()
    rng = np.random.default_rng(seed)
    num_labels = spec.d**2 - 1
    r = np.zeros((spec.n, num_labels, 2))
    if local:
        r = rng.uniform(-1.0, 1.0, size=r.shape)
    J = {}
    for pair in combinations(range(spec.n), 2):
        J[pair] = (
            rng.uniform(-1.0, 1.0, size=(num_labels, num_labels, 2))
            if coupling
            else np.zeros((num_labels, num_labels, 2))
        )
    return PairHamiltonian(spec, r, J)


def hamiltonian_matrix(hamiltonian: PairHamiltonian) -> np.ndarray:
    """
    Realize a pair-interaction Hamiltonian as a dense Hermitian matrix.

    Each term adds z L + conj(z) L^dagger with z = (c + i c')/2.

    Raises:
        - ValueError: if the network exceeds the dense cap
    """
    spec = hamiltonian.spec
    spec.check_dense()
    dimension = spec.dimension
    columns = np.arange(dimension)
    matrix = np.zeros((dimension, dimension), dtype=complex)
    for label, c, c2 in hamiltonian.terms():
        if c == 0 and c2 == 0:
            continue
        perm, phase = label_action(spec, label)
        entries = 0.5 * (c + 1j * c2) * phase
        np.add.at(matrix, (perm, columns), entries)
        np.add.at(matrix, (columns, perm), entries.conj())
    return matrix


def _tree_sum(leaf: Callable[[int], np.ndarray], lo: int, hi: int) -> np.ndarray:
    if hi - lo == 1:
        return leaf(lo)
    mid = (lo + hi) // 2
    return _tree_sum(leaf, lo, mid) + _tree_sum(leaf, mid, hi)


def _subtrees(lo: int, hi: int, depth: int) -> list[tuple[int, int]]:
    if depth == 0 or hi - lo == 1:
        return [(lo, hi)]
    mid = (lo + hi) // 2
    return _subtrees(lo, mid, depth - 1) + _subtrees(mid, hi, depth - 1)


def _combine(
    lo: int, hi: int, depth: int, partial: dict[tuple[int, int], np.ndarray]
) -> np.ndarray:
    if depth == 0 or hi - lo == 1:
        return partial[(lo, hi)]
    mid = (lo + hi) // 2
    return _combine(lo, mid, depth - 1, partial) + _combine(mid, hi, depth - 1, partial)


def average_hamiltonian(
    schedule: PulseSchedule,
    hamiltonian: PairHamiltonian,
    num_threads: int = 1,
) -> np.ndarray:
    """
    Compute the first-order average Hamiltonian (1/N) sum_i U_i^dagger H U_i.

    The conjugated terms are summed along a fixed binary tree whose subtrees
    are evaluated on a thread pool, so the result does not depend on the
    number of threads.

    Args:
        - schedule (PulseSchedule): the schedule providing the frames U_i
        - hamiltonian (PairHamiltonian): the Hamiltonian H
        - num_threads (int): the number of threads to use

    Returns:
        - (np.ndarray): the average Hamiltonian

    Raises:
        - ValueError: if the networks differ or exceed the dense cap
    """
    if schedule.spec != hamiltonian.spec:
        raise ValueError("The schedule and the Hamiltonian act on different networks.")
    spec = schedule.spec
    matrix = hamiltonian_matrix(hamiltonian)
    frames = schedule.frames
    num_steps = len(frames)

    def leaf(i: int) -> np.ndarray:
        return conjugate(spec, frames[i], matrix)

    segments = _subtrees(0, num_steps, _PARALLEL_DEPTH)
    with ThreadPool(num_threads) as pool:
        sums = pool.starmap(_tree_sum, [(leaf, lo, hi) for lo, hi in segments])
    total = _combine(0, num_steps, _PARALLEL_DEPTH, dict(zip(segments, sums)))
    return total / num_steps


def verify_decoupling(
    schedule: PulseSchedule,
    hamiltonian: PairHamiltonian,
    tol: float = 1e-10,
    num_threads: int = 1,
) -> DecouplingReport:
    """
    Check that the average Hamiltonian vanishes relative to H.

    Args:
        - schedule (PulseSchedule): the schedule
        - hamiltonian (PairHamiltonian): the Hamiltonian
        - tol (float): the largest accepted residual
        - num_threads (int): the number of threads to use

    Returns:
        - (DecouplingReport): the residual ||average||_F / ||H||_F, which is 0
            for H = 0, and whether it is within tol with the sequence closed
    """
    average = average_hamiltonian(schedule, hamiltonian, num_threads=num_threads)
    residual = relative_residual(average, hamiltonian_matrix(hamiltonian))
    closed = schedule.check_closure()
    return DecouplingReport(residual, residual <= tol and closed, closed)


def block_frame_table(schedule: PulseSchedule, block: int) -> np.ndarray:
    """
    Frame table with ``block`` consecutive nodes merged into one logical node.

    Raises:
        - ValueError: if block does not divide the node count
    """
    n = schedule.spec.n
    if block < 1 or n % block:
        raise ValueError(f"Block size {block} does not divide {n} nodes.")
    table = schedule.frame_table()
    base = schedule.spec.d**2
    return np.array([pack_rows(table[i : i + block], base) for i in range(0, n, block)])


def pairwise_verify(
    schedule: PulseSchedule, block: int | None = None
) -> PairwiseReport:
    """
    Check by counting that the frames run through the operator basis on every
    node and every pair of nodes equally often.

    Args:
        - schedule (PulseSchedule): the schedule
        - block (int): physical nodes per logical node; defaults to the
            schedule's alpha, or 1

    Returns:
        - (PairwiseReport): pass with the pair index, or the first failing
            node or node pair

    Raises:
        - ValueError: if block does not divide the node count
    """
    if block is None:
        block = schedule.alpha or 1
    table = block_frame_table(schedule, block)
    num_nodes, num_steps = table.shape
    symbols = schedule.spec.d ** (2 * block)

    for node in range(num_nodes):
        counts = np.bincount(table[node], minlength=symbols)
        expected = num_steps / symbols
        bad = np.flatnonzero(counts != expected)
        if bad.size:
            symbol = int(bad[0])
            return PairwiseReport(
                False,
                None,
                0,
                "single",
                (node,),
                (symbol,),
                int(counts[symbol]),
                expected,
            )

    checked = 0
    expected = num_steps / symbols**2
    for first, second in combinations(range(num_nodes), 2):
        codes = pack_rows(table[[first, second]], symbols)
        counts = np.bincount(codes, minlength=symbols**2)
        checked += 1
        bad = np.flatnonzero(counts != expected)
        if bad.size:
            code = int(bad[0])
            return PairwiseReport(
                False,
                None,
                checked,
                "pair",
                (first, second),
                symbol_to_label(code, symbols),
                int(counts[code]),
                expected,
            )
    lam = num_steps // symbols**2 if num_nodes > 1 else num_steps // symbols
    return PairwiseReport(True, lam, checked)


def sequence_equivalence(
    schedule: PulseSchedule,
    hamiltonian: PairHamiltonian,
    times: SequenceTimes,
    tol: float = 1e-9,
) -> EquivalenceReport:
    """
    Compare the pulse form and the toggling-frame form of the evolution.

    The pulse form applies exp(-i tau_j H) and then pulse j; the frame form
    applies U_j^dagger exp(-i tau_j H) U_j with frame U_j. Closure makes both
    products agree up to a global phase.

    Args:
        - schedule (PulseSchedule): the schedule
        - hamiltonian (PairHamiltonian): the Hamiltonian
        - times (SequenceTimes): one time per step
        - tol (float): the largest accepted phase-aligned Frobenius distance

    Returns:
        - (EquivalenceReport): the distance and whether it is within tol

    Raises:
        - ValueError: if the number of times does not match the schedule
    """
    if len(times.taus) != schedule.num_steps:
        raise ValueError(
            f"Expected {schedule.num_steps} times, got {len(times.taus)}."
        )
    if schedule.spec != hamiltonian.spec:
        raise ValueError("The schedule and the Hamiltonian act on different networks.")
    spec = schedule.spec
    matrix = hamiltonian_matrix(hamiltonian)
    pulses = [label_matrix(spec, pulse) for pulse in schedule.pulses]
    evolutions: dict[float, np.ndarray] = {}
    pulse_form = np.eye(spec.dimension, dtype=complex)
    frame_form = np.eye(spec.dimension, dtype=complex)
    for tau, index, frame in zip(times.taus, schedule.sequence, schedule.frames):
        if tau not in evolutions:
            evolutions[tau] = expm(-1j * tau * matrix)
        evolution = evolutions[tau]
        pulse_form = pulses[index] @ evolution @ pulse_form
        frame_form = conjugate(spec, frame, evolution) @ frame_form
    distance = phase_aligned_distance(pulse_form, frame_form)
    return EquivalenceReport(distance, distance <= tol)


def verify_schedule(
    schedule: PulseSchedule,
    seeds: Sequence[int] = DEFAULT_SEEDS,
    tol: float = 1e-10,
    mode: str = "auto",
    num_threads: int = 1,
) -> VerificationReport:
    """
    Verify a schedule densely over several random Hamiltonians or by counting.

    In auto mode the dense path is used iff the network fits the dense cap.

    Args:
        - schedule (PulseSchedule): the schedule
        - seeds (Sequence[int]): seeds of the random Hamiltonians
        - tol (float): the largest accepted residual
        - mode (str): ``dense``, ``pairwise`` or ``auto``
        - num_threads (int): the number of threads to use

    Returns:
        - (VerificationReport): the summary, with the worst residual in dense mode

    Raises:
        - ValueError: for an unknown mode, or dense mode beyond the dense cap
    """
    if mode not in VERIFY_MODES:
        raise ValueError(
            f"Unknown mode {mode!r}; choose one of {', '.join(VERIFY_MODES)}."
        )
    spec = schedule.spec
    if mode == "auto":
        mode = "dense" if spec.fits_dense() else "pairwise"
        if mode == "pairwise":
            logger.warning(
                "Dimension %d exceeds the dense cap; pairwise-only verification.",
                spec.dimension,
            )
    report = VerificationReport(
        scenario=schedule.scenario,
        n=spec.n,
        d=spec.d,
        N=schedule.num_steps,
        distinct_pulses=schedule.distinct_pulses,
        residual=None,
        passed=True,
        seeds=list(seeds) if mode == "dense" else [],
        mode=mode,
    )
    if not schedule.check_closure():
        report.passed = False
        report.witness = {"kind": "closure"}
    if mode == "pairwise":
        pairwise = pairwise_verify(schedule)
        if report.passed and not pairwise.passed:
            report.passed = False
            report.witness = pairwise.witness()
    else:
        spec.check_dense()
        worst = 0.0
        for seed in seeds:
            hamiltonian = random_pair_hamiltonian(spec, seed)
            outcome = verify_decoupling(schedule, hamiltonian, tol, num_threads)
            worst = max(worst, outcome.residual)
            if report.passed and outcome.residual > tol:
                report.passed = False
                report.witness = {
                    "kind": "residual",
                    "seed": seed,
                    "residual": outcome.residual,
                }
        report.residual = worst
    logger.info(
        "Verified %s schedule in %s mode: %s.",
        schedule.scenario,
        mode,
        "pass" if report.passed else "fail",
    )
    return report
