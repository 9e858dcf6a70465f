# This code is part of the Decoupling Toolbox.

# (C) Copyright the Decoupling Toolbox developers 2026.

# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

"""Generalized Pauli labels X^a Z^b on networks of d-dimensional nodes."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

import numpy as np
from qiskit.quantum_info import Pauli

from ..utils.settings import settings

QUBIT_NAMES = {(0, 0): "I", (1, 0): "X", (0, 1): "Z", (1, 1): "Y"}


@dataclass(frozen=True)
class NodeSpec:
    """A network of n nodes, each of dimension d."""

    n: int
    d: int

    def __post_init__(self) -> None:
        """
        Check the node count and dimension.

        Raises:
            - ValueError: if n < 1 or d < 2
        """
        if self.n < 1:
            raise ValueError("A network needs at least one node.")
        if self.d < 2:
            raise ValueError("Node dimension must be at least 2.")

    @property
    def dimension(self) -> int:
        """Total Hilbert-space dimension d^n."""
        return self.d**self.n

    def fits_dense(self) -> bool:
        """Whether dense matrices of this network are within the dense cap."""
        return self.dimension <= settings.dense_dimension_cap

    def check_dense(self) -> None:
        """
        Raise unless dense matrices of this network are within the dense cap.

        Raises:
            - ValueError: if d^n exceeds the dense dimension cap
        """
        if not self.fits_dense():
            raise ValueError(
                f"Dimension {self.dimension} exceeds the dense cap of "
                f"{settings.dense_dimension_cap}."
            )


@dataclass(frozen=True)
class PauliLabel:
    """A phase-free tensor product of X^a Z^b over the nodes.

    Attributes:
        - nodes (tuple[tuple[int, int], ...]): one exponent pair (a, b) per node
        - d (int): the node dimension; exponents are reduced mod d
    """

    nodes: tuple[tuple[int, int], ...]
    d: int

    def __post_init__(self) -> None:
        """
        Normalize the node pairs.

        Raises:
            - ValueError: if an exponent is not in [0, d)
        """
        nodes = tuple((int(a), int(b)) for a, b in self.nodes)
        if any(not (0 <= a < self.d and 0 <= b < self.d) for a, b in nodes):
            raise ValueError(f"Label exponents must be reduced mod {self.d}.")
        object.__setattr__(self, "nodes", nodes)

    @classmethod
    def from_pairs(cls, pairs: Iterable[Sequence[int]], d: int) -> PauliLabel:
        """Build a label, reducing every exponent mod d."""
        return cls(tuple((a % d, b % d) for a, b in pairs), d)

    @classmethod
    def identity(cls, n: int, d: int) -> PauliLabel:
        """The identity label on n nodes."""
        return cls(((0, 0),) * n, d)

    @property
    def n(self) -> int:
        """Number of nodes."""
        return len(self.nodes)

    def is_identity(self) -> bool:
        """Whether every node carries the identity."""
        return all(a == 0 and b == 0 for a, b in self.nodes)

    def __add__(self, other: PauliLabel) -> PauliLabel:
        return label_add(self, other)

    def __neg__(self) -> PauliLabel:
        return PauliLabel.from_pairs(((-a, -b) for a, b in self.nodes), self.d)

    def __str__(self) -> str:
        return render_label(self)


def _check_label(spec: NodeSpec, label: PauliLabel) -> None:
    if label.d != spec.d or label.n != spec.n:
        raise ValueError(
            f"Label on {label.n} nodes of dimension {label.d} does not match "
            f"{spec.n} nodes of dimension {spec.d}."
        )


def label_add(x: PauliLabel, y: PauliLabel) -> PauliLabel:
    """
    Multiply two labels up to phase, i.e. add their exponents mod d.

    Raises:
        - ValueError: on a shape mismatch
    """
    if x.d != y.d or x.n != y.n:
        raise ValueError("shape mismatch")
    return PauliLabel.from_pairs(
        ((a + c, b + e) for (a, b), (c, e) in zip(x.nodes, y.nodes)), x.d
    )


def label_action(spec: NodeSpec, label: PauliLabel) -> tuple[np.ndarray, np.ndarray]:
    """
    Describe a label matrix as a monomial matrix.

    X^a Z^b maps |j> to w^(b j) |j - a> on each node, node 0 being the most
    significant digit of the basis index.

    Args:
        - spec (NodeSpec): the network
        - label (PauliLabel): the label

    Returns:
        - (tuple[np.ndarray, np.ndarray]): ``perm`` and ``phase`` such that
            column j has the single entry ``phase[j]`` in row ``perm[j]``
    """
    _check_label(spec, label)
    d, n = spec.d, spec.n
    index = np.arange(spec.dimension, dtype=np.int64)
    powers = d ** np.arange(n - 1, -1, -1, dtype=np.int64)
    digits = (index[:, None] // powers[None, :]) % d
    shifts = np.array([a for a, _ in label.nodes], dtype=np.int64)
    clocks = np.array([b for _, b in label.nodes], dtype=np.int64)
    perm = ((digits - shifts[None, :]) % d) @ powers
    phase = np.exp(2j * np.pi * ((digits @ clocks) % d) / d)
    return perm, phase


def label_matrix(spec: NodeSpec, label: PauliLabel) -> np.ndarray:
    """
    Realize a label as the dense unitary of the tensor product of X^a Z^b.

    X = sum_i |i><i+1| and Z = sum_i w^i |i><i| with w = exp(2 pi i / d).

    Args:
        - spec (NodeSpec): the network
        - label (PauliLabel): the label

    Returns:
        - (np.ndarray): the d^n x d^n unitary

    Raises:
        - ValueError: if the dimension exceeds the dense cap or the label
            does not fit the network
    """
    spec.check_dense()
    perm, phase = label_action(spec, label)
    matrix = np.zeros((spec.dimension, spec.dimension), dtype=complex)
    matrix[perm, np.arange(spec.dimension)] = phase
    return matrix


def conjugate(spec: NodeSpec, label: PauliLabel, matrix: np.ndarray) -> np.ndarray:
    """
    Compute U^dagger M U for the label unitary U without forming U.

    Raises:
        - ValueError: if the dimension exceeds the dense cap or the label
            does not fit the network
    """
    spec.check_dense()
    perm, phase = label_action(spec, label)
    return phase.conj()[:, None] * matrix[np.ix_(perm, perm)] * phase[None, :]


def operator_basis(d: int) -> list[PauliLabel]:
    """
    All d^2 single-node labels (i, j) in row-major order.

    >>> [label.nodes[0] for label in operator_basis(2)]
    [(0, 0), (0, 1), (1, 0), (1, 1)]
    """
    return [PauliLabel(((i, j),), d) for i in range(d) for j in range(d)]


def network_basis(spec: NodeSpec) -> list[PauliLabel]:
    """All d^(2n) labels of the network, node 0 varying slowest."""
    pairs = [(i, j) for i in range(spec.d) for j in range(spec.d)]
    return [PauliLabel(nodes, spec.d) for nodes in product(pairs, repeat=spec.n)]


def basis_average(spec: NodeSpec, matrix: np.ndarray) -> np.ndarray:
    """
    Average U^dagger M U over the operator basis of the network.

    For a single node this is the depolarizing identity
    (1/d^2) sum_U U^dagger M U = tr(M)/d * 1.

    Args:
        - spec (NodeSpec): the network
        - matrix (np.ndarray): the d^n x d^n operator M

    Returns:
        - (np.ndarray): the basis average

    Raises:
        - ValueError: if M does not match the network dimension
    """
    matrix = np.asarray(matrix, dtype=complex)
    if matrix.shape != (spec.dimension, spec.dimension):
        raise ValueError(
            f"Expected a {spec.dimension}x{spec.dimension} matrix, got {matrix.shape}."
        )
    labels = network_basis(spec)
    total = np.zeros_like(matrix)
    for label in labels:
        total += conjugate(spec, label, matrix)
    return total / len(labels)


def render_label(label: PauliLabel) -> str:
    """
    Render a label node by node, joined by a tensor sign.

    Qubits use I, X, Z and Y, with Y standing for XZ up to phase; larger
    nodes use ``X^a Z^b`` and ``I`` for the identity.

    >>> render_label(PauliLabel(((0, 0), (1, 0), (0, 1), (1, 1)), 2))
    'I⊗X⊗Z⊗Y'
    """
    parts = []
    for a, b in label.nodes:
        if label.d == 2:
            parts.append(QUBIT_NAMES[(a, b)])
        elif a == 0 and b == 0:
            parts.append("I")
        else:
            factors = ([f"X^{a}"] if a else []) + ([f"Z^{b}"] if b else [])
            parts.append(" ".join(factors))
    return "⊗".join(parts)


def to_pauli(label: PauliLabel) -> Pauli:
    """
    Convert a qubit label to a Qiskit ``Pauli``.

    Node 0 is the leftmost character, so the matrices agree up to phase
    (XZ = -iY).

    Raises:
        - ValueError: if the label is not a qubit label
    """
    if label.d != 2:
        raise ValueError("Only qubit labels convert to Qiskit Paulis.")
    return Pauli("".join(QUBIT_NAMES[node] for node in label.nodes))
