# This code is part of the Decoupling Toolbox.

# (C) Copyright the Decoupling Toolbox developers 2026.

# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

"""Linear codes over GF(2^e) with exhaustive distance oracles."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations, product
from typing import Sequence

import galois
import numpy as np

from ..utils.settings import settings
from .finite_field import FieldElement, FieldSpec, field_for_order, gf4

logger = logging.getLogger(__name__)

CODE_FAMILIES = ("qr5", "hamming", "simplex")


@dataclass(frozen=True)
class CodeParams:
    """Parameters [n, k, d]_q of a linear code.

    ``d_min`` is ``None`` for the zero code, which has no nonzero codeword.
    """

    n: int
    k: int
    d_min: int | None

    def __post_init__(self) -> None:
        """Check 0 < d_min <= n for nonzero codes."""
        if self.k > 0 and (self.d_min is None or not 0 < self.d_min <= self.n):
            raise ValueError(
                f"Invalid minimum distance {self.d_min} for a code of length {self.n}."
            )

    def __str__(self) -> str:
        return f"[{self.n},{self.k},{self.d_min if self.d_min is not None else '-'}]"


class LinearCode:
    """A k-dimensional subspace of GF(q)^n given by a full-rank generator matrix."""

    def __init__(
        self,
        spec: FieldSpec,
        gen,
        n: int | None = None,
    ):
        """
        Assign the necessary member variables.

        Args:
            - spec (FieldSpec): the field of the code
            - gen: k x n generator matrix, as nested sequences of integers or
                FieldElements, or as a ``galois`` array
            - n (int): the code length; only needed when k = 0

        Raises:
            - ValueError: if the generator matrix is malformed or rank deficient
        """
        rows = spec.array(gen) if len(gen) else None
        if rows is None:
            if n is None:
                raise ValueError("The length of a zero-dimensional code must be given.")
            rows = spec.galois_field.Zeros((0, n))
        if rows.ndim != 2:
            raise ValueError("The generator matrix must be two-dimensional.")
        if n is not None and rows.shape[1] != n:
            raise ValueError(
                f"Generator rows have length {rows.shape[1]}, expected {n}."
            )
        if rows.shape[1] < 1:
            raise ValueError("A code needs positive length.")
        if rows.shape[0] > 0 and np.linalg.matrix_rank(rows) != rows.shape[0]:
            raise ValueError("The generator matrix does not have full row rank.")
        self._spec = spec
        self._gen = rows

    @property
    def spec(self) -> FieldSpec:
        """The field of the code."""
        return self._spec

    @property
    def q(self) -> int:
        """The field order."""
        return self._spec.order

    @property
    def n(self) -> int:
        """The code length."""
        return int(self._gen.shape[1])

    @property
    def k(self) -> int:
        """The code dimension."""
        return int(self._gen.shape[0])

    @property
    def gen(self) -> galois.FieldArray:
        """A copy of the generator matrix."""
        return self._gen.copy()

    @property
    def num_codewords(self) -> int:
        """Number of codewords q^k."""
        return self.q**self.k

    def generator_rows(self) -> list[list[FieldElement]]:
        """The generator matrix as rows of FieldElements."""
        return [self._spec.to_elements(row) for row in self._gen]

    def parity_check_matrix(self) -> galois.FieldArray:
        """
        Return a generator matrix of the dual code.

        Returns:
            - (galois.FieldArray): (n - k) x n matrix H with gen @ H.T = 0
        """
        field = self._spec.galois_field
        if self.k == 0:
            return field.Identity(self.n)
        if self.k == self.n:
            return field.Zeros((0, self.n))
        return self._gen.null_space()

    def params(self) -> CodeParams:
        """Return [n, k, d_min] with d_min computed exhaustively."""
        return CodeParams(self.n, self.k, min_distance(self) if self.k else None)

    def weight_distribution(self) -> list[int]:
        """
        Count codewords by Hamming weight.

        Returns:
            - (list[int]): entry w is the number of codewords of weight w

        Raises:
            - ValueError: if the code exceeds the enumeration cap
        """
        weights = np.count_nonzero(enumerate_codewords(self).view(np.ndarray), axis=1)
        return np.bincount(weights, minlength=self.n + 1).tolist()

    def same_code(self, other: LinearCode) -> bool:
        """Whether both generator matrices span the same subspace."""
        if self._spec != other.spec or self.n != other.n or self.k != other.k:
            return False
        if self.k == 0:
            return True
        return bool(np.array_equal(self._gen.row_reduce(), other.gen.row_reduce()))

    def render(self) -> str:
        """Render the generator matrix, one row per line."""
        return "\n".join(
            " ".join(self._spec.render(int(v)) for v in row) for row in self._gen
        )

    def __repr__(self) -> str:
        return f"LinearCode(q={self.q}, n={self.n}, k={self.k})"


def encode(code: LinearCode, message: Sequence) -> list[FieldElement]:
    """
    Encode a message as message · gen over GF(q).

    Args:
        - code (LinearCode): the code
        - message (Sequence): k FieldElements or integer representations

    Returns:
        - (list[FieldElement]): the n codeword symbols

    Raises:
        - ValueError: if the message length is not k
    """
    if len(message) != code.k:
        raise ValueError(f"Expected a message of length {code.k}, got {len(message)}.")
    if code.k == 0:
        return [code.spec.zero] * code.n
    word = code.spec.array(list(message)) @ code.gen
    return code.spec.to_elements(word)


def message_vectors(q: int, k: int) -> np.ndarray:
    """
    All q^k message vectors in lexicographic order, first coordinate most significant.

    >>> message_vectors(2, 2).tolist()
    [[0, 0], [0, 1], [1, 0], [1, 1]]
    """
    index = np.arange(q**k, dtype=np.int64)
    powers = q ** np.arange(k - 1, -1, -1, dtype=np.int64)
    return (index[:, None] // powers[None, :]) % q


def enumerate_codewords(
    code: LinearCode, messages: np.ndarray | None = None
) -> galois.FieldArray:
    """
    Enumerate all codewords of a code.

    Args:
        - code (LinearCode): the code
        - messages (np.ndarray): optional q^k x k integer array listing every
            message vector once; its row order fixes the codeword order.
            Defaults to lexicographic order.

    Returns:
        - (galois.FieldArray): q^k x n array whose rows are the codewords

    Raises:
        - ValueError: if q^k exceeds the enumeration cap or the messages are
            not a permutation of all message vectors
    """
    if code.num_codewords > settings.codeword_enumeration_cap:
        raise ValueError(
            f"Enumerating {code.num_codewords} codewords exceeds the cap of "
            f"{settings.codeword_enumeration_cap}."
        )
    field = code.spec.galois_field
    if code.k == 0:
        return field.Zeros((1, code.n))
    if messages is None:
        messages = message_vectors(code.q, code.k)
    else:
        messages = np.asarray(messages, dtype=np.int64)
        if messages.shape != (code.num_codewords, code.k):
            raise ValueError(
                f"Expected {code.num_codewords} messages of length {code.k}, "
                f"got shape {messages.shape}."
            )
        packed = messages @ (code.q ** np.arange(code.k, dtype=np.int64))
        if len(np.unique(packed)) != code.num_codewords:
            raise ValueError("The message ordering repeats a message.")
    return field(messages) @ code.gen


def dual_code(code: LinearCode) -> LinearCode:
    """
    Return the dual code under the plain bilinear form x · y.

    Args:
        - code (LinearCode): the code

    Returns:
        - (LinearCode): the (n - k)-dimensional dual code
    """
    return LinearCode(code.spec, code.parity_check_matrix(), n=code.n)


def min_distance(code: LinearCode) -> int:
    """
    Exhaustively compute the minimum Hamming weight of a nonzero codeword.

    Codes within the enumeration cap are enumerated. Larger codes are handled
    by searching all column subsets of the parity-check matrix in increasing
    size for the smallest linearly dependent one, which is also exact.

    Args:
        - code (LinearCode): the code

    Returns:
        - (int): the minimum distance

    Raises:
        - ValueError: if the code is the zero code
    """
    if code.k == 0:
        raise ValueError("zero code has no minimum distance")
    if code.num_codewords <= settings.codeword_enumeration_cap:
        weights = np.count_nonzero(enumerate_codewords(code).view(np.ndarray), axis=1)
        return int(weights[weights > 0].min())

    logger.debug(
        "Code with %d codewords exceeds the enumeration cap; searching dependent "
        "parity-check columns instead.",
        code.num_codewords,
    )
    if code.k == code.n:
        return 1
    parity = code.parity_check_matrix()
    for size in range(1, code.n - code.k + 2):
        for columns in combinations(range(code.n), size):
            if np.linalg.matrix_rank(parity[:, list(columns)]) < size:
                return size
    raise AssertionError("unreachable: any n - k + 1 columns are dependent")


def is_dual_pair(first: LinearCode, second: LinearCode) -> bool:
    """
    Check exhaustively that every codeword of one code is orthogonal to every
    codeword of the other and that the dimensions add up to n.

    Raises:
        - ValueError: if the product of the codeword counts exceeds the cap
    """
    if first.spec != second.spec or first.n != second.n:
        return False
    if first.k + second.k != first.n:
        return False
    if first.num_codewords * second.num_codewords > settings.codeword_enumeration_cap:
        raise ValueError("The exhaustive duality check exceeds the enumeration cap.")
    products = enumerate_codewords(first) @ enumerate_codewords(second).T
    return not np.any(products.view(np.ndarray))


def _projective_points(spec: FieldSpec, m: int) -> galois.FieldArray:
    """One representative per projective point, first nonzero entry 1, lexicographic."""
    points = [
        vector
        for vector in product(range(spec.order), repeat=m)
        if any(vector) and next(v for v in vector if v) == 1
    ]
    return spec.array(points).T


def hamming_code(q: int, m: int) -> LinearCode:
    """
    Build the Hamming code [(q^m - 1)/(q - 1), n - m, 3]_q.

    The parity-check columns are one representative per projective point of
    GF(q)^m, normalized to a leading 1 and listed in lexicographic order.

    Args:
        - q (int): the field order, a power of 2
        - m (int): the redundancy, at least 2

    Returns:
        - (LinearCode): the Hamming code

    Raises:
        - ValueError: for an unsupported q or m < 2
    """
    if m < 2:
        raise ValueError("Hamming codes need m >= 2.")
    spec = field_for_order(q)
    parity = _projective_points(spec, m)
    n = parity.shape[1]
    if q ** (n - m) > settings.codeword_enumeration_cap:
        logger.warning(
            "Hamming code [%d,%d]_%d has %d codewords, beyond the enumeration cap.",
            n,
            n - m,
            q,
            q ** (n - m),
        )
    logger.debug("Built Hamming code H_{%d,%d} of length %d.", q, m, n)
    return LinearCode(spec, parity.null_space(), n=n)


def simplex_code(q: int, m: int) -> LinearCode:
    """
    Build the simplex code [(q^m - 1)/(q - 1), m, q^(m-1)]_q, the dual of
    :func:`hamming_code`.

    Its generator matrix is the Hamming parity-check matrix.
    """
    if m < 2:
        raise ValueError("Simplex codes need m >= 2.")
    spec = field_for_order(q)
    return LinearCode(spec, _projective_points(spec, m))


def qr5_code() -> LinearCode:
    """
    The [5, 2, 4] quadratic-residue code over GF(4).

    Generator rows are (1, 0, 1, W, W) and (0, 1, W, W, 1).
    """
    return LinearCode(gf4(), [[1, 0, 1, 3, 3], [0, 1, 3, 3, 1]])


def build_code(family: str, q: int = 4, m: int = 2) -> LinearCode:
    """
    Build a code by family name.

    Args:
        - family (str): one of ``qr5``, ``hamming`` and ``simplex``
        - q (int): field order for the Hamming and simplex families
        - m (int): redundancy for the Hamming and simplex families

    Returns:
        - (LinearCode): the code

    Raises:
        - ValueError: for an unknown family
    """
    if family == "qr5":
        return qr5_code()
    if family == "hamming":
        return hamming_code(q, m)
    if family == "simplex":
        return simplex_code(q, m)
    raise ValueError(
        f"Unknown code family {family!r}; choose one of {', '.join(CODE_FAMILIES)}."
    )
