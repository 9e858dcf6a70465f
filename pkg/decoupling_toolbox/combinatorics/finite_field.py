# This code is part of the Decoupling Toolbox.

# (C) Copyright the Decoupling Toolbox developers 2026.

# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

"""Exact arithmetic in the binary extension fields GF(2^e)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Sequence

import galois
import numpy as np

from ..utils.settings import settings

# Rendering of GF(4) = {0, 1, w, W} where W is the conjugate of w.
GF4_SYMBOLS = ("0", "1", "w", "W")


@dataclass(frozen=True)
class FieldSpec:
    """Description of GF(2^e) by a monic irreducible modulus.

    Attributes:
        - e (int): the extension degree
        - modulus (tuple[int, ...]): the e + 1 coefficients of the modulus
            polynomial over F_2, constant term first
    """

    e: int
    modulus: tuple[int, ...]

    def __post_init__(self) -> None:
        """
        Validate the modulus.

        Raises:
            - ValueError: if the degree, the field order or the modulus is invalid
        """
        if self.e < 1:
            raise ValueError("The extension degree must be a positive integer.")
        if 2**self.e > settings.field_order_cap:
            raise ValueError(
                f"GF(2^{self.e}) exceeds the supported field order "
                f"{settings.field_order_cap}."
            )
        object.__setattr__(self, "modulus", tuple(int(c) for c in self.modulus))
        if len(self.modulus) != self.e + 1:
            raise ValueError(
                f"A degree-{self.e} modulus needs {self.e + 1} coefficients, "
                f"got {len(self.modulus)}."
            )
        if any(c not in (0, 1) for c in self.modulus):
            raise ValueError("Modulus coefficients must be bits.")
        if self.modulus[-1] != 1:
            raise ValueError("The modulus must be monic.")
        if not self.modulus_poly.is_irreducible():
            raise ValueError(f"The modulus {self.modulus_poly} is not irreducible.")

    @property
    def order(self) -> int:
        """Number of field elements q = 2^e."""
        return 2**self.e

    @property
    def modulus_poly(self) -> galois.Poly:
        """The modulus as a ``galois.Poly`` over GF(2)."""
        return galois.Poly(list(reversed(self.modulus)), field=galois.GF(2))

    @cached_property
    def galois_field(self) -> type[galois.FieldArray]:
        """The ``galois`` field class carrying the arithmetic of this spec."""
        if self.e == 1:
            return galois.GF(2)
        return galois.GF(2**self.e, irreducible_poly=self.modulus_poly)

    @property
    def is_gf4(self) -> bool:
        """Whether this is GF(4) with the modulus x^2 + x + 1."""
        return self.modulus == (1, 1, 1)

    @property
    def zero(self) -> FieldElement:
        """The additive identity."""
        return FieldElement.from_int(self, 0)

    @property
    def one(self) -> FieldElement:
        """The multiplicative identity."""
        return FieldElement.from_int(self, 1)

    def elements(self) -> list[FieldElement]:
        """
        List all field elements in the order of their integer representation.

        Returns:
            - (list[FieldElement]): the q elements, starting with 0 and 1
        """
        return [FieldElement.from_int(self, value) for value in range(self.order)]

    def array(self, values) -> galois.FieldArray:
        """
        Build a ``galois`` array over this field.

        Args:
            - values: integers in [0, q) or FieldElements, in any nested
                sequence shape

        Returns:
            - (galois.FieldArray): the array over GF(2^e)
        """
        return self.galois_field(_to_int_array(values))

    def to_elements(self, array: Sequence) -> list[FieldElement]:
        """Convert a one-dimensional field array into FieldElements."""
        return [FieldElement.from_int(self, int(v)) for v in np.asarray(array)]

    def render(self, value: int) -> str:
        """
        Render the element with the given integer representation.

        GF(4) uses the symbols 0, 1, w, W; other fields use hexadecimal
        bit-vectors.

        Args:
            - value (int): the integer representation of the element

        Returns:
            - (str): the text form
        """
        if self.is_gf4:
            return GF4_SYMBOLS[value]
        width = (self.e + 3) // 4
        return format(value, f"0{width}x")

    def parse(self, text: str) -> FieldElement:
        """
        Parse the text form produced by :meth:`render`.

        Raises:
            - ValueError: if the text does not denote an element of this field
        """
        if self.is_gf4 and text in GF4_SYMBOLS:
            return FieldElement.from_int(self, GF4_SYMBOLS.index(text))
        try:
            value = int(text, 16)
        except ValueError as ex:
            raise ValueError(
                f"Cannot parse {text!r} as an element of GF({self.order})."
            ) from ex
        return FieldElement.from_int(self, value)


@dataclass(frozen=True)
class FieldElement:
    """An element of GF(2^e) stored as polynomial coefficients.

    Attributes:
        - spec (FieldSpec): the field the element belongs to
        - bits (tuple[int, ...]): the e polynomial coefficients, constant term first
    """

    spec: FieldSpec
    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        """Check the bit-vector shape."""
        object.__setattr__(self, "bits", tuple(int(b) for b in self.bits))
        if len(self.bits) != self.spec.e:
            raise ValueError(
                f"Elements of GF({self.spec.order}) have {self.spec.e} bits, "
                f"got {len(self.bits)}."
            )
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("Element coefficients must be bits.")

    @classmethod
    def from_int(cls, spec: FieldSpec, value: int) -> FieldElement:
        """
        Build the element whose coefficient of x^i is bit i of ``value``.

        Raises:
            - ValueError: if value is outside [0, q)
        """
        if not 0 <= value < spec.order:
            raise ValueError(f"{value} is not an element of GF({spec.order}).")
        return cls(spec, tuple((value >> i) & 1 for i in range(spec.e)))

    @property
    def value(self) -> int:
        """Integer representation; matches the ``galois`` integer representation."""
        return sum(bit << i for i, bit in enumerate(self.bits))

    def is_zero(self) -> bool:
        """Whether this is the additive identity."""
        return not any(self.bits)

    def __int__(self) -> int:
        return self.value

    def __add__(self, other: FieldElement) -> FieldElement:
        return fe_add(self, other)

    __sub__ = __add__

    def __mul__(self, other: FieldElement) -> FieldElement:
        return fe_mul(self, other)

    def __str__(self) -> str:
        return self.spec.render(self.value)


def _check_same_field(a: FieldElement, b: FieldElement) -> None:
    if a.spec != b.spec:
        raise ValueError("field mismatch")


def fe_add(a: FieldElement, b: FieldElement) -> FieldElement:
    """
    Add two field elements (componentwise XOR of the bit vectors).

    Args:
        - a (FieldElement): first summand
        - b (FieldElement): second summand

    Returns:
        - (FieldElement): a + b

    Raises:
        - ValueError: if a and b belong to different fields
    """
    _check_same_field(a, b)
    return FieldElement(a.spec, tuple(x ^ y for x, y in zip(a.bits, b.bits)))


def fe_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    """
    Multiply two field elements (polynomial product reduced by the modulus).

    Raises:
        - ValueError: if a and b belong to different fields
    """
    _check_same_field(a, b)
    field = a.spec.galois_field
    return FieldElement.from_int(a.spec, int(field(a.value) * field(b.value)))


def fe_inv(a: FieldElement) -> FieldElement:
    """
    Invert a nonzero field element.

    Raises:
        - ZeroDivisionError: if a is zero
    """
    if a.is_zero():
        raise ZeroDivisionError("zero has no inverse")
    field = a.spec.galois_field
    return FieldElement.from_int(a.spec, int(np.reciprocal(field(a.value))))


def bits_iso(a: FieldElement) -> tuple[int, ...]:
    """
    Map a field element to F_2^e.

    The map lists the polynomial coefficients from the highest degree down,
    so that for GF(4) the classes of 1, x and x + 1 become (0, 1), (1, 0) and
    (1, 1). It is the same map as ``galois``' ``FieldArray.vector()``.

    Args:
        - a (FieldElement): the element

    Returns:
        - (tuple[int, ...]): its e-bit image
    """
    return tuple(reversed(a.bits))


def bits_iso_inv(spec: FieldSpec, bits: Sequence[int]) -> FieldElement:
    """
    Inverse of :func:`bits_iso`.

    Raises:
        - ValueError: if the bit vector does not have length e
    """
    if len(bits) != spec.e:
        raise ValueError(
            f"Expected a bit vector of length {spec.e}, got length {len(bits)}."
        )
    return FieldElement(spec, tuple(reversed([int(b) for b in bits])))


def binary_extension_field(e: int) -> FieldSpec:
    """
    Return GF(2^e) with its canonical modulus.

    The canonical modulus is the lexicographically least irreducible
    polynomial of degree e, which gives x^2 + x + 1 for GF(4) and x^4 + x + 1
    for GF(16).

    Args:
        - e (int): the extension degree

    Returns:
        - (FieldSpec): the field description

    Raises:
        - ValueError: if e < 1 or 2^e exceeds the field order cap
    """
    if e < 1:
        raise ValueError("The extension degree must be a positive integer.")
    if 2**e > settings.field_order_cap:
        raise ValueError(
            f"GF(2^{e}) exceeds the supported field order {settings.field_order_cap}."
        )
    return _canonical_field(e)


@lru_cache(maxsize=None)
def _canonical_field(e: int) -> FieldSpec:
    poly = galois.irreducible_poly(2, e, method="min")
    coeffs = [int(c) for c in poly.coeffs]
    return FieldSpec(e, tuple(reversed(coeffs)))


def field_for_order(q: int) -> FieldSpec:
    """
    Return the canonical field of order q.

    Raises:
        - ValueError: if q is not a supported power of two
    """
    if q < 2 or q & (q - 1):
        raise ValueError(
            f"Unsupported field order {q}; only powers of 2 are supported."
        )
    return binary_extension_field(q.bit_length() - 1)


def gf4() -> FieldSpec:
    """GF(4) = {0, 1, w, W} with w the class of x modulo x^2 + x + 1."""
    return binary_extension_field(2)


def _to_int_array(values) -> np.ndarray:
    if isinstance(values, FieldElement):
        return np.asarray(values.value)
    if isinstance(values, np.ndarray):
        return values.view(np.ndarray).astype(np.int64)
    if isinstance(values, (list, tuple)):
        return np.asarray([_to_int_array(v) for v in values], dtype=np.int64)
    return np.asarray(values, dtype=np.int64)
