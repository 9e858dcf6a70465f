# This code is part of the Decoupling Toolbox.

# (C) Copyright the Decoupling Toolbox developers 2026.

# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

"""
Combinatorics (:mod:`decoupling_toolbox.combinatorics`).

.. currentmodule:: decoupling_toolbox.combinatorics

.. autosummary::
   :toctree: ../stubs/
   :nosignatures:

    FieldSpec
    FieldElement
    fe_add
    fe_mul
    fe_inv
    bits_iso
    bits_iso_inv
    gf4
    LinearCode
    CodeParams
    encode
    enumerate_codewords
    dual_code
    min_distance
    hamming_code
    simplex_code
    qr5_code
    OrthogonalArray
    oa_from_code
    verify_strength
    parse_oa_text
    CycleSpec
    StepList
    hamilton_cycle
    vertices
    verify_hamilton
    gray_code
"""

from .finite_field import (
    FieldElement,
    FieldSpec,
    binary_extension_field,
    bits_iso,
    bits_iso_inv,
    fe_add,
    fe_inv,
    fe_mul,
    field_for_order,
    gf4,
)
from .hamilton_cycles import (
    CycleSpec,
    HamiltonReport,
    StepList,
    generator_usage,
    gray_code,
    hamilton_cycle,
    verify_hamilton,
    vertices,
)
from .linear_codes import (
    CodeParams,
    LinearCode,
    build_code,
    dual_code,
    encode,
    enumerate_codewords,
    hamming_code,
    is_dual_pair,
    min_distance,
    qr5_code,
    simplex_code,
)
from .orthogonal_arrays import (
    OrthogonalArray,
    StrengthReport,
    hamming_oa_parameters,
    oa_from_code,
    parse_oa_text,
    verify_strength,
)

__all__ = [
    "FieldElement",
    "FieldSpec",
    "binary_extension_field",
    "bits_iso",
    "bits_iso_inv",
    "fe_add",
    "fe_inv",
    "fe_mul",
    "field_for_order",
    "gf4",
    "CycleSpec",
    "HamiltonReport",
    "StepList",
    "generator_usage",
    "gray_code",
    "hamilton_cycle",
    "verify_hamilton",
    "vertices",
    "CodeParams",
    "LinearCode",
    "build_code",
    "dual_code",
    "encode",
    "enumerate_codewords",
    "hamming_code",
    "is_dual_pair",
    "min_distance",
    "qr5_code",
    "simplex_code",
    "OrthogonalArray",
    "StrengthReport",
    "hamming_oa_parameters",
    "oa_from_code",
    "parse_oa_text",
    "verify_strength",
]
