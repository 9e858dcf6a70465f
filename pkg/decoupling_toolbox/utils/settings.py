# This code is part of the Decoupling Toolbox.

# (C) Copyright the Decoupling Toolbox developers 2026.

# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

"""Global size caps shared by the constructions and the verifiers."""

from __future__ import annotations

import logging
import os

logger = logging.getLogger(__name__)

DENSE_CAP_ENV_VAR = "DECOUPLE_CAP_DENSE"


class Settings:
    """Container for the caps that keep every exhaustive path at desk scale.

    Each cap can be reassigned at runtime, e.g.
    ``settings.codeword_enumeration_cap = 2**22``. The dense dimension cap can
    also be overridden through the ``DECOUPLE_CAP_DENSE`` environment variable;
    an explicit assignment takes precedence over the environment.

    Attributes:
        - codeword_enumeration_cap (int): maximum number of codewords q^k that
            may be enumerated
        - cycle_vertex_cap (int): maximum number of vertices d^k of a Hamilton
            cycle
        - strength_check_cap (int): maximum number of elementary counts
            C(n, t) * N performed by an unforced strength check
        - field_order_cap (int): maximum supported field order 2^e
    """

    def __init__(self) -> None:
        """Initialize the caps with their default values."""
        self.codeword_enumeration_cap: int = 2**20
        self.cycle_vertex_cap: int = 2**24
        self.strength_check_cap: int = 10**8
        self.field_order_cap: int = 2**16
        self._dense_dimension_cap: int | None = None

    @property
    def dense_dimension_cap(self) -> int:
        """
        Largest total Hilbert-space dimension handled by dense matrix paths.

        Returns:
            - (int): the cap, 8192 unless overridden
        """
        if self._dense_dimension_cap is not None:
            return self._dense_dimension_cap
        raw = os.environ.get(DENSE_CAP_ENV_VAR)
        if raw is not None:
            try:
                value = int(raw)
            except ValueError:
                value = 0
            if value > 0:
                return value
            logger.warning(
                "Ignoring invalid %s=%r; using the default dense cap.",
                DENSE_CAP_ENV_VAR,
                raw,
            )
        return 8192

    @dense_dimension_cap.setter
    def dense_dimension_cap(self, value: int | None) -> None:
        """Set the dense cap; ``None`` restores the environment/default value."""
        if value is not None and value < 1:
            raise ValueError("The dense dimension cap must be a positive integer.")
        self._dense_dimension_cap = value


settings = Settings()
