# This code is part of the Decoupling Toolbox.

# (C) Copyright the Decoupling Toolbox developers 2026.

# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

"""Code for converting between node labels, symbols and packed codes."""

from __future__ import annotations

import numpy as np


def label_to_symbol(a, b, d: int):
    """
    Pack the exponent pair (a, b) of a node label into the symbol a * d + b.

    >>> label_to_symbol(1, 1, 2)
    3

    Args:
        - a (int or NDArray): the shift exponent
        - b (int or NDArray): the clock exponent, same shape as a
        - d (int): the node dimension

    Returns:
        - (int or NDArray): the symbol in [0, d^2), elementwise for arrays
    """
    return a * d + b


def symbol_to_label(symbol: int, d: int) -> tuple[int, int]:
    """
    Inverse of :func:`label_to_symbol`.

    >>> symbol_to_label(3, 2)
    (1, 1)
    """
    return divmod(symbol, d)


def pack_rows(table: np.ndarray, base: int) -> np.ndarray:
    """
    Combine the rows of a digit table column-wise into one code per column.

    The first row is most significant.

    >>> pack_rows(np.array([[0, 1, 1], [1, 0, 1]]), 2).tolist()
    [1, 2, 3]
    """
    table = np.asarray(table, dtype=np.int64)
    weights = base ** np.arange(table.shape[0] - 1, -1, -1, dtype=np.int64)
    return weights @ table
