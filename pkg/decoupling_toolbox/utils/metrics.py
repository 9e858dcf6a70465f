# This code is part of the Decoupling Toolbox.

# (C) Copyright the Decoupling Toolbox developers 2026.

# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

"""Functions for comparing dense operators."""

import numpy as np


def relative_residual(observed, reference) -> float:  # noqa: D301
    r"""
    Measure the relative Frobenius residual.

    The residual is defined as $ \|A\|_F / \|H\|_F $ and is 0 when the
    reference vanishes.

    Examples:
    >>> relative_residual(np.zeros((2, 2)), np.eye(2))
    0.0

    >>> relative_residual(np.eye(2), 2 * np.eye(2))
    0.5

    >>> relative_residual(np.eye(2), np.zeros((2, 2)))
    0.0

    Args:
        - observed (NDArray): the operator whose size is measured
        - reference (NDArray): the operator it is measured against

    Returns:
        - (float): the relative residual
    """
    scale = np.linalg.norm(reference)
    if scale == 0:
        return 0.0
    return float(np.linalg.norm(observed) / scale)


def phase_aligned_distance(first, second) -> float:  # noqa: D301
    r"""
    Compute the Frobenius distance of two operators up to a global phase.

    The first operator is multiplied by the unimodular scalar $c/|c|$ with
    $c = \mathrm{tr}(A^\dagger B)$, which maximizes the real overlap, before
    taking $\|e^{i\phi}A - B\|_F$.

    Example:
    >>> phase_aligned_distance(1j * np.eye(2), np.eye(2))
    0.0

    Args:
        - first (NDArray): the operator A
        - second (NDArray): the operator B

    Returns:
        - (float): the aligned distance

    Raises:
        - ValueError: if the shapes differ
    """
    first = np.asarray(first)
    second = np.asarray(second)
    if first.shape != second.shape:
        raise ValueError(f"Shape mismatch: {first.shape} versus {second.shape}.")
    overlap = np.vdot(first, second)
    phase = overlap / abs(overlap) if abs(overlap) > 0 else 1.0
    return float(np.linalg.norm(phase * first - second))


def unitarity_error(matrix) -> float:
    """
    Compute the Frobenius distance of U^dagger U from the identity.

    Example:
    >>> unitarity_error(np.array([[0, 1], [1, 0]]))
    0.0

    Args:
        - matrix (NDArray): the square matrix U

    Returns:
        - (float): the computed distance
    """
    matrix = np.asarray(matrix)
    return float(np.linalg.norm(matrix.conj().T @ matrix - np.eye(matrix.shape[0])))
