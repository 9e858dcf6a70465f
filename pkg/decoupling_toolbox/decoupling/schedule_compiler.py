# This code is part of the Decoupling Toolbox.

# (C) Copyright the Decoupling Toolbox developers 2026.

# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

"""Compile decoupling schedules from Hamilton cycles and linear codes."""

from __future__ import annotations

import logging

import numpy as np

from ..combinatorics.finite_field import (
    FieldElement,
    bits_iso,
    bits_iso_inv,
    field_for_order,
)
from ..combinatorics.hamilton_cycles import CycleSpec, hamilton_cycle
from ..combinatorics.linear_codes import LinearCode, encode, qr5_code, simplex_code
from .pauli_labels import NodeSpec, PauliLabel
from .pulse_schedule import PulseSchedule

logger = logging.getLogger(__name__)


def _generator_pulses(spec: NodeSpec) -> list[PauliLabel]:
    """X and Z on every node, in the order X_0, Z_0, X_1, Z_1, ..."""
    pulses = []
    for coordinate in range(2 * spec.n):
        nodes = [(0, 0)] * spec.n
        node, component = divmod(coordinate, 2)
        nodes[node] = (1, 0) if component == 0 else (0, 1)
        pulses.append(PauliLabel(tuple(nodes), spec.d))
    return pulses


def _local_schedule(spec: NodeSpec, scenario: str) -> PulseSchedule:
    """Walk the Hamilton cycle of Z_d^(2n), coordinate 2j + c driving node j."""
    steps = hamilton_cycle(CycleSpec(spec.d, 2 * spec.n)).steps
    schedule = PulseSchedule(spec, tuple(_generator_pulses(spec)), steps, scenario)
    logger.info(
        "Compiled %s schedule: d=%d, %d steps, %d pulses.",
        scenario,
        spec.d,
        schedule.num_steps,
        schedule.distinct_pulses,
    )
    return schedule


def compile_single_node(d: int) -> PulseSchedule:
    """
    Decouple a single d-dimensional node with the two pulses X and Z.

    The frames run through all d^2 labels X^a Z^b along the Hamilton cycle of
    Z_d^2, coordinate 0 being the X exponent.

    Args:
        - d (int): the node dimension, at least 2

    Returns:
        - (PulseSchedule): d^2 steps with 2 distinct pulses

    Raises:
        - ValueError: if d < 2 or d^2 exceeds the cycle cap
    """
    return _local_schedule(NodeSpec(1, d), "single")


def compile_bipartite(d: int) -> PulseSchedule:
    """
    Decouple two d-dimensional nodes with the four pulses X and Z on either node.

    Args:
        - d (int): the node dimension, at least 2

    Returns:
        - (PulseSchedule): d^4 steps with 4 distinct pulses

    Raises:
        - ValueError: if d < 2 or d^4 exceeds the cycle cap
    """
    return _local_schedule(NodeSpec(2, d), "bipartite")


def choose_code_dimension(n0: int, q: int) -> int:
    """
    Smallest m >= 2 with (q^m - 1)/(q - 1) >= n0.

    For q = 4 this is the unique m with n0 <= (4^m - 1)/3 <= 4 n0.

    >>> [choose_code_dimension(n0, 4) for n0 in (2, 5, 6, 21, 22)]
    [2, 2, 3, 3, 4]
    """
    m = 2
    while (q**m - 1) // (q - 1) < n0:
        m += 1
    return m


def symbol_to_qubit_labels(element: FieldElement) -> list[tuple[int, int]]:
    """
    Split a field element of GF(2^(2 alpha)) into alpha qubit labels.

    Each consecutive pair (u, v) of the bits_iso image becomes X^(u+v) Z^u,
    so that 0, 1, w, W in GF(4) become I, X, Y and Z.

    >>> from decoupling_toolbox.combinatorics.finite_field import gf4
    >>> [symbol_to_qubit_labels(x)[0] for x in gf4().elements()]
    [(0, 0), (1, 0), (1, 1), (0, 1)]
    """
    bits = bits_iso(element)
    return [(bits[r] ^ bits[r + 1], bits[r]) for r in range(0, len(bits), 2)]


def qubit_labels_to_bits(labels) -> list[int]:
    """Inverse of :func:`symbol_to_qubit_labels` on the bit level."""
    bits = []
    for a, b in labels:
        bits.extend([b, a ^ b])
    return bits


def _network_schedule(
    code: LinearCode, cycle: CycleSpec, n0: int, alpha: int, scenario: str
) -> PulseSchedule:
    """
    Order the codewords along the binary Gray cycle and realize them on qubits.

    Gray coordinate c feeds bit (K - 1 - c) mod e of message coordinate
    (K - 1 - c) // e, counting bits from the most significant, where e = 2 alpha
    and K = e m. Each pulse is the codeword of one such unit message, cut to
    the first n0 symbols.
    """
    spec = code.spec
    e = spec.e
    total_bits = cycle.k
    steps = hamilton_cycle(cycle).steps
    nodes = NodeSpec(n0 * alpha, 2)
    pulses = []
    for coordinate in range(total_bits):
        position = total_bits - 1 - coordinate
        message = [spec.zero] * code.k
        unit = [0] * e
        unit[position % e] = 1
        message[position // e] = bits_iso_inv(spec, unit)
        word = encode(code, message)[:n0]
        labels = [pair for symbol in word for pair in symbol_to_qubit_labels(symbol)]
        pulses.append(PauliLabel(tuple(labels), 2))
    schedule = PulseSchedule(nodes, tuple(pulses), steps, scenario, alpha)
    logger.info(
        "Compiled %s schedule: %d nodes over GF(%d), m=%d, %d steps, %d pulses.",
        scenario,
        n0,
        spec.order,
        code.k,
        schedule.num_steps,
        schedule.distinct_pulses,
    )
    return schedule


def compile_qubit_network(n0: int) -> PulseSchedule:
    """
    Decouple n0 qubits with 2m pulses from the simplex code over GF(4).

    The code dimension m is chosen by :func:`choose_code_dimension`. For
    m = 2 the [5, 2, 4] quadratic-residue code is used.

    Args:
        - n0 (int): number of qubits, at least 2

    Returns:
        - (PulseSchedule): 4^m steps with 2m distinct pulses

    Raises:
        - ValueError: if n0 < 2 or the schedule exceeds the caps
    """
    if n0 < 2:
        raise ValueError("A qubit network needs at least 2 qubits.")
    m = choose_code_dimension(n0, 4)
    logger.debug("Qubit network of %d qubits uses m=%d.", n0, m)
    cycle = CycleSpec(2, 2 * m)
    code = qr5_code() if m == 2 else simplex_code(4, m)
    return _network_schedule(code, cycle, n0, 1, "qubit-network")


def compile_qudit_network(n0: int, alpha: int) -> PulseSchedule:
    """
    Decouple n0 nodes of dimension 2^alpha, each realized as alpha qubits.

    Args:
        - n0 (int): number of nodes, at least 2
        - alpha (int): qubits per node, at least 1

    Returns:
        - (PulseSchedule): 2^(2 alpha m) steps with 2 alpha m distinct pulses on
            alpha * n0 qubits

    Raises:
        - ValueError: if n0 < 2, alpha < 1 or the construction exceeds the caps
    """
    if alpha < 1:
        raise ValueError("alpha must be at least 1.")
    if alpha == 1:
        return compile_qubit_network(n0)
    if n0 < 2:
        raise ValueError("A qudit network needs at least 2 nodes.")
    q = 2 ** (2 * alpha)
    m = choose_code_dimension(n0, q)
    cycle = CycleSpec(2, 2 * alpha * m)
    logger.debug("Qudit network of %d nodes uses GF(%d) and m=%d.", n0, q, m)
    code = simplex_code(q, m)
    return _network_schedule(code, cycle, n0, alpha, "qudit-network")


def qubit_frame_symbols(schedule: PulseSchedule) -> np.ndarray:
    """
    Map the frames of a network schedule back to field symbols.

    Args:
        - schedule (PulseSchedule): a qubit or qudit network schedule

    Returns:
        - (np.ndarray): n0 x N matrix of integer representations of
            GF(2^(2 alpha)) elements

    Raises:
        - ValueError: if the schedule is not a qubit network schedule
    """
    if schedule.alpha is None or schedule.spec.d != 2:
        raise ValueError("Frame symbols need a qubit network schedule.")
    alpha = schedule.alpha
    spec = field_for_order(2 ** (2 * alpha))
    n0 = schedule.spec.n // alpha
    table = np.zeros((n0, schedule.num_steps), dtype=np.int64)
    for column, frame in enumerate(schedule.frames):
        for node in range(n0):
            block = frame.nodes[node * alpha : (node + 1) * alpha]
            table[node, column] = bits_iso_inv(spec, qubit_labels_to_bits(block)).value
    return table
