# This code is part of the Decoupling Toolbox.

# (C) Copyright the Decoupling Toolbox developers 2026.

# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

"""
Decoupling (:mod:`decoupling_toolbox.decoupling`).

.. currentmodule:: decoupling_toolbox.decoupling

.. autosummary::
   :toctree: ../stubs/
   :nosignatures:

    NodeSpec
    PauliLabel
    label_matrix
    label_add
    operator_basis
    basis_average
    PulseSchedule
    compile_single_node
    compile_bipartite
    compile_qubit_network
    compile_qudit_network
    distinct_pulse_count
    PairHamiltonian
    SequenceTimes
    random_pair_hamiltonian
    hamiltonian_matrix
    average_hamiltonian
    verify_decoupling
    pairwise_verify
    sequence_equivalence
    verify_schedule
    ScheduleFile
"""

from .pauli_labels import (
    NodeSpec,
    PauliLabel,
    basis_average,
    conjugate,
    label_add,
    label_matrix,
    operator_basis,
    render_label,
    to_pauli,
)
from .pulse_schedule import PulseSchedule, distinct_pulse_count
from .schedule_compiler import (
    choose_code_dimension,
    compile_bipartite,
    compile_qubit_network,
    compile_qudit_network,
    compile_single_node,
    qubit_frame_symbols,
)
from .schedule_io import ScheduleFile, read_schedule, write_schedule
from .schedule_verification import (
    DecouplingReport,
    EquivalenceReport,
    PairHamiltonian,
    PairwiseReport,
    SequenceTimes,
    VerificationReport,
    average_hamiltonian,
    hamiltonian_matrix,
    pairwise_verify,
    random_pair_hamiltonian,
    sequence_equivalence,
    verify_decoupling,
    verify_schedule,
)

__all__ = [
    "NodeSpec",
    "PauliLabel",
    "basis_average",
    "conjugate",
    "label_add",
    "label_matrix",
    "operator_basis",
    "render_label",
    "to_pauli",
    "PulseSchedule",
    "distinct_pulse_count",
    "choose_code_dimension",
    "compile_bipartite",
    "compile_qubit_network",
    "compile_qudit_network",
    "compile_single_node",
    "qubit_frame_symbols",
    "ScheduleFile",
    "read_schedule",
    "write_schedule",
    "DecouplingReport",
    "EquivalenceReport",
    "PairHamiltonian",
    "PairwiseReport",
    "SequenceTimes",
    "VerificationReport",
    "average_hamiltonian",
    "hamiltonian_matrix",
    "pairwise_verify",
    "random_pair_hamiltonian",
    "sequence_equivalence",
    "verify_decoupling",
    "verify_schedule",
]
