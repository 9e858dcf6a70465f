# This code is part of the Decoupling Toolbox.

# (C) Copyright the Decoupling Toolbox developers 2026.

# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

"""Tests for schedule_verification module."""

import unittest

import numpy as np

from decoupling_toolbox.decoupling.pauli_labels import NodeSpec, PauliLabel
from decoupling_toolbox.decoupling.pulse_schedule import PulseSchedule
from decoupling_toolbox.decoupling.schedule_compiler import (
    compile_bipartite,
    compile_qubit_network,
    compile_qudit_network,
    compile_single_node,
)
from decoupling_toolbox.decoupling.schedule_verification import (
    PairHamiltonian,
    SequenceTimes,
    average_hamiltonian,
    hamiltonian_matrix,
    pairwise_verify,
    random_pair_hamiltonian,
    sequence_equivalence,
    verify_decoupling,
    verify_schedule,
)


def drop_frame(schedule, index):
    frames = list(schedule.frames)
    del frames[index]
    return PulseSchedule.from_frames(
        schedule.spec, frames, schedule.scenario, schedule.alpha
    )


class TestScheduleVerification(unittest.TestCase):
    def assertDecouples(self, schedule, seeds=(0, 1, 2)):
        for seed in seeds:
            hamiltonian = random_pair_hamiltonian(schedule.spec, seed)
            report = verify_decoupling(schedule, hamiltonian)
            self.assertTrue(report, msg=f"seed {seed}: residual {report.residual}")
            self.assertLessEqual(report.residual, 1e-10)

    def test_single_node(self):
        for d in (2, 3, 4, 6):
            with self.subTest(d=d):
                self.assertDecouples(compile_single_node(d))

    def test_bipartite(self):
        for d in (2, 3):
            with self.subTest(d=d):
                self.assertDecouples(compile_bipartite(d))

    def test_qubit_networks(self):
        for n0 in (2, 3, 4, 5):
            with self.subTest(n0=n0):
                self.assertDecouples(compile_qubit_network(n0))

    def test_qudit_network(self):
        self.assertDecouples(compile_qudit_network(3, 2), seeds=(0,))

    def test_local_only_and_zero_hamiltonians(self):
        schedule = compile_bipartite(2)
        local = random_pair_hamiltonian(schedule.spec, 3, coupling=False)
        self.assertTrue(verify_decoupling(schedule, local))
        zero = random_pair_hamiltonian(schedule.spec, 3, local=False, coupling=False)
        report = verify_decoupling(schedule, zero)
        self.assertEqual(report.residual, 0.0)
        self.assertTrue(report)

    def test_single_node_schedule_leaves_coupling(self):
        # X and Z on one qubit of a pair do not remove terms on the other qubit
        single = compile_single_node(2)
        spec = NodeSpec(2, 2)
        pulses = tuple(
            PauliLabel((pulse.nodes[0], (0, 0)), 2) for pulse in single.pulses
        )
        schedule = PulseSchedule(spec, pulses, single.sequence)
        report = verify_decoupling(schedule, random_pair_hamiltonian(spec, 0))
        self.assertFalse(report)
        self.assertGreater(report.residual, 1e-3)

    def test_dropped_frame_is_detected(self):
        schedule = drop_frame(compile_qubit_network(5), 5)
        self.assertTrue(schedule.check_closure())
        report = verify_decoupling(schedule, random_pair_hamiltonian(schedule.spec, 0))
        self.assertFalse(report)
        self.assertGreater(report.residual, 1e-3)
        pairwise = pairwise_verify(schedule)
        self.assertFalse(pairwise)
        self.assertEqual(
            pairwise.witness(),
            {
                "kind": "single",
                "nodes": [0],
                "symbols": [0],
                "count": 4,
                "expected": 3.75,
            },
        )

    def test_every_dropped_frame_is_detected(self):
        for base in (compile_single_node(3), compile_qubit_network(2)):
            hamiltonian = random_pair_hamiltonian(base.spec, 1)
            for index in range(base.num_steps):
                with self.subTest(scenario=base.scenario, index=index):
                    schedule = drop_frame(base, index)
                    self.assertEqual(schedule.num_steps, base.num_steps - 1)
                    report = verify_decoupling(schedule, hamiltonian)
                    self.assertFalse(report)
                    self.assertGreater(report.residual, 1e-3)
                    pairwise = pairwise_verify(schedule)
                    self.assertFalse(pairwise)
                    self.assertIsNotNone(pairwise.witness())

    def test_pairwise(self):
        report = pairwise_verify(compile_qubit_network(5))
        self.assertTrue(report)
        self.assertEqual(report.lam, 1)
        self.assertEqual(report.pairs_checked, 10)
        self.assertIsNone(report.witness())
        report = pairwise_verify(compile_qubit_network(21))
        self.assertEqual((report.lam, report.pairs_checked), (4, 210))
        report = pairwise_verify(compile_qudit_network(3, 2))
        self.assertEqual((report.lam, report.pairs_checked), (1, 3))
        self.assertEqual(pairwise_verify(compile_single_node(3)).lam, 1)
        with self.assertRaises(ValueError):
            pairwise_verify(compile_qubit_network(5), block=2)

    def test_pairwise_counts_duplicate_frames(self):
        # every frame of a two-qubit schedule is repeated, then one copy is replaced
        base = compile_qubit_network(2)
        frames = list(base.frames) * 2
        frames[17] = frames[2]
        schedule = PulseSchedule.from_frames(base.spec, frames, alpha=1)
        report = pairwise_verify(schedule)
        self.assertFalse(report)
        self.assertEqual(report.kind, "single")

    def test_qiskit_hamiltonian_agrees(self):
        spec = NodeSpec(3, 2)
        hamiltonian = random_pair_hamiltonian(spec, 5)
        operator = hamiltonian.to_sparse_pauli_op()
        self.assertEqual(len(operator), 9 + 27)
        np.testing.assert_allclose(
            hamiltonian_matrix(hamiltonian), operator.to_matrix(), atol=1e-12
        )
        with self.assertRaises(ValueError):
            random_pair_hamiltonian(NodeSpec(2, 3), 0).to_sparse_pauli_op()

    def test_hamiltonian_is_hermitian_and_traceless(self):
        for spec in (NodeSpec(2, 3), NodeSpec(1, 4)):
            matrix = hamiltonian_matrix(random_pair_hamiltonian(spec, 1))
            np.testing.assert_allclose(matrix, matrix.conj().T, atol=1e-12)
            self.assertAlmostEqual(abs(np.trace(matrix)), 0.0, places=10)

    def test_pair_hamiltonian_validation(self):
        spec = NodeSpec(2, 2)
        with self.assertRaises(ValueError):
            PairHamiltonian(spec, np.zeros((2, 4, 2)))
        with self.assertRaises(ValueError):
            PairHamiltonian(spec, np.zeros((2, 3, 2)), {(1, 0): np.zeros((3, 3, 2))})
        with self.assertRaises(ValueError):
            PairHamiltonian(spec, np.zeros((2, 3, 2)), {(0, 1): np.zeros((3, 2))})
        hamiltonian = PairHamiltonian(spec, np.zeros((2, 3, 2)))
        self.assertEqual(len(hamiltonian.terms()), 6)

    def test_thread_count_does_not_change_the_average(self):
        schedule = compile_qubit_network(5)
        hamiltonian = random_pair_hamiltonian(schedule.spec, 2)
        serial = average_hamiltonian(schedule, hamiltonian, num_threads=1)
        parallel = average_hamiltonian(schedule, hamiltonian, num_threads=4)
        self.assertTrue(np.array_equal(serial, parallel))
        with self.assertRaises(ValueError):
            average_hamiltonian(schedule, random_pair_hamiltonian(NodeSpec(4, 2), 0))

    def test_sequence_equivalence(self):
        schedules = (
            compile_single_node(2),
            compile_single_node(3),
            compile_qubit_network(5),
        )
        for schedule in schedules:
            with self.subTest(scenario=schedule.scenario, d=schedule.spec.d):
                hamiltonian = random_pair_hamiltonian(schedule.spec, 4)
                times = SequenceTimes.random(schedule.num_steps, 9)
                self.assertLessEqual(
                    sequence_equivalence(schedule, hamiltonian, times).distance, 1e-9
                )
                uniform = SequenceTimes.uniform(schedule.num_steps)
                self.assertTrue(sequence_equivalence(schedule, hamiltonian, uniform))

    def test_sequence_equivalence_needs_closure(self):
        spec = NodeSpec(1, 2)
        schedule = PulseSchedule(spec, (PauliLabel(((1, 0),), 2),), (0,))
        hamiltonian = random_pair_hamiltonian(spec, 0)
        report = sequence_equivalence(schedule, hamiltonian, SequenceTimes((0.7,)))
        self.assertFalse(report)
        with self.assertRaises(ValueError):
            sequence_equivalence(schedule, hamiltonian, SequenceTimes((0.1, 0.2)))

    def test_sequence_times(self):
        self.assertEqual(SequenceTimes.uniform(4, 2.0).taus, (0.5,) * 4)
        taus = SequenceTimes.random(100, 3).taus
        self.assertTrue(all(0.1 <= tau < 1.0 for tau in taus))
        self.assertEqual(taus, SequenceTimes.random(100, 3).taus)
        with self.assertRaises(ValueError):
            SequenceTimes((1.0, 0.0))
        with self.assertRaises(ValueError):
            SequenceTimes(())

    def test_verify_schedule_dense(self):
        report = verify_schedule(compile_qubit_network(5))
        self.assertTrue(report.passed)
        self.assertEqual(report.mode, "dense")
        data = report.to_dict()
        self.assertEqual(
            list(data),
            [
                "scenario",
                "n",
                "d",
                "N",
                "distinct_pulses",
                "residual",
                "pass",
                "seeds",
                "mode",
            ],
        )
        self.assertEqual(
            tuple(data[key] for key in ("scenario", "n", "d", "N", "distinct_pulses")),
            ("qubit-network", 5, 2, 16, 4),
        )
        self.assertEqual(data["seeds"], [0, 1, 2, 3, 4])
        self.assertLessEqual(data["residual"], 1e-10)

    def test_verify_schedule_pairwise_fallback(self):
        schedule = compile_qubit_network(21)
        with self.assertLogs(
            "decoupling_toolbox.decoupling.schedule_verification", "WARNING"
        ):
            report = verify_schedule(schedule, seeds=(0,))
        self.assertTrue(report.passed)
        self.assertEqual(report.mode, "pairwise")
        self.assertIsNone(report.residual)
        self.assertEqual(report.seeds, [])
        with self.assertRaises(ValueError):
            verify_schedule(schedule, mode="dense")
        with self.assertRaises(ValueError):
            verify_schedule(schedule, mode="fast")

    def test_verify_schedule_failures(self):
        schedule = compile_single_node(2)
        open_schedule = PulseSchedule(
            schedule.spec, schedule.pulses, schedule.sequence[:-1]
        )
        report = verify_schedule(open_schedule, seeds=(0,))
        self.assertFalse(report.passed)
        self.assertEqual(report.to_dict()["witness"], {"kind": "closure"})

        dropped = drop_frame(compile_qubit_network(5), 5)
        report = verify_schedule(dropped, seeds=(0, 1))
        self.assertFalse(report.passed)
        self.assertEqual(report.witness["kind"], "residual")
        self.assertEqual(report.witness["seed"], 0)
        report = verify_schedule(dropped, mode="pairwise")
        self.assertEqual(report.witness["kind"], "single")
