# This code is part of the Decoupling Toolbox.

# (C) Copyright the Decoupling Toolbox developers 2026.

# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

"""Tests for linear_codes module."""

import unittest
from unittest import mock

import numpy as np

from decoupling_toolbox.combinatorics.finite_field import field_for_order, gf4
from decoupling_toolbox.combinatorics.linear_codes import (
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
from decoupling_toolbox.utils.settings import settings


class TestLinearCodes(unittest.TestCase):
    def setUp(self):
        self.qr5 = qr5_code()

    def test_qr5_parameters(self):
        self.assertEqual(str(self.qr5.params()), "[5,2,4]")
        self.assertEqual(self.qr5.num_codewords, 16)
        self.assertEqual(self.qr5.render(), "1 0 1 W W\n0 1 W W 1")

    def test_encode(self):
        self.assertEqual([e.value for e in encode(self.qr5, [1, 0])], [1, 0, 1, 3, 3])
        self.assertEqual([e.value for e in encode(self.qr5, [0, 1])], [0, 1, 3, 3, 1])
        # w * (1, 0, 1, W, W) = (w, 0, w, 1, 1)
        self.assertEqual([e.value for e in encode(self.qr5, [2, 0])], [2, 0, 2, 1, 1])
        self.assertEqual(
            [str(e) for e in encode(self.qr5, [1, 1])], ["1", "1", "w", "0", "w"]
        )
        with self.assertRaises(ValueError):
            encode(self.qr5, [1])

    def test_enumerate_codewords(self):
        words = enumerate_codewords(self.qr5)
        self.assertEqual(words.shape, (16, 5))
        self.assertEqual(len({tuple(int(v) for v in row) for row in words}), 16)
        self.assertEqual(self.qr5.weight_distribution(), [1, 0, 0, 0, 15, 0])

    def test_enumerate_codewords_custom_order(self):
        messages = np.array([[a, b] for a in range(4) for b in range(4)])[::-1]
        words = enumerate_codewords(self.qr5, messages)
        np.testing.assert_array_equal(
            words.view(np.ndarray), enumerate_codewords(self.qr5).view(np.ndarray)[::-1]
        )
        repeated = np.zeros((16, 2), dtype=int)
        with self.assertRaises(ValueError):
            enumerate_codewords(self.qr5, repeated)
        with self.assertRaises(ValueError):
            enumerate_codewords(self.qr5, messages[:4])

    def test_qr5_dual(self):
        dual = dual_code(self.qr5)
        self.assertEqual(str(dual.params()), "[5,3,3]")
        self.assertTrue(is_dual_pair(self.qr5, dual))
        self.assertTrue(dual_code(dual).same_code(self.qr5))
        self.assertFalse(is_dual_pair(self.qr5, self.qr5))

    def test_hamming_codes(self):
        self.assertEqual(str(hamming_code(4, 2).params()), "[5,3,3]")
        binary = hamming_code(2, 3)
        self.assertEqual(str(binary.params()), "[7,4,3]")
        self.assertEqual(binary.weight_distribution(), [1, 0, 0, 7, 7, 0, 0, 1])
        self.assertTrue(hamming_code(4, 2).same_code(dual_code(simplex_code(4, 2))))

    def test_simplex_codes_have_constant_weight(self):
        for q, m in [(2, 3), (4, 2), (2, 4), (4, 3)]:
            with self.subTest(q=q, m=m):
                code = simplex_code(q, m)
                n = (q**m - 1) // (q - 1)
                self.assertEqual(code.n, n)
                self.assertEqual(code.k, m)
                distribution = code.weight_distribution()
                self.assertEqual(distribution[0], 1)
                self.assertEqual(distribution[q ** (m - 1)], q**m - 1)
                self.assertEqual(sum(distribution), q**m)

    def test_large_hamming_code_distance(self):
        with self.assertLogs(
            "decoupling_toolbox.combinatorics.linear_codes", "WARNING"
        ):
            code = hamming_code(4, 3)
        self.assertEqual((code.n, code.k), (21, 18))
        self.assertEqual(min_distance(code), 3)
        self.assertEqual(min_distance(dual_code(code)), 16)

    def test_repetition_code(self):
        gf2 = field_for_order(2)
        code = LinearCode(gf2, [[1, 1, 1]])
        self.assertEqual(str(code.params()), "[3,1,3]")
        self.assertEqual(str(dual_code(code).params()), "[3,2,2]")

    def test_zero_and_full_codes(self):
        zero = LinearCode(gf4(), [], n=5)
        self.assertEqual(zero.k, 0)
        self.assertEqual(str(zero.params()), "[5,0,-]")
        with self.assertRaises(ValueError) as e:
            min_distance(zero)
        self.assertEqual(str(e.exception), "zero code has no minimum distance")
        full = dual_code(zero)
        self.assertEqual(str(full.params()), "[5,5,1]")
        self.assertEqual(dual_code(full).k, 0)
        with self.assertRaises(ValueError):
            LinearCode(gf4(), [])

    def test_invalid_generators(self):
        with self.assertRaises(ValueError):
            LinearCode(gf4(), [[1, 0, 1], [1, 0, 1]])
        with self.assertRaises(ValueError):
            LinearCode(gf4(), [[1, 0, 1]], n=4)
        with self.assertRaises(ValueError):
            CodeParams(5, 2, 6)

    def test_build_code(self):
        self.assertTrue(build_code("qr5").same_code(self.qr5))
        self.assertEqual(build_code("simplex", q=2, m=3).n, 7)
        with self.assertRaises(ValueError) as e:
            build_code("golay")
        self.assertIn("qr5, hamming, simplex", str(e.exception))
        with self.assertRaises(ValueError):
            hamming_code(4, 1)

    def test_enumeration_cap(self):
        with mock.patch.object(settings, "codeword_enumeration_cap", 15):
            with self.assertRaises(ValueError):
                enumerate_codewords(self.qr5)
        with mock.patch.object(settings, "codeword_enumeration_cap", 16):
            self.assertEqual(len(enumerate_codewords(self.qr5)), 16)
