# This code is part of the Decoupling Toolbox.

# (C) Copyright the Decoupling Toolbox developers 2026.

# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

"""Tests for the decouple command."""

import contextlib
import io
import json
import os
import tempfile
import unittest
from unittest import mock

from decoupling_toolbox.cli import main
from decoupling_toolbox.utils.settings import settings


def run(*argv):
    stdout, stderr = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
        code = main(list(argv))
    return code, stdout.getvalue(), stderr.getvalue()


class TestCLI(unittest.TestCase):
    def setUp(self):
        self.tmpdir = tempfile.TemporaryDirectory()
        self.path = os.path.join(self.tmpdir.name, "schedule.json")

    def tearDown(self):
        self.tmpdir.cleanup()

    def test_compile_to_stdout(self):
        code, out, _ = run("compile", "--scenario", "qubit-network", "--nodes", "5")
        self.assertEqual(code, 0)
        data = json.loads(out)
        self.assertEqual((data["n"], data["d"], data["N"]), (5, 2, 16))
        self.assertEqual(len(data["pulses"]), 4)
        self.assertEqual(out, run("compile", "qubit-network", "--nodes", "5")[1])
        code, out, _ = run("compile", "--scenario", "single", "--dim", "6")
        data = json.loads(out)
        self.assertEqual((len(data["pulses"]), data["N"]), (2, 36))

    def test_compile_verify_show(self):
        code, _, _ = run("compile", "single", "--dim", "3", "--out", self.path)
        self.assertEqual(code, 0)
        code, out, _ = run("verify", "--in", self.path, "--seeds", "0,1")
        self.assertEqual(code, 0)
        report = json.loads(out)
        self.assertTrue(report["pass"])
        self.assertEqual(report["seeds"], [0, 1])
        self.assertEqual(report["mode"], "dense")
        code, out, _ = run("show", "--in", self.path)
        self.assertEqual(code, 0)
        lines = out.splitlines()
        self.assertEqual(lines[0], "scenario: single, n=1, d=3, N=9")
        self.assertEqual(lines[1:3], ["π1 = X^1", "π2 = Z^1"])
        self.assertTrue(lines[3].startswith("sequence: π1,π1,π2"))

    def test_tampered_file_fails_verification(self):
        run("compile", "qubit-network", "--nodes", "5", "--out", self.path)
        with open(self.path, encoding="utf-8") as handle:
            data = json.load(handle)
        data["sequence"][-1] = data["sequence"][0]
        with open(self.path, "w", encoding="utf-8") as handle:
            json.dump(data, handle)
        code, out, _ = run("verify", "--in", self.path, "--mode", "pairwise")
        self.assertEqual(code, 1)
        self.assertEqual(json.loads(out)["witness"], {"kind": "closure"})

    def test_oa(self):
        code, out, _ = run("oa", "--code", "qr5")
        self.assertEqual(code, 0)
        lines = out.splitlines()
        self.assertEqual(lines[0], "OA 16 5 4 2 1")
        self.assertEqual(len(lines), 6)

    def test_oa_force_lifts_the_strength_cap(self):
        with mock.patch.object(settings, "strength_check_cap", 10):
            code, _, err = run("oa", "--code", "qr5")
            self.assertEqual(code, 2)
            self.assertIn("use force", err)
            code, out, _ = run("oa", "--code", "qr5", "--force")
        self.assertEqual(code, 0)
        self.assertEqual(out.splitlines()[0], "OA 16 5 4 2 1")

    def test_codes_info(self):
        code, out, _ = run("codes", "info", "--family", "qr5")
        self.assertEqual(code, 0)
        self.assertEqual(out.splitlines()[0], "[5,2,4] over GF(4), dual [5,3,3]")
        code, _, err = run("codes", "info", "--family", "golay")
        self.assertEqual(code, 2)
        self.assertIn("error: Unknown code family", err)

    def test_cycles(self):
        code, out, _ = run("cycles", "--dim", "2", "--length", "3")
        self.assertEqual(code, 0)
        self.assertEqual(out.strip(), "0,1,0,2,0,1,0,2")

    def test_usage_errors(self):
        self.assertEqual(run("compile", "single", "--dim", "1")[0], 2)
        self.assertEqual(run("compile", "single")[0], 2)
        self.assertEqual(run("compile", "triangle", "--dim", "2")[0], 2)
        self.assertEqual(run("verify", "--in", self.path)[0], 2)
        self.assertEqual(run("verify")[0], 2)

    def test_malformed_file_is_a_usage_error(self):
        run("compile", "qubit-network", "--nodes", "5", "--out", self.path)
        with open(self.path, encoding="utf-8") as handle:
            good = json.load(handle)
        for broken in (
            {**good, "alpha": "1"},
            {**good, "sequence": [[1]] * 16},
            {**good, "pulses": 5},
            {**good, "frames": 5},
        ):
            with open(self.path, "w", encoding="utf-8") as handle:
                json.dump(broken, handle)
            code, _, err = run("verify", "--in", self.path)
            self.assertEqual(code, 2)
            self.assertTrue(err.startswith("error: "))
