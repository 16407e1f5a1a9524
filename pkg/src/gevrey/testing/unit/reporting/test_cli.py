# Copyright 2025 The gevrey developers
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import contextlib
import dataclasses
from fractions import Fraction
import io
import json
from pathlib import Path
import tempfile
import unittest

from gevrey.cli import (
    EXIT_DEGENERATE,
    EXIT_MISMATCH,
    EXIT_OK,
    EXIT_RESONANCE,
    EXIT_USAGE,
    main,
)
from gevrey.corpus.painleve import (
    corpus,
    dump_cases,
)
from gevrey.reporting.reports import ClassificationReport


def _run(*argv):
    stdout = io.StringIO()
    stderr = io.StringIO()
    with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
        code = main(list(argv))

    return code, stdout.getvalue(), stderr.getvalue()


class TestSolveCommand(unittest.TestCase):
    def test_corpus_case(self):
        code, stdout, _ = _run("solve", "--corpus", "P5-A-6-l2", "-N", "3", "--json")

        self.assertEqual(
            code,
            EXIT_OK,
        )
        report = ClassificationReport.loads(stdout)
        self.assertEqual(
            report.coefficients[:2],
            ((-1, 2), (-2, -6)),
        )

    def test_equation_and_seed(self):
        code, stdout, _ = _run(
            "solve",
            "--equation",
            "z*w' + w",
            "--seed",
            "1@-1",
            "-N",
            "2",
        )

        self.assertEqual(
            code,
            EXIT_OK,
        )
        self.assertEqual(
            stdout.splitlines(),
            ["exponent  coefficient", "      -1  1", "      -2  0", "      -3  0"],
        )

    def test_parameters_and_output_file(self):
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / "report.json"
            code, stdout, _ = _run(
                "solve",
                "--equation",
                "z*w' + a*w",
                "--parameter",
                "a=2",
                "--seed",
                "a@-2",
                "-N",
                "2",
                "--json",
                "--out",
                str(path),
            )

            self.assertEqual(
                (code, stdout),
                (EXIT_OK, ""),
            )
            data = json.loads(path.read_text(encoding="utf-8"))
        self.assertEqual(
            data["parameters"],
            {"a": "2/1+0/1*i"},
        )

    def test_usage_errors(self):
        for argv in (
            ("solve", "--equation", "z*w' +", "--seed", "1@0"),
            ("solve", "--equation", "z*w' + w"),
            ("solve", "--corpus", "P6-A-1"),
            ("solve", "--equation", "z*w' + w", "--seed", "0@0"),
            ("solve", "--equation", "z*w' + w", "--seed", "1@0"),
            ("solve", "--equation", "z*w' + b*w", "--parameter", "b", "--seed", "1@0"),
            ("solve", "--equation", "z*w' + w", "--seed", "1@-1", "-N", "0"),
        ):
            code, _, stderr = _run(*argv)
            self.assertEqual(
                code,
                EXIT_USAGE,
                argv,
            )
            self.assertTrue(
                stderr.startswith("error: "),
                stderr,
            )

    def test_argument_errors(self):
        for argv in (
            ("frobnicate",),
            ("solve", "-N", "many"),
        ):
            with contextlib.redirect_stderr(io.StringIO()):
                with self.assertRaises(SystemExit) as context:
                    main(list(argv))
            self.assertEqual(
                context.exception.code,
                EXIT_USAGE,
            )

    def test_resonance(self):
        code, _, stderr = _run(
            "solve",
            "--equation",
            "z*w' + 2*w - 2",
            "--seed",
            "1@0",
        )

        self.assertEqual(
            code,
            EXIT_RESONANCE,
        )
        self.assertIn(
            "Characteristic value",
            stderr,
        )


class TestClassifyCommand(unittest.TestCase):
    def test_corpus_case(self):
        code, stdout, _ = _run("classify", "--corpus", "P3-A-13-l4")

        self.assertEqual(
            code,
            EXIT_OK,
        )
        data = json.loads(stdout)
        self.assertEqual(
            data["gevrey_candidates"],
            ["0", "1"],
        )
        self.assertEqual(
            data["positive_slopes"],
            ["1/1"],
        )

    def test_no_positive_slope(self):
        code, stdout, _ = _run(
            "classify",
            "--equation",
            "z*w' + a*w",
            "--parameter",
            "a=2",
            "--seed",
            "a@-2",
        )

        self.assertEqual(
            code,
            EXIT_OK,
        )
        data = json.loads(stdout)
        self.assertEqual(
            (data["positive_slopes"], data["gevrey_candidates"]),
            ([], ["0"]),
        )

    def test_drawings(self):
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / "polygon.svg"
            code, stdout, stderr = _run(
                "classify",
                "--corpus",
                "P5-A-7",
                "--svg",
                str(path),
                "--ascii",
            )

            self.assertEqual(
                code,
                EXIT_OK,
            )
            self.assertTrue(path.read_text(encoding="utf-8").startswith("<svg"))
        self.assertEqual(
            json.loads(stdout)["case_id"],
            "P5-A-7",
        )
        self.assertIn(
            " | o",
            stderr,
        )

    def test_degenerate_leading_coefficient(self):
        code, _, _ = _run(
            "classify",
            "--equation",
            "w'^2",
            "--seed",
            "1@0",
        )

        self.assertEqual(
            code,
            EXIT_DEGENERATE,
        )


class TestCorpusCheckCommand(unittest.TestCase):
    def test_filter(self):
        code, stdout, _ = _run("corpus-check", "--filter", "P5-A-*")

        self.assertEqual(
            code,
            EXIT_OK,
        )
        self.assertEqual(
            stdout.splitlines(),
            [
                "PASS P5-A-6-l1: ok",
                "PASS P5-A-6-l2: ok",
                "PASS P5-A-7: ok",
                "all cases pass (3 checked)",
            ],
        )

    def test_empty_filter(self):
        with self.assertWarns(UserWarning):
            code, stdout, _ = _run("corpus-check", "--filter", "P9*")

        self.assertEqual(
            (code, stdout),
            (EXIT_OK, "0 cases checked\n"),
        )

    def test_mismatch(self):
        cases = [case for case in corpus() if case.case_id == "P5-A-7"]
        cases.append(
            dataclasses.replace(
                cases[0],
                case_id="P5-A-7-corrupted",
                expected_gevrey_candidates=(Fraction(0), Fraction(1, 2)),
            )
        )

        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / "cases.json"
            dump_cases(cases, path)
            code, stdout, stderr = _run("corpus-check", "--cases", str(path))

        self.assertEqual(
            code,
            EXIT_MISMATCH,
        )
        self.assertEqual(
            stdout.splitlines(),
            [
                "PASS P5-A-7: ok",
                "FAIL P5-A-7-corrupted: Mismatching Gevrey candidates",
            ],
        )
        self.assertIn(
            "P5-A-7-corrupted",
            stderr,
        )


class TestOtherCommands(unittest.TestCase):
    def test_polygon(self):
        code, stdout, _ = _run("polygon", "--points", "0,0;2,1;3,3")

        self.assertEqual(
            code,
            EXIT_OK,
        )
        lines = stdout.splitlines()
        self.assertEqual(
            lines[:3],
            [
                "vertices: (0, 0), (2, 1), (3, 3)",
                "positive slopes: 1/2, 2",
                "gevrey candidates: 0, 1/2, 2",
            ],
        )

    def test_polygon_json(self):
        code, stdout, _ = _run("polygon", "--points", "0,-1;1,1;2,1", "--json")

        self.assertEqual(
            code,
            EXIT_OK,
        )
        data = json.loads(stdout)
        self.assertEqual(
            (data["hull_vertices"], data["gevrey_candidates"]),
            ([[0, "-1/1"], [2, "1/1"]], ["0", "1"]),
        )

    def test_invalid_points(self):
        for points in ("0,1;0,2", "0;1", "a,1", ""):
            code, _, _ = _run("polygon", "--points", points)
            self.assertEqual(
                code,
                EXIT_USAGE,
                points,
            )

    def test_variation(self):
        code, stdout, _ = _run("variation", "--equation", "w'^2 + z*w")

        self.assertEqual(
            (code, stdout),
            (EXIT_OK, "(2*w')*d/dz + (z)\n"),
        )


if __name__ == "__main__":
    unittest.main()
