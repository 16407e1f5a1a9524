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

import dataclasses
from fractions import Fraction
import json
from pathlib import Path
import tempfile
import unittest

from gevrey.algebra.gaussian_rationals import GaussianRational
from gevrey.corpus.painleve import (
    PRESETS,
    CorpusCase,
    ParameterSet,
    corpus,
    dump_cases,
    load_cases,
    run_corpus_check,
)
from gevrey.solving.extension import (
    SeedExpansion,
    extend,
    residual_order,
)

I = GaussianRational.I

# Case id to the two leading seed coefficients.
SEED_GOLDENS = {
    "P3-A-13-l1": (2 * I, Fraction(-1, 2)),
    "P3-A-13-l2": (-2, Fraction(-3, 2)),
    "P3-A-13-l3": (-2 * I, Fraction(-1, 2)),
    "P3-A-13-l4": (2, Fraction(-3, 2)),
    "P5-A-6-l1": (-2, -10),
    "P5-A-6-l2": (2, -6),
    "P5-A-7": (-1, 4),
    "P5-B-8-l1": (-1, 1),
    "P5-B-8-l2": (1, 3),
    "P5-C-10-l3": (-1, 1),
    "P5-C-10-l4": (1, 1),
    "P5-C-9-l3": (-2, -4),
    "P5-C-9-l4": (2, -4),
}

CHARACTERISTIC_VALUES = {
    "P3-A-13-l1": -32 * I,
    "P3-A-13-l2": -32,
    "P3-A-13-l3": 32 * I,
    "P3-A-13-l4": 32,
    "P5-A-6-l1": -4,
    "P5-A-6-l2": 4,
    "P5-A-7": 1,
    "P5-B-8-l1": -2,
    "P5-B-8-l2": -2,
    "P5-C-10-l3": -2,
    "P5-C-10-l4": -2,
    "P5-C-9-l3": 4,
    "P5-C-9-l4": -4,
}


def _cases():
    return {case.case_id: case for case in corpus()}


class TestParameterSet(unittest.TestCase):
    def test_presets(self):
        self.assertEqual(
            PRESETS["P3-A"],
            (4, 8, 1, -16),
        )
        self.assertEqual(
            ParameterSet.from_json(PRESETS["P5-C"].to_json()),
            PRESETS["P5-C"],
        )
        self.assertEqual(
            ParameterSet.of(1, Fraction(1, 2), I, 0).as_mapping()["gamma"],
            I,
        )

    def test_invalid_json(self):
        self.assertRaises(
            ValueError,
            ParameterSet.from_json,
            {"alpha": {"re": "1", "im": "0"}},
        )


class TestCorpus(unittest.TestCase):
    def test_case_ids(self):
        self.assertEqual(
            [case.case_id for case in corpus()],
            sorted(SEED_GOLDENS),
        )

    def test_seeds(self):
        for case_id, case in _cases().items():
            self.assertEqual(
                tuple(case.seed.terms.values()),
                SEED_GOLDENS[case_id],
                case_id,
            )
            case.verify_seed()

    def test_ramified_cases(self):
        for case_id, case in _cases().items():
            expected_result = 2 if case.equation == "P5-delta0" else 1
            self.assertEqual(
                (case.variable_power, case.seed.ramification),
                (expected_result, expected_result),
                case_id,
            )

    def test_characteristic_values(self):
        for case_id, case in _cases().items():
            solution = extend(
                case.differential_sum(),
                case.seed,
                3,
            )
            self.assertEqual(
                set(solution.characteristic_values.values()),
                {CHARACTERISTIC_VALUES[case_id]},
                case_id,
            )

    def test_residuals_are_certified(self):
        for case_id, case in _cases().items():
            differential_sum = case.differential_sum()
            solution = extend(
                differential_sum,
                case.seed,
                12,
            )
            orders = list(solution.residual_orders.values())

            self.assertNotIn(None, orders, case_id)
            self.assertTrue(
                all(a > b for a, b in zip(orders, orders[1:])),
                f"{case_id}: residual orders {orders}",
            )
            for number_of_slots, order in enumerate(orders, start=1):
                self.assertEqual(
                    residual_order(
                        differential_sum,
                        solution.prefix(number_of_slots),
                    ).value,
                    order,
                    f"{case_id}: residual after {number_of_slots} slots",
                )

    def test_invalid_equation(self):
        case = _cases()["P5-A-7"]

        self.assertRaises(
            ValueError,
            dataclasses.replace,
            case,
            equation="P6",
        )


class TestCaseSerialization(unittest.TestCase):
    def test_json(self):
        for case in corpus():
            self.assertEqual(
                CorpusCase.from_json(json.loads(json.dumps(case.to_json()))),
                case,
                case.case_id,
            )

    def test_files(self):
        cases = corpus()[:3]

        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / "cases.json"
            dump_cases(cases, path)
            self.assertEqual(
                load_cases(path),
                cases,
            )

            path.write_text(
                json.dumps([case.to_json() for case in cases]),
                encoding="utf-8",
            )
            self.assertEqual(
                load_cases(str(path)),
                cases,
            )

            for text in ("{", '{"cases": 3}', '[{"case_id": "x"}]'):
                path.write_text(text, encoding="utf-8")
                self.assertRaises(
                    ValueError,
                    load_cases,
                    path,
                )


class TestCorpusCheck(unittest.TestCase):
    def test_every_case_passes(self):
        outcomes = run_corpus_check()

        self.assertEqual(
            [outcome.case_id for outcome in outcomes],
            sorted(SEED_GOLDENS),
        )
        for outcome in outcomes:
            self.assertTrue(
                outcome.passed,
                f"{outcome.case_id}: {outcome.message}",
            )
            self.assertEqual(
                outcome.report.gevrey_candidates,
                (Fraction(0), Fraction(1)),
            )
            self.assertEqual(
                outcome.report.positive_slopes,
                (Fraction(1),),
            )

    def test_worker_processes(self):
        cases = [case for case in corpus() if case.case_id.startswith("P3")]
        outcomes = run_corpus_check(
            cases,
            jobs=2,
        )

        self.assertEqual(
            [(outcome.case_id, outcome.passed) for outcome in outcomes],
            [(case.case_id, True) for case in cases],
        )

    def test_mismatching_expectations(self):
        case = dataclasses.replace(
            _cases()["P5-A-7"],
            expected_positive_slopes=(Fraction(1, 2),),
        )
        (outcome,) = run_corpus_check([case])

        self.assertFalse(outcome.passed)
        self.assertEqual(
            outcome.message,
            "Mismatching positive slopes",
        )
        self.assertEqual(
            case.mismatches(outcome.report),
            ["positive slopes"],
        )

    def test_euler_supports(self):
        cases = _cases()

        self.assertEqual(
            set(cases["P3-A-13-l4"].expected_euler_support),
            {(0, -1), (1, 2), (2, 1)},
        )
        self.assertEqual(
            set(cases["P5-A-7"].expected_euler_support),
            {(0, -2), (1, 1), (2, 0)},
        )

        report = cases["P3-A-13-l4"].classify()
        self.assertEqual(
            set(report.support),
            set(cases["P3-A-13-l4"].expected_euler_support),
        )
        self.assertNotEqual(
            set(report.support),
            set(report.weighted_support),
        )

        case = dataclasses.replace(
            cases["P3-A-13-l4"],
            expected_euler_support=cases["P3-A-13-l4"].expected_support,
        )
        (outcome,) = run_corpus_check([case])

        self.assertFalse(outcome.passed)
        self.assertEqual(
            outcome.message,
            "Mismatching Euler support",
        )

    def test_failing_pipeline(self):
        case = dataclasses.replace(
            _cases()["P5-A-6-l2"],
            seed=SeedExpansion({-1: 2, -2: -5}, branch=2),
        )
        (outcome,) = run_corpus_check([case])

        self.assertFalse(outcome.passed)
        self.assertIsNone(outcome.report)
        self.assertTrue(
            outcome.message.startswith("SeedInconsistent"),
            outcome.message,
        )

    def test_invalid_arguments(self):
        self.assertRaises(
            ValueError,
            run_corpus_check,
            [],
            0,
        )


if __name__ == "__main__":
    unittest.main()
