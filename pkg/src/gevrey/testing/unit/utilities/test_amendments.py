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

from fractions import Fraction
import unittest
import warnings

from gevrey.utilities.amendments import (
    amend_integer,
    amend_natural_number,
    amend_rational,
    find_least_common_multiplier,
)


class TestAmendInteger(unittest.TestCase):
    def test_no_amendment_needed(self):
        try:
            result = amend_integer(integer=3)
        except Exception as e:
            self.fail(f"Threw exception when no amendment was needed: {e}")
        self.assertEqual(
            result,
            3,
        )

    def test_exact_casts_only(self):
        self.assertEqual(
            amend_integer(integer=Fraction(4, 2)),
            2,
        )
        self.assertEqual(
            amend_integer(integer="-7"),
            -7,
        )
        self.assertRaises(
            TypeError,
            amend_integer,
            integer=Fraction(3, 2),
        )
        self.assertEqual(
            amend_integer(
                integer=Fraction(3, 2),
                value_on_cast_error=5,
            ),
            5,
        )

    def test_booleans_are_mismatches(self):
        self.assertRaises(
            TypeError,
            amend_integer,
            integer=True,
            type_mismatch_action="error",
        )

    def test_value_violation(self):
        self.assertRaises(
            ValueError,
            amend_integer,
            integer=0,
            minimum_value=1,
            value_violation_action="error",
        )
        self.assertEqual(
            amend_integer(
                integer=20,
                maximum_value=9,
                value_violation_action="clamp",
            ),
            9,
        )
        with self.assertWarns(UserWarning):
            amend_integer(
                integer=-1,
                minimum_value=0,
                value_violation_action="warning",
            )

    def test_invalid_actions(self):
        self.assertRaises(
            ValueError,
            amend_integer,
            integer=1,
            type_mismatch_action="ignore",
        )
        self.assertRaises(
            ValueError,
            amend_integer,
            integer=1,
            value_violation_action="wrap",
        )


class TestAmendNaturalNumber(unittest.TestCase):
    def test_natural_numbers(self):
        self.assertEqual(
            amend_natural_number(natural_number=12),
            12,
        )
        self.assertRaises(
            ValueError,
            amend_natural_number,
            natural_number=0,
        )
        with self.assertWarns(UserWarning):
            result = amend_natural_number(natural_number="2")
        self.assertEqual(
            result,
            2,
        )


class TestAmendRational(unittest.TestCase):
    def test_exact_values(self):
        for value, expected_result in (
            (3, Fraction(3)),
            (Fraction(-6, 4), Fraction(-3, 2)),
            ("-3/2", Fraction(-3, 2)),
            (" 5/10 ", Fraction(1, 2)),
        ):
            with warnings.catch_warnings():
                warnings.simplefilter("error")
                self.assertEqual(
                    amend_rational(rational=value),
                    expected_result,
                )

    def test_floats_warn(self):
        with self.assertWarns(UserWarning):
            result = amend_rational(rational=0.5)
        self.assertEqual(
            result,
            Fraction(1, 2),
        )
        self.assertRaises(
            ValueError,
            amend_rational,
            rational=float("inf"),
        )

    def test_failed_casts(self):
        for value in (None, "x", True, [1]):
            self.assertRaises(
                TypeError,
                amend_rational,
                rational=value,
            )
        self.assertRaises(
            TypeError,
            amend_rational,
            rational="1/2",
            type_mismatch_action="error",
        )


class TestLeastCommonMultiplierSearch(unittest.TestCase):
    def test_single_common_multiplier_search(self):
        self.assertRaises(
            ValueError,
            find_least_common_multiplier,
            multiples=(0,),
        )
        self.assertEqual(
            find_least_common_multiplier(),
            1,
        )
        self.assertEqual(
            find_least_common_multiplier(multiples=(2,)),
            2,
        )

    def test_multiple_common_multiplier_search(self):
        self.assertRaises(
            ValueError,
            find_least_common_multiplier,
            multiples=(2, 3, -1),
        )
        self.assertRaises(
            TypeError,
            find_least_common_multiplier,
            multiples=1,
        )
        self.assertEqual(
            find_least_common_multiplier(multiples=(2, 3, 4)),
            12,
        )
        self.assertEqual(
            find_least_common_multiplier(multiples=(1, 1, 2)),
            2,
        )


if __name__ == "__main__":
    unittest.main()
