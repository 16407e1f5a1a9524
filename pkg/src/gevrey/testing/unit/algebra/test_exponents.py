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

from gevrey.algebra.exponents import (
    RamifiedExponent,
    exponent_value,
)


class TestRamifiedExponent(unittest.TestCase):
    def test_representations_compare_by_value(self):
        self.assertEqual(
            RamifiedExponent(2, 2),
            RamifiedExponent(1),
        )
        self.assertEqual(
            RamifiedExponent(2, 2),
            1,
        )
        self.assertEqual(
            hash(RamifiedExponent(-3, 6)),
            hash(Fraction(-1, 2)),
        )
        self.assertLess(
            RamifiedExponent(-1, 2),
            0,
        )
        self.assertEqual(
            sorted([RamifiedExponent(1, 3), RamifiedExponent(-1), RamifiedExponent(1, 2)]),
            [RamifiedExponent(-1), RamifiedExponent(1, 3), RamifiedExponent(1, 2)],
        )

    def test_grid_placement(self):
        exponent = RamifiedExponent.from_value(
            Fraction(-1, 2),
            4,
        )

        self.assertEqual(
            (exponent.numerator, exponent.ramification),
            (-2, 4),
        )
        self.assertEqual(
            str(exponent),
            "-2/4",
        )
        self.assertEqual(
            RamifiedExponent.from_value("3/2").ramification,
            2,
        )
        self.assertRaises(
            ValueError,
            RamifiedExponent.from_value,
            Fraction(1, 3),
            2,
        )
        self.assertRaises(
            ValueError,
            RamifiedExponent(1, 2).lift,
            3,
        )
        self.assertEqual(
            RamifiedExponent(1, 2).lift(6).numerator,
            3,
        )

    def test_arithmetic_on_common_grid(self):
        result = RamifiedExponent(1, 2) + RamifiedExponent(1, 3)

        self.assertEqual(
            (result.numerator, result.ramification),
            (5, 6),
        )
        self.assertEqual(
            RamifiedExponent(1, 2) - 1,
            Fraction(-1, 2),
        )
        self.assertEqual(
            1 - RamifiedExponent(1, 2),
            Fraction(1, 2),
        )
        self.assertEqual(
            -RamifiedExponent(1, 2),
            Fraction(-1, 2),
        )

    def test_exponent_value(self):
        self.assertEqual(
            exponent_value(RamifiedExponent(-4, 2)),
            -2,
        )
        self.assertEqual(
            exponent_value("-1/2"),
            Fraction(-1, 2),
        )
        self.assertRaises(
            TypeError,
            exponent_value,
            "z",
        )


if __name__ == "__main__":
    unittest.main()
