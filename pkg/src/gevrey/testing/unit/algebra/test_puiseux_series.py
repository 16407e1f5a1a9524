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
import random
import unittest

from gevrey.algebra.gaussian_rationals import GaussianRational
from gevrey.algebra.puiseux_series import (
    PuiseuxSeries,
    euler_apply,
    format_series,
    series_diff,
    series_mul,
)


def _random_series(
    generator: random.Random,
    ramification: int,
) -> PuiseuxSeries:
    return PuiseuxSeries(
        terms={
            Fraction(generator.randint(-6, 3), ramification): GaussianRational(
                generator.randint(-4, 4),
                generator.randint(-2, 2),
            )
            for _ in range(generator.randint(1, 5))
        },
        ramification=ramification,
    )


class TestPuiseuxSeries(unittest.TestCase):
    def test_grid(self):
        series = PuiseuxSeries({Fraction(1, 2): 1, -1: 2})

        self.assertEqual(
            series.ramification,
            2,
        )
        self.assertEqual(
            series.leading_exponent,
            Fraction(1, 2),
        )
        self.assertEqual(
            series.coefficient(-1),
            2,
        )
        self.assertEqual(
            series.coefficient(Fraction(-1, 3)),
            0,
        )
        self.assertEqual(
            len(PuiseuxSeries({0: 1, -1: 0})),
            1,
        )

    def test_equality_ignores_the_grid(self):
        a = PuiseuxSeries(
            {0: 1, -1: 3},
            ramification=4,
        )
        b = PuiseuxSeries({0: 1, -1: 3})

        self.assertEqual(
            a,
            b,
        )
        self.assertEqual(
            hash(a),
            hash(b),
        )
        self.assertNotEqual(
            b,
            b.truncate(-1),
        )

    def test_truncation(self):
        series = PuiseuxSeries({0: 1, -1: 1, -2: 1}).truncate(-1)

        self.assertFalse(series.is_exact())
        self.assertEqual(
            series.valid_below,
            -1,
        )
        self.assertEqual(
            len(series),
            2,
        )
        self.assertRaises(
            ValueError,
            series.coefficient,
            -2,
        )
        self.assertEqual(
            series.exact(),
            PuiseuxSeries({0: 1, -1: 1}),
        )
        self.assertEqual(
            series.truncate(1).valid_below,
            1,
        )

    def test_certified_product(self):
        a = PuiseuxSeries(
            {0: 1, -1: 1},
            valid_below=-2,
        )
        b = PuiseuxSeries(
            {1: 1},
            valid_below=-1,
        )
        product = a * b

        self.assertEqual(
            product.valid_below,
            -1,
        )
        self.assertEqual(
            product.exact(),
            PuiseuxSeries({1: 1, 0: 1}),
        )
        self.assertEqual(
            product.coefficient(-1),
            0,
        )
        self.assertRaises(
            ValueError,
            product.coefficient,
            -2,
        )

    def test_zero_products(self):
        b = PuiseuxSeries(
            {1: 1},
            valid_below=-1,
        )

        self.assertTrue((PuiseuxSeries.zero() * b).is_exact())
        self.assertTrue((b * 0).is_exact())

        product = series_mul(
            PuiseuxSeries.zero(valid_below=-3),
            PuiseuxSeries.monomial(1, 2),
        )
        self.assertTrue(product.is_zero())
        self.assertEqual(
            product.valid_below,
            -1,
        )

    def test_ring_properties(self):
        generator = random.Random(2718)

        for _ in range(100):
            ramification = generator.choice((1, 2, 3))
            a, b, c = (_random_series(generator, ramification) for _ in range(3))

            self.assertEqual(
                (a * b) * c,
                a * (b * c),
            )
            self.assertEqual(
                a * (b + c),
                a * b + a * c,
            )
            self.assertEqual(
                a * b,
                b * a,
            )
            self.assertEqual(
                series_diff(a * b),
                series_diff(a) * b + a * series_diff(b),
            )
            self.assertEqual(
                euler_apply(a),
                series_diff(a).multiply_by_monomial(1),
            )

    def test_derivatives(self):
        self.assertEqual(
            series_diff(PuiseuxSeries({Fraction(1, 2): 1, 0: 5})),
            PuiseuxSeries({Fraction(-1, 2): Fraction(1, 2)}),
        )
        self.assertEqual(
            series_diff(PuiseuxSeries({0: 1}, valid_below=-2)).valid_below,
            -3,
        )
        self.assertEqual(
            euler_apply(PuiseuxSeries({-2: 1, 0: 7})),
            PuiseuxSeries({-2: -2}),
        )

    def test_substitute_power(self):
        series = PuiseuxSeries(
            {Fraction(1, 2): 3, -1: 1},
            valid_below=Fraction(-3, 2),
        ).substitute_power(2)

        self.assertEqual(
            series.ramification,
            1,
        )
        self.assertEqual(
            series.exact(),
            PuiseuxSeries({1: 3, -2: 1}),
        )
        self.assertEqual(
            series.valid_below,
            -3,
        )

    def test_formatting(self):
        series = PuiseuxSeries(
            {1: 1, 0: -2, Fraction(-1, 2): GaussianRational.I},
            valid_below=-1,
        )

        self.assertEqual(
            format_series(series),
            "z - 2 + i*z^(-1/2) + O(z^(-1))",
        )
        self.assertEqual(
            format_series(
                PuiseuxSeries({2: -1}),
                variable="t",
            ),
            "-t^(2)",
        )
        self.assertEqual(
            str(PuiseuxSeries.zero()),
            "0",
        )


if __name__ == "__main__":
    unittest.main()
