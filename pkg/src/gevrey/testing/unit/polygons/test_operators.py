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

from gevrey.algebra.puiseux_series import PuiseuxSeries
from gevrey.corpus.painleve import (
    PRESETS,
    painleve_iii,
    painleve_v,
)
from gevrey.differential.parsing import parse_differential_sum
from gevrey.errors import (
    DegenerateLeadingCoefficient,
    UncertifiedLeading,
)
from gevrey.polygons.newton_polygons import polygon
from gevrey.polygons.operators import (
    OperatorOnSeries,
    build_L0,
    build_weighted_operator,
    from_euler_basis,
    support,
    to_euler_basis,
)
from gevrey.solving.extension import (
    SeedExpansion,
    extend,
)


def _monomial(
    coefficient,
    exponent,
) -> PuiseuxSeries:
    return PuiseuxSeries.monomial(coefficient, exponent)


class TestOperatorOnSeries(unittest.TestCase):
    def test_basis_changes(self):
        # z^2·d^2/dz^2 + z·d/dz = D^2
        plain = OperatorOnSeries(
            {
                2: _monomial(1, 2),
                1: _monomial(1, 1),
            },
        )
        weighted = plain.to_weighted_basis()
        euler = plain.to_euler_basis()

        self.assertEqual(
            weighted,
            OperatorOnSeries(
                {2: _monomial(1, 0), 1: _monomial(1, 0)},
                basis="weighted",
            ),
        )
        self.assertEqual(
            euler,
            OperatorOnSeries(
                {2: _monomial(1, 0)},
                basis="euler",
            ),
        )
        self.assertEqual(
            from_euler_basis(euler),
            weighted,
        )
        self.assertEqual(
            euler.to_weighted_basis(),
            weighted,
        )

    def test_round_trip(self):
        weighted = OperatorOnSeries(
            {
                3: _monomial(Fraction(1, 2), -1),
                1: _monomial(-2, 3),
                0: PuiseuxSeries({Fraction(1, 2): 5, 0: 1}),
            },
            basis="weighted",
        )

        self.assertEqual(
            from_euler_basis(to_euler_basis(weighted)),
            weighted,
        )
        self.assertEqual(
            weighted.ramification,
            2,
        )

    def test_apply_agrees_in_every_basis(self):
        plain = OperatorOnSeries(
            {
                2: _monomial(3, 1),
                1: _monomial(-1, 0),
                0: _monomial(2, -2),
            },
        )
        series = PuiseuxSeries({Fraction(5, 2): 1, -1: 4})

        expected_result = plain.apply(series)
        for operator in (plain.to_weighted_basis(), plain.to_euler_basis()):
            self.assertEqual(
                operator.apply(series),
                expected_result,
                operator.basis,
            )

    def test_exact_zero_coefficients_are_dropped(self):
        operator = OperatorOnSeries(
            {
                1: PuiseuxSeries.zero(),
                0: PuiseuxSeries.zero(valid_below=-1),
            },
            basis="weighted",
        )

        self.assertEqual(
            list(operator.coefficients),
            [0],
        )

    def test_invalid_arguments(self):
        self.assertRaises(
            ValueError,
            OperatorOnSeries,
            {0: _monomial(1, 0)},
            basis="fourier",
        )
        self.assertRaises(
            ValueError,
            OperatorOnSeries,
            {-1: _monomial(1, 0)},
        )
        self.assertRaises(
            TypeError,
            OperatorOnSeries,
            {0: 1},
        )
        self.assertRaises(
            ValueError,
            to_euler_basis,
            OperatorOnSeries({0: _monomial(1, 0)}),
        )
        self.assertRaises(
            ValueError,
            from_euler_basis,
            OperatorOnSeries({0: _monomial(1, 0)}, basis="weighted"),
        )


class TestSupport(unittest.TestCase):
    def test_weighted_and_euler_polygons_agree(self):
        weighted = OperatorOnSeries(
            {
                2: _monomial(1, -1),
                0: _monomial(3, 2),
            },
            basis="weighted",
        )
        euler = to_euler_basis(weighted)

        self.assertEqual(
            support(weighted),
            [(0, -2), (2, 1)],
        )
        self.assertEqual(
            support(euler),
            [(0, -2), (1, 1), (2, 1)],
        )
        self.assertEqual(
            polygon(support(euler)).vertices,
            polygon(support(weighted)).vertices,
        )

    def test_uncertified_leading(self):
        operator = OperatorOnSeries(
            {
                1: _monomial(1, 0),
                0: PuiseuxSeries.zero(valid_below=-3),
            },
            basis="weighted",
        )

        with self.assertRaises(UncertifiedLeading) as context:
            support(operator)
        self.assertEqual(
            context.exception.order,
            0,
        )

    def test_plain_basis(self):
        self.assertRaises(
            ValueError,
            support,
            OperatorOnSeries({0: _monomial(1, 0)}),
        )


class TestBuildOperator(unittest.TestCase):
    def test_painleve_supports(self):
        for differential_sum, seed, expected_result in (
            (
                painleve_v(PRESETS["P5-A"]),
                SeedExpansion({-1: 2}),
                [(0, -1), (1, 1), (2, 1)],
            ),
            (
                painleve_v(PRESETS["P5-A"]),
                SeedExpansion({0: -1}),
                [(0, -2), (1, 0), (2, 0)],
            ),
            (
                painleve_v(PRESETS["P5-B"]),
                SeedExpansion({1: 1}),
                [(0, -4), (1, -2), (2, -2)],
            ),
            (
                painleve_iii(PRESETS["P3-A"]),
                SeedExpansion({0: 2}),
                [(0, -1), (1, 1), (2, 1)],
            ),
        ):
            series = extend(
                differential_sum,
                seed,
                4,
            ).series
            weighted = build_weighted_operator(
                differential_sum,
                series,
            )
            euler = build_L0(
                differential_sum,
                series,
            )

            self.assertEqual(
                support(weighted),
                expected_result,
                seed.to_text(),
            )
            self.assertEqual(
                euler.basis,
                "euler",
            )
            self.assertEqual(
                polygon(support(euler)).vertices,
                polygon(support(weighted)).vertices,
                seed.to_text(),
            )

    def test_degenerate_leading_coefficient(self):
        self.assertRaises(
            DegenerateLeadingCoefficient,
            build_weighted_operator,
            parse_differential_sum("w'^2 + w"),
            _monomial(1, 0),
        )


if __name__ == "__main__":
    unittest.main()
