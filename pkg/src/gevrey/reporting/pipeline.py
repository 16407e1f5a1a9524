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
import logging
from typing import (
    Literal,
    Mapping,
)

from gevrey.algebra.gaussian_rationals import amend_gaussian_rational
from gevrey.differential.differential_sums import DifferentialSum
from gevrey.differential.variations import change_variable
from gevrey.polygons.newton_polygons import (
    GEVREY_INTERPRETATION,
    gevrey_candidates,
    polygon,
)
from gevrey.polygons.operators import (
    build_weighted_operator,
    support,
)
from gevrey.reporting.reports import ClassificationReport
from gevrey.solving.extension import (
    MINIMUM_GROWTH_PROFILE_LENGTH,
    ExtendedSolution,
    SeedExpansion,
    extend,
    growth_profile,
)
from gevrey.utilities.amendments import amend_natural_number

logger = logging.getLogger(__name__)


def _partial_report(
    differential_sum: DifferentialSum,
    solution: ExtendedSolution,
    case_id: str = None,
    citation: str = None,
    parameters: Mapping = None,
) -> ClassificationReport:
    if parameters is None:
        parameters = dict()

    return ClassificationReport(
        case_id=case_id,
        citation=citation,
        equation=str(differential_sum),
        parameters={
            name: amend_gaussian_rational(
                gaussian_rational=value,
                name=f"Parameter {name}",
                warning_stack_level=4,
            )
            for name, value in parameters.items()
        },
        seed=solution.seed,
        coefficients=tuple(solution.coefficients()),
        characteristic_values=tuple(solution.characteristic_values.items()),
        shift=solution.shift,
        residual_leading_exponent=solution.residual_leading_exponent,
    )


def solve(
    differential_sum: DifferentialSum,
    seed: SeedExpansion,
    number_of_terms: int,
    on_seed_mismatch: Literal[
        "error",
        "warning",
    ] = None,
    case_id: str = None,
    citation: str = None,
    parameters: Mapping = None,
) -> ClassificationReport:
    """Extends a seed and reports the coefficients, without a Newton polygon.

    Raises whatever `extend` raises.
    """
    solution = extend(
        differential_sum,
        seed,
        number_of_terms,
        on_seed_mismatch=on_seed_mismatch,
        warning_stack_level=3,
    )

    return _partial_report(
        differential_sum,
        solution,
        case_id=case_id,
        citation=citation,
        parameters=parameters,
    )


def classify(
    differential_sum: DifferentialSum,
    seed: SeedExpansion,
    number_of_terms: int,
    variable_power: int = None,
    on_seed_mismatch: Literal[
        "error",
        "warning",
    ] = None,
    case_id: str = None,
    citation: str = None,
    parameters: Mapping = None,
) -> ClassificationReport:
    """Runs the whole pipeline on one seed.

    The seed is extended in z. When `variable_power` m is greater than 1, both the
    equation and the extended series are then rewritten in t with z = t^m, so that
    the operator is built on a series with integer exponents. The first variation
    on the series gives the operator, whose support gives the Newton polygon and
    the candidate Gevrey orders.

    Parameters
    ----------
    differential_sum : DifferentialSum
        The equation F = 0, in z.
    seed : SeedExpansion
        Prescribed leading terms.
    number_of_terms : int
        Number of slots to solve below the lowest prescribed exponent.
    variable_power : int
        The power m of the substitution z = t^m. Defaults to 1 (no substitution).
    on_seed_mismatch : Literal['error', 'warning']
        Passed to `extend`.
    case_id, citation : str
        Copied into the report.
    parameters : Mapping
        Parameter values the equation was built with, copied into the report.

    Returns
    -------
    ClassificationReport
        The complete report. It carries a growth profile only when at least 20
        coefficients were computed.

    Raises
    ------
    SeedInconsistent, ResonanceError, DegenerateLeadingCoefficient
        From extending the seed or building the operator.

    UncertifiedLeading
        When an operator coefficient isn't certified to be nonzero.
    """
    if variable_power is None:
        variable_power = 1
    variable_power = amend_natural_number(
        natural_number=variable_power,
        name="Variable power",
        warning_stack_level=3,
    )

    solution = extend(
        differential_sum,
        seed,
        number_of_terms,
        on_seed_mismatch=on_seed_mismatch,
        warning_stack_level=3,
    )
    report = _partial_report(
        differential_sum,
        solution,
        case_id=case_id,
        citation=citation,
        parameters=parameters,
    )

    equation = differential_sum
    series = solution.series
    monomial_factor = Fraction(0)
    if variable_power > 1:
        equation, monomial_factor = change_variable(differential_sum, variable_power)
        series = series.substitute_power(variable_power)
        logger.debug(
            "Substituted z = t^%d, the equation is multiplied by t^%s: %s",
            variable_power,
            monomial_factor,
            equation,
        )

    weighted = build_weighted_operator(equation, series)
    euler = weighted.to_euler_basis()
    logger.debug("Operator on the series: %s", euler)

    newton_polygon = polygon(support(euler))
    candidates = gevrey_candidates(newton_polygon)

    growth = tuple()
    if len(report.coefficients) >= MINIMUM_GROWTH_PROFILE_LENGTH:
        growth = tuple(
            (point.s, point.log_magnitude) for point in growth_profile(solution)
        )

    return dataclasses.replace(
        report,
        variable_power=variable_power,
        monomial_factor=monomial_factor,
        support=tuple(newton_polygon.support),
        weighted_support=tuple(support(weighted)),
        hull_vertices=newton_polygon.vertices,
        positive_slopes=newton_polygon.positive_slopes,
        gevrey_candidates=tuple(sorted(candidates)),
        interpretation=GEVREY_INTERPRETATION,
        growth=growth,
    )
