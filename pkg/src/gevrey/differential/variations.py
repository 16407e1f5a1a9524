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
from typing import (
    Dict,
    Mapping,
    Tuple,
)

from gevrey.algebra.puiseux_series import (
    PuiseuxSeries,
    series_add,
    series_diff,
    series_mul,
)
from gevrey.differential.differential_sums import (
    DerivativePowers,
    DifferentialSum,
)
from gevrey.utilities.amendments import (
    amend_integer,
    amend_natural_number,
)

BASES = (
    "plain",
    "weighted",
    "euler",
)


def amend_basis(basis: str) -> str:
    if basis is None:
        return "plain"
    if basis not in BASES:
        raise ValueError(f"Invalid basis {repr(basis)}, expected one of {BASES}")

    return basis


class LinearDifferentialOperator:
    """A linear operator Σ_l c_l·∂_l whose coefficients are differential sums.

    The basis decides what ∂_l is: d^l/dz^l for 'plain', z^l·d^l/dz^l for
    'weighted' and D^l = (z·d/dz)^l for 'euler'.

    Parameters
    ----------
    coefficients : Mapping[int, DifferentialSum]
        Order to coefficient. Zero coefficients are dropped.
    basis : str
        One of 'plain', 'weighted' or 'euler'. Defaults to 'plain'.
    """

    __slots__ = (
        "_coefficients",
        "_basis",
    )

    def __init__(
        self,
        coefficients: Mapping[int, DifferentialSum],
        basis: str = None,
    ):
        self._basis = amend_basis(basis)
        self._coefficients = dict()
        for order, coefficient in coefficients.items():
            order = amend_integer(
                integer=order,
                name="Operator order",
                type_mismatch_action="error",
                minimum_value=0,
                value_violation_action="error",
            )
            if not isinstance(coefficient, DifferentialSum):
                raise TypeError(
                    f"Operator coefficient {repr(coefficient)} isn't a DifferentialSum"
                )
            if not coefficient.is_zero():
                self._coefficients[order] = coefficient

    @property
    def basis(self) -> str:
        return self._basis

    @property
    def order(self) -> int:
        return max(self._coefficients, default=0)

    @property
    def coefficients(self) -> Dict[int, DifferentialSum]:
        return {order: self._coefficients[order] for order in sorted(self._coefficients)}

    def coefficient(
        self,
        order: int,
    ) -> DifferentialSum:
        return self._coefficients.get(
            order,
            DifferentialSum(),
        )

    def to_weighted_basis(self) -> "LinearDifferentialOperator":
        """Rewrites d^l/dz^l as z^(-l)·(z^l·d^l/dz^l)."""
        if self._basis == "weighted":
            return self
        if self._basis != "plain":
            raise ValueError(f"Can't rewrite the {self._basis} basis symbolically")

        return LinearDifferentialOperator(
            {
                order: coefficient.multiply_by_independent_power(-order)
                for order, coefficient in self._coefficients.items()
            },
            basis="weighted",
        )

    def __eq__(self, other):
        if not isinstance(other, LinearDifferentialOperator):
            return NotImplemented

        return (
            self._basis == other._basis and self._coefficients == other._coefficients
        )

    def __hash__(self):
        return hash((self._basis, frozenset(self._coefficients.items())))

    def __repr__(self):
        return f"LinearDifferentialOperator({str(self)!r}, basis={self._basis!r})"

    def __str__(self):
        variable = "z"
        for coefficient in self._coefficients.values():
            variable = coefficient.variable
            break

        parts = list()
        for order in sorted(self._coefficients, reverse=True):
            parts.append(
                f"({self._coefficients[order]})"
                f"{_format_operator_power(order, self._basis, variable)}"
            )
        if not parts:
            return "0"

        return " + ".join(parts)


def _format_operator_power(
    order: int,
    basis: str,
    variable: str,
) -> str:
    if order == 0:
        return ""
    if basis == "euler":
        return "*D" if order == 1 else f"*D^{order}"

    if order == 1:
        derivative = f"d/d{variable}"
        weight = variable
    else:
        derivative = f"d^{order}/d{variable}^{order}"
        weight = f"{variable}^{order}"
    if basis == "weighted":
        return f"*{weight}*{derivative}"

    return f"*{derivative}"


def first_variation(differential_sum: DifferentialSum) -> LinearDifferentialOperator:
    """The linearization Σ_l (∂F/∂w^(l))·d^l/dz^l of a differential sum."""
    if not isinstance(differential_sum, DifferentialSum):
        raise TypeError(f"{repr(differential_sum)} isn't a DifferentialSum")

    return LinearDifferentialOperator(
        {
            order: differential_sum.partial_derivative(order)
            for order in range(differential_sum.order + 1)
        },
        basis="plain",
    )


class _SeriesPowers:
    def __init__(
        self,
        series: PuiseuxSeries,
    ):
        self._derivatives = [series]
        self._powers: Dict[Tuple[int, int], PuiseuxSeries] = dict()

    def derivative(
        self,
        order: int,
    ) -> PuiseuxSeries:
        while len(self._derivatives) <= order:
            self._derivatives.append(series_diff(self._derivatives[-1]))

        return self._derivatives[order]

    def power(
        self,
        order: int,
        multiplicity: int,
    ) -> PuiseuxSeries:
        key = (order, multiplicity)
        if key not in self._powers:
            if multiplicity == 1:
                self._powers[key] = self.derivative(order)
            else:
                self._powers[key] = series_mul(
                    self.power(order, multiplicity - 1),
                    self.derivative(order),
                )

        return self._powers[key]

    def product(
        self,
        derivative_powers: DerivativePowers,
    ) -> PuiseuxSeries:
        result = None
        for order, multiplicity in derivative_powers:
            factor = self.power(order, multiplicity)
            result = factor if result is None else series_mul(result, factor)

        return result


def evaluate_on_series(
    differential_sum: DifferentialSum,
    series: PuiseuxSeries,
) -> PuiseuxSeries:
    """Substitutes a series for w, and its term-wise derivatives for w^(j).

    The result is certified as far as the arithmetic on `series` allows.

    Parameters
    ----------
    differential_sum : DifferentialSum
        The sum to evaluate.
    series : PuiseuxSeries
        The series to substitute.

    Returns
    -------
    PuiseuxSeries
        The value of the sum.
    """
    if not isinstance(differential_sum, DifferentialSum):
        raise TypeError(f"{repr(differential_sum)} isn't a DifferentialSum")
    if not isinstance(series, PuiseuxSeries):
        raise TypeError(f"{repr(series)} isn't a PuiseuxSeries")

    # Monomials sharing their w-part are evaluated as (polynomial in z)·(w-part).
    grouped: Dict[DerivativePowers, Dict[Fraction, object]] = dict()
    for (z_exponent, derivative_powers), coefficient in differential_sum.terms().items():
        grouped.setdefault(derivative_powers, dict())[z_exponent] = coefficient

    powers = _SeriesPowers(series)
    result = PuiseuxSeries.zero(ramification=series.ramification)
    for derivative_powers in sorted(grouped):
        polynomial = PuiseuxSeries(
            terms=grouped[derivative_powers],
            ramification=series.ramification,
        )
        if derivative_powers:
            term = series_mul(
                polynomial,
                powers.product(derivative_powers),
            )
        else:
            term = polynomial
        result = series_add(result, term)

    return result


def evaluate_operator(
    operator: LinearDifferentialOperator,
    series: PuiseuxSeries,
) -> Dict[int, PuiseuxSeries]:
    """Evaluates every coefficient of `operator` on `series`."""
    return {
        order: evaluate_on_series(coefficient, series)
        for order, coefficient in operator.coefficients.items()
    }


def apply_first_variation(
    differential_sum: DifferentialSum,
    series: PuiseuxSeries,
    increment: PuiseuxSeries,
) -> PuiseuxSeries:
    """Computes Σ_l (∂F/∂w^(l))(w)·h^(l) for w = `series` and h = `increment`."""
    if not isinstance(increment, PuiseuxSeries):
        raise TypeError(f"{repr(increment)} isn't a PuiseuxSeries")

    result = PuiseuxSeries.zero(ramification=series.ramification)
    derivative = increment
    coefficients = evaluate_operator(
        first_variation(differential_sum),
        series,
    )
    for order in range(differential_sum.order + 1):
        if order > 0:
            derivative = series_diff(derivative)
        if order in coefficients:
            result = series_add(
                result,
                series_mul(
                    coefficients[order],
                    derivative,
                ),
            )

    return result


def partial_highest_nonzero(
    differential_sum: DifferentialSum,
    series: PuiseuxSeries,
) -> bool:
    """Whether ∂F/∂w^(n), n the order of F, has a certified nonzero value on w."""
    if differential_sum.is_independent_of_w():
        return False
    partial = differential_sum.partial_derivative(differential_sum.order)

    return not evaluate_on_series(partial, series).is_zero()


def change_variable(
    differential_sum: DifferentialSum,
    power: int,
) -> Tuple[DifferentialSum, Fraction]:
    """Substitutes z = t^`power` into a differential sum.

    Derivatives follow d/dz = (1/(m·t^(m-1)))·d/dt, iterated with the chain rule.
    The substituted sum is multiplied by t^N, with N the smallest non-negative
    number making every t exponent non-negative.

    Parameters
    ----------
    differential_sum : DifferentialSum
        Sum in z.
    power : int
        The power m ≥ 1.

    Returns
    -------
    Tuple[DifferentialSum, Fraction]
        The sum in t multiplied by t^N, and N. The plain substituted sum equals
        t^(-N) times the returned one.
    """
    power = amend_natural_number(
        natural_number=power,
        name="Power",
        warning_stack_level=3,
    )
    if power == 1:
        return differential_sum, Fraction(0)

    step = DifferentialSum(
        monomials=((Fraction(1, power), 1 - power, None),),
        variable="t",
    )
    derivatives = [DifferentialSum.dependent(0, variable="t")]
    for _ in range(differential_sum.order):
        derivatives.append(step * derivatives[-1].total_derivative())

    result = DifferentialSum(variable="t")
    for (z_exponent, derivative_powers), coefficient in differential_sum.terms().items():
        term = DifferentialSum(
            monomials=((coefficient, z_exponent * power, None),),
            variable="t",
        )
        for order, multiplicity in derivative_powers:
            term = term * derivatives[order] ** multiplicity
        result = result + term

    shift = max(
        Fraction(0),
        -result.lowest_independent_exponent(),
    )

    return result.multiply_by_independent_power(shift), shift
