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
    List,
    Mapping,
    NamedTuple,
)

from gevrey.algebra.puiseux_series import (
    PuiseuxSeries,
    euler_apply,
    format_series,
    series_add,
    series_diff,
    series_mul,
)
from gevrey.differential.differential_sums import DifferentialSum
from gevrey.differential.variations import (
    amend_basis,
    evaluate_operator,
    first_variation,
    partial_highest_nonzero,
)
from gevrey.errors import (
    DegenerateLeadingCoefficient,
    UncertifiedLeading,
)
from gevrey.polygons.stirling import get_stirling_tables
from gevrey.utilities.amendments import (
    amend_integer,
    find_least_common_multiplier,
)


class SupportPoint(NamedTuple):
    """Point (k, j_{k,0}) of an operator support.

    j0 is the negated leading exponent of the order-k coefficient, so the
    coefficient behaves like z^(-j0).
    """

    k: int
    j0: Fraction


class OperatorOnSeries:
    """A linear differential operator whose coefficients are series.

    All coefficients are lifted to one shared ramification. Coefficients that are
    exactly zero are dropped, zero coefficients with a certified threshold are kept
    since they carry no certified leading term.

    Parameters
    ----------
    coefficients : Mapping[int, PuiseuxSeries]
        Order to coefficient.
    basis : str
        One of 'plain' (d^l/dz^l), 'weighted' (z^l·d^l/dz^l) or 'euler' (D^l).
        Defaults to 'plain'.
    """

    __slots__ = (
        "_coefficients",
        "_basis",
        "_ramification",
    )

    def __init__(
        self,
        coefficients: Mapping[int, PuiseuxSeries],
        basis: str = None,
    ):
        self._basis = amend_basis(basis)

        kept = dict()
        for order, coefficient in coefficients.items():
            order = amend_integer(
                integer=order,
                name="Operator order",
                type_mismatch_action="error",
                minimum_value=0,
                value_violation_action="error",
            )
            if not isinstance(coefficient, PuiseuxSeries):
                raise TypeError(f"Operator coefficient {repr(coefficient)} isn't a series")
            if coefficient.is_zero() and coefficient.is_exact():
                continue
            kept[order] = coefficient

        self._ramification = find_least_common_multiplier(
            coefficient.ramification for coefficient in kept.values()
        )
        self._coefficients = {
            order: kept[order].lift(self._ramification) for order in sorted(kept)
        }

    @property
    def basis(self) -> str:
        return self._basis

    @property
    def ramification(self) -> int:
        return self._ramification

    @property
    def order(self) -> int:
        return max(self._coefficients, default=0)

    @property
    def coefficients(self) -> Dict[int, PuiseuxSeries]:
        return dict(self._coefficients)

    def coefficient(
        self,
        order: int,
    ) -> PuiseuxSeries:
        return self._coefficients.get(
            order,
            PuiseuxSeries.zero(ramification=self._ramification),
        )

    def to_weighted_basis(self) -> "OperatorOnSeries":
        if self._basis == "weighted":
            return self
        if self._basis == "euler":
            return from_euler_basis(self)

        return OperatorOnSeries(
            {
                order: coefficient.multiply_by_monomial(-order)
                for order, coefficient in self._coefficients.items()
            },
            basis="weighted",
        )

    def to_euler_basis(self) -> "OperatorOnSeries":
        if self._basis == "euler":
            return self

        return to_euler_basis(self.to_weighted_basis())

    def apply(
        self,
        series: PuiseuxSeries,
    ) -> PuiseuxSeries:
        """Applies the operator to a series."""
        result = PuiseuxSeries.zero(ramification=series.ramification)
        image = series
        for order in range(self.order + 1):
            if order > 0:
                if self._basis == "euler":
                    image = euler_apply(image)
                else:
                    image = series_diff(image)
            if order not in self._coefficients:
                continue

            term = series_mul(self._coefficients[order], image)
            if self._basis == "weighted":
                term = term.multiply_by_monomial(order)
            result = series_add(result, term)

        return result

    def __eq__(self, other):
        if not isinstance(other, OperatorOnSeries):
            return NotImplemented

        return (
            self._basis == other._basis and self._coefficients == other._coefficients
        )

    def __hash__(self):
        return hash((self._basis, tuple(self._coefficients.items())))

    def __repr__(self):
        return f"OperatorOnSeries({str(self)!r}, basis={self._basis!r})"

    def __str__(self):
        if self._basis == "euler":
            operators = {0: "", 1: "*D"}
            default = "*D^{}"
        elif self._basis == "weighted":
            operators = {0: "", 1: "*z*d/dz"}
            default = "*z^{0}*d^{0}/dz^{0}"
        else:
            operators = {0: "", 1: "*d/dz"}
            default = "*d^{0}/dz^{0}"

        parts = [
            f"({format_series(self._coefficients[order])})"
            f"{operators.get(order, default.format(order))}"
            for order in sorted(self._coefficients, reverse=True)
        ]

        return " + ".join(parts) if parts else "0"


def to_euler_basis(operator: OperatorOnSeries) -> OperatorOnSeries:
    """Rewrites Σ_l b_l·z^l·d^l/dz^l as Σ_k a_k·D^k with a_k = Σ_l b_l·s(l, k)."""
    if operator.basis != "weighted":
        raise ValueError(
            f"Expected an operator in the weighted basis, got {repr(operator.basis)}"
        )

    tables = get_stirling_tables(max(operator.order, 1))
    coefficients: Dict[int, PuiseuxSeries] = dict()
    for order, coefficient in operator.coefficients.items():
        for k, number in enumerate(tables.first_kind_signed_row(order)):
            if number == 0:
                continue
            term = coefficient.scale(number)
            coefficients[k] = (
                term if k not in coefficients else series_add(coefficients[k], term)
            )

    return OperatorOnSeries(
        coefficients,
        basis="euler",
    )


def from_euler_basis(operator: OperatorOnSeries) -> OperatorOnSeries:
    """Rewrites Σ_k a_k·D^k as Σ_l b_l·z^l·d^l/dz^l with b_l = Σ_k a_k·S2(k, l)."""
    if operator.basis != "euler":
        raise ValueError(
            f"Expected an operator in the euler basis, got {repr(operator.basis)}"
        )

    tables = get_stirling_tables(max(operator.order, 1))
    coefficients: Dict[int, PuiseuxSeries] = dict()
    for k, coefficient in operator.coefficients.items():
        for order, number in enumerate(tables.second_kind_row(k)):
            if number == 0:
                continue
            term = coefficient.scale(number)
            coefficients[order] = (
                term
                if order not in coefficients
                else series_add(coefficients[order], term)
            )

    return OperatorOnSeries(
        coefficients,
        basis="weighted",
    )


def build_weighted_operator(
    differential_sum: DifferentialSum,
    series: PuiseuxSeries,
) -> OperatorOnSeries:
    """The first variation of F on w, in the basis z^l·d^l/dz^l.

    Raises
    ------
    DegenerateLeadingCoefficient
        When ∂F/∂w^(n) has no certified nonzero value on w.
    """
    if not partial_highest_nonzero(differential_sum, series):
        raise DegenerateLeadingCoefficient(
            f"Condition ∂F/∂w^(n)(w) ≠ 0 fails: ∂F/∂w^({differential_sum.order}) of "
            f"{differential_sum} vanishes on {series}"
        )

    return OperatorOnSeries(
        evaluate_operator(first_variation(differential_sum), series),
        basis="plain",
    ).to_weighted_basis()


def build_L0(
    differential_sum: DifferentialSum,
    series: PuiseuxSeries,
) -> OperatorOnSeries:
    """The first variation of F on w, in the basis D^k.

    Raises
    ------
    DegenerateLeadingCoefficient
        When ∂F/∂w^(n) has no certified nonzero value on w.
    """
    return to_euler_basis(build_weighted_operator(differential_sum, series))


def support(operator: OperatorOnSeries) -> List[SupportPoint]:
    """Points (k, j_{k,0}) for every nonzero coefficient, ordered by k.

    Parameters
    ----------
    operator : OperatorOnSeries
        Operator in the weighted or euler basis. Both give the same Newton polygon.

    Returns
    -------
    List[SupportPoint]
        The support.

    Raises
    ------
    ValueError
        When the operator is in the plain basis.

    UncertifiedLeading
        When a coefficient has no certified nonzero term.
    """
    if operator.basis == "plain":
        raise ValueError("Support is only defined in the weighted or euler basis")

    points = list()
    for order, coefficient in operator.coefficients.items():
        if coefficient.is_zero():
            raise UncertifiedLeading(
                f"Coefficient of order {order} has no certified term above "
                f"{coefficient.valid_below.value}",
                order=order,
            )
        points.append(
            SupportPoint(
                k=order,
                j0=-coefficient.leading_exponent.value,
            )
        )

    return points
