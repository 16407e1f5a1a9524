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
import decimal
from fractions import Fraction
import logging
from typing import (
    Dict,
    Iterable,
    List,
    Literal,
    Mapping,
    NamedTuple,
    Optional,
    Tuple,
    Union,
)
import warnings

from gevrey.algebra.exponents import (
    RamifiedExponent,
    exponent_value,
)
from gevrey.algebra.gaussian_rationals import (
    GaussianRational,
    amend_gaussian_rational,
)
from gevrey.algebra.puiseux_series import (
    PuiseuxSeries,
    series_add,
)
from gevrey.differential.differential_sums import DifferentialSum
from gevrey.differential.parsing import parse_differential_sum
from gevrey.differential.variations import (
    apply_first_variation,
    evaluate_on_series,
    evaluate_operator,
    first_variation,
)
from gevrey.errors import (
    DegenerateLeadingCoefficient,
    ResonanceError,
    SeedInconsistent,
)
from gevrey.utilities.amendments import (
    amend_integer,
    amend_natural_number,
    find_least_common_multiplier,
)

logger = logging.getLogger(__name__)

MINIMUM_GROWTH_PROFILE_LENGTH = 20


class SeedExpansion:
    """Prescribed leading terms of a formal solution, fixing its branch.

    Parameters
    ----------
    terms : Mapping or Iterable of pairs
        Exponent to coefficient. The largest exponent is the leading one and its
        coefficient must not be zero. Other coefficients may be zero, they are
        cross-checked against the derived ones all the same.
    ramification : int
        Grid of the solution. Defaults to the least common multiplier of the
        exponent denominators.
    branch : int
        Branch label, kept for reports only. Defaults to None.

    Raises
    ------
    ValueError
        When there are no terms or the leading coefficient is zero.
    """

    __slots__ = (
        "_terms",
        "_ramification",
        "_branch",
    )

    def __init__(
        self,
        terms: Union[Mapping, Iterable[Tuple]],
        ramification: int = None,
        branch: int = None,
    ):
        if isinstance(terms, Mapping):
            terms = terms.items()
        prescribed = dict()
        for exponent, coefficient in terms:
            prescribed[exponent_value(exponent)] = amend_gaussian_rational(
                gaussian_rational=coefficient,
                name="Seed coefficient",
                warning_stack_level=3,
            )
        if not prescribed:
            raise ValueError("A seed expansion needs at least one term")
        if not prescribed[max(prescribed)]:
            raise ValueError(
                f"Leading seed coefficient at exponent {max(prescribed)} is zero"
            )
        if ramification is None:
            ramification = 1
        if branch is not None:
            branch = amend_integer(
                integer=branch,
                name="Branch",
                type_mismatch_action="error",
            )

        self._terms = {e: prescribed[e] for e in sorted(prescribed, reverse=True)}
        self._ramification = find_least_common_multiplier(
            [
                amend_natural_number(
                    natural_number=ramification,
                    name="Ramification",
                    warning_stack_level=3,
                )
            ]
            + [exponent.denominator for exponent in self._terms]
        )
        self._branch = branch

    @classmethod
    def from_text(
        cls,
        text: str,
        ramification: int = None,
        branch: int = None,
        parameters: Mapping = None,
    ) -> "SeedExpansion":
        """Parses 'coefficient@exponent' pairs separated by commas.

        Coefficients are constant differential sums such as '2*i' or '(1+i)/2',
        exponents are rationals such as '-1/2'.

        Raises
        ------
        ValueError
            When the text is malformed.
        """
        if not isinstance(text, str):
            raise TypeError(f"Seed text {repr(text)} isn't a str")

        terms = list()
        for part in text.split(","):
            if not part.strip():
                continue
            coefficient_text, separator, exponent_text = part.rpartition("@")
            if not separator:
                raise ValueError(
                    f"Seed term {repr(part.strip())} isn't of the form "
                    f"'coefficient@exponent'"
                )
            coefficient = parse_differential_sum(
                coefficient_text,
                parameters=parameters,
            )
            if not coefficient.is_constant():
                raise ValueError(
                    f"Seed coefficient {repr(coefficient_text.strip())} isn't a "
                    f"constant"
                )
            try:
                exponent = Fraction(exponent_text.strip())
            except ValueError:
                raise ValueError(
                    f"Seed exponent {repr(exponent_text.strip())} isn't a rational"
                )
            terms.append((exponent, coefficient.constant_value()))

        return cls(
            terms=terms,
            ramification=ramification,
            branch=branch,
        )

    @property
    def ramification(self) -> int:
        return self._ramification

    @property
    def branch(self) -> Optional[int]:
        return self._branch

    @property
    def terms(self) -> Dict[Fraction, GaussianRational]:
        return dict(self._terms)

    @property
    def leading_exponent(self) -> RamifiedExponent:
        return RamifiedExponent.from_value(
            next(iter(self._terms)),
            self._ramification,
        )

    @property
    def leading_coefficient(self) -> GaussianRational:
        return next(iter(self._terms.values()))

    @property
    def prescribed_exponents(self) -> Tuple[Fraction, ...]:
        return tuple(self._terms)

    @property
    def lowest_prescribed_exponent(self) -> Fraction:
        return self.prescribed_exponents[-1]

    def to_series(self) -> PuiseuxSeries:
        return PuiseuxSeries(
            terms=self._terms,
            ramification=self._ramification,
        )

    def to_text(self) -> str:
        return ", ".join(f"{c}@{e}" for e, c in self._terms.items())

    def to_json(self) -> Dict:
        return {
            "ramification": self._ramification,
            "branch": self._branch,
            "terms": [
                {
                    "exponent": str(
                        RamifiedExponent.from_value(exponent, self._ramification)
                    ),
                    "value": coefficient.to_json(),
                }
                for exponent, coefficient in self._terms.items()
            ],
        }

    @classmethod
    def from_json(
        cls,
        data: Mapping,
    ) -> "SeedExpansion":
        try:
            return cls(
                terms=[
                    (
                        Fraction(term["exponent"]),
                        GaussianRational.from_json(term["value"]),
                    )
                    for term in data["terms"]
                ],
                ramification=data.get("ramification"),
                branch=data.get("branch"),
            )
        except (KeyError, TypeError) as e:
            raise ValueError(f"Invalid seed expansion {repr(data)}: {e}")

    def __eq__(self, other):
        if not isinstance(other, SeedExpansion):
            return NotImplemented

        return (
            self._terms == other._terms
            and self._ramification == other._ramification
            and self._branch == other._branch
        )

    def __hash__(self):
        return hash((tuple(self._terms.items()), self._ramification, self._branch))

    def __repr__(self):
        return (
            f"SeedExpansion({self.to_text()!r}, ramification={self._ramification}, "
            f"branch={self._branch})"
        )


@dataclasses.dataclass(frozen=True)
class ExtendedSolution:
    """A seed extended by the recurrence.

    Attributes
    ----------
    series : PuiseuxSeries
        All coefficients, certified down to the lowest slot that was solved.
    seed : SeedExpansion
        The seed the solution was extended from.
    shift : Fraction
        σ, so that the slot at exponent q is solved at residual exponent q + σ.
    characteristic_values : Dict[Fraction, GaussianRational]
        Slot exponent to the nonzero characteristic value used to solve it.
    residual_bounds : Dict[Fraction, Fraction]
        Slot exponent to E, such that after solving the slot the residual vanishes
        at every exponent ≥ E. Strictly decreasing in slot order.
    residual_orders : Dict[Fraction, Fraction or None]
        Slot exponent to the leading exponent of F on the partial sum through that
        slot, None if the partial sum solves F = 0 exactly.
    """

    series: PuiseuxSeries
    seed: SeedExpansion
    shift: Fraction
    characteristic_values: Dict[Fraction, GaussianRational]
    residual_bounds: Dict[Fraction, Fraction]
    residual_orders: Dict[Fraction, Optional[Fraction]]

    @property
    def partial_sum(self) -> PuiseuxSeries:
        return self.series.exact()

    @property
    def residual_leading_exponent(self) -> Optional[Fraction]:
        """Leading exponent of the residual of the whole partial sum."""
        if not self.residual_orders:
            return None

        return self.residual_orders[min(self.residual_orders)]

    @property
    def ramification(self) -> int:
        return self.seed.ramification

    @property
    def number_of_slots(self) -> int:
        return len(self.characteristic_values)

    def coefficients(self) -> List[Tuple[Fraction, GaussianRational]]:
        """Every slot from the leading exponent down, zeros included."""
        step = Fraction(1, self.ramification)
        leading = self.seed.leading_exponent.value
        lowest = self.series.valid_below.value

        result = list()
        exponent = leading
        while exponent >= lowest:
            result.append((exponent, self.series.coefficient(exponent)))
            exponent -= step

        return result

    def prefix(
        self,
        number_of_slots: int,
    ) -> PuiseuxSeries:
        """Partial sum after the first `number_of_slots` solved slots."""
        number_of_slots = amend_integer(
            integer=number_of_slots,
            name="Number of slots",
            type_mismatch_action="error",
            minimum_value=0,
            maximum_value=self.number_of_slots,
            value_violation_action="error",
        )
        lowest = self.seed.leading_exponent.value - Fraction(
            number_of_slots,
            self.ramification,
        )

        return self.partial_sum.truncate(lowest).exact()


def _shift(
    differential_sum: DifferentialSum,
    series: PuiseuxSeries,
) -> Fraction:
    values = evaluate_operator(
        first_variation(differential_sum),
        series,
    )
    candidates = [
        value.leading_exponent.value - order
        for order, value in values.items()
        if not value.is_zero()
    ]
    if not candidates:
        raise DegenerateLeadingCoefficient(
            f"The first variation of {differential_sum} vanishes on {series}, so no "
            f"coefficient can be determined"
        )

    return max(candidates)


def _evaluate_slot(
    differential_sum: DifferentialSum,
    partial_sum: PuiseuxSeries,
    slot: Fraction,
    target: Fraction,
    margin: Fraction,
) -> Tuple[PuiseuxSeries, PuiseuxSeries, Fraction]:
    # Widens the truncation until both values are certified at the target.
    unit_term = PuiseuxSeries.monomial(
        1,
        slot,
        ramification=partial_sum.ramification,
    )
    while True:
        truncated = partial_sum.truncate(target - margin)
        residual = evaluate_on_series(differential_sum, truncated)
        linear = apply_first_variation(differential_sum, truncated, unit_term)

        excess = max(
            (
                value.valid_below.value - target
                for value in (residual, linear)
                if value.valid_below is not None
            ),
            default=Fraction(0),
        )
        if excess <= 0:
            return residual, linear, margin
        margin += excess


def _residual_leading_exponent(
    differential_sum: DifferentialSum,
    partial_sum: PuiseuxSeries,
    residual: PuiseuxSeries,
    target: Fraction,
) -> Optional[Fraction]:
    # Everything above the target already vanished, so a nonzero coefficient there
    # leads. Otherwise the exact partial sum has to be evaluated.
    if residual.coefficient(target):
        return target
    order = residual_order(differential_sum, partial_sum)

    return None if order is None else order.value


def extend(
    differential_sum: DifferentialSum,
    seed: SeedExpansion,
    number_of_terms: int,
    on_seed_mismatch: Literal[
        "error",
        "warning",
    ] = None,
    warning_stack_level: int = None,
) -> ExtendedSolution:
    """Extends a seed expansion to a longer formal solution of F = 0.

    Every slot q below the leading exponent is solved from the linear part of the
    equation: with σ the top exponent shift of the first variation, the residual of
    the known terms at z^(q+σ) must be cancelled by λ(q)·c_q, where λ(q) is the
    coefficient of z^(q+σ) in the first variation applied to z^q.

    Parameters
    ----------
    differential_sum : DifferentialSum
        The equation F = 0.
    seed : SeedExpansion
        Prescribed leading terms.
    number_of_terms : int
        Number of slots to solve below the lowest prescribed exponent.
    on_seed_mismatch : Literal['error', 'warning']
        What to do when a derived coefficient differs from a prescribed one. If
        'error', raises SeedInconsistent. If 'warning', raises a UserWarning and
        continues with the derived value. Defaults to 'error'.
    warning_stack_level : int
        Stack level which to report for warnings. Defaults to 2 (whatever called this).

    Returns
    -------
    ExtendedSolution
        The extended solution.

    Raises
    ------
    SeedInconsistent
        When the residual doesn't vanish above the slot being solved, or a derived
        coefficient differs from a prescribed one and `on_seed_mismatch` is 'error'.

    ResonanceError
        When a characteristic value is zero.

    DegenerateLeadingCoefficient
        When the first variation vanishes on the leading term.
    """
    if not isinstance(differential_sum, DifferentialSum):
        raise TypeError(f"{repr(differential_sum)} isn't a DifferentialSum")
    if not isinstance(seed, SeedExpansion):
        raise TypeError(f"{repr(seed)} isn't a SeedExpansion")
    number_of_terms = amend_natural_number(
        natural_number=number_of_terms,
        name="Number of terms",
    )
    if on_seed_mismatch is None:
        on_seed_mismatch = "error"
    if on_seed_mismatch not in ("error", "warning"):
        raise ValueError(f"Invalid seed mismatch action {repr(on_seed_mismatch)}")
    warning_stack_level = amend_integer(
        integer=warning_stack_level,
        value_on_cast_error=2,
        minimum_value=2,
        value_violation_action="clamp",
        warning_stack_level=3,
    )

    ramification = seed.ramification
    step = Fraction(1, ramification)
    leading = seed.leading_exponent.value
    prescribed = seed.terms
    number_of_slots = (
        int((leading - seed.lowest_prescribed_exponent) * ramification)
        + number_of_terms
    )

    partial_sum = PuiseuxSeries.monomial(
        seed.leading_coefficient,
        leading,
        ramification=ramification,
    )
    shift = _shift(differential_sum, partial_sum)
    logger.debug(
        "Extending %s from %s by %d slots, shift %s",
        differential_sum,
        partial_sum,
        number_of_slots,
        shift,
    )

    characteristic_values = dict()
    residual_bounds = dict()
    residual_orders = dict()
    margin = Fraction(0)
    slot = leading
    for _ in range(number_of_slots):
        slot -= step
        target = slot + shift
        residual, linear, margin = _evaluate_slot(
            differential_sum,
            partial_sum,
            slot,
            target,
            margin,
        )

        for exponent, coefficient in residual.items():
            if exponent.value <= target:
                break
            raise SeedInconsistent(
                f"Residual has the nonzero coefficient {coefficient} at z^"
                f"({exponent.value}) above z^({target}), so the seed "
                f"{seed.to_text()} doesn't start a formal solution",
                exponent=exponent.value,
                expected=GaussianRational.ZERO,
                derived=coefficient,
            )

        if slot + step in residual_bounds:
            residual_orders[slot + step] = _residual_leading_exponent(
                differential_sum,
                partial_sum,
                residual,
                target,
            )

        characteristic_value = linear.coefficient(target)
        if not characteristic_value:
            raise ResonanceError(
                f"Characteristic value at slot z^({slot}) is zero, the coefficient "
                f"isn't uniquely determined",
                exponent=slot,
            )
        coefficient = -residual.coefficient(target) / characteristic_value

        if slot in prescribed and prescribed[slot] != coefficient:
            message = (
                f"Prescribed coefficient {prescribed[slot]} at z^({slot}) differs "
                f"from the derived coefficient {coefficient}"
            )
            if on_seed_mismatch == "error":
                raise SeedInconsistent(
                    message,
                    exponent=slot,
                    expected=prescribed[slot],
                    derived=coefficient,
                )
            warnings.warn(
                message,
                UserWarning,
                stacklevel=warning_stack_level,
            )

        logger.debug(
            "Slot z^(%s): coefficient %s, characteristic value %s, margin %s",
            slot,
            coefficient,
            characteristic_value,
            margin,
        )
        characteristic_values[slot] = characteristic_value
        residual_bounds[slot] = target
        partial_sum = series_add(
            partial_sum,
            PuiseuxSeries.monomial(
                coefficient,
                slot,
                ramification=ramification,
            ),
        )

    final_order = residual_order(differential_sum, partial_sum)
    residual_orders[slot] = None if final_order is None else final_order.value

    return ExtendedSolution(
        series=partial_sum.truncate(slot),
        seed=seed,
        shift=shift,
        characteristic_values=characteristic_values,
        residual_bounds=residual_bounds,
        residual_orders=residual_orders,
    )


def residual_order(
    differential_sum: DifferentialSum,
    solution: Union[ExtendedSolution, PuiseuxSeries],
) -> Optional[RamifiedExponent]:
    """Leading exponent of F evaluated on the exact partial sum.

    Returns None if the partial sum solves the equation exactly.
    """
    if isinstance(solution, ExtendedSolution):
        solution = solution.partial_sum

    return evaluate_on_series(
        differential_sum,
        solution.exact(),
    ).leading_exponent


class GrowthPoint(NamedTuple):
    """Size of the coefficient at slot z^(-s/ρ)."""

    s: int
    magnitude: decimal.Decimal
    log_magnitude: float


def growth_profile(
    solution: ExtendedSolution,
    precision: int = None,
    warning_stack_level: int = None,
) -> List[GrowthPoint]:
    """Magnitudes of the nonzero coefficients, ordered by s.

    The index s counts grid steps, the coefficient of z^(-s/ρ) has index s. The
    profile is a diagnostic of divergence and proves nothing.

    Parameters
    ----------
    solution : ExtendedSolution
        The solution to inspect.
    precision : int
        Significant digits of the magnitudes. Defaults to 30.
    warning_stack_level : int
        Stack level which to report for warnings. Defaults to 2 (whatever called this).

    Returns
    -------
    List[GrowthPoint]
        One point per nonzero coefficient.

    Warns
    -----
    UserWarning
        When the solution has fewer than 20 coefficients.
    """
    warning_stack_level = amend_integer(
        integer=warning_stack_level,
        value_on_cast_error=2,
        minimum_value=2,
        value_violation_action="clamp",
        warning_stack_level=3,
    )

    coefficients = solution.coefficients()
    if len(coefficients) < MINIMUM_GROWTH_PROFILE_LENGTH:
        warnings.warn(
            f"Growth profile of only {len(coefficients)} coefficients, at least "
            f"{MINIMUM_GROWTH_PROFILE_LENGTH} are needed to say anything",
            UserWarning,
            stacklevel=warning_stack_level,
        )

    ramification = solution.ramification
    profile = [
        GrowthPoint(
            s=int(-exponent * ramification),
            magnitude=coefficient.magnitude(precision),
            log_magnitude=coefficient.log_magnitude(),
        )
        for exponent, coefficient in coefficients
        if coefficient
    ]

    return sorted(profile)


def normalized_growth(
    profile: Iterable[GrowthPoint],
) -> Dict[int, float]:
    """log|c_s|/s for every s > 0.

    Bounded for a convergent series, growing like log(s) for a series of Gevrey
    order 1.
    """
    return {point.s: point.log_magnitude / point.s for point in profile if point.s > 0}
