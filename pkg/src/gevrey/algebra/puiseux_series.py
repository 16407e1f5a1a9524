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
import math
from typing import (
    Dict,
    Iterable,
    List,
    Mapping,
    Optional,
    Tuple,
    Union,
)

from gevrey.algebra.exponents import (
    RamifiedExponent,
    exponent_value,
)
from gevrey.algebra.gaussian_rationals import (
    GaussianRational,
    amend_gaussian_rational,
)
from gevrey.utilities.amendments import (
    amend_natural_number,
    find_least_common_multiplier,
)

_Terms = Dict[int, GaussianRational]


class PuiseuxSeries:
    """A truncated descending series in z with exponents on the grid (1/ρ)ℤ.

    Terms are stored by their integer numerator n, standing for z^(n/ρ). A series is
    either exact (a finite sum, `valid_below` is None) or certified only down to a
    threshold V: every coefficient at an exponent ≥ V/ρ is known, everything below
    is unknown and never stored.

    Parameters
    ----------
    terms : Mapping or Iterable of pairs
        Exponent to coefficient. Exponents are anything `exponent_value` accepts,
        coefficients anything `amend_gaussian_rational` accepts. Zero coefficients are
        dropped. Defaults to no terms.
    valid_below
        Certified threshold as an exponent. Defaults to None (exact series).
    ramification : int
        Minimal grid to use. The actual grid is the least common multiplier of this
        and the denominators of all exponents. Defaults to 1.
    """

    __slots__ = (
        "_ramification",
        "_terms",
        "_valid_below",
        "_descending",
    )

    def __init__(
        self,
        terms: Union[Mapping, Iterable[Tuple]] = None,
        valid_below=None,
        ramification: int = None,
    ):
        if terms is None:
            terms = dict()
        if isinstance(terms, Mapping):
            terms = terms.items()
        terms = [
            (
                exponent_value(exponent),
                amend_gaussian_rational(
                    gaussian_rational=coefficient,
                    warning_stack_level=3,
                ),
            )
            for exponent, coefficient in terms
        ]
        if valid_below is not None:
            valid_below = exponent_value(valid_below)
        if ramification is None:
            ramification = 1
        ramification = amend_natural_number(
            natural_number=ramification,
            name="Ramification",
            warning_stack_level=3,
        )

        denominators = [ramification] + [exponent.denominator for exponent, _ in terms]
        if valid_below is not None:
            denominators.append(valid_below.denominator)
        ramification = find_least_common_multiplier(denominators)

        grid_terms = dict()
        for exponent, coefficient in terms:
            numerator = int(exponent * ramification)
            grid_terms[numerator] = (
                grid_terms.get(numerator, GaussianRational.ZERO) + coefficient
            )

        self._set(
            ramification,
            grid_terms,
            None if valid_below is None else int(valid_below * ramification),
        )

    def _set(
        self,
        ramification: int,
        terms: _Terms,
        valid_below: Optional[int],
    ):
        self._ramification = ramification
        if valid_below is None:
            self._terms = {n: c for n, c in terms.items() if c}
        else:
            self._terms = {n: c for n, c in terms.items() if c and n >= valid_below}
        self._valid_below = valid_below
        self._descending = None

    @classmethod
    def _on_grid(
        cls,
        ramification: int,
        terms: _Terms,
        valid_below: Optional[int] = None,
    ) -> "PuiseuxSeries":
        instance = object.__new__(cls)
        instance._set(
            ramification,
            terms,
            valid_below,
        )

        return instance

    @classmethod
    def from_terms(
        cls,
        terms: Union[Mapping, Iterable[Tuple]] = None,
        valid_below=None,
        ramification: int = None,
    ) -> "PuiseuxSeries":
        return cls(
            terms=terms,
            valid_below=valid_below,
            ramification=ramification,
        )

    @classmethod
    def monomial(
        cls,
        coefficient,
        exponent=0,
        ramification: int = None,
    ) -> "PuiseuxSeries":
        return cls(
            terms=((exponent, coefficient),),
            ramification=ramification,
        )

    @classmethod
    def constant(
        cls,
        coefficient,
        ramification: int = None,
    ) -> "PuiseuxSeries":
        return cls.monomial(
            coefficient=coefficient,
            ramification=ramification,
        )

    @classmethod
    def zero(
        cls,
        ramification: int = None,
        valid_below=None,
    ) -> "PuiseuxSeries":
        return cls(
            valid_below=valid_below,
            ramification=ramification,
        )

    @property
    def ramification(self) -> int:
        return self._ramification

    @property
    def valid_below(self) -> Optional[RamifiedExponent]:
        if self._valid_below is None:
            return None

        return RamifiedExponent(
            self._valid_below,
            self._ramification,
        )

    @property
    def leading_exponent(self) -> Optional[RamifiedExponent]:
        """Largest stored exponent, None for a series without stored terms."""
        if not self._terms:
            return None

        return RamifiedExponent(
            self._numerators()[0],
            self._ramification,
        )

    @property
    def leading_coefficient(self) -> GaussianRational:
        if not self._terms:
            return GaussianRational.ZERO

        return self._terms[self._numerators()[0]]

    def is_exact(self) -> bool:
        return self._valid_below is None

    def is_zero(self) -> bool:
        """Whether no nonzero coefficient is known. Says nothing about the tail."""
        return not self._terms

    def _numerators(self) -> List[int]:
        if self._descending is None:
            self._descending = sorted(
                self._terms,
                reverse=True,
            )

        return self._descending

    def _lifted(
        self,
        ramification: int,
    ) -> Tuple[_Terms, Optional[int]]:
        factor = ramification // self._ramification
        if factor == 1:
            return self._terms, self._valid_below

        return (
            {n * factor: c for n, c in self._terms.items()},
            None if self._valid_below is None else self._valid_below * factor,
        )

    def _top(self) -> Optional[int]:
        # A zero series with a threshold behaves like O(z^V) in products.
        if self._terms:
            return self._numerators()[0]

        return self._valid_below

    def __len__(self):
        return len(self._terms)

    def items(self) -> List[Tuple[RamifiedExponent, GaussianRational]]:
        """Stored terms, from the leading exponent down."""
        return [
            (
                RamifiedExponent(
                    numerator,
                    self._ramification,
                ),
                self._terms[numerator],
            )
            for numerator in self._numerators()
        ]

    def coefficient(
        self,
        exponent,
    ) -> GaussianRational:
        """Coefficient of z^`exponent`.

        Raises
        ------
        ValueError
            When `exponent` is below the certified threshold.
        """
        exponent = exponent_value(exponent)
        if self._valid_below is not None and exponent * self._ramification < (
            self._valid_below
        ):
            raise ValueError(
                f"Exponent {exponent} is below the certified threshold "
                f"{self.valid_below.value} of {self}"
            )
        numerator = exponent * self._ramification
        if numerator.denominator != 1:
            return GaussianRational.ZERO

        return self._terms.get(
            int(numerator),
            GaussianRational.ZERO,
        )

    def truncate(
        self,
        exponent,
    ) -> "PuiseuxSeries":
        """Keeps only what is certified at exponents ≥ `exponent`."""
        exponent = exponent_value(exponent)
        ramification = find_least_common_multiplier(
            (
                self._ramification,
                exponent.denominator,
            )
        )
        terms, valid_below = self._lifted(ramification)
        threshold = int(exponent * ramification)
        if valid_below is not None:
            threshold = max(
                threshold,
                valid_below,
            )

        return PuiseuxSeries._on_grid(
            ramification,
            terms,
            threshold,
        )

    def exact(self) -> "PuiseuxSeries":
        """The known terms taken as an exact finite sum."""
        return PuiseuxSeries._on_grid(
            self._ramification,
            self._terms,
        )

    def lift(
        self,
        ramification: int,
    ) -> "PuiseuxSeries":
        ramification = amend_natural_number(
            natural_number=ramification,
            name="Ramification",
            warning_stack_level=3,
        )
        if ramification % self._ramification != 0:
            raise ValueError(
                f"Can't lift a series with ramification {self._ramification} to "
                f"ramification {ramification}"
            )

        return PuiseuxSeries._on_grid(
            ramification,
            *self._lifted(ramification),
        )

    def multiply_by_monomial(
        self,
        exponent,
    ) -> "PuiseuxSeries":
        """Multiplies by z^`exponent`, moving the threshold along."""
        exponent = exponent_value(exponent)
        ramification = find_least_common_multiplier(
            (
                self._ramification,
                exponent.denominator,
            )
        )
        terms, valid_below = self._lifted(ramification)
        shift = int(exponent * ramification)

        return PuiseuxSeries._on_grid(
            ramification,
            {n + shift: c for n, c in terms.items()},
            None if valid_below is None else valid_below + shift,
        )

    def scale(
        self,
        coefficient,
    ) -> "PuiseuxSeries":
        coefficient = amend_gaussian_rational(
            gaussian_rational=coefficient,
            warning_stack_level=3,
        )
        if not coefficient:
            return PuiseuxSeries._on_grid(self._ramification, dict())

        return PuiseuxSeries._on_grid(
            self._ramification,
            {n: c * coefficient for n, c in self._terms.items()},
            self._valid_below,
        )

    def substitute_power(
        self,
        power: int,
    ) -> "PuiseuxSeries":
        """Substitutes z = t^`power`, returning a series in t.

        The exponent n/ρ becomes power·n/ρ, so the grid shrinks to ρ/gcd(ρ, power).
        """
        power = amend_natural_number(
            natural_number=power,
            name="Power",
            warning_stack_level=3,
        )
        divisor = math.gcd(
            self._ramification,
            power,
        )
        factor = power // divisor

        return PuiseuxSeries._on_grid(
            self._ramification // divisor,
            {n * factor: c for n, c in self._terms.items()},
            None if self._valid_below is None else self._valid_below * factor,
        )

    def _normalized(self) -> Tuple:
        divisor = self._ramification
        for numerator in self._terms:
            divisor = math.gcd(divisor, numerator)
        if self._valid_below is not None:
            divisor = math.gcd(divisor, self._valid_below)

        return (
            self._ramification // divisor,
            tuple((n // divisor, self._terms[n]) for n in self._numerators()),
            None if self._valid_below is None else self._valid_below // divisor,
        )

    def __eq__(self, other):
        if not isinstance(other, PuiseuxSeries):
            other = _as_series(other)
            if other is NotImplemented:
                return other

        return self._normalized() == other._normalized()

    def __hash__(self):
        return hash(self._normalized())

    def __add__(self, other):
        other = _as_series(other)
        if other is NotImplemented:
            return other

        return series_add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return PuiseuxSeries._on_grid(
            self._ramification,
            {n: -c for n, c in self._terms.items()},
            self._valid_below,
        )

    def __sub__(self, other):
        other = _as_series(other)
        if other is NotImplemented:
            return other

        return series_add(self, -other)

    def __rsub__(self, other):
        other = _as_series(other)
        if other is NotImplemented:
            return other

        return series_add(other, -self)

    def __mul__(self, other):
        if isinstance(other, PuiseuxSeries):
            return series_mul(self, other)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    __rmul__ = __mul__

    def __repr__(self):
        return f"PuiseuxSeries({str(self)!r})"

    def __str__(self):
        return format_series(self)


def _as_series(value) -> PuiseuxSeries:
    if isinstance(value, PuiseuxSeries):
        return value
    try:
        return PuiseuxSeries.constant(value)
    except TypeError:
        return NotImplemented


def format_series(
    series: PuiseuxSeries,
    variable: str = None,
) -> str:
    """Formats a series as 'c*z^(e) + ... + O(z^(V))'."""
    if variable is None:
        variable = "z"

    parts = list()
    for exponent, coefficient in series.items():
        value = exponent.value
        if value == 0:
            power = ""
        elif value == 1:
            power = variable
        else:
            power = f"{variable}^({value})"

        if not power:
            parts.append(str(coefficient))
        elif coefficient == 1:
            parts.append(power)
        elif coefficient == -1:
            parts.append(f"-{power}")
        else:
            parts.append(f"{coefficient}*{power}")
    if series.valid_below is not None:
        parts.append(f"O({variable}^({series.valid_below.value}))")

    if not parts:
        return "0"

    return " + ".join(parts).replace("+ -", "- ")


def _common_grid(
    a: PuiseuxSeries,
    b: PuiseuxSeries,
) -> Tuple[int, _Terms, Optional[int], _Terms, Optional[int]]:
    ramification = find_least_common_multiplier(
        (
            a.ramification,
            b.ramification,
        )
    )

    return (ramification, *a._lifted(ramification), *b._lifted(ramification))


def series_add(
    a: PuiseuxSeries,
    b: PuiseuxSeries,
) -> PuiseuxSeries:
    """Coefficient-wise sum, certified down to the larger of the two thresholds."""
    ramification, terms_a, valid_a, terms_b, valid_b = _common_grid(a, b)

    thresholds = [v for v in (valid_a, valid_b) if v is not None]
    terms = dict(terms_a)
    for numerator, coefficient in terms_b.items():
        if numerator in terms:
            terms[numerator] = terms[numerator] + coefficient
        else:
            terms[numerator] = coefficient

    return PuiseuxSeries._on_grid(
        ramification,
        terms,
        max(thresholds) if thresholds else None,
    )


def series_mul(
    a: PuiseuxSeries,
    b: PuiseuxSeries,
) -> PuiseuxSeries:
    """Cauchy product, computing only the coefficients that are certified.

    The product of a series certified down to V_a with leading exponent L_a and one
    certified down to V_b with leading exponent L_b is certified down to
    max(L_a + V_b, L_b + V_a). A zero series with a threshold counts as having its
    threshold as leading exponent, and an exact zero annihilates the product.
    """
    ramification, terms_a, valid_a, terms_b, valid_b = _common_grid(a, b)
    a_top = max(terms_a) if terms_a else valid_a
    b_top = max(terms_b) if terms_b else valid_b

    thresholds = list()
    if valid_b is not None and a_top is not None:
        thresholds.append(a_top + valid_b)
    if valid_a is not None and b_top is not None:
        thresholds.append(b_top + valid_a)
    threshold = max(thresholds) if thresholds else None

    product = dict()
    if terms_a and terms_b:
        items_a = sorted(terms_a.items(), reverse=True)
        items_b = sorted(terms_b.items(), reverse=True)
        for numerator_a, coefficient_a in items_a:
            if threshold is not None and numerator_a + items_b[0][0] < threshold:
                break
            for numerator_b, coefficient_b in items_b:
                numerator = numerator_a + numerator_b
                if threshold is not None and numerator < threshold:
                    break
                term = coefficient_a * coefficient_b
                if numerator in product:
                    product[numerator] = product[numerator] + term
                else:
                    product[numerator] = term

    return PuiseuxSeries._on_grid(
        ramification,
        product,
        threshold,
    )


def series_diff(a: PuiseuxSeries) -> PuiseuxSeries:
    """Term-wise d/dz. The threshold moves down by one along with the exponents."""
    ramification = a.ramification
    terms, valid_below = a._lifted(ramification)

    return PuiseuxSeries._on_grid(
        ramification,
        {
            n - ramification: c * Fraction(n, ramification)
            for n, c in terms.items()
            if n != 0
        },
        None if valid_below is None else valid_below - ramification,
    )


def euler_apply(a: PuiseuxSeries) -> PuiseuxSeries:
    """Applies D = z·d/dz, which multiplies the term at z^q by q."""
    ramification = a.ramification
    terms, valid_below = a._lifted(ramification)

    return PuiseuxSeries._on_grid(
        ramification,
        {n: c * Fraction(n, ramification) for n, c in terms.items() if n != 0},
        valid_below,
    )
