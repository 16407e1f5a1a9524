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
    Iterable,
    List,
    Mapping,
    NamedTuple,
    Tuple,
    Union,
)

from gevrey.algebra.exponents import exponent_value
from gevrey.algebra.gaussian_rationals import (
    GaussianRational,
    amend_gaussian_rational,
    format_rational,
)
from gevrey.utilities.amendments import amend_integer

DerivativePowers = Tuple[Tuple[int, int], ...]
Signature = Tuple[Fraction, DerivativePowers]

MAXIMUM_DERIVATIVE_ORDER = 9
VARIABLES = (
    "z",
    "t",
)


class DiffMonomial(NamedTuple):
    """One monomial c·z^e·Π (w^(j))^(m_j) of a differential sum.

    `derivative_powers` is sorted by order and holds no zero multiplicities.
    """

    coefficient: GaussianRational
    z_exponent: Fraction
    derivative_powers: DerivativePowers

    @property
    def signature(self) -> Signature:
        return self.z_exponent, self.derivative_powers

    @property
    def degree(self) -> int:
        return sum(multiplicity for _, multiplicity in self.derivative_powers)

    @property
    def order(self) -> int:
        if not self.derivative_powers:
            return 0

        return self.derivative_powers[-1][0]


def _amend_derivative_powers(
    derivative_powers: Union[Mapping[int, int], Iterable[Tuple[int, int]]],
) -> DerivativePowers:
    if derivative_powers is None:
        return tuple()
    if isinstance(derivative_powers, Mapping):
        derivative_powers = derivative_powers.items()

    merged = dict()
    for order, multiplicity in derivative_powers:
        order = amend_integer(
            integer=order,
            name="Derivative order",
            type_mismatch_action="error",
            minimum_value=0,
            value_violation_action="error",
        )
        multiplicity = amend_integer(
            integer=multiplicity,
            name="Multiplicity",
            type_mismatch_action="error",
            minimum_value=0,
            value_violation_action="error",
        )
        merged[order] = merged.get(order, 0) + multiplicity

    return tuple(sorted((o, m) for o, m in merged.items() if m != 0))


def _multiply_powers(
    a: DerivativePowers,
    b: DerivativePowers,
) -> DerivativePowers:
    if not a:
        return b
    if not b:
        return a
    merged = dict(a)
    for order, multiplicity in b:
        merged[order] = merged.get(order, 0) + multiplicity

    return tuple(sorted(merged.items()))


def _canonical_key(signature: Signature):
    z_exponent, derivative_powers = signature

    return derivative_powers[::-1], z_exponent


class DifferentialSum:
    """A polynomial in z, w, w′, …, w^(n) with Gaussian rational coefficients.

    The sum is kept in canonical form: monomials sharing a signature are merged and
    zero coefficients dropped. Instances are immutable. The independent variable's
    name is only used for printing, a sum in t equals the same sum in z.

    Parameters
    ----------
    monomials : Iterable
        DiffMonomial instances or (coefficient, z_exponent, derivative_powers)
        triples, where derivative_powers maps derivative order to multiplicity.
        Defaults to no monomials, which is the zero sum.
    variable : str
        Name of the independent variable, 'z' or 't'. Defaults to 'z'.
    """

    __slots__ = (
        "_terms",
        "_variable",
    )

    def __init__(
        self,
        monomials: Iterable = None,
        variable: str = None,
    ):
        if monomials is None:
            monomials = tuple()

        terms = dict()
        for coefficient, z_exponent, derivative_powers in monomials:
            signature = (
                exponent_value(z_exponent),
                _amend_derivative_powers(derivative_powers),
            )
            coefficient = amend_gaussian_rational(
                gaussian_rational=coefficient,
                warning_stack_level=3,
            )
            terms[signature] = terms.get(signature, GaussianRational.ZERO) + coefficient

        self._set(terms, variable)

    def _set(
        self,
        terms: Dict[Signature, GaussianRational],
        variable: str,
    ):
        if variable is None:
            variable = "z"
        if variable not in VARIABLES:
            raise ValueError(f"Invalid variable {repr(variable)}")

        self._terms = {s: c for s, c in terms.items() if c}
        self._variable = variable

    @classmethod
    def _from_terms(
        cls,
        terms: Dict[Signature, GaussianRational],
        variable: str = None,
    ) -> "DifferentialSum":
        instance = object.__new__(cls)
        instance._set(terms, variable)

        return instance

    @classmethod
    def constant(
        cls,
        coefficient,
        variable: str = None,
    ) -> "DifferentialSum":
        return cls(
            monomials=((coefficient, 0, None),),
            variable=variable,
        )

    @classmethod
    def independent(
        cls,
        exponent=1,
        variable: str = None,
    ) -> "DifferentialSum":
        """The monomial z^`exponent`."""
        return cls(
            monomials=((1, exponent, None),),
            variable=variable,
        )

    @classmethod
    def dependent(
        cls,
        order: int = 0,
        variable: str = None,
    ) -> "DifferentialSum":
        """The monomial w^(`order`)."""
        return cls(
            monomials=((1, 0, ((order, 1),)),),
            variable=variable,
        )

    @property
    def variable(self) -> str:
        return self._variable

    def with_variable(
        self,
        variable: str,
    ) -> "DifferentialSum":
        return DifferentialSum._from_terms(
            self._terms,
            variable,
        )

    @property
    def monomials(self) -> Tuple[DiffMonomial, ...]:
        """Monomials in printing order, highest derivatives first."""
        return tuple(
            DiffMonomial(
                coefficient=self._terms[signature],
                z_exponent=signature[0],
                derivative_powers=signature[1],
            )
            for signature in sorted(
                self._terms,
                key=_canonical_key,
                reverse=True,
            )
        )

    @property
    def order(self) -> int:
        """Highest derivative order present, 0 for a sum without w."""
        return max(
            (
                derivative_powers[-1][0]
                for _, derivative_powers in self._terms
                if derivative_powers
            ),
            default=0,
        )

    @property
    def degree(self) -> int:
        return max(
            (
                sum(m for _, m in derivative_powers)
                for _, derivative_powers in self._terms
            ),
            default=0,
        )

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(signature == (0, tuple()) for signature in self._terms)

    def is_independent_of_w(self) -> bool:
        return all(not derivative_powers for _, derivative_powers in self._terms)

    def constant_value(self) -> GaussianRational:
        if not self.is_constant():
            raise ValueError(f"Differential sum {self} isn't a constant")

        return self._terms.get(
            (Fraction(0), tuple()),
            GaussianRational.ZERO,
        )

    def terms(self) -> Dict[Signature, GaussianRational]:
        return dict(self._terms)

    def partial_derivative(
        self,
        order: int,
    ) -> "DifferentialSum":
        """Formal partial derivative ∂/∂w^(`order`)."""
        order = amend_integer(
            integer=order,
            name="Derivative order",
            type_mismatch_action="error",
            minimum_value=0,
            value_violation_action="error",
        )

        terms = dict()
        for (z_exponent, derivative_powers), coefficient in self._terms.items():
            powers = dict(derivative_powers)
            multiplicity = powers.get(order, 0)
            if multiplicity == 0:
                continue
            powers[order] = multiplicity - 1
            signature = (
                z_exponent,
                tuple(sorted((o, m) for o, m in powers.items() if m != 0)),
            )
            terms[signature] = (
                terms.get(signature, GaussianRational.ZERO) + coefficient * multiplicity
            )

        return DifferentialSum._from_terms(
            terms,
            self._variable,
        )

    def total_derivative(self) -> "DifferentialSum":
        """d/dz of the sum, with w^(j) differentiating to w^(j+1)."""
        terms = dict()

        def accumulate(signature, coefficient):
            terms[signature] = terms.get(signature, GaussianRational.ZERO) + coefficient

        for (z_exponent, derivative_powers), coefficient in self._terms.items():
            if z_exponent != 0:
                accumulate(
                    (z_exponent - 1, derivative_powers),
                    coefficient * z_exponent,
                )
            for order, multiplicity in derivative_powers:
                powers = dict(derivative_powers)
                powers[order] = multiplicity - 1
                powers[order + 1] = powers.get(order + 1, 0) + 1
                accumulate(
                    (
                        z_exponent,
                        tuple(sorted((o, m) for o, m in powers.items() if m != 0)),
                    ),
                    coefficient * multiplicity,
                )

        return DifferentialSum._from_terms(
            terms,
            self._variable,
        )

    def multiply_by_independent_power(
        self,
        exponent,
    ) -> "DifferentialSum":
        exponent = exponent_value(exponent)

        return DifferentialSum._from_terms(
            {(e + exponent, p): c for (e, p), c in self._terms.items()},
            self._variable,
        )

    def lowest_independent_exponent(self) -> Fraction:
        """Smallest z exponent over all monomials, 0 for the zero sum."""
        return min(
            (z_exponent for z_exponent, _ in self._terms),
            default=Fraction(0),
        )

    def __add__(self, other):
        other = _as_sum(other, self._variable)
        if other is NotImplemented:
            return other

        terms = dict(self._terms)
        for signature, coefficient in other._terms.items():
            terms[signature] = terms.get(signature, GaussianRational.ZERO) + coefficient

        return DifferentialSum._from_terms(
            terms,
            self._variable,
        )

    __radd__ = __add__

    def __neg__(self):
        return DifferentialSum._from_terms(
            {s: -c for s, c in self._terms.items()},
            self._variable,
        )

    def __sub__(self, other):
        other = _as_sum(other, self._variable)
        if other is NotImplemented:
            return other

        return self + (-other)

    def __rsub__(self, other):
        other = _as_sum(other, self._variable)
        if other is NotImplemented:
            return other

        return other + (-self)

    def __mul__(self, other):
        other = _as_sum(other, self._variable)
        if other is NotImplemented:
            return other

        terms = dict()
        for (e_a, p_a), c_a in self._terms.items():
            for (e_b, p_b), c_b in other._terms.items():
                signature = (e_a + e_b, _multiply_powers(p_a, p_b))
                terms[signature] = (
                    terms.get(signature, GaussianRational.ZERO) + c_a * c_b
                )

        return DifferentialSum._from_terms(
            terms,
            self._variable,
        )

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if isinstance(exponent, bool) or not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            raise ValueError(
                f"Differential sums can only be raised to non-negative powers, got "
                f"{exponent}"
            )

        result = DifferentialSum.constant(1, self._variable)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1

        return result

    def __eq__(self, other):
        other = _as_sum(other, self._variable)
        if other is NotImplemented:
            return other

        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        return f"DifferentialSum({str(self)!r})"

    def __str__(self):
        return format_differential_sum(self)


def _as_sum(
    value,
    variable: str,
):
    if isinstance(value, DifferentialSum):
        return value
    if isinstance(value, (str, bytes)):
        return NotImplemented
    try:
        return DifferentialSum.constant(value, variable)
    except (TypeError, ValueError):
        return NotImplemented


def format_derivative(
    order: int,
) -> str:
    if order <= 3:
        return "w" + "'" * order

    return f"w'{{{order}}}"


def _format_power(
    base: str,
    exponent: Fraction,
) -> str:
    if exponent == 1:
        return base
    if exponent.denominator == 1:
        return f"{base}^{exponent.numerator}"

    return f"{base}^({format_rational(exponent)})"


def _split_sign(coefficient: GaussianRational) -> Tuple[bool, GaussianRational]:
    if coefficient.real == 0:
        negative = coefficient.imaginary < 0
    elif coefficient.imaginary == 0:
        negative = coefficient.real < 0
    else:
        negative = False

    return negative, -coefficient if negative else coefficient


def format_monomial(
    monomial: DiffMonomial,
    variable: str = None,
) -> Tuple[bool, str]:
    """Formats a monomial without its sign.

    Returns
    -------
    Tuple[bool, str]
        Whether the monomial is negative, and its text.
    """
    if variable is None:
        variable = "z"

    negative, coefficient = _split_sign(monomial.coefficient)
    factors = list()
    if monomial.z_exponent != 0:
        factors.append(_format_power(variable, monomial.z_exponent))
    for order, multiplicity in monomial.derivative_powers:
        factors.append(_format_power(format_derivative(order), Fraction(multiplicity)))

    if coefficient != 1 or not factors:
        factors.insert(0, str(coefficient))

    return negative, "*".join(factors)


def format_differential_sum(differential_sum: DifferentialSum) -> str:
    """Formats a sum so that parsing the text gives the same sum back."""
    parts: List[str] = list()
    for monomial in differential_sum.monomials:
        negative, text = format_monomial(
            monomial,
            variable=differential_sum.variable,
        )
        if not parts:
            parts.append(f"-{text}" if negative else text)
        else:
            parts.append(f"- {text}" if negative else f"+ {text}")

    if not parts:
        return "0"

    return " ".join(parts)
