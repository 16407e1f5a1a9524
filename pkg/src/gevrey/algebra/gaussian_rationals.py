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

import decimal
from fractions import Fraction
import math
from numbers import Rational
import re
from typing import (
    Dict,
    Optional,
    Union,
)

from gevrey.utilities.amendments import (
    amend_integer,
    amend_rational,
)

_ZERO = Fraction(0)
_ONE = Fraction(1)
_TEXT_PATTERN = re.compile(r"(?P<real>[+-]?\d+/\d+)(?P<imaginary>[+-]\d+/\d+)\*i")


class GaussianRational:
    """An exact complex number whose real and imaginary parts are rationals.

    Both parts are stored as reduced fractions.Fraction instances, so equality is
    exact structural equality. Instances are immutable.

    Parameters
    ----------
    real
        Real part, anything `amend_rational` accepts. Defaults to 0.
    imaginary
        Imaginary part, anything `amend_rational` accepts. Defaults to 0.
    """

    __slots__ = (
        "_real",
        "_imaginary",
    )

    def __init__(
        self,
        real=0,
        imaginary=0,
    ):
        self._real = amend_rational(
            rational=real,
            name="Real part",
            warning_stack_level=3,
        )
        self._imaginary = amend_rational(
            rational=imaginary,
            name="Imaginary part",
            warning_stack_level=3,
        )

    @classmethod
    def _from_parts(
        cls,
        real: Fraction,
        imaginary: Fraction,
    ) -> "GaussianRational":
        instance = object.__new__(cls)
        instance._real = real
        instance._imaginary = imaginary

        return instance

    @property
    def real(self) -> Fraction:
        return self._real

    @property
    def imaginary(self) -> Fraction:
        return self._imaginary

    def is_real(self) -> bool:
        return self._imaginary == 0

    def conjugate(self) -> "GaussianRational":
        return GaussianRational._from_parts(
            self._real,
            -self._imaginary,
        )

    def norm(self) -> Fraction:
        """Squared absolute value, exact."""
        return self._real * self._real + self._imaginary * self._imaginary

    def log_magnitude(self) -> float:
        """Natural logarithm of the absolute value.

        Computed from the exact norm, so it doesn't overflow for huge coefficients.

        Raises
        ------
        ValueError
            When the number is zero.
        """
        norm = self.norm()
        if norm == 0:
            raise ValueError("Logarithm of the magnitude of zero is undefined")

        return (math.log(norm.numerator) - math.log(norm.denominator)) / 2

    def magnitude(
        self,
        precision: int = None,
    ) -> decimal.Decimal:
        """Absolute value rounded to `precision` significant digits (default 30)."""
        if precision is None:
            precision = 30
        precision = amend_integer(
            integer=precision,
            name="Precision",
            type_mismatch_action="warning",
            minimum_value=1,
            value_violation_action="error",
            warning_stack_level=3,
        )
        norm = self.norm()

        with decimal.localcontext() as context:
            context.prec = precision
            return (
                decimal.Decimal(norm.numerator) / decimal.Decimal(norm.denominator)
            ).sqrt()

    def to_json(self) -> Dict[str, str]:
        return {
            "re": format_rational(self._real),
            "im": format_rational(self._imaginary),
        }

    @classmethod
    def from_json(
        cls,
        data,
    ) -> "GaussianRational":
        try:
            return cls(
                real=Fraction(data["re"]),
                imaginary=Fraction(data["im"]),
            )
        except (KeyError, TypeError, ValueError) as e:
            raise ValueError(f"Invalid Gaussian rational {repr(data)}: {e}")

    def to_text(self) -> str:
        """Both parts as 'p/q' strings, for example '-1/2+3/1*i'."""
        imaginary = format_rational(self._imaginary)
        if not imaginary.startswith("-"):
            imaginary = f"+{imaginary}"

        return f"{format_rational(self._real)}{imaginary}*i"

    @classmethod
    def from_text(
        cls,
        text: str,
    ) -> "GaussianRational":
        match = _TEXT_PATTERN.fullmatch(text) if isinstance(text, str) else None
        if match is None:
            raise ValueError(f"Invalid Gaussian rational text {repr(text)}")

        return cls(
            real=Fraction(match.group("real")),
            imaginary=Fraction(match.group("imaginary")),
        )

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other

        return GaussianRational._from_parts(
            self._real + other._real,
            self._imaginary + other._imaginary,
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other

        return GaussianRational._from_parts(
            self._real - other._real,
            self._imaginary - other._imaginary,
        )

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other

        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other

        if not self._imaginary and not other._imaginary:
            return GaussianRational._from_parts(
                self._real * other._real,
                _ZERO,
            )

        return GaussianRational._from_parts(
            self._real * other._real - self._imaginary * other._imaginary,
            self._real * other._imaginary + self._imaginary * other._real,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other

        norm = other.norm()
        if norm == 0:
            raise ZeroDivisionError(f"Division of {self} by zero")
        numerator = self * other.conjugate()

        return GaussianRational._from_parts(
            numerator._real / norm,
            numerator._imaginary / norm,
        )

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other

        return other / self

    def __neg__(self):
        return GaussianRational._from_parts(
            -self._real,
            -self._imaginary,
        )

    def __pos__(self):
        return self

    def __pow__(self, exponent):
        if isinstance(exponent, bool) or not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return (GaussianRational.ONE / self) ** (-exponent)

        result = GaussianRational.ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1

        return result

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other

        return self._real == other._real and self._imaginary == other._imaginary

    def __hash__(self):
        if self._imaginary == 0:
            return hash(self._real)

        return hash(
            (
                self._real,
                self._imaginary,
            )
        )

    def __bool__(self):
        return bool(self._real) or bool(self._imaginary)

    def __repr__(self):
        return f"GaussianRational({str(self._real)!r}, {str(self._imaginary)!r})"

    def __str__(self):
        if self._imaginary == 0:
            return format_rational(
                self._real,
                always_with_denominator=False,
            )

        magnitude = abs(self._imaginary)
        if magnitude == 1:
            imaginary = "i"
        else:
            imaginary = f"{format_rational(magnitude, always_with_denominator=False)}*i"

        if self._real == 0:
            return f"-{imaginary}" if self._imaginary < 0 else imaginary

        sign = "-" if self._imaginary < 0 else "+"
        real = format_rational(
            self._real,
            always_with_denominator=False,
        )

        return f"({real}{sign}{imaginary})"


GaussianRational.ZERO = GaussianRational._from_parts(_ZERO, _ZERO)
GaussianRational.ONE = GaussianRational._from_parts(_ONE, _ZERO)
GaussianRational.I = GaussianRational._from_parts(_ZERO, _ONE)


def _coerce(value) -> Union[GaussianRational, type(NotImplemented)]:
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, Rational) and not isinstance(value, bool):
        return GaussianRational._from_parts(
            Fraction(value.numerator, value.denominator),
            _ZERO,
        )

    return NotImplemented


def format_rational(
    rational: Fraction,
    always_with_denominator: bool = None,
) -> str:
    """Formats a rational as 'p/q'.

    Parameters
    ----------
    rational : Fraction
        The rational to format.
    always_with_denominator : bool
        If True, integers are written as 'p/1', which is the report format. If False,
        integers are written as 'p'. Defaults to True.

    Returns
    -------
    str
        The formatted rational.
    """
    if always_with_denominator is None:
        always_with_denominator = True
    rational = amend_rational(
        rational=rational,
        type_mismatch_action="error",
        warning_stack_level=3,
    )

    if not always_with_denominator and rational.denominator == 1:
        return str(rational.numerator)

    return f"{rational.numerator}/{rational.denominator}"


def amend_gaussian_rational(
    gaussian_rational,
    name: str = None,
    warning_stack_level: int = None,
) -> GaussianRational:
    """Amend a coefficient into a GaussianRational.

    Parameters
    ----------
    gaussian_rational
        A GaussianRational, anything `amend_rational` accepts (taken as a real
        number), a complex number (each part amended like a float) or a mapping with
        're' and 'im' rational strings.
    name : str
        What the value stands for, used in messages. Defaults to 'Coefficient'.
    warning_stack_level : int
        Stack level which to report for warnings. Defaults to 2 (whatever called this).

    Returns
    -------
    GaussianRational
        The amended coefficient.

    Raises
    ------
    TypeError
        When `gaussian_rational` can't be cast to a GaussianRational.

    Warns
    -----
    UserWarning
        When a float or complex value is taken literally.
    """
    if name is None:
        name = "Coefficient"
    warning_stack_level = amend_integer(
        integer=warning_stack_level,
        value_on_cast_error=2,
        minimum_value=2,
        value_violation_action="clamp",
        warning_stack_level=3,
    )

    if isinstance(gaussian_rational, GaussianRational):
        return gaussian_rational
    if isinstance(gaussian_rational, dict):
        return GaussianRational.from_json(gaussian_rational)
    if isinstance(gaussian_rational, complex):
        return GaussianRational._from_parts(
            amend_rational(
                rational=gaussian_rational.real,
                name=f"Real part of {name.lower()}",
                warning_stack_level=warning_stack_level + 1,
            ),
            amend_rational(
                rational=gaussian_rational.imag,
                name=f"Imaginary part of {name.lower()}",
                warning_stack_level=warning_stack_level + 1,
            ),
        )

    return GaussianRational._from_parts(
        amend_rational(
            rational=gaussian_rational,
            name=name,
            warning_stack_level=warning_stack_level + 1,
        ),
        _ZERO,
    )


def _rational_square_root(rational: Fraction) -> Optional[Fraction]:
    if rational < 0:
        return None
    numerator = math.isqrt(rational.numerator)
    denominator = math.isqrt(rational.denominator)
    if (
        numerator * numerator != rational.numerator
        or denominator * denominator != rational.denominator
    ):
        return None

    return Fraction(
        numerator,
        denominator,
    )


def exact_square_root(value) -> GaussianRational:
    """Principal square root of a Gaussian rational, if it is a Gaussian rational.

    The principal root has a positive real part, or a non-negative imaginary part
    when the real part is zero. For a negative rational r this gives i * sqrt(-r).

    Parameters
    ----------
    value
        Anything `amend_gaussian_rational` accepts.

    Returns
    -------
    GaussianRational
        The principal square root.

    Raises
    ------
    ValueError
        When the square root isn't a Gaussian rational.
    """
    value = amend_gaussian_rational(
        gaussian_rational=value,
        warning_stack_level=3,
    )
    modulus = _rational_square_root(value.norm())
    if modulus is None:
        raise ValueError(f"Square root of {value} isn't a Gaussian rational")

    real = _rational_square_root((modulus + value.real) / 2)
    imaginary = _rational_square_root((modulus - value.real) / 2)
    if real is None or imaginary is None:
        raise ValueError(f"Square root of {value} isn't a Gaussian rational")
    if value.imaginary < 0:
        imaginary = -imaginary

    return GaussianRational._from_parts(
        real,
        imaginary,
    )


def exact_fourth_root(value) -> GaussianRational:
    """Principal fourth root, the principal square root taken twice."""
    return exact_square_root(exact_square_root(value))

