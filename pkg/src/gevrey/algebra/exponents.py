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
import functools
from typing import Tuple

from gevrey.utilities.amendments import (
    amend_integer,
    amend_natural_number,
    amend_rational,
    find_least_common_multiplier,
)


@functools.total_ordering
class RamifiedExponent:
    """An exponent n/ρ on the grid (1/ρ)ℤ of a ramified series.

    The numerator and ramification are kept as given, so 2/2 and 1/1 are distinct
    representations of the same exponent. They still compare and hash equal, since
    comparison is done by cross-multiplication.

    Parameters
    ----------
    numerator : int
        The numerator n.
    ramification : int
        The ramification ρ, a positive integer. Defaults to 1.
    """

    __slots__ = (
        "_numerator",
        "_ramification",
    )

    def __init__(
        self,
        numerator: int,
        ramification: int = None,
    ):
        if ramification is None:
            ramification = 1

        self._numerator = amend_integer(
            integer=numerator,
            name="Numerator",
            type_mismatch_action="warning",
            warning_stack_level=3,
        )
        self._ramification = amend_natural_number(
            natural_number=ramification,
            name="Ramification",
            warning_stack_level=3,
        )

    @classmethod
    def from_value(
        cls,
        value,
        ramification: int = None,
    ) -> "RamifiedExponent":
        """Places a rational exponent on a grid.

        Parameters
        ----------
        value
            Anything `amend_rational` accepts, or a RamifiedExponent.
        ramification : int
            Grid to place the exponent on. Must be a multiple of the exponent's
            reduced denominator. Defaults to that denominator.

        Returns
        -------
        RamifiedExponent
            The exponent on the requested grid.

        Raises
        ------
        ValueError
            When the exponent isn't on the requested grid.
        """
        value = exponent_value(value)
        if ramification is None:
            ramification = value.denominator
        ramification = amend_natural_number(
            natural_number=ramification,
            name="Ramification",
            warning_stack_level=3,
        )
        if ramification % value.denominator != 0:
            raise ValueError(
                f"Exponent {value} isn't on the grid with ramification {ramification}"
            )

        return cls(
            numerator=value.numerator * (ramification // value.denominator),
            ramification=ramification,
        )

    @property
    def numerator(self) -> int:
        return self._numerator

    @property
    def ramification(self) -> int:
        return self._ramification

    @property
    def value(self) -> Fraction:
        return Fraction(
            self._numerator,
            self._ramification,
        )

    def lift(
        self,
        ramification: int,
    ) -> "RamifiedExponent":
        ramification = amend_natural_number(
            natural_number=ramification,
            name="Ramification",
            warning_stack_level=3,
        )
        if ramification % self._ramification != 0:
            raise ValueError(
                f"Can't lift {self} to ramification {ramification}, it isn't a "
                f"multiple of {self._ramification}"
            )

        return RamifiedExponent(
            numerator=self._numerator * (ramification // self._ramification),
            ramification=ramification,
        )

    def _pair(self, other) -> Tuple[int, int]:
        if isinstance(other, RamifiedExponent):
            return other._numerator, other._ramification
        other = Fraction(other)

        return other.numerator, other.denominator

    def __eq__(self, other):
        try:
            numerator, ramification = self._pair(other)
        except (TypeError, ValueError):
            return NotImplemented

        return self._numerator * ramification == numerator * self._ramification

    def __lt__(self, other):
        try:
            numerator, ramification = self._pair(other)
        except (TypeError, ValueError):
            return NotImplemented

        return self._numerator * ramification < numerator * self._ramification

    def __hash__(self):
        return hash(self.value)

    def __add__(self, other):
        return _on_common_grid(self, other, lambda a, b: a + b)

    __radd__ = __add__

    def __sub__(self, other):
        return _on_common_grid(self, other, lambda a, b: a - b)

    def __rsub__(self, other):
        return _on_common_grid(self, other, lambda a, b: b - a)

    def __neg__(self):
        return RamifiedExponent(
            numerator=-self._numerator,
            ramification=self._ramification,
        )

    def __repr__(self):
        return f"RamifiedExponent({self._numerator}, {self._ramification})"

    def __str__(self):
        return f"{self._numerator}/{self._ramification}"


def _on_common_grid(
    exponent: RamifiedExponent,
    other,
    operation,
):
    if not isinstance(other, RamifiedExponent):
        try:
            other = RamifiedExponent.from_value(other)
        except (TypeError, ValueError):
            return NotImplemented
    ramification = find_least_common_multiplier(
        (
            exponent.ramification,
            other.ramification,
        )
    )

    return RamifiedExponent(
        numerator=operation(
            exponent.lift(ramification).numerator,
            other.lift(ramification).numerator,
        ),
        ramification=ramification,
    )


def exponent_value(exponent) -> Fraction:
    """Returns the exact value of anything that can act as an exponent.

    Parameters
    ----------
    exponent
        A RamifiedExponent or anything `amend_rational` accepts.

    Returns
    -------
    Fraction
        The exponent's value.
    """
    if isinstance(exponent, RamifiedExponent):
        return exponent.value

    return amend_rational(
        rational=exponent,
        name="Exponent",
        warning_stack_level=4,
    )
