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

from typing import (
    Any,
    Iterable,
)


class GevreyError(Exception):
    """Base class of every domain error raised by gevrey."""


class DifferentialSumSyntaxError(GevreyError, ValueError):
    """Raised when a differential sum doesn't conform to the grammar.

    Attributes
    ----------
    text : str
        The text that was parsed.
    position : int
        Zero-based column where parsing failed.
    """

    def __init__(
        self,
        message: str,
        text: str,
        position: int,
    ):
        self.text = text
        self.position = position
        super().__init__(
            f"{message} at position {position}:\n{text}\n{' ' * position}^"
        )


class SeedInconsistent(GevreyError, ValueError):
    """Raised when a seed expansion doesn't start a formal solution.

    Attributes
    ----------
    exponent : Any
        Exponent where the inconsistency was detected.
    expected : Any
        Prescribed (or required) value, None if not applicable.
    derived : Any
        Value derived by the recurrence, None if not applicable.
    """

    def __init__(
        self,
        message: str,
        exponent: Any = None,
        expected: Any = None,
        derived: Any = None,
    ):
        self.exponent = exponent
        self.expected = expected
        self.derived = derived
        super().__init__(message)


class ResonanceError(GevreyError, ArithmeticError):
    """Raised when a characteristic value vanishes, so a coefficient isn't unique.

    Attributes
    ----------
    exponent : Any
        Exponent of the coefficient that couldn't be determined.
    """

    def __init__(
        self,
        message: str,
        exponent: Any = None,
    ):
        self.exponent = exponent
        super().__init__(message)


class DegenerateLeadingCoefficient(GevreyError, ValueError):
    """Raised when the highest partial derivative vanishes on the series."""


class UncertifiedLeading(GevreyError, ArithmeticError):
    """Raised when an operator coefficient has no certified leading term.

    Attributes
    ----------
    order : int
        Order of the offending coefficient.
    """

    def __init__(
        self,
        message: str,
        order: int = None,
    ):
        self.order = order
        super().__init__(message)


class CorpusMismatch(GevreyError, AssertionError):
    """Raised when corpus cases don't reproduce their recorded expectations.

    Attributes
    ----------
    case_ids : tuple of str
        Identifiers of the mismatching cases, sorted.
    """

    def __init__(
        self,
        case_ids: Iterable[str],
    ):
        self.case_ids = tuple(sorted(case_ids))
        super().__init__(f"Mismatching corpus cases: {', '.join(self.case_ids)}")
