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
import re
from typing import (
    List,
    Mapping,
    NamedTuple,
    Optional,
)

from gevrey.algebra.gaussian_rationals import (
    GaussianRational,
    amend_gaussian_rational,
)
from gevrey.differential.differential_sums import (
    MAXIMUM_DERIVATIVE_ORDER,
    DifferentialSum,
)
from gevrey.errors import DifferentialSumSyntaxError

RESERVED_NAMES = frozenset(
    (
        "i",
        "t",
        "w",
        "z",
    )
)

_TOKEN_PATTERN = re.compile(
    r"""
    (?P<space>\s+)
    | (?P<integer>\d+)
    | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
    | (?P<symbol>[-+*/^(){}'])
    """,
    re.VERBOSE,
)
_NAME_PATTERN = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


class _Token(NamedTuple):
    kind: str
    text: str
    position: int


def _tokenize(text: str) -> List[_Token]:
    tokens = list()
    position = 0
    while position < len(text):
        match = _TOKEN_PATTERN.match(text, position)
        if match is None:
            raise DifferentialSumSyntaxError(
                f"Unexpected character {repr(text[position])}",
                text=text,
                position=position,
            )
        if match.lastgroup != "space":
            tokens.append(
                _Token(
                    kind=match.lastgroup,
                    text=match.group(),
                    position=position,
                )
            )
        position = match.end()
    tokens.append(_Token("end", "", len(text)))

    return tokens


class _Parser:
    def __init__(
        self,
        text: str,
        parameters: Mapping[str, GaussianRational],
    ):
        self._text = text
        self._tokens = _tokenize(text)
        self._index = 0
        self._parameters = parameters
        self._variable: Optional[str] = None

    def _peek(self) -> _Token:
        return self._tokens[self._index]

    def _advance(self) -> _Token:
        token = self._tokens[self._index]
        self._index += 1

        return token

    def _error(
        self,
        message: str,
        token: _Token = None,
    ) -> DifferentialSumSyntaxError:
        if token is None:
            token = self._peek()

        return DifferentialSumSyntaxError(
            message,
            text=self._text,
            position=token.position,
        )

    def _unexpected(self) -> DifferentialSumSyntaxError:
        token = self._peek()
        if token.kind == "end":
            return self._error("Unexpected end of input")

        return self._error(f"Unexpected {repr(token.text)}")

    def _accept(
        self,
        text: str,
    ) -> bool:
        token = self._peek()
        if token.kind == "symbol" and token.text == text:
            self._index += 1
            return True

        return False

    def _expect(
        self,
        text: str,
    ):
        if not self._accept(text):
            token = self._peek()
            if token.kind == "end":
                raise self._error(f"Expected {repr(text)} before end of input")
            raise self._error(f"Expected {repr(text)}, got {repr(token.text)}")

    def parse(self) -> DifferentialSum:
        result = self._sum()
        if self._peek().kind != "end":
            raise self._unexpected()

        return result.with_variable(self._variable or "z")

    def _sum(self) -> DifferentialSum:
        negative = False
        if self._accept("-"):
            negative = True
        else:
            self._accept("+")
        result = self._term()
        if negative:
            result = -result

        while True:
            if self._accept("+"):
                result = result + self._term()
            elif self._accept("-"):
                result = result - self._term()
            else:
                return result

    def _term(self) -> DifferentialSum:
        result = self._factor()
        while self._accept("*"):
            result = result * self._factor()

        return result

    def _factor(self) -> DifferentialSum:
        base = self._base()
        if not self._accept("^"):
            return base

        exponent_token = self._peek()
        exponent = self._exponent()
        if exponent.denominator == 1 and exponent >= 0:
            return base ** int(exponent)

        monomials = base.monomials
        if (
            len(monomials) != 1
            or monomials[0].derivative_powers
            or (exponent.denominator != 1 and monomials[0].coefficient != 1)
        ):
            raise self._error(
                f"Exponent {exponent} is only allowed on a single monomial without w",
                exponent_token,
            )
        coefficient = monomials[0].coefficient
        if exponent.denominator == 1:
            coefficient = coefficient ** int(exponent)
        return DifferentialSum(
            monomials=((coefficient, monomials[0].z_exponent * exponent, None),),
        )

    def _exponent(self) -> Fraction:
        if self._accept("("):
            negative = self._accept("-")
            numerator = self._integer()
            denominator = 1
            if self._accept("/"):
                denominator = self._positive_integer()
            self._expect(")")
            exponent = Fraction(numerator, denominator)
        else:
            negative = self._accept("-")
            exponent = Fraction(self._integer())

        return -exponent if negative else exponent

    def _integer(self) -> int:
        token = self._peek()
        if token.kind != "integer":
            raise self._unexpected()
        self._index += 1

        return int(token.text)

    def _positive_integer(self) -> int:
        token = self._peek()
        value = self._integer()
        if value == 0:
            raise self._error("Denominator must be positive", token)

        return value

    def _base(self) -> DifferentialSum:
        token = self._peek()

        if token.kind == "integer":
            numerator = self._integer()
            denominator = 1
            if self._accept("/"):
                denominator = self._positive_integer()
            return DifferentialSum.constant(Fraction(numerator, denominator))

        if token.kind == "name":
            self._index += 1
            if token.text == "i":
                return DifferentialSum.constant(GaussianRational.I)
            if token.text in ("z", "t"):
                if self._variable is not None and self._variable != token.text:
                    raise self._error(
                        f"Variables {repr(self._variable)} and {repr(token.text)} "
                        f"can't be mixed",
                        token,
                    )
                self._variable = token.text
                return DifferentialSum.independent(1)
            if token.text == "w":
                return DifferentialSum.dependent(self._derivative_order())
            if token.text in self._parameters:
                return DifferentialSum.constant(self._parameters[token.text])
            raise self._error(f"Unknown name {repr(token.text)}", token)

        if self._accept("("):
            result = self._sum()
            self._expect(")")
            return result

        raise self._unexpected()

    def _derivative_order(self) -> int:
        order = 0
        start = self._peek()
        while self._accept("'"):
            order += 1
            if order == 1 and self._accept("{"):
                order_token = self._peek()
                order = self._integer()
                self._expect("}")
                if order > MAXIMUM_DERIVATIVE_ORDER:
                    raise self._error(
                        f"Derivative order {order} is greater than "
                        f"{MAXIMUM_DERIVATIVE_ORDER}",
                        order_token,
                    )
                return order

        if order > MAXIMUM_DERIVATIVE_ORDER:
            raise self._error(
                f"Derivative order {order} is greater than {MAXIMUM_DERIVATIVE_ORDER}",
                start,
            )

        return order


def amend_parameters(
    parameters: Mapping = None,
) -> Mapping[str, GaussianRational]:
    """Checks parameter names and casts their values to Gaussian rationals.

    Raises
    ------
    TypeError
        When `parameters` isn't a mapping or a value can't be cast.

    ValueError
        When a name is reserved or isn't an identifier.
    """
    if parameters is None:
        return dict()
    if not isinstance(parameters, Mapping):
        raise TypeError(f"Parameters {repr(parameters)} isn't a mapping")

    amended = dict()
    for name, value in parameters.items():
        if not isinstance(name, str) or _NAME_PATTERN.fullmatch(name) is None:
            raise ValueError(f"Invalid parameter name {repr(name)}")
        if name in RESERVED_NAMES:
            raise ValueError(f"Parameter name {repr(name)} is reserved")
        amended[name] = amend_gaussian_rational(
            gaussian_rational=value,
            name=f"Parameter {name}",
            warning_stack_level=4,
        )

    return amended


def parse_differential_sum(
    text: str,
    parameters: Mapping = None,
) -> DifferentialSum:
    """Parses a differential sum.

    The grammar, whitespace-insensitive:

        sum      := ['+' | '-'] term (('+' | '-') term)*
        term     := factor ('*' factor)*
        factor   := base ('^' exponent)?
        exponent := ['-'] integer | '(' ['-'] integer ['/' integer] ')'
        base     := rational | 'i' | 'z' | 't' | derivative | name | '(' sum ')'
        rational := integer ('/' positive-integer)?

    Derivatives are written w, w', w'', w''' or w'{k}, up to order 9. Negative and
    fractional exponents are only allowed on a single monomial without w. Names are
    looked up in `parameters`.

    Parameters
    ----------
    text : str
        The text to parse.
    parameters : Mapping
        Values of named constants such as 'alpha'. Defaults to no names.

    Returns
    -------
    DifferentialSum
        The parsed sum, in variable 't' if the text uses t and 'z' otherwise.

    Raises
    ------
    TypeError
        When `text` isn't a str.

    DifferentialSumSyntaxError
        When `text` doesn't conform to the grammar.
    """
    if not isinstance(text, str):
        raise TypeError(f"Differential sum text {repr(text)} isn't a str")
    parameters = amend_parameters(parameters)

    return _Parser(text, parameters).parse()
