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
import json
from typing import (
    Dict,
    Mapping,
    Optional,
    Tuple,
)

from gevrey.algebra.exponents import RamifiedExponent
from gevrey.algebra.gaussian_rationals import (
    GaussianRational,
    format_rational,
)
from gevrey.solving.extension import SeedExpansion

SCHEMA_VERSION = 1

Point = Tuple[int, Fraction]
Term = Tuple[Fraction, GaussianRational]


def _format_exponent(
    exponent: Fraction,
    ramification: int,
) -> str:
    return str(RamifiedExponent.from_value(exponent, ramification))


def _points_to_json(points: Tuple[Point, ...]):
    return [[k, format_rational(j)] for k, j in points]


def _points_from_json(data) -> Tuple[Point, ...]:
    return tuple((int(k), Fraction(j)) for k, j in data)


def _terms_to_json(
    terms: Tuple[Term, ...],
    ramification: int,
):
    return [
        {
            "exponent": _format_exponent(exponent, ramification),
            "value": value.to_json(),
        }
        for exponent, value in terms
    ]


def _terms_from_json(data) -> Tuple[Term, ...]:
    return tuple(
        (
            Fraction(term["exponent"]),
            GaussianRational.from_json(term["value"]),
        )
        for term in data
    )


@dataclasses.dataclass(frozen=True)
class ClassificationReport:
    """Everything one run of the pipeline found out about a seed.

    Exponents of coefficients are serialized on the solution grid as 'n/ρ', every
    other rational as reduced 'p/q'. Only growth log-magnitudes are floats.

    Attributes
    ----------
    equation : str
        The differential sum, as text.
    seed : SeedExpansion
        The seed that was extended.
    coefficients : tuple of (Fraction, GaussianRational)
        Every slot from the leading exponent down, zeros included.
    characteristic_values : tuple of (Fraction, GaussianRational)
        Slot exponent and the characteristic value used to solve it.
    shift : Fraction
        σ, the offset between a slot and the residual exponent it's solved at.
    residual_leading_exponent : Fraction or None
        Leading exponent of the residual of the partial sum, None if it vanishes.
    variable_power : int
        m of the substitution z = t^m made before building the operator.
    monomial_factor : Fraction
        N, the power of t the substituted equation was multiplied by.
    support : tuple of (int, Fraction)
        Support of the operator in the basis D^k.
    weighted_support : tuple of (int, Fraction)
        Support of the operator in the basis z^l·d^l/dz^l.
    hull_vertices : tuple of (int, Fraction)
        Vertices of the lower boundary of the Newton polygon.
    positive_slopes : tuple of Fraction
        Positive edge slopes, increasing.
    gevrey_candidates : tuple of Fraction
        {0} and the inverses of the positive slopes, increasing.
    growth : tuple of (int, float)
        s and log|c_s| for every nonzero coefficient, when there are enough of them.
    """

    equation: str
    seed: SeedExpansion
    coefficients: Tuple[Term, ...]
    characteristic_values: Tuple[Term, ...]
    shift: Fraction
    residual_leading_exponent: Optional[Fraction]
    parameters: Dict[str, GaussianRational] = dataclasses.field(default_factory=dict)
    case_id: Optional[str] = None
    citation: Optional[str] = None
    variable_power: int = 1
    monomial_factor: Fraction = Fraction(0)
    support: Tuple[Point, ...] = tuple()
    weighted_support: Tuple[Point, ...] = tuple()
    hull_vertices: Tuple[Point, ...] = tuple()
    positive_slopes: Tuple[Fraction, ...] = tuple()
    gevrey_candidates: Tuple[Fraction, ...] = tuple()
    interpretation: Optional[str] = None
    growth: Tuple[Tuple[int, float], ...] = tuple()
    schema_version: int = SCHEMA_VERSION

    @property
    def ramification(self) -> int:
        return self.seed.ramification

    def to_json(self) -> Dict:
        ramification = self.ramification

        return {
            "schema_version": self.schema_version,
            "case_id": self.case_id,
            "citation": self.citation,
            "equation": self.equation,
            "parameters": {
                name: value.to_text() for name, value in self.parameters.items()
            },
            "ramification": ramification,
            "seed": self.seed.to_json(),
            "coefficients": _terms_to_json(self.coefficients, ramification),
            "characteristic_values": _terms_to_json(
                self.characteristic_values,
                ramification,
            ),
            "shift": format_rational(self.shift),
            "residual_leading_exponent": (
                None
                if self.residual_leading_exponent is None
                else format_rational(self.residual_leading_exponent)
            ),
            "variable_power": self.variable_power,
            "monomial_factor": format_rational(self.monomial_factor),
            "support_basis": "euler",
            "support": _points_to_json(self.support),
            "weighted_support": _points_to_json(self.weighted_support),
            "hull_vertices": _points_to_json(self.hull_vertices),
            "positive_slopes": [format_rational(s) for s in self.positive_slopes],
            "gevrey_candidates": [
                format_rational(c, always_with_denominator=False)
                for c in self.gevrey_candidates
            ],
            "interpretation": self.interpretation,
            "growth": [
                {
                    "s": s,
                    "log_magnitude": log_magnitude,
                }
                for s, log_magnitude in self.growth
            ],
        }

    @classmethod
    def from_json(
        cls,
        data: Mapping,
    ) -> "ClassificationReport":
        """Rebuilds a report from `to_json` output.

        Raises
        ------
        ValueError
            When the data is malformed or of another schema version.
        """
        try:
            if data["schema_version"] != SCHEMA_VERSION:
                raise ValueError(
                    f"Unsupported schema version {repr(data['schema_version'])}"
                )
            residual = data["residual_leading_exponent"]
            if data.get("support_basis", "euler") != "euler":
                raise ValueError(
                    f"Unsupported support basis {repr(data['support_basis'])}"
                )

            return cls(
                schema_version=data["schema_version"],
                case_id=data.get("case_id"),
                citation=data.get("citation"),
                equation=data["equation"],
                parameters={
                    name: GaussianRational.from_text(value)
                    for name, value in data.get("parameters", dict()).items()
                },
                seed=SeedExpansion.from_json(data["seed"]),
                coefficients=_terms_from_json(data["coefficients"]),
                characteristic_values=_terms_from_json(data["characteristic_values"]),
                shift=Fraction(data["shift"]),
                residual_leading_exponent=(
                    None if residual is None else Fraction(residual)
                ),
                variable_power=int(data.get("variable_power", 1)),
                monomial_factor=Fraction(data.get("monomial_factor", "0")),
                support=_points_from_json(data.get("support", list())),
                weighted_support=_points_from_json(
                    data.get("weighted_support", list())
                ),
                hull_vertices=_points_from_json(data.get("hull_vertices", list())),
                positive_slopes=tuple(
                    Fraction(s) for s in data.get("positive_slopes", list())
                ),
                gevrey_candidates=tuple(
                    Fraction(c) for c in data.get("gevrey_candidates", list())
                ),
                interpretation=data.get("interpretation"),
                growth=tuple(
                    (int(point["s"]), float(point["log_magnitude"]))
                    for point in data.get("growth", list())
                ),
            )
        except (KeyError, TypeError, ZeroDivisionError) as e:
            raise ValueError(f"Invalid classification report: {e}")

    def dumps(
        self,
        indent: int = None,
    ) -> str:
        if indent is None:
            indent = 2

        return json.dumps(
            self.to_json(),
            indent=indent,
            ensure_ascii=False,
        )

    @classmethod
    def loads(
        cls,
        text: str,
    ) -> "ClassificationReport":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise ValueError(f"Report isn't valid JSON: {e}")

        return cls.from_json(data)


def format_coefficient_table(report: ClassificationReport) -> str:
    """Two columns, exponent and coefficient, one slot per line."""
    rows = [("exponent", "coefficient")] + [
        (format_rational(exponent, always_with_denominator=False), str(value))
        for exponent, value in report.coefficients
    ]
    width = max(len(exponent) for exponent, _ in rows)

    return "\n".join(f"{exponent:>{width}}  {value}" for exponent, value in rows)
