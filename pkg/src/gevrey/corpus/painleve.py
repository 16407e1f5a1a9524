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

import concurrent.futures
import dataclasses
from fractions import Fraction
import json
import logging
from pathlib import Path
from typing import (
    Dict,
    Iterable,
    List,
    Mapping,
    NamedTuple,
    Optional,
    Tuple,
    Union,
)

from gevrey.algebra.gaussian_rationals import (
    GaussianRational,
    amend_gaussian_rational,
    exact_fourth_root,
    exact_square_root,
    format_rational,
)
from gevrey.differential.differential_sums import DifferentialSum
from gevrey.differential.parsing import parse_differential_sum
from gevrey.reporting.pipeline import classify
from gevrey.reporting.reports import ClassificationReport
from gevrey.solving.extension import (
    SeedExpansion,
    extend,
)
from gevrey.utilities.amendments import (
    amend_integer,
    amend_natural_number,
)

logger = logging.getLogger(__name__)

PAINLEVE_V_TEXT = (
    "-z^2*w*(w-1)*w'' + z^2*(3/2*w - 1/2)*w'^2 - z*w*(w-1)*w'"
    " + (w-1)^3*(alpha*w^2 + beta) + gamma*z*w^2*(w-1) + delta*z^2*w^2*(w+1)"
)
PAINLEVE_III_TEXT = (
    "-z*w*w'' + z*w'^2 - w*w' + w*(alpha*w^2 + beta) + gamma*z*w^4 + delta*z"
)

EQUATIONS = (
    "P5",
    "P5-delta0",
    "P3",
)

DEFAULT_NUMBER_OF_TERMS = 12


class ParameterSet(NamedTuple):
    """Values of α, β, γ and δ."""

    alpha: GaussianRational
    beta: GaussianRational
    gamma: GaussianRational
    delta: GaussianRational

    @classmethod
    def of(
        cls,
        alpha,
        beta,
        gamma,
        delta,
    ) -> "ParameterSet":
        return cls(
            *(
                amend_gaussian_rational(
                    gaussian_rational=value,
                    name=f"Parameter {name}",
                    warning_stack_level=3,
                )
                for name, value in zip(cls._fields, (alpha, beta, gamma, delta))
            )
        )

    def as_mapping(self) -> Dict[str, GaussianRational]:
        return dict(self._asdict())

    def to_json(self) -> Dict[str, str]:
        return {name: value.to_text() for name, value in self._asdict().items()}

    @classmethod
    def from_json(
        cls,
        data: Mapping,
    ) -> "ParameterSet":
        try:
            return cls(
                *(GaussianRational.from_text(data[name]) for name in cls._fields)
            )
        except (KeyError, TypeError) as e:
            raise ValueError(f"Invalid parameter set {repr(data)}: {e}")


# Values make every radical in the closed forms a Gaussian rational.
PRESETS = {
    "P5-A": ParameterSet.of(1, 4, 2, 1),
    "P5-B": ParameterSet.of(-1, 4, 2, 1),
    "P5-C": ParameterSet.of(-1, -4, 1, 0),
    "P3-A": ParameterSet.of(4, 8, 1, -16),
}


def painleve_v(parameters: ParameterSet) -> DifferentialSum:
    return parse_differential_sum(
        PAINLEVE_V_TEXT,
        parameters=parameters.as_mapping(),
    )


def painleve_v_without_delta(parameters: ParameterSet) -> DifferentialSum:
    """Painlevé V with δ = 0, whatever δ `parameters` holds."""
    return painleve_v(parameters._replace(delta=GaussianRational.ZERO))


def painleve_iii(parameters: ParameterSet) -> DifferentialSum:
    return parse_differential_sum(
        PAINLEVE_III_TEXT,
        parameters=parameters.as_mapping(),
    )


_BUILDERS = {
    "P5": painleve_v,
    "P5-delta0": painleve_v_without_delta,
    "P3": painleve_iii,
}

Point = Tuple[int, Fraction]


@dataclasses.dataclass(frozen=True)
class CorpusCase:
    """A seed of a Painlevé equation with the classification it must reproduce.

    Attributes
    ----------
    case_id : str
        Unique identifier such as 'P5-A-6-l1'.
    equation : str
        One of 'P5', 'P5-delta0' and 'P3'.
    preset : str
        Name of the parameter preset, or None for custom parameters.
    parameters : ParameterSet
        Parameter values.
    seed : SeedExpansion
        Leading terms, in z. Its branch is the label l of the closed form.
    variable_power : int
        m of the substitution z = t^m the classification is done in.
    expected_support : tuple of (int, Fraction)
        Support in the basis z^l·d^l/dz^l.
    expected_euler_support : tuple of (int, Fraction)
        Support in the basis D^k, which the polygon is built from. Not compared if
        empty.
    expected_positive_slopes : tuple of Fraction
        Positive slopes of the Newton polygon.
    expected_gevrey_candidates : tuple of Fraction
        Candidate Gevrey orders, increasing.
    citation : str
        Where the expectations come from.
    """

    case_id: str
    equation: str
    preset: Optional[str]
    parameters: ParameterSet
    seed: SeedExpansion
    variable_power: int
    expected_support: Tuple[Point, ...]
    expected_positive_slopes: Tuple[Fraction, ...]
    expected_gevrey_candidates: Tuple[Fraction, ...]
    citation: str
    expected_euler_support: Tuple[Point, ...] = tuple()

    def __post_init__(self):
        if self.equation not in _BUILDERS:
            raise ValueError(
                f"Invalid equation {repr(self.equation)}, expected one of "
                f"{', '.join(EQUATIONS)}"
            )

    def differential_sum(self) -> DifferentialSum:
        return _BUILDERS[self.equation](self.parameters)

    def verify_seed(self):
        """Checks that the seed starts a formal solution.

        Raises
        ------
        SeedInconsistent
            When it doesn't.
        """
        extend(
            self.differential_sum(),
            self.seed,
            1,
        )

    def classify(
        self,
        number_of_terms: int = None,
    ) -> ClassificationReport:
        if number_of_terms is None:
            number_of_terms = DEFAULT_NUMBER_OF_TERMS

        return classify(
            self.differential_sum(),
            self.seed,
            number_of_terms,
            variable_power=self.variable_power,
            case_id=self.case_id,
            citation=self.citation,
            parameters=self.parameters.as_mapping(),
        )

    def mismatches(
        self,
        report: ClassificationReport,
    ) -> List[str]:
        """Names of the expectations `report` doesn't reproduce."""
        result = list()
        if set(report.weighted_support) != set(self.expected_support):
            result.append("support")
        if self.expected_euler_support and set(report.support) != set(
            self.expected_euler_support
        ):
            result.append("Euler support")
        if tuple(report.positive_slopes) != tuple(self.expected_positive_slopes):
            result.append("positive slopes")
        if set(report.gevrey_candidates) != set(self.expected_gevrey_candidates):
            result.append("Gevrey candidates")

        return result

    def to_json(self) -> Dict:
        return {
            "case_id": self.case_id,
            "equation": self.equation,
            "preset": self.preset,
            "parameters": self.parameters.to_json(),
            "seed": self.seed.to_json(),
            "variable_power": self.variable_power,
            "expected_support": [
                [k, format_rational(j0)] for k, j0 in self.expected_support
            ],
            "expected_euler_support": [
                [k, format_rational(j0)] for k, j0 in self.expected_euler_support
            ],
            "expected_positive_slopes": [
                format_rational(slope) for slope in self.expected_positive_slopes
            ],
            "expected_gevrey_candidates": [
                format_rational(candidate, always_with_denominator=False)
                for candidate in self.expected_gevrey_candidates
            ],
            "citation": self.citation,
        }

    @classmethod
    def from_json(
        cls,
        data: Mapping,
    ) -> "CorpusCase":
        try:
            return cls(
                case_id=str(data["case_id"]),
                equation=data["equation"],
                preset=data.get("preset"),
                parameters=ParameterSet.from_json(data["parameters"]),
                seed=SeedExpansion.from_json(data["seed"]),
                variable_power=amend_natural_number(
                    natural_number=data.get("variable_power", 1),
                    name="Variable power",
                    warning_stack_level=3,
                ),
                expected_support=tuple(
                    (int(k), Fraction(j0)) for k, j0 in data["expected_support"]
                ),
                expected_positive_slopes=tuple(
                    Fraction(slope) for slope in data["expected_positive_slopes"]
                ),
                expected_gevrey_candidates=tuple(
                    Fraction(candidate)
                    for candidate in data["expected_gevrey_candidates"]
                ),
                citation=data.get("citation", ""),
                expected_euler_support=tuple(
                    (int(k), Fraction(j0))
                    for k, j0 in data.get("expected_euler_support", list())
                ),
            )
        except (KeyError, TypeError) as e:
            raise ValueError(f"Invalid corpus case: {e}")


_SLOPE_ONE = (Fraction(1),)
_GEVREY_ONE = (Fraction(0), Fraction(1))


def _support(*points) -> Tuple[Point, ...]:
    return tuple((k, Fraction(j0)) for k, j0 in points)


def _sign(branch: int) -> int:
    return -1 if branch % 2 else 1


def _case(
    case_id: str,
    equation: str,
    preset: str,
    terms: Mapping,
    branch: Optional[int],
    support: Tuple[Point, ...],
    euler_support: Tuple[Point, ...],
    citation: str,
    variable_power: int = 1,
) -> CorpusCase:
    return CorpusCase(
        case_id=case_id,
        equation=equation,
        preset=preset,
        parameters=PRESETS[preset],
        seed=SeedExpansion(
            terms=terms,
            branch=branch,
        ),
        variable_power=variable_power,
        expected_support=support,
        expected_positive_slopes=_SLOPE_ONE,
        expected_gevrey_candidates=_GEVREY_ONE,
        citation=citation,
        expected_euler_support=euler_support,
    )


def corpus() -> List[CorpusCase]:
    """The built-in cases, ordered by case id.

    Seeds are the closed forms of the leading terms of the formal solutions at
    infinity, evaluated exactly at the presets.
    """
    cases = list()

    alpha, beta, gamma, delta = PRESETS["P5-A"]
    root = exact_square_root(beta / delta)
    for branch in (1, 2):
        c = _sign(branch) * root
        cases.append(
            _case(
                f"P5-A-6-l{branch}",
                "P5",
                "P5-A",
                {
                    -1: c,
                    -2: -2 * beta / delta + _sign(branch) * gamma / (2 * delta) * root,
                },
                branch,
                _support((0, -1), (1, 1), (2, 1)),
                _support((0, -1), (1, 1), (2, 1)),
                "Painlevé V with αβγδ ≠ 0, expansion w ~ c/z at infinity with "
                "c² = β/δ, Gevrey order one",
            )
        )
    cases.append(
        _case(
            "P5-A-7",
            "P5",
            "P5-A",
            {
                0: -1,
                -1: 2 * gamma / delta,
            },
            None,
            _support((0, -2), (1, 0), (2, 0)),
            _support((0, -2), (1, 1), (2, 0)),
            "Painlevé V with αβγδ ≠ 0, expansion w ~ -1 + 2γ/(δz) at infinity, "
            "Gevrey order one",
        )
    )

    alpha, beta, gamma, delta = PRESETS["P5-B"]
    root = exact_square_root(-delta / alpha)
    for branch in (1, 2):
        cases.append(
            _case(
                f"P5-B-8-l{branch}",
                "P5",
                "P5-B",
                {
                    1: _sign(branch) * root,
                    0: 2
                    + _sign(branch) * gamma / (2 * exact_square_root(-alpha * delta)),
                },
                branch,
                _support((0, -4), (1, -2), (2, -2)),
                _support((0, -4), (1, -2), (2, -2)),
                "Painlevé V with αβγδ ≠ 0, expansion w ~ cz at infinity with "
                "c² = -δ/α, Gevrey order one",
            )
        )

    alpha, beta, gamma, delta = PRESETS["P5-C"]
    for branch in (3, 4):
        cases.append(
            _case(
                f"P5-C-9-l{branch}",
                "P5-delta0",
                "P5-C",
                {
                    Fraction(-1, 2): _sign(branch) * exact_square_root(-beta / gamma),
                    -1: beta / gamma,
                },
                branch,
                _support((0, -1), (1, 1), (2, 1)),
                _support((0, -1), (1, 1), (2, 1)),
                "Painlevé V with δ = 0 and αβγ ≠ 0, expansion w ~ c·z^(-1/2) at "
                "infinity with c² = -β/γ, classified in t = z^(1/2), Gevrey order "
                "one",
                variable_power=2,
            )
        )
    for branch in (3, 4):
        cases.append(
            _case(
                f"P5-C-10-l{branch}",
                "P5-delta0",
                "P5-C",
                {
                    Fraction(1, 2): _sign(branch) * exact_square_root(-gamma / alpha),
                    0: 1,
                },
                branch,
                _support((0, -4), (1, -2), (2, -2)),
                _support((0, -4), (1, -2), (2, -2)),
                "Painlevé V with δ = 0 and αβγ ≠ 0, expansion w ~ c·z^(1/2) at "
                "infinity with c² = -γ/α, classified in t = z^(1/2), Gevrey order "
                "one",
                variable_power=2,
            )
        )

    alpha, beta, gamma, delta = PRESETS["P3-A"]
    root = exact_fourth_root(-delta / gamma)
    product_root = exact_square_root(-gamma * delta)
    for branch in (1, 2, 3, 4):
        cases.append(
            _case(
                f"P3-A-13-l{branch}",
                "P3",
                "P3-A",
                {
                    0: GaussianRational.I**branch * root,
                    -1: -(
                        _sign(branch) * beta / (4 * product_root) + alpha / (4 * gamma)
                    ),
                },
                branch,
                _support((0, -1), (1, 1), (2, 1)),
                _support((0, -1), (1, 2), (2, 1)),
                "Painlevé III with αβγδ ≠ 0, expansion w ~ c at infinity with "
                "c⁴ = -δ/γ, Gevrey order one",
            )
        )

    return sorted(cases, key=lambda case: case.case_id)


def load_cases(path: Union[str, Path]) -> List[CorpusCase]:
    """Reads cases from a JSON file.

    The file holds either a list of cases or an object with a 'cases' list, each
    case in the format of `CorpusCase.to_json`.

    Raises
    ------
    ValueError
        When the file isn't valid JSON or a case is malformed.
    """
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise ValueError(f"Cases file {path} isn't valid JSON: {e}")
    if isinstance(data, Mapping):
        data = data.get("cases")
    if not isinstance(data, list):
        raise ValueError(f"Cases file {path} holds no list of cases")

    return [CorpusCase.from_json(case) for case in data]


def dump_cases(
    cases: Iterable[CorpusCase],
    path: Union[str, Path],
):
    Path(path).write_text(
        json.dumps(
            {"cases": [case.to_json() for case in cases]},
            indent=2,
            ensure_ascii=False,
        ),
        encoding="utf-8",
    )


class CaseOutcome(NamedTuple):
    """Result of checking one case.

    `report` is None when the pipeline failed, `message` says what went wrong.
    """

    case_id: str
    passed: bool
    report: Optional[ClassificationReport]
    message: str


def _check_case(
    case_data: Dict,
    number_of_terms: int,
) -> Tuple[str, bool, Optional[Dict], str]:
    # Runs in worker processes, so only JSON goes in and out.
    case = CorpusCase.from_json(case_data)
    try:
        report = case.classify(number_of_terms)
    except (ValueError, ArithmeticError) as e:
        return case.case_id, False, None, f"{type(e).__name__}: {e}"

    mismatches = case.mismatches(report)
    if mismatches:
        message = f"Mismatching {', '.join(mismatches)}"
    else:
        message = "ok"

    return case.case_id, not mismatches, report.to_json(), message


def run_corpus_check(
    cases: Iterable[CorpusCase] = None,
    jobs: int = None,
    number_of_terms: int = None,
) -> List[CaseOutcome]:
    """Classifies every case and compares it against its expectations.

    Parameters
    ----------
    cases : Iterable[CorpusCase]
        Cases to check. Defaults to the built-in corpus.
    jobs : int
        Number of worker processes. Defaults to 1, which checks the cases in this
        process one after another.
    number_of_terms : int
        Number of slots to solve past each seed. Defaults to 12.

    Returns
    -------
    List[CaseOutcome]
        One outcome per case, ordered by case id.
    """
    if cases is None:
        cases = corpus()
    cases = list(cases)
    if jobs is None:
        jobs = 1
    jobs = amend_integer(
        integer=jobs,
        name="Jobs",
        type_mismatch_action="error",
        minimum_value=1,
        value_violation_action="error",
    )
    if number_of_terms is None:
        number_of_terms = DEFAULT_NUMBER_OF_TERMS
    number_of_terms = amend_natural_number(
        natural_number=number_of_terms,
        name="Number of terms",
    )

    payloads = [case.to_json() for case in cases]
    if jobs > 1 and len(payloads) > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as executor:
            results = list(
                executor.map(
                    _check_case,
                    payloads,
                    [number_of_terms] * len(payloads),
                )
            )
    else:
        results = [_check_case(payload, number_of_terms) for payload in payloads]

    outcomes = list()
    for case_id, passed, report, message in results:
        logger.info("%s: %s", case_id, message)
        outcomes.append(
            CaseOutcome(
                case_id=case_id,
                passed=passed,
                report=None if report is None else ClassificationReport.from_json(report),
                message=message,
            )
        )

    return sorted(outcomes, key=lambda outcome: outcome.case_id)
