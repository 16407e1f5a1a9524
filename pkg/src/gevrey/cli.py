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

"""Command-line interface, `gevrey <command> ...` or `python -m gevrey ...`.

Exit codes are 0 on success, 1 on malformed input, 2 on a resonance, 3 on a
degenerate leading coefficient and 4 on a corpus mismatch.
"""

import argparse
import fnmatch
from fractions import Fraction
import json
import logging
from pathlib import Path
import sys
from typing import (
    Dict,
    List,
    NamedTuple,
    Optional,
    Sequence,
)
import warnings

from gevrey.algebra.gaussian_rationals import (
    GaussianRational,
    format_rational,
)
from gevrey.corpus.painleve import (
    DEFAULT_NUMBER_OF_TERMS,
    corpus,
    load_cases,
    run_corpus_check,
)
from gevrey.differential.differential_sums import DifferentialSum
from gevrey.differential.parsing import (
    amend_parameters,
    parse_differential_sum,
)
from gevrey.differential.variations import first_variation
from gevrey.errors import (
    CorpusMismatch,
    DegenerateLeadingCoefficient,
    ResonanceError,
)
from gevrey.polygons.newton_polygons import (
    GEVREY_INTERPRETATION,
    NewtonPolygon,
    gevrey_candidates,
    polygon,
)
from gevrey.reporting.pipeline import (
    classify,
    solve,
)
from gevrey.reporting.reports import format_coefficient_table
from gevrey.reporting.rendering import (
    render_ascii,
    render_svg,
)
from gevrey.solving.extension import SeedExpansion

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_RESONANCE = 2
EXIT_DEGENERATE = 3
EXIT_MISMATCH = 4


class _ArgumentParser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors, which is the resonance code here.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(
            EXIT_USAGE,
            f"{self.prog}: error: {message}\n",
        )


class _Problem(NamedTuple):
    differential_sum: DifferentialSum
    seed: Optional[SeedExpansion]
    variable_power: int
    parameters: Dict[str, GaussianRational]
    case_id: Optional[str] = None
    citation: Optional[str] = None


def _parse_parameters(assignments: Optional[Sequence[str]]) -> Dict:
    parameters = dict()
    for assignment in assignments or tuple():
        name, separator, value = assignment.partition("=")
        if not separator:
            raise ValueError(
                f"Parameter {repr(assignment)} isn't of the form NAME=VALUE"
            )
        constant = parse_differential_sum(value)
        if not constant.is_constant():
            raise ValueError(f"Parameter value {repr(value)} isn't a constant")
        parameters[name.strip()] = constant.constant_value()

    return amend_parameters(parameters)


def _read_equation(text: str) -> str:
    path = Path(text)
    try:
        if path.is_file():
            return path.read_text(encoding="utf-8").strip()
    except OSError:
        pass

    return text


def _find_case(case_id: str):
    for case in corpus():
        if case.case_id == case_id:
            return case

    raise ValueError(f"Unknown corpus case {repr(case_id)}")


def _problem(
    arguments: argparse.Namespace,
    needs_seed: bool = True,
) -> _Problem:
    if arguments.corpus is not None:
        case = _find_case(arguments.corpus)

        return _Problem(
            differential_sum=case.differential_sum(),
            seed=case.seed,
            variable_power=case.variable_power,
            parameters=case.parameters.as_mapping(),
            case_id=case.case_id,
            citation=case.citation,
        )

    if arguments.equation is None:
        raise ValueError("Either --corpus or --equation is required")
    parameters = _parse_parameters(arguments.parameter)
    differential_sum = parse_differential_sum(
        _read_equation(arguments.equation),
        parameters=parameters,
    )

    seed = None
    if needs_seed:
        if arguments.seed is None:
            raise ValueError("--seed is required with --equation")
        seed = SeedExpansion.from_text(
            arguments.seed,
            parameters=parameters,
        )

    return _Problem(
        differential_sum=differential_sum,
        seed=seed,
        variable_power=getattr(arguments, "variable_power", None) or 1,
        parameters=parameters,
    )


def _emit(
    text: str,
    out: Optional[str],
):
    if out is None:
        print(text)
    else:
        Path(out).write_text(text + "\n", encoding="utf-8")
        logger.info("Wrote %s", out)


def _command_solve(arguments: argparse.Namespace) -> int:
    problem = _problem(arguments)
    report = solve(
        problem.differential_sum,
        problem.seed,
        arguments.number_of_terms,
        case_id=problem.case_id,
        citation=problem.citation,
        parameters=problem.parameters,
    )
    _emit(
        report.dumps() if arguments.json else format_coefficient_table(report),
        arguments.out,
    )

    return EXIT_OK


def _draw(
    newton_polygon: NewtonPolygon,
    arguments: argparse.Namespace,
    title: str,
):
    if arguments.svg is not None:
        Path(arguments.svg).write_text(
            render_svg(newton_polygon, title=title) + "\n",
            encoding="utf-8",
        )
        logger.info("Wrote %s", arguments.svg)
    if arguments.ascii:
        # Stdout may already carry JSON.
        stream = sys.stderr if arguments.out is None else sys.stdout
        print(render_ascii(newton_polygon), file=stream)


def _command_classify(arguments: argparse.Namespace) -> int:
    problem = _problem(arguments)
    report = classify(
        problem.differential_sum,
        problem.seed,
        arguments.number_of_terms,
        variable_power=problem.variable_power,
        case_id=problem.case_id,
        citation=problem.citation,
        parameters=problem.parameters,
    )
    _emit(
        report.dumps(),
        arguments.out,
    )
    _draw(
        polygon(report.support),
        arguments,
        title=report.case_id or "Newton polygon",
    )

    return EXIT_OK


def _command_variation(arguments: argparse.Namespace) -> int:
    problem = _problem(
        arguments,
        needs_seed=False,
    )
    _emit(
        str(first_variation(problem.differential_sum)),
        arguments.out,
    )

    return EXIT_OK


def _parse_points(text: str) -> List:
    points = list()
    for part in text.split(";"):
        if not part.strip():
            continue
        k, separator, j0 = part.partition(",")
        if not separator:
            raise ValueError(f"Support point {repr(part.strip())} isn't 'k,j0'")
        try:
            points.append((int(k), Fraction(j0.strip())))
        except (TypeError, ValueError):
            raise ValueError(f"Support point {repr(part.strip())} isn't 'k,j0'")

    return points


def _command_polygon(arguments: argparse.Namespace) -> int:
    newton_polygon = polygon(_parse_points(arguments.points))
    candidates = sorted(gevrey_candidates(newton_polygon))

    if arguments.json:
        text = json.dumps(
            {
                "support": [
                    [point.k, format_rational(point.j0)]
                    for point in newton_polygon.support
                ],
                "hull_vertices": [
                    [k, format_rational(j0)] for k, j0 in newton_polygon.vertices
                ],
                "positive_slopes": [
                    format_rational(slope) for slope in newton_polygon.positive_slopes
                ],
                "gevrey_candidates": [
                    format_rational(candidate, always_with_denominator=False)
                    for candidate in candidates
                ],
                "interpretation": GEVREY_INTERPRETATION,
            },
            indent=2,
            ensure_ascii=False,
        )
    else:
        text = "\n".join(
            (
                "vertices: "
                + ", ".join(
                    f"({k}, {format_rational(j0, always_with_denominator=False)})"
                    for k, j0 in newton_polygon.vertices
                ),
                "positive slopes: "
                + ", ".join(
                    format_rational(slope, always_with_denominator=False)
                    for slope in newton_polygon.positive_slopes
                ),
                "gevrey candidates: "
                + ", ".join(
                    format_rational(candidate, always_with_denominator=False)
                    for candidate in candidates
                ),
                f"({GEVREY_INTERPRETATION})",
            )
        )
    _emit(
        text,
        arguments.out,
    )
    _draw(
        newton_polygon,
        arguments,
        title="Newton polygon",
    )

    return EXIT_OK


def _command_corpus_check(arguments: argparse.Namespace) -> int:
    cases = corpus() if arguments.cases is None else load_cases(arguments.cases)
    if arguments.filter is not None:
        cases = [
            case for case in cases if fnmatch.fnmatchcase(case.case_id, arguments.filter)
        ]
        if not cases:
            warnings.warn(
                f"No corpus case matches {repr(arguments.filter)}",
                UserWarning,
                stacklevel=2,
            )
            print("0 cases checked")
            return EXIT_OK

    outcomes = run_corpus_check(
        cases,
        jobs=arguments.jobs,
        number_of_terms=arguments.number_of_terms,
    )
    for outcome in outcomes:
        status = "PASS" if outcome.passed else "FAIL"
        print(f"{status} {outcome.case_id}: {outcome.message}")

    failed = [outcome.case_id for outcome in outcomes if not outcome.passed]
    if failed:
        raise CorpusMismatch(failed)
    print(f"all cases pass ({len(outcomes)} checked)")

    return EXIT_OK


def _add_input_arguments(parser: argparse.ArgumentParser):
    parser.add_argument(
        "--corpus",
        metavar="ID",
        help="corpus case to use instead of --equation and --seed",
    )
    parser.add_argument(
        "--equation",
        metavar="TEXT|FILE",
        help="differential sum F, or a file holding it",
    )
    parser.add_argument(
        "--parameter",
        metavar="NAME=VALUE",
        action="append",
        help="binds a constant of the equation, repeatable",
    )


def _add_output_arguments(parser: argparse.ArgumentParser):
    parser.add_argument(
        "--out",
        metavar="PATH",
        help="write the output to PATH instead of stdout",
    )


def _add_number_of_terms(parser: argparse.ArgumentParser):
    parser.add_argument(
        "-N",
        dest="number_of_terms",
        type=int,
        default=DEFAULT_NUMBER_OF_TERMS,
        metavar="INT",
        help=f"slots to solve past the seed (default {DEFAULT_NUMBER_OF_TERMS})",
    )


def _add_drawing_arguments(parser: argparse.ArgumentParser):
    parser.add_argument(
        "--svg",
        metavar="PATH",
        help="write the Newton polygon as SVG to PATH",
    )
    parser.add_argument(
        "--ascii",
        action="store_true",
        help="draw the Newton polygon with characters",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="gevrey",
        description=(
            "Formal series solutions of polynomial ODEs at infinity, their Newton "
            "polygons and candidate Gevrey orders."
        ),
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="log progress, twice for debug output",
    )
    commands = parser.add_subparsers(
        dest="command",
        metavar="COMMAND",
    )
    commands.required = True

    for name, handler, help_text in (
        ("solve", _command_solve, "extend a seed and print its coefficients"),
        ("classify", _command_classify, "run the whole classification pipeline"),
    ):
        command = commands.add_parser(
            name,
            help=help_text,
        )
        _add_input_arguments(command)
        command.add_argument(
            "--seed",
            metavar="TERMS",
            help="leading terms as 'coefficient@exponent, ...'",
        )
        _add_number_of_terms(command)
        _add_output_arguments(command)
        if name == "solve":
            command.add_argument(
                "--json",
                action="store_true",
                help="print the JSON report instead of a coefficient table",
            )
        else:
            command.add_argument(
                "--variable-power",
                type=int,
                metavar="M",
                help="classify after substituting z = t^M",
            )
            _add_drawing_arguments(command)
        command.set_defaults(handler=handler)

    command = commands.add_parser(
        "corpus-check",
        help="check every corpus case against its recorded expectations",
    )
    command.add_argument(
        "--cases",
        metavar="PATH",
        help="JSON file of cases to check instead of the built-in corpus",
    )
    command.add_argument(
        "--filter",
        metavar="PATTERN",
        help="only check case ids matching a shell-style pattern",
    )
    command.add_argument(
        "--jobs",
        type=int,
        default=1,
        metavar="K",
        help="number of worker processes (default 1)",
    )
    _add_number_of_terms(command)
    command.set_defaults(handler=_command_corpus_check)

    command = commands.add_parser(
        "variation",
        help="print the first variation of an equation",
    )
    _add_input_arguments(command)
    _add_output_arguments(command)
    command.set_defaults(handler=_command_variation)

    command = commands.add_parser(
        "polygon",
        help="Newton polygon of a support given directly",
    )
    command.add_argument(
        "--points",
        required=True,
        metavar="'k,j0;...'",
        help="support points such as '0,-1;1,1;2,1'",
    )
    command.add_argument(
        "--json",
        action="store_true",
        help="print JSON instead of text",
    )
    _add_output_arguments(command)
    _add_drawing_arguments(command)
    command.set_defaults(handler=_command_polygon)

    return parser


def main(argv: Sequence[str] = None) -> int:
    arguments = build_parser().parse_args(argv)
    logging.basicConfig(
        level=(logging.WARNING, logging.INFO, logging.DEBUG)[
            min(arguments.verbose, 2)
        ],
        format="%(levelname)s %(name)s: %(message)s",
    )

    try:
        return arguments.handler(arguments)
    except CorpusMismatch as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_MISMATCH
    except ResonanceError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_RESONANCE
    except DegenerateLeadingCoefficient as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DEGENERATE
    except (ValueError, TypeError, ArithmeticError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
