"""
Command-line interface.

Exit codes are ``0`` on success, ``1`` on user errors (syntax, typing,
files, usage) and ``2`` when a property suite fails.

| Copyright 2026, The cobordism-mcp-server Authors
|
"""

import argparse
import json
import logging
import sys
from collections import namedtuple

from .checks import SUITES, run_check
from .errors import CobordismError
from .evaluation import evaluate
from .matrices import dualizable_from_matrix, load_matrix_file, matrix_backend
from .parser import parse
from .scalars import ScalarMultiset
from .server import configure_logging, load_config
from .server import run as serve
from .terms import denote
from .traces import (
    ThetaSpec,
    generating_counterexample,
    generation_obstruction,
    is_generating_witness,
    theta_of_endomorphism,
)


logger = logging.getLogger(__name__)

TEXT = "text"
STRUCTURED = "structured"

EXIT_OK = 0
EXIT_USER_ERROR = 1
EXIT_CHECK_FAILED = 2

CommandResult = namedtuple("CommandResult", ["output", "exit_code"])


def _render(text, data, output_format):
    if output_format == STRUCTURED:
        return CommandResult(json.dumps(data, sort_keys=True), EXIT_OK)

    return CommandResult(text, EXIT_OK)


def cmd_normalize(term, output_format=TEXT):
    """Prints the canonical serialization of a term's bordism.

    Raises:
        TermSyntaxError: if the term does not parse
        TermTypeError: if the term does not typecheck
    """
    b = denote(parse(term))
    return _render(b.serialize(), b.to_dict(), output_format)


def cmd_trace(term, theta, output_format=TEXT):
    """Prints ``Theta^{theta}`` at the endomorphism denoted by ``term``.

    Raises:
        NotEndomorphism: if the term's source and target differ
        NotInvertible: for negative exponents on a non-invertible term
    """
    spec = ThetaSpec.parse(theta)
    labels = theta_of_endomorphism(denote(parse(term)), spec)
    return _render(
        str(labels),
        {"theta": str(spec), "circles": list(labels.labels())},
        output_format,
    )


def cmd_eval(term, matrix_path, output_format=TEXT):
    """Prints the exact image of a term at the matrix read from a file.

    Raises:
        MatrixFileError: if the file cannot be read or parsed
        NotInvertible: if the matrix is singular
    """
    b = denote(parse(term))
    pair = dualizable_from_matrix(load_matrix_file(matrix_path))
    image = evaluate(b, pair, matrix_backend())
    return _render(str(image), image.to_dict(), output_format)


def cmd_check(suite, seed=0, cases=100, bound=4, output_format=TEXT):
    """Runs a property suite; exits with ``2`` on any failure."""
    report = run_check(suite, seed=seed, cases=cases, bound=bound)
    text = "\n".join(report.lines())
    result = _render(text, report.to_dict(), output_format)
    if not report.ok:
        return CommandResult(result.output, EXIT_CHECK_FAILED)

    return result


def cmd_classify(theta, target=None, bound=4, output_format=TEXT):
    """Prints the classification of a Theta spec, whether it generates,
    and for a target the witness or the obstruction."""
    spec = ThetaSpec.parse(theta)
    counterexample = generating_counterexample(spec)
    data = {
        "theta": str(spec),
        "classification": str(spec.exponents),
        "generating": counterexample is None,
    }
    lines = ["%s classifies to %s" % (spec, spec.exponents)]
    if counterexample is None:
        lines.append("generating: yes")
    else:
        unreachable, obstruction = counterexample
        data["unreachable_target"] = str(unreachable)
        data["obstruction"] = obstruction
        lines.append(
            "generating: no (%s is unreachable: %s)"
            % (unreachable, obstruction)
        )

    if target is not None:
        goal = ScalarMultiset.parse(target)
        point = is_generating_witness(spec, goal, bound)
        data["target"] = str(goal)
        if point is not None:
            data["witness"] = point.to_dict()
            lines.append("%s: witness %s" % (goal, point))
        else:
            obstruction = generation_obstruction(spec, goal)
            data["target_obstruction"] = obstruction
            lines.append(
                "%s: no witness up to bound %d (%s)"
                % (goal, bound, obstruction or "search exhausted")
            )

    return _render("\n".join(lines), data, output_format)


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USER_ERROR, "%s: error: %s\n" % (self.prog, message))


def build_parser():
    """Returns the :class:`argparse.ArgumentParser` for the CLI."""
    parser = _ArgumentParser(
        prog="cobordism",
        description=(
            "Compute with the 1-dimensional cobordism category with "
            "integer-labelled strands."
        ),
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--config", help="Path to an alternative settings.json"
    )
    common.add_argument(
        "--format",
        choices=(TEXT, STRUCTURED),
        default=TEXT,
        dest="output_format",
        help="Output format (default: text)",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    normalize = commands.add_parser(
        "normalize",
        parents=[common],
        help="Print the bordism normal form of a term",
    )
    normalize.add_argument("--term", required=True)

    trace = commands.add_parser(
        "trace",
        parents=[common],
        help="Evaluate a Theta spec at the term's endomorphism",
    )
    trace.add_argument("--term", required=True)
    trace.add_argument("--theta", required=True, help="e.g. theta[3,0,-2]")

    evaluate_cmd = commands.add_parser(
        "eval", help="Evaluate a term at a rational matrix", parents=[common]
    )
    evaluate_cmd.add_argument("--term", required=True)
    evaluate_cmd.add_argument(
        "--matrix", required=True, help="Path to a JSON matrix document"
    )

    check = commands.add_parser(
        "check", parents=[common], help="Run a property suite"
    )
    check.add_argument("suite", choices=sorted(SUITES))
    check.add_argument("--seed", type=int)
    check.add_argument("--cases", type=int)
    check.add_argument("--bound", type=int)

    classify = commands.add_parser(
        "classify",
        parents=[common],
        help="Classify a Theta spec and search for witnesses",
    )
    classify.add_argument("--theta", required=True)
    classify.add_argument("--target", help="e.g. {2,-5,0}")
    classify.add_argument("--bound", type=int)

    commands.add_parser(
        "serve", parents=[common], help="Start the MCP stdio server"
    )
    return parser


def _positive(parser, name, value):
    if value is not None and value <= 0:
        parser.error("--%s must be positive" % name)

    return value


def main(argv=None):
    """Runs the CLI.

    Args:
        argv (None): the argument list; defaults to ``sys.argv[1:]``

    Returns:
        the exit code
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    config = load_config(args.config)
    defaults = config.get("checks", {})

    if args.command == "serve":
        serve(config)
        return EXIT_OK

    configure_logging(config)
    fmt = args.output_format
    try:
        if args.command == "normalize":
            result = cmd_normalize(args.term, fmt)
        elif args.command == "trace":
            result = cmd_trace(args.term, args.theta, fmt)
        elif args.command == "eval":
            result = cmd_eval(args.term, args.matrix, fmt)
        elif args.command == "check":
            result = cmd_check(
                args.suite,
                seed=(
                    args.seed
                    if args.seed is not None
                    else defaults.get("seed", 0)
                ),
                cases=_positive(parser, "cases", args.cases)
                or defaults.get("cases", 100),
                bound=_positive(parser, "bound", args.bound)
                or defaults.get("bound", 4),
                output_format=fmt,
            )
        else:
            result = cmd_classify(
                args.theta,
                target=args.target,
                bound=_positive(parser, "bound", args.bound)
                or defaults.get("bound", 4),
                output_format=fmt,
            )
    except CobordismError as e:
        print("error: %s" % e, file=sys.stderr)
        return EXIT_USER_ERROR

    print(result.output)
    return result.exit_code


def run():
    """Console-script entry point."""
    sys.exit(main())


if __name__ == "__main__":
    run()
