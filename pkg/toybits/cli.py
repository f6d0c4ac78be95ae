"""Command line interface of toybits.

.. code-block:: console

    toybits interpret state00.toy
    toybits eq euler_h.toy h.toy --witness
    toybits normalize graph3.toy --rgslo
    toybits rules check --legs 2
    toybits graphstate --adj triangle.adj
    toybits rewrite chain.toy --workflow simplify.yaml

Exit codes are 0 for success (or equal diagrams), 1 for unequal diagrams or failing
rules and 2 for errors.
"""
import argparse
import json
import logging
import sys
from typing import List, Optional
import numpy as np
from .__version__ import __version__
from .binary import extract_check_matrix, graph_form, validate_state
from .diagram_operations import bend
from .exporting import diagram_to_dict, diagram_to_text
from .importing import DiagramParseError, load_adjacency, load_diagram
from .interpretation import interpret
from .logging_functions import logging_to_file, set_toybits_logger_level
from .normalform import decide_equal, to_gslo, to_rgslo
from .rewriting import RewriteProcessor, random_rewrite_sweep, rule_set, soundness_report
from .yaml_file_functions import load_workflow_from_yaml_file


logger = logging.getLogger("toybits")

EXIT_OK = 0
EXIT_DIFFERENT = 1
EXIT_ERROR = 2


class CommandError(Exception):
    """A command that cannot be carried out; reported with exit code 2."""


def _format_diagram(diagram, output_format: str) -> str:
    if output_format == "tree":
        return json.dumps(diagram_to_dict(diagram), indent=2)
    return diagram_to_text(diagram).rstrip("\n")


def _format_matrix(matrix: np.ndarray) -> str:
    return "\n".join(" ".join(str(int(entry)) for entry in row) for row in matrix)


def _interpret(args) -> int:
    print(interpret(load_diagram(args.file)).to_text())
    return EXIT_OK


def _normalize(args) -> int:
    diagram = load_diagram(args.file)
    if diagram.n_inputs > 0:
        diagram = bend(diagram)
    gslo = to_gslo(diagram)
    if gslo is None:
        print("ZERO")
        return EXIT_OK
    if args.rgslo:
        gslo = to_rgslo(gslo)
    if args.format == "tree":
        print(_format_diagram(gslo.to_diagram(), "tree"))
    else:
        print(gslo)
    return EXIT_OK


def _eq(args) -> int:
    first = load_diagram(args.first)
    second = load_diagram(args.second)
    if (first.n_inputs, first.n_outputs) != (second.n_inputs, second.n_outputs):
        raise CommandError(f"boundary mismatch: ({first.n_inputs}, {first.n_outputs}) "
                           f"vs ({second.n_inputs}, {second.n_outputs})")
    result = decide_equal(first, second)
    print(f"{'EQUAL' if result.equal else 'NOT EQUAL'}: {result.reason}")
    if args.witness:
        for move in result.witness:
            print(f"  {move}")
    return EXIT_OK if result.equal else EXIT_DIFFERENT


def _rules_check(args) -> int:
    if args.legs < 0:
        raise CommandError("--legs must be non-negative")
    report = soundness_report(rule_set(), args.legs, progress_bar=args.progress)
    lines = [f"{label:<40} {result}" for label, result in report["result"].items()]
    passed = bool((report["result"] == "PASS").all())
    if args.random:
        failures = random_rewrite_sweep(args.random, seed=args.seed, progress_bar=args.progress)
        label = f"random[{args.random} diagrams, seed {args.seed}]"
        lines.append(f"{label:<40} {'PASS' if failures == 0 else 'FAIL'}")
        passed = passed and failures == 0
    print("\n".join(lines))
    return EXIT_OK if passed else EXIT_DIFFERENT


def _rules_list(args) -> int:  # pylint: disable=unused-argument
    for rule in rule_set():
        print(rule.label)
    return EXIT_OK


def _graphstate(args) -> int:
    if args.adj is not None:
        check_matrix = graph_form(load_adjacency(args.adj))
    elif args.file is not None:
        diagram = load_diagram(args.file)
        if diagram.n_inputs > 0:
            diagram = bend(diagram)
        gslo = to_gslo(diagram)
        if gslo is None:
            raise CommandError("the diagram denotes the empty relation and has no check matrix")
        check_matrix = extract_check_matrix(gslo)
    else:
        raise CommandError("graphstate needs --adj <file> or a diagram file")
    print(_format_matrix(check_matrix))
    print("valid" if validate_state(check_matrix) else "invalid")
    return EXIT_OK


def _rewrite(args) -> int:
    diagram = load_diagram(args.file)
    workflow = load_workflow_from_yaml_file(args.workflow)
    processor = RewriteProcessor(workflow["rewrite_steps"], workflow["max_steps"])
    result, report = processor.process(diagram, progress_bar=args.progress)
    logger.info("%s", report)
    print(_format_diagram(result, args.format))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="toybits",
                                     description="Diagrams of the toy bit theory: interpretation, "
                                                 "rewriting, normal forms and equality.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "tree"), default="text",
                        help="Format of printed diagrams.")
    common.add_argument("--progress", action="store_true", help="Show progress bars.")
    common.add_argument("--verbose", action="store_true", help="Show INFO messages of the toybits logger.")
    common.add_argument("--log-file", help="Copy log messages, down to DEBUG, to this file.")
    commands = parser.add_subparsers(dest="command", required=True)

    interpret_parser = commands.add_parser("interpret", parents=[common],
                                           help="Print the relation denoted by a diagram.")
    interpret_parser.add_argument("file")
    interpret_parser.set_defaults(handler=_interpret)

    normalize_parser = commands.add_parser("normalize", parents=[common],
                                           help="Print the graph state normal form.")
    normalize_parser.add_argument("file")
    normalize_parser.add_argument("--rgslo", action="store_true", help="Reduce the local operators.")
    normalize_parser.set_defaults(handler=_normalize)

    eq_parser = commands.add_parser("eq", parents=[common], help="Decide whether two diagrams are equal.")
    eq_parser.add_argument("first")
    eq_parser.add_argument("second")
    eq_parser.add_argument("--witness", action="store_true", help="Print the moves of the decision.")
    eq_parser.set_defaults(handler=_eq)

    rules_parser = commands.add_parser("rules", help="List or check the rewrite rules.")
    rules_commands = rules_parser.add_subparsers(dest="rules_command", required=True)
    check_parser = rules_commands.add_parser("check", parents=[common],
                                             help="Check every rule against the semantics.")
    check_parser.add_argument("--legs", type=int, default=3, help="Maximum number of open legs per spider.")
    check_parser.add_argument("--random", type=int, default=0, help="Number of randomly rewritten diagrams.")
    check_parser.add_argument("--seed", type=int, default=0, help="Seed of the random sweep.")
    check_parser.set_defaults(handler=_rules_check)
    list_parser = rules_commands.add_parser("list", parents=[common], help="Print all rule variants.")
    list_parser.set_defaults(handler=_rules_list)

    graphstate_parser = commands.add_parser("graphstate", parents=[common],
                                            help="Print a check matrix and its validity.")
    graphstate_parser.add_argument("file", nargs="?", help="Diagram of a state.")
    graphstate_parser.add_argument("--adj", help="File with a 0/1 adjacency matrix.")
    graphstate_parser.set_defaults(handler=_graphstate)

    rewrite_parser = commands.add_parser("rewrite", parents=[common],
                                         help="Rewrite a diagram with a yaml workflow.")
    rewrite_parser.add_argument("file")
    rewrite_parser.add_argument("--workflow", required=True)
    rewrite_parser.set_defaults(handler=_rewrite)
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    """Run one command and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_request:
        return exit_request.code if isinstance(exit_request.code, int) else EXIT_ERROR
    if getattr(args, "verbose", False):
        set_toybits_logger_level("INFO")
    try:
        if getattr(args, "log_file", None):
            with logging_to_file(args.log_file, "DEBUG"):
                return args.handler(args)
        return args.handler(args)
    except DiagramParseError as error:
        print(f"error: parse error: {error}", file=sys.stderr)
    except (CommandError, ValueError, TypeError, AssertionError, OSError) as error:
        print(f"error: {error}", file=sys.stderr)
    return EXIT_ERROR


def main():
    sys.exit(run())
