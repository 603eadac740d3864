"""Truant, escalation and classification commands."""

import argparse

from ..config import settings
from ..core.escalator import classify, escalate, tree_to_json, truant
from ..models.escalation import EscalationNode, Verdict
from ..models.octsum import OctSum
from ..utils.file_utils import write_text
from ..utils.parse_utils import parse_bound, parse_coeffs


def cmd_truant(args: argparse.Namespace) -> int:
    value = truant(OctSum(coeffs=args.coeffs), args.max)
    print("none" if value is None else value)
    return 0


def _node_line(node: EscalationNode) -> str:
    label = f"({node.sum.key})" if node.depth else "()"
    status = f"truant {node.truant_value}" if node.truant_value is not None else node.status.value
    line = f"{'  ' * node.depth}{label} {status}"
    if node.provenance:
        line += f" [{node.provenance}]"
    return line


def cmd_escalate(args: argparse.Namespace) -> int:
    tree = escalate(args.depth, args.max)
    for node in tree.walk():
        print(_node_line(node))
    if args.json:
        write_text(args.json, tree_to_json(tree) + "\n")
    return 0


def cmd_classify(args: argparse.Namespace) -> int:
    """Exit 1 for not-universal, 0 otherwise."""
    report = classify(OctSum(coeffs=args.coeffs), args.max, use_criterion=not args.scan_only)
    if report.verdict == Verdict.NOT_UNIVERSAL:
        print(f"{report.verdict.value}({report.witness})")
        return 1
    print(f"{report.verdict.value} (checked to {report.checked_bound})")
    return 0


def register(subparsers) -> None:
    """Add the escalation commands to a subparser group."""
    parser = subparsers.add_parser("truant", help="Smallest positive integer a sum misses")
    parser.add_argument("--coeffs", type=parse_coeffs, required=True)
    parser.add_argument("--max", type=parse_bound, default=settings.DEFAULT_BOUND)
    parser.set_defaults(handler=cmd_truant)

    parser = subparsers.add_parser("escalate", help="Build the escalation tree")
    parser.add_argument("--depth", type=int, default=4)
    parser.add_argument("--max", type=parse_bound, default=settings.DEFAULT_BOUND)
    parser.add_argument("--json", help="Write the canonical tree JSON to this path")
    parser.set_defaults(handler=cmd_escalate)

    parser = subparsers.add_parser("classify", help="Universality verdict for a sum")
    parser.add_argument("--coeffs", type=parse_coeffs, required=True)
    parser.add_argument("--max", type=parse_bound, default=settings.DEFAULT_BOUND)
    parser.add_argument("--scan-only", action="store_true", help="Decide by truant scan alone")
    parser.set_defaults(handler=cmd_classify)
