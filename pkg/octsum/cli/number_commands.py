"""Commands on octagonal numbers and single sums."""

import argparse

from ..config import settings
from ..core.octsum import exceptions_up_to, oct_values_up_to, p8, represents
from ..models.octsum import OctSum
from ..utils.parse_utils import parse_bound, parse_coeffs, parse_non_negative


def cmd_p8(args: argparse.Namespace) -> int:
    print(p8(args.x))
    return 0


def cmd_values(args: argparse.Namespace) -> int:
    print(" ".join(str(v) for v in oct_values_up_to(args.max)))
    return 0


def cmd_represent(args: argparse.Namespace) -> int:
    """Exit 0 when the sum represents n, 1 otherwise."""
    s = OctSum(coeffs=args.coeffs)
    witness = represents(s, args.n)
    if witness is None:
        print(f"{args.n} not represented by {s}")
        return 1

    print(f"{args.n} represented by {s}")
    if args.witness:
        print("x = " + ",".join(str(x) for x in witness.xs))
    return 0


def cmd_exceptions(args: argparse.Namespace) -> int:
    s = OctSum(coeffs=args.coeffs)
    missing = exceptions_up_to(s, args.max)
    print(" ".join(str(n) for n in missing) if missing else "none")
    return 0


def register(subparsers) -> None:
    """Add the number commands to a subparser group."""
    parser = subparsers.add_parser("p8", help="Generalized octagonal number 3x^2 - 2x")
    parser.add_argument("x", type=int)
    parser.set_defaults(handler=cmd_p8)

    parser = subparsers.add_parser("values", help="Generalized octagonal numbers up to a bound")
    parser.add_argument("--max", type=parse_non_negative, default=settings.DEFAULT_BOUND)
    parser.set_defaults(handler=cmd_values)

    parser = subparsers.add_parser("represent", help="Decide whether a sum represents n")
    parser.add_argument("--coeffs", type=parse_coeffs, required=True)
    parser.add_argument("--n", type=parse_non_negative, required=True)
    parser.add_argument("--witness", action="store_true", help="Print the smallest witness")
    parser.set_defaults(handler=cmd_represent)

    parser = subparsers.add_parser("exceptions", help="Positive integers up to a bound that a sum misses")
    parser.add_argument("--coeffs", type=parse_coeffs, required=True)
    parser.add_argument("--max", type=parse_bound, default=settings.DEFAULT_BOUND)
    parser.set_defaults(handler=cmd_exceptions)
