"""Argument parsing helpers for the command line."""

import argparse
from typing import Tuple

from ..config import settings


def parse_coeffs(value: str) -> Tuple[int, ...]:
    """
    Parse a comma-separated list of positive coefficients.

    Args:
        value: Text such as "1,1,3,7"

    Returns:
        Tuple of coefficients in the given order
    """
    parts = [part.strip() for part in value.split(",")]
    if not value.strip() or any(not part for part in parts):
        raise argparse.ArgumentTypeError(f"malformed coefficient list {value!r}")
    try:
        coeffs = tuple(int(part) for part in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed coefficient list {value!r}")
    if any(a < 1 for a in coeffs):
        raise argparse.ArgumentTypeError(f"coefficients must be positive, got {value!r}")
    return coeffs


def parse_bound(value: str) -> int:
    """Parse a bound in [1, MAX_SCAN_BOUND]."""
    try:
        bound = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bound must be an integer, got {value!r}")
    if bound < 1 or bound > settings.MAX_SCAN_BOUND:
        raise argparse.ArgumentTypeError(f"bound must be in [1, {settings.MAX_SCAN_BOUND}], got {bound}")
    return bound


def parse_non_negative(value: str) -> int:
    try:
        n = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {value!r}")
    if n < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {n}")
    return n
