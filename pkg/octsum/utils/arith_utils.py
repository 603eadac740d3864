"""Exact integer helpers shared by the search kernels."""

from math import isqrt
from typing import Iterator, Optional

from .error_utils import ArithmeticOverflowError

# |x| bound for P8 arguments and the largest supported search target
MAX_P8_ARG = 2 ** 30
MAX_TARGET = 2 ** 40


def check_target(value: int, what: str = "target") -> int:
    """
    Reject values outside the exact-arithmetic range.

    Args:
        value: Integer to check
        what: Name used in the error message

    Returns:
        The value, unchanged
    """
    if value > MAX_TARGET:
        raise ArithmeticOverflowError(f"{what} {value} exceeds the supported range 2^40")
    return value


def exact_sqrt(n: int) -> Optional[int]:
    """Non-negative square root of n if n is a perfect square, else None."""
    if n < 0:
        return None
    r = isqrt(n)
    return r if r * r == n else None


def is_square(n: int) -> bool:
    return exact_sqrt(n) is not None


def canonical_values(bound: int) -> Iterator[int]:
    """
    Yield 0, 1, -1, 2, -2, ... up to absolute value `bound`.

    This is the per-coordinate tie-break order of every witness.
    """
    yield 0
    for v in range(1, bound + 1):
        yield v
        yield -v


def strip_fours(n: int) -> int:
    """Divide out the largest power of 4 from a positive n."""
    while n % 4 == 0:
        n //= 4
    return n
