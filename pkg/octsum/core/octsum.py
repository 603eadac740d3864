"""Generalized octagonal numbers and representability by weighted sums of them."""

import time
from math import isqrt
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..config import settings
from ..models.octsum import OctSum, OctWitness
from ..models.qform import DiagonalForm, RepProblem, ResidueConstraint
from ..utils.arith_utils import MAX_P8_ARG, check_target, exact_sqrt
from ..utils.error_utils import ArithmeticOverflowError, InvalidInputError, WitnessValidationError
from ..utils.log_utils import engine_logger, log_scan
from .qform_engine import solve


def p8(x: int) -> int:
    """
    Generalized octagonal number 3x^2 - 2x.

    Args:
        x: Any integer with |x| < 2^30

    Returns:
        P8(x), always non-negative
    """
    if abs(x) >= MAX_P8_ARG:
        raise ArithmeticOverflowError(f"P8 argument {x} outside |x| < 2^30")
    return 3 * x * x - 2 * x


def check_bound(bound: int) -> int:
    if bound < 0:
        raise InvalidInputError(f"bound must be non-negative, got {bound}")
    if bound > settings.MAX_SCAN_BOUND:
        raise ArithmeticOverflowError(f"bound {bound} exceeds MAX_SCAN_BOUND={settings.MAX_SCAN_BOUND}")
    return bound


def oct_values_array(bound: int) -> np.ndarray:
    """Sorted int64 array of the generalized octagonal numbers in [0, bound]."""
    check_bound(bound)
    # 3x^2 - 2x <= B forces |x| <= (1 + sqrt(1 + 3B)) / 3
    reach = (1 + isqrt(1 + 3 * bound)) // 3 + 1
    xs = np.arange(-reach, reach + 1, dtype=np.int64)
    values = 3 * xs * xs - 2 * xs
    return np.unique(values[values <= bound])


def oct_values_up_to(bound: int) -> List[int]:
    """Exactly {P8(x) : x in Z} intersected with [0, bound], increasing."""
    return [int(v) for v in oct_values_array(bound)]


def is_gen_octagonal(n: int) -> bool:
    """n = P8(x) for some integer x, decided by 3n + 1 = (3x - 1)^2."""
    if n < 0:
        return False
    root = exact_sqrt(3 * n + 1)
    return root is not None and root % 3 != 0


def reduce_to_qform(s: OctSum, n: int) -> RepProblem:
    """
    Translate n -> Phi_s into sum a_i y_i^2 = 3n + sum a_i with every y_i prime to 3.

    The correspondence is y_i = 3x_i - 1.

    Args:
        s: Non-empty sum
        n: Non-negative integer

    Returns:
        RepProblem over the form <a_1, ..., a_k>
    """
    if s.k == 0:
        raise InvalidInputError("the empty sum has no quadratic-form reduction")
    if n < 0:
        raise InvalidInputError(f"target must be non-negative, got {n}")
    target = check_target(3 * n + sum(s.coeffs))
    return RepProblem(
        form=DiagonalForm(coeffs=s.coeffs),
        target=target,
        constraint=ResidueConstraint.nonzero_mod3(s.k),
    )


def witness_from_form(ys: Sequence[int]) -> Tuple[int, ...]:
    """
    Map a form witness with every y prime to 3 back to P8 arguments.

    y = 2 (mod 3) means y = 3x - 1; otherwise -y = 3x - 1.
    """
    xs = []
    for y in ys:
        if y % 3 == 0:
            raise InvalidInputError(f"form coordinate {y} is divisible by 3")
        xs.append((y + 1) // 3 if y % 3 == 2 else (1 - y) // 3)
    return tuple(xs)


def evaluate(s: OctSum, xs: Sequence[int]) -> int:
    return sum(a * p8(x) for a, x in zip(s.coeffs, xs))


def represents(s: OctSum, n: int) -> Optional[OctWitness]:
    """
    Find the smallest witness of n -> Phi_s.

    Arguments are ordered coordinate-wise by |x| with positive first, which is
    the order of |3x - 1|, so the smallest form witness gives the smallest
    octagonal one.

    Args:
        s: Sum of generalized octagonal numbers
        n: Non-negative integer

    Returns:
        OctWitness, or None if n is not represented
    """
    if n < 0:
        raise InvalidInputError(f"target must be non-negative, got {n}")
    if s.k == 0:
        return OctWitness(xs=()) if n == 0 else None

    found = solve(reduce_to_qform(s, n))
    if found is None:
        return None

    witness = OctWitness(xs=witness_from_form(found.ys))
    if evaluate(s, witness.xs) != n:
        raise WitnessValidationError(f"{list(witness.xs)} does not give {n} in {s}")
    return witness


def representable_table(s: OctSum, bound: int) -> np.ndarray:
    """
    Dense table of the integers in [0, bound] represented by Phi_s.

    Built as the iterated sumset of the scaled octagonal value sets.

    Args:
        s: Sum of generalized octagonal numbers
        bound: Upper end of the table

    Returns:
        Boolean array t with t[n] true iff n -> Phi_s
    """
    check_bound(bound)
    table = np.zeros(bound + 1, dtype=bool)
    table[0] = True
    values = oct_values_array(bound)
    for a in s.coeffs:
        table = extend_table(table, a, values)
    return table


def extend_table(table: np.ndarray, c: int, values: np.ndarray) -> np.ndarray:
    """Table of Phi_{s,c} from the table of Phi_s."""
    bound = len(table) - 1
    grown = np.zeros(bound + 1, dtype=bool)
    for v in values:
        shift = c * int(v)
        if shift > bound:
            break
        grown[shift:] |= table[:bound + 1 - shift]
    return grown


def exceptions_up_to(s: OctSum, bound: int) -> List[int]:
    """
    Every n in [1, bound] that Phi_s does not represent, ascending.

    Args:
        s: Sum of generalized octagonal numbers
        bound: Upper end of the scan

    Returns:
        Sorted list of exceptions
    """
    started = time.time()
    table = representable_table(s, bound)
    missing = [int(n) for n in np.flatnonzero(~table[1:]) + 1]
    log_scan(engine_logger, s.key, bound, missing, time.time() - started)
    return missing
