"""
Norm-preserving rewrites that move a representation off the residue 0 mod 3.

- jones_repair: u^2 + 2v^2 rewritten as e^2 + 2f^2 with ef prime to 3
- parity_repair: e^2 + 3b^2 rewritten as p^2 + 3q^2
- tau_step / tau_orbit / tau_repair: the order-infinite isometry of x^2 + y^2 + 4t^2
"""

from math import isqrt
from typing import Optional

from ..config import settings
from ..models.qform import DiagonalForm, RepProblem, ResidueConstraint
from ..models.repair import BinaryFormTag, BinaryRep, TauVector
from ..utils.arith_utils import canonical_values, exact_sqrt
from ..utils.error_utils import (
    InvalidInputError,
    NonIntegralImageError,
    NormMismatchError,
    ParityMismatchError,
    WitnessValidationError,
)
from ..utils.log_utils import engine_logger
from .qform_engine import solve

TAU_FORM = DiagonalForm.of(1, 1, 4)
EIGEN_DIRECTION = (2, 12, -5)
EIGEN_PARTNER = (14, 6, 2)


def jones_repair(u: int, v: int) -> Optional[BinaryRep]:
    """
    Find e, f with e^2 + 2f^2 = u^2 + 2v^2 and ef prime to 3.

    The input is returned unchanged when it already qualifies; otherwise e runs
    through 0, 1, -1, 2, -2, ... and the first pair found is returned.

    Args:
        u: First coordinate
        v: Second coordinate

    Returns:
        BinaryRep tagged x^2+2y^2, or None when no such pair exists
    """
    if u == 0 and v == 0:
        raise InvalidInputError("jones_repair needs a nonzero binary vector")

    if u % 3 and v % 3:
        return BinaryRep(u=u, v=v)

    norm = u * u + 2 * v * v
    for e in canonical_values(isqrt(norm)):
        if e % 3 == 0:
            continue
        rest = norm - e * e
        if rest % 2:
            continue
        f = exact_sqrt(rest // 2)
        if f is not None and f % 3:
            found = BinaryRep(u=e, v=f)
            if found.norm != norm:
                raise WitnessValidationError(f"jones_repair lost the norm {norm}")
            return found
    return None


def parity_repair(e: int, b: int) -> BinaryRep:
    """
    Rewrite e^2 + 3b^2 as p^2 + 3q^2 with p = (e + 3b)/2, q = (e - b)/2.

    When e is prime to 3 and b is divisible by 3, both p and q are prime to 3.

    Args:
        e: Coordinate of weight 1
        b: Coordinate of weight 3, same parity as e

    Returns:
        BinaryRep (p, q) tagged x^2+3y^2
    """
    if (e - b) % 2:
        raise ParityMismatchError(f"parity_repair needs e = b (mod 2), got e={e}, b={b}")
    return BinaryRep(u=(e + 3 * b) // 2, v=(e - b) // 2, form=BinaryFormTag.X2_PLUS_3Y2)


def tau_step(w: TauVector) -> TauVector:
    """Apply (1/3)[[1,2,4],[-2,-1,4],[-1,1,-1]] to a vector with every component divisible by 3."""
    a, b, d = w.as_tuple()
    if a % 3 or b % 3 or d % 3:
        raise NonIntegralImageError(f"tau_step needs every component divisible by 3, got {w.as_tuple()}")
    return TauVector(
        a=(a + 2 * b + 4 * d) // 3,
        b=(-2 * a - b + 4 * d) // 3,
        d=(-a + b - d) // 3,
    )


def eigenvector_escape(w: TauVector) -> Optional[TauVector]:
    """
    Replace t*(2, 12, -5) by t*(14, 6, 2), which has the same norm 248t^2.

    Returns:
        The partner vector, or None if w is not on the eigen-direction
    """
    a, b, d = w.as_tuple()
    if a == 0 or a % 2:
        return None
    t = a // EIGEN_DIRECTION[0]
    if (b, d) != (EIGEN_DIRECTION[1] * t, EIGEN_DIRECTION[2] * t):
        return None
    return TauVector(a=EIGEN_PARTNER[0] * t, b=EIGEN_PARTNER[1] * t, d=EIGEN_PARTNER[2] * t)


def _all_prime_to_3(w: TauVector) -> bool:
    return all(c % 3 for c in w.as_tuple())


def tau_search(norm: int) -> Optional[TauVector]:
    """Smallest solution of x^2 + y^2 + 4t^2 = norm with every component prime to 3."""
    engine_logger.debug(f"tau search at norm {norm}")
    found = solve(RepProblem(form=TAU_FORM, target=norm, constraint=ResidueConstraint.nonzero_mod3(3)))
    if found is None:
        return None
    a, b, d = found.ys
    return TauVector(a=a, b=b, d=d)


def tau_orbit(w: TauVector, max_iters: Optional[int] = None, norm: Optional[int] = None) -> Optional[TauVector]:
    """
    Step with tau while every component is divisible by 3, escaping the eigen-direction when met.

    Args:
        w: Starting solution of x^2 + y^2 + 4t^2 = M
        max_iters: Iteration cap (settings.TAU_MAX_ITERS when None)
        norm: The M that w is claimed to solve, checked when given

    Returns:
        First vector of the orbit with every component prime to 3, or None when
        the orbit reaches a mixed or repeated vector or the cap
    """
    if max_iters is None:
        max_iters = settings.TAU_MAX_ITERS
    if max_iters < 1:
        raise InvalidInputError(f"max_iters must be positive, got {max_iters}")
    if norm is not None and norm != w.norm:
        raise NormMismatchError(f"{w.as_tuple()} has norm {w.norm}, not {norm}")
    if w.norm <= 0:
        raise InvalidInputError("tau_repair needs a vector of positive norm")

    current = w
    seen = set()
    for _ in range(max_iters):
        if _all_prime_to_3(current):
            return current

        escaped = eigenvector_escape(current)
        if escaped is not None:
            current = escaped
            continue

        if any(c % 3 for c in current.as_tuple()) or current.as_tuple() in seen:
            return None
        seen.add(current.as_tuple())
        current = tau_step(current)

    return current if _all_prime_to_3(current) else None


def tau_repair(w: TauVector, max_iters: Optional[int] = None, norm: Optional[int] = None) -> Optional[TauVector]:
    """
    Move a solution of x^2 + y^2 + 4t^2 = M to one with every component prime to 3.

    Runs tau_orbit and hands over to tau_search when the orbit gives up.
    Callers that must tell the two apart call them separately.

    Returns:
        TauVector of norm M with every component prime to 3, or None if none exists
    """
    repaired = tau_orbit(w, max_iters, norm)
    if repaired is not None:
        return repaired
    return tau_search(w.norm)
