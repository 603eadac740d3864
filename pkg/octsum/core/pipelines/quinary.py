"""Constructions for the five-coefficient sums over (1, 1, 3, 7)."""

from typing import Dict, Tuple

from ...schemas.theorem_schema import TheoremId
from ...utils.arith_utils import is_square
from ..rep_repair import parity_repair
from .base import Pipeline


class Phi1137Alpha(Pipeline):
    """
    x^2 + y^2 + 3z^2 + 7t^2 + alpha s^2 = 3n + 12 + alpha with t, s in {1, 2}.

    The remainder M is 2 mod 3 and chosen 0 or 1 mod 4, so <1,1,3> represents it
    with a coordinate of the parity of z; parity_repair then fixes z.
    """

    def __init__(self, theorem_id: TheoremId):
        super().__init__(theorem_id)
        self.alpha = self.coeffs[-1]
        self.threshold = self.alpha + 6

    def construct(self, n: int) -> Tuple[int, ...]:
        target = self.form_target(n)
        for d in (1, 2):
            for e in (1, 2):
                rest = target - 7 * d * d - self.alpha * e * e
                if rest <= 0 or rest % 4 not in (0, 1):
                    continue
                self.require(rest % 3 == 2, "residue", f"remainder {rest} is not 2 mod 3")
                found = self.solve_form((1, 1, 3), rest)
                self.require(found is not None, "ternary_rep", f"<1,1,3> misses {rest}")
                a, b, c = found
                if c % 3:
                    return a, b, c, d, e

                if (b - c) % 2:
                    a, b = b, a
                self.require((b - c) % 2 == 0, "parity", f"neither {a} nor {b} matches the parity of {c}")
                p = parity_repair(b, c)
                return a, p.u, p.v, d, e

        self.require(False, "candidate_exists", f"no d, e in {{1, 2}} give a remainder 0 or 1 mod 4 for n={n}")


# residue class of N = 3n + 20 -> candidate (z, t) pairs
_PHI_11378_CASES: Tuple[Tuple[int, int, Tuple[Tuple[int, int], ...]], ...] = (
    (4, 0, ((1, 2), (2, 1))),
    (4, 1, ((2, 2), (4, 2))),
    (4, 3, ((1, 1), (5, 1))),
    (8, 2, ((4, 4), (8, 4))),
    (16, 6, ((1, 5), (5, 1))),
    (16, 14, ((1, 1), (5, 5))),
)


class Phi11378(Pipeline):
    """
    x^2 + y^2 + 3z^2 + 7t^2 + 8s^2 = 3n + 20 with (z, t) from a residue table.

    A non-square <1,1,8> remainder has either every coordinate prime to 3 or a
    nonzero x^2 + 8s^2 part divisible by 3, which is re-solved on <1,8>.
    """

    theorem_id = TheoremId.PHI_11378
    threshold = 118

    @staticmethod
    def pairs(target: int) -> Tuple[Tuple[int, int], ...]:
        for modulus, residue, pairs in _PHI_11378_CASES:
            if target % modulus == residue:
                return pairs
        return ()

    def construct(self, n: int) -> Tuple[int, ...]:
        target = self.form_target(n)
        pairs = self.pairs(target)
        self.require(bool(pairs), "case_table", f"{target} falls in no residue case")

        for c, d in pairs:
            rest = target - 3 * c * c - 7 * d * d
            if rest <= 0 or is_square(rest):
                continue
            found = self.solve_form((1, 1, 8), rest)
            if found is None:
                continue
            a, b, e = found
            if self.prime_to_3(found):
                return a, b, c, d, e

            if a % 3 == 0:
                a, b = b, a
            self.require(
                a % 3 != 0 and b % 3 == 0 and e % 3 == 0,
                "residue_split",
                f"({a}, {b}, {e}) is not one unit and two multiples of 3",
            )
            binary = self.solve_form((1, 8), b * b + 8 * e * e, nonzero=None)
            self.require(binary is not None, "binary_repair", f"<1,8> has no solution of {b * b + 8 * e * e} prime to 3")
            return a, binary[0], c, d, binary[1]

        self.require(False, "candidate_exists", f"no pair in {list(pairs)} gives a usable <1,1,8> remainder for n={n}")


class Phi113712(Pipeline):
    """
    (3x-1)^2 + (3x+1)^2 + 3z^2 + 7t^2 + 12s^2 = 3n + 24 with t chosen by n mod 3.

    K = (3n + 22 - 7t^2) / 3 is odd and 2 mod 3, so z^2 + 4s^2 + 6x^2 = K has
    z and s prime to 3.
    """

    theorem_id = TheoremId.PHI_113712
    threshold = 143
    t_candidates: Dict[int, Tuple[int, int]] = {0: (1, 8), 1: (2, 7), 2: (4, 5)}

    def construct(self, n: int) -> Tuple[int, ...]:
        target = self.form_target(n)
        for d in self.t_candidates[n % 3]:
            rest = target - 2 - 7 * d * d
            if rest <= 0 or rest % 3:
                continue
            k = rest // 3
            if k % 2 == 0:
                continue
            self.require(k % 3 == 2, "residue", f"K={k} is not 2 mod 3")
            self.require(self.criterion((1, 4, 6), k), "ternary_criterion", f"<1,4,6> criterion rejects {k}")
            found = self.solve_form((1, 4, 6), k, nonzero=(0, 1))
            self.require(found is not None, "ternary_rep", f"<1,4,6> misses {k} with z, s prime to 3")
            z, s, x = found
            return 3 * x - 1, 3 * x + 1, z, d, s

        self.require(False, "candidate_exists", f"no t in {self.t_candidates[n % 3]} gives an odd K for n={n}")
