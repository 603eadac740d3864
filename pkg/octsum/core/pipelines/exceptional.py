"""Constructions for the quaternary sums that miss exactly one positive integer."""

from typing import List, Tuple

from ...models.repair import TauVector
from ...schemas.theorem_schema import TheoremId
from ...utils.arith_utils import is_square
from ..rep_repair import jones_repair, tau_orbit, tau_search
from .base import Pipeline


class Phi11214(Pipeline):
    """
    x^2 + y^2 + 2z^2 + 14t^2 = 3n + 18 with t = d fixed from {1, 2, 4, 5, 7, 8}.

    Targets 3n + 18 - 14d^2 that are not squares come first; their solutions
    are repaired on the x^2 + 2y^2 part. Square targets need a solution of
    <1,1,2> with every coordinate prime to 3.
    """

    theorem_id = TheoremId.PHI_11214
    threshold = 293
    expected_exceptions = (60,)
    d_groups = ((1, 2, 4), (5, 7, 8))
    d_candidates = d_groups[0] + d_groups[1]

    def options(self, target: int) -> List[Tuple[int, int]]:
        out = []
        for d in self.d_candidates:
            rest = target - 14 * d * d
            if self.criterion((1, 1, 2), rest):
                out.append((d, rest))
        return out

    def construct(self, n: int) -> Tuple[int, ...]:
        options = self.options(self.form_target(n))
        chosen = {d for d, _ in options}
        for claim, group in zip(("candidate_small_d", "candidate_large_d"), self.d_groups):
            self.require(bool(chosen.intersection(group)), claim, f"no d in {group} leaves a <1,1,2> target for n={n}")

        for d, rest in options:
            if is_square(rest):
                continue
            found = self.solve_form((1, 1, 2), rest)
            self.require(found is not None, "ternary_rep", f"<1,1,2> misses {rest} despite its criterion")
            a, b, c = found
            if self.prime_to_3(found):
                return a, b, c, d

            if a % 3 == 0:
                a, b = b, a
            self.require(
                a % 3 != 0 and b % 3 == 0 and c % 3 == 0,
                "residue_split",
                f"({a}, {b}, {c}) is not one unit and two multiples of 3",
            )
            rep = jones_repair(b, c)
            self.require(rep is not None, "binary_repair", f"no repair of ({b}, {c})")
            return a, rep.u, rep.v, d

        for d, rest in options:
            found = self.solve_form((1, 1, 2), rest, nonzero=None)
            if found is not None:
                self.claims["square_case"] += 1
                a, b, c = found
                return a, b, c, d

        self.require(False, "square_case", f"only square targets for n={n} and none solvable prime to 3")


class Phi1134(Pipeline):
    """
    x^2 + y^2 + 3z^2 + 4t^2 = 3n + 9 with z = c from {2, 5, 7}.

    The <1,1,4> part has either every component prime to 3 or every component
    divisible by 3; the latter goes through the tau orbit, and a search
    only when the orbit gives up.
    """

    theorem_id = TheoremId.PHI_1134
    threshold = 47
    expected_exceptions = (18,)
    c_candidates = (2, 5, 7)

    def construct(self, n: int) -> Tuple[int, ...]:
        target = self.form_target(n)
        for c in self.c_candidates:
            rest = target - 3 * c * c
            if rest <= 0:
                continue
            found = self.solve_form((1, 1, 4), rest)
            if found is None:
                continue
            if self.prime_to_3(found):
                a, b, d = found
                return a, b, c, d

            self.require(all(v % 3 == 0 for v in found), "residue_split", f"{list(found)} has mixed residues")
            repaired = tau_orbit(TauVector(a=found[0], b=found[1], d=found[2]), norm=rest)
            if repaired is not None:
                self.claims["tau_repair"] += 1
            else:
                repaired = tau_search(rest)
                self.require(repaired is not None, "tau_fallback", f"<1,1,4> has no solution of {rest} prime to 3")
            a, b, d = repaired.as_tuple()
            return a, b, c, d

        self.require(False, "ternary_rep", f"no c in {self.c_candidates} gives a <1,1,4> target for n={n}")
