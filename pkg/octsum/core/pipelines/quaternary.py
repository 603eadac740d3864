"""Constructions for the universal quaternary sums with a coefficient 3 and no exceptions."""

from typing import Optional, Sequence, Tuple

from ...models.qform import DiagonalForm, RepProblem, ResidueConstraint
from ...schemas.theorem_schema import TheoremId
from ..qform_engine import solve_all
from ..rep_repair import jones_repair, parity_repair
from .base import Pipeline, candidates_by_parity

# n = 3m + r -> (ternary target T(m), offset k) with y_1, y_2 = 3y + k, 3y - k
_PHI_1133_CASES = {
    0: (lambda m: 3 * m + 2, 1),
    1: (lambda m: 3 * m - 13, 5),
    2: (lambda m: 3 * m + 2, 2),
}


class Phi1133(Pipeline):
    """x^2 + y^2 + 3z^2 + 3t^2 = 3n + 8 via z^2 + t^2 + 6y^2 = T."""

    theorem_id = TheoremId.PHI_1133
    threshold = 14
    notes = ("direct search only for n = 1 (mod 3) below the threshold",)

    def is_direct(self, n: int) -> bool:
        return n % 3 == 1 and n < self.threshold

    def construct(self, n: int) -> Tuple[int, ...]:
        m, r = divmod(n, 3)
        ternary_target, k = _PHI_1133_CASES[r]
        target = ternary_target(m)

        found = self.solve_form((1, 1, 6), target, nonzero=(0, 1))
        self.require(found is not None, "ternary_rep", f"<1,1,6> misses {target} with zt prime to 3")
        z, t, y = found
        return 3 * y + k, 3 * y - k, z, t


class Phi1136(Pipeline):
    """x^2 + y^2 + 9z^2 + 18t^2 = 3n + 11 with t in {1, 2}, then a binary repair."""

    theorem_id = TheoremId.PHI_1136
    threshold = 21

    def construct(self, n: int) -> Tuple[int, ...]:
        target = self.form_target(n)
        d = 1 if target % 8 == 7 or target % 4 == 0 else 2
        alpha = target - 18 * d * d

        self.require(self.criterion((1, 1, 9), alpha), "ternary_criterion", f"<1,1,9> criterion rejects {alpha}")
        found = self.solve_form((1, 1, 9), alpha)
        self.require(found is not None, "ternary_rep", f"<1,1,9> misses {alpha}")
        a, b, c = found

        rep = jones_repair(c - 2 * d, c + d)
        self.require(rep is not None, "binary_repair", f"no repair of ({c - 2 * d}, {c + d})")
        return a, b, rep.u, rep.v


class Phi1236(Pipeline):
    """x^2 + 2y^2 + 9z^2 + 18t^2 = 3n + 12 with both binary parts nonzero, then two binary repairs."""

    theorem_id = TheoremId.PHI_1236
    threshold = 45

    def split(self, target: int) -> Tuple[int, int, int, int]:
        """
        Solve a^2 + 2b^2 + 9c^2 + 18d^2 = target with a^2 + 2b^2 and c^2 + 2d^2 nonzero.

        Args:
            target: Positive multiple of 3, at least 12

        Returns:
            (a, b, c, d)
        """
        if target % 2 == 1 and target >= 75:
            for d in (1, 2):
                rest = target - 18 * d * d
                if rest > 0 and not self.is_scaled_square(rest, 9):
                    found = self.solve_form((1, 2, 9), rest)
                    if found is not None:
                        a, b, c = found
                        return a, b, c, d
            self.require(False, "ternary_rep", f"<1,2,9> misses {target} - 18d^2 for d in (1, 2)")

        if target % 4 == 2 and target >= 147:
            for c in (2, 4):
                rest = target - 9 * c * c
                if rest > 0 and not self.is_scaled_square(rest, 18):
                    found = self.solve_form((1, 2, 18), rest)
                    if found is not None:
                        a, b, d = found
                        return a, b, c, d
            self.require(False, "ternary_rep", f"<1,2,18> misses {target} - 9c^2 for c in (2, 4)")

        if target % 4 == 0 and target // 4 >= 12:
            self.claims["scaled"] += 1
            return tuple(2 * v for v in self.split(target // 4))

        return self._enumerate(target)

    def _enumerate(self, target: int) -> Tuple[int, int, int, int]:
        problem = RepProblem(
            form=DiagonalForm.of(1, 2, 9, 18),
            target=target,
            constraint=ResidueConstraint.trivial(4),
        )
        for found in solve_all(problem):
            a, b, c, d = found.ys
            if a * a + 2 * b * b and c * c + 2 * d * d:
                return a, b, c, d
        self.require(False, "small_split", f"no split of {target} with both binary parts nonzero")

    def construct(self, n: int) -> Tuple[int, ...]:
        a, b, c, d = self.split(self.form_target(n))

        first = jones_repair(a, b)
        self.require(first is not None, "binary_repair", f"no repair of ({a}, {b})")
        second = jones_repair(c - 2 * d, c + d)
        self.require(second is not None, "binary_repair", f"no repair of ({c - 2 * d}, {c + d})")
        return first.u, first.v, second.u, second.v


class ThreeThreeSixRoute(Pipeline):
    """
    x^2 + 2y^2 + 3z^2 + w t^2 = N through 3a^2 + 3b^2 + 6c^2 = N - w d^2.

    d runs through candidates of the parity of N that are prime to 3. The part
    3a^2 + 6c^2 = (a + 2c)^2 + 2(a - c)^2 is repaired by jones_repair, and b by
    parity_repair when 3 divides it.
    """

    threshold = 111
    odd_candidates: Optional[Sequence[int]] = None
    even_candidates: Optional[Sequence[int]] = None

    @property
    def weight(self) -> int:
        return self.coeffs[-1]

    def candidates(self, target: int) -> Sequence[int]:
        parity = target % 2
        fixed = self.odd_candidates if parity else self.even_candidates
        if fixed is not None:
            return fixed
        return candidates_by_parity(target, self.weight, parity)

    def construct(self, n: int) -> Tuple[int, ...]:
        target = self.form_target(n)
        for d in self.candidates(target):
            rest = target - self.weight * d * d
            if rest <= 0 or not self.criterion((3, 3, 6), rest):
                continue
            found = self.solve_form((3, 3, 6), rest)
            self.require(found is not None, "ternary_rep", f"<3,3,6> misses {rest} despite its criterion")
            a, b, c = found
            if a == 0 and c == 0:
                a, b = b, a

            rep = jones_repair(a + 2 * c, a - c)
            self.require(rep is not None, "binary_repair", f"no repair of ({a + 2 * c}, {a - c})")
            e, f = rep.u, rep.v
            if b % 3:
                return e, f, b, d

            self.require((e - b) % 2 == 0, "parity", f"e={e} and b={b} differ in parity")
            p = parity_repair(e, b)
            return p.u, f, p.v, d

        self.require(False, "candidate_exists", f"no d leaves a <3,3,6> target below {target}")


class Phi1237(ThreeThreeSixRoute):
    theorem_id = TheoremId.PHI_1237
    odd_candidates = (1, 5, 7)
    even_candidates = (2, 4)


class Phi1239(ThreeThreeSixRoute):
    theorem_id = TheoremId.PHI_1239
    notes = ("construction reconstructed from the <1,2,3,7> route with weight 9",)


class Phi1233(ThreeThreeSixRoute):
    theorem_id = TheoremId.PHI_1233
    expected_exceptions = (12,)
    notes = ("construction reconstructed from the <1,2,3,7> route with weight 3",)
