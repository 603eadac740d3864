"""Shared machinery of the per-sum constructions."""

from collections import Counter
from typing import Iterable, List, Optional, Sequence, Tuple

from ...models.octsum import OctSum, OctWitness
from ...models.qform import DiagonalForm, RepProblem, ResidueConstraint
from ...schemas.theorem_schema import TheoremId, theorem_coeffs
from ...utils.arith_utils import exact_sqrt
from ...utils.error_utils import ClaimFailed
from ..octsum import evaluate, witness_from_form
from ..qform_engine import criterion_represents, solve


class Pipeline:
    """
    Construct a representation of n by a fixed sum, one claim at a time.

    Subclasses implement `construct`, returning the form-level vector y (in
    coefficient order) with sum a_i y_i^2 = 3n + sum a_i and every y_i prime to 3.
    Integers below `threshold`, or accepted by `is_direct`, are left to direct search.
    """

    theorem_id: TheoremId
    threshold: int = 0
    expected_exceptions: Tuple[int, ...] = ()
    notes: Tuple[str, ...] = ()

    def __init__(self, theorem_id: Optional[TheoremId] = None):
        if theorem_id is not None:
            self.theorem_id = theorem_id
        self.sum = OctSum(coeffs=theorem_coeffs(self.theorem_id))
        self.claims: Counter = Counter()

    @property
    def coeffs(self) -> Tuple[int, ...]:
        return self.sum.coeffs

    def form_target(self, n: int) -> int:
        return 3 * n + sum(self.coeffs)

    def is_direct(self, n: int) -> bool:
        return n < self.threshold

    def require(self, condition: bool, claim: str, detail: str) -> None:
        """Count one instance of a claim and raise ClaimFailed if it does not hold."""
        self.claims[claim] += 1
        if not condition:
            raise ClaimFailed(claim, detail)

    def construct(self, n: int) -> Tuple[int, ...]:
        raise NotImplementedError

    def witness(self, n: int) -> OctWitness:
        """
        Run the construction for n and convert it to an octagonal witness.

        Args:
            n: Integer past the direct-check range

        Returns:
            OctWitness of n by the pipeline's sum
        """
        ys = tuple(self.construct(n))
        target = self.form_target(n)
        form = DiagonalForm(coeffs=self.coeffs)
        self.require(
            len(ys) == len(self.coeffs) and form.evaluate(ys) == target and all(y % 3 for y in ys),
            "final_witness",
            f"{list(ys)} is not a solution of {form} = {target} prime to 3",
        )
        xs = witness_from_form(ys)
        self.require(evaluate(self.sum, xs) == n, "final_witness", f"{list(xs)} does not give {n}")
        return OctWitness(xs=xs)

    # helpers shared by the constructions

    def solve_form(
        self,
        coeffs: Sequence[int],
        target: int,
        nonzero: Optional[Iterable[int]] = (),
    ) -> Optional[Tuple[int, ...]]:
        """
        Smallest solution of <coeffs> = target.

        Args:
            coeffs: Diagonal entries
            target: Integer to represent
            nonzero: Indices that must be prime to 3 (None for all)

        Returns:
            Solution vector or None
        """
        if target < 0:
            return None
        arity = len(coeffs)
        indices = None if nonzero is None else tuple(nonzero)
        if indices == ():
            constraint = ResidueConstraint.trivial(arity)
        else:
            constraint = ResidueConstraint.nonzero_mod3(arity, indices)
        found = solve(RepProblem(form=DiagonalForm(coeffs=tuple(coeffs)), target=target, constraint=constraint))
        return None if found is None else found.ys

    @staticmethod
    def criterion(coeffs: Sequence[int], m: int) -> bool:
        return m > 0 and criterion_represents(DiagonalForm(coeffs=tuple(coeffs)), m)

    @staticmethod
    def is_scaled_square(m: int, scale: int = 1) -> bool:
        return m % scale == 0 and exact_sqrt(m // scale) is not None

    @staticmethod
    def prime_to_3(values: Iterable[int]) -> bool:
        return all(v % 3 for v in values)


def candidates_by_parity(target: int, weight: int, parity: int) -> List[int]:
    """Positive d prime to 3 with d = parity (mod 2) and weight * d^2 < target, increasing."""
    out = []
    d = 1
    while weight * d * d < target:
        if d % 3 and d % 2 == parity:
            out.append(d)
        d += 1
    return out
