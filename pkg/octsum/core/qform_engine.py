"""
Diagonal quadratic equations sum a_i y_i^2 = N under per-variable residue
constraints, and the closed-form criteria of a few class-number-one ternaries.

Witness order: coordinates are compared left to right, each by |y| and then
positive before negative. `solve` returns the smallest witness in this order and
`solve_all` yields every witness in it.
"""

import threading
from dataclasses import dataclass
from functools import lru_cache
from math import isqrt
from typing import Callable, Dict, FrozenSet, Iterator, List, Optional, Tuple

import numpy as np

from ..models.qform import DiagonalForm, ExclusionRule, FormWitness, RepProblem, ResidueConstraint
from ..schemas.report_schemas import CriterionReport
from ..utils.arith_utils import canonical_values, check_target, exact_sqrt, strip_fours
from ..utils.error_utils import InvalidInputError, UnknownCatalogFormError, WitnessValidationError

# (coefficient, modulus, allowed residues) of one free variable
Var = Tuple[int, int, FrozenSet[int]]

# Forms of this arity or less get a dense value table used as a fast "no"
TABLE_MAX_ARITY = 3
TABLE_MIN_SIZE = 1 << 12
TABLE_FILTER_LIMIT = 1 << 20

_tables: Dict[Tuple[int, ...], np.ndarray] = {}
_tables_lock = threading.Lock()


def _sumset_table(coeffs: Tuple[int, ...], bound: int) -> np.ndarray:
    table = np.zeros(bound + 1, dtype=bool)
    table[0] = True
    for a in coeffs:
        grown = np.zeros(bound + 1, dtype=bool)
        for y in range(isqrt(bound // a) + 1):
            shift = a * y * y
            grown[shift:] |= table[:bound + 1 - shift]
        table = grown
    return table


def form_table(coeffs: Tuple[int, ...], bound: int) -> np.ndarray:
    """
    Dense table of the integers in [0, bound] represented by <coeffs>.

    Tables are cached per sorted coefficient vector and regrown on demand.

    Args:
        coeffs: Diagonal entries
        bound: Largest integer the table must cover

    Returns:
        Boolean array t with t[n] true iff n is represented
    """
    key = tuple(sorted(coeffs))
    with _tables_lock:
        table = _tables.get(key)
        if table is None or len(table) <= bound:
            size = max(bound, TABLE_MIN_SIZE, 0 if table is None else 2 * (len(table) - 1))
            table = _sumset_table(key, size)
            _tables[key] = table
    return table[:bound + 1]


def _abs_admissible(v: int, modulus: int, allowed: FrozenSet[int]) -> bool:
    return v % modulus in allowed or (-v) % modulus in allowed


@lru_cache(maxsize=1 << 17)
def _exists(variables: Tuple[Var, ...], rem: int) -> bool:
    # variables are ordered by decreasing coefficient; the last one is resolved by a square test
    if not variables:
        return rem == 0
    a, modulus, allowed = variables[0]
    if len(variables) == 1:
        if rem % a:
            return False
        root = exact_sqrt(rem // a)
        return root is not None and _abs_admissible(root, modulus, allowed)
    rest = variables[1:]
    for v in range(isqrt(rem // a) + 1):
        if _abs_admissible(v, modulus, allowed) and _exists(rest, rem - a * v * v):
            return True
    return False


def _pruning_order(variables: List[Var]) -> Tuple[Var, ...]:
    return tuple(sorted(variables, key=lambda var: (-var[0], var[1], tuple(sorted(var[2])))))


def _prepare(p: RepProblem) -> Optional[Tuple[List[Optional[int]], int, List[int]]]:
    """Apply pinned values; None when a pinned value breaks its residue constraint."""
    check_target(p.target)
    ys: List[Optional[int]] = [None] * p.form.arity
    rem = p.target
    for index, value in sorted(p.pinned.items()):
        if not p.constraint.admits(index, value):
            return None
        ys[index] = value
        rem -= p.form.coeffs[index] * value * value
    if rem < 0:
        return None
    free = [i for i in range(p.form.arity) if i not in p.pinned]
    return ys, rem, free


def _variables(p: RepProblem, indices: List[int]) -> List[Var]:
    return [(p.form.coeffs[i], p.constraint.modulus, p.constraint.allowed[i]) for i in indices]


def _table_rejects(p: RepProblem) -> bool:
    if p.pinned or p.form.arity > TABLE_MAX_ARITY or p.target > TABLE_FILTER_LIMIT:
        return False
    return not bool(form_table(p.form.coeffs, p.target)[p.target])


def validate_witness(p: RepProblem, witness: FormWitness) -> None:
    """Raise if the witness does not satisfy the problem."""
    ys = witness.ys
    if len(ys) != p.form.arity or p.form.evaluate(ys) != p.target:
        raise WitnessValidationError(f"{list(ys)} does not represent {p.target} by {p.form}")
    for i, y in enumerate(ys):
        if not p.constraint.admits(i, y):
            raise WitnessValidationError(f"coordinate {i} of {list(ys)} violates its residue constraint")
        if i in p.pinned and p.pinned[i] != y:
            raise WitnessValidationError(f"coordinate {i} of {list(ys)} is pinned to {p.pinned[i]}")


def solve(p: RepProblem) -> Optional[FormWitness]:
    """
    Find the smallest witness of a representation problem.

    Variables are fixed left to right; each candidate value is kept only if the
    remaining variables can still reach the remainder.

    Args:
        p: Representation problem

    Returns:
        FormWitness, or None when the problem has no solution
    """
    if p.target < 0:
        return None
    prepared = _prepare(p)
    if prepared is None or _table_rejects(p):
        return None
    ys, rem, free = prepared

    for pos, i in enumerate(free):
        a = p.form.coeffs[i]
        rest = _pruning_order(_variables(p, free[pos + 1:]))
        chosen = None
        for v in canonical_values(isqrt(rem // a)):
            if p.constraint.admits(i, v) and _exists(rest, rem - a * v * v):
                chosen = v
                break
        if chosen is None:
            return None
        ys[i] = chosen
        rem -= a * chosen * chosen

    if rem != 0:
        return None
    witness = FormWitness(ys=tuple(ys))
    validate_witness(p, witness)
    return witness


def solve_all(p: RepProblem) -> Iterator[FormWitness]:
    """
    Yield every solution exactly once, in witness order.

    Args:
        p: Representation problem of a positive-definite form

    Yields:
        FormWitness for each integer solution
    """
    if p.target < 0:
        return
    prepared = _prepare(p)
    if prepared is None:
        return
    ys, rem, free = prepared
    rests = [_pruning_order(_variables(p, free[pos + 1:])) for pos in range(len(free))]

    def descend(pos: int, remaining: int) -> Iterator[FormWitness]:
        if pos == len(free):
            if remaining == 0:
                yield FormWitness(ys=tuple(ys))
            return
        i = free[pos]
        a = p.form.coeffs[i]
        for v in canonical_values(isqrt(remaining // a)):
            left = remaining - a * v * v
            if p.constraint.admits(i, v) and _exists(rests[pos], left):
                ys[i] = v
                yield from descend(pos + 1, left)
        ys[i] = None

    yield from descend(0, rem)


def represents_unconstrained(f: DiagonalForm, n: int) -> bool:
    """True iff n = sum a_i y_i^2 has an integer solution."""
    if n < 0:
        return False
    return solve(RepProblem(form=f, target=n, constraint=ResidueConstraint.trivial(f.arity))) is not None


def excluded_by_rule(rule: ExclusionRule, n: int) -> bool:
    """
    True iff n has the rule's shape scale * 4^s * (8t + 7) or fails its congruence.

    Args:
        rule: Exclusion rule
        n: Positive integer

    Returns:
        Whether the rule excludes n
    """
    if n < 1:
        raise InvalidInputError(f"exclusion rules apply to positive integers, got {n}")
    if rule.required_modulus is not None and n % rule.required_modulus != rule.required_residue:
        return True
    if n % rule.scale:
        return False
    return strip_fours(n // rule.scale) % 8 == 7


@dataclass(frozen=True)
class CatalogEntry:
    rule: Optional[ExclusionRule]
    asserted_on: Callable[[int], bool]
    domain: str


RULE_112 = ExclusionRule(scale=2)
RULE_119 = ExclusionRule(scale=1)
RULE_336 = ExclusionRule(scale=6, required_residue=0, required_modulus=3)

CATALOG: Dict[Tuple[int, ...], CatalogEntry] = {
    (1, 1, 2): CatalogEntry(RULE_112, lambda n: True, "all n"),
    (1, 1, 9): CatalogEntry(RULE_119, lambda n: n % 3 == 2, "n = 2 mod 3"),
    (3, 3, 6): CatalogEntry(RULE_336, lambda n: True, "all n"),
    (1, 4, 6): CatalogEntry(None, lambda n: n % 2 == 1 and n % 3 != 0, "odd n prime to 3"),
    (1, 1, 3): CatalogEntry(None, lambda n: n % 3 == 2, "n = 2 mod 3"),
}


def catalog_entry(form: DiagonalForm) -> CatalogEntry:
    entry = CATALOG.get(tuple(sorted(form.coeffs)))
    if entry is None:
        raise UnknownCatalogFormError(f"no closed-form criterion for {form}")
    return entry


def criterion_represents(catalog_form: DiagonalForm, n: int) -> bool:
    """
    Decide n -> catalog_form by its closed-form criterion.

    Outside the residues where the criterion is asserted the answer comes from search.

    Args:
        catalog_form: One of the catalogue forms
        n: Positive integer

    Returns:
        Whether the form represents n
    """
    entry = catalog_entry(catalog_form)
    if n < 1:
        raise InvalidInputError(f"criteria apply to positive integers, got {n}")
    if entry.asserted_on(n):
        return entry.rule is None or not excluded_by_rule(entry.rule, n)
    return represents_unconstrained(catalog_form, n)


def verify_criterion(catalog_form: DiagonalForm, bound: int) -> CriterionReport:
    """
    List every n <= bound, inside the asserted domain, where the closed form disagrees with search.

    Args:
        catalog_form: One of the catalogue forms
        bound: Upper end of the check

    Returns:
        CriterionReport (disagreements expected empty)
    """
    entry = catalog_entry(catalog_form)
    table = form_table(catalog_form.coeffs, bound)
    checked = 0
    disagreements = []
    for n in range(1, bound + 1):
        if not entry.asserted_on(n):
            continue
        checked += 1
        if criterion_represents(catalog_form, n) != bool(table[n]):
            disagreements.append(n)
    return CriterionReport(
        form=catalog_form.coeffs,
        bound=bound,
        domain=entry.domain,
        checked=checked,
        disagreements=disagreements,
    )
