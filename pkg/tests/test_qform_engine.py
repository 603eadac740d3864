"""Tests for the diagonal form engine and the ternary criteria."""

import numpy as np
import pytest
from pydantic import ValidationError

from octsum.core.qform_engine import (
    CATALOG,
    RULE_112,
    RULE_119,
    RULE_336,
    criterion_represents,
    excluded_by_rule,
    form_table,
    represents_unconstrained,
    solve,
    solve_all,
    verify_criterion,
)
from octsum.models.qform import DiagonalForm, RepProblem, ResidueConstraint
from octsum.utils.error_utils import InvalidInputError, UnknownCatalogFormError


def problem(coeffs, target, constraint=None, pinned=None):
    form = DiagonalForm(coeffs=coeffs)
    return RepProblem(
        form=form,
        target=target,
        constraint=constraint or ResidueConstraint.trivial(form.arity),
        pinned=pinned or {},
    )


def test_solve_smallest_witness():
    assert solve(problem((1, 2), 3)).ys == (1, 1)
    assert solve(problem((1, 1), 9)).ys == (0, 3)


def test_solve_residue_constraint():
    constrained = ResidueConstraint.nonzero_mod3(2)
    assert solve(problem((1, 1), 9, constrained)) is None
    assert solve(problem((1, 1), 8, constrained)).ys == (2, 2)


def test_solve_partial_constraint():
    # only the second variable must be prime to 3
    constrained = ResidueConstraint.nonzero_mod3(2, (1,))
    assert solve(problem((1, 1), 10, constrained)).ys == (3, 1)


def test_solve_pinned():
    assert solve(problem((1, 1, 1), 6, pinned={0: 2})).ys == (2, 1, 1)
    assert solve(problem((1, 1, 1), 3, pinned={0: 2})) is None


def test_solve_negative_target():
    assert solve(problem((1, 1), -1)) is None


def test_solve_all_order():
    found = [w.ys for w in solve_all(problem((1, 1), 5))]
    assert found == [(1, 2), (1, -2), (-1, 2), (-1, -2), (2, 1), (2, -1), (-2, 1), (-2, -1)]


def test_solve_all_count():
    assert len(list(solve_all(problem((1, 1, 9), 2)))) == 4


def naive_counts(coeffs, bound, prime_to_3=False):
    """Number of integer vectors with sum a_i y_i^2 = n, for every n <= bound, by convolution."""
    counts = np.zeros(bound + 1, dtype=np.int64)
    counts[0] = 1
    for a in coeffs:
        single = np.zeros(bound + 1, dtype=np.int64)
        y = 0
        while a * y * y <= bound:
            if not prime_to_3 or y % 3:
                single[a * y * y] += 1 if y == 0 else 2
            y += 1
        counts = np.convolve(counts, single)[:bound + 1]
    return counts


@pytest.mark.parametrize("coeffs", [(1, 1, 2), (1, 2, 3), (1, 1, 9)])
@pytest.mark.parametrize("prime_to_3", [False, True])
def test_solve_all_count_matches_naive(coeffs, prime_to_3):
    expected = naive_counts(coeffs, 500, prime_to_3)
    arity = len(coeffs)
    constraint = ResidueConstraint.nonzero_mod3(arity) if prime_to_3 else ResidueConstraint.trivial(arity)
    for n in range(0, 501):
        assert len(list(solve_all(problem(coeffs, n, constraint)))) == expected[n], n


def test_solve_example_missing_target():
    # 14 is not a sum of generalized octagonal numbers with coefficients 1, 1, 3, 7
    constrained = ResidueConstraint.nonzero_mod3(4)
    assert solve(problem((1, 1, 3, 7), 3 * 14 + 12, constrained)) is None
    assert solve(problem((1, 1, 3, 7), 54)) is not None


def test_solve_permutation_invariant():
    rng = np.random.default_rng(11)
    for _ in range(8):
        coeffs = tuple(rng.integers(1, 11, size=3).tolist())
        chosen = tuple(i for i in range(3) if rng.integers(0, 2))
        perm = rng.permutation(3).tolist()
        permuted = tuple(coeffs[i] for i in perm)
        permuted_chosen = tuple(j for j in range(3) if perm[j] in chosen)
        constraint = ResidueConstraint.nonzero_mod3(3, chosen)
        permuted_constraint = ResidueConstraint.nonzero_mod3(3, permuted_chosen)
        for n in range(0, 301):
            found = solve(problem(coeffs, n, constraint))
            moved = solve(problem(permuted, n, permuted_constraint))
            assert (found is None) == (moved is None), (coeffs, perm, chosen, n)


@pytest.mark.slow
def test_solve_permutation_invariant_wide():
    rng = np.random.default_rng(12)
    for _ in range(30):
        coeffs = tuple(rng.integers(1, 21, size=int(rng.integers(2, 5))).tolist())
        perm = rng.permutation(len(coeffs)).tolist()
        permuted = tuple(coeffs[i] for i in perm)
        for n in range(0, 1001):
            assert (solve(problem(coeffs, n)) is None) == (solve(problem(permuted, n)) is None), (coeffs, perm, n)


def test_problem_arity_mismatch():
    with pytest.raises(ValidationError):
        RepProblem(form=DiagonalForm.of(1, 1), target=2, constraint=ResidueConstraint.trivial(3))


def test_represents_unconstrained():
    three_squares = DiagonalForm.of(1, 1, 1)
    assert represents_unconstrained(three_squares, 6)
    assert not represents_unconstrained(three_squares, 7)
    assert not represents_unconstrained(three_squares, 28)
    assert not represents_unconstrained(three_squares, -1)


def test_form_table():
    table = form_table((1, 1), 10)
    assert [n for n in range(11) if table[n]] == [0, 1, 2, 4, 5, 8, 9, 10]


def test_excluded_by_rule():
    assert excluded_by_rule(RULE_119, 7)
    assert excluded_by_rule(RULE_119, 28)
    assert not excluded_by_rule(RULE_119, 14)
    assert excluded_by_rule(RULE_112, 14)
    assert not excluded_by_rule(RULE_112, 7)
    # <3,3,6> needs n = 0 mod 3 first
    assert excluded_by_rule(RULE_336, 4)
    assert excluded_by_rule(RULE_336, 42)
    assert not excluded_by_rule(RULE_336, 6)


@pytest.mark.parametrize("coeffs, rule", [((1, 1, 9), RULE_119), ((1, 1, 2), RULE_112), ((3, 3, 6), RULE_336)])
def test_exclusion_rules_sound(coeffs, rule):
    """Every excluded n up to 10^4 is missed by the form, whatever its residue mod 3."""
    table = form_table(coeffs, 10_000)
    excluded = [n for n in range(1, 10_001) if excluded_by_rule(rule, n)]
    assert excluded
    assert not any(table[n] for n in excluded)


def test_excluded_by_rule_positive_only():
    with pytest.raises(InvalidInputError):
        excluded_by_rule(RULE_119, 0)


def test_criterion_represents():
    assert not criterion_represents(DiagonalForm.of(1, 1, 2), 14)
    assert criterion_represents(DiagonalForm.of(1, 1, 2), 13)
    assert criterion_represents(DiagonalForm.of(2, 1, 1), 13)


def test_criterion_unknown_form():
    with pytest.raises(UnknownCatalogFormError):
        criterion_represents(DiagonalForm.of(1, 1, 5), 3)


@pytest.mark.parametrize("coeffs", sorted(CATALOG))
def test_criteria_agree_with_search(coeffs):
    report = verify_criterion(DiagonalForm(coeffs=coeffs), 400)
    assert report.checked > 0
    assert report.disagreements == []
    assert report.agrees


@pytest.mark.slow
@pytest.mark.parametrize("coeffs", sorted(CATALOG))
def test_criteria_agree_large_bound(coeffs):
    assert verify_criterion(DiagonalForm(coeffs=coeffs), 20_000).agrees
