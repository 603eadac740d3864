"""Tests for octagonal numbers and single-sum representability."""

from itertools import product

import numpy as np
import pytest

from octsum.core.octsum import (
    evaluate,
    exceptions_up_to,
    is_gen_octagonal,
    oct_values_up_to,
    p8,
    reduce_to_qform,
    representable_table,
    represents,
    witness_from_form,
)
from octsum.models.octsum import OctSum
from octsum.utils.error_utils import ArithmeticOverflowError, InvalidInputError


# Brute-force oracle over a window of arguments wide enough for n <= 60
def brute_force_represents(s: OctSum, n: int) -> bool:
    window = range(-6, 7)
    return any(evaluate(s, xs) == n for xs in product(window, repeat=s.k))


def test_p8_values():
    """P8 on small arguments, both signs."""
    assert [p8(x) for x in (0, 1, -1, 2, -2, 3, -3)] == [0, 1, 5, 8, 16, 21, 33]


def test_p8_overflow():
    with pytest.raises(ArithmeticOverflowError):
        p8(2 ** 30)


def test_oct_values_up_to():
    assert oct_values_up_to(40) == [0, 1, 5, 8, 16, 21, 33, 40]
    assert oct_values_up_to(0) == [0]


def test_oct_values_negative_bound():
    with pytest.raises(InvalidInputError):
        oct_values_up_to(-1)


def test_is_gen_octagonal_matches_values():
    values = set(oct_values_up_to(500))
    assert all(is_gen_octagonal(n) == (n in values) for n in range(0, 501))
    assert not is_gen_octagonal(-5)


def test_p8_square_identity():
    assert all(3 * p8(x) + 1 == (3 * x - 1) ** 2 for x in range(-10_000, 10_001))


def test_is_gen_octagonal_matches_values_large():
    values = set(oct_values_up_to(100_000))
    assert all(is_gen_octagonal(n) == (n in values) for n in range(0, 100_001))


@pytest.mark.parametrize("coeffs, c", [((1,), 1), ((1, 2), 3), ((1, 1, 3), 7), ((2, 5), 1), ((1, 2, 4), 20)])
def test_extension_keeps_representations(coeffs, c):
    """Appending a coefficient with its argument at 0 keeps every representation."""
    s = OctSum(coeffs=coeffs)
    grown = s.extend(c)
    before = representable_table(s, 2_000)
    after = representable_table(grown, 2_000)
    assert not np.any(before & ~after)
    for n in range(0, 80):
        witness = represents(s, n)
        if witness is not None:
            assert evaluate(grown, _with_zero(s, c, witness.xs)) == n


def _with_zero(s, c, xs):
    """Arguments of s.extend(c) reusing xs and setting the new one to 0."""
    slot = sorted(s.coeffs + (c,)).index(c)
    rest = iter(xs)
    return tuple(0 if i == slot else next(rest) for i in range(s.k + 1))


def test_reduce_to_qform():
    problem = reduce_to_qform(OctSum.of(3, 1, 1, 3), 10)
    assert problem.form.coeffs == (1, 1, 3, 3)
    assert problem.target == 38
    assert problem.constraint.modulus == 3
    assert all(residues == frozenset({1, 2}) for residues in problem.constraint.allowed)


def test_reduce_to_qform_rejects_empty_sum():
    with pytest.raises(InvalidInputError):
        reduce_to_qform(OctSum(), 1)


def test_witness_from_form():
    assert witness_from_form((2, -1, 4, -4)) == (1, 0, -1, -1)
    with pytest.raises(InvalidInputError):
        witness_from_form((3,))


def test_represents_single_coefficient():
    assert represents(OctSum.of(1), 5).xs == (-1,)
    assert represents(OctSum.of(1), 2) is None


def test_represents_smallest_witness():
    witness = represents(OctSum.of(1, 1), 2)
    assert witness.xs == (1, 1)
    assert represents(OctSum.of(1, 1), 3) is None


def test_represents_empty_sum():
    assert represents(OctSum(), 0).xs == ()
    assert represents(OctSum(), 1) is None


def test_represents_negative_target():
    with pytest.raises(InvalidInputError):
        represents(OctSum.of(1), -1)


@pytest.mark.parametrize("coeffs", [(1,), (1, 1), (1, 2), (1, 1, 3), (1, 2, 4), (2, 3, 7)])
def test_represents_matches_brute_force(coeffs):
    """Search kernel against exhaustive enumeration."""
    s = OctSum(coeffs=coeffs)
    for n in range(0, 61):
        witness = represents(s, n)
        assert (witness is not None) == brute_force_represents(s, n), n
        if witness is not None:
            assert evaluate(s, witness.xs) == n


def test_table_matches_search():
    s = OctSum.of(1, 2, 3)
    table = representable_table(s, 200)
    assert all(bool(table[n]) == (represents(s, n) is not None) for n in range(0, 201))


def test_exceptions_up_to():
    assert exceptions_up_to(OctSum.of(1, 1, 3, 4), 300) == [18]
    assert exceptions_up_to(OctSum.of(1, 2, 3, 3), 300) == [12]
    assert exceptions_up_to(OctSum.of(1, 1, 2, 14), 300) == [60]
    assert exceptions_up_to(OctSum.of(1, 1, 3, 3), 300) == []


def test_exceptions_up_to_truant_first():
    assert exceptions_up_to(OctSum.of(1, 1, 3, 7), 100)[0] == 14


def test_sum_is_canonical():
    assert OctSum.of(7, 1, 3, 1).coeffs == (1, 1, 3, 7)
    assert OctSum.of(7, 1, 3, 1).key == "1,1,3,7"
    assert str(OctSum.of(2, 1)) == "Phi(1,2)"


def test_sum_rejects_non_positive():
    with pytest.raises(ValueError):
        OctSum.of(1, 0)


def reachable(coeffs, bound):
    """Every a_1 P8(x_1) + ... + a_k P8(x_k) up to bound, by direct enumeration."""
    values = sorted({3 * x * x - 2 * x for x in range(-bound - 1, bound + 2) if 3 * x * x - 2 * x <= bound})
    sums = {0}
    for a in coeffs:
        sums = {s + a * v for s in sums for v in values if s + a * v <= bound}
    return sums


def test_represents_matches_oracle_random():
    rng = np.random.default_rng(2024)
    for _ in range(60):
        coeffs = tuple(rng.integers(1, 16, size=int(rng.integers(1, 6))).tolist())
        n = int(rng.integers(0, 401))
        s = OctSum(coeffs=coeffs)
        assert (represents(s, n) is not None) == (n in reachable(coeffs, n)), (coeffs, n)


@pytest.mark.slow
def test_represents_matches_oracle_wide():
    rng = np.random.default_rng(2025)
    for _ in range(500):
        coeffs = tuple(rng.integers(1, 16, size=int(rng.integers(1, 6))).tolist())
        n = int(rng.integers(0, 2001))
        s = OctSum(coeffs=coeffs)
        assert (represents(s, n) is not None) == (n in reachable(coeffs, n)), (coeffs, n)


@pytest.mark.slow
@pytest.mark.parametrize(
    "coeffs, expected",
    [
        ((1, 1, 3, 3), []),
        ((1, 1, 3, 6), []),
        ((1, 2, 3, 6), []),
        ((1, 2, 3, 7), []),
        ((1, 2, 3, 9), []),
        ((1, 1, 2, 14), [60]),
        ((1, 1, 3, 4), [18]),
        ((1, 2, 3, 3), [12]),
    ] + [((1, 1, 3, 7, alpha), []) for alpha in range(7, 15)],
)
def test_exceptions_large_bound(coeffs, expected):
    assert exceptions_up_to(OctSum(coeffs=coeffs), 100_000) == expected
