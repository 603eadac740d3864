"""Tests for the norm-preserving representation repairs."""

import numpy as np
import pytest

from octsum.core.rep_repair import (
    eigenvector_escape,
    jones_repair,
    parity_repair,
    tau_orbit,
    tau_repair,
    tau_search,
    tau_step,
)
from octsum.models.repair import BinaryFormTag, TauVector
from octsum.utils.error_utils import (
    InvalidInputError,
    NonIntegralImageError,
    NormMismatchError,
    ParityMismatchError,
)


def vector(a, b, d):
    return TauVector(a=a, b=b, d=d)


def test_jones_repair_keeps_good_input():
    assert jones_repair(1, 1).as_tuple() == (1, 1)


@pytest.mark.parametrize(
    "u, v, expected",
    [
        (3, 3, (5, 1)),
        (3, 0, (1, 2)),
        (0, 3, (4, 1)),
    ],
)
def test_jones_repair(u, v, expected):
    rep = jones_repair(u, v)
    assert rep.as_tuple() == expected
    assert rep.norm == u * u + 2 * v * v
    assert rep.form == BinaryFormTag.X2_PLUS_2Y2


def test_jones_repair_impossible_residue():
    # 11 = 2 (mod 3) has no representation with ef prime to 3
    assert jones_repair(3, 1) is None


def test_jones_repair_zero_vector():
    with pytest.raises(InvalidInputError):
        jones_repair(0, 0)


def test_parity_repair():
    rep = parity_repair(1, 3)
    assert rep.as_tuple() == (5, -1)
    assert rep.norm == 1 + 3 * 9
    assert rep.form == BinaryFormTag.X2_PLUS_3Y2


def test_parity_repair_mismatch():
    with pytest.raises(ParityMismatchError):
        parity_repair(2, 3)


def test_tau_step():
    stepped = tau_step(vector(6, 36, -15))
    assert stepped.as_tuple() == (6, -36, 15)
    assert stepped.norm == vector(6, 36, -15).norm
    assert tau_step(stepped).as_tuple() == (-2, 28, -19)


def test_tau_step_non_integral():
    with pytest.raises(NonIntegralImageError):
        tau_step(vector(1, 3, 3))


def test_eigenvector_escape():
    assert eigenvector_escape(vector(2, 12, -5)).as_tuple() == (14, 6, 2)
    assert eigenvector_escape(vector(4, 24, -10)).as_tuple() == (28, 12, 4)
    assert eigenvector_escape(vector(1, 2, 3)) is None


def test_tau_repair_steps():
    assert tau_repair(vector(3, 3, 3)).as_tuple() == (7, 1, -1)
    assert tau_repair(vector(3, 0, 0)).as_tuple() == (1, -2, -1)


def test_tau_repair_escapes_eigen_direction():
    repaired = tau_repair(vector(6, 36, -15))
    assert repaired.as_tuple() == (34, -26, -10)
    assert repaired.norm == 2232


def test_tau_orbit():
    assert tau_orbit(vector(9, 0, 0)).as_tuple() == (-7, -4, -2)
    assert tau_orbit(vector(9, 0, 0), max_iters=1) is None
    assert tau_orbit(vector(2, 12, -5)) is None


def test_tau_repair_searches_when_orbit_gives_up():
    repaired = tau_repair(vector(9, 0, 0), max_iters=1)
    assert repaired.norm == 81
    assert all(c % 3 for c in repaired.as_tuple())
    assert repaired == tau_search(81)


def test_tau_search_impossible_norm():
    assert tau_search(248) is None


def test_tau_repair_already_good():
    assert tau_repair(vector(1, 1, 1)).as_tuple() == (1, 1, 1)


def test_tau_repair_impossible_norm():
    # 248 = 2 (mod 3), so no vector of that norm is prime to 3 everywhere
    assert tau_repair(vector(2, 12, -5)) is None


def test_tau_repair_invalid_input():
    with pytest.raises(NormMismatchError):
        tau_repair(vector(1, 1, 1), norm=7)
    with pytest.raises(InvalidInputError):
        tau_repair(vector(0, 0, 0))
    with pytest.raises(InvalidInputError):
        tau_repair(vector(3, 3, 3), max_iters=0)


def test_tau_repair_preserves_norm():
    for w in (vector(3, 3, 3), vector(9, 0, 3), vector(0, 6, 3), vector(6, 36, -15), vector(12, 3, 0)):
        repaired = tau_repair(w)
        assert repaired is not None
        assert repaired.norm == w.norm
        assert all(c % 3 for c in repaired.as_tuple())


def test_tau_step_preserves_norm_random():
    rng = np.random.default_rng(7)
    for _ in range(1000):
        w = vector(*(3 * rng.integers(-200, 201, size=3)).tolist())
        assert tau_step(w).norm == w.norm


def test_parity_repair_identity():
    for e in range(-200, 201):
        for b in range(e % 2 - 200, 201, 2):
            rep = parity_repair(e, b)
            assert rep.norm == e * e + 3 * b * b
            if e % 3 and b % 3 == 0:
                assert rep.u % 3 and rep.v % 3


def test_jones_repair_construction_inputs():
    """Every (c - 2d, c + d) met by the constructions can be repaired."""
    for c in range(-60, 61):
        for d in range(-60, 61):
            if c == 0 and d == 0:
                continue
            rep = jones_repair(c - 2 * d, c + d)
            assert rep is not None, (c, d)
            assert rep.norm == 3 * (c * c + 2 * d * d)


@pytest.mark.parametrize("t", [1, 2, 3])
def test_eigen_direction_double_representation(t):
    w = vector(2 * t, 12 * t, -5 * t)
    escaped = eigenvector_escape(w)
    assert w.norm == escaped.norm == 248 * t * t
