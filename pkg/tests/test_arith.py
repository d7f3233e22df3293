import math
from fractions import Fraction

import numpy as np
import pytest

from sieve_lab.arith import dirichlet_approx, e_of, nearest_int_distance, reduce

from helpers import brute_dirichlet, valid_pairs


def test_e_of_examples():
    assert e_of(0) == pytest.approx(1 + 0j, abs=1e-15)
    assert e_of(0.5) == pytest.approx(-1 + 0j, abs=1e-12)
    assert e_of(0.25) == pytest.approx(1j, abs=1e-12)
    assert e_of(Fraction(1, 4)) == pytest.approx(1j, abs=1e-15)


def test_e_of_is_multiplicative_and_unimodular():
    rng = np.random.default_rng(7)
    for _ in range(200):
        a, b = rng.uniform(-5, 5, size=2)
        assert abs(e_of(a) * e_of(b) - e_of(a + b)) < 1e-12
        assert abs(abs(e_of(a)) - 1.0) < 1e-12


def test_nearest_int_distance_examples():
    assert nearest_int_distance(0.4) == pytest.approx(0.4, abs=1e-15)
    assert nearest_int_distance(0.6) == pytest.approx(0.4, abs=1e-15)
    assert nearest_int_distance(3.0) == 0.0
    assert nearest_int_distance(Fraction(7, 3)) == pytest.approx(1 / 3, abs=1e-15)


def test_nearest_int_distance_properties():
    rng = np.random.default_rng(11)
    for _ in range(300):
        alpha = float(rng.uniform(-4, 4))
        shift = int(rng.integers(-5, 6))
        d = nearest_int_distance(alpha)
        assert 0.0 <= d <= 0.5
        assert nearest_int_distance(alpha + shift) == pytest.approx(d, abs=1e-12)
        assert nearest_int_distance(-alpha) == pytest.approx(d, abs=1e-12)


def test_reduce():
    assert reduce(2, 4) == Fraction(1, 2)
    assert reduce(0, 7) == Fraction(0, 1)
    assert reduce(9, 16) == Fraction(9, 16)
    with pytest.raises(ValueError):
        reduce(1, 0)
    with pytest.raises(ValueError):
        reduce(1, -2)


def test_dirichlet_exact_rational():
    got = dirichlet_approx(Fraction(1, 3), 10)
    assert (got.u, got.v, got.residual) == (1, 3, 0.0)


def test_dirichlet_pi():
    got = dirichlet_approx(math.pi, 113)
    assert (got.u, got.v) == (355, 113)
    # value frozen from the brute-force scan over 1 <= v <= 113, u = round(v*pi)
    assert got.residual == pytest.approx(3.014435338855037e-05, rel=1e-9)


def test_dirichlet_sqrt2():
    got = dirichlet_approx(math.sqrt(2), 5)
    assert (got.u, got.v) == (7, 5)
    assert got.residual == pytest.approx(0.0710678118654755, rel=1e-12)


def test_dirichlet_matches_brute_oracle():
    rng = np.random.default_rng(23)
    for _ in range(300):
        alpha = float(rng.uniform(-3, 3))
        bound = int(rng.integers(1, 250))
        got = dirichlet_approx(alpha, bound)
        _, _, best_res = brute_dirichlet(alpha, bound)
        assert 1 <= got.v <= bound
        assert math.gcd(got.u, got.v) == 1
        assert got.residual <= best_res + 1e-12
        assert got.residual <= 1.0 / bound + 1e-12
        assert abs(got.v * alpha - got.u) == got.residual


def test_dirichlet_random_rationals_hit_zero():
    rng = np.random.default_rng(31)
    for _ in range(200):
        bound = int(rng.integers(2, 200))
        den = int(rng.integers(1, bound + 1))
        num = int(rng.integers(-3 * den, 3 * den + 1))
        got = dirichlet_approx(Fraction(num, den), bound)
        assert got.residual == 0.0
        assert got.v <= bound


def test_dirichlet_minimal_among_valid_pairs():
    rng = np.random.default_rng(37)
    for _ in range(100):
        alpha = float(rng.uniform(0, 1))
        bound = int(rng.integers(2, 120))
        got = dirichlet_approx(alpha, bound)
        for _, _, res in valid_pairs(alpha, bound):
            assert got.residual <= res + 1e-12
