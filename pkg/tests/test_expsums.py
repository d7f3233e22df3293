import math
from fractions import Fraction

import numpy as np
import pytest

from sieve_lab.arith import ApproxPair
from sieve_lab.errors import CapacityError
from sieve_lab.expsums import (MonomialPhase, fourier_majorant, min_sum,
                               min_sum_bound, phi_hat, phi_kernel,
                               weyl_min_sum_bound, weyl_pair_bound, weyl_sum)
from sieve_lab.farey import count_near, enumerate_system

from helpers import valid_pairs


def test_weyl_sum_examples():
    assert weyl_sum(MonomialPhase(0, 2), 5) == pytest.approx(5 + 0j, abs=1e-12)
    assert weyl_sum(MonomialPhase(Fraction(1, 2), 2), 4) == pytest.approx(0j, abs=1e-12)
    assert weyl_sum(MonomialPhase(Fraction(1, 4), 2), 2) == pytest.approx(1 + 1j, abs=1e-12)


def test_weyl_sum_triangle_inequality():
    rng = np.random.default_rng(3)
    for _ in range(60):
        Q = int(rng.integers(1, 80))
        k = int(rng.integers(2, 5))
        if rng.uniform() < 0.5:
            alpha = Fraction(int(rng.integers(0, 100)), int(rng.integers(1, 100)))
        else:
            alpha = float(rng.uniform(0, 2))
        assert abs(weyl_sum(MonomialPhase(alpha, k), Q)) <= Q * (1 + 1e-12)


def test_weyl_sum_alpha_periodicity():
    # rational path: identical reduced numerator, so exactly equal
    a = weyl_sum(MonomialPhase(Fraction(3, 7), 2), 30)
    b = weyl_sum(MonomialPhase(Fraction(3, 7) + 1, 2), 30)
    assert a == b
    # float path: reduced mod 1 first
    x = weyl_sum(MonomialPhase(0.3183098861837907, 3), 20)
    y = weyl_sum(MonomialPhase(1.3183098861837907, 3), 20)
    assert x == pytest.approx(y, abs=1e-10)


def test_weyl_sum_rational_vs_float_path():
    for num, den, k, Q in [(1, 7, 2, 16), (5, 13, 3, 9), (2, 9, 4, 5)]:
        exact = weyl_sum(MonomialPhase(Fraction(num, den), k), Q)
        floated = weyl_sum(MonomialPhase(num / den, k), Q)
        assert exact == pytest.approx(floated, abs=1e-8)


def test_weyl_sum_capacity():
    with pytest.raises(CapacityError):
        weyl_sum(MonomialPhase(Fraction(1, (1 << 31) + 1), 2), 4)
    with pytest.raises(CapacityError):
        weyl_sum(MonomialPhase(0.123, 4), 5000)  # (2Q)^4 tops 2^53


def test_weyl_pair_bound_examples():
    assert weyl_pair_bound(ApproxPair(0, 1, 0.0), 1, 2, 0.1) == pytest.approx(
        3 ** 0.25, rel=1e-12)
    assert weyl_pair_bound(ApproxPair(0, 8, 0.0), 8, 2, 0.0) == pytest.approx(
        8 * 0.375 ** 0.25, rel=1e-12)
    want = 16 * (1 / 16 + 1 / 16 + 16 / 4096) ** (1 / 12)
    assert weyl_pair_bound(ApproxPair(0, 16, 0.0), 16, 3, 0.0) == pytest.approx(
        want, rel=1e-12)


def test_weyl_min_sum_bound_examples():
    assert weyl_min_sum_bound(MonomialPhase(0, 2), 2, 0.0) == pytest.approx(
        2 * 2 ** 0.25, rel=1e-12)
    assert weyl_min_sum_bound(MonomialPhase(Fraction(1, 2), 2), 1, 0.0) == pytest.approx(
        2 ** 0.25, rel=1e-12)
    rng = np.random.default_rng(5)
    for _ in range(20):
        alpha = float(rng.uniform(0, 1))
        k = int(rng.integers(2, 5))
        assert weyl_min_sum_bound(MonomialPhase(alpha, k), 1, 0.0) >= 1.0 - 1e-12


def test_min_sum_examples():
    assert min_sum(0, 2, 3) == pytest.approx(9.0, rel=1e-15)
    assert min_sum(Fraction(1, 2), 2, 2) == pytest.approx(4.0, rel=1e-15)
    assert min_sum(Fraction(1, 3), 3, 1) == pytest.approx(5.5, rel=1e-15)
    with pytest.raises(ValueError):
        min_sum(0.5, 0.5, 2)


def test_min_sum_bound_examples():
    assert min_sum_bound(1, 1, ApproxPair(0, 1, 0.0)) == pytest.approx(
        3 * math.log(2), rel=1e-12)
    want = 100 * (1 / 3 + 1 / 10 + 3 / 100) * math.log(60)
    assert min_sum_bound(10, 10, ApproxPair(0, 3, 0.0)) == pytest.approx(want, rel=1e-12)
    want = 100 * (1 + 1 + 1 / 100) * math.log(200)
    assert min_sum_bound(100, 1, ApproxPair(0, 1, 0.0)) == pytest.approx(want, rel=1e-12)


def test_phi_kernel():
    assert phi_kernel(0.0) == pytest.approx(math.pi ** 2 / 4, rel=1e-15)
    assert phi_kernel(0.5) == pytest.approx(1.0, rel=1e-12)
    assert phi_kernel(1.0) == pytest.approx(0.0, abs=1e-12)
    # continuity at 0 by approach
    for x in (1e-3, 1e-6, 1e-9):
        assert phi_kernel(x) == pytest.approx(math.pi ** 2 / 4, rel=1e-5)
    # the majorant property on [-1/2, 1/2], sampled on a 10^4 grid
    xs = np.linspace(-0.5, 0.5, 10 ** 4)
    assert all(phi_kernel(float(x)) >= 1.0 - 1e-12 for x in xs)


def test_phi_hat():
    assert phi_hat(0.0) == pytest.approx(math.pi ** 2 / 4, rel=1e-15)
    assert phi_hat(1.5) == 0.0
    assert phi_hat(-0.5) == pytest.approx(math.pi ** 2 / 8, rel=1e-15)


def test_fourier_majorant_worked_example():
    s = enumerate_system(1, 2, "dyadic")  # the points 1/4 and 3/4
    res = fourier_majorant(s, (1, 2), 1 / 16)
    assert res.exact_count == 1
    assert res.B == pytest.approx(2.0, rel=1e-12)
    # all five transform terms have unit phase here, so the value collapses to
    # phi_hat(0)/2 + phi_hat(1/2) = pi^2/4
    assert res.majorant_value == pytest.approx(math.pi ** 2 / 4, rel=1e-12)
    assert res.majorant_value >= res.exact_count
    assert res.tail == pytest.approx(res.majorant_value - res.main_term, rel=1e-12)


def test_fourier_majorant_trivial_fallback():
    s = enumerate_system(2, 2, "dyadic")
    res = fourier_majorant(s, (1, 3), 0.9)  # truncation below 1
    assert res.B < 1.0
    assert res.majorant_value == s.size
    assert res.exact_count <= s.size


def test_fourier_majorant_validation():
    s = enumerate_system(2, 2, "dyadic")
    with pytest.raises(ValueError):
        fourier_majorant(s, (2, 4), 0.01)  # gcd(2,4) > 1: not a member
    with pytest.raises(ValueError):
        fourier_majorant(s, (1, 3), 0.0)


def test_fourier_majorant_dominates_and_matches_count_near():
    rng = np.random.default_rng(71)
    done = 0
    while done < 100:
        Q = int(rng.integers(1, 5))
        k = int(rng.integers(2, 4))
        mode = ["full", "dyadic"][int(rng.integers(0, 2))]
        s = enumerate_system(Q, k, mode)
        if s.size == 0:
            continue
        idx = int(rng.integers(0, s.size))
        b, r = int(s.numerators[idx]), int(s.bases[idx])
        top = int(s.moduli.max())
        x = float(10.0 ** rng.uniform(-3, -0.01) / (2.0 * top))
        res = fourier_majorant(s, (b, r), x)
        assert res.exact_count == count_near(s, Fraction(b, r ** k), x)
        assert res.majorant_value >= res.exact_count - 1e-9 * abs(res.majorant_value)
        done += 1


def test_pair_bounds_hold_for_any_valid_pair():
    rng = np.random.default_rng(73)
    for _ in range(40):
        alpha = float(rng.uniform(0, 1))
        Q = int(rng.integers(2, 40))
        k = int(rng.integers(2, 4))
        pairs = valid_pairs(alpha, Q)
        assert pairs, "round-based pairs always include v = 1"
        for u, v, res in pairs:
            pb = weyl_pair_bound(ApproxPair(u, v, res), Q, k, 0.05)
            mb = min_sum_bound(Q, Q, ApproxPair(u, v, res))
            assert math.isfinite(pb) and pb > 0
            assert math.isfinite(mb) and mb > 0
