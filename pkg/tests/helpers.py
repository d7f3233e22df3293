"""Independent oracles shared by the test modules.

Everything here recomputes results by the most direct route available (double
loops, round-based scans, Fraction arithmetic) so the package's optimized
paths are checked against genuinely separate code.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction

import numpy as np


def brute_dirichlet(alpha: float, bound: int) -> tuple[int, int, float]:
    """Scan all 1 <= v <= bound with u = round(v*alpha); minimal residual wins,
    ties toward smaller v."""
    best = None
    for v in range(1, bound + 1):
        u = round(v * alpha)
        res = abs(v * alpha - u)
        if best is None or res < best[2]:
            g = math.gcd(u, v)
            best = (u // g, v // g, res)
    return best


def valid_pairs(alpha: float, bound: int) -> list[tuple[int, int, float]]:
    """All coprime pairs (u, v), v <= bound, with |v*alpha - u| <= 1/v."""
    out = []
    for v in range(1, bound + 1):
        u = round(v * alpha)
        res = abs(v * alpha - u)
        if res <= 1.0 / v and math.gcd(u, v) == 1:
            out.append((u, v, res))
    return out


def brute_enumerate(Q: int, k: int, mode: str) -> list[tuple[int, int]]:
    """Double loop with a gcd filter; returns (a, q) pairs sorted by (q, a)."""
    qs = range(1, Q + 1) if mode == "full" else range(Q + 1, 2 * Q + 1)
    pts = []
    for q in qs:
        qk = q ** k
        for a in range(1, qk):
            if math.gcd(a, q) == 1:
                pts.append((a, q))
    return pts


def brute_count_near(points: list[tuple[int, int]], center: Fraction,
                     x: Fraction) -> int:
    """Count via Fraction distance comparisons."""
    return sum(1 for a, qk in points if abs(Fraction(a, qk) - center) <= x)


def brute_sigma(points: list[tuple[int, int]], m_off: int,
                values: np.ndarray) -> float:
    """Direct double loop over points and indices with cmath exponentials."""
    total = 0.0
    n = len(values)
    for a, qk in points:
        s = 0.0 + 0.0j
        for j in range(n):
            s += values[j] * cmath.exp(2j * cmath.pi * a * (m_off + 1 + j) / qk)
        total += abs(s) ** 2
    return total


def int_points(system) -> list[tuple[int, int]]:
    """(a, q^k) pairs of a PowerFareySystem as Python ints."""
    return list(system.iter_int_points())


def totient(n: int) -> int:
    """Euler totient by trial-division factorization (independent of the package)."""
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result
