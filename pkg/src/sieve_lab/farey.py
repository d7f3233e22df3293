"""The finite system of reduced fractions a/q^k with power moduli, and exact counting.

Numerators and moduli live in int64 arrays for the hot kernels; every counting
comparison (count_near, the closed-form counting integral) is done with exact
integer cross-multiplication, so counts and the integral are exact up to one
final float division per point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Literal

import numpy as np

from . import kernels
from .errors import CapacityError

Mode = Literal["full", "dyadic"]

# Keeps every int64 kernel product a*b with a, b < modulus below 2**62.
MODULUS_CAP = 1 << 31


@dataclass(frozen=True)
class PowerFareySystem:
    """All reduced fractions a/q^k with 0 < a < q^k, gcd(a, q) = 1 over a base range.

    mode "full" takes 1 <= q <= Q (q = 1 contributes nothing), mode "dyadic"
    takes Q < q <= 2Q.  Points are sorted by (q, a) and stored with
    multiplicity one per (a, q) pair.
    """

    Q: int
    k: int
    mode: str
    numerators: np.ndarray = field(repr=False)  # int64, the a of each point
    bases: np.ndarray = field(repr=False)       # int64, the q of each point
    moduli: np.ndarray = field(repr=False)      # int64, q**k of each point

    @property
    def size(self) -> int:
        return int(self.numerators.shape[0])

    @property
    def base_range(self) -> range:
        if self.mode == "full":
            return range(1, self.Q + 1)
        return range(self.Q + 1, 2 * self.Q + 1)

    def distinct_bases(self) -> list[int]:
        """Bases that contribute at least one point, ascending."""
        return np.unique(self.bases).tolist()

    def values(self) -> np.ndarray:
        """Point values a/q^k as float64 (for plots and rough work only)."""
        return self.numerators / self.moduli

    def iter_int_points(self) -> Iterator[tuple[int, int]]:
        """(a, q^k) pairs as exact Python ints."""
        return zip(self.numerators.tolist(), self.moduli.tolist())

    def is_member(self, b: int, r: int) -> bool:
        """Whether the pair (numerator b, base r) is a point of the system."""
        lo = np.searchsorted(self.bases, r, side="left")
        hi = np.searchsorted(self.bases, r, side="right")
        if lo == hi:
            return False
        sub = self.numerators[lo:hi]
        pos = np.searchsorted(sub, b)
        return bool(pos < sub.shape[0] and sub[pos] == b)


def enumerate_system(Q: int, k: int, mode: Mode) -> PowerFareySystem:
    """Enumerate the system for (Q, k, mode), sorted by (q, a).

    Rejects any modulus q**k >= 2**31 with CapacityError: beyond that the exact
    int64 phase arithmetic in the kernels would overflow.
    """
    if Q < 1:
        raise ValueError(f"Q must be >= 1, got {Q}")
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if mode not in ("full", "dyadic"):
        raise ValueError(f"mode must be 'full' or 'dyadic', got {mode!r}")

    q_values = range(1, Q + 1) if mode == "full" else range(Q + 1, 2 * Q + 1)
    top = max(q_values)
    if top ** k >= MODULUS_CAP:
        raise CapacityError(
            f"modulus {top}^{k} = {top ** k} exceeds the supported width (< 2^31)")

    num_parts: list[np.ndarray] = []
    base_parts: list[np.ndarray] = []
    mod_parts: list[np.ndarray] = []
    for q in q_values:
        if q == 1:
            continue  # no a with 0 < a < 1
        qk = q ** k
        residues = np.array([r for r in range(1, q) if math.gcd(r, q) == 1],
                            dtype=np.int64)
        offsets = np.arange(0, qk, q, dtype=np.int64)
        a = (offsets[:, None] + residues[None, :]).ravel()
        num_parts.append(a)
        base_parts.append(np.full(a.shape[0], q, dtype=np.int64))
        mod_parts.append(np.full(a.shape[0], qk, dtype=np.int64))

    if num_parts:
        nums = np.concatenate(num_parts)
        bases = np.concatenate(base_parts)
        mods = np.concatenate(mod_parts)
    else:
        nums = np.empty(0, dtype=np.int64)
        bases = np.empty(0, dtype=np.int64)
        mods = np.empty(0, dtype=np.int64)
    return PowerFareySystem(Q=Q, k=k, mode=mode, numerators=nums, bases=bases,
                            moduli=mods)


def _radius_as_fraction(x) -> Fraction:
    """Exact rational radius; floats are rounded up onto the 2**-53 grid so the
    count stays conservative and monotone."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if not math.isfinite(x):
        raise ValueError(f"radius must be finite, got {x}")
    if x >= float(1 << 60):  # scaling by 2**53 would overflow; integer ceil is exact enough
        return Fraction(math.ceil(x))
    return Fraction(math.ceil(x * (1 << 53)), 1 << 53)


def count_near(system: PowerFareySystem, center: Fraction, x) -> int:
    """Exact number of points with |a/q^k - center| <= x.

    The comparison is |a*cd - cn*q^k| * xd <= xn * q^k * cd in arbitrary
    precision integers, where center = cn/cd and x = xn/xd.
    """
    if x < 0:
        raise ValueError("radius x must be >= 0")
    xr = _radius_as_fraction(x)
    xn, xd = xr.numerator, xr.denominator
    cn, cd = center.numerator, center.denominator
    count = 0
    for a, qk in system.iter_int_points():
        if abs(a * cd - cn * qk) * xd <= xn * qk * cd:
            count += 1
    return count


def stieltjes_integral(system: PowerFareySystem, center: Fraction, N: int) -> float:
    """The counting integral of count_near(x)/x^2 over [1/N, 1/2], in closed form.

    Equals sum over points with d <= 1/2 of (1/max(d, 1/N) - 2) where
    d = |a/q^k - center|; the branch tests are exact integer comparisons and
    only the final reciprocal is a float division.
    """
    if N < 2:
        raise ValueError(f"N must be >= 2, got {N}")
    cn, cd = center.numerator, center.denominator
    total = 0.0
    for a, qk in system.iter_int_points():
        big = abs(a * cd - cn * qk)
        vol = qk * cd
        if 2 * big <= vol:
            if big * N <= vol:
                total += N - 2.0
            else:
                total += vol / big - 2.0
    return total


def counting_rhs(system: PowerFareySystem, N: int, coeff_norm_sq: float) -> float:
    """Right side of the well-spaced counting inequality:
    coeff_norm_sq * (4 * sum of moduli + max over centers of the counting integral).

    The modulus sum runs over the distinct q**k of the system (one per base).
    An empty system gives 0.0: both terms vanish and the inequality is 0 <= 0.
    """
    if N < 2:
        raise ValueError(f"N must be >= 2, got {N}")
    if system.size == 0:
        return 0.0
    modulus_sum = 4.0 * float(sum(q ** system.k for q in system.distinct_bases()))
    integral_max = kernels.pairwise_integral_max(system.numerators, system.moduli, N)
    return coeff_norm_sq * (modulus_sum + integral_max)
