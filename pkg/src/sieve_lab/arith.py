"""Exact integer/rational arithmetic, circle-group primitives, and Dirichlet approximation.

Rationals are plain fractions.Fraction values (always stored reduced, positive
denominator), so every counting comparison downstream can be done in exact
integer arithmetic.  Reals are double precision throughout.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from typing import NamedTuple, Union

Rational = Fraction
Real = Union[int, float, Fraction]

TWO_PI = 2.0 * math.pi


class ApproxPair(NamedTuple):
    """Coprime pair (u, v) with small |v*alpha - u|, plus that residual."""

    u: int
    v: int
    residual: float


def reduce(num: int, den: int) -> Fraction:
    """Reduced fraction num/den; rejects den <= 0."""
    if den <= 0:
        raise ValueError(f"denominator must be a positive integer, got {den}")
    return Fraction(num, den)


def e_of(alpha: Real) -> complex:
    """exp(2*pi*i*alpha), with the argument reduced mod 1 first."""
    frac = alpha % 1
    return cmath.exp(complex(0.0, TWO_PI * float(frac)))


def nearest_int_distance(alpha: Real) -> float:
    """Distance from alpha to the nearest integer, in [0, 1/2]."""
    frac = alpha % 1
    return float(min(frac, 1 - frac))


def _continued_fraction_convergents(alpha: Fraction):
    """Yield the convergents u/v of alpha as (u, v) pairs, v increasing."""
    num, den = alpha.numerator, alpha.denominator
    u_prev, v_prev = 1, 0
    u_prev2, v_prev2 = 0, 1
    while den:
        step, rem = divmod(num, den)
        u = step * u_prev + u_prev2
        v = step * v_prev + v_prev2
        yield u, v
        u_prev2, v_prev2 = u_prev, v_prev
        u_prev, v_prev = u, v
        num, den = den, rem


def dirichlet_approx(alpha: Real, bound: int) -> ApproxPair:
    """Best coprime pair (u, v) with 1 <= v <= bound and |v*alpha - u| <= 1/bound.

    Computed from the continued-fraction convergents of alpha (exact integer
    arithmetic on the binary value when alpha is a float), so the cost is
    O(log bound).  Among valid pairs the residual is minimal, ties broken
    toward smaller v; such a pair always exists.
    """
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound}")
    exact = alpha if isinstance(alpha, Fraction) else Fraction(alpha)
    best: tuple[int, int] | None = None
    best_res: Fraction | None = None
    for u, v in _continued_fraction_convergents(exact):
        if v > bound:
            break
        res = abs(v * exact - u)
        if best_res is None or res < best_res:
            best, best_res = (u, v), res
        if res == 0:
            break
    if best is None:  # alpha integral and the loop yielded nothing: cannot happen, but be safe
        best = (round(float(exact)), 1)
    u, v = best
    return ApproxPair(u=u, v=v, residual=float(abs(alpha * v - u)))
