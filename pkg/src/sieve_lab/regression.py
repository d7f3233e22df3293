"""Fixed-seed measured-ratio protocols and the regeneration of frozen guards.

The measured ratios (Weyl sum / bound, min-sum / bound, constant / bound) carry
the shapes' implicit constants, so no test asserts them <= 1.  Instead the
grid maxima are computed once on the fixed seed, frozen into frozen.py, and
guarded against regression ever after.  Regenerate with:

    python -m sieve_lab.regression
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Sequence, Union

import numpy as np

from .arith import dirichlet_approx
from .bounds import BoundParams, evaluate_bounds
from .expsums import MonomialPhase, min_sum, min_sum_bound, weyl_min_sum_bound, weyl_sum
from .sieve import measure_constant

FROZEN_SEED = 0xC0FFEE

WEYL_Q_VALUES = (4, 16, 64, 256)
WEYL_K_VALUES = (2, 3, 4)
WEYL_EPS = 0.05
MIN_SUM_LIMIT = 512.0
MIN_SUM_SAMPLES = 200

GRID_Q = (1, 2, 3, 4)
GRID_K = (2, 3)
GRID_N = (4, 16, 64, 256)
GRID_MODES = ("full", "dyadic")
GRID_EPS = 0.05
GRID_REL_TOL = 1e-8
DELTA_SHAPES = ("kappa", "loglog", "delta")

Alpha = Union[Fraction, float]

_NONSQUARES = tuple(d for d in range(2, 60) if math.isqrt(d) ** 2 != d)


def sample_alphas(seed: int = FROZEN_SEED, n_rational: int = 100,
                  n_quadratic: int = 100) -> list[tuple[str, Alpha]]:
    """Labelled phase coefficients: random reduced rationals (kept exact) and
    quadratic irrationals (p + s*sqrt(d))/r evaluated as floats."""
    rng = np.random.default_rng(seed)
    out: list[tuple[str, Alpha]] = []
    for _ in range(n_rational):
        den = int(rng.integers(2, 513))
        num = int(rng.integers(1, den))
        fr = Fraction(num, den)
        out.append((f"{fr.numerator}/{fr.denominator}", fr))
    for _ in range(n_quadratic):
        d = int(rng.choice(_NONSQUARES))
        p = int(rng.integers(0, 10))
        s = int(rng.integers(1, 6))
        r = int(rng.integers(2, 30))
        out.append((f"({p}+{s}*sqrt({d}))/{r}", (p + s * math.sqrt(d)) / r))
    return out


@dataclass(frozen=True)
class WeylRow:
    alpha_label: str
    Q: int
    k: int
    sq_re: float
    sq_im: float
    abs_sum: float
    bound: float
    ratio: float


def weyl_ratio_rows(alphas: Sequence[tuple[str, Alpha]],
                    q_values: Sequence[int] = WEYL_Q_VALUES,
                    k_values: Sequence[int] = WEYL_K_VALUES,
                    eps: float = WEYL_EPS) -> list[WeylRow]:
    rows = []
    for label, alpha in alphas:
        for k in k_values:
            phase = MonomialPhase(alpha, k)
            for Q in q_values:
                s = weyl_sum(phase, Q)
                bound = weyl_min_sum_bound(phase, Q, eps)
                rows.append(WeylRow(label, Q, k, s.real, s.imag, abs(s),
                                    bound, abs(s) / bound))
    return rows


@dataclass(frozen=True)
class MinSumRow:
    alpha_label: str
    X: float
    Y: float
    u: int
    v: int
    residual: float
    value: float
    bound: float
    ratio: float


def min_sum_ratio_rows(alphas: Sequence[tuple[str, Alpha]],
                       seed: int = FROZEN_SEED,
                       limit: float = MIN_SUM_LIMIT,
                       n_samples: int = MIN_SUM_SAMPLES) -> list[MinSumRow]:
    rng = np.random.default_rng([seed, 1])
    rows = []
    for i in range(n_samples):
        label, alpha = alphas[i % len(alphas)]
        X = float(rng.uniform(1.0, limit))
        Y = float(rng.uniform(1.0, limit))
        approx = dirichlet_approx(alpha, math.floor(X))
        value = min_sum(alpha, X, Y)
        bound = min_sum_bound(X, Y, approx)
        rows.append(MinSumRow(label, X, Y, approx.u, approx.v, approx.residual,
                              value, bound, value / bound))
    return rows


def delta_ratio_maxima(q_values: Sequence[int] = GRID_Q,
                       k_values: Sequence[int] = GRID_K,
                       n_values: Sequence[int] = GRID_N,
                       modes: Sequence[str] = GRID_MODES,
                       eps: float = GRID_EPS,
                       rel_tol: float = GRID_REL_TOL) -> dict[str, dict[str, float]]:
    """Per-k maxima of measured/bound over the standard grid, for the three
    nontrivial shapes."""
    maxima: dict[str, dict[str, float]] = {
        str(k): {name: 0.0 for name in DELTA_SHAPES} for k in k_values}
    for k in k_values:
        for mode in modes:
            for Q in q_values:
                for N in n_values:
                    measured = measure_constant(Q, N, k, mode, rel_tol).value
                    values = evaluate_bounds(BoundParams(Q, N, k, eps))
                    for name in DELTA_SHAPES:
                        ratio = measured / values[name]
                        if ratio > maxima[str(k)][name]:
                            maxima[str(k)][name] = ratio
    return maxima


def compute_frozen(seed: int = FROZEN_SEED) -> dict:
    alphas = sample_alphas(seed)
    weyl_rows = weyl_ratio_rows(alphas)
    ms_rows = min_sum_ratio_rows(alphas, seed)
    return {
        "seed": seed,
        "weyl_bound_max": max(r.ratio for r in weyl_rows),
        "min_sum_bound_max": max(r.ratio for r in ms_rows),
        "delta_ratio_max": delta_ratio_maxima(),
    }


def write_frozen(path: Path | None = None) -> dict:
    data = compute_frozen()
    if path is None:
        path = Path(__file__).with_name("frozen.py")
    lines = [
        '"""Frozen regression maxima; regenerate with `python -m sieve_lab.regression`."""',
        "",
        "FROZEN_RATIOS = {",
        f"    \"seed\": {data['seed']},",
        f"    \"weyl_bound_max\": {data['weyl_bound_max']!r},",
        f"    \"min_sum_bound_max\": {data['min_sum_bound_max']!r},",
        "    \"delta_ratio_max\": {",
    ]
    for k, shapes in data["delta_ratio_max"].items():
        inner = ", ".join(f"\"{name}\": {value!r}" for name, value in shapes.items())
        lines.append(f"        \"{k}\": {{{inner}}},")
    lines += ["    },", "}", ""]
    path.write_text("\n".join(lines), encoding="utf-8")
    return data


if __name__ == "__main__":
    frozen = write_frozen()
    print(f"weyl_bound_max     = {frozen['weyl_bound_max']!r}")
    print(f"min_sum_bound_max  = {frozen['min_sum_bound_max']!r}")
    for k, shapes in frozen["delta_ratio_max"].items():
        for name, value in shapes.items():
            print(f"delta_ratio_max[{k}][{name}] = {value!r}")
