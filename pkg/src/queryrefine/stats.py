"""Paired t-test over baseline/refined score pairs.

The two-tailed p-value comes from the Student-t CDF, evaluated through the
regularized incomplete beta function (modified Lentz continued fraction),
so there is no runtime dependency on a stats toolkit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

_CF_MAX_ITER = 200
_CF_EPS = 1e-14
_TINY = 1e-300


def _beta_cf(a: float, b: float, x: float) -> float:
    """Continued fraction for the incomplete beta, modified Lentz method."""
    qab = a + b
    qap = a + 1.0
    qam = a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < _TINY:
        d = _TINY
    d = 1.0 / d
    h = d
    for m in range(1, _CF_MAX_ITER + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < _TINY:
            d = _TINY
        c = 1.0 + aa / c
        if abs(c) < _TINY:
            c = _TINY
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < _TINY:
            d = _TINY
        c = 1.0 + aa / c
        if abs(c) < _TINY:
            c = _TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _CF_EPS:
            return h
    raise ArithmeticError("incomplete beta continued fraction did not converge")


def reg_inc_beta(a: float, b: float, x: float) -> float:
    """Regularized incomplete beta I_x(a, b)."""
    if a <= 0 or b <= 0:
        raise ValueError("a and b must be positive")
    if not 0.0 <= x <= 1.0:
        raise ValueError("x must lie in [0, 1]")
    if x == 0.0:
        return 0.0
    if x == 1.0:
        return 1.0
    ln_front = (
        math.lgamma(a + b)
        - math.lgamma(a)
        - math.lgamma(b)
        + a * math.log(x)
        + b * math.log1p(-x)
    )
    front = math.exp(ln_front)
    # Symmetry switch keeps the continued fraction in its fast-converging region.
    if x < (a + 1.0) / (a + b + 2.0):
        return front * _beta_cf(a, b, x) / a
    return 1.0 - front * _beta_cf(b, a, 1.0 - x) / b


def t_cdf(t: float, df: int) -> float:
    """Student-t cumulative distribution function."""
    if df < 1:
        raise ValueError("df must be >= 1")
    if t == 0.0:
        return 0.5
    x = df / (df + t * t)
    tail = 0.5 * reg_inc_beta(df / 2.0, 0.5, x)
    return 1.0 - tail if t > 0 else tail


@dataclass
class TTestResult:
    mean_diff: float  # baseline minus refined
    sd_diff: float  # sample SD, n-1 denominator
    t_stat: float
    df: int
    p_two_tailed: float


def paired_t_test(baseline: Sequence[float], refined: Sequence[float]) -> TTestResult:
    """Paired t-test on per-item differences baseline_i - refined_i.

    The sign convention makes improvements (refined > baseline) yield a
    negative t statistic.
    """
    if len(baseline) != len(refined):
        raise ValueError("baseline and refined must have equal lengths")
    n = len(baseline)
    if n < 2:
        raise ValueError("need at least 2 pairs")
    diffs = [b - r for b, r in zip(baseline, refined)]
    mean_diff = sum(diffs) / n
    ss = sum((d - mean_diff) ** 2 for d in diffs)
    sd_diff = math.sqrt(ss / (n - 1))
    if sd_diff == 0.0:
        raise ValueError("degenerate: zero variance of differences")
    t_stat = mean_diff / (sd_diff / math.sqrt(n))
    df = n - 1
    p = 2.0 * (1.0 - t_cdf(abs(t_stat), df))
    return TTestResult(mean_diff=mean_diff, sd_diff=sd_diff, t_stat=t_stat, df=df, p_two_tailed=p)


@dataclass
class ScoreSummary:
    mean: float
    sd: Optional[float]  # None when n < 2
    min: float
    max: float


def summarize(scores: Sequence[float]) -> ScoreSummary:
    """Mean, sample SD, min and max of a score list."""
    if not scores:
        raise ValueError("empty score list")
    n = len(scores)
    mean = sum(scores) / n
    sd = None
    if n >= 2:
        sd = math.sqrt(sum((s - mean) ** 2 for s in scores) / (n - 1))
    return ScoreSummary(mean=mean, sd=sd, min=min(scores), max=max(scores))
