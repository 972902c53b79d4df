"""Correlation statistics against peer ratings, and author-overlap fractions."""

from __future__ import annotations

import math
import warnings
from collections.abc import Iterable, Sequence, Set
from dataclasses import dataclass

from scipy.special import betainc
from scipy.stats import rankdata

from .errors import ConstantVector, DegenerateR, EmptyTarget, LengthMismatch, TooFewPoints
from .model import CorrelationResult, IndicatorResult, RatingVector

ALTERNATIVES = ("auto", "less", "greater")


def _check_pair(x: Sequence[float], y: Sequence[float]) -> tuple[list[float], list[float]]:
    x = [float(v) for v in x]
    y = [float(v) for v in y]
    if len(x) != len(y):
        raise LengthMismatch(f"vectors differ in length ({len(x)} vs {len(y)})")
    if len(x) < 3:
        raise TooFewPoints(f"need at least 3 points, got {len(x)}")
    for name, v in (("x", x), ("y", y)):
        if not all(math.isfinite(a) for a in v):
            raise ValueError(f"{name} contains non-finite values")
        if min(v) == max(v):
            raise ConstantVector(f"{name} is constant")
    return x, y


def _product_moment(x: list[float], y: list[float]) -> float:
    n = len(x)
    mx = math.fsum(x) / n
    my = math.fsum(y) / n
    dx = [a - mx for a in x]
    dy = [b - my for b in y]
    sxy = math.fsum(a * b for a, b in zip(dx, dy))
    sxx = math.fsum(a * a for a in dx)
    syy = math.fsum(b * b for b in dy)
    r = sxy / math.sqrt(sxx * syy)
    return max(-1.0, min(1.0, r))


def student_t_cdf(t: float, df: float) -> float:
    """P(T <= t) for Student's t with ``df`` degrees of freedom."""
    if df <= 0:
        raise ValueError("degrees of freedom must be positive")
    if math.isinf(t):
        return 1.0 if t > 0 else 0.0
    tail = 0.5 * float(betainc(df / 2.0, 0.5, df / (df + t * t)))
    return tail if t < 0 else 1.0 - tail


def one_tailed_p(r: float, n: int, alternative: str = "auto") -> float:
    """One-tailed p-value of a correlation coefficient.

    Uses t = r * sqrt((n - 2) / (1 - r**2)) with n - 2 degrees of freedom.
    ``alternative="auto"`` tests in the direction of the observed sign
    (lower tail for r < 0, upper tail for r > 0, 0.5 at r = 0); "less" and
    "greater" fix the tail.
    """
    if alternative not in ALTERNATIVES:
        raise ValueError(f"alternative must be one of {ALTERNATIVES}")
    if n < 3:
        raise TooFewPoints(f"need n >= 3, got {n}")
    if not -1.0 <= r <= 1.0 or math.isnan(r):
        raise ValueError(f"correlation out of range: {r!r}")
    if alternative == "auto":
        if r == 0:
            return 0.5
        alternative = "less" if r < 0 else "greater"

    if abs(r) == 1.0:
        warnings.warn(f"|r| = 1 with n = {n}; p-value reported as 0/1 by convention", DegenerateR, stacklevel=2)
        t = math.copysign(math.inf, r)
    else:
        t = r * math.sqrt((n - 2) / (1.0 - r * r))
    lower = student_t_cdf(t, n - 2)
    return lower if alternative == "less" else 1.0 - lower


def pearson(x: Sequence[float], y: Sequence[float], alternative: str = "auto") -> CorrelationResult:
    x, y = _check_pair(x, y)
    r = _product_moment(x, y)
    return CorrelationResult("pearson", r, one_tailed_p(r, len(x), alternative), len(x))


def average_ranks(values: Sequence[float]) -> list[float]:
    """1-based ranks with ties sharing the mean of their positions."""
    return [float(v) for v in rankdata(values, method="average")]


def spearman(x: Sequence[float], y: Sequence[float], alternative: str = "auto") -> CorrelationResult:
    x, y = _check_pair(x, y)
    r = _product_moment(average_ranks(x), average_ranks(y))
    return CorrelationResult("spearman", r, one_tailed_p(r, len(x), alternative), len(x))


CORRELATIONS = {"pearson": pearson, "spearman": spearman}


@dataclass(frozen=True)
class CorrelationCell:
    variant: str
    aspect: str
    result: CorrelationResult


def correlate_scores(
    scores: Iterable[IndicatorResult],
    ratings: Iterable[RatingVector],
    methods: Sequence[str] = ("pearson", "spearman"),
) -> list[CorrelationCell]:
    """Correlate every variant's scores with every rating aspect.

    Records are paired by id in score order; every scored record must carry
    a rating for each aspect.
    """
    by_variant: dict[str, dict[str, float]] = {}
    for s in scores:
        by_variant.setdefault(s.variant, {})[s.record_id] = s.value
    ratings = list(ratings)
    cells = []
    for method in methods:
        fn = CORRELATIONS[method]
        for rv in ratings:
            for variant, values in by_variant.items():
                missing = [rid for rid in values if rid not in rv.values]
                if missing:
                    raise LengthMismatch(f"no {rv.aspect!r} rating for {', '.join(missing)}")
                ids = list(values)
                res = fn([values[i] for i in ids], [rv.values[i] for i in ids])
                cells.append(CorrelationCell(variant, rv.aspect, res))
    return cells


@dataclass(frozen=True)
class OverlapBreakdown:
    only_first: float
    only_second: float
    both: float
    neither: float

    def __post_init__(self):
        parts = self.as_tuple()
        if any(not 0.0 <= p <= 1.0 for p in parts):
            raise ValueError(f"fractions must lie in [0, 1]: {parts}")
        if abs(math.fsum(parts) - 1.0) > 1e-12:
            raise ValueError(f"fractions must sum to 1: {parts}")

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.only_first, self.only_second, self.both, self.neither)


def overlap_breakdown(target: Set, first: Set, second: Set) -> OverlapBreakdown:
    """Share of ``target`` authors also found in ``first`` only, ``second``
    only, both, or neither."""
    target = set(target)
    if not target:
        raise EmptyTarget("target author set is empty")
    in_first = target & set(first)
    in_second = target & set(second)
    both = in_first & in_second
    n = len(target)
    only_first = len(in_first) - len(both)
    only_second = len(in_second) - len(both)
    neither = n - only_first - only_second - len(both)
    return OverlapBreakdown(only_first / n, only_second / n, len(both) / n, neither / n)
