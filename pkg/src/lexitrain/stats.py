"""Survey analytics: Likert banding and one-way ANOVA.

The Likert side maps five-point ratings to a descriptive label through
fixed numeric bands. The printed band edges leave gaps on the real line
(4.59 to 4.60, and so on), so banding uses a greatest-lower-bound rule:
a mean belongs to the band with the largest lower edge not exceeding it.

The ANOVA side decomposes total variation into between-group and
within-group sums of squares, either from raw scores or from published
(n, mean, sd) group summaries, and converts the F ratio to a p-value
through a hand-rolled regularized incomplete beta function (continued
fraction form, per Numerical Recipes). Sums of squares accumulate with
exact summation (math.fsum) so the raw-versus-summary identity holds
tightly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import (
    DegenerateInputError,
    EmptyInputError,
    NonConvergenceError,
    OutOfRangeError,
    OutOfRangeRatingError,
    ZeroWithinVarianceError,
)


# --- Likert ------------------------------------------------------------------

# (lower, upper, label) in descending order, as printed on the survey scale.
LIKERT_BANDS: tuple[tuple[float, float, str], ...] = (
    (4.60, 5.00, "Excellent"),
    (3.60, 4.59, "Very Good"),
    (2.60, 3.59, "Good"),
    (1.60, 2.59, "Fair"),
    (1.00, 1.59, "Poor"),
)


def weighted_mean(responses: Sequence[int]) -> float:
    """Mean of a list of 1..5 ratings."""
    if not responses:
        raise EmptyInputError("no responses")
    for rating in responses:
        if rating not in (1, 2, 3, 4, 5):
            raise OutOfRangeRatingError(f"rating {rating!r} outside 1..5")
    return math.fsum(responses) / len(responses)


def likert_band(mean: float) -> str:
    """Descriptive label for a mean rating in [1.0, 5.0].

    Gaps between printed band edges are closed downward: the label is
    the one whose lower edge is the greatest lower edge at or below the
    mean, so 4.595 is Very Good and 4.60 is Excellent.
    """
    if not 1.0 <= mean <= 5.0:
        raise OutOfRangeError(f"mean {mean} outside [1.0, 5.0]")
    for lower, _, label in LIKERT_BANDS:
        if mean >= lower:
            return label
    return LIKERT_BANDS[-1][2]


# --- ANOVA -------------------------------------------------------------------

@dataclass(frozen=True)
class GroupSummary:
    """Published description of one group: size, mean, sample SD (n-1)."""

    n: int
    mean: float
    sd: float

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        if self.sd < 0:
            raise ValueError("sd must be non-negative")


@dataclass(frozen=True)
class AnovaResult:
    f_statistic: float
    df_between: int
    df_within: int
    p_value: float
    ss_between: float
    ss_within: float
    # Set when every group is constant; F is then infinite and p is the
    # limiting 0 rather than a computed tail probability.
    zero_within_variance: bool = False

    def to_dict(self) -> dict:
        return {
            "F": self.f_statistic,
            "dfBetween": self.df_between,
            "dfWithin": self.df_within,
            "p": self.p_value,
            "ssBetween": self.ss_between,
            "ssWithin": self.ss_within,
            "zeroWithinVariance": self.zero_within_variance,
        }


def summarize(scores: Sequence[float]) -> GroupSummary:
    """Compute the (n, mean, sample sd) summary of one group's raw scores."""
    n = len(scores)
    if n < 2:
        raise DegenerateInputError("group needs at least 2 observations")
    mean = math.fsum(scores) / n
    ss = math.fsum((x - mean) ** 2 for x in scores)
    return GroupSummary(n=n, mean=mean, sd=math.sqrt(ss / (n - 1)))


def _finish_anova(
    ss_between: float, ss_within: float, k: int, n_total: int
) -> AnovaResult:
    df_between = k - 1
    df_within = n_total - k
    if ss_within == 0.0:
        if ss_between == 0.0:
            raise ZeroWithinVarianceError(
                "all groups constant with equal means; F is undefined"
            )
        return AnovaResult(
            f_statistic=math.inf,
            df_between=df_between,
            df_within=df_within,
            p_value=0.0,
            ss_between=ss_between,
            ss_within=ss_within,
            zero_within_variance=True,
        )
    f_statistic = (ss_between / df_between) / (ss_within / df_within)
    return AnovaResult(
        f_statistic=f_statistic,
        df_between=df_between,
        df_within=df_within,
        p_value=1.0 - f_cdf(f_statistic, df_between, df_within),
        ss_between=ss_between,
        ss_within=ss_within,
    )


def one_way_anova(groups: Sequence[Sequence[float]]) -> AnovaResult:
    """One-way ANOVA from raw scores.

    Requires at least two groups of at least two observations each.
    """
    if len(groups) < 2:
        raise DegenerateInputError("need at least 2 groups")
    for g in groups:
        if len(g) < 2:
            raise DegenerateInputError("every group needs at least 2 observations")

    sizes = [len(g) for g in groups]
    n_total = sum(sizes)
    means = [math.fsum(g) / len(g) for g in groups]
    grand_mean = math.fsum(math.fsum(g) for g in groups) / n_total
    ss_between = math.fsum(n * (m - grand_mean) ** 2 for n, m in zip(sizes, means))
    ss_within = math.fsum(
        math.fsum((x - m) ** 2 for x in g) for g, m in zip(groups, means)
    )
    return _finish_anova(ss_between, ss_within, len(groups), n_total)


def anova_from_summary(summaries: Sequence[GroupSummary]) -> AnovaResult:
    """One-way ANOVA reconstructed from (n, mean, sd) group summaries.

    Produces the identical decomposition as :func:`one_way_anova` on any
    raw data matching the summaries: within-group sums of squares are
    recovered as (n-1) * sd^2 and between-group ones from the weighted
    grand mean.
    """
    if len(summaries) < 2:
        raise DegenerateInputError("need at least 2 groups")
    for s in summaries:
        if s.n < 2:
            raise DegenerateInputError("every group needs at least 2 observations")

    n_total = sum(s.n for s in summaries)
    grand_mean = math.fsum(s.n * s.mean for s in summaries) / n_total
    ss_between = math.fsum(s.n * (s.mean - grand_mean) ** 2 for s in summaries)
    ss_within = math.fsum((s.n - 1) * s.sd**2 for s in summaries)
    return _finish_anova(ss_between, ss_within, len(summaries), n_total)


# --- F distribution ----------------------------------------------------------

_BETACF_MAX_ITER = 400
_BETACF_EPS = 1e-16
_FPMIN = 1e-300


def _betacf(a: float, b: float, x: float) -> float:
    """Continued fraction for the incomplete beta function (Lentz's method)."""
    qab = a + b
    qap = a + 1.0
    qam = a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < _FPMIN:
        d = _FPMIN
    d = 1.0 / d
    h = d
    for m in range(1, _BETACF_MAX_ITER + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < _FPMIN:
            d = _FPMIN
        c = 1.0 + aa / c
        if abs(c) < _FPMIN:
            c = _FPMIN
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < _FPMIN:
            d = _FPMIN
        c = 1.0 + aa / c
        if abs(c) < _FPMIN:
            c = _FPMIN
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _BETACF_EPS:
            return h
    raise NonConvergenceError(
        f"incomplete beta continued fraction did not converge for "
        f"a={a}, b={b}, x={x}"
    )


def regularized_incomplete_beta(a: float, b: float, x: float) -> float:
    """I_x(a, b) for a, b > 0 and x in [0, 1]."""
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"x must be in [0, 1], got {x}")
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
    # The continued fraction converges fast only on one side of the mean;
    # use the symmetry I_x(a,b) = 1 - I_{1-x}(b,a) on the other.
    if x < (a + 1.0) / (a + b + 2.0):
        return front * _betacf(a, b, x) / a
    return 1.0 - front * _betacf(b, a, 1.0 - x) / b


def f_cdf(x: float, d1: int, d2: int) -> float:
    """Cumulative distribution of the F(d1, d2) distribution at x >= 0."""
    if x < 0:
        raise ValueError(f"x must be non-negative, got {x}")
    if d1 < 1 or d2 < 1:
        raise ValueError("degrees of freedom must be positive")
    if x == 0.0:
        return 0.0
    if math.isinf(x):
        return 1.0
    t = d1 * x / (d1 * x + d2)
    return regularized_incomplete_beta(d1 / 2.0, d2 / 2.0, t)
