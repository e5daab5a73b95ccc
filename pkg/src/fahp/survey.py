"""Survey statistics: Likert frequency categorization and Kendall's
coefficient of concordance."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateInput, ValidationError, ZeroN


@dataclass
class LikertTally:
    """Five-point response counts for one survey item."""

    item_id: str
    strongly_agree: int
    agree: int
    disagree: int
    strongly_disagree: int
    neutral: int
    total: int

    def __post_init__(self):
        counts = (
            self.strongly_agree, self.agree, self.disagree,
            self.strongly_disagree, self.neutral,
        )
        if any(c < 0 for c in counts):
            raise ValidationError(f"{self.item_id}: negative count")
        if sum(counts) != self.total:
            raise ValidationError(
                f"{self.item_id}: counts sum to {sum(counts)}, expected {self.total}"
            )


def _round_half_away(x: float) -> int:
    return math.floor(x + 0.5) if x >= 0 else math.ceil(x - 0.5)


def likert_percentages(tally: LikertTally) -> tuple[int, int, int]:
    """(positive%, negative%, neutral%), rounded half away from zero.

    Positive pools strongly-agree with agree; negative pools disagree
    with strongly-disagree.
    """
    if tally.total == 0:
        raise ZeroN(f"{tally.item_id}: zero responses")
    n = tally.total
    positive = _round_half_away(100.0 * (tally.strongly_agree + tally.agree) / n)
    negative = _round_half_away(100.0 * (tally.disagree + tally.strongly_disagree) / n)
    neutral = _round_half_away(100.0 * tally.neutral / n)
    return positive, negative, neutral


def tally_from_dict(d: dict) -> LikertTally:
    return LikertTally(
        item_id=d["id"],
        strongly_agree=int(d["strongly_agree"]),
        agree=int(d["agree"]),
        disagree=int(d["disagree"]),
        strongly_disagree=int(d["strongly_disagree"]),
        neutral=int(d["neutral"]),
        total=int(d["total"]),
    )


def load_tallies(path) -> list[LikertTally]:
    """Read a tally file: either a bare list or {"items": [...]}."""
    import json

    with open(path, encoding="utf-8") as fh:
        doc = json.load(fh)
    items = doc["items"] if isinstance(doc, dict) else doc
    return [tally_from_dict(d) for d in items]


@dataclass
class RankPanel:
    """k raters x n items grid of ranks; each row ranks all n items."""

    ranks: list[list[float]]
    allow_ties: bool = False

    def __post_init__(self):
        if not self.ranks:
            raise ValidationError("empty rank panel")
        n = len(self.ranks[0])
        for idx, row in enumerate(self.ranks):
            if len(row) != n:
                raise ValidationError(f"rater {idx} ranked {len(row)} items, expected {n}")
            if not self.allow_ties and sorted(row) != list(range(1, n + 1)):
                raise ValidationError(
                    f"rater {idx} row is not a permutation of 1..{n}"
                )

    @property
    def k(self) -> int:
        return len(self.ranks)

    @property
    def n(self) -> int:
        return len(self.ranks[0])


@dataclass
class KendallResult:
    w: float
    chi_square: float
    p_value: float


def kendalls_w(panel: RankPanel, tie_correction: bool = False) -> KendallResult:
    """Kendall's coefficient of concordance with a chi-square test.

    W = 12S / (k^2 (n^3 - n)) where S is the squared deviation of the
    column rank sums from their mean; chi^2 = k(n-1)W on n-1 degrees of
    freedom. With tie_correction, the denominator subtracts k * sum of
    per-rater tie terms (t^3 - t per tie group).
    """
    k, n = panel.k, panel.n
    if k < 2 or n < 3:
        raise DegenerateInput(f"need k >= 2 raters and n >= 3 items, got k={k}, n={n}")
    col_sums = [sum(row[j] for row in panel.ranks) for j in range(n)]
    mean = k * (n + 1) / 2.0
    s = sum((r - mean) ** 2 for r in col_sums)
    denom = k * k * (n ** 3 - n)
    if tie_correction:
        tie_total = 0.0
        for row in panel.ranks:
            groups: dict[float, int] = {}
            for r in row:
                groups[r] = groups.get(r, 0) + 1
            tie_total += sum(t ** 3 - t for t in groups.values() if t > 1)
        denom -= k * tie_total
    w = 12.0 * s / denom
    chi = k * (n - 1) * w
    p = chi2_sf(chi, n - 1)
    return KendallResult(w=w, chi_square=chi, p_value=p)


# ---------------------------------------------------------------------
# Chi-square upper tail via the regularized incomplete gamma function.
# Series expansion below a+1, Lentz continued fraction above; relative
# accuracy well under 1e-8 across the tested range.

_EPS = 1e-16
_TINY = 1e-300


def _gamma_p_series(a: float, x: float) -> float:
    ap = a
    total = 1.0 / a
    delta = total
    for _ in range(1000):
        ap += 1.0
        delta *= x / ap
        total += delta
        if abs(delta) < abs(total) * _EPS:
            break
    return total * math.exp(-x + a * math.log(x) - math.lgamma(a))


def _gamma_q_contfrac(a: float, x: float) -> float:
    b = x + 1.0 - a
    c = 1.0 / _TINY
    d = 1.0 / b
    h = d
    for i in range(1, 1000):
        an = -i * (i - a)
        b += 2.0
        d = an * d + b
        if abs(d) < _TINY:
            d = _TINY
        c = b + an / c
        if abs(c) < _TINY:
            c = _TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _EPS:
            break
    return math.exp(-x + a * math.log(x) - math.lgamma(a)) * h


def gamma_q(a: float, x: float) -> float:
    """Regularized upper incomplete gamma Q(a, x)."""
    if a <= 0 or x < 0:
        raise ValueError("gamma_q requires a > 0 and x >= 0")
    if x == 0:
        return 1.0
    if x < a + 1.0:
        return 1.0 - _gamma_p_series(a, x)
    return _gamma_q_contfrac(a, x)


def chi2_sf(x: float, df: int) -> float:
    """Upper-tail probability of the chi-square distribution."""
    if df < 1:
        raise ValueError("degrees of freedom must be >= 1")
    return gamma_q(df / 2.0, x / 2.0)
