"""Merging multiple experts' judgment matrices by componentwise
geometric mean."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from .errors import EmptyList, MissingJudgment, NonPositiveValue, ValidationError
from .matrix import JudgmentMatrix, ReciprocityWarning
from .tfn import TFN


@dataclass
class ExpertResponseSet:
    """One complete judgment matrix per expert, over the same items."""

    expert_ids: list[str]
    matrices: list[JudgmentMatrix]

    def __post_init__(self):
        if not self.matrices:
            raise ValidationError("expert response set is empty")
        if len(self.expert_ids) != len(self.matrices):
            raise ValidationError("one matrix per expert id required")
        items = self.matrices[0].items
        for eid, m in zip(self.expert_ids, self.matrices):
            if m.items != items:
                raise ValidationError(
                    f"expert {eid!r} matrix items differ from the others"
                )


def geometric_mean(values) -> float:
    """n-th root of the product, computed in log space."""
    values = list(values)
    if not values:
        raise EmptyList("geometric mean of an empty list")
    total = 0.0
    for v in values:
        if v <= 0:
            raise NonPositiveValue(f"geometric mean requires positive values, got {v}")
        total += math.log(v)
    return math.exp(total / len(values))


def aggregate_matrices(responses: ExpertResponseSet) -> JudgmentMatrix:
    """Componentwise geometric mean of all experts' cells.

    Ordering l <= m <= u is preserved because the geometric mean is
    monotone in each argument; the diagonal stays exactly (1,1,1).
    """
    items = responses.matrices[0].items
    n = len(items)
    cells = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(TFN(1, 1, 1))
                continue
            triples = [m.cells[i][j].as_tuple() for m in responses.matrices]
            row.append(TFN(*(geometric_mean(col) for col in zip(*triples))))
        cells.append(row)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ReciprocityWarning)
        return JudgmentMatrix(items=list(items), cells=cells)


def aggregate_sparse(items: list[str], grids: list[list[list[TFN | None]]]) -> JudgmentMatrix:
    """Lax aggregation where individual experts may have skipped cells.

    A skipped cell is excluded from that cell's geometric mean (with a
    warning); a cell nobody judged is a hard error.
    """
    n = len(items)
    cells = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(TFN(1, 1, 1))
                continue
            judged = [g[i][j] for g in grids if g[i][j] is not None]
            if not judged:
                raise MissingJudgment(f"no expert judged cell ({i},{j})")
            if len(judged) < len(grids):
                warnings.warn(
                    f"cell ({i},{j}) judged by {len(judged)}/{len(grids)} experts",
                    stacklevel=2,
                )
            triples = [c.as_tuple() for c in judged]
            row.append(TFN(*(geometric_mean(col) for col in zip(*triples))))
        cells.append(row)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ReciprocityWarning)
        return JudgmentMatrix(items=list(items), cells=cells)
