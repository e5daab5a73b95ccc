"""Crisp consistency checking of fuzzy pairwise matrices.

The fuzzy matrix is defuzzified cellwise by the graded mean, the priority
vector is obtained by column normalization and row averaging, lambda_max
is the priority-weighted sum of column sums, and CI/CR are derived from
the random-index table.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from .errors import LengthMismatch, RiUnavailable, ZeroColumnSum
from .matrix import JudgmentMatrix

# Random consistency index per matrix size. Kept verbatim from the source
# calibration, including the non-monotone dip at n=12.
PAPER_RI_TABLE: dict[int, float] = {
    1: 0.0, 2: 0.0, 3: 0.58, 4: 0.9, 5: 1.12, 6: 1.24, 7: 1.32, 8: 1.41,
    9: 1.45, 10: 1.49, 11: 1.51, 12: 1.48, 13: 1.56, 14: 1.57, 15: 1.59,
}

DEFAULT_CR_THRESHOLD = 0.10


def cr_threshold_from_env(default: float = DEFAULT_CR_THRESHOLD) -> float:
    raw = os.environ.get("FAHP_CR_THRESHOLD")
    return float(raw) if raw else default


def ri_table_from_env() -> dict[int, float] | None:
    """Optional RI override from FAHP_RI_TABLE (path to a JSON map)."""
    path = os.environ.get("FAHP_RI_TABLE")
    if not path:
        return None
    import json

    with open(path, encoding="utf-8") as fh:
        raw = json.load(fh)
    return {int(k): float(v) for k, v in raw.items()}


@dataclass
class ConsistencyReport:
    crisp: np.ndarray
    column_sums: np.ndarray
    priority: np.ndarray
    lambda_max: float
    ci: float
    cr: float
    consistent: bool
    n: int
    worst_cell: tuple[int, int] | None = None

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "crisp_matrix": self.crisp.tolist(),
            "column_sums": self.column_sums.tolist(),
            "priority": self.priority.tolist(),
            "lambda_max": self.lambda_max,
            "ci": self.ci,
            "cr": self.cr,
            "consistent": self.consistent,
            "worst_cell": list(self.worst_cell) if self.worst_cell else None,
        }


def crisp_matrix(matrix: JudgmentMatrix) -> np.ndarray:
    """Graded-mean defuzzification of every cell; diagonal exactly 1."""
    crisp = np.array(
        [[c.graded_mean() for c in row] for row in matrix.cells], dtype=float
    )
    np.fill_diagonal(crisp, 1.0)
    return crisp


def colnorm_priority(crisp: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Column sums and the column-normalized row-average priority vector."""
    crisp = np.asarray(crisp, dtype=float)
    column_sums = crisp.sum(axis=0)
    if np.any(column_sums == 0):
        raise ZeroColumnSum("crisp matrix has a zero column sum")
    priority = (crisp / column_sums).mean(axis=1)
    return column_sums, priority


def lambda_max(column_sums, priority) -> float:
    """Priority-weighted sum of column sums."""
    column_sums = np.asarray(column_sums, dtype=float)
    priority = np.asarray(priority, dtype=float)
    if column_sums.shape != priority.shape:
        raise LengthMismatch(
            f"column sums ({column_sums.shape}) and priority "
            f"({priority.shape}) differ in length"
        )
    return float(column_sums @ priority)


def consistency_ratio(
    lam: float,
    n: int,
    ri_table: dict[int, float] | None = None,
    threshold: float = DEFAULT_CR_THRESHOLD,
) -> tuple[float, float, bool]:
    """(CI, CR, consistent) for a given lambda_max and matrix size."""
    table = ri_table if ri_table is not None else PAPER_RI_TABLE
    if n not in table:
        raise RiUnavailable(f"no RI entry for matrix size {n}")
    ci = 0.0 if n <= 1 else (lam - n) / (n - 1)
    ri = table[n]
    cr = 0.0 if ri == 0 else ci / ri
    return ci, cr, cr < threshold


def perron_lambda(crisp: np.ndarray, iterations: int = 200) -> float:
    """Power-iteration Perron eigenvalue. Diagnostic alternative only;
    the column-normalization estimate is what reproduces the reference
    results."""
    crisp = np.asarray(crisp, dtype=float)
    v = np.ones(crisp.shape[0])
    lam = 0.0
    for _ in range(iterations):
        w = crisp @ v
        lam = w.max()
        v = w / lam
    return float((crisp @ v).sum() / v.sum())


def worst_cell(crisp: np.ndarray, priority: np.ndarray) -> tuple[int, int] | None:
    """Off-diagonal cell deviating most from the ratio w_i / w_j.

    Heuristic pointer for UI feedback, not part of the consistency math.
    """
    n = crisp.shape[0]
    if n < 2 or np.any(priority <= 0):
        return None
    best = None
    best_dev = -1.0
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            expected = priority[i] / priority[j]
            dev = abs(crisp[i, j] - expected) / expected
            if dev > best_dev:
                best_dev = dev
                best = (i, j)
    return best


def check_crisp(
    crisp: np.ndarray,
    ri_table: dict[int, float] | None = None,
    threshold: float = DEFAULT_CR_THRESHOLD,
) -> ConsistencyReport:
    """Consistency report for an already-crisp pairwise matrix."""
    crisp = np.asarray(crisp, dtype=float)
    n = crisp.shape[0]
    if n == 1:
        return ConsistencyReport(
            crisp=crisp, column_sums=crisp.sum(axis=0), priority=np.ones(1),
            lambda_max=1.0, ci=0.0, cr=0.0, consistent=True, n=1,
        )
    column_sums, priority = colnorm_priority(crisp)
    lam = lambda_max(column_sums, priority)
    ci, cr, ok = consistency_ratio(lam, n, ri_table=ri_table, threshold=threshold)
    return ConsistencyReport(
        crisp=crisp,
        column_sums=column_sums,
        priority=priority,
        lambda_max=lam,
        ci=ci,
        cr=cr,
        consistent=ok,
        n=n,
        worst_cell=worst_cell(crisp, priority),
    )


def check(
    matrix: JudgmentMatrix,
    ri_table: dict[int, float] | None = None,
    threshold: float = DEFAULT_CR_THRESHOLD,
) -> ConsistencyReport:
    """Defuzzify a fuzzy judgment matrix and run the full pipeline."""
    return check_crisp(crisp_matrix(matrix), ri_table=ri_table, threshold=threshold)
