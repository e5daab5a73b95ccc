"""Chang extent analysis: synthetic extents, possibility degrees, weights.

The pipeline for a fuzzy pairwise matrix is: fuzzy row sums -> grand sum
inverse -> synthetic extents S_i -> pairwise degrees of possibility ->
minimum degree d'(i) per item -> normalized crisp weight vector.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import AllZeroWeights
from .matrix import JudgmentMatrix
from .tfn import TFN


@dataclass
class ExtentResult:
    """Everything extent analysis produces for one matrix."""

    row_sums: list[TFN]
    total_inverse: TFN
    extents: list[TFN]
    possibility: np.ndarray  # n x n, diagonal 1
    d_prime: np.ndarray
    weights: np.ndarray  # normalized, sums to 1


def synthetic_extents(
    matrix: JudgmentMatrix,
) -> tuple[list[TFN], TFN, list[TFN]]:
    """Fuzzy row sums, inverse of the grand sum, and extents S_i."""
    row_sums = []
    for row in matrix.cells:
        acc = row[0]
        for cell in row[1:]:
            acc = acc + cell
        row_sums.append(acc)
    total_inverse, extents = extents_from_row_sums(row_sums)
    return row_sums, total_inverse, extents


def extents_from_row_sums(row_sums: list[TFN]) -> tuple[TFN, list[TFN]]:
    """Extents for precomputed fuzzy row sums.

    Used directly by the worked-example fixture, whose source stores row
    sums rather than a full matrix.
    """
    total = row_sums[0]
    for rs in row_sums[1:]:
        total = total + rs
    total_inverse = total.inverse()
    extents = [rs * total_inverse for rs in row_sums]
    return total_inverse, extents


def degree_of_possibility(va: TFN, vb: TFN) -> float:
    """V(va >= vb): height of the intersection of the two memberships.

    1 when va's mode dominates, 0 when the supports are disjoint the
    other way, otherwise the ordinate of the crossing point.
    """
    if va.m >= vb.m:
        return 1.0
    if vb.l >= va.u:
        return 0.0
    return (vb.l - va.u) / ((va.m - va.u) - (vb.m - vb.l))


def min_degrees(extents: list[TFN]) -> tuple[np.ndarray, np.ndarray]:
    """Pairwise possibility table and d'(i) = min_k V(S_i >= S_k)."""
    n = len(extents)
    table = np.ones((n, n))
    for i in range(n):
        for k in range(n):
            if i != k:
                table[i, k] = degree_of_possibility(extents[i], extents[k])
    d_prime = np.array(
        [min(table[i, k] for k in range(n) if k != i) if n > 1 else 1.0
         for i in range(n)]
    )
    return table, d_prime


def extent_weights(matrix: JudgmentMatrix) -> ExtentResult:
    """Full Chang extent analysis of a judgment matrix (n >= 2)."""
    if matrix.n < 2:
        raise ValueError("extent analysis requires at least 2 items")
    row_sums, total_inverse, extents = synthetic_extents(matrix)
    return _finish(row_sums, total_inverse, extents)


def extent_weights_from_row_sums(row_sums: list[TFN]) -> ExtentResult:
    if len(row_sums) < 2:
        raise ValueError("extent analysis requires at least 2 items")
    total_inverse, extents = extents_from_row_sums(row_sums)
    return _finish(row_sums, total_inverse, extents)


def _finish(row_sums, total_inverse, extents) -> ExtentResult:
    table, d_prime = min_degrees(extents)
    total = d_prime.sum()
    if total == 0:
        raise AllZeroWeights(
            "every minimum possibility degree is 0; matrix is pathological"
        )
    return ExtentResult(
        row_sums=row_sums,
        total_inverse=total_inverse,
        extents=extents,
        possibility=table,
        d_prime=d_prime,
        weights=d_prime / total,
    )
