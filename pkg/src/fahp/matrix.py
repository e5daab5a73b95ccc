"""Pairwise judgment matrices of triangular fuzzy numbers."""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .errors import ValidationError
from .tfn import IDENTITY, TFN

# Band for the soft reciprocity check. Paper-style matrices use rounded
# reciprocal TFNs, so defuzz(cell[i][j]) * defuzz(cell[j][i]) is close to
# but rarely exactly 1; outside the band we warn, never reject.
RECIPROCITY_BAND = (0.5, 2.0)


class ReciprocityWarning(UserWarning):
    """A mirrored cell pair falls outside the soft reciprocity band."""


@dataclass
class JudgmentMatrix:
    """Square grid of TFNs expressing pairwise preference among items."""

    items: list[str]
    cells: list[list[TFN]]

    def __post_init__(self):
        n = len(self.items)
        if n == 0:
            raise ValidationError("judgment matrix has no items")
        if len(self.cells) != n or any(len(row) != n for row in self.cells):
            raise ValidationError(
                f"matrix must be {n}x{n} to match its {n} items"
            )
        for i in range(n):
            if self.cells[i][i] != IDENTITY:
                raise ValidationError(
                    f"diagonal cell ({i},{i}) must be (1,1,1), got "
                    f"{self.cells[i][i].as_tuple()}",
                    cell=(i, i),
                )
            for j in range(n):
                c = self.cells[i][j]
                if c.nonstandard:
                    raise ValidationError(
                        f"cell ({i},{j}) violates l <= m <= u: {c.as_tuple()}",
                        cell=(i, j),
                    )
                if not c.is_positive:
                    raise ValidationError(
                        f"cell ({i},{j}) must be strictly positive, got "
                        f"{c.as_tuple()}",
                        cell=(i, j),
                    )
        lo, hi = RECIPROCITY_BAND
        for i in range(n):
            for j in range(i + 1, n):
                prod = self.cells[i][j].graded_mean() * self.cells[j][i].graded_mean()
                if not (lo <= prod <= hi):
                    warnings.warn(
                        f"cells ({i},{j})/({j},{i}) have defuzzified product "
                        f"{prod:.4f} outside [{lo}, {hi}]",
                        ReciprocityWarning,
                        stacklevel=2,
                    )

    @property
    def n(self) -> int:
        return len(self.items)

    def to_array(self) -> np.ndarray:
        """(n, n, 3) float array of (l, m, u) components."""
        return np.array(
            [[c.as_tuple() for c in row] for row in self.cells], dtype=float
        )

    @classmethod
    def from_array(cls, items: list[str], arr) -> "JudgmentMatrix":
        arr = np.asarray(arr, dtype=float)
        cells = [
            [TFN(*arr[i, j]) for j in range(arr.shape[1])]
            for i in range(arr.shape[0])
        ]
        return cls(items=list(items), cells=cells)

    def replace_cell(self, i: int, j: int, value: TFN) -> None:
        self.cells[i][j] = value

    def copy(self) -> "JudgmentMatrix":
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", ReciprocityWarning)
            return JudgmentMatrix(
                items=list(self.items),
                cells=[list(row) for row in self.cells],
            )
