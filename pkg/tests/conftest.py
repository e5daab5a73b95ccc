import json
from pathlib import Path

import pytest

from fahp.matrix import JudgmentMatrix
from fahp.tfn import TFN, default_scale

DATA = Path(__file__).resolve().parents[1] / "src" / "fahp" / "data"


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA


@pytest.fixture(scope="session")
def scale():
    return default_scale()


def matrix_from_terms(items, grid, scale=None):
    """Build a JudgmentMatrix from a grid of term names / TFN triples.

    Grid entries: a term name string, "~term" for the reciprocal form,
    None for the diagonal identity, or a (l, m, u) tuple.
    """
    scale = scale or default_scale()
    cells = []
    for i, row in enumerate(grid):
        out = []
        for j, entry in enumerate(row):
            if entry is None or i == j and entry in (None, "equal"):
                out.append(TFN(1, 1, 1))
            elif isinstance(entry, str):
                if entry.startswith("~"):
                    out.append(scale.tfn(entry[1:], reciprocal=True))
                else:
                    out.append(scale.tfn(entry))
            else:
                out.append(TFN(*entry))
        cells.append(out)
    return JudgmentMatrix(items=list(items), cells=cells)


def load_json(path):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)
