import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fahp.consistency import (
    DEFAULT_CR_THRESHOLD,
    PAPER_RI_TABLE,
    check,
    check_crisp,
    colnorm_priority,
    consistency_ratio,
    cr_threshold_from_env,
    crisp_matrix,
    lambda_max,
    perron_lambda,
    ri_table_from_env,
    worst_cell,
)
from fahp.errors import LengthMismatch, RiUnavailable, ZeroColumnSum

from conftest import matrix_from_terms

# Crisp 4x4 principle matrix with hand-checked downstream values.
FCM = np.array([
    [1.0, 2.5, 1.5, 2.0],
    [0.5, 1.0, 0.5, 0.7],
    [0.7, 2.0, 1.0, 1.5],
    [0.5, 1.5, 0.7, 1.0],
])


class TestReferenceMatrix:
    def test_column_sums(self):
        sums, _ = colnorm_priority(FCM)
        assert sums == pytest.approx([2.7, 7.0, 3.7, 5.2])

    def test_priority_vector(self):
        _, priority = colnorm_priority(FCM)
        assert priority == pytest.approx(
            [0.379384, 0.149448, 0.275926, 0.195242], abs=1e-6
        )
        assert priority.sum() == pytest.approx(1.0, abs=1e-12)

    def test_lambda_max(self):
        sums, priority = colnorm_priority(FCM)
        assert lambda_max(sums, priority) == pytest.approx(4.1067, abs=1e-3)

    def test_full_report(self):
        report = check_crisp(FCM)
        assert report.n == 4
        assert report.ci == pytest.approx(0.035553, abs=1e-4)
        assert report.cr == pytest.approx(0.0395, abs=5e-4)
        assert report.consistent


class TestRiTable:
    def test_known_sizes(self):
        assert PAPER_RI_TABLE[3] == 0.58
        assert PAPER_RI_TABLE[15] == 1.59

    def test_non_monotone_dip_at_twelve(self):
        assert PAPER_RI_TABLE[12] < PAPER_RI_TABLE[11]

    def test_missing_size_raises(self):
        with pytest.raises(RiUnavailable):
            consistency_ratio(17.0, 16)

    def test_small_sizes_trivially_consistent(self):
        ci, cr, ok = consistency_ratio(2.0, 2)
        assert (ci, cr, ok) == (0.0, 0.0, True)


class TestEnvOverrides:
    def test_threshold_default(self, monkeypatch):
        monkeypatch.delenv("FAHP_CR_THRESHOLD", raising=False)
        assert cr_threshold_from_env() == DEFAULT_CR_THRESHOLD

    def test_threshold_env(self, monkeypatch):
        monkeypatch.setenv("FAHP_CR_THRESHOLD", "0.2")
        assert cr_threshold_from_env() == 0.2

    def test_ri_table_env(self, monkeypatch, tmp_path):
        path = tmp_path / "ri.json"
        path.write_text(json.dumps({"3": 0.5, "4": 1.0}))
        monkeypatch.setenv("FAHP_RI_TABLE", str(path))
        table = ri_table_from_env()
        assert table == {3: 0.5, 4: 1.0}

    def test_ri_table_absent(self, monkeypatch):
        monkeypatch.delenv("FAHP_RI_TABLE", raising=False)
        assert ri_table_from_env() is None

    def test_custom_table_changes_verdict(self):
        ci, cr, ok = consistency_ratio(4.5, 4, ri_table={4: 0.9})
        assert not ok
        ci2, cr2, ok2 = consistency_ratio(4.5, 4, ri_table={4: 9.0})
        assert ok2
        assert cr2 == pytest.approx(cr / 10)


class TestFuzzyPipeline:
    def test_crisp_matrix_diagonal_exact(self):
        m = matrix_from_terms(
            ["a", "b"], [[None, "weak"], ["~weak", None]]
        )
        crisp = crisp_matrix(m)
        assert crisp[0, 0] == 1.0 and crisp[1, 1] == 1.0
        assert crisp[0, 1] == pytest.approx(1.5)  # (4*1.5 + 1 + 2)/6
        assert crisp[1, 0] == pytest.approx(0.65)

    def test_check_matches_check_crisp(self):
        m = matrix_from_terms(
            ["a", "b", "c"],
            [
                [None, "strong", "weak"],
                ["~strong", None, "~fair"],
                ["~weak", "fair", None],
            ],
        )
        assert check(m).cr == check_crisp(crisp_matrix(m)).cr

    def test_zero_column_rejected(self):
        with pytest.raises(ZeroColumnSum):
            colnorm_priority(np.zeros((2, 2)))

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            lambda_max(np.ones(3), np.ones(4))

    def test_single_item_trivial(self):
        report = check_crisp(np.array([[1.0]]))
        assert report.cr == 0.0 and report.consistent


def consistent_matrix(n, seed):
    rng = np.random.default_rng(seed)
    w = rng.uniform(0.2, 5.0, size=n)
    return np.outer(w, 1.0 / w)


@settings(max_examples=40, deadline=None)
@given(st.integers(3, 9), st.integers(0, 10_000))
def test_perfectly_consistent_matrices(n, seed):
    crisp = consistent_matrix(n, seed)
    report = check_crisp(crisp)
    assert report.lambda_max == pytest.approx(n, abs=1e-9)
    assert report.cr == pytest.approx(0.0, abs=1e-9)
    assert report.consistent


def test_perron_estimate_agrees_on_consistent_matrix():
    crisp = consistent_matrix(5, seed=7)
    assert perron_lambda(crisp) == pytest.approx(5.0, abs=1e-8)


def test_worst_cell_points_at_planted_outlier():
    crisp = consistent_matrix(4, seed=3)
    crisp[1, 2] *= 40.0
    report = check_crisp(crisp)
    assert report.worst_cell == (1, 2)


def test_worst_cell_degenerate():
    assert worst_cell(np.array([[1.0]]), np.array([1.0])) is None
