import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fahp.errors import IncompleteWeights, ValidationError
from fahp.hierarchy import (
    DecisionHierarchy,
    Node,
    _natural_key,
    _rank,
    evaluate,
    local_weights,
    rank_report,
)
from conftest import matrix_from_terms


def two_level(goal_weights, leaf_weights_by_cat):
    cats = []
    for cat_id, lw in leaf_weights_by_cat.items():
        leaves = [Node(id=k, label=k) for k in lw]
        cats.append(Node(id=cat_id, label=cat_id, children=leaves, weights=dict(lw)))
    root = Node(id="goal", label="goal", children=cats, weights=dict(goal_weights))
    return DecisionHierarchy(goal="demo", root=root)


class TestValidation:
    def test_duplicate_ids(self):
        with pytest.raises(ValidationError):
            DecisionHierarchy(
                goal="g",
                root=Node(id="r", children=[Node(id="x"), Node(id="x")]),
            )

    def test_depth_requirement(self):
        with pytest.raises(ValidationError):
            DecisionHierarchy(goal="g", root=Node(id="r"))

    def test_weight_ids_must_cover_children(self):
        with pytest.raises(ValidationError):
            DecisionHierarchy(
                goal="g",
                root=Node(id="r", children=[Node(id="a"), Node(id="b")],
                          weights={"a": 0.5, "c": 0.5}),
            )

    def test_matrix_items_must_match_children(self):
        m = matrix_from_terms(["x", "y"], [[None, "weak"], ["~weak", None]])
        with pytest.raises(ValidationError):
            DecisionHierarchy(
                goal="g",
                root=Node(id="r", children=[Node(id="a"), Node(id="b")], matrix=m),
            )

    def test_find_and_leaves(self):
        h = two_level({"c1": 1.0}, {"c1": {"a": 0.4, "b": 0.6}})
        assert h.find("b").id == "b"
        with pytest.raises(KeyError):
            h.find("zzz")
        assert [n.id for n in h.leaves()] == ["a", "b"]


class TestRankHelpers:
    def test_natural_key_orders_numeric_suffixes(self):
        ids = ["G10", "G2", "G1"]
        assert sorted(ids, key=_natural_key) == ["G1", "G2", "G10"]

    def test_rank_descending_weight(self):
        ranks = _rank([("a", 0.2), ("b", 0.5), ("c", 0.3)])
        assert ranks == {"b": 1, "c": 2, "a": 3}

    def test_tie_broken_by_ascending_id(self):
        ranks = _rank([("G46", 0.3), ("G38", 0.3), ("G2", 0.4)])
        assert ranks == {"G2": 1, "G38": 2, "G46": 3}

    def test_float_noise_counts_as_tie(self):
        w = 0.09263666945558144
        ranks = _rank([("G46", w), ("G38", w - 2e-17)])
        assert ranks == {"G38": 1, "G46": 2}


class TestLocalWeights:
    def test_weights_override_wins(self):
        m = matrix_from_terms(["a", "b"], [[None, "strong"], ["~strong", None]])
        node = Node(id="r", children=[Node(id="a"), Node(id="b")],
                    matrix=m, weights={"a": 0.25, "b": 0.75})
        lw, report = local_weights(node)
        assert lw == {"a": 0.25, "b": 0.75}
        assert report is not None  # the matrix still feeds consistency

    def test_extent_from_matrix(self):
        m = matrix_from_terms(
            ["a", "b", "c"],
            [
                [None, "strong", "very-strong"],
                ["~strong", None, "weak"],
                ["~very-strong", "~weak", None],
            ],
        )
        node = Node(id="r", children=[Node(id=k) for k in "abc"], matrix=m)
        lw, _ = local_weights(node, method="extent")
        assert sum(lw.values()) == pytest.approx(1.0)
        # extent analysis truncates dominated items toward zero
        assert lw["a"] >= lw["b"] >= lw["c"]
        assert lw["a"] == max(lw.values())

    def test_colnorm_method(self):
        m = matrix_from_terms(["a", "b"], [[None, "strong"], ["~strong", None]])
        node = Node(id="r", children=[Node(id="a"), Node(id="b")], matrix=m)
        lw, _ = local_weights(node, method="colnorm")
        assert sum(lw.values()) == pytest.approx(1.0)
        assert lw["a"] > lw["b"]

    def test_unknown_method(self):
        node = Node(id="r", children=[Node(id="a"), Node(id="b")])
        with pytest.raises(ValueError):
            local_weights(node, method="eigen")

    def test_no_judgment_data(self):
        node = Node(id="r", children=[Node(id="a"), Node(id="b")])
        with pytest.raises(IncompleteWeights):
            local_weights(node)

    def test_inconsistent_matrix_warns_but_proceeds(self):
        grid = [
            [None, "very-strong", "~very-strong"],
            ["~very-strong", None, "very-strong"],
            ["very-strong", "~very-strong", None],
        ]
        m = matrix_from_terms(["a", "b", "c"], grid)
        node = Node(id="r", children=[Node(id=k) for k in "abc"], matrix=m)
        with pytest.warns(UserWarning, match="CR"):
            lw, report = local_weights(node)
        assert not report.consistent
        assert sum(lw.values()) == pytest.approx(1.0)


class TestEvaluate:
    def test_global_weights_are_path_products(self):
        h = two_level(
            {"c1": 0.3, "c2": 0.7},
            {"c1": {"a": 0.4, "b": 0.6}, "c2": {"x": 0.9, "y": 0.1}},
        )
        report = evaluate(h)
        gw = {r.id: r.global_weight for r in report.leaves}
        assert gw["a"] == pytest.approx(0.12)
        assert gw["x"] == pytest.approx(0.63)

    def test_global_and_local_ranks(self):
        h = two_level(
            {"c1": 0.3, "c2": 0.7},
            {"c1": {"a": 0.4, "b": 0.6}, "c2": {"x": 0.9, "y": 0.1}},
        )
        report = evaluate(h)
        rows = {r.id: r for r in report.leaves}
        assert rows["x"].global_rank == 1
        assert rows["b"].global_rank == 2
        assert rows["a"].global_rank == 3
        assert rows["y"].global_rank == 4
        assert rows["a"].local_rank == 2 and rows["b"].local_rank == 1

    def test_rank_report_top(self):
        h = two_level(
            {"c1": 1.0},
            {"c1": {"a": 0.2, "b": 0.5, "c": 0.3}},
        )
        report = evaluate(h)
        top2 = rank_report(report, top=2)
        assert [r.id for r in top2] == ["b", "c"]

    def test_to_dict_leaves_in_rank_order(self):
        h = two_level(
            {"c1": 1.0},
            {"c1": {"a": 0.2, "b": 0.8}},
        )
        doc = evaluate(h).to_dict()
        assert [r["id"] for r in doc["leaves"]] == ["b", "a"]
        assert doc["goal"] == "demo"
        assert doc["method"] == "extent"

    def test_deeper_tree_composition(self):
        leaf_w = {"l1": 0.5, "l2": 0.5}
        mid = Node(id="mid", children=[Node(id="l1"), Node(id="l2")],
                   weights=leaf_w)
        other = Node(id="solo", children=[Node(id="l3"), Node(id="l4")],
                     weights={"l3": 0.25, "l4": 0.75})
        root = Node(id="goal", children=[mid, other],
                    weights={"mid": 0.4, "solo": 0.6})
        report = evaluate(DecisionHierarchy(goal="deep", root=root))
        gw = {r.id: r.global_weight for r in report.leaves}
        assert gw["l1"] == pytest.approx(0.2)
        assert gw["l4"] == pytest.approx(0.45)


@st.composite
def random_weight_tree(draw, depth):
    counter = [0]

    def weights_for(ids):
        raw = [draw(st.floats(0.05, 1.0)) for _ in ids]
        total = sum(raw)
        return {i: v / total for i, v in zip(ids, raw)}

    def build(level):
        counter[0] += 1
        me = f"n{counter[0]}"
        if level == depth:
            return Node(id=me)
        kids = [build(level + 1) for _ in range(draw(st.integers(2, 3)))]
        return Node(id=me, children=kids,
                    weights=weights_for([k.id for k in kids]))

    return DecisionHierarchy(goal="random", root=build(1))


@settings(max_examples=30, deadline=None)
@given(random_weight_tree(depth=3))
def test_depth3_global_weights_telescope(h):
    report = evaluate(h)
    assert sum(r.global_weight for r in report.leaves) == pytest.approx(1.0, abs=1e-6)


@settings(max_examples=20, deadline=None)
@given(random_weight_tree(depth=4))
def test_depth4_global_weights_telescope(h):
    report = evaluate(h)
    assert sum(r.global_weight for r in report.leaves) == pytest.approx(1.0, abs=1e-6)
    ranks = sorted(r.global_rank for r in report.leaves)
    assert ranks == list(range(1, len(report.leaves) + 1))
