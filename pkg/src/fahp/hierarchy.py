"""Decision hierarchy: local weights per node, global weight composition,
and ranked report generation."""

from __future__ import annotations

import math
import re
import warnings
from dataclasses import dataclass, field

from . import consistency as cons
from . import extent
from .aggregation import ExpertResponseSet, aggregate_matrices
from .errors import IncompleteWeights, ValidationError
from .matrix import JudgmentMatrix
from .tfn import TFN


@dataclass
class Node:
    """Tree node. Non-leaves carry judgment data over their children.

    Judgment data is one of: a single matrix, a per-expert response set,
    precomputed row sums (extent only), or directly supplied weights.
    A node may carry both a matrix and a weights override; the override
    wins for ranking while the matrix still feeds consistency checks.
    """

    id: str
    label: str = ""
    children: list["Node"] = field(default_factory=list)
    matrix: JudgmentMatrix | None = None
    experts: ExpertResponseSet | None = None
    row_sums: list[TFN] | None = None
    weights: dict[str, float] | None = None

    @property
    def is_leaf(self) -> bool:
        return not self.children

    def child_ids(self) -> list[str]:
        return [c.id for c in self.children]


@dataclass
class DecisionHierarchy:
    goal: str
    root: Node

    def __post_init__(self):
        seen: set[str] = set()
        max_depth = 0

        def walk(node: Node, depth: int):
            nonlocal max_depth
            max_depth = max(max_depth, depth)
            if node.id in seen:
                raise ValidationError(f"duplicate node id {node.id!r}", node=node.id)
            seen.add(node.id)
            if not node.is_leaf:
                ids = node.child_ids()
                if node.matrix is not None and node.matrix.items != ids:
                    raise ValidationError(
                        f"matrix items at {node.id!r} do not match its children",
                        node=node.id,
                    )
                if node.experts is not None and node.experts.matrices[0].items != ids:
                    raise ValidationError(
                        f"expert matrices at {node.id!r} do not match its children",
                        node=node.id,
                    )
                if node.row_sums is not None and len(node.row_sums) != len(ids):
                    raise ValidationError(
                        f"row sums at {node.id!r} do not match its child count",
                        node=node.id,
                    )
                if node.weights is not None and set(node.weights) != set(ids):
                    raise ValidationError(
                        f"weight ids at {node.id!r} do not match its children",
                        node=node.id,
                    )
            for child in node.children:
                walk(child, depth + 1)

        walk(self.root, 1)
        if max_depth < 2:
            raise ValidationError("hierarchy must have depth >= 2")

    def nodes(self) -> list[Node]:
        out = []

        def walk(node: Node):
            out.append(node)
            for c in node.children:
                walk(c)

        walk(self.root)
        return out

    def find(self, node_id: str) -> Node:
        for node in self.nodes():
            if node.id == node_id:
                return node
        raise KeyError(node_id)

    def leaves(self) -> list[Node]:
        return [n for n in self.nodes() if n.is_leaf]


@dataclass
class LeafRow:
    id: str
    label: str
    category: str
    category_label: str
    local_weight: float
    local_rank: int
    global_weight: float
    global_rank: int


@dataclass
class NodeRow:
    id: str
    label: str
    weight: float  # weight of this node among its siblings
    global_weight: float
    cr: float | None
    consistent: bool | None


@dataclass
class RankedReport:
    goal: str
    method: str
    leaves: list[LeafRow]
    nodes: list[NodeRow]
    consistency: dict[str, cons.ConsistencyReport]

    def ordered_leaves(self) -> list[LeafRow]:
        return sorted(self.leaves, key=lambda r: r.global_rank)

    def to_dict(self) -> dict:
        return {
            "goal": self.goal,
            "method": self.method,
            "nodes": [
                {
                    "id": r.id, "label": r.label, "weight": r.weight,
                    "global_weight": r.global_weight, "cr": r.cr,
                    "consistent": r.consistent,
                }
                for r in self.nodes
            ],
            "leaves": [
                {
                    "id": r.id, "label": r.label, "category": r.category,
                    "category_label": r.category_label,
                    "local_weight": r.local_weight, "local_rank": r.local_rank,
                    "global_weight": r.global_weight, "global_rank": r.global_rank,
                }
                for r in self.ordered_leaves()
            ],
        }


def _natural_key(item_id: str):
    return [int(p) if p.isdigit() else p for p in re.split(r"(\d+)", item_id)]


_TIE_REL_TOL = 1e-9


def _rank(pairs: list[tuple[str, float]]) -> dict[str, int]:
    """Ranks 1..n by descending weight, ties broken by ascending id.

    Weights within floating noise of each other count as tied so that
    summation order cannot flip the id-based tie break.
    """
    ordered = sorted(pairs, key=lambda p: -p[1])
    groups: list[list[tuple[str, float]]] = []
    for item in ordered:
        if groups and math.isclose(groups[-1][0][1], item[1],
                                   rel_tol=_TIE_REL_TOL, abs_tol=1e-15):
            groups[-1].append(item)
        else:
            groups.append([item])
    ranks: dict[str, int] = {}
    rank = 1
    for group in groups:
        for item_id, _ in sorted(group, key=lambda p: _natural_key(p[0])):
            ranks[item_id] = rank
            rank += 1
    return ranks


def local_weights(
    node: Node,
    method: str = "extent",
    ri_table: dict[int, float] | None = None,
    cr_threshold: float = cons.DEFAULT_CR_THRESHOLD,
) -> tuple[dict[str, float], cons.ConsistencyReport | None]:
    """Local weights of a node's children plus the consistency report.

    A CR at or above the threshold only warns; the reference procedure
    proceeds after checking.
    """
    if node.is_leaf:
        raise ValueError(f"node {node.id!r} is a leaf")
    if method not in ("extent", "colnorm"):
        raise ValueError(f"unknown method {method!r}")
    ids = node.child_ids()

    matrix = node.matrix
    if matrix is None and node.experts is not None:
        matrix = aggregate_matrices(node.experts)

    report = None
    if matrix is not None:
        report = cons.check(matrix, ri_table=ri_table, threshold=cr_threshold)
        if not report.consistent:
            warnings.warn(
                f"node {node.id!r} has CR {report.cr:.4f} >= {cr_threshold}; "
                "weights computed anyway",
                stacklevel=2,
            )

    if node.weights is not None:
        return dict(node.weights), report

    if matrix is not None:
        if method == "extent":
            values = extent.extent_weights(matrix).weights
        else:
            values = report.priority
        return dict(zip(ids, (float(v) for v in values))), report

    if node.row_sums is not None:
        values = extent.extent_weights_from_row_sums(node.row_sums).weights
        return dict(zip(ids, (float(v) for v in values))), None

    raise IncompleteWeights(f"node {node.id!r} has no judgment data")


def evaluate(
    hierarchy: DecisionHierarchy,
    method: str = "extent",
    ri_table: dict[int, float] | None = None,
    cr_threshold: float = cons.DEFAULT_CR_THRESHOLD,
) -> RankedReport:
    """Compute all local weights, compose global weights down the tree,
    and rank every leaf."""
    node_rows: list[NodeRow] = []
    leaf_acc: list[tuple[Node, Node, float, float]] = []  # leaf, parent, lw, gw
    reports: dict[str, cons.ConsistencyReport] = {}

    def walk(node: Node, path_weight: float):
        lw, report = local_weights(
            node, method=method, ri_table=ri_table, cr_threshold=cr_threshold
        )
        if report is not None:
            reports[node.id] = report
        for child in node.children:
            w = lw[child.id]
            gw = path_weight * w
            if child.is_leaf:
                leaf_acc.append((child, node, w, gw))
            else:
                walk(child, gw)
                crep = reports.get(child.id)
                node_rows.append(
                    NodeRow(
                        id=child.id, label=child.label, weight=w,
                        global_weight=gw,
                        cr=crep.cr if crep else None,
                        consistent=crep.consistent if crep else None,
                    )
                )

    walk(hierarchy.root, 1.0)
    root_report = reports.get(hierarchy.root.id)

    # local ranks within each sibling group
    local_ranks: dict[str, int] = {}
    by_parent: dict[str, list[tuple[str, float]]] = {}
    for leaf, parent, lw, _ in leaf_acc:
        by_parent.setdefault(parent.id, []).append((leaf.id, lw))
    for pairs in by_parent.values():
        local_ranks.update(_rank(pairs))

    global_ranks = _rank([(leaf.id, gw) for leaf, _, _, gw in leaf_acc])

    leaves = [
        LeafRow(
            id=leaf.id, label=leaf.label,
            category=parent.id, category_label=parent.label,
            local_weight=lw, local_rank=local_ranks[leaf.id],
            global_weight=gw, global_rank=global_ranks[leaf.id],
        )
        for leaf, parent, lw, gw in leaf_acc
    ]

    node_rows.sort(key=lambda r: _natural_key(r.id))
    if root_report is not None:
        node_rows.insert(
            0,
            NodeRow(
                id=hierarchy.root.id, label=hierarchy.root.label, weight=1.0,
                global_weight=1.0, cr=root_report.cr,
                consistent=root_report.consistent,
            ),
        )
    return RankedReport(
        goal=hierarchy.goal,
        method=method,
        leaves=leaves,
        nodes=node_rows,
        consistency=reports,
    )


def rank_report(report: RankedReport, top: int | None = None) -> list[LeafRow]:
    """Leaves in global-rank order, optionally truncated to the top k."""
    rows = report.ordered_leaves()
    return rows[:top] if top else rows
