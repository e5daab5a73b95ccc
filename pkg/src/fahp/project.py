"""Project file loading, validation, typo repair, and serialization.

Projects are UTF-8 JSON documents. TFNs serialize as 3-element arrays
[l, m, u]; matrix cells may instead be linguistic term strings (prefix
"~term" for the reciprocal form).
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass, field
from pathlib import Path

from .aggregation import ExpertResponseSet
from .errors import ParseError, ValidationError
from .hierarchy import DecisionHierarchy, Node
from .matrix import JudgmentMatrix, ReciprocityWarning
from .survey import LikertTally
from .tfn import TFN, LinguisticScale, default_scale

# The one known source typo: an unordered triple printed where the
# reciprocal-consistent (0.5, 0.6, 1) appears in mirrored cells.
TYPO_TRIPLE = (0.5, 0.6, 0.1)
REPAIRED_TRIPLE = (0.5, 0.6, 1.0)


@dataclass
class ProjectOptions:
    method: str = "extent"
    cr_threshold: float = 0.10
    repair_paper_typos: bool = False
    ri_table: dict[int, float] | None = None


@dataclass
class ProjectFile:
    name: str
    scale: LinguisticScale
    hierarchy: DecisionHierarchy
    options: ProjectOptions = field(default_factory=ProjectOptions)
    surveys: list[LikertTally] = field(default_factory=list)
    repair_log: list[dict] = field(default_factory=list)
    raw: dict | None = None  # parsed source document, for round-tripping


def _parse_scale(raw: dict | None) -> LinguisticScale:
    if raw is None:
        return default_scale()
    terms = {}
    reciprocals = {}
    for entry in raw["terms"]:
        terms[entry["name"]] = TFN(*entry["tfn"])
        reciprocals[entry["name"]] = entry["reciprocal"]
    return LinguisticScale(terms=terms, reciprocals=reciprocals)


def _parse_cell(raw, scale: LinguisticScale, node_id: str, pos, repair: bool,
                repair_log: list[dict]) -> TFN:
    if isinstance(raw, str):
        if raw.startswith("~"):
            return scale.tfn(raw[1:], reciprocal=True)
        return scale.tfn(raw)
    if isinstance(raw, dict):
        return scale.tfn(raw["term"], reciprocal=bool(raw.get("reciprocal")))
    if isinstance(raw, list) and len(raw) == 3:
        triple = tuple(float(x) for x in raw)
        if repair and triple == TYPO_TRIPLE:
            repair_log.append(
                {"node": node_id, "cell": list(pos),
                 "from": list(triple), "to": list(REPAIRED_TRIPLE)}
            )
            triple = REPAIRED_TRIPLE
        try:
            return TFN(*triple)
        except ValueError as exc:
            raise ValidationError(str(exc), node=node_id, cell=pos) from exc
    raise ValidationError(
        f"cell must be [l,m,u], a term name, or a term object, got {raw!r}",
        node=node_id, cell=pos,
    )


def _parse_grid(raw_cells, items, scale, node_id, repair, repair_log) -> JudgmentMatrix:
    n = len(items)
    if len(raw_cells) != n or any(len(r) != n for r in raw_cells):
        raise ValidationError(
            f"judgment grid at {node_id!r} must be {n}x{n}", node=node_id
        )
    cells = [
        [
            _parse_cell(raw_cells[i][j], scale, node_id, (i, j), repair, repair_log)
            for j in range(n)
        ]
        for i in range(n)
    ]
    try:
        return JudgmentMatrix(items=list(items), cells=cells)
    except ValidationError as exc:
        exc.node = node_id
        raise


def _parse_node(raw: dict) -> Node:
    return Node(
        id=raw["id"],
        label=raw.get("label", raw["id"]),
        children=[_parse_node(c) for c in raw.get("children", [])],
    )


def load_project(path, strict: bool | None = None) -> ProjectFile:
    """Load and fully validate a project file.

    strict=True forces typo repair off, strict=False forces it on,
    None defers to the file's own options.
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(
            f"{path}: {exc.msg}", line=exc.lineno, column=exc.colno
        ) from exc
    return parse_project(doc, strict=strict)


def parse_project(doc: dict, strict: bool | None = None) -> ProjectFile:
    if not isinstance(doc, dict) or "hierarchy" not in doc:
        raise ValidationError("project document must contain a 'hierarchy'")
    opts_raw = doc.get("options", {})
    ri = opts_raw.get("ri_table")
    options = ProjectOptions(
        method=opts_raw.get("method", "extent"),
        cr_threshold=float(opts_raw.get("cr_threshold", 0.10)),
        repair_paper_typos=bool(opts_raw.get("repair_paper_typos", False)),
        ri_table={int(k): float(v) for k, v in ri.items()} if ri else None,
    )
    if strict is True:
        options.repair_paper_typos = False
    elif strict is False:
        options.repair_paper_typos = True
    if options.method not in ("extent", "colnorm"):
        raise ValidationError(f"unknown method {options.method!r}")

    scale = _parse_scale(doc.get("scale"))
    repair_log: list[dict] = []

    root = _parse_node(doc["hierarchy"]["root"])
    hierarchy = DecisionHierarchy(goal=doc["hierarchy"].get("goal", "goal"), root=root)

    judgments = doc.get("judgments", {})
    known_ids = {n.id for n in hierarchy.nodes()}
    for node_id in judgments:
        if node_id not in known_ids:
            raise ValidationError(
                f"judgment references unknown node {node_id!r}", node=node_id
            )
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ReciprocityWarning)
        for node in hierarchy.nodes():
            raw_j = judgments.get(node.id)
            if raw_j is None:
                continue
            if node.is_leaf:
                raise ValidationError(
                    f"leaf node {node.id!r} cannot carry judgments", node=node.id
                )
            items = node.child_ids()
            kinds = [k for k in ("cells", "experts", "row_sums", "weights") if k in raw_j]
            if not kinds:
                raise ValidationError(
                    f"judgment at {node.id!r} has no recognized payload", node=node.id
                )
            if "cells" in raw_j:
                node.matrix = _parse_grid(
                    raw_j["cells"], items, scale, node.id,
                    options.repair_paper_typos, repair_log,
                )
            if "experts" in raw_j:
                expert_ids = sorted(raw_j["experts"])
                matrices = [
                    _parse_grid(raw_j["experts"][eid], items, scale,
                                f"{node.id}/{eid}", options.repair_paper_typos,
                                repair_log)
                    for eid in expert_ids
                ]
                node.experts = ExpertResponseSet(expert_ids=expert_ids, matrices=matrices)
            if "row_sums" in raw_j:
                if len(raw_j["row_sums"]) != len(items):
                    raise ValidationError(
                        f"row_sums at {node.id!r} must have {len(items)} entries",
                        node=node.id,
                    )
                node.row_sums = [TFN(*t) for t in raw_j["row_sums"]]
            if "weights" in raw_j:
                w = {str(k): float(v) for k, v in raw_j["weights"].items()}
                if set(w) != set(items):
                    raise ValidationError(
                        f"weights at {node.id!r} must cover exactly its children",
                        node=node.id,
                    )
                node.weights = w

    for node in hierarchy.nodes():
        if not node.is_leaf and all(
            x is None for x in (node.matrix, node.experts, node.row_sums, node.weights)
        ):
            raise ValidationError(
                f"non-leaf node {node.id!r} has no judgment data", node=node.id
            )

    surveys = [
        LikertTally(
            item_id=t["id"],
            strongly_agree=int(t["strongly_agree"]),
            agree=int(t["agree"]),
            disagree=int(t["disagree"]),
            strongly_disagree=int(t["strongly_disagree"]),
            neutral=int(t["neutral"]),
            total=int(t["total"]),
        )
        for t in doc.get("surveys", [])
    ]

    return ProjectFile(
        name=doc.get("name", "unnamed"),
        scale=scale,
        hierarchy=hierarchy,
        options=options,
        surveys=surveys,
        repair_log=repair_log,
        raw=doc,
    )


def _node_to_dict(node: Node) -> dict:
    out = {"id": node.id, "label": node.label}
    if node.children:
        out["children"] = [_node_to_dict(c) for c in node.children]
    return out


def render_project(project: ProjectFile) -> str:
    """Serialize a project back to JSON (raw TFN triples throughout)."""
    judgments: dict[str, dict] = {}
    for node in project.hierarchy.nodes():
        entry: dict = {}
        if node.matrix is not None:
            entry["cells"] = [
                [list(c.as_tuple()) for c in row] for row in node.matrix.cells
            ]
        if node.experts is not None:
            entry["experts"] = {
                eid: [[list(c.as_tuple()) for c in row] for row in m.cells]
                for eid, m in zip(node.experts.expert_ids, node.experts.matrices)
            }
        if node.row_sums is not None:
            entry["row_sums"] = [list(t.as_tuple()) for t in node.row_sums]
        if node.weights is not None:
            entry["weights"] = dict(node.weights)
        if entry:
            judgments[node.id] = entry
    doc = {
        "name": project.name,
        "options": {
            "method": project.options.method,
            "cr_threshold": project.options.cr_threshold,
            "repair_paper_typos": project.options.repair_paper_typos,
        },
        "scale": {
            "terms": [
                {
                    "name": name,
                    "tfn": list(tfn.as_tuple()),
                    "reciprocal": project.scale.reciprocals[name],
                }
                for name, tfn in project.scale.terms.items()
            ]
        },
        "hierarchy": {
            "goal": project.hierarchy.goal,
            "root": _node_to_dict(project.hierarchy.root),
        },
        "judgments": judgments,
    }
    if project.options.ri_table:
        doc["options"]["ri_table"] = {
            str(k): v for k, v in project.options.ri_table.items()
        }
    if project.surveys:
        doc["surveys"] = [
            {
                "id": t.item_id,
                "strongly_agree": t.strongly_agree,
                "agree": t.agree,
                "disagree": t.disagree,
                "strongly_disagree": t.strongly_disagree,
                "neutral": t.neutral,
                "total": t.total,
            }
            for t in project.surveys
        ]
    return json.dumps(doc, indent=2)


def parse_project_text(text: str, strict: bool | None = None) -> ProjectFile:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno, column=exc.colno) from exc
    return parse_project(doc, strict=strict)
