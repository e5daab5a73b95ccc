"""Local HTTP service exposing the engine to the companion UI.

Every response carries a monotonically increasing revision counter so the
UI can detect stale state. Mutations are serialized through a lock; reads
see consistent snapshots.
"""

from __future__ import annotations

import copy
import threading
import warnings

from fastapi import FastAPI, HTTPException, Query
from pydantic import BaseModel

from . import consistency as cons
from . import hierarchy as hier
from .errors import FahpError, UnknownTerm
from .project import ProjectFile
from .tfn import TFN


class JudgmentBody(BaseModel):
    node: str
    i: int
    j: int
    term: str | None = None
    tfn: list[float] | None = None


class WhatIfBody(BaseModel):
    overrides: list[JudgmentBody] = []
    method: str | None = None


class Session:
    def __init__(self, project: ProjectFile):
        self.project = project
        self.pristine = copy.deepcopy(project.hierarchy)
        self.hierarchy = copy.deepcopy(project.hierarchy)
        self.revision = 1
        self.lock = threading.Lock()

    def bump(self) -> int:
        self.revision += 1
        return self.revision


def _node_tree(node: hier.Node) -> dict:
    out: dict = {"id": node.id, "label": node.label}
    if not node.is_leaf:
        out["children"] = [_node_tree(c) for c in node.children]
        out["has_matrix"] = node.matrix is not None or node.experts is not None
        out["has_weights"] = node.weights is not None
        out["items"] = node.child_ids()
    return out


def _apply_judgment(hierarchy: hier.DecisionHierarchy, body: JudgmentBody,
                    project: ProjectFile) -> tuple[TFN, TFN]:
    try:
        node = hierarchy.find(body.node)
    except KeyError:
        raise HTTPException(status_code=404, detail=f"unknown node {body.node!r}")
    if node.is_leaf:
        raise HTTPException(status_code=400, detail=f"{body.node!r} is a leaf")
    if node.matrix is None:
        raise HTTPException(
            status_code=400,
            detail=f"{body.node!r} has no editable judgment matrix",
        )
    n = node.matrix.n
    if not (0 <= body.i < n and 0 <= body.j < n) or body.i == body.j:
        raise HTTPException(status_code=400, detail="cell indices out of range")
    if body.term is not None:
        try:
            cell = project.scale.tfn(body.term)
            mirror = project.scale.tfn(body.term, reciprocal=True)
        except UnknownTerm as exc:
            raise HTTPException(status_code=400, detail=str(exc))
    elif body.tfn is not None:
        if len(body.tfn) != 3:
            raise HTTPException(status_code=400, detail="tfn must be [l, m, u]")
        try:
            cell = TFN(*body.tfn)
            mirror = cell.inverse()
        except (ValueError, FahpError) as exc:
            raise HTTPException(status_code=400, detail=str(exc))
    else:
        raise HTTPException(status_code=400, detail="provide term or tfn")
    node.matrix.replace_cell(body.i, body.j, cell)
    node.matrix.replace_cell(body.j, body.i, mirror)
    return cell, mirror


def create_app(project: ProjectFile) -> FastAPI:
    app = FastAPI(title="fahp engine", version="0.1.0")
    session = Session(project)
    threshold = cons.cr_threshold_from_env(project.options.cr_threshold)
    ri = cons.ri_table_from_env() or project.options.ri_table

    def _rank(hierarchy, method):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            return hier.evaluate(
                hierarchy, method=method or project.options.method,
                ri_table=ri, cr_threshold=threshold,
            )

    @app.get("/hierarchy")
    def get_hierarchy():
        with session.lock:
            return {
                "goal": session.hierarchy.goal,
                "root": _node_tree(session.hierarchy.root),
                "revision": session.revision,
            }

    @app.get("/scale")
    def get_scale():
        return {
            "terms": [
                {
                    "name": name,
                    "tfn": list(t.as_tuple()),
                    "reciprocal": project.scale.reciprocals[name],
                }
                for name, t in project.scale.terms.items()
            ],
            "identity": project.scale.identity_term,
            "revision": session.revision,
        }

    @app.put("/judgment")
    def put_judgment(body: JudgmentBody):
        with session.lock:
            cell, mirror = _apply_judgment(session.hierarchy, body, project)
            revision = session.bump()
        return {
            "node": body.node,
            "i": body.i,
            "j": body.j,
            "cell": list(cell.as_tuple()),
            "mirror": list(mirror.as_tuple()),
            "revision": revision,
        }

    @app.get("/consistency")
    def get_consistency(node: str = Query(...)):
        with session.lock:
            try:
                target = session.hierarchy.find(node)
            except KeyError:
                raise HTTPException(status_code=404, detail=f"unknown node {node!r}")
            matrix = target.matrix
            if matrix is None and target.experts is not None:
                from .aggregation import aggregate_matrices

                matrix = aggregate_matrices(target.experts)
            if matrix is None:
                raise HTTPException(
                    status_code=400, detail=f"{node!r} has no judgment matrix"
                )
            report = cons.check(matrix, ri_table=ri, threshold=threshold)
            out = report.to_dict()
            out["node"] = node
            out["items"] = matrix.items
            out["threshold"] = threshold
            out["revision"] = session.revision
        return out

    @app.get("/rank")
    def get_rank(method: str | None = Query(default=None)):
        if method is not None and method not in ("extent", "colnorm"):
            raise HTTPException(status_code=400, detail=f"unknown method {method!r}")
        with session.lock:
            try:
                report = _rank(session.hierarchy, method)
            except FahpError as exc:
                raise HTTPException(status_code=422, detail=str(exc))
            out = report.to_dict()
            out["revision"] = session.revision
        return out

    @app.post("/whatif")
    def post_whatif(body: WhatIfBody):
        if body.method is not None and body.method not in ("extent", "colnorm"):
            raise HTTPException(status_code=400,
                                detail=f"unknown method {body.method!r}")
        with session.lock:
            snapshot = copy.deepcopy(session.hierarchy)
            revision = session.revision
        for override in body.overrides:
            _apply_judgment(snapshot, override, project)
        try:
            report = _rank(snapshot, body.method)
        except FahpError as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        out = report.to_dict()
        out["revision"] = revision
        out["transient"] = True
        return out

    @app.post("/session/reset")
    def reset_session():
        with session.lock:
            session.hierarchy = copy.deepcopy(session.pristine)
            revision = session.bump()
        return {"revision": revision}

    return app
