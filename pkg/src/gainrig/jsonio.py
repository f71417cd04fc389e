"""JSON (de)serialisation for graphs, frameworks, moves and sequences.

Formats:
  graph      {"n": int, "edges": [[u, v, gain], ...]}
  framework  graph fields plus "positions": [[x, y], ...] (rationals as
             "p/q" strings, integers, or decimals), "group": {"n": int},
             "norm": "linf" | "l1" | {"p": num} | {"facets": [[a,b],[c,d]]}
  sequence   {"counts": [k, l, m], "initial": [base ids], "steps": [moves]}
  move       {"kind": ..., plus only the parameters the kind uses}
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .graph import Edge, GainGraph, edge
from .moves import Move
from .norms import L1, LINF, LpNorm, Norm, PolyhedralNorm
from .rigidity import Framework
from .sparsity import SparsityParams


class FormatError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Rationals.
# ---------------------------------------------------------------------------


def parse_rational(x: Any) -> Fraction:
    if isinstance(x, bool):
        raise FormatError(f"not a number: {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        return Fraction(str(x))
    if isinstance(x, str):
        try:
            return Fraction(x)
        except (ValueError, ZeroDivisionError) as exc:
            raise FormatError(f"bad rational {x!r}: {exc}") from exc
    raise FormatError(f"bad rational {x!r}")


def dump_rational(x) -> Any:
    f = Fraction(x)
    return int(f) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


# ---------------------------------------------------------------------------
# Graphs.
# ---------------------------------------------------------------------------


def graph_to_dict(g: GainGraph) -> dict:
    return {"n": g.n, "edges": g.triples()}


def graph_from_dict(d: dict) -> GainGraph:
    try:
        n = d["n"]
        edges = d["edges"]
    except (KeyError, TypeError) as exc:
        raise FormatError(f"graph needs 'n' and 'edges': {exc}") from exc
    if not isinstance(n, int) or not isinstance(edges, list):
        raise FormatError("'n' must be an integer and 'edges' a list")
    for t in edges:
        if not (isinstance(t, list) and len(t) == 3
                and all(isinstance(c, int) for c in t)):
            raise FormatError(f"edge entries must be [u, v, gain]: {t!r}")
    return GainGraph.from_triples(n, edges)


# ---------------------------------------------------------------------------
# Norms and frameworks.
# ---------------------------------------------------------------------------


def norm_from_json(desc: Any) -> Norm:
    if desc == "linf":
        return LINF
    if desc == "l1":
        return L1
    if isinstance(desc, dict) and "p" in desc:
        return LpNorm(float(desc["p"]))
    if isinstance(desc, dict) and "facets" in desc:
        facets = desc["facets"]
        if not (isinstance(facets, list) and len(facets) == 2):
            raise FormatError("'facets' must list two covectors")
        return PolyhedralNorm(
            tuple(
                tuple(parse_rational(c) for c in f) for f in facets
            )
        )
    raise FormatError(f"unknown norm descriptor {desc!r}")


def norm_to_json(norm: Norm) -> Any:
    if norm == LINF:
        return "linf"
    if norm == L1:
        return "l1"
    if isinstance(norm, LpNorm):
        return {"p": norm.p}
    return {"facets": [[dump_rational(c) for c in f] for f in norm.facets]}


def framework_to_dict(fw: Framework) -> dict:
    d = graph_to_dict(fw.graph)
    d["positions"] = [
        [dump_rational(c) for c in p] for p in fw.positions
    ]
    d["group"] = {"n": fw.group_order}
    d["norm"] = norm_to_json(fw.norm)
    return d


def framework_from_dict(d: dict) -> Framework:
    g = graph_from_dict(d)
    try:
        raw = d["positions"]
    except KeyError as exc:
        raise FormatError("framework needs 'positions'") from exc
    positions = tuple(
        tuple(parse_rational(c) for c in p) for p in raw
    )
    group = d.get("group", {"n": 2})
    order = group.get("n", 2) if isinstance(group, dict) else 2
    norm = norm_from_json(d.get("norm", "linf"))
    return Framework(g, positions, norm, order)


# ---------------------------------------------------------------------------
# Moves and sequences.
# ---------------------------------------------------------------------------


def move_to_dict(mv: Move) -> dict:
    d: dict = {"kind": mv.kind}
    if mv.vertices:
        d["vertices"] = list(mv.vertices)
    if mv.gains:
        d["gains"] = list(mv.gains)
    if mv.removed:
        d["removed"] = [e.as_list() for e in mv.removed]
    if mv.attach:
        d["attach"] = [[e.as_list(), idx] for e, idx in mv.attach]
    if mv.loop_attach is not None:
        d["loop_attach"] = list(mv.loop_attach)
    if mv.v2_edge is not None:
        d["v2_edge"] = mv.v2_edge.as_list()
    if mv.moved:
        d["moved"] = [e.as_list() for e in mv.moved]
    if mv.move_loop:
        d["move_loop"] = True
    return d


def _edge_from_list(t) -> Edge:
    if not (isinstance(t, list) and len(t) == 3):
        raise FormatError(f"bad edge {t!r}")
    return edge(*t)


def move_from_dict(d: dict) -> Move:
    try:
        kind = d["kind"]
    except (KeyError, TypeError) as exc:
        raise FormatError("move needs 'kind'") from exc
    return Move(
        kind=kind,
        vertices=tuple(d.get("vertices", ())),
        gains=tuple(d.get("gains", ())),
        removed=tuple(_edge_from_list(t) for t in d.get("removed", ())),
        attach=tuple(
            (_edge_from_list(t), idx) for t, idx in d.get("attach", ())
        ),
        loop_attach=(
            tuple(d["loop_attach"]) if d.get("loop_attach") is not None else None
        ),
        v2_edge=(
            _edge_from_list(d["v2_edge"]) if d.get("v2_edge") is not None else None
        ),
        moved=tuple(_edge_from_list(t) for t in d.get("moved", ())),
        move_loop=bool(d.get("move_loop", False)),
    )


def sequence_to_dict(seq) -> dict:
    return {
        "counts": list(seq.params.as_tuple()),
        "initial": list(seq.initial),
        "steps": [move_to_dict(m) for m in seq.steps],
    }


def sequence_from_dict(d: dict):
    from .construct import ConstructionSequence

    try:
        counts = d["counts"]
        initial = d["initial"]
        steps = d["steps"]
    except (KeyError, TypeError) as exc:
        raise FormatError(
            "sequence needs 'counts', 'initial' and 'steps'"
        ) from exc
    return ConstructionSequence(
        params=SparsityParams(*counts),
        initial=tuple(initial),
        steps=tuple(move_from_dict(m) for m in steps),
    )


# ---------------------------------------------------------------------------
# File helpers.
# ---------------------------------------------------------------------------


def load_json(path: str) -> Any:
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON at line {exc.lineno}") from exc


def save_json(path: str, obj: Any) -> None:
    with open(path, "w") as fh:
        json.dump(obj, fh, indent=2)
        fh.write("\n")
