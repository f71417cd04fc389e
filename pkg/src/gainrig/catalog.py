"""The eight base gain graphs of the (2,2,0) inductive construction.

Fixed members:
  a — two vertices joined by a parallel pair (gains +-1), a loop on each;
  b — balanced triangle (all gains +1) with a loop on every vertex;
  c — doubled triangle minus one edge not at the loop vertex, plus that loop;
  d..h — balanced K4 (all gains +1) plus two extra unbalanced edges.

The d..h members are not transcribed from pictures: every way of adding two
extra edges (a parallel gain -1 edge on one of the six pairs, or a gain -1
loop) to the balanced K4 is enumerated, filtered by (2,2,0)-gain-tightness,
and deduplicated up to gain-graph isomorphism; exactly five classes survive.
"""

from __future__ import annotations

from itertools import combinations
from typing import Optional

from .graph import GainGraph, edge
from .iso import are_isomorphic
from .sparsity import SparsityParams, check_tight

PARAMS_220 = SparsityParams(2, 2, 0)
PARAMS_222 = SparsityParams(2, 2, 2)

K1 = GainGraph(1, ())

BALANCED_K4 = GainGraph.from_triples(
    4, [(i, j, 1) for i, j in combinations(range(4), 2)]
)


def _k4_plus_two() -> list[GainGraph]:
    """All tight balanced-K4-plus-two-edges graphs, one per isomorphism class."""
    extras = [edge(i, j, -1) for i, j in combinations(range(4), 2)]
    extras += [edge(i, i, -1) for i in range(4)]
    classes: list[GainGraph] = []
    for e1, e2 in combinations(extras, 2):
        g = GainGraph(4, BALANCED_K4.edges + (e1, e2))
        if not check_tight(g, PARAMS_220):
            continue
        if any(are_isomorphic(g, h) for h in classes):
            continue
        classes.append(g)
    # Deterministic naming order: by sorted edge triples of the representative.
    classes.sort(key=lambda g: g.triples())
    return classes


def _build_catalog() -> dict[str, GainGraph]:
    cat = {
        "a": GainGraph.from_triples(
            2, [(0, 1, 1), (0, 1, -1), (0, 0, -1), (1, 1, -1)]
        ),
        "b": GainGraph.from_triples(
            3,
            [(0, 1, 1), (0, 2, 1), (1, 2, 1), (0, 0, -1), (1, 1, -1), (2, 2, -1)],
        ),
        "c": GainGraph.from_triples(
            3,
            [(0, 1, 1), (0, 1, -1), (0, 2, 1), (0, 2, -1), (1, 2, 1), (0, 0, -1)],
        ),
    }
    for name, g in zip("defgh", _k4_plus_two()):
        cat[name] = g
    return cat


BASE_CATALOG: dict[str, GainGraph] = _build_catalog()

assert len(BASE_CATALOG) == 8, "expected exactly 8 base graphs"
assert all(check_tight(g, PARAMS_220) for g in BASE_CATALOG.values())


def is_base_graph(g: GainGraph) -> Optional[str]:
    """Catalog id of the member isomorphic to g (switching + relabelling)."""
    for name, member in BASE_CATALOG.items():
        if g.n == member.n and len(g.edges) == len(member.edges):
            if are_isomorphic(g, member):
                return name
    return None


def graph_for_base_id(base_id: str) -> GainGraph:
    """Catalog member, or K1 for the (2,2,2) seed id 'k1'."""
    if base_id == "k1":
        return K1
    return BASE_CATALOG[base_id]
