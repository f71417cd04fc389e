"""Facet colourings of quadrilateral-norm frameworks and the combinatorial
rigidity criteria they induce.

Every well-positioned edge orbit has a unique facet cone (up to central
symmetry), giving a 2-colouring of the quotient edges.  The geometric
verdicts are structural tests on the two monochrome edge classes:

  character-0 isostatic  <=>  both classes are spanning unbalanced map
                              graphs (every component has exactly one cycle,
                              and that cycle is unbalanced);
  character-1 isostatic  <=>  both classes are spanning trees;
  infinitesimally rigid  <=>  both classes are spanning, connected, and
                              contain an unbalanced cycle (such a class
                              always contains a spanning connected
                              unbalanced map subgraph).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Edge, GainGraph
from .norms import PolyhedralNorm
from .rigidity import Framework, FrameworkError, NotWellPositioned


@dataclass(frozen=True)
class ColouredQuotient:
    """Partition of the quotient edges by facet index (0 and 1)."""

    classes: tuple[tuple[Edge, ...], tuple[Edge, ...]]

    def label(self, e: Edge) -> int:
        return 0 if e in self.classes[0] else 1


def edge_colour(fw: Framework, e: Edge) -> int:
    """Facet index (0 or 1) of the cone containing the edge's direction."""
    if not isinstance(fw.norm, PolyhedralNorm):
        raise FrameworkError("colouring requires a quadrilateral norm")
    try:
        idx, _sign = fw.norm.facet_of(fw.edge_delta(e))
    except Exception as exc:
        raise NotWellPositioned(f"edge {e.as_list()}: {exc}") from exc
    return idx


def monochrome_quotients(fw: Framework) -> ColouredQuotient:
    parts: tuple[list[Edge], list[Edge]] = ([], [])
    for e in fw.graph.edges:
        parts[edge_colour(fw, e)].append(e)
    return ColouredQuotient((tuple(parts[0]), tuple(parts[1])))


def _component_partition(
    n: int, edges: Sequence[Edge]
) -> list[tuple[list[int], list[Edge]]]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in edges:
        parent[find(e.u)] = find(e.v)
    comp_v: dict[int, list[int]] = {}
    for v in range(n):
        comp_v.setdefault(find(v), []).append(v)
    comp_e: dict[int, list[Edge]] = {r: [] for r in comp_v}
    for e in edges:
        comp_e[find(e.u)].append(e)
    return [(comp_v[r], comp_e[r]) for r in sorted(comp_v)]


def _has_unbalanced_cycle(g: GainGraph, vertices: Sequence[int], edges: Sequence[Edge]) -> bool:
    """The edge set (known connected on `vertices`) supports an unbalanced
    cycle iff no switching makes all its edges gain +1."""
    sub = GainGraph.from_triples(
        len(vertices),
        [
            [vertices.index(e.u), vertices.index(e.v), e.gain]
            for e in edges
        ],
    )
    return not sub.is_balanced()


def is_unbalanced_map_graph(
    g: GainGraph, subset: Sequence[Edge], spanning: bool = True
) -> bool:
    """Every component has edge count equal to vertex count with its unique
    cycle unbalanced; with `spanning`, the subset must also touch every
    vertex of g (isolated vertices then fail the cycle condition)."""
    edges = list(subset)
    if spanning:
        comps = _component_partition(g.n, edges)
    else:
        support = sorted({v for e in edges for v in (e.u, e.v)})
        comps = [
            c for c in _component_partition(g.n, edges) if c[0][0] in support
        ]
    for verts, es in comps:
        if len(es) != len(verts):
            return False
        if not _has_unbalanced_cycle(g, verts, es):
            return False
    return True


def _is_spanning_tree(n: int, edges: Sequence[Edge]) -> bool:
    if len(edges) != n - 1 or any(e.is_loop() for e in edges):
        return False
    comps = _component_partition(n, edges)
    return len(comps) == 1


def _spanning_connected_unbalanced(g: GainGraph, edges: Sequence[Edge]) -> bool:
    comps = _component_partition(g.n, edges)
    if len(comps) != 1:
        return False
    verts, es = comps[0]
    return len(es) >= len(verts) and _has_unbalanced_cycle(g, verts, es)


@dataclass(frozen=True)
class GeometricVerdict:
    colouring: ColouredQuotient
    chi0_isostatic: bool
    chi1_isostatic: bool
    infinitesimally_rigid: bool


def geometric_verdict(fw: Framework) -> GeometricVerdict:
    if fw.group_order != 2:
        raise FrameworkError("colouring verdicts require a half-turn symmetry")
    col = monochrome_quotients(fw)
    g = fw.graph
    c0, c1 = col.classes
    chi0 = is_unbalanced_map_graph(g, c0) and is_unbalanced_map_graph(g, c1)
    chi1 = _is_spanning_tree(g.n, c0) and _is_spanning_tree(g.n, c1)
    rigid = _spanning_connected_unbalanced(g, c0) and _spanning_connected_unbalanced(g, c1)
    return GeometricVerdict(col, chi0, chi1, rigid)
