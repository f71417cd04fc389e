"""Z2-gain graphs: validity, switching, balance, covering graphs.

A gain graph here is a finite multigraph on vertices 0..n-1 whose edges carry
a gain in {+1, -1}.  Loops must have gain -1, and no two parallel edges may
share a gain, so the two-fold covering graph is always simple.  An edge is
identified by its normalised triple (u, v, gain) with u <= v; by the validity
invariants this triple is unique within a graph and doubles as the edge's id.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence


class GainGraphError(ValueError):
    """Base error for malformed gain graphs."""


class GainOneLoop(GainGraphError):
    """A loop with gain +1 (covering graph would contain a loop)."""


class DuplicateParallelEdge(GainGraphError):
    """Two parallel edges with the same gain (covering graph not simple)."""


class BadVertexIndex(GainGraphError):
    """Edge endpoint outside 0..n-1."""


@dataclass(frozen=True, order=True)
class Edge:
    """Undirected gain edge, normalised so u <= v; loops have u == v."""

    u: int
    v: int
    gain: int

    def is_loop(self) -> bool:
        return self.u == self.v

    def other(self, w: int) -> int:
        """The endpoint opposite w (w itself for a loop)."""
        return self.v if w == self.u else self.u

    def touches(self, w: int) -> bool:
        return w == self.u or w == self.v

    def as_list(self) -> list[int]:
        return [self.u, self.v, self.gain]


def edge(u: int, v: int, gain: int) -> Edge:
    """Normalised edge constructor (sorts endpoints)."""
    if u > v:
        u, v = v, u
    return Edge(u, v, gain)


def validate_edges(n: int, edges: Iterable[Edge]) -> list[str]:
    """Diagnostics for the gain-graph invariants; empty list means valid."""
    problems: list[str] = []
    seen: set[Edge] = set()
    for e in edges:
        if not (0 <= e.u < n and 0 <= e.v < n):
            problems.append(f"BadVertexIndex: edge {e.as_list()} outside 0..{n - 1}")
            continue
        if e.gain not in (1, -1):
            problems.append(f"BadGain: edge {e.as_list()} gain must be +1 or -1")
            continue
        if e.is_loop() and e.gain == 1:
            problems.append(f"GainOneLoop: loop at {e.u} with gain +1")
            continue
        if e in seen:
            problems.append(f"DuplicateParallelEdge: edge {e.as_list()} repeated")
        seen.add(e)
    return problems


@dataclass(frozen=True)
class GainGraph:
    """Immutable Z2-gain graph; the constructor validates and raises."""

    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "edges", tuple(sorted(self.edges)))
        if self.n < 0:
            raise BadVertexIndex("vertex count must be non-negative")
        for problem in validate_edges(self.n, self.edges):
            kind = problem.split(":", 1)[0]
            exc = {
                "GainOneLoop": GainOneLoop,
                "DuplicateParallelEdge": DuplicateParallelEdge,
                "BadVertexIndex": BadVertexIndex,
            }.get(kind, GainGraphError)
            raise exc(problem)

    # -- construction helpers ------------------------------------------------

    @staticmethod
    def from_triples(n: int, triples: Iterable[Sequence[int]]) -> "GainGraph":
        return GainGraph(n, tuple(edge(u, v, g) for (u, v, g) in triples))

    def triples(self) -> list[list[int]]:
        return [e.as_list() for e in self.edges]

    def replace_edges(self, edges: Iterable[Edge]) -> "GainGraph":
        return GainGraph(self.n, tuple(edges))

    # -- local structure -----------------------------------------------------

    def has_edge(self, e: Edge) -> bool:
        return e in set(self.edges)

    def edges_at(self, v: int, include_loop: bool = True) -> list[Edge]:
        return [
            e
            for e in self.edges
            if e.touches(v) and (include_loop or not e.is_loop())
        ]

    def loop_at(self, v: int) -> Optional[Edge]:
        for e in self.edges:
            if e.u == v and e.v == v:
                return e
        return None

    def degree(self, v: int) -> int:
        """Loop counts 2 toward the degree."""
        return sum(2 if e.is_loop() else 1 for e in self.edges_at(v))

    def neighbours(self, v: int) -> list[int]:
        """Distinct neighbours via non-loop edges, sorted."""
        return sorted({e.other(v) for e in self.edges_at(v, include_loop=False)})

    def induced_edges(self, vertices: Iterable[int]) -> tuple[Edge, ...]:
        s = set(vertices)
        return tuple(e for e in self.edges if e.u in s and e.v in s)

    # -- switching -----------------------------------------------------------

    def switched(self, signs: Sequence[int]) -> "GainGraph":
        """Switch by a +-1 sign per vertex: non-loop gains pick up s_u * s_v."""
        if len(signs) != self.n or any(s not in (1, -1) for s in signs):
            raise BadVertexIndex("signs must assign +-1 to every vertex")
        new = []
        for e in self.edges:
            g = e.gain if e.is_loop() else e.gain * signs[e.u] * signs[e.v]
            new.append(edge(e.u, e.v, g))
        return GainGraph(self.n, tuple(new))

    def switch(self, v: int) -> "GainGraph":
        """Switch at a single vertex."""
        if not (0 <= v < self.n):
            raise BadVertexIndex(f"no vertex {v}")
        signs = [1] * self.n
        signs[v] = -1
        return self.switched(signs)

    # -- balance -------------------------------------------------------------

    def balance_potential(
        self, subset: Optional[Iterable[Edge]] = None
    ) -> Optional[list[int]]:
        """Signs s with gain(e) = s_u * s_v for every edge of the subset.

        Returns None if the subset is unbalanced (contains a loop or a cycle
        of gain -1).  Vertices not touched by the subset get sign +1.
        """
        edges = list(self.edges if subset is None else subset)
        for e in edges:
            if not self.has_edge(e):
                raise GainGraphError(f"unknown edge {e.as_list()}")
        if any(e.is_loop() for e in edges):
            return None
        signs = [0] * self.n
        adj: dict[int, list[Edge]] = {}
        for e in edges:
            adj.setdefault(e.u, []).append(e)
            adj.setdefault(e.v, []).append(e)
        for root in sorted(adj):
            if signs[root]:
                continue
            signs[root] = 1
            stack = [root]
            while stack:
                x = stack.pop()
                for e in adj[x]:
                    y = e.other(x)
                    want = e.gain * signs[x]
                    if signs[y] == 0:
                        signs[y] = want
                        stack.append(y)
                    elif signs[y] != want:
                        return None
        return [s if s else 1 for s in signs]

    def is_balanced(self, subset: Optional[Iterable[Edge]] = None) -> bool:
        """True iff every cycle of the subset (loops included) has gain +1."""
        return self.balance_potential(subset) is not None

    # -- covering graph ------------------------------------------------------

    def covering_graph(self) -> tuple[list[tuple[int, int]], list[frozenset]]:
        """Two-fold covering: vertices (v, 0|1); simple edge list.

        Edge (u,v,+1) lifts to {(u,0),(v,0)} and {(u,1),(v,1)};
        edge (u,v,-1) with u != v lifts to {(u,0),(v,1)} and {(u,1),(v,0)};
        a loop (v,v,-1) lifts to the single edge {(v,0),(v,1)}.
        """
        vertices = [(v, c) for v in range(self.n) for c in (0, 1)]
        lifted: list[frozenset] = []
        for e in self.edges:
            if e.is_loop():
                lifted.append(frozenset({(e.u, 0), (e.u, 1)}))
            elif e.gain == 1:
                lifted.append(frozenset({(e.u, 0), (e.v, 0)}))
                lifted.append(frozenset({(e.u, 1), (e.v, 1)}))
            else:
                lifted.append(frozenset({(e.u, 0), (e.v, 1)}))
                lifted.append(frozenset({(e.u, 1), (e.v, 0)}))
        assert len(set(lifted)) == len(lifted), "covering graph not simple"
        return vertices, lifted

    # -- global structure ----------------------------------------------------

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists (isolated included)."""
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in self.edges:
            ru, rv = find(e.u), find(e.v)
            if ru != rv:
                parent[ru] = rv
        groups: dict[int, list[int]] = {}
        for v in range(self.n):
            groups.setdefault(find(v), []).append(v)
        return sorted((sorted(g) for g in groups.values()), key=lambda g: g[0])

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def relabelled(self, pi: Sequence[int]) -> "GainGraph":
        """Image under the vertex bijection old -> pi[old]."""
        if sorted(pi) != list(range(self.n)):
            raise BadVertexIndex("pi must be a permutation of the vertices")
        return GainGraph(
            self.n, tuple(edge(pi[e.u], pi[e.v], e.gain) for e in self.edges)
        )

    def subgraph(self, vertices: Sequence[int]) -> "GainGraph":
        """Induced subgraph on the given vertices, relabelled 0..k-1."""
        order = {v: i for i, v in enumerate(sorted(set(vertices)))}
        return GainGraph(
            len(order),
            tuple(
                edge(order[e.u], order[e.v], e.gain)
                for e in self.induced_edges(order)
            ),
        )

    def union(self, other: "GainGraph") -> "GainGraph":
        """Vertex-disjoint union; other's vertices are shifted by self.n."""
        shifted = tuple(
            edge(e.u + self.n, e.v + self.n, e.gain) for e in other.edges
        )
        return GainGraph(self.n + other.n, self.edges + shifted)


def disjoint_union(graphs: Sequence[GainGraph]) -> GainGraph:
    out = GainGraph(0, ())
    for g in graphs:
        out = out.union(g)
    return out


def all_vertex_subsets(n: int) -> Iterator[tuple[int, ...]]:
    """Nonempty vertex subsets, ascending by size then lexicographic."""
    for size in range(1, n + 1):
        yield from combinations(range(n), size)
