"""The fourteen gain-tightness-preserving moves and their reverses.

Forward moves add one vertex (H1*, H2*, H3*, vertex split) or replace a
vertex by a K4 (vertex-to-K4).  Parameter conventions, with w the new vertex
(always the next free index; vertex-to-K4 first removes its vertex, then
appends four):

  H1a  vertices=(a, b)  gains=(ga, gb)            adds (a,w,ga), (b,w,gb); a != b
  H1b  vertices=(a,)                              adds (a,w,+1), (a,w,-1)
  H1c  vertices=(a,)    gains=(ga,)               adds (a,w,ga), loop (w,w,-1)
  H2a  removed=(e,)     vertices=(x, z) gains=(bx, dz)
       deletes e=(x,y,al); adds (x,w,bx), (y,w,al*bx), (z,w,dz); x,y,z distinct
  H2b  removed=(e,)     vertices=(x,)   gains=(d,)
       deletes e=(x,y,al), x != y; adds (x,w,+1), (x,w,-1), (y,w,d)
  H2c  removed=(loop,)  vertices=(y,)   gains=(d,)
       deletes loop (x,x,-1); adds (x,w,+1), (x,w,-1), (y,w,d); y != x
  H2d  removed=(e,)     vertices=(x,)   gains=(bx,)
       deletes e=(x,y,al), x != y; adds (x,w,bx), (y,w,al*bx), loop (w,w,-1)
  H2e  removed=(loop,)
       deletes loop (x,x,-1); adds (x,w,+1), (x,w,-1), loop (w,w,-1)
  H3a  removed=(e1,e2)  vertices=(x, z) gains=(gx, gz)
       deletes e1=(x,y,al), e2=(z,t,be), all endpoints distinct;
       adds (x,w,gx), (y,w,al*gx), (z,w,gz), (t,w,be*gz)
  H3b  removed=(e1,e2)  vertices=(y, x, t)
       deletes e1=(x,y,al), e2=(y,t,be) sharing exactly y;
       adds (x,w,al), (y,w,+1), (y,w,-1), (t,w,-be)
  H3c  removed=(loop,e2) vertices=(z,)  gains=(gz,)
       deletes loop (x,x,-1) and e2=(z,t,be) with x not in {z,t}, z != t;
       adds (x,w,+1), (x,w,-1), (z,w,gz), (t,w,be*gz)
  H3d  removed=(loop1,loop2)
       deletes loops at x and z, x != z; adds (x,w,+-1) and (z,w,+-1) pairs
  VertexToK4  vertices=(v,) attach=((edge, idx), ...) loop_attach=(i, j)|None
       removes v; appends a balanced K4 (gains +1) on the four new vertices;
       each non-loop edge (x,v,g) reattaches as (x, K4[idx], g); a loop at v
       becomes (K4[i], K4[j], -1), i == j allowed (a loop again)
  VertexSplit vertices=(v1,) v2_edge=e moved=(edges...) move_loop=bool
       e=(v1,v2,g); appends v0; every edge in moved (non-loop, at v1, != e)
       is re-ended from v1 to v0; adds (v0,v1,+1) and (v0,v2,g); a loop at v1
       optionally moves to v0.

A Reduction undoes a move: it stores the reduced graph, the forward Move (in
the reduced graph's labelling) that re-creates the input, and the exact
relabel+switch (pi, signs) with apply_iso(input, pi, signs) ==
apply_move(reduced, forward).  Admissibility is semantic: apply and re-check
tightness; the count is preserved by construction, so only the sparsity of
the reduced graph (restricted to subsets touching the re-added edges) is
re-checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional, Sequence

from .graph import Edge, GainGraph, GainGraphError, edge
from .iso import apply_iso, map_edge
from .sparsity import SparsityParams, check_sparsity

H_KINDS = (
    "H1a", "H1b", "H1c",
    "H2a", "H2b", "H2c", "H2d", "H2e",
    "H3a", "H3b", "H3c", "H3d",
)
ALL_KINDS = H_KINDS + ("VertexToK4", "VertexSplit")

# Move subset of the (2,2,2) characterisation.
KINDS_222 = ("H1a", "H1b", "H2a", "H2b", "VertexToK4", "VertexSplit")


class MoveError(ValueError):
    """Move parameters do not match the graph or violate a gain constraint."""


@dataclass(frozen=True)
class Move:
    kind: str
    vertices: tuple[int, ...] = ()
    gains: tuple[int, ...] = ()
    removed: tuple[Edge, ...] = ()
    attach: tuple[tuple[Edge, int], ...] = ()
    loop_attach: Optional[tuple[int, int]] = None
    v2_edge: Optional[Edge] = None
    moved: tuple[Edge, ...] = ()
    move_loop: bool = False


@dataclass(frozen=True)
class Reduction:
    kind: str
    vertex: int  # reduced vertex (or contracted representative) in the input
    reduced: GainGraph
    forward: Move
    pi: tuple[int, ...]
    signs: tuple[int, ...]
    new_edges: tuple[Edge, ...]  # edges of `reduced` absent from the input


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise MoveError(msg)


def _delete(edges: list[Edge], e: Edge) -> None:
    try:
        edges.remove(e)
    except ValueError:
        raise MoveError(f"edge {e.as_list()} not present") from None


def apply_move(g: GainGraph, mv: Move) -> GainGraph:
    """Forward application; raises MoveError on any constraint violation."""
    k = mv.kind
    _require(k in ALL_KINDS, f"unknown move kind {k}")
    edges = list(g.edges)
    w = g.n

    def check_vertex(v: int) -> None:
        _require(0 <= v < g.n, f"no vertex {v}")

    for v in mv.vertices:
        check_vertex(v)

    if k == "H1a":
        (a, b), (ga, gb) = mv.vertices, mv.gains
        _require(a != b, "H1a needs two distinct neighbours")
        edges += [edge(a, w, ga), edge(b, w, gb)]
    elif k == "H1b":
        (a,) = mv.vertices
        edges += [edge(a, w, 1), edge(a, w, -1)]
    elif k == "H1c":
        (a,), (ga,) = mv.vertices, mv.gains
        edges += [edge(a, w, ga), edge(w, w, -1)]
    elif k == "H2a":
        (e,), (x, z), (bx, dz) = mv.removed, mv.vertices, mv.gains
        _require(not e.is_loop(), "H2a deletes a non-loop edge")
        _require(e.touches(x), "x must be an endpoint of the deleted edge")
        y = e.other(x)
        _require(len({x, y, z}) == 3, "H2a needs three distinct neighbours")
        _delete(edges, e)
        edges += [edge(x, w, bx), edge(y, w, e.gain * bx), edge(z, w, dz)]
    elif k == "H2b":
        (e,), (x,), (d,) = mv.removed, mv.vertices, mv.gains
        _require(not e.is_loop() and e.touches(x), "H2b deletes (x,y,al)")
        y = e.other(x)
        _delete(edges, e)
        edges += [edge(x, w, 1), edge(x, w, -1), edge(y, w, d)]
    elif k == "H2c":
        (e,), (y,), (d,) = mv.removed, mv.vertices, mv.gains
        _require(e.is_loop(), "H2c deletes a loop")
        _require(y != e.u, "H2c needs a second neighbour")
        _delete(edges, e)
        edges += [edge(e.u, w, 1), edge(e.u, w, -1), edge(y, w, d)]
    elif k == "H2d":
        (e,), (x,), (bx,) = mv.removed, mv.vertices, mv.gains
        _require(not e.is_loop() and e.touches(x), "H2d deletes (x,y,al)")
        y = e.other(x)
        _delete(edges, e)
        edges += [edge(x, w, bx), edge(y, w, e.gain * bx), edge(w, w, -1)]
    elif k == "H2e":
        (e,) = mv.removed
        _require(e.is_loop(), "H2e deletes a loop")
        _delete(edges, e)
        edges += [edge(e.u, w, 1), edge(e.u, w, -1), edge(w, w, -1)]
    elif k == "H3a":
        (e1, e2), (x, z), (gx, gz) = mv.removed, mv.vertices, mv.gains
        _require(not e1.is_loop() and not e2.is_loop(), "H3a deletes edges")
        _require(e1.touches(x) and e2.touches(z), "bad H3a anchors")
        y, t = e1.other(x), e2.other(z)
        _require(len({x, y, z, t}) == 4, "H3a needs four distinct neighbours")
        _delete(edges, e1)
        _delete(edges, e2)
        edges += [
            edge(x, w, gx),
            edge(y, w, e1.gain * gx),
            edge(z, w, gz),
            edge(t, w, e2.gain * gz),
        ]
    elif k == "H3b":
        (e1, e2), (y, x, t) = mv.removed, mv.vertices
        _require(not e1.is_loop() and not e2.is_loop(), "H3b deletes edges")
        _require(
            e1.touches(y) and e1.other(y) == x and e2.touches(y)
            and e2.other(y) == t,
            "H3b edges must share exactly the pivot vertex",
        )
        _require(len({x, y, t}) == 3, "H3b needs three distinct neighbours")
        _delete(edges, e1)
        _delete(edges, e2)
        edges += [
            edge(x, w, e1.gain),
            edge(y, w, 1),
            edge(y, w, -1),
            edge(t, w, -e2.gain),
        ]
    elif k == "H3c":
        (e1, e2), (z,), (gz,) = mv.removed, mv.vertices, mv.gains
        _require(e1.is_loop() and not e2.is_loop(), "H3c deletes loop + edge")
        _require(e2.touches(z), "bad H3c anchor")
        t = e2.other(z)
        _require(e1.u not in (z, t), "H3c loop vertex must be separate")
        _delete(edges, e1)
        _delete(edges, e2)
        edges += [
            edge(e1.u, w, 1),
            edge(e1.u, w, -1),
            edge(z, w, gz),
            edge(t, w, e2.gain * gz),
        ]
    elif k == "H3d":
        (e1, e2) = mv.removed
        _require(e1.is_loop() and e2.is_loop() and e1.u != e2.u, "H3d loops")
        _delete(edges, e1)
        _delete(edges, e2)
        edges += [
            edge(e1.u, w, 1),
            edge(e1.u, w, -1),
            edge(e2.u, w, 1),
            edge(e2.u, w, -1),
        ]
    elif k == "VertexToK4":
        return _apply_vertex_to_k4(g, mv)
    elif k == "VertexSplit":
        return _apply_vertex_split(g, mv)

    try:
        return GainGraph(g.n + 1, tuple(edges))
    except GainGraphError as exc:
        raise MoveError(f"result invalid: {exc}") from exc


def _apply_vertex_to_k4(g: GainGraph, mv: Move) -> GainGraph:
    (v,) = mv.vertices
    incident = g.edges_at(v, include_loop=False)
    loop = g.loop_at(v)
    attach = dict(mv.attach)
    _require(
        sorted(attach) == sorted(incident) and len(attach) == len(incident),
        "attach must map each non-loop incident edge exactly once",
    )
    _require(all(0 <= i < 4 for i in attach.values()), "attach index in 0..3")
    if loop is not None:
        _require(mv.loop_attach is not None, "loop present: need loop_attach")
    else:
        _require(mv.loop_attach is None, "no loop to reattach")

    def renum(u: int) -> int:
        return u if u < v else u - 1

    m = g.n - 1  # first K4 vertex index after removing v
    edges = [
        edge(renum(e.u), renum(e.v), e.gain)
        for e in g.edges
        if not e.touches(v)
    ]
    edges += [edge(m + i, m + j, 1) for i, j in combinations(range(4), 2)]
    for e, idx in sorted(attach.items()):
        x = e.other(v)
        edges.append(edge(renum(x), m + idx, e.gain))
    if loop is not None:
        i, j = mv.loop_attach
        _require(0 <= i < 4 and 0 <= j < 4, "loop_attach index in 0..3")
        edges.append(edge(m + i, m + j, -1))
    try:
        return GainGraph(g.n + 3, tuple(edges))
    except GainGraphError as exc:
        raise MoveError(f"result invalid: {exc}") from exc


def _apply_vertex_split(g: GainGraph, mv: Move) -> GainGraph:
    (v1,) = mv.vertices
    e12 = mv.v2_edge
    _require(e12 is not None and not e12.is_loop() and e12.touches(v1),
             "v2_edge must be a non-loop edge at v1")
    _require(g.has_edge(e12), "v2_edge not present")
    v2 = e12.other(v1)
    moved = list(mv.moved)
    _require(e12 not in moved, "v2_edge cannot be moved")
    _require(
        all(m.touches(v1) and not m.is_loop() for m in moved),
        "moved edges must be non-loop edges at v1",
    )
    _require(len(set(moved)) == len(moved), "moved edges repeated")
    v0 = g.n
    edges = list(g.edges)
    for mvd in moved:
        _delete(edges, mvd)
        edges.append(edge(mvd.other(v1), v0, mvd.gain))
    if mv.move_loop:
        loop = g.loop_at(v1)
        _require(loop is not None, "move_loop set but v1 has no loop")
        _delete(edges, loop)
        edges.append(edge(v0, v0, -1))
    edges += [edge(v0, v1, 1), edge(v0, v2, e12.gain)]
    try:
        return GainGraph(g.n + 1, tuple(edges))
    except GainGraphError as exc:
        raise MoveError(f"result invalid: {exc}") from exc


# ---------------------------------------------------------------------------
# Isomorphism translation: image of a move under a relabel+switch.
# ---------------------------------------------------------------------------


def translate_move(
    mv: Move, pi: Sequence[int], signs: Sequence[int]
) -> tuple[Move, tuple[int, ...]]:
    """Image of mv under (pi, signs), plus the switching signs of the vertices
    the translated move creates (so the isomorphism extends structurally).

    If h = apply_iso(g, pi, signs) and (mv2, new_signs) = translate_move(mv,
    pi, signs), then apply_move(h, mv2) == apply_iso(apply_move(g, mv),
    extended pi, signs + new_signs), where the extension sends each created
    vertex of the one side to the corresponding created vertex of the other.
    """
    k = mv.kind
    P = list(pi)
    S = list(signs)
    verts = tuple(P[v] for v in mv.vertices)
    rem = tuple(map_edge(e, P, S) for e in mv.removed)

    if k == "H1a":
        a, b = mv.vertices
        ga, gb = mv.gains
        return Move(k, vertices=verts, gains=(ga * S[a], gb * S[b])), (1,)
    if k == "H1b":
        return Move(k, vertices=verts), (1,)
    if k == "H1c":
        (a,), (ga,) = mv.vertices, mv.gains
        return Move(k, vertices=verts, gains=(ga * S[a],)), (1,)
    if k == "H2a":
        x, z = mv.vertices
        bx, dz = mv.gains
        return (
            Move(k, vertices=verts, gains=(bx * S[x], dz * S[z]), removed=rem),
            (1,),
        )
    if k == "H2b":
        (e,), (x,) = mv.removed, mv.vertices
        y = e.other(x)
        (d,) = mv.gains
        return Move(k, vertices=verts, gains=(d * S[y],), removed=rem), (1,)
    if k == "H2c":
        (y,), (d,) = mv.vertices, mv.gains
        return Move(k, vertices=verts, gains=(d * S[y],), removed=rem), (1,)
    if k == "H2d":
        (e,), (x,), (bx,) = mv.removed, mv.vertices, mv.gains
        return Move(k, vertices=verts, gains=(bx * S[x],), removed=rem), (1,)
    if k == "H2e":
        return Move(k, removed=rem), (1,)
    if k == "H3a":
        x, z = mv.vertices
        gx, gz = mv.gains
        return (
            Move(k, vertices=verts, gains=(gx * S[x], gz * S[z]), removed=rem),
            (1,),
        )
    if k == "H3b":
        y = mv.vertices[0]
        # The created vertex inherits the pivot's switching sign; with that
        # choice the gain constraints (new x-edge carries the deleted gain,
        # new t-edge its negation) are preserved verbatim.
        return Move(k, vertices=verts, removed=rem), (S[y],)
    if k == "H3c":
        (z,), (gz,) = mv.vertices, mv.gains
        return Move(k, vertices=verts, gains=(gz * S[z],), removed=rem), (1,)
    if k == "H3d":
        return Move(k, removed=rem), (1,)
    if k == "VertexToK4":
        (v,) = mv.vertices
        attach = tuple(
            sorted((map_edge(e, P, S), idx) for e, idx in mv.attach)
        )
        return (
            Move(k, vertices=verts, attach=attach, loop_attach=mv.loop_attach),
            (S[v],) * 4,
        )
    if k == "VertexSplit":
        (v1,) = mv.vertices
        return (
            Move(
                k,
                vertices=verts,
                v2_edge=map_edge(mv.v2_edge, P, S),
                moved=tuple(sorted(map_edge(e, P, S) for e in mv.moved)),
                move_loop=mv.move_loop,
            ),
            (S[v1],),
        )
    raise MoveError(f"unknown move kind {k}")


def extend_iso(
    pi: Sequence[int],
    signs: Sequence[int],
    mv: Move,
    new_signs: Sequence[int],
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Extend (pi, signs) across mv (see translate_move's contract)."""
    n = len(pi)
    if mv.kind == "VertexToK4":
        (v,) = mv.vertices
        vh = pi[v]

        def renum(u: int, removed: int) -> int:
            return u if u < removed else u - 1

        pi2 = [0] * (n + 3)
        s2 = [1] * (n + 3)
        for u in range(n):
            if u == v:
                continue
            pi2[renum(u, v)] = renum(pi[u], vh)
            s2[renum(u, v)] = signs[u]
        for t in range(4):
            # both sides append their K4 at the end; indices coincide
            pi2[n - 1 + t] = n - 1 + t
            s2[n - 1 + t] = new_signs[t]
        return tuple(pi2), tuple(s2)
    # All other kinds append exactly one vertex at index n on both sides.
    return tuple(pi) + (n,), tuple(signs) + (new_signs[0],)


# ---------------------------------------------------------------------------
# Reductions (reverse moves).
# ---------------------------------------------------------------------------


def _vertex_last_perm(n: int, v: int) -> list[int]:
    """Permutation sending v to n-1 and shifting larger vertices down."""
    return [u if u < v else (n - 1 if u == v else u - 1) for u in range(n)]


def _try_reduction(
    g: GainGraph,
    kind: str,
    v: int,
    signs: Sequence[int],
    removed_vertices: Sequence[int],
    reduced_edges: Sequence[Edge],
    forward: Move,
    new_edges: Sequence[Edge],
    pi: Sequence[int],
) -> Optional[Reduction]:
    """Assemble a Reduction, verifying the exact round trip; None if invalid."""
    try:
        reduced = GainGraph(g.n - len(removed_vertices), tuple(reduced_edges))
    except GainGraphError:
        return None
    try:
        redone = apply_move(reduced, forward)
    except MoveError:
        return None
    if apply_iso(g, pi, signs) != redone:
        return None
    return Reduction(
        kind=kind,
        vertex=v,
        reduced=reduced,
        forward=forward,
        pi=tuple(pi),
        signs=tuple(signs),
        new_edges=tuple(new_edges),
    )


def _vertex_deletion_candidates(g: GainGraph, v: int) -> Iterator[Reduction]:
    """Reverse H1/H2/H3 candidates at vertex v."""
    incident = g.edges_at(v, include_loop=False)
    loop = g.loop_at(v)
    deg = g.degree(v)
    pi = _vertex_last_perm(g.n, v)
    signs = [1] * g.n

    def renum(u: int) -> int:
        return pi[u]

    kept = [
        edge(renum(e.u), renum(e.v), e.gain)
        for e in g.edges
        if not e.touches(v)
    ]

    def build(kind: str, added: list[Edge], forward: Move):
        return _try_reduction(
            g, kind, v, signs, (v,), kept + added, forward, added, pi
        )

    by_nbr: dict[int, list[Edge]] = {}
    for e in incident:
        by_nbr.setdefault(e.other(v), []).append(e)
    nbrs = sorted(by_nbr)

    if loop is None and deg == 2:
        if len(nbrs) == 2:
            (a, b) = nbrs
            ga, gb = by_nbr[a][0].gain, by_nbr[b][0].gain
            r = build(
                "H1a",
                [],
                Move("H1a", vertices=(renum(a), renum(b)), gains=(ga, gb)),
            )
            if r:
                yield r
        else:
            (a,) = nbrs
            r = build("H1b", [], Move("H1b", vertices=(renum(a),)))
            if r:
                yield r
    elif loop is not None and deg == 3:
        (a,) = nbrs
        ga = by_nbr[a][0].gain
        r = build("H1c", [], Move("H1c", vertices=(renum(a),), gains=(ga,)))
        if r:
            yield r
    elif loop is None and deg == 3:
        if len(nbrs) == 3:
            # reverse H2a: pick which two neighbours get the recovered edge.
            gains = {a: by_nbr[a][0].gain for a in nbrs}
            for a, b in combinations(nbrs, 2):
                (c,) = [x for x in nbrs if x not in (a, b)]
                rec = edge(renum(a), renum(b), gains[a] * gains[b])
                r = build(
                    "H2a",
                    [rec],
                    Move(
                        "H2a",
                        removed=(rec,),
                        vertices=(renum(a), renum(c)),
                        gains=(gains[a], gains[c]),
                    ),
                )
                if r:
                    yield r
        elif len(nbrs) == 2:
            a = next(x for x in nbrs if len(by_nbr[x]) == 2)
            (b,) = [x for x in nbrs if x != a]
            d = by_nbr[b][0].gain
            for gn in (1, -1):  # reverse H2b, both recovered gains
                rec = edge(renum(a), renum(b), gn)
                r = build(
                    "H2b",
                    [rec],
                    Move(
                        "H2b",
                        removed=(rec,),
                        vertices=(renum(a),),
                        gains=(d,),
                    ),
                )
                if r:
                    yield r
            rec = edge(renum(a), renum(a), -1)  # reverse H2c: loop at a
            r = build(
                "H2c",
                [rec],
                Move("H2c", removed=(rec,), vertices=(renum(b),), gains=(d,)),
            )
            if r:
                yield r
    elif loop is not None and deg == 4:
        if len(nbrs) == 2:
            (a, b) = nbrs
            ga, gb = by_nbr[a][0].gain, by_nbr[b][0].gain
            rec = edge(renum(a), renum(b), ga * gb)
            r = build(
                "H2d",
                [rec],
                Move(
                    "H2d", removed=(rec,), vertices=(renum(a),), gains=(ga,)
                ),
            )
            if r:
                yield r
        else:
            (a,) = nbrs
            rec = edge(renum(a), renum(a), -1)
            r = build("H2e", [rec], Move("H2e", removed=(rec,)))
            if r:
                yield r
    elif loop is None and deg == 4:
        gains = {a: [e.gain for e in by_nbr[a]] for a in nbrs}
        if len(nbrs) == 4:
            # reverse H3a: three pairings of the four neighbours.
            for pairing in ([(0, 1), (2, 3)], [(0, 2), (1, 3)], [(0, 3), (1, 2)]):
                (i1, j1), (i2, j2) = pairing
                a, b = nbrs[i1], nbrs[j1]
                c, d = nbrs[i2], nbrs[j2]
                rec1 = edge(renum(a), renum(b), gains[a][0] * gains[b][0])
                rec2 = edge(renum(c), renum(d), gains[c][0] * gains[d][0])
                if rec1 == rec2:
                    continue
                r = build(
                    "H3a",
                    [rec1, rec2],
                    Move(
                        "H3a",
                        removed=(rec1, rec2),
                        vertices=(renum(a), renum(c)),
                        gains=(gains[a][0], gains[c][0]),
                    ),
                )
                if r:
                    yield r
        elif len(nbrs) == 3:
            a = next(x for x in nbrs if len(by_nbr[x]) == 2)  # doubled nbr
            rest = [x for x in nbrs if x != a]
            for x, t in (rest, rest[::-1]):
                # reverse H3b: both recovered edges meet the doubled nbr a.
                rec1 = edge(renum(x), renum(a), gains[x][0])
                rec2 = edge(renum(a), renum(t), -gains[t][0])
                if rec1 == rec2:
                    continue
                r = build(
                    "H3b",
                    [rec1, rec2],
                    Move(
                        "H3b",
                        removed=(rec1, rec2),
                        vertices=(renum(a), renum(x), renum(t)),
                    ),
                )
                if r:
                    yield r
            # reverse H3c: loop at the doubled neighbour + edge between rest.
            z, t = rest
            rec1 = edge(renum(a), renum(a), -1)
            rec2 = edge(renum(z), renum(t), gains[z][0] * gains[t][0])
            r = build(
                "H3c",
                [rec1, rec2],
                Move(
                    "H3c",
                    removed=(rec1, rec2),
                    vertices=(renum(z),),
                    gains=(gains[z][0],),
                ),
            )
            if r:
                yield r
        elif len(nbrs) == 2 and all(len(by_nbr[x]) == 2 for x in nbrs):
            (a, b) = nbrs
            rec1 = edge(renum(a), renum(a), -1)
            rec2 = edge(renum(b), renum(b), -1)
            r = build("H3d", [rec1, rec2], Move("H3d", removed=(rec1, rec2)))
            if r:
                yield r


def _balanced_k4_contractions(g: GainGraph) -> Iterator[Reduction]:
    """Contract each balanced K4 that induces at most one extra edge."""
    if g.n < 4:
        return
    seen: set[tuple] = set()
    for quad in combinations(range(g.n), 4):
        induced = g.induced_edges(quad)
        if len(induced) > 7:
            continue
        pair_edges: dict[tuple[int, int], list[Edge]] = {}
        loops = [e for e in induced if e.is_loop()]
        for e in induced:
            if not e.is_loop():
                pair_edges.setdefault((e.u, e.v), []).append(e)
        if len(pair_edges) < 6:
            continue
        index = {v: i for i, v in enumerate(quad)}
        for local_signs in _half_sign_space(4):
            chosen = []
            ok = True
            for (u, v), es in pair_edges.items():
                want = local_signs[index[u]] * local_signs[index[v]]
                match = [e for e in es if e.gain == want]
                if not match:
                    ok = False
                    break
                chosen.append(match[0])
            if not ok:
                continue
            extra = [e for e in induced if e not in chosen]
            if len(extra) > 1:
                continue
            key = (quad, tuple(sorted(extra)))
            if key in seen:
                continue
            seen.add(key)
            yield from _build_k4_contraction(g, quad, local_signs, extra)


def _half_sign_space(n: int) -> Iterator[tuple[int, ...]]:
    """Sign vectors with the first coordinate fixed +1 (global flip is moot)."""
    from itertools import product

    for rest in product((1, -1), repeat=n - 1):
        yield (1,) + rest


def _build_k4_contraction(
    g: GainGraph, quad: tuple[int, ...], local_signs, extra
) -> Iterator[Reduction]:
    signs = [1] * g.n
    for v, s in zip(quad, local_signs):
        signs[v] = s
    switched = g.switched(signs)
    outside = [u for u in range(g.n) if u not in quad]
    pi = [0] * g.n  # outside vertices first (order kept), quad last
    for i, u in enumerate(outside):
        pi[u] = i
    for t, v in enumerate(quad):
        pi[v] = len(outside) + t
    merged = len(outside)  # contracted-vertex index in the reduced graph
    quadset = set(quad)
    reduced_edges = []
    attach = []
    for e in switched.edges:
        inu, inv = e.u in quadset, e.v in quadset
        if inu and inv:
            continue  # internal K4 edge (or the extra edge)
        if not inu and not inv:
            reduced_edges.append(edge(pi[e.u], pi[e.v], e.gain))
            continue
        kv = e.u if inu else e.v
        x = e.other(kv)
        contracted = edge(pi[x], merged, e.gain)
        reduced_edges.append(contracted)
        attach.append((contracted, pi[kv] - merged))
    loop_attach = None
    if extra:
        (xe,) = extra
        loop_attach = (pi[xe.u] - merged, pi[xe.v] - merged)
        reduced_edges.append(edge(merged, merged, -1))
    forward = Move(
        "VertexToK4",
        vertices=(merged,),
        attach=tuple(sorted(attach)),
        loop_attach=tuple(sorted(loop_attach)) if loop_attach else None,
    )
    r = _try_reduction(
        g,
        "VertexToK4",
        min(quad),
        signs,
        quad[:3],  # reduced has n-3 vertices
        reduced_edges,
        forward,
        [e for e in reduced_edges if e.touches(merged)],
        pi,
    )
    if r:
        yield r


def _triangle_contractions(g: GainGraph) -> Iterator[Reduction]:
    """Reverse vertex splits: contract a gain-1 edge of a balanced triangle."""
    for tri in combinations(range(g.n), 3):
        pair_edges: dict[tuple[int, int], list[Edge]] = {}
        for e in g.induced_edges(tri):
            if not e.is_loop():
                pair_edges.setdefault((e.u, e.v), []).append(e)
        if len(pair_edges) < 3:
            continue
        index = {v: i for i, v in enumerate(tri)}
        seen: set[tuple] = set()
        for local_signs in _half_sign_space(3):
            chosen = {}
            ok = True
            for (u, v), es in pair_edges.items():
                want = local_signs[index[u]] * local_signs[index[v]]
                match = [e for e in es if e.gain == want]
                if not match:
                    ok = False
                    break
                chosen[(u, v)] = match[0]
            if not ok:
                continue
            for keep, absorb in _ordered_pairs(tri):
                c = next(x for x in tri if x not in (keep, absorb))
                key = (keep, absorb, local_signs)
                if key in seen:
                    continue
                seen.add(key)
                yield from _build_triangle_contraction(
                    g, keep, absorb, c, chosen, tri, local_signs
                )


def _ordered_pairs(tri):
    for a, b in combinations(tri, 2):
        yield a, b
        yield b, a


def _build_triangle_contraction(
    g, keep, absorb, c, chosen, tri, local_signs
) -> Iterator[Reduction]:
    """Merge `absorb` into `keep`; `c` is the split's second anchor."""
    index = {v: i for i, v in enumerate(tri)}
    signs = [1] * g.n
    for v, s in zip(tri, local_signs):
        signs[v] = s
    switched = g.switched(signs)
    if len([e for e in switched.edges if not e.is_loop()
            and {e.u, e.v} == {keep, absorb}]) > 1:
        return  # a parallel keep-absorb edge would contract to a loop
    # In the switched graph all three chosen triangle edges have gain +1.
    e_ka = edge(min(keep, absorb), max(keep, absorb), 1)
    e_ac = edge(min(absorb, c), max(absorb, c), 1)
    loop_keep = switched.loop_at(keep)
    loop_absorb = switched.loop_at(absorb)
    if loop_keep is not None and loop_absorb is not None:
        return
    pi = _vertex_last_perm(g.n, absorb)
    moved = []
    new_edges = []
    reduced_edges = []
    for e in switched.edges:
        if e == e_ka or e == e_ac:
            continue
        if e.is_loop() and e.u == absorb:
            keep_loop = edge(pi[keep], pi[keep], -1)
            reduced_edges.append(keep_loop)
            new_edges.append(keep_loop)
            continue
        if not e.is_loop() and e.touches(absorb):
            x = e.other(absorb)
            merged_e = edge(pi[x], pi[keep], e.gain)
            reduced_edges.append(merged_e)
            moved.append(merged_e)
            new_edges.append(merged_e)
            continue
        reduced_edges.append(edge(pi[e.u], pi[e.v], e.gain))
    # The split's v0-v2 edge is the kept (switched, gain +1) keep-c edge.
    kc = (min(keep, c), max(keep, c))
    v2_edge = edge(pi[kc[0]], pi[kc[1]], 1)
    forward = Move(
        "VertexSplit",
        vertices=(pi[keep],),
        v2_edge=v2_edge,
        moved=tuple(sorted(moved)),
        move_loop=loop_absorb is not None,
    )
    r = _try_reduction(
        g,
        "VertexSplit",
        absorb,
        signs,
        (absorb,),
        reduced_edges,
        forward,
        new_edges,
        pi,
    )
    if r:
        yield r


def enumerate_reductions(
    g: GainGraph, kinds: Optional[Sequence[str]] = None
) -> Iterator[Reduction]:
    """All well-formed reduction candidates, deterministically ordered:
    vertices ascending by (degree, id) for the vertex-deletion reverses, then
    K4 contractions, then triangle contractions (reverse splits)."""
    allowed = set(kinds) if kinds is not None else set(ALL_KINDS)
    order = sorted(range(g.n), key=lambda v: (g.degree(v), v))
    for v in order:
        for r in _vertex_deletion_candidates(g, v):
            if r.kind in allowed:
                yield r
    if "VertexToK4" in allowed:
        yield from _balanced_k4_contractions(g)
    if "VertexSplit" in allowed:
        yield from _triangle_contractions(g)


def is_admissible(r: Reduction, p: SparsityParams) -> bool:
    """Tightness of the reduced graph, rechecked incrementally.

    The reduction preserves the global count by construction (verified), so
    only sparsity restricted to subsets containing a re-added edge needs
    re-checking; with no re-added edges the reduced graph is a subgraph of a
    sparse graph and is admissible outright.
    """
    reduced = r.reduced
    if len(reduced.edges) != p.k * reduced.n - p.m:
        return False
    if not r.new_edges:
        return True
    return check_sparsity(reduced, p, require_edges=r.new_edges).passed
