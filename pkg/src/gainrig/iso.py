"""Gain-graph isomorphism: brute force over vertex bijections and switchings.

Two gain graphs are isomorphic when some relabelling composed with some
switching maps one edge set onto the other.  Sizes of interest are tiny
(quotient graphs of at most ~10 vertices), so a pruned backtracking search
over vertex bijections, followed by a 2-colouring feasibility check for the
switching signs, is exact and fast.

An isomorphism is represented as (pi, signs), both indexed by the *source*
graph's vertices, with the semantics  target == apply_iso(source, pi, signs)
== source.switched(signs).relabelled(pi).
"""

from __future__ import annotations

from typing import Optional, Sequence

from .graph import Edge, GainGraph, edge


def apply_iso(
    g: GainGraph, pi: Sequence[int], signs: Sequence[int]
) -> GainGraph:
    return g.switched(signs).relabelled(pi)


def map_edge(e: Edge, pi: Sequence[int], signs: Sequence[int]) -> Edge:
    """Image of a single edge under (pi, signs)."""
    gain = e.gain if e.is_loop() else e.gain * signs[e.u] * signs[e.v]
    return edge(pi[e.u], pi[e.v], gain)


def compose_iso(
    pi1: Sequence[int],
    signs1: Sequence[int],
    pi2: Sequence[int],
    signs2: Sequence[int],
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Composite g -> h -> k of (pi1, signs1): g->h and (pi2, signs2): h->k."""
    pi = tuple(pi2[pi1[u]] for u in range(len(pi1)))
    signs = tuple(signs1[u] * signs2[pi1[u]] for u in range(len(pi1)))
    return pi, signs


def invert_iso(
    pi: Sequence[int], signs: Sequence[int]
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Inverse isomorphism: apply_iso(h, *invert_iso(pi, signs)) recovers g
    whenever apply_iso(g, pi, signs) == h."""
    n = len(pi)
    inv_pi = [0] * n
    inv_signs = [1] * n
    for u in range(n):
        inv_pi[pi[u]] = u
        inv_signs[pi[u]] = signs[u]
    return tuple(inv_pi), tuple(inv_signs)


def _pair_counts(g: GainGraph) -> dict[tuple[int, int], int]:
    counts: dict[tuple[int, int], int] = {}
    for e in g.edges:
        counts[(e.u, e.v)] = counts.get((e.u, e.v), 0) + 1
    return counts


def _profile(g: GainGraph, v: int) -> tuple[int, int]:
    return (g.degree(v), 1 if g.loop_at(v) else 0)


def _switching_signs(
    g: GainGraph, h: GainGraph, pi: Sequence[int]
) -> Optional[list[int]]:
    """Signs making the multigraph bijection pi gain-preserving, if any.

    Only pairs joined by exactly one edge constrain the signs (a double
    parallel pair carries both gains on both sides, loops are always -1);
    feasibility is a 2-colouring of the single-edge constraint graph.
    """
    h_edges = set(h.edges)
    constraints: list[tuple[int, int, int]] = []  # (u, v, required s_u*s_v)
    pairs = _pair_counts(g)
    for e in g.edges:
        if e.is_loop():
            if edge(pi[e.u], pi[e.u], -1) not in h_edges:
                return None
            continue
        if pairs[(e.u, e.v)] == 2:
            for gn in (1, -1):
                if edge(pi[e.u], pi[e.v], gn) not in h_edges:
                    return None
            continue
        matched = None
        for gn in (1, -1):
            if edge(pi[e.u], pi[e.v], gn) in h_edges:
                matched = gn
        if matched is None:
            return None
        constraints.append((e.u, e.v, e.gain * matched))
    signs = [0] * g.n
    adj: dict[int, list[tuple[int, int]]] = {}
    for u, v, req in constraints:
        adj.setdefault(u, []).append((v, req))
        adj.setdefault(v, []).append((u, req))
    for root in range(g.n):
        if signs[root]:
            continue
        signs[root] = 1
        stack = [root]
        while stack:
            x = stack.pop()
            for y, req in adj.get(x, ()):
                want = req * signs[x]
                if signs[y] == 0:
                    signs[y] = want
                    stack.append(y)
                elif signs[y] != want:
                    return None
    return [s if s else 1 for s in signs]


def isomorphism(
    g: GainGraph, h: GainGraph
) -> Optional[tuple[tuple[int, ...], tuple[int, ...]]]:
    """(pi, signs) with h == apply_iso(g, pi, signs), or None."""
    if g.n != h.n or len(g.edges) != len(h.edges):
        return None
    if sorted(_profile(g, v) for v in range(g.n)) != sorted(
        _profile(h, v) for v in range(h.n)
    ):
        return None
    gp, hp = _pair_counts(g), _pair_counts(h)
    if sorted(gp.values()) != sorted(hp.values()):
        return None

    # Assign rare-profile vertices first to prune early.
    profile_freq: dict[tuple[int, int], int] = {}
    for v in range(g.n):
        p = _profile(g, v)
        profile_freq[p] = profile_freq.get(p, 0) + 1
    order = sorted(range(g.n), key=lambda v: (profile_freq[_profile(g, v)], v))

    pi: list[int] = [-1] * g.n
    used = [False] * h.n

    def backtrack(k: int):
        if k == g.n:
            signs = _switching_signs(g, h, pi)
            if signs is not None:
                return (tuple(pi), tuple(signs))
            return None
        v = order[k]
        pv = _profile(g, v)
        for w in range(h.n):
            if used[w] or _profile(h, w) != pv:
                continue
            if any(
                gp.get((min(u, v), max(u, v)), 0)
                != hp.get((min(pi[u], w), max(pi[u], w)), 0)
                for u in order[:k]
            ):
                continue
            pi[v] = w
            used[w] = True
            res = backtrack(k + 1)
            if res is not None:
                return res
            pi[v] = -1
            used[w] = False
        return None

    result = backtrack(0)
    if result is not None:
        assert apply_iso(g, *result) == h
    return result


def are_isomorphic(g: GainGraph, h: GainGraph) -> bool:
    return isomorphism(g, h) is not None
