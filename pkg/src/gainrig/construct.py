"""Constructive characterisation: build graphs from bases, and decompose
tight graphs back into construction sequences.

A ConstructionSequence starts from a disjoint union of catalogue bases (for
the loopless count variant, from a single vertex) and applies moves; every
intermediate graph stays tight.  decompose() inverts this: it greedily
applies admissible reductions, matches the irreducible remainder against the
base catalogue, and replays the moves on a fresh copy while maintaining an
exact vertex-relabelling-plus-switching isomorphism, so the caller gets both
the sequence and the isomorphism identifying construct(sequence) with the
input graph.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional, Sequence

from .catalog import PARAMS_220, PARAMS_222, graph_for_base_id, is_base_graph
from .graph import GainGraph, disjoint_union
from .iso import apply_iso, compose_iso, invert_iso, isomorphism
from .moves import (
    ALL_KINDS,
    KINDS_222,
    Move,
    MoveError,
    apply_move,
    enumerate_reductions,
    extend_iso,
    is_admissible,
    translate_move,
)
from .sparsity import SparsityParams, check_sparsity, check_tight


class NotTight(ValueError):
    """Input graph fails the tight count-and-sparsity requirement."""


class NoAdmissibleReduction(RuntimeError):
    """No reduction preserves tightness and no base components remain."""


@dataclass(frozen=True)
class ConstructionSequence:
    params: SparsityParams
    initial: tuple[str, ...]  # base ids, joined as a disjoint union in order
    steps: tuple[Move, ...]

    def initial_graph(self) -> GainGraph:
        return disjoint_union([graph_for_base_id(b) for b in self.initial])


def allowed_kinds(p: SparsityParams) -> tuple[str, ...]:
    return KINDS_222 if p.as_tuple() == (2, 2, 2) else ALL_KINDS


def construct(
    seq: ConstructionSequence, verify: bool = True
) -> GainGraph:
    """Replay a construction sequence; with verify, check tightness of every
    intermediate graph (each component of the pre-move unions)."""
    g = seq.initial_graph()
    p = seq.params
    if verify:
        for comp in g.components():
            if not check_tight(g.subgraph(comp), p):
                raise NotTight(f"initial base union not tight: {seq.initial}")
    kinds = allowed_kinds(p)
    for mv in seq.steps:
        if mv.kind not in kinds:
            raise MoveError(f"move kind {mv.kind} not allowed for {p.as_tuple()}")
        g = apply_move(g, mv)
        if verify:
            for comp in g.components():
                if not check_tight(g.subgraph(comp), p):
                    raise NotTight(f"intermediate graph not tight after {mv.kind}")
    return g


def _match_components(
    g: GainGraph, p: SparsityParams
) -> Optional[tuple[tuple[str, ...], tuple[int, ...], tuple[int, ...]]]:
    """If every component of g is a base (or the single vertex for the
    loopless variant), return (base ids, pi, signs) with
    apply_iso(g, pi, signs) == disjoint union of those bases."""
    comps = g.components()
    ids = []
    pi = [0] * g.n
    signs = [1] * g.n
    offset = 0
    for comp in comps:
        sub = g.subgraph(comp)
        if p.as_tuple() == (2, 2, 2):
            if sub.n != 1 or sub.edges:
                return None
            ids.append("k1")
            pi[comp[0]] = offset
            offset += 1
            continue
        bid = is_base_graph(sub)
        if bid is None:
            return None
        iso = isomorphism(sub, graph_for_base_id(bid))
        assert iso is not None
        sub_pi, sub_signs = iso
        ids.append(bid)
        for local, v in enumerate(comp):
            pi[v] = offset + sub_pi[local]
            signs[v] = sub_signs[local]
        offset += sub.n
    return tuple(ids), tuple(pi), tuple(signs)


def decompose(
    g: GainGraph,
    p: SparsityParams,
    kinds: Optional[Sequence[str]] = None,
) -> tuple[ConstructionSequence, tuple[int, ...], tuple[int, ...]]:
    """Reduce g to bases and return (sequence, pi, signs) with
    apply_iso(g, pi, signs) == construct(sequence)."""
    if not check_tight(g, p):
        raise NotTight(f"graph is not {p.as_tuple()}-tight")
    kinds = tuple(kinds) if kinds is not None else allowed_kinds(p)

    chain: list = []  # reductions applied, in order
    cur = g
    while True:
        match = _match_components(cur, p)
        if match is not None:
            ids, pi_term, signs_term = match
            break
        chosen = None
        for r in enumerate_reductions(cur, kinds):
            if is_admissible(r, p):
                chosen = r
                break
        if chosen is None:
            raise NoAdmissibleReduction(
                f"stuck at {cur.n} vertices: {cur.triples()}"
            )
        chain.append(chosen)
        cur = chosen.reduced

    # Replay forwards on a fresh copy, maintaining psi: chain-graph -> copy.
    seq_steps: list[Move] = []
    seq = ConstructionSequence(params=p, initial=ids, steps=())
    c = seq.initial_graph()
    psi_pi, psi_signs = pi_term, signs_term
    assert apply_iso(cur, psi_pi, psi_signs) == c
    for r in reversed(chain):
        mv2, new_signs = translate_move(r.forward, psi_pi, psi_signs)
        c = apply_move(c, mv2)
        seq_steps.append(mv2)
        ext_pi, ext_signs = extend_iso(psi_pi, psi_signs, r.forward, new_signs)
        # r: apply_iso(pre, r.pi, r.signs) == apply_move(r.reduced, r.forward)
        psi_pi, psi_signs = compose_iso(r.pi, r.signs, ext_pi, ext_signs)
        assert apply_iso(_pre_graph(r), psi_pi, psi_signs) == c
    seq = ConstructionSequence(params=p, initial=ids, steps=tuple(seq_steps))
    assert apply_iso(g, psi_pi, psi_signs) == c
    return seq, psi_pi, psi_signs


def _pre_graph(r) -> GainGraph:
    """The graph a reduction was derived from, reconstructed for the replay
    invariant check."""
    inv = invert_iso(r.pi, r.signs)
    return apply_iso(apply_move(r.reduced, r.forward), *inv)


# ---------------------------------------------------------------------------
# Random generation of tight graphs.
# ---------------------------------------------------------------------------


def _random_move(g: GainGraph, kinds: Sequence[str], rng: random.Random) -> Optional[Move]:
    """Sample one syntactically valid move of a random allowed kind."""
    nonloops = [e for e in g.edges if not e.is_loop()]
    loops = [e for e in g.edges if e.is_loop()]
    k = rng.choice(list(kinds))
    coin = lambda: rng.choice((1, -1))
    try:
        if k == "H1a" and g.n >= 2:
            a, b = rng.sample(range(g.n), 2)
            return Move(k, vertices=(a, b), gains=(coin(), coin()))
        if k == "H1b" and g.n >= 1:
            return Move(k, vertices=(rng.randrange(g.n),))
        if k == "H1c" and g.n >= 1:
            return Move(k, vertices=(rng.randrange(g.n),), gains=(coin(),))
        if k == "H2a" and nonloops and g.n >= 3:
            e = rng.choice(nonloops)
            x = rng.choice((e.u, e.v))
            z = rng.choice([v for v in range(g.n) if v not in (e.u, e.v)])
            return Move(k, removed=(e,), vertices=(x, z), gains=(coin(), coin()))
        if k == "H2b" and nonloops:
            e = rng.choice(nonloops)
            return Move(k, removed=(e,), vertices=(rng.choice((e.u, e.v)),),
                        gains=(coin(),))
        if k == "H2c" and loops and g.n >= 2:
            e = rng.choice(loops)
            y = rng.choice([v for v in range(g.n) if v != e.u])
            return Move(k, removed=(e,), vertices=(y,), gains=(coin(),))
        if k == "H2d" and nonloops:
            e = rng.choice(nonloops)
            return Move(k, removed=(e,), vertices=(rng.choice((e.u, e.v)),),
                        gains=(coin(),))
        if k == "H2e" and loops:
            return Move(k, removed=(rng.choice(loops),))
        if k == "H3a" and len(nonloops) >= 2:
            e1, e2 = rng.sample(nonloops, 2)
            if len({e1.u, e1.v, e2.u, e2.v}) == 4:
                return Move(k, removed=(e1, e2),
                            vertices=(rng.choice((e1.u, e1.v)),
                                      rng.choice((e2.u, e2.v))),
                            gains=(coin(), coin()))
        if k == "H3b" and len(nonloops) >= 2:
            e1, e2 = rng.sample(nonloops, 2)
            shared = {e1.u, e1.v} & {e2.u, e2.v}
            if len(shared) == 1 and len({e1.u, e1.v, e2.u, e2.v}) == 3:
                y = shared.pop()
                return Move(k, removed=(e1, e2),
                            vertices=(y, e1.other(y), e2.other(y)))
        if k == "H3c" and loops and nonloops:
            e1, e2 = rng.choice(loops), rng.choice(nonloops)
            if e1.u not in (e2.u, e2.v):
                return Move(k, removed=(e1, e2),
                            vertices=(rng.choice((e2.u, e2.v)),),
                            gains=(coin(),))
        if k == "H3d" and len(loops) >= 2:
            e1, e2 = rng.sample(loops, 2)
            return Move(k, removed=(e1, e2))
        if k == "VertexToK4" and g.n >= 1:
            v = rng.randrange(g.n)
            att = tuple(
                (e, rng.randrange(4))
                for e in g.edges_at(v, include_loop=False)
            )
            la = None
            if g.loop_at(v) is not None:
                i, j = rng.randrange(4), rng.randrange(4)
                la = (min(i, j), max(i, j))
            return Move(k, vertices=(v,), attach=att, loop_attach=la)
        if k == "VertexSplit" and nonloops:
            e = rng.choice(nonloops)
            v1 = rng.choice((e.u, e.v))
            others = [m for m in g.edges_at(v1, include_loop=False) if m != e]
            moved = tuple(sorted(rng.sample(others, rng.randrange(len(others) + 1))))
            ml = g.loop_at(v1) is not None and rng.random() < 0.5
            return Move(k, vertices=(v1,), v2_edge=e, moved=moved, move_loop=ml)
    except (ValueError, IndexError):
        return None
    return None


def random_tight(
    n: int,
    p: SparsityParams,
    seed: int,
    max_attempts: int = 10_000,
) -> GainGraph:
    """A pseudo-random p-tight graph on exactly n vertices, built by applying
    random tightness-preserving moves to a random base (or to a single vertex
    for the loopless variant)."""
    rng = random.Random(seed)
    kinds = allowed_kinds(p)
    if p.as_tuple() == (2, 2, 2):
        g = GainGraph(1, ())
    else:
        bases = [b for b in ("a", "b", "c", "d", "e", "f", "g", "h")
                 if graph_for_base_id(b).n <= n]
        if not bases:
            raise ValueError(f"no base fits in {n} vertices")
        g = graph_for_base_id(rng.choice(bases))
    attempts = 0
    while g.n < n:
        attempts += 1
        if attempts > max_attempts:
            raise RuntimeError("random_tight: too many rejected moves")
        room = n - g.n
        usable = [k for k in kinds if k != "VertexToK4" or room >= 3]
        mv = _random_move(g, usable, rng)
        if mv is None:
            continue
        try:
            h = apply_move(g, mv)
        except MoveError:
            continue
        new = [e for e in h.edges if e not in set(g.edges)]
        if len(h.edges) != p.k * h.n - p.m:
            continue
        if not check_sparsity(h, p, require_edges=new).passed:
            continue
        g = h
    assert check_tight(g, p)
    return g
