import random

import pytest

from gainrig.catalog import BASE_CATALOG, PARAMS_220, PARAMS_222
from gainrig.construct import _random_move
from gainrig.graph import GainGraph, edge
from gainrig.iso import apply_iso
from gainrig.moves import (
    ALL_KINDS,
    H_KINDS,
    Move,
    MoveError,
    apply_move,
    enumerate_reductions,
    extend_iso,
    is_admissible,
    translate_move,
)
from gainrig.sparsity import check_tight


BASE_A = BASE_CATALOG["a"]


def grow(g, rng, steps, kinds=ALL_KINDS):
    for _ in range(steps):
        mv = _random_move(g, kinds, rng)
        if mv is None:
            continue
        try:
            g = apply_move(g, mv)
        except MoveError:
            continue
    return g


def test_h1a_adds_degree_two_vertex():
    g = apply_move(BASE_A, Move("H1a", vertices=(0, 1), gains=(1, -1)))
    assert g.n == 3
    assert g.degree(2) == 2
    assert g.has_edge(edge(0, 2, 1)) and g.has_edge(edge(1, 2, -1))


def test_h1b_parallel_pair():
    g = apply_move(BASE_A, Move("H1b", vertices=(0,)))
    assert g.has_edge(edge(0, 2, 1)) and g.has_edge(edge(0, 2, -1))


def test_h1c_loop():
    g = apply_move(BASE_A, Move("H1c", vertices=(1,), gains=(-1,)))
    assert g.loop_at(2) is not None


def test_h2a_gain_constraint():
    g = GainGraph.from_triples(3, [[0, 1, -1], [1, 2, 1], [0, 2, 1], [0, 0, -1], [1, 1, -1], [2, 2, -1]])
    mv = Move("H2a", removed=(edge(0, 1, -1),), vertices=(0, 2), gains=(1, 1))
    h = apply_move(g, mv)
    assert not h.has_edge(edge(0, 1, -1))
    # subdivided edge: gains multiply to the removed gain
    assert h.has_edge(edge(0, 3, 1)) and h.has_edge(edge(1, 3, -1))
    assert h.has_edge(edge(2, 3, 1))


def test_move_validation_errors():
    with pytest.raises(MoveError):
        apply_move(BASE_A, Move("H1a", vertices=(0, 0), gains=(1, 1)))
    with pytest.raises(MoveError):
        apply_move(BASE_A, Move("H2a", removed=(edge(0, 5, 1),),
                                vertices=(0, 1), gains=(1, 1)))
    with pytest.raises(MoveError):
        apply_move(BASE_A, Move("nope"))


def test_vertex_to_k4_structure():
    g = GainGraph.from_triples(2, [[0, 1, 1], [0, 1, -1], [0, 0, -1], [1, 1, -1]])
    attach = tuple((e, i) for i, e in enumerate(g.edges_at(0, include_loop=False)))
    mv = Move("VertexToK4", vertices=(0,), attach=attach, loop_attach=(0, 1))
    h = apply_move(g, mv)
    assert h.n == 5  # one removed, four added
    # balanced K4 present on the new vertices
    newv = [1, 2, 3, 4]
    k4_edges = [e for e in h.induced_edges(newv) if e.gain == 1 and not e.is_loop()]
    assert len(k4_edges) == 6


def test_vertex_split_moves_edges():
    g = BASE_CATALOG["b"]
    e12 = edge(0, 1, 1)
    others = [e for e in g.edges_at(0, include_loop=False) if e != e12]
    mv = Move("VertexSplit", vertices=(0,), v2_edge=e12,
              moved=tuple(others), move_loop=True)
    h = apply_move(g, mv)
    assert h.n == 4
    assert h.has_edge(edge(0, 3, 1)) and h.has_edge(edge(1, 3, 1))
    assert h.loop_at(3) is not None and h.loop_at(0) is None


def test_reductions_replay_exactly(rng):
    for _ in range(60):
        g = grow(random.choice(list(BASE_CATALOG.values())), rng, rng.randrange(3))
        for r in enumerate_reductions(g):
            assert apply_iso(g, r.pi, r.signs) == apply_move(r.reduced, r.forward)


def test_admissible_matches_full_recheck(rng):
    for _ in range(40):
        g = grow(random.choice(list(BASE_CATALOG.values())), rng, rng.randrange(3))
        for r in enumerate_reductions(g):
            assert is_admissible(r, PARAMS_220) == check_tight(r.reduced, PARAMS_220)


def test_translate_and_extend_contract(rng):
    done = 0
    while done < 120:
        g = grow(random.choice(list(BASE_CATALOG.values())), rng, rng.randrange(3))
        pi = list(range(g.n))
        rng.shuffle(pi)
        signs = [rng.choice((1, -1)) for _ in range(g.n)]
        h = apply_iso(g, pi, signs)
        mv = _random_move(g, ALL_KINDS, rng)
        if mv is None:
            continue
        try:
            g2 = apply_move(g, mv)
        except MoveError:
            continue
        mv2, new_signs = translate_move(mv, pi, signs)
        h2 = apply_move(h, mv2)
        pi2, s2 = extend_iso(pi, signs, mv, new_signs)
        assert apply_iso(g2, pi2, s2) == h2, mv.kind
        done += 1


def test_h_moves_preserve_tightness(rng):
    from gainrig.construct import random_tight

    done = 0
    while done < 100:
        g = random_tight(2 + rng.randrange(5), PARAMS_220, seed=rng.randrange(10**6))
        mv = _random_move(g, H_KINDS, rng)
        if mv is None:
            continue
        try:
            h = apply_move(g, mv)
        except MoveError:
            continue
        assert check_tight(h, PARAMS_220), (g.triples(), mv)
        done += 1


def test_balanced_k4_contracts_to_single_vertex():
    k4 = GainGraph.from_triples(
        4, [[0, 1, 1], [0, 2, 1], [0, 3, 1], [1, 2, 1], [1, 3, 1], [2, 3, 1]]
    )
    rs = [r for r in enumerate_reductions(k4, kinds=("VertexToK4",))]
    assert any(r.reduced == GainGraph(1, ()) for r in rs)


def test_restricted_kind_filter():
    g = BASE_CATALOG["a"]
    assert list(enumerate_reductions(g, kinds=("H1a",))) == []
