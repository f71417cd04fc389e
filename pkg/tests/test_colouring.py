import random
from fractions import Fraction as F

import pytest

from gainrig.catalog import PARAMS_220, PARAMS_222
from gainrig.colouring import (
    edge_colour,
    geometric_verdict,
    is_unbalanced_map_graph,
    monochrome_quotients,
)
from gainrig.construct import random_tight
from gainrig.graph import GainGraph, edge
from gainrig.norms import LINF
from gainrig.rigidity import Framework, FrameworkError, analyse, well_positioned

from conftest import random_gain_graph


def _placement(g, rng, tries=400):
    for _ in range(tries):
        pos = tuple(
            (F(rng.randint(-40, 40)), F(rng.randint(-40, 40)))
            for _ in range(g.n)
        )
        try:
            fw = Framework(g, pos, LINF, 2)
        except FrameworkError:
            continue
        if well_positioned(fw):
            return fw
    return None


def test_edge_colour_examples():
    g = GainGraph.from_triples(2, [[0, 1, 1]])
    fw = Framework(g, ((F(4), F(2)), (F(1), F(1))), LINF, 2)  # delta (3,1)
    assert edge_colour(fw, g.edges[0]) == 0
    fw2 = Framework(g, ((F(1), F(4)), (F(2), F(1))), LINF, 2)  # delta (-1,3)
    assert edge_colour(fw2, g.edges[0]) == 1


def test_colour_partition_total(rng):
    for _ in range(20):
        g = random_gain_graph(rng, max_n=5, max_edges=8)
        fw = _placement(g, rng)
        if fw is None:
            continue
        col = monochrome_quotients(fw)
        assert sorted(col.classes[0] + col.classes[1]) == list(g.edges)


def test_unbalanced_map_graph_basics():
    loop = GainGraph.from_triples(1, [[0, 0, -1]])
    assert is_unbalanced_map_graph(loop, loop.edges)
    pair = GainGraph.from_triples(2, [[0, 1, 1], [0, 1, -1]])
    assert is_unbalanced_map_graph(pair, pair.edges)
    tree = GainGraph.from_triples(3, [[0, 1, 1], [1, 2, 1]])
    assert not is_unbalanced_map_graph(tree, tree.edges)
    balanced_cycle = GainGraph.from_triples(3, [[0, 1, 1], [1, 2, 1], [0, 2, 1]])
    assert not is_unbalanced_map_graph(balanced_cycle, balanced_cycle.edges)


def test_spanning_flag():
    g = GainGraph.from_triples(3, [[0, 0, -1]])
    assert not is_unbalanced_map_graph(g, g.edges, spanning=True)
    assert is_unbalanced_map_graph(g, g.edges, spanning=False)


def test_geometric_matches_rank_chi0(rng):
    agreements = 0
    while agreements < 60:
        g = random_tight(2 + rng.randrange(5), PARAMS_220, seed=rng.randrange(10**6))
        fw = _placement(g, rng)
        if fw is None:
            continue
        gv = geometric_verdict(fw)
        assert gv.chi0_isostatic == analyse(fw, 0).isostatic
        agreements += 1


def test_geometric_matches_rank_chi1(rng):
    agreements = 0
    while agreements < 60:
        g = random_tight(1 + rng.randrange(6), PARAMS_222, seed=rng.randrange(10**6))
        fw = _placement(g, rng)
        if fw is None:
            continue
        gv = geometric_verdict(fw)
        assert gv.chi1_isostatic == analyse(fw, 1).isostatic
        agreements += 1


def test_rigidity_verdict_matches_both_characters(rng):
    agreements = 0
    while agreements < 40:
        g = random_gain_graph(rng, max_n=5, max_edges=11)
        fw = _placement(g, rng)
        if fw is None:
            continue
        gv = geometric_verdict(fw)
        rank_rigid = analyse(fw, 0).rigid and analyse(fw, 1).rigid
        assert gv.infinitesimally_rigid == rank_rigid
        agreements += 1


def test_forest_class_blocks_chi0():
    # one colour class being a forest rules out the chi0 verdict
    g = GainGraph.from_triples(2, [[0, 1, 1], [0, 1, -1], [0, 0, -1], [1, 1, -1]])
    rng = random.Random(17)
    found = False
    for _ in range(500):
        fw = _placement(g, rng, tries=1)
        if fw is None:
            continue
        col = monochrome_quotients(fw)
        forest0 = not is_unbalanced_map_graph(g, col.classes[0])
        if forest0:
            assert not geometric_verdict(fw).chi0_isostatic
            found = True
            break
    assert found
