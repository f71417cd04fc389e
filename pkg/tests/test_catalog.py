from itertools import combinations

from gainrig.catalog import (
    BASE_CATALOG,
    PARAMS_220,
    graph_for_base_id,
    is_base_graph,
)
from gainrig.graph import GainGraph
from gainrig.iso import apply_iso, are_isomorphic
from gainrig.sparsity import check_tight


def test_catalog_size_and_tightness():
    assert sorted(BASE_CATALOG) == list("abcdefgh")
    for g in BASE_CATALOG.values():
        assert check_tight(g, PARAMS_220)


def test_catalog_pairwise_non_isomorphic():
    for x, y in combinations(BASE_CATALOG, 2):
        assert not are_isomorphic(BASE_CATALOG[x], BASE_CATALOG[y])


def test_frozen_representatives():
    assert BASE_CATALOG["a"].triples() == [
        [0, 0, -1], [0, 1, -1], [0, 1, 1], [1, 1, -1]
    ]
    assert BASE_CATALOG["b"].triples() == [
        [0, 0, -1], [0, 1, 1], [0, 2, 1], [1, 1, -1], [1, 2, 1], [2, 2, -1]
    ]
    # the five four-vertex members each contain a balanced K4
    k4 = [[0, 1, 1], [0, 2, 1], [0, 3, 1], [1, 2, 1], [1, 3, 1], [2, 3, 1]]
    for bid in "defgh":
        g = BASE_CATALOG[bid]
        assert g.n == 4 and len(g.edges) == 8
        for t in k4:
            assert t in g.triples()


def test_recognition_under_switch_and_relabel():
    for bid, g in BASE_CATALOG.items():
        h = apply_iso(
            g,
            list(reversed(range(g.n))),
            [(-1) ** i for i in range(g.n)],
        )
        assert is_base_graph(h) == bid


def test_recognition_rejects_non_bases():
    assert is_base_graph(GainGraph(1, ())) is None
    assert is_base_graph(GainGraph.from_triples(2, [[0, 1, 1]])) is None


def test_graph_for_base_id():
    assert graph_for_base_id("k1") == GainGraph(1, ())
    assert graph_for_base_id("c") == BASE_CATALOG["c"]
