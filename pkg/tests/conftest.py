"""Shared randomised-graph helpers for the test suite."""

from __future__ import annotations

import random

import pytest

from gainrig.graph import GainGraph


def random_gain_graph(
    rng: random.Random, max_n: int = 6, max_edges: int = 12
) -> GainGraph:
    """Arbitrary valid gain graph (not necessarily sparse or tight)."""
    n = rng.randint(1, max_n)
    candidates = [
        (u, v, g)
        for u in range(n)
        for v in range(u, n)
        for g in ((-1,) if u == v else (1, -1))
    ]
    rng.shuffle(candidates)
    m = rng.randint(0, min(max_edges, len(candidates)))
    return GainGraph.from_triples(n, [list(t) for t in candidates[:m]])


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xC0FFEE)
