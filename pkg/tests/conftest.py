"""Shared graph pools and helpers for the test suite.

Exhaustive pools come from the networkx graph atlas (every connected graph up
to 7 vertices, one per isomorphism class); larger pools are seeded random
connected graphs so runs are reproducible.
"""

from __future__ import annotations

import random
from functools import lru_cache

import networkx as nx
import pytest

from leafsearch import Graph, build_graph


@lru_cache(maxsize=None)
def atlas_connected(n: int) -> tuple[Graph, ...]:
    """All connected graphs with n vertices, up to isomorphism (n <= 7)."""
    assert 1 <= n <= 7
    out = []
    for G in nx.graph_atlas_g():
        if len(G) == n and nx.is_connected(G):
            out.append(build_graph(n, [tuple(sorted(e)) for e in G.edges()]))
    return tuple(out)


def random_connected(n: int, extra: int, rng: random.Random) -> Graph:
    """Random spanning tree plus `extra` additional edges."""
    verts = list(range(n))
    rng.shuffle(verts)
    edges = set()
    for i in range(1, n):
        a, b = verts[rng.randrange(i)], verts[i]
        edges.add((min(a, b), max(a, b)))
    pairs = [
        (i, j) for i in range(n) for j in range(i + 1, n) if (i, j) not in edges
    ]
    rng.shuffle(pairs)
    for e in pairs[:extra]:
        edges.add(e)
    return build_graph(n, sorted(edges))


def random_pool(n: int, count: int, seed: int, max_extra: int | None = None) -> list[Graph]:
    rng = random.Random(seed)
    cap = n if max_extra is None else max_extra
    return [random_connected(n, rng.randrange(0, cap + 1), rng) for _ in range(count)]


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(leaves: int) -> Graph:
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


C4 = build_graph(4, [(0, 1), (0, 3), (1, 2), (2, 3)])
P4 = path_graph(4)
K3 = complete_graph(3)
K4 = complete_graph(4)


@pytest.fixture(scope="session")
def small_pool():
    """Every connected graph with 2..6 vertices (one per isomorphism class)."""
    out = []
    for n in range(2, 7):
        out.extend(atlas_connected(n))
    return out
