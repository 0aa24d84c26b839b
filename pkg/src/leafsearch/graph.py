"""Core graph model: orderings, first-in trees, layers, bandwidth, validators.

Vertices are dense 0-based integers. External 1-based ids are remapped at the
I/O boundary (see cli). All types are immutable after construction and all
operations are pure, so shared instances are safe to use concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional

from .errors import (
    DisconnectedError,
    NotConnectedOrderingError,
    OutOfRangeError,
    DuplicateEdgeError,
    SelfLoopError,
)

GS = "gs"
BFS = "bfs"
LBFS = "lbfs"
PARADIGMS = (GS, BFS, LBFS)
LAYERED_PARADIGMS = (BFS, LBFS)


def check_paradigm(paradigm: str, allowed: tuple[str, ...] = PARADIGMS) -> str:
    if paradigm not in allowed:
        raise ValueError(f"unknown paradigm {paradigm!r}; expected one of {allowed}")
    return paradigm


@dataclass(frozen=True)
class Graph:
    """Simple connected undirected graph with adjacency sets."""

    n: int
    adj: tuple[frozenset[int], ...]

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v
        )

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adj_mask(self) -> tuple[int, ...]:
        """Neighborhoods as bitmasks, for enumeration hot loops."""
        return tuple(sum(1 << w for w in nbrs) for nbrs in self.adj)

    @cached_property
    def adj_sorted(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(sorted(nbrs)) for nbrs in self.adj)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return all(self.has_edge(u, v) for i, u in enumerate(vs) for v in vs[i + 1 :])

    def induced_connected(self, vertices: frozenset[int]) -> bool:
        """Whether the induced subgraph on ``vertices`` is connected (nonempty)."""
        if not vertices:
            return False
        start = min(vertices)
        seen = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            for w in self.adj[u]:
                if w in vertices and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(vertices)


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Validate and build a Graph; rejects loops, duplicates and disconnection."""
    if n < 1:
        raise OutOfRangeError(f"vertex count must be positive, got {n}")
    adj: list[set[int]] = [set() for _ in range(n)]
    seen: set[tuple[int, int]] = set()
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise OutOfRangeError(f"edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdgeError(f"duplicate edge ({u},{v})")
        seen.add(key)
        adj[u].add(v)
        adj[v].add(u)
    g = Graph(n, tuple(frozenset(s) for s in adj))
    if n > 1:
        reach = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if w not in reach:
                    reach.add(w)
                    stack.append(w)
        if len(reach) != n:
            raise DisconnectedError(f"graph is disconnected ({len(reach)}/{n} reachable)")
    return g


@dataclass(frozen=True)
class Ordering:
    """A permutation of all vertex ids together with its position map."""

    seq: tuple[int, ...]

    def __post_init__(self):
        n = len(self.seq)
        if n == 0:
            raise OutOfRangeError("ordering must be nonempty")
        if sorted(self.seq) != list(range(n)):
            raise OutOfRangeError(f"sequence {self.seq} is not a permutation of 0..{n - 1}")

    @cached_property
    def pos(self) -> tuple[int, ...]:
        p = [0] * len(self.seq)
        for i, v in enumerate(self.seq):
            p[v] = i
        return tuple(p)

    def __len__(self) -> int:
        return len(self.seq)

    def __iter__(self):
        return iter(self.seq)


def as_ordering(seq) -> Ordering:
    return seq if isinstance(seq, Ordering) else Ordering(tuple(seq))


@dataclass(frozen=True)
class FTree:
    """First-in tree of a search ordering.

    Each non-root vertex points to its earliest-visited neighbor. The root is
    always classified internal, even in the one-vertex graph; leaves are
    exactly the childless non-root vertices.
    """

    root: int
    parent: tuple[int, ...]  # parent[root] == -1
    children: tuple[tuple[int, ...], ...]
    leaves: frozenset[int]
    internal: frozenset[int]

    @property
    def leaf_count(self) -> int:
        return len(self.leaves)

    @property
    def internal_count(self) -> int:
        return len(self.internal)


def ftree_from_ordering(g: Graph, ordering) -> FTree:
    """Build the first-in tree: parent of v is its leftmost neighbor in the ordering."""
    ordering = as_ordering(ordering)
    if len(ordering) != g.n:
        raise OutOfRangeError("ordering length does not match graph size")
    pos = ordering.pos
    parent = [-1] * g.n
    children: list[list[int]] = [[] for _ in range(g.n)]
    for i in range(1, g.n):
        v = ordering.seq[i]
        best = -1
        best_pos = i
        for w in g.adj[v]:
            if pos[w] < best_pos:
                best_pos = pos[w]
                best = w
        if best < 0:
            raise NotConnectedOrderingError(f"vertex {v} has no earlier neighbor")
        parent[v] = best
        children[best].append(v)
    root = ordering.seq[0]
    internal = frozenset(v for v in range(g.n) if children[v] or v == root)
    leaves = frozenset(range(g.n)) - internal
    return FTree(
        root=root,
        parent=tuple(parent),
        children=tuple(tuple(sorted(c)) for c in children),
        leaves=leaves,
        internal=internal,
    )


@dataclass(frozen=True)
class LayerPartition:
    """BFS distance layers from a root."""

    root: int
    layers: tuple[tuple[int, ...], ...]
    layer_of: tuple[int, ...]

    @property
    def depth(self) -> int:
        return len(self.layers) - 1

    def max_layer_size(self) -> int:
        return max(len(layer) for layer in self.layers)


def bfs_layers(g: Graph, root: int) -> LayerPartition:
    if not (0 <= root < g.n):
        raise OutOfRangeError(f"root {root} out of range")
    dist = [-1] * g.n
    dist[root] = 0
    frontier = [root]
    layers = [[root]]
    while frontier:
        nxt = []
        for u in frontier:
            for w in g.adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    nxt.append(w)
        if nxt:
            layers.append(sorted(nxt))
        frontier = nxt
    return LayerPartition(
        root=root,
        layers=tuple(tuple(layer) for layer in layers),
        layer_of=tuple(dist),
    )


def layers_are_local(g: Graph, lp: LayerPartition) -> bool:
    """Every edge joins the same or consecutive layers."""
    return all(abs(lp.layer_of[u] - lp.layer_of[v]) <= 1 for u, v in g.edges)


def ordering_bandwidth(g: Graph, ordering) -> int:
    """Maximum position gap over edges; 0 for the one-vertex graph."""
    ordering = as_ordering(ordering)
    pos = ordering.pos
    return max((abs(pos[u] - pos[v]) for u, v in g.edges), default=0)


def _valid_gs(g: Graph, seq: tuple[int, ...]) -> bool:
    visited_mask = 1 << seq[0]
    for v in seq[1:]:
        if not (g.adj_mask[v] & visited_mask):
            return False
        visited_mask |= 1 << v
    return True


def _valid_bfs(g: Graph, seq: tuple[int, ...]) -> bool:
    # Forward simulation with a queue of discoverer groups: the next visited
    # vertex must neighbor the earliest visited vertex that still has
    # unvisited neighbors.
    masks = g.adj_mask
    visited = 1 << seq[0]
    u = 0
    for i in range(1, len(seq)):
        while u < i and not (masks[seq[u]] & ~visited):
            u += 1
        if u == i or not (masks[seq[u]] >> seq[i]) & 1:
            return False
        visited |= 1 << seq[i]
    return True


def _valid_lbfs(g: Graph, seq: tuple[int, ...]) -> bool:
    # Labels are integers: the neighbor visited at position i contributes bit
    # (n-1-i), so numeric order on labels equals lexicographic label order.
    n = g.n
    labels = [0] * n
    unvisited = set(range(n))
    for i, v in enumerate(seq):
        if labels[v] != max(labels[w] for w in unvisited):
            return False
        unvisited.discard(v)
        bit = 1 << (n - 1 - i)
        for w in g.adj[v]:
            if w in unvisited:
                labels[w] += bit
    return True


def validate_ordering(g: Graph, ordering, paradigm: str) -> bool:
    """True iff the ordering is producible by the given search paradigm."""
    check_paradigm(paradigm)
    ordering = as_ordering(ordering)
    if len(ordering) != g.n:
        return False
    seq = ordering.seq
    if g.n == 1:
        return True
    if paradigm == GS:
        return _valid_gs(g, seq)
    if paradigm == BFS:
        return _valid_bfs(g, seq)
    return _valid_lbfs(g, seq)


@dataclass(frozen=True)
class Decision:
    """Yes/no answer with an optional witness ordering and known optimum."""

    yes: bool
    witness: Optional[Ordering] = None
    optimum: Optional[int] = field(default=None, compare=False)
