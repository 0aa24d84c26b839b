"""Deterministic tie-broken search runners and exhaustive ordering enumeration.

run_plus resolves every tie of a paradigm using a priority ordering rho
(leftmost in rho wins). enumerate_orderings backtracks over the tie set at
each step, branching in ascending vertex id, so every paradigm ordering is
produced exactly once without hashing.
"""

from __future__ import annotations

from typing import Iterator

from .errors import NotACliqueError, PrefixNotRealizedError
from .graph import BFS, GS, Graph, Ordering, as_ordering, check_paradigm


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _run_gs(g: Graph, rho_pos: list[int]) -> list[int]:
    start = rho_pos.index(0)
    seq = [start]
    visited = 1 << start
    frontier = g.adj_mask[start] & ~visited
    for _ in range(g.n - 1):
        v = min(_bits(frontier), key=lambda w: rho_pos[w])
        seq.append(v)
        visited |= 1 << v
        frontier = (frontier | g.adj_mask[v]) & ~visited
    return seq


def _run_bfs(g: Graph, rho_pos: list[int]) -> list[int]:
    start = rho_pos.index(0)
    seq = [start]
    visited = 1 << start
    u = 0
    for _ in range(g.n - 1):
        while not (g.adj_mask[seq[u]] & ~visited):
            u += 1
        tie = g.adj_mask[seq[u]] & ~visited
        v = min(_bits(tie), key=lambda w: rho_pos[w])
        seq.append(v)
        visited |= 1 << v
    return seq


def _run_lbfs(g: Graph, rho_pos: list[int]) -> list[int]:
    n = g.n
    start = rho_pos.index(0)
    labels = [0] * n
    unvisited = set(range(n))
    seq = []
    v = start
    for i in range(n):
        seq.append(v)
        unvisited.discard(v)
        bit = 1 << (n - 1 - i)
        for w in g.adj[v]:
            if w in unvisited:
                labels[w] += bit
        if unvisited:
            best = max(labels[w] for w in unvisited)
            v = min((w for w in unvisited if labels[w] == best), key=lambda w: rho_pos[w])
    return seq


def run_plus(g: Graph, paradigm: str, rho) -> Ordering:
    """Run the paradigm with all ties broken by rho; starts at rho's first vertex."""
    check_paradigm(paradigm)
    rho = as_ordering(rho)
    if len(rho) != g.n:
        raise ValueError("tie-break ordering must cover all vertices")
    rho_pos = list(rho.pos)
    if paradigm == GS:
        seq = _run_gs(g, rho_pos)
    elif paradigm == BFS:
        seq = _run_bfs(g, rho_pos)
    else:
        seq = _run_lbfs(g, rho_pos)
    return Ordering(tuple(seq))


def complete_from_clique_prefix(g: Graph, paradigm: str, prefix) -> Ordering:
    """A paradigm ordering that starts exactly with the given clique prefix.

    Realized by run_plus with rho = prefix followed by the remaining vertices
    in id order. GS, BFS and LBFS are clique starters, so the trailing
    assertion can only fire on an internal error.
    """
    prefix = tuple(prefix)
    if len(set(prefix)) != len(prefix):
        raise NotACliqueError("prefix repeats a vertex")
    if not all(0 <= v < g.n for v in prefix):
        raise NotACliqueError("prefix vertex out of range")
    if not g.is_clique(prefix):
        raise NotACliqueError(f"prefix {prefix} is not a clique")
    rest = [v for v in range(g.n) if v not in set(prefix)]
    out = run_plus(g, paradigm, Ordering(tuple(prefix) + tuple(rest)))
    if out.seq[: len(prefix)] != prefix:
        raise PrefixNotRealizedError(f"{paradigm} did not realize clique prefix {prefix}")
    return out


def _enumerate_gs(g: Graph) -> Iterator[tuple[int, ...]]:
    n = g.n
    masks = g.adj_mask
    seq: list[int] = []

    def rec(visited: int, frontier: int) -> Iterator[tuple[int, ...]]:
        if len(seq) == n:
            yield tuple(seq)
            return
        for v in _bits(frontier):
            seq.append(v)
            new_visited = visited | (1 << v)
            yield from rec(new_visited, (frontier | masks[v]) & ~new_visited)
            seq.pop()

    for start in range(n):
        seq.append(start)
        yield from rec(1 << start, masks[start])
        seq.pop()


def _enumerate_bfs(g: Graph) -> Iterator[tuple[int, ...]]:
    n = g.n
    masks = g.adj_mask
    seq: list[int] = []

    def rec(visited: int, u: int) -> Iterator[tuple[int, ...]]:
        if len(seq) == n:
            yield tuple(seq)
            return
        while not (masks[seq[u]] & ~visited):
            u += 1
        for v in _bits(masks[seq[u]] & ~visited):
            seq.append(v)
            yield from rec(visited | (1 << v), u)
            seq.pop()

    for start in range(n):
        seq.append(start)
        yield from rec(1 << start, 0)
        seq.pop()


def _enumerate_lbfs(g: Graph) -> Iterator[tuple[int, ...]]:
    n = g.n
    labels = [0] * n
    seq: list[int] = []

    def rec(unvisited: set[int]) -> Iterator[tuple[int, ...]]:
        if not unvisited:
            yield tuple(seq)
            return
        best = max(labels[w] for w in unvisited)
        bit = 1 << (n - 1 - len(seq))
        for v in sorted(w for w in unvisited if labels[w] == best):
            seq.append(v)
            unvisited.discard(v)
            touched = [w for w in g.adj[v] if w in unvisited]
            for w in touched:
                labels[w] += bit
            yield from rec(unvisited)
            for w in touched:
                labels[w] -= bit
            unvisited.add(v)
            seq.pop()

    yield from rec(set(range(n)))


def enumerate_orderings(g: Graph, paradigm: str) -> Iterator[Ordering]:
    """Yield every paradigm ordering exactly once; stop consuming to exit early.

    Intended for desk scale (roughly n <= 10 for GS, n <= 12 for BFS/LBFS).
    """
    check_paradigm(paradigm)
    if paradigm == GS:
        raw = _enumerate_gs(g)
    elif paradigm == BFS:
        raw = _enumerate_bfs(g)
    else:
        raw = _enumerate_lbfs(g)
    for seq in raw:
        yield Ordering(seq)
