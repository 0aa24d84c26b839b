"""Exponential-time ground-truth solvers for acceptance testing.

These exist to be slow and right: full ordering enumeration, subset
enumeration and spanning-tree enumeration, plus exact-but-pruned searches for
internal-vertex optima. Nothing here shares logic with the polynomial or
parameterized solvers it is used to check, beyond the rule-replay primitive
that defines forcing sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from . import engines
from .forcing import RuleSequence, ZSequence, find_rule_sequence, fresh_witnesses
from .graph import BFS, GS, LBFS, FTree, Graph, Ordering, check_paradigm


@dataclass(frozen=True)
class LeafRange:
    """Exact min and max leaf counts over all paradigm orderings, with witnesses."""

    min: int
    max: int
    min_witness: Ordering
    max_witness: Ordering


def _leaf_count(g: Graph, seq: tuple[int, ...]) -> int:
    pos = [0] * g.n
    for i, v in enumerate(seq):
        pos[v] = i
    has_child = [False] * g.n
    for i in range(1, g.n):
        v = seq[i]
        p = min(g.adj[v], key=lambda w: pos[w])
        has_child[p] = True
    # root counts as internal even when childless (n == 1)
    return sum(1 for v in range(g.n) if not has_child[v] and v != seq[0])


def brute_leaf_range(g: Graph, paradigm: str) -> LeafRange:
    check_paradigm(paradigm)
    lo = g.n + 1
    hi = -1
    lo_wit = hi_wit = None
    for ordering in engines.enumerate_orderings(g, paradigm):
        k = _leaf_count(g, ordering.seq)
        if k < lo:
            lo, lo_wit = k, ordering
        if k > hi:
            hi, hi_wit = k, ordering
    assert lo_wit is not None and hi_wit is not None
    return LeafRange(min=lo, max=hi, min_witness=lo_wit, max_witness=hi_wit)


def _search_internal(g: Graph, paradigm: str, maximize: bool) -> tuple[int, Ordering]:
    """Exact internal-vertex optimum via pruned exhaustive ordering search.

    The internal count of a prefix is a lower bound for every completion
    (children are only ever added), which gives the minimization cut; the
    maximization cut adds the vertices that could still gain a child.
    """
    n = g.n
    if n == 1:
        return 1, Ordering((0,))
    masks = g.adj_mask

    def internal_of(seq: tuple[int, ...]) -> int:
        return n - _leaf_count(g, seq)

    warm = []
    for rho in (tuple(range(n)), tuple(sorted(range(n), key=lambda v: -len(g.adj[v])))):
        warm.append(engines.run_plus(g, paradigm, rho))
    pick = max if maximize else min
    best_ord = pick(warm, key=lambda o: internal_of(o.seq))
    best = internal_of(best_ord.seq)

    seq: list[int] = []
    pos = [0] * n
    has_child = [False] * n
    labels = [0] * n  # lbfs only

    def candidates(visited: int, frontier: int, u: int) -> list[int]:
        if paradigm == GS:
            return list(engines._bits(frontier))
        if paradigm == BFS:
            while not (masks[seq[u]] & ~visited):
                u += 1
            return list(engines._bits(masks[seq[u]] & ~visited))
        rem = [w for w in range(n) if not (visited >> w) & 1]
        top = max(labels[w] for w in rem)
        return [w for w in rem if labels[w] == top]

    def rec(visited: int, frontier: int, u: int, internal: int):
        nonlocal best, best_ord
        if len(seq) == n:
            if (internal > best) if maximize else (internal < best):
                best = internal
                best_ord = Ordering(tuple(seq))
            return
        if maximize:
            growable = sum(1 for w in seq if not has_child[w] and masks[w] & ~visited)
            if internal + (n - len(seq)) + growable <= best:
                return
        elif internal >= best:
            return
        i = len(seq)
        for v in candidates(visited, frontier, u):
            p = min((w for w in g.adj[v] if (visited >> w) & 1), key=lambda w: pos[w])
            gained = not has_child[p]
            has_child[p] = True
            seq.append(v)
            pos[v] = i
            new_visited = visited | (1 << v)
            touched: list[int] = []
            if paradigm == LBFS:
                bit = 1 << (n - 1 - i)
                touched = [w for w in g.adj[v] if not (new_visited >> w) & 1]
                for w in touched:
                    labels[w] += bit
            rec(new_visited, (frontier | masks[v]) & ~new_visited, u, internal + gained)
            if paradigm == LBFS:
                for w in touched:
                    labels[w] -= bit
            seq.pop()
            if gained:
                has_child[p] = False

    for start in range(n):
        seq.append(start)
        pos[start] = 0
        # the root is internal in every completion with n >= 2
        has_child[start] = True
        touched0: list[int] = []
        if paradigm == LBFS:
            bit = 1 << (n - 1)
            touched0 = list(g.adj[start])
            for w in touched0:
                labels[w] += bit
        rec(1 << start, masks[start], 0, 1)
        for w in touched0:
            labels[w] -= 1 << (n - 1)
        has_child[start] = False
        seq.pop()
    return best, best_ord


def brute_min_internal(g: Graph, paradigm: str) -> tuple[int, Ordering]:
    check_paradigm(paradigm)
    return _search_internal(g, paradigm, maximize=False)


def brute_max_internal(g: Graph, paradigm: str) -> tuple[int, Ordering]:
    check_paradigm(paradigm)
    return _search_internal(g, paradigm, maximize=True)


def brute_min_cds(g: Graph) -> frozenset[int]:
    """Minimum connected dominating set by subset enumeration, smallest first."""
    closed = [g.adj_mask[v] | (1 << v) for v in range(g.n)]
    full = (1 << g.n) - 1
    for k in range(1, g.n + 1):
        for combo in combinations(range(g.n), k):
            dom = 0
            for v in combo:
                dom |= closed[v]
            if dom == full and g.induced_connected(frozenset(combo)):
                return frozenset(combo)
    raise AssertionError("connected graph must have a connected dominating set")


def _tree_as_ftree(n: int, tree_edges: list[tuple[int, int]], root: int) -> FTree:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in tree_edges:
        adj[u].append(v)
        adj[v].append(u)
    parent = [-1] * n
    children: list[list[int]] = [[] for _ in range(n)]
    stack = [root]
    seen = {root}
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                parent[w] = u
                children[u].append(w)
                stack.append(w)
    internal = frozenset(v for v in range(n) if children[v] or v == root)
    return FTree(
        root=root,
        parent=tuple(parent),
        children=tuple(tuple(sorted(c)) for c in children),
        leaves=frozenset(range(n)) - internal,
        internal=internal,
    )


@dataclass(frozen=True)
class SpanningLeafRange:
    """Min/max non-root-leaf counts over all rooted spanning trees."""

    min: int
    max: int
    min_tree: FTree
    max_tree: FTree


def brute_spanning_leaf_range(g: Graph) -> SpanningLeafRange:
    """Edge-subset backtracking over all spanning trees, roots swept in closed form.

    A tree with d degree-one vertices yields rooted leaf counts d-1 (root at a
    degree-one vertex) up to d (root internal; only d-1 when n == 2).
    """
    n = g.n
    if n == 1:
        t = _tree_as_ftree(1, [], 0)
        return SpanningLeafRange(0, 0, t, t)
    edges = list(g.edges)
    m = len(edges)
    lo: Optional[int] = None
    hi: Optional[int] = None
    lo_edges: list[tuple[int, int]] = []
    hi_edges: list[tuple[int, int]] = []

    def connected_without(skipped: set[int], upto: int) -> bool:
        adj = [[] for _ in range(n)]
        for j, (u, v) in enumerate(edges):
            if j < upto and j in skipped:
                continue
            adj[u].append(v)
            adj[v].append(u)
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == n

    chosen: list[int] = []
    skipped: set[int] = set()

    def rec(i: int, comp: list[int]):
        nonlocal lo, hi, lo_edges, hi_edges
        if len(chosen) == n - 1:
            deg = [0] * n
            for j in chosen:
                u, v = edges[j]
                deg[u] += 1
                deg[v] += 1
            d1 = sum(1 for x in deg if x == 1)
            tmin = d1 - 1
            tmax = d1 if n >= 3 else d1 - 1
            if lo is None or tmin < lo:
                lo, lo_edges = tmin, [edges[j] for j in chosen]
            if hi is None or tmax > hi:
                hi, hi_edges = tmax, [edges[j] for j in chosen]
            return
        if i == m or len(chosen) + (m - i) < n - 1:
            return

        def find(x: int) -> int:
            while comp[x] != x:
                comp[x] = comp[comp[x]]
                x = comp[x]
            return x

        u, v = edges[i]
        ru, rv = find(u), find(v)
        if ru != rv:
            nxt = list(comp)
            nxt[ru] = rv
            chosen.append(i)
            rec(i + 1, nxt)
            chosen.pop()
        skipped.add(i)
        if connected_without(skipped, i + 1):
            rec(i + 1, comp)
        skipped.discard(i)

    rec(0, list(range(n)))
    assert lo is not None and hi is not None

    def root_for(tree_edges: list[tuple[int, int]], want_min: bool) -> int:
        deg = [0] * n
        for u, v in tree_edges:
            deg[u] += 1
            deg[v] += 1
        if want_min or n == 2:
            return next(v for v in range(n) if deg[v] == 1)
        return next(v for v in range(n) if deg[v] >= 2)

    return SpanningLeafRange(
        min=lo,
        max=hi,
        min_tree=_tree_as_ftree(n, lo_edges, root_for(lo_edges, True)),
        max_tree=_tree_as_ftree(n, hi_edges, root_for(hi_edges, False)),
    )


def brute_longest_zsequence(g: Graph) -> ZSequence:
    """A longest fresh-neighbor GS prefix, by memoized DFS over sequences."""
    n = g.n
    memo: dict[tuple[int, int], tuple[int, tuple[int, ...]]] = {}

    def rec(members: int, closure: int) -> tuple[int, tuple[int, ...]]:
        key = (members, closure)
        if key in memo:
            return memo[key]
        best = (0, ())
        for v in range(n):
            if (members >> v) & 1:
                continue
            if members and not (g.adj_mask[v] & members):
                continue
            if not (g.adj_mask[v] & ~closure):
                continue
            sub_len, sub_seq = rec(
                members | (1 << v), closure | g.adj_mask[v] | (1 << v)
            )
            if sub_len + 1 > best[0]:
                best = (sub_len + 1, (v,) + sub_seq)
        memo[key] = best
        return best

    _, seq = rec(0, 0)
    if not seq:
        return ZSequence(seq=(), witnesses=())
    return ZSequence(seq=seq, witnesses=fresh_witnesses(g, seq))


def brute_min_zstar(g: Graph) -> tuple[frozenset[int], RuleSequence]:
    """Minimum forcing set by subset enumeration plus rule-order search."""
    for k in range(1, g.n + 1):
        for combo in combinations(range(g.n), k):
            rs = find_rule_sequence(g, combo)
            if rs is not None:
                return frozenset(combo), rs
    raise AssertionError("the full vertex set is always a forcing set")


def _has_long_induced_cycle(n: int, adj: list[set[int]], min_len: int = 5) -> bool:
    path: list[int] = []

    def extend(a: int) -> bool:
        last = path[-1]
        for w in sorted(adj[last]):
            if w <= a or w in path:
                continue
            if any(w in adj[p] for p in path[1:-1]):
                continue
            if w in adj[a]:
                if len(path) + 1 >= min_len:
                    return True
                continue
            path.append(w)
            if extend(a):
                return True
            path.pop()
        return False

    for a in range(n):
        for b in sorted(adj[a]):
            if b <= a:
                continue
            path[:] = [a, b]
            if extend(a):
                return True
    return False


def is_weakly_chordal(g: Graph) -> bool:
    """No induced cycle of length five or more in the graph or its complement."""
    if g.n <= 4:
        return True
    adj = [set(nbrs) for nbrs in g.adj]
    co_adj = [
        {w for w in range(g.n) if w != v and w not in g.adj[v]} for v in range(g.n)
    ]
    return not (
        _has_long_induced_cycle(g.n, adj) or _has_long_induced_cycle(g.n, co_adj)
    )


def brute_internal_range(g: Graph, paradigm: str) -> tuple[int, int]:
    """Convenience pair (min internal, max internal); complement of leaf optima."""
    lr = brute_leaf_range(g, paradigm)
    return g.n - lr.max, g.n - lr.min
