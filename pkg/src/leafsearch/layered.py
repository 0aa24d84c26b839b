"""Layer-by-layer dynamic program for min/max-leaf first-in trees of BFS and LBFS.

For every start vertex the distance layers are fixed, and which layer-i
vertices get a child in layer i+1 depends only on the internal ordering of
layer i (each lower vertex attaches to its leftmost layer-i neighbor). The DP
therefore tables one value per ordering of the current layer and links
orderings of consecutive layers through a paradigm-specific compatibility
check. Layer orderings are materialized explicitly, up to a configurable cap;
exceeding it is a reported error, never silent truncation.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from itertools import permutations, product
from typing import Iterator, Optional

from . import engines
from .errors import BudgetExceededError
from .graph import (
    BFS,
    LBFS,
    Decision,
    Graph,
    LayerPartition,
    Ordering,
    bfs_layers,
    check_paradigm,
    layers_are_local,
)

DEFAULT_LAYER_CAP = 40320  # 8!

MIN = "min"
MAX = "max"


def _check_layer_ordering(layer: tuple[int, ...], arr) -> tuple[int, ...]:
    arr = tuple(arr)
    if sorted(arr) != sorted(layer):
        raise ValueError(f"{arr} is not an ordering of layer {layer}")
    return arr


def _bfs_anchor(g: Graph, pos_prev: dict[int, int], v: int) -> int:
    """Position in the previous layer of v's discoverer (leftmost neighbor there)."""
    return min(pos_prev[w] for w in g.adj[v] if w in pos_prev)


def layer_transition_valid(
    g: Graph,
    layers: LayerPartition,
    i: int,
    sigma_prev,
    tau,
    paradigm: str,
) -> bool:
    """Whether tau can be the ordering of layer i right after sigma_prev."""
    check_paradigm(paradigm, (BFS, LBFS))
    if not (1 <= i <= layers.depth):
        raise ValueError(f"layer index {i} out of range")
    sigma_prev = _check_layer_ordering(layers.layers[i - 1], sigma_prev)
    tau = _check_layer_ordering(layers.layers[i], tau)
    pos_prev = {v: j for j, v in enumerate(sigma_prev)}
    if paradigm == BFS:
        anchors = [_bfs_anchor(g, pos_prev, v) for v in tau]
        return all(a <= b for a, b in zip(anchors, anchors[1:]))
    # LBFS: at each step the chosen vertex's label must be maximal among the
    # rest of the layer (lower layers never compete: their labels lack any
    # previous-layer position).
    slots = len(sigma_prev) + len(tau)
    labels = {
        v: sum(1 << (slots - 1 - pos_prev[w]) for w in g.adj[v] if w in pos_prev)
        for v in tau
    }
    for j, v in enumerate(tau):
        if labels[v] != max(labels[u] for u in tau[j:]):
            return False
        bit = 1 << (slots - 1 - (len(sigma_prev) + j))
        for u in tau[j + 1 :]:
            if u in g.adj[v]:
                labels[u] += bit
    return True


def layer_leaf_count(g: Graph, layers: LayerPartition, i: int, tau) -> int:
    """Leaves of layer i implied by its ordering: members without a child below."""
    if i >= layers.depth:
        raise ValueError("leaf count by ordering is undefined for the last layer")
    tau = _check_layer_ordering(layers.layers[i], tau)
    pos = {v: j for j, v in enumerate(tau)}
    parents = set()
    for w in layers.layers[i + 1]:
        parents.add(min((x for x in g.adj[w] if x in pos), key=pos.__getitem__))
    return len(tau) - len(parents)


def _bfs_successors(
    g: Graph, sigma_prev: tuple[int, ...], layer: tuple[int, ...]
) -> Iterator[tuple[int, ...]]:
    pos_prev = {v: j for j, v in enumerate(sigma_prev)}
    groups: dict[int, list[int]] = {}
    for v in layer:
        groups.setdefault(_bfs_anchor(g, pos_prev, v), []).append(v)
    ordered = [sorted(groups[a]) for a in sorted(groups)]
    for perm_tuple in product(*(permutations(grp) for grp in ordered)):
        out: tuple[int, ...] = ()
        for part in perm_tuple:
            out += part
        yield out


def _lbfs_successors(
    g: Graph, sigma_prev: tuple[int, ...], layer: tuple[int, ...]
) -> Iterator[tuple[int, ...]]:
    slots = len(sigma_prev) + len(layer)
    pos_prev = {v: j for j, v in enumerate(sigma_prev)}
    labels = {
        v: sum(1 << (slots - 1 - pos_prev[w]) for w in g.adj[v] if w in pos_prev)
        for v in layer
    }
    chosen: list[int] = []
    remaining = set(layer)

    def rec() -> Iterator[tuple[int, ...]]:
        if not remaining:
            yield tuple(chosen)
            return
        top = max(labels[w] for w in remaining)
        bit = 1 << (slots - 1 - (len(sigma_prev) + len(chosen)))
        for v in sorted(w for w in remaining if labels[w] == top):
            chosen.append(v)
            remaining.discard(v)
            touched = [u for u in g.adj[v] if u in remaining]
            for u in touched:
                labels[u] += bit
            yield from rec()
            for u in touched:
                labels[u] -= bit
            remaining.add(v)
            chosen.pop()

    yield from rec()


def _successors(g, paradigm, sigma_prev, layer):
    if paradigm == BFS:
        return _bfs_successors(g, sigma_prev, layer)
    return _lbfs_successors(g, sigma_prev, layer)


def _complete_prefix(g: Graph, paradigm: str, prefix: tuple[int, ...]) -> Ordering:
    """Extend a valid partial paradigm ordering greedily (ascending ids)."""
    rho = tuple(prefix) + tuple(v for v in range(g.n) if v not in set(prefix))
    out = engines.run_plus(g, paradigm, rho)
    if out.seq[: len(prefix)] != tuple(prefix):
        raise AssertionError(f"prefix {prefix} not realized; transition tables inconsistent")
    return out


def _reconstruct(tables, last_tau) -> tuple[int, ...]:
    seq: tuple[int, ...] = ()
    tau = last_tau
    for tbl in reversed(tables):
        seq = tau + seq
        tau = tbl[tau][1]
    return seq


def _solve_root(g, paradigm, objective, k, root, cap):
    """Per-root DP. Returns (decision, witness_seq, optimum_or_None)."""
    lp = bfs_layers(g, root)
    if not layers_are_local(g, lp):
        raise AssertionError("distance layers violated edge locality")
    if objective == MIN and lp.max_layer_size() > k:
        # a layer bigger than k forces more than k leaves from this root
        return False, None, None
    if objective == MAX and lp.max_layer_size() >= k:
        witness = _complete_prefix(g, paradigm, (root,))
        return True, witness.seq, None
    for layer in lp.layers:
        if math.factorial(len(layer)) > cap:
            raise BudgetExceededError(
                f"layer of size {len(layer)} needs {math.factorial(len(layer))} "
                f"orderings, above the cap of {cap}"
            )
    depth = lp.depth
    tables: list[dict[tuple[int, ...], tuple[int, Optional[tuple[int, ...]]]]] = [
        {(root,): (0, None)}
    ]
    better = (lambda a, b: a > b) if objective == MAX else (lambda a, b: a < b)
    for i in range(1, depth + 1):
        layer = lp.layers[i]
        add_last = len(layer) if i == depth else None
        new: dict[tuple[int, ...], tuple[int, tuple[int, ...]]] = {}
        for sigma in sorted(tables[i - 1]):
            val = tables[i - 1][sigma][0]
            for tau in _successors(g, paradigm, sigma, layer):
                add = add_last if add_last is not None else layer_leaf_count(g, lp, i, tau)
                cand = val + add
                cur = new.get(tau)
                # ties keep the earliest (lexicographically smallest) predecessor
                if cur is None or better(cand, cur[0]):
                    new[tau] = (cand, sigma)
        if objective == MIN:
            new = {t: e for t, e in new.items() if e[0] <= k}
            if not new:
                return False, None, None
        tables.append(new)
        if objective == MAX:
            hits = sorted(t for t, e in new.items() if e[0] >= k)
            if hits:
                prefix = _reconstruct(tables, hits[0])
                witness = _complete_prefix(g, paradigm, prefix)
                return True, witness.seq, None
    final = tables[-1]
    best_val = None
    best_tau = None
    for tau in sorted(final):
        val = final[tau][0]
        if best_val is None or better(val, best_val):
            best_val, best_tau = val, tau
    ok = best_val <= k if objective == MIN else best_val >= k
    if not ok:
        return False, None, best_val
    return True, _reconstruct(tables, best_tau), best_val


def solve(
    g: Graph,
    paradigm: str,
    objective: str,
    k: int,
    *,
    max_layer_orderings: int = DEFAULT_LAYER_CAP,
    threads: int = 1,
) -> Decision:
    """Decide whether some (L)BFS first-in tree has <= k (min) or >= k (max) leaves.

    Sweeps every start vertex; returns the witness ordering of the first
    (lowest-id) start vertex that succeeds.
    """
    check_paradigm(paradigm, (BFS, LBFS))
    if objective not in (MIN, MAX):
        raise ValueError(f"objective must be '{MIN}' or '{MAX}', got {objective!r}")
    if k < 1:
        raise ValueError("k must be at least 1")
    if g.n == 1:
        # single vertex: the root is internal by convention, zero leaves
        if objective == MIN:
            return Decision(True, Ordering((0,)), optimum=0)
        return Decision(False, None, optimum=0)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(
                pool.map(
                    lambda r: _solve_root(g, paradigm, objective, k, r, max_layer_orderings),
                    range(g.n),
                )
            )
        for yes, seq, _ in results:
            if yes:
                return Decision(True, Ordering(seq))
        return Decision(False, None)

    for root in range(g.n):
        yes, seq, _ = _solve_root(g, paradigm, objective, k, root, max_layer_orderings)
        if yes:
            return Decision(True, Ordering(seq))
    return Decision(False, None)
