"""Generic-search solvers built on the leaf/forcing/domination equivalences.

Max-leaf reduces to exact minimum connected dominating set: a first-in tree
where S are leaves exists iff V - S is a connected dominating set. Min-leaf
goes through forcing sets: a tree with at most k leaves exists iff a
zstar-forcing set of size at most k does, and graphs admitting one have
pathwidth (hence treewidth) at most k, which gates the width DP.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import zforcing
from .errors import (
    DecompositionUnavailableError,
    InvalidDecompositionError,
    NotGSOrderingError,
)
from .forcing import (
    RuleSequence,
    ZSequence,
    find_rule_sequence,
    replay_rules,
    validate_zsequence,
    zsequence_from_rules,
)
from .graph import (
    GS,
    Decision,
    FTree,
    Graph,
    Ordering,
    as_ordering,
    ftree_from_ordering,
    validate_ordering,
)


# ---------------------------------------------------------------------------
# ordering assembly helpers


def _greedy_gs_extension(g: Graph, prefix: tuple[int, ...]) -> Ordering:
    """Extend a connected prefix to a GS ordering, lowest eligible id first."""
    visited = set(prefix)
    seq = list(prefix)
    while len(seq) < g.n:
        v = min(
            w
            for u in seq
            for w in g.adj[u]
            if w not in visited
        )
        seq.append(v)
        visited.add(v)
    return Ordering(tuple(seq))


def gs_ordering_from_cds(g: Graph, dom: frozenset[int]) -> Ordering:
    """GS ordering visiting the connected dominating set first, then the rest."""
    start = min(dom)
    seq = [start]
    visited = {start}
    while len(seq) < len(dom):
        v = min(
            w for u in seq for w in g.adj[u] if w in dom and w not in visited
        )
        seq.append(v)
        visited.add(v)
    return _greedy_gs_extension(g, tuple(seq))


# ---------------------------------------------------------------------------
# exact minimum connected dominating set (branch and bound)


def _greedy_cds(g: Graph) -> frozenset[int]:
    if g.n == 1:
        return frozenset({0})
    closed = [g.adj_mask[v] | (1 << v) for v in range(g.n)]
    full = (1 << g.n) - 1
    start = max(range(g.n), key=lambda v: len(g.adj[v]))
    chosen = [start]
    dom = closed[start]
    while dom != full:
        cand = max(
            (w for u in chosen for w in g.adj[u] if w not in chosen),
            key=lambda w: (bin(closed[w] & ~dom).count("1"), -w),
        )
        chosen.append(cand)
        dom |= closed[cand]
    return frozenset(chosen)


def min_cds(g: Graph, stop_at: Optional[int] = None) -> frozenset[int]:
    """Exact minimum connected dominating set via branch and bound.

    Grows connected sets only, branching include/exclude on frontier vertices,
    with unit propagation on vertices whose last allowed dominator would be
    excluded. `stop_at` allows early return once a set that small is found.
    """
    n = g.n
    if n == 1:
        return frozenset({0})
    closed = [g.adj_mask[v] | (1 << v) for v in range(n)]
    full = (1 << n) - 1
    masks = g.adj_mask
    best = _greedy_cds(g)
    if stop_at is not None and len(best) <= stop_at:
        return best
    max_closed = max(bin(c).count("1") for c in closed)

    def rec(chosen: list[int], chosen_mask: int, dom: int, banned: int):
        nonlocal best
        if dom == full:
            if len(chosen) < len(best):
                best = frozenset(chosen)
            return
        undominated = bin(full & ~dom).count("1")
        lower = (undominated + max_closed - 1) // max_closed
        if len(chosen) + lower >= len(best):
            return
        if stop_at is not None and len(best) <= stop_at:
            return
        frontier = 0
        for u in chosen:
            frontier |= masks[u]
        frontier &= ~chosen_mask & ~banned
        # every undominated vertex needs some allowed dominator reachable
        rem = full & ~dom
        while rem:
            low = rem & -rem
            x = low.bit_length() - 1
            rem ^= low
            if not (closed[x] & ~banned & ~chosen_mask):
                return
        if not frontier:
            return
        # branch on the frontier vertex covering the most undominated vertices
        v = max(
            (w for w in range(n) if (frontier >> w) & 1),
            key=lambda w: (bin(closed[w] & ~dom).count("1"), -w),
        )
        chosen.append(v)
        rec(chosen, chosen_mask | (1 << v), dom | closed[v], banned)
        chosen.pop()
        rec(chosen, chosen_mask, dom, banned | (1 << v))

    for start in range(n):
        if stop_at is not None and len(best) <= stop_at:
            break
        if len(best) <= 1:
            break
        # sets whose minimum vertex is `start`: smaller ids are banned
        banned = (1 << start) - 1
        rec([start], 1 << start, closed[start], banned)
    return best


# ---------------------------------------------------------------------------
# solvers


def max_leaf_gs(g: Graph, k: int) -> Decision:
    """Is there a GS first-in tree with at least k leaves?"""
    if k < 1:
        raise ValueError("k must be at least 1")
    if g.n == 1:
        return Decision(False, None, optimum=0)
    if k > g.n - 1:
        return Decision(False, None)
    target = g.n - k
    dom = min_cds(g, stop_at=target)
    if len(dom) > target:
        return Decision(False, None, optimum=g.n - len(dom))
    witness = gs_ordering_from_cds(g, dom)
    tree = ftree_from_ordering(g, witness)
    assert tree.leaf_count >= k
    return Decision(True, witness)


def min_leaf_gs(
    g: Graph,
    k: int,
    td: Optional[zforcing.TreeDecomposition] = None,
    *,
    exact_width_limit: int = 16,
) -> Decision:
    """Is there a GS first-in tree with at most k leaves?

    Pipeline: obtain a decomposition; if its width exceeds k, an exact width
    check may already refute (trees with <= k leaves force pathwidth <= k,
    and treewidth is a lower bound for pathwidth); otherwise run the forcing
    DP and convert its witness seed set into a GS ordering.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if g.n == 1:
        return Decision(True, Ordering((0,)), optimum=0)
    if td is not None:
        zforcing.validate_td(g, td)
    else:
        td = zforcing.heuristic_td(g)
        if td.width > k:
            if g.n > exact_width_limit:
                raise DecompositionUnavailableError(
                    f"heuristic width {td.width} exceeds k={k} and n={g.n} is too "
                    "large for the exact width check; supply a decomposition"
                )
            width, order = zforcing.exact_treewidth(g)
            if width > k:
                return Decision(False, None)
            td = zforcing.td_from_elimination(g, order)
    size, seed = zforcing.min_zstar_tw(g, td)
    if size > k:
        return Decision(False, None, optimum=size)
    rules = find_rule_sequence(g, seed)
    assert rules is not None, "witness seed set must replay"
    z = zsequence_from_rules(g, rules)
    witness = zsequence_to_ordering(g, z)
    tree = ftree_from_ordering(g, witness)
    assert tree.leaf_count <= size
    return Decision(True, witness, optimum=size)


# ---------------------------------------------------------------------------
# constructive conversions


def zsequence_to_ordering(g: Graph, z: ZSequence) -> Ordering:
    """GS ordering starting with the sequence; every member ends up internal."""
    validate_zsequence(g, z)
    if len(z.seq) == 0:
        return _greedy_gs_extension(g, (0,))
    ordering = _greedy_gs_extension(g, z.seq)
    tree = ftree_from_ordering(g, ordering)
    assert tree.leaf_count <= g.n - len(z.seq)
    return ordering


def ftree_to_zstar(g: Graph, ordering) -> tuple[frozenset[int], RuleSequence]:
    """Leaf set of the ordering's tree as a forcing set, with its rule order.

    Internal vertices are colored in descending position, each by one of its
    children: the child's only white neighbor at that point is its parent.
    For the one-vertex graph the leaf set is empty and forces nothing.
    """
    ordering = as_ordering(ordering)
    if not validate_ordering(g, ordering, GS):
        raise NotGSOrderingError(f"{ordering.seq} is not a GS ordering")
    tree = ftree_from_ordering(g, ordering)
    if g.n == 1:
        return frozenset(), RuleSequence(initial=frozenset(), rules=(), complete=False)
    pos = ordering.pos
    internals = sorted(tree.internal, key=lambda v: pos[v], reverse=True)
    rules = []
    for v in internals:
        child = min(tree.children[v])
        rules.append((child, v))
    rs = RuleSequence(initial=tree.leaves, rules=tuple(rules), complete=True)
    assert replay_rules(g, rs), "leaf-set rule sequence must replay"
    return tree.leaves, rs


@dataclass(frozen=True)
class PathDecomposition:
    bags: tuple[frozenset[int], ...]

    @property
    def width(self) -> int:
        return max(len(b) for b in self.bags) - 1


def validate_path_decomposition(g: Graph, pd: PathDecomposition) -> None:
    if not pd.bags:
        raise InvalidDecompositionError("no bags")
    first = [-1] * g.n
    last = [-1] * g.n
    for i, bag in enumerate(pd.bags):
        for v in bag:
            if not (0 <= v < g.n):
                raise InvalidDecompositionError(f"bag vertex {v} out of range")
            if first[v] < 0:
                first[v] = i
            last[v] = i
    for v in range(g.n):
        if first[v] < 0:
            raise InvalidDecompositionError(f"vertex {v} in no bag")
        for i in range(first[v], last[v] + 1):
            if v not in pd.bags[i]:
                raise InvalidDecompositionError(f"occurrences of {v} are not contiguous")
    for u, v in g.edges:
        if not any(u in bag and v in bag for bag in pd.bags):
            raise InvalidDecompositionError(f"edge ({u},{v}) not covered")


def _leaf_suffix_normalize(g: Graph, ordering: Ordering, tree: FTree) -> Ordering:
    # Moving leaves to the end keeps every parent: leaves have earlier
    # parents, and an internal vertex's parent is internal (a leaf has no
    # children), so the relative order of internals fixes all parents.
    internals = [v for v in ordering.seq if v in tree.internal]
    leaves = [v for v in ordering.seq if v in tree.leaves]
    return Ordering(tuple(internals + leaves))


def pathdecomp_from_gs(g: Graph, ordering) -> PathDecomposition:
    """Path decomposition of width at most the leaf count of the ordering's tree.

    Start from the leaf set as a bag, then walk the internal vertices from
    the right: introduce the vertex, then drop its children.
    """
    ordering = as_ordering(ordering)
    if not validate_ordering(g, ordering, GS):
        raise NotGSOrderingError(f"{ordering.seq} is not a GS ordering")
    tree = ftree_from_ordering(g, ordering)
    norm = _leaf_suffix_normalize(g, ordering, tree)
    renorm = ftree_from_ordering(g, norm)
    assert renorm.parent == tree.parent, "normalization must preserve the tree"
    t = g.n - tree.leaf_count
    bags: list[frozenset[int]] = [frozenset(tree.leaves)]
    cur = set(tree.leaves)
    for i in range(t):
        v = norm.seq[t - 1 - i]
        cur.add(v)
        bags.append(frozenset(cur))
        cur -= set(tree.children[v])
        bags.append(frozenset(cur))
    pd = PathDecomposition(bags=tuple(bags))
    validate_path_decomposition(g, pd)
    assert pd.width <= tree.leaf_count
    return pd
