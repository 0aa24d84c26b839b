"""XP solvers for internal-vertex objectives.

BFS relies on the tie-broken rerun property: fixing the relative order of the
first k internal vertices and rerunning BFS with that prefix as tie-break
preserves those vertices' children, so enumerating ordered vertex tuples of
size at most k is exhaustive. GS goes through connected dominating sets
(minimization) and fresh-neighbor sequences (maximization); the latter is
also solvable through a weighted monotone-circuit encoding kept here as an
independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Optional

from . import gs
from .engines import run_plus
from .forcing import ZSequence, fresh_witnesses
from .graph import BFS, Decision, Graph, Ordering, ftree_from_ordering

MIN = "min"
MAX = "max"


def _rho_from_prefix(g: Graph, prefix: tuple[int, ...]) -> Ordering:
    rest = [v for v in range(g.n) if v not in set(prefix)]
    return Ordering(tuple(prefix) + tuple(rest))


def bfs_internal_xp(g: Graph, k: int, objective: str) -> Decision:
    """BFS first-in tree with <= k (min) or >= k (max) internal vertices."""
    if objective not in (MIN, MAX):
        raise ValueError(f"objective must be '{MIN}' or '{MAX}'")
    if k < 1:
        raise ValueError("k must be at least 1")
    if g.n == 1:
        ok = True if objective == MIN else k <= 1
        return Decision(ok, Ordering((0,)) if ok else None, optimum=1)
    if objective == MAX and k > g.n - 1:
        return Decision(False, None)  # every tree keeps at least one leaf
    sizes = range(1, min(k, g.n) + 1) if objective == MIN else (k,)
    for size in sizes:
        for prefix in permutations(range(g.n), size):
            ordering = run_plus(g, BFS, _rho_from_prefix(g, prefix))
            count = ftree_from_ordering(g, ordering).internal_count
            if (count <= k) if objective == MIN else (count >= k):
                return Decision(True, ordering)
    return Decision(False, None)


def gs_min_internal_xp(g: Graph, k: int) -> Decision:
    """GS first-in tree with <= k internal vertices iff a CDS of size <= k exists."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if g.n == 1:
        return Decision(True, Ordering((0,)), optimum=1)
    dom = gs.min_cds(g, stop_at=k)
    if len(dom) > k:
        return Decision(False, None, optimum=len(dom))
    witness = gs.gs_ordering_from_cds(g, dom)
    assert ftree_from_ordering(g, witness).internal_count <= k
    return Decision(True, witness)


def gs_max_internal_xp(g: Graph, k: int) -> Decision:
    """GS first-in tree with >= k internal vertices iff a fresh-neighbor
    sequence of length >= k exists."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if g.n == 1:
        return Decision(k <= 1, Ordering((0,)) if k <= 1 else None)
    seq = _find_zsequence_of_length(g, k)
    if seq is None:
        return Decision(False, None)
    z = ZSequence(seq=seq, witnesses=fresh_witnesses(g, seq))
    witness = gs.zsequence_to_ordering(g, z)
    assert ftree_from_ordering(g, witness).internal_count >= k
    return Decision(True, witness)


def _find_zsequence_of_length(g: Graph, k: int) -> Optional[tuple[int, ...]]:
    """Depth-first search for a fresh-neighbor GS prefix of the exact length."""
    if k > g.n:
        return None
    n = g.n
    dead: set[tuple[int, int]] = set()
    seq: list[int] = []

    def rec(members: int, closure: int) -> bool:
        if len(seq) == k:
            return True
        state = (members, closure)
        if state in dead:
            return False
        for v in range(n):
            if (members >> v) & 1:
                continue
            if members and not (g.adj_mask[v] & members):
                continue
            if not (g.adj_mask[v] & ~closure):
                continue
            seq.append(v)
            if rec(members | (1 << v), closure | g.adj_mask[v] | (1 << v)):
                return True
            seq.pop()
        dead.add(state)
        return False

    if rec(0, 0):
        return tuple(seq)
    return None


# ---------------------------------------------------------------------------
# weighted circuit encoding of the maximization problem


@dataclass(frozen=True)
class CircuitInstance:
    """Monotone-negative CNF groups over slot variables.

    Variables: ("x", v, i) vertex v is the i-th internal vertex; ("y", v, i)
    v is a child of the i-th internal vertex; ("z", j, i) the i-th internal
    vertex hangs off the j-th. Every clause is a disjunction of negated
    variables, stored as the tuple of its variables. A satisfying assignment
    of weight 3k-1 exists iff the graph has a GS first-in tree with >= k
    internal vertices.
    """

    n: int
    k: int
    target_weight: int
    groups: dict[str, tuple[tuple, ...]]

    def all_clauses(self) -> tuple[tuple, ...]:
        out: list[tuple] = []
        for name in sorted(self.groups):
            out.extend(self.groups[name])
        return tuple(out)


def build_wcs_circuit(g: Graph, k: int) -> CircuitInstance:
    if k < 1:
        raise ValueError("k must be at least 1")
    n = g.n
    V = range(n)
    x = lambda v, i: ("x", v, i)
    y = lambda v, i: ("y", v, i)
    z = lambda j, i: ("z", j, i)
    slots = range(1, k + 1)

    g_x = tuple(
        (x(v, i), x(w, i)) for i in slots for v in V for w in V if v < w
    )
    g_y = tuple(
        (y(v, i), y(w, i)) for i in slots for v in V for w in V if v < w
    )
    g_z = tuple(
        (z(j, i), z(jp, i))
        for i in slots
        if i != 1
        for j in range(1, i)
        for jp in range(1, i)
        if j < jp
    )
    g_xp = tuple(
        (x(v, i), x(v, j)) for v in V for i in slots for j in slots if i < j
    )
    g_a = tuple(
        (y(w, i), x(v, j))
        for i in slots
        for j in range(1, i)
        for v in V
        for w in sorted(g.adj[v] | {v})
    )
    g_b = tuple(
        (y(w, i), x(v, i)) for i in slots for v in V for w in V if w not in g.adj[v]
    )
    g_c = tuple(
        (z(j, i), x(v, j), x(w, i))
        for i in slots
        if i != 1
        for j in range(1, i)
        for v in V
        for w in V
        if w not in g.adj[v]
    )
    return CircuitInstance(
        n=n,
        k=k,
        target_weight=3 * k - 1,
        groups={"X": g_x, "Y": g_y, "Z": g_z, "Xp": g_xp, "A": g_a, "B": g_b, "C": g_c},
    )


def eval_wcs(circuit: CircuitInstance) -> bool:
    """Exists a satisfying assignment of exactly the target weight?

    The slot groups (one x, one y per slot, one z per slot beyond the first)
    each admit at most one true variable, and there are target_weight many
    groups, so candidates are exactly the one-per-group choices. Those are
    searched slot-wise; clauses are checked generically as sets of variables
    that must not all be true.
    """
    n, k = circuit.n, circuit.k
    by_var: dict[tuple, list[tuple]] = {}
    for clause in circuit.all_clauses():
        for var in clause:
            by_var.setdefault(var, []).append(clause)
    true_set: set[tuple] = set()

    def violates(var: tuple) -> bool:
        for clause in by_var.get(var, ()):
            if all(u == var or u in true_set for u in clause):
                return True
        return False

    def assign(var: tuple) -> bool:
        if violates(var):
            return False
        true_set.add(var)
        return True

    def rec(i: int) -> bool:
        if i > k:
            return True
        for v in range(n):
            xv = ("x", v, i)
            if not assign(xv):
                continue
            for w in range(n):
                yw = ("y", w, i)
                if not assign(yw):
                    continue
                if i == 1:
                    if rec(i + 1):
                        return True
                else:
                    for j in range(1, i):
                        zj = ("z", j, i)
                        if not assign(zj):
                            continue
                        if rec(i + 1):
                            return True
                        true_set.discard(zj)
                true_set.discard(yw)
            true_set.discard(xv)
        return False

    return rec(1)
