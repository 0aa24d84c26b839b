"""Width-parameterized computation of a smallest zstar-forcing set.

The solver runs over a nice tree decomposition extended with a rule node
below every forget node: the rule node is where the concrete rule
applications touching the soon-forgotten vertex are fixed. Partial solutions
are signatures: per-bag type assignments (seed vs forced, fires vs marked
last vs neither), progress booleans, a dependency digraph over coloring
events, and a weight counting seeds already forgotten.

Dependency graphs are kept transitively closed at all times, so acyclicity is
an O(1) check per arc insertion and forgetting a vertex is a plain node
deletion. Signatures that acquire a cyclic dependency graph are dropped on
the spot, which is equivalent to giving them infinite weight.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .errors import (
    BudgetExceededError,
    InvalidDecompositionError,
    ParseError,
)
from .forcing import find_rule_sequence
from .graph import Graph

GAMMA_ZSTAR = 0  # becomes blue via a rule
GAMMA_BOT = 1  # seed: member of the forcing set

PHI_ZSTAR = 0  # fires a rule (colors some other vertex)
PHI_E = 1  # is the last vertex colored blue
PHI_BOT = 2  # neither

DEFAULT_SIGNATURE_CAP = 2_000_000


# ---------------------------------------------------------------------------
# tree decompositions


@dataclass(frozen=True)
class TreeDecomposition:
    bags: dict[int, frozenset[int]]
    edges: tuple[tuple[int, int], ...]

    @property
    def width(self) -> int:
        return max(len(b) for b in self.bags.values()) - 1


def validate_td(g: Graph, td: TreeDecomposition) -> None:
    ids = set(td.bags)
    if not ids:
        raise InvalidDecompositionError("decomposition has no bags")
    for a, b in td.edges:
        if a not in ids or b not in ids:
            raise InvalidDecompositionError(f"tree edge ({a},{b}) references unknown bag")
    if len(td.edges) != len(ids) - 1:
        raise InvalidDecompositionError("bag tree must have exactly |bags|-1 edges")
    nbr: dict[int, list[int]] = {i: [] for i in ids}
    for a, b in td.edges:
        nbr[a].append(b)
        nbr[b].append(a)
    start = next(iter(ids))
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in nbr[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    if seen != ids:
        raise InvalidDecompositionError("bag tree is disconnected")
    covered: set[int] = set()
    for bag in td.bags.values():
        for v in bag:
            if not (0 <= v < g.n):
                raise InvalidDecompositionError(f"bag vertex {v} out of range")
        covered |= set(bag)
    if covered != set(range(g.n)):
        raise InvalidDecompositionError("some vertex appears in no bag")
    for u, v in g.edges:
        if not any(u in bag and v in bag for bag in td.bags.values()):
            raise InvalidDecompositionError(f"edge ({u},{v}) not covered by any bag")
    for v in range(g.n):
        holding = {i for i, bag in td.bags.items() if v in bag}
        start = next(iter(holding))
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in nbr[x]:
                if y in holding and y not in seen:
                    seen.add(y)
                    stack.append(y)
        if seen != holding:
            raise InvalidDecompositionError(f"bags containing {v} are not connected")


def parse_td(text: str) -> TreeDecomposition:
    """PACE-style reader: 's td <bags> <width+1> <n>', 'b <id> <v...>' (1-based)."""
    bags: dict[int, frozenset[int]] = {}
    edges: list[tuple[int, int]] = []
    declared = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "s":
            if declared is not None:
                raise ParseError("duplicate solution line", lineno)
            if len(parts) != 5 or parts[1] != "td":
                raise ParseError("malformed 's td' line", lineno)
            try:
                declared = tuple(int(x) for x in parts[2:])
            except ValueError:
                raise ParseError("non-numeric field in 's td' line", lineno)
        elif parts[0] == "b":
            try:
                bag_id = int(parts[1])
                vertices = [int(x) - 1 for x in parts[2:]]
            except (ValueError, IndexError):
                raise ParseError("malformed bag line", lineno)
            if bag_id in bags:
                raise ParseError(f"duplicate bag id {bag_id}", lineno)
            bags[bag_id] = frozenset(vertices)
        else:
            if len(parts) != 2:
                raise ParseError("malformed tree-edge line", lineno)
            try:
                edges.append((int(parts[0]), int(parts[1])))
            except ValueError:
                raise ParseError("non-numeric tree edge", lineno)
    if not bags:
        raise ParseError("no bags found", None)
    return TreeDecomposition(bags=bags, edges=tuple(edges))


def read_td(path) -> TreeDecomposition:
    with open(path) as fh:
        return parse_td(fh.read())


# ---------------------------------------------------------------------------
# elimination orders, exact treewidth, heuristic decompositions


def _fill_count(adj: list[set[int]], v: int) -> int:
    nbrs = list(adj[v])
    return sum(
        1 for i, a in enumerate(nbrs) for b in nbrs[i + 1 :] if b not in adj[a]
    )


def elimination_order(g: Graph, method: str = "min-fill", reverse_ties: bool = False) -> tuple[int, ...]:
    """Greedy elimination order; ties broken by vertex id (optionally reversed)."""
    adj = [set(a) for a in g.adj]
    alive = set(range(g.n))
    order = []
    sign = -1 if reverse_ties else 1
    while alive:
        if method == "min-fill":
            key = lambda v: (_fill_count(adj, v), sign * v)
        elif method == "min-degree":
            key = lambda v: (len(adj[v]), sign * v)
        else:
            raise ValueError(f"unknown elimination method {method!r}")
        v = min(alive, key=key)
        order.append(v)
        nbrs = list(adj[v])
        for i, a in enumerate(nbrs):
            for b in nbrs[i + 1 :]:
                adj[a].add(b)
                adj[b].add(a)
        for a in nbrs:
            adj[a].discard(v)
        adj[v].clear()
        alive.discard(v)
    return tuple(order)


def td_from_elimination(g: Graph, order: Iterable[int]) -> TreeDecomposition:
    order = tuple(order)
    pos = {v: i for i, v in enumerate(order)}
    adj = [set(a) for a in g.adj]
    bags: dict[int, frozenset[int]] = {}
    for idx, v in enumerate(order):
        higher = {w for w in adj[v] if pos[w] > idx}
        bags[idx] = frozenset({v} | higher)
        hs = list(higher)
        for i, a in enumerate(hs):
            for b in hs[i + 1 :]:
                adj[a].add(b)
                adj[b].add(a)
        for a in hs:
            adj[a].discard(v)
    edges = []
    for idx, v in enumerate(order):
        rest = bags[idx] - {v}
        if rest:
            parent = min(pos[w] for w in rest)
            edges.append((idx, parent))
    return TreeDecomposition(bags=bags, edges=tuple(edges))


def exact_treewidth(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Exact treewidth and an optimal elimination order (subset dynamic program).

    Exponential in n; meant for n up to roughly 16.
    """
    n = g.n
    if n == 1:
        return 0, (0,)
    masks = g.adj_mask
    full = (1 << n) - 1

    def back_degree(prefix: int, v: int) -> int:
        allowed = prefix | (1 << v)
        comp = 1 << v
        stack = [v]
        border = 0
        while stack:
            u = stack.pop()
            border |= masks[u]
            for w in range(n):
                if (masks[u] >> w) & 1 and (allowed >> w) & 1 and not (comp >> w) & 1:
                    comp |= 1 << w
                    stack.append(w)
        return bin(border & ~allowed).count("1")

    size = 1 << n
    best = [0] * size
    choice = [-1] * size
    subsets_by_count: list[list[int]] = [[] for _ in range(n + 1)]
    for s in range(size):
        subsets_by_count[bin(s).count("1")].append(s)
    for c in range(1, n + 1):
        for s in subsets_by_count[c]:
            val = None
            pick = -1
            rem = s
            while rem:
                low = rem & -rem
                v = low.bit_length() - 1
                rem ^= low
                prev = s ^ (1 << v)
                cand = max(best[prev], back_degree(prev, v))
                if val is None or cand < val:
                    val, pick = cand, v
            best[s] = val
            choice[s] = pick
    order_rev = []
    s = full
    while s:
        v = choice[s]
        order_rev.append(v)
        s ^= 1 << v
    return best[full], tuple(reversed(order_rev))


def heuristic_td(
    g: Graph,
    method: str = "min-fill",
    reverse_ties: bool = False,
    exact_limit: int = 14,
) -> TreeDecomposition:
    """Elimination-based decomposition, swapped for an exact one on small graphs."""
    order = elimination_order(g, method=method, reverse_ties=reverse_ties)
    td = td_from_elimination(g, order)
    if g.n <= exact_limit:
        width, exact_order = exact_treewidth(g)
        if width < td.width:
            td = td_from_elimination(g, exact_order)
    validate_td(g, td)
    return td


# ---------------------------------------------------------------------------
# public dependency-graph helper


@dataclass(frozen=True)
class DependencyGraph:
    """Event digraph: nodes are hashables, arcs directed (before, after)."""

    nodes: frozenset
    arcs: frozenset

    def is_acyclic(self) -> bool:
        indeg = {x: 0 for x in self.nodes}
        out: dict = {x: [] for x in self.nodes}
        for a, b in self.arcs:
            indeg[b] += 1
            out[a].append(b)
        queue = [x for x in self.nodes if indeg[x] == 0]
        seen = 0
        while queue:
            x = queue.pop()
            seen += 1
            for y in out[x]:
                indeg[y] -= 1
                if indeg[y] == 0:
                    queue.append(y)
        return seen == len(self.nodes)


def gamma_node(v: int) -> tuple[str, int]:
    return ("g", v)


def phi_node(v: int) -> tuple[str, int]:
    return ("p", v)


def bypass(d: DependencyGraph, v: int) -> DependencyGraph:
    """Add the transitive closure of the subgraph around v's event nodes.

    The caller is expected to delete the event nodes of v afterwards.
    """
    targets = {gamma_node(v), phi_node(v)} & set(d.nodes)
    if gamma_node(v) not in d.nodes:
        raise ValueError(f"event node for vertex {v} not present")
    hood = set(targets)
    for a, b in d.arcs:
        if a in targets:
            hood.add(b)
        if b in targets:
            hood.add(a)
    sub = {(a, b) for a, b in d.arcs if a in hood and b in hood}
    closed = set(sub)
    changed = True
    while changed:
        changed = False
        for a, b in list(closed):
            for c, e in list(closed):
                if b == c and a != e and (a, e) not in closed:
                    closed.add((a, e))
                    changed = True
    return DependencyGraph(nodes=d.nodes, arcs=d.arcs | frozenset(closed))


# ---------------------------------------------------------------------------
# nice decomposition with rule nodes


@dataclass(frozen=True)
class NiceNode:
    kind: str  # leaf | introduce | forget | rule | join
    bag: tuple[int, ...]
    children: tuple[int, ...]
    vertex: int = -1  # introduced / forgotten / pending-forget vertex


@dataclass(frozen=True)
class NiceTD:
    nodes: tuple[NiceNode, ...]
    root: int

    @property
    def width(self) -> int:
        return max(len(nd.bag) for nd in self.nodes) - 1


def make_nice(g: Graph, td: TreeDecomposition, root_bag: Optional[int] = None) -> NiceTD:
    """Rooted binary nice form with a rule node under every forget node."""
    validate_td(g, td)
    if root_bag is None:
        root_bag = min(td.bags)
    elif root_bag not in td.bags:
        raise InvalidDecompositionError(f"unknown root bag {root_bag}")
    nbr: dict[int, list[int]] = {i: [] for i in td.bags}
    for a, b in td.edges:
        nbr[a].append(b)
        nbr[b].append(a)
    nodes: list[NiceNode] = []

    def add(kind: str, bag: tuple[int, ...], children: tuple[int, ...], vertex: int = -1) -> int:
        nodes.append(NiceNode(kind=kind, bag=bag, children=children, vertex=vertex))
        return len(nodes) - 1

    def reshape(idx: int, bag_from: frozenset[int], bag_to: frozenset[int]) -> int:
        cur = idx
        cur_bag = set(bag_from)
        for v in sorted(bag_from - bag_to):
            rule = add("rule", tuple(sorted(cur_bag)), (cur,), v)
            cur_bag.discard(v)
            cur = add("forget", tuple(sorted(cur_bag)), (rule,), v)
        for v in sorted(bag_to - bag_from):
            cur_bag.add(v)
            cur = add("introduce", tuple(sorted(cur_bag)), (cur,), v)
        return cur

    def build(bag_id: int, parent_id: Optional[int]) -> int:
        bag = td.bags[bag_id]
        kids = [b for b in sorted(nbr[bag_id]) if b != parent_id]
        if not kids:
            leaf = add("leaf", (), ())
            return reshape(leaf, frozenset(), bag)
        shaped = [reshape(build(b, bag_id), td.bags[b], bag) for b in kids]
        acc = shaped[0]
        for other in shaped[1:]:
            acc = add("join", tuple(sorted(bag)), (acc, other))
        return acc

    top = build(root_bag, None)
    root = reshape(top, td.bags[root_bag], frozenset())
    return NiceTD(nodes=tuple(nodes), root=root)


# ---------------------------------------------------------------------------
# signatures


@dataclass(frozen=True)
class Signature:
    """Per-bag DP state; deps arcs use event ids 2*slot (colored) and 2*slot+1 (fires)."""

    bag: tuple[int, ...]
    gamma: tuple[int, ...]
    phi: tuple[int, ...]
    b_gamma: tuple[bool, ...]
    b_phi: tuple[bool, ...]
    b_pi: tuple[bool, ...]
    last_used: bool
    deps: frozenset[tuple[int, int]]
    weight: int


_Key = tuple

# Inside the DP the dependency digraph is a tuple of successor bitmasks, one
# per event id (2*slot for the coloring event, 2*slot+1 for the firing event),
# kept transitively closed: reach[e] is the set of events strictly after e.


def _arcs_from_reach(reach: tuple[int, ...]) -> frozenset[tuple[int, int]]:
    return frozenset(
        (a, b) for a in range(len(reach)) for b in range(len(reach)) if (reach[a] >> b) & 1
    )


def _sig_key(sig: Signature) -> _Key:
    m = 2 * len(sig.bag)
    reach = [0] * m
    for a, b in sig.deps:
        reach[a] |= 1 << b
    reach = _close_reach(reach)
    assert reach is not None
    return (
        sig.gamma,
        sig.phi,
        sig.b_gamma,
        sig.b_phi,
        sig.b_pi,
        sig.last_used,
        tuple(reach),
    )


def _reach_add(reach: list[int], a: int, b: int) -> bool:
    """Insert arc a->b keeping the closure; False when it closes a cycle."""
    if a == b or (reach[b] >> a) & 1:
        return False
    if (reach[a] >> b) & 1:
        return True
    after = reach[b] | (1 << b)
    bit_a = 1 << a
    for x in range(len(reach)):
        if x == a or (reach[x] & bit_a):
            reach[x] |= after
    return True


def _close_reach(reach: list[int]) -> Optional[list[int]]:
    """Transitive closure in place; None when a cycle appears."""
    m = len(reach)
    changed = True
    while changed:
        changed = False
        for x in range(m):
            acc = reach[x]
            rest = acc
            while rest:
                low = rest & -rest
                rest ^= low
                acc |= reach[low.bit_length() - 1]
            if acc != reach[x]:
                reach[x] = acc
                changed = True
    for x in range(m):
        if (reach[x] >> x) & 1:
            return None
    return reach


def _leaf_table() -> dict[_Key, int]:
    return {((), (), (), (), (), False, ()): 0}


def _insert2(mask: int, pos: int) -> int:
    lower = mask & ((1 << pos) - 1)
    return lower | ((mask >> pos) << (pos + 2))


def _drop2(mask: int, pos: int) -> int:
    lower = mask & ((1 << pos) - 1)
    return lower | ((mask >> (pos + 2)) << pos)


def _introduce_table(
    table: dict[_Key, int], slot: int, forced: Optional[int]
) -> dict[_Key, int]:
    out: dict[_Key, int] = {}
    for (gamma, phi, bg, bf, bp, lam, reach), w in table.items():
        e = 2 * slot
        base = [_insert2(mask, e) for mask in reach]
        base[e:e] = [0, 0]
        choices = [
            (GAMMA_ZSTAR, PHI_ZSTAR),
            (GAMMA_ZSTAR, PHI_BOT),
            (GAMMA_BOT, PHI_ZSTAR),
            (GAMMA_BOT, PHI_BOT),
        ]
        if not lam and PHI_E not in phi:
            choices.append((GAMMA_ZSTAR, PHI_E))
        for gv, pv in choices:
            if forced is not None and gv != forced:
                continue
            new_reach = tuple(base)
            if pv == PHI_ZSTAR:
                # becoming blue precedes firing
                new_reach = new_reach[:e] + (base[e] | (1 << (e + 1)),) + new_reach[e + 1 :]
            key = (
                gamma[:slot] + (gv,) + gamma[slot:],
                phi[:slot] + (pv,) + phi[slot:],
                bg[:slot] + (gv == GAMMA_BOT,) + bg[slot:],
                bf[:slot] + (pv in (PHI_E, PHI_BOT),) + bf[slot:],
                bp[:slot] + (gv == GAMMA_BOT or pv == PHI_E,) + bp[slot:],
                lam,
                new_reach,
            )
            if w < out.get(key, 1 << 60):
                out[key] = w
    return out


def _forget_table(table: dict[_Key, int], slot: int) -> dict[_Key, int]:
    out: dict[_Key, int] = {}
    e = 2 * slot
    for (gamma, phi, bg, bf, bp, lam, reach), w in table.items():
        if not (bg[slot] and bf[slot] and bp[slot]):
            continue
        # reach is transitively closed, so bypassing is plain node deletion
        kept = tuple(
            _drop2(mask, e) for i, mask in enumerate(reach) if i not in (e, e + 1)
        )
        key = (
            gamma[:slot] + gamma[slot + 1 :],
            phi[:slot] + phi[slot + 1 :],
            bg[:slot] + bg[slot + 1 :],
            bf[:slot] + bf[slot + 1 :],
            bp[:slot] + bp[slot + 1 :],
            lam or phi[slot] == PHI_E,
            kept,
        )
        w2 = w + (1 if gamma[slot] == GAMMA_BOT else 0)
        if w2 < out.get(key, 1 << 60):
            out[key] = w2
    return out


def _join_tables(t1: dict[_Key, int], t2: dict[_Key, int]) -> dict[_Key, int]:
    out: dict[_Key, int] = {}
    buckets: dict[tuple, list[_Key]] = {}
    for key in t2:
        buckets.setdefault((key[0], key[1]), []).append(key)
    for key1, w1 in t1.items():
        gamma, phi, bg1, bf1, bp1, lam1, reach1 = key1
        for key2 in buckets.get((gamma, phi), ()):
            _, _, bg2, bf2, bp2, lam2, reach2 = key2
            w2 = t2[key2]
            if lam1 and lam2:
                continue
            # the vertex marked last is globally unique: a side that committed
            # one is incompatible with a bag that still holds one
            if (lam1 or lam2) and PHI_E in phi:
                continue
            ok = True
            for s in range(len(gamma)):
                if gamma[s] != GAMMA_BOT and bg1[s] and bg2[s]:
                    ok = False
                    break
                if phi[s] == PHI_ZSTAR and bf1[s] and bf2[s]:
                    ok = False
                    break
                if gamma[s] != GAMMA_BOT and phi[s] == PHI_ZSTAR and bp1[s] and bp2[s]:
                    ok = False
                    break
            if not ok:
                continue
            merged = _close_reach([a | b for a, b in zip(reach1, reach2)])
            if merged is None:
                continue
            key = (
                gamma,
                phi,
                tuple(a or b for a, b in zip(bg1, bg2)),
                tuple(a or b for a, b in zip(bf1, bf2)),
                tuple(a or b for a, b in zip(bp1, bp2)),
                lam1 or lam2,
                tuple(merged),
            )
            w = w1 + w2
            if w < out.get(key, 1 << 60):
                out[key] = w
    return out


def _rule_table(
    table: dict[_Key, int], slot: int, nbr_slots: tuple[int, ...], size: int
) -> dict[_Key, int]:
    out: dict[_Key, int] = {}
    for (gamma, phi, bg, bf, bp, lam, reach), w in table.items():
        if bg[slot]:
            f_list: list[Optional[int]] = [None]
        else:
            f_list = [t for t in nbr_slots if phi[t] == PHI_ZSTAR and not bf[t]]
            if not f_list:
                continue
        if bf[slot]:
            g_list: list[Optional[int]] = [None]
        else:
            g_list = [t for t in nbr_slots if gamma[t] == GAMMA_ZSTAR and not bg[t]]
            if not g_list:
                continue
        if bp[slot]:
            h_list: list[Optional[int]] = [None]
        else:
            h_list = [t for t in nbr_slots if gamma[t] == GAMMA_ZSTAR]
            if not h_list:
                continue
        if gamma[slot] == GAMMA_ZSTAR:
            w_pool = [t for t in nbr_slots if not bp[t]]
        else:
            w_pool = []
        w_sets: list[tuple[int, ...]] = [()]
        for r in range(1, len(w_pool) + 1):
            w_sets.extend(combinations(w_pool, r))
        for f in f_list:
            for gg in g_list:
                for h in h_list:
                    base_arcs: list[tuple[int, int]] = []
                    if f is not None:
                        base_arcs.append((2 * f + 1, 2 * slot))
                    if gg is not None:
                        base_arcs.append((2 * slot + 1, 2 * gg))
                    if h is not None:
                        base_arcs.append((2 * slot, 2 * h))
                    for t in nbr_slots:
                        if t != f and phi[t] == PHI_ZSTAR:
                            base_arcs.append((2 * slot, 2 * t + 1))
                            if phi[slot] == PHI_E:
                                base_arcs.append((2 * t + 1, 2 * slot))
                    if phi[slot] == PHI_ZSTAR:
                        for t in nbr_slots:
                            if t != gg:
                                base_arcs.append((2 * t, 2 * slot + 1))
                                if phi[t] == PHI_E:
                                    base_arcs.append((2 * slot + 1, 2 * t))
                    if phi[slot] == PHI_E:
                        for t in range(size):
                            if t != slot:
                                base_arcs.append((2 * t, 2 * slot))
                    for t in range(size):
                        if t != slot and phi[t] == PHI_E:
                            base_arcs.append((2 * slot, 2 * t))
                    staged = list(reach)
                    ok = True
                    for a, b in base_arcs:
                        if not _reach_add(staged, a, b):
                            ok = False
                            break
                    if not ok:
                        continue
                    for wset in w_sets:
                        merged = list(staged)
                        ok = True
                        for t in wset:
                            if not _reach_add(merged, 2 * t, 2 * slot):
                                ok = False
                                break
                        if not ok:
                            continue
                        nbg = list(bg)
                        nbf = list(bf)
                        nbp = list(bp)
                        if f is not None:
                            nbg[slot] = True
                            nbf[f] = True
                        if gg is not None:
                            nbg[gg] = True
                            nbf[slot] = True
                        if h is not None:
                            nbp[slot] = True
                        for t in wset:
                            nbp[t] = True
                        key = (
                            gamma,
                            phi,
                            tuple(nbg),
                            tuple(nbf),
                            tuple(nbp),
                            lam,
                            tuple(merged),
                        )
                        if w < out.get(key, 1 << 60):
                            out[key] = w
    return out


def _key_to_signature(bag: tuple[int, ...], key: _Key, weight: int) -> Signature:
    gamma, phi, bg, bf, bp, lam, reach = key
    return Signature(
        bag=bag,
        gamma=gamma,
        phi=phi,
        b_gamma=bg,
        b_phi=bf,
        b_pi=bp,
        last_used=lam,
        deps=_arcs_from_reach(reach),
        weight=weight,
    )


def process_node(
    g: Graph,
    nice: NiceTD,
    node_id: int,
    child_tables: list[dict[_Key, int]],
    constraints: Optional[dict[int, int]] = None,
) -> dict[_Key, int]:
    """Signature table of one nice-tree node from its children's tables."""
    node = nice.nodes[node_id]
    if node.kind == "leaf":
        return _leaf_table()
    if node.kind == "introduce":
        slot = node.bag.index(node.vertex)
        forced = (constraints or {}).get(node.vertex)
        return _introduce_table(child_tables[0], slot, forced)
    if node.kind == "forget":
        child_bag = nice.nodes[node.children[0]].bag
        slot = child_bag.index(node.vertex)
        return _forget_table(child_tables[0], slot)
    if node.kind == "rule":
        slot = node.bag.index(node.vertex)
        nbrs = tuple(
            t for t, u in enumerate(node.bag) if u in g.adj[node.vertex]
        )
        return _rule_table(child_tables[0], slot, nbrs, len(node.bag))
    if node.kind == "join":
        return _join_tables(child_tables[0], child_tables[1])
    raise AssertionError(f"unknown node kind {node.kind}")


def node_signatures(
    g: Graph,
    nice: NiceTD,
    node_id: int,
    child_signatures: list[list[Signature]],
    constraints: Optional[dict[int, int]] = None,
) -> list[Signature]:
    """Signature-object wrapper over process_node, for direct inspection."""
    tables = [
        {_sig_key(s): s.weight for s in sigs} for sigs in child_signatures
    ]
    table = process_node(g, nice, node_id, tables, constraints)
    bag = nice.nodes[node_id].bag
    return [_key_to_signature(bag, key, w) for key, w in sorted(table.items())]


def _dp_weight(
    g: Graph,
    nice: NiceTD,
    constraints: Optional[dict[int, int]],
    signature_cap: int,
) -> Optional[int]:
    tables: dict[int, dict[_Key, int]] = {}
    order: list[int] = []
    stack = [(nice.root, False)]
    while stack:
        idx, done = stack.pop()
        if done:
            order.append(idx)
            continue
        stack.append((idx, True))
        for c in nice.nodes[idx].children:
            stack.append((c, False))
    for idx in order:
        node = nice.nodes[idx]
        kids = [tables.pop(c) for c in node.children]
        table = process_node(g, nice, idx, kids, constraints)
        if len(table) > signature_cap:
            raise BudgetExceededError(
                f"{len(table)} signatures at one node exceed the cap of {signature_cap}"
            )
        tables[idx] = table
    root_table = tables[nice.root]
    if not root_table:
        return None
    return min(root_table.values())


def min_zstar_tw(
    g: Graph,
    td: TreeDecomposition,
    constraints: Optional[dict[int, int]] = None,
    *,
    with_witness: bool = True,
    signature_cap: int = DEFAULT_SIGNATURE_CAP,
) -> tuple[int, Optional[frozenset[int]]]:
    """Smallest forcing-set size over the given decomposition, plus a witness set.

    The witness is recovered by constrained self-reduction: vertices are fixed
    into the seed set one at a time, keeping only those that preserve the
    optimum. The final set is replay-validated before being returned.
    """
    nice = make_nice(g, td)
    base = _dp_weight(g, nice, constraints, signature_cap)
    if base is None:
        raise InvalidDecompositionError("no valid signature at the root; constraints unsatisfiable")
    if not with_witness:
        return base, None
    committed: list[int] = []
    fixed = dict(constraints or {})
    for v in range(g.n):
        if len(committed) == base:
            break
        if fixed.get(v) == GAMMA_ZSTAR:
            continue
        trial = dict(fixed)
        for u in committed:
            trial[u] = GAMMA_BOT
        trial[v] = GAMMA_BOT
        if _dp_weight(g, nice, trial, signature_cap) == base:
            committed.append(v)
    if len(committed) != base:
        raise AssertionError("self-reduction failed to assemble an optimal seed set")
    if find_rule_sequence(g, committed) is None:
        raise AssertionError("extracted seed set failed replay validation")
    return base, frozenset(committed)
