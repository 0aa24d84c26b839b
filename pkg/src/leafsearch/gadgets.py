"""Instance constructors for hardness reductions and named graph families.

Every constructor returns the graph plus a total role map (vertex to semantic
role tuple) and the parameter translation it instantiates, so round-trip
tests can tie source-problem optima to tree optima on the output.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import AssumptionViolatedError, BadParameterError, MalformedClauseError
from .graph import Graph, build_graph


@dataclass(frozen=True)
class ReductionOutput:
    graph: Graph
    roles: dict[int, tuple]
    params: dict[str, int]
    translation: str


# ---------------------------------------------------------------------------
# set cover -> split graph


def set_cover_to_split(universe: Sequence, sets: Sequence[Iterable]) -> ReductionOutput:
    """Split graph: one clique vertex per set, one independent vertex per element.

    A cover of size <= L exists iff the graph has a first-in tree with <= L
    internal vertices (any clique-starter search).
    """
    universe = list(universe)
    families = [frozenset(s) for s in sets]
    if not universe or not families:
        raise AssumptionViolatedError("universe and set family must be nonempty")
    elements = set(universe)
    if len(universe) != len(elements):
        raise AssumptionViolatedError("universe repeats an element")
    for fam in families:
        if not fam <= elements:
            raise AssumptionViolatedError(f"set {sorted(fam)} leaves the universe")
    covered = frozenset().union(*families)
    if covered != elements:
        missing = sorted(elements - covered)
        raise AssumptionViolatedError(f"elements {missing} appear in no set")
    for u in universe:
        if all(u in fam for fam in families):
            raise AssumptionViolatedError(f"element {u!r} is contained in every set")
    p = len(families)
    idx = {u: p + j for j, u in enumerate(universe)}
    edges = [(i, j) for i in range(p) for j in range(i + 1, p)]
    for i, fam in enumerate(families):
        for u in fam:
            edges.append((i, idx[u]))
    g = build_graph(p + len(universe), edges)
    roles: dict[int, tuple] = {i: ("set", i) for i in range(p)}
    roles.update({idx[u]: ("element", j) for j, u in enumerate(universe)})
    return ReductionOutput(
        graph=g,
        roles=roles,
        params={"num_sets": p, "num_elements": len(universe)},
        translation="cover of size <= L  <=>  first-in tree with <= L internal vertices",
    )


# ---------------------------------------------------------------------------
# one-sided total dominating sequences -> split graph


def grundy_instance_to_split(
    x_count: int, y_count: int, edges: Sequence[tuple[int, int]]
) -> ReductionOutput:
    """Clique the X side and add a fresh clique vertex r.

    A total dominating sequence of length L inside X exists iff the output
    has a first-in tree with >= L + 1 internal vertices.
    """
    if x_count < 1 or y_count < 1:
        raise AssumptionViolatedError("both sides must be nonempty")
    deg_x = [0] * x_count
    deg_y = [0] * y_count
    for x, y in edges:
        if not (0 <= x < x_count and 0 <= y < y_count):
            raise AssumptionViolatedError(f"edge ({x},{y}) out of range")
        deg_x[x] += 1
        deg_y[y] += 1
    if any(d == 0 for d in deg_x):
        raise AssumptionViolatedError("X contains an isolated vertex")
    if any(d == 0 for d in deg_y):
        raise AssumptionViolatedError("Y contains an isolated vertex")
    # layout: X = 0..x_count-1, r = x_count, Y after
    r = x_count
    y_off = x_count + 1
    out_edges = [(i, j) for i in range(x_count) for j in range(i + 1, x_count)]
    out_edges += [(i, r) for i in range(x_count)]
    out_edges += [(x, y_off + y) for x, y in set(edges)]
    g = build_graph(x_count + 1 + y_count, out_edges)
    roles: dict[int, tuple] = {i: ("x", i) for i in range(x_count)}
    roles[r] = ("r",)
    roles.update({y_off + j: ("y", j) for j in range(y_count)})
    return ReductionOutput(
        graph=g,
        roles=roles,
        params={"x_count": x_count, "y_count": y_count},
        translation="one-sided sequence of length L  <=>  first-in tree with >= L+1 internal vertices",
    )


def one_sided_grundy_longest(
    x_count: int, y_count: int, edges: Sequence[tuple[int, int]]
) -> int:
    """Longest total dominating sequence using X vertices only (brute force).

    Each chosen vertex must open-dominate some Y vertex not open-dominated by
    the choices before it.
    """
    nbr = [0] * x_count
    for x, y in edges:
        nbr[x] |= 1 << y
    best = 0

    def rec(used: int, covered: int, length: int):
        nonlocal best
        best = max(best, length)
        for x in range(x_count):
            if (used >> x) & 1:
                continue
            if nbr[x] & ~covered:
                rec(used | (1 << x), covered | nbr[x], length + 1)

    rec(0, 0, 0)
    return best


# ---------------------------------------------------------------------------
# 3-SAT -> weakly chordal instance for the lexicographic search


def sat3_to_weakly_chordal(clauses: Sequence[Sequence[int]], k: int = 3) -> ReductionOutput:
    """Formula graph whose LBFS trees have exactly k internal vertices iff satisfiable.

    Literal vertices form the complement of the variable matching; clause
    vertices attach to the literals NOT in the clause; two blockers cover the
    literal/clause box; a hub covers box and blockers; per-clause guards pin
    the blockers; pendant leaves pin hub and blockers as internal. For k > 3
    a pendant path of k - 2 vertices hangs off the hub.
    """
    if k < 3:
        raise BadParameterError("k must be at least 3")
    if not clauses:
        raise MalformedClauseError("formula must have at least one clause")
    num_vars = 0
    norm: list[tuple[int, int, int]] = []
    for c_idx, clause in enumerate(clauses):
        lits = tuple(clause)
        if len(lits) != 3 or len(set(lits)) != 3:
            raise MalformedClauseError(f"clause {c_idx} must have 3 distinct literals")
        if any(l == 0 for l in lits):
            raise MalformedClauseError(f"clause {c_idx} contains literal 0")
        num_vars = max(num_vars, max(abs(l) for l in lits))
        norm.append(lits)

    def lit_vertex(l: int) -> int:
        # x_i at 2(i-1), negated at 2(i-1)+1
        return 2 * (abs(l) - 1) + (0 if l > 0 else 1)

    nx = 2 * num_vars
    c_off = nx
    ell = len(norm)
    b1 = c_off + ell
    b2 = b1 + 1
    r = b2 + 1
    q_off = r + 1  # q1_i, q2_i interleaved per clause
    pend_off = q_off + 2 * ell  # two pendants each for r, b1, b2
    tail_off = pend_off + 6
    n = tail_off + (k - 2 if k > 3 else 0)

    edges: list[tuple[int, int]] = []
    # literal box: complement of the perfect matching
    for a in range(nx):
        for b in range(a + 1, nx):
            if a // 2 == b // 2:
                continue  # matched pair stays non-adjacent
            edges.append((a, b))
    # clause vertices: adjacent to literals not occurring in the clause
    for j, lits in enumerate(norm):
        inside = {lit_vertex(l) for l in lits}
        for a in range(nx):
            if a not in inside:
                edges.append((c_off + j, a))
    # blockers cover the whole box but not each other
    for b in (b1, b2):
        for a in range(nx):
            edges.append((b, a))
        for j in range(ell):
            edges.append((b, c_off + j))
    # hub covers box, clauses and blockers
    for a in range(nx):
        edges.append((r, a))
    for j in range(ell):
        edges.append((r, c_off + j))
    edges.append((r, b1))
    edges.append((r, b2))
    # guards: q^1_j next to clause j and b1, q^2_j next to clause j and b2
    for j in range(ell):
        q1 = q_off + 2 * j
        q2 = q1 + 1
        edges += [(q1, c_off + j), (q1, b1), (q2, c_off + j), (q2, b2)]
    # two pendant leaves on each of r, b1, b2
    for t, anchor in enumerate((r, r, b1, b1, b2, b2)):
        edges.append((pend_off + t, anchor))
    # pendant path at the hub for k > 3
    prev = r
    for t in range(k - 2 if k > 3 else 0):
        edges.append((prev, tail_off + t))
        prev = tail_off + t

    g = build_graph(n, edges)
    roles: dict[int, tuple] = {}
    for i in range(num_vars):
        roles[2 * i] = ("literal", i + 1)
        roles[2 * i + 1] = ("literal", -(i + 1))
    for j in range(ell):
        roles[c_off + j] = ("clause", j)
        roles[q_off + 2 * j] = ("q", j, 1)
        roles[q_off + 2 * j + 1] = ("q", j, 2)
    roles[b1] = ("b", 1)
    roles[b2] = ("b", 2)
    roles[r] = ("r",)
    for t in range(6):
        roles[pend_off + t] = ("pendant", t)
    for t in range(k - 2 if k > 3 else 0):
        roles[tail_off + t] = ("tail", t)
    return ReductionOutput(
        graph=g,
        roles=roles,
        params={"num_vars": num_vars, "num_clauses": ell, "k": k},
        translation="satisfiable  <=>  some LBFS first-in tree has exactly k internal vertices",
    )


def sat3_is_satisfiable(clauses: Sequence[Sequence[int]]) -> bool:
    """Tiny brute-force satisfiability check for round-trip tests."""
    num_vars = max(abs(l) for clause in clauses for l in clause)
    for mask in range(1 << num_vars):
        ok = True
        for clause in clauses:
            if not any(
                ((mask >> (abs(l) - 1)) & 1) == (1 if l > 0 else 0) for l in clause
            ):
                ok = False
                break
        if ok:
            return True
    return False


# ---------------------------------------------------------------------------
# named families


def _path_of_triangles(t: int) -> Graph:
    # triangles {a_i, b_i, a_{i+1}} chained through shared articulation vertices
    n = 2 * t + 1
    a = lambda i: 2 * i  # a_0 .. a_t
    b = lambda i: 2 * i + 1  # b_0 .. b_{t-1}
    edges = []
    for i in range(t):
        edges += [(a(i), b(i)), (a(i), a(i + 1)), (b(i), a(i + 1))]
    return build_graph(n, edges)


def _star_of_ladders(k: int) -> Graph:
    # center joined to both first-rung vertices of k ladders with k rungs each
    n = 2 * k * k + 1
    center = 0

    def v(j: int, rung: int, side: int) -> int:
        return 1 + j * 2 * k + 2 * rung + side

    edges = []
    for j in range(k):
        edges += [(center, v(j, 0, 0)), (center, v(j, 0, 1))]
        for rung in range(k):
            edges.append((v(j, rung, 0), v(j, rung, 1)))
            if rung + 1 < k:
                edges += [
                    (v(j, rung, 0), v(j, rung + 1, 0)),
                    (v(j, rung, 1), v(j, rung + 1, 1)),
                ]
    return build_graph(n, edges)


def gen_family(name: str, param: int) -> Graph:
    """Finite graph families: path_of_triangles, star_of_ladders, path, cycle,
    complete, star."""
    if name == "path_of_triangles":
        if param < 1:
            raise BadParameterError("need at least one triangle")
        return _path_of_triangles(param)
    if name == "star_of_ladders":
        if param < 2:
            raise BadParameterError("need at least two ladders")
        return _star_of_ladders(param)
    if name == "path":
        if param < 1:
            raise BadParameterError("path needs at least one vertex")
        return build_graph(param, [(i, i + 1) for i in range(param - 1)])
    if name == "cycle":
        if param < 3:
            raise BadParameterError("cycle needs at least three vertices")
        return build_graph(param, [(i, (i + 1) % param) for i in range(param)])
    if name == "complete":
        if param < 1:
            raise BadParameterError("complete graph needs a positive size")
        return build_graph(
            param, [(i, j) for i in range(param) for j in range(i + 1, param)]
        )
    if name == "star":
        if param < 1:
            raise BadParameterError("star needs at least one leaf")
        return build_graph(param + 1, [(0, i) for i in range(1, param + 1)])
    raise BadParameterError(f"unknown family {name!r}")
