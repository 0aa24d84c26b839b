"""Batch command line interface: solve, oracle, generate, reduce, check.

Graph files are PACE-style: optional 'c' comment lines, a 'p <n> <m>' header,
then one '<u> <v>' line per edge with 1-based vertex ids. All ids read from or
written to files and flags are 1-based; the library itself is 0-based.

Exit codes: 0 = yes / valid, 1 = no / invalid, 2 = error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, field
from typing import Optional

from . import gadgets, gs, layered, oracle, xp, zforcing
from .errors import LeafSearchError, ParseError
from .graph import (
    BFS,
    GS,
    LBFS,
    Decision,
    Graph,
    Ordering,
    build_graph,
    ftree_from_ordering,
    validate_ordering,
)

ORACLE_SIZE_LIMIT = 12

PROBLEMS = ("min-leaf", "max-leaf", "min-internal", "max-internal")


# ---------------------------------------------------------------------------
# file formats


def read_graph(path: str) -> Graph:
    n = m = None
    edges: list[tuple[int, int]] = []
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("c"):
                continue
            parts = line.split()
            if parts[0] == "p":
                if n is not None:
                    raise ParseError("duplicate header", lineno)
                if len(parts) != 3:
                    raise ParseError("header must be 'p <n> <m>'", lineno)
                try:
                    n, m = int(parts[1]), int(parts[2])
                except ValueError:
                    raise ParseError("non-numeric header field", lineno)
            else:
                if n is None:
                    raise ParseError("edge line before header", lineno)
                if len(parts) != 2:
                    raise ParseError("edge line must be '<u> <v>'", lineno)
                try:
                    u, v = int(parts[0]), int(parts[1])
                except ValueError:
                    raise ParseError("non-numeric edge endpoint", lineno)
                if not (1 <= u <= n and 1 <= v <= n):
                    raise ParseError(f"endpoint out of range 1..{n}", lineno)
                edges.append((u - 1, v - 1))
    if n is None:
        raise ParseError("missing 'p <n> <m>' header", None)
    if m is not None and m != len(edges):
        raise ParseError(f"header announces {m} edges, file has {len(edges)}", None)
    return build_graph(n, edges)


def write_graph(g: Graph, out, comment: Optional[str] = None) -> None:
    if comment:
        out.write(f"c {comment}\n")
    out.write(f"p {g.n} {g.m}\n")
    for u, v in g.edges:
        out.write(f"{u + 1} {v + 1}\n")


def read_cnf(path: str) -> list[tuple[int, ...]]:
    """DIMACS-style clauses: optional 'p cnf' header, clauses end with 0."""
    clauses: list[tuple[int, ...]] = []
    pending: list[int] = []
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("c"):
                continue
            if line.startswith("p"):
                continue
            for tok in line.split():
                try:
                    lit = int(tok)
                except ValueError:
                    raise ParseError(f"non-numeric literal {tok!r}", lineno)
                if lit == 0:
                    if pending:
                        clauses.append(tuple(pending))
                        pending = []
                else:
                    pending.append(lit)
    if pending:
        clauses.append(tuple(pending))
    if not clauses:
        raise ParseError("no clauses found", None)
    return clauses


def parse_ordering_flag(text: str, n: int) -> Ordering:
    try:
        seq = tuple(int(tok) - 1 for tok in text.split())
    except ValueError:
        raise ParseError(f"non-numeric vertex in ordering {text!r}", None)
    if sorted(seq) != list(range(n)):
        raise ParseError("ordering is not a permutation of 1..n", None)
    return Ordering(seq)


# ---------------------------------------------------------------------------
# result records


@dataclass
class ResultRecord:
    instance: str
    paradigm: str
    problem: str
    k: int
    algo: str
    n: int
    m: int
    decision: bool
    optimum: Optional[int] = None
    witness_ordering: Optional[list[int]] = None  # 1-based
    witness_parent: Optional[list[list[int]]] = None  # [vertex, parent], 1-based
    root: Optional[int] = None
    timings: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "instance": self.instance,
            "paradigm": self.paradigm,
            "problem": self.problem,
            "k": self.k,
            "algo": self.algo,
            "n": self.n,
            "m": self.m,
            "decision": self.decision,
            "optimum": self.optimum,
            "witness_ordering": self.witness_ordering,
            "witness_parent": self.witness_parent,
            "root": self.root,
            "timings": self.timings,
        }


def _attach_witness(record: ResultRecord, g: Graph, witness: Optional[Ordering]) -> None:
    if witness is None:
        return
    tree = ftree_from_ordering(g, witness)
    record.witness_ordering = [v + 1 for v in witness.seq]
    record.witness_parent = [
        [v + 1, tree.parent[v] + 1] for v in range(g.n) if tree.parent[v] >= 0
    ]
    record.root = tree.root + 1


def _print_record(record: ResultRecord, as_json: bool) -> None:
    if as_json:
        print(json.dumps(record.to_json(), indent=2, sort_keys=True))
        return
    verdict = "yes" if record.decision else "no"
    print(
        f"{record.problem} {record.paradigm} k={record.k} on {record.instance} "
        f"(n={record.n}, m={record.m}) via {record.algo}: {verdict}"
    )
    if record.optimum is not None:
        print(f"optimum: {record.optimum}")
    if record.witness_ordering is not None:
        print("witness ordering:", " ".join(str(v) for v in record.witness_ordering))


# ---------------------------------------------------------------------------
# solve dispatch


def _oracle_solve(g: Graph, paradigm: str, problem: str, k: int) -> Decision:
    if g.n > ORACLE_SIZE_LIMIT:
        raise LeafSearchError(
            f"oracle enumeration is capped at n={ORACLE_SIZE_LIMIT}; got n={g.n}"
        )
    objective, target = problem.split("-")
    if target == "leaf":
        rng = oracle.brute_leaf_range(g, paradigm)
        if objective == "min":
            return Decision(rng.min <= k, rng.min_witness if rng.min <= k else None, optimum=rng.min)
        return Decision(rng.max >= k, rng.max_witness if rng.max >= k else None, optimum=rng.max)
    if objective == "min":
        val, wit = oracle.brute_min_internal(g, paradigm)
        return Decision(val <= k, wit if val <= k else None, optimum=val)
    val, wit = oracle.brute_max_internal(g, paradigm)
    return Decision(val >= k, wit if val >= k else None, optimum=val)


def _auto_algo(paradigm: str, problem: str) -> str:
    if problem in ("min-leaf", "max-leaf"):
        if paradigm in (BFS, LBFS):
            return "dp"
        return "tw" if problem == "min-leaf" else "cds"
    if paradigm == BFS:
        return "xp"
    if paradigm == GS:
        return "xp"
    return "unsupported"


def cmd_solve(args) -> int:
    g = read_graph(args.graph)
    paradigm = args.paradigm
    problem = args.problem
    algo = args.algo
    if algo == "auto":
        algo = _auto_algo(paradigm, problem)
    if algo == "unsupported":
        print(
            "error: no exact non-enumerative solver is implemented for "
            f"{problem} under {paradigm} (the problem is NP-complete for every "
            "fixed k >= 3 on this paradigm); rerun with --algo oracle",
            file=sys.stderr,
        )
        return 2
    threads = args.threads
    t0 = time.perf_counter()
    if algo == "oracle":
        decision = _oracle_solve(g, paradigm, problem, args.k)
    elif algo == "dp":
        if paradigm not in (BFS, LBFS) or problem not in ("min-leaf", "max-leaf"):
            print("error: --algo dp applies to bfs/lbfs leaf problems", file=sys.stderr)
            return 2
        decision = layered.solve(
            g, paradigm, problem.split("-")[0], args.k, threads=threads
        )
    elif algo == "tw":
        if paradigm != GS or problem != "min-leaf":
            print("error: --algo tw applies to gs min-leaf", file=sys.stderr)
            return 2
        td = zforcing.read_td(args.td) if args.td else None
        decision = gs.min_leaf_gs(g, args.k, td=td)
    elif algo == "cds":
        if paradigm != GS or problem != "max-leaf":
            print("error: --algo cds applies to gs max-leaf", file=sys.stderr)
            return 2
        decision = gs.max_leaf_gs(g, args.k)
    elif algo == "xp":
        if paradigm == BFS and problem in ("min-internal", "max-internal"):
            decision = xp.bfs_internal_xp(g, args.k, problem.split("-")[0])
        elif paradigm == GS and problem == "min-internal":
            decision = xp.gs_min_internal_xp(g, args.k)
        elif paradigm == GS and problem == "max-internal":
            decision = xp.gs_max_internal_xp(g, args.k)
        else:
            print("error: --algo xp applies to bfs/gs internal problems", file=sys.stderr)
            return 2
    else:
        print(f"error: unknown algo {algo}", file=sys.stderr)
        return 2
    elapsed = time.perf_counter() - t0
    record = ResultRecord(
        instance=args.graph,
        paradigm=paradigm,
        problem=problem,
        k=args.k,
        algo=algo,
        n=g.n,
        m=g.m,
        decision=decision.yes,
        optimum=decision.optimum,
        timings={"total_s": round(elapsed, 6)},
    )
    _attach_witness(record, g, decision.witness)
    _print_record(record, args.json)
    return 0 if decision.yes else 1


# ---------------------------------------------------------------------------
# other commands


def cmd_generate(args) -> int:
    g = gadgets.gen_family(args.family, args.param)
    if args.out:
        with open(args.out, "w") as fh:
            write_graph(g, fh, comment=f"{args.family}({args.param})")
        print(f"wrote {args.out} (n={g.n}, m={g.m})")
    else:
        write_graph(g, sys.stdout, comment=f"{args.family}({args.param})")
    return 0


def _read_setcover(path: str) -> tuple[list[str], list[list[str]]]:
    universe: list[str] = []
    sets: list[list[str]] = []
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if parts[0] == "universe":
                if universe:
                    raise ParseError("duplicate universe line", lineno)
                universe = parts[1:]
            elif parts[0] == "set":
                sets.append(parts[1:])
            else:
                raise ParseError(f"unknown directive {parts[0]!r}", lineno)
    if not universe:
        raise ParseError("missing 'universe' line", None)
    return universe, sets


def _read_bipartite(path: str) -> tuple[int, int, list[tuple[int, int]]]:
    x_count = y_count = None
    edges: list[tuple[int, int]] = []
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if parts[0] == "sides":
                if len(parts) != 3:
                    raise ParseError("sides line must be 'sides <|X|> <|Y|>'", lineno)
                x_count, y_count = int(parts[1]), int(parts[2])
            else:
                if x_count is None:
                    raise ParseError("edge before 'sides' line", lineno)
                if len(parts) != 2:
                    raise ParseError("edge line must be '<x> <y>' (1-based)", lineno)
                edges.append((int(parts[0]) - 1, int(parts[1]) - 1))
    if x_count is None:
        raise ParseError("missing 'sides' line", None)
    return x_count, y_count, edges


def cmd_reduce(args) -> int:
    if args.kind == "setcover":
        universe, sets = _read_setcover(args.instance)
        out = gadgets.set_cover_to_split(universe, sets)
    elif args.kind == "grundy":
        x_count, y_count, edges = _read_bipartite(args.instance)
        out = gadgets.grundy_instance_to_split(x_count, y_count, edges)
    else:
        clauses = read_cnf(args.instance)
        out = gadgets.sat3_to_weakly_chordal(clauses, k=args.k)
    target = args.out or (args.instance + ".gr")
    with open(target, "w") as fh:
        write_graph(out.graph, fh, comment=f"reduction {args.kind}")
    roles_path = args.roles or (target + ".roles.json")
    with open(roles_path, "w") as fh:
        json.dump(
            {
                "translation": out.translation,
                "params": out.params,
                "roles": {str(v + 1): list(role) for v, role in sorted(out.roles.items())},
            },
            fh,
            indent=2,
        )
    print(
        f"wrote {target} (n={out.graph.n}, m={out.graph.m}) and {roles_path}"
    )
    return 0


def cmd_oracle(args) -> int:
    g = read_graph(args.graph)
    if g.n > ORACLE_SIZE_LIMIT:
        print(
            f"error: oracle enumeration is capped at n={ORACLE_SIZE_LIMIT}",
            file=sys.stderr,
        )
        return 2
    paradigms = [args.paradigm] if args.paradigm else [GS, BFS, LBFS]
    rows = []
    for paradigm in paradigms:
        rng = oracle.brute_leaf_range(g, paradigm)
        rows.append(
            {
                "paradigm": paradigm,
                "min_leaves": rng.min,
                "max_leaves": rng.max,
                "min_internal": g.n - rng.max,
                "max_internal": g.n - rng.min,
            }
        )
    if args.json:
        print(json.dumps({"instance": args.graph, "n": g.n, "m": g.m, "table": rows}, indent=2))
    elif args.csv:
        print("paradigm,min_leaves,max_leaves,min_internal,max_internal")
        for row in rows:
            print(
                f"{row['paradigm']},{row['min_leaves']},{row['max_leaves']},"
                f"{row['min_internal']},{row['max_internal']}"
            )
    else:
        for row in rows:
            print(
                f"{row['paradigm']}: leaves {row['min_leaves']}..{row['max_leaves']}, "
                f"internal {row['min_internal']}..{row['max_internal']}"
            )
    return 0


def cmd_check(args) -> int:
    g = read_graph(args.graph)
    ordering = parse_ordering_flag(args.ordering, g.n)
    ok = validate_ordering(g, ordering, args.paradigm)
    print("valid" if ok else "invalid")
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# argument parsing


def _default_threads() -> int:
    try:
        return max(1, int(os.environ.get("LEAFSEARCH_THREADS", "1")))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="leafsearch",
        description="first-in search tree leaf/internal-vertex optimization",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="decide a leaf/internal budget")
    p_solve.add_argument("--graph", required=True)
    p_solve.add_argument("--paradigm", required=True, choices=(GS, BFS, LBFS))
    p_solve.add_argument("--problem", required=True, choices=PROBLEMS)
    p_solve.add_argument("-k", type=int, required=True)
    p_solve.add_argument(
        "--algo", default="auto", choices=("auto", "dp", "xp", "tw", "cds", "oracle")
    )
    p_solve.add_argument("--td", help="tree decomposition file (PACE-style)")
    p_solve.add_argument("--json", action="store_true")
    p_solve.add_argument("--threads", type=int, default=_default_threads())
    p_solve.set_defaults(func=cmd_solve)

    p_gen = sub.add_parser("generate", help="emit a named graph family")
    p_gen.add_argument(
        "--family",
        required=True,
        choices=(
            "path_of_triangles",
            "star_of_ladders",
            "path",
            "cycle",
            "complete",
            "star",
        ),
    )
    p_gen.add_argument("-p", "--param", type=int, required=True)
    p_gen.add_argument("--out")
    p_gen.set_defaults(func=cmd_generate)

    p_red = sub.add_parser("reduce", help="build a hardness-reduction instance")
    p_red.add_argument("kind", choices=("setcover", "grundy", "3sat"))
    p_red.add_argument("--instance", required=True)
    p_red.add_argument("-k", type=int, default=3, help="target internal count (3sat)")
    p_red.add_argument("--out")
    p_red.add_argument("--roles")
    p_red.set_defaults(func=cmd_reduce)

    p_orc = sub.add_parser("oracle", help="exact leaf ranges by enumeration")
    p_orc.add_argument("--graph", required=True)
    p_orc.add_argument("--paradigm", choices=(GS, BFS, LBFS))
    p_orc.add_argument("--csv", action="store_true")
    p_orc.add_argument("--json", action="store_true")
    p_orc.set_defaults(func=cmd_oracle)

    p_chk = sub.add_parser("check", help="validate an ordering against a paradigm")
    p_chk.add_argument("--graph", required=True)
    p_chk.add_argument("--ordering", required=True, help="1-based, space separated")
    p_chk.add_argument("--paradigm", required=True, choices=(GS, BFS, LBFS))
    p_chk.set_defaults(func=cmd_check)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (LeafSearchError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
