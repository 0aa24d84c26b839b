"""Color-change forcing machinery shared by the oracle and the width DP.

The rule (written u -> w): a blue vertex u with exactly one white neighbor w
may color w blue, provided w is the last white vertex of the whole graph or
w itself still has a white neighbor. A zstar-forcing set is an initial blue
set whose iterated closure colors everything blue.

The closure is not assumed confluent: validation searches over rule
application orders with memoization on blue-set states.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import InvalidSequenceError
from .graph import Graph


@dataclass(frozen=True)
class RuleSequence:
    """An initial blue set plus an ordered list of rule applications u -> w."""

    initial: frozenset[int]
    rules: tuple[tuple[int, int], ...]
    complete: bool

    def colored(self) -> frozenset[int]:
        return self.initial | frozenset(w for _, w in self.rules)


@dataclass(frozen=True)
class ZSequence:
    """A GS-ordering prefix where every member has a fresh private neighbor.

    witnesses[i] is a vertex of N(seq[i]) outside the closed neighborhoods of
    all earlier members.
    """

    seq: tuple[int, ...]
    witnesses: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.seq)


def applicable_rules(g: Graph, blue: int) -> Iterator[tuple[int, int]]:
    """All rules u -> w that may fire from the given blue-set bitmask."""
    full = (1 << g.n) - 1
    white = full & ~blue
    for u in range(g.n):
        if not (blue >> u) & 1:
            continue
        wmask = g.adj_mask[u] & white
        if wmask and not (wmask & (wmask - 1)):  # exactly one white neighbor
            w = wmask.bit_length() - 1
            if white == wmask or (g.adj_mask[w] & white & ~wmask):
                yield (u, w)


def replay_rules(g: Graph, rs: RuleSequence) -> bool:
    """Check every rule's preconditions at its turn and the final blue set."""
    blue = sum(1 << v for v in rs.initial)
    full = (1 << g.n) - 1
    for u, w in rs.rules:
        white = full & ~blue
        if not (blue >> u) & 1:
            return False
        wmask = g.adj_mask[u] & white
        if wmask != 1 << w:
            return False
        if white != wmask and not (g.adj_mask[w] & white & ~wmask):
            return False
        blue |= 1 << w
    return (blue == full) == rs.complete


def find_rule_sequence(g: Graph, initial) -> Optional[RuleSequence]:
    """A rule order coloring everything from the initial set, or None.

    Backtracking over rule choices, memoized on dead blue-set states.
    """
    initial = frozenset(initial)
    blue0 = sum(1 << v for v in initial)
    full = (1 << g.n) - 1
    dead: set[int] = set()
    rules: list[tuple[int, int]] = []

    def rec(blue: int) -> bool:
        if blue == full:
            return True
        if blue in dead:
            return False
        for u, w in sorted(applicable_rules(g, blue)):
            rules.append((u, w))
            if rec(blue | (1 << w)):
                return True
            rules.pop()
        dead.add(blue)
        return False

    if rec(blue0):
        return RuleSequence(initial=initial, rules=tuple(rules), complete=True)
    return None


def is_forcing_set(g: Graph, candidate) -> bool:
    return find_rule_sequence(g, candidate) is not None


def fresh_witnesses(g: Graph, seq: tuple[int, ...]) -> tuple[int, ...]:
    """Canonical fresh witness per position, raising if any member has none.

    Also enforces the GS-prefix condition: every non-first member must have an
    earlier neighbor within the sequence.
    """
    closure = 0  # union of closed neighborhoods of earlier members
    seen = 0
    out = []
    for i, v in enumerate(seq):
        if i and not (g.adj_mask[v] & seen):
            raise InvalidSequenceError(f"vertex {v} has no earlier neighbor in the prefix")
        fresh = g.adj_mask[v] & ~closure
        if not fresh:
            raise InvalidSequenceError(f"vertex {v} has no fresh neighbor at position {i}")
        out.append((fresh & -fresh).bit_length() - 1)
        closure |= g.adj_mask[v] | (1 << v)
        seen |= 1 << v
    return tuple(out)


def validate_zsequence(g: Graph, z: ZSequence) -> None:
    """Raise InvalidSequenceError unless z satisfies all defining conditions."""
    if len(set(z.seq)) != len(z.seq):
        raise InvalidSequenceError("sequence repeats a vertex")
    if len(z.witnesses) != len(z.seq):
        raise InvalidSequenceError("witness list length mismatch")
    closure = 0
    seen = 0
    for i, (v, x) in enumerate(zip(z.seq, z.witnesses)):
        if not (0 <= v < g.n):
            raise InvalidSequenceError(f"vertex {v} out of range")
        if i and not (g.adj_mask[v] & seen):
            raise InvalidSequenceError(f"vertex {v} has no earlier neighbor in the prefix")
        if x not in g.adj[v] or (closure >> x) & 1:
            raise InvalidSequenceError(f"witness {x} for {v} is not fresh")
        closure |= g.adj_mask[v] | (1 << v)
        seen |= 1 << v


def zsequence_from_rules(g: Graph, rs: RuleSequence) -> ZSequence:
    """Reverse the forced vertices of a complete rule sequence.

    The targets in reverse order form a valid sequence: each rule's actor is a
    fresh neighbor of its target at that point of the reversal.
    """
    seq = tuple(w for _, w in reversed(rs.rules))
    witnesses = tuple(u for u, _ in reversed(rs.rules))
    z = ZSequence(seq=seq, witnesses=witnesses)
    validate_zsequence(g, z)
    return z
