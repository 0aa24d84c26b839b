from itertools import permutations

import pytest

from leafsearch import (
    BFS,
    GS,
    LBFS,
    NotACliqueError,
    Ordering,
    complete_from_clique_prefix,
    enumerate_orderings,
    ftree_from_ordering,
    run_plus,
    set_cover_to_split,
    validate_ordering,
)
from .conftest import C4, K3, K4, P4, atlas_connected, path_graph


class TestRunPlus:
    def test_bfs_on_cycle(self):
        assert run_plus(C4, BFS, (0, 1, 2, 3)).seq == (0, 1, 3, 2)

    def test_lbfs_on_clique_follows_rho(self):
        assert run_plus(K4, LBFS, (2, 0, 1, 3)).seq == (2, 0, 1, 3)

    def test_gs_on_path(self):
        assert run_plus(P4, GS, (1, 3, 0, 2)).seq == (1, 0, 2, 3)

    def test_deterministic(self):
        for paradigm in (GS, BFS, LBFS):
            a = run_plus(C4, paradigm, (3, 1, 0, 2))
            b = run_plus(C4, paradigm, (3, 1, 0, 2))
            assert a == b

    def test_output_is_valid_and_enumerated(self):
        for g in (C4, K4, P4):
            for rho in permutations(range(g.n)):
                for paradigm in (GS, BFS, LBFS):
                    out = run_plus(g, paradigm, rho)
                    assert validate_ordering(g, out, paradigm)
                    assert out in set(enumerate_orderings(g, paradigm))


class TestCliquePrefix:
    def test_clique_prefix_on_k4(self):
        out = complete_from_clique_prefix(K4, LBFS, (3, 1))
        assert out.seq[:2] == (3, 1)

    def test_not_a_clique(self):
        with pytest.raises(NotACliqueError):
            complete_from_clique_prefix(P4, GS, (0, 2))

    def test_cover_prefix_on_split_gadget(self):
        # a cover of the source instance is a clique prefix of the gadget,
        # and the resulting tree keeps everything else a leaf
        out = set_cover_to_split(["a", "b", "c"], [{"a", "b"}, {"b", "c"}, {"a"}])
        g = out.graph
        cover = (0, 1)  # the first two sets cover the universe
        ordering = complete_from_clique_prefix(g, BFS, cover)
        assert ordering.seq[:2] == cover
        tree = ftree_from_ordering(g, ordering)
        assert tree.internal <= set(cover)

    def test_all_clique_prefixes_realized(self, small_pool):
        for g in small_pool[::9]:
            cliques = [
                (u, v) for u in range(g.n) for v in range(g.n) if u != v and g.has_edge(u, v)
            ]
            for prefix in cliques:
                for paradigm in (GS, BFS, LBFS):
                    out = complete_from_clique_prefix(g, paradigm, prefix)
                    assert out.seq[: len(prefix)] == prefix


class TestEnumeration:
    def test_k3_gs_all_permutations(self):
        assert len(list(enumerate_orderings(K3, GS))) == 6

    def test_p3_bfs(self):
        p3 = path_graph(3)
        got = sorted(o.seq for o in enumerate_orderings(p3, BFS))
        assert got == [(0, 1, 2), (1, 0, 2), (1, 2, 0), (2, 1, 0)]

    def test_c4_lbfs_count(self):
        assert len(list(enumerate_orderings(C4, LBFS))) == 8

    def test_no_duplicates(self, small_pool):
        for g in small_pool[::8]:
            for paradigm in (GS, BFS, LBFS):
                seqs = [o.seq for o in enumerate_orderings(g, paradigm)]
                assert len(seqs) == len(set(seqs))

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_sound_and_complete_vs_filter(self, n):
        for g in atlas_connected(n):
            for paradigm in (GS, BFS, LBFS):
                enumerated = {o.seq for o in enumerate_orderings(g, paradigm)}
                filtered = {
                    p
                    for p in permutations(range(g.n))
                    if validate_ordering(g, Ordering(p), paradigm)
                }
                assert enumerated == filtered

    def test_sound_and_complete_n6_exhaustive(self):
        for g in atlas_connected(6):
            for paradigm in (GS, BFS, LBFS):
                enumerated = {o.seq for o in enumerate_orderings(g, paradigm)}
                filtered = {
                    p
                    for p in permutations(range(g.n))
                    if validate_ordering(g, Ordering(p), paradigm)
                }
                assert enumerated == filtered
