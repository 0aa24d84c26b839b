import pytest

from leafsearch import (
    GS,
    NotGSOrderingError,
    ZSequence,
    brute_leaf_range,
    brute_min_cds,
    build_graph,
    enumerate_orderings,
    ftree_from_ordering,
    ftree_to_zstar,
    max_leaf_gs,
    min_cds,
    min_leaf_gs,
    pathdecomp_from_gs,
    replay_rules,
    validate_ordering,
    validate_path_decomposition,
    zsequence_to_ordering,
)
from leafsearch.forcing import fresh_witnesses, zsequence_from_rules
from leafsearch.zforcing import TreeDecomposition
from .conftest import C4, K4, complete_graph, path_graph, star_graph


def p5_plus_universal():
    edges = [(0, 1), (1, 2), (2, 3), (3, 4)] + [(5, i) for i in range(5)]
    return build_graph(6, edges)


class TestMaxLeaf:
    def test_star(self):
        d = max_leaf_gs(star_graph(3), 3)
        assert d.yes
        assert ftree_from_ordering(star_graph(3), d.witness).leaf_count >= 3

    def test_c4_upper_limit(self):
        assert not max_leaf_gs(C4, 3).yes
        assert max_leaf_gs(C4, 2).yes

    def test_one_leaf_always_exists(self, small_pool):
        for g in small_pool[::15]:
            d = max_leaf_gs(g, 1)
            assert d.yes and validate_ordering(g, d.witness, GS)


class TestMinLeaf:
    def test_path(self):
        d = min_leaf_gs(path_graph(6), 1)
        assert d.yes and ftree_from_ordering(path_graph(6), d.witness).leaf_count <= 1

    def test_k4(self):
        assert not min_leaf_gs(K4, 2).yes
        assert min_leaf_gs(K4, 3).yes

    def test_path_plus_universal_two_leaves(self):
        g = p5_plus_universal()
        d = min_leaf_gs(g, 2)
        assert d.yes
        assert ftree_from_ordering(g, d.witness).leaf_count <= 2

    def test_supplied_decomposition(self):
        g = path_graph(4)
        td = TreeDecomposition(
            bags={0: frozenset({0, 1}), 1: frozenset({1, 2}), 2: frozenset({2, 3})},
            edges=((0, 1), (1, 2)),
        )
        assert min_leaf_gs(g, 1, td=td).yes

    def test_width_search_exhausted(self):
        from leafsearch import DecompositionUnavailableError

        g = build_graph(18, [(i, (i + 1) % 18) for i in range(18)])
        with pytest.raises(DecompositionUnavailableError):
            min_leaf_gs(g, 1, exact_width_limit=10)


class TestMinCds:
    def test_matches_oracle(self, small_pool):
        for g in small_pool[::8]:
            assert len(min_cds(g)) == len(brute_min_cds(g))

    def test_stop_at_returns_small_enough_set(self):
        g = star_graph(4)
        dom = min_cds(g, stop_at=1)
        assert len(dom) == 1


class TestZSequenceToOrdering:
    def test_path_prefix(self):
        g = path_graph(4)
        z = ZSequence(seq=(0, 1, 2), witnesses=fresh_witnesses(g, (0, 1, 2)))
        out = zsequence_to_ordering(g, z)
        assert out.seq == (0, 1, 2, 3)
        assert ftree_from_ordering(g, out).leaf_count == 1

    def test_star_leaf_first(self):
        g = star_graph(3)
        z = ZSequence(seq=(1, 0), witnesses=fresh_witnesses(g, (1, 0)))
        out = zsequence_to_ordering(g, z)
        assert ftree_from_ordering(g, out).leaf_count <= 2

    def test_cycle(self):
        z = ZSequence(seq=(0, 1), witnesses=fresh_witnesses(C4, (0, 1)))
        out = zsequence_to_ordering(C4, z)
        assert ftree_from_ordering(C4, out).leaf_count <= 2


class TestFtreeToZstar:
    def test_path_rules(self):
        g = path_graph(4)
        seeds, rules = ftree_to_zstar(g, (0, 1, 2, 3))
        assert seeds == {3}
        assert rules.rules == ((3, 2), (2, 1), (1, 0))

    def test_triangle(self):
        seeds, rules = ftree_to_zstar(complete_graph(3), (0, 1, 2))
        assert seeds == {1, 2}
        assert len(rules.rules) == 1 and rules.rules[0][1] == 0

    def test_star_from_leaf(self):
        g = star_graph(3)
        seeds, rules = ftree_to_zstar(g, (1, 0, 2, 3))
        assert seeds == {2, 3}
        assert [w for _, w in rules.rules] == [0, 1]

    def test_rejects_non_gs(self):
        with pytest.raises(NotGSOrderingError):
            ftree_to_zstar(path_graph(4), (0, 2, 1, 3))


class TestPathDecomposition:
    def test_complete_graphs_tight(self):
        for n in (3, 4, 5):
            g = complete_graph(n)
            pd = pathdecomp_from_gs(g, tuple(range(n)))
            assert pd.width == n - 1

    def test_path_width_one(self):
        pd = pathdecomp_from_gs(path_graph(6), (0, 1, 2, 3, 4, 5))
        assert pd.width == 1

    def test_path_plus_universal(self):
        g = p5_plus_universal()
        d = min_leaf_gs(g, 2)
        pd = pathdecomp_from_gs(g, d.witness)
        assert pd.width <= 2

    def test_every_gs_ordering_gives_valid_decomposition(self, small_pool):
        for g in small_pool[::14]:
            for ordering in enumerate_orderings(g, GS):
                pd = pathdecomp_from_gs(g, ordering)
                validate_path_decomposition(g, pd)
                assert pd.width <= ftree_from_ordering(g, ordering).leaf_count


def test_conversion_cycle(small_pool):
    # leaf set size equals leaf count, and converting through rules, sequence
    # and back to an ordering never increases the leaf count
    for g in small_pool[::10]:
        for ordering in enumerate_orderings(g, GS):
            tree = ftree_from_ordering(g, ordering)
            seeds, rules = ftree_to_zstar(g, ordering)
            assert len(seeds) == tree.leaf_count
            assert replay_rules(g, rules)
            z = zsequence_from_rules(g, rules)
            back = zsequence_to_ordering(g, z)
            assert ftree_from_ordering(g, back).leaf_count <= tree.leaf_count


def test_solver_agreement(small_pool):
    for g in small_pool[::9]:
        rng = brute_leaf_range(g, GS)
        for k in range(1, g.n + 1):
            assert min_leaf_gs(g, k).yes == (rng.min <= k)
            assert max_leaf_gs(g, k).yes == (rng.max >= k)
