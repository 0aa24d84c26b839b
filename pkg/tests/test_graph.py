import pytest

from leafsearch import (
    BFS,
    GS,
    LBFS,
    DisconnectedError,
    DuplicateEdgeError,
    NotConnectedOrderingError,
    Ordering,
    OutOfRangeError,
    SelfLoopError,
    bfs_layers,
    build_graph,
    enumerate_orderings,
    ftree_from_ordering,
    ordering_bandwidth,
    validate_ordering,
)
from .conftest import C4, K3, K4, P4


class TestBuildGraph:
    def test_triangle(self):
        assert K3.n == 3 and K3.m == 3

    def test_disconnected_rejected(self):
        with pytest.raises(DisconnectedError):
            build_graph(4, [(0, 1), (2, 3)])

    def test_self_loop_rejected(self):
        with pytest.raises(SelfLoopError):
            build_graph(2, [(0, 0)])

    def test_duplicate_edge_rejected(self):
        with pytest.raises(DuplicateEdgeError):
            build_graph(2, [(0, 1), (1, 0)])

    def test_out_of_range_rejected(self):
        with pytest.raises(OutOfRangeError):
            build_graph(2, [(0, 2)])
        with pytest.raises(OutOfRangeError):
            build_graph(0, [])


class TestFTree:
    def test_clique_root_star(self):
        t = ftree_from_ordering(K3, (0, 1, 2))
        assert t.parent[1] == 0 and t.parent[2] == 0
        assert t.leaves == {1, 2}

    def test_path_tree(self):
        t = ftree_from_ordering(P4, (0, 1, 2, 3))
        assert t.leaves == {3}
        assert t.leaf_count == 1

    def test_c4_two_leaves(self):
        t = ftree_from_ordering(C4, (0, 1, 3, 2))
        assert t.parent[1] == 0 and t.parent[3] == 0 and t.parent[2] == 1
        assert t.leaves == {2, 3}

    def test_c4_every_bfs_tree_has_two_leaves(self):
        for ordering in enumerate_orderings(C4, BFS):
            assert ftree_from_ordering(C4, ordering).leaf_count == 2

    def test_not_connected_ordering(self):
        with pytest.raises(NotConnectedOrderingError):
            ftree_from_ordering(P4, (0, 2, 1, 3))

    def test_single_vertex_root_is_internal(self):
        g = build_graph(1, [])
        t = ftree_from_ordering(g, (0,))
        assert t.leaf_count == 0 and t.internal == {0}


class TestLayers:
    def test_path(self):
        lp = bfs_layers(P4, 0)
        assert lp.layers == ((0,), (1,), (2,), (3,))

    def test_cycle(self):
        lp = bfs_layers(C4, 0)
        assert lp.layers == ((0,), (1, 3), (2,))

    def test_clique(self):
        lp = bfs_layers(K4, 2)
        assert lp.layers == ((2,), (0, 1, 3))


class TestBandwidth:
    def test_path_identity(self):
        assert ordering_bandwidth(P4, (0, 1, 2, 3)) == 1

    def test_path_swapped(self):
        assert ordering_bandwidth(P4, (0, 2, 1, 3)) == 2

    def test_clique_always_full(self):
        for ordering in enumerate_orderings(K4, GS):
            assert ordering_bandwidth(K4, ordering) == 3


class TestValidateOrdering:
    def test_examples(self):
        assert validate_ordering(P4, (0, 1, 2, 3), LBFS)
        assert validate_ordering(P4, (1, 0, 2, 3), BFS)
        assert not validate_ordering(P4, (1, 2, 3, 0), BFS)
        assert validate_ordering(C4, (0, 1, 2, 3), GS)

    def test_every_enumerated_ordering_validates(self, small_pool):
        for g in small_pool[::5]:
            for paradigm in (GS, BFS, LBFS):
                for ordering in enumerate_orderings(g, paradigm):
                    assert validate_ordering(g, ordering, paradigm)

    def test_leaf_internal_partition(self, small_pool):
        for g in small_pool[::7]:
            for ordering in enumerate_orderings(g, GS):
                t = ftree_from_ordering(g, ordering)
                assert t.leaves | t.internal == frozenset(range(g.n))
                assert not (t.leaves & t.internal)
                assert t.root in t.internal


class TestOrdering:
    def test_rejects_non_permutation(self):
        with pytest.raises(OutOfRangeError):
            Ordering((0, 0, 1))
        with pytest.raises(OutOfRangeError):
            Ordering(())

    def test_pos_inverse(self):
        o = Ordering((2, 0, 1))
        assert o.pos == (1, 2, 0)


def test_layered_orderings_leaf_count_at_least_max_layer(small_pool):
    # every layered ordering keeps at least max-layer-size leaves (n >= 2)
    for g in small_pool[::6]:
        for paradigm in (BFS, LBFS):
            for ordering in enumerate_orderings(g, paradigm):
                layers = bfs_layers(g, ordering.seq[0])
                t = ftree_from_ordering(g, ordering)
                assert t.leaf_count >= layers.max_layer_size()


def test_bandwidth_bounds(small_pool):
    # BFS: leaf count k bounds the bandwidth by k; any layered search by 2k-1
    for g in small_pool[::6]:
        for ordering in enumerate_orderings(g, BFS):
            k = ftree_from_ordering(g, ordering).leaf_count
            assert ordering_bandwidth(g, ordering) <= k
        for ordering in enumerate_orderings(g, LBFS):
            k = ftree_from_ordering(g, ordering).leaf_count
            assert ordering_bandwidth(g, ordering) <= 2 * k - 1
