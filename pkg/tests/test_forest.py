"""Tests for level trees: degree, restriction, suspension, coproduct, maps."""

from __future__ import annotations

import pytest

from theta_disk.forest import (
    EMPTY_FOREST,
    POINT_TREE,
    LevelTree,
    TreeMap,
    canonical_encoding,
    compose_tree_maps,
    coproduct,
    degree,
    identity_tree_map,
    is_isomorphic,
    make_level_tree,
    restrict,
    restrict_map,
    suspend,
)

# The running example tree: level sizes 1,3,6,9,10 with one binary branch
# at each of the first four levels placed per its fiber structure.
EXAMPLE_LEVELS = (1, 3, 6, 9, 10)
EXAMPLE_PARENTS = (
    (0, 0, 0),
    (0, 1, 1, 1, 1, 2),
    (0, 1, 2, 2, 3, 3, 3, 4, 5),
    (0, 1, 2, 3, 4, 5, 5, 6, 7, 8),
)


def example_tree() -> LevelTree:
    return LevelTree(EXAMPLE_LEVELS, EXAMPLE_PARENTS)


class TestLevelTree:
    def test_validation(self):
        with pytest.raises(ValueError):
            LevelTree((1, 2), ())  # missing parent map
        with pytest.raises(ValueError):
            LevelTree((1, 2), ((0, 1),))  # parent out of range
        with pytest.raises(ValueError):
            LevelTree((1, 1), ((0,),))  # top step bijective: not truncated

    def test_make_level_tree_truncates(self):
        assert make_level_tree((1, 1, 2), ((0,), (0, 0))) == LevelTree(
            (1, 1, 2), ((0,), (0, 0))
        )
        assert make_level_tree((1, 2, 2), ((0, 0), (0, 1))) == LevelTree(
            (1, 2), ((0, 0),)
        )
        assert make_level_tree((1, 1), ((0,),)) == POINT_TREE

    def test_degree(self):
        assert degree(POINT_TREE) == 0
        assert degree(EMPTY_FOREST) == 0
        assert degree(LevelTree((1, 2), ((0, 0),))) == 1
        assert degree(example_tree()) == 4

    def test_children_and_continuation(self):
        t = LevelTree((1, 2), ((0, 0),))
        assert t.children(0, 0) == [0, 1]
        assert t.children(1, 1) == [1]  # implicit singleton fiber
        assert t.parent(2, 1) == 1
        assert t.level_size(5) == 2

    def test_serialization_round_trip(self):
        t = example_tree()
        assert LevelTree.from_dict(t.to_dict()) == t


class TestRestrict:
    def test_restrict_at_root_is_identity(self):
        t = example_tree()
        assert restrict(t, (0, 0)) == t

    def test_restrict_example_subtree(self):
        sub = restrict(example_tree(), (1, 1))
        assert sub.levels == (1, 4, 7, 8)
        assert degree(sub) == 3

    def test_restrict_at_leaf_gives_chain(self):
        t = example_tree()
        for i in range(t.levels[-1]):
            assert restrict(t, (t.depth, i)) == POINT_TREE

    def test_restrict_unknown_vertex(self):
        with pytest.raises(ValueError):
            restrict(POINT_TREE, (0, 5))
        # vertices in the implicit continuation are chains
        assert restrict(POINT_TREE, (3, 0)) == POINT_TREE


class TestSuspendCoproduct:
    def test_suspend_empty_forest(self):
        # By the definition the suspension of the empty forest is the bare
        # point with no children at all: levels (1, 0).
        assert suspend(EMPTY_FOREST) == LevelTree((1, 0), ((),))

    def test_suspend_point(self):
        assert suspend(POINT_TREE) == POINT_TREE

    def test_coproduct_sizes(self):
        t = LevelTree((1, 2), ((0, 0),))
        c = coproduct([t, POINT_TREE])
        assert c.levels == (2, 3)
        assert c.parents == ((0, 0, 1),)

    def test_round_trip_restrict_suspend_coproduct(self):
        trees = [
            POINT_TREE,
            LevelTree((1, 2), ((0, 0),)),
            LevelTree((1, 3), ((0, 0, 0),)),
            LevelTree((1, 2, 3), ((0, 0), (0, 0, 1))),
        ]
        for collection in [trees[:2], trees[1:], trees]:
            s = suspend(coproduct(collection))
            assert s.levels[1] == len(collection)
            for i, t in enumerate(collection):
                back = restrict(s, (1, i))
                assert back == t
                assert is_isomorphic(back, t)


class TestCanonicalForm:
    def test_sibling_permutation_is_isomorphic(self):
        a = LevelTree((1, 2, 3), ((0, 0), (0, 0, 1)))
        b = LevelTree((1, 2, 3), ((0, 0), (0, 1, 1)))
        assert a != b
        assert is_isomorphic(a, b)
        assert canonical_encoding(a) == canonical_encoding(b)

    def test_distinguishes_bare_point_from_chain(self):
        assert not is_isomorphic(POINT_TREE, suspend(EMPTY_FOREST))

    def test_distinguishes_shapes(self):
        a = LevelTree((1, 2, 3), ((0, 0), (0, 0, 1)))
        c = LevelTree((1, 3), ((0, 0, 0),))
        assert not is_isomorphic(a, c)


class TestTreeMap:
    def test_identity_and_compose(self):
        t = example_tree()
        ident = identity_tree_map(t)
        assert compose_tree_maps(ident, ident) == ident

    def test_validation_commutation(self):
        t = LevelTree((1, 2), ((0, 0),))
        collapse = TreeMap(t, POINT_TREE, ((0,), (0, 0)))
        assert collapse((1, 1)) == (1, 0)
        with pytest.raises(ValueError):
            TreeMap(t, t, ((0,), (0,)))  # wrong arity
        deep = LevelTree((1, 2, 3), ((0, 0), (0, 0, 1)))
        with pytest.raises(ValueError):
            # sends a child of root-child 0 under root-child 1: breaks parents
            TreeMap(deep, deep, ((0,), (0, 1), (2, 1, 2)))

    def test_maps_span_both_depths(self):
        shallow = LevelTree((1, 2), ((0, 0),))
        deep = LevelTree((1, 2, 3), ((0, 0), (0, 0, 1)))
        f = TreeMap(shallow, deep, ((0,), (0, 1), (0, 2)))
        assert f((2, 0)) == (2, 0)
        assert f((2, 1)) == (2, 2)
        # beyond both depths the map continues unchanged
        assert f((5, 1)) == (5, 2)

    def test_restrict_map(self):
        t = example_tree()
        ident = identity_tree_map(t)
        sub = restrict_map(ident, (1, 1))
        assert sub.dom == restrict(t, (1, 1))
        assert sub == identity_tree_map(restrict(t, (1, 1)))

    def test_restrict_map_collapse(self):
        t = LevelTree((1, 2, 3), ((0, 0), (0, 0, 1)))
        collapse = TreeMap(t, POINT_TREE, ((0,), (0, 0), (0, 0, 0)))
        sub = restrict_map(collapse, (1, 0))
        assert sub.dom == restrict(t, (1, 0))
        assert sub.cod == POINT_TREE
