"""Tests for labeled trees: fiber constraints, dualities, and conversions."""

from __future__ import annotations

import pytest

from theta_disk.forest import POINT_TREE, TreeMap, make_level_tree
from theta_disk.itree import (
    INTERVAL,
    ORDINAL,
    ITreeObj,
    compose as compose_itree,
    enumerate_morphisms,
    enumerate_objects,
    identity as identity_itree,
    marker,
    trivial_obj,
    validate as validate_itree,
    vee,
    wedge,
)
from theta_disk.labeled import (
    ConstrainedTree,
    CroppedTree,
    LabeledTree,
    LabeledTreeMor,
    compose_labeled,
    con_dualize,
    con_dualize_mor,
    coproduct_labeled,
    enumerate_cropped_trees,
    enumerate_labeled_mors,
    identity_labeled,
    label_slots,
    restrict_labeled,
    restrict_labeled_mor,
    suspend_labeled,
    trivial_labeled,
    validate_constrained,
    validate_cropped,
    xi_interval,
    xi_interval_mor,
    xi_inverse,
    xi_ordinal,
    xi_ordinal_mor,
)
from theta_disk.ordinal import OrdMap, Ordinal


def o(n: int) -> Ordinal:
    return Ordinal(n)


def labs(*ns: int) -> tuple[Ordinal, ...]:
    return tuple(Ordinal(n) for n in ns)


DEEP_TREE = make_level_tree(
    (1, 3, 6, 9, 10),
    (
        (0, 0, 0),
        (0, 1, 1, 1, 1, 2),
        (0, 1, 2, 2, 3, 3, 3, 4, 5),
        (0, 1, 2, 3, 4, 5, 5, 6, 7, 8),
    ),
)
DEEP_LABELS = (
    labs(2),
    labs(0, 3, 0),
    labs(0, 0, 1, 2, 0, 0),
    labs(0, 0, 0, 0, 0, 1, 0, 0, 0),
    labs(0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
)


def deep() -> CroppedTree:
    return CroppedTree(INTERVAL, DEEP_TREE, DEEP_LABELS)


TI = trivial_obj(INTERVAL)
TO = trivial_obj(ORDINAL)
I1 = ITreeObj(INTERVAL, o(1), (TI, TI))
I2 = ITreeObj(INTERVAL, o(2), (TI, I1, TI))
O0 = ITreeObj(ORDINAL, o(0), (TO, TO))
O1 = ITreeObj(ORDINAL, o(1), (TO, O0, TO))


class TestLabeledTreeBasics:
    def test_row_count_must_match_levels(self):
        with pytest.raises(ValueError, match="one label row per stored level"):
            LabeledTree(INTERVAL, POINT_TREE, ())

    def test_row_arity_must_match_level_size(self):
        with pytest.raises(ValueError, match="wrong arity"):
            LabeledTree(INTERVAL, POINT_TREE, (labs(0, 0),))

    def test_interval_labels_start_at_zero(self):
        with pytest.raises(ValueError, match="at least"):
            LabeledTree(INTERVAL, POINT_TREE, (labs(-1),))
        assert LabeledTree(ORDINAL, POINT_TREE, (labs(-1),)).is_trivial

    def test_label_slots(self):
        assert label_slots(INTERVAL, o(0)) == 1
        assert label_slots(INTERVAL, o(2)) == 3
        assert label_slots(ORDINAL, o(-1)) == 1
        assert label_slots(ORDINAL, o(2)) == 4

    def test_label_lookup_follows_continuation(self):
        t = deep()
        assert t.label((0, 0)) == o(2)
        assert t.label((2, 3)) == o(2)
        assert t.label((7, 9)) == o(0)
        with pytest.raises(ValueError, match="unknown vertex"):
            t.label((1, 3))

    def test_trivial_trees(self):
        for flavor in (INTERVAL, ORDINAL):
            t = trivial_labeled(flavor)
            assert t.is_trivial
            assert validate_cropped(t) == []
        assert not deep().is_trivial

    def test_equality_ignores_wrapper_class(self):
        plain = LabeledTree(INTERVAL, DEEP_TREE, DEEP_LABELS)
        assert deep() == plain
        assert hash(deep()) == hash(plain)
        assert deep() != trivial_labeled(INTERVAL)

    def test_serialization_round_trip(self):
        for t in (deep(), trivial_labeled(ORDINAL)):
            data = t.to_dict()
            assert data["kind"] == "labeled-tree"
            assert LabeledTree.from_dict(data) == t

    def test_from_dict_truncates_chain_storage(self):
        data = {
            "kind": "labeled-tree",
            "flavor": INTERVAL,
            "levels": [1, 1],
            "parents": [[0]],
            "labels": [[0], [0]],
        }
        assert LabeledTree.from_dict(data) == trivial_labeled(INTERVAL)


class TestConstrainedValidation:
    def test_example_tree_is_constrained_and_cropped(self):
        t = LabeledTree(INTERVAL, DEEP_TREE, DEEP_LABELS)
        assert validate_constrained(t) == []
        assert validate_cropped(t) == []
        assert ConstrainedTree(INTERVAL, DEEP_TREE, DEEP_LABELS) == t
        assert CroppedTree(INTERVAL, DEEP_TREE, DEEP_LABELS) == t

    def test_fiber_size_must_match_label(self):
        rows = (DEEP_LABELS[0], labs(0, 2, 0)) + DEEP_LABELS[2:]
        t = LabeledTree(INTERVAL, DEEP_TREE, rows)
        problems = validate_constrained(t)
        assert len(problems) == 1
        assert "vertex (1, 1)" in problems[0]
        assert "prescribing 3" in problems[0]
        with pytest.raises(ValueError, match="prescribing"):
            ConstrainedTree(INTERVAL, DEEP_TREE, rows)

    def test_parent_rows_must_be_sorted(self):
        shape = make_level_tree((1, 2, 3), ((0, 0), (1, 0, 1)))
        t = LabeledTree(INTERVAL, shape, (labs(1), labs(0, 1), labs(0, 0, 0)))
        problems = validate_constrained(t)
        assert len(problems) == 1
        assert "not sorted" in problems[0]

    def test_stored_depth_must_end_at_single_slot_labels(self):
        t = LabeledTree(INTERVAL, POINT_TREE, (labs(2),))
        assert validate_constrained(t) == []
        problems = validate_cropped(t)
        assert len(problems) == 1
        assert "single-slot label" in problems[0]


class TestCroppedValidation:
    def test_interior_single_slot_label_is_reported(self):
        shape = make_level_tree((1, 3), ((0, 0, 0),))
        t = LabeledTree(INTERVAL, shape, (labs(2), labs(0, 0, 0)))
        assert validate_constrained(t) == []
        problems = validate_cropped(t)
        assert len(problems) == 1
        assert "vertex (1, 1)" in problems[0]
        assert "outer positions" in problems[0]
        with pytest.raises(ValueError, match="outer positions"):
            CroppedTree(INTERVAL, shape, (labs(2), labs(0, 0, 0)))

    def test_outer_positions_must_be_single_slot(self):
        shape = make_level_tree((1, 2, 3), ((0, 0), (0, 0, 1)))
        t = LabeledTree(
            INTERVAL, shape, (labs(1), labs(1, 0), labs(0, 0, 0))
        )
        assert validate_constrained(t) == []
        problems = validate_cropped(t)
        assert len(problems) == 1
        assert "vertex (1, 0)" in problems[0]


class TestRestrict:
    def test_restrict_at_root_is_identity(self):
        assert restrict_labeled(deep(), (0, 0)) == deep()

    def test_restrict_at_branch_vertex(self):
        sub = restrict_labeled(deep(), (1, 1))
        assert sub.tree == make_level_tree(
            (1, 4, 7, 8),
            ((0, 0, 0, 0), (0, 1, 1, 2, 2, 2, 3), (0, 1, 2, 3, 4, 4, 5, 6)),
        )
        assert sub.labels == (
            labs(3),
            labs(0, 1, 2, 0),
            labs(0, 0, 0, 0, 1, 0, 0),
            labs(0, 0, 0, 0, 0, 0, 0, 0),
        )
        assert validate_cropped(sub) == []

    def test_restrict_at_chain_vertex_collapses(self):
        assert restrict_labeled(deep(), (1, 0)) == trivial_labeled(INTERVAL)
        assert restrict_labeled(deep(), (6, 9)) == trivial_labeled(INTERVAL)

    def test_restriction_preserves_cropped(self):
        t = deep()
        for v in t.tree.vertices():
            assert validate_cropped(restrict_labeled(t, v)) == []


class TestSuspendCoproduct:
    def test_suspending_one_trivial_tree_gives_the_trivial_tree(self):
        t = suspend_labeled([trivial_labeled(INTERVAL)], o(0))
        assert t == trivial_labeled(INTERVAL)
        t = suspend_labeled([trivial_labeled(ORDINAL)], o(-1))
        assert t == trivial_labeled(ORDINAL)

    def test_suspension_places_one_tree_per_slot(self):
        t = suspend_labeled(
            [trivial_labeled(INTERVAL), trivial_labeled(INTERVAL)], o(1)
        )
        assert t.tree == make_level_tree((1, 2), ((0, 0),))
        assert t.labels == (labs(1), labs(0, 0))
        assert validate_cropped(t) == []
        lo0 = suspend_labeled([trivial_labeled(ORDINAL)] * 2, o(0))
        assert lo0.tree == make_level_tree((1, 2), ((0, 0),))
        assert lo0.labels == (labs(0), labs(-1, -1))
        assert validate_cropped(lo0) == []
        s = suspend_labeled(
            [trivial_labeled(ORDINAL), lo0, trivial_labeled(ORDINAL)], o(1)
        )
        assert s == xi_inverse(O1)
        assert validate_cropped(s) == []

    def test_singleton_interior_slots_break_croppedness_only(self):
        star = suspend_labeled([trivial_labeled(ORDINAL)] * 3, o(1))
        assert star.tree == make_level_tree((1, 3), ((0, 0, 0),))
        assert star.labels == (labs(1), labs(-1, -1, -1))
        assert validate_constrained(star) == []
        assert validate_cropped(star) != []

    def test_suspension_arity_is_checked(self):
        with pytest.raises(ValueError, match="prescribes 2 children"):
            suspend_labeled([trivial_labeled(INTERVAL)], o(1))
        with pytest.raises(ValueError, match="at least one"):
            suspend_labeled([], o(0))

    def test_coproduct_pads_shallow_summands_with_chains(self):
        small = suspend_labeled(
            [trivial_labeled(INTERVAL), trivial_labeled(INTERVAL)], o(1)
        )
        both = coproduct_labeled(INTERVAL, [small, trivial_labeled(INTERVAL)])
        assert both.tree == make_level_tree((2, 3), ((0, 0, 1),))
        assert both.labels == (labs(1, 0), labs(0, 0, 0))
        assert validate_cropped(both) == []

    def test_coproduct_rejects_mixed_flavors(self):
        with pytest.raises(ValueError, match="share the flavor"):
            coproduct_labeled(
                INTERVAL, [trivial_labeled(INTERVAL), trivial_labeled(ORDINAL)]
            )


class TestMorphisms:
    def test_identity_is_accepted_and_composes(self):
        for t in (deep(), trivial_labeled(INTERVAL), trivial_labeled(ORDINAL)):
            ident = identity_labeled(t)
            assert ident.dom == t and ident.cod == t
            assert compose_labeled(ident, ident) == ident

    def test_interval_components_must_preserve_endpoints(self):
        t = xi_inverse(I2)
        ident = identity_labeled(t)
        squashed = OrdMap(o(1), o(1), (0, 0))
        rows = (
            ident.alphas[0],
            (ident.alphas[1][0], squashed, ident.alphas[1][2]),
            ident.alphas[2],
        )
        with pytest.raises(ValueError, match="preserve both endpoints"):
            LabeledTreeMor(t, t, ident.tree_map, rows)

    def test_children_must_follow_the_component_slots(self):
        t = xi_inverse(I2)
        ident = identity_labeled(t)
        rerouted = TreeMap(
            t.tree, t.tree, (ident.tree_map.level_maps[0], (0, 1, 2), (0, 2, 1, 3))
        )
        with pytest.raises(ValueError, match="slots its component selects"):
            LabeledTreeMor(t, t, rerouted, ident.alphas)

    def test_op_morphism_tree_map_direction_is_enforced(self):
        s = suspend_labeled([trivial_labeled(ORDINAL)] * 2, o(0))
        t = trivial_labeled(ORDINAL)
        forward = TreeMap(t.tree, s.tree, ((0,), (0,)))
        empty = OrdMap(o(-1), o(-1), ())
        alphas = ((OrdMap(o(-1), o(0), ()),), (empty, empty))
        with pytest.raises(ValueError, match="codomain's tree"):
            LabeledTreeMor(t, s, forward, alphas)

    def test_morphism_ends_must_be_cropped(self):
        bad = LabeledTree(INTERVAL, POINT_TREE, (labs(2),))
        with pytest.raises(ValueError, match="domain is not cropped"):
            identity_labeled(bad)

    def test_hand_counted_hom_sets(self):
        li1, li2 = xi_inverse(I1), xi_inverse(I2)
        assert len(enumerate_labeled_mors(li1, li1)) == 1
        assert len(enumerate_labeled_mors(li1, li2)) == 1
        assert len(enumerate_labeled_mors(li2, li1)) == 2
        assert len(enumerate_labeled_mors(li2, li2)) == 3

    def test_trivial_interval_tree_is_terminal(self):
        for h in enumerate_objects(INTERVAL, 2, 3):
            t = xi_inverse(h)
            assert len(enumerate_labeled_mors(t, trivial_labeled(INTERVAL))) == 1
            expected = 1 if h.is_trivial else 0
            assert (
                len(enumerate_labeled_mors(trivial_labeled(INTERVAL), t))
                == expected
            )

    def test_trivial_ordinal_tree_is_initial(self):
        for h in enumerate_objects(ORDINAL, 2, 2):
            t = xi_inverse(h)
            assert len(enumerate_labeled_mors(trivial_labeled(ORDINAL), t)) == 1
            expected = 1 if h.is_trivial else 0
            assert (
                len(enumerate_labeled_mors(t, trivial_labeled(ORDINAL)))
                == expected
            )

    def test_restriction_of_morphisms(self):
        li2 = xi_inverse(I2)
        ident = identity_labeled(li2)
        sub = restrict_labeled_mor(ident, (1, 1))
        assert sub == identity_labeled(xi_inverse(I1))

    def test_serialization_round_trip(self):
        li1, li2 = xi_inverse(I1), xi_inverse(I2)
        m = enumerate_labeled_mors(li2, li1)[0]
        data = m.to_dict()
        assert data["kind"] == "labeled-tree-mor"
        assert data["direction"] == "forward"
        assert LabeledTreeMor.from_dict(data) == m
        lo0, lo1 = xi_inverse(O0), xi_inverse(O1)
        n = enumerate_labeled_mors(lo0, lo1)[0]
        data = n.to_dict()
        assert data["direction"] == "op"
        assert LabeledTreeMor.from_dict(data) == n
        data["direction"] = "forward"
        with pytest.raises(ValueError, match="does not match flavor"):
            LabeledTreeMor.from_dict(data)


class TestDualize:
    def test_trivial_trees_swap(self):
        assert con_dualize(trivial_labeled(INTERVAL)) == trivial_labeled(ORDINAL)
        assert con_dualize(trivial_labeled(ORDINAL)) == trivial_labeled(INTERVAL)

    def test_example_tree_dualizes_labelwise(self):
        dual = con_dualize(deep())
        assert dual.flavor == ORDINAL
        assert dual.tree == DEEP_TREE
        assert dual.labels[0] == labs(1)
        assert dual.labels[1] == labs(-1, 2, -1)
        assert validate_cropped(dual) == []
        assert con_dualize(dual) == deep()

    def test_dualize_requires_cropped_input(self):
        shape = make_level_tree((1, 3), ((0, 0, 0),))
        with pytest.raises(ValueError, match="outer positions"):
            con_dualize(LabeledTree(INTERVAL, shape, (labs(2), labs(0, 0, 0))))

    def test_double_dual_is_identity_on_trees(self):
        for flavor, cap in ((INTERVAL, 4), (ORDINAL, 3)):
            for t in enumerate_cropped_trees(flavor, 3, cap):
                dd = con_dualize(con_dualize(t))
                assert dd == t

    def test_duality_is_a_hom_bijection(self):
        zoo = enumerate_cropped_trees(INTERVAL, 2, 4)
        for a in zoo:
            for b in zoo:
                mors = enumerate_labeled_mors(a, b)
                duals = [con_dualize_mor(m) for m in mors]
                assert len(set(duals)) == len(mors)
                assert set(duals) == set(
                    enumerate_labeled_mors(con_dualize(b), con_dualize(a))
                )
                for m in mors:
                    assert con_dualize_mor(con_dualize_mor(m)) == m

    def test_dualization_reverses_composition(self):
        zoo = enumerate_cropped_trees(INTERVAL, 2, 3)
        for a in zoo:
            for b in zoo:
                for f in enumerate_labeled_mors(a, b):
                    for c in zoo:
                        for g in enumerate_labeled_mors(b, c):
                            assert con_dualize_mor(
                                compose_labeled(g, f)
                            ) == compose_labeled(
                                con_dualize_mor(f), con_dualize_mor(g)
                            )


class TestXiObjects:
    def test_trivial_trees_convert_to_trivial_objects(self):
        assert xi_interval(trivial_labeled(INTERVAL)) == TI
        assert xi_ordinal(trivial_labeled(ORDINAL)) == TO

    def test_example_tree_converts_with_branch_root(self):
        h = xi_interval(deep())
        assert h.root == o(2)
        assert h.children[0] == TI and h.children[2] == TI
        mid = h.children[1]
        assert mid.root == o(3)
        assert mid.children == (
            TI,
            I1,
            ITreeObj(INTERVAL, o(2), (TI, I1, TI)),
            TI,
        )
        assert validate_itree(h) == []

    def test_round_trips_at_small_heights(self):
        for flavor, cap in ((INTERVAL, 4), (ORDINAL, 3)):
            for h in enumerate_objects(flavor, 3, cap):
                t = xi_inverse(h)
                assert validate_cropped(t) == []
                converter = xi_interval if flavor == INTERVAL else xi_ordinal
                assert converter(t) == h
        assert xi_inverse(xi_interval(deep())) == deep()

    def test_conversion_is_bijective_on_bounded_objects(self):
        for flavor, cap in ((INTERVAL, 4), (ORDINAL, 3)):
            zoo = enumerate_cropped_trees(flavor, 3, cap)
            converter = xi_interval if flavor == INTERVAL else xi_ordinal
            images = [converter(t) for t in zoo]
            assert len(set(images)) == len(zoo)
            assert set(images) == set(enumerate_objects(flavor, 3, cap))

    def test_input_validation(self):
        with pytest.raises(ValueError, match="interval-flavor"):
            xi_interval(trivial_labeled(ORDINAL))
        with pytest.raises(ValueError, match="single-root"):
            xi_interval(
                coproduct_labeled(
                    INTERVAL,
                    [trivial_labeled(INTERVAL), trivial_labeled(INTERVAL)],
                )
            )
        shape = make_level_tree((1, 3), ((0, 0, 0),))
        with pytest.raises(ValueError, match="outer positions"):
            xi_interval(LabeledTree(INTERVAL, shape, (labs(2), labs(0, 0, 0))))


class TestXiMorphisms:
    def test_identities_map_to_identities(self):
        assert xi_interval_mor(identity_labeled(deep())) == identity_itree(
            xi_interval(deep())
        )
        lo1 = xi_inverse(O1)
        assert xi_ordinal_mor(identity_labeled(lo1)) == identity_itree(O1)

    def test_collapse_maps_to_marker(self):
        li2 = xi_inverse(I2)
        m = enumerate_labeled_mors(li2, trivial_labeled(INTERVAL))[0]
        assert xi_interval_mor(m) == marker(I2, TI)
        lo1 = xi_inverse(O1)
        n = enumerate_labeled_mors(trivial_labeled(ORDINAL), lo1)[0]
        assert xi_ordinal_mor(n) == marker(TO, O1)

    def test_interval_hom_sets_match_inductive_hom_sets(self):
        zoo = enumerate_cropped_trees(INTERVAL, 2, 3)
        for a in zoo:
            for b in zoo:
                mors = enumerate_labeled_mors(a, b)
                images = [xi_interval_mor(m) for m in mors]
                assert len(set(images)) == len(mors)
                assert set(images) == set(
                    enumerate_morphisms(xi_interval(a), xi_interval(b))
                )

    def test_ordinal_hom_sets_match_inductive_hom_sets(self):
        zoo = enumerate_cropped_trees(ORDINAL, 2, 2)
        for a in zoo:
            for b in zoo:
                mors = enumerate_labeled_mors(a, b)
                images = [xi_ordinal_mor(m) for m in mors]
                assert len(set(images)) == len(mors)
                assert set(images) == set(
                    enumerate_morphisms(xi_ordinal(a), xi_ordinal(b))
                )

    def test_conversion_respects_composition(self):
        zoo = enumerate_cropped_trees(ORDINAL, 2, 2)
        for a in zoo:
            for b in zoo:
                for f in enumerate_labeled_mors(a, b):
                    for c in zoo:
                        for g in enumerate_labeled_mors(b, c):
                            assert xi_ordinal_mor(
                                compose_labeled(g, f)
                            ) == compose_itree(xi_ordinal_mor(g), xi_ordinal_mor(f))


class TestDualitySquare:
    def test_on_objects(self):
        for t in enumerate_cropped_trees(INTERVAL, 3, 4) + [deep()]:
            assert xi_ordinal(con_dualize(t)) == vee(xi_interval(t))
        for s in enumerate_cropped_trees(ORDINAL, 3, 3):
            assert xi_interval(con_dualize(s)) == wedge(xi_ordinal(s))

    def test_on_morphisms(self):
        zoo = enumerate_cropped_trees(INTERVAL, 2, 3)
        for a in zoo:
            for b in zoo:
                for m in enumerate_labeled_mors(a, b):
                    assert xi_ordinal_mor(con_dualize_mor(m)) == vee(
                        xi_interval_mor(m)
                    )
