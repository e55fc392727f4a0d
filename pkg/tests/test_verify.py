"""Tests for the exhaustive verification harness."""

from __future__ import annotations

import json

import pytest

from theta_disk.globular import POINT_CARDINAL
from theta_disk.itree import (
    INTERVAL,
    ITreeObj,
    enumerate_morphisms,
    trivial_obj,
    vee,
)
from theta_disk.labeled import trivial_labeled, xi_interval, xi_inverse
from theta_disk.ograph import EMPTY_OGRAPH, gamma
from theta_disk.omega import (
    EnrichedCell,
    comparison_L,
    compose_cells,
    m_source,
    promote_cell,
    psi_mor,
)
from theta_disk.ordinal import Ordinal, vee_map
from theta_disk.verify import (
    CHECKS,
    Bounds,
    check_L,
    check_gamma,
    check_itree_duality,
    check_omega_laws,
    check_ordinal_duality,
    check_phi,
    check_psi,
    check_upsilon,
    check_xi,
    parse_bounds,
    render_reports,
    run_all,
)


TI = trivial_obj(INTERVAL)
I1 = ITreeObj(INTERVAL, Ordinal(1), (TI, TI))


class TestBounds:
    def test_defaults(self):
        b = Bounds()
        assert (b.max_height, b.max_degree, b.max_label) == (3, 2, 3)
        assert (b.max_vertices, b.max_dim) == (5, 3)

    def test_rejects_negatives(self):
        with pytest.raises(ValueError, match="non-negative"):
            Bounds(max_height=-1)

    def test_serialization_round_trip(self):
        b = Bounds(max_label=5, max_dim=2)
        assert Bounds.from_dict(b.to_dict()) == b

    def test_parse_overrides_named_entries(self):
        b = parse_bounds("height=2,dim=1")
        assert b == Bounds(max_height=2, max_dim=1)
        assert parse_bounds("") == Bounds()
        assert parse_bounds("label=4", base=b) == Bounds(
            max_height=2, max_dim=1, max_label=4
        )

    def test_parse_rejects_unknown_keys(self):
        with pytest.raises(ValueError, match="unknown bounds entry"):
            parse_bounds("width=3")


class TestOrdinalDualityCheck:
    def test_passes_with_pinned_map_count(self):
        report = check_ordinal_duality(Bounds(max_label=5))
        assert report.passed
        assert report.counterexample is None
        assert report.instances["interval_maps"] == 462
        assert report.instances["interval_maps"] >= 251
        assert report.instances["hom_pairs"] == 25

    def test_negative_control(self):
        target = Ordinal(2)
        identity = tuple(range(3))

        def corrupt(f):
            if f.dom == target and f.images == identity:
                return vee_map(type(f)(target, target, (0, 2, 2)))
            return vee_map(f)

        report = check_ordinal_duality(Bounds(), vee_map_fn=corrupt)
        assert not report.passed
        assert report.counterexample["law"] == "interval-map-round-trip"


class TestITreeDualityCheck:
    def test_height_zero_has_one_object_per_flavor(self):
        report = check_itree_duality(Bounds(max_height=0))
        assert report.passed
        assert report.instances["interval_objects"] == 1
        assert report.instances["ordinal_objects"] == 1
        assert report.instances["capped_pairs"] == 0

    def test_passes_at_defaults(self):
        report = check_itree_duality(Bounds())
        assert report.passed
        assert report.instances["interval_morphisms"] > 0

    def test_negative_control(self):
        def corrupt(x):
            if x == I1:
                return vee(TI)
            return vee(x)

        report = check_itree_duality(Bounds(), vee_fn=corrupt)
        assert not report.passed
        assert report.counterexample["law"] == "object-round-trip"


class TestPhiCheck:
    def test_passes_at_defaults(self):
        report = check_phi(Bounds())
        assert report.passed
        assert report.instances["disks"] > 1
        assert report.instances["morphisms"] > 0

    def test_negative_control(self):
        report = check_phi(Bounds(), phi_obj_fn=lambda d: TI)
        assert not report.passed
        assert report.counterexample["law"] == "object-round-trip"


class TestGammaCheck:
    def test_passes_at_defaults(self):
        report = check_gamma(Bounds())
        assert report.passed
        assert report.instances["cardinals"] > 4

    def test_negative_control(self):
        def corrupt(x):
            if x == POINT_CARDINAL:
                return EMPTY_OGRAPH
            return gamma(x)

        report = check_gamma(Bounds(), gamma_fn=corrupt)
        assert not report.passed
        assert report.counterexample["law"] == "graph-round-trip"


class TestUpsilonCheck:
    def test_passes_at_defaults(self):
        report = check_upsilon(Bounds())
        assert report.passed
        assert report.instances["graphs"] > 1

    def test_negative_control(self):
        report = check_upsilon(Bounds(), upsilon_fn=lambda h: EMPTY_OGRAPH)
        assert not report.passed
        assert report.counterexample["law"] == "tree-round-trip"


class TestLCheck:
    def test_passes_at_defaults(self):
        report = check_L(Bounds())
        assert report.passed
        assert report.instances["cells"] > 0
        assert 0 < report.instances["proper_cells"] < report.instances["cells"]

    def test_negative_control(self):
        def corrupt(c):
            e = comparison_L(c)
            if e.dim == 0 and e.h == e.k == 1:
                return EnrichedCell(0, 0, 0)
            return e

        report = check_L(Bounds(), comparison_fn=corrupt)
        assert not report.passed
        assert report.counterexample["law"] == "injective"


class TestOmegaLawsCheck:
    def test_passes_at_defaults(self):
        report = check_omega_laws(Bounds())
        assert report.passed
        for key in (
            "unit_checks",
            "associativity_checks",
            "globularity_checks",
            "composite_boundary_checks",
        ):
            assert report.instances[key] > 0

    def test_negative_control(self):
        def corrupt(beta, alpha, m):
            real = compose_cells(beta, alpha, m)
            return promote_cell(m_source(alpha, m), real.nominal_dim)

        report = check_omega_laws(Bounds(), compose_fn=corrupt)
        assert not report.passed
        assert report.counterexample["law"] == "left-unit"


class TestPsiCheck:
    def test_passes_at_defaults(self):
        report = check_psi(Bounds())
        assert report.passed
        assert report.instances["pairs"] == 9

    def test_negative_control(self):
        def corrupt(f):
            return psi_mor(enumerate_morphisms(f.dom, f.cod)[0])

        report = check_psi(Bounds(), psi_mor_fn=corrupt)
        assert not report.passed
        assert report.counterexample["law"] == "faithful"


class TestXiCheck:
    def test_passes_at_defaults(self):
        report = check_xi(Bounds())
        assert report.passed
        assert report.instances["interval_objects"] > 4
        assert report.instances["square_morphisms"] > 0

    def test_negative_control(self):
        li1 = xi_inverse(I1)

        def corrupt(t):
            if t == li1:
                return TI
            return xi_interval(t)

        report = check_xi(Bounds(), xi_interval_fn=corrupt)
        assert not report.passed
        assert report.counterexample["law"] == "object-round-trip"


class TestRunAll:
    def test_everything_passes_at_defaults(self):
        reports = run_all()
        assert [r.check for r in reports] == list(CHECKS)
        assert all(r.passed for r in reports)
        assert all(r.counterexample is None for r in reports)

    def test_reports_render_deterministically(self):
        bounds = Bounds(max_height=1, max_label=1, max_vertices=2, max_dim=1)
        first = render_reports(run_all(bounds))
        second = render_reports(run_all(bounds))
        assert first == second
        lines = first.strip().split("\n")
        assert len(lines) == len(CHECKS)
        for line in lines:
            data = json.loads(line)
            assert data["kind"] == "report"
            assert data["passed"] is True
