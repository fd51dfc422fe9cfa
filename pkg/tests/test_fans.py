"""Tests for rational cones, fans, and stellar subdivision."""

import pytest
from hypothesis import given, settings, strategies as st

from coxmds.fans import (
    Cone,
    cone_contains,
    cone_facets,
    cone_from_rays,
    empty_fan,
    Fan,
    fan_consistency_report,
    stellar_subdivision,
)


# Complete fan of the projective plane.
P2_RAYS = [[1, 0], [0, 1], [-1, -1]]
P2_MAX = [(0, 1), (1, 2), (0, 2)]


def p2_fan():
    return Fan(2, [list(r) for r in P2_RAYS], list(P2_MAX))


class TestConeMembership:
    def test_first_quadrant(self):
        c = cone_from_rays([[1, 0], [0, 1]])
        assert c.contains([3, 5])
        assert c.contains([0, 0])
        assert c.contains([7, 0])
        assert not c.contains([-1, 2])
        assert not c.contains([1, -1])

    def test_halfplane_with_lineality(self):
        c = cone_from_rays([[1, 0], [-1, 0], [0, 1]])
        assert c.contains([-5, 3])
        assert c.contains([5, 0])
        assert not c.contains([0, -1])

    def test_ray_cone(self):
        c = cone_from_rays([[2, 4]])
        assert c.contains([1, 2])
        assert c.contains([3, 6])
        assert not c.contains([-1, -2])
        assert not c.contains([1, 3])

    def test_zero_point_always_inside(self):
        assert cone_contains([], [0, 0, 0])
        assert not cone_contains([], [1, 0, 0])

    def test_simplicial_3d(self):
        rays = [[1, 0, 0], [0, 1, 0], [1, 1, 2]]
        c = cone_from_rays(rays)
        assert c.contains([2, 2, 2])
        assert not c.contains([0, 0, 1])
        assert not c.contains([0, 0, -1])

    @given(
        st.lists(
            st.lists(st.integers(-4, 4), min_size=3, max_size=3),
            min_size=1,
            max_size=4,
        ),
        st.lists(st.integers(0, 3), min_size=1, max_size=4),
    )
    @settings(max_examples=60, deadline=None)
    def test_nonneg_combinations_are_members(self, rays, coeffs):
        point = [0, 0, 0]
        for r, c in zip(rays, coeffs):
            for j in range(3):
                point[j] += c * r[j]
        assert cone_contains(rays, point)


class TestConeGeometry:
    def test_dim_and_pointedness(self):
        assert cone_from_rays([[1, 0], [0, 1]]).dim() == 2
        assert cone_from_rays([[1, 0], [0, 1]]).is_pointed()
        assert cone_from_rays([[1, 1]]).dim() == 1
        assert not cone_from_rays([[1, 0], [-1, 0]]).is_pointed()

    def test_facets_of_quadrant(self):
        facets = cone_facets([[1, 0], [0, 1]])
        idx_sets = sorted(f[1] for f in facets)
        assert idx_sets == [(0,), (1,)]
        for normal, idx in facets:
            ray = [[1, 0], [0, 1]][idx[0]]
            assert sum(a * b for a, b in zip(normal, ray)) == 0

    def test_facets_of_simplicial_3d(self):
        rays = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
        facets = cone_facets(rays)
        assert sorted(f[1] for f in facets) == [(0, 1), (0, 2), (1, 2)]

    def test_facets_of_nonsimplicial_cone(self):
        # cone over a square: four facets, each with two rays
        rays = [[1, 1, 1], [-1, 1, 1], [-1, -1, 1], [1, -1, 1]]
        facets = cone_facets(rays)
        assert len(facets) == 4
        assert all(len(idx) == 2 for _, idx in facets)


class TestStellarSubdivision:
    def test_interior_point_of_p2_cone(self):
        fan = p2_fan()
        out = stellar_subdivision(fan, [1, 1])
        assert out.rays[-1] == [1, 1]
        new_index = len(out.rays) - 1
        assert (0, new_index) in out.maximal
        assert (1, new_index) in out.maximal
        assert (1, 2) in out.maximal and (0, 2) in out.maximal
        assert len(out.maximal) == 4

    def test_support_is_preserved(self):
        fan = p2_fan()
        out = stellar_subdivision(fan, [2, 1])
        probes = [[1, 0], [0, 1], [-1, -1], [5, 3], [-2, 7], [3, -1]]
        for p in probes:
            before = bool(fan.cones_containing(p))
            after = bool(out.cones_containing(p))
            assert before == after

    def test_wall_point_subdivides_both_neighbours(self):
        # v on the shared wall of two 3-dimensional cones
        rays = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, -1]]
        fan = Fan(3, rays, [(0, 1, 2), (0, 1, 3)])
        v = [1, 1, 0]  # lies on cone(rays[0], rays[1])
        out = stellar_subdivision(fan, v)
        n = len(out.rays) - 1
        assert sorted(out.maximal) == sorted(
            [(0, 2, n), (1, 2, n), (0, 3, n), (1, 3, n)]
        )

    def test_existing_ray_rejected(self):
        fan = p2_fan()
        with pytest.raises(ValueError):
            stellar_subdivision(fan, [2, 0])

    def test_point_outside_support_rejected(self):
        fan = Fan(2, [[1, 0], [0, 1]], [(0, 1)])
        with pytest.raises(ValueError):
            stellar_subdivision(fan, [-1, 0])

    def test_consistency_after_subdivision(self):
        fan = p2_fan()
        out = stellar_subdivision(fan, [1, 2])
        assert fan_consistency_report(out) == []


class TestFanBasics:
    def test_empty_fan(self):
        f = empty_fan(4)
        assert f.is_empty()
        assert f.dim == 4
        assert f.cones_containing([1, 0, 0, 0]) == []

    def test_consistency_report_flags_problems(self):
        bad = Fan(2, [[0, 0], [1, 0], [2, 0]], [(0, 1), (1, 5)])
        report = fan_consistency_report(bad)
        assert any("zero" in p for p in report)
        assert any("coincide" in p for p in report)
        assert any("missing" in p for p in report)

    def test_unpointed_cone_flagged(self):
        bad = Fan(2, [[1, 0], [-1, 0]], [(0, 1)])
        report = fan_consistency_report(bad)
        assert any("not pointed" in p for p in report)
