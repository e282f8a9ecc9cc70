"""Cobounded regions: representations, covolume, lattice operations."""

import itertools
import random
from fractions import Fraction

import pytest

from toricfilt import (
    Cone,
    CoboundedRegion,
    Halfspace,
    NonpositiveScale,
    NormalOutsideCone,
    NotCobounded,
    PointOutsideDualCone,
    RandomFixtureSpec,
    cogauge,
    covolume,
    hull_join,
    meet,
    random_region,
    region_from_vertices,
    scale_region,
    smooth_cone,
    support_value,
    vrep,
)

C2 = smooth_cone(2)


def region(*halfspaces, cone=C2):
    return CoboundedRegion(cone, [Halfspace.make(n, c) for n, c in halfspaces])


def F(p, q=1):
    return Fraction(p, q)


def shoelace_covolume(reg):
    """Rank-2 oracle: complement polygon area via the shoelace formula."""
    assert reg.cone == C2
    verts = sorted(vrep(reg), key=lambda v: (v[0], -v[1]))
    chain = [(Fraction(0), Fraction(0))] + verts
    total = Fraction(0)
    for (x1, y1), (x2, y2) in zip(chain, chain[1:] + chain[:1]):
        total += x1 * y2 - x2 * y1
    return abs(total) / 2


P_UNIT = region(((1, 1), 1))
P_62A = region(((2, 1), 2))  # {x + y/2 >= 1}
P_62B = region(((1, 2), 2))  # {x/2 + y >= 1}
P_STEEP = region(((5, 1), 10))


class TestVrep:
    def test_unit_simplex(self):
        assert vrep(P_UNIT) == ((F(0), F(1)), (F(1), F(0)))

    def test_tilted(self):
        assert vrep(P_62A) == ((F(0), F(2)), (F(1), F(0)))

    def test_steep_collinear_vertices(self):
        # (1, 5) lies on the segment between the two vertices, so only the
        # endpoints appear.
        assert vrep(P_STEEP) == ((F(0), F(10)), (F(2), F(0)))


class TestSupportValue:
    def test_facet_normal(self):
        assert support_value(P_UNIT, (1, 1)) == 1

    def test_vertex_minimum(self):
        assert support_value(P_62A, (1, 1)) == 1
        assert support_value(P_STEEP, (1, 1)) == 2

    def test_boundary_normal_is_zero(self):
        assert support_value(P_62A, (1, 0)) == 0

    def test_rejects_outside_normal(self):
        with pytest.raises(NormalOutsideCone):
            support_value(P_UNIT, (-1, 1))


class TestCogauge:
    def test_single_facet(self):
        assert cogauge(P_UNIT, (2, 3)) == 5

    def test_formula_matches_membership(self):
        assert cogauge(P_62A, (1, 1)) == F(3, 2)
        tau = cogauge(P_62A, (1, 1))
        assert scale_region(P_62A, tau).contains_point((1, 1))
        assert not scale_region(P_62A, tau + F(1, 100)).contains_point((1, 1))

    def test_min_over_facets(self):
        both = region(((1, 1), 1), ((2, 1), 2))
        assert cogauge(both, (0, 4)) == 2

    def test_rejects_outside_point(self):
        with pytest.raises(PointOutsideDualCone):
            cogauge(P_UNIT, (-1, 2))
        with pytest.raises(PointOutsideDualCone):
            cogauge(P_UNIT, (0, 0))

    def test_homogeneous(self):
        rng = random.Random(1)
        for _ in range(25):
            m = (rng.randint(0, 9), rng.randint(0, 9))
            if m == (0, 0):
                continue
            k = rng.randint(1, 5)
            scaled = tuple(k * x for x in m)
            assert cogauge(P_62A, scaled) == k * cogauge(P_62A, m)

    def test_level_iff_membership(self):
        rng = random.Random(2)
        for _ in range(40):
            m = (rng.randint(0, 8), rng.randint(0, 8))
            if m == (0, 0):
                continue
            lam = Fraction(rng.randint(1, 30), rng.randint(1, 6))
            member = scale_region(P_62B, lam).contains_point(m)
            assert member == (cogauge(P_62B, m) >= lam)


class TestMeetAndJoin:
    def test_meet_idempotent(self):
        assert meet(P_62A, P_62A) == P_62A

    def test_meet_pairwise_facets(self):
        # Consistent with the worked multiplicity 8/3 = 2! * (4/3): the meet
        # keeps both facets and the crossing vertex (2/3, 2/3).
        m = meet(P_62A, P_62B)
        assert vrep(m) == ((F(0), F(2)), (F(2, 3), F(2, 3)), (F(2), F(0)))
        assert covolume(m) == F(4, 3)

    def test_meet_nested(self):
        deep = region(((1, 1), 2))
        assert meet(P_UNIT, deep) == deep

    def test_hull_join_of_tilted_pair(self):
        assert hull_join(P_62A, P_62B) == P_UNIT

    def test_hull_join_idempotent_and_nested(self):
        deep = region(((1, 1), 2))
        assert hull_join(P_62A, P_62A) == P_62A
        assert hull_join(P_UNIT, deep) == P_UNIT

    def test_join_support_is_min(self):
        j = hull_join(P_62A, P_62B)
        for hs in P_62A.halfspaces + P_62B.halfspaces + j.halfspaces:
            u = hs.normal
            assert support_value(j, u) == min(
                support_value(P_62A, u), support_value(P_62B, u)
            )


class TestCovolume:
    def test_goldens(self):
        assert covolume(P_UNIT) == F(1, 2)
        assert covolume(P_62A) == 1

    def test_shoelace_oracle_on_fixtures(self):
        for reg in (P_UNIT, P_62A, P_62B, P_STEEP, meet(P_62A, P_62B)):
            assert covolume(reg) == shoelace_covolume(reg)

    def test_shoelace_oracle_on_random_regions(self):
        for seed in range(30):
            reg = random_region(RandomFixtureSpec(seed=seed))
            assert covolume(reg) == shoelace_covolume(reg)

    def test_rank_three_corner(self):
        c3 = smooth_cone(3)
        reg = CoboundedRegion(c3, [Halfspace.make((1, 1, 1), 1)])
        assert covolume(reg) == F(1, 6)

    def test_rank_one(self):
        c1 = smooth_cone(1)
        reg = CoboundedRegion(c1, [Halfspace.make((1,), F(7, 3))])
        assert covolume(reg) == F(7, 3)


class TestScale:
    def test_bounds_scale(self):
        assert scale_region(P_UNIT, 2) == region(((1, 1), 2))

    def test_covolume_homogeneity(self):
        assert covolume(scale_region(P_62A, 2)) == 4 * covolume(P_62A)

    def test_identity(self):
        assert scale_region(P_62A, 1) == P_62A

    def test_rejects_nonpositive(self):
        with pytest.raises(NonpositiveScale):
            scale_region(P_UNIT, 0)


class TestValidity:
    def test_boundary_normal_rejected(self):
        with pytest.raises(NotCobounded):
            region(((1, 0), 1))

    def test_empty_halfspaces_rejected(self):
        with pytest.raises(NotCobounded):
            CoboundedRegion(C2, [])

    def test_nonpositive_bound_rejected(self):
        with pytest.raises(NotCobounded):
            region(((1, 1), 0))

    def test_redundant_halfspace_pruned(self):
        # {x + y/2 >= 1} already implies {x + y >= 1}.
        r = region(((1, 1), 1), ((2, 1), 2))
        assert r == P_62A


class TestLatticeInvariants:
    def test_covolume_monotonicity_random(self):
        for seed in range(40):
            p = random_region(RandomFixtureSpec(seed=100 + 2 * seed))
            q = random_region(RandomFixtureSpec(seed=100 + 2 * seed + 1))
            cm, cj = covolume(meet(p, q)), covolume(hull_join(p, q))
            cp, cq = covolume(p), covolume(q)
            assert cm >= max(cp, cq)
            assert cj <= min(cp, cq)
            # Inclusion-exclusion defect is the hull gap, always >= 0.
            assert cm + cj <= cp + cq

    def test_cogauge_support_duality(self):
        # h_P(u) = inf over monomials of <m, u> / tau_P(m); the infimum is
        # attained on the facet through the minimizing vertex.
        for reg in (P_62A, P_STEEP, meet(P_62A, P_62B)):
            for hs in reg.halfspaces:
                u = hs.normal
                best = min(
                    Fraction(sum(a * b for a, b in zip(m, u))) / cogauge(reg, m)
                    for m in itertools.product(range(0, 13), repeat=2)
                    if m != (0, 0)
                )
                assert best == support_value(reg, u)

    def test_vertices_inside_dual_cone(self):
        for seed in range(20):
            reg = random_region(RandomFixtureSpec(seed=500 + seed))
            for v in vrep(reg):
                assert reg.cone.contains_m(v)


class TestSingularCone:
    CONE = Cone.from_rays([(1, 0), (1, 2)])

    def test_region_and_covolume(self):
        reg = CoboundedRegion(self.CONE, [Halfspace.make((1, 1), 1)])
        assert covolume(reg) == 1
        assert vrep(reg) == ((F(0), F(1)), (F(2), F(-1)))

    def test_boundary_normals_rejected(self):
        with pytest.raises(NotCobounded):
            CoboundedRegion(self.CONE, [Halfspace.make((1, 2), 1)])

    def test_region_from_vertices(self):
        reg = region_from_vertices(self.CONE, [(0, 1), (1, 0), (2, -1)])
        assert reg.halfspaces == (Halfspace.make((1, 1), 1),)
