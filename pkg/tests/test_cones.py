"""Lattice/cone substrate: duals, membership, Hilbert generators."""

import itertools
import random
from fractions import Fraction

import pytest

from toricfilt import (
    Cone,
    DimensionMismatch,
    Membership,
    NotFullDimensional,
    NotStronglyConvex,
    dual_cone,
    hilbert_generators,
    membership,
    smooth_cone,
)
from toricfilt.linalg import dot


def brute_dual_rays(rays, box=6):
    """Double-description oracle in rank 2: enumerate dual lattice points in
    a box and keep the angular extremes (all other points on one side)."""
    points = [
        p
        for p in itertools.product(range(-box, box + 1), repeat=2)
        if any(x != 0 for x in p) and all(dot(p, r) >= 0 for r in rays)
    ]
    from toricfilt.linalg import primitivize

    extreme = set()
    for p in points:
        crosses = [p[0] * q[1] - p[1] * q[0] for q in points]
        if all(c >= 0 for c in crosses) or all(c <= 0 for c in crosses):
            extreme.add(primitivize(p))
    return sorted(extreme)


def test_dual_orthant_self_dual():
    assert dual_cone([(1, 0), (0, 1)]) == [(0, 1), (1, 0)]


def test_dual_singular_cone_matches_brute_force():
    rays = [(1, 0), (1, 2)]
    dual = dual_cone(rays)
    assert dual == [(0, 1), (2, -1)]
    assert dual == brute_dual_rays(rays)


def test_dual_rank_one():
    assert dual_cone([(1,)]) == [(1,)]


def test_dual_rejects_lower_dimensional():
    with pytest.raises(NotFullDimensional):
        dual_cone([(1, 0)])


def test_dual_rejects_line():
    with pytest.raises(NotStronglyConvex):
        dual_cone([(1, 0), (-1, 0), (0, 1)])


@pytest.mark.parametrize(
    "rays",
    [
        [(1, 0), (0, 1)],
        [(1, 0), (1, 2)],
        [(2, -1), (0, 1)],
        [(1, 0), (1, 5)],
        [(3, 1), (-1, 2)],
    ],
)
def test_dual_involution(rays):
    cone = Cone.from_rays(rays)
    again = Cone.from_rays(cone.dual_rays)
    assert again.dual_rays == cone.rays


def test_redundant_input_rays_are_pruned():
    cone = Cone.from_rays([(1, 0), (1, 1), (0, 1)])
    assert cone.rays == ((0, 1), (1, 0))


def test_membership_classification():
    cone = smooth_cone(2)
    assert membership(cone, (1, 1)) is Membership.INTERIOR
    assert membership(cone, (1, 0)) is Membership.BOUNDARY
    assert membership(cone, (-1, 2)) is Membership.OUTSIDE


def test_membership_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        membership(smooth_cone(2), (1, 1, 1))


def test_membership_scale_invariant():
    cone = Cone.from_rays([(1, 0), (1, 2)])
    rng = random.Random(0)
    for _ in range(50):
        v = (rng.randint(-4, 4), rng.randint(-4, 4))
        if v == (0, 0):
            continue
        c = Fraction(rng.randint(1, 9), rng.randint(1, 9))
        scaled = tuple(c * x for x in v)
        assert membership(cone, v) is membership(cone, scaled)


def test_hilbert_smooth_and_rank_one():
    assert hilbert_generators(smooth_cone(2)) == ((0, 1), (1, 0))
    assert hilbert_generators(smooth_cone(1)) == ((1,),)


def test_hilbert_singular_cone_by_enumeration():
    cone = Cone.from_rays([(1, 0), (1, 2)])
    basis = hilbert_generators(cone)
    assert basis == ((0, 1), (1, 0), (2, -1))
    # Irreducibility oracle: no generator is a sum of two nonzero semigroup
    # elements from a bounded window.
    window = [
        p
        for p in itertools.product(range(-8, 9), repeat=2)
        if any(x != 0 for x in p) and cone.contains_m(p)
    ]
    for h in basis:
        for a in window:
            b = tuple(h[i] - a[i] for i in range(2))
            if any(x != 0 for x in b) and cone.contains_m(b):
                pytest.fail(f"{h} = {a} + {b} is reducible")
            if a == h:
                break


def test_hilbert_generates_window():
    cone = Cone.from_rays([(2, -1), (0, 1)])
    basis = hilbert_generators(cone)
    window = [
        p
        for p in itertools.product(range(-6, 7), repeat=2)
        if any(x != 0 for x in p) and cone.contains_m(p)
    ]

    def generated(p, depth=12):
        if all(x == 0 for x in p):
            return True
        if depth == 0:
            return False
        for h in basis:
            q = tuple(p[i] - h[i] for i in range(2))
            if cone.contains_m(q) and generated(q, depth - 1):
                return True
        return False

    assert all(generated(p) for p in window)


def test_rank_three_cone_roundtrip():
    cone = Cone.from_rays([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)])
    assert cone.rays == ((0, 0, 1), (0, 1, 0), (1, 0, 0))
    assert Cone.from_rays(cone.dual_rays).dual_rays == cone.rays
