"""Cobounded convex regions of the dual cone.

A region P is a closed convex subset of sigma^v with bounded complement,
stored as sigma^v intersected with finitely many halfspaces {<m, u> >= c}
whose normals u lie in the interior of sigma and whose bounds c are positive.
After redundancy removal this interior condition is exactly coboundedness.

All arithmetic is exact (Fractions); vertices are derived once at
construction and cached on the instance.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, factorial, floor

from .cones import Cone, Membership
from .errors import (
    ConeMismatch,
    NonpositiveScale,
    NormalOutsideCone,
    NotCobounded,
    PointOutsideDualCone,
)
from .linalg import (
    dot,
    matrix_rank,
    solve_square,
    to_primitive_int,
    vsub,
)


@dataclass(frozen=True, order=True)
class Halfspace:
    """{m in M_R : <m, normal> >= bound} with primitive integer normal."""

    normal: tuple
    bound: Fraction

    @classmethod
    def make(cls, normal, bound) -> "Halfspace":
        bound = Fraction(bound)
        u, scale = to_primitive_int(normal)
        bound = bound / scale
        if bound <= 0:
            raise NotCobounded(f"halfspace bound must be positive, got {bound}")
        return cls(normal=u, bound=bound)

    def linear_form(self, m) -> Fraction:
        return Fraction(dot(m, self.normal))

    def contains(self, m) -> bool:
        return dot(m, self.normal) >= self.bound


def _polytope_vertices(rows: list[tuple], n: int) -> list[tuple]:
    """Vertices of {x : <x, a> >= c for (a, c) in rows}, brute force.

    Each row is (normal, rhs).  Exact; intended for desk-scale inputs.
    """
    verts: set[tuple] = set()
    for subset in itertools.combinations(range(len(rows)), n):
        mat = [rows[i][0] for i in subset]
        rhs = [rows[i][1] for i in subset]
        sol = solve_square(mat, rhs)
        if sol is None:
            continue
        if all(dot(sol, a) >= c for a, c in rows):
            verts.add(tuple(Fraction(x) for x in sol))
    return sorted(verts)


def _affine_rank(points: list[tuple]) -> int:
    if len(points) <= 1:
        return 0
    base = points[0]
    return matrix_rank([vsub(p, base) for p in points[1:]])


def _triangulate_face(points: list[tuple], rows: list[tuple], tight: frozenset) -> list[tuple]:
    """Simplices (as vertex tuples) triangulating a face of an H-polytope.

    `points` are the vertices of the face, `tight` the indices of rows active
    on the whole face.  Purely combinatorial recursion; no induced metric.
    """
    d = _affine_rank(points)
    if d == 0:
        return [(points[0],)]
    if d == 1:
        ordered = sorted(points)
        return [(ordered[0], ordered[-1])]
    apex = min(points)
    simplices = []
    seen_facets: set[frozenset] = set()
    for idx, (a, c) in enumerate(rows):
        if idx in tight:
            continue
        face_pts = [p for p in points if dot(p, a) == c]
        if not face_pts or apex in face_pts:
            continue
        key = frozenset(face_pts)
        if key in seen_facets:
            continue
        if _affine_rank(face_pts) != d - 1:
            continue
        seen_facets.add(key)
        for sub in _triangulate_face(face_pts, rows, tight | {idx}):
            simplices.append(sub + (apex,))
    return simplices


def _det_abs(rows: list[tuple]) -> Fraction:
    from .linalg import det

    return abs(det(rows))


def polytope_volume(rows: list[tuple], n: int) -> Fraction:
    """Exact Euclidean volume (lattice-normalized) of an H-polytope."""
    verts = _polytope_vertices(rows, n)
    if _affine_rank(verts) < n:
        return Fraction(0)
    total = Fraction(0)
    for simplex in _triangulate_face(verts, rows, frozenset()):
        base = simplex[-1]
        mat = [vsub(p, base) for p in simplex[:-1]]
        total += _det_abs(mat)
    return total / factorial(n)


class CoboundedRegion:
    """Closed convex P in sigma^v with bounded complement (H- and V-rep)."""

    __slots__ = ("cone", "halfspaces", "vertices", "_hash")

    def __init__(self, cone: Cone, halfspaces) -> None:
        canon: dict[tuple, Fraction] = {}
        for hs in halfspaces:
            if not isinstance(hs, Halfspace):
                hs = Halfspace.make(*hs)
            prev = canon.get(hs.normal)
            if prev is None or hs.bound > prev:
                canon[hs.normal] = hs.bound
        if not canon:
            raise NotCobounded("a region distinct from the dual cone needs a halfspace")
        for normal in canon:
            if cone.membership_n(normal) is not Membership.INTERIOR:
                raise NotCobounded(
                    f"normal {normal} is not interior to the cone; complement unbounded"
                )
        pruned = [Halfspace(normal=u, bound=c) for u, c in sorted(canon.items())]
        # Exact redundancy removal: a halfspace survives iff the region cut
        # out by the others fails it at some vertex.
        i = 0
        while i < len(pruned):
            others = pruned[:i] + pruned[i + 1 :]
            if others:
                verts = _region_vertices(cone, others)
                if min(dot(v, pruned[i].normal) for v in verts) >= pruned[i].bound:
                    del pruned[i]
                    continue
            i += 1
        object.__setattr__(self, "cone", cone)
        object.__setattr__(self, "halfspaces", tuple(pruned))
        object.__setattr__(self, "vertices", tuple(_region_vertices(cone, pruned)))
        object.__setattr__(self, "_hash", hash((cone, self.halfspaces)))

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("CoboundedRegion is immutable")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CoboundedRegion)
            and self.cone == other.cone
            and self.halfspaces == other.halfspaces
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        parts = ", ".join(f"<m,{hs.normal}> >= {hs.bound}" for hs in self.halfspaces)
        return f"CoboundedRegion({parts})"

    # -- queries ---------------------------------------------------------

    def support_value(self, u) -> Fraction:
        """h_P(u) = inf over P of <., u>, exact for u in sigma."""
        if self.cone.membership_n(u) is Membership.OUTSIDE or all(x == 0 for x in u):
            raise NormalOutsideCone(f"{u} is not a nonzero element of the cone")
        return min(Fraction(dot(v, u)) for v in self.vertices)

    def cogauge(self, m) -> Fraction:
        """tau_P(m) = sup{lambda > 0 : m in lambda P}; 1-homogeneous in m."""
        if all(x == 0 for x in m):
            raise PointOutsideDualCone("cogauge undefined at the origin")
        if not self.cone.contains_m(m):
            raise PointOutsideDualCone(f"{m} lies outside the dual cone")
        return min(Fraction(dot(m, hs.normal)) / hs.bound for hs in self.halfspaces)

    def contains_point(self, m) -> bool:
        return self.cone.contains_m(m) and all(hs.contains(m) for hs in self.halfspaces)

    def issubset(self, other: "CoboundedRegion") -> bool:
        _require_same_cone(self, other)
        return all(self.support_value(hs.normal) >= hs.bound for hs in other.halfspaces)


def _require_same_cone(p: CoboundedRegion, q: CoboundedRegion) -> None:
    if p.cone != q.cone:
        raise ConeMismatch("regions live over different cones")


def _region_rows(cone: Cone, halfspaces) -> list[tuple]:
    rows = [(tuple(r), Fraction(0)) for r in cone.rays]
    rows.extend((hs.normal, hs.bound) for hs in halfspaces)
    return rows


def _region_vertices(cone: Cone, halfspaces) -> list[tuple]:
    return _polytope_vertices(_region_rows(cone, halfspaces), cone.rank)


def vrep(region: CoboundedRegion) -> tuple:
    """Exact vertex set; P = conv(vertices) + sigma^v."""
    return region.vertices


def support_value(region: CoboundedRegion, u) -> Fraction:
    return region.support_value(u)


def cogauge(region: CoboundedRegion, m) -> Fraction:
    return region.cogauge(m)


def meet(p: CoboundedRegion, q: CoboundedRegion) -> CoboundedRegion:
    """P cap Q, irredundant."""
    _require_same_cone(p, q)
    return CoboundedRegion(p.cone, p.halfspaces + q.halfspaces)


def region_from_vertices(cone: Cone, points) -> CoboundedRegion:
    """conv(points) + sigma^v in irredundant H-representation.

    Candidate facet normals are kernels of (n-1)-subsets drawn from pairwise
    point differences and extreme rays of sigma^v; interior-normal candidates
    with their supporting bounds are then pruned by the region constructor.
    """
    pts = [tuple(Fraction(x) for x in p) for p in points]
    if not pts:
        raise NotCobounded("no points supplied")
    for p in pts:
        if not cone.contains_m(p):
            raise PointOutsideDualCone(f"{p} lies outside the dual cone")
    n = cone.rank
    directions: list[tuple] = [tuple(r) for r in cone.dual_rays]
    for a, b in itertools.combinations(pts, 2):
        d = vsub(a, b)
        if any(x != 0 for x in d):
            directions.append(d)

    candidates: list[Halfspace] = []

    def consider(u) -> None:
        if all(x == 0 for x in u):
            return
        if cone.membership_n(u) is not Membership.INTERIOR:
            return
        c = min(dot(p, u) for p in pts)
        if c > 0:
            candidates.append(Halfspace.make(u, c))

    if n == 1:
        for r in cone.rays:
            consider(r)
    else:
        from .linalg import kernel_vector

        seen: set[tuple] = set()
        for subset in itertools.combinations(range(len(directions)), n - 1):
            sub = [directions[i] for i in subset]
            v = kernel_vector(sub, n)
            if v is None or v in seen:
                continue
            seen.add(v)
            consider(v)
            consider(tuple(-x for x in v))
    if not candidates:
        raise NotCobounded("points do not define a cobounded region")
    return CoboundedRegion(cone, candidates)


def hull_join(p: CoboundedRegion, q: CoboundedRegion) -> CoboundedRegion:
    """Closed convex hull of P cup Q; support value is min(h_P, h_Q)."""
    _require_same_cone(p, q)
    return region_from_vertices(p.cone, list(p.vertices) + list(q.vertices))


def covolume(region: CoboundedRegion) -> Fraction:
    """Lattice-normalized Euclidean volume of sigma^v minus P, exact.

    Truncates both sigma^v and P by a level set of a fixed interior functional
    strictly beyond every vertex; the difference of the two polytope volumes
    is the covolume.
    """
    cone = region.cone
    u0 = cone.interior_n_vector
    t = max(Fraction(dot(v, u0)) for v in region.vertices) + 1
    cut = (tuple(-x for x in u0), -t)
    cone_rows = [(tuple(r), Fraction(0)) for r in cone.rays]
    vol_cone = polytope_volume(cone_rows + [cut], cone.rank)
    vol_region = polytope_volume(_region_rows(cone, region.halfspaces) + [cut], cone.rank)
    return vol_cone - vol_region


def scale_region(region: CoboundedRegion, c) -> CoboundedRegion:
    """c * P: all bounds multiplied by c > 0."""
    c = Fraction(c)
    if c <= 0:
        raise NonpositiveScale(f"scale must be positive, got {c}")
    return CoboundedRegion(
        region.cone,
        [Halfspace(normal=hs.normal, bound=hs.bound * c) for hs in region.halfspaces],
    )


def lattice_points_outside(region: CoboundedRegion, level: Fraction) -> list[tuple]:
    """All m in sigma^v cap M with tau_P(m) < level (a finite set).

    The complement of level*P in sigma^v is bounded; its integer bounding box
    is derived from the ray sections of each scaled facet.
    """
    cone = region.cone
    level = Fraction(level)
    n = cone.rank
    lo = [Fraction(0)] * n
    hi = [Fraction(0)] * n
    for hs in region.halfspaces:
        c = hs.bound * level
        for w in cone.dual_rays:
            denom = Fraction(dot(w, hs.normal))
            point = tuple(c * x / denom for x in w)
            for i in range(n):
                lo[i] = min(lo[i], point[i])
                hi[i] = max(hi[i], point[i])
    # Precompute integer comparisons: tau(m) < level iff some facet has
    # <m, u> * level.denom * bound.denom < level.num * bound.num.
    facets = []
    for hs in region.halfspaces:
        c = hs.bound * level
        facets.append((hs.normal, c.numerator, c.denominator))
    points: list[tuple] = []
    ranges = [range(floor(lo[i]), ceil(hi[i]) + 1) for i in range(n)]
    rays = cone.rays
    for m in itertools.product(*ranges):
        ok = True
        for r in rays:
            if dot(m, r) < 0:
                ok = False
                break
        if not ok:
            continue
        for u, cnum, cden in facets:
            if dot(m, u) * cden < cnum:
                points.append(m)
                break
    return points
