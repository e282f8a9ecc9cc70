"""Full-dimensional strongly convex rational cones and their duals.

A cone sigma lives in the lattice N; its dual sigma^v lives in M = N^*.
Both are stored by their primitive extreme rays, sorted lexicographically,
so cone equality is syntactic.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from math import gcd

from .errors import DimensionMismatch, NotFullDimensional, NotStronglyConvex
from .linalg import dot, kernel_vector, matrix_rank, primitivize


class Membership(enum.Enum):
    OUTSIDE = "outside"
    BOUNDARY = "boundary"
    INTERIOR = "interior"


def extreme_rays_of_halfspace_cone(rows: list[tuple], n: int) -> list[tuple]:
    """Primitive extreme rays of {x in R^n : <x, row> >= 0 for all rows}.

    Assumes the cone is pointed (contains no line); non-extreme directions are
    filtered out by requiring n-1 independent active constraints.  Desk-scale
    enumeration over (n-1)-subsets of rows.
    """
    if n == 1:
        found = []
        for cand in [(1,), (-1,)]:
            if all(dot(cand, r) >= 0 for r in rows):
                found.append(cand)
        if len(found) == 2:
            raise NotStronglyConvex("halfspace cone contains a line")
        return found

    rays: set[tuple] = set()
    for subset in itertools.combinations(range(len(rows)), n - 1):
        sub = [rows[i] for i in subset]
        v = kernel_vector(sub, n)
        if v is None:
            continue
        for cand in (v, tuple(-x for x in v)):
            if all(dot(cand, r) >= 0 for r in rows):
                active = [r for r in rows if dot(cand, r) == 0]
                if matrix_rank(active) == n - 1:
                    rays.add(primitivize(cand))
    return sorted(rays)


def dual_cone(rays: list[tuple], rank: int | None = None) -> list[tuple]:
    """Primitive irredundant generators of {m : <m, u> >= 0 for all u in rays}.

    Raises if the input does not generate a full-dimensional strongly convex
    cone.
    """
    rays = [primitivize(tuple(int(x) for x in r)) for r in rays]
    rays = [r for r in rays if any(x != 0 for x in r)]
    if not rays:
        raise NotFullDimensional("no rays supplied")
    n = rank if rank is not None else len(rays[0])
    for r in rays:
        if len(r) != n:
            raise DimensionMismatch("ray of wrong length")
    if matrix_rank(rays) < n:
        raise NotFullDimensional("rays do not span the ambient space")
    dual = extreme_rays_of_halfspace_cone(rays, n)
    if not dual or matrix_rank(dual) < n:
        raise NotStronglyConvex("cone contains a line, dual is not full-dimensional")
    return dual


@dataclass(frozen=True)
class Cone:
    """Strongly convex full-dimensional rational cone with cached dual."""

    rank: int
    rays: tuple
    dual_rays: tuple

    @classmethod
    def from_rays(cls, rays) -> "Cone":
        rays = [tuple(int(x) for x in r) for r in rays]
        if not rays:
            raise NotFullDimensional("no rays supplied")
        n = len(rays[0])
        dual = dual_cone(rays, n)
        # Recomputing the double dual prunes redundant input rays and fixes
        # the canonical (sorted, primitive) representation.
        primal = extreme_rays_of_halfspace_cone(dual, n)
        if matrix_rank(primal) < n:
            raise NotFullDimensional("rays do not span the ambient space")
        return cls(rank=n, rays=tuple(primal), dual_rays=tuple(dual))

    def _classify(self, v, test_rows) -> Membership:
        if len(v) != self.rank:
            raise DimensionMismatch(f"expected a vector of length {self.rank}")
        pairings = [dot(v, r) for r in test_rows]
        if any(p < 0 for p in pairings):
            return Membership.OUTSIDE
        if all(p > 0 for p in pairings):
            return Membership.INTERIOR
        return Membership.BOUNDARY

    def membership_n(self, v) -> Membership:
        """Classify an N-side vector against sigma."""
        return self._classify(v, self.dual_rays)

    def membership_m(self, m) -> Membership:
        """Classify an M-side vector against sigma^v."""
        return self._classify(m, self.rays)

    def contains_m(self, m) -> bool:
        return self.membership_m(m) is not Membership.OUTSIDE

    def contains_n(self, v) -> bool:
        return self.membership_n(v) is not Membership.OUTSIDE

    def chart(self, m) -> tuple:
        """Pairings of an M-point with the rays of sigma.

        Componentwise comparison of charts decides semigroup divisibility.
        """
        return tuple(dot(m, r) for r in self.rays)

    @property
    def interior_n_vector(self) -> tuple:
        """Sum of the rays of sigma: a canonical interior point of sigma."""
        return tuple(sum(r[i] for r in self.rays) for i in range(self.rank))


def membership(cone: Cone, v) -> Membership:
    """Classification of an N-vector against sigma (outside/boundary/interior)."""
    return cone.membership_n(v)


def hilbert_generators(cone: Cone) -> tuple:
    """Minimal generating set of the semigroup sigma^v cap M.

    Every irreducible element lies in the zonotope spanned by the primitive
    extreme rays of sigma^v, so enumerating the integer bounding box of that
    zonotope and greedily filtering reducible elements (by increasing height)
    is exact.
    """
    n = cone.rank
    lo = [0] * n
    hi = [0] * n
    for r in cone.dual_rays:
        for i in range(n):
            if r[i] < 0:
                lo[i] += r[i]
            else:
                hi[i] += r[i]

    def height(m):
        return sum(cone.chart(m))

    candidates = []
    for point in itertools.product(*[range(lo[i], hi[i] + 1) for i in range(n)]):
        if all(x == 0 for x in point):
            continue
        if cone.contains_m(point):
            candidates.append(point)
    candidates.sort(key=lambda m: (height(m), m))

    basis: list[tuple] = []
    for z in candidates:
        reducible = False
        for h in basis:
            diff = tuple(a - b for a, b in zip(z, h))
            if any(x != 0 for x in diff) and cone.contains_m(diff):
                reducible = True
                break
        if not reducible:
            basis.append(z)
    return tuple(sorted(basis))


def smooth_cone(rank: int) -> Cone:
    """The standard orthant cone (smooth point of dimension `rank`)."""
    rays = [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)]
    return Cone.from_rays(rays)


def is_smooth_orthant(cone: Cone) -> bool:
    unit = tuple(tuple(1 if j == i else 0 for j in range(cone.rank)) for i in range(cone.rank))
    return cone.rays == unit


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)
