"""Geodesic segments between saturated filtrations and their DH measure.

For saturated monomial endpoints the geodesic level ideal at time t is the
span of monomials with (1-t) tau_0(m) + t tau_1(m) >= lambda: peeling the
defining sum of intersections apart, a monomial enters the sum exactly when
the pair (mu, nu) = (tau_0(m), tau_1(m)) clears the constraint.  The time-t
cogauge is therefore the convex combination of the endpoint cogauges, so the
time-t region is again polyhedral (its facets mix one facet of each
endpoint), multiplicities along the segment are exact rationals, and the
segment is distance-minimizing on the nose.

The valuation-side harmonic value c_{t,v} = v0 v1 / (t v0 + (1-t) v1) is
recovered at the rays of the common refinement of the endpoint normal fans;
the test suite pins that identity on fixtures.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, factorial

from .errors import ConeMismatch, OutOfRangeT
from .filtrations import (
    SaturatedFiltration,
    canonical_filtration,
    meet_filtrations,
    multiplicity,
)
from .ideals import MonomialIdeal, ideal_from_region
from .metrics import d1
from .regions import CoboundedRegion, Halfspace, covolume, meet, scale_region


@dataclass(frozen=True)
class Geodesic:
    """Endpoints plus the shadow-derived mutual bound constant D."""

    start: SaturatedFiltration
    end: SaturatedFiltration
    d_constant: int

    @classmethod
    def between(cls, start: SaturatedFiltration, end: SaturatedFiltration) -> "Geodesic":
        if start.cone != end.cone:
            raise ConeMismatch("geodesic endpoints live over different cones")
        return cls(start=start, end=end, d_constant=_mutual_bound(start, end))

    @property
    def cone(self):
        return self.start.cone


def _mutual_bound(start: SaturatedFiltration, end: SaturatedFiltration) -> int:
    """Least integer D > 1 with D*P0 inside P1 and D*P1 inside P0."""
    d = Fraction(1)
    for a, b in ((start.region, end.region), (end.region, start.region)):
        for hs in b.halfspaces:
            d = max(d, hs.bound / a.support_value(hs.normal))
    return max(2, ceil(d))


def _check_t(t) -> Fraction:
    t = Fraction(t)
    if not 0 <= t <= 1:
        raise OutOfRangeT(f"geodesic time must lie in [0, 1], got {t}")
    return t


def geodesic_cogauge(g: Geodesic, t, m) -> Fraction:
    """tau_t(m) = (1-t) tau_0(m) + t tau_1(m)."""
    t = _check_t(t)
    return (1 - t) * g.start.region.cogauge(m) + t * g.end.region.cogauge(m)


def geodesic_region(g: Geodesic, t) -> CoboundedRegion:
    """Exact region of the time-t filtration.

    tau_t is the min over facet pairs (i, j) of the linear forms
    (1-t) u_i/c_i + t u_j/c_j, so those pairs give a complete (then pruned)
    H-representation.
    """
    t = _check_t(t)
    if t == 0:
        return g.start.region
    if t == 1:
        return g.end.region
    halfspaces = []
    for hi in g.start.region.halfspaces:
        for hj in g.end.region.halfspaces:
            normal = tuple(
                (1 - t) * Fraction(a) / hi.bound + t * Fraction(b) / hj.bound
                for a, b in zip(hi.normal, hj.normal)
            )
            halfspaces.append(Halfspace.make(normal, 1))
    return CoboundedRegion(g.cone, halfspaces)


def geodesic_filtration(g: Geodesic, t) -> SaturatedFiltration:
    return SaturatedFiltration(geodesic_region(g, t))


def geodesic_ideal_at(g: Geodesic, t, level) -> MonomialIdeal:
    """Minimal generators of {m : tau_t(m) >= level}."""
    t = _check_t(t)
    level = Fraction(level)
    if level <= 0:
        raise ValueError("level must be positive")
    return ideal_from_region(geodesic_region(g, t), level)


def geodesic_multiplicity(g: Geodesic, t, tol=Fraction(1, 10**6)) -> tuple[Fraction, Fraction]:
    """Certified interval for e(a_t); exact here, so the interval has width 0.

    The polyhedral form of the time-t region makes the multiplicity an exact
    rational at every rational t (not only at the endpoints); the interval
    return type is kept for callers that budget a tolerance.
    """
    tol = Fraction(tol)
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    value = multiplicity(geodesic_filtration(g, t))
    return value, value


def geodesic_additivity_report(g: Geodesic, times) -> list[tuple]:
    """Residuals |d1(F_0,F_t') - d1(F_0,F_t) - d1(F_t,F_t')| for t < t' pairs."""
    rows = []
    for t, t_prime in times:
        t = _check_t(t)
        t_prime = _check_t(t_prime)
        if not t < t_prime:
            raise OutOfRangeT("need t < t'")
        f_t = geodesic_filtration(g, t)
        f_tp = geodesic_filtration(g, t_prime)
        residual = abs(
            d1(g.start, f_tp) - d1(g.start, f_t) - d1(f_t, f_tp)
        )
        rows.append((t, t_prime, residual))
    return rows


def lipschitz_constant(g: Geodesic) -> Fraction:
    """L = n^2 2^{n+1} (D+1)^{n-1} D (D-1) e(F_0 cap F_1)."""
    n = g.cone.rank
    d = g.d_constant
    e_meet = multiplicity(meet_filtrations(g.start, g.end))
    return Fraction(n * n) * 2 ** (n + 1) * (d + 1) ** (n - 1) * d * (d - 1) * e_meet


def geodesic_lipschitz_check(g: Geodesic, t1, t2) -> tuple[Fraction, Fraction, bool]:
    """d1(F_t1, F_t2) against L*(t2 - t1); returns (lhs, L, pass)."""
    t1 = _check_t(t1)
    t2 = _check_t(t2)
    lhs = d1(geodesic_filtration(g, t1), geodesic_filtration(g, t2))
    bound = lipschitz_constant(g)
    return lhs, bound, lhs <= bound * abs(t2 - t1)


def dh_union_mass(g: Geodesic, x, y) -> Fraction:
    """H(x, y) = e(a_{x*,0} cap a_{y*,1}) = n! covol(x P0 cap y P1).

    Degree-n homogeneous and nondecreasing in each variable; H(0, y) and
    H(x, 0) degenerate to the single-endpoint multiplicities (e(R) = 0).
    """
    x = Fraction(x)
    y = Fraction(y)
    if x < 0 or y < 0:
        raise ValueError("arguments must be nonnegative")
    n = g.cone.rank
    if x == 0 and y == 0:
        return Fraction(0)
    if x == 0:
        return y**n * multiplicity(g.end)
    if y == 0:
        return x**n * multiplicity(g.start)
    region = meet(scale_region(g.start.region, x), scale_region(g.end.region, y))
    return factorial(n) * covolume(region)


def dh_rectangle_mass(g: Geodesic, a, alpha, b, beta) -> Fraction:
    """Mass of [a, a+alpha] x [b, b+beta] under mu = -d^2 H / dx dy."""
    a = Fraction(a)
    b = Fraction(b)
    alpha = Fraction(alpha)
    beta = Fraction(beta)
    if alpha <= 0 or beta <= 0:
        raise ValueError("rectangle sides must be positive")
    h = lambda u, v: dh_union_mass(g, u, v)
    return h(a, b + beta) + h(a + alpha, b) - h(a, b) - h(a + alpha, b + beta)


@dataclass(frozen=True)
class DHGrid:
    """Table of H values on a square grid of the given step."""

    step: Fraction
    size: int
    values: tuple  # ((x, y, H(x, y)), ...) in row-major order

    @classmethod
    def build(cls, g: Geodesic, step, size: int) -> "DHGrid":
        step = Fraction(step)
        if step <= 0 or size < 1:
            raise ValueError("need positive step and size")
        rows = []
        for i in range(size + 1):
            for j in range(size + 1):
                x = i * step
                y = j * step
                rows.append((x, y, dh_union_mass(g, x, y)))
        return cls(step=step, size=size, values=tuple(rows))
