"""Brute-force oracles and deterministic random fixtures.

Everything here recomputes asymptotic quantities from finite data (lattice
point counts at level m), independently of the exact polyhedral pipeline, so
that every derived golden value in the test suite can be certified before it
is asserted.  These paths favor transparency over speed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, factorial

from .cones import Cone, smooth_cone
from .errors import ValidationError
from .filtrations import AdicFiltration, SaturatedFiltration, TermwiseMeet
from .ideals import MonomialIdeal, colength_of_power, is_m_primary, newton_polyhedron
from .regions import CoboundedRegion, lattice_points_outside, meet, scale_region


# -- rank-1 tabulated filtrations -------------------------------------------


@dataclass(frozen=True)
class Tabulated1D:
    """Rank-1 filtration a_lambda = m^{g(lambda)} from a piecewise recipe.

    segments: ((end, kind, value), ...) where kind is "ceil" (g = ceil(value *
    lambda)) or "const" (g = value), applying for lambda <= end; the tail
    applies beyond the last end and must be a "ceil" piece with positive
    slope.  g must be nondecreasing; spot checks are performed at segment
    breakpoints.
    """

    segments: tuple
    tail_slope: Fraction

    @classmethod
    def from_pieces(cls, segments, tail_slope) -> "Tabulated1D":
        tail_slope = Fraction(tail_slope)
        if tail_slope <= 0:
            raise ValidationError("tail slope must be positive")
        canon = []
        prev_end = Fraction(0)
        for end, kind, value in segments:
            end = Fraction(end)
            if end <= prev_end:
                raise ValidationError("segment ends must increase")
            if kind not in ("ceil", "const"):
                raise ValidationError(f"unknown segment kind {kind!r}")
            canon.append((end, kind, Fraction(value)))
            prev_end = end
        fixture = cls(segments=tuple(canon), tail_slope=tail_slope)
        fixture._check_monotone()
        return fixture

    def exponent(self, lam) -> int:
        lam = Fraction(lam)
        if lam <= 0:
            return 0
        for end, kind, value in self.segments:
            if lam <= end:
                return ceil(value * lam) if kind == "ceil" else int(value)
        return ceil(self.tail_slope * lam)

    def _check_monotone(self) -> None:
        probes = [Fraction(0)]
        for end, _, _ in self.segments:
            probes.extend([end - Fraction(1, 7), end, end + Fraction(1, 7)])
        last = self.segments[-1][0] if self.segments else Fraction(1)
        probes.extend([last + k for k in range(1, 4)])
        values = [self.exponent(p) for p in probes if p > 0]
        if any(b < a for a, b in zip(values, values[1:])):
            raise ValidationError("exponent function must be nondecreasing")

    @property
    def cone(self) -> Cone:
        return smooth_cone(1)

    def multiplicity(self) -> Fraction:
        """lim g(m)/m = the tail slope (rank 1)."""
        return self.tail_slope

    def evaluate_weight(self, u) -> Fraction:
        """v_u = tail slope * u for the single interior weight direction."""
        return self.tail_slope * Fraction(u[0])

    def ord_value(self, m) -> Fraction:
        """sup{lambda : g(lambda) <= m} for a monomial exponent (m,)."""
        k = int(m[0]) if isinstance(m, tuple) else int(m)
        # Search the breakpoints, then invert the active piece exactly.
        best = Fraction(0)
        for end, kind, value in self.segments:
            if kind == "ceil":
                cap = min(end, Fraction(k) / value)
            else:
                cap = end if value <= k else best
            if self.exponent(cap) <= k:
                best = max(best, cap)
        tail_cap = Fraction(k) / self.tail_slope
        if self.exponent(tail_cap) <= k:
            best = max(best, tail_cap)
        return best


def jumping_decreasing_family(k: int) -> Tabulated1D:
    """The rank-1 fixture a_lambda = m^{ceil(2 lambda)} up to k, then a
    plateau at 2k until 2k, then m^{ceil(lambda)}."""
    if k < 1:
        raise ValidationError("k must be >= 1")
    return Tabulated1D.from_pieces(
        segments=[(k, "ceil", 2), (2 * k, "const", 2 * k)],
        tail_slope=1,
    )


def jumping_counterexample(ks=(1, 2, 3)) -> tuple[list[Fraction], Fraction]:
    """Per-k multiplicities (all 1) and the limit multiplicity (2).

    The pointwise intersection of the decreasing family has exponent function
    sup_k g_k(lambda) = ceil(2 lambda): for any lambda, every member with
    k >= lambda already attains it.  The limit is therefore the speed-2 adic
    filtration of the maximal ideal, with multiplicity 2.
    """
    members = [jumping_decreasing_family(k) for k in ks]
    per_term = [member.multiplicity() for member in members]
    limit = Tabulated1D.from_pieces(segments=[], tail_slope=2)
    # Exactness of the pointwise sup on a window: member k agrees with the
    # limit exponent for lambda <= k.
    for member, k in zip(members, ks):
        for num in range(1, 8 * k + 1):
            lam = Fraction(num, 8)
            if lam <= k:
                sup_val = max(mm.exponent(lam) for mm in members)
                if sup_val != limit.exponent(lam):
                    raise AssertionError("pointwise intersection mismatch")
    return per_term, limit.multiplicity()


# -- brute-force multiplicity ------------------------------------------------


def _level_colength(f, m: int) -> int:
    """ell(R / a_m) by exact lattice counting."""
    if isinstance(f, SaturatedFiltration):
        return len(lattice_points_outside(f.region, Fraction(m)))
    if isinstance(f, AdicFiltration):
        k = ceil(f.speed * m)
        return colength_of_power(f.ideal, k)
    if isinstance(f, TermwiseMeet):
        left = f.left
        right = f.right
        if isinstance(left, SaturatedFiltration) and isinstance(right, SaturatedFiltration):
            outside_left = set(lattice_points_outside(left.region, Fraction(m)))
            outside_right = set(lattice_points_outside(right.region, Fraction(m)))
            return len(outside_left | outside_right)
        raise ValidationError("termwise meets are counted for saturated parts only")
    if isinstance(f, Tabulated1D):
        return f.exponent(m)
    raise TypeError(f"not a filtration: {f!r}")


def brute_multiplicity(f, m_list) -> list[Fraction]:
    """Per-term values n! * ell(R/a_m) / m^n certifying e(f)."""
    n = f.cone.rank
    return [Fraction(factorial(n) * _level_colength(f, m), m**n) for m in m_list]


def brute_multiplicity_extrapolated(f, m: int) -> Fraction:
    """Richardson-extrapolated estimate 2*E(2m) - E(m), killing the 1/m term."""
    e_m, e_2m = brute_multiplicity(f, [m, 2 * m])
    return 2 * e_2m - e_m


# -- deterministic random fixtures -------------------------------------------


@dataclass(frozen=True)
class RandomFixtureSpec:
    seed: int
    rank: int = 2
    min_generators: int = 2
    max_generators: int = 5
    coord_bound: int = 8

    def rng(self) -> random.Random:
        return random.Random(self.seed)


def random_ideal(spec: RandomFixtureSpec, cone: Cone | None = None) -> MonomialIdeal:
    """Deterministic m-primary monomial ideal fixture.

    One generator is planted on each extreme ray of sigma^v (forcing
    m-primarity), then random interior lattice points are mixed in.
    """
    cone = cone if cone is not None else smooth_cone(spec.rank)
    rng = spec.rng()
    gens = []
    for w in cone.dual_rays:
        t = rng.randint(1, spec.coord_bound)
        gens.append(tuple(t * x for x in w))
    extra = rng.randint(spec.min_generators, spec.max_generators)
    attempts = 0
    while extra > 0 and attempts < 200:
        attempts += 1
        point = tuple(rng.randint(0, spec.coord_bound) for _ in range(cone.rank))
        if all(x == 0 for x in point) or not cone.contains_m(point):
            continue
        gens.append(point)
        extra -= 1
    ideal = MonomialIdeal.from_generators(cone, gens)
    assert is_m_primary(ideal)
    return ideal


def random_region(spec: RandomFixtureSpec, cone: Cone | None = None) -> CoboundedRegion:
    """Deterministic cobounded region fixture (a Newton polyhedron, possibly
    intersected with a scaled second one)."""
    cone = cone if cone is not None else smooth_cone(spec.rank)
    rng = spec.rng()
    first = newton_polyhedron(random_ideal(RandomFixtureSpec(seed=rng.randrange(2**30),
                                                             rank=spec.rank,
                                                             min_generators=spec.min_generators,
                                                             max_generators=spec.max_generators,
                                                             coord_bound=spec.coord_bound),
                                           cone))
    if rng.random() < 0.5:
        second = newton_polyhedron(random_ideal(RandomFixtureSpec(seed=rng.randrange(2**30),
                                                                  rank=spec.rank,
                                                                  min_generators=spec.min_generators,
                                                                  max_generators=spec.max_generators,
                                                                  coord_bound=spec.coord_bound),
                                                cone))
        scale = Fraction(rng.randint(1, 3), rng.randint(1, 3))
        return meet(first, scale_region(second, scale))
    return first
