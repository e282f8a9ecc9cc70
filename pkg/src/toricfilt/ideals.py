"""m-primary monomial ideals: staircases, colength, closure, Rees data.

Exponent vectors live in sigma^v cap M.  Semigroup divisibility (g divides m
iff m - g stays in sigma^v) is decided componentwise on the chart of pairings
with the rays of sigma, which keeps the hot counting loops in plain integers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .cones import Cone, hilbert_generators, is_smooth_orthant
from .errors import ConeMismatch, NotMPrimary, PointOutsideDualCone
from .linalg import dot, matrix_rank
from .regions import CoboundedRegion, covolume, lattice_points_outside, region_from_vertices


@dataclass(frozen=True)
class MonomialIdeal:
    """Minimal monomial generators of an ideal of k[sigma^v cap M]."""

    cone: Cone
    generators: tuple

    @classmethod
    def from_generators(cls, cone: Cone, generators) -> "MonomialIdeal":
        gens = []
        for g in generators:
            g = tuple(int(x) for x in g)
            if all(x == 0 for x in g):
                raise PointOutsideDualCone("the unit monomial generates the whole ring")
            if not cone.contains_m(g):
                raise PointOutsideDualCone(f"exponent {g} lies outside the dual cone")
            gens.append(g)
        if not gens:
            raise PointOutsideDualCone("an ideal needs at least one generator")
        return cls(cone=cone, generators=_minimalize(cone, gens))

    def __repr__(self) -> str:
        return f"MonomialIdeal{self.generators}"


def _minimalize(cone: Cone, gens: list[tuple]) -> tuple:
    """Minimal elements under semigroup divisibility, sorted descending-lex."""
    charts = {g: cone.chart(g) for g in set(gens)}
    ordered = sorted(charts, key=lambda g: (sum(charts[g]), g))
    kept: list[tuple] = []
    kept_charts: list[tuple] = []
    for g in ordered:
        cg = charts[g]
        if any(all(hc[i] <= cg[i] for i in range(len(cg))) for hc in kept_charts):
            continue
        kept.append(g)
        kept_charts.append(cg)
    return tuple(sorted(kept, reverse=True))


def _require_same_cone(a: MonomialIdeal, b: MonomialIdeal) -> None:
    if a.cone != b.cone:
        raise ConeMismatch("ideals live over different cones")


def staircase_contains(ideal: MonomialIdeal, m) -> bool:
    """Is the monomial with exponent m in the ideal?"""
    cm = ideal.cone.chart(m)
    for g in ideal.generators:
        cg = ideal.cone.chart(g)
        if all(cm[i] >= cg[i] for i in range(len(cm))):
            return True
    return False


def is_m_primary(ideal: MonomialIdeal) -> bool:
    """True iff only finitely many monomials lie outside the staircase.

    Equivalent to the Newton polyhedron being cobounded, i.e. every extreme
    ray of sigma^v carries a generator.
    """
    for w in ideal.cone.dual_rays:
        if not any(
            matrix_rank([g, w]) == 1 and any(x != 0 for x in g) for g in ideal.generators
        ):
            return False
    return True


def _check_m_primary(ideal: MonomialIdeal) -> None:
    if not is_m_primary(ideal):
        raise NotMPrimary(f"{ideal} is not m-primary")


def newton_polyhedron(ideal: MonomialIdeal) -> CoboundedRegion:
    """conv(generators) + sigma^v."""
    _check_m_primary(ideal)
    return region_from_vertices(ideal.cone, ideal.generators)


def product(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _require_same_cone(a, b)
    gens = [tuple(x + y for x, y in zip(g, h)) for g in a.generators for h in b.generators]
    return MonomialIdeal(a.cone, _minimalize(a.cone, gens))


def ideal_sum(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _require_same_cone(a, b)
    return MonomialIdeal(a.cone, _minimalize(a.cone, list(a.generators) + list(b.generators)))


def power(a: MonomialIdeal, k: int) -> MonomialIdeal:
    if k < 1:
        raise ValueError("power expects k >= 1")
    result = a
    for _ in range(k - 1):
        result = product(result, a)
    return result


def staircase_complement(ideal: MonomialIdeal, tau_shell: Fraction | None = None) -> list[tuple]:
    """All lattice points of sigma^v outside the staircase (finite set).

    Every lattice point whose Newton cogauge is at least rank+2 is reducible
    into a generator plus a semigroup element, so the complement lives in
    {tau_Newt < rank+2}; a caller that knows a sharper shell (powers of a
    fixed ideal) may pass it.
    """
    _check_m_primary(ideal)
    cone = ideal.cone
    newt = newton_polyhedron(ideal)
    shell = Fraction(cone.rank + 2) if tau_shell is None else Fraction(tau_shell)
    outside: list[tuple] = []
    gen_charts = [cone.chart(g) for g in ideal.generators]
    k = len(cone.rays)
    for m in lattice_points_outside(newt, shell):
        tau = newt.cogauge(m) if any(x != 0 for x in m) else Fraction(0)
        if tau < 1:
            outside.append(m)
            continue
        cm = cone.chart(m)
        in_stair = False
        for cg in gen_charts:
            if all(cm[i] >= cg[i] for i in range(k)):
                in_stair = True
                break
        if not in_stair:
            outside.append(m)
    return outside


def colength(ideal: MonomialIdeal, tau_shell: Fraction | None = None) -> int:
    """length of R/a = number of monomials outside the staircase."""
    return len(staircase_complement(ideal, tau_shell))


def intersect_ideals(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """Minimal generators of the intersection (staircase intersection)."""
    _require_same_cone(a, b)
    _check_m_primary(a)
    _check_m_primary(b)
    cone = a.cone
    if is_smooth_orthant(cone):
        gens = [
            tuple(max(x, y) for x, y in zip(g, h))
            for g in a.generators
            for h in b.generators
        ]
        return MonomialIdeal(cone, _minimalize(cone, gens))

    def contains(m) -> bool:
        return staircase_contains(a, m) and staircase_contains(b, m)

    complement = set(staircase_complement(a)) | set(staircase_complement(b))
    return _upset_minimal_generators(cone, contains, complement)


def _upset_minimal_generators(cone: Cone, contains, complement_points) -> MonomialIdeal:
    """Minimal generators of an up-set with the given finite complement.

    Every minimal element is (complement point) + (Hilbert generator): peeling
    one Hilbert generator off a minimal element must exit the up-set.
    """
    basis = hilbert_generators(cone)
    candidates = set()
    for f in complement_points:
        for h in basis:
            m = tuple(x + y for x, y in zip(f, h))
            if contains(m):
                candidates.add(m)
    return MonomialIdeal(cone, _minimalize(cone, list(candidates)))


def ideal_from_region(region: CoboundedRegion, level: Fraction = Fraction(1)) -> MonomialIdeal:
    """Minimal generators of {m : tau_P(m) >= level}."""
    level = Fraction(level)
    if level <= 0:
        raise ValueError("level must be positive")
    cone = region.cone

    def contains(m) -> bool:
        return any(x != 0 for x in m) and region.cogauge(m) >= level

    complement = lattice_points_outside(region, level)
    return _upset_minimal_generators(cone, contains, complement)


def integral_closure(ideal: MonomialIdeal) -> MonomialIdeal:
    """Monomials whose exponents lie in the Newton polyhedron."""
    return ideal_from_region(newton_polyhedron(ideal), Fraction(1))


def rees_valuations(ideal: MonomialIdeal) -> tuple:
    """Primitive inner normals of the bounded facets of Newt(a) with levels.

    The pairs (u, v_u(a)) reproduce the integral closures of all powers.
    """
    newt = newton_polyhedron(ideal)
    return tuple((hs.normal, hs.bound) for hs in newt.halfspaces)


def multiplicity_ideal(ideal: MonomialIdeal) -> Fraction:
    """e(a) = n! * covolume(Newt(a)) = lim n! colength(a^m)/m^n."""
    newt = newton_polyhedron(ideal)
    return factorial(ideal.cone.rank) * covolume(newt)


def colength_of_power(ideal: MonomialIdeal, m: int) -> int:
    """colength(a^m) with the sharp shell {tau_Newt < m + n + 1}."""
    _check_m_primary(ideal)
    if m < 1:
        raise ValueError("power must be >= 1")
    n = ideal.cone.rank
    pw = power(ideal, m)
    return colength(pw, tau_shell=Fraction(m + n + 1, m))


def pretty_monomial(cone: Cone, exponent) -> str:
    """Render a rank-2 smooth exponent as x^i y^j; fall back to the tuple."""
    if is_smooth_orthant(cone) and cone.rank == 2:
        i, j = exponent
        parts = []
        if i == 1:
            parts.append("x")
        elif i > 1:
            parts.append(f"x^{i}")
        if j == 1:
            parts.append("y")
        elif j > 1:
            parts.append(f"y^{j}")
        return "".join(parts) if parts else "1"
    return str(tuple(exponent))


def pretty_ideal(ideal: MonomialIdeal) -> str:
    return "(" + ", ".join(pretty_monomial(ideal.cone, g) for g in ideal.generators) + ")"
