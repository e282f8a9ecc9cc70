"""The d_1 (Darvas-type) and d_infty (supnorm) metrics, with witnesses.

d_1(f, g) = 2 e(f meet g) - e(f) - e(g); on saturated filtrations this equals
the lattice-normalized volume of the symmetric difference of the regions
(times n!), which makes it an exact rational.

d_infty is computed on monomials: sup over m of |tau_P(m) - tau_Q(m)| divided
by the canonical cogauge tau_{P0}(m).  Whether this monomial sup agrees with
the sup over all ring elements is not settled for general norms; the value
reported here is the metric on the monomial subspace.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, inf

from .cones import Cone, smooth_cone
from .errors import ConeMismatch, NoCommonBound, NotMPrimary
from .fans import candidate_rays, extremize_ratio
from .filtrations import (
    AdicFiltration,
    SaturatedFiltration,
    canonical_filtration,
    evaluate,
    maximal_ideal,
    meet_filtrations,
    multiplicity,
    ord_value,
    saturate,
    scale_filtration,
    shadow_region,
)
from .ideals import MonomialIdeal, multiplicity_ideal, newton_polyhedron
from .linalg import dot
from .regions import CoboundedRegion, Halfspace, covolume, meet, scale_region


@dataclass(frozen=True)
class MetricReport:
    """Exact metric value plus optional extremal witness data."""

    value: Fraction
    witness: tuple | None = None


def d1(f, g) -> Fraction:
    """2 e(f cap g) - e(f) - e(g), exact."""
    if f.cone != g.cone:
        raise ConeMismatch("filtrations live over different cones")
    e_meet = multiplicity(meet_filtrations(f, g))
    return 2 * e_meet - multiplicity(f) - multiplicity(g)


def symmetric_difference_volume(p: CoboundedRegion, q: CoboundedRegion) -> Fraction:
    """n! * vol(P Delta Q): the isometric image of d_1 on regions."""
    from math import factorial

    n = p.cone.rank
    cm = covolume(meet(p, q))
    return factorial(n) * (2 * cm - covolume(p) - covolume(q))


def weighted_blowup_region(cone: Cone, weights) -> CoboundedRegion:
    """Region {<m, weights> >= 1} of a single toric valuation weight."""
    return CoboundedRegion(cone, [Halfspace.make(weights, 1)])


def d1_family_weighted(ell: int) -> Fraction:
    """d_1 between the weight-(1, 1/ell) and (1/ell, 1) valuation regions.

    Closed form (2 ell^2 - 2 ell)/(ell + 1); computed here from the regions.
    """
    if ell < 1:
        raise ValueError("ell must be a positive integer")
    cone = smooth_cone(2)
    p = weighted_blowup_region(cone, (1, Fraction(1, ell)))
    q = weighted_blowup_region(cone, (Fraction(1, ell), 1))
    return d1(SaturatedFiltration(p), SaturatedFiltration(q))


def d1_coeff(a: MonomialIdeal, c, b: MonomialIdeal, d) -> Fraction:
    """Metric on ideals with exponents: 2 e(a^c meet b^d) - c^n e(a) - d^n e(b)."""
    c = Fraction(c)
    d = Fraction(d)
    if c <= 0 or d <= 0:
        raise NotMPrimary("exponents must be positive")
    return d1(AdicFiltration(a, c), AdicFiltration(b, d))


def _cogauge_pieces(region: CoboundedRegion) -> list[tuple]:
    """Linear forms (as rational vectors) whose min is the cogauge."""
    return [tuple(Fraction(x) / hs.bound for x in hs.normal) for hs in region.halfspaces]


def _min_form(pieces: list[tuple]):
    def value(m) -> Fraction:
        return min(Fraction(dot(m, piece)) for piece in pieces)

    return value


def dinf(f: SaturatedFiltration, g: SaturatedFiltration) -> MetricReport:
    """Supnorm distance with an exact lattice witness.

    The objective |tau_P - tau_Q| / tau_P0 is linear-fractional on each cell
    of the common refinement of the three cogauge fans; the sup is attained
    at a cell ray, all of which appear among the candidate directions.
    """
    if f.cone != g.cone:
        raise ConeMismatch("filtrations live over different cones")
    cone = f.cone
    p, q = f.region, g.region
    if p == q:
        return MetricReport(Fraction(0), None)
    p0 = canonical_filtration(cone).region
    pieces_p = _cogauge_pieces(p)
    pieces_q = _cogauge_pieces(q)
    pieces_0 = _cogauge_pieces(p0)
    rays = candidate_rays(
        cone_rows=[tuple(r) for r in cone.rays],
        cone_rays=[tuple(r) for r in cone.dual_rays],
        piece_groups=[pieces_p, pieces_q, pieces_0],
        n=cone.rank,
    )
    tau_p = _min_form(pieces_p)
    tau_q = _min_form(pieces_q)
    tau_0 = _min_form(pieces_0)
    value, witness = extremize_ratio(
        rays,
        numerator=lambda m: abs(tau_p(m) - tau_q(m)),
        denominator=tau_0,
        mode="max",
    )
    return MetricReport(value, witness)


def minimal_common_bound(f, g) -> int:
    """Least integer C > 1 with m^{C*} contained in both filtrations."""
    cone = f.cone
    p0 = canonical_filtration(cone).region
    c = Fraction(1)
    for region in (shadow_region(f), shadow_region(g)):
        for hs in region.halfspaces:
            c = max(c, hs.bound / p0.support_value(hs.normal))
    return max(2, ceil(c))


def d1_dinf_bound(f: SaturatedFiltration, g: SaturatedFiltration):
    """Check d_1 <= M * d_infty with M = 2 n C^{n+1} e(m).

    Returns (d1 value, M * d_infty, M, C).
    """
    if f.cone != g.cone:
        raise ConeMismatch("filtrations live over different cones")
    cone = f.cone
    c = minimal_common_bound(f, g)
    if c is None:  # pragma: no cover - defensive, cobounded shadows always bound
        raise NoCommonBound("no common adic bound exists")
    n = cone.rank
    e_max = multiplicity_ideal(maximal_ideal(cone))
    m_const = 2 * n * Fraction(c) ** (n + 1) * e_max
    value_d1 = d1(f, g)
    value_dinf = dinf(f, g).value
    bound = m_const * value_dinf
    if value_d1 > bound:  # pragma: no cover - would falsify the comparison lemma
        raise AssertionError(f"comparison bound violated: {value_d1} > {bound}")
    return value_d1, bound, m_const, c


DEFAULT_TOLERANCE = Fraction(1, 10**6)


def converges_weakly(sequence, limit, probes, tol: Fraction = DEFAULT_TOLERANCE) -> bool:
    """Necessary finite check for weak convergence on the given prefix.

    True iff the final prefix term matches the limit's order function within
    tol on every probe monomial.  (Membership in the weak topology is not
    finitely decidable; this checks the stated necessary condition.)
    """
    tol = Fraction(tol)
    last = sequence[-1]
    for m in probes:
        a = ord_value(last, m)
        b = ord_value(limit, m)
        if a == inf and b == inf:
            continue
        if a == inf or b == inf or abs(a - b) > tol:
            return False
    return True


def converges_plus(sequence, limit, probes, tol: Fraction = DEFAULT_TOLERANCE) -> bool:
    """Same prefix check with toric valuation values at interior weights."""
    tol = Fraction(tol)
    last = sequence[-1]
    for u in probes:
        if abs(evaluate(last, u) - evaluate(limit, u)) > tol:
            return False
    return True
