"""Log discrepancies, log canonical thresholds and normalized volumes.

A Q-Gorenstein toric singularity carries the rational vector k_sigma with
<ray, k_sigma> = 1 for every ray of sigma; the log discrepancy of the toric
valuation with weight u is then <u, k_sigma>.  The lct of a saturated
filtration is the minimum over the closed cone section of the
linear-fractional objective <u, k_sigma> / h_P(u), attained at a ray of the
normal fan of P restricted to sigma.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cones import Cone, Membership
from .errors import ConeMismatch, ModeMismatch, NotInteriorValuation, NotKlt, NotQGorenstein
from .fans import candidate_rays, extremize_ratio
from .filtrations import SaturatedFiltration, canonical_filtration, scale_filtration
from .ideals import MonomialIdeal, newton_polyhedron
from .linalg import dot, matrix_rank, solve_linear_system
from .metrics import dinf
from .regions import CoboundedRegion, Halfspace, covolume


@dataclass(frozen=True)
class ToricSingularity:
    cone: Cone
    gorenstein_vector: tuple

    @classmethod
    def from_cone(cls, cone: Cone) -> "ToricSingularity":
        k = gorenstein_vector(cone)
        return cls(cone=cone, gorenstein_vector=k)


def gorenstein_vector(cone: Cone) -> tuple:
    """Exact solution k of <ray, k> = 1 for every ray of sigma.

    Raises NotQGorenstein when the system is unsolvable.  A solution pairs to
    1 > 0 with every ray, hence is automatically interior to sigma^v; the
    NotKlt check is defensive.
    """
    rays = [tuple(r) for r in cone.rays]
    rhs = [Fraction(1)] * len(rays)
    sol = solve_linear_system(rays, rhs)
    if sol is None or any(dot(r, sol) != 1 for r in rays):
        raise NotQGorenstein("no rational vector pairs to 1 with every ray")
    if cone.membership_m(sol) is not Membership.INTERIOR:  # pragma: no cover - defensive
        raise NotKlt("Gorenstein vector is not interior to the dual cone")
    return tuple(Fraction(x) for x in sol)


def log_discrepancy(s: ToricSingularity, u) -> Fraction:
    """A(v_u) = <u, k_sigma> for interior weights u."""
    if s.cone.membership_n(u) is not Membership.INTERIOR:
        raise NotInteriorValuation(f"{u} is not interior to the cone")
    return Fraction(dot(u, s.gorenstein_vector))


@dataclass(frozen=True)
class LctResult:
    value: Fraction
    witness: tuple
    on_boundary: bool


def lct(s: ToricSingularity, f: SaturatedFiltration) -> LctResult:
    """min over u in sigma of <u, k_sigma> / h_P(u), with witness ray.

    The objective is linear-fractional on each cell of the normal fan of P
    inside sigma, so the minimum is attained at a cell ray; boundary rays of
    sigma have h_P = 0 and are skipped (the objective diverges there).
    """
    if s.cone != f.cone:
        raise ConeMismatch("filtration lives over a different cone")
    cone = s.cone
    vertices = [tuple(v) for v in f.region.vertices]
    rays = candidate_rays(
        cone_rows=[tuple(r) for r in cone.dual_rays],
        cone_rays=[tuple(r) for r in cone.rays],
        piece_groups=[vertices],
        n=cone.rank,
    )
    k = s.gorenstein_vector
    value, witness = extremize_ratio(
        rays,
        numerator=lambda u: Fraction(dot(u, k)),
        denominator=lambda u: min(Fraction(dot(v, u)) for v in vertices),
        mode="min",
    )
    on_boundary = cone.membership_n(witness) is Membership.BOUNDARY
    return LctResult(value=value, witness=witness, on_boundary=on_boundary)


def toric_volume(s: ToricSingularity, u) -> Fraction:
    """vol(v_u) = n! * covol(H_u(1) cap sigma^v) for interior u."""
    if s.cone.membership_n(u) is not Membership.INTERIOR:
        raise NotInteriorValuation(f"{u} is not interior to the cone")
    from math import factorial

    region = CoboundedRegion(s.cone, [Halfspace.make(u, 1)])
    return factorial(s.cone.rank) * covolume(region)


def normalized_volume(s: ToricSingularity, u) -> Fraction:
    """A(v_u)^n * vol(v_u); invariant under scaling of u."""
    n = s.cone.rank
    return log_discrepancy(s, u) ** n * toric_volume(s, u)


@dataclass(frozen=True)
class NvolSearchResult:
    weight: tuple
    value: Fraction
    neighborhood: tuple  # (min, max) of normalized volume over the last grid


def nvol_search(s: ToricSingularity, grid: int = 8, refinements: int = 3) -> NvolSearchResult:
    """Heuristic grid + local refinement minimizer of the normalized volume.

    Returns the best sampled weight and the value spread over the final
    neighborhood; no optimality certificate is claimed.
    """
    cone = s.cone
    rays = [tuple(Fraction(x) for x in r) for r in cone.rays]

    def weight(coeffs) -> tuple:
        return tuple(sum(c * r[i] for c, r in zip(coeffs, rays)) for i in range(cone.rank))

    k = len(rays)
    best_coeffs = None
    best_value = None

    def simplex_points(center, radius, steps):
        for combo in _compositions(steps, k):
            coeffs = tuple(
                center[i] + radius * (Fraction(combo[i], steps) - Fraction(1, k))
                for i in range(k)
            )
            if all(c > 0 for c in coeffs):
                yield coeffs

    center = tuple(Fraction(1, k) for _ in range(k))
    radius = Fraction(1)
    neighborhood_values = []
    for _ in range(refinements + 1):
        neighborhood_values = []
        for coeffs in simplex_points(center, radius, grid):
            u = weight(coeffs)
            value = normalized_volume(s, u)
            neighborhood_values.append(value)
            if best_value is None or value < best_value:
                best_value = value
                best_coeffs = coeffs
        center = best_coeffs
        radius = radius / grid * 2
    u_best = weight(best_coeffs)
    return NvolSearchResult(
        weight=u_best,
        value=best_value,
        neighborhood=(min(neighborhood_values), max(neighborhood_values)),
    )


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in _compositions(total - head, parts - 1):
            yield (head,) + tail


@dataclass(frozen=True)
class SemicontinuityReport:
    mode: str
    term_values: tuple
    limit_value: Fraction
    final_deficit: Fraction
    passed: bool


def lct_semicontinuity_harness(
    s: ToricSingularity,
    sequence,
    limit,
    mode: str,
    tol: Fraction = Fraction(1, 100),
) -> SemicontinuityReport:
    """Finite-prefix check of lct semicontinuity along a convergent sequence.

    weak-lower mode: lct(limit) <= liminf lct_k, checked as a nonincreasing
    deficit max(0, lct(limit) - min tail) ending below tol.  plus-upper mode:
    the mirrored check for lct(limit) >= limsup lct_k.
    """
    if mode not in ("weak-lower", "plus-upper"):
        raise ModeMismatch(f"unknown mode {mode!r}")
    terms = [lct(s, saturated).value for saturated in sequence]
    limit_value = lct(s, limit).value
    if mode == "weak-lower":
        deficits = [max(Fraction(0), limit_value - min(terms[i:])) for i in range(len(terms))]
    else:
        deficits = [max(Fraction(0), max(terms[i:]) - limit_value) for i in range(len(terms))]
    monotone = all(deficits[i + 1] <= deficits[i] for i in range(len(deficits) - 1))
    passed = monotone and deficits[-1] <= tol
    return SemicontinuityReport(
        mode=mode,
        term_values=tuple(terms),
        limit_value=limit_value,
        final_deficit=deficits[-1],
        passed=passed,
    )


def cogauge_lower_ratio(f: SaturatedFiltration) -> Fraction:
    """c = inf over monomials of tau_P(m) / tau_P0(m), exact."""
    cone = f.cone
    p0 = canonical_filtration(cone).region
    from .metrics import _cogauge_pieces, _min_form

    pieces_p = _cogauge_pieces(f.region)
    pieces_0 = _cogauge_pieces(p0)
    rays = candidate_rays(
        cone_rows=[tuple(r) for r in cone.rays],
        cone_rays=[tuple(r) for r in cone.dual_rays],
        piece_groups=[pieces_p, pieces_0],
        n=cone.rank,
    )
    value, _ = extremize_ratio(
        rays, numerator=_min_form(pieces_p), denominator=_min_form(pieces_0), mode="min"
    )
    return value


@dataclass(frozen=True)
class LipschitzReport:
    epsilon: Fraction
    delta: Fraction
    distance: Fraction
    lct_shift: Fraction
    applicable: bool
    passed: bool


def lct_lipschitz_check(
    s: ToricSingularity,
    f: SaturatedFiltration,
    g: SaturatedFiltration,
    epsilon,
) -> LipschitzReport:
    """delta = min(c/2, c*eps/a); if d_infty(f, g) < delta then |lct shift| <= eps."""
    epsilon = Fraction(epsilon)
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    c = cogauge_lower_ratio(f)
    a = lct(s, f).value
    delta = min(c / 2, c * epsilon / a)
    distance = dinf(f, g).value
    shift = abs(lct(s, g).value - a)
    applicable = distance < delta
    passed = (not applicable) or shift <= epsilon
    return LipschitzReport(
        epsilon=epsilon,
        delta=delta,
        distance=distance,
        lct_shift=shift,
        applicable=applicable,
        passed=passed,
    )
