"""Exact extremization of piecewise linear-fractional objectives on cones.

The objectives appearing here (sup-norm distances, log canonical thresholds,
cogauge ratios) are ratios built from minima of finitely many linear forms.
On every cell of the common refinement of the linearity fans the objective is
linear-fractional, so its extremum over the cone is attained on an extreme
ray of some cell.  Candidate rays are therefore kernels of (n-1)-subsets of
the difference forms together with the cone's own extreme rays; evaluating
the true objective on this superset is exact.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .linalg import dot, kernel_vector, primitivize, to_primitive_int, vsub


def candidate_rays(
    cone_rows: Sequence[tuple],
    cone_rays: Sequence[tuple],
    piece_groups: Iterable[Sequence[tuple]],
    n: int,
) -> list[tuple]:
    """Primitive candidate directions covering all refinement-cell rays.

    cone_rows: linear forms nonnegative on the cone (its H-representation).
    cone_rays: the cone's extreme rays (always candidates).
    piece_groups: for each piecewise-linear function, its list of linear
    forms; switching loci are differences of forms within one group.
    """
    diff_rows: list[tuple] = []
    for group in piece_groups:
        for a, b in itertools.combinations(group, 2):
            d = vsub(a, b)
            if any(x != 0 for x in d):
                diff_rows.append(d)
    rows = [tuple(r) for r in cone_rows] + diff_rows

    found: set[tuple] = {primitivize(tuple(int(x) for x in r)) for r in cone_rays}

    def keep(v) -> None:
        if any(x != 0 for x in v) and all(dot(v, r) >= 0 for r in cone_rows):
            found.add(to_primitive_int(v)[0])

    if n == 1:
        return sorted(found)
    if n == 2:
        for row in rows:
            v = (-row[1], row[0])
            keep(v)
            keep((row[1], -row[0]))
    else:
        for subset in itertools.combinations(range(len(rows)), n - 1):
            v = kernel_vector([rows[i] for i in subset], n)
            if v is None:
                continue
            keep(v)
            keep(tuple(-x for x in v))
    return sorted(found)


def extremize_ratio(
    rays: Sequence[tuple],
    numerator: Callable[[tuple], Fraction],
    denominator: Callable[[tuple], Fraction],
    mode: str,
) -> tuple[Fraction, tuple]:
    """Extremize numerator/denominator over the candidate rays.

    Rays where the denominator vanishes are skipped (the ratio tends to
    +infinity there, which never realizes a finite max of a bounded objective
    nor a min).  Returns (value, witness ray).
    """
    best = None
    witness = None
    for ray in rays:
        den = denominator(ray)
        if den == 0:
            continue
        value = Fraction(numerator(ray)) / den
        if best is None or (mode == "max" and value > best) or (mode == "min" and value < best):
            best = value
            witness = ray
    if best is None:
        raise ValueError("objective undefined on every candidate ray")
    return best, witness
