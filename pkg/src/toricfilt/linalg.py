"""Exact rational linear algebra on tuples of Fractions/ints.

Everything here is small and dense; vectors are plain tuples so that domain
types stay hashable and immutable.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Vector = tuple
IntVector = tuple


def dot(a: Sequence, b: Sequence):
    if len(a) != len(b):
        raise ValueError("dimension mismatch in dot product")
    return sum(x * y for x, y in zip(a, b))


def vadd(a: Sequence, b: Sequence) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


def vsub(a: Sequence, b: Sequence) -> Vector:
    return tuple(x - y for x, y in zip(a, b))


def vscale(c, a: Sequence) -> Vector:
    return tuple(c * x for x in a)


def is_zero(a: Sequence) -> bool:
    return all(x == 0 for x in a)


def as_fractions(a: Sequence) -> Vector:
    return tuple(Fraction(x) for x in a)


def primitivize(v: Sequence[int]) -> IntVector:
    """Divide an integer vector by the gcd of its entries (sign preserved)."""
    g = 0
    for x in v:
        g = gcd(g, abs(int(x)))
    if g == 0:
        return tuple(int(x) for x in v)
    return tuple(int(x) // g for x in v)


def to_primitive_int(v: Sequence) -> tuple[IntVector, Fraction]:
    """Write a nonzero rational vector as s*u with u primitive integer, s > 0.

    Returns (u, s).
    """
    fracs = [Fraction(x) for x in v]
    if all(x == 0 for x in fracs):
        raise ValueError("zero vector has no primitive form")
    denom_lcm = 1
    for x in fracs:
        denom_lcm = denom_lcm * x.denominator // gcd(denom_lcm, x.denominator)
    ints = [int(x * denom_lcm) for x in fracs]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    u = tuple(x // g for x in ints)
    return u, Fraction(g, denom_lcm)


def _echelon(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    """Row-reduce in place; returns the nonzero rows."""
    rows = [list(r) for r in rows]
    if not rows:
        return []
    ncols = len(rows[0])
    pivot_row = 0
    for col in range(ncols):
        piv = None
        for r in range(pivot_row, len(rows)):
            if rows[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        rows[pivot_row], rows[piv] = rows[piv], rows[pivot_row]
        inv = Fraction(1, 1) / rows[pivot_row][col]
        rows[pivot_row] = [x * inv for x in rows[pivot_row]]
        for r in range(len(rows)):
            if r != pivot_row and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[pivot_row])]
        pivot_row += 1
        if pivot_row == len(rows):
            break
    return [r for r in rows if any(x != 0 for x in r)]


def matrix_rank(rows: Iterable[Sequence]) -> int:
    frac_rows = [[Fraction(x) for x in r] for r in rows]
    return len(_echelon(frac_rows))


def det(rows: Sequence[Sequence]) -> Fraction:
    n = len(rows)
    m = [[Fraction(x) for x in r] for r in rows]
    result = Fraction(1)
    for col in range(n):
        piv = None
        for r in range(col, n):
            if m[r][col] != 0:
                piv = r
                break
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            result = -result
        result *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            if m[r][col] != 0:
                factor = m[r][col] * inv
                m[r] = [x - factor * y for x, y in zip(m[r], m[col])]
    return result


def solve_square(rows: Sequence[Sequence], rhs: Sequence) -> Vector | None:
    """Solve A x = b for square A; None if A is singular."""
    n = len(rows)
    m = [[Fraction(x) for x in r] + [Fraction(rhs[i])] for i, r in enumerate(rows)]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if m[r][col] != 0:
                piv = r
                break
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                factor = m[r][col]
                m[r] = [x - factor * y for x, y in zip(m[r], m[col])]
    return tuple(m[i][n] for i in range(n))


def solve_linear_system(rows: Sequence[Sequence], rhs: Sequence) -> Vector | None:
    """One exact solution of a (possibly non-square) consistent system, else None.

    The solution is unique only when the coefficient matrix has full column
    rank; callers that need uniqueness check the rank themselves.
    """
    if not rows:
        return None
    ncols = len(rows[0])
    aug = [[Fraction(x) for x in r] + [Fraction(b)] for r, b in zip(rows, rhs)]
    reduced = _echelon(aug)
    pivots = []
    for r in reduced:
        lead = next((i for i, x in enumerate(r) if x != 0), None)
        if lead is None:
            continue
        if lead == ncols:
            return None  # inconsistent
        pivots.append((lead, r))
    sol = [Fraction(0)] * ncols
    for lead, r in reversed(pivots):
        sol[lead] = r[ncols] - sum(r[i] * sol[i] for i in range(lead + 1, ncols))
    return tuple(sol)


def kernel_vector(rows: Sequence[Sequence], n: int) -> IntVector | None:
    """Primitive integer generator of ker(A) when it is one-dimensional.

    Returns None if the kernel has dimension != 1.
    """
    frac_rows = [[Fraction(x) for x in r] for r in rows]
    reduced = _echelon(frac_rows)
    if len(reduced) != n - 1:
        return None
    lead_cols = []
    for r in reduced:
        lead_cols.append(next(i for i, x in enumerate(r) if x != 0))
    free = [c for c in range(n) if c not in lead_cols]
    if len(free) != 1:
        return None
    f = free[0]
    sol = [Fraction(0)] * n
    sol[f] = Fraction(1)
    for r in reversed(reduced):
        lead = next(i for i, x in enumerate(r) if x != 0)
        sol[lead] = -sum(r[i] * sol[i] for i in range(lead + 1, n))
    u, _ = to_primitive_int(sol)
    return u
