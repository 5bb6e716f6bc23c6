"""Exact linear algebra over Q and over rational function fields.

Small symbolic matrices go through sympy's row reduction with an exact zero
test.  Larger symbolic matrices are handled by specialization: substituting
random rational points for the parameters can only lower the rank, so the
rank of a specialized matrix is a certificate that the symbolic rank is at
least that large.  Matrices met in this package are polynomial in the
parameters, so specialization never hits a pole.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

import sympy

from .scalars import Scalar, is_zero


def _iszero(e) -> bool:
    return is_zero(e)


def _simp(e):
    return sympy.cancel(sympy.expand(e))


def frac_rank(rows: list[list[Fraction]]) -> int:
    """Rank of a matrix of Fractions by Gaussian elimination."""
    m = [list(map(Fraction, r)) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    rank = 0
    for c in range(ncols):
        pivot = next((i for i in range(rank, nrows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        pv = m[rank][c]
        m[rank] = [v / pv for v in m[rank]]
        for i in range(nrows):
            if i != rank and m[i][c] != 0:
                f = m[i][c]
                m[i] = [v - f * w for v, w in zip(m[i], m[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank


def frac_nullspace(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    """Basis of the right kernel of a Fraction matrix."""
    m = [list(map(Fraction, r)) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        pv = m[r][c]
        m[r] = [v / pv for v in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [v - f * w for v, w in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -m[i][fc]
        basis.append(vec)
    return basis


def sym_matrix(rows: list[list[Scalar]]) -> sympy.Matrix:
    return sympy.Matrix([[sympy.expand(e) for e in row] for row in rows])


def symbolic_rank(rows: list[list[Scalar]]) -> int:
    """Exact rank over the rational function field (small matrices)."""
    if not rows or not rows[0]:
        return 0
    return sym_matrix(rows).rank(iszerofunc=_iszero, simplify=_simp)


def symbolic_nullspace(rows: list[list[Scalar]]) -> list[list[Scalar]]:
    if not rows or not rows[0]:
        return []
    vecs = sym_matrix(rows).nullspace(iszerofunc=_iszero, simplify=_simp)
    return [[sympy.cancel(v) for v in vec] for vec in vecs]


_PRIMES = (97, 89, 83, 79, 73, 71, 67, 61, 59, 53, 47, 43, 41, 37, 31, 29, 23, 19, 17, 13)


def random_rational_point(symbols, rng: random.Random) -> dict:
    """Moderate-height random rationals, bounded away from degenerate values."""
    point = {}
    for s in symbols:
        num = rng.choice(_PRIMES) * rng.choice((1, -1))
        den = rng.choice((5, 7, 9, 11, 13))
        point[s] = sympy.Rational(num, den)
    return point


def _specialize(rows, point) -> list[list[Fraction]]:
    out = []
    for row in rows:
        new = []
        for e in row:
            v = sympy.expand(e).subs(point) if getattr(e, "free_symbols", None) else e
            v = sympy.Rational(v)
            new.append(Fraction(int(v.p), int(v.q)))
        out.append(new)
    return out


@dataclass(frozen=True)
class RankResult:
    """A rank value with its certification status.

    ``exact=True`` means the value is the rank over the function field;
    otherwise it is a certified lower bound (a specialization witnesses
    every reported independent set, and rank can only drop under
    specialization).
    """

    rank: int
    exact: bool
    method: str


def rank_lower_bound(rows: list[list[Scalar]], rng: random.Random, trials: int = 2) -> RankResult:
    """Certified lower bound for the symbolic rank via random specialization."""
    if not rows or not rows[0]:
        return RankResult(0, True, "empty")
    symbols = set()
    for row in rows:
        for e in row:
            symbols |= getattr(e, "free_symbols", set())
    if not symbols:
        return RankResult(frac_rank(_specialize(rows, {})), True, "rational")
    best = 0
    for _ in range(trials):
        point = random_rational_point(sorted(symbols, key=str), rng)
        best = max(best, frac_rank(_specialize(rows, point)))
    return RankResult(best, False, "specialization")


def rank_exact_or_bound(
    rows: list[list[Scalar]], rng: random.Random, symbolic_limit: int = 10
) -> RankResult:
    """Exact symbolic rank when the matrix is small, else a certified bound."""
    if not rows or not rows[0]:
        return RankResult(0, True, "empty")
    symbols = set()
    for row in rows:
        for e in row:
            symbols |= getattr(e, "free_symbols", set())
    if not symbols:
        return RankResult(frac_rank(_specialize(rows, {})), True, "rational")
    if max(len(rows), len(rows[0])) <= symbolic_limit:
        return RankResult(symbolic_rank(rows), True, "symbolic")
    return rank_lower_bound(rows, rng)
