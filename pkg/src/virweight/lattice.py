"""The abelian group G = Z^n, its embedding into the scalar field, and
lattice utilities: extended gcd, Hermite normal form, kernel bases,
complements of primitive vectors, and the unimodular cone-basis matrix.

Group elements are plain integer tuples; all lattice arithmetic is exact
integer or Fraction arithmetic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

import sympy

from .scalars import QuadValue, Scalar, exact, generator_symbols, is_zero

GroupElement = tuple[int, ...]


def zero(n: int) -> GroupElement:
    return (0,) * n


def add(x: GroupElement, y: GroupElement) -> GroupElement:
    return tuple(a + b for a, b in zip(x, y, strict=True))


def sub(x: GroupElement, y: GroupElement) -> GroupElement:
    return tuple(a - b for a, b in zip(x, y, strict=True))


def neg(x: GroupElement) -> GroupElement:
    return tuple(-a for a in x)


def smul(k: int, x: GroupElement) -> GroupElement:
    return tuple(k * a for a in x)


def is_zero_elem(x: GroupElement) -> bool:
    return all(a == 0 for a in x)


@dataclass(frozen=True)
class GroupSpec:
    """A rank-n free abelian group with an exact embedding into the scalars.

    ``embed_values[i]`` is the scalar value of the i-th generator; by default
    the formal symbol ``b{i+1}``.  ``real_values`` optionally assigns each
    generator an exact element of Q[sqrt(d)], used only by functional orders.
    For rank <= 2 the Q-linear independence of the real values is decided
    exactly; for higher rank it must be asserted by configuration.
    """

    rank: int
    symbols: tuple[sympy.Symbol, ...] = ()
    embed_values: tuple[Scalar, ...] = ()
    real_values: tuple[QuadValue, ...] | None = None
    independence_asserted: bool = False

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError("rank must be >= 1")
        if not self.symbols:
            object.__setattr__(self, "symbols", generator_symbols(self.rank))
        if len(self.symbols) != self.rank or len(set(self.symbols)) != self.rank:
            raise ValueError("generator symbols must be pairwise distinct, one per rank")
        if not self.embed_values:
            object.__setattr__(self, "embed_values", tuple(self.symbols))
        else:
            object.__setattr__(self, "embed_values", tuple(exact(v) for v in self.embed_values))
        if len(self.embed_values) != self.rank:
            raise ValueError("need one embedding value per generator")
        if self.real_values is not None:
            if len(self.real_values) != self.rank:
                raise ValueError("need one real value per generator")
            if self.rank <= 2:
                if not _quad_independent(self.real_values):
                    raise ValueError("real generator values are Q-linearly dependent")
            elif not self.independence_asserted:
                raise ValueError(
                    "rank > 2 real values: Q-independence must be asserted by configuration"
                )

    def check_element(self, x: GroupElement):
        if len(x) != self.rank:
            raise ValueError(f"element {x} has wrong rank for group of rank {self.rank}")

    def embed(self, x: GroupElement) -> Scalar:
        """The additive embedding x -> sum x_i * b_i into the scalar field."""
        cache = self.__dict__.get("_embed_cache")
        if cache is None:
            cache = {}
            object.__setattr__(self, "_embed_cache", cache)
        hit = cache.get(x)
        if hit is not None:
            return hit
        self.check_element(x)
        val = sympy.expand(sum((c * v for c, v in zip(x, self.embed_values)), start=sympy.Integer(0)))
        cache[x] = val
        return val

    def real_value(self, x: GroupElement) -> QuadValue:
        if self.real_values is None:
            raise ValueError("group has no real evaluation data")
        self.check_element(x)
        acc = None
        for c, v in zip(x, self.real_values):
            term = v.scale(c)
            acc = term if acc is None else acc + term
        return acc

    def membership(self, scalar) -> GroupElement | None:
        """Return integer coordinates g with embed(g) == scalar, or None.

        An expression with a free symbol outside the generator values is
        never in G; rational combinations with non-integer coefficients are
        not in G either.
        """
        target = sympy.expand(exact(scalar))
        coords = _decompose_linear(target, self.embed_values)
        if coords is None:
            return None
        if any(c.denominator != 1 for c in coords):
            return None
        return tuple(int(c) for c in coords)

    def reduce_mod(self, scalar) -> tuple[Scalar, GroupElement]:
        """Canonical representative of ``scalar`` modulo the embedded lattice.

        Writes the part of the expression lying in the rational span of the
        generator values as sum q_i b_i and subtracts the integer floors, so
        the returned representative has lattice coefficients in [0, 1).
        Returns (representative, subtracted lattice element).
        """
        target = sympy.expand(exact(scalar))
        vecs = [_monomial_vector(v) for v in self.embed_values]
        tvec = _monomial_vector(target)
        monoms = sorted({m for v in vecs for m in v}, key=sympy.default_sort_key)
        rows = [
            [v.get(m, Fraction(0)) for v in vecs] + [tvec.get(m, Fraction(0))]
            for m in monoms
        ]
        try:
            sol = _solve_exact(rows, self.rank)
        except ValueError:
            sol = None
        if sol is None:
            return target, zero(self.rank)
        shift = tuple(int(q.numerator // q.denominator) for q in sol)
        rep = sympy.expand(target - self.embed(shift))
        return rep, shift

    def elements_box(self, radius: int):
        """All elements with coordinates in [-radius, radius]."""
        return itertools.product(range(-radius, radius + 1), repeat=self.rank)


def _quad_independent(values: tuple[QuadValue, ...]) -> bool:
    # rank of the (a, b)-coordinate matrix over Q must equal len(values)
    rows = [[v.a, v.b] for v in values]
    if len(values) == 1:
        return not values[0].is_zero()
    if len(values) == 2:
        det = rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
        return det != 0
    return False


def _monomial_vector(expr: Scalar) -> dict:
    expanded = sympy.expand(expr)
    out = {}
    for mono, coeff in expanded.as_coefficients_dict().items():
        if not coeff.is_rational:
            raise ValueError(f"non-rational coefficient in {expr}")
        out[mono] = Fraction(int(coeff.p), int(coeff.q))
    return {m: c for m, c in out.items() if c != 0}


def _decompose_linear(target: Scalar, values: tuple[Scalar, ...]):
    """Solve target = sum x_i * values_i over Q; None if impossible."""
    vecs = [_monomial_vector(v) for v in values]
    tvec = _monomial_vector(target)
    monomials = sorted(
        {m for v in vecs for m in v} | set(tvec), key=sympy.default_sort_key
    )
    rows = [[v.get(m, Fraction(0)) for v in vecs] + [tvec.get(m, Fraction(0))] for m in monomials]
    n = len(values)
    sol = _solve_exact(rows, n)
    return sol


def _solve_exact(aug_rows: list[list[Fraction]], n: int):
    """Gaussian elimination on an augmented system; unique solution or None.

    Raises if the system is consistent but underdetermined (dependent
    columns), since group embeddings are required to be independent.
    """
    rows = [list(map(Fraction, r)) for r in aug_rows]
    m = len(rows)
    pivots = []
    r = 0
    for c in range(n):
        pivot = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][c]
        rows[r] = [v / pv for v in rows[r]]
        for i in range(m):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [v - f * w for v, w in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    for i in range(r, m):
        if rows[i][n] != 0:
            return None  # inconsistent
    if len(pivots) < n:
        raise ValueError("embedding values are Q-linearly dependent")
    sol = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        sol[c] = rows[i][n]
    return sol


# ---------------------------------------------------------------------------
# integer linear algebra


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with g = gcd(a, b) >= 0 and a x + b y = g."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        g, x, y = -g, -x, -y
    return g, x, y


def int_det(rows: list[list[int]]) -> int:
    """Exact determinant via Fraction Gaussian elimination."""
    n = len(rows)
    m = [[Fraction(v) for v in row] for row in rows]
    det = Fraction(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if m[i][c] != 0), None)
        if pivot is None:
            return 0
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            det = -det
        det *= m[c][c]
        inv = 1 / m[c][c]
        m[c] = [v * inv for v in m[c]]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c]
                m[i] = [v - f * w for v, w in zip(m[i], m[c])]
    assert det.denominator == 1
    return int(det)


def int_inverse(rows: list[list[int]]) -> list[list[Fraction]]:
    """Exact inverse of a square integer matrix (Fractions)."""
    n = len(rows)
    m = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(rows)]
    for c in range(n):
        pivot = next((i for i in range(c, n) if m[i][c] != 0), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        m[c], m[pivot] = m[pivot], m[c]
        pv = m[c][c]
        m[c] = [v / pv for v in m[c]]
        for i in range(n):
            if i != c and m[i][c] != 0:
                f = m[i][c]
                m[i] = [v - f * w for v, w in zip(m[i], m[c])]
    return [row[n:] for row in m]


def hermite_normal_form(rows: list[GroupElement]) -> list[GroupElement]:
    """Row-style Hermite normal form with positive pivots.

    Returns a canonical basis of the lattice spanned by ``rows`` (zero rows
    dropped); entries above a pivot are reduced into [0, pivot).
    """
    work = [list(r) for r in rows if not all(v == 0 for v in r)]
    if not work:
        return []
    ncols = len(work[0])
    m = len(work)
    r = 0
    for c in range(ncols):
        while True:
            nz = sorted((i for i in range(r, m) if work[i][c] != 0),
                        key=lambda i: abs(work[i][c]))
            if len(nz) <= 1:
                break
            i0 = nz[0]
            for i in nz[1:]:
                q = work[i][c] // work[i0][c]
                work[i] = [a - q * b for a, b in zip(work[i], work[i0])]
        nz = [i for i in range(r, m) if work[i][c] != 0]
        if nz:
            work[r], work[nz[0]] = work[nz[0]], work[r]
            if work[r][c] < 0:
                work[r] = [-v for v in work[r]]
            r += 1
    basis = work[:r]
    # reduce entries above each pivot into [0, pivot)
    for i in reversed(range(len(basis))):
        c = next(j for j, v in enumerate(basis[i]) if v != 0)
        for k in range(i):
            if basis[k][c] != 0:
                q = basis[k][c] // basis[i][c]
                basis[k] = [a - q * b for a, b in zip(basis[k], basis[i])]
    return [tuple(r) for r in basis]


def kernel_basis(k: GroupElement) -> list[GroupElement]:
    """A Z-basis (in HNF) of {x in Z^n : sum k_i x_i = 0} for k != 0."""
    n = len(k)
    if all(v == 0 for v in k):
        raise ValueError("k must be nonzero")
    # column-reduce k to g*e1 with a unimodular row transform U: U k^T = (g,0,..)
    u = [[int(i == j) for j in range(n)] for i in range(n)]
    col = list(k)
    pivot = next(i for i, v in enumerate(col) if v != 0)
    col[0], col[pivot] = col[pivot], col[0]
    u[0], u[pivot] = u[pivot], u[0]
    for i in range(1, n):
        while col[i] != 0:
            if abs(col[0]) > abs(col[i]) or col[0] == 0:
                col[0], col[i] = col[i], col[0]
                u[0], u[i] = u[i], u[0]
            q = col[i] // col[0]
            col[i] -= q * col[0]
            u[i] = [a - q * b for a, b in zip(u[i], u[0])]
    rows = [tuple(u[i]) for i in range(1, n)]
    return hermite_normal_form(rows)


def bezout_vector(k: GroupElement) -> GroupElement:
    """Some t with sum k_i t_i = gcd(k)."""
    n = len(k)
    g = 0
    t = [0] * n
    for i, a in enumerate(k):
        g2, x, y = xgcd(g, a)
        t = [x * v for v in t]
        t[i] = y
        g = g2
    return tuple(t)


def _norm2(x: GroupElement) -> int:
    return sum(v * v for v in x)


def _reduce_against(t: list[int], basis: list[GroupElement]) -> list[int]:
    # size reduction: repeatedly subtract the nearest lattice multiple of each
    # basis vector (1-dimensional Babai steps) until no step improves the norm
    improved = True
    while improved:
        improved = False
        for row in basis:
            denom = _norm2(row)
            num = sum(a * b for a, b in zip(t, row))
            q = round(Fraction(num, denom))
            if q != 0:
                cand = [a - q * b for a, b in zip(t, row)]
                if _norm2(cand) < _norm2(t):
                    t = cand
                    improved = True
    return t


def complement_basis(k: GroupElement) -> tuple[GroupElement, list[GroupElement]]:
    """Split Z^n = Z t + G0 along a primitive vector k.

    Returns ``(t, g0_basis)`` where sum k_i t_i = 1 and ``g0_basis`` is the
    HNF basis of the annihilator sublattice {x : k . x = 0}.  Among all
    Bezout vectors, t has minimal Euclidean norm (lexicographically smallest
    on ties).  Requires gcd(k) = 1 and k != 0.
    """
    if all(v == 0 for v in k):
        raise ValueError("k must be nonzero")
    g = 0
    for v in k:
        g = gcd(g, v)
    if g != 1:
        raise ValueError(f"coordinates of {k} are not relatively prime (gcd={g})")
    g0 = kernel_basis(k)
    t = list(bezout_vector(k))
    if g0:
        t = _reduce_against(t, g0)
        # local search around the reduced point for the true minimum
        best_key = (_norm2(t), tuple(t))
        span = [range(-2, 3)] * len(g0)
        for offs in itertools.product(*span):
            cand = list(t)
            for o, row in zip(offs, g0):
                if o:
                    cand = [a + o * b for a, b in zip(cand, row)]
            key = (_norm2(cand), tuple(cand))
            if key < best_key:
                best_key = key
        t = list(best_key[1])
    t = tuple(t)
    assert sum(a * b for a, b in zip(k, t)) == 1
    full = [list(t)] + [list(r) for r in g0]
    assert abs(int_det(full)) == 1
    return t, g0


def cone_basis_matrix(n: int, p: int) -> list[list[int]]:
    """A unimodular n x n integer matrix whose rows sit in the shifted cone.

    Row 1 is (p+1, p, ..., p), row 2 is (p+2, p+1, p, ..., p) and row k >= 3
    is row 1 with 1 added in column k.  The determinant is always 1, so the
    rows form a Z-basis of Z^n consisting of vectors that dominate (p,...,p).
    """
    if n < 2:
        raise ValueError("need n >= 2")
    i1 = [p + 1] + [p] * (n - 1)
    i2 = [p + 2, p + 1] + [p] * (n - 2)
    rows = [i1, i2]
    for kk in range(3, n + 1):
        row = list(i1)
        row[kk - 1] += 1
        rows.append(row)
    return rows
