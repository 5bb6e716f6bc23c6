"""Total orders on G = Z^n compatible with addition.

Two families are provided.  ``LexOrder`` compares coordinates
lexicographically, optionally after a permutation or a unimodular change of
basis; it always has a minimal positive element.  ``FunctionalOrder``
compares the exact values of a Q[sqrt(d)]-valued linear functional; it is a
total order only when the functional is injective on Z^n, which over a
quadratic field forces rank <= 2.  A non-injective functional is rejected
unless a lexicographic tie break is explicitly requested.

Every order answers ``sign_of(x)``: the sign of x against 0.  Compatibility
with addition is structural (both families compare x - y), so
``compare(x, y) == compare(x + z, y + z)`` holds identically.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .lattice import (
    GroupElement,
    bezout_vector,
    hermite_normal_form,
    int_det,
    int_inverse,
    is_zero_elem,
    neg,
    sub,
    xgcd,
)
from .scalars import QuadValue

LESS, EQUAL, GREATER = -1, 0, 1


class OrderError(ValueError):
    """An invalid order specification (e.g. non-injective functional)."""


@dataclass(frozen=True)
class LexOrder:
    """Lexicographic order, optionally permuted or pre-transformed.

    ``pre_transform`` is a unimodular integer matrix applied (rows acting on
    coordinate columns) before comparing; ``perm`` reorders which coordinate
    is compared first.  At most one of the two is normally used.
    """

    rank: int
    perm: tuple[int, ...] | None = None
    pre_transform: tuple[tuple[int, ...], ...] | None = None

    def __post_init__(self):
        if self.perm is not None and sorted(self.perm) != list(range(self.rank)):
            raise OrderError(f"perm {self.perm} is not a permutation of 0..{self.rank - 1}")
        if self.pre_transform is not None:
            if abs(int_det([list(r) for r in self.pre_transform])) != 1:
                raise OrderError("pre_transform must be unimodular")

    def key(self, x: GroupElement) -> tuple[int, ...]:
        if self.pre_transform is not None:
            x = tuple(sum(r[j] * x[j] for j in range(self.rank)) for r in self.pre_transform)
        if self.perm is not None:
            x = tuple(x[p] for p in self.perm)
        return x

    def sign_of(self, x: GroupElement) -> int:
        for v in self.key(x):
            if v > 0:
                return GREATER
            if v < 0:
                return LESS
        return EQUAL


@dataclass(frozen=True)
class FunctionalOrder:
    """Order by the exact sign of sum x_i w_i with w_i in Q[sqrt(d)]."""

    weights: tuple[QuadValue, ...]
    tie_break_lex: bool = False

    def __post_init__(self):
        if not self.weights:
            raise OrderError("need at least one weight")
        if not self.tie_break_lex and not self._injective():
            raise OrderError(
                "functional weights are Q-linearly dependent; the functional is "
                "not injective on Z^n (request the lex tie-break variant explicitly)"
            )

    @property
    def rank(self) -> int:
        return len(self.weights)

    def _rational_matrix(self) -> list[list[Fraction]]:
        return [[w.a for w in self.weights], [w.b for w in self.weights]]

    def _rational_rank(self) -> int:
        rows = self._rational_matrix()
        # rank of a 2 x n Fraction matrix
        nz = [r for r in rows if any(v != 0 for v in r)]
        if not nz:
            return 0
        if len(nz) == 1:
            return 1
        r0, r1 = nz
        c = next(i for i, v in enumerate(r0) if v != 0)
        f = r1[c] / r0[c]
        reduced = [v - f * w for v, w in zip(r1, r0)]
        return 2 if any(v != 0 for v in reduced) else 1

    def _injective(self) -> bool:
        # injective on Z^n iff the columns (a_i, b_i) span has no rational
        # kernel, i.e. the 2 x n matrix has rank n
        return self._rational_rank() == self.rank

    def value(self, x: GroupElement) -> QuadValue:
        acc = None
        for c, w in zip(x, self.weights, strict=True):
            term = w.scale(c)
            acc = term if acc is None else acc + term
        return acc

    def sign_of(self, x: GroupElement) -> int:
        s = self.value(x).sign()
        if s != 0:
            return s
        if is_zero_elem(x):
            return EQUAL
        if self.tie_break_lex:
            for v in x:
                if v > 0:
                    return GREATER
                if v < 0:
                    return LESS
            return EQUAL
        raise OrderError(f"functional order is not total: {x} has value 0")


Order = LexOrder | FunctionalOrder


def compare(order: Order, x: GroupElement, y: GroupElement) -> int:
    """-1, 0, or 1; translation invariant by construction."""
    if len(x) != len(y) or len(x) != order.rank:
        raise ValueError("rank mismatch")
    return order.sign_of(sub(x, y))


def is_positive(order: Order, x: GroupElement) -> bool:
    return order.sign_of(x) == GREATER


@dataclass(frozen=True)
class OrderClass:
    """Dense, or discrete with its minimal positive element."""

    dense: bool
    minimal_positive: GroupElement | None = None

    @property
    def discrete(self) -> bool:
        return not self.dense


def classify_order(order: Order) -> OrderClass:
    """Decide dense vs discrete; return the minimal positive element when discrete.

    Lex orders are discrete with minimal element the preimage of the last
    unit vector.  A (valid) functional order is dense iff its weight tuple
    has rational rank >= 2, and otherwise discrete with minimal element a
    generator of the image subgroup of R.
    """
    if isinstance(order, LexOrder):
        n = order.rank
        target = [0] * n
        target[-1] = 1
        minimal = _preimage_of_key(order, tuple(target))
        return OrderClass(dense=False, minimal_positive=minimal)
    if not isinstance(order, FunctionalOrder):
        raise TypeError(f"unknown order {order!r}")
    rr = order._rational_rank()
    if rr >= 2 and not order.tie_break_lex:
        return OrderClass(dense=True)
    if order.tie_break_lex and order._rational_rank() < order.rank:
        # kernel is a nonzero sublattice ordered lexicographically: its lex
        # minimal positive vector sits below every element of positive value
        ker = _functional_kernel(order)
        lex = LexOrder(order.rank)
        cands = []
        for row in ker:
            cands.append(row if lex.sign_of(row) == GREATER else neg(row))
        # minimize lexicographic key among +/- integer combinations in a box
        best = min(
            (
                v
                for v in _lattice_box(ker, 3)
                if lex.sign_of(v) == GREATER
            ),
            key=lex.key,
            default=None,
        )
        if best is None:
            best = min(cands, key=lex.key)
        return OrderClass(dense=False, minimal_positive=best)
    # rank-1 image: Z w; the minimal positive element maps to the generator
    return OrderClass(dense=False, minimal_positive=_rank_one_minimal(order))


def _preimage_of_key(order: LexOrder, key: tuple[int, ...]) -> GroupElement:
    n = order.rank
    if order.perm is not None:
        inv = [0] * n
        for i, p in enumerate(order.perm):
            inv[p] = key[i]
        key = tuple(inv)
    if order.pre_transform is not None:
        minv = int_inverse([list(r) for r in order.pre_transform])
        key = tuple(int(sum(minv[i][j] * key[j] for j in range(n))) for i in range(n))
    return key


def _functional_kernel(order: FunctionalOrder) -> list[GroupElement]:
    """Basis of {x : functional(x) = 0} for tie-broken orders."""
    rows = order._rational_matrix()
    n = order.rank

    def int_row(row):
        denom = 1
        for v in row:
            denom = denom * v.denominator // gcd(denom, v.denominator)
        return tuple(int(v * denom) for v in row)

    r0, r1 = int_row(rows[0]), int_row(rows[1])
    basis = [tuple(int(v == j) for v in range(n)) for j in range(n)]
    for row in (r0, r1):
        if all(v == 0 for v in row):
            continue
        imgs = [sum(r * b for r, b in zip(row, vec)) for vec in basis]
        new_basis = []
        carrier = None
        for img, vec in zip(imgs, basis):
            if img == 0:
                new_basis.append(vec)
            elif carrier is None:
                carrier = (img, vec)
            else:
                ci, cv = carrier
                g, x, y = xgcd(ci, img)
                comb = tuple(x * a + y * b for a, b in zip(cv, vec))
                rem = tuple((-(img // g)) * a + (ci // g) * b for a, b in zip(cv, vec))
                new_basis.append(rem)
                carrier = (g, comb)
        basis = new_basis
        if not basis:
            return []
    return hermite_normal_form(basis)


def _lattice_box(basis: list[GroupElement], radius: int):
    for coeffs in itertools.product(range(-radius, radius + 1), repeat=len(basis)):
        if all(c == 0 for c in coeffs):
            continue
        vec = tuple(
            sum(c * row[j] for c, row in zip(coeffs, basis)) for j in range(len(basis[0]))
        )
        yield vec


def _rank_one_minimal(order: FunctionalOrder) -> GroupElement:
    # all weights are rational multiples of one unit u: w_i = p_i * u.  The
    # image is gcd(p_i) * u * Z, and a minimal positive element is a Bezout
    # combination with value +gcd * u.
    weights = order.weights
    unit = next(w for w in weights if not w.is_zero())
    ps = []
    for w in weights:
        # w = p * unit with p rational: solve on (a, b) coordinates
        if unit.a != 0:
            p = w.a / unit.a
        else:
            p = w.b / unit.b
        ps.append(p)
    denom = 1
    for p in ps:
        denom = denom * p.denominator // gcd(denom, p.denominator)
    ints = [int(p * denom) for p in ps]
    t = bezout_vector(tuple(ints))
    if order.sign_of(t) == LESS:
        t = neg(t)
    return t


def certify_discrete_minimal(order: Order, minimal: GroupElement, radius: int = 10) -> bool:
    """Brute-force box certificate: no y with 0 < y < minimal in the box."""
    n = order.rank
    for y in itertools.product(range(-radius, radius + 1), repeat=n):
        if order.sign_of(y) == GREATER and compare(order, y, minimal) == LESS:
            return False
    return True


def dense_witness(order: Order, x: GroupElement, radius: int = 12) -> GroupElement | None:
    """Some y with 0 < y < x, if one exists in the search box."""
    if order.sign_of(x) != GREATER:
        raise ValueError("x must be positive")
    best = None
    for y in itertools.product(range(-radius, radius + 1), repeat=order.rank):
        if order.sign_of(y) == GREATER and compare(order, y, x) == LESS:
            if best is None or compare(order, y, best) == LESS:
                best = y
    return best
