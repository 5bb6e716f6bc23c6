import math

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from virweight.lattice import (
    GroupSpec,
    add,
    complement_basis,
    cone_basis_matrix,
    hermite_normal_form,
    int_det,
    int_inverse,
    kernel_basis,
    neg,
    xgcd,
)
from virweight.scalars import ALPHA, is_zero


def test_embed_examples(g2):
    assert is_zero(g2.embed((0, 0)))
    b1, b2 = g2.symbols
    assert is_zero(g2.embed((1, 0)) - b1)
    assert is_zero(g2.embed((2, -3)) - (2 * b1 - 3 * b2))
    with pytest.raises(ValueError):
        g2.embed((1, 2, 3))


def test_embed_is_additive(g2, rng):
    for _ in range(50):
        x = tuple(rng.randint(-5, 5) for _ in range(2))
        y = tuple(rng.randint(-5, 5) for _ in range(2))
        assert is_zero(g2.embed(add(x, y)) - g2.embed(x) - g2.embed(y))


def test_membership(g2, g1z, g2_mixed):
    b1, b2 = g2.symbols
    assert g2.membership(2 * b1 - 3 * b2) == (2, -3)
    assert g2.membership(b1 / 2) is None
    assert g2.membership(ALPHA + b1) is None
    assert g1z.membership(sympy.Integer(5)) == (5,)
    assert g1z.membership(sympy.Rational(1, 2)) is None
    b2m = g2_mixed.embed_values[1]
    assert g2_mixed.membership(3 + 2 * b2m) == (3, 2)
    assert g2_mixed.membership(sympy.Rational(1, 2)) is None


def test_reduce_mod(g1z, g2_mixed):
    rep, shift = g1z.reduce_mod(sympy.Rational(7, 2))
    assert rep == sympy.Rational(1, 2) and shift == (3,)
    b2 = g2_mixed.embed_values[1]
    rep, shift = g2_mixed.reduce_mod(ALPHA + 3 * b2 + 2)
    assert is_zero(rep - ALPHA) and shift == (2, 3)


def test_complement_examples():
    t, g0 = complement_basis((1, 0))
    assert t == (1, 0) and g0 == [(0, 1)]
    t, g0 = complement_basis((2, 3))
    assert t == (-1, 1)
    assert g0 == [(3, -2)]
    t, g0 = complement_basis((6, 10, 15))
    assert t == (1, 1, -1)
    assert len(g0) == 2
    for row in g0:
        assert sum(a * b for a, b in zip((6, 10, 15), row)) == 0


def test_complement_rejects_bad_input():
    with pytest.raises(ValueError):
        complement_basis((2, 4))
    with pytest.raises(ValueError):
        complement_basis((0, 0))


@given(st.lists(st.integers(-9, 9), min_size=2, max_size=4))
@settings(max_examples=80, deadline=None)
def test_complement_properties(k):
    g = 0
    for v in k:
        g = math.gcd(g, v)
    if g != 1:
        return
    t, g0 = complement_basis(tuple(k))
    assert sum(a * b for a, b in zip(k, t)) == 1
    for row in g0:
        assert sum(a * b for a, b in zip(k, row)) == 0
    assert abs(int_det([list(t)] + [list(r) for r in g0])) == 1


def test_kernel_basis_is_hnf():
    rows = kernel_basis((2, 3))
    assert rows == hermite_normal_form(rows)


def test_cone_matrix_examples():
    assert cone_basis_matrix(2, 0) == [[1, 0], [2, 1]]
    assert cone_basis_matrix(3, 1) == [[2, 1, 1], [3, 2, 1], [2, 1, 2]]
    assert int_det(cone_basis_matrix(2, 5)) == 36 - 35


def test_cone_matrix_determinants():
    for n in range(2, 7):
        for p in range(-3, 6):
            assert int_det(cone_basis_matrix(n, p)) == 1


def test_int_inverse_roundtrip(rng):
    m = cone_basis_matrix(3, 2)
    inv = int_inverse(m)
    n = 3
    for i in range(n):
        for j in range(n):
            s = sum(m[i][k] * inv[k][j] for k in range(n))
            assert s == (1 if i == j else 0)


def test_xgcd():
    for a, b in [(12, 18), (-5, 7), (0, 4), (9, 0), (-6, -10)]:
        g, x, y = xgcd(a, b)
        assert g == math.gcd(a, b)
        assert a * x + b * y == g


def test_hnf_canonical():
    basis = hermite_normal_form([(2, 4, 6), (1, 2, 3), (0, 0, 5)])
    assert basis == [(1, 2, 3), (0, 0, 5)]
    # pivots positive, entries above pivots reduced
    basis = hermite_normal_form([(-3, 1), (0, -2)])
    pivots = [next(v for v in row if v != 0) for row in basis]
    assert all(p > 0 for p in pivots)


def test_real_values_independence():
    from virweight.scalars import QuadValue

    with pytest.raises(ValueError):
        GroupSpec(2, real_values=(QuadValue.rational(1), QuadValue.rational(2)))
    GroupSpec(2, real_values=(QuadValue.sqrt_part(1), QuadValue.rational(1)))
    with pytest.raises(ValueError):
        GroupSpec(
            3,
            real_values=(
                QuadValue.sqrt_part(1),
                QuadValue.rational(1),
                QuadValue.rational(2),
            ),
        )
    GroupSpec(
        3,
        real_values=(
            QuadValue.sqrt_part(1),
            QuadValue.rational(1),
            QuadValue.rational(2),
        ),
        independence_asserted=True,
    )
