import itertools
import random

import pytest

from virweight.orders import (
    EQUAL,
    GREATER,
    LESS,
    FunctionalOrder,
    LexOrder,
    OrderError,
    certify_discrete_minimal,
    classify_order,
    compare,
    dense_witness,
)
from virweight.scalars import QuadValue


def test_lex_examples(lex2):
    assert compare(lex2, (1, -5), (0, 100)) == GREATER
    assert compare(lex2, (3, 4), (3, 4)) == EQUAL
    assert compare(lex2, (0, -1), (0, 0)) == LESS


def test_functional_examples(sqrt2_order):
    assert compare(sqrt2_order, (1, -1), (0, 0)) == GREATER  # sqrt2 - 1 > 0
    assert compare(sqrt2_order, (3, 4), (3, 4)) == EQUAL
    assert sqrt2_order.sign_of((-1, 1)) == LESS


def test_invalid_functional_rejected():
    with pytest.raises(OrderError):
        FunctionalOrder((QuadValue.rational(1), QuadValue.rational(2)))
    # three weights in a quadratic field are always rationally dependent
    with pytest.raises(OrderError):
        FunctionalOrder(
            (QuadValue.sqrt_part(1), QuadValue.rational(1), QuadValue.rational(3))
        )


def test_tie_break_variant_must_be_requested():
    order = FunctionalOrder(
        (QuadValue.rational(1), QuadValue.rational(1)), tie_break_lex=True
    )
    assert order.sign_of((1, -1)) == GREATER  # value 0, lex decides
    oc = classify_order(order)
    assert not oc.dense
    assert order.sign_of(oc.minimal_positive) == GREATER


def _random_orders():
    return [
        LexOrder(2),
        LexOrder(2, perm=(1, 0)),
        LexOrder(2, pre_transform=((1, 1), (0, 1))),
        FunctionalOrder((QuadValue.sqrt_part(1), QuadValue.rational(1))),
        FunctionalOrder((QuadValue(3, 1, 2), QuadValue(0, 1, 2))),
    ]


def test_total_order_and_translation_invariance(rng):
    """compare is a total order and translation invariant: 10^4 triples."""
    orders = _random_orders()
    for order in orders:
        for _ in range(2000):
            x = tuple(rng.randint(-20, 20) for _ in range(2))
            y = tuple(rng.randint(-20, 20) for _ in range(2))
            z = tuple(rng.randint(-20, 20) for _ in range(2))
            cxy = compare(order, x, y)
            assert cxy == -compare(order, y, x)
            assert compare(order, x, y) == compare(
                order, tuple(a + c for a, c in zip(x, z)), tuple(b + c for b, c in zip(y, z))
            )
            if cxy == EQUAL:
                assert x == y
            # transitivity
            if cxy != GREATER and compare(order, y, z) != GREATER:
                assert compare(order, x, z) != GREATER


def test_classify_lex():
    oc = classify_order(LexOrder(2))
    assert not oc.dense and oc.minimal_positive == (0, 1)
    assert certify_discrete_minimal(LexOrder(2), (0, 1), radius=10)


def test_classify_lex_with_transform():
    order = LexOrder(2, pre_transform=((1, 2), (0, 1)))
    oc = classify_order(order)
    assert not oc.dense
    assert order.sign_of(oc.minimal_positive) == GREATER
    assert certify_discrete_minimal(order, oc.minimal_positive, radius=6)


def test_classify_functional_dense(sqrt2_order):
    oc = classify_order(sqrt2_order)
    assert oc.dense
    # the density certificate: something strictly between 0 and any positive
    y = dense_witness(sqrt2_order, (1, 0), radius=8)
    assert y is not None
    assert sqrt2_order.sign_of(y) == GREATER
    assert compare(sqrt2_order, y, (1, 0)) == LESS


def test_classify_functional_rank_one():
    order = FunctionalOrder((QuadValue.rational(1),))
    oc = classify_order(order)
    assert not oc.dense and oc.minimal_positive == (1,)


def test_minimal_positive_brute_force(sqrt2_order):
    # discrete certificate fails for a dense order: plenty below (1, 0)
    assert not certify_discrete_minimal(sqrt2_order, (1, 0), radius=4)
