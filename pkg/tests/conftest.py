import random

import pytest
import sympy

from virweight import (
    FunctionalOrder,
    GroupSpec,
    LexOrder,
    QuadValue,
)


@pytest.fixture
def rng():
    return random.Random(20240817)


@pytest.fixture
def g1z():
    """G = Z: rank one with generator embedded as 1."""
    return GroupSpec(1, embed_values=(sympy.Integer(1),))


@pytest.fixture
def g2():
    """Rank two with symbolic generators b1, b2."""
    return GroupSpec(2)


@pytest.fixture
def g2_mixed():
    """G = Z + Z b2: first generator embeds as 1, second stays symbolic."""
    return GroupSpec(2, embed_values=(sympy.Integer(1), sympy.Symbol("b2")))


@pytest.fixture
def lex2():
    return LexOrder(2)


@pytest.fixture
def sqrt2_order():
    """The dense functional order with weights (sqrt 2, 1) on Z^2."""
    return FunctionalOrder((QuadValue.sqrt_part(1), QuadValue.rational(1)))
