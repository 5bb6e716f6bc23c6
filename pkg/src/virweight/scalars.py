"""Exact scalar arithmetic.

All coefficients in this package are sympy expressions built from rationals
and a fixed pool of commuting symbols: the group generators ``b1, b2, ...``
and the module parameters ``alpha, beta, h, cdot, Lambda0``.  Everything is
a polynomial or a quotient of polynomials over Q, so equality and zero
testing are decidable: polynomials are expanded to canonical form, rational
functions are cancelled first.  Floats are rejected at every entry point;
substituting values for parameters is always an explicit operation.

The module also provides ``QuadValue``, a tiny exact model of the real
quadratic field Q[sqrt(d)].  It only exists so that total orders on the
group can be evaluated by exact sign computations; it never mixes with the
symbolic scalar field.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import sympy

Scalar = sympy.Expr

ZERO = sympy.Integer(0)
ONE = sympy.Integer(1)

ALPHA = sympy.Symbol("alpha")
BETA = sympy.Symbol("beta")
H = sympy.Symbol("h")
CDOT = sympy.Symbol("cdot")
LAMBDA0 = sympy.Symbol("Lambda0")

PARAMETER_SYMBOLS = (ALPHA, BETA, H, CDOT, LAMBDA0)


def generator_symbols(n: int) -> tuple[sympy.Symbol, ...]:
    """Symbols b1..bn for the group generators."""
    return tuple(sympy.Symbol(f"b{i}") for i in range(1, n + 1))


class InexactValueError(TypeError):
    """Raised when a float (or other inexact value) sneaks in."""


def _reject_floats(expr: Scalar) -> Scalar:
    if expr.atoms(sympy.Float):
        raise InexactValueError(f"inexact (floating point) value in {expr!r}")
    return expr


def exact(value) -> Scalar:
    """Coerce ``value`` to an exact sympy expression.

    Accepts ints, Fractions, strings like "3/4", and sympy expressions.
    Floats raise :class:`InexactValueError`.
    """
    if isinstance(value, float):
        raise InexactValueError(f"floating point value {value!r} is not exact")
    if isinstance(value, Fraction):
        return sympy.Rational(value.numerator, value.denominator)
    if isinstance(value, str):
        return _reject_floats(sympy.sympify(value, rational=True))
    return _reject_floats(sympy.sympify(value, rational=True))


def expand(expr: Scalar) -> Scalar:
    return sympy.expand(expr)


def is_zero(expr) -> bool:
    """Exact zero test for polynomials and rational functions over Q."""
    if isinstance(expr, (int, Fraction)):
        return expr == 0
    e = sympy.expand(expr)
    if e.is_Number:
        return e == 0
    if e == 0:
        return True
    if e.is_polynomial(*e.free_symbols):
        # expanded nonzero polynomial over Q is structurally nonzero
        return False
    num, _ = sympy.fraction(sympy.cancel(e))
    return sympy.expand(num) == 0


def equal(a, b) -> bool:
    return is_zero(exact(a) - exact(b))


def substitute(expr: Scalar, assignment: dict) -> Scalar:
    """Explicit substitution of exact values for symbols."""
    mapping = {sympy.Symbol(k) if isinstance(k, str) else k: exact(v)
               for k, v in assignment.items()}
    return sympy.expand(exact(expr).subs(mapping, simultaneous=True))


def to_fraction(expr: Scalar) -> Fraction:
    e = sympy.nsimplify(expr) if not isinstance(expr, sympy.Expr) else expr
    e = sympy.Rational(e)
    return Fraction(int(e.p), int(e.q))


def parse_scalar(text: str, namespace: dict[str, Scalar]) -> Scalar:
    """Parse an exact scalar from a config string.

    Only the provided symbol names are allowed; floats are rejected.
    """
    try:
        expr = sympy.sympify(text, locals=dict(namespace), rational=True)
    except (sympy.SympifyError, SyntaxError, TypeError) as exc:
        raise ValueError(f"cannot parse scalar {text!r}: {exc}") from exc
    _reject_floats(expr)
    allowed = set(namespace.values())
    for sym in expr.free_symbols:
        if sym not in allowed:
            raise ValueError(f"unknown symbol {sym} in scalar {text!r}")
    return sympy.expand(expr)


# ---------------------------------------------------------------------------
# Q[sqrt(d)]


def _sign_fraction(q: Fraction) -> int:
    return (q > 0) - (q < 0)


@dataclass(frozen=True)
class QuadValue:
    """An element a + b*sqrt(d) of Q[sqrt(d)], d a square-free integer >= 2.

    Signs (hence comparisons) are decided exactly by comparing a^2 with
    b^2 d, so no floating point is involved anywhere.
    """

    a: Fraction
    b: Fraction
    d: int

    def __post_init__(self):
        if self.d < 2:
            raise ValueError("d must be a square-free integer >= 2")
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    @classmethod
    def rational(cls, value, d: int = 2) -> "QuadValue":
        return cls(Fraction(value), Fraction(0), d)

    @classmethod
    def sqrt_part(cls, coeff, d: int = 2) -> "QuadValue":
        return cls(Fraction(0), Fraction(coeff), d)

    def _check(self, other: "QuadValue"):
        if self.d != other.d:
            raise ValueError("mixed quadratic fields")

    def __add__(self, other: "QuadValue") -> "QuadValue":
        self._check(other)
        return QuadValue(self.a + other.a, self.b + other.b, self.d)

    def __sub__(self, other: "QuadValue") -> "QuadValue":
        self._check(other)
        return QuadValue(self.a - other.a, self.b - other.b, self.d)

    def __neg__(self) -> "QuadValue":
        return QuadValue(-self.a, -self.b, self.d)

    def __mul__(self, other):
        if isinstance(other, QuadValue):
            self._check(other)
            return QuadValue(
                self.a * other.a + self.b * other.b * self.d,
                self.a * other.b + self.b * other.a,
                self.d,
            )
        return QuadValue(self.a * Fraction(other), self.b * Fraction(other), self.d)

    __rmul__ = __mul__

    def scale(self, k: int) -> "QuadValue":
        return QuadValue(self.a * k, self.b * k, self.d)

    def sign(self) -> int:
        """Exact sign of a + b*sqrt(d)."""
        a, b = self.a, self.b
        if b == 0:
            return _sign_fraction(a)
        if a == 0:
            return _sign_fraction(b)
        sa, sb = _sign_fraction(a), _sign_fraction(b)
        if sa == sb:
            return sa
        # opposite signs: compare |a| with |b| sqrt(d) via squares
        t = a * a - b * b * self.d
        if t == 0:
            raise ValueError("sqrt(d) turned out rational; d is not square-free")
        return sa if t > 0 else sb

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __lt__(self, other: "QuadValue") -> bool:
        return (self - other).sign() < 0

    def __le__(self, other: "QuadValue") -> bool:
        return (self - other).sign() <= 0

    def __gt__(self, other: "QuadValue") -> bool:
        return (self - other).sign() > 0

    def __ge__(self, other: "QuadValue") -> bool:
        return (self - other).sign() >= 0

    def __str__(self):
        return f"{self.a} + {self.b}*sqrt({self.d})"


def parse_quad(text: str, d: int = 2) -> QuadValue:
    """Parse "3/4 - 2*sqrt2" style strings into Q[sqrt(d)]."""
    root = sympy.sqrt(sympy.Integer(d))
    ns = {f"sqrt{d}": root, "sqrt": sympy.sqrt}
    expr = sympy.sympify(text, locals=ns, rational=True)
    _reject_floats(expr)
    expr = sympy.expand(expr)
    poly = sympy.Poly(expr, root) if expr.has(root) else None
    if poly is None:
        if not expr.is_rational:
            raise ValueError(f"{text!r} is not in Q[sqrt({d})]")
        return QuadValue(Fraction(int(sympy.Rational(expr).p), int(sympy.Rational(expr).q)), Fraction(0), d)
    if poly.degree() > 1:
        raise ValueError(f"{text!r} is not in Q[sqrt({d})]")
    b = poly.coeff_monomial(root)
    a = poly.coeff_monomial(1)

    def frac(x):
        try:
            r = sympy.Rational(x)
        except TypeError as exc:
            raise ValueError(f"{text!r} is not in Q[sqrt({d})]") from exc
        return Fraction(int(r.p), int(r.q))

    return QuadValue(frac(a), frac(b), d)
