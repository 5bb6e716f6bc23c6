"""The centrally extended Lie algebra on basis {c, d_x : x in Z^n}.

The bracket on basis vectors is

    [d_x, d_y] = (y - x) d_{x+y} + delta_{x,-y} (x^3 - x)/12 c,
    [c, d_x]   = 0,

where the coefficient (y - x) and the cubic term are the exact scalar
embeddings of the group elements.  The opposite coefficient sign (x - y)
also defines a Lie algebra (the central cocycle is unchanged) and is
available behind the ``sign`` flag; only the (y - x) choice makes the
intermediate-series action a module action, which is what pins the default.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import sympy

from .lattice import GroupElement, GroupSpec, add, is_zero_elem, neg, sub
from .orders import EQUAL, GREATER, LESS, Order
from .scalars import ONE, ZERO, Scalar, exact, is_zero

SIGN_YX = "y-x"
SIGN_XY = "x-y"


def basis_bracket(
    group: GroupSpec, x: GroupElement, y: GroupElement, sign: str = SIGN_YX
) -> tuple[Scalar, GroupElement, Scalar | None]:
    """Bracket of two basis vectors: (coefficient, target index, central).

    The central part is None unless x + y = 0, in which case it is the
    scalar multiplying c, namely (x^3 - x)/12 with x embedded.
    """
    group.check_element(x)
    group.check_element(y)
    ex = group.embed(x)
    ey = group.embed(y)
    coeff = sympy.expand(ey - ex) if sign == SIGN_YX else sympy.expand(ex - ey)
    central = None
    if is_zero_elem(add(x, y)):
        central = sympy.expand((ex**3 - ex) / 12)
    return coeff, add(x, y), central


@dataclass
class LieElement:
    """A finitely supported combination of the d_x plus a central part.

    ``terms`` maps group elements to nonzero scalar coefficients; zero
    coefficients are pruned on construction.  Treat instances as immutable.
    """

    group: GroupSpec
    terms: dict[GroupElement, Scalar] = field(default_factory=dict)
    central: Scalar = ZERO

    def __post_init__(self):
        pruned = {}
        for x, c in self.terms.items():
            self.group.check_element(x)
            c = sympy.expand(exact(c))
            if not is_zero(c):
                pruned[x] = c
        self.terms = pruned
        self.central = sympy.expand(exact(self.central))
        if is_zero(self.central):
            self.central = ZERO

    @classmethod
    def basis(cls, group: GroupSpec, x: GroupElement, coeff=ONE) -> "LieElement":
        return cls(group, {tuple(x): exact(coeff)})

    @classmethod
    def center(cls, group: GroupSpec, coeff=ONE) -> "LieElement":
        return cls(group, {}, exact(coeff))

    @classmethod
    def zero(cls, group: GroupSpec) -> "LieElement":
        return cls(group, {})

    def is_zero(self) -> bool:
        return not self.terms and is_zero(self.central)

    def __add__(self, other: "LieElement") -> "LieElement":
        self._check(other)
        terms = dict(self.terms)
        for x, c in other.terms.items():
            terms[x] = terms.get(x, ZERO) + c
        return LieElement(self.group, terms, self.central + other.central)

    def __sub__(self, other: "LieElement") -> "LieElement":
        return self + other.scale(-1)

    def scale(self, coeff) -> "LieElement":
        coeff = exact(coeff)
        return LieElement(
            self.group,
            {x: c * coeff for x, c in self.terms.items()},
            self.central * coeff,
        )

    def _check(self, other: "LieElement"):
        if self.group is not other.group and self.group != other.group:
            raise ValueError("elements live over different groups")

    def support(self) -> set[GroupElement]:
        return set(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LieElement):
            return NotImplemented
        return (self - other).is_zero()

    def __repr__(self):
        parts = [f"({c})*d{list(x)}" for x, c in sorted(self.terms.items())]
        if not is_zero(self.central):
            parts.append(f"({self.central})*c")
        return " + ".join(parts) if parts else "0"


def bracket(u: LieElement, v: LieElement, sign: str = SIGN_YX) -> LieElement:
    """Bilinear, antisymmetric bracket; central parts commute with everything."""
    u._check(v)
    group = u.group
    terms: dict[GroupElement, Scalar] = {}
    central = ZERO
    for x, cx in u.terms.items():
        for y, cy in v.terms.items():
            coeff, target, cterm = basis_bracket(group, x, y, sign)
            if not is_zero(coeff):
                terms[target] = terms.get(target, ZERO) + cx * cy * coeff
            if cterm is not None:
                central = central + cx * cy * cterm
    return LieElement(group, terms, central)


def ad_action(x: GroupElement, v: LieElement, sign: str = SIGN_YX) -> LieElement:
    """bracket(d_x, v)."""
    return bracket(LieElement.basis(v.group, x), v, sign)


def jacobi_defect(
    group: GroupSpec,
    x: GroupElement,
    y: GroupElement,
    z: GroupElement,
    sign: str = SIGN_YX,
) -> LieElement:
    """[[x,y],z] + [[y,z],x] + [[z,x],y]; zero iff the identity holds."""
    dx, dy, dz = (LieElement.basis(group, g) for g in (x, y, z))
    return (
        bracket(bracket(dx, dy, sign), dz, sign)
        + bracket(bracket(dy, dz, sign), dx, sign)
        + bracket(bracket(dz, dx, sign), dy, sign)
    )


def module_axiom_defect(
    group: GroupSpec,
    alpha: Scalar,
    beta: Scalar,
    x: GroupElement,
    y: GroupElement,
    z: GroupElement,
    sign: str = SIGN_YX,
) -> Scalar:
    """Defect of (d_x d_y - d_y d_x) v_z = [d_x, d_y] v_z on the basis family
    v_z with action d_x v_y = (alpha + y + x beta) v_{x+y}.

    Returns the coefficient discrepancy on v_{x+y+z} as an exact polynomial;
    the central part contributes nothing because c kills the family.
    """
    alpha, beta = exact(alpha), exact(beta)

    def coeff(a: GroupElement, b: GroupElement) -> Scalar:
        return alpha + group.embed(b) + group.embed(a) * beta

    lhs = coeff(y, z) * coeff(x, add(y, z)) - coeff(x, z) * coeff(y, add(x, z))
    bcoeff, _, _ = basis_bracket(group, x, y, sign)
    rhs = bcoeff * coeff(add(x, y), z)
    return sympy.expand(lhs - rhs)


def bracket_closure(
    group: GroupSpec, generators: set[GroupElement], depth: int
) -> set[GroupElement]:
    """Indices reachable from {d_g} by at most ``depth`` nested brackets.

    Reachability uses exact coefficients: a bracket with vanishing scalar
    coefficient does not contribute its index.  Monotone in depth.
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    reached = {tuple(g) for g in generators}
    for _ in range(depth):
        new = set()
        for x in reached:
            for y in reached:
                coeff, target, _ = basis_bracket(group, x, y)
                if target not in reached and not is_zero(coeff):
                    new.add(target)
        if not new:
            break
        reached |= new
    return reached


@dataclass(frozen=True)
class TriangularDecomposition:
    """Splits G into positive, zero, and negative parts along an order."""

    order: Order

    def side(self, x: GroupElement) -> str:
        s = self.order.sign_of(x)
        if s == GREATER:
            return "+"
        if s == LESS:
            return "-"
        return "0"
