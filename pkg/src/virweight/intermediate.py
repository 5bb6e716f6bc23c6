"""Intermediate-series modules V(alpha, beta, G).

The module has basis {v_y : y in G}, central element acting by zero, and

    d_x v_y = (alpha + y + x beta) v_{x+y}

with x, y embedded into the scalar field.  V is reducible exactly when
alpha lies in (the embedded copy of) G and beta is 0 or 1; in that case the
unique nontrivial irreducible subquotient drops a single line.  All of this
is decided exactly, including for symbolic parameters.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum

import sympy

from .lattice import GroupElement, GroupSpec, add, is_zero_elem, neg, zero
from .scalars import Scalar, exact, is_zero


class SubquotientKind(Enum):
    WHOLE = "whole"
    QUOTIENT_BY_TRIVIAL_LINE = "quotient-by-trivial-line"
    SUBMODULE_MISSING_ZERO = "submodule-missing-zero-index"


@dataclass(frozen=True)
class ReducibilityReport:
    reducible: bool
    shift: GroupElement | None = None  # g with alpha = embed(g) when alpha in G
    witness: str | None = None


@dataclass(frozen=True)
class SubquotientDescriptor:
    """Which subquotient of V(alpha, beta, G) is the nontrivial irreducible one.

    ``support`` is "coset" (all of alpha + G) or "punctured" (G minus the
    index that was dropped, after translating alpha into the lattice).
    ``shift`` records the translation g used to normalize alpha to 0.
    """

    kind: SubquotientKind
    support: str
    shift: GroupElement | None = None


class IntermediateModule:
    """V(alpha, beta, G) with exact symbolic action coefficients."""

    def __init__(self, group: GroupSpec, alpha, beta):
        self.group = group
        self.alpha = sympy.expand(exact(alpha))
        self.beta = sympy.expand(exact(beta))

    def action(self, x: GroupElement, y: GroupElement) -> tuple[GroupElement, Scalar]:
        """Target index and coefficient of d_x v_y."""
        coeff = sympy.expand(
            self.alpha + self.group.embed(y) + self.group.embed(x) * self.beta
        )
        return add(x, y), coeff

    def weight_of(self, y: GroupElement) -> Scalar:
        """d_0 eigenvalue of v_y."""
        return sympy.expand(self.alpha + self.group.embed(y))

    def reducibility(self) -> ReducibilityReport:
        """Reducible iff alpha in G and beta in {0, 1} (decided exactly)."""
        g = self.group.membership(self.alpha)
        if g is None:
            return ReducibilityReport(False)
        if is_zero(self.beta):
            return ReducibilityReport(
                True,
                shift=g,
                witness="the line at index -g (with alpha = embed(g)) is a trivial submodule",
            )
        if is_zero(self.beta - 1):
            return ReducibilityReport(
                True,
                shift=g,
                witness="the span of all v_y with y != -g is a submodule",
            )
        return ReducibilityReport(False, shift=g)

    def irreducible_subquotient(self) -> SubquotientDescriptor:
        """The unique nontrivial irreducible subquotient.

        For reducible V the missing index is translated to 0; a trivial
        one-dimensional piece is never returned.
        """
        rep = self.reducibility()
        if not rep.reducible:
            return SubquotientDescriptor(SubquotientKind.WHOLE, "coset")
        if is_zero(self.beta):
            return SubquotientDescriptor(
                SubquotientKind.QUOTIENT_BY_TRIVIAL_LINE, "punctured", shift=rep.shift
            )
        return SubquotientDescriptor(
            SubquotientKind.SUBMODULE_MISSING_ZERO, "punctured", shift=rep.shift
        )

    def subquotient_module(self) -> "SubquotientModule":
        return SubquotientModule(self)


class SubquotientModule:
    """V'(alpha, beta, G): the nontrivial irreducible subquotient, realized
    on explicit index sets with exact action.

    For the whole-module case indices run over all of G.  In the reducible
    cases alpha is translated to 0 first (indices then exclude 0); the
    quotient case additionally drops any landing on index 0.
    """

    def __init__(self, parent: IntermediateModule):
        self.parent = parent
        self.group = parent.group
        self.descriptor = parent.irreducible_subquotient()
        shift = self.descriptor.shift
        if shift is None:
            # alpha untouched
            self.alpha = parent.alpha
        else:
            # translate: v_y -> v_{y + shift} identifies V(alpha,...) with
            # V(0,...) when alpha = embed(shift)
            self.alpha = sympy.expand(parent.alpha - self.group.embed(shift))
            assert is_zero(self.alpha)
        self.beta = parent.beta
        self.punctured = self.descriptor.kind is not SubquotientKind.WHOLE

    def valid_index(self, y: GroupElement) -> bool:
        return not (self.punctured and is_zero_elem(y))

    def indices_box(self, radius: int):
        for y in self.group.elements_box(radius):
            if self.valid_index(y):
                yield y

    def weight_of(self, y: GroupElement) -> Scalar:
        return sympy.expand(self.alpha + self.group.embed(y))

    def action(self, x: GroupElement, y: GroupElement) -> tuple[GroupElement, Scalar] | None:
        """Exact action on the subquotient; None when the image is dropped.

        In the submodule case the landing coefficient on the missing index
        vanishes identically, so dropping is only ever a no-op there; in the
        quotient case the image is projected away.
        """
        if not self.valid_index(y):
            raise ValueError(f"{y} is not an index of the subquotient")
        target = add(x, y)
        coeff = sympy.expand(self.alpha + self.group.embed(y) + self.group.embed(x) * self.beta)
        if self.punctured and is_zero_elem(target):
            if self.descriptor.kind is SubquotientKind.SUBMODULE_MISSING_ZERO:
                assert is_zero(coeff)
                return None
            return None  # quotient: project the trivial line away
        if is_zero(coeff):
            return None
        return target, coeff

    def uniform_bound(self, window: list[GroupElement]) -> int:
        """Max weight-space dimension over a window: always 1 here."""
        if not window:
            raise ValueError("empty window")
        return 1


def invariant_closure(
    module: IntermediateModule, window: list[GroupElement], start: GroupElement
) -> set[GroupElement]:
    """Smallest window subset containing ``start`` that the action cannot
    leave (within the window): the brute-force reducibility oracle."""
    reach = {start}
    frontier = [start]
    wset = set(window)
    while frontier:
        y = frontier.pop()
        for z in wset:
            if z in reach:
                continue
            x = tuple(a - b for a, b in zip(z, y))
            _, coeff = module.action(x, y)
            if not is_zero(coeff):
                reach.add(z)
                frontier.append(z)
    return reach


def proper_invariant_subset(
    module: IntermediateModule, window: list[GroupElement]
) -> set[GroupElement] | None:
    """A nonzero proper window subset closed under the action, or None.

    Submodules of a weight module with one-dimensional weight spaces are
    spanned by subsets of the basis, so searching subsets is exhaustive.
    """
    full = set(window)
    for start in window:
        closure = invariant_closure(module, window, start)
        if closure != full:
            return closure
    return None
