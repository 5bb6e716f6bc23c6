"""Verma modules relative to a total order on G.

A basis label is the multiset (i_1 <= i_2 <= ... <= i_k) of strictly
positive parts, sorted by the order, representing the vector
d_{-i_1} d_{-i_2} ... d_{-i_k} applied to the generating vector (leftmost
operator outermost).  The action of any d_x is computed by commuting d_x
inward with the bracket and applying, at the vacuum,

    d_i . v = 0 (i > 0),   d_0 . v = h v,   c . v = cdot v.

Straightening is exact: the result of an action is always a finite exact
combination of labels.  Windows (a finite part set and a length cap) only
control which labels a probe enumerates; results landing outside a window
are reported with a Truncated flag rather than silently dropped.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum

import sympy

from .algebra import SIGN_YX, basis_bracket
from .lattice import GroupElement, GroupSpec, add, neg, zero
from .orders import EQUAL, GREATER, LESS, Order, classify_order
from .scalars import ONE, ZERO, Scalar, exact, is_zero

Label = tuple[GroupElement, ...]  # parts ascending in the order


class Exactness(Enum):
    EXACT = "exact"
    TRUNCATED = "truncated"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class ActionResult:
    """A module vector together with its window flag."""

    vector: dict[Label, Scalar]
    flag: Exactness


def _accumulate(out: dict, key, coeff):
    cur = out.get(key)
    out[key] = coeff if cur is None else cur + coeff


def _prune(raw: dict) -> dict:
    out = {}
    for k, v in raw.items():
        v = sympy.expand(v)
        if not is_zero(v):
            out[k] = v
    return out


@dataclass(frozen=True)
class VermaWindow:
    """A finite part set and a length cap; the induced finite label set."""

    parts: tuple[GroupElement, ...]
    max_length: int

    def labels(self, order: Order):
        parts = sorted(self.parts, key=_order_key_fn(order))
        for k in range(self.max_length + 1):
            for combo in itertools.combinations_with_replacement(parts, k):
                yield tuple(combo)

    def contains(self, label: Label) -> bool:
        return len(label) <= self.max_length and all(p in self.parts for p in label)


def _order_key_fn(order: Order):
    import functools

    def cmp(a, b):
        return order.sign_of(tuple(x - y for x, y in zip(a, b)))

    return functools.cmp_to_key(cmp)


class VermaModule:
    """The universal highest-weight module for given (cdot, h) and order."""

    def __init__(self, group: GroupSpec, order: Order, cdot, h, sign: str = SIGN_YX):
        if order.rank != group.rank:
            raise ValueError("order and group rank mismatch")
        self.group = group
        self.order = order
        self.cdot = sympy.expand(exact(cdot))
        self.h = sympy.expand(exact(h))
        self.sign = sign
        self._act_cache: dict = {}

    # -- label utilities ---------------------------------------------------

    def sort_label(self, parts) -> Label:
        return tuple(sorted((tuple(p) for p in parts), key=_order_key_fn(self.order)))

    def weight_of(self, label: Label) -> Scalar:
        total = zero(self.group.rank)
        for p in label:
            total = add(total, p)
        return sympy.expand(self.h - self.group.embed(total))

    # -- the straightened action -------------------------------------------

    def act_basis(self, x: GroupElement, label: Label) -> dict[Label, Scalar]:
        """d_x applied to a basis label, as an exact label combination."""
        x = tuple(x)
        key = (x, label)
        hit = self._act_cache.get(key)
        if hit is not None:
            return hit
        res = self._act_basis_impl(x, label)
        self._act_cache[key] = res
        return res

    def _act_basis_impl(self, x: GroupElement, label: Label) -> dict[Label, Scalar]:
        sgn = self.order.sign_of(x)
        if not label:
            if sgn == GREATER:
                return {}
            if sgn == EQUAL:
                return _prune({(): self.h})
            return {(neg(x),): ONE}
        head, rest = label[0], label[1:]
        if sgn == LESS:
            part = neg(x)
            if self.order.sign_of(tuple(h - p for h, p in zip(head, part))) != LESS:
                # part <= head: prepending keeps the label sorted
                return {(part,) + label: ONE}
        # d_x d_{-head} = d_{-head} d_x + [d_x, d_{-head}]
        out: dict[Label, Scalar] = {}
        for lbl, c in self.act_basis(x, rest).items():
            for lbl2, c2 in self.act_basis(neg(head), lbl).items():
                _accumulate(out, lbl2, c * c2)
        coeff, target, central = basis_bracket(self.group, x, neg(head), self.sign)
        if not is_zero(coeff):
            for lbl, c in self.act_basis(target, rest).items():
                _accumulate(out, lbl, coeff * c)
        if central is not None:
            cc = central * self.cdot
            if not is_zero(cc):
                _accumulate(out, rest, cc)
        return _prune(out)

    def act(self, x: GroupElement, vector: dict[Label, Scalar]) -> dict[Label, Scalar]:
        out: dict[Label, Scalar] = {}
        for label, c in vector.items():
            for lbl, c2 in self.act_basis(x, label).items():
                _accumulate(out, lbl, c * c2)
        return _prune(out)

    def act_windowed(self, x: GroupElement, vector: dict[Label, Scalar],
                     window: VermaWindow) -> ActionResult:
        """Exact action plus a flag telling whether it stayed in the window."""
        vec = self.act(x, vector)
        flag = Exactness.EXACT if all(window.contains(l) for l in vec) else Exactness.TRUNCATED
        return ActionResult(vec, flag)

    def apply_word(self, raising_parts, vector: dict[Label, Scalar]) -> dict[Label, Scalar]:
        """Apply the operator product d_{p_1} ... d_{p_m} (rightmost first)."""
        vec = vector
        for p in reversed(list(raising_parts)):
            vec = self.act(p, vec)
            if not vec:
                break
        return vec

    # -- contravariant form --------------------------------------------------

    def gram_entry(self, li: Label, lj: Label) -> Scalar:
        """<u_i v, u_j v> via the antiautomorphism d_x -> d_{-x}.

        Applies the reversed, sign-flipped word of u_i to u_j v and reads
        off the vacuum coefficient; raising never leaves any window.
        """
        vec: dict[Label, Scalar] = {lj: ONE}
        for p in li:  # innermost annihilation first: ascending parts
            vec = self.act(p, vec)
            if not vec:
                return ZERO
        return sympy.expand(vec.get((), ZERO))

    def gram_matrix(self, labels: list[Label]) -> list[list[Scalar]]:
        """Contravariant Gram matrix of labels at one common weight."""
        ws = {sympy.srepr(self.weight_of(l)) for l in labels}
        if len(ws) > 1:
            raise ValueError("labels do not share a weight")
        n = len(labels)
        mat = [[ZERO] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                e = self.gram_entry(labels[i], labels[j])
                mat[i][j] = e
                mat[j][i] = e
        return mat

    def gram_entry_by_levels(self, li: Label, lj: Label) -> Scalar:
        """Same pairing computed by peeling one operator at a time.

        <d_{-a} w, u> = <w, d_a u> recursively, routing the computation
        through the pairings of intermediate weights; an independent
        composition path from :meth:`gram_entry`.
        """
        if not li:
            return ONE if not lj else ZERO
        a, rest = li[0], li[1:]
        moved = self.act(a, {lj: ONE})
        total = ZERO
        for lbl, c in moved.items():
            total = total + c * self.gram_entry_by_levels(rest, lbl)
        return sympy.expand(total)


# ---------------------------------------------------------------------------
# probes


@dataclass(frozen=True)
class NonvacuumClosure:
    """Closure report for the span of positive-length labels."""

    closed: bool
    violations: list
    checked_actions: int


def positive_length_span_closure(
    module: VermaModule, window: VermaWindow, probes: list[GroupElement]
) -> NonvacuumClosure:
    """Check that the span of length >= 1 window labels is invariant.

    At (cdot, h) = (0, 0) this span is a submodule: no action ever escapes
    into the vacuum line.  Violations collect any label/probe pair whose
    image has a nonzero vacuum coefficient (exact, truncation-proof since
    the vacuum coefficient of an exact result is exact).
    """
    violations = []
    checked = 0
    for label in window.labels(module.order):
        if not label:
            continue
        for x in probes:
            vec = module.act_basis(x, label)
            checked += 1
            vac = vec.get((), ZERO)
            if not is_zero(vac):
                violations.append((x, label, vac))
    return NonvacuumClosure(not violations, violations, checked)


@dataclass(frozen=True)
class IrreducibilityReport:
    order_class: str
    degenerate: bool | None = None
    witness: tuple | None = None
    rank_one_part: GroupElement | None = None
    rank_one_gram_dets: list | None = None
    note: str = ""


def singleton_norm(module: VermaModule, x: GroupElement) -> Scalar:
    """<d_{-x} v, d_{-x} v> = -2 x h + (x^3 - x)/12 cdot (x embedded)."""
    if module.order.sign_of(x) != GREATER:
        raise ValueError("x must be positive")
    return module.gram_entry((tuple(x),), (tuple(x),))


def irreducibility_probe(
    module: VermaModule, window: VermaWindow, search: list[GroupElement] | None = None
) -> IrreducibilityReport:
    """Degeneracy/nondegeneracy evidence for the highest-weight module.

    Dense order: at (0,0) every singleton norm vanishes and the
    positive-length span is closed (degenerate); otherwise the probe hunts
    a positive x with nonzero singleton norm.  Discrete order: restrict to
    the rank-one subalgebra at the minimal positive element and report the
    Gram determinants of the first few levels as exact polynomials.
    """
    oc = classify_order(module.order)
    if oc.dense:
        if is_zero(module.cdot) and is_zero(module.h):
            closure = positive_length_span_closure(
                module, window, [p for p in window.parts] + [neg(p) for p in window.parts]
            )
            return IrreducibilityReport(
                "dense",
                degenerate=True,
                note="all singleton norms vanish and the positive-length span is closed"
                if closure.closed
                else "closure violation (unexpected)",
            )
        candidates = search if search is not None else list(window.parts)
        for x in candidates:
            if module.order.sign_of(x) != GREATER:
                continue
            nrm = singleton_norm(module, x)
            if not is_zero(nrm):
                return IrreducibilityReport("dense", degenerate=False, witness=(x, nrm))
        return IrreducibilityReport(
            "dense",
            degenerate=None,
            note="window too small: no nondegeneracy witness found among probes",
        )
    a = oc.minimal_positive
    sub = rank_one_restriction(module, a)
    dets = []
    for level in range(1, window.max_length + 1):
        labels = [
            sub.sort_label([(k,) for k in part]) for part in _partitions(level)
        ]
        mat = sub.gram_matrix(labels)
        dets.append(sympy.expand(sympy.Matrix(mat).det()))
    return IrreducibilityReport(
        "discrete",
        rank_one_part=a,
        rank_one_gram_dets=dets,
        note="irreducibility reduces to the rank-one module at the minimal element",
    )


def rank_one_restriction(module: VermaModule, a: GroupElement) -> VermaModule:
    """The Verma module of the rank-one subalgebra on {d_{ka}} with the
    same highest weight data; generator embeds to embed(a)."""
    from .lattice import GroupSpec as GS
    from .orders import LexOrder

    value = module.group.embed(a)
    sub_group = GS(1, symbols=(sympy.Symbol("t_rank1"),), embed_values=(value,))
    return VermaModule(sub_group, LexOrder(1), module.cdot, module.h, module.sign)


def _partitions(n: int):
    if n == 0:
        yield ()
        return
    def gen(n, mx):
        if n == 0:
            yield ()
            return
        for first in range(min(n, mx), 0, -1):
            for rest in gen(n - first, first):
                yield (first,) + rest
    yield from gen(n, n)


def label_counts_by_weight(module: VermaModule, window: VermaWindow) -> dict:
    """Number of window labels per weight (a lower bound for dimensions)."""
    counts: dict = {}
    for label in window.labels(module.order):
        key = sympy.srepr(module.weight_of(label))
        counts[key] = counts.get(key, 0) + 1
    return counts
