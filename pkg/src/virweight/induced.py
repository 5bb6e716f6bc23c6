"""Modules induced from an intermediate-series module along a splitting
G = Z b + G0, and their irreducible quotients computed by windowed radical
elimination.

The pre-quotient module has PBW basis: words in the lowering generators
d_{-i b + a} (i >= 1, a in G0) applied to a basis vector of the top-level
module V'(alpha, beta, G0); c acts by zero throughout.  Every weight space
of the pre-quotient is infinite dimensional (the G0 parts of the letters
are unconstrained), so dimensions of the irreducible quotient are reported
as certified lower bounds over growing coordinate boxes together with the
(2i+1)!! upper bound, with a Stabilized flag when two successive boxes
agree.

A vector of b-level -i lies in the maximal proper submodule iff every pure
raising word of b-degree i maps it to zero in the top level: the top level
is an irreducible module for the level-zero subalgebra with one-dimensional
weight spaces, so any vector that survives into it regenerates everything.
Ranks of the resulting evaluation matrices are certified lower bounds for
the quotient dimensions.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
import random
from dataclasses import dataclass, field
from fractions import Fraction

import sympy

from .algebra import SIGN_YX, basis_bracket
from .intermediate import IntermediateModule, SubquotientKind, SubquotientModule
from .lattice import (
    GroupElement,
    GroupSpec,
    add,
    int_det,
    int_inverse,
    is_zero_elem,
    neg,
    smul,
    sub,
    zero,
)
from .linalg import RankResult, frac_rank, rank_exact_or_bound
from .scalars import ONE, ZERO, Scalar, exact, is_zero


def _rational_matrix(rows) -> list[list[Fraction]]:
    out = []
    for row in rows:
        new = []
        for e in row:
            r = sympy.Rational(e)
            new.append(Fraction(int(r.p), int(r.q)))
        out.append(new)
    return out

Letter = tuple[int, tuple[int, ...]]  # (depth i >= 1, G0 coordinates a)
Word = tuple[Letter, ...]
InducedLabel = tuple[Word, tuple[int, ...]]  # (lowering word, top index)


def double_factorial_odd(i: int) -> int:
    """(2i + 1)!!"""
    out = 1
    for k in range(1, 2 * i + 2, 2):
        out *= k
    return out


@dataclass(frozen=True)
class SplitGroup:
    """A splitting G = Z b + G0 with exact coordinate projections."""

    group: GroupSpec
    b: GroupElement
    g0_basis: tuple[GroupElement, ...]

    def __post_init__(self):
        rows = [list(self.b)] + [list(g) for g in self.g0_basis]
        if len(rows) != self.group.rank:
            raise ValueError("splitting must have full rank")
        det = int_det(rows)
        if abs(det) != 1:
            raise ValueError(
                f"not a splitting: [b; G0 basis] has determinant {det} (b in G0?)"
            )
        object.__setattr__(self, "_inv", tuple(tuple(r) for r in int_inverse(rows)))

    @classmethod
    def from_direction(cls, group: GroupSpec, k: GroupElement) -> "SplitGroup":
        """Split along the hyperplane functional k (gcd 1): b is the
        minimal-norm vector with k . b = 1 and G0 its annihilator."""
        from .lattice import complement_basis

        t, g0 = complement_basis(k)
        return cls(group, t, tuple(g0))

    @property
    def corank(self) -> int:
        return self.group.rank - 1

    def project(self, x: GroupElement) -> tuple[int, tuple[int, ...]]:
        """Coordinates (level, a) with x = level * b + sum a_j g_j."""
        inv = self._inv
        n = self.group.rank
        coords = []
        for j in range(n):
            v = sum(Fraction(x[i]) * inv[i][j] for i in range(n))
            if v.denominator != 1:
                raise ValueError(f"{x} is not in the lattice of the splitting")
            coords.append(int(v))
        return coords[0], tuple(coords[1:])

    def unproject(self, level: int, a: tuple[int, ...]) -> GroupElement:
        x = smul(level, self.b)
        for c, g in zip(a, self.g0_basis):
            x = add(x, smul(c, g))
        return x

    def g0_group(self) -> GroupSpec:
        """G0 as a group in its own right; generators embed as the ambient
        embeddings of the basis vectors."""
        values = tuple(self.group.embed(g) for g in self.g0_basis)
        syms = tuple(sympy.Symbol(f"g0_{i}") for i in range(1, self.corank + 1))
        return GroupSpec(self.corank, symbols=syms, embed_values=values)


@dataclass(frozen=True)
class InducedWindow:
    """Finite enumeration bounds: max total depth and a G0 coordinate box."""

    depth: int
    box_radius: int

    def box(self, corank: int):
        return itertools.product(
            range(-self.box_radius, self.box_radius + 1), repeat=corank
        )


class InducedModule:
    """The induced module and its windowed irreducible-quotient tables."""

    def __init__(self, split: SplitGroup, alpha, beta, sign: str = SIGN_YX):
        self.split = split
        self.group = split.group
        self.g0 = split.g0_group()
        self.top = IntermediateModule(self.g0, alpha, beta).subquotient_module()
        self.alpha = self.top.alpha
        self.beta = self.top.beta
        self.sign = sign
        self._act_cache: dict = {}
        self._clones: list["InducedModule"] | None = None

    # -- parameter specialization ----------------------------------------------

    def free_symbols(self) -> set:
        syms = set(self.alpha.free_symbols) | set(self.beta.free_symbols)
        for v in self.group.embed_values:
            syms |= v.free_symbols
        return syms

    def is_rational(self) -> bool:
        return not self.free_symbols()

    def specialized_clone(self, point: dict) -> "InducedModule":
        """The same construction with parameters evaluated at a rational point.

        Every engine operation is polynomial in the parameters, so the clone
        computes exactly the evaluation of whatever the symbolic module
        computes; ranks over the clone are certified lower bounds for the
        symbolic ranks.  The clone must realize the same subquotient kind at
        the top level (checked), otherwise it is a different module.
        """
        values = tuple(sympy.expand(v.subs(point)) for v in self.group.embed_values)
        group = GroupSpec(self.group.rank, symbols=self.group.symbols, embed_values=values)
        split = SplitGroup(group, self.split.b, self.split.g0_basis)
        clone = InducedModule(
            split,
            sympy.expand(self.alpha.subs(point)),
            sympy.expand(self.beta.subs(point)),
            self.sign,
        )
        if clone.top.descriptor.kind is not self.top.descriptor.kind:
            raise ValueError("specialization point changes the top-level structure")
        return clone

    def _specialized_clones(self, rng: random.Random, count: int = 2) -> list["InducedModule"]:
        if self._clones is None:
            from .linalg import random_rational_point

            clones = []
            syms = sorted(self.free_symbols(), key=str)
            attempts = 0
            while len(clones) < count and attempts < 20:
                attempts += 1
                point = random_rational_point(syms, rng)
                try:
                    clones.append(self.specialized_clone(point))
                except ValueError:
                    continue
            if len(clones) < count:
                raise RuntimeError("could not find admissible specialization points")
            self._clones = clones
        return self._clones

    # -- gradings ------------------------------------------------------------

    def label_level(self, label: InducedLabel) -> int:
        word, _ = label
        return sum(i for i, _ in word)

    def label_g0_total(self, label: InducedLabel) -> tuple[int, ...]:
        word, top = label
        total = list(top)
        for _, a in word:
            for j, v in enumerate(a):
                total[j] += v
        return tuple(total)

    def weight_of(self, label: InducedLabel) -> Scalar:
        lvl = self.label_level(label)
        m = self.label_g0_total(label)
        return sympy.expand(
            self.alpha
            + self.g0.embed(m)
            - lvl * self.group.embed(self.split.b)
        )

    def weight_expr(self, level: int, m: tuple[int, ...]) -> Scalar:
        return sympy.expand(
            self.alpha + self.g0.embed(m) - level * self.group.embed(self.split.b)
        )

    # -- straightened action ---------------------------------------------------

    def act_basis(self, x: GroupElement, label: InducedLabel) -> dict[InducedLabel, Scalar]:
        key = (tuple(x), label)
        hit = self._act_cache.get(key)
        if hit is not None:
            return hit
        res = self._act_basis_impl(tuple(x), label)
        self._act_cache[key] = res
        return res

    def _act_basis_impl(self, x: GroupElement, label: InducedLabel) -> dict[InducedLabel, Scalar]:
        lvl, a = self.split.project(x)
        word, top = label
        if not word:
            if lvl > 0:
                return {}
            if lvl == 0:
                hit = self.top.action(a, top)
                if hit is None:
                    return {}
                target, coeff = hit
                return {((), target): coeff}
            letter = (-lvl, a)
            return {((letter,) + word, top): ONE}
        head = word[0]
        rest: InducedLabel = (word[1:], top)
        if lvl < 0 and (-lvl, a) <= head:
            return {(((-lvl, a),) + word, top): ONE}
        g_head = self.split.unproject(-head[0], head[1])
        out: dict[InducedLabel, Scalar] = {}
        for lbl, c in self.act_basis(x, rest).items():
            for lbl2, c2 in self.act_basis(g_head, lbl).items():
                cur = out.get(lbl2)
                out[lbl2] = c * c2 if cur is None else cur + c * c2
        coeff, target, _central = basis_bracket(self.group, x, g_head, self.sign)
        # the central term never contributes: c acts by zero on the top level
        if not is_zero(coeff):
            for lbl, c in self.act_basis(target, rest).items():
                cur = out.get(lbl)
                out[lbl] = coeff * c if cur is None else cur + coeff * c
        return {k: v for k, v in ((k, sympy.expand(v)) for k, v in out.items()) if not is_zero(v)}

    def act(self, x: GroupElement, vector: dict[InducedLabel, Scalar]) -> dict[InducedLabel, Scalar]:
        out: dict[InducedLabel, Scalar] = {}
        for label, c in vector.items():
            for lbl, c2 in self.act_basis(x, label).items():
                cur = out.get(lbl)
                out[lbl] = c * c2 if cur is None else cur + c * c2
        return {k: v for k, v in ((k, sympy.expand(v)) for k, v in out.items()) if not is_zero(v)}

    def apply_raising_word(self, word: Word, vector: dict[InducedLabel, Scalar]) -> dict[InducedLabel, Scalar]:
        """Apply the product of d_{+i b + a} over the word, rightmost first."""
        vec = vector
        for i, a in reversed(word):
            vec = self.act(self.split.unproject(i, a), vec)
            if not vec:
                break
        return vec

    # -- window enumeration ------------------------------------------------------

    def letters(self, max_depth: int, radius: int, raising: bool = False):
        out = []
        for i in range(1, max_depth + 1):
            for a in itertools.product(range(-radius, radius + 1), repeat=self.split.corank):
                out.append((i, a))
        return sorted(out)

    def words_at_level(self, level: int, radius: int) -> list[Word]:
        """Canonical (sorted) words with total depth = level, parts in the box."""
        alphabet = self.letters(level, radius)
        words: list[Word] = []

        def extend(prefix: list[Letter], start: int, remaining: int):
            if remaining == 0:
                words.append(tuple(prefix))
                return
            for idx in range(start, len(alphabet)):
                letter = alphabet[idx]
                if letter[0] > remaining:
                    continue
                prefix.append(letter)
                extend(prefix, idx, remaining - letter[0])
                prefix.pop()

        extend([], 0, level)
        return words

    def labels_at(self, level: int, m_total: tuple[int, ...], radius: int) -> list[InducedLabel]:
        """Window labels with the given b-level and total G0 part."""
        labels = []
        for word in self.words_at_level(level, radius):
            shift = [0] * self.split.corank
            for _, a in word:
                for j, v in enumerate(a):
                    shift[j] += v
            top = tuple(m - s for m, s in zip(m_total, shift))
            if all(abs(t) <= radius for t in top) and self.top.valid_index(top):
                labels.append((word, top))
        return labels

    def top_labels(self, radius: int) -> list[InducedLabel]:
        return [((), m) for m in self.window_tops(radius)]

    def window_tops(self, radius: int):
        return [
            m
            for m in itertools.product(
                range(-radius, radius + 1), repeat=self.split.corank
            )
            if self.top.valid_index(m)
        ]

    # -- radical elimination -------------------------------------------------------

    def functional_matrix(
        self, level: int, m_total: tuple[int, ...], radius: int
    ) -> tuple[list[list[Scalar]], list[InducedLabel], list[Word]]:
        """Evaluation matrix of all window raising words against all window
        labels at one weight; entry = image coefficient in the top level."""
        labels = self.labels_at(level, m_total, radius)
        words = []
        target_cap = 2 * radius + 1
        for word in self.words_at_level(level, radius):
            shift = [0] * self.split.corank
            for _, a in word:
                for j, v in enumerate(a):
                    shift[j] += v
            target = tuple(m + s for m, s in zip(m_total, shift))
            if all(abs(t) <= target_cap for t in target):
                words.append((word, target))
        matrix = []
        for word, target in words:
            row = []
            tkey = ((), target)
            for label in labels:
                img = self.apply_raising_word(word, {label: ONE})
                assert all(k == tkey for k in img), "raising image left its weight line"
                row.append(img.get(tkey, ZERO))
            matrix.append(row)
        return matrix, labels, [w for w, _ in words]

    def quotient_dim(
        self, level: int, m_total: tuple[int, ...], radius: int, rng: random.Random
    ) -> RankResult:
        """Certified lower bound (often exact) for dim of the quotient
        weight space at b-level -level and G0 part m_total.

        Rational parameters: the rank is exact over Q.  Symbolic parameters:
        small windows get the exact symbolic rank; larger ones are certified
        by running the whole computation at random rational points (rank can
        only drop under evaluation, so the maximum observed is a lower bound).
        """
        if level == 0:
            ok = self.top.valid_index(m_total)
            return RankResult(1 if ok else 0, True, "top-level")
        labels = self.labels_at(level, m_total, radius)
        if not labels:
            return RankResult(0, True, "empty")
        if self.is_rational():
            matrix, _, _ = self.functional_matrix(level, m_total, radius)
            return RankResult(frac_rank(_rational_matrix(matrix)), True, "rational")
        if self.split.corank == 1 and len(labels) <= 9 and level <= 1:
            matrix, _, _ = self.functional_matrix(level, m_total, radius)
            return rank_exact_or_bound(matrix, rng)
        best = 0
        for clone in self._specialized_clones(rng):
            matrix, _, _ = clone.functional_matrix(level, m_total, radius)
            best = max(best, frac_rank(_rational_matrix(matrix)))
        return RankResult(best, False, "specialization")

    def quotient_table(
        self, window: InducedWindow, rng: random.Random, levels: list[int] | None = None
    ) -> "QuotientWeightTable":
        """Dimension table with stabilization flags.

        Each weight is computed at the window radius and at radius - 1; equal
        values mark the row Stabilized.  Lower bounds are asserted monotone
        under the box growth.
        """
        levels = levels if levels is not None else list(range(window.depth + 1))
        rows = []
        r = window.box_radius
        for level in sorted(levels):
            seen = set()
            for m in window.box(self.split.corank):
                if m in seen:
                    continue
                seen.add(m)
                if level == 0:
                    if self.top.valid_index(m):
                        rows.append(
                            WeightRow(level, m, 1, 1, "exact", "top-level")
                        )
                    continue
                cur = self.quotient_dim(level, m, r, rng)
                prev = self.quotient_dim(level, m, r - 1, rng) if r >= 1 else None
                status = "unstabilized"
                if prev is not None:
                    if prev.rank > cur.rank:
                        raise AssertionError(
                            f"dimension lower bound dropped under box growth at {(level, m)}"
                        )
                    if prev.rank == cur.rank:
                        status = "stabilized"
                upper = double_factorial_odd(level)
                if cur.rank > upper:
                    raise AssertionError(
                        f"computed dimension {cur.rank} exceeds bound {upper} at {(level, m)}"
                    )
                rows.append(WeightRow(level, m, cur.rank, upper, status, cur.method))
        return QuotientWeightTable(tuple(rows), window)

    def stabilized_dim(
        self,
        level: int,
        m_total: tuple[int, ...],
        rng: random.Random,
        max_radius: int = 4,
    ) -> tuple[int, int, bool]:
        """Grow the box until two consecutive radii agree.

        Returns (dim, radius at stabilization, stabilized?).
        """
        prev = None
        for r in range(1, max_radius + 1):
            cur = self.quotient_dim(level, m_total, r, rng).rank
            if prev is not None:
                if cur < prev:
                    raise AssertionError("dimension lower bound dropped under box growth")
                if cur == prev:
                    return cur, r, True
            prev = cur
        return prev, max_radius, False

    # -- support ----------------------------------------------------------------

    def support_shape(self, window: InducedWindow, rng: random.Random) -> "SupportReport":
        """Check the window support against the two global shapes.

        Level 0 must match the top module's support (full coset or
        punctured); every deeper window weight must be present, i.e. have a
        certified nonzero quotient dimension.

        The interior box (radius - 1) is probed so that every weight has a
        full complement of labels and raising words available.
        """
        r = window.box_radius
        probe_r = max(1, r - 1)
        holes = []
        present = []
        for level in range(1, window.depth + 1):
            for m in itertools.product(
                range(-probe_r, probe_r + 1), repeat=self.split.corank
            ):
                if self._has_nonzero_functional(level, m, r):
                    present.append((level, m))
                else:
                    holes.append((level, m))
        top_kind = self.top.descriptor.kind
        shape = "coset-family" if top_kind is SubquotientKind.WHOLE else "punctured-family"
        top_ok = True
        for m in itertools.product(range(-probe_r, probe_r + 1), repeat=self.split.corank):
            expected = self.top.valid_index(m)
            if expected != (self.quotient_dim(0, m, r, rng).rank == 1):
                top_ok = False
        return SupportReport(
            shape=shape if (not holes and top_ok) else "inconsistent",
            holes=tuple(holes),
            checked=len(present) + len(holes),
            top_matches=top_ok,
        )

    def _has_nonzero_functional(self, level: int, m_total, radius: int) -> bool:
        scans = [self] if self.is_rational() else list(self._specialized_clones(random.Random(0), 1))
        for mod in scans:
            labels = mod.labels_at(level, m_total, radius)
            for word in mod.words_at_level(level, radius):
                for label in labels:
                    img = mod.apply_raising_word(word, {label: ONE})
                    if any(not is_zero(v) for v in img.values()):
                        return True
        if self.is_rational():
            return False
        # a vanishing evaluation does not certify a hole: fall back to symbolic
        labels = self.labels_at(level, m_total, radius)
        for word in self.words_at_level(level, radius):
            for label in labels:
                img = self.apply_raising_word(word, {label: ONE})
                if any(not is_zero(v) for v in img.values()):
                    return True
        return False


@dataclass(frozen=True)
class WeightRow:
    level: int
    g0_part: tuple[int, ...]
    dim_lower: int
    dim_upper: int
    status: str
    method: str


@dataclass(frozen=True)
class QuotientWeightTable:
    rows: tuple[WeightRow, ...]
    window: InducedWindow

    def row(self, level: int, m) -> WeightRow | None:
        for r in self.rows:
            if r.level == level and r.g0_part == tuple(m):
                return r
        return None

    def dims(self) -> dict:
        return {(r.level, r.g0_part): r.dim_lower for r in self.rows}

    def to_records(self, module: InducedModule) -> list[dict]:
        recs = []
        for r in sorted(self.rows, key=lambda r: (r.level, r.g0_part)):
            recs.append(
                {
                    "weight_key": str(module.weight_expr(r.level, r.g0_part)),
                    "level": r.level,
                    "dim_lower": r.dim_lower,
                    "dim_upper": r.dim_upper,
                    "status": r.status,
                }
            )
        return recs

    def to_csv(self, module: InducedModule) -> str:
        buf = io.StringIO()
        writer = csv.DictWriter(
            buf, fieldnames=["weight_key", "level", "dim_lower", "dim_upper", "status"]
        )
        writer.writeheader()
        for rec in self.to_records(module):
            writer.writerow(rec)
        return buf.getvalue()

    def to_json(self, module: InducedModule) -> str:
        return json.dumps(self.to_records(module), indent=2, sort_keys=True)


@dataclass(frozen=True)
class SupportReport:
    shape: str
    holes: tuple
    checked: int
    top_matches: bool
