"""Window probes and the classification dispatcher.

A ``WindowView`` is a uniform picture of a finite window of any weight
module built by this package (or supplied by a user): weight offsets,
dimensions, an exact action callback on one-dimensional weight spaces, and
provenance.  The probes answer finitely checkable questions: which window
vectors are annihilated by a positive cone (generalized-highest-weight
detection), how the support behaves along rays, whether dimensions look
uniformly bounded, and which of the two constructed families reproduces
the window.  Window verdicts are certificates about the window, never
theorems about the infinite module; inconclusive outcomes are reported as
such rather than guessed.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field
from typing import Callable, Hashable

import sympy

from .induced import InducedModule, InducedWindow, QuotientWeightTable
from .intermediate import SubquotientModule
from .lattice import (
    GroupElement,
    GroupSpec,
    add,
    complement_basis,
    is_zero_elem,
    neg,
    smul,
    sub,
    zero,
)
from .linalg import frac_rank, rank_exact_or_bound, symbolic_rank
from .orders import GREATER
from .scalars import ONE, ZERO, Scalar, exact, is_zero
from .verma import VermaModule, VermaWindow

ActFn = Callable[[GroupElement, Hashable], dict | None]


@dataclass
class WindowView:
    """A finite window of a weight module, uniform across constructions.

    ``offsets`` maps weight keys to group elements; the scalar weight of a
    key is ``base_weight + embed(offset)``.  ``act_fn(x, key)`` returns the
    exact action of d_x on the basis vector of a one-dimensional weight
    space as {target_key_offset: coefficient} over *offsets* (keys may fall
    outside the window), or None when the action is not available there.
    """

    group: GroupSpec
    base_weight: Scalar
    offsets: dict[Hashable, GroupElement]
    dims: dict[Hashable, int]
    central: Scalar
    provenance: str
    act_fn: ActFn
    covered_fn: Callable[[GroupElement], bool]
    dim_status: dict[Hashable, str] = field(default_factory=dict)

    def weight_expr(self, key: Hashable) -> Scalar:
        return sympy.expand(self.base_weight + self.group.embed(self.offsets[key]))

    def max_dim(self) -> int:
        return max(self.dims.values(), default=0)

    def keys_sorted(self):
        return sorted(self.offsets, key=lambda k: self.offsets[k])

    def offset_index(self) -> dict[GroupElement, Hashable]:
        return {off: key for key, off in self.offsets.items()}


# ---------------------------------------------------------------------------
# view adapters


def intermediate_window_view(module: SubquotientModule, radius: int) -> WindowView:
    offsets = {y: y for y in module.indices_box(radius)}
    dims = {y: 1 for y in offsets}

    def act(x, key):
        hit = module.action(x, key)
        if hit is None:
            return {}
        target, coeff = hit
        return {target: coeff}

    def covered(off):
        return all(abs(v) <= radius for v in off)

    return WindowView(
        group=module.group,
        base_weight=module.alpha,
        offsets=offsets,
        dims=dims,
        central=ZERO,
        provenance="intermediate",
        act_fn=act,
        covered_fn=covered,
    )


def induced_window_view(
    module: InducedModule, window: InducedWindow, table: QuotientWeightTable
) -> WindowView:
    offsets = {}
    dims = {}
    status = {}
    for row in table.rows:
        key = (row.level, row.g0_part)
        offsets[key] = module.split.unproject(-row.level, row.g0_part)
        dims[key] = row.dim_lower
        status[key] = row.status
    # drop zero-dimensional keys from the support picture but keep coverage
    covered_keys = set(offsets)
    offsets = {k: v for k, v in offsets.items() if dims[k] > 0}
    dims = {k: v for k, v in dims.items() if v > 0}

    def act(x, key):
        level, m = key
        if level != 0:
            return None  # quotient action below the top level is not exposed
        lvl, a = module.split.project(x)
        if lvl > 0:
            return {}
        if lvl < 0:
            return None  # leaves the exposed top level
        hit = module.top.action(a, m)
        if hit is None:
            return {}
        target, coeff = hit
        return {(0, target): coeff}

    def covered(off):
        try:
            lvl, a = module.split.project(off)
        except ValueError:
            return False
        return (0, tuple(a)) in covered_keys or (-lvl, tuple(a)) in covered_keys

    return WindowView(
        group=module.group,
        base_weight=module.alpha,
        offsets=offsets,
        dims=dims,
        central=ZERO,
        provenance="induced",
        act_fn=act,
        covered_fn=covered,
        dim_status=status,
    )


def verma_window_view(module: VermaModule, window: VermaWindow) -> WindowView:
    from collections import Counter

    offsets = {}
    counts: dict = {}
    for label in window.labels(module.order):
        total = zero(module.group.rank)
        for p in label:
            total = add(total, p)
        off = neg(total)
        offsets[off] = off
        counts[off] = counts.get(off, 0) + 1

    vac = zero(module.group.rank)

    def act(x, key):
        if key != vac:
            return None
        out = {}
        for label, coeff in module.act_basis(x, ()).items():
            total = zero(module.group.rank)
            for p in label:
                total = add(total, p)
            out[neg(total)] = coeff
        return out

    window_offsets = set(offsets)

    return WindowView(
        group=module.group,
        base_weight=module.h,
        offsets=offsets,
        dims=counts,
        central=module.cdot,
        provenance="verma-window-counts",
        act_fn=act,
        covered_fn=lambda off: off in window_offsets,
    )


def trivial_view(group: GroupSpec) -> WindowView:
    z = zero(group.rank)
    return WindowView(
        group=group,
        base_weight=ZERO,
        offsets={z: z},
        dims={z: 1},
        central=ZERO,
        provenance="trivial",
        act_fn=lambda x, key: {},
        covered_fn=lambda off: True,
    )


# ---------------------------------------------------------------------------
# GHW detection


@dataclass(frozen=True)
class GhwVector:
    key: Hashable
    weight: Scalar
    verified_on: int
    exact: bool


def cone_elements(basis: list[GroupElement], radius: int):
    """Nonzero nonnegative integer combinations with coefficient sum <= radius."""
    n = len(basis)
    for coeffs in itertools.product(range(radius + 1), repeat=n):
        if all(c == 0 for c in coeffs) or sum(coeffs) > radius:
            continue
        x = zero(len(basis[0]))
        for c, g in zip(coeffs, basis):
            x = add(x, smul(c, g))
        yield x


def find_ghw_vectors(
    view: WindowView,
    basis: list[GroupElement],
    cone_radius: int = 3,
    rng: random.Random | None = None,
    verify_samples: int = 10,
) -> list[GhwVector]:
    """Window vectors annihilated by every probed d_x, x in the positive cone.

    Only one-dimensional weight spaces with an available action are probed;
    each hit is re-verified on random cone elements.  All checks are exact.
    """
    rng = rng or random.Random(0)
    cone = list(cone_elements(basis, cone_radius))
    hits = []
    for key in view.keys_sorted():
        if view.dims[key] != 1:
            continue
        probe = view.act_fn(cone[0], key) if cone else None
        if probe is None:
            continue
        annihilated = True
        for x in cone:
            out = view.act_fn(x, key)
            if out is None or any(not is_zero(c) for c in out.values()):
                annihilated = False
                break
        if not annihilated:
            continue
        extra = [rng.choice(cone) for _ in range(verify_samples)]
        ok = all(
            not any(not is_zero(c) for c in (view.act_fn(x, key) or {}).values())
            for x in extra
        )
        if ok:
            hits.append(GhwVector(key, view.weight_expr(key), len(cone) + verify_samples, True))
    return hits


# ---------------------------------------------------------------------------
# support rays


@dataclass(frozen=True)
class RayReport:
    points: dict[int, str]  # x -> "in" | "absent" | "unknown"
    downward_closed: bool | None
    inconclusive: bool


def support_ray(view: WindowView, base_key: Hashable, direction: GroupElement, span: int) -> RayReport:
    """Membership of base + x*direction in the window support, x in [-span, span].

    ``downward_closed`` reports whether the observed set is of the form
    (everything below some cut) within the covered range; unknown tails and
    unstabilized dimensions make the verdict inconclusive rather than wrong.
    """
    index = view.offset_index()
    base_off = view.offsets[base_key]
    points: dict[int, str] = {}
    inconclusive = False
    for x in range(-span, span + 1):
        off = add(base_off, smul(x, direction))
        key = index.get(off)
        if key is not None:
            points[x] = "in"
            if view.dim_status.get(key) not in (None, "exact", "stabilized"):
                inconclusive = True
        elif view.covered_fn(off):
            points[x] = "absent"
        else:
            points[x] = "unknown"
            inconclusive = True
    known = {x: s for x, s in points.items() if s != "unknown"}
    cut = None
    closed = True
    for x in sorted(known):
        if known[x] == "in":
            if cut is not None and cut < x:
                closed = False
        else:
            if cut is None or x < cut:
                cut = x
    return RayReport(points, None if inconclusive and closed else closed, inconclusive)


# ---------------------------------------------------------------------------
# boundedness


@dataclass(frozen=True)
class DichotomyVerdict:
    uniformly_bounded: bool
    bound: int | None = None
    witness_direction: GroupElement | None = None
    witness_dims: tuple[int, ...] = ()
    note: str = ""


def dichotomy_probe(view: WindowView, rays: list[GroupElement] | None = None) -> DichotomyVerdict:
    """Window verdict: a bound N, or a ray with strictly growing dimensions.

    A witness needs at least three strictly increasing dimensions along a
    ray.  This is a statement about the window only; absence of a witness
    never proves boundedness of the infinite module.
    """
    if not view.dims:
        raise ValueError("empty window")
    n = view.group.rank
    if rays is None:
        rays = [r for r in itertools.product((-1, 0, 1), repeat=n) if any(r)]
    index = view.offset_index()
    best = None
    for g in rays:
        for key in view.keys_sorted():
            seq = [view.dims[key]]
            off = view.offsets[key]
            while True:
                off = add(off, g)
                nxt = index.get(off)
                if nxt is None:
                    break
                seq.append(view.dims[nxt])
            run = 1
            for i in range(1, len(seq)):
                run = run + 1 if seq[i] > seq[i - 1] else 1
                if run >= 3:
                    witness = tuple(seq[i - run + 1 : i + 1])
                    if best is None or len(witness) > len(best[1]):
                        best = (g, witness)
    if best is not None:
        return DichotomyVerdict(False, witness_direction=best[0], witness_dims=best[1])
    return DichotomyVerdict(
        True,
        bound=view.max_dim(),
        note="no growth witness in the window; a window verdict, not a theorem",
    )


# ---------------------------------------------------------------------------
# the dispatcher


@dataclass(frozen=True)
class ClassificationVerdict:
    family: str  # "intermediate-series" | "induced" | "unknown"
    alpha: Scalar | None = None
    beta: Scalar | None = None
    b: GroupElement | None = None
    g0_basis: tuple[GroupElement, ...] | None = None
    reason: str = ""
    notes: tuple[str, ...] = ()

    def to_json(self) -> str:
        payload = {
            "family": self.family,
            "alpha": None if self.alpha is None else str(self.alpha),
            "beta": None if self.beta is None else str(self.beta),
            "b": None if self.b is None else list(self.b),
            "g0_basis": None
            if self.g0_basis is None
            else [list(g) for g in self.g0_basis],
            "reason": self.reason,
            "notes": list(self.notes),
        }
        return json.dumps(payload, indent=2, sort_keys=True)


def _recover_affine_action(
    view: WindowView,
    keys: list[Hashable],
    directions: list[GroupElement],
    embed,
) -> tuple[Scalar, Scalar] | None:
    """Fit d_x v = (weight(v) + embed(x) * beta) v' on two independent samples.

    Returns (beta, alpha_representative) or None if no consistent fit.
    """
    samples = []
    for key in keys:
        lam = view.weight_expr(key)
        for x in directions:
            out = view.act_fn(x, key)
            if not out:
                continue
            ((_, coeff),) = out.items()
            beta = sympy.cancel((coeff - lam) / embed(x))
            samples.append((key, x, beta))
            if len(samples) == 2:
                break
        if len(samples) == 2:
            break
    if len(samples) < 2:
        return None
    (_, _, b1), (_, _, b2) = samples
    if not is_zero(b1 - b2):
        return None
    lam0 = view.weight_expr(samples[0][0])
    return sympy.expand(b1), lam0


def classify_module(view: WindowView, rng: random.Random | None = None) -> ClassificationVerdict:
    """Decide which constructed family reproduces the window.

    One-dimensional weight spaces throughout: recover (alpha, beta) from the
    action coefficients (alpha reported modulo the group lattice).  Any
    dimension >= 2: find the support boundary hyperplane, split the group
    along it, and recover the top-level parameters.  Trivial or inconsistent
    windows yield Unknown with a diagnostic.
    """
    rng = rng or random.Random(0)
    if not view.dims:
        return ClassificationVerdict("unknown", reason="empty window")
    group = view.group
    n = group.rank
    unit_dirs = [tuple(int(i == j) for i in range(n)) for j in range(n)]
    dirs = unit_dirs + [neg(u) for u in unit_dirs]

    if view.max_dim() <= 1:
        # trivial-module screen: every probed action vanishes
        probe_keys = view.keys_sorted()[:4]
        any_action = False
        probed = False
        for key in probe_keys:
            for x in dirs:
                out = view.act_fn(x, key)
                if out is None:
                    continue
                probed = True
                if any(not is_zero(c) for c in out.values()):
                    any_action = True
                    break
            if any_action:
                break
        if probed and not any_action and len(view.dims) <= 1:
            return ClassificationVerdict(
                "unknown",
                reason="trivial module excluded: the classification covers nontrivial modules",
            )
        fit = _recover_affine_action(view, view.keys_sorted(), dirs, group.embed)
        if fit is None:
            return ClassificationVerdict(
                "unknown", reason="no two consistent action samples in the window"
            )
        beta, lam0 = fit
        alpha_rep, shift = group.reduce_mod(lam0)
        return ClassificationVerdict(
            "intermediate-series",
            alpha=alpha_rep,
            beta=beta,
            reason="all window weight spaces are one-dimensional",
            notes=(f"alpha reduced modulo the lattice (shift {shift})",),
        )

    # unbounded route: find the boundary functional of the support
    k = _support_boundary_functional(view)
    if k is None:
        return ClassificationVerdict(
            "unknown",
            reason="no boundary hyperplane with a full top slice found in the window",
        )
    t, g0_rows = complement_basis(k)
    m = max(sum(a * b for a, b in zip(k, off)) for off in view.offsets.values())
    slice_keys = [
        key
        for key, off in view.offsets.items()
        if sum(a * b for a, b in zip(k, off)) == m
    ]
    if any(view.dims[key] != 1 for key in slice_keys) or len(slice_keys) < 2:
        return ClassificationVerdict(
            "unknown", reason="top slice is not a family of lines in the window"
        )
    g0_dirs = []
    for row in g0_rows:
        g0_dirs.extend([row, neg(row)])
    slice_sorted = sorted(slice_keys, key=lambda kk: view.offsets[kk])
    fit = _recover_affine_action(view, slice_sorted, g0_dirs, group.embed)
    if fit is None:
        return ClassificationVerdict(
            "unknown", reason="no consistent top-slice action samples"
        )
    beta, lam0 = fit
    g0_spec = GroupSpec(
        max(1, len(g0_rows)),
        symbols=tuple(sympy.Symbol(f"g0c_{i}") for i in range(1, max(1, len(g0_rows)) + 1)),
        embed_values=tuple(group.embed(r) for r in g0_rows) or (sympy.Integer(1),),
    )
    alpha_rep, shift = g0_spec.reduce_mod(lam0)
    return ClassificationVerdict(
        "induced",
        alpha=alpha_rep,
        beta=beta,
        b=t,
        g0_basis=tuple(g0_rows),
        reason="window dimensions exceed one; support has a boundary hyperplane",
        notes=(
            f"boundary functional {k}; b normalized to the minimal-norm complement",
            f"alpha reduced modulo the top-level lattice (shift {shift})",
        ),
    )


def _support_boundary_functional(view: WindowView, kmax: int = 3) -> GroupElement | None:
    """A primitive k whose maximal slice has full affine rank and lines only."""
    from math import gcd

    offsets = list(view.offsets.values())
    n = view.group.rank
    best = None
    for k in itertools.product(range(-kmax, kmax + 1), repeat=n):
        if all(v == 0 for v in k):
            continue
        g = 0
        for v in k:
            g = gcd(g, v)
        if g != 1:
            continue
        vals = [sum(a * b for a, b in zip(k, off)) for off in offsets]
        m = max(vals)
        slice_offs = [off for off, v in zip(offsets, vals) if v == m]
        if len(slice_offs) < 2:
            continue
        diffs = [sub(off, slice_offs[0]) for off in slice_offs[1:]]
        from .lattice import hermite_normal_form

        if len(hermite_normal_form(diffs)) != n - 1:
            continue
        slice_keys = [
            key
            for key, off in view.offsets.items()
            if sum(a * b for a, b in zip(k, off)) == m
        ]
        if any(view.dims[key] != 1 for key in slice_keys):
            continue
        score = (len(slice_offs), tuple(-abs(v) for v in k), k)
        if best is None or score > best[0]:
            best = (score, k)
    return best[1] if best else None


# ---------------------------------------------------------------------------
# lowering-family independence (the k-vector families d_{-g}^{k-j} d_{-jg} v)


@dataclass(frozen=True)
class FamilyIndependence:
    k: int
    rank: int
    independent: bool | None  # None = inconclusive (window verdict)
    certified: bool
    vanishing_values: tuple[Scalar, ...]  # k = 1: the functional values
    note: str = ""


def _partitions(n: int):
    def gen(n, mx):
        if n == 0:
            yield ()
            return
        for first in range(min(n, mx), 0, -1):
            for rest in gen(n - first, first):
                yield (first,) + rest

    yield from gen(n, n)


def ray_family_matrix(k: int, weight: Scalar, central: Scalar, step: Scalar):
    """Evaluation matrix of the ray raising words against the family
    {d_{-step}^{k-j} d_{-j step} v : j = 1..k} in the formal highest-weight
    module with d_0 v = weight v, c v = central v, d_{+} v = 0.

    ``step`` is the exact scalar value of the ray generator; rows are
    indexed by partitions of k (the PBW raising words of the ray algebra).
    """
    from .orders import LexOrder

    group = GroupSpec(1, symbols=(sympy.Symbol("ray_step"),), embed_values=(exact(step),))
    module = VermaModule(group, LexOrder(1), central, weight)
    family = []
    for j in range(1, k + 1):
        label = module.sort_label([(1,)] * (k - j) + [(j,)])
        family.append(label)
    rows = []
    for part in _partitions(k):
        word = [(p,) for p in part]
        row = []
        for label in family:
            vec = module.apply_word(word, {label: ONE})
            row.append(sympy.expand(vec.get((), ZERO)))
        rows.append(row)
    return rows, family


def lowering_family_independence(
    module: InducedModule,
    gbar: GroupElement,
    kmax: int,
    top_index: tuple[int, ...],
    rng: random.Random | None = None,
    ray_only: bool = True,
    radius: int = 2,
) -> list[FamilyIndependence]:
    """Exact linear independence of {d_{-g}^{k-j} d_{-jg} v} in the quotient.

    Independence modulo the maximal submodule is certified by a full-rank
    evaluation matrix of raising words (ray words by default, the whole
    window box with ``ray_only=False``).  A certified rank k means
    independent; an exact rank < k on the ray words means the ray probe
    detects a dependence, and the functional values (for k = 1, the single
    vanishing polynomial) are reported.
    """
    rng = rng or random.Random(0)
    lvl_g, a_g = module.split.project(gbar)
    if lvl_g < 1:
        raise ValueError("gbar must have positive level along the splitting")
    if not module.top.valid_index(top_index):
        raise ValueError("top_index is not a basis index of the top level")
    v_label = ((), tuple(top_index))
    reports = []
    for k in range(1, kmax + 1):
        vectors = []
        for j in range(1, k + 1):
            vec = module.act(neg(smul(j, gbar)), {v_label: ONE})
            for _ in range(k - j):
                vec = module.act(neg(gbar), vec)
            vectors.append(vec)
        if ray_only:
            words = [
                tuple(sorted((p * lvl_g, tuple(p * c for c in a_g)) for p in part))
                for part in _partitions(k)
            ]
        else:
            words = module.words_at_level(k * lvl_g, radius)
        rows = []
        for word in words:
            row = []
            for vec in vectors:
                img = module.apply_raising_word(word, vec)
                assert len(img) <= 1
                row.append(next(iter(img.values()), ZERO))
            rows.append(row)
        result = rank_exact_or_bound(rows, rng, symbolic_limit=6)
        values = tuple(sympy.expand(r[0]) for r in rows) if k == 1 else ()
        if result.rank >= k:
            reports.append(
                FamilyIndependence(k, result.rank, True, True, values)
            )
        elif result.exact:
            reports.append(
                FamilyIndependence(
                    k,
                    result.rank,
                    False,
                    True,
                    values,
                    note="dependence detected by the probed raising words",
                )
            )
        else:
            reports.append(
                FamilyIndependence(
                    k, result.rank, None, False, values, note="window-inconclusive"
                )
            )
    return reports
