"""Command-line front end: structured JSON configs in, reproducible reports out.

Subcommands
-----------
``algebra-check``  bracket identity suites (Jacobi, antisymmetry, centrality,
                   rank-one closure, and the module-axiom sign lock).
``build``          construct a module family and emit weight/dimension tables
                   (CSV and/or JSON).
``classify``       build a window view and run the classification dispatcher.
``probe``          run the requested probes (order classification, Verma
                   irreducibility, support shape, boundedness, GHW search,
                   lowering-family independence, reducibility).

Exit codes: 0 success (Unknown verdicts included), 1 property failure,
2 usage or configuration error.  Reports are deterministic for a fixed
config and seed; timing lives in a separate field.  All scalars in configs
are exact strings ("3/4", "alpha + 2*b2"); floats are rejected everywhere.
"""

from __future__ import annotations

import argparse
import json
import pathlib
import random
import sys
import time

import sympy

from . import __version__
from .algebra import (
    SIGN_XY,
    SIGN_YX,
    LieElement,
    bracket,
    jacobi_defect,
    module_axiom_defect,
)
from .classify import (
    classify_module,
    dichotomy_probe,
    find_ghw_vectors,
    induced_window_view,
    intermediate_window_view,
    lowering_family_independence,
    ray_family_matrix,
    trivial_view,
    verma_window_view,
)
from .induced import InducedModule, InducedWindow, SplitGroup
from .intermediate import IntermediateModule, proper_invariant_subset
from .lattice import GroupSpec, add, neg
from .orders import (
    GREATER,
    FunctionalOrder,
    LexOrder,
    OrderError,
    certify_discrete_minimal,
    classify_order,
    dense_witness,
)
from .scalars import (
    ALPHA,
    BETA,
    CDOT,
    H,
    LAMBDA0,
    InexactValueError,
    generator_symbols,
    is_zero,
    parse_quad,
    parse_scalar,
)
from .verma import VermaModule, VermaWindow, irreducibility_probe, label_counts_by_weight

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_CONFIG = 2


class ConfigError(Exception):
    def __init__(self, path: str, message: str):
        super().__init__(f"config.{path}: {message}" if path else f"config: {message}")
        self.path = path


def _reject_floats_json(value, path=""):
    if isinstance(value, float):
        raise ConfigError(path, f"floating point value {value!r}; use exact strings")
    if isinstance(value, dict):
        for k, v in value.items():
            _reject_floats_json(v, f"{path}.{k}" if path else k)
    if isinstance(value, list):
        for i, v in enumerate(value):
            _reject_floats_json(v, f"{path}[{i}]")


def load_config(path: str) -> dict:
    try:
        text = pathlib.Path(path).read_text()
    except OSError as exc:
        raise ConfigError("", f"cannot read {path}: {exc}")
    try:
        cfg = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError("", f"line {exc.lineno}, column {exc.colno}: {exc.msg}")
    if not isinstance(cfg, dict):
        raise ConfigError("", "top level must be an object")
    _reject_floats_json(cfg)
    return cfg


def _require(cfg: dict, path: str, key: str, types, default=None, required=False):
    if key not in cfg:
        if required:
            raise ConfigError(f"{path}.{key}" if path else key, "missing required field")
        return default
    val = cfg[key]
    if types is not None and not isinstance(val, types):
        raise ConfigError(
            f"{path}.{key}" if path else key,
            f"expected {types}, got {type(val).__name__}",
        )
    return val


def build_group(cfg: dict) -> GroupSpec:
    gcfg = _require(cfg, "", "group", dict, default={"rank": 2})
    rank = _require(gcfg, "group", "rank", int, required=True)
    if rank < 1:
        raise ConfigError("group.rank", "must be >= 1")
    names = _require(gcfg, "group", "generators", list, default=None)
    symbols = (
        tuple(sympy.Symbol(n) for n in names) if names else generator_symbols(rank)
    )
    ns = {str(s): s for s in symbols}
    embeds_raw = _require(gcfg, "group", "embed_values", list, default=None)
    embed_values = (
        tuple(parse_scalar(t, ns) for t in embeds_raw) if embeds_raw else tuple(symbols)
    )
    d = _require(gcfg, "group", "d", int, default=2)
    reals_raw = _require(gcfg, "group", "real_values", list, default=None)
    real_values = tuple(parse_quad(t, d) for t in reals_raw) if reals_raw else None
    asserted = bool(_require(gcfg, "group", "assert_independent", bool, default=False))
    try:
        return GroupSpec(
            rank,
            symbols=symbols,
            embed_values=embed_values,
            real_values=real_values,
            independence_asserted=asserted,
        )
    except ValueError as exc:
        raise ConfigError("group", str(exc))


def build_order(cfg: dict, group: GroupSpec):
    ocfg = _require(cfg, "", "order", dict, default={"kind": "lex"})
    kind = _require(ocfg, "order", "kind", str, default="lex")
    if kind == "lex":
        perm = _require(ocfg, "order", "perm", list, default=None)
        pre = _require(ocfg, "order", "pre_transform", list, default=None)
        try:
            return LexOrder(
                group.rank,
                perm=tuple(perm) if perm else None,
                pre_transform=tuple(tuple(r) for r in pre) if pre else None,
            )
        except OrderError as exc:
            raise ConfigError("order", str(exc))
    if kind == "functional":
        d = _require(ocfg, "order", "d", int, default=2)
        weights_raw = _require(ocfg, "order", "weights", list, default=None)
        if weights_raw is None:
            if group.real_values is None:
                raise ConfigError("order.weights", "missing (and group has no real_values)")
            weights = group.real_values
        else:
            weights = tuple(parse_quad(t, d) for t in weights_raw)
        tie = bool(_require(ocfg, "order", "tie_break_lex", bool, default=False))
        try:
            return FunctionalOrder(weights, tie_break_lex=tie)
        except OrderError as exc:
            raise ConfigError("order", str(exc))
    raise ConfigError("order.kind", f"unknown kind {kind!r}")


def scalar_namespace(group: GroupSpec) -> dict:
    ns = {str(s): s for s in group.symbols}
    ns.update(
        {"alpha": ALPHA, "beta": BETA, "h": H, "cdot": CDOT, "Lambda0": LAMBDA0}
    )
    return ns


def _parse_param(mcfg, path, key, ns, default):
    raw = _require(mcfg, path, key, (str, int), default=None)
    if raw is None:
        return default
    try:
        return parse_scalar(str(raw), ns)
    except (ValueError, InexactValueError) as exc:
        raise ConfigError(f"{path}.{key}", str(exc))


def _window_cfg(cfg):
    w = _require(cfg, "", "window", dict, default={})
    return {
        "depth": _require(w, "window", "depth", int, default=2),
        "box": _require(w, "window", "box", int, default=2),
        "radius": _require(w, "window", "radius", int, default=3),
        "max_length": _require(w, "window", "max_length", int, default=3),
        "parts": _require(w, "window", "parts", list, default=None),
    }


_START = time.monotonic()


def _emit(report: dict, out: str | None, name: str) -> None:
    report = dict(report)
    report["timing_ms"] = round(1000 * (time.monotonic() - _START), 3)
    text = json.dumps(report, indent=2, sort_keys=True)
    if out:
        path = pathlib.Path(out)
        path.mkdir(parents=True, exist_ok=True)
        (path / name).write_text(text + "\n")
    else:
        print(text)


# ---------------------------------------------------------------------------
# algebra-check


def _random_elem(rng, rank, span=4):
    return tuple(rng.randint(-span, span) for _ in range(rank))


def cmd_algebra_check(cfg: dict, args) -> int:
    group = build_group(cfg)
    seed = args.seed if args.seed is not None else _require(cfg, "", "seed", int, default=0)
    acfg = _require(cfg, "", "algebra_check", dict, default={})
    triples = _require(acfg, "algebra_check", "triples", int, default=300)
    zero_sum = _require(acfg, "algebra_check", "zero_sum_triples", int, default=60)
    sign = _require(cfg, "", "sign_convention", str, default=SIGN_YX)
    if sign not in (SIGN_YX, SIGN_XY):
        raise ConfigError("sign_convention", f"must be {SIGN_YX!r} or {SIGN_XY!r}")
    rng = random.Random(seed)
    failures = []
    checked = {"jacobi": 0, "antisymmetry": 0, "centrality": 0, "rank_one_closure": 0, "module_axiom": 0}

    for i in range(triples):
        x, y, z = (_random_elem(rng, group.rank) for _ in range(3))
        if i < zero_sum:
            z = neg(add(x, y))
        if not jacobi_defect(group, x, y, z, sign).is_zero():
            failures.append({"suite": "jacobi", "at": [list(x), list(y), list(z)]})
        checked["jacobi"] += 1

    for _ in range(max(50, triples // 4)):
        x, y = _random_elem(rng, group.rank), _random_elem(rng, group.rank)
        u = LieElement.basis(group, x)
        v = LieElement.basis(group, y)
        if not (bracket(u, v, sign) + bracket(v, u, sign)).is_zero():
            failures.append({"suite": "antisymmetry", "at": [list(x), list(y)]})
        checked["antisymmetry"] += 1
        if not bracket(LieElement.center(group), v, sign).is_zero():
            failures.append({"suite": "centrality", "at": [list(y)]})
        checked["centrality"] += 1

    # restriction to {d_{k x0}} + center is closed under the bracket
    for _ in range(25):
        x0 = _random_elem(rng, group.rank, span=2)
        if all(v == 0 for v in x0):
            continue
        k, l = rng.randint(-3, 3), rng.randint(-3, 3)
        res = bracket(
            LieElement.basis(group, tuple(k * v for v in x0)),
            LieElement.basis(group, tuple(l * v for v in x0)),
            sign,
        )
        for idx in res.support():
            ok = any(
                idx == tuple(m * v for v in x0) for m in range(-8, 9)
            )
            if not ok:
                failures.append({"suite": "rank_one_closure", "at": [list(x0), k, l]})
        checked["rank_one_closure"] += 1

    for _ in range(triples // 3):
        x, y, z = (_random_elem(rng, group.rank) for _ in range(3))
        defect = module_axiom_defect(group, ALPHA, BETA, x, y, z, sign)
        if not is_zero(defect):
            failures.append(
                {"suite": "module_axiom", "at": [list(x), list(y), list(z)], "defect": str(defect)}
            )
        checked["module_axiom"] += 1

    report = {
        "command": "algebra-check",
        "version": __version__,
        "job": {"seed": seed, "rank": group.rank, "sign_convention": sign, "triples": triples},
        "results": {
            "checked": checked,
            "failures": failures[:20],
            "failure_count": len(failures),
            "status": "PASS" if not failures else "FAIL",
        },
    }
    _emit(report, args.out, "algebra_check.json")
    return EXIT_OK if not failures else EXIT_FAIL


# ---------------------------------------------------------------------------
# build


def _build_family(cfg: dict, args):
    group = build_group(cfg)
    ns = scalar_namespace(group)
    mcfg = _require(cfg, "", "module", dict, required=True)
    family = _require(mcfg, "module", "family", str, required=True)
    wcfg = _window_cfg(cfg)
    if args.depth is not None:
        wcfg["depth"] = args.depth
    if args.box is not None:
        wcfg["box"] = args.box
    if args.window_parts is not None:
        wcfg["parts"] = json.loads(args.window_parts)
    seed = args.seed if args.seed is not None else _require(cfg, "", "seed", int, default=0)
    rng = random.Random(seed)
    return group, ns, mcfg, family, wcfg, rng, seed


def cmd_build(cfg: dict, args) -> int:
    group, ns, mcfg, family, wcfg, rng, seed = _build_family(cfg, args)
    records = []
    notes = []
    if family == "intermediate":
        alpha = _parse_param(mcfg, "module", "alpha", ns, ALPHA)
        beta = _parse_param(mcfg, "module", "beta", ns, BETA)
        module = IntermediateModule(group, alpha, beta)
        sub = module.subquotient_module()
        rep = module.reducibility()
        notes.append(
            f"reducible: {rep.reducible}"
            + (f" ({rep.witness})" if rep.witness else "")
        )
        notes.append(f"subquotient: {sub.descriptor.kind.value}, support {sub.descriptor.support}")
        for y in sorted(sub.indices_box(wcfg["radius"])):
            records.append(
                {
                    "weight_key": str(sub.weight_of(y)),
                    "level": 0,
                    "dim_lower": 1,
                    "dim_upper": 1,
                    "status": "exact",
                }
            )
    elif family == "verma":
        order = build_order(cfg, group)
        cdot = _parse_param(mcfg, "module", "cdot", ns, CDOT)
        h = _parse_param(mcfg, "module", "h", ns, H)
        module = VermaModule(group, order, cdot, h)
        parts = wcfg["parts"]
        if not parts:
            raise ConfigError("window.parts", "verma builds need explicit window parts")
        window = VermaWindow(tuple(tuple(p) for p in parts), wcfg["max_length"])
        for key, count in sorted(label_counts_by_weight(module, window).items()):
            records.append(
                {
                    "weight_key": str(sympy.sympify(key)),
                    "level": 0,
                    "dim_lower": count,
                    "dim_upper": None,
                    "status": "window-label-count",
                }
            )
        notes.append("verma counts are window label counts (lower bounds)")
    elif family == "induced":
        alpha = _parse_param(mcfg, "module", "alpha", ns, ALPHA)
        beta = _parse_param(mcfg, "module", "beta", ns, BETA)
        split_k = _require(mcfg, "module", "split_k", list, default=None)
        if split_k:
            split = SplitGroup.from_direction(group, tuple(split_k))
        else:
            b = _require(mcfg, "module", "b", list, required=True)
            g0 = _require(mcfg, "module", "g0_basis", list, required=True)
            split = SplitGroup(group, tuple(b), tuple(tuple(r) for r in g0))
        try:
            module = InducedModule(split, alpha, beta)
        except ValueError as exc:
            raise ConfigError("module", str(exc))
        window = InducedWindow(wcfg["depth"], wcfg["box"])
        table = module.quotient_table(window, rng)
        records = table.to_records(module)
        notes.append(f"split: b={list(split.b)}, g0={[list(g) for g in split.g0_basis]}")
    else:
        raise ConfigError("module.family", f"unknown family {family!r}")

    report = {
        "command": "build",
        "version": __version__,
        "job": {"seed": seed, "family": family, "window": {k: v for k, v in wcfg.items()}},
        "results": {"rows": records, "notes": notes},
    }
    _emit(report, args.out, "build.json")
    if args.out:
        path = pathlib.Path(args.out)
        fmt = args.format or "json"
        if fmt in ("json", "both"):
            (path / "table.json").write_text(json.dumps(records, indent=2, sort_keys=True) + "\n")
        if fmt in ("csv", "both"):
            lines = ["weight_key,level,dim_lower,dim_upper,status"]
            for r in records:
                lines.append(
                    f"\"{r['weight_key']}\",{r['level']},{r['dim_lower']},{r['dim_upper']},{r['status']}"
                )
            (path / "table.csv").write_text("\n".join(lines) + "\n")
    return EXIT_OK


# ---------------------------------------------------------------------------
# classify


def _view_from_config(cfg, args):
    group, ns, mcfg, family, wcfg, rng, seed = _build_family(cfg, args)
    if family == "intermediate":
        alpha = _parse_param(mcfg, "module", "alpha", ns, ALPHA)
        beta = _parse_param(mcfg, "module", "beta", ns, BETA)
        sub = IntermediateModule(group, alpha, beta).subquotient_module()
        return intermediate_window_view(sub, wcfg["radius"]), rng, seed, family, None
    if family == "induced":
        alpha = _parse_param(mcfg, "module", "alpha", ns, ALPHA)
        beta = _parse_param(mcfg, "module", "beta", ns, BETA)
        split_k = _require(mcfg, "module", "split_k", list, default=[1] + [0] * (group.rank - 1))
        split = SplitGroup.from_direction(group, tuple(split_k))
        module = InducedModule(split, alpha, beta)
        window = InducedWindow(wcfg["depth"], wcfg["box"])
        table = module.quotient_table(window, rng)
        return induced_window_view(module, window, table), rng, seed, family, module
    if family == "verma":
        order = build_order(cfg, group)
        cdot = _parse_param(mcfg, "module", "cdot", ns, CDOT)
        h = _parse_param(mcfg, "module", "h", ns, H)
        module = VermaModule(group, order, cdot, h)
        parts = wcfg["parts"] or [[1] + [0] * (group.rank - 1)]
        window = VermaWindow(tuple(tuple(p) for p in parts), wcfg["max_length"])
        return verma_window_view(module, window), rng, seed, family, module
    if family == "trivial":
        return trivial_view(group), rng, seed, family, None
    raise ConfigError("module.family", f"unknown family {family!r}")


def cmd_classify(cfg: dict, args) -> int:
    if args.table_file:
        records = json.loads(pathlib.Path(args.table_file).read_text())
        report = {
            "command": "classify",
            "version": __version__,
            "job": {"table_file": args.table_file, "rows": len(records)},
            "results": {
                "verdict": {
                    "family": "unknown",
                    "reason": "table input carries no action callback; dimensions alone "
                    "cannot pin parameters",
                }
            },
        }
        _emit(report, args.out, "classify.json")
        return EXIT_OK
    view, rng, seed, family, _module = _view_from_config(cfg, args)
    verdict = classify_module(view, rng)
    report = {
        "command": "classify",
        "version": __version__,
        "job": {"seed": seed, "family": family},
        "results": {"verdict": json.loads(verdict.to_json())},
    }
    _emit(report, args.out, "classify.json")
    return EXIT_OK


# ---------------------------------------------------------------------------
# probe


def cmd_probe(cfg: dict, args) -> int:
    group = build_group(cfg)
    ns = scalar_namespace(group)
    probes = _require(cfg, "", "probes", list, default=["order-classify"])
    wcfg = _window_cfg(cfg)
    seed = args.seed if args.seed is not None else _require(cfg, "", "seed", int, default=0)
    rng = random.Random(seed)
    results = {}
    failed = False

    for probe in probes:
        if probe == "order-classify":
            order = build_order(cfg, group)
            oc = classify_order(order)
            entry = {"dense": oc.dense}
            if oc.discrete:
                entry["minimal_positive"] = list(oc.minimal_positive)
                entry["box_certificate"] = certify_discrete_minimal(order, oc.minimal_positive, radius=6)
                if not entry["box_certificate"]:
                    failed = True
            else:
                wit = dense_witness(order, _first_positive(order, group.rank), radius=6)
                entry["witness_below_first_positive"] = list(wit) if wit else None
            results[probe] = entry
        elif probe == "irreducibility":
            order = build_order(cfg, group)
            mcfg = _require(cfg, "", "module", dict, default={})
            cdot = _parse_param(mcfg, "module", "cdot", ns, CDOT)
            h = _parse_param(mcfg, "module", "h", ns, H)
            module = VermaModule(group, order, cdot, h)
            parts = wcfg["parts"] or [[1] + [0] * (group.rank - 1)]
            window = VermaWindow(tuple(tuple(p) for p in parts), wcfg["max_length"])
            rep = irreducibility_probe(module, window)
            results[probe] = {
                "order_class": rep.order_class,
                "degenerate": rep.degenerate,
                "witness": [list(rep.witness[0]), str(rep.witness[1])] if rep.witness else None,
                "rank_one_part": list(rep.rank_one_part) if rep.rank_one_part else None,
                "rank_one_gram_dets": [str(d) for d in rep.rank_one_gram_dets or []],
                "note": rep.note,
            }
        elif probe == "reducibility":
            mcfg = _require(cfg, "", "module", dict, default={})
            alpha = _parse_param(mcfg, "module", "alpha", ns, ALPHA)
            beta = _parse_param(mcfg, "module", "beta", ns, BETA)
            module = IntermediateModule(group, alpha, beta)
            rep = module.reducibility()
            window = sorted(group.elements_box(wcfg["radius"]))
            subset = proper_invariant_subset(module, window)
            agree = rep.reducible == (subset is not None)
            if not agree:
                failed = True
            results[probe] = {
                "criterion_reducible": rep.reducible,
                "witness": rep.witness,
                "window_invariant_subset_found": subset is not None,
                "agreement": agree,
            }
        elif probe == "dichotomy":
            view, _, _, family, _ = _view_from_config(cfg, args)
            verdict = dichotomy_probe(view)
            results[probe] = {
                "uniformly_bounded": verdict.uniformly_bounded,
                "bound": verdict.bound,
                "witness_direction": list(verdict.witness_direction)
                if verdict.witness_direction
                else None,
                "witness_dims": list(verdict.witness_dims),
                "note": verdict.note,
            }
        elif probe == "ghw":
            view, _, _, family, module = _view_from_config(cfg, args)
            if family == "induced":
                basis = [module.split.b] + [
                    add(module.split.b, g) for g in module.split.g0_basis
                ]
            else:
                basis = [tuple(int(i == j) for i in range(group.rank)) for j in range(group.rank)]
            hits = find_ghw_vectors(view, basis, cone_radius=3, rng=rng)
            results[probe] = {
                "basis": [list(b) for b in basis],
                "vectors": [{"key": str(h.key), "weight": str(h.weight)} for h in hits],
            }
        elif probe == "lowering-family":
            view, _, _, family, module = _view_from_config(cfg, args)
            if family != "induced":
                raise ConfigError("probes", "lowering-family needs an induced module")
            mcfg = _require(cfg, "", "module", dict, default={})
            kmax = _require(mcfg, "module", "kmax", int, default=3)
            top = tuple(_require(mcfg, "module", "top_index", list, default=[0] * module.split.corank))
            reports = lowering_family_independence(module, module.split.b, kmax, top, rng)
            rows, _ = ray_family_matrix(1, LAMBDA0, CDOT, sympy.Symbol("gbar"))
            results[probe] = {
                "per_k": [
                    {
                        "k": r.k,
                        "rank": r.rank,
                        "independent": r.independent,
                        "certified": r.certified,
                        "vanishing_values": [str(v) for v in r.vanishing_values],
                    }
                    for r in reports
                ],
                "formal_k1_polynomial": str(rows[0][0]),
            }
        elif probe == "support-shape":
            _, _, _, family, module = _view_from_config(cfg, args)
            if family != "induced":
                raise ConfigError("probes", "support-shape needs an induced module")
            window = InducedWindow(wcfg["depth"], wcfg["box"])
            rep = module.support_shape(window, rng)
            if rep.shape == "inconsistent":
                failed = True
            results[probe] = {
                "shape": rep.shape,
                "holes": [list(map(list, h)) if isinstance(h, tuple) else h for h in rep.holes],
                "checked": rep.checked,
                "top_matches": rep.top_matches,
            }
        else:
            raise ConfigError("probes", f"unknown probe {probe!r}")

    report = {
        "command": "probe",
        "version": __version__,
        "job": {"seed": seed, "probes": probes},
        "results": results,
    }
    _emit(report, args.out, "probe.json")
    return EXIT_FAIL if failed else EXIT_OK


def _first_positive(order, rank):
    import itertools as it

    units = [tuple(int(i == j) for i in range(rank)) for j in range(rank)]
    for x in units + [neg(u) for u in units]:
        if order.sign_of(x) == GREATER:
            return x
    for x in it.product(range(-3, 4), repeat=rank):
        if order.sign_of(x) == GREATER:
            return x
    raise ValueError("no positive element in the search box")


# ---------------------------------------------------------------------------


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="virweight",
        description="exact weight-module constructions over higher rank Virasoro algebras",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name, fn in (
        ("algebra-check", cmd_algebra_check),
        ("build", cmd_build),
        ("classify", cmd_classify),
        ("probe", cmd_probe),
    ):
        p = sub.add_parser(name)
        p.add_argument("--config", required=(name != "classify"), help="JSON job config")
        p.add_argument("--out", default=None, help="output directory (default: stdout)")
        p.add_argument("--format", choices=("json", "csv", "both"), default=None)
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--depth", type=int, default=None)
        p.add_argument("--box", type=int, default=None)
        p.add_argument("--window-parts", dest="window_parts", default=None,
                       help="JSON list of parts, e.g. '[[1,0],[0,1]]'")
        if name == "classify":
            p.add_argument("--table-file", dest="table_file", default=None)
        p.set_defaults(fn=fn)
    return parser


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        cfg = load_config(args.config) if args.config else {}
        t0 = time.monotonic()
        code = args.fn(cfg, args)
        _ = time.monotonic() - t0
        return code
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (InexactValueError, OrderError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
