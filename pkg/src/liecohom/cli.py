"""Command-line front end.

Payloads are addressed as ``catalog:<name>`` or ``<file>:<name>`` (a bare
name means the catalog).  Reports are ``key: value`` lines in a fixed
order, Betti tables are ``b0 b1 ... bq``; ``--json`` prints the same
fields as a JSON object.  Exit status: 0 success, 1 validation failure,
2 parse failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import catalog
from .algebra import LieAlgebra, ReductivePair, modular_character, trivial_pair
from .ce import adjoint_module, betti, dual_module, trivial_module
from .errors import LieCohomError, ParseError, UnknownName, ValidationError
from .groups import (
    GroupData,
    GroupElementAd,
    average_projector,
    averaged_cochains,
    det_ad,
    det_ad_decomposition,
    exterior_action,
    fixed_vectors,
    is_normal,
    normal_core,
)
from .linalg import Matrix, format_scalar
from .relative import (
    GKModule,
    duality_check,
    h0_fixed_points,
    relative_betti,
    relative_homology_betti,
)
from .textformat import document_for, kind_of, parse, serialize
from .tischler import FLAG_NAMES, FoliationProfile, PeriodGroup, carriere_profile, is_discrete, q_rank, verdict

COMMANDS = (
    "validate",
    "betti",
    "relative-betti",
    "homology-betti",
    "character",
    "det-ad",
    "decompose-ad",
    "core",
    "average",
    "duality",
    "h0",
    "tischler",
    "verdict",
    "catalog",
)


class Report:
    """Ordered fields; rendered as ``key: value`` lines or JSON."""

    def __init__(self):
        self.fields: list[tuple[str, object]] = []
        self.plain: list[str] = []  # lines printed verbatim before the fields
        self.json_only: set[str] = set()  # fields already shown by a plain line

    def add(self, key: str, value, json_only: bool = False):
        self.fields.append((key, value))
        if json_only:
            self.json_only.add(key)

    def text(self) -> str:
        lines = list(self.plain)
        lines += [f"{k}: {_text(v)}" for k, v in self.fields if k not in self.json_only]
        return "\n".join(lines) + "\n"

    def json(self) -> str:
        return json.dumps({k: _jsonable(v) for k, v in self.fields}, indent=2) + "\n"


def _text(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, Fraction):
        return format_scalar(v)
    if isinstance(v, Matrix):
        return " ".join(",".join(format_scalar(x) for x in row) for row in v.rows)
    if isinstance(v, (tuple, list)):
        return " ".join(_text(x) for x in v)
    if v is None:
        return "none"
    return str(v)


def _jsonable(v):
    if isinstance(v, bool) or v is None or isinstance(v, int):
        return v
    if isinstance(v, Fraction):
        return format_scalar(v)
    if isinstance(v, Matrix):
        return [[format_scalar(x) for x in row] for row in v.rows]
    if isinstance(v, (tuple, list)):
        return [_jsonable(x) for x in v]
    return str(v)


# --- references ----------------------------------------------------------------


def resolve(ref: str):
    """Return ``(payload, elements, document)`` for a reference."""
    source, _, name = ref.rpartition(":")
    if not source or source == "catalog":
        entry = catalog.get(name)
        doc = document_for(entry.name, entry.payload, entry.elements)
        return entry.payload, entry.elements, doc
    try:
        with open(source, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(0, f"cannot read {source}: {exc.strerror}") from None
    doc = parse(text)
    return doc.get(name), doc.elements.get(name, ()), doc


def _pair_of(payload) -> ReductivePair:
    if isinstance(payload, ReductivePair):
        return payload
    if isinstance(payload, LieAlgebra):
        return trivial_pair(payload)
    raise ValidationError(f"expected an algebra or a pair, got a {kind_of(payload)}")


def _gk_module(pair: ReductivePair, ref: str) -> GKModule:
    if ":" in ref:
        payload, _, _ = resolve(ref)
        if not isinstance(payload, GKModule):
            raise ValidationError(f"{ref} is not a module")
        if payload.pair != pair:
            raise ValidationError(f"module {ref} lives over a different pair")
        return payload
    mods = catalog.modules_for(pair)
    if ref not in mods:
        raise UnknownName(f"unknown module {ref!r}; choose from {', '.join(mods)} or give a module reference")
    return mods[ref]


# --- commands ------------------------------------------------------------------


def cmd_validate(args, rep: Report):
    payload, elements, _ = resolve(args.ref)
    kind = kind_of(payload)
    rep.add("status", "ok")
    rep.add("kind", kind)
    if kind == "algebra":
        rep.add("dim", payload.dim)
        rep.add("basis", payload.basis)
    elif kind == "pair":
        rep.add("algebra", payload.algebra.name)
        rep.add("k_dim", payload.k_dim)
        rep.add("p_dim", payload.q)
        rep.add("generators", len(payload.generators))
    elif kind == "module":
        rep.add("dim", payload.dim)
    elif kind == "group":
        rep.add("order", payload.group.order)
        rep.add("subgroup", payload.subgroup)
        rep.add("action_dim", payload.action[0].nrows if payload.action else 0)
    elif kind == "profile":
        for f in FLAG_NAMES:
            rep.add(f, getattr(payload, f))
    elif kind == "periods":
        rep.add("constants", payload.constants)
        rep.add("generators", len(payload.generators))
    if elements:
        rep.add("elements", [e.label for e in elements])


def _betti_report(rep: Report, table, representatives: bool):
    rep.plain.append(str(table))
    rep.add("betti", table.numbers, json_only=True)
    if representatives and table.representatives is not None:
        for r, reps in enumerate(table.representatives):
            rep.add(f"representatives_{r}", [list(v) for v in reps] if reps else "none")


def cmd_betti(args, rep: Report):
    payload, _, _ = resolve(args.ref)
    if isinstance(payload, GKModule):
        g, module = payload.pair.algebra, payload.coefficient
    else:
        g = payload if isinstance(payload, LieAlgebra) else _pair_of(payload).algebra
        if args.module in (None, "trivial"):
            module = trivial_module(g)
        elif args.module == "adjoint":
            module = adjoint_module(g)
        elif args.module == "coadjoint":
            module = dual_module(adjoint_module(g))
        else:
            module = _gk_module(_pair_of(payload), args.module).coefficient
    _betti_report(rep, betti(g, module, representatives=args.representatives), args.representatives)


def _pair_and_module(args):
    payload, _, _ = resolve(args.ref)
    if isinstance(payload, GKModule):
        return payload.pair, payload
    pair = _pair_of(payload)
    return pair, _gk_module(pair, args.module or "trivial")


def cmd_relative_betti(args, rep: Report):
    pair, v = _pair_and_module(args)
    _betti_report(rep, relative_betti(pair, v, representatives=args.representatives), args.representatives)


def cmd_homology_betti(args, rep: Report):
    pair, v = _pair_and_module(args)
    _betti_report(rep, relative_homology_betti(pair, v), False)


def cmd_character(args, rep: Report):
    payload, _, _ = resolve(args.ref)
    g = payload if isinstance(payload, LieAlgebra) else _pair_of(payload).algebra
    chi = modular_character(g)
    rep.add("character", chi.values)
    rep.add("unimodular", chi.is_unimodular)


def _elements_of(payload, elements):
    out = list(elements)
    if isinstance(payload, ReductivePair):
        out += [GroupElementAd(f"generator{i}", m) for i, m in enumerate(payload.generators)]
    return out


def cmd_det_ad(args, rep: Report):
    payload, elements, _ = resolve(args.ref)
    g = payload if isinstance(payload, LieAlgebra) else _pair_of(payload).algebra
    els = _elements_of(payload, elements)
    if not els:
        raise ValidationError("no group elements listed for this payload")
    for e in els:
        d = det_ad(e, g)
        rep.add(f"{e.label}.det", d.det)
        rep.add(f"{e.label}.modular_value", d.modular_value)
        rep.add(f"{e.label}.unimodular", d.unimodular)
        rep.add(f"{e.label}.strongly_unimodular", d.strongly_unimodular)


def cmd_decompose_ad(args, rep: Report):
    payload, elements, _ = resolve(args.ref)
    if not isinstance(payload, ReductivePair):
        raise ValidationError("decompose-ad needs a pair")
    els = _elements_of(payload, elements)
    if not els:
        raise ValidationError("no group elements listed for this pair")
    for e in els:
        d = det_ad_decomposition(payload, e)
        rep.add(f"{e.label}.det_k", d.det_k)
        rep.add(f"{e.label}.det_p", d.det_p)
        rep.add(f"{e.label}.det", d.det)
        rep.add(f"{e.label}.product_ok", d.product_ok)


def _group(args) -> GroupData:
    payload, _, _ = resolve(args.ref)
    if not isinstance(payload, GroupData):
        raise ValidationError(f"{args.ref} is not a group")
    return payload


def cmd_core(args, rep: Report):
    gd = _group(args)
    if not gd.subgroup:
        raise ValidationError("the group section lists no subgroup")
    core = normal_core(gd.group, gd.subgroup)
    rep.add("order", gd.group.order)
    rep.add("subgroup", [gd.group.label(a) for a in gd.subgroup])
    rep.add("core", [gd.group.label(a) for a in core])
    rep.add("core_order", len(core))
    rep.add("core_normal", is_normal(gd.group, core))


def cmd_average(args, rep: Report):
    gd = _group(args)
    if not gd.action:
        raise ValidationError("the group section lists no action")
    mats = exterior_action(gd.action, args.degree) if args.degree is not None else gd.action
    p = average_projector(gd.group, mats)
    fixed = fixed_vectors(mats)
    rep.add("degree", args.degree if args.degree is not None else 1)
    rep.add("projector", p)
    rep.add("rank", p.rank())
    rep.add("idempotent", p @ p == p)
    rep.add("fixes_invariants", all(p @ v == tuple(v) for v in fixed))
    if gd.algebra is not None:
        r = averaged_cochains(gd.algebra, gd.group, gd.action)
        rep.add("cochain_betti", r.full_betti)
        rep.add("invariant_betti", r.invariant_betti)
        rep.add("averaging_commutes_with_d", r.commutes)
        rep.add("restriction_injective", r.injective)


def cmd_duality(args, rep: Report):
    pair, v = _pair_and_module(args)
    r = duality_check(pair, v)
    rep.add("q", r.q)
    rep.add("cohomology", r.cohomology)
    rep.add("twisted_homology_reversed", tuple(reversed(r.twisted_homology)))
    rep.add("degrees_match", r.matches)
    rep.add("top_cohomology_trivial_coefficients", r.top_cohomology_trivial)
    rep.add("h0_dual_twist", r.h0_dual_twist)
    rep.add("corollary_holds", r.corollary_holds)
    rep.add("ok", r.ok)


def cmd_h0(args, rep: Report):
    pair, v = _pair_and_module(args)
    dim, basis = h0_fixed_points(pair, v)
    rep.add("dim", dim)
    rep.add("relative_betti_0", relative_betti(pair, v)[0])
    if args.representatives:
        rep.add("basis", [list(b) for b in basis] if basis else "none")


def _profile_from(args):
    """A profile (with periods) from ``--matrix`` or a reference."""
    if args.matrix:
        rows = [[int(x) for x in row.split(",")] for row in args.matrix]
        report = carriere_profile(rows)
        return report.profile, report
    payload, _, _ = resolve(args.ref)
    if isinstance(payload, PeriodGroup):
        return payload, None
    if not isinstance(payload, FoliationProfile):
        raise ValidationError(f"{args.ref} is neither a profile nor a period group")
    return payload, None


def cmd_tischler(args, rep: Report):
    obj, extra = _profile_from(args)
    periods = obj if isinstance(obj, PeriodGroup) else obj.periods
    if periods is None:
        raise ValidationError("the profile carries no period group")
    if extra is not None:
        rep.add("minimal_polynomial", extra.minimal_polynomial)
        rep.add("modular_function", extra.modular_function)
    d = is_discrete(periods)
    rep.add("constants", periods.constants)
    rep.add("periods", [periods.format_period(v) for v in periods.generators] or "none")
    rep.add("q_rank", q_rank(periods))
    rep.add("discrete", d.discrete)
    rep.add("generator", d.generator_text())


def cmd_verdict(args, rep: Report):
    profile, extra = _profile_from(args)
    if not isinstance(profile, FoliationProfile):
        raise ValidationError("verdict needs a profile")
    v = verdict(profile)
    rep.plain.append(v.kind)
    rep.add("verdict", v.kind, json_only=True)
    if extra is not None:
        rep.add("modular_character", extra.modular_character)
        rep.add("modular_function", extra.modular_function)
    for i, line in enumerate(v.certificate):
        rep.add(f"certificate_{i}", line)
    if v.discreteness is not None:
        rep.add("period_generator", v.discreteness.generator_text())


def cmd_catalog(args, rep: Report):
    if not args.ref:
        for e in catalog.entries():
            rep.plain.append(f"{e.name} {e.kind}")
        return
    name = args.ref.rpartition(":")[2]
    entry = catalog.get(name)
    if args.export:
        rep.plain.append(serialize(document_for(entry.name, entry.payload, entry.elements)).rstrip("\n"))
        return
    rep.add("name", entry.name)
    rep.add("kind", entry.kind)
    for key, exp in entry.expected.items():
        rep.add(f"expected.{key}", f"{_text(exp.value)} [{exp.provenance}]")


HANDLERS = {
    "validate": cmd_validate,
    "betti": cmd_betti,
    "relative-betti": cmd_relative_betti,
    "homology-betti": cmd_homology_betti,
    "character": cmd_character,
    "det-ad": cmd_det_ad,
    "decompose-ad": cmd_decompose_ad,
    "core": cmd_core,
    "average": cmd_average,
    "duality": cmd_duality,
    "h0": cmd_h0,
    "tischler": cmd_tischler,
    "verdict": cmd_verdict,
    "catalog": cmd_catalog,
}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="liecohom", description="Exact Lie algebra cohomology and foliation verdicts.")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("ref", nargs="?", help="catalog:<name> or <file>:<name>")
    ap.add_argument("--module", help="trivial, adjoint, coadjoint, twist, dual-twist, or a module reference")
    ap.add_argument("--representatives", action="store_true", help="emit cocycle bases")
    ap.add_argument("--json", action="store_true", help="machine-readable report")
    ap.add_argument("--degree", type=int, help="average: act on this exterior power")
    ap.add_argument("--matrix", nargs=2, metavar="ROW", help="tischler/verdict: build the torus-bundle profile of A")
    ap.add_argument("--export", action="store_true", help="catalog: print the entry in the text format")
    return ap


def run(argv: list[str], out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    if args.ref is None and args.command != "catalog" and not (args.matrix and args.command in ("tischler", "verdict")):
        err.write(f"error: {args.command} needs a reference\n")
        return 2
    rep = Report()
    try:
        HANDLERS[args.command](args, rep)
    except ParseError as exc:
        err.write(f"parse error: {exc}\n")
        return 2
    except ValidationError as exc:
        err.write(f"validation error: {type(exc).__name__}: {exc}\n")
        return 1
    except LieCohomError as exc:
        err.write(f"error: {exc}\n")
        return 1
    except ValueError as exc:
        err.write(f"parse error: {exc}\n")
        return 2
    out.write(rep.json() if args.json else rep.text())
    return 0


def main(argv: list[str] | None = None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
