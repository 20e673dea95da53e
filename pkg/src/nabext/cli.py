"""Command-line front end.

Exit codes: 0 success / affirmative, 1 negative verdict, 2 input error,
3 unknown (witness search inconclusive), 4 internal inconsistency.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import formats
from .abelian import InvalidModuleError, ce_cohomology, classify_abelian, verify_tangent
from .dgla import build_context, is_mc
from .exactla import DimensionError
from .extensions import (
    InvalidCocycleError, SectionError, build_extension, canonical_maps, cocycle_equiv_apply,
    cocycle_to_mc, extension_to_cocycle, find_witness, gauge_cocycle, is_nonabelian_cocycle,
    jacobiator_components, JACOBIATOR_LABELS,
)
from .lie import InvalidAlgebraError, LieAlgebra, adjoint_module, trivial_module, validate_lie

OK, NEGATIVE, INPUT_ERROR, UNKNOWN, INTERNAL = 0, 1, 2, 3, 4


class InputError(Exception):
    pass


def _read(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    try:
        return formats.loads(text)
    except formats.FormatError as exc:
        raise InputError(f"{path}: {exc}") from None


def _load(path: str, parse, *args):
    data = _read(path)
    try:
        return parse(data, *args)
    except (formats.FormatError, DimensionError, ValueError) as exc:
        raise InputError(f"{path}: {exc}") from None


def _algebra(path: str) -> LieAlgebra:
    return _load(path, formats.algebra_from_json)


def _lie(path: str) -> LieAlgebra:
    a = _algebra(path)
    rep = validate_lie(a)
    if not rep.valid:
        raise InputError(f"{path}: not a Lie algebra ({rep.violations[0].describe(a.basis_names)})")
    return a


def _module(spec: str, algebra: LieAlgebra):
    if spec == "adjoint":
        return adjoint_module(algebra)
    if spec.startswith("trivial:"):
        try:
            k = int(spec.split(":", 1)[1])
        except ValueError:
            raise InputError(f"bad module spec {spec!r}") from None
        return trivial_module(algebra, k)
    return _load(spec, formats.module_from_json, algebra)


def _emit(args, text: str) -> None:
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


def _poly_text(terms: dict) -> str:
    return " + ".join(c if m == "1" else f"{c}*{m}" for m, c in sorted(terms.items()))


def _names(idx, names):
    return ",".join(names[i] for i in idx)


# --- commands --------------------------------------------------------------

def cmd_validate(args) -> int:
    a = _algebra(args.algebra)
    rep = validate_lie(a)
    if args.json:
        _emit(args, formats.dumps(formats.validation_to_json(rep, a.basis_names)))
    else:
        lines = ["valid" if rep.valid else "invalid"]
        lines += ["  " + v.describe(a.basis_names) for v in rep.violations]
        _emit(args, "\n".join(lines) + "\n")
    return OK if rep.valid else NEGATIVE


_RULE_TEXT = {"derivation": "derivation", "mod": "Eq mod", "cocycle": "Eq cocy"}


def cmd_mc_check(args) -> int:
    g, h = _lie(args.g), _lie(args.h)
    c = _load(args.cocycle, formats.cocycle_from_json, g.dim, h.dim)
    rep = is_nonabelian_cocycle(g, h, c)
    ctx = build_context(g, h)
    mc = is_mc(ctx, cocycle_to_mc(ctx, c))
    if args.json:
        _emit(args, formats.dumps({"cocycle": formats.validation_to_json(rep, g.basis_names), "mc": mc}))
    else:
        if rep.valid:
            coc = "yes"
        else:
            v = rep.violations[0]
            where = f"({v.indices[0]})" if v.rule == "derivation" else f"({_names(v.indices, g.basis_names)})"
            coc = f"no ({_RULE_TEXT[v.rule]} at {where})"
        _emit(args, f"cocycle: {coc}, MC: {'yes' if mc else 'no'}\n")
    if rep.valid != mc:
        print("internal error: cocycle and Maurer-Cartan verdicts disagree", file=sys.stderr)
        return INTERNAL
    return OK if mc else NEGATIVE


def cmd_jacobiator(args) -> int:
    g, h = _algebra(args.g), _algebra(args.h)
    c = _load(args.cocycle, formats.cocycle_from_json, g.dim, h.dim)
    rep = jacobiator_components(build_extension(g, h, c))
    if args.json:
        _emit(args, formats.dumps({label: formats.cochain_to_json(rep.components[label])
                                   for label in JACOBIATOR_LABELS}))
    else:
        lines = []
        for label in JACOBIATOR_LABELS:
            comp = rep.components[label]
            lines.append(f"{label}: " + ("0" if comp.is_zero() else
                                         "nonzero on " + ", ".join(f"({','.join(map(str, k))})"
                                                                   for k, _ in sorted(comp.items()))))
        _emit(args, "\n".join(lines) + "\n")
    return OK if rep.all_vanish else NEGATIVE


def cmd_gauge(args) -> int:
    g, h = _lie(args.g), _lie(args.h)
    c = _load(args.cocycle, formats.cocycle_from_json, g.dim, h.dim)
    beta = _load(args.beta, formats.gauge_from_json, g.dim, h.dim)
    via_dgla = gauge_cocycle(g, h, c, beta)
    if via_dgla != cocycle_equiv_apply(g, h, c, beta):
        print("internal error: gauge action and cocycle equivalence formulas disagree", file=sys.stderr)
        return INTERNAL
    _emit(args, formats.dumps(formats.cocycle_to_json(via_dgla)))
    return OK


def cmd_equiv(args) -> int:
    g, h = _lie(args.g), _lie(args.h)
    c1 = _load(args.cocycle1, formats.cocycle_from_json, g.dim, h.dim)
    c2 = _load(args.cocycle2, formats.cocycle_from_json, g.dim, h.dim)
    try:
        w = find_witness(g, h, c1, c2)
    except InvalidCocycleError as exc:
        raise InputError(str(exc)) from None
    if args.json:
        _emit(args, formats.dumps(formats.witness_to_json(w)))
    else:
        d = formats.witness_to_json(w)
        if w.kind == "found":
            text = f"Found: beta = {d['beta']}\n"
        elif w.kind == "not_equivalent":
            text = f"NotEquivalent (stage {w.stage})\n"
            text += "".join(f"  residual: {_poly_text(r)} = 0\n" for r in d.get("residual", []))
        else:
            text = f"Unknown: {len(d.get('residual', []))} residual constraints in {list(w.parameters)}\n"
            text += "".join(f"  {_poly_text(r)} = 0\n" for r in d.get("residual", []))
        _emit(args, text)
    return {"found": OK, "not_equivalent": NEGATIVE, "unknown": UNKNOWN}[w.kind]


def cmd_cohomology(args) -> int:
    a = _lie(args.algebra)
    m = _module(args.module, a)
    res = ce_cohomology(a, m, args.degree)
    if args.json:
        _emit(args, formats.dumps(formats.cohomology_to_json(res)))
    else:
        lines = [f"degree {res.degree}: dim Z = {res.dim_cocycles}, dim B = {res.dim_coboundaries}, "
                 f"dim H = {res.dim_H}"]
        for r in res.representatives:
            lines.append("  " + json.dumps(formats.cochain_to_json(r), sort_keys=True))
        _emit(args, "\n".join(lines) + "\n")
    return OK


def cmd_classify(args) -> int:
    a = _lie(args.algebra)
    m = _module(args.module, a)
    cl = classify_abelian(a, m)
    payload = {
        "cohomology": formats.cohomology_to_json(cl.cohomology),
        "extensions": [formats.algebra_to_json(e.algebra) for e in cl.extensions],
    }
    if args.json:
        _emit(args, formats.dumps(payload))
    else:
        lines = [f"dim H^2 = {cl.cohomology.dim_H}; {len(cl.extensions)} extension(s) "
                 "(trivial class first, then one per H^2 basis element)"]
        for e in cl.extensions:
            br = ", ".join(f"[{i},{j}] = {formats.vector_to_json(v)}" for (i, j), v in e.algebra.nonzero_brackets().items())
            lines.append(f"  dim {e.algebra.dim}: {br or 'abelian'}")
        _emit(args, "\n".join(lines) + "\n")
    return OK


def cmd_build(args) -> int:
    g, h = _lie(args.g), _lie(args.h)
    c = _load(args.cocycle, formats.cocycle_from_json, g.dim, h.dim)
    e = build_extension(g, h, c)
    _emit(args, formats.dumps(formats.algebra_to_json(e.algebra)))
    if not validate_lie(e.algebra).valid:
        print("warning: the cocycle does not validate; the bracket is not a Lie bracket", file=sys.stderr)
        return NEGATIVE
    return OK


def cmd_extract(args) -> int:
    e = _lie(args.algebra)
    n = e.dim
    if args.section:
        data = _read(args.section)
        if not isinstance(data, dict):
            raise InputError(f"{args.section}: expected an object")
        dg = data.get("g_dim", args.g_dim)
        if not isinstance(dg, int) or not 0 <= dg <= n:
            raise InputError(f"{args.section}: g_dim missing or out of range")
        h_embed, proj, s = canonical_maps(dg, n - dg)
        try:
            s = formats.linear_map_from_json(data["section"], dg, n, "section") if "section" in data else s
            if "h_embed" in data:
                h_embed = formats.linear_map_from_json(data["h_embed"], n - dg, n, "h_embed")
            if "proj" in data:
                proj = formats.linear_map_from_json(data["proj"], n, dg, "proj")
        except (formats.FormatError, DimensionError) as exc:
            raise InputError(f"{args.section}: {exc}") from None
    else:
        if args.g_dim is None or not 0 <= args.g_dim <= n:
            raise InputError("--g-dim (0..dim) is required without --section")
        h_embed, proj, s = canonical_maps(args.g_dim, n - args.g_dim)
    try:
        c = extension_to_cocycle(e, h_embed, proj, s)
    except SectionError as exc:
        raise InputError(str(exc)) from None
    _emit(args, formats.dumps(formats.cocycle_to_json(c)))
    return OK


def cmd_tangent_check(args) -> int:
    a = _lie(args.algebra)
    m = _module(args.module, a)
    rep = verify_tangent(a, m)
    if args.json:
        _emit(args, formats.dumps({"valid": rep.valid, "abelian": rep.abelian,
                                   "checked": {str(k): v for k, v in rep.checked.items()},
                                   "mismatched_arities": sorted({n for n, _ in rep.mismatches})}))
    else:
        arities = ", ".join(f"{k} ({v} basis cochains)" for k, v in rep.checked.items())
        _emit(args, f"d_alpha = delta on arities {arities}: {'yes' if not rep.mismatches else 'no'}\n"
                    f"C(g,H) abelian: {'yes' if rep.abelian else 'no'}\n")
    return OK if rep.valid else NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    def flags(suppress: bool) -> argparse.ArgumentParser:
        # accepted before or after the subcommand
        extra = {"default": argparse.SUPPRESS} if suppress else {}
        f = argparse.ArgumentParser(add_help=False)
        f.add_argument("--json", action="store_true", help="machine-readable output", **extra)
        f.add_argument("--output", "-o", metavar="PATH", help="write output to PATH instead of stdout", **extra)
        return f

    common = flags(suppress=True)
    p = argparse.ArgumentParser(prog="nabext", description=__doc__,
                                formatter_class=argparse.RawDescriptionHelpFormatter, parents=[flags(False)])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, *positional, help=None):
        sp = sub.add_parser(name, parents=[common], help=help)
        for arg in positional:
            sp.add_argument(arg)
        sp.set_defaults(func=fn)
        return sp

    add("validate", cmd_validate, "algebra", help="check antisymmetry and the Jacobi identity")
    add("mc-check", cmd_mc_check, "g", "h", "cocycle", help="cocycle equations vs Maurer-Cartan defect")
    add("jacobiator", cmd_jacobiator, "g", "h", "cocycle", help="Jacobiator components of the built extension")
    add("gauge", cmd_gauge, "g", "h", "cocycle", "beta", help="apply a gauge map beta: g -> h to a cocycle")
    add("equiv", cmd_equiv, "g", "h", "cocycle1", "cocycle2", help="search for a witness beta")
    sp = add("cohomology", cmd_cohomology, "algebra", "module",
             help="Chevalley-Eilenberg cohomology; module is a JSON file, 'adjoint' or 'trivial:K'")
    sp.add_argument("--degree", type=int, default=2)
    add("classify", cmd_classify, "algebra", "module", help="abelian extensions by H^2")
    add("build", cmd_build, "g", "h", "cocycle", help="extension algebra of a cocycle")
    sp = add("extract", cmd_extract, "algebra", help="cocycle of an extension through a section")
    sp.add_argument("--g-dim", type=int, help="dim g for the canonical block splitting")
    sp.add_argument("--section", metavar="FILE", help="JSON with section (and optionally h_embed, proj)")
    add("tangent-check", cmd_tangent_check, "algebra", "module", help="check d_alpha = delta on C(g,H)")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return INPUT_ERROR if exc.code else OK
    try:
        return args.func(args)
    except (InputError, InvalidAlgebraError, InvalidModuleError, DimensionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
