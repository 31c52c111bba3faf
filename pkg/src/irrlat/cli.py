"""Command-line front end: ``irrlat <subcommand> [flags]``.

Exit codes: 0 success, 1 a check or audit found a problem, 2 usage or data error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from .catalog import Catalog, ClassRef, default_catalog, group_of, load_catalog, lookup, make_ref, parse_twists
from .catalog.factors import FactorList
from .catalog.model import DiagonalFamily
from .charalg import PROBES, char
from .diagonal import audit_family, enumerate_classes
from .errors import IrrlatError, UsageError
from .lattice import export_dot, immediate_overgroups, overgroup_closure
from .restrict import restrict_class
from .restrict.core import expand, restrict_diagonal
from .restrict.routes import factors_of
from .twistlang import parse_embedding
from .verify import (
    check_determines,
    check_single_maximal_cover,
    check_type_existence,
    varstein_flagged,
)

CHECKS = ("adjoint-determines", "min-determines", "type-existence", "single-cover", "varstein")


def render_factors(fl: FactorList, p) -> str:
    """Irreducible factors at ``p``, one per multiplicity, descending, joined by `` / ``."""
    items = []
    for e, m in expand(fl, p).entries:
        parts = [c.render(f) for c, f in zip(e, fl.factors)]
        text = parts[0] if len(parts) == 1 else "(" + ",".join(parts) + ")"
        key = tuple((c.weight, c.twist) for c in e)
        items.extend([(key, text)] * m)
    items.sort(key=lambda kv: kv[0], reverse=True)
    return " / ".join(t for _, t in items)


def _catalog(args) -> Catalog:
    if args.data:
        return load_catalog([Path(args.data)])
    return default_catalog()


def _ref(cat: Catalog, args) -> ClassRef:
    if args.id is None:
        raise UsageError("--id is required")
    ref = make_ref(cat, args.group, args.id)
    if args.twists is None:
        return ref
    rec = group_of(cat, args.group).classes[ref.id]
    if rec.family is None:
        raise UsageError(f"--twists: {args.group} #{ref.id} is not a diagonal family")
    return ClassRef(args.group, ref.id, parse_twists(args.twists, rec.family))


def _single_p(args, default: str = "inf"):
    text = args.p if args.p is not None else default
    if text == "all":
        raise UsageError("--p all is only accepted by verify")
    return char(text)


def cmd_lookup(cat: Catalog, args, out) -> int:
    p = None if args.p in (None, "all") else char(args.p)
    ref = _ref(cat, args)
    obj = lookup(cat, args.group, ref.id, ref.twists, p)
    rec = getattr(obj, "record", obj)
    lines = [f"{args.group} {obj.ref.label()}: {rec.describe()}", f"exists: {rec.char_cond.label()}"]
    if rec.parent is not None:
        lines.append(f"in: #{rec.parent}")
    if rec.embed is not None:
        lines.append(f"embed: {rec.embed.render()}")
    if rec.vm:
        lines.append(f"vm: {rec.vm}")
    for v in rec.variants:
        lines.append(f"variant {v.tag}: {v.char_cond.label()}" + (f", vm {v.vm}" if v.vm else ""))
    if rec.minimal_factors is not None:
        lines.append(f"min: {rec.minimal_factors.render()}")
    if rec.adjoint_factors is not None:
        lines.append(f"adj: {rec.adjoint_factors.render()}")
    out.write("\n".join(lines) + "\n")
    return 0


def cmd_overgroups(cat: Catalog, args, out) -> int:
    p = _single_p(args)
    ref = _ref(cat, args)
    refs = overgroup_closure(cat, args.group, ref, p) if args.transitive else immediate_overgroups(cat, args.group, ref, p)
    out.write(" ".join(r.label() for r in refs) + "\n")
    return 0


def cmd_restrict(cat: Catalog, args, out) -> int:
    p = _single_p(args)
    if args.module == "vm":
        rec = group_of(cat, args.group).classes[_ref(cat, args).id]
        v = rec.variant_at(p)
        vm = (v.vm if v and v.vm else None) or rec.vm or (rec.embed.render() if rec.embed else None)
        if vm is None:
            raise UsageError(f"{args.group} #{rec.id} has no recorded action on its overgroup's natural module")
        out.write(vm + "\n")
        return 0
    if args.embed:
        parent = make_ref(cat, args.group, args.id)
        desc = parse_embedding(args.embed)
        base = factors_of(cat, args.group, parent, args.module, p)
        tw = parse_twists(args.twists, DiagonalFamily(0, args.group, parent.id, desc)) if desc.twist_variables else ()
        fl = restrict_diagonal(base, desc, tw, p)
    else:
        fl = restrict_class(cat, args.group, _ref(cat, args), args.module, p)
    out.write(render_factors(fl, p) + "\n")
    return 0


def cmd_enumerate(cat: Catalog, args, out) -> int:
    p = _single_p(args)
    if args.family is None:
        raise UsageError("--family is required")
    rec = group_of(cat, args.group).classes.get(args.family)
    if rec is None or rec.family is None:
        raise UsageError(f"--family: {args.group} #{args.family} is not a diagonal family with a descriptor")
    for tw in enumerate_classes(rec, args.bound, p):
        out.write(ClassRef(args.group, rec.id, tw).label() + "\n")
    return 0


def cmd_audit(cat: Catalog, args, out) -> int:
    p = _single_p(args, "5")
    g = group_of(cat, args.group)
    ids = [args.family] if args.family is not None else [i for i, r in sorted(g.classes.items()) if r.family is not None]
    ok = True
    for cid in ids:
        rec = g.classes.get(cid)
        if rec is None or rec.family is None:
            raise UsageError(f"--family: {args.group} #{cid} is not a diagonal family with a descriptor")
        report = audit_family(rec, args.bound, p)
        out.write(report.render())
        ok = ok and report.injective
    return 0 if ok else 1


def cmd_verify(cat: Catalog, args, out) -> int:
    if args.check not in CHECKS:
        raise UsageError(f"--check must be one of {', '.join(CHECKS)}")
    probes = list(PROBES) if args.p in (None, "all") else [char(args.p)]
    if args.check in ("adjoint-determines", "min-determines"):
        report = check_determines(cat, args.group, args.p or "all", args.check, args.bound)
        if args.report:
            for f in report.findings():
                out.write(f.render() + "\n")
        out.write(report.summary() + "\n")
        return 0 if report.ok else 1
    if args.check == "type-existence":
        if args.n is None:
            raise UsageError("--n is required for type-existence")
        for q in probes:
            found, witness = check_type_existence(cat, args.group, args.n, args.type, q)
            out.write(f"p={q}\t{args.type}^{args.n}\t{'yes ' + witness.label() if found else 'no'}\n")
        return 0
    if args.check == "single-cover":
        for q in probes:
            m = check_single_maximal_cover(cat, args.group, q, args.type)
            out.write(f"p={q}\t{m.label() if m else '-'}\n")
        return 0
    flagged = varstein_flagged(cat, args.group, [q for q in probes if not q.is_zero], args.bound)
    for ref, q in flagged:
        out.write(f"{ref.label()}\tp={q}\tfails\n")
    out.write(f"{len(flagged)} flagged\n")
    return 0


def cmd_export_dot(cat: Catalog, args, out) -> int:
    p = _single_p(args)
    text = export_dot(cat, args.group, p)
    if args.output:
        Path(args.output).write_text(text)
    else:
        out.write(text)
    return 0


COMMANDS = {
    "lookup": cmd_lookup,
    "overgroups": cmd_overgroups,
    "restrict": cmd_restrict,
    "enumerate": cmd_enumerate,
    "audit": cmd_audit,
    "verify": cmd_verify,
    "export-dot": cmd_export_dot,
}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="irrlat", description="Irreducible subgroup lattices of exceptional groups.")
    ap.add_argument("--data", help="directory or .isl file to load instead of the bundled catalog")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(sp, need_id=False):
        sp.add_argument("--data", help=argparse.SUPPRESS, default=argparse.SUPPRESS)
        sp.add_argument("--group", required=True, help="G2, F4, E6, E7 or E8")
        sp.add_argument("--p", help="a prime, inf, or all (verify only)")
        if need_id:
            sp.add_argument("--id", required=True, help="class id, optionally with twists, e.g. 1^{1,0}")
            sp.add_argument("--twists", help="r=1,s=0 or 1,0")

    sp = sub.add_parser("lookup", help="show one class or instance")
    common(sp, True)

    sp = sub.add_parser("overgroups", help="immediate overgroups, or the closure with --transitive")
    common(sp, True)
    sp.add_argument("--transitive", action="store_true")

    sp = sub.add_parser("restrict", help="composition factors on the minimal or adjoint module")
    common(sp, True)
    sp.add_argument("--module", choices=("min", "adj", "vm"), default="min")
    sp.add_argument("--embed", help="diagonal descriptor inside the class given by --id")

    sp = sub.add_parser("enumerate", help="twist tuples a family accepts")
    common(sp)
    sp.add_argument("--family", type=int, required=True)
    sp.add_argument("--bound", type=int, default=2)

    sp = sub.add_parser("audit", help="check that a family's conditions pick one tuple per orbit")
    common(sp)
    sp.add_argument("--family", type=int)
    sp.add_argument("--bound", type=int, default=2)

    sp = sub.add_parser("verify", help="catalog-wide checks")
    common(sp)
    sp.add_argument("--check", required=True, help=", ".join(CHECKS))
    sp.add_argument("--bound", type=int, default=2, help="twist bound for family instances")
    sp.add_argument("--n", type=int, help="number of simple factors (type-existence)")
    sp.add_argument("--type", default="A1", choices=("A1", "A2"))
    sp.add_argument("--report", action="store_true", help="print one line per finding")

    sp = sub.add_parser("export-dot", help="the lattice at one characteristic as DOT")
    common(sp)
    sp.add_argument("-o", "--output")
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if not hasattr(args, "data"):
        args.data = None
    try:
        cat = _catalog(args)
        return COMMANDS[args.command](cat, args, sys.stdout)
    except IrrlatError as exc:
        print(f"irrlat: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
