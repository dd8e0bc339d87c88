"""Command-line front end: ``python3 -m alexcolor <command> ...``.

Every command prints a document to stdout, as plain text by default or as
JSON with ``--json`` (see ``schema.json``).  Exit codes: 0 success, 1 usage
error, 2 input or validation error, 3 budget exceeded.
"""

import argparse
import json
import sys
import warnings

from .alexander import build_matrix, specialize_matrix
from .catalog import KEYS, catalog_get
from .config import BUDGETS
from .diagram import invert_diagram, parse_diagram, render_diagram
from .errors import AlexColorError, BudgetExceeded
from .ideals import (elementary_ideal_generators, ideal_image_is_zero, j0_from_ideals)
from .laurent import format_laurent
from .linalg import coloring_space, enumerate_colorings
from .oracle import brute_force_count
from .rings import (QQ, ZZ, IntegersMod, LaurentRingGF, PrimeField, parse_images, parse_ring,
                    specialization)
from .snf import ModuleSpec, alexander_invariant_factors, coloring_module, module_domain_for

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3

# options whose values may start with '-' (negative images)
_VALUE_OPTIONS = ("--phi", "--module")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _common(p):
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--catalog", metavar="NAME", help=f"built-in diagram: {', '.join(KEYS)}")
    src.add_argument("--file", metavar="PATH", help="diagram file in the .link format")
    p.add_argument("--json", action="store_true", help="emit JSON instead of text")


def build_parser():
    parser = _Parser(prog="alexcolor", description="Alexander colorings of link diagrams.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser, metavar="command")
    sub.required = True

    p = sub.add_parser("info", help="diagram summary")
    _common(p)

    p = sub.add_parser("matrix", help="Alexander matrix, optionally specialized")
    _common(p)
    p.add_argument("--phi", help="comma-separated images of t1..tmu")
    p.add_argument("--ring", default=None, help="target ring for --phi: p, Q, Z, Z/n or GFp-t")

    p = sub.add_parser("color", help="coloring space over a field")
    _common(p)
    p.add_argument("--field", required=True, help="prime p or Q")
    p.add_argument("--phi", required=True, help="comma-separated images of t1..tmu")
    p.add_argument("--enumerate", action="store_true", help="list every coloring")
    p.add_argument("--limit", type=int, default=BUDGETS.enumerate_limit, help="max colorings to list")

    p = sub.add_parser("snf", help="invariant factors over Z or GF(p)[t^±1]")
    _common(p)
    p.add_argument("--ring", required=True, help="Z or GFp-t")
    p.add_argument("--phi", required=True, help="comma-separated images of t1..tmu")
    p.add_argument("--module", help="comma-separated cyclic orders of the coloring module M")

    p = sub.add_parser("ideals", help="elementary ideals and their images")
    _common(p)
    p.add_argument("--j", type=int, help="index of the elementary ideal")
    p.add_argument("--phi", help="comma-separated images of t1..tmu")
    p.add_argument("--field", help="prime p or Q (with --phi)")
    p.add_argument("--budget", type=int, default=BUDGETS.minors, help="max determinants")

    p = sub.add_parser("invert", help="diagram with every component reversed")
    _common(p)

    p = sub.add_parser("brute", help="count colorings by exhaustion")
    _common(p)
    target = p.add_mutually_exclusive_group(required=True)
    target.add_argument("--field", help="prime p (GFp or p)")
    target.add_argument("--modulus", type=int, help="n for Z/n")
    p.add_argument("--phi", required=True, help="comma-separated images of t1..tmu")
    p.add_argument("--force", action="store_true", help=f"allow more than {BUDGETS.brute_candidates} candidates")
    return parser


def _join_values(argv):
    """Turn ``--phi -1,2`` into ``--phi=-1,2`` so argparse does not read ``-1,2`` as an option."""
    out = []
    it = iter(argv)
    for a in it:
        if a in _VALUE_OPTIONS:
            nxt = next(it, None)
            out.append(a if nxt is None else f"{a}={nxt}")
        else:
            out.append(a)
    return out


def _load(args):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        if args.catalog is not None:
            return catalog_get(args.catalog)
        with open(args.file, encoding="utf-8") as fh:
            return parse_diagram(fh.read())


def _field(text):
    R = parse_ring(text)
    if not (isinstance(R, PrimeField) or R is QQ):
        raise UsageError(f"--field must be a prime or Q, got {text!r}")
    return R


def _phi(d, text, target):
    images = parse_images(text, target)
    if len(images) != d.mu:
        raise AlexColorError(f"{d.name} has {d.mu} components; --phi needs exactly {d.mu} images, got {len(images)}")
    return specialization(target, images)


def _fmt(R, x):
    return R.format(x) if hasattr(R, "format") else str(x)


# commands -------------------------------------------------------------------

def cmd_info(d, args):
    result = {
        "components": [list(c) for c in d.components],
        "crossings": [[c.over, c.under_right, c.under_left] for c in d.crossings],
        "kappa": {a: d.kappa[a] for a in d.arcs},
        "warnings": list(d.warnings),
    }
    lines = [f"component {i}: {' '.join(c)}" for i, c in enumerate(d.components, start=1)]
    lines += [f"crossing {k}: over {c.over}, right {c.under_right}, left {c.under_left}"
              for k, c in enumerate(d.crossings, start=1)]
    lines += [f"warning: {w}" for w in d.warnings]
    return result, lines


def cmd_matrix(d, args):
    M = build_matrix(d)
    if args.phi is None:
        if args.ring is not None:
            raise UsageError("--ring needs --phi")
        entries = [[format_laurent(x) for x in row] for row in M.entries]
        ring = f"Z[t^±1] in {d.mu} variable(s)"
    else:
        R = parse_ring(args.ring or "Z")
        S = specialize_matrix(M, _phi(d, args.phi, R))
        entries = [[_fmt(R, x) for x in row] for row in S.entries]
        ring = R.name
    result = {"ring": ring, "columns": list(d.arcs), "rows": entries}
    lines = [f"ring: {ring}", "columns: " + " ".join(d.arcs)]
    lines += [f"c{k}: " + " | ".join(row) for k, row in enumerate(entries, start=1)]
    return result, lines


def cmd_color(d, args):
    F = _field(args.field)
    phi = _phi(d, args.phi, F)
    space = coloring_space(d, phi)
    basis = [{a: _fmt(F, f[a]) for a in d.arcs} for f in space.basis]
    result = {"field": F.name, "phi": [_fmt(F, x) for x in phi.images], "j0": space.j0, "basis": basis}
    lines = [f"field: {F.name}", f"phi: {phi.describe()}", f"j0: {space.j0}"]
    if isinstance(F, PrimeField):
        result["count"] = space.count()
        lines.append(f"count: {space.count()}")
    for i, f in enumerate(basis, start=1):
        lines.append(f"basis {i}: " + " ".join(f"{a}={v}" for a, v in f.items()))
    if args.enumerate:
        if not isinstance(F, PrimeField):
            raise UsageError("--enumerate needs a finite field")
        cols = [{a: _fmt(F, f[a]) for a in d.arcs} for f in enumerate_colorings(space, args.limit)]
        result["colorings"] = cols
        lines += ["coloring: " + " ".join(f"{a}={v}" for a, v in f.items()) for f in cols]
    return result, lines


def _module_spec(text, D):
    return ModuleSpec(D, tuple(D.convert(int(s)) if D is ZZ else D.convert(s.strip())
                               for s in text.split(",")))


def cmd_snf(d, args):
    R = parse_ring(args.ring)
    if not (R is ZZ or isinstance(R, LaurentRingGF)):
        raise UsageError(f"--ring must be Z or GFp-t, got {args.ring!r}")
    phi = _phi(d, args.phi, R)
    inv = alexander_invariant_factors(d, phi)
    D = inv.domain
    result = {"ring": D.name, "phi": [_fmt(R, x) for x in phi.images],
              "factors": inv.formatted(), "nonunit": [D.format(f) for f in inv.nonunit()]}
    lines = [f"ring: {D.name}", f"phi: {phi.describe()}",
             "factors: " + ", ".join(inv.formatted()),
             "nonunit: " + (", ".join(result["nonunit"]) or "none")]
    if args.module is not None:
        try:
            spec = _module_spec(args.module, module_domain_for(R))
        except ValueError as exc:
            raise AlexColorError(f"bad --module {args.module!r}: {exc}") from None
        mod = coloring_module(d, phi, spec)
        result["module"] = {"summands": mod.formatted(), "description": mod.describe(), "order": mod.order()}
        lines.append(f"module: {mod.describe()}")
        lines.append(f"order: {'infinite' if mod.order() is None else mod.order()}")
    return result, lines


def cmd_ideals(d, args):
    if args.phi is None and args.j is None:
        raise UsageError("ideals needs --j, --phi, or both")
    if (args.phi is None) != (args.field is None):
        raise UsageError("--phi and --field go together")
    result, lines = {}, []
    if args.j is not None:
        if args.j < 0:
            raise UsageError("--j must be nonnegative")
        if args.phi is None:
            g = elementary_ideal_generators(d, args.j, args.budget)
            gens = [format_laurent(x) for x in g.generators]
            result.update(j=args.j, flag=g.trivial_flag, evidence=g.evidence, generators=gens)
            lines += [f"j: {args.j}", f"flag: {g.trivial_flag} ({g.evidence})"]
            lines += [f"generator: {s}" for s in gens]
            return result, lines
    F = _field(args.field)
    phi = _phi(d, args.phi, F)
    result["field"] = F.name
    result["phi"] = [_fmt(F, x) for x in phi.images]
    lines += [f"field: {F.name}", f"phi: {phi.describe()}"]
    if args.j is not None:
        zero = ideal_image_is_zero(d, args.j, phi, args.budget)
        result.update(j=args.j, image_is_zero=zero)
        lines += [f"j: {args.j}", f"image_is_zero: {str(zero).lower()}"]
    else:
        j0 = j0_from_ideals(d, phi, args.budget)
        result["j0"] = j0
        lines.append(f"j0: {j0}")
    return result, lines


def cmd_invert(d, args):
    inv = invert_diagram(d)
    text = render_diagram(inv)
    return {"name": inv.name, "text": text}, text.rstrip("\n").splitlines()


def cmd_brute(d, args):
    if args.field is not None:
        R = _field(args.field)
        if R is QQ:
            raise UsageError("brute force needs a finite field")
    else:
        R = IntegersMod(args.modulus)
    phi = _phi(d, args.phi, R)
    rep = brute_force_count(d, phi, force=args.force)
    result = {"modulus": rep.modulus, "phi": list(rep.images), "total": rep.total, "count": rep.count}
    lines = [f"ring: {R.name}", f"phi: {phi.describe()}", f"total: {rep.total}", f"count: {rep.count}"]
    return result, lines


COMMANDS = {"info": cmd_info, "matrix": cmd_matrix, "color": cmd_color, "snf": cmd_snf,
            "ideals": cmd_ideals, "invert": cmd_invert, "brute": cmd_brute}


def run(argv, out=None, err=None):
    """Run one command; returns ``(exit_code, document)`` where document is None on failure."""
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    argv = _join_values(list(argv))
    try:
        args = build_parser().parse_args(argv)
        d = _load(args)
        result, lines = COMMANDS[args.command](d, args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=err)
        return EXIT_USAGE, None
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=err)
        return EXIT_BUDGET, None
    except (AlexColorError, OSError, ValueError) as exc:
        # KeyError subclasses would otherwise print their message quoted
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=err)
        return EXIT_INPUT, None
    doc = {"command": args.command, "argv": argv, "diagram": d.summary(), "result": result}
    if args.json:
        print(json.dumps(doc, indent=2, ensure_ascii=False), file=out)
    else:
        s = d.summary()
        header = [f"command: {args.command}",
                  f"diagram: {s['name']} (arcs={s['arcs']}, crossings={s['crossings']}, mu={s['mu']})"]
        print("\n".join(header + lines), file=out)
    return EXIT_OK, doc


def main(argv=None):
    code, _ = run(sys.argv[1:] if argv is None else argv)
    return code
