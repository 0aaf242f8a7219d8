"""Command-line interface: ``knotoid <command> ...``.

Inputs are inline codes (``""`` is the trivial knotoid) or paths to ``.gko``
and ``.pkd`` files. Results go to stdout, diagnostics to stderr. Library
errors exit with status 1 and a one-line ``error:<reason>: <message>`` on
stderr; usage errors exit with status 2.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import KnotoidError, ValidationError
from .gauss import (
    canonicalize,
    parse_code,
    parse_cyclic,
    product,
    read_gko,
    serialize,
    validate,
    virtual_closure,
)
from .invariants import DEFAULT_CAP, bracket, f_polynomial
from .moves import STANDARD, UNDER_CLOSURE, InsertionCaps, MoveSite, apply_move, enumerate_moves
from .planar import PlanarDiagram, closure, from_classical_code, read_pkd, to_open_code
from .search import Distinct, Equivalent, SearchBudget, equivalent, min_genus_bound, tabulate
from .surface import carrier_genus, cyclic_carrier_genus, is_classical


class _UsageError(Exception):
    pass


def _looks_like_file(arg: str) -> bool:
    return arg.endswith((".gko", ".pkd")) and Path(arg).is_file()


def _load(arg: str, cyclic: bool = False):
    """An open or cyclic code from inline text or a file."""
    if _looks_like_file(arg):
        if arg.endswith(".pkd"):
            code = to_open_code(read_pkd(arg))
        else:
            code = read_gko(arg)
        if cyclic:
            code = virtual_closure(code)
    else:
        code = parse_cyclic(arg) if cyclic else parse_code(arg)
    problem = validate(code)
    if problem:
        raise ValidationError(problem)
    return code


def _load_diagram(arg: str) -> PlanarDiagram:
    if _looks_like_file(arg) and arg.endswith(".pkd"):
        return read_pkd(arg)
    return from_classical_code(_load(arg))


def _route(text: str):
    if text == "auto":
        return "auto"
    edges = text.startswith("edges:")
    body = text[len("edges:"):] if edges else text
    try:
        ids = [int(x) for x in body.split(",") if x]
    except ValueError:
        raise _UsageError(f"bad route {text!r}") from None
    return {"edges": ids} if edges else ids


def _budget(args) -> SearchBudget:
    return SearchBudget(
        max_crossings=args.max_crossings,
        max_nodes=args.max_nodes,
        max_depth=args.max_depth,
        mode=args.mode,
    )


def _closed(args):
    """The cyclic code whose bracket is requested."""
    if args.cyclic:
        return _load(args.code, cyclic=True)
    if args.type == "virtual" and not args.code.endswith(".pkd"):
        return virtual_closure(_load(args.code))
    return closure(_load_diagram(args.code), args.type, _route(args.route))


# -- commands -----------------------------------------------------------------

def cmd_validate(args, out):
    _load(args.code, args.cyclic)
    out.write("valid\n")


def cmd_canon(args, out):
    out.write(serialize(canonicalize(_load(args.code, args.cyclic)), canonical=True) + "\n")


def cmd_product(args, out):
    out.write(serialize(product(_load(args.code), _load(args.other))) + "\n")


def cmd_closure(args, out):
    if args.type == "virtual" and not args.code.endswith(".pkd"):
        result = virtual_closure(_load(args.code))
    else:
        result = closure(_load_diagram(args.code), args.type, _route(args.route))
    out.write(serialize(result) + "\n")


def cmd_genus(args, out):
    code = _load(args.code, args.cyclic)
    out.write(f"{cyclic_carrier_genus(code) if args.cyclic else carrier_genus(code)}\n")


def cmd_classical(args, out):
    out.write("true\n" if is_classical(_load(args.code)) else "false\n")


def cmd_bracket(args, out):
    code = _closed(args)
    poly = f_polynomial(code, args.cap) if args.normalized else bracket(code, args.cap)
    out.write(poly.serialize() + "\n")


def cmd_f(args, out):
    out.write(f_polynomial(_closed(args), args.cap).serialize() + "\n")


def cmd_moves(args, out):
    caps = InsertionCaps(max_crossings=args.max_crossings)
    for site in enumerate_moves(_load(args.code, args.cyclic), args.mode, caps):
        out.write(f"{site}\n")


def cmd_apply(args, out):
    code = _load(args.code, args.cyclic)
    for text in args.sites:
        code = apply_move(code, MoveSite.parse(text))
    out.write(serialize(code) + "\n")


def cmd_equiv(args, out):
    verdict = equivalent(_load(args.code, args.cyclic), _load(args.other, args.cyclic), _budget(args))
    out.write(f"{verdict}\n")
    if isinstance(verdict, Equivalent):
        out.write(" ".join(map(str, verdict.path)) + "\n")
    elif isinstance(verdict, Distinct):
        a, b = verdict.values
        out.write(f"{verdict.invariant} {a.serialize()} {b.serialize()}\n")


def cmd_min_genus(args, out):
    g, witness = min_genus_bound(_load(args.code), _budget(args))
    out.write(f"{g}\t{serialize(witness)}\n")


def cmd_tabulate(args, out):
    if not args.out:
        raise _UsageError("tabulate needs --out PATH")
    count = tabulate(args.n_max, _budget(args), args.out)
    out.write(f"{count}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="knotoid", description="Compute with classical and virtual knotoids.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, *positional, help=None):
        p = sub.add_parser(name, help=help)
        for arg in positional:
            p.add_argument(arg)
        p.add_argument("--cyclic", action="store_true", help="read codes as cyclic (closed) codes")
        p.add_argument("--type", choices=["under", "over", "virtual"], default="virtual")
        p.add_argument("--route", default="auto", help="auto, a face path 3,1,2 or edges:4,7")
        p.add_argument("--mode", choices=[STANDARD, UNDER_CLOSURE], default=STANDARD)
        p.add_argument("--max-crossings", type=int, default=8)
        p.add_argument("--max-nodes", type=int, default=200_000)
        p.add_argument("--max-depth", type=int, default=12)
        p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="state-sum crossing cap")
        p.add_argument("--out")
        p.add_argument("--normalized", action="store_true")
        p.set_defaults(func=func)
        return p

    add("validate", cmd_validate, "code", help="check a code")
    add("canon", cmd_canon, "code", help="canonical form")
    add("product", cmd_product, "code", "other", help="knotoid product")
    add("closure", cmd_closure, "code", help="under/over/virtual closure")
    add("genus", cmd_genus, "code", help="carrier-surface genus")
    add("classical", cmd_classical, "code", help="true iff carrier genus is 0")
    add("bracket", cmd_bracket, "code", help="Kauffman bracket of a closure")
    add("f", cmd_f, "code", help="normalized bracket of a closure")
    add("moves", cmd_moves, "code", help="list move sites")
    p = add("apply", cmd_apply, "code", help="apply move sites in order")
    p.add_argument("sites", nargs="+")
    add("equiv", cmd_equiv, "code", "other", help="bounded equivalence search")
    add("min-genus", cmd_min_genus, "code", help="bounded minimal carrier genus")
    p = add("tabulate", cmd_tabulate, help="tabulate codes up to N crossings")
    p.add_argument("n_max", type=int)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if min(args.max_crossings, args.max_nodes, args.max_depth, args.cap) < 1:
            raise _UsageError("limits must be positive")
        args.func(args, out)
    except _UsageError as exc:
        err.write(f"error:usage: {exc}\n")
        return 2
    except KnotoidError as exc:
        msg = str(exc).replace("\n", " ")
        err.write(f"error:{exc.reason}: {msg}\n")
        return 1
    except OSError as exc:
        err.write(f"error:io: {exc}\n")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
