"""Command-line front end.

Polynomial arguments are JSON files or inline ``vars: expression`` text,
e.g. ``"u,t: u^2 - 3*u + 1"``.  Classes and covectors are comma lists
of integers or fractions, e.g. ``1/4,0``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

import mpmath

from . import io
from .certify import certify_slice
from .conenorm import fibered_cone, slice_covector, teich_norm
from .dilatation import (Segment, a_module_presentation, eval_lambda, minimize_on_slice,
                         segment_from_covector)
from .groupring import GroupPoly, parse_poly
from .orbits import census
from .penner import phi, symmetry_check
from .polymat import char_det, teichmuller_from_transition
from .presets import reproduce


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def load_poly(arg: str) -> GroupPoly:
    if os.path.exists(arg):
        return io.parse_poly_file(_read(arg))
    if ":" not in arg:
        raise SystemExit(f"error: {arg!r} is neither a file nor 'vars: expression'")
    names, expr = arg.split(":", 1)
    return parse_poly(expr, tuple(n.strip() for n in names.split(",") if n.strip()))


def parse_vector(text: str) -> tuple:
    return tuple(Fraction(v.strip()) for v in text.split(","))


def parse_int_vector(text: str) -> tuple[int, ...]:
    return tuple(int(v) for v in text.split(","))


def _num(x, prec: int) -> str:
    return mpmath.nstr(x, prec) if isinstance(x, mpmath.mpf) else io.format_rational(x)


def _cone_obj(cone) -> dict:
    return {"vars": list(cone.var_names), "dominant": list(cone.dominant),
            "inequalities": [list(n) for n in cone.inequalities],
            "walls": [list(n) for n in cone.pruned()]}


def _segment(args, p: GroupPoly):
    """Segment and cone from --slice FILE, --w, or --start/--end."""
    cone = fibered_cone(p, parse_vector(args.ref)) if args.ref else None
    if args.slice:
        return io.parse_slice(_read(args.slice)), cone
    if args.w:
        if cone is None:
            raise SystemExit("error: --w needs --ref to locate the cone")
        return segment_from_covector(cone, parse_int_vector(args.w)), cone
    if args.start and args.end:
        return Segment(parse_vector(args.start), parse_vector(args.end)), cone
    raise SystemExit("error: give --slice, --w with --ref, or --start and --end")


def _minpoint_obj(m, prec: int) -> dict:
    return {"parameter": _num(m.parameter, prec),
            "coordinates": [_num(c, prec) for c in m.coordinates],
            "lambda": _num(m.lam.value, prec),
            "first_order_residual": mpmath.nstr(m.first_order_residual, 5),
            "norm_check": None if m.norm_check is None else _num(m.norm_check, prec)}


def _text(obj, indent: str = "") -> str:
    if isinstance(obj, dict):
        out = []
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and any(isinstance(x, (dict, list)) for x in
                                                        (v.values() if isinstance(v, dict) else v)):
                out.append(f"{indent}{k}:")
                out.append(_text(v, indent + "  "))
            else:
                out.append(f"{indent}{k}: {v}")
        return "\n".join(out)
    if isinstance(obj, list):
        return "\n".join(_text(v, indent) if isinstance(v, dict) else f"{indent}- {v}" for v in obj)
    return f"{indent}{obj}"


def run(args) -> tuple[object, int]:
    """Execute a subcommand; returns (result object, exit status)."""
    prec = args.prec
    cmd = args.command
    if cmd == "charpoly":
        m = io.parse_matrix(_read(args.matrix))
        p = char_det(m, args.var)
        return {"poly": io.poly_to_obj(p), "text": p.to_string()}, 0
    if cmd == "teich":
        pe = io.parse_matrix(_read(args.pe))
        pv = io.parse_matrix(_read(args.pv)) if args.pv else None
        p = teichmuller_from_transition(pe, pv, args.var).normalize_unit()
        return {"poly": io.poly_to_obj(p), "text": p.to_string()}, 0
    if cmd == "penner-phi":
        spec = io.parse_penner(_read(args.spec))
        p = phi(spec)
        return {"poly": io.poly_to_obj(p), "text": p.to_string(),
                "symmetric": symmetry_check(spec)}, 0
    if cmd == "cone":
        return _cone_obj(fibered_cone(load_poly(args.poly), parse_vector(args.ref))), 0
    if cmd == "norm":
        return {"norm": _num(teich_norm(load_poly(args.poly), parse_vector(args.alpha)), prec)}, 0
    if cmd == "slice":
        c = parse_int_vector(args.c) if args.c else None
        w = slice_covector(parse_int_vector(args.x), c, args.mode, args.d)
        out = {"w": list(w)}
        if args.poly:
            p = load_poly(args.poly)
            cone = fibered_cone(p, parse_vector(args.ref))
            out["segment"] = io.slice_to_obj(segment_from_covector(cone, w))
        return out, 0
    if cmd == "lambda":
        p = load_poly(args.poly)
        cone = fibered_cone(p, parse_vector(args.ref)) if args.ref else None
        v = eval_lambda(p, parse_vector(args.alpha), cone, prec)
        return {"lambda": _num(v.value, prec), "residual": mpmath.nstr(v.residual, 5),
                "bracket": [_num(b, prec) for b in v.bracket]}, 0
    if cmd == "minimize":
        p = load_poly(args.poly)
        seg, cone = _segment(args, p)
        m = minimize_on_slice(p, cone, seg, prec)
        out = _minpoint_obj(m, prec)
        if args.x or seg.w is not None:
            pres = a_module_presentation(m, parse_int_vector(args.x) if args.x else None)
            out["pairing"] = _num(pres.pairing, prec)
            out["rational_flags"] = list(pres.rational_flags)
        return out, 0
    if cmd == "certify":
        p = load_poly(args.poly)
        seg, cone = _segment(args, p)
        cert = certify_slice(p, cone, seg, prec)
        return io.certificate_to_obj(cert), 0 if cert.verdict != "inconclusive" else 2
    if cmd == "census":
        m = io.parse_matrix(_read(args.matrix))
        classes = census(m, args.max_power)
        return [{"m": c.u_degree, "t_class": list(c.t_class), "multiplicity": c.multiplicity,
                 "cell": c.through_cell} for c in classes], 0
    if cmd == "reproduce":
        rep = reproduce(args.preset, prec)
        return rep, 0 if rep.ok else 1
    raise SystemExit(f"unknown command {cmd}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--prec", type=int, default=50, help="decimal digits (default 50)")
    common.add_argument("--out", help="write the result to this file")
    common.add_argument("--format", choices=("json", "text"), default="json")

    ap = argparse.ArgumentParser(prog="fiberface", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("charpoly", parents=[common], help="det(uI - M) of a matrix file")
    s.add_argument("matrix")
    s.add_argument("--var", default="u")

    s = sub.add_parser("teich", parents=[common], help="det(uI - PE) / det(uI - PV)")
    s.add_argument("pe")
    s.add_argument("--pv")
    s.add_argument("--var", default="u")

    s = sub.add_parser("penner-phi", parents=[common], help="Phi of a Penner spec file")
    s.add_argument("spec")

    s = sub.add_parser("cone", parents=[common], help="fibered cone around a reference class")
    s.add_argument("poly")
    s.add_argument("--ref", required=True)

    s = sub.add_parser("norm", parents=[common], help="Teichmuller norm of a class")
    s.add_argument("poly")
    s.add_argument("--alpha", required=True)

    s = sub.add_parser("slice", parents=[common], help="slice covector, and its segment with --poly")
    s.add_argument("--x", required=True)
    s.add_argument("--c")
    s.add_argument("--mode", choices=("base", "drill", "branch"), default="base")
    s.add_argument("--d", type=int)
    s.add_argument("--poly")
    s.add_argument("--ref", default="1,0")

    s = sub.add_parser("lambda", parents=[common], help="dilatation at a class")
    s.add_argument("poly")
    s.add_argument("--alpha", required=True)
    s.add_argument("--ref")

    for name, text in (("minimize", "minimal point on a slice"),
                       ("certify", "irrationality certificate for a slice minimum")):
        s = sub.add_parser(name, parents=[common], help=text)
        s.add_argument("poly")
        s.add_argument("--ref")
        s.add_argument("--slice")
        s.add_argument("--w")
        s.add_argument("--start")
        s.add_argument("--end")
        if name == "minimize":
            s.add_argument("--x", help="dual class of the slice (default: its covector)")

    s = sub.add_parser("census", parents=[common], help="closed-orbit classes from matrix powers")
    s.add_argument("matrix")
    s.add_argument("--max-power", type=int, default=1)

    s = sub.add_parser("reproduce", parents=[common], help="rerun a worked example")
    s.add_argument("preset", choices=("example1", "penner62", "magic72"))
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result, status = run(args)
    except (ValueError, ArithmeticError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    if hasattr(result, "text"):
        body = result.text() if args.format == "text" else json.dumps(result.to_obj(), indent=1)
    else:
        body = _text(result) if args.format == "text" else json.dumps(result, indent=1)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(body + "\n")
    else:
        print(body)
    return status


if __name__ == "__main__":
    sys.exit(main())
