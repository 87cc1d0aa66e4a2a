"""JSON file formats for every value the command line reads or writes.

Integers are written as decimal strings and rationals as "p/q" or exact
decimals, so parse(serialize(v)) == v holds exactly.  Polynomial entries
may also be given as text expressions such as "t + 4 + t^-1".
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .certify.certificate import IrrationalityCertificate
from .certify.elimination import XY, CriticalSystem
from .certify.intpoly import IntPoly
from .dilatation import Segment
from .groupring import GroupPoly, PolySyntaxError, parse_poly
from .penner import PennerSpec, TwistStep
from .polymat import PolyMatrix


class FormatError(ValueError):
    def __init__(self, msg: str, line: int = 1, column: int = 1):
        super().__init__(f"line {line}, column {column}: {msg}")
        self.line, self.column = line, column


def _load(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as err:
        raise FormatError(err.msg, err.lineno, err.colno) from None


def _require(obj: dict, key: str, kind: str):
    if not isinstance(obj, dict) or key not in obj:
        raise FormatError(f"{kind} needs a {key!r} field")
    return obj[key]


def format_rational(x: Fraction) -> str:
    """Exact decimal when the denominator divides a power of ten, else p/q."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    d, twos, fives = x.denominator, 0, 0
    while d % 2 == 0:
        d, twos = d // 2, twos + 1
    while d % 5 == 0:
        d, fives = d // 5, fives + 1
    if d != 1:
        return f"{x.numerator}/{x.denominator}"
    k = max(twos, fives)
    n = abs(x.numerator) * (10 ** k // x.denominator)
    body = str(n).rjust(k + 1, "0")
    return ("-" if x < 0 else "") + body[:-k] + "." + body[-k:]


def parse_rational(v) -> Fraction:
    try:
        return Fraction(v) if not isinstance(v, float) else Fraction(str(v))
    except (ValueError, ZeroDivisionError) as err:
        raise FormatError(f"bad rational {v!r}: {err}") from None


# -- polynomials ------------------------------------------------------

def _terms_to_poly(terms, names) -> GroupPoly:
    out = {}
    for t in terms:
        e = tuple(int(x) for x in _require(t, "e", "term"))
        if len(e) != len(names):
            raise FormatError(f"exponent {list(e)} has length {len(e)}, expected {len(names)}")
        out[e] = out.get(e, 0) + int(_require(t, "c", "term"))
    return GroupPoly(names, out)


def _entry_to_poly(v, names, where: str) -> GroupPoly:
    if isinstance(v, GroupPoly):
        return v
    if isinstance(v, int):
        return GroupPoly.constant(names, v)
    if isinstance(v, str):
        try:
            return parse_poly(v, names)
        except PolySyntaxError as err:
            raise FormatError(f"{where}: {err}", 1, getattr(err, "column", 1)) from None
    if isinstance(v, list):
        return _terms_to_poly(v, names)
    if isinstance(v, dict) and "terms" in v:
        return _terms_to_poly(v["terms"], names)
    raise FormatError(f"{where}: cannot read a polynomial from {v!r}")


def poly_from_obj(obj) -> GroupPoly:
    names = tuple(_require(obj, "vars", "polynomial"))
    if "terms" in obj:
        return _terms_to_poly(obj["terms"], names)
    return _entry_to_poly(_require(obj, "expr", "polynomial"), names, "expr")


def poly_to_obj(p: GroupPoly) -> dict:
    return {"vars": list(p.var_names),
            "terms": [{"c": str(c), "e": list(e)} for e, c in p.sorted_terms()]}


def parse_poly_file(text: str) -> GroupPoly:
    return poly_from_obj(_load(text))


def serialize_poly(p: GroupPoly) -> str:
    return json.dumps(poly_to_obj(p))


# -- matrices ---------------------------------------------------------

def matrix_from_obj(obj) -> PolyMatrix:
    names = tuple(_require(obj, "vars", "matrix"))
    rows = _require(obj, "rows", "matrix")
    if not rows or any(len(r) != len(rows[0]) for r in rows):
        raise FormatError("matrix rows must be nonempty and of equal length")
    return PolyMatrix.from_rows(
        [[_entry_to_poly(v, names, f"entry ({i + 1},{j + 1})") for j, v in enumerate(r)]
         for i, r in enumerate(rows)], names)


def matrix_to_obj(m: PolyMatrix) -> dict:
    return {"vars": list(m.var_names),
            "rows": [[poly_to_obj(e)["terms"] for e in r] for r in m.to_rows()]}


def parse_matrix(text: str) -> PolyMatrix:
    return matrix_from_obj(_load(text))


def serialize_matrix(m: PolyMatrix) -> str:
    return json.dumps(matrix_to_obj(m))


# -- Penner specs -----------------------------------------------------

def penner_from_obj(obj) -> PennerSpec:
    names = tuple(_require(obj, "vars", "penner spec"))
    inter = matrix_from_obj({"vars": list(names), "rows": _require(obj, "intersection", "penner spec")})
    word = [TwistStep(_require(s, "kind", "word step"), tuple(_require(s, "mult", "word step")))
            for s in _require(obj, "word", "penner spec")]
    return PennerSpec(inter, tuple(word), int(_require(obj, "r", "penner spec")),
                      obj.get("u_var", "u"), bool(obj.get("generic", True)))


def penner_to_obj(spec: PennerSpec) -> dict:
    return {"vars": list(spec.intersection.var_names),
            "intersection": matrix_to_obj(spec.intersection)["rows"],
            "word": [{"kind": s.kind, "mult": list(s.mult)} for s in spec.word],
            "r": spec.r, "u_var": spec.u_var, "generic": spec.generic}


def parse_penner(text: str) -> PennerSpec:
    return penner_from_obj(_load(text))


def serialize_penner(spec: PennerSpec) -> str:
    return json.dumps(penner_to_obj(spec))


# -- segments ---------------------------------------------------------

def slice_from_obj(obj) -> Segment:
    start = tuple(parse_rational(v) for v in _require(obj, "start", "slice"))
    end = tuple(parse_rational(v) for v in _require(obj, "end", "slice"))
    w = obj.get("w")
    return Segment(start, end, tuple(int(v) for v in w) if w is not None else None)


def slice_to_obj(seg: Segment) -> dict:
    obj = {"start": [format_rational(v) for v in seg.start],
           "end": [format_rational(v) for v in seg.end]}
    if seg.w is not None:
        obj["w"] = list(seg.w)
    return obj


def parse_slice(text: str) -> Segment:
    return slice_from_obj(_load(text))


def serialize_slice(seg: Segment) -> str:
    return json.dumps(slice_to_obj(seg))


# -- certificates -----------------------------------------------------

def _interval(v):
    return None if v is None else [format_rational(v[0]), format_rational(v[1])]


def _interval_back(v):
    return None if v is None else (parse_rational(v[0]), parse_rational(v[1]))


def _intpoly(p: IntPoly | None):
    return None if p is None else [str(c) for c in p.high()]


def _intpoly_back(v):
    return None if v is None else IntPoly.from_high([int(c) for c in v])


def certificate_to_obj(cert: IrrationalityCertificate) -> dict:
    sysm = cert.system
    return {
        "system": {
            "value": poly_to_obj(sysm.value),
            "derivative": poly_to_obj(sysm.derivative),
            "anchor": [format_rational(a) for a in sysm.anchor],
            "delta": list(sysm.delta),
            "kappa1": format_rational(sysm.kappa1),
            "kappa2": sysm.kappa2,
            "stripped": {str(k): v for k, v in sysm.stripped.items()},
        },
        "eliminant": _intpoly(cert.eliminant),
        "D": cert.degree_bound,
        "c": None if cert.scaling is None else str(cert.scaling),
        "B": cert.bound,
        "enclosure": _interval(cert.ratio_enclosure),
        "excluded": cert.excluded,
        "verdict": cert.verdict,
        "hypotheses": list(cert.hypotheses),
        "y_enclosure": _interval(cert.y_enclosure),
        "x_enclosure": _interval(cert.x_enclosure),
        "palindromic": _intpoly(cert.palindromic),
        "irreducible_prime": cert.irreducible_prime,
        "s": cert.s_value,
    }


def certificate_from_obj(obj) -> IrrationalityCertificate:
    s = _require(obj, "system", "certificate")
    value, deriv = poly_from_obj(s["value"]), poly_from_obj(s["derivative"])
    if value.var_names != XY:
        raise FormatError(f"critical system must be in variables {XY}")
    system = CriticalSystem(value, deriv,
                            tuple(parse_rational(a) for a in s["anchor"]),
                            tuple(int(d) for d in s["delta"]),
                            parse_rational(s["kappa1"]), int(s["kappa2"]),
                            {int(k): int(v) for k, v in s.get("stripped", {}).items()})
    return IrrationalityCertificate(
        system, _intpoly_back(obj.get("eliminant")), obj.get("D"),
        None if obj.get("c") is None else int(obj["c"]), obj.get("B"),
        _interval_back(obj.get("enclosure")), bool(obj["excluded"]), obj["verdict"],
        list(obj.get("hypotheses", [])), _interval_back(obj.get("y_enclosure")),
        _interval_back(obj.get("x_enclosure")), _intpoly_back(obj.get("palindromic")),
        obj.get("irreducible_prime"), obj.get("s"))


def serialize_certificate(cert: IrrationalityCertificate) -> str:
    return json.dumps(certificate_to_obj(cert), indent=1)


def parse_certificate(text: str) -> IrrationalityCertificate:
    return certificate_from_obj(_load(text))
