"""Embedded data and target values for the three worked examples."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import mpmath

from .certify import certify_slice, exclude_rationals, irreducible_mod_p
from .certify.intpoly import IntPoly
from .conenorm import fibered_cone
from .dilatation import Segment, minimize_on_slice, segment_from_covector
from .groupring import GroupPoly, parse_poly
from .penner import PennerSpec, TwistStep, phi, symmetry_check
from .polymat import PolyMatrix, teichmuller_from_transition

T = ("t",)
UT = ("u", "t")

TRANSITION_5X5 = [
    ["t+4+t^-1", "t+3+t^-1", "t+1", "1+t^-1", "0"],
    ["1", "1", "0", "0", "0"],
    ["2*t+7+6*t^-1+t^-2", "2*t+7+6*t^-1+t^-2", "t+4+t^-1", "3+6*t^-1+t^-2", "t^-1"],
    ["2*t^2+9*t+10+3*t^-1", "2*t^2+9*t+10+3*t^-1", "t^2+5*t+3", "3*t+9+3*t^-1", "1"],
    ["2*t^2+9*t+8+t^-1", "2*t^2+9*t+8+t^-1", "t^2+5*t+1", "3*t+8+t^-1", "2"],
]

THETA_EXAMPLE1 = ("(u-1)*(u^2-(5*t+19+5*t^-1)*u+(14*t+48+14*t^-1)-(5*t+19+5*t^-1)*u^-1+u^-2)")

ELIMINANT_F = IntPoly.from_high([200, -9530, 128025, -778216, 2422552, -3782016, 2354832])

INTERSECTION_62 = [["t+1", "1"], ["t+4", "1+t^-1"], ["2*t", "2"]]
WORD_62 = (("a", (1, 1, 1)), ("b", (1, 1)), ("a", (2, 1, 1)), ("b", (2, 1)))
PROPORTIONAL_WORD_62 = (("a", (1, 1, 1)), ("b", (1, 1)), ("a", (2, 2, 2)), ("b", (3, 3)))
QUARTIC_62 = ("u^4-(78*t^2+785*t+1929+779*t^-1+77*t^-2)*u^3"
              "+(25*t^2+2673*t+21326+2673*t^-1+25*t^-2)*u^2"
              "-(77*t^2+779*t+1929+785*t^-1+78*t^-2)*u+1")

MAGIC_POLY = "x*y*z^-1 - x - y - x*z^-1 - y*z^-1 + 1"
MAGIC_VARS = ("x", "y", "z")
MAGIC_SEGMENT = Segment((2, 0, -2), (5, 2, 2))
MAGIC_REF = (Fraction(7, 2), 1, 0)


def transition_matrix() -> PolyMatrix:
    return PolyMatrix.from_rows([[parse_poly(e, T) for e in row] for row in TRANSITION_5X5], T)


def theta_example1() -> GroupPoly:
    return parse_poly(THETA_EXAMPLE1, UT)


def intersection_62() -> PolyMatrix:
    return PolyMatrix.from_rows([[parse_poly(e, T) for e in row] for row in INTERSECTION_62], T)


def penner_spec_62(word=WORD_62) -> PennerSpec:
    return PennerSpec(intersection_62(), tuple(TwistStep(k, v) for k, v in word), 14)


def phi_62_expected() -> GroupPoly:
    return parse_poly(f"(u-1)^10*({QUARTIC_62})", UT).normalize_unit()


def magic_poly() -> GroupPoly:
    return parse_poly(MAGIC_POLY, MAGIC_VARS)


@dataclass
class Check:
    name: str
    passed: bool
    value: str
    target: str

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'}  {self.name}: {self.value} (target {self.target})"


@dataclass
class Report:
    preset: str
    checks: list[Check] = field(default_factory=list)
    failed_stage: str | None = None

    @property
    def ok(self) -> bool:
        return self.failed_stage is None and all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, value, target) -> None:
        self.checks.append(Check(name, bool(passed), str(value), str(target)))

    def close(self, name: str, value, target, tol) -> None:
        with mpmath.workdps(60):
            err = abs(mpmath.mpf(value) - mpmath.mpf(target))
            self.add(name, err <= mpmath.mpf(tol), mpmath.nstr(value, 20), f"{target} +- {tol}")

    def text(self) -> str:
        lines = [f"reproduce {self.preset}"]
        lines += ["  " + c.line() for c in self.checks]
        if self.failed_stage:
            lines.append(f"  FAIL  stage {self.failed_stage} aborted")
        lines.append(f"  {'OK' if self.ok else 'FAILED'}")
        return "\n".join(lines)

    def to_obj(self) -> dict:
        return {"preset": self.preset, "ok": self.ok, "failed_stage": self.failed_stage,
                "checks": [c.__dict__ for c in self.checks]}


class _Stage:
    def __init__(self, report: Report, name: str):
        self.report, self.name = report, name

    def __enter__(self):
        return self

    def __exit__(self, kind, err, tb):
        if err is not None and isinstance(err, Exception):
            self.report.failed_stage = f"{self.name} ({type(err).__name__}: {err})"
            raise _Abort from err
        return False


class _Abort(Exception):
    pass


def _tol(prec: int, slack: int) -> str:
    return f"1e-{max(prec - slack, 1)}"


def reproduce_example1(prec: int = 50) -> Report:
    rep = Report("example1")
    try:
        with _Stage(rep, "teichmuller polynomial"):
            theta = teichmuller_from_transition(transition_matrix())
            rep.add("Theta equals the expanded (u-1)(u^2-...) form", theta.normalize_unit()
                    == theta_example1().normalize_unit(), "exact", "exact")
        with _Stage(rep, "cone"):
            cone = fibered_cone(theta, (1, 0))
            walls = set(cone.pruned())
            rep.add("cone is x1 > |x2|", walls == {(1, 1), (1, -1)}, sorted(walls), "[(1, -1), (1, 1)]")
        with _Stage(rep, "drilled minimum"):
            seg = segment_from_covector(cone, (3, 1))
            m = minimize_on_slice(theta, cone, seg, prec)
            rep.close("drilled s", m.coordinates[0], "0.365002", "1e-5")
            rep.close("drilled lambda", m.lam.value, "11506.21849", "1e-2")
            rep.add("first-order residual", m.first_order_residual <= mpmath.mpf(10) ** (5 - prec),
                    mpmath.nstr(m.first_order_residual, 5), f"<= 1e{5 - prec}")
        with _Stage(rep, "branched minimum"):
            mb = minimize_on_slice(theta, cone, segment_from_covector(cone, (6, 2)), prec)
            with mpmath.workdps(prec + 20):
                diff = max(abs(a - 2 * b) for a, b in zip(m.coordinates, mb.coordinates))
            rep.add("branched minimum is half the drilled one", diff <= mpmath.mpf(10) ** (10 - prec),
                    mpmath.nstr(diff, 5), f"<= 1e{10 - prec}")
        with _Stage(rep, "base minimum"):
            m0 = minimize_on_slice(theta, cone, segment_from_covector(cone, (2, 0)), prec)
            off = abs(m0.parameter - mpmath.mpf(1) / 2)
            rep.add("base minimum is the midpoint", off <= mpmath.mpf(10) ** (10 - prec),
                    mpmath.nstr(off, 5), f"<= 1e{10 - prec}")
        with _Stage(rep, "certificate"):
            cert = certify_slice(theta, cone, seg, prec, minpoint=m)
            rep.add("palindromic eliminant equals f", cert.palindromic == ELIMINANT_F,
                    cert.palindromic, ELIMINANT_F)
            rep.add("f irreducible mod 7", irreducible_mod_p(ELIMINANT_F, 7), "true", "true")
            y = (cert.y_enclosure[0] + cert.y_enclosure[1]) / 2
            with mpmath.workdps(40):
                y_mp = mpmath.mpf(y.numerator) / y.denominator
                rep.close("A = Y + 1/Y", y_mp + 1 / y_mp, "30.38934206615629", "1e-10")
                rep.close("Y", y_mp, "30.35640008366680", "1e-10")
                x = (cert.x_enclosure[0] + cert.x_enclosure[1]) / 2
                rep.close("X", mpmath.mpf(x.numerator) / x.denominator, "11506.21849", "1e-2")
                r = (cert.ratio_enclosure[0] + cert.ratio_enclosure[1]) / 2
                rep.close("log X / log Y", mpmath.mpf(r.numerator) / r.denominator, "2.739707", "1e-5")
            rep.add("denominator bound B >= 36", cert.bound >= 36, cert.bound, ">= 36")
            rep.add("rationals with q <= B excluded", cert.excluded, cert.excluded, True)
            rep.add("verdict", cert.verdict == "irrational", cert.verdict, "irrational")
    except _Abort:
        pass
    return rep


def reproduce_penner62(prec: int = 50) -> Report:
    rep = Report("penner62")
    try:
        with _Stage(rep, "phi"):
            spec = penner_spec_62()
            p = phi(spec)
            rep.add("Phi equals (u-1)^10 times the quartic", p == phi_62_expected(), "exact", "exact")
            rep.add("Phi is not t-symmetric", not symmetry_check(spec), "false", "false")
            rep.add("proportional word gives a t-symmetric Phi",
                    symmetry_check(penner_spec_62(PROPORTIONAL_WORD_62)), "true", "true")
        with _Stage(rep, "minimum"):
            cone = fibered_cone(p, (1, 0))
            seg = segment_from_covector(cone, (4, 0))
            m = minimize_on_slice(p, cone, seg, prec)
            # the printed quartic is written in t; the coordinate is reported dual to t^-1
            s = -m.coordinates[1]
            rep.close("s", s, "0.0001117568645", "1e-12")
            with mpmath.workdps(prec + 10):
                rep.close("1/(4s)", 1 / (4 * s), "2236.999051", "1e-4")
        with _Stage(rep, "certificate"):
            cert = certify_slice(p, cone, seg, prec, minpoint=m)
            q = max(cert.bound or 0, 40)
            rep.add(f"rationals with q <= {q} excluded", exclude_rationals(cert.ratio_enclosure, q),
                    True, True)
            rep.add("verdict", cert.verdict == "irrational", cert.verdict, "irrational")
    except _Abort:
        pass
    return rep


def reproduce_magic72(prec: int = 50) -> Report:
    rep = Report("magic72")
    try:
        with _Stage(rep, "minimum"):
            theta = magic_poly()
            cone = fibered_cone(theta, MAGIC_REF)
            m = minimize_on_slice(theta, cone, MAGIC_SEGMENT, prec)
            rep.close("t", m.parameter, "0.528944", "1e-5")
            with mpmath.workdps(prec + 10):
                rep.close("2/t", 2 / m.parameter, "3.781116", "1e-5")
        with _Stage(rep, "certificate"):
            cert = certify_slice(theta, cone, MAGIC_SEGMENT, prec, minpoint=m)
            q = max(cert.bound or 0, 16)
            rep.add(f"rationals with q <= {q} excluded", exclude_rationals(cert.ratio_enclosure, q),
                    True, True)
            rep.add("verdict", cert.verdict == "irrational", cert.verdict, "irrational")
    except _Abort:
        pass
    return rep


PRESETS = {
    "example1": reproduce_example1,
    "penner62": reproduce_penner62,
    "magic72": reproduce_magic72,
}


def reproduce(preset: str, prec: int = 50) -> Report:
    if preset not in PRESETS:
        raise ValueError(f"unknown preset {preset!r}; choose from {sorted(PRESETS)}")
    return PRESETS[preset](prec)
