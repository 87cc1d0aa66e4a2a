"""Irrationality certificates for the minimal point of a slice.

If the minimizer's line parameter s were rational, the ratio
r = log X / log Y = k1 / (k2 s) would be a rational P/Q, and X^Q = Y^P.
In the number field K = Q(X, Y) every prime ideal then has Q dividing
v(Y), so Q <= max |v(Y)| <= D * max_p v_p(c), where D bounds [K : Q] and
c * Y, c / Y are algebraic integers.  Enclosing r and checking that no
fraction with denominator at most that bound lies inside proves s is
irrational.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import mpmath
import sympy

from ..conenorm import ConeDesc
from ..dilatation import MinPoint, Segment, minimize_on_slice
from ..groupring import GroupPoly
from .elimination import (CriticalSystem, build_critical_system, first_subresultant_lead,
                          resultant)
from .intpoly import (IntPoly, divides, irreducible_factors, irreducible_mod_p,
                      palindromic_reduce, poly_gcd)

CHECK_PRIMES = (7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83)


class UnitRootError(ValueError):
    pass


class CertificationError(ValueError):
    pass


def mpf_to_fraction(x) -> Fraction:
    if not isinstance(x, mpmath.mpf):
        with mpmath.workdps(60):
            x = mpmath.mpf(x)
    man, exp = x.man_exp
    return Fraction(int(man)) * (Fraction(2) ** int(exp))


def fraction_to_decimal(x: Fraction, digits: int, direction: str) -> str:
    """Decimal string of x rounded outward ('down' or 'up') to ``digits`` places."""
    scaled = x * 10 ** digits
    n = math.floor(scaled) if direction == "down" else math.ceil(scaled)
    sign = "-" if n < 0 else ""
    body = str(abs(n)).rjust(digits + 1, "0")
    return f"{sign}{body[:-digits]}.{body[-digits:]}"


def denominator_bound(eliminant: IntPoly, degree_bound: int) -> tuple[int, int]:
    """(c, B): c * root and c / root are algebraic integers and any rational ratio has denominator <= B."""
    if eliminant.is_zero():
        raise ValueError("zero eliminant")
    lead, const = abs(eliminant.lead), abs(eliminant.const)
    if const == 0:
        raise ValueError("eliminant vanishes at zero; strip the power of x first")
    if lead == 1 and const == 1:
        raise UnitRootError("unit root: no bound (leading and constant coefficients are both +-1)")
    c = math.lcm(lead, const)
    top = max(sympy.factorint(c).values())
    return c, degree_bound * top


def exclude_rationals(enclosure: Sequence, bound: int) -> bool:
    """True iff no p/q with 1 <= q <= bound lies in the closed interval ``enclosure``."""
    lo, hi = (v if isinstance(v, Fraction) else Fraction(str(v)) if isinstance(v, str) else mpf_to_fraction(v)
              for v in enclosure)
    if lo > hi:
        lo, hi = hi, lo
    if bound < 1:
        raise ValueError("denominator bound must be positive")
    if hi - lo >= Fraction(1, 2 * bound * bound):
        raise ValueError(f"enclosure too wide for bound {bound}: width {float(hi - lo):.3g}")
    mid = (lo + hi) / 2
    for q in range(1, bound + 1):
        p = round(mid * q)
        if lo <= Fraction(p, q) <= hi:
            return False
    return True


def isolate_root(poly: IntPoly, approx, rel: Fraction) -> tuple[Fraction, Fraction] | None:
    """A rational interval around ``approx`` on which ``poly`` changes sign, or None."""
    a = mpf_to_fraction(approx)
    r = abs(a) * rel + rel
    lo, hi = a - r, a + r
    if poly.sign_at(lo) * poly.sign_at(hi) < 0:
        return lo, hi
    return None


def refine(poly: IntPoly, lo: Fraction, hi: Fraction, width: Fraction) -> tuple[Fraction, Fraction]:
    """Exact bisection of a sign-change interval down to ``width``."""
    slo = poly.sign_at(lo)
    while hi - lo > width:
        mid = (lo + hi) / 2
        sm = poly.sign_at(mid)
        if sm == 0:
            return mid, mid
        if sm == slo:
            lo = mid
        else:
            hi = mid
    return lo, hi


@dataclass
class IrrationalityCertificate:
    system: CriticalSystem
    eliminant: IntPoly | None
    degree_bound: int | None
    scaling: int | None
    bound: int | None
    ratio_enclosure: tuple[Fraction, Fraction] | None
    excluded: bool
    verdict: str
    hypotheses: list[str] = field(default_factory=list)
    y_enclosure: tuple[Fraction, Fraction] | None = None
    x_enclosure: tuple[Fraction, Fraction] | None = None
    palindromic: IntPoly | None = None
    irreducible_prime: int | None = None
    s_value: str | None = None

    def recheck(self) -> bool:
        """Re-run the exclusion scan from the recorded enclosure and bound alone."""
        if self.verdict != "irrational":
            return False
        return exclude_rationals(self.ratio_enclosure, self.bound)


def _raw_to_fraction(raw) -> Fraction:
    sign, man, exp, _bc = raw
    if not man and exp:
        raise CertificationError("non-finite interval endpoint")
    v = Fraction(int(man)) * Fraction(2) ** int(exp)
    return -v if sign else v


def _iv_hull(lo: Fraction, hi: Fraction):
    a = mpmath.iv.mpf(lo.numerator) / lo.denominator
    b = mpmath.iv.mpf(hi.numerator) / hi.denominator
    return mpmath.iv.mpf([a.a, b.b])


def _select_factor(res: IntPoly, approx, rel: Fraction):
    base, _ = res.strip_x_power()
    if base.is_zero():
        raise CertificationError("resultant vanishes identically: the equations share a component")
    hits = []
    for f in irreducible_factors(base):
        if f.degree < 1:
            continue
        iso = isolate_root(f, approx, rel)
        if iso is not None:
            hits.append((f, iso))
    if len(hits) != 1:
        raise CertificationError(f"{len(hits)} eliminant factors change sign at the numeric root")
    return hits[0]


def _symmetric_check(system: CriticalSystem, x_approx, rel) -> bool:
    """Whether the critical system has an exact solution with Y = 1 at the numeric X."""
    def at_y1(p: GroupPoly) -> IntPoly:
        acc: dict[int, int] = {}
        for (ex, _ey), c in p.terms.items():
            acc[ex] = acc.get(ex, 0) + c
        lo = min(acc)
        return IntPoly([acc.get(k + lo, 0) for k in range(max(acc) - lo + 1)])
    g = poly_gcd(at_y1(system.value), at_y1(system.derivative))
    return g.degree >= 1 and isolate_root(g, x_approx, rel) is not None


def certify_slice(p: GroupPoly, cone: ConeDesc | None, seg: Segment, prec: int = 50,
                  minpoint: MinPoint | None = None, anchor: Sequence | None = None) -> IrrationalityCertificate:
    if minpoint is None:
        minpoint = minimize_on_slice(p, cone, seg, prec)
    system = build_critical_system(p, seg, anchor)
    hyps = [
        "lambda restricted to the slice has a unique critical point, its minimum",
        "the numeric minimizer is the root of the critical system isolated below",
    ]
    work = prec + 20
    rel = Fraction(1, 10 ** (prec - 12))
    with mpmath.workdps(work):
        x = minpoint.lam.log_value
        s = system.s_of(minpoint.coordinates)
        x_num = mpmath.exp(system.kappa1.numerator * x / system.kappa1.denominator)
        y_num = mpmath.exp(system.kappa2 * s * x)
        s_str = mpmath.nstr(s, prec)

    if abs(s) < mpmath.mpf(10) ** (-(prec - 10)):
        if _symmetric_check(system, x_num, rel):
            hyps.append("Y = 1 solves the critical system exactly, so the minimizer is the anchor point")
            return IrrationalityCertificate(system, None, None, None, None, None, False, "rational",
                                            hyps, s_value="0")
        return IrrationalityCertificate(system, None, None, None, None, None, False, "inconclusive",
                                        hyps + ["Y is numerically 1 but not exactly"], s_value=s_str)

    res_y = resultant(system.value, system.derivative, eliminate=0)
    py, y_iso = _select_factor(res_y, y_num, rel)
    prime = next((q for q in CHECK_PRIMES if py.lead % q and irreducible_mod_p(py, q)), None)
    hyps.append("minimal polynomial of Y from exact factorization over Q"
                + (f", confirmed irreducible mod {prime}" if prime else ""))
    pal = palindromic_reduce(py) if py.palindrome_sign() == 1 and py.degree % 2 == 0 else None

    x_rational_in_y = not divides(py, first_subresultant_lead(system.value, system.derivative, 0))
    if x_rational_in_y:
        dx = 1
        hyps.append("X lies in Q(Y): the first subresultant coefficient does not vanish at Y")
    else:
        dx = max(e[0] for e in system.value.support())
        hyps.append(f"[Q(X,Y):Q(Y)] bounded by the X-degree {dx}")
    degree = py.degree * dx

    try:
        c, bound = denominator_bound(py, degree)
    except UnitRootError as err:
        return IrrationalityCertificate(system, py, degree, None, None, None, False, "inconclusive",
                                        hyps + [str(err)], palindromic=pal, irreducible_prime=prime,
                                        s_value=s_str)

    res_x = resultant(system.value, system.derivative, eliminate=1)
    px, x_iso = _select_factor(res_x, x_num, rel)

    target = Fraction(1, 8 * bound * bound)
    width = rel
    while True:
        y_lo, y_hi = refine(py, *y_iso, width=width * abs(y_iso[0]))
        x_lo, x_hi = refine(px, *x_iso, width=width * abs(x_iso[0]))
        with mpmath.workdps(work):
            iv = mpmath.iv
            iv.dps = work
            yi, xi = _iv_hull(y_lo, y_hi), _iv_hull(x_lo, x_hi)
            if 0 in iv.log(yi):
                raise CertificationError("Y enclosure contains 1")
            ratio = iv.log(xi) / iv.log(yi)
            r_lo, r_hi = (_raw_to_fraction(e) for e in ratio._mpi_)
        if r_hi - r_lo < target:
            break
        width /= 2 ** 32
    excluded = exclude_rationals((r_lo, r_hi), bound)
    verdict = "irrational" if excluded else "inconclusive"
    return IrrationalityCertificate(system, py, degree, c, bound, (r_lo, r_hi), excluded, verdict,
                                    hyps, (y_lo, y_hi), (x_lo, x_hi), pal, prime, s_str)
