"""The critical-point system of a slice and its elimination.

Along a line alpha = anchor + s * delta each term of P contributes
lambda^(p_g + s q_g) with p_g = <anchor, g> and q_g = <delta, g>.  Writing
X = lambda^k1 and Y = lambda^(k2 s), where k1 and k2 are the gcds of the
differences of the p_g and of the q_g, turns the value equation and its
s-derivative into integer polynomials in X and Y.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from ..conenorm import pair
from ..dilatation import Segment
from ..groupring import GroupPoly, strip_binomial_factors
from .intpoly import IntPoly

XY = ("X", "Y")


def _frac_gcd(values: Sequence[Fraction]) -> Fraction:
    den = 1
    for v in values:
        den = lcm(den, Fraction(v).denominator)
    g = 0
    for v in values:
        g = gcd(g, int(Fraction(v) * den))
    return Fraction(g, den)


def primitive_direction(direction: Sequence[Fraction]) -> tuple[int, ...]:
    den = 1
    for d in direction:
        den = lcm(den, Fraction(d).denominator)
    ints = [int(Fraction(d) * den) for d in direction]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g == 0:
        raise ValueError("zero direction")
    ints = [v // g for v in ints]
    first = next(v for v in ints if v)
    return tuple(v if first > 0 else -v for v in ints)


def default_anchor(seg: Segment, delta: Sequence[int]) -> tuple[Fraction, ...]:
    """A point of the segment's line with a zero coordinate, integral if possible,
    otherwise with the smallest common denominator."""
    best = None
    for i, d in enumerate(delta):
        if d == 0:
            continue
        tau = -Fraction(seg.start[i]) / d
        pt = tuple(Fraction(a) + tau * di for a, di in zip(seg.start, delta))
        den = 1
        for c in pt:
            den = lcm(den, c.denominator)
        if best is None or den < best[0]:
            best = (den, pt)
    if best is None:
        raise ValueError("segment line has no point with a zero coordinate")
    return best[1]


@dataclass(frozen=True)
class CriticalSystem:
    value: GroupPoly
    derivative: GroupPoly
    anchor: tuple[Fraction, ...]
    delta: tuple[int, ...]
    kappa1: Fraction
    kappa2: int
    stripped: dict = field(default_factory=dict)

    def s_of(self, coords: Sequence) -> object:
        """Line parameter s of a point anchor + s * delta."""
        i = max(range(len(self.delta)), key=lambda k: abs(self.delta[k]))
        c = coords[i]
        a = self.anchor[i]
        if isinstance(c, (int, Fraction)):
            return (Fraction(c) - a) / self.delta[i]
        return (c - a.numerator / type(c)(a.denominator)) / self.delta[i]

    def ratio(self, s):
        """log X / log Y at line parameter s."""
        return self.kappa1.numerator / (self.kappa1.denominator * self.kappa2 * s)


def build_critical_system(p: GroupPoly, seg: Segment,
                          anchor: Sequence | None = None) -> CriticalSystem:
    core, stripped = strip_binomial_factors(p)
    delta = primitive_direction(seg.direction)
    if anchor is None:
        anchor = default_anchor(seg, delta)
    anchor = tuple(Fraction(a) for a in anchor)
    support = core.support()
    ps = [pair(anchor, g) for g in support]
    qs = [int(pair(delta, g)) for g in support]
    pmin, qmin = min(ps), min(qs)
    k1 = _frac_gcd([v - pmin for v in ps])
    k2 = _frac_gcd([v - qmin for v in qs])
    if k1 == 0:
        raise ValueError("anchor pairs equally with every term: X does not occur")
    if k2 == 0:
        raise ValueError("zero derivative polynomial: the segment direction pairs equally with every term")
    k2 = int(k2)
    value, deriv = {}, {}
    for g, pv, qv in zip(support, ps, qs):
        e = (int((pv - pmin) / k1), (qv - qmin) // k2)
        a = core.terms[g]
        value[e] = value.get(e, 0) + a
        deriv[e] = deriv.get(e, 0) + a * qv
    e1 = GroupPoly(XY, value).normalize_unit()
    e2 = GroupPoly(XY, deriv)
    if e2.is_zero():
        raise ValueError("zero derivative polynomial")
    content = 0
    for c in e2.terms.values():
        content = gcd(content, c)
    e2 = GroupPoly(XY, {e: c // content for e, c in e2.terms.items()}).normalize_unit()
    return CriticalSystem(e1, e2, anchor, delta, k1, k2, stripped)


def _coefficients_in(p: GroupPoly, var: int) -> list[IntPoly]:
    """Coefficients of p in variable ``var`` (lowest first) as IntPolys in the other one."""
    if p.nvars == 1:
        other = None
    else:
        (other,) = [i for i in range(p.nvars) if i != var]
    lo_v = min(0, min(e[var] for e in p.support()))
    lo_o = min(0, min(e[other] for e in p.support())) if other is not None else 0
    hi_v = max(e[var] for e in p.support())
    rows: list[dict[int, int]] = [dict() for _ in range(hi_v - lo_v + 1)]
    for e, c in p.terms.items():
        k = e[other] - lo_o if other is not None else 0
        rows[e[var] - lo_v][k] = c
    return [IntPoly([r.get(k, 0) for k in range(max(r, default=-1) + 1)]) for r in rows]


def bareiss_det(rows: list[list[IntPoly]]) -> IntPoly:
    """Fraction-free determinant of a square matrix over Z[x]."""
    a = [list(r) for r in rows]
    n = len(a)
    sign = 1
    prev = IntPoly((1,))
    for k in range(n - 1):
        piv = next((i for i in range(k, n) if not a[i][k].is_zero()), None)
        if piv is None:
            return IntPoly()
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).exact_div(prev)
            a[i][k] = IntPoly()
        prev = a[k][k]
    return a[n - 1][n - 1] * sign if n else IntPoly((1,))


def _sylvester_rows(f: list[IntPoly], g: list[IntPoly]) -> list[list[IntPoly]]:
    m, n = len(f) - 1, len(g) - 1
    size = m + n
    zero = IntPoly()
    rows = []
    for k in range(n):
        row = [zero] * size
        for j, c in enumerate(reversed(f)):
            row[k + j] = c
        rows.append(row)
    for k in range(m):
        row = [zero] * size
        for j, c in enumerate(reversed(g)):
            row[k + j] = c
        rows.append(row)
    return rows


def resultant(p: GroupPoly, q: GroupPoly, eliminate: int = 0) -> IntPoly:
    """Sylvester resultant of two (Laurent) polynomials in at most two variables.

    Laurent inputs are first shifted into the polynomial ring, so the result
    is determined up to a power of the remaining variable and a sign.
    """
    if p.var_names != q.var_names:
        raise ValueError("resultant of polynomials over different variables")
    if p.nvars > 2:
        raise ValueError("resultant needs polynomials in at most two variables")
    f, g = _coefficients_in(p, eliminate), _coefficients_in(q, eliminate)
    if len(f) < 2 and len(g) < 2:
        raise ValueError("degenerate degrees: neither polynomial involves the eliminated variable")
    if len(f) < 2 or len(g) < 2:
        c = f[0] if len(f) < 2 else g[0]
        other = g if len(f) < 2 else f
        out = IntPoly((1,))
        for _ in range(len(other) - 1):
            out = out * c
        return out
    return bareiss_det(_sylvester_rows(f, g))


def first_subresultant_lead(p: GroupPoly, q: GroupPoly, eliminate: int = 0) -> IntPoly:
    """Coefficient of the eliminated variable in the first subresultant of p and q."""
    f, g = _coefficients_in(p, eliminate), _coefficients_in(q, eliminate)
    m, n = len(f) - 1, len(g) - 1
    if m < 1 or n < 1:
        raise ValueError("first subresultant needs positive degrees")
    if m == 1 and n == 1:
        return IntPoly((1,))
    zero = IntPoly()
    width = m + n - 1  # columns for powers m+n-2 .. 0
    rows = []
    for k in range(n - 1):
        row = [zero] * width
        for j, c in enumerate(reversed(f)):
            row[k + j] = c
        rows.append(row)
    for k in range(m - 1):
        row = [zero] * width
        for j, c in enumerate(reversed(g)):
            row[k + j] = c
        rows.append(row)
    # keep the leading m+n-3 columns and the column of the first power
    keep = list(range(m + n - 3)) + [width - 2]
    return bareiss_det([[r[j] for j in keep] for r in rows])
