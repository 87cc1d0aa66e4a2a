"""The dilatation function on a fibered cone.

For a class alpha inside the cone, lambda(alpha) is the largest k > 1 with
sum_g a_g k^<alpha,g> = 0.  All root finding happens in x = log k after
dividing by the dominant term, so the function being solved is

    h(x) = 1 + sum_{g != g*} (a_g / a_*) exp(-gamma_g x),  gamma_g = <alpha, g* - g> > 0,

which stays well scaled however large lambda gets.  Bracketing runs in
machine floats; polishing runs in mpmath at the requested digits plus a
guard.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import mpmath

from .conenorm import ConeDesc, as_class, pair
from .groupring import GroupPoly, strip_binomial_factors

GUARD_DIGITS = 12
SCAN_POINTS = 400


class RootNotFound(ValueError):
    pass


class DegenerateRoot(ValueError):
    pass


class BoundaryMinimum(ValueError):
    pass


def _mp(v):
    """Exact conversion of an int/Fraction/mpf to mpf at the current precision."""
    if isinstance(v, Fraction):
        return mpmath.mpf(v.numerator) / v.denominator
    return mpmath.mpf(v)


@dataclass(frozen=True)
class Segment:
    """alpha(sigma) = (1 - sigma) * start + sigma * end for sigma in (0, 1)."""

    start: tuple
    end: tuple
    w: tuple[int, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "start", as_class(self.start))
        object.__setattr__(self, "end", as_class(self.end))
        if len(self.start) != len(self.end):
            raise ValueError("segment endpoints have different lengths")
        if self.start == self.end:
            raise ValueError("degenerate segment: start equals end")
        if self.w is not None:
            object.__setattr__(self, "w", tuple(int(v) for v in self.w))

    @property
    def direction(self) -> tuple:
        return tuple(b - a for a, b in zip(self.start, self.end))

    def point(self, sigma) -> tuple:
        return tuple(a + sigma * d for a, d in zip(self.start, self.direction))

    def point_mp(self, sigma) -> tuple:
        return tuple(_mp(a) + sigma * _mp(d) for a, d in zip(self.start, self.direction))

    def scaled(self, k) -> "Segment":
        k = Fraction(k)
        return Segment(tuple(a * k for a in self.start), tuple(a * k for a in self.end), None)


@dataclass(frozen=True)
class DilatationValue:
    value: mpmath.mpf
    log_value: mpmath.mpf
    residual: mpmath.mpf
    bracket: tuple
    precision: int


@dataclass(frozen=True)
class MinPoint:
    parameter: mpmath.mpf
    coordinates: tuple
    lam: DilatationValue
    first_order_residual: mpmath.mpf
    norm_check: mpmath.mpf | None
    segment: Segment = field(repr=False)


@dataclass(frozen=True)
class AModulePresentation:
    coordinates: tuple
    pairing: mpmath.mpf
    rational_flags: tuple[str, ...]


class _Terms:
    """Coefficients and exponent data of P along alpha, relative to the dominant term."""

    def __init__(self, p: GroupPoly, alpha: Sequence, exact: bool):
        self.support = p.support()
        self.coeffs = [p.terms[g] for g in self.support]
        if exact:
            vals = [pair(alpha, g) for g in self.support]
        else:
            vals = [mpmath.fsum(_mp(a) * x for a, x in zip(alpha, g)) for g in self.support]
        order = sorted(range(len(vals)), key=lambda i: vals[i], reverse=True)
        top = order[0]
        if len(order) > 1 and vals[order[1]] >= vals[top]:
            raise RootNotFound(f"class {tuple(alpha)} ties two support points: outside the fibered cone")
        self.top = top
        self.exps = vals
        self.gaps = [vals[top] - v for v in vals]

    def h_float(self, x: float) -> float:
        a0 = self.coeffs[self.top]
        s = 0.0
        for a, gam in zip(self.coeffs, self.gaps):
            s += a / a0 * math.exp(-float(gam) * x)
        return s

    def h_mp(self, x):
        a0 = self.coeffs[self.top]
        return mpmath.fsum(mpmath.mpf(a) / a0 * mpmath.exp(-_mp(g) * x)
                           for a, g in zip(self.coeffs, self.gaps))

    def dh_mp(self, x):
        a0 = self.coeffs[self.top]
        return mpmath.fsum(-_mp(g) * a / a0 * mpmath.exp(-_mp(g) * x)
                           for a, g in zip(self.coeffs, self.gaps) if g != 0)

    def upper_bound(self) -> float:
        """A log-scale point above which h > 0."""
        a0 = abs(self.coeffs[self.top])
        rest = [(abs(a) / a0, float(g)) for a, g in zip(self.coeffs, self.gaps) if g != 0]
        if not rest:
            raise RootNotFound("monomial has no roots")
        total = sum(r for r, _ in rest)
        gmin = min(g for _, g in rest)
        return math.log1p(total) / gmin * 1.0001 + 1e-12


def _bracket(terms: _Terms, use_mp: bool) -> tuple[float, float]:
    xu = terms.upper_bound()
    h = (lambda x: terms.h_mp(mpmath.mpf(x))) if use_mp else terms.h_float
    n = SCAN_POINTS
    for _ in range(4):
        prev = xu
        for i in range(1, n):
            x = xu * (1 - i / n)
            if h(x) <= 0:
                return x, prev
            prev = x
        n *= 8
    raise RootNotFound("no root above 1: no sign change found")


def eval_lambda(p: GroupPoly, alpha: Sequence, cone: ConeDesc | None = None,
                prec: int = 50) -> DilatationValue:
    """Largest root k > 1 of sum_g a_g k^<alpha, g>, to ``prec`` digits."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    exact = all(isinstance(v, (int, Fraction, str)) for v in alpha)
    if exact:
        alpha = as_class(alpha)
    if cone is not None and not cone.contains(alpha):
        raise RootNotFound(f"class {tuple(alpha)} is outside the fibered cone")
    with mpmath.workdps(prec + GUARD_DIGITS):
        terms = _Terms(p, alpha, exact)
        lo, hi = _bracket(terms, use_mp=False)
    top_exp = float(terms.exps[terms.top])
    work = prec + GUARD_DIGITS + max(0, math.ceil(top_exp * hi / math.log(10)))
    with mpmath.workdps(work):
        terms = _Terms(p, alpha, exact)
        lo, hi = mpmath.mpf(lo), mpmath.mpf(hi)
        if not (terms.h_mp(lo) <= 0 < terms.h_mp(hi)):
            lo, hi = map(mpmath.mpf, _bracket(terms, use_mp=True))
        x = _polish(terms, lo, hi, work)
        eps = mpmath.mpf(10) ** (-(prec + 4)) * max(1, x)
        blo, bhi = x - eps, x + eps
        if not terms.h_mp(blo) * terms.h_mp(bhi) <= 0:
            blo, bhi = lo, hi
        lam = mpmath.exp(x)
        raw = abs(terms.coeffs[terms.top]) * mpmath.exp(_mp(terms.exps[terms.top]) * x) * abs(terms.h_mp(x))
        return DilatationValue(lam, x, raw, (mpmath.exp(blo), mpmath.exp(bhi)), prec)


def _polish(terms: _Terms, lo, hi, work: int):
    """Safeguarded Newton on h inside a sign-change bracket [lo, hi]."""
    tol = mpmath.mpf(10) ** (-(work - 4))
    hlo = terms.h_mp(lo)
    x = (lo + hi) / 2
    for _ in range(400):
        hx = terms.h_mp(x)
        if hx == 0:
            return x
        if (hx < 0) == (hlo < 0):
            lo, hlo = x, hx
        else:
            hi = x
        d = terms.dh_mp(x)
        nx = x - hx / d if d != 0 else None
        if nx is None or not (lo < nx < hi):
            nx = (lo + hi) / 2
        if abs(nx - x) <= tol * max(1, abs(x)):
            return nx
        x = nx
    return x


def directional_derivative(p: GroupPoly, alpha: Sequence, v: Sequence,
                           cone: ConeDesc | None = None, prec: int = 50):
    """d/de lambda(alpha + e v) at e = 0, by implicit differentiation."""
    if all(c == 0 for c in v):
        return mpmath.mpf(0)
    lam = eval_lambda(p, alpha, cone, prec)
    exact = all(isinstance(c, (int, Fraction, str)) for c in alpha)
    with mpmath.workdps(prec + GUARD_DIGITS):
        terms = _Terms(p, as_class(alpha) if exact else alpha, exact)
        x = lam.log_value
        a0 = terms.coeffs[terms.top]
        num, den, scale = [], [], []
        for a, g, gap, e in zip(terms.coeffs, terms.support, terms.gaps, terms.exps):
            w = mpmath.mpf(a) / a0 * mpmath.exp(-_mp(gap) * x)
            num.append(w * mpmath.fsum(_mp(c) * gi for c, gi in zip(v, g)))
            den.append(w * _mp(e))
            scale.append(abs(den[-1]))
        n, d = mpmath.fsum(num), mpmath.fsum(den)
        if abs(d) <= mpmath.mpf(10) ** (-(prec - 2)) * mpmath.fsum(scale):
            raise DegenerateRoot("the root is not simple: implicit derivative undefined")
        return -lam.value * x * n / d


def segment_from_covector(cone: ConeDesc, w: Sequence[int]) -> Segment:
    """Cut the two walls of a two-dimensional cone with the line <alpha, w> = 1."""
    if cone.dim != 2:
        raise ValueError(f"segment_from_covector needs a two-dimensional cone, got dimension {cone.dim}")
    ends = []
    for ray in cone.extreme_rays():
        k = pair(ray, w)
        if k <= 0:
            raise ValueError(f"covector {tuple(w)} is not positive on the cone ray {ray}")
        ends.append(tuple(Fraction(r) / k for r in ray))
    return Segment(ends[0], ends[1], tuple(w))


def core_polynomial(p: GroupPoly) -> GroupPoly:
    """P with every (v - 1) factor removed; such factors have no roots above 1."""
    return strip_binomial_factors(p)[0]


class _SliceSystem:
    """Value equation H and first-order equation G along a segment, normalized by the dominant term."""

    def __init__(self, p: GroupPoly, seg: Segment):
        mid = seg.point(Fraction(1, 2))
        terms = _Terms(p, mid, True)
        self.top = terms.top
        self.coeffs = [mpmath.mpf(a) / terms.coeffs[terms.top] for a in terms.coeffs]
        self.base = [pair(seg.start, g) for g in terms.support]
        self.slope = [pair(seg.direction, g) for g in terms.support]

    def evaluate(self, x, sigma):
        """(H, G, dH/dx, dH/ds, dG/dx, dG/ds, sum a e E)."""
        t = self.top
        e_top = _mp(self.base[t]) + sigma * _mp(self.slope[t])
        d_top = _mp(self.slope[t])
        H = G = Hx = Hs = Gx = Gs = S = mpmath.mpf(0)
        for a, b, d in zip(self.coeffs, self.base, self.slope):
            d = _mp(d)
            e = _mp(b) + sigma * d
            gp = e - e_top
            E = a * mpmath.exp(gp * x)
            H += E
            G += d * E
            Hx += gp * E
            Hs += x * (d - d_top) * E
            Gx += d * gp * E
            Gs += x * d * (d - d_top) * E
            S += e * E
        return H, G, Hx, Hs, Gx, Gs, S


def minimize_on_slice(p: GroupPoly, cone: ConeDesc | None, seg: Segment,
                      prec: int = 50) -> MinPoint:
    """The unique interior minimizer of lambda on an open segment of the cone."""
    core = core_polynomial(p)
    mid = seg.point(Fraction(1, 2))
    if cone is not None:
        if not cone.contains(mid):
            raise ValueError("segment interior is outside the fibered cone")
        for end in (seg.start, seg.end):
            if any(pair(end, n) < 0 for n in cone.inequalities):
                raise ValueError(f"segment endpoint {end} lies outside the closed cone")

    def loglam(sigma: float) -> float:
        pt = tuple(a + Fraction(sigma) * d for a, d in zip(seg.start, seg.direction))
        return float(eval_lambda(core, pt, None, prec=15).log_value)

    # golden-section search on log lambda, which is unimodal along segments
    invphi = (math.sqrt(5) - 1) / 2
    a, b = 0.0, 1.0
    c, d = b - invphi * (b - a), a + invphi * (b - a)
    fc, fd = loglam(c), loglam(d)
    while b - a > 1e-9:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = loglam(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = loglam(d)
    sigma0 = (a + b) / 2
    if sigma0 < 1e-7 or sigma0 > 1 - 1e-7:
        raise BoundaryMinimum(f"minimum at boundary (sigma = {sigma0:.3g}): bad segment")

    work = prec + 2 * GUARD_DIGITS
    with mpmath.workdps(work):
        system = _SliceSystem(core, seg)
        sigma = mpmath.mpf(sigma0)
        x = eval_lambda(core, seg.point_mp(sigma), None, prec=30).log_value
        tol = mpmath.mpf(10) ** (-(prec + GUARD_DIGITS))
        for _ in range(100):
            H, G, Hx, Hs, Gx, Gs, _S = system.evaluate(x, sigma)
            det = Hx * Gs - Hs * Gx
            if det == 0:
                raise DegenerateRoot("singular Jacobian while polishing the minimum")
            dx = (-H * Gs + G * Hs) / det
            ds = (-G * Hx + H * Gx) / det
            step = 1
            while not (0 < sigma + step * ds < 1 and x + step * dx > 0):
                step /= 2
            x, sigma = x + step * dx, sigma + step * ds
            if abs(dx) < tol * max(1, abs(x)) and abs(ds) < tol:
                break
        H, G, *_rest, S = system.evaluate(x, sigma)
        fo_residual = abs(x * G / S)
        coords = seg.point_mp(sigma)
        lam = eval_lambda(core, coords, None, prec)
        if abs(lam.log_value - x) > mpmath.mpf(10) ** (-(prec - 5)) * max(1, x):
            raise RootNotFound("polished critical point is not on the largest-root branch")
        norm = None
        if seg.w is not None:
            norm = mpmath.fsum(c * wi for c, wi in zip(coords, seg.w))
        return MinPoint(sigma, coords, lam, fo_residual, norm, seg)


def a_module_presentation(minpoint: MinPoint, x: Sequence[int] | None = None,
                          certificate=None) -> AModulePresentation:
    """Coordinates of the minimal point and what is known about their rationality.

    ``x`` is the class dual to the slice (the segment's covector by default),
    so the minimal point pairs with it to 1.  A coordinate constant along the
    segment is an exact rational; the others are affine in the segment
    parameter, so they share its verdict.
    """
    if x is None:
        x = minpoint.segment.w
    if x is None:
        raise ValueError("no dual class: pass x or use a segment built from a covector")
    coords = minpoint.coordinates
    pairing = mpmath.fsum(c * xi for c, xi in zip(coords, x))
    if abs(pairing - 1) > mpmath.mpf(10) ** -10:
        raise ValueError(f"norm check failed: <m, x> = {mpmath.nstr(pairing, 15)}, expected 1")
    verdict = getattr(certificate, "verdict", None)
    flags = []
    for d in minpoint.segment.direction:
        if d == 0 or verdict == "rational":
            flags.append("rational")
        elif verdict == "irrational":
            flags.append("irrational")
        else:
            flags.append("unknown")
    return AModulePresentation(tuple(coords), pairing, tuple(flags))
