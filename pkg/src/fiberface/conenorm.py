"""Fibered cones, the Teichmuller norm, and slice covectors.

Cohomology classes are plain tuples of exact rationals (or mpmath reals);
covectors are tuples of ints.  A class pairs with a group-ring exponent
vector by the dot product.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from .groupring import DimensionError, GroupPoly


def pair(alpha: Sequence, g: Sequence) -> object:
    if len(alpha) != len(g):
        raise DimensionError(f"cannot pair length {len(alpha)} with length {len(g)}")
    return sum((a * x for a, x in zip(alpha, g)), Fraction(0))


def as_class(values) -> tuple:
    """Coerce ints/strings/Fractions to an exact class; mpmath values pass through."""
    out = []
    for v in values:
        if isinstance(v, (int, Fraction)):
            out.append(Fraction(v))
        elif isinstance(v, str):
            out.append(Fraction(v.strip()))
        else:
            out.append(v)
    return tuple(out)


def primitive(v: Sequence[int]) -> tuple[int, ...]:
    g = 0
    for x in v:
        g = gcd(g, int(x))
    if g == 0:
        return tuple(int(x) for x in v)
    return tuple(int(x) // g for x in v)


@dataclass(frozen=True)
class ConeDesc:
    """Open cone {alpha : <alpha, n> > 0 for every n in inequalities}."""

    var_names: tuple[str, ...]
    dominant: tuple[int, ...]
    inequalities: tuple[tuple[int, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.var_names)

    def contains(self, alpha: Sequence) -> bool:
        return all(pair(alpha, n) > 0 for n in self.inequalities)

    def pruned(self) -> tuple[tuple[int, ...], ...]:
        """Primitive inequalities with redundant ones removed (2D only; else just deduplicated)."""
        prim = list(dict.fromkeys(primitive(n) for n in self.inequalities))
        if self.dim != 2 or len(prim) <= 2:
            return tuple(prim)
        r1, r2 = self.extreme_rays()
        # the facet normals of a 2D wedge are the rotations of its edge rays
        walls = []
        for ray, other in ((r1, r2), (r2, r1)):
            n = (-ray[1], ray[0])
            if pair(other, n) < 0:
                n = (ray[1], -ray[0])
            walls.append(primitive(n))
        return tuple(walls)

    def extreme_rays(self) -> tuple[tuple[int, int], tuple[int, int]]:
        """The two primitive edge rays of a 2D cone, counterclockwise-first."""
        if self.dim != 2:
            raise DimensionError("extreme rays are only computed for two-dimensional cones")
        prim = list(dict.fromkeys(primitive(n) for n in self.inequalities))
        candidates = set()
        for n in prim:
            for ray in ((-n[1], n[0]), (n[1], -n[0])):
                if all(pair(ray, m) >= 0 for m in prim):
                    candidates.add(primitive(ray))
        if len(candidates) != 2:
            raise ValueError("cone is not a proper two-dimensional wedge")
        return tuple(sorted(candidates, key=lambda r: -math.atan2(r[1], r[0])))


def teich_norm(p: GroupPoly, alpha: Sequence) -> object:
    if p.is_zero():
        raise ValueError("norm of the zero polynomial")
    vals = [pair(alpha, g) for g in p.support()]
    return max(vals) - min(vals)


def fibered_cone(p: GroupPoly, ref: Sequence) -> ConeDesc:
    if p.is_zero():
        raise ValueError("cone of the zero polynomial")
    ref = as_class(ref)
    scored = sorted(((pair(ref, g), g) for g in p.support()), reverse=True)
    if len(scored) > 1 and scored[0][0] == scored[1][0]:
        raise ValueError(f"tie at reference: {scored[0][1]} and {scored[1][1]} pair equally with {ref}")
    top = scored[0][1]
    ineqs = tuple(dict.fromkeys(tuple(a - b for a, b in zip(top, g)) for _, g in scored[1:]))
    cone = ConeDesc(p.var_names, top, ineqs)
    assert cone.contains(ref)
    return cone


def slice_covector(x: Sequence[int], c: Sequence[int] | None = None,
                   mode: str = "base", d: int | None = None) -> tuple[int, ...]:
    """base: x; drill: x + c; branch: d*x + (d-1)*c."""
    x = tuple(int(v) for v in x)
    if mode == "base":
        return x
    if c is None:
        raise ValueError(f"{mode} slice needs an orbit class c")
    c = tuple(int(v) for v in c)
    if len(c) != len(x):
        raise DimensionError("x and c have different lengths")
    if mode == "drill":
        return tuple(a + b for a, b in zip(x, c))
    if mode == "branch":
        if d is None or d < 2:
            raise ValueError(f"branched cover degree must be at least 2, got {d}")
        return tuple(d * a + (d - 1) * b for a, b in zip(x, c))
    raise ValueError(f"unknown slice mode {mode!r}")


@dataclass(frozen=True)
class FiberTopology:
    neg_chi: int
    meridian_count: int
    primitive_orbit: bool  # meridian_count counts boundary components only when True


def fiber_topology(beta: Sequence[int], x: Sequence[int], c: Sequence[int] | None = None,
                   mode: str = "base", d: int | None = None) -> FiberTopology:
    w = slice_covector(x, c, mode, d)
    neg_chi = int(pair(beta, w))
    if neg_chi <= 0:
        raise ValueError(f"class {tuple(beta)} pairs to {neg_chi} <= 0: outside the fibered cone")
    if c is None:
        return FiberTopology(neg_chi, 0, True)
    prim = primitive(c) == tuple(int(v) for v in c)
    return FiberTopology(neg_chi, int(pair(beta, c)), prim)


def _parallel(a: Sequence, b: Sequence) -> bool:
    n = len(a)
    return all(a[i] * b[j] == a[j] * b[i] for i in range(n) for j in range(i + 1, n))


def drilling_equivalent(c1: Sequence[int], c2: Sequence[int], x: Sequence[int]) -> bool:
    return _parallel([a + b for a, b in zip(x, c1)], [a + b for a, b in zip(x, c2)])


def branched_admissible(c: Sequence[int], torsion_order: int = 1) -> tuple[int, bool]:
    if torsion_order < 1:
        raise ValueError("torsion order must be positive")
    d = 0
    for v in c:
        d = gcd(d, int(v))
    if d == 0:
        raise ValueError("branched class must be nonzero")
    return d, d > 1 and gcd(d, torsion_order) == 1
