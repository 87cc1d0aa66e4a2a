"""Closed-orbit classes read off powers of a group-ring transition matrix.

A term c * t^e on the diagonal of M^m records c closed orbits of period m
through that cell; their homology class is (m, -e) in the (u, t) basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .conenorm import drilling_equivalent
from .groupring import DimensionError
from .polymat import PolyMatrix, mat_mul


def orbit_class_from_term(m: int, exponent: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """The single place the sign convention lives: a t^e entry is the class t^-e."""
    return m, tuple(-e for e in exponent)


@dataclass(frozen=True)
class OrbitClass:
    u_degree: int
    t_class: tuple[int, ...]
    multiplicity: int
    through_cell: int

    @property
    def vector(self) -> tuple[int, ...]:
        return (self.u_degree,) + self.t_class


def census(m: PolyMatrix, max_power: int) -> list[OrbitClass]:
    if not m.is_square:
        raise DimensionError(f"census needs a square matrix, got {m.rows}x{m.cols}")
    if max_power < 1:
        raise ValueError("max_power must be at least 1")
    if any(c < 0 for e in m.entries for c in e.terms.values()):
        raise ValueError("transition matrices have nonnegative coefficients")
    out = []
    power = m
    for k in range(1, max_power + 1):
        if k > 1:
            power = mat_mul(power, m)
        for i in range(m.rows):
            for e, c in power[i, i].sorted_terms():
                deg, cls = orbit_class_from_term(k, e)
                out.append(OrbitClass(deg, cls, c, i))
    return out


def _vector(c) -> tuple[int, ...]:
    return c.vector if isinstance(c, OrbitClass) else tuple(int(v) for v in c)


def drilling_class_representatives(classes: Iterable, x: Sequence[int]) -> list:
    """One representative per class of parallel x + c, in input order."""
    reps: list = []
    for c in classes:
        v = _vector(c)
        if len(v) != len(x):
            raise DimensionError(f"class {v} and covector {tuple(x)} differ in length")
        if not any(drilling_equivalent(v, _vector(r), x) for r in reps):
            reps.append(c)
    return reps
