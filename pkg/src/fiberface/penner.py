"""The polynomial Phi of a generic Penner word.

A Penner word alternates positive multi-twists along a family of
disjoint curves ``a_1..a_m`` with negative multi-twists along a second
family ``b_1..b_n``.  Over the group ring each multi-twist acts on the
branch module by a unipotent block matrix built from the intersection
matrix, and Phi is (u-1)^(r-m-n) times the characteristic polynomial of
the product.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .groupring import GroupPoly
from .polymat import PolyMatrix, char_det, mat_mul


class DegenerateCurveSystem(ValueError):
    pass


@dataclass(frozen=True)
class TwistStep:
    kind: str  # "a" or "b"
    mult: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in ("a", "b"):
            raise ValueError(f"twist kind must be 'a' or 'b', got {self.kind!r}")
        object.__setattr__(self, "mult", tuple(int(x) for x in self.mult))
        if any(x < 0 for x in self.mult):
            raise ValueError(f"negative twist multiplicity in {self.mult}")


@dataclass(frozen=True)
class PennerSpec:
    intersection: PolyMatrix  # m x n over the surface-homology variables
    word: tuple[TwistStep, ...]
    r: int
    u_var: str = "u"
    generic: bool = True
    m: int = field(init=False)
    n: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(self.word))
        object.__setattr__(self, "m", self.intersection.rows)
        object.__setattr__(self, "n", self.intersection.cols)
        if not self.word:
            raise ValueError("empty twist word")
        for step in self.word:
            want = self.m if step.kind == "a" else self.n
            if len(step.mult) != want:
                raise ValueError(f"{step.kind}-step {step.mult} must have length {want}")
        total = sum(sum(e.terms.values()) for e in self.intersection.entries)
        if total != self.r:
            raise ValueError(f"intersection count r={self.r} but matrix entries sum to {total}")
        if self.u_var in self.intersection.var_names:
            raise ValueError(f"{self.u_var!r} clashes with a group variable")

    @property
    def var_names(self) -> tuple[str, ...]:
        return (self.u_var,) + self.intersection.var_names


def canonical_word(word: Sequence[TwistStep]) -> list[TwistStep]:
    """Merge adjacent same-kind steps (cyclically) and rotate to start with an a-step."""
    steps = list(word)
    merged: list[TwistStep] = []
    for s in steps:
        if merged and merged[-1].kind == s.kind:
            prev = merged.pop()
            s = TwistStep(s.kind, tuple(x + y for x, y in zip(prev.mult, s.mult)))
        merged.append(s)
    if len(merged) > 1 and merged[0].kind == merged[-1].kind:
        last = merged.pop()
        first = merged[0]
        merged[0] = TwistStep(first.kind, tuple(x + y for x, y in zip(last.mult, first.mult)))
    if merged[0].kind == "b":
        merged = merged[1:] + merged[:1]
    return merged


def twist_blocks(spec: PennerSpec, step: TwistStep) -> PolyMatrix:
    """The (m+n)-square unipotent block matrix of one multi-twist.

    a-steps put diag(v) * M(t) in the upper-right block; b-steps put
    diag(w) * M^T(t^-1) in the lower-left block.
    """
    m, n = spec.m, spec.n
    names = spec.intersection.var_names
    one = GroupPoly.constant(names, 1)
    zero = GroupPoly.zero(names)
    size = m + n
    rows = [[one if i == j else zero for j in range(size)] for i in range(size)]
    if step.kind == "a":
        for i in range(m):
            for j in range(n):
                rows[i][m + j] = spec.intersection[i, j].scale(step.mult[i])
    else:
        for j in range(n):
            for i in range(m):
                rows[m + j][i] = spec.intersection[i, j].reversed().scale(step.mult[j])
    return PolyMatrix.from_rows(rows, names)


def word_product(spec: PennerSpec, word: Sequence[TwistStep] | None = None) -> PolyMatrix:
    """M_{w_s} M^{v_s} ... M_{w_1} M^{v_1}: later steps act on the left."""
    word = spec.word if word is None else word
    prod = PolyMatrix.identity(spec.m + spec.n, spec.intersection.var_names)
    for step in word:
        prod = mat_mul(twist_blocks(spec, step), prod)
    return prod


def phi(spec: PennerSpec) -> GroupPoly:
    m, n = spec.m, spec.n
    a_total = [0] * m
    b_total = [0] * n
    for step in spec.word:
        tgt = a_total if step.kind == "a" else b_total
        for i, x in enumerate(step.mult):
            tgt[i] += x
    if not all(a_total) or not all(b_total):
        raise ValueError("every a- and b-curve must be twisted at least once")
    k = spec.r - m - n
    if k < 0:
        raise DegenerateCurveSystem(f"degenerate curve system: r-m-n = {k} < 0")

    word = canonical_word(spec.word)
    det_poly = char_det(word_product(spec, word), spec.u_var)
    if list(word) != list(spec.word):
        # conjugation invariance of the cyclic product
        raw = char_det(word_product(spec), spec.u_var)
        assert raw == det_poly, "conjugated word changed the characteristic polynomial"
    u = GroupPoly.monomial(spec.var_names, [1] + [0] * (len(spec.var_names) - 1))
    return ((u - 1) ** k * det_poly).normalize_unit()


def symmetry_check(spec: PennerSpec) -> bool:
    """True iff Phi(u, t) equals Phi(u, t^-1) up to a unit."""
    p = phi(spec)
    inv = p.map_exponents(lambda e: (e[0],) + tuple(-x for x in e[1:]))
    return p == inv.normalize_unit()
