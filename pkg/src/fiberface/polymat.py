"""Matrices over the group ring and their characteristic polynomials."""

from __future__ import annotations

from typing import Sequence

from .groupring import DimensionError, GroupPoly

# Guard on det/char_det sizes; cofactor expansion costs n * 2^n products.
MAX_DET_SIZE = 12


class PolyMatrix:
    """Dense rows x cols matrix of GroupPoly entries sharing one variable set."""

    __slots__ = ("rows", "cols", "entries", "var_names")

    def __init__(self, rows: int, cols: int, entries: Sequence[GroupPoly], var_names=None):
        entries = tuple(entries)
        if rows * cols != len(entries):
            raise DimensionError(f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}")
        if var_names is None:
            if not entries:
                raise ValueError("var_names required for an empty matrix")
            var_names = entries[0].var_names
        var_names = tuple(var_names)
        for e in entries:
            if e.var_names != var_names:
                raise DimensionError(f"entry variables {e.var_names} differ from {var_names}")
        self.rows, self.cols, self.entries, self.var_names = rows, cols, entries, var_names

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], var_names: Sequence[str]) -> "PolyMatrix":
        var_names = tuple(var_names)
        flat = []
        for r in rows:
            if len(r) != len(rows[0]):
                raise DimensionError("ragged rows")
            for x in r:
                flat.append(x if isinstance(x, GroupPoly) else GroupPoly.constant(var_names, int(x)))
        return cls(len(rows), len(rows[0]) if rows else 0, flat, var_names)

    @classmethod
    def identity(cls, n: int, var_names) -> "PolyMatrix":
        one = GroupPoly.constant(var_names, 1)
        zero = GroupPoly.zero(var_names)
        return cls(n, n, [one if i == j else zero for i in range(n) for j in range(n)], var_names)

    @classmethod
    def zeros(cls, rows: int, cols: int, var_names) -> "PolyMatrix":
        zero = GroupPoly.zero(var_names)
        return cls(rows, cols, [zero] * (rows * cols), var_names)

    def __getitem__(self, ij) -> GroupPoly:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[GroupPoly, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[GroupPoly]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def map(self, f) -> "PolyMatrix":
        out = [f(e) for e in self.entries]
        names = out[0].var_names if out else self.var_names
        return PolyMatrix(self.rows, self.cols, out, names)

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(self.cols, self.rows,
                          [self[i, j] for j in range(self.cols) for i in range(self.rows)],
                          self.var_names)

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionError("shape mismatch")
        return PolyMatrix(self.rows, self.cols,
                          [a + b for a, b in zip(self.entries, other.entries)], self.var_names)

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionError("shape mismatch")
        return PolyMatrix(self.rows, self.cols,
                          [a - b for a, b in zip(self.entries, other.entries)], self.var_names)

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        return mat_mul(self, other)

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.var_names, self.entries) == \
            (other.rows, other.cols, other.var_names, other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        body = "; ".join(", ".join(str(e) for e in self.row(i)) for i in range(self.rows))
        return f"PolyMatrix([{body}], vars={self.var_names})"


def mat_mul(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    if a.cols != b.rows:
        raise DimensionError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    if a.var_names != b.var_names:
        raise DimensionError("variable mismatch")
    zero = GroupPoly.zero(a.var_names)
    out = []
    for i in range(a.rows):
        for j in range(b.cols):
            acc = zero
            for k in range(a.cols):
                x, y = a[i, k], b[k, j]
                if x.terms and y.terms:
                    acc = acc + x * y
            out.append(acc)
    return PolyMatrix(a.rows, b.cols, out, a.var_names)


def det(m: PolyMatrix, max_size: int | None = None) -> GroupPoly:
    """Determinant by Laplace expansion along rows, memoized on column sets."""
    if not m.is_square:
        raise DimensionError(f"determinant of a non-square {m.rows}x{m.cols} matrix")
    limit = MAX_DET_SIZE if max_size is None else max_size
    n = m.rows
    if n > limit:
        raise ValueError(f"matrix size {n} exceeds the limit {limit}")
    one = GroupPoly.constant(m.var_names, 1)
    if n == 0:
        return one
    zero = GroupPoly.zero(m.var_names)
    # minor[mask] = det of rows (n - popcount(mask) .. n-1) restricted to columns in mask
    minors = {0: one}
    for size in range(1, n + 1):
        r = n - size
        new = {}
        for mask in _masks_of_size(n, size):
            acc = zero
            sign = 1
            for j in range(n):
                bit = 1 << j
                if not mask & bit:
                    continue
                entry = m[r, j]
                rest = minors.get(mask & ~bit)
                if entry.terms and rest is not None and rest.terms:
                    term = entry * rest
                    acc = acc + term if sign > 0 else acc - term
                sign = -sign
            new[mask] = acc
        minors = new
    return minors[(1 << n) - 1]


def _masks_of_size(n: int, k: int):
    from itertools import combinations
    for cols in combinations(range(n), k):
        mask = 0
        for c in cols:
            mask |= 1 << c
        yield mask


def char_det(m: PolyMatrix, new_var: str = "u", max_size: int | None = None) -> GroupPoly:
    """det(new_var * I - M) in the ring with ``new_var`` prepended."""
    if not m.is_square:
        raise DimensionError("characteristic polynomial of a non-square matrix")
    if new_var in m.var_names:
        raise ValueError(f"{new_var!r} already names a variable of the matrix")
    names = (new_var,) + m.var_names
    ext = m.map(lambda e: e.extend(new_var, 0))
    u = GroupPoly.monomial(names, [1] + [0] * len(m.var_names))
    shifted = PolyMatrix.identity(m.rows, names).map(lambda e: e * u) - ext
    return det(shifted, max_size)


def teichmuller_from_transition(pe: PolyMatrix, pv: PolyMatrix | None = None,
                                new_var: str = "u") -> GroupPoly:
    """det(uI - P_E) / det(uI - P_V); the switch matrix may be omitted
    when its contribution cancels against fixed branches."""
    top = char_det(pe, new_var)
    if pv is None:
        return top
    return top.exact_div(char_det(pv, new_var))
