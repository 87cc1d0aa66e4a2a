"""Exact arithmetic in the integral group ring of a free abelian group.

Elements are multivariate Laurent polynomials with Python ``int``
coefficients, keyed by exponent tuples.  Terms are ordered
lexicographically on exponent vectors; that order fixes printing and the
unit normal form.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

ExpVec = tuple  # tuple[int, ...]; length equals the number of variables


class DimensionError(ValueError):
    pass


class NotDivisibleError(ArithmeticError):
    pass


def _check_names(names: Sequence[str]) -> tuple[str, ...]:
    names = tuple(names)
    if len(set(names)) != len(names):
        raise ValueError(f"duplicate variable names: {names}")
    return names


class GroupPoly:
    """An element of Z[Z^b], immutable once built.

    >>> u, t = GroupPoly.gens(("u", "t"))
    >>> (u - 1) * (u + 1)
    GroupPoly('u^2 - 1', vars=('u', 't'))
    """

    __slots__ = ("var_names", "terms", "_hash")

    def __init__(self, var_names: Sequence[str], terms: Mapping[ExpVec, int] | Iterable = ()):
        self.var_names = _check_names(var_names)
        b = len(self.var_names)
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[ExpVec, int] = {}
        for e, c in items:
            e = tuple(int(x) for x in e)
            if len(e) != b:
                raise DimensionError(f"exponent {e} has length {len(e)}, expected {b}")
            c = int(c)
            if c:
                clean[e] = clean.get(e, 0) + c
                if not clean[e]:
                    del clean[e]
        self.terms = clean
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls, var_names):
        return cls(var_names, {})

    @classmethod
    def constant(cls, var_names, c: int):
        return cls(var_names, {(0,) * len(var_names): c})

    @classmethod
    def monomial(cls, var_names, exps: Sequence[int], c: int = 1):
        return cls(var_names, {tuple(exps): c})

    @classmethod
    def gens(cls, var_names):
        b = len(var_names)
        return tuple(cls.monomial(var_names, [int(i == j) for j in range(b)]) for i in range(b))

    # -- basic queries ------------------------------------------------
    @property
    def nvars(self) -> int:
        return len(self.var_names)

    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> list[ExpVec]:
        return sorted(self.terms)

    def coeff(self, e: Sequence[int]) -> int:
        return self.terms.get(tuple(e), 0)

    def sorted_terms(self, reverse: bool = True) -> list[tuple[ExpVec, int]]:
        return sorted(self.terms.items(), reverse=reverse)

    def leading_term(self) -> tuple[ExpVec, int]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms)
        return e, self.terms[e]

    def coeff_abs_sum(self) -> int:
        return sum(abs(c) for c in self.terms.values())

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def degree_range(self, i: int) -> tuple[int, int]:
        if not self.terms:
            raise ValueError("zero polynomial")
        vals = [e[i] for e in self.terms]
        return min(vals), max(vals)

    # -- arithmetic ---------------------------------------------------
    def _coerce(self, other) -> "GroupPoly":
        if isinstance(other, GroupPoly):
            if other.var_names != self.var_names:
                raise DimensionError(f"variable mismatch: {self.var_names} vs {other.var_names}")
            return other
        if isinstance(other, int):
            return GroupPoly.constant(self.var_names, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return GroupPoly(self.var_names, out)

    __radd__ = __add__

    def __neg__(self):
        return GroupPoly(self.var_names, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[ExpVec, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return GroupPoly(self.var_names, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if not self.is_monomial() or abs(next(iter(self.terms.values()))) != 1:
                raise NotDivisibleError("only unit monomials have negative powers")
            (e, c), = self.terms.items()
            return GroupPoly(self.var_names, {tuple(n * x for x in e): c ** (-n)})
        result = GroupPoly.constant(self.var_names, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, k: int) -> "GroupPoly":
        return GroupPoly(self.var_names, {e: k * c for e, c in self.terms.items()})

    def shift(self, exps: Sequence[int]) -> "GroupPoly":
        """Multiply by the monomial with exponent vector ``exps``."""
        exps = tuple(exps)
        return GroupPoly(self.var_names, {tuple(a + b for a, b in zip(e, exps)): c
                                          for e, c in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, int):
            other = GroupPoly.constant(self.var_names, other)
        if not isinstance(other, GroupPoly):
            return NotImplemented
        return self.var_names == other.var_names and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.var_names, frozenset(self.terms.items())))
        return self._hash

    # -- structural maps ----------------------------------------------
    def map_exponents(self, f) -> "GroupPoly":
        return GroupPoly(self.var_names, [(f(e), c) for e, c in self.terms.items()])

    def substitute_inverse(self, var_index: int) -> "GroupPoly":
        if not 0 <= var_index < self.nvars:
            raise IndexError(f"variable index {var_index} out of range for {self.var_names}")
        return self.map_exponents(
            lambda e: tuple(-x if i == var_index else x for i, x in enumerate(e)))

    def reversed(self) -> "GroupPoly":
        """Image under g -> g^{-1} for every group element."""
        return self.map_exponents(lambda e: tuple(-x for x in e))

    def extend(self, new_var: str, position: int | None = None) -> "GroupPoly":
        """Embed into the ring with one extra variable (exponent 0)."""
        if new_var in self.var_names:
            raise ValueError(f"variable {new_var!r} already present")
        pos = self.nvars if position is None else position
        names = self.var_names[:pos] + (new_var,) + self.var_names[pos:]
        return GroupPoly(names, [(e[:pos] + (0,) + e[pos:], c) for e, c in self.terms.items()])

    def specialize(self, var_index: int, value: int = 1) -> "GroupPoly":
        """Substitute an integer for one variable and drop it.

        Only the values 1 and -1 are allowed when that variable has
        negative exponents.
        """
        names = self.var_names[:var_index] + self.var_names[var_index + 1:]
        out: dict[ExpVec, int] = {}
        for e, c in self.terms.items():
            k = e[var_index]
            if k < 0 and value not in (1, -1):
                raise NotDivisibleError("cannot evaluate negative power at a non-unit")
            v = c * value ** abs(k) if value in (1, -1) else c * value ** k
            key = e[:var_index] + e[var_index + 1:]
            out[key] = out.get(key, 0) + v
        return GroupPoly(names, out)

    def evaluate(self, point: Sequence) -> Fraction:
        """Exact evaluation at a point with nonzero rational coordinates."""
        total = Fraction(0)
        pts = [Fraction(p) for p in point]
        for e, c in self.terms.items():
            term = Fraction(c)
            for x, k in zip(pts, e):
                term *= x ** k
            total += term
        return total

    # -- division -----------------------------------------------------
    def exact_div(self, other: "GroupPoly") -> "GroupPoly":
        """Return R with other * R == self, or raise NotDivisibleError.

        Both operands are first shifted into the polynomial ring, then
        divided by multivariate division on the lexicographic order.
        """
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return GroupPoly.zero(self.var_names)
        b = self.nvars
        lo_p = [min(e[i] for e in self.terms) for i in range(b)]
        lo_q = [min(e[i] for e in other.terms) for i in range(b)]
        rem = dict(self.shift([-x for x in lo_p]).terms)
        q = other.shift([-x for x in lo_q])
        lead_e, lead_c = q.leading_term()
        quot: dict[ExpVec, int] = {}
        while rem:
            e = max(rem)
            c = rem[e]
            de = tuple(a - l for a, l in zip(e, lead_e))
            if any(x < 0 for x in de) or c % lead_c:
                raise NotDivisibleError(f"{self} is not divisible by {other}")
            k = c // lead_c
            quot[de] = k
            for qe, qc in q.terms.items():
                key = tuple(a + d for a, d in zip(qe, de))
                v = rem.get(key, 0) - k * qc
                if v:
                    rem[key] = v
                else:
                    rem.pop(key, None)
        shift = [p - r for p, r in zip(lo_p, lo_q)]
        return GroupPoly(self.var_names, quot).shift(shift)

    def divides(self, other: "GroupPoly") -> bool:
        try:
            other.exact_div(self)
        except NotDivisibleError:
            return False
        return True

    # -- normal forms -------------------------------------------------
    def normalize_unit(self) -> "GroupPoly":
        """Canonical representative up to multiplication by +-monomials.

        Each variable's minimal exponent is moved to 0 and the sign is
        chosen so the lexicographically greatest term is positive.
        """
        if self.is_zero():
            raise ValueError("cannot normalize the zero polynomial")
        lo = [min(e[i] for e in self.terms) for i in range(self.nvars)]
        p = self.shift([-x for x in lo])
        if p.leading_term()[1] < 0:
            p = -p
        return p

    def reversal_symmetric(self) -> bool:
        if self.is_zero():
            raise ValueError("zero polynomial")
        return self.normalize_unit() == self.reversed().normalize_unit()

    # -- presentation -------------------------------------------------
    def _monomial_str(self, e: ExpVec) -> str:
        parts = []
        for name, k in zip(self.var_names, e):
            if k == 1:
                parts.append(name)
            elif k:
                parts.append(f"{name}^{k}")
        return "*".join(parts)

    def to_string(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for e, c in self.sorted_terms():
            mono = self._monomial_str(e)
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            out.append((sign, body))
        s = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            s += f" {sign} {body}"
        return s

    __str__ = to_string

    def __repr__(self):
        return f"GroupPoly({self.to_string()!r}, vars={self.var_names})"


# module-level functional spellings of the ring operations

def add(p: GroupPoly, q: GroupPoly) -> GroupPoly:
    return p + q


def mul(p: GroupPoly, q: GroupPoly) -> GroupPoly:
    return p * q


def exact_div(p: GroupPoly, q: GroupPoly) -> GroupPoly:
    return p.exact_div(q)


def substitute_inverse(p: GroupPoly, var_index: int) -> GroupPoly:
    return p.substitute_inverse(var_index)


def normalize_unit(p: GroupPoly) -> GroupPoly:
    return p.normalize_unit()


def reversal_symmetric(p: GroupPoly) -> bool:
    return p.reversal_symmetric()


def strip_binomial_factors(p: GroupPoly, var_indices: Iterable[int] | None = None):
    """Divide out every factor ``(v - 1)`` for the given variables.

    Returns ``(reduced, stripped)`` where ``stripped`` maps a variable
    index to the multiplicity removed.
    """
    if var_indices is None:
        var_indices = range(p.nvars)
    stripped = {}
    for i in var_indices:
        v = GroupPoly.monomial(p.var_names, [int(j == i) for j in range(p.nvars)])
        factor = v - 1
        k = 0
        while True:
            try:
                q = p.exact_div(factor)
            except NotDivisibleError:
                break
            p, k = q, k + 1
        if k:
            stripped[i] = k
    return p, stripped


# -- text parsing -----------------------------------------------------

class PolySyntaxError(ValueError):
    def __init__(self, msg, text, pos):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"{msg} at line {line}, column {col}")
        self.line, self.column = line, col


def parse_poly(text: str, var_names: Sequence[str]) -> GroupPoly:
    """Parse sums of products like ``"2*t^2 + 9*t - t^-1"``.

    Parentheses and non-negative integer powers of parenthesised
    expressions are accepted, as are negative powers of unit monomials.
    """
    names = _check_names(var_names)
    return _Parser(text, names).parse()


class _Parser:
    def __init__(self, text, names):
        self.text, self.names, self.pos = text, names, 0

    def error(self, msg):
        raise PolySyntaxError(msg, self.text, self.pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse(self):
        p = self.expr()
        if self.peek():
            self.error(f"unexpected {self.peek()!r}")
        return p

    def expr(self):
        sign = 1
        if self.peek() in "+-":
            sign = -1 if self.text[self.pos] == "-" else 1
            self.pos += 1
        acc = self.term().scale(sign)
        while self.peek() in ("+", "-") and self.peek():
            op = self.text[self.pos]
            self.pos += 1
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self):
        acc = self.power()
        while True:
            ch = self.peek()
            if ch == "*":
                self.pos += 1
                acc = acc * self.power()
            elif ch and (ch.isalnum() or ch in "(_"):
                acc = acc * self.power()
            else:
                return acc

    def integer(self):
        self.skip()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        tok = self.text[start:self.pos]
        if tok in ("", "+", "-"):
            self.error("expected integer")
        return int(tok)

    def power(self):
        base = self.atom()
        if self.peek() == "^" or self.text.startswith("**", self.pos):
            self.pos += 2 if self.text.startswith("**", self.pos) else 1
            if self.peek() == "(":
                self.pos += 1
                n = self.integer()
                if self.peek() != ")":
                    self.error("expected ')'")
                self.pos += 1
            else:
                n = self.integer()
            try:
                return base ** n
            except NotDivisibleError:
                self.error("negative power of a non-unit")
        return base

    def atom(self):
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            p = self.expr()
            if self.peek() != ")":
                self.error("expected ')'")
            self.pos += 1
            return p
        if ch.isdigit():
            return GroupPoly.constant(self.names, self.integer())
        if ch.isalpha() or ch == "_":
            start = self.pos
            while self.pos < len(self.text) and (self.text[self.pos].isalnum() or self.text[self.pos] == "_"):
                self.pos += 1
            name = self.text[start:self.pos]
            if name not in self.names:
                self.pos = start
                self.error(f"unknown variable {name!r}")
            i = self.names.index(name)
            return GroupPoly.monomial(self.names, [int(j == i) for j in range(len(self.names))])
        self.error("expected a term" if ch else "unexpected end of input")
