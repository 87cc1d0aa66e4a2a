"""Dense univariate integer polynomials."""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

import sympy


class IntPoly:
    """Integer polynomial with coefficients stored lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def from_high(cls, coeffs: Sequence[int]) -> "IntPoly":
        return cls(reversed(list(coeffs)))

    @classmethod
    def x(cls) -> "IntPoly":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def const(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def high(self) -> list[int]:
        return list(reversed(self.coeffs))

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly((other,))
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPoly.from_high({self.high()})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
            parts.append((sign, body))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        return s + "".join(f" {sg} {b}" for sg, b in parts[1:])

    def __add__(self, other: "IntPoly") -> "IntPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPoly(x + y for x, y in zip(a, b))

    def __neg__(self):
        return IntPoly(-x for x in self.coeffs)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly(x * other for x in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __call__(self, x):
        acc = 0 if isinstance(x, (int, Fraction)) else x * 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def exact_div(self, other: "IntPoly") -> "IntPoly":
        """Quotient over Z; raises ArithmeticError if the division is not exact."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        dq = other.degree
        if len(rem) - 1 < dq:
            if any(rem):
                raise ArithmeticError("polynomial division is not exact")
            return IntPoly()
        quot = [0] * (len(rem) - dq)
        lead = other.lead
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            q, r = divmod(c, lead)
            if r:
                raise ArithmeticError("polynomial division is not exact")
            quot[k - dq] = q
            for j, b in enumerate(other.coeffs):
                rem[k - dq + j] -= q * b
        if any(rem):
            raise ArithmeticError("polynomial division is not exact")
        return IntPoly(quot)

    def derivative(self) -> "IntPoly":
        return IntPoly(k * c for k, c in enumerate(self.coeffs) if k)

    def reversed(self) -> "IntPoly":
        return IntPoly(reversed(self.coeffs))

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def primitive(self) -> "IntPoly":
        """Divide by the content and make the leading coefficient positive."""
        if self.is_zero():
            return self
        g = self.content() * (1 if self.lead > 0 else -1)
        return IntPoly(c // g for c in self.coeffs)

    def strip_x_power(self) -> tuple["IntPoly", int]:
        k = 0
        while k < len(self.coeffs) and self.coeffs[k] == 0:
            k += 1
        return IntPoly(self.coeffs[k:]), k

    def palindrome_sign(self) -> int | None:
        """+1 if P(x) = x^d P(1/x), -1 if P(x) = -x^d P(1/x), else None."""
        r = tuple(reversed(self.coeffs))
        if r == self.coeffs:
            return 1
        if r == tuple(-c for c in self.coeffs):
            return -1
        return None

    def sign_at(self, x: Fraction) -> int:
        v = self(Fraction(x))
        return (v > 0) - (v < 0)

    def to_sympy(self, symbol=None) -> sympy.Poly:
        symbol = symbol if symbol is not None else sympy.Symbol("x")
        return sympy.Poly(self.high(), symbol, domain="ZZ")

    @classmethod
    def from_sympy(cls, p: sympy.Poly) -> "IntPoly":
        return cls.from_high([int(c) for c in p.all_coeffs()])


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    if a.is_zero():
        return b.primitive()
    if b.is_zero():
        return a.primitive()
    return IntPoly.from_sympy(a.to_sympy().gcd(b.to_sympy())).primitive()


def squarefree_part(p: IntPoly) -> IntPoly:
    return p.exact_div(poly_gcd(p, p.derivative())).primitive() if p.degree > 0 else p


def irreducible_factors(p: IntPoly) -> list[IntPoly]:
    _, facs = p.to_sympy().factor_list()
    return [IntPoly.from_sympy(f).primitive() for f, _ in facs]


def divides(d: IntPoly, p: IntPoly) -> bool:
    if p.is_zero():
        return True
    return p.to_sympy().to_field().rem(d.to_sympy().to_field()).is_zero


# -- finite fields ----------------------------------------------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _mod_poly(a: list[int], f: list[int], p: int) -> list[int]:
    """a mod f over GF(p); f monic, lists lowest degree first."""
    a = _trim([x % p for x in a])
    df = len(f) - 1
    while len(a) - 1 >= df:
        c = a[-1]
        shift = len(a) - 1 - df
        for j in range(df + 1):
            a[shift + j] = (a[shift + j] - c * f[j]) % p
        _trim(a)
    return a


def _mulmod(a: list[int], b: list[int], f: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _mod_poly(out, f, p)


def _powmod(base: list[int], e: int, f: list[int], p: int) -> list[int]:
    result = [1]
    base = _mod_poly(base, f, p)
    while e:
        if e & 1:
            result = _mulmod(result, base, f, p)
        base = _mulmod(base, base, f, p)
        e >>= 1
    return result


def _gcd_mod(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim([x % p for x in a]), _trim([x % p for x in b])
    while b:
        inv = pow(b[-1], -1, p)
        b = [x * inv % p for x in b]
        a, b = b, _mod_poly(a, b, p)
    return a


def irreducible_mod_p(poly: IntPoly, p: int) -> bool:
    """Irreducibility over GF(p) by distinct-degree gcds with x^(p^k) - x."""
    if not sympy.isprime(p):
        raise ValueError(f"{p} is not prime")
    if poly.lead % p == 0:
        raise ValueError(f"leading coefficient {poly.lead} is divisible by {p}")
    n = poly.degree
    if n <= 0:
        return False
    inv = pow(poly.lead % p, -1, p)
    f = [c * inv % p for c in poly.coeffs]
    xk = [0, 1]
    for _ in range(1, n // 2 + 1):
        xk = _powmod(xk, p, f, p)
        diff = list(xk) + [0] * max(0, 2 - len(xk))
        diff[1] = (diff[1] - 1) % p
        g = _gcd_mod(f, diff, p)
        if len(g) > 1:
            return False
    return True


def palindromic_reduce(poly: IntPoly) -> IntPoly:
    """The Q with Q(x + 1/x) * x^(d/2) = P(x) for an even-degree palindrome P."""
    if poly.palindrome_sign() != 1 or poly.degree % 2:
        raise ValueError("palindromic_reduce needs an even-degree palindromic polynomial")
    h = poly.degree // 2
    # V_j = x^j + x^-j as a polynomial in A = x + 1/x
    v_prev, v = IntPoly((2,)), IntPoly((0, 1))
    out = IntPoly((poly.coeffs[h],))
    a = IntPoly((0, 1))
    for j in range(1, h + 1):
        out = out + v * poly.coeffs[h + j]
        v_prev, v = v, a * v - v_prev
    return out.primitive()
