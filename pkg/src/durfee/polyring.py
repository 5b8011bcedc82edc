"""Exact dense polynomial and rational-function arithmetic over the integers.

Everything in this module is exact: coefficients are Python ints (arbitrary
precision), power-series expansion is integer long division against a
denominator with constant term 1, and gcds are computed with a primitive
pseudo-remainder sequence.  No floating point is used anywhere.

Conventions:
  * ``IntPolynomial`` stores coefficients ascending in q: ``coeffs[i]`` is
    the coefficient of ``q**i``.  Canonical form has no trailing zeros; the
    zero polynomial has an empty coefficient tuple and reports degree -1
    (a sentinel standing in for "minus infinity").
  * ``RationalFunction`` keeps numerator and denominator exactly as given
    (no automatic reduction to lowest terms); the denominator is normalized
    to have constant term +1, negating both parts if it comes in as -1.
  * ``PowerSeries`` is a plain truncated coefficient vector of a fixed
    order; binary operations on mismatched orders truncate to the smaller.
"""

from __future__ import annotations

import json
from math import gcd as int_gcd
from typing import Iterable, Sequence


class NonDivisible(ArithmeticError):
    """Exact polynomial division left a nonzero remainder."""


class IntPolynomial:
    """Dense univariate polynomial over arbitrary-precision integers."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        for c in cs:
            if not isinstance(c, int):
                raise TypeError(f"integer coefficients required, got {type(c).__name__}")
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    # -- basic structure ---------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def constant_term(self) -> int:
        return self[0]

    def leading_coefficient(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPolynomial([other])
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    # -- ring arithmetic ---------------------------------------------------

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        out = list(self.coeffs) + [0] * max(0, len(other.coeffs) - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            out[i] -= c
        return IntPolynomial(out)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial([other * c for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return IntPolynomial(out)

    __rmul__ = __mul__

    def shift(self, m: int) -> "IntPolynomial":
        """Multiply by q**m."""
        if m < 0:
            raise ValueError("shift exponent must be nonnegative")
        if not self.coeffs:
            return self
        return IntPolynomial((0,) * m + self.coeffs)

    def exact_div(self, other: "IntPolynomial") -> "IntPolynomial":
        """Quotient c with self == other * c, over the integers.

        Raises NonDivisible if no such integer polynomial exists; during
        theorem verification a raise signals a falsified divisibility claim.
        """
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero():
            return IntPolynomial()
        rem = list(self.coeffs)
        db, lb = other.degree, other.leading_coefficient()
        dq = len(rem) - 1 - db
        if dq < 0:
            raise NonDivisible(f"degree {self.degree} < divisor degree {db}")
        quot = [0] * (dq + 1)
        for i in range(dq, -1, -1):
            c = rem[i + db]
            if c % lb != 0:
                raise NonDivisible("leading coefficient does not divide remainder")
            t = c // lb
            quot[i] = t
            if t:
                for j, bc in enumerate(other.coeffs):
                    rem[i + j] -= t * bc
        if any(rem):
            raise NonDivisible("nonzero remainder in exact division")
        return IntPolynomial(quot)

    def eval_at(self, x: int) -> int:
        """Exact Horner evaluation at an integer point."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- formatting and JSON -----------------------------------------------

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                term = str(mag)
            elif i == 1:
                term = "q" if mag == 1 else f"{mag}*q"
            else:
                term = f"q^{i}" if mag == 1 else f"{mag}*q^{i}"
            if not parts:
                parts.append(term if c > 0 else "-" + term)
            else:
                parts.append(("+ " if c > 0 else "- ") + term)
        return " ".join(parts)

    def to_json_obj(self) -> dict:
        return {"var": "q", "coeffs": [str(c) for c in self.coeffs]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj: dict) -> "IntPolynomial":
        if obj.get("var") != "q":
            raise ValueError("expected a polynomial in the variable q")
        return cls([int(s) for s in obj["coeffs"]])

    @classmethod
    def from_json(cls, text: str) -> "IntPolynomial":
        return cls.from_json_obj(json.loads(text))


ZERO = IntPolynomial()
ONE = IntPolynomial([1])
Q = IntPolynomial([0, 1])


def monomial(c: int, n: int) -> IntPolynomial:
    """c * q**n."""
    return IntPolynomial([0] * n + [c])


def one_minus_q_power(m: int) -> IntPolynomial:
    """1 - q**m."""
    if m <= 0:
        raise ValueError("exponent must be positive")
    return IntPolynomial([1] + [0] * (m - 1) + [-1])


def q_pochhammer(d: int) -> IntPolynomial:
    """Expanded product (1-q)(1-q^2)...(1-q^d); equals 1 for d = 0.

    The degree is the triangular number d(d+1)/2.
    """
    if d < 0:
        raise ValueError("q-Pochhammer length must be nonnegative")
    out = ONE
    for r in range(1, d + 1):
        out = out * one_minus_q_power(r)
    return out


def gaussian_binomial(k: int, d: int) -> IntPolynomial:
    """q-binomial coefficient: (q;q)_k / ((q;q)_d (q;q)_{k-d}).

    Computed by exact division, which must succeed; its value at q = 1 is
    the ordinary binomial coefficient and its degree is d(k-d).
    """
    if not 0 <= d <= k:
        raise ValueError(f"require 0 <= d <= k, got d={d}, k={k}")
    return q_pochhammer(k).exact_div(q_pochhammer(d) * q_pochhammer(k - d))


def _content(p: IntPolynomial) -> int:
    c = 0
    for a in p.coeffs:
        c = int_gcd(c, abs(a))
    return c


def _primitive(p: IntPolynomial) -> IntPolynomial:
    c = _content(p)
    if c <= 1:
        return p
    return IntPolynomial([a // c for a in p.coeffs])


def _pseudo_rem(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    # lc(b)^(deg a - deg b + 1) * a  reduced modulo b; stays integral.
    rem = list(a.coeffs)
    db, lb = b.degree, b.leading_coefficient()
    while len(rem) - 1 >= db and any(rem):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) - 1 < db:
            break
        t = rem[-1]
        shift = len(rem) - 1 - db
        rem = [lb * c for c in rem]
        for j, bc in enumerate(b.coeffs):
            rem[shift + j] -= t * bc
        rem.pop()
    return IntPolynomial(rem)


def _normalize_sign(p: IntPolynomial) -> IntPolynomial:
    # Canonical gcd representative: positive constant term when nonzero,
    # otherwise positive leading coefficient.
    if p.is_zero():
        return p
    anchor = p.constant_term() if p.constant_term() != 0 else p.leading_coefficient()
    return -p if anchor < 0 else p


def poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Primitive gcd over Z[q], via a primitive pseudo-remainder sequence."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    ca, cb = _content(a), _content(b)
    a, b = _primitive(a), _primitive(b)
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        a, b = b, _primitive(_pseudo_rem(a, b))
    return _normalize_sign(int_gcd(ca, cb) * a)


class PowerSeries:
    """Truncated integer power series: exactly order+1 stored coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[int]):
        cs = tuple(coeffs)
        if not cs:
            raise ValueError("a power series stores at least the constant term")
        object.__setattr__(self, "coeffs", cs)

    def __setattr__(self, name, value):
        raise AttributeError("PowerSeries is immutable")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]

    def __eq__(self, other) -> bool:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"PowerSeries({list(self.coeffs)!r})"

    def truncate(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise ValueError(f"cannot extend a series truncated at order {self.order}")
        return PowerSeries(self.coeffs[: order + 1])

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        n = min(self.order, other.order)
        return PowerSeries([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)])

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        n = min(self.order, other.order)
        return PowerSeries([self.coeffs[i] - other.coeffs[i] for i in range(n + 1)])

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        n = min(self.order, other.order)
        out = [0] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if a:
                for j in range(n + 1 - i):
                    b = other.coeffs[j]
                    if b:
                        out[i + j] += a * b
        return PowerSeries(out)

    def shift(self, m: int) -> "PowerSeries":
        """Multiply by q**m, keeping the truncation order."""
        if m < 0:
            raise ValueError("shift exponent must be nonnegative")
        return PowerSeries(((0,) * m + self.coeffs)[: self.order + 1])

    @classmethod
    def from_polynomial(cls, p: IntPolynomial, order: int) -> "PowerSeries":
        return cls([p[i] for i in range(order + 1)])


class RationalFunction:
    """Quotient of two integer polynomials, denominator constant term +1.

    The pair is stored as given: reduction to lowest terms is the explicit
    ``reduced()`` operation, never automatic, because the canonical objects
    of interest carry unreduced q-Pochhammer denominators.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: IntPolynomial, den: IntPolynomial = ONE):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        c = den.constant_term()
        if c == -1:
            num, den = -num, -den
        elif c != 1:
            raise ValueError(f"denominator constant term must be +-1, got {c}")
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalFunction):
            return NotImplemented
        # Equality as stored pairs; use reduced() to compare as fractions.
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RationalFunction({self.num!r}, {self.den!r})"

    def __str__(self):
        return f"({self.num}) / ({self.den})"

    def series(self, order: int) -> PowerSeries:
        """Formal power-series coefficients through q**order, exactly.

        Long division: with den[0] == 1, the coefficient recurrence is
        c[n] = num[n] - sum(den[i] * c[n-i] for i >= 1).
        """
        if order < 0:
            raise ValueError("order must be nonnegative")
        den = self.den.coeffs
        out = [0] * (order + 1)
        for n in range(order + 1):
            c = self.num[n]
            for i in range(1, min(n, len(den) - 1) + 1):
                if den[i]:
                    c -= den[i] * out[n - i]
            out[n] = c
        return PowerSeries(out)

    def reduced(self) -> "RationalFunction":
        """Divide out the gcd of numerator and denominator."""
        if self.num.is_zero():
            return RationalFunction(ZERO, ONE)
        g = poly_gcd(self.num, self.den)
        if g.degree < 1 and abs(g.constant_term()) == 1:
            return self
        return RationalFunction(self.num.exact_div(g), self.den.exact_div(g))

    def to_json_obj(self) -> dict:
        return {"num": self.num.to_json_obj(), "den": self.den.to_json_obj()}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj: dict) -> "RationalFunction":
        return cls(IntPolynomial.from_json_obj(obj["num"]),
                   IntPolynomial.from_json_obj(obj["den"]))

    @classmethod
    def from_json(cls, text: str) -> "RationalFunction":
        return cls.from_json_obj(json.loads(text))
