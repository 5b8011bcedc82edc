"""Constant-recursive sequence tools: recurrences, quasi-polynomials, periods.

A sequence with rational generating function N(q)/D(q), D(0) = 1, satisfies
for all n >= n0 = max(0, deg N - deg D + 1) the recurrence

    a(n + r) = c_{r-1} a(n+r-1) + ... + c_1 a(n+1) + c_0 a(n),

where r = deg D and D(q) = 1 - c_{r-1} q - ... - c_0 q**r.  Because the
denominators arising here are q-Pochhammers, all characteristic roots are
roots of unity and the sequences are quasi-polynomials: one polynomial per
residue class modulo the quasi-period.  Residue-class polynomials are
fitted by exact Lagrange interpolation over Fraction and then verified on
three extra samples per class, so a reported fit is never a numerical
artifact; a mismatch raises FitMismatch.

Per-residue polynomials are kept as polynomials in m where n = period*m +
residue (matching how such formulas are usually tabulated); conversion to
coefficients in n is provided for comparing leading terms.

Periods modulo M are detected empirically with a six-fold confirmation
window and are backed, for the triangle counts R_k, by the theoretical
bound M * lcm(1..k) coming from the quasi-polynomial representation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, lcm
from typing import Sequence, Tuple, Union

from .genfuncs import curly_fk_ratfn
from .polyring import PowerSeries, RationalFunction


class InsufficientSeed(ValueError):
    """Seed values do not reach the recurrence validity horizon."""


class FitMismatch(ArithmeticError):
    """A verification sample disagrees with the interpolated polynomial.

    Signals a wrong quasi-period, a wrong degree bound, or a validity
    threshold chosen too low -- never a rounding problem, since all
    arithmetic is exact.
    """


class WindowTooSmall(ValueError):
    """No eventual period small enough for six-fold confirmation was found."""


@dataclass(frozen=True)
class CFiniteRecurrence:
    """a(n + order) = coeffs[0]*a(n+order-1) + ... + coeffs[-1]*a(n).

    Valid for all n >= valid_from.
    """

    order: int
    coeffs: Tuple[int, ...]
    valid_from: int

    def __post_init__(self):
        if len(self.coeffs) != self.order:
            raise ValueError("coefficient count must equal the order")


def recurrence_from_ratfn(f: RationalFunction) -> CFiniteRecurrence:
    """Read the recurrence off a rational generating function.

    The order is the denominator degree and the coefficients are the
    negated denominator coefficients (highest recurrence lag last).
    """
    r = f.den.degree
    coeffs = tuple(-f.den[i] for i in range(1, r + 1))
    return CFiniteRecurrence(
        order=r,
        coeffs=coeffs,
        valid_from=max(0, f.num.degree - r + 1),
    )


SeedLike = Union[PowerSeries, Sequence[int]]


def _seed_values(seed: SeedLike) -> list:
    return list(seed.coeffs) if isinstance(seed, PowerSeries) else list(seed)


def _extend(rec: CFiniteRecurrence, seed: SeedLike, n_max: int, modulus=None) -> list:
    vals = _seed_values(seed)
    need = max(rec.valid_from + rec.order - 1, rec.order - 1)
    if len(vals) - 1 < need:
        raise InsufficientSeed(
            f"seed reaches index {len(vals) - 1}, recurrence needs indices 0..{need}"
        )
    if modulus is not None:
        vals = [v % modulus for v in vals]
    if n_max < len(vals):
        return vals[: n_max + 1]
    r, cs = rec.order, rec.coeffs
    for t in range(len(vals), n_max + 1):
        acc = 0
        for i in range(r):
            acc += cs[i] * vals[t - 1 - i]
        vals.append(acc % modulus if modulus is not None else acc)
    return vals


def extend_sequence(rec: CFiniteRecurrence, seed: SeedLike, n_max: int) -> list:
    """Values a(0..n_max): seed values verbatim, then recurrence steps."""
    return _extend(rec, seed, n_max)


def extend_sequence_mod(rec: CFiniteRecurrence, seed: SeedLike, n_max: int,
                        modulus: int) -> list:
    """Same as extend_sequence but reduced modulo `modulus` at every step."""
    if modulus < 2:
        raise ValueError("modulus must be at least 2")
    return _extend(rec, seed, n_max, modulus=modulus)


def _interpolate(points) -> list:
    """Exact Lagrange interpolation; returns ascending Fraction coefficients."""
    total = [Fraction(0)] * len(points)
    for i, (xi, yi) in enumerate(points):
        basis = [Fraction(1)]
        denom = 1
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            nxt = [Fraction(0)] * (len(basis) + 1)
            for t, c in enumerate(basis):
                nxt[t + 1] += c
                nxt[t] -= c * xj
            basis = nxt
            denom *= xi - xj
        scale = Fraction(yi, denom)
        for t, c in enumerate(basis):
            total[t] += c * scale
    return total


def _eval_poly(coeffs, x) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


@dataclass(frozen=True)
class QuasiPolynomial:
    """One exact polynomial per residue class modulo `period`.

    ``polys[nu]`` holds ascending Fraction coefficients in m, where
    n = period*m + nu; evaluations agree with the source sequence for all
    n >= valid_from.
    """

    period: int
    valid_from: int
    polys: Tuple[Tuple[Fraction, ...], ...]

    def evaluate(self, n: int) -> Fraction:
        nu = n % self.period
        m = (n - nu) // self.period
        return _eval_poly(self.polys[nu], m)

    def poly_in_n(self, nu: int) -> Tuple[Fraction, ...]:
        """Rewrite the residue-class polynomial in n via m = (n - nu)/period."""
        src = self.polys[nu]
        out = [Fraction(0)] * len(src)
        for j, p in enumerate(src):
            if p == 0:
                continue
            scale = p / Fraction(self.period) ** j
            for i in range(j + 1):
                out[i] += scale * comb(j, i) * (-nu) ** (j - i)
        return tuple(out)

    def to_json_obj(self) -> dict:
        return {
            "period": self.period,
            "valid_from": self.valid_from,
            "residues": [
                {"nu": nu, "coeffs_in_m": [str(c) for c in poly]}
                for nu, poly in enumerate(self.polys)
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj: dict) -> "QuasiPolynomial":
        residues = sorted(obj["residues"], key=lambda r: r["nu"])
        return cls(
            period=int(obj["period"]),
            valid_from=int(obj["valid_from"]),
            polys=tuple(
                tuple(Fraction(s) for s in r["coeffs_in_m"]) for r in residues
            ),
        )

    @classmethod
    def from_json(cls, text: str) -> "QuasiPolynomial":
        return cls.from_json_obj(json.loads(text))


def quasipoly_fit(values: Sequence[int], period: int, degree_bound: int,
                  valid_from: int, offset: int = 0) -> QuasiPolynomial:
    """Fit one degree-bounded polynomial per residue class and verify it.

    ``values[i]`` is the sequence entry at index offset + i.  For each
    residue class the first degree_bound+1 samples at indices >= valid_from
    determine the polynomial (in m, with n = period*m + residue) and the
    next three samples must reproduce exactly, else FitMismatch.
    """
    if period < 1:
        raise ValueError("period must be positive")
    if degree_bound < 0:
        raise ValueError("degree bound must be nonnegative")
    start = max(valid_from, offset)
    top = offset + len(values) - 1
    polys = []
    for nu in range(period):
        first = start + (nu - start) % period
        needed = first + (degree_bound + 3) * period
        if needed > top:
            raise ValueError(
                f"residue {nu}: need samples up to index {needed}, have {top}"
            )
        samples = [
            ((n - nu) // period, values[n - offset])
            for n in range(first, needed + 1, period)
        ]
        coeffs = _interpolate(samples[: degree_bound + 1])
        for m, v in samples[degree_bound + 1:]:
            got = _eval_poly(coeffs, m)
            if got != v:
                raise FitMismatch(
                    f"residue {nu}: value at n={period * m + nu} is {v}, "
                    f"fitted polynomial gives {got}"
                )
        polys.append(tuple(coeffs))
    return QuasiPolynomial(period=period, valid_from=valid_from, polys=tuple(polys))


def leading_asymptotic_rk(k: int) -> Fraction:
    """Coefficient of n**(k-1) in R_k(n): 2**k / (k! (k-1)!)."""
    if k < 1:
        raise ValueError("triangle size must be positive")
    return Fraction(2 ** k, factorial(k) * factorial(k - 1))


def leading_asymptotic_dk(k: int, terms: int = 2) -> Tuple[Fraction, ...]:
    """Top coefficients of D_k(n): n**(2k-1) term and optionally n**(2k-2).

    The first term is 1/((k!)^2 (2k-1)!); the second,
    -1/(2 k! (k-2)! (2k-2)!), only exists for k >= 2.
    """
    if k < 1:
        raise ValueError("square size must be positive")
    if terms not in (1, 2):
        raise ValueError("terms must be 1 or 2")
    first = Fraction(1, factorial(k) ** 2 * factorial(2 * k - 1))
    if terms == 1:
        return (first,)
    if k < 2:
        raise ValueError("the second asymptotic term requires k >= 2")
    second = Fraction(-1, 2 * factorial(k) * factorial(k - 2) * factorial(2 * k - 2))
    return (first, second)


def eventual_period_mod(values: Sequence[int], modulus: int, n_min: int) -> int:
    """Smallest p with values[n] == values[n+p] (mod M) across [n_min, end).

    Empirical detection: only periods p with at least six full repeats in
    the window (p <= window/6) are accepted; otherwise WindowTooSmall.
    """
    if modulus < 2:
        raise ValueError("modulus must be at least 2")
    if n_min < 0 or n_min >= len(values):
        raise ValueError("n_min outside the supplied values")
    window = [v % modulus for v in values[n_min:]]
    length = len(window)
    for p in range(1, length // 6 + 1):
        if all(window[i] == window[i + p] for i in range(length - p)):
            return p
    raise WindowTooSmall(
        f"no period up to {length // 6} confirmed on a window of length {length}"
    )


# -- drivers specialized to the triangle counts R_k -------------------------

def rk_values(k: int, n_max: int, reduced: bool = False) -> list:
    """R_k(0..n_max) by recurrence extension seeded with series expansion."""
    f = curly_fk_ratfn(k, reduced=reduced)
    rec = recurrence_from_ratfn(f)
    horizon = max(rec.valid_from + rec.order - 1, rec.order - 1)
    if n_max <= horizon:
        return list(f.series(n_max).coeffs)
    return extend_sequence(rec, f.series(horizon), n_max)


def rk_values_mod(k: int, modulus: int, n_max: int) -> list:
    """R_k(0..n_max) reduced modulo `modulus`, extended cheaply."""
    f = curly_fk_ratfn(k, reduced=True)
    rec = recurrence_from_ratfn(f)
    horizon = max(rec.valid_from + rec.order - 1, rec.order - 1)
    if n_max <= horizon:
        return [v % modulus for v in f.series(n_max).coeffs]
    return extend_sequence_mod(rec, f.series(horizon), n_max, modulus)


def rk_eventual_period_mod(k: int, modulus: int) -> int:
    """Eventual period of R_k modulo `modulus`, detected adaptively.

    The confirmation window is doubled until detection succeeds, capped by
    the quasi-polynomial bound modulus * lcm(1..k).
    """
    n_min = k * k + 1
    cap = modulus * lcm(*range(1, k + 1))
    bound = 8
    while True:
        bound = min(bound, cap)
        vals = rk_values_mod(k, modulus, n_min + 6 * bound)
        try:
            return eventual_period_mod(vals, modulus, n_min)
        except WindowTooSmall:
            if bound >= cap:
                raise
            bound *= 2


@dataclass(frozen=True)
class CongruenceShiftReport:
    """Outcome of checking R_k(n + M*Q) == R_k(n) (mod M) on a window."""

    k: int
    modulus: int
    quasi_period: int
    n_min: int
    n_max: int
    num_checked: int
    num_failures: int
    counterexamples: Tuple[int, ...]  # first few failing n

    @property
    def holds(self) -> bool:
        return self.num_failures == 0


def congruence_shift_check(k: int, modulus: int, quasi_period: int,
                           n_min: int, n_max: int) -> CongruenceShiftReport:
    """Check the shift congruence for R_k on n_min < n <= n_max - M*Q.

    Report-style: counterexamples are collected, not raised, because for
    some k the congruence is expected to fail when the modulus shares a
    factor with the quasi-polynomial coefficient denominators.
    """
    if modulus < 2:
        raise ValueError("modulus must be at least 2")
    shift = modulus * quasi_period
    if n_max < n_min + shift:
        raise ValueError("window must cover at least one shift")
    vals = rk_values_mod(k, modulus, n_max)
    bad = []
    checked = 0
    for n in range(n_min + 1, n_max - shift + 1):
        checked += 1
        if vals[n] != vals[n + shift]:
            bad.append(n)
    return CongruenceShiftReport(
        k=k,
        modulus=modulus,
        quasi_period=quasi_period,
        n_min=n_min,
        n_max=n_max,
        num_checked=checked,
        num_failures=len(bad),
        counterexamples=tuple(bad[:10]),
    )
