"""The staircase-composition series A_d(q) and its numerator alpha_d(q).

A_d(q) is the generating function, by total size, for weak compositions
(k_1, ..., k_d) of nonnegative integers in which no part exceeds its
predecessor by more than 1.  It is a rational function with denominator
(q;q)_d and a numerator alpha_d(q) in 1 + q*Z[q] of degree (d-1)d whose
top coefficient is (-1)**(d-1); alpha_d(1) = 1.

Three independent routes to the same object are provided so they can be
cross-checked against one another:

  * ``ad_series_dp``       -- coefficient prefix by dynamic programming
                              straight from the composition definition;
  * ``ad_ratfn_recursive`` -- exact rational function built by peeling off
                              the innermost geometric sum, tracked through
                              a two-index family B[e, m];
  * ``alpha_poly``         -- the numerator, recovered by multiplying the
                              DP series with the q-Pochhammer and checking
                              that everything beyond degree (d-1)d dies.

``alpha_poly`` raises StructureViolation when the tail-vanishing or the
degree/leading-coefficient bookkeeping fails; that exception firing means
a genuine bug (or a falsified theorem), never a recoverable condition.
"""

from __future__ import annotations

from dataclasses import dataclass
from threading import Lock

from .partitions import triangular
from .polyring import (
    IntPolynomial,
    ONE,
    PowerSeries,
    RationalFunction,
    monomial,
    one_minus_q_power,
    poly_gcd,
    q_pochhammer,
)


class StructureViolation(AssertionError):
    """A proved structural property failed to hold for a computed object."""


#: Extra coefficients checked beyond the nominal numerator degree; wide
#: enough that an off-by-one in the degree bookkeeping cannot slip through.
def _guard(d: int) -> int:
    return triangular(d) + 8


def ad_series_dp(d: int, order: int) -> PowerSeries:
    """Coefficients a_d(0..order) by dynamic programming.

    States are (position j, last part v, running sum s); the transition
    "next part <= v+1" is folded into suffix sums over v so the total cost
    is O(d * order**2).  d = 0 gives the series of the constant 1.
    """
    if d < 0:
        raise ValueError("number of parts must be nonnegative")
    if order < 0:
        raise ValueError("order must be nonnegative")
    if d == 0:
        return PowerSeries([1] + [0] * order)
    # cnt[s][v] = number of prefixes (k_1..k_j) with sum s and k_j = v.
    cnt = [[0] * (order + 1) for _ in range(order + 1)]
    for v in range(order + 1):
        cnt[v][v] = 1
    for _ in range(2, d + 1):
        suf = []
        for s in range(order + 1):
            row = cnt[s]
            acc = 0
            out = [0] * (order + 2)
            for v in range(order, -1, -1):
                acc += row[v]
                out[v] = acc
            suf.append(out)
        nxt = [[0] * (order + 1) for _ in range(order + 1)]
        for sp in range(order + 1):
            row = nxt[sp]
            for w in range(sp + 1):
                row[w] = suf[sp - w][w - 1 if w >= 1 else 0]
        cnt = nxt
    return PowerSeries([sum(cnt[s]) for s in range(order + 1)])


def ad_ratfn_recursive(d: int) -> RationalFunction:
    """A_d(q) as an exact rational function, via geometric-sum peeling.

    B[e, m] denotes the series for e parts whose last weight variable is
    specialized to q**m (all earlier ones to q).  Then B[1, m] is
    1/(1-q**m) and

        B[e, m] = (B[e-1, 1] - q**(2m) * B[e-1, m+1]) / (1 - q**m),

    where the division is exact.  Denominators are tracked in the product
    form (q;q)_{e-2} * (1-q**(e-1)) * (1-q**(e-1+m)), so that B[d, 1]
    comes out over (q;q)_d on the nose; the numerator is then alpha_d.
    """
    if d < 1:
        raise ValueError("number of parts must be positive")
    memo: dict[tuple[int, int], tuple[IntPolynomial, IntPolynomial]] = {}

    def b(e: int, m: int) -> tuple[IntPolynomial, IntPolynomial]:
        key = (e, m)
        if key in memo:
            return memo[key]
        if e == 1:
            val = (ONE, one_minus_q_power(m))
        else:
            n1, _ = b(e - 1, 1)
            n2, _ = b(e - 1, m + 1)
            f_low = one_minus_q_power(e - 1)      # extra factor under B[e-1, 1]
            f_high = one_minus_q_power(e - 1 + m)  # extra factor under B[e-1, m+1]
            combined = n1 * f_high - monomial(1, 2 * m) * n2 * f_low
            num = combined.exact_div(one_minus_q_power(m))
            val = (num, q_pochhammer(e - 2) * f_low * f_high)
        memo[key] = val
        return val

    num, den = b(d, 1)
    return RationalFunction(num, den)


_alpha_cache: dict[int, IntPolynomial] = {0: ONE}
_alpha_lock = Lock()


def alpha_poly(d: int) -> IntPolynomial:
    """The numerator alpha_d(q) of A_d(q) over (q;q)_d.

    Computed as the truncated product of the DP series with (q;q)_d.  All
    coefficients in the guard window above degree (d-1)d must vanish and
    the structural facts (constant term 1, exact degree, leading
    coefficient (-1)**(d-1)) are asserted before the result is returned
    and cached.
    """
    if d < 0:
        raise ValueError("number of parts must be nonnegative")
    with _alpha_lock:
        hit = _alpha_cache.get(d)
    if hit is not None:
        return hit
    deg = (d - 1) * d
    top = deg + triangular(d) + _guard(d)
    series = ad_series_dp(d, top)
    poch = PowerSeries.from_polynomial(q_pochhammer(d), top)
    prod = series * poch
    tail = [n for n in range(deg + 1, top + 1) if prod[n] != 0]
    if tail:
        raise StructureViolation(
            f"alpha_{d}: nonzero coefficients beyond degree {deg} at {tail[:4]}"
        )
    alpha = IntPolynomial(prod.coeffs[: deg + 1])
    if alpha.constant_term() != 1:
        raise StructureViolation(f"alpha_{d}: constant term {alpha.constant_term()} != 1")
    if alpha.degree != deg:
        raise StructureViolation(f"alpha_{d}: degree {alpha.degree} != {deg}")
    if alpha.leading_coefficient() != (-1) ** (d - 1):
        raise StructureViolation(
            f"alpha_{d}: leading coefficient {alpha.leading_coefficient()}"
        )
    with _alpha_lock:
        _alpha_cache.setdefault(d, alpha)
        return _alpha_cache[d]


def ad_ratfn(d: int) -> RationalFunction:
    """alpha_d(q) / (q;q)_d with both parts fully expanded."""
    return RationalFunction(alpha_poly(d), q_pochhammer(d))


@dataclass(frozen=True)
class AlphaStructureReport:
    """Structural facts about alpha_d; evaluation at -1 is conjectural."""

    d: int
    degree: int
    degree_ok: bool
    constant_term_ok: bool
    leading_coeff: int
    leading_coeff_ok: bool
    value_at_1: int
    value_at_minus1: int
    minus1_conjecture: int
    minus1_matches_conjecture: bool
    gcd_with_pochhammer: IntPolynomial

    @property
    def hard_ok(self) -> bool:
        return (self.degree_ok and self.constant_term_ok
                and self.leading_coeff_ok and self.value_at_1 == 1)

    @property
    def gcd_is_one(self) -> bool:
        return self.gcd_with_pochhammer == ONE


def check_alpha_structure(d: int) -> AlphaStructureReport:
    """Collect the structure battery for alpha_d into a report record.

    Degree, constant term, leading coefficient and the value at 1 are
    proved facts; the value at -1 is compared against the conjectured
    (-1)**floor(d/2) and the gcd with (q;q)_d is reported, not enforced.
    """
    if d < 1:
        raise ValueError("number of parts must be positive")
    alpha = alpha_poly(d)
    deg = (d - 1) * d
    at_minus1 = alpha.eval_at(-1)
    conjectured = (-1) ** (d // 2)
    return AlphaStructureReport(
        d=d,
        degree=alpha.degree,
        degree_ok=alpha.degree == deg,
        constant_term_ok=alpha.constant_term() == 1,
        leading_coeff=alpha.leading_coefficient(),
        leading_coeff_ok=alpha.leading_coefficient() == (-1) ** (d - 1),
        value_at_1=alpha.eval_at(1),
        value_at_minus1=at_minus1,
        minus1_conjecture=conjectured,
        minus1_matches_conjecture=at_minus1 == conjectured,
        gcd_with_pochhammer=poly_gcd(alpha, q_pochhammer(d)),
    )
