"""Generating functions for partition counts by Durfee triangle and square.

The count R_k(n) of partitions of n with Durfee triangle of size exactly k
has generating function q**T_k * phi_k(q) / (q;q)_k, where T_k = k(k+1)/2
and phi_k is a polynomial in 1 + q*Z[q] of degree k**2 with leading
coefficient (-1)**(k-1) and phi_k(1) = 2**k.  It arises from the
convolution

    F_k(q) = sum_{d=0..k} q**d * A_d(q) * A_{k-d}(q)
           = sum_{d=0..k} qbinom(k, d) * q**d * alpha_d(q) * alpha_{k-d}(q)
             / (q;q)_k,

obtained by splitting each partition along its Durfee triangle into row
and column excesses.  For odd k the factor (1+q) divides phi_k, so the
denominator can be reduced to (q;q)_k / (1+q).

The classical Durfee-square analogue D_k(n) has generating function
q**(k**2) / (q;q)_k**2 and is included for cross-validation.

``phi_poly`` is computed by the exact q-binomial convolution with no
truncation anywhere; the series paths (``fk_series_convolution`` and
series expansion of ``fk_ratfn``) are pure cross-checks against it.
"""

from __future__ import annotations

from dataclasses import dataclass
from threading import Lock

from .partitions import triangular
from .polyring import (
    IntPolynomial,
    PowerSeries,
    RationalFunction,
    gaussian_binomial,
    monomial,
    q_pochhammer,
)
from .qseries import StructureViolation, ad_series_dp, alpha_poly

_ONE_PLUS_Q = IntPolynomial([1, 1])

_phi_cache: dict[int, IntPolynomial] = {}
_phi_lock = Lock()


def phi_poly(k: int) -> IntPolynomial:
    """Numerator phi_k(q) of F_k(q) over (q;q)_k, by exact convolution.

    Every structural invariant is asserted before the result is cached:
    constant term 1, degree exactly k**2, leading coefficient (-1)**(k-1),
    value 2**k at q = 1, and divisibility by (1+q) for odd k.
    """
    if k < 1:
        raise ValueError("triangle size must be positive")
    with _phi_lock:
        hit = _phi_cache.get(k)
    if hit is not None:
        return hit
    phi = IntPolynomial()
    for d in range(k + 1):
        term = gaussian_binomial(k, d) * alpha_poly(d) * alpha_poly(k - d)
        phi = phi + term.shift(d)
    if phi.constant_term() != 1:
        raise StructureViolation(f"phi_{k}: constant term {phi.constant_term()} != 1")
    if phi.degree != k * k:
        raise StructureViolation(f"phi_{k}: degree {phi.degree} != {k * k}")
    if phi.leading_coefficient() != (-1) ** (k - 1):
        raise StructureViolation(
            f"phi_{k}: leading coefficient {phi.leading_coefficient()}"
        )
    if phi.eval_at(1) != 2 ** k:
        raise StructureViolation(f"phi_{k}: value at 1 is {phi.eval_at(1)} != 2^{k}")
    if k % 2 == 1 and phi.eval_at(-1) != 0:
        raise StructureViolation(f"phi_{k}: odd k but (1+q) does not divide")
    with _phi_lock:
        _phi_cache.setdefault(k, phi)
        return _phi_cache[k]


def fk_ratfn(k: int, reduced: bool = False) -> RationalFunction:
    """F_k(q) = phi_k(q)/(q;q)_k; series coefficients are f_k(n) = R_k(n+T_k).

    With ``reduced`` set and k odd >= 3, both parts are exactly divided by
    (1+q); exactness is guaranteed (a failure would falsify the odd-k
    divisibility lemma and raises NonDivisible).
    """
    num = phi_poly(k)
    den = q_pochhammer(k)
    if reduced and k >= 3 and k % 2 == 1:
        num = num.exact_div(_ONE_PLUS_Q)
        den = den.exact_div(_ONE_PLUS_Q)
    return RationalFunction(num, den)


def curly_fk_ratfn(k: int, reduced: bool = False) -> RationalFunction:
    """Generating function of R_k(n) itself: q**T_k * F_k(q)."""
    f = fk_ratfn(k, reduced=reduced)
    return RationalFunction(f.num.shift(triangular(k)), f.den)


def fk_series_convolution(k: int, order: int) -> PowerSeries:
    """f_k(0..order) straight from the convolution over excess-row counts.

    Independent of ``phi_poly``: only the dynamic-programming series for
    A_d enters, so this is a genuine cross-check path.
    """
    if k < 1:
        raise ValueError("triangle size must be positive")
    total = PowerSeries([0] * (order + 1))
    for d in range(k + 1):
        prod = ad_series_dp(d, order) * ad_series_dp(k - d, order)
        total = total + prod.shift(d)
    return total


def dk_ratfn(k: int) -> RationalFunction:
    """Durfee-square generating function q**(k**2) / (q;q)_k**2."""
    if k < 1:
        raise ValueError("square size must be positive")
    poch = q_pochhammer(k)
    return RationalFunction(monomial(1, k * k), poch * poch)


@dataclass(frozen=True)
class DurfeeGF:
    """Bundle of the exact generating-function data for one triangle size."""

    k: int
    phi: IntPolynomial
    full_num: IntPolynomial        # q**T_k * phi_k
    denom: IntPolynomial           # (q;q)_k expanded
    reduced_denom: IntPolynomial   # (q;q)_k, or (q;q)_k/(1+q) for odd k >= 3
    triangle_number: int


def durfee_gf(k: int) -> DurfeeGF:
    phi = phi_poly(k)
    den = q_pochhammer(k)
    reduced = den.exact_div(_ONE_PLUS_Q) if (k >= 3 and k % 2 == 1) else den
    return DurfeeGF(
        k=k,
        phi=phi,
        full_num=phi.shift(triangular(k)),
        denom=den,
        reduced_denom=reduced,
        triangle_number=triangular(k),
    )
