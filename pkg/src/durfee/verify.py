"""Cross-check battery: every computed object against an independent route.

Each check pits one computation path against another that shares as little
code as possible: generating-function coefficients against brute-force
enumeration, the exact convolution numerator against truncated series
products, recurrence-extended values against direct expansion, fitted
quasi-polynomials against closed-form leading coefficients.

Hard checks cover proved statements and must all pass; conjectural checks
(values at -1, denominator minimality evidence, paired mod-2 periods)
are reported alongside but never fail a run.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb, lcm
from typing import List

from . import cfinite as cf
from . import genfuncs as gf
from . import partitions as pt
from . import polyring as pr
from . import qseries as qs


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    hard: bool
    detail: str = ""


def _check(name: str, ok: bool, detail: str = "", hard: bool = True) -> Check:
    return Check(name=name, ok=ok, hard=hard, detail=detail)


def _partition_pool(n_top: int) -> dict:
    return {n: list(pt.enumerate_partitions(n)) for n in range(n_top + 1)}


def _partition_statistics_checks(pool: dict, n_top: int) -> List[Check]:
    out = []
    sandwich_ok = conj_ok = stats_ok = roundtrip_ok = True
    bad = ""
    for n in range(n_top + 1):
        for p in pool[n]:
            s = pt.durfee_square_size(p)
            t = pt.durfee_triangle_size(p)
            if not (s <= t <= 2 * s or (s == 0 and t == 0)):
                sandwich_ok, bad = False, f"{p}: square={s}, triangle={t}"
            c = pt.conjugate(p)
            if pt.conjugate(c) != p:
                conj_ok, bad = False, f"{p}"
            if pt.durfee_square_size(c) != s or pt.durfee_triangle_size(c) != t:
                stats_ok, bad = False, f"{p}"
            dec = pt.decompose_by_triangle(p)
            if dec.reconstruct() != p or dec.size() != n:
                roundtrip_ok, bad = False, f"{p}"
    out.append(_check(f"square <= triangle <= 2*square, n <= {n_top}", sandwich_ok, bad))
    out.append(_check(f"conjugation is an involution, n <= {n_top}", conj_ok, bad))
    out.append(_check(f"Durfee statistics invariant under conjugation, n <= {n_top}",
                      stats_ok, bad))
    out.append(_check(f"triangle decomposition round-trips, n <= {n_top}",
                      roundtrip_ok, bad))
    return out


def _tally(pool: dict, n_top: int, stat) -> dict:
    tallies = {}
    for n in range(n_top + 1):
        by_k = {}
        for p in pool[n]:
            k = stat(p)
            by_k[k] = by_k.get(k, 0) + 1
        tallies[n] = by_k
    return tallies


def _polyring_checks(rng: random.Random, cases: int = 300) -> List[Check]:
    def rand_poly():
        deg = rng.randrange(0, 7)
        return pr.IntPolynomial([rng.randrange(-9, 10) for _ in range(deg + 1)])

    ring_ok = divmul_ok = True
    detail = ""
    for _ in range(cases):
        a, b, c = rand_poly(), rand_poly(), rand_poly()
        if (a + b) * c != a * c + b * c or a * b != b * a or (a + b) + c != a + (b + c):
            ring_ok, detail = False, f"{a!r}, {b!r}, {c!r}"
        if not b.is_zero():
            if (a * b).exact_div(b) != a:
                divmul_ok, detail = False, f"{a!r}, {b!r}"
    gauss_ok = True
    for k in range(13):
        for d in range(k + 1):
            g = pr.gaussian_binomial(k, d)
            if g != pr.gaussian_binomial(k, k - d) or g.eval_at(1) != comb(k, d):
                gauss_ok, detail = False, f"(k,d)=({k},{d})"
    pd_ok = True
    for d in range(1, 6):
        series = pr.RationalFunction(pr.ONE, pr.q_pochhammer(d)).series(20)
        for n in range(21):
            if series[n] != pt.count_pd_bruteforce(d, n):
                pd_ok, detail = False, f"d={d}, n={n}"
    return [
        _check(f"ring axioms on {cases} random polynomial triples", ring_ok, detail),
        _check("exact_div inverts multiplication on random pairs", divmul_ok, detail),
        _check("Gaussian binomial symmetry and value at 1, k <= 12", gauss_ok, detail),
        _check("1/(q;q)_d expands to partitions into <= d parts, d <= 5", pd_ok, detail),
    ]


def _ad_checks(pool: dict, d_max: int) -> List[Check]:
    out = []
    ok, detail = True, ""
    for d in range(1, min(6, d_max) + 1):
        series = qs.ad_series_dp(d, 15)
        for n in range(16):
            if series[n] != pt.count_ad_bruteforce(d, n):
                ok, detail = False, f"d={d}, n={n}"
    out.append(_check("a_d series matches weak-composition enumeration, d <= 6, n <= 15",
                      ok, detail))

    ok, detail = True, ""
    for d in range(1, min(6, d_max) + 1):
        td = pt.triangular(d)
        for n in range(21):
            a = pt.count_ad_bruteforce(d, n)
            lo = pt.count_pd_bruteforce(d, n)
            hi = pt.count_pd_bruteforce(d, n + td)
            if not lo <= a <= hi:
                ok, detail = False, f"d={d}, n={n}: {lo} <= {a} <= {hi}"
    out.append(_check("sandwich p_d(n) <= a_d(n) <= p_d(n+T_d), d <= 6, n <= 20",
                      ok, detail))

    ok, detail = True, ""
    for d in range(1, d_max + 1):
        dp = qs.ad_series_dp(d, 40)
        via_alpha = qs.ad_ratfn(d).series(40)
        via_rec = qs.ad_ratfn_recursive(d).series(40)
        if not (dp == via_alpha == via_rec):
            ok, detail = False, f"d={d}"
    out.append(_check(f"three-path A_d agreement to order 40, d <= {d_max}", ok, detail))

    hard_ok, gcd_ok, detail = True, True, ""
    conj_ok, conj_detail = True, ""
    for d in range(1, d_max + 1):
        rep = qs.check_alpha_structure(d)
        if not rep.hard_ok:
            hard_ok, detail = False, f"d={d}: {rep}"
        if not rep.gcd_is_one:
            gcd_ok, detail = False, f"d={d}: gcd={rep.gcd_with_pochhammer}"
        if not rep.minus1_matches_conjecture:
            conj_ok, conj_detail = False, f"d={d}: alpha_d(-1)={rep.value_at_minus1}"
    out.append(_check(f"alpha_d structure (degree, ends, value 1 at q=1), d <= {d_max}",
                      hard_ok, detail))
    out.append(_check(f"gcd(alpha_d, (q;q)_d) = 1, d <= {d_max}", gcd_ok, detail))
    out.append(_check(f"alpha_d(-1) = (-1)^floor(d/2), d <= {d_max}",
                      conj_ok, conj_detail, hard=False))
    return out


def _phi_checks(k_max: int) -> List[Check]:
    out = []
    ok, detail = True, ""
    odd_ok = True
    for k in range(1, k_max + 1):
        phi = gf.phi_poly(k)  # raises StructureViolation on any hard failure
        if phi.eval_at(1) != 2 ** k:
            ok, detail = False, f"k={k}"
        if k % 2 == 1 and k >= 3:
            try:
                phi.exact_div(pr.IntPolynomial([1, 1]))
            except pr.NonDivisible:
                odd_ok, detail = False, f"k={k}"
    out.append(_check(f"phi_k structure battery (via construction), k <= {k_max}",
                      ok, detail))
    out.append(_check(f"(1+q) divides phi_k for odd k <= {k_max}", odd_ok, detail))

    conj_ok, conj_detail = True, ""
    minimal_ok, minimal_detail = True, ""
    for k in range(1, k_max + 1):
        phi = gf.phi_poly(k)
        if k % 2 == 0 and phi.eval_at(-1) != (-2) ** (k // 2):
            conj_ok, conj_detail = False, f"k={k}: phi_k(-1)={phi.eval_at(-1)}"
        g = pr.poly_gcd(phi, pr.q_pochhammer(k))
        expect = pr.IntPolynomial([1, 1]) if (k % 2 == 1 and k >= 3) else pr.ONE
        if g != expect:
            minimal_ok, minimal_detail = False, f"k={k}: gcd={g}"
    out.append(_check(f"phi_k(-1) = (-2)^(k/2) for even k <= {k_max}",
                      conj_ok, conj_detail, hard=False))
    out.append(_check(
        f"minimal-denominator evidence: gcd(phi_k, (q;q)_k) as expected, k <= {k_max}",
        minimal_ok, minimal_detail, hard=False))
    return out


def _fk_checks(pool: dict, k_max: int, n_top: int) -> List[Check]:
    out = []
    ok, detail = True, ""
    for k in range(1, k_max + 1):
        if gf.fk_ratfn(k).series(30) != gf.fk_series_convolution(k, 30):
            ok, detail = False, f"k={k}"
    out.append(_check(f"F_k series equals convolution of A_d series, k <= {k_max}",
                      ok, detail))

    r_tallies = _tally(pool, n_top, pt.durfee_triangle_size)
    d_tallies = _tally(pool, n_top, pt.durfee_square_size)

    ok, detail = True, ""
    for k in range(1, min(6, k_max) + 1):
        series = gf.curly_fk_ratfn(k).series(n_top)
        for n in range(n_top + 1):
            if series[n] != r_tallies[n].get(k, 0):
                ok, detail = False, f"k={k}, n={n}"
    out.append(_check(f"R_k coefficients match brute force, k <= 6, n <= {n_top}",
                      ok, detail))

    ok, detail = True, ""
    for k in range(1, min(4, k_max) + 1):
        series = gf.dk_ratfn(k).series(n_top)
        for n in range(n_top + 1):
            if series[n] != d_tallies[n].get(k, 0):
                ok, detail = False, f"k={k}, n={n}"
    out.append(_check(f"D_k coefficients match brute force, k <= 4, n <= {n_top}",
                      ok, detail))

    ok, detail = True, ""
    for n in range(1, 25):
        p_n = len(pool[n])
        if sum(v for k, v in r_tallies[n].items() if k >= 1) != p_n:
            ok, detail = False, f"n={n} (triangle)"
        if sum(v for k, v in d_tallies[n].items() if k >= 1) != p_n:
            ok, detail = False, f"n={n} (square)"
    out.append(_check("counts by statistic partition p(n), 1 <= n <= 24", ok, detail))
    return out


def _cfinite_checks(k_max: int) -> List[Check]:
    out = []
    ok, detail = True, ""
    for k in range(1, min(8, k_max) + 1):
        direct = gf.curly_fk_ratfn(k).series(200).coeffs
        extended = cf.rk_values(k, 200)
        if list(direct) != extended:
            ok, detail = False, f"k={k}"
    out.append(_check("recurrence extension matches series to n=200, k <= 8",
                      ok, detail))

    rec = cf.recurrence_from_ratfn(gf.curly_fk_ratfn(3, reduced=True))
    ok = rec.order == 5 and rec.coeffs == (2, -1, 1, -2, 1) and rec.valid_from == 10
    out.append(_check("reduced R_3 recurrence has order 5, coeffs (2,-1,1,-2,1), n > 9",
                      ok, f"{rec}"))

    vals = cf.rk_values(3, 60)
    qp = cf.quasipoly_fit(vals, period=3, degree_bound=2, valid_from=10)
    F = Fraction
    expected = ((F(7), F(-15), F(6)), (F(2), F(-11), F(6)), (F(-1), F(-7), F(6)))
    out.append(_check("R_3 quasi-polynomial matches 6m^2-15m+7 / -11m+2 / -7m-1",
                      qp.polys == expected, f"{qp.polys}"))

    ok, detail = True, ""
    for k in range(1, min(6, k_max) + 1):
        delta = 3 if k == 3 else lcm(*range(1, k + 1))
        n0 = k * k + 1
        vals = cf.rk_values(k, n0 + (k + 4) * delta + delta)
        fit = cf.quasipoly_fit(vals, period=delta, degree_bound=k - 1, valid_from=n0)
        lead = cf.leading_asymptotic_rk(k)
        for nu in range(delta):
            in_n = fit.poly_in_n(nu)
            if in_n[k - 1] != lead:
                ok, detail = False, f"k={k}, nu={nu}: {in_n[k - 1]} != {lead}"
    out.append(_check("every residue polynomial of R_k has top coefficient "
                      "2^k/(k!(k-1)!), k <= 6", ok, detail))

    ok, detail = True, ""
    for k in (2, 3):
        delta, deg = lcm(*range(1, k + 1)), 2 * k - 1
        series = gf.dk_ratfn(k).series(max(80, (deg + 5) * delta + 10)).coeffs
        fit = cf.quasipoly_fit(list(series), period=delta, degree_bound=deg,
                               valid_from=k * k)
        first, second = cf.leading_asymptotic_dk(k)
        for nu in range(delta):
            in_n = fit.poly_in_n(nu)
            if in_n[deg] != first or in_n[deg - 1] != second:
                ok, detail = False, f"k={k}, nu={nu}"
    out.append(_check("fitted D_2, D_3 quasi-polynomials reproduce the closed-form "
                      "top two coefficients", ok, detail))
    return out


_MOD2_PERIODS = {2: 2, 3: 2, 4: 8, 5: 8, 6: 24, 7: 24, 8: 48, 9: 48, 10: 480, 11: 480}


def _congruence_checks(k_max: int) -> List[Check]:
    out = []
    ok, detail = True, ""
    observed = {}
    for k in range(2, min(11, k_max) + 1):
        p = cf.rk_eventual_period_mod(k, 2)
        observed[k] = p
        if p != _MOD2_PERIODS[k]:
            ok, detail = False, f"k={k}: detected {p}, expected {_MOD2_PERIODS[k]}"
    out.append(_check(f"mod-2 eventual periods match the published list, k <= "
                      f"{min(11, k_max)}", ok, detail))

    pair_ok, pair_detail = True, ""
    for k in range(2, min(11, k_max), 2):
        if k + 1 in observed and observed.get(k) != observed.get(k + 1):
            pair_ok, pair_detail = False, f"k={k},{k + 1}: {observed.get(k)} vs {observed.get(k + 1)}"
    out.append(_check("paired mod-2 periods: R_2k and R_2k+1 agree",
                      pair_ok, pair_detail, hard=False))

    ok, detail = True, ""
    for m in range(2, 13):
        rep = cf.congruence_shift_check(3, m, 3, 9, 9 + 7 * 3 * m)
        if not rep.holds:
            ok, detail = False, f"M={m}: counterexamples {rep.counterexamples}"
    out.append(_check("R_3(n+3M) = R_3(n) mod M for M <= 12, n > 9", ok, detail))

    ok, detail = True, ""
    for m in range(2, 9):
        rep = cf.congruence_shift_check(4, m, 12, 16, 16 + 7 * 12 * m)
        if not rep.holds:
            ok, detail = False, f"M={m}: counterexamples {rep.counterexamples}"
    out.append(_check("R_4(n+12M) = R_4(n) mod M for M <= 8, n > 16", ok, detail))

    rep = cf.congruence_shift_check(6, 3, 60, 36, 36 + 3 * 3 * 60)
    out.append(_check(
        "R_6(n+60*3) vs R_6(n) mod 3 (expected to fail: 3 shares a factor with "
        "coefficient denominators)",
        True, f"failures: {rep.num_failures}/{rep.num_checked}, "
              f"first: {rep.counterexamples[:3]}", hard=False))
    return out


def run_battery(k_max: int = 8, d_max: int = 10) -> List[Check]:
    """Run the full cross-check battery; returns one Check per line item."""
    if k_max < 1 or d_max < 1:
        raise ValueError("k_max and d_max must be positive")
    rng = random.Random(20250723)
    n_top = 30
    pool = _partition_pool(n_top)
    checks: List[Check] = []
    checks += _partition_statistics_checks(pool, 24)
    checks += _polyring_checks(rng)
    checks += _ad_checks(pool, d_max)
    checks += _phi_checks(k_max)
    checks += _fk_checks(pool, k_max, n_top)
    checks += _cfinite_checks(k_max)
    checks += _congruence_checks(k_max)
    return checks
