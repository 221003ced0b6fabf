"""Independent ground truth: direct summation of every series family.

Each family is summed at its definition: an exactly-evaluated head of N terms
plus a certified tail.  Tails come from Euler-Maclaurin (monotone series) or
Boole summation (alternating series) applied to the explicit asymptotic form
of the summand, with worst-case remainder bounds

    |R_K^EM|    <= 4 (2 pi)^(-2K) Int |f^(2K)|,
    |R_K^Boole| <= 4 pi^(-K)      Int |f^(K)|,

so raw O(log N / N^(s-1)) convergence never limits the tolerance.  Harmonic
weights use the enveloping expansion H_m = ln m + gamma + 1/(2m) - 1/(12 m^2)
+ 1/(120 m^4) - theta/(252 m^6), 0 < theta < 1.  For t >= 2 the sum is split
as sigma(s,t) = lambda(t) zeta(s) - sum_n r_n / n^s with r_n the lambda tail,
which converges like n^(1-s-t).

Everything is computed in BigReal, so head rounding is part of the reported
bound; the remainder bounds are added on top.  Summation order is fixed
(ascending n) and term counts are chosen deterministically from the bounds.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import comb, factorial
from typing import NamedTuple, Optional

from mpmath.libmp import fzero, mpf_add, to_float

from . import exact
from .numerics import (
    _EPREC,
    BigReal,
    PrecisionContext,
    DEFAULT_CONTEXT,
    const_gamma,
    const_log2,
    const_pi,
    zeta_num,
)
from .sums import SumId

__all__ = [
    "OracleConfig",
    "OracleResult",
    "BudgetExhausted",
    "oracle_eval",
    "oracle_value",
    "partial_sum",
]


class BudgetExhausted(RuntimeError):
    """max_terms cannot certify target_tolerance even with tail corrections."""


class OracleConfig:
    __slots__ = ("target_tolerance", "max_terms", "tail_order")

    def __init__(self, target_tolerance: float = 1e-10, max_terms: int = 10**7, tail_order: int = 4):
        if not target_tolerance > 0:
            raise ValueError("target_tolerance must be positive")
        if max_terms < 1:
            raise ValueError("max_terms must be positive")
        if tail_order < 0:
            raise ValueError("tail_order must be >= 0")
        object.__setattr__(self, "target_tolerance", float(target_tolerance))
        object.__setattr__(self, "max_terms", int(max_terms))
        object.__setattr__(self, "tail_order", int(tail_order))

    def __setattr__(self, *a):
        raise AttributeError("OracleConfig is immutable")

    def __repr__(self):
        return (
            f"OracleConfig(target_tolerance={self.target_tolerance!r}, "
            f"max_terms={self.max_terms}, tail_order={self.tail_order})"
        )


class OracleResult(NamedTuple):
    value: BigReal
    achieved_bound: float
    terms_used: int


# ---------------------------------------------------------------------------
# power-log tail machinery: finite sums of (A + B ln n) n^-p
# ---------------------------------------------------------------------------


class _PL(NamedTuple):
    A: BigReal
    B: BigReal
    p: int


def _poch(s: int, m: int) -> int:
    out = 1
    for i in range(m):
        out *= s + i
    return out


def _hslice(p: int, m: int) -> Fraction:
    return sum((Fraction(1, p + i) for i in range(m)), Fraction(0))


def _br(x, ctx) -> BigReal:
    return x if isinstance(x, BigReal) else BigReal.from_fraction(Fraction(x), ctx)


def _pl_deriv(t: _PL, m: int, n: int, lnn: BigReal, ctx) -> BigReal:
    """m-th derivative of (A + B ln x) x^-p at integer x=n."""
    core = t.A + t.B * (lnn - _br(_hslice(t.p, m), ctx)) if m else t.A + t.B * lnn
    val = core * BigReal.inv_int_power(n, t.p + m, ctx) * _poch(t.p, m)
    return -val if m % 2 else val


def _pl_integral(t: _PL, N: int, lnN: BigReal, ctx) -> BigReal:
    """Integral over [N, inf) of (A + B ln x) x^-p, p >= 2."""
    inner = (t.A + t.B * lnN) * Fraction(1, t.p - 1) + t.B * Fraction(1, (t.p - 1) ** 2)
    return inner * BigReal.inv_int_power(N, t.p - 1, ctx)


def _pl_abs_integral(t: _PL, m: int, N: int, lnN: BigReal, ctx) -> BigReal:
    """Upper bound for Int_N^inf |d^m/dx^m (A + B ln x) x^-p| dx."""
    a_abs, b_abs = abs(t.A), abs(t.B)
    abs_term = _PL(a_abs + b_abs * _br(_hslice(t.p, m), ctx), b_abs, t.p + m)
    return _pl_integral(abs_term, N, lnN, ctx) * _poch(t.p, m)


def _em_tail(terms: list[_PL], N: int, K: int, ctx) -> tuple[BigReal, BigReal]:
    """(value, remainder bound) for sum over n > N of the power-log terms."""
    lnN = BigReal.from_int(N, ctx).ln()
    val = BigReal.zero(ctx)
    for t in terms:
        val = val + _pl_integral(t, N, lnN, ctx) - _pl_deriv(t, 0, N, lnN, ctx) * Fraction(1, 2)
        for k in range(1, K + 1):
            c = exact.bernoulli(2 * k) * Fraction(1, factorial(2 * k))
            val = val - c * _pl_deriv(t, 2 * k - 1, N, lnN, ctx)
    absint = BigReal.zero(ctx)
    order = 2 * K if K else 1
    for t in terms:
        absint = absint + _pl_abs_integral(t, order, N, lnN, ctx)
    if K:
        pref = (const_pi(ctx) * 2) ** (-2 * K) * 4
    else:
        pref = _br(Fraction(1, 2), ctx)
    return val, abs(absint) * pref


def _boole_tail(terms: list[_PL], M: int, K: int, ctx) -> tuple[BigReal, BigReal]:
    """(value, bound) for sum over n >= M of (-1)^(n-M) times the power-log terms."""
    K = max(K, 1)
    lnM = BigReal.from_int(M, ctx).ln()
    val = BigReal.zero(ctx)
    for k in range(K):
        if k > 1 and k % 2 == 0:
            continue  # E_k(0) = 0 for even k >= 2
        e_k = Fraction(2) * (1 - Fraction(2 ** (k + 1))) * exact.bernoulli(k + 1) / (k + 1) if k else Fraction(1)
        c = e_k / (2 * factorial(k))
        for t in terms:
            val = val + c * _pl_deriv(t, k, M, lnM, ctx)
    absint = BigReal.zero(ctx)
    for t in terms:
        absint = absint + _pl_abs_integral(t, K, M, lnM, ctx)
    return val, abs(absint) * (const_pi(ctx) ** (-K) * 4)


def _abs_tail(a, b, p: int, N: int, ctx) -> BigReal:
    """Upper bound for sum over n > N of (a + b ln n) n^-p with a, b >= 0."""
    lnN1 = BigReal.from_int(N + 1, ctx).ln()
    t = _PL(_br(a, ctx), _br(b, ctx), p)
    integral = _pl_integral(t, N, BigReal.from_int(N, ctx).ln(), ctx)
    first = (t.A + t.B * lnN1) * BigReal.inv_int_power(N + 1, p, ctx)
    return abs(integral) + abs(first)


# ---------------------------------------------------------------------------
# asymptotics of the weight sequences and of the odd kernels
# ---------------------------------------------------------------------------

# weight kind -> ([(rational, gamma mult, log2 mult, B coeff, power)], |delta| <= D n^-6)
_WEIGHTS = {
    "H": (
        [(Fraction(0), 1, 0, Fraction(1), 0), (Fraction(1, 2), 0, 0, 0, 1),
         (Fraction(-1, 12), 0, 0, 0, 2), (Fraction(1, 120), 0, 0, 0, 4)],
        Fraction(1, 252),
    ),
    "S": (
        [(Fraction(0), Fraction(1, 2), 1, Fraction(1, 2), 0), (Fraction(1, 48), 0, 0, 0, 2),
         (Fraction(-7, 1920), 0, 0, 0, 4)],
        Fraction(33, 16128),
    ),
    "H2N": (
        [(Fraction(0), 1, 1, Fraction(1), 0), (Fraction(1, 4), 0, 0, 0, 1),
         (Fraction(-1, 48), 0, 0, 0, 2), (Fraction(1, 1920), 0, 0, 0, 4)],
        Fraction(1, 16128),
    ),
    "H2N1": (
        [(Fraction(0), 1, 1, Fraction(1), 0), (Fraction(-1, 4), 0, 0, 0, 1),
         (Fraction(-1, 48), 0, 0, 0, 2), (Fraction(1, 1920), 0, 0, 0, 4)],
        Fraction(1, 16128),
    ),
}


def _weight_pl(kind: str, ctx) -> tuple[list[tuple[BigReal, BigReal, int]], Fraction]:
    entries, D = _WEIGHTS[kind]
    g, l2 = const_gamma(ctx), const_log2(ctx)
    out = []
    for rat, gm, lm, bc, e in entries:
        A = _br(rat, ctx)
        if gm:
            A = A + g * Fraction(gm)
        if lm:
            A = A + l2 * Fraction(lm)
        out.append((A, _br(Fraction(bc), ctx), e))
    return out, D


def _weight_step(kind: str, n: int, ctx) -> BigReal:
    if kind == "H":
        return BigReal.inv_int_power(n, 1, ctx)
    if kind == "S":
        return BigReal.inv_int_power(2 * n - 1, 1, ctx)
    if kind == "H2N":
        return BigReal.inv_int_power(2 * n - 1, 1, ctx) + BigReal.inv_int_power(2 * n, 1, ctx)
    # H2N1: H_(2n-1) gains 1/(2n-2) + 1/(2n-1) after the first step
    if n == 1:
        return BigReal.from_int(1, ctx)
    return BigReal.inv_int_power(2 * n - 2, 1, ctx) + BigReal.inv_int_power(2 * n - 1, 1, ctx)


def _kernel_expansion(s: int, c: int, I: int, N: int) -> tuple[list[Fraction], Fraction]:
    """(2n+c)^-s = sum_i coeff_i n^(-s-i) + R, |R| <= rem * n^(-s-I) for n >= N."""
    coeffs = [Fraction((-c) ** i * comb(s + i - 1, i), 2 ** (s + i)) for i in range(I)]
    q = Fraction(s + I, 2 * (I + 1) * N)
    if q >= Fraction(1, 2):
        raise ValueError("kernel expansion needs a larger cutoff")
    rem = Fraction(comb(s + I - 1, I), 2 ** (s + I)) / (1 - q)
    return coeffs, rem


def _upper_float(x: BigReal) -> float:
    return to_float(x.upper_tuple(), rnd="u")


# ---------------------------------------------------------------------------
# family evaluators
# ---------------------------------------------------------------------------

_N_START = 32


def _n_candidates(cfg: OracleConfig):
    n = _N_START
    while n <= max(cfg.max_terms, _N_START):
        yield min(n, cfg.max_terms)
        if n >= cfg.max_terms:
            return
        n *= 2


def _eval_weighted(kind: str, kern_c: Optional[int], s: int, cfg: OracleConfig, ctx) -> OracleResult:
    """sum_{n>=1} w_n * base(n)^-s with base = n (kern_c None) or 2n + kern_c."""
    wterms, D = _weight_pl(kind, ctx)
    tol = cfg.target_tolerance
    K = cfg.tail_order
    chosen = None
    for N in _n_candidates(cfg):
        bounds = BigReal.zero(ctx)
        if kern_c is None:
            pl = [_PL(A, B, e + s) for A, B, e in wterms]
        else:
            sum_a = sum((abs(A) for A, _, _ in wterms), BigReal.zero(ctx))
            sum_b = sum((abs(B) for _, B, _ in wterms), BigReal.zero(ctx))
            I = 4
            while True:
                try:
                    coeffs, rem = _kernel_expansion(s, kern_c, I, N)
                except ValueError:
                    coeffs, rem = None, None  # cutoff too small for this order
                    break
                b_kernel = _abs_tail(sum_a * rem, sum_b * rem, s + I, N, ctx)
                if _upper_float(b_kernel) <= tol / 8 or I >= 40:
                    break
                I += 4
            if coeffs is None:
                continue
            pl = [
                _PL(A * ci, B * ci, e + s + i)
                for A, B, e in wterms
                for i, ci in enumerate(coeffs)
                if ci
            ]
            bounds = bounds + b_kernel
        bounds = bounds + _abs_tail(D, 0, s + 6, N, ctx)
        tail_val, em_bound = _em_tail(pl, N, K, ctx)
        bounds = bounds + em_bound
        if _upper_float(bounds) <= tol / 2:
            chosen = (N, tail_val, bounds)
            break
    if chosen is None:
        raise BudgetExhausted(f"cannot certify {tol} within {cfg.max_terms} terms")
    N, tail_val, bounds = chosen
    acc = BigReal.zero(ctx)
    w = BigReal.zero(ctx)
    for n in range(1, N + 1):
        w = w + _weight_step(kind, n, ctx)
        base = n if kern_c is None else 2 * n + kern_c
        acc = acc + w * BigReal.inv_int_power(base, s, ctx)
    return _finish(acc + tail_val, bounds, N, cfg)


def _remainder_series_pl(p: int, scale_base: int, J: int) -> tuple[list[tuple[Fraction, int]], Fraction]:
    """Asymptotics of r_n = sum_{k > n} (scale_base*k + c)^-p in powers of the base.

    Returns ([(coeff, power)], rem) where the base is (2n-1), n, or (2n)
    depending on the family; rem bounds |R_n| * base^(p+2J-1).
    """
    terms = [(Fraction(1, scale_base * (p - 1)), p - 1), (Fraction(-1, 2), p)]
    for j in range(1, J + 1):
        c = exact.bernoulli(2 * j) * Fraction(scale_base ** (2 * j - 1) * _poch(p, 2 * j - 1), factorial(2 * j))
        terms.append((c, p + 2 * j - 1))
    # |R| <= 4 (2 pi)^(-2J) * scale^(2J) (p)_2J base^(1-p-2J) / (scale (p+2J-1))
    rem = Fraction(4 * scale_base ** (2 * J - 1) * _poch(p, 2 * J), p + 2 * J - 1)
    return terms, rem


def _eval_remainder_split(family: str, s: int, p: int, cfg: OracleConfig, ctx) -> OracleResult:
    """C0 - sum_n r_n / n^s for sigma(s,t>=2), ZetaStar(q,p>=2), E(p>=2,q).

    family selects the inner tail: "sigma" r_n = sum_{k>n} (2k-1)^-p,
    "zetastar" r_n = sum_{k>n} k^-p, "E" r_n = sum_{k>2n} k^-p.
    """
    tol = cfg.target_tolerance
    K = cfg.tail_order
    J = max(3, K)
    zs = zeta_num(s, ctx)
    zp = zeta_num(p, ctx)
    if family == "sigma":
        c0 = zp * (1 - Fraction(1, 2**p)) * zs  # lambda(p) zeta(s)
        r0 = zp * (1 - Fraction(1, 2**p))
        inner_scale = 2  # r_n in powers of (2n-1)
    else:
        c0 = zp * zs
        r0 = zp
        inner_scale = 1  # r_n in powers of n ("zetastar") or of 2n ("E")
    rterms, rrem = _remainder_series_pl(p, inner_scale, J)
    if family == "E":
        # base variable is 2n: rescale coefficients and the remainder to n-powers
        rterms = [(c * Fraction(1, 2**pw), pw) for c, pw in rterms]
        rrem = rrem * Fraction(1, 2 ** (p + 2 * J - 1))
    pi2j = (const_pi(ctx) * 2) ** (-2 * J)
    chosen = None
    for N in _n_candidates(cfg):
        bounds = BigReal.zero(ctx)
        pl: list[_PL] = []
        if family == "sigma":
            # powers of (2n-1): expand each into powers of n
            expandable = True
            for c, pw in rterms:
                I = 4
                while True:
                    try:
                        coeffs, rem = _kernel_expansion(pw, -1, I, N)
                    except ValueError:
                        expandable = False  # cutoff too small for this order
                        break
                    b_k = _abs_tail(abs(Fraction(c)) * rem, 0, pw + I + s, N, ctx)
                    if _upper_float(b_k) <= tol / (16 * len(rterms)) or I >= 40:
                        break
                    I += 4
                if not expandable:
                    break
                bounds = bounds + b_k
                pl.extend(_PL(_br(c * ci, ctx), _br(0, ctx), pw + i + s) for i, ci in enumerate(coeffs) if ci)
            if not expandable:
                continue
        else:
            pl = [_PL(_br(c, ctx), _br(0, ctx), pw + s) for c, pw in rterms]
        rem_pow = p + 2 * J - 1 + s  # for sigma: (2n-1)^(1-p-2J) <= n^(1-p-2J)
        bounds = bounds + _abs_tail(rrem, 0, rem_pow, N, ctx) * pi2j
        tail_val, em_bound = _em_tail(pl, N, K, ctx)
        bounds = bounds + em_bound
        if _upper_float(bounds) <= tol / 2:
            chosen = (N, tail_val, bounds)
            break
    if chosen is None:
        raise BudgetExhausted(f"cannot certify {tol} within {cfg.max_terms} terms")
    N, tail_val, bounds = chosen
    acc = BigReal.zero(ctx)
    r = r0
    for n in range(1, N + 1):
        if family == "sigma":
            r = r - BigReal.inv_int_power(2 * n - 1, p, ctx)
        elif family == "E":
            r = r - BigReal.inv_int_power(2 * n - 1, p, ctx) - BigReal.inv_int_power(2 * n, p, ctx)
        else:
            r = r - BigReal.inv_int_power(n, p, ctx)
        acc = acc + r * BigReal.inv_int_power(n, s, ctx)
    return _finish(c0 - (acc + tail_val), bounds, N, cfg)


def _eval_alt_euler_star(a: int, cfg: OracleConfig, ctx) -> OracleResult:
    s = 2 * a
    tol = cfg.target_tolerance
    KB = max(4, 2 * cfg.tail_order)
    wterms, D = _weight_pl("H", ctx)
    pl = [_PL(A, B, e + s) for A, B, e in wterms]
    chosen = None
    for M in _n_candidates(cfg):
        tail_val, b_boole = _boole_tail(pl, M + 1, KB, ctx)
        bounds = b_boole + _abs_tail(D, 0, s + 6, M, ctx)
        if _upper_float(bounds) <= tol / 2:
            chosen = (M, tail_val, bounds)
            break
    if chosen is None:
        raise BudgetExhausted(f"cannot certify {tol} within {cfg.max_terms} terms")
    M, tail_val, bounds = chosen  # M even: sign at n = M+1 is +1
    acc = BigReal.zero(ctx)
    h = BigReal.zero(ctx)
    for n in range(1, M + 1):
        h = h + BigReal.inv_int_power(n, 1, ctx)
        term = h * BigReal.inv_int_power(n, s, ctx)
        acc = acc + (term if n % 2 else -term)
    return _finish(acc + tail_val, bounds, M, cfg)


def _eval_alt_tilde(a: int, cfg: OracleConfig, ctx) -> OracleResult:
    s = 2 * a
    tol = cfg.target_tolerance
    K = cfg.tail_order
    KB = max(6, 2 * K + 2)
    eta = zeta_num(s, ctx) * (1 - Fraction(2, 2**s))
    lead = -(eta * const_log2(ctx))
    # tau_n = sum_{j>=n} (-1)^(j-n) j^-s expanded by Boole summation at n
    coeffs: list[tuple[Fraction, int]] = [(Fraction(1, 2), s)]
    for k in range(1, KB):
        if k % 2 == 0:
            continue
        e_k = Fraction(2) * (1 - Fraction(2 ** (k + 1))) * exact.bernoulli(k + 1) / (k + 1)
        coeffs.append((e_k * Fraction((-1) ** k * _poch(s, k), 2 * factorial(k)), s + k))
    rem_c = Fraction(4 * _poch(s, KB), s + KB - 1)
    piKB = const_pi(ctx) ** (-KB)
    pl = None
    chosen = None
    for N in _n_candidates(cfg):
        pl = [_PL(_br(c, ctx), _br(0, ctx), pw + 1) for c, pw in coeffs]
        tail_val, em_bound = _em_tail(pl, N, K, ctx)
        bounds = em_bound + _abs_tail(rem_c, 0, s + KB, N, ctx) * piKB
        if _upper_float(bounds) <= tol / 2:
            chosen = (N, tail_val, bounds)
            break
    if chosen is None:
        raise BudgetExhausted(f"cannot certify {tol} within {cfg.max_terms} terms")
    N, tail_val, bounds = chosen
    acc = BigReal.zero(ctx)
    tau = eta  # tau_1
    for n in range(1, N + 1):
        acc = acc + tau * BigReal.inv_int_power(n, 1, ctx)
        tau = BigReal.inv_int_power(n, s, ctx) - tau
    return _finish(lead + acc + tail_val, bounds, N, cfg)


def _finish(value: BigReal, math_bounds: BigReal, terms: int, cfg: OracleConfig) -> OracleResult:
    total = mpf_add(value.err_tuple(), math_bounds.upper_tuple(), _EPREC, "u")
    achieved = to_float(total, rnd="u")
    if achieved == 0.0 and total != fzero:
        achieved = 1e-300  # float underflow guard; the BigReal keeps the true bound
    if achieved > cfg.target_tolerance:
        raise BudgetExhausted(
            f"achieved bound {achieved:.3e} exceeds target {cfg.target_tolerance:.3e}"
        )
    return OracleResult(value.widened(total), achieved, terms)


# ---------------------------------------------------------------------------
# public entry points
# ---------------------------------------------------------------------------

_cache: dict = {}
_cache_lock = threading.Lock()


def oracle_eval(sid: SumId, cfg: Optional[OracleConfig] = None,
                ctx: PrecisionContext = DEFAULT_CONTEXT) -> OracleResult:
    """Certified numerical value of the series named by sid.

    |value - true sum| <= achieved_bound <= cfg.target_tolerance, or
    BudgetExhausted.  Deterministic for fixed (sid, cfg, ctx).
    """
    cfg = cfg or OracleConfig()
    floor = 2.0 ** -(ctx.working_bits - ctx.guard_bits)
    if cfg.target_tolerance < floor:
        raise ValueError(
            f"target_tolerance {cfg.target_tolerance:.3e} below the precision "
            f"contract 2^-{ctx.working_bits - ctx.guard_bits}"
        )
    key = (sid, cfg.target_tolerance, cfg.max_terms, cfg.tail_order,
           ctx.working_bits, ctx.guard_bits)
    with _cache_lock:
        if key in _cache:
            return _cache[key]
    res = _dispatch(sid, cfg, ctx)
    with _cache_lock:
        return _cache.setdefault(key, res)


def _dispatch(sid: SumId, cfg: OracleConfig, ctx) -> OracleResult:
    fam, p = sid.family, sid.params
    if fam == "J":
        return _eval_weighted("S", None, p[0], cfg, ctx)
    if fam == "Jbar":
        return _eval_weighted("S", -1, p[0], cfg, ctx)
    if fam == "sigma":
        s, t = p
        if t == 1:
            return _eval_weighted("S", None, s, cfg, ctx)
        return _eval_remainder_split("sigma", s, t, cfg, ctx)
    if fam == "h":
        return _eval_weighted("H", +1, p[0], cfg, ctx)
    if fam == "Z":
        return _eval_weighted("H2N", None, 2 * p[0], cfg, ctx)
    if fam == "HoddOverOdd":
        return _eval_weighted("H2N1", -1, 2 * p[0], cfg, ctx)
    if fam == "EulerStar":
        return _eval_weighted("H", None, p[0], cfg, ctx)
    if fam == "AltEulerStar":
        return _eval_alt_euler_star(p[0], cfg, ctx)
    if fam == "ZetaStar":
        q, pp = p
        if pp == 1:
            return _eval_weighted("H", None, q, cfg, ctx)
        return _eval_remainder_split("zetastar", q, pp, cfg, ctx)
    if fam == "AltTildeH":
        return _eval_alt_tilde(p[0], cfg, ctx)
    if fam == "E":
        pp, q = p
        if pp == 1:
            return _eval_weighted("H2N", None, q, cfg, ctx)
        return _eval_remainder_split("E", q, pp, cfg, ctx)
    raise ValueError(f"no oracle for family {fam}")


def oracle_value(sid: SumId, tol: float = 1e-10, ctx: PrecisionContext = DEFAULT_CONTEXT) -> BigReal:
    """Convenience wrapper returning just the BigReal (bound folded into its err)."""
    return oracle_eval(sid, OracleConfig(target_tolerance=tol), ctx).value


# ---------------------------------------------------------------------------
# exact rational partial sums of the defining series
# ---------------------------------------------------------------------------


def partial_sum(sid: SumId, n_terms: int) -> Fraction:
    """Exact value of the first n_terms terms of the defining series of sid."""
    if n_terms < 1:
        raise ValueError("n_terms must be >= 1")
    fam, p = sid.family, sid.params
    H, S = exact.plain, exact.semi
    acc = Fraction(0)
    for n in range(1, n_terms + 1):
        if fam == "J":
            acc += exact.harmonic(n, S(1)) / Fraction(n) ** p[0]
        elif fam == "Jbar":
            acc += exact.harmonic(n, S(1)) / Fraction(2 * n - 1) ** p[0]
        elif fam == "sigma":
            acc += exact.harmonic(n, S(p[1])) / Fraction(n) ** p[0]
        elif fam == "h":
            acc += exact.harmonic(n, H(1)) / Fraction(2 * n + 1) ** p[0]
        elif fam == "Z":
            acc += exact.harmonic(2 * n, H(1)) / Fraction(n) ** (2 * p[0])
        elif fam == "HoddOverOdd":
            acc += exact.harmonic(2 * n - 1, H(1)) / Fraction(2 * n - 1) ** (2 * p[0])
        elif fam == "EulerStar":
            acc += exact.harmonic(n, H(1)) / Fraction(n) ** p[0]
        elif fam == "AltEulerStar":
            acc += Fraction((-1) ** (n - 1)) * exact.harmonic(n, H(1)) / Fraction(n) ** (2 * p[0])
        elif fam == "ZetaStar":
            acc += exact.harmonic(n, H(p[1])) / Fraction(n) ** p[0]
        elif fam == "AltTildeH":
            acc += Fraction((-1) ** n) * exact.harmonic(n - 1, exact.alternating(2 * p[0])) / n
        elif fam == "E":
            acc += exact.harmonic(2 * n, H(p[0])) / Fraction(n) ** p[1]
        else:
            raise ValueError(f"no partial sum for family {fam}")
    return acc
