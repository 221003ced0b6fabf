"""High-precision numerics with explicit, conservative error bounds.

BigReal wraps a raw mpmath.libmp mpf tuple together with an absolute error
bound.  All arithmetic goes through libmp functions that take the precision
and rounding mode as arguments, so there is no global precision state and
every operation is a pure function of (inputs, ctx).  Error propagation is
worst-case ulp counting: cheap, crude, and always valid, which is what
identity verification needs.

The constants pi, log 2 and gamma come from mpmath's proven algorithms
(evaluated with 16 extra bits and assigned a 4-ulp bound); zeta values are
computed here by Euler-Maclaurin summation with an explicit remainder bound,
and li4(1/2) by its geometrically convergent defining series.  gamma is used
only by oracle tail estimates; it is deliberately not a symbolic atom.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import factorial, log2 as _flog2
from typing import Optional, Union

from mpmath import libmp
from mpmath.libmp import (
    fzero,
    from_int,
    from_man_exp,
    from_rational,
    mpf_abs,
    mpf_add,
    mpf_div,
    mpf_log,
    mpf_lt,
    mpf_mul,
    mpf_neg,
    mpf_sub,
    to_str,
)

from . import exact
from .symexpr import Atom, SymExpr

__all__ = [
    "PrecisionContext",
    "PrecisionExhausted",
    "BigReal",
    "const_pi",
    "const_log2",
    "const_gamma",
    "zeta_num",
    "li4_half_num",
    "atom_num",
    "eval_sym",
]

_EPREC = 80  # working precision for the error-bound side channel


class PrecisionExhausted(ArithmeticError):
    """Cancellation ate the guard bits; the result does not meet its contract."""


class PrecisionContext:
    """Working precision in bits plus guard bits reserved for rounding noise."""

    __slots__ = ("working_bits", "guard_bits")

    def __init__(self, working_bits: int = 192, guard_bits: int = 32):
        if working_bits < 64:
            raise ValueError(f"working_bits must be >= 64, got {working_bits}")
        if not 0 <= guard_bits < working_bits:
            raise ValueError("guard_bits must satisfy 0 <= guard_bits < working_bits")
        object.__setattr__(self, "working_bits", working_bits)
        object.__setattr__(self, "guard_bits", guard_bits)

    def __setattr__(self, *a):
        raise AttributeError("PrecisionContext is immutable")

    @property
    def contract_bits(self) -> int:
        return self.working_bits - self.guard_bits

    def __eq__(self, other):
        return (
            isinstance(other, PrecisionContext)
            and self.working_bits == other.working_bits
            and self.guard_bits == other.guard_bits
        )

    def __hash__(self):
        return hash((self.working_bits, self.guard_bits))

    def __repr__(self):
        return f"PrecisionContext(working_bits={self.working_bits}, guard_bits={self.guard_bits})"


DEFAULT_CONTEXT = PrecisionContext()


def _mag(t) -> int:
    # power of two bounding |t| from above: |t| <= 2**_mag(t)
    if t == fzero:
        return -(10**9)
    return t[2] + t[3]


def _ulp(t, wb: int):
    # bound on the round-to-nearest error of a result t at precision wb
    if t == fzero:
        return fzero
    return from_man_exp(1, _mag(t) - wb)


def _eadd(*errs):
    acc = fzero
    for e in errs:
        acc = mpf_add(acc, e, _EPREC, "u")
    return acc


def _emul(a, b):
    return mpf_mul(a, b, _EPREC, "u")


class BigReal:
    """A real number at ctx.working_bits precision with an absolute error bound."""

    __slots__ = ("ctx", "_v", "_e")

    def __init__(self, ctx: PrecisionContext, v, e):
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "_v", v)
        object.__setattr__(self, "_e", e)

    def __setattr__(self, *a):
        raise AttributeError("BigReal is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(ctx: PrecisionContext) -> "BigReal":
        return BigReal(ctx, fzero, fzero)

    @staticmethod
    def from_int(n: int, ctx: PrecisionContext) -> "BigReal":
        return BigReal(ctx, from_int(n), fzero)

    @staticmethod
    def from_fraction(q: Union[Fraction, int], ctx: PrecisionContext) -> "BigReal":
        q = Fraction(q)
        v = from_rational(q.numerator, q.denominator, ctx.working_bits, "n")
        return BigReal(ctx, v, _ulp(v, ctx.working_bits))

    @staticmethod
    def inv_int_power(base: int, p: int, ctx: PrecisionContext) -> "BigReal":
        """base**(-p) for integer base >= 1, p >= 0 (one rounding)."""
        v = from_rational(1, base**p, ctx.working_bits, "n")
        return BigReal(ctx, v, _ulp(v, ctx.working_bits))

    # -- arithmetic ---------------------------------------------------------

    def _wb(self) -> int:
        return self.ctx.working_bits

    def __add__(self, other: "BigReal") -> "BigReal":
        wb = self._wb()
        v = mpf_add(self._v, other._v, wb, "n")
        return BigReal(self.ctx, v, _eadd(self._e, other._e, _ulp(v, wb)))

    def __sub__(self, other: "BigReal") -> "BigReal":
        wb = self._wb()
        v = mpf_sub(self._v, other._v, wb, "n")
        return BigReal(self.ctx, v, _eadd(self._e, other._e, _ulp(v, wb)))

    def __neg__(self) -> "BigReal":
        return BigReal(self.ctx, mpf_neg(self._v), self._e)

    def __abs__(self) -> "BigReal":
        return BigReal(self.ctx, mpf_abs(self._v), self._e)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = BigReal.from_fraction(other, self.ctx)
        wb = self._wb()
        v = mpf_mul(self._v, other._v, wb, "n")
        e = _eadd(
            _emul(mpf_abs(self._v), other._e),
            _emul(mpf_abs(other._v), self._e),
            _emul(self._e, other._e),
            _ulp(v, wb),
        )
        return BigReal(self.ctx, v, e)

    __rmul__ = __mul__

    def __truediv__(self, other: "BigReal") -> "BigReal":
        if isinstance(other, (int, Fraction)):
            other = BigReal.from_fraction(other, self.ctx)
        wb = self._wb()
        babs = mpf_abs(other._v)
        # need |b| > 2*eb to bound the quotient error
        if other._v == fzero or not mpf_lt(mpf_add(other._e, other._e, _EPREC, "u"), babs):
            raise PrecisionExhausted("division by a quantity indistinguishable from zero")
        v = mpf_div(self._v, other._v, wb, "n")
        num = _eadd(self._e, _emul(mpf_abs(v), other._e))
        den = mpf_sub(babs, other._e, _EPREC, "d")
        e = _eadd(mpf_div(num, den, _EPREC, "u"), _ulp(v, wb))
        return BigReal(self.ctx, v, e)

    def __pow__(self, n: int) -> "BigReal":
        if not isinstance(n, int):
            return NotImplemented
        if n == 0:
            return BigReal.from_int(1, self.ctx)
        if n < 0:
            return BigReal.from_int(1, self.ctx) / self.__pow__(-n)
        out = self
        for _ in range(n - 1):
            out = out * self
        return out

    def ln(self) -> "BigReal":
        wb = self._wb()
        if self._v == fzero or self._v[0] == 1:
            raise ValueError("ln needs a positive argument")
        if not mpf_lt(mpf_add(self._e, self._e, _EPREC, "u"), self._v):
            raise PrecisionExhausted("ln argument indistinguishable from zero")
        v = mpf_log(self._v, wb, "n")
        den = mpf_sub(self._v, self._e, _EPREC, "d")
        e = _eadd(mpf_div(self._e, den, _EPREC, "u"), _ulp(v, wb))
        return BigReal(self.ctx, v, e)

    # -- accessors -----------------------------------------------------------

    def widened(self, extra_err) -> "BigReal":
        """Same value with `extra_err` (raw mpf tuple or BigReal upper) folded in."""
        if isinstance(extra_err, BigReal):
            extra_err = extra_err.upper_tuple()
        return BigReal(self.ctx, self._v, _eadd(self._e, extra_err))

    def err_tuple(self):
        return self._e

    def value_tuple(self):
        return self._v

    def upper_tuple(self):
        """Raw tuple bounding |value| + err from above."""
        return mpf_add(mpf_abs(self._v), self._e, _EPREC, "u")

    def __float__(self):
        return libmp.to_float(self._v)

    def err_float(self) -> float:
        return libmp.to_float(self._e, rnd="u")

    @property
    def is_exact(self) -> bool:
        return self._e == fzero

    def meets_contract(self) -> bool:
        if self._e == fzero:
            return True
        if self._v == fzero:
            return False
        return _mag(self._e) <= _mag(self._v) - self.ctx.contract_bits

    def certified_digits(self) -> int:
        """Decimal digits that the error bound certifies (at least 1 if any)."""
        if self._v == fzero:
            return 0
        if self._e == fzero:
            return int(self.ctx.working_bits * 0.30102)
        good_bits = _mag(self._v) - _mag(self._e)
        return max(0, int(good_bits * 0.30102) - 1)

    def decimal(self, digits: Optional[int] = None) -> str:
        """Round-to-nearest decimal string, never printing uncertified digits."""
        if self._v == fzero:
            return "0"
        cert = self.certified_digits()
        if digits is None:
            digits = cert
        digits = max(1, min(digits, cert) if cert else 1)
        return to_str(self._v, digits)

    def err_decimal(self) -> str:
        if self._e == fzero:
            return "0"
        return to_str(self._e, 3)

    def __repr__(self):
        return f"BigReal({self.decimal(min(self.certified_digits(), 30) or 6)} ± {self.err_decimal()})"


def breal_sum(values, ctx: PrecisionContext) -> BigReal:
    acc = BigReal.zero(ctx)
    for v in values:
        acc = acc + v
    return acc


# -- constants ----------------------------------------------------------------

_const_cache: dict[tuple, BigReal] = {}
_const_lock = threading.Lock()


def _cached(key, build):
    with _const_lock:
        hit = _const_cache.get(key)
        if hit is not None:
            return hit
    val = build()
    with _const_lock:
        return _const_cache.setdefault(key, val)


def _lib_const(name: str, fn, ctx: PrecisionContext) -> BigReal:
    def build():
        wb = ctx.working_bits
        v = fn(wb + 16, "n")
        v = libmp.mpf_pos(v, wb, "n")
        return BigReal(ctx, v, _eadd(_ulp(v, wb), _ulp(v, wb + 14)))

    br = _cached((name, ctx.working_bits), build)
    return BigReal(ctx, br._v, br._e)


def const_pi(ctx: PrecisionContext = DEFAULT_CONTEXT) -> BigReal:
    return _lib_const("pi", libmp.mpf_pi, ctx)


def const_log2(ctx: PrecisionContext = DEFAULT_CONTEXT) -> BigReal:
    return _lib_const("log2", libmp.mpf_ln2, ctx)


def const_gamma(ctx: PrecisionContext = DEFAULT_CONTEXT) -> BigReal:
    return _lib_const("gamma", libmp.mpf_euler, ctx)


def _pochhammer(s: int, m: int) -> int:
    out = 1
    for i in range(m):
        out *= s + i
    return out


def zeta_num(s: int, ctx: PrecisionContext = DEFAULT_CONTEXT) -> BigReal:
    """zeta(s) for integer s >= 2 by direct Euler-Maclaurin summation.

    The remainder after K Bernoulli corrections at cutoff N is bounded by
    4 (2 pi)^(-2K) (s)_2K N^(1-s-2K) / (s+2K-1); N is chosen from that bound,
    not from a fixed term count.
    """
    if s < 2:
        raise ValueError(f"zeta_num needs s >= 2, got {s}")

    def build():
        wb = ctx.working_bits
        K = max(8, wb // 16)
        target_log2 = -(wb + 4)
        # pick N from the log of the remainder bound
        log2_poch = _flog2(_pochhammer(s, 2 * K))
        N = 32
        while (2 - 2 * K * _flog2(6.283185307) + log2_poch
               + (1 - s - 2 * K) * _flog2(N) - _flog2(s + 2 * K - 1)) > target_log2:
            N *= 2
        head = BigReal.zero(ctx)
        for n in range(1, N + 1):
            head = head + BigReal.inv_int_power(n, s, ctx)
        # tail over n > N: integral - f(N)/2 - sum B_2k/(2k)! f^(2k-1)(N) + R
        tail = BigReal.inv_int_power(N, s - 1, ctx) / (s - 1)
        tail = tail - BigReal.inv_int_power(N, s, ctx) / 2
        for k in range(1, K + 1):
            c = exact.bernoulli(2 * k) * Fraction(_pochhammer(s, 2 * k - 1), factorial(2 * k))
            tail = tail + c * BigReal.inv_int_power(N, s + 2 * k - 1, ctx)
        rem = Fraction(4 * _pochhammer(s, 2 * K), (s + 2 * K - 1) * N ** (s + 2 * K - 1))
        rem_t = _emul(
            BigReal.from_fraction(rem, ctx).upper_tuple(),
            (const_pi(ctx) * 2).__pow__(-2 * K).upper_tuple(),
        )
        return (head + tail).widened(rem_t)

    br = _cached(("zeta", s, ctx.working_bits), build)
    return BigReal(ctx, br._v, br._e)


def li4_half_num(ctx: PrecisionContext = DEFAULT_CONTEXT) -> BigReal:
    """li4(1/2) = sum 1/(2^n n^4); truncating at M leaves a tail < 2^-M."""

    def build():
        M = ctx.working_bits + 8
        acc = BigReal.zero(ctx)
        for n in range(1, M + 1):
            v = from_rational(1, (1 << n) * n**4, ctx.working_bits, "n")
            acc = acc + BigReal(ctx, v, _ulp(v, ctx.working_bits))
        return acc.widened(from_man_exp(1, -M))

    br = _cached(("li4half", ctx.working_bits), build)
    return BigReal(ctx, br._v, br._e)


def atom_num(atom: Atom, ctx: PrecisionContext = DEFAULT_CONTEXT) -> BigReal:
    if atom.kind == "pi":
        return const_pi(ctx)
    if atom.kind == "log2":
        return const_log2(ctx)
    if atom.kind == "li4half":
        return li4_half_num(ctx)
    return zeta_num(atom.arg, ctx)


def eval_sym(e: SymExpr, ctx: PrecisionContext = DEFAULT_CONTEXT) -> BigReal:
    """Evaluate a SymExpr numerically; the result carries its achieved error bound.

    The empty expression evaluates to exact 0.  For nonzero expressions the
    result must retain ctx.contract_bits of relative accuracy, otherwise the
    cancellation is reported as PrecisionExhausted.
    """
    if e.is_zero:
        return BigReal.zero(ctx)
    acc = BigReal.zero(ctx)
    for mono, coeff in e.terms():
        term = BigReal.from_fraction(coeff, ctx)
        for atom, exp in mono:
            term = term * atom_num(atom, ctx) ** exp
        acc = acc + term
    if not acc.meets_contract():
        raise PrecisionExhausted(
            f"cancellation below contract precision evaluating {e} "
            f"(value ~ {acc.decimal(6) if acc.value_tuple() != fzero else 0}, err {acc.err_decimal()})"
        )
    return acc
