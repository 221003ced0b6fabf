"""Exact rational building blocks: harmonic-type numbers, Bernoulli numbers, binomials.

Everything here is a pure function returning `fractions.Fraction` (always stored
reduced, denominator > 0), which is the coefficient domain for the whole package.
Speed is secondary to exactness; the memo caches are only ever appended to, so
concurrent readers are safe under CPython.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import comb

__all__ = [
    "HarmonicKind",
    "plain",
    "semi",
    "alternating",
    "harmonic",
    "bernoulli",
    "binomial",
]


class HarmonicKind:
    """Tagged kind of a harmonic-type partial sum.

    variant "plain":       H_n^(p)  = sum_{k<=n} 1/k^p
    variant "semi":        S_n^(t)  = sum_{k<=n} 1/(2k-1)^t
    variant "alternating": Ht_n^(b) = sum_{k<=n} (-1)^(k-1)/k^b
    """

    __slots__ = ("variant", "order")

    _VARIANTS = ("plain", "semi", "alternating")

    def __init__(self, variant: str, order: int):
        if variant not in self._VARIANTS:
            raise ValueError(f"unknown harmonic variant {variant!r}")
        if order < 1:
            raise ValueError(f"harmonic order must be >= 1, got {order}")
        object.__setattr__(self, "variant", variant)
        object.__setattr__(self, "order", order)

    def __setattr__(self, *a):
        raise AttributeError("HarmonicKind is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, HarmonicKind)
            and self.variant == other.variant
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.variant, self.order))

    def __repr__(self):
        return f"HarmonicKind({self.variant!r}, {self.order})"


def plain(p: int = 1) -> HarmonicKind:
    return HarmonicKind("plain", p)


def semi(t: int = 1) -> HarmonicKind:
    return HarmonicKind("semi", t)


def alternating(b: int = 1) -> HarmonicKind:
    return HarmonicKind("alternating", b)


# memo: kind -> list of prefix values [v_0, v_1, ..., v_m] (v_0 = 0)
_harmonic_cache: dict[HarmonicKind, list[Fraction]] = {}
_cache_lock = threading.Lock()


def harmonic(n: int, kind: HarmonicKind) -> Fraction:
    """n-th harmonic-type number of the given kind, exactly.

    harmonic(0, kind) == 0 for every kind.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if not isinstance(kind, HarmonicKind):
        raise TypeError("kind must be a HarmonicKind")
    with _cache_lock:
        vals = _harmonic_cache.setdefault(kind, [Fraction(0)])
        p = kind.order
        while len(vals) <= n:
            k = len(vals)
            if kind.variant == "plain":
                step = Fraction(1, k**p)
            elif kind.variant == "semi":
                step = Fraction(1, (2 * k - 1) ** p)
            else:
                step = Fraction((-1) ** (k - 1), k**p)
            vals.append(vals[-1] + step)
        return vals[n]


_bernoulli_cache: list[Fraction] = [Fraction(1)]  # B_0


def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n with the B_1 = -1/2 convention.

    Computed from the defining recurrence sum_{k=0..n} C(n+1,k) B_k = 0.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    with _cache_lock:
        while len(_bernoulli_cache) <= n:
            m = len(_bernoulli_cache)
            if m > 1 and m % 2 == 1:
                _bernoulli_cache.append(Fraction(0))
                continue
            acc = sum(
                (Fraction(comb(m + 1, k)) * _bernoulli_cache[k] for k in range(m)),
                Fraction(0),
            )
            _bernoulli_cache.append(-acc / (m + 1))
        return _bernoulli_cache[n]


def binomial(n: int, k: int) -> Fraction:
    """C(n, k) as a Fraction; 0 outside 0 <= k <= n (null binomials convention)."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if k < 0 or k > n:
        return Fraction(0)
    return Fraction(comb(n, k))
