"""Identifiers for the series families the package evaluates.

A SumId names one convergent series with integer parameters; it is the common
currency between the closed-form table, the summation oracle, the linear
relations and the CLI.
"""

from __future__ import annotations

__all__ = ["SumId", "FAMILIES"]

# family -> (parameter names, validator, weight function)
FAMILIES = {
    "J": (("b",), lambda b: b >= 2, lambda b: b + 1),
    "Jbar": (("b",), lambda b: b >= 2, lambda b: b + 1),
    "sigma": (("s", "t"), lambda s, t: s >= 2 and t >= 1, lambda s, t: s + t),
    "h": (("q",), lambda q: q >= 2, lambda q: q + 1),
    "Z": (("a",), lambda a: a >= 1, lambda a: 2 * a + 1),
    "HoddOverOdd": (("a",), lambda a: a >= 1, lambda a: 2 * a + 1),
    "EulerStar": (("b",), lambda b: b >= 2, lambda b: b + 1),
    "AltEulerStar": (("a",), lambda a: a >= 1, lambda a: 2 * a + 1),
    "ZetaStar": (("q", "p"), lambda q, p: q >= 2 and p >= 1, lambda q, p: q + p),
    "AltTildeH": (("a",), lambda a: a >= 1, lambda a: 2 * a + 1),
    "E": (("p", "q"), lambda p, q: p >= 1 and q >= 2, lambda p, q: p + q),
}


class SumId:
    """One series family instance, e.g. SumId.sigma(2, 3) or SumId.J(4).

    The defining series:
      J(b)            sum S_n / n^b
      Jbar(b)         sum S_n / (2n-1)^b
      sigma(s, t)     sum S_n^(t) / n^s
      h(q)            sum H_p / (2p+1)^q
      Z(a)            sum H_2n / n^(2a)
      HoddOverOdd(a)  sum H_(2n-1) / (2n-1)^(2a)
      EulerStar(b)    sum H_n / n^b
      AltEulerStar(a) sum (-1)^(n-1) H_n / n^(2a)
      ZetaStar(q, p)  sum H_n^(p) / n^q
      AltTildeH(a)    sum (-1)^n Ht_(n-1)^(2a) / n
      E(p, q)         sum (sum_{k<=2n} k^-p) / n^q
    """

    __slots__ = ("family", "params")

    def __init__(self, family: str, *params: int):
        if family not in FAMILIES:
            raise ValueError(f"unknown family {family!r}")
        names, valid, _ = FAMILIES[family]
        if len(params) != len(names):
            raise ValueError(f"{family} takes parameters {names}, got {params}")
        if not all(isinstance(p, int) for p in params):
            raise ValueError(f"{family} parameters must be integers, got {params}")
        if not valid(*params):
            raise ValueError(f"parameters {params} out of range for family {family}")
        object.__setattr__(self, "family", family)
        object.__setattr__(self, "params", tuple(params))

    def __setattr__(self, *a):
        raise AttributeError("SumId is immutable")

    # family constructors
    @staticmethod
    def J(b: int) -> "SumId":
        return SumId("J", b)

    @staticmethod
    def Jbar(b: int) -> "SumId":
        return SumId("Jbar", b)

    @staticmethod
    def sigma(s: int, t: int) -> "SumId":
        return SumId("sigma", s, t)

    @staticmethod
    def h(q: int) -> "SumId":
        return SumId("h", q)

    @staticmethod
    def Z(a: int) -> "SumId":
        return SumId("Z", a)

    @staticmethod
    def hodd_over_odd(a: int) -> "SumId":
        return SumId("HoddOverOdd", a)

    @staticmethod
    def euler_star(b: int) -> "SumId":
        return SumId("EulerStar", b)

    @staticmethod
    def alt_euler_star(a: int) -> "SumId":
        return SumId("AltEulerStar", a)

    @staticmethod
    def zeta_star(q: int, p: int) -> "SumId":
        return SumId("ZetaStar", q, p)

    @staticmethod
    def alt_tilde_h(a: int) -> "SumId":
        return SumId("AltTildeH", a)

    @staticmethod
    def E(p: int, q: int) -> "SumId":
        return SumId("E", p, q)

    @property
    def weight(self) -> int:
        return FAMILIES[self.family][2](*self.params)

    @property
    def param_names(self) -> tuple[str, ...]:
        return FAMILIES[self.family][0]

    def sort_key(self):
        return (self.family, self.params)

    def __eq__(self, other):
        return isinstance(other, SumId) and self.family == other.family and self.params == other.params

    def __hash__(self):
        return hash((self.family, self.params))

    def __str__(self):
        return f"{self.family}({', '.join(map(str, self.params))})"

    __repr__ = __str__
