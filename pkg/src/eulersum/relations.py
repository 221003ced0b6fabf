"""Linear relations among sigma-sums of one weight, and their exact solution.

Relations are rational-linear equations over SumIds with a SymExpr right-hand
side.  Three generator families produce them:

  * product relations, from lambda(k) lambda(l) written as a weighted sum of
    the sigma's of weight k+l;
  * the general reduction relation sigma(s,t) -> {sigma(s-i, t+i)}, with the
    h-sum and log 2 terms folded away through the h closed forms, so every
    generated relation is homogeneous in sigma unknowns;
  * its even-t specialization and the two pre-folded variants.

solve_weight assembles the relations of one weight, injects known closed
forms as identity rows, and runs exact fraction-wise Gaussian elimination
with SymExpr-valued right-hand sides.  Degenerate rows must reduce to the
zero SymExpr; anything else would falsify a formula and is reported.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Callable, NamedTuple, Optional, Sequence

from . import closedform
from .numerics import BigReal, DEFAULT_CONTEXT, PrecisionContext, eval_sym
from .oracle import OracleConfig, oracle_eval
from .sums import SumId
from .symexpr import LOG2, SymExpr, lambda_sym

__all__ = [
    "Relation",
    "SolveReport",
    "SumTheoremReport",
    "gen_product_relation",
    "reduction_relation",
    "even_order_relation",
    "folded_relation",
    "relations_for_weight",
    "solve_weight",
    "verify_sum_theorem",
    "tabulated_sigma_values",
]


class Relation:
    """sum_i coeff_i * sigma_i = rhs, all sigma_i of one weight, rhs a SymExpr.

    Generators may legitimately produce relations with no sigma terms at
    degenerate parameter corners; those are pure identities whose rhs must
    normalize to zero (`is_identity`).
    """

    __slots__ = ("coeffs", "rhs")

    def __init__(self, coeffs: dict[SumId, Fraction], rhs: SymExpr):
        clean = {k: Fraction(v) for k, v in coeffs.items() if v}
        weights = {k.weight for k in clean}
        if len(weights) > 1:
            raise ValueError(f"mixed weights in relation: {sorted(weights)}")
        object.__setattr__(self, "coeffs", clean)
        object.__setattr__(self, "rhs", rhs)

    def __setattr__(self, *a):
        raise AttributeError("Relation is immutable")

    @property
    def is_identity(self) -> bool:
        return not self.coeffs

    @property
    def weight(self) -> Optional[int]:
        return next(iter(self.coeffs)).weight if self.coeffs else None

    def __eq__(self, other):
        return isinstance(other, Relation) and self.coeffs == other.coeffs and self.rhs == other.rhs

    def __repr__(self):
        lhs = " + ".join(f"{c}*{k}" for k, c in sorted(self.coeffs.items(), key=lambda i: i[0].sort_key()))
        return f"Relation({lhs or '0'} = {self.rhs})"

    def residual(self, ctx: PrecisionContext = DEFAULT_CONTEXT,
                 cfg: Optional[OracleConfig] = None) -> float:
        """|sum_i c_i * oracle(sigma_i) - eval(rhs)| with oracle values."""
        cfg = cfg or OracleConfig()
        acc = BigReal.zero(ctx)
        for sid, c in sorted(self.coeffs.items(), key=lambda i: i[0].sort_key()):
            acc = acc + oracle_eval(sid, cfg, ctx).value * c
        acc = acc - eval_sym(self.rhs, ctx)
        return abs(float(acc))


def gen_product_relation(k: int, l: int) -> Relation:
    """lambda(k) lambda(l) = 2^-w sum_i 2^i [C(w-i-1,l-1)+C(w-i-1,k-1)] sigma(w-i,i)."""
    if k < 2 or l < 2:
        raise ValueError(f"gen_product_relation needs k, l >= 2, got ({k}, {l})")
    w = k + l
    coeffs: dict[SumId, Fraction] = {}
    for i in range(1, w - 1):
        c = Fraction(2**i * (comb2(w - i - 1, l - 1) + comb2(w - i - 1, k - 1)), 2**w)
        if c:
            coeffs[SumId.sigma(w - i, i)] = c
    return Relation(coeffs, lambda_sym(k) * lambda_sym(l))


def comb2(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0


def _h_closed(q: int) -> SymExpr:
    return closedform.h_sum(q)


def reduction_relation(s: int, t: int) -> Relation:
    """The general reduction of sigma(s,t) to the sigma's of equal weight.

    ((-1)^t - 1) sigma(s,t) - sum_{i=1..s-2} 2^i C(t+i-1,i) sigma(s-i,t+i)
      = (-1)^t 2^s sum_{j=0..t-2} (-1)^j C(s+j-1,j) lambda(s+j) lambda(t-j)
        - 2^(s-1) C(s+t-2,s-1) h_(s+t-1) - 2^s C(s+t-2,s-1) lambda(s+t-1) ln 2,
    with the h-sum replaced by its closed form so the rhs is explicit.
    For even t the sigma(s,t) coefficient vanishes (it cancels with the i=0
    self-term).
    """
    if s < 2 or t < 1 or s + t < 3:
        raise ValueError(f"reduction_relation needs s >= 2, t >= 1, s+t >= 3, got ({s}, {t})")
    coeffs: dict[SumId, Fraction] = {SumId.sigma(s, t): Fraction((-1) ** t - 1)}
    for i in range(1, s - 1):
        coeffs[SumId.sigma(s - i, t + i)] = coeffs.get(SumId.sigma(s - i, t + i), Fraction(0)) - Fraction(
            2**i * comb(t + i - 1, i)
        )
    rhs = SymExpr.zero()
    for j in range(0, t - 1):
        rhs = rhs + (lambda_sym(s + j) * lambda_sym(t - j)).scaled(
            Fraction((-1) ** t * (-1) ** j * 2**s * comb(s + j - 1, j))
        )
    c_edge = comb(s + t - 2, s - 1)
    rhs = rhs - _h_closed(s + t - 1).scaled(Fraction(2 ** (s - 1) * c_edge))
    rhs = rhs - (lambda_sym(s + t - 1) * SymExpr.atom(LOG2)).scaled(Fraction(2**s * c_edge))
    return Relation(coeffs, rhs)


def even_order_relation(s: int, r: int) -> Relation:
    """The even-order specialization (t = 2r):

    sum_{i=1..s-2} 2^(i-1) C(2r+i-1,i) sigma(s-i,2r+i)
      = -2^(s-1) sum_{j=0..2r-2} (-1)^j C(s+j-1,j) lambda(s+j) lambda(2r-j)
        + 2^(s-2) C(s+2r-2,s-1) h_(s+2r-1) + 2^(s-1) C(s+2r-2,s-1) lambda(s+2r-1) ln 2,
    h folded.  Same content as reduction_relation(s, 2r) scaled by -1/2.
    """
    if s < 2 or r < 1:
        raise ValueError(f"even_order_relation needs s >= 2, r >= 1, got ({s}, {r})")
    coeffs: dict[SumId, Fraction] = {}
    for i in range(1, s - 1):
        coeffs[SumId.sigma(s - i, 2 * r + i)] = Fraction(2 ** (i - 1) * comb(2 * r + i - 1, i))
    rhs = SymExpr.zero()
    for j in range(0, 2 * r - 1):
        rhs = rhs - (lambda_sym(s + j) * lambda_sym(2 * r - j)).scaled(
            Fraction((-1) ** j * 2 ** (s - 1) * comb(s + j - 1, j))
        )
    c_edge = comb(s + 2 * r - 2, s - 1)
    rhs = rhs + _h_closed(s + 2 * r - 1).scaled(Fraction(2 ** (s - 2) * c_edge))
    rhs = rhs + (lambda_sym(s + 2 * r - 1) * SymExpr.atom(LOG2)).scaled(Fraction(2 ** (s - 1) * c_edge))
    return Relation(coeffs, rhs)


def folded_relation(variant: int, v: int, r: int) -> Relation:
    """The two pre-folded forms of the even-order relation (no h, no ln 2 terms).

    variant 1 (s = 2v):
      sum_{i=1..2v-2} 2^(i-1) C(2r+i-1,i) sigma(2v-i,2r+i)
        + 2^(2v-1) sum_{j=0..2r-2} (-1)^j C(2v+j-1,j) lambda(2v+j) lambda(2r-j)
        - 2^(2v-3) C(2v+2r-2,2v-1) (2v+2r-1) lambda(2v+2r)
        + 2^(2v-2) C(2v+2r-2,2v-1) sum_{j=1..r+v-2} lambda(2j+1) lambda(2v+2r-2j-1) = 0.
    (Only the binomial upper entry 2v+2r-2 is consistent with the even-order
    relation; the off-by-one variant 2v+2r-1 leaves a nonzero residual -- see
    the regression test.)

    variant 2 (s = 2v+1):
      sum_{i=1..2v-1} 2^(i-1) C(2r+i-1,i) sigma(2v+1-i,2r+i)
        + 2^2v sum_{j=0..2r-2} (-1)^j C(2v+j,j) lambda(2v+1+j) lambda(2r-j)
        - 2^2v C(2v+2r-1,2v) (v+r) lambda(2v+2r+1)
        + 2^2v C(2v+2r-1,2v) sum_{j=1..r+v-1} lambda(2j) lambda(2v+2r-2j+1) = 0.
    """
    if variant not in (1, 2):
        raise ValueError("variant must be 1 or 2")
    if v < 1 or r < 1:
        raise ValueError(f"folded_relation needs v >= 1, r >= 1, got ({v}, {r})")
    coeffs: dict[SumId, Fraction] = {}
    rhs = SymExpr.zero()
    if variant == 1:
        s = 2 * v
        for i in range(1, s - 1):
            coeffs[SumId.sigma(s - i, 2 * r + i)] = Fraction(2 ** (i - 1) * comb(2 * r + i - 1, i))
        for j in range(0, 2 * r - 1):
            rhs = rhs - (lambda_sym(s + j) * lambda_sym(2 * r - j)).scaled(
                Fraction((-1) ** j * 2 ** (s - 1) * comb(s + j - 1, j))
            )
        c_edge = comb(2 * v + 2 * r - 2, 2 * v - 1)
        rhs = rhs + lambda_sym(2 * v + 2 * r).scaled(
            Fraction(c_edge * (2 * v + 2 * r - 1) * 2 ** (2 * v - 3))
        )
        for j in range(1, r + v - 1):
            rhs = rhs - (lambda_sym(2 * j + 1) * lambda_sym(2 * v + 2 * r - 2 * j - 1)).scaled(
                Fraction(2 ** (2 * v - 2) * c_edge)
            )
        return Relation(coeffs, rhs)
    s = 2 * v + 1
    for i in range(1, s - 1):
        coeffs[SumId.sigma(s - i, 2 * r + i)] = Fraction(2 ** (i - 1) * comb(2 * r + i - 1, i))
    for j in range(0, 2 * r - 1):
        rhs = rhs - (lambda_sym(s + j) * lambda_sym(2 * r - j)).scaled(
            Fraction((-1) ** j * 2 ** (2 * v) * comb(2 * v + j, j))
        )
    c_edge = comb(2 * v + 2 * r - 1, 2 * v)
    rhs = rhs + lambda_sym(2 * v + 2 * r + 1).scaled(Fraction(c_edge * (v + r) * 2 ** (2 * v)))
    for j in range(1, r + v):
        rhs = rhs - (lambda_sym(2 * j) * lambda_sym(2 * v + 2 * r - 2 * j + 1)).scaled(
            Fraction(2 ** (2 * v) * c_edge)
        )
    return Relation(coeffs, rhs)


def relations_for_weight(w: int, include_reductions: bool = True) -> list[Relation]:
    """All generated relations of weight w: products (k <= l), plus reductions."""
    if w < 3:
        raise ValueError(f"weight must be >= 3, got {w}")
    rels = [gen_product_relation(k, w - k) for k in range(2, w // 2 + 1)]
    if include_reductions:
        for t in range(1, w - 1):
            s = w - t
            if s >= 2:
                rels.append(reduction_relation(s, t))
    return rels


# ---------------------------------------------------------------------------
# known closed-form providers and the exact solver
# ---------------------------------------------------------------------------

KnownProvider = Callable[[SumId], Optional[SymExpr]]


def tabulated_sigma_values(sid: SumId) -> Optional[SymExpr]:
    """Closed forms from the literature for sigma SumIds (the default provider)."""
    if sid.family != "sigma":
        return None
    return closedform.closed_form_for(sid)


class SolveReport(NamedTuple):
    weight: int
    solved: dict[SumId, SymExpr]
    unresolved: list[SumId]
    rank: int
    relations_used: int
    residual_checks: list[tuple[int, float]]
    inconsistent: list[int]  # indices of rows that reduced to 0 = nonzero


class _Row:
    __slots__ = ("coeffs", "rhs")

    def __init__(self, coeffs: dict[SumId, Fraction], rhs: SymExpr):
        self.coeffs = dict(coeffs)
        self.rhs = rhs

    def scale(self, c: Fraction):
        self.coeffs = {k: c * v for k, v in self.coeffs.items()}
        self.rhs = self.rhs.scaled(c)

    def submul(self, other: "_Row", c: Fraction):
        for k, v in other.coeffs.items():
            nv = self.coeffs.get(k, Fraction(0)) - c * v
            if nv:
                self.coeffs[k] = nv
            else:
                self.coeffs.pop(k, None)
        self.rhs = self.rhs - other.rhs.scaled(c)


def _eliminate(rows: list[_Row], unknowns: list[SumId]):
    """Exact Gauss-Jordan; pivots on the first unknown (smallest index) with a
    nonzero coefficient, scanning rows in input order for determinism."""
    pivots: list[tuple[SumId, _Row]] = []
    remaining = list(rows)
    for u in unknowns:
        pick = next((r for r in remaining if u in r.coeffs), None)
        if pick is None:
            continue
        remaining.remove(pick)
        pick.scale(1 / pick.coeffs[u])
        for r in rows:
            if r is not pick and u in r.coeffs:
                r.submul(pick, r.coeffs[u])
        pivots.append((u, pick))
    return pivots, remaining


def solve_weight(
    w: int,
    known_providers: Optional[Sequence[KnownProvider]] = None,
    *,
    include_reductions: bool = True,
    with_residuals: bool = True,
    ctx: PrecisionContext = DEFAULT_CONTEXT,
    cfg: Optional[OracleConfig] = None,
) -> SolveReport:
    """Assemble the weight-w system, inject known values, and solve exactly.

    Known closed forms enter as identity rows (coefficient 1), so if the
    generated relations independently determine one of them, elimination
    reduces the identity row to 0 = 0 -- an automatic exact-consistency check.
    Rows that reduce to 0 = (nonzero SymExpr) are reported as inconsistent
    rather than raised: they would falsify a closed form.
    """
    if w < 3:
        raise ValueError(f"weight must be >= 3, got {w}")
    providers = list(known_providers) if known_providers is not None else [tabulated_sigma_values]
    unknowns = [SumId.sigma(w - i, i) for i in range(1, w - 1)]
    generated = [r for r in relations_for_weight(w, include_reductions) if not r.is_identity]
    rows = [_Row(r.coeffs, r.rhs) for r in generated]
    for u in unknowns:
        for provider in providers:
            val = provider(u)
            if val is not None:
                rows.append(_Row({u: Fraction(1)}, val))
                break
    pivots, _ = _eliminate(rows, unknowns)
    solved: dict[SumId, SymExpr] = {}
    for u, row in pivots:
        if set(row.coeffs) == {u}:
            solved[u] = row.rhs
    unresolved = [u for u in unknowns if u not in solved]
    inconsistent = [
        i for i, r in enumerate(rows) if not r.coeffs and not r.rhs.is_zero
    ]
    residuals: list[tuple[int, float]] = []
    if with_residuals:
        for i, rel in enumerate(generated):
            residuals.append((i, rel.residual(ctx, cfg)))
    return SolveReport(
        weight=w,
        solved=solved,
        unresolved=unresolved,
        rank=len(pivots),
        relations_used=len(rows),
        residual_checks=residuals,
        inconsistent=inconsistent,
    )


class SumTheoremReport(NamedTuple):
    weight: int
    numeric_residual: float
    symbolic_ok: Optional[bool]
    path: str  # "closed-forms" | "relation-span" | "numeric-only"


def _sum_via_rowspace(w: int) -> Optional[SymExpr]:
    """Express sum_i sigma(w-i,i) from the relation row space, if possible.

    Solves A^T y = (1,...,1) exactly over the rationals (A = relation matrix,
    known closed forms included as identity rows); when consistent, the sum of
    all sigma's of weight w equals sum_i y_i * rhs_i symbolically.
    """
    unknowns = [SumId.sigma(w - i, i) for i in range(1, w - 1)]
    rels = [r for r in relations_for_weight(w) if not r.is_identity]
    for u in unknowns:
        val = tabulated_sigma_values(u)
        if val is not None:
            rels.append(Relation({u: Fraction(1)}, val))
    n = len(rels)
    # augmented system over y: one row per unknown
    rows: list[tuple[dict[int, Fraction], Fraction]] = [
        ({i: rels[i].coeffs[u] for i in range(n) if u in rels[i].coeffs}, Fraction(1))
        for u in unknowns
    ]
    pivots: list[tuple[int, int]] = []  # (column, row index)
    for ri in range(len(rows)):
        c, t = rows[ri]
        piv = min(c) if c else None
        if piv is None:
            if t:
                return None  # 0 = 1: the all-ones vector is not in the row space
            continue
        inv = 1 / c[piv]
        c = {j: v * inv for j, v in c.items()}
        t = t * inv
        rows[ri] = (c, t)
        for rk in range(len(rows)):
            if rk == ri:
                continue
            ck, tk = rows[rk]
            f = ck.get(piv)
            if f:
                for j, v in c.items():
                    nv = ck.get(j, Fraction(0)) - f * v
                    if nv:
                        ck[j] = nv
                    else:
                        ck.pop(j, None)
                rows[rk] = (ck, tk - f * t)
        pivots.append((piv, ri))
    y = [Fraction(0)] * n  # free combination weights default to 0
    for piv, ri in pivots:
        c, t = rows[ri]
        y[piv] = t - sum(v * y[j] for j, v in c.items() if j != piv)
    # exact verification of the combination, then assemble the symbolic sum
    check: dict[SumId, Fraction] = {}
    total_rhs = SymExpr.zero()
    for yi, rel in zip(y, rels):
        if not yi:
            continue
        for u, cval in rel.coeffs.items():
            check[u] = check.get(u, Fraction(0)) + yi * cval
        total_rhs = total_rhs + rel.rhs.scaled(yi)
    if any(check.get(u, Fraction(0)) != 1 for u in unknowns) or len(check) > len(unknowns):
        return None
    return total_rhs


def verify_sum_theorem(
    w: int,
    ctx: PrecisionContext = DEFAULT_CONTEXT,
    cfg: Optional[OracleConfig] = None,
) -> SumTheoremReport:
    """Check sum_{i=1..w-2} sigma(w-i,i) = (w-1) lambda(w), numerically always,
    symbolically when the closed forms or the relation row space determine the sum."""
    if w < 3:
        raise ValueError(f"weight must be >= 3, got {w}")
    cfg = cfg or OracleConfig()
    target = closedform.sigma_weight_sum(w)
    acc = BigReal.zero(ctx)
    for i in range(1, w - 1):
        acc = acc + oracle_eval(SumId.sigma(w - i, i), cfg, ctx).value
    numeric_residual = abs(float(acc - eval_sym(target, ctx)))

    values = [tabulated_sigma_values(SumId.sigma(w - i, i)) for i in range(1, w - 1)]
    if all(v is not None for v in values):
        total = SymExpr.zero()
        for v in values:
            total = total + v
        return SumTheoremReport(w, numeric_residual, total == target, "closed-forms")
    span_sum = _sum_via_rowspace(w)
    if span_sum is not None:
        return SumTheoremReport(w, numeric_residual, span_sum == target, "relation-span")
    return SumTheoremReport(w, numeric_residual, None, "numeric-only")
