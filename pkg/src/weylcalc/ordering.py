"""Operator orderings: Weyl (Bender-Dunne T_{m,n}), Born-Jordan, s-ordering.

Boson mapping used throughout the s-ordered part: a^dagger -> Y, a -> X,
c -> 1, so that [a, a^dagger] = 1 matches X*Y - Y*X = c.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, factorial
from typing import Mapping

from .algebra import (
    ONE,
    ZERO,
    NormalForm,
    nf_monomial,
    nf_mul,
    nf_substitute_c,
    word_to_nf,
    x_pow,
    y_pow,
)
from .exact import PolyCoeff

__all__ = [
    "SOrderedMonomial",
    "BivarOperatorSeries",
    "weyl_T",
    "weyl_symmetrization_oracle",
    "born_jordan",
    "born_jordan_x_form",
    "s_ordered_ground",
    "s_convert",
    "s_convert_compose",
    "displacement_series",
    "displacement_series_oracle",
    "S",
    "T",
]

S = PolyCoeff.symbol("s")
T = PolyCoeff.symbol("t")

SYMMETRIZATION_LIMIT = 12
DISPLACEMENT_LIMIT = 8


@lru_cache(maxsize=None)
def weyl_T(m: int, n: int) -> NormalForm:
    """T_{m,n} = 2^-n sum_k C(n,k) X^k Y^m X^(n-k), with c symbolic."""
    if m < 0 or n < 0:
        raise ValueError("indices must be >= 0")
    out = ZERO
    ym = y_pow(m)
    for k in range(n + 1):
        out = out + nf_mul(nf_mul(x_pow(k), ym), x_pow(n - k)) * comb(n, k)
    return out * Fraction(1, 2**n)


def weyl_symmetrization_oracle(m: int, n: int) -> NormalForm:
    """Average of all C(m+n, m) distinct words with m Y's and n X's."""
    if m + n > SYMMETRIZATION_LIMIT:
        raise ValueError(f"m + n = {m + n} exceeds {SYMMETRIZATION_LIMIT}")
    total = ZERO
    count = 0
    for ys in combinations(range(m + n), m):
        slots = set(ys)
        word = "".join("Y" if i in slots else "X" for i in range(m + n))
        total = total + word_to_nf(word)
        count += 1
    return total * Fraction(1, count)


def born_jordan(m: int, n: int) -> NormalForm:
    """(1/(m+1)) sum_k Y^(m-k) X^n Y^k  (Y plays momentum, X position)."""
    out = ZERO
    for k in range(m + 1):
        out = out + nf_mul(nf_mul(y_pow(m - k), x_pow(n)), y_pow(k))
    return out * Fraction(1, m + 1)


def born_jordan_x_form(m: int, n: int) -> NormalForm:
    """(1/(n+1)) sum_k X^(n-k) Y^m X^k, the same ordering written from the X side."""
    out = ZERO
    for k in range(n + 1):
        out = out + nf_mul(nf_mul(x_pow(n - k), y_pow(m)), x_pow(k))
    return out * Fraction(1, n + 1)


class SOrderedMonomial:
    """The s-ordered product of (a^dagger)^dag_exp a^ann_exp for a given order parameter."""

    __slots__ = ("dag_exp", "ann_exp", "order_param")

    def __init__(self, dag_exp: int, ann_exp: int, order_param=S):
        if dag_exp < 0 or ann_exp < 0:
            raise ValueError("exponents must be >= 0")
        order_param = PolyCoeff.coerce(order_param)
        if order_param.contains("c"):
            raise ValueError("order parameter must be a polynomial in s, t only")
        self.dag_exp = dag_exp
        self.ann_exp = ann_exp
        self.order_param = order_param

    def __repr__(self) -> str:
        return f"SOrderedMonomial({self.dag_exp}, {self.ann_exp}, {self.order_param})"

    def __eq__(self, other):
        if not isinstance(other, SOrderedMonomial):
            return NotImplemented
        return (self.dag_exp, self.ann_exp, self.order_param) == (other.dag_exp, other.ann_exp, other.order_param)

    def __hash__(self):
        return hash((self.dag_exp, self.ann_exp, self.order_param))

    def to_normal(self) -> NormalForm:
        return s_ordered_ground(self.dag_exp, self.ann_exp, self.order_param)


def s_convert(n: int, m: int, source, target) -> list[tuple[PolyCoeff, int, int]]:
    """Rewrite the ``source``-ordered (a^dag)^n a^m in ``target``-ordered monomials.

    Returns ``[(coeff, dag_exp, ann_exp), ...]`` with coefficients
    k! C(n,k) C(m,k) ((target - source)/2)^k.
    """
    source, target = PolyCoeff.coerce(source), PolyCoeff.coerce(target)
    half_gap = (target - source) * Fraction(1, 2)
    out = []
    for k in range(min(n, m) + 1):
        coeff = half_gap**k * (factorial(k) * comb(n, k) * comb(m, k))
        if coeff:
            out.append((coeff, n - k, m - k))
    return out


def s_convert_compose(n: int, m: int, *params) -> list[tuple[PolyCoeff, int, int]]:
    """Chain conversions params[0] -> params[1] -> ... and collect like monomials."""
    current: dict[tuple[int, int], PolyCoeff] = {(n, m): PolyCoeff.const(1)}
    for src, dst in zip(params, params[1:]):
        nxt: dict[tuple[int, int], PolyCoeff] = {}
        for (a, b), w in current.items():
            for coeff, a2, b2 in s_convert(a, b, src, dst):
                key = (a2, b2)
                nxt[key] = nxt.get(key, PolyCoeff()) + w * coeff
        current = {k: v for k, v in nxt.items() if v}
    return sorted(((v, a, b) for (a, b), v in current.items()), key=lambda r: (-r[1], -r[2]))


def s_ordered_ground(n: int, m: int, s_value=S) -> NormalForm:
    """Normal-order expansion of the s-ordered (a^dag)^n a^m, with c = 1."""
    out = ZERO
    for coeff, a, b in s_convert(n, m, s_value, 1):
        out = out + nf_monomial(a, b, coeff)
    return out


class BivarOperatorSeries:
    """Truncated series in commuting alpha, alpha-bar with NormalForm coefficients."""

    __slots__ = ("cutoff", "_terms")

    def __init__(self, cutoff: int, terms: Mapping[tuple[int, int], NormalForm] | None = None):
        clean = {}
        for (i, j), v in (terms or {}).items():
            if i < 0 or j < 0:
                raise ValueError("exponents must be >= 0")
            if i + j > cutoff:
                continue
            v = NormalForm.coerce(v)
            if v:
                clean[(i, j)] = v
        self.cutoff = cutoff
        self._terms = clean

    def coeff(self, i: int, j: int) -> NormalForm:
        return self._terms.get((i, j), ZERO)

    def items(self):
        return self._terms.items()

    def __mul__(self, other: BivarOperatorSeries) -> BivarOperatorSeries:
        if self.cutoff != other.cutoff:
            raise ValueError("cutoff mismatch")
        out: dict[tuple[int, int], NormalForm] = {}
        for (i, j), a in self._terms.items():
            for (k, l), b in other._terms.items():
                if i + j + k + l > self.cutoff:
                    continue
                key = (i + k, j + l)
                out[key] = out.get(key, ZERO) + nf_mul(a, b)
        return BivarOperatorSeries(self.cutoff, out)

    @classmethod
    def exp_monomial(cls, cutoff: int, alpha_exp: int, bar_exp: int, op: NormalForm) -> BivarOperatorSeries:
        """exp(alpha^alpha_exp * alphabar^bar_exp * op), truncated."""
        step = alpha_exp + bar_exp
        if step == 0:
            raise ValueError("exponent must carry a series variable")
        terms = {}
        power = ONE
        k = 0
        while k * step <= cutoff:
            terms[(k * alpha_exp, k * bar_exp)] = power * Fraction(1, factorial(k))
            power = nf_mul(power, op)
            k += 1
        return cls(cutoff, terms)


def displacement_series(cutoff: int, s_value=S) -> BivarOperatorSeries:
    """D(alpha, s) = e^(alpha Y) e^(-alphabar X) e^((s-1) alpha alphabar / 2), c = 1."""
    s_value = PolyCoeff.coerce(s_value)
    e_create = BivarOperatorSeries.exp_monomial(cutoff, 1, 0, nf_monomial(1, 0))
    e_annih = BivarOperatorSeries.exp_monomial(cutoff, 0, 1, nf_monomial(0, 1, -1))
    e_scalar = BivarOperatorSeries.exp_monomial(cutoff, 1, 1, NormalForm.scalar((s_value - 1) * Fraction(1, 2)))
    return e_create * e_annih * e_scalar


def displacement_series_oracle(n: int, m: int, s_value=S) -> NormalForm:
    """n! m! [alpha^n (-alphabar)^m] D(alpha, s): the s-ordered product by derivatives."""
    if n < 0 or m < 0:
        raise ValueError("exponents must be >= 0")
    if n + m > DISPLACEMENT_LIMIT:
        raise ValueError(f"n + m = {n + m} exceeds {DISPLACEMENT_LIMIT}")
    series = displacement_series(max(n + m, 1), s_value)
    coeff = series.coeff(n, m) * ((-1) ** m * factorial(n) * factorial(m))
    return nf_substitute_c(coeff, 1)


def weyl_T_boson(m: int, n: int) -> NormalForm:
    return nf_substitute_c(weyl_T(m, n), 1)
