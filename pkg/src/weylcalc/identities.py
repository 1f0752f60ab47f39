"""Closed-form operator identities, each checkable against the engine.

Every constructor returns a :class:`NormalForm`; :func:`compare` packages an
lhs/rhs pair into an :class:`IdentityReport`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .algebra import (
    ZERO,
    NormalForm,
    nf_anticommutator,
    nf_commutator,
    nf_monomial,
    nf_mul,
    nf_substitute_c,
    x_pow,
    y_pow,
)
from .exact import GaussianRational, I, PolyCoeff, binomial
from .ordering import weyl_T
from .special import bernoulli, euler_zero_explicit

__all__ = [
    "IdentityReport",
    "VSystem",
    "APPENDIX_V",
    "compare",
    "engine_commutator",
    "commutator_xy_form",
    "commutator_yx_form",
    "poly_commutator",
    "commutator_anti_euler",
    "commutator_anti_bernoulli",
    "v_system_solve",
    "at_i",
    "weyl_T_at_i",
    "bd_engine_product",
    "bd_engine_commutator",
    "bd_engine_anticommutator",
    "bd_product",
    "bd_product_terms",
    "bd_parity_parts",
    "bd_commutator",
    "bd_anticommutator",
    "bd_shift",
    "bd_shift_coefficient",
    "moment_bracket",
    "moment_bracket_anti",
    "moment_bracket_engine",
]

C = PolyCoeff.symbol("c")

# v_1..v_9 as tabulated in the appendix of the source derivation
APPENDIX_V = (
    Fraction(1, 2), Fraction(0), Fraction(-1, 4), Fraction(0), Fraction(1, 2),
    Fraction(0), Fraction(-17, 8), Fraction(0), Fraction(31, 2),
)


@dataclass(frozen=True)
class IdentityReport:
    identity_name: str
    parameter_tuple: tuple
    lhs: object
    rhs: object
    equal: bool = field(init=False)
    discrepancy: object = field(init=False)

    def __post_init__(self):
        diff = self.lhs - self.rhs
        object.__setattr__(self, "discrepancy", diff)
        object.__setattr__(self, "equal", diff.is_zero())


def compare(name: str, params, lhs, rhs) -> IdentityReport:
    return IdentityReport(name, tuple(params), lhs, rhs)


def engine_commutator(n: int, m: int) -> NormalForm:
    return nf_commutator(x_pow(n), y_pow(m))


def _anti_xy(a: int, b: int) -> NormalForm:
    return nf_anticommutator(x_pow(a), y_pow(b))


def _c_weight(k: int, n: int, m: int) -> PolyCoeff:
    return PolyCoeff.symbol("c", k) * (factorial(k) * binomial(n, k) * binomial(m, k))


def commutator_xy_form(n: int, m: int) -> NormalForm:
    """-sum_k (-c)^k k! C(n,k) C(m,k) X^(n-k) Y^(m-k)."""
    out = ZERO
    for k in range(1, min(n, m) + 1):
        w = _c_weight(k, n, m) * (-1) ** (k + 1)
        out = out + nf_mul(x_pow(n - k), y_pow(m - k)) * w
    return out


def commutator_yx_form(n: int, m: int) -> NormalForm:
    """sum_k c^k k! C(n,k) C(m,k) Y^(m-k) X^(n-k)."""
    out = ZERO
    for k in range(1, min(n, m) + 1):
        out = out + nf_monomial(m - k, n - k, _c_weight(k, n, m))
    return out


def poly_commutator(f_coeffs, g_coeffs) -> NormalForm:
    """[f(X), g(Y)] for polynomials given by coefficient lists (index = power)."""
    out = ZERO
    for i, fi in enumerate(f_coeffs):
        fi = PolyCoeff.coerce(fi)
        if not fi or i == 0:
            continue
        for j, gj in enumerate(g_coeffs):
            gj = PolyCoeff.coerce(gj)
            if not gj or j == 0:
                continue
            out = out + commutator_yx_form(i, j) * (fi * gj)
    return out


def commutator_anti_euler(n: int, m: int) -> NormalForm:
    """-sum_k c^k k! C(n,k) C(m,k) E_k(0) {X^(n-k), Y^(m-k)}."""
    out = ZERO
    for k in range(1, min(n, m) + 1):
        e = euler_zero_explicit(k)
        if e:
            out = out + _anti_xy(n - k, m - k) * (_c_weight(k, n, m) * -e)
    return out


def commutator_anti_bernoulli(n: int, m: int) -> NormalForm:
    """2 sum_k c^k k! C(n,k) C(m,k) (2^(k+1)-1)/(k+1) B_(k+1) {X^(n-k), Y^(m-k)}."""
    out = ZERO
    for k in range(1, min(n, m) + 1):
        b = bernoulli(k + 1)
        if b:
            w = 2 * Fraction(2 ** (k + 1) - 1, k + 1) * b
            out = out + _anti_xy(n - k, m - k) * (_c_weight(k, n, m) * w)
    return out


@dataclass(frozen=True)
class VSystem:
    """Lower-triangular system v_k + sum_{l<=k} C(k,l) v_l = 1, k = 1..size."""

    size: int
    matrix: tuple[tuple[Fraction, ...], ...]
    rhs: tuple[Fraction, ...]
    solution: tuple[Fraction, ...]

    def residuals(self) -> tuple[Fraction, ...]:
        return tuple(
            sum((a * v for a, v in zip(row, self.solution)), Fraction(0)) - b
            for row, b in zip(self.matrix, self.rhs)
        )

    def diagonal(self) -> tuple[Fraction, ...]:
        return tuple(self.matrix[k][k] for k in range(self.size))


def v_system_solve(size: int) -> VSystem:
    if size < 1:
        raise ValueError("size must be >= 1")
    matrix = []
    for k in range(1, size + 1):
        row = [Fraction(binomial(k, l)) for l in range(1, size + 1)]
        row[k - 1] += 1
        matrix.append(tuple(row))
    rhs = tuple(Fraction(1) for _ in range(size))
    sol: list[Fraction] = []
    for k in range(size):
        acc = rhs[k] - sum((matrix[k][l] * sol[l] for l in range(k)), Fraction(0))
        # nonzero diagonal (always 2) means the forward solve is unique
        sol.append(acc / matrix[k][k])
    return VSystem(size, tuple(matrix), rhs, tuple(sol))


# -- Bender-Dunne (c = i) -------------------------------------------------------

_HALF_I = I * Fraction(1, 2)


def at_i(A: NormalForm) -> NormalForm:
    """Specialize c -> i.  Products must be formed before specializing, since
    the engine's product always reintroduces the symbol c."""
    return nf_substitute_c(A, I)


def weyl_T_at_i(m: int, n: int) -> NormalForm:
    return at_i(weyl_T(m, n))


def bd_engine_product(m: int, n: int, r: int, s: int) -> NormalForm:
    return at_i(nf_mul(weyl_T(m, n), weyl_T(r, s)))


def bd_engine_commutator(m: int, n: int, r: int, s: int) -> NormalForm:
    return at_i(nf_commutator(weyl_T(m, n), weyl_T(r, s)))


def bd_engine_anticommutator(m: int, n: int, r: int, s: int) -> NormalForm:
    return at_i(nf_anticommutator(weyl_T(m, n), weyl_T(r, s)))


def bd_product_terms(m: int, n: int, r: int, s: int) -> list[tuple[int, GaussianRational, int, int]]:
    """Scalar structure constants of T_{m,n} T_{r,s}: [(j, weight, p, q)] meaning weight * T_{p,q}."""
    out = []
    for j in range(min(m + r, n + s) + 1):
        inner = 0
        for k in range(j + 1):
            inner += (
                (-1) ** (j - k)
                * factorial(k) ** 2
                * factorial(j - k) ** 2
                * binomial(j, k)
                * binomial(m, j - k)
                * binomial(n, k)
                * binomial(r, k)
                * binomial(s, j - k)
            )
        if inner:
            out.append((j, _HALF_I**j * Fraction(inner, factorial(j)), m + r - j, n + s - j))
    return out


def bd_product(m: int, n: int, r: int, s: int) -> NormalForm:
    out = ZERO
    for _, w, p, q in bd_product_terms(m, n, r, s):
        out = out + weyl_T_at_i(p, q) * w
    return out


def bd_parity_parts(m: int, n: int, r: int, s: int) -> tuple[NormalForm, NormalForm]:
    """Twice the odd-j and twice the even-j parts of the product expansion."""
    odd, even = ZERO, ZERO
    for j, w, p, q in bd_product_terms(m, n, r, s):
        t = weyl_T_at_i(p, q) * (2 * w)
        if j % 2:
            odd = odd + t
        else:
            even = even + t
    return odd, even


def _bd_literal(m: int, n: int, r: int, s: int, parity: int) -> NormalForm:
    out = ZERO
    J = parity
    while J <= m + r + n + s:
        inner = 0
        for k in range(J + 1):
            inner += (
                (-1) ** k
                * factorial(k) ** 2
                * factorial(J - k) ** 2
                * binomial(J, k)
                * binomial(m, k)
                * binomial(n, J - k)
                * binomial(r, J - k)
                * binomial(s, k)
            )
        if inner:
            w = _HALF_I**J * Fraction(2 * inner, factorial(J))
            out = out + weyl_T_at_i(m + r - J, n + s - J) * w
        J += 2
    return out


def bd_commutator(m: int, n: int, r: int, s: int) -> NormalForm:
    """The printed odd-j sum for [T_{m,n}, T_{r,s}], evaluated literally at c = i."""
    return _bd_literal(m, n, r, s, 1)


def bd_anticommutator(m: int, n: int, r: int, s: int) -> NormalForm:
    """The printed even-j sum for {T_{m,n}, T_{r,s}}, evaluated literally at c = i."""
    return _bd_literal(m, n, r, s, 0)


def bd_shift_coefficient(m: int, k: int) -> Fraction:
    """(2m+k)! m! / (2 (2m)! (m+k)!)."""
    return Fraction(factorial(2 * m + k) * factorial(m), 2 * factorial(2 * m) * factorial(m + k))


def bd_shift(m: int, k: int, side: str = "x") -> IdentityReport:
    """T_{m,m+k} against coefficient * {T_{m,m}, X^k} (or the Y-side analogue), at c = i."""
    coeff = bd_shift_coefficient(m, k)
    base = weyl_T(m, m)
    if side == "x":
        lhs = weyl_T_at_i(m, m + k)
        rhs = at_i(nf_anticommutator(base, x_pow(k))) * coeff
    elif side == "y":
        lhs = weyl_T_at_i(m + k, m)
        rhs = at_i(nf_anticommutator(base, y_pow(k))) * coeff
    else:
        raise ValueError("side must be 'x' or 'y'")
    return compare("bd-shift", (m, k, 0 if side == "x" else 1), lhs, rhs)


# -- moment bracket ---------------------------------------------------------------

def moment_bracket_engine(n: int, k: int, l: int) -> NormalForm:
    """[X^l, {X^n, Y^k}] computed directly."""
    return nf_commutator(x_pow(l), _anti_xy(n, k))


def moment_bracket(n: int, k: int, l: int) -> NormalForm:
    """[X^(n+l), Y^k] - X^l [X^n, Y^k] + X^n [X^l, Y^k]  (the i/hbar prefactor removed)."""
    return (
        engine_commutator(n + l, k)
        - nf_mul(x_pow(l), engine_commutator(n, k))
        + nf_mul(x_pow(n), engine_commutator(l, k))
    )


def _half_bernoulli_sum(a: int, b: int) -> NormalForm:
    # sum_j c^j j! C(a,j) C(b,j) (2^(j+1)-1)/(j+1) B_(j+1) {X^(a-j), Y^(b-j)}
    out = ZERO
    for j in range(1, min(a, b) + 1):
        bj = bernoulli(j + 1)
        if bj:
            w = Fraction(2 ** (j + 1) - 1, j + 1) * bj
            out = out + _anti_xy(a - j, b - j) * (_c_weight(j, a, b) * w)
    return out


def moment_bracket_anti(n: int, k: int, l: int) -> NormalForm:
    """Anti-commutator-only form: 2 (S(n+l,k) - X^l S(n,k) + X^n S(l,k)).

    The printed form carries 2i/hbar in front of the three sums; dividing out
    i/hbar leaves the factor 2 kept here, so the result is directly comparable
    with :func:`moment_bracket`.
    """
    inner = (
        _half_bernoulli_sum(n + l, k)
        - nf_mul(x_pow(l), _half_bernoulli_sum(n, k))
        + nf_mul(x_pow(n), _half_bernoulli_sum(l, k))
    )
    return inner * 2
