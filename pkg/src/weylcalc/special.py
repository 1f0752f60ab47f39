"""Bernoulli numbers and Euler polynomials, computed by independent routes.

Convention: B_1 = -1/2.  Memo tables are built by ``functools.lru_cache``
and hold immutable tuples, so concurrent readers never see partial state.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .exact import binomial

__all__ = [
    "EulerPolynomial",
    "bernoulli",
    "bernoulli_table",
    "bernoulli_determinant",
    "bernoulli_matrix",
    "euler_polynomial",
    "euler_zero_explicit",
    "euler_zero_bernoulli",
    "euler_zero",
    "bareiss_determinant",
    "cofactor_determinant",
]


@dataclass(frozen=True)
class EulerPolynomial:
    """E_degree(x); ``coeffs[j]`` is the coefficient of x**j."""

    degree: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.degree + 1:
            raise ValueError("coefficient list length must be degree + 1")
        if self.coeffs[-1] != 1:
            raise ValueError("Euler polynomials are monic")

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    @property
    def at_zero(self) -> Fraction:
        return self.coeffs[0]


@lru_cache(maxsize=None)
def bernoulli_table(n: int) -> tuple[Fraction, ...]:
    """(B_0, ..., B_n) from sum_{k=0}^{j} C(j+1, k) B_k = 0."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return (Fraction(1),)
    prev = bernoulli_table(n - 1)
    acc = sum((binomial(n + 1, k) * b for k, b in enumerate(prev)), Fraction(0))
    return prev + (-acc / (n + 1),)


def bernoulli(n: int) -> Fraction:
    if n < 0:
        raise ValueError("n must be >= 0")
    # extend the memo iteratively so large n never recurses deeply
    for j in range(0, n + 1, 200):
        bernoulli_table(j)
    return bernoulli_table(n)[n]


def bernoulli_matrix(n: int) -> list[list[Fraction]]:
    """The (n+1)x(n+1) Laplace matrix: 1/(i-j+1)! below the diagonal band,
    a final column holding a single 1 in the top row."""
    size = n + 1
    rows = []
    for i in range(size):
        row = []
        for j in range(n):
            row.append(Fraction(1, factorial(i - j + 1)) if i >= j else Fraction(0))
        row.append(Fraction(1 if i == 0 else 0))
        rows.append(row)
    return rows


def bareiss_determinant(matrix: list[list[int]]) -> int:
    """Fraction-free (Bareiss) determinant of an integer matrix."""
    m = [list(r) for r in matrix]
    n = len(m)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def cofactor_determinant(matrix) -> Fraction:
    """Laplace expansion along the first row; exponential, for small oracles only."""
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(matrix[0][0])
    total = Fraction(0)
    for j, a in enumerate(matrix[0]):
        if a == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
        total += (-1) ** j * a * cofactor_determinant(minor)
    return total


@lru_cache(maxsize=None)
def bernoulli_determinant(n: int) -> Fraction:
    """B_n as n! times the Laplace determinant.

    The bare determinant equals B_n / n!; the n! restores the number itself.
    Row i is scaled by (i+1)! to clear denominators before Bareiss elimination.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    rows = bernoulli_matrix(n)
    scale = 1
    int_rows = []
    for i, row in enumerate(rows):
        f = factorial(i + 1)
        scale *= f
        int_rows.append([int(x * f) for x in row])
    det = Fraction(bareiss_determinant(int_rows), scale)
    return det * factorial(n)


@lru_cache(maxsize=None)
def _euler_coeffs(degree: int) -> tuple[Fraction, ...]:
    # 2 E_l(x) + sum_{j<l} C(l,j) E_j(x) = 2 x^l, from E_l(x+1) + E_l(x) = 2x^l
    # combined with the translation identity at h = 1.
    if degree == 0:
        return (Fraction(1),)
    acc = [Fraction(0)] * (degree + 1)
    acc[degree] = Fraction(1)
    for j in range(degree):
        cj = Fraction(binomial(degree, j), 2)
        for p, a in enumerate(_euler_coeffs(j)):
            acc[p] -= cj * a
    return tuple(acc)


def euler_polynomial(degree: int) -> EulerPolynomial:
    if degree < 0:
        raise ValueError("degree must be >= 0")
    for j in range(0, degree + 1, 200):
        _euler_coeffs(j)
    return EulerPolynomial(degree, _euler_coeffs(degree))


def euler_zero_explicit(l: int) -> Fraction:
    """E_l(0) = 2^-l sum_{j=1}^{l} (-1)^(j+l+1) j^l sum_{p=0}^{l-j} C(l+1, p)."""
    if l < 1:
        raise ValueError("l must be >= 1")
    total = 0
    for j in range(1, l + 1):
        inner = sum(binomial(l + 1, p) for p in range(l - j + 1))
        total += (-1) ** (j + l + 1) * j**l * inner
    return Fraction(total, 2**l)


def euler_zero_bernoulli(k: int) -> Fraction:
    """E_k(0) = -2 (2^(k+1) - 1) B_(k+1) / (k+1)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return -2 * (2 ** (k + 1) - 1) * bernoulli(k + 1) / (k + 1)


def euler_zero(k: int) -> Fraction:
    """E_k(0) for k >= 0 (polynomial-recurrence route); the default used elsewhere."""
    return euler_polynomial(k).at_zero
