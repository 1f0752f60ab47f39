"""Truncated free associative algebra on X, Y.

No commutation relation is assumed here, so these series are the brute-force
reference for the Lie series, the nested anti-commutator lemma and the
linear-in-Y part of log(e^X e^Y).
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Mapping

from .exact import GaussianRational
from .special import bernoulli

__all__ = [
    "FreeSeries",
    "MAX_CUTOFF",
    "fs_mul",
    "fs_exp",
    "fs_log",
    "ad_power",
    "anti_power",
    "lie_series_rhs",
    "mendas_rhs",
    "bch_z1_commutator_form",
    "bch_z1_anticommutator_form",
    "extract_linear_in_y",
    "bch_linear_oracle",
    "bch_anti_comparison",
]

MAX_CUTOFF = 12


class FreeSeries:
    """Sum of words over {X, Y} (stored as strings) truncated at ``cutoff`` letters."""

    __slots__ = ("cutoff", "_terms")

    def __init__(self, cutoff: int, terms: Mapping[str, object] | None = None):
        if not isinstance(cutoff, int) or cutoff < 1:
            raise ValueError("cutoff must be an integer >= 1")
        if cutoff > MAX_CUTOFF:
            raise ValueError(f"cutoff {cutoff} exceeds {MAX_CUTOFF}; word count grows as 2^cutoff")
        clean: dict[str, GaussianRational] = {}
        for w, v in (terms or {}).items():
            if w.strip("XY"):
                raise ValueError(f"bad word {w!r}")
            if len(w) > cutoff:
                continue
            v = GaussianRational.coerce(v)
            if v:
                clean[w] = v
        object.__setattr__(self, "cutoff", cutoff)
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("FreeSeries is immutable")

    @classmethod
    def gen(cls, name: str, cutoff: int) -> FreeSeries:
        return cls(cutoff, {name: 1})

    @classmethod
    def scalar(cls, value, cutoff: int) -> FreeSeries:
        return cls(cutoff, {"": value})

    def items(self):
        return self._terms.items()

    @property
    def terms(self) -> dict[str, GaussianRational]:
        return dict(self._terms)

    def coeff(self, word: str) -> GaussianRational:
        return self._terms.get(word, GaussianRational(0))

    def constant(self) -> GaussianRational:
        return self.coeff("")

    def is_zero(self) -> bool:
        return not self._terms

    def check_canonical(self) -> None:
        for w, v in self._terms.items():
            assert len(w) <= self.cutoff and not w.strip("XY")
            assert v

    def __eq__(self, other) -> bool:
        if isinstance(other, FreeSeries):
            return self.cutoff == other.cutoff and self._terms == other._terms
        return NotImplemented

    __hash__ = None

    def __repr__(self) -> str:
        return f"FreeSeries(cutoff={self.cutoff}, {self})"

    def __str__(self) -> str:
        from .expr import _join_signed, _scalar_text

        parts = []
        for w, v in sorted(self._terms.items(), key=lambda kv: (len(kv[0]), kv[0])):
            sign, mag = _scalar_text(v)
            body = "*".join(x for x in (mag, w) if x) or "1"
            parts.append((sign, body))
        return _join_signed(parts)

    def _check_same(self, other: FreeSeries) -> None:
        if self.cutoff != other.cutoff:
            raise ValueError(f"cutoff mismatch: {self.cutoff} vs {other.cutoff}")

    def __neg__(self) -> FreeSeries:
        return FreeSeries(self.cutoff, {w: -v for w, v in self._terms.items()})

    def __add__(self, other) -> FreeSeries:
        if not isinstance(other, FreeSeries):
            return self + FreeSeries.scalar(other, self.cutoff)
        self._check_same(other)
        out = dict(self._terms)
        for w, v in other._terms.items():
            out[w] = out[w] + v if w in out else v
        return FreeSeries(self.cutoff, out)

    __radd__ = __add__

    def __sub__(self, other) -> FreeSeries:
        return self + (-other)

    def __rsub__(self, other) -> FreeSeries:
        return (-self) + other

    def __mul__(self, other) -> FreeSeries:
        if isinstance(other, FreeSeries):
            return fs_mul(self, other)
        other = GaussianRational.coerce(other)
        return FreeSeries(self.cutoff, {w: v * other for w, v in self._terms.items()})

    def __rmul__(self, other) -> FreeSeries:
        return self * other

    def scaled(self, value) -> FreeSeries:
        return self * value

    def homogeneous(self, degree: int) -> FreeSeries:
        return FreeSeries(self.cutoff, {w: v for w, v in self._terms.items() if len(w) == degree})

    def truncate(self, cutoff: int) -> FreeSeries:
        return FreeSeries(cutoff, self._terms)


def fs_mul(A: FreeSeries, B: FreeSeries) -> FreeSeries:
    A._check_same(B)
    cut = A.cutoff
    out: dict[str, GaussianRational] = {}
    for u, a in A._terms.items():
        room = cut - len(u)
        for v, b in B._terms.items():
            if len(v) > room:
                continue
            w = u + v
            p = a * b
            out[w] = out[w] + p if w in out else p
    return FreeSeries(cut, out)


def fs_exp(A: FreeSeries) -> FreeSeries:
    """sum_k A^k / k!, exact up to the cutoff; A must have zero constant term."""
    if A.constant():
        raise ValueError("fs_exp needs a series with zero constant term")
    out = FreeSeries.scalar(1, A.cutoff)
    power = FreeSeries.scalar(1, A.cutoff)
    for k in range(1, A.cutoff + 1):
        power = fs_mul(power, A)
        if power.is_zero():
            break
        out = out + power * Fraction(1, factorial(k))
    return out


def fs_log(A: FreeSeries) -> FreeSeries:
    """sum_k (-1)^(k+1) (A-1)^k / k; A must have constant term 1."""
    if A.constant() != 1:
        raise ValueError("fs_log needs a series with constant term 1")
    D = A - 1
    out = FreeSeries(A.cutoff)
    power = FreeSeries.scalar(1, A.cutoff)
    for k in range(1, A.cutoff + 1):
        power = fs_mul(power, D)
        if power.is_zero():
            break
        out = out + power * Fraction((-1) ** (k + 1), k)
    return out


def ad_power(n: int, cutoff: int) -> FreeSeries:
    """ad_X^n (Y) = [X, [X, ... [X, Y]]] with n brackets."""
    x = FreeSeries.gen("X", cutoff)
    out = FreeSeries.gen("Y", cutoff)
    for _ in range(n):
        out = fs_mul(x, out) - fs_mul(out, x)
    return out


def anti_power(n: int, cutoff: int) -> FreeSeries:
    """{X, {X, ... {X, Y}}} with n braces."""
    x = FreeSeries.gen("X", cutoff)
    out = FreeSeries.gen("Y", cutoff)
    for _ in range(n):
        out = fs_mul(x, out) + fs_mul(out, x)
    return out


def _nested_sum(depth: int, step, weight) -> FreeSeries:
    # one bracket-builder pass; depth D needs words of length D + 1
    cutoff = depth + 1
    x = FreeSeries.gen("X", cutoff)
    term = FreeSeries.gen("Y", cutoff)
    out = term * weight(0)
    for n in range(1, depth + 1):
        term = step(x, term)
        w = weight(n)
        if w:
            out = out + term * w
    return out


def lie_series_rhs(depth: int) -> FreeSeries:
    """Y + [X,Y] + [X,[X,Y]]/2! + ... through ``depth`` nested brackets (cutoff depth+1)."""
    if depth < 1:
        raise ValueError("depth must be >= 1")
    return _nested_sum(depth, lambda x, t: fs_mul(x, t) - fs_mul(t, x), lambda n: Fraction(1, factorial(n)))


def mendas_rhs(depth: int) -> FreeSeries:
    """Y + {X,Y} + {X,{X,Y}}/2! + ... through ``depth`` nested braces (cutoff depth+1)."""
    if depth < 1:
        raise ValueError("depth must be >= 1")
    return _nested_sum(depth, lambda x, t: fs_mul(x, t) + fs_mul(t, x), lambda n: Fraction(1, factorial(n)))


def bch_z1_commutator_form(depth: int) -> FreeSeries:
    """sum_{n<=depth} (-1)^n B_n / n! ad_X^n(Y), truncated at degree depth+1."""
    if depth < 1:
        raise ValueError("depth must be >= 1")
    return _nested_sum(
        depth,
        lambda x, t: fs_mul(x, t) - fs_mul(t, x),
        lambda n: (-1) ** n * bernoulli(n) / factorial(n),
    )


def bch_z1_anticommutator_form(depth: int) -> FreeSeries:
    """Literal sum_{n<=depth} (-1)^n B_n / n! (X^n Y + Y X^n).

    Kept for comparison only; see :func:`bch_anti_comparison`.
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    cutoff = depth + 1
    out = FreeSeries(cutoff)
    for n in range(depth + 1):
        w = (-1) ** n * bernoulli(n) / factorial(n)
        if w:
            out = out + FreeSeries(cutoff, {"X" * n + "Y": w}) + FreeSeries(cutoff, {"Y" + "X" * n: w})
    return out


def extract_linear_in_y(A: FreeSeries) -> FreeSeries:
    return FreeSeries(A.cutoff, {w: v for w, v in A.items() if w.count("Y") == 1})


def bch_linear_oracle(depth: int) -> FreeSeries:
    """Linear-in-Y part of log(exp(X) exp(Y)) by brute force at cutoff depth+1."""
    cutoff = depth + 1
    z = fs_log(fs_mul(fs_exp(FreeSeries.gen("X", cutoff)), fs_exp(FreeSeries.gen("Y", cutoff))))
    return extract_linear_in_y(z)


def bch_anti_comparison(depth: int) -> dict:
    """Per-degree comparison of the literal anti-commutator Z1 form with the oracle."""
    oracle = bch_linear_oracle(depth)
    literal = bch_z1_anticommutator_form(depth)
    diff = literal - oracle
    rows = []
    for d in range(1, depth + 2):
        part = diff.homogeneous(d)
        rows.append({
            "degree": d,
            "oracle": str(oracle.homogeneous(d)),
            "literal": str(literal.homogeneous(d)),
            "difference": str(part),
            "match": part.is_zero(),
        })
    return {"depth": depth, "match": diff.is_zero(), "by_degree": rows}
