"""Normal-form arithmetic in the Weyl algebra  X*Y - Y*X = c.

Every element is stored as a finite sum of ``coeff * Y**a * X**b`` (all Y to
the left).  Products use the closed-form reordering

    X**b * Y**d = sum_l c**l * l! * C(b,l) * C(d,l) * Y**(d-l) * X**(b-l)

and :func:`normal_order_word` keeps the naive one-swap-at-a-time rewriter
around as an independent check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Mapping, Union

from .exact import GaussianRational, PolyCoeff, binomial

__all__ = [
    "NormalForm",
    "Gen",
    "Scalar",
    "Sum",
    "Product",
    "Power",
    "Commutator",
    "AntiCommutator",
    "OperatorExpr",
    "nf_monomial",
    "nf_mul",
    "nf_commutator",
    "nf_anticommutator",
    "nf_substitute_c",
    "nf_swap_xy",
    "expr_to_nf",
    "normal_order_word",
    "word_to_nf",
    "X",
    "Y",
    "ONE",
    "ZERO",
    "x_pow",
    "y_pow",
]

MAX_EXPONENT = 10_000

Key = tuple[int, int]


def _check_exp(k: int) -> int:
    if not isinstance(k, int) or k < 0:
        raise ValueError(f"exponent must be a nonnegative integer, got {k!r}")
    if k > MAX_EXPONENT:
        raise OverflowError(f"exponent {k} exceeds supported range")
    return k


@lru_cache(maxsize=4096)
def _reorder_weights(b: int, d: int) -> tuple[int, ...]:
    """l! C(b,l) C(d,l) for l = 0..min(b,d)."""
    return tuple(factorial(l) * binomial(b, l) * binomial(d, l) for l in range(min(b, d) + 1))


def _accumulate(out: dict, key: Key, p: PolyCoeff) -> None:
    q = out.get(key)
    out[key] = p if q is None else q + p


class NormalForm:
    """Immutable element of the Weyl algebra in Y-left normal order."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Key, object] | None = None):
        clean: dict[Key, PolyCoeff] = {}
        if terms:
            for (a, b), v in terms.items():
                _check_exp(a)
                _check_exp(b)
                v = PolyCoeff.coerce(v)
                if v:
                    clean[(a, b)] = v
        object.__setattr__(self, "_terms", clean)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _raw(cls, terms: dict[Key, PolyCoeff]) -> NormalForm:
        obj = cls.__new__(cls)
        object.__setattr__(obj, "_terms", {k: v for k, v in terms.items() if v})
        object.__setattr__(obj, "_hash", None)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("NormalForm is immutable")

    @classmethod
    def scalar(cls, value) -> NormalForm:
        return cls({(0, 0): value})

    @classmethod
    def coerce(cls, x) -> NormalForm:
        if isinstance(x, NormalForm):
            return x
        return cls.scalar(x)

    def items(self):
        return self._terms.items()

    @property
    def terms(self) -> dict[Key, PolyCoeff]:
        return dict(self._terms)

    def coeff(self, y_exp: int, x_exp: int) -> PolyCoeff:
        return self._terms.get((y_exp, x_exp), PolyCoeff())

    def sorted_terms(self) -> list[tuple[Key, PolyCoeff]]:
        """Terms by descending (y_exp, x_exp)."""
        return sorted(self._terms.items(), key=lambda kv: kv[0], reverse=True)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def degree(self) -> int:
        return max((a + b for a, b in self._terms), default=0)

    def check_canonical(self) -> None:
        from .exact import check_canonical

        for (a, b), v in self._terms.items():
            assert isinstance(a, int) and isinstance(b, int) and a >= 0 and b >= 0
            assert v, "stored zero operator coefficient"
            check_canonical(v)

    def __eq__(self, other) -> bool:
        if isinstance(other, NormalForm):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction, GaussianRational, PolyCoeff)):
            return self._terms == NormalForm.scalar(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"NormalForm({self})"

    def __str__(self) -> str:
        from .expr import render

        return render(self, "text")

    def __neg__(self) -> NormalForm:
        return NormalForm._raw({k: -v for k, v in self._terms.items()})

    def __add__(self, other) -> NormalForm:
        if not isinstance(other, NormalForm):
            if isinstance(other, (int, Fraction, GaussianRational, PolyCoeff)):
                other = NormalForm.scalar(other)
            else:
                return NotImplemented
        out = dict(self._terms)
        for k, v in other._terms.items():
            _accumulate(out, k, v)
        return NormalForm._raw(out)

    __radd__ = __add__

    def __sub__(self, other) -> NormalForm:
        if not isinstance(other, NormalForm):
            if isinstance(other, (int, Fraction, GaussianRational, PolyCoeff)):
                other = NormalForm.scalar(other)
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> NormalForm:
        return (-self) + other

    def __mul__(self, other) -> NormalForm:
        if isinstance(other, NormalForm):
            return nf_mul(self, other)
        if isinstance(other, (int, Fraction, GaussianRational, PolyCoeff)):
            return NormalForm._raw({k: v * other for k, v in self._terms.items()})
        return NotImplemented

    def __rmul__(self, other) -> NormalForm:
        # scalars are central
        if isinstance(other, (int, Fraction, GaussianRational, PolyCoeff)):
            return self * other
        return NotImplemented

    def __pow__(self, k: int) -> NormalForm:
        _check_exp(k)
        out, base = ONE, self
        while k:
            if k & 1:
                out = nf_mul(out, base)
            base = nf_mul(base, base)
            k >>= 1
        return out

    def map_coeffs(self, fn) -> NormalForm:
        return NormalForm._raw({k: fn(v) for k, v in self._terms.items()})


def nf_monomial(y_exp: int, x_exp: int, coeff=1) -> NormalForm:
    """coeff * Y**y_exp * X**x_exp."""
    _check_exp(y_exp)
    _check_exp(x_exp)
    return NormalForm({(y_exp, x_exp): coeff})


def nf_mul(A: NormalForm, B: NormalForm) -> NormalForm:
    out: dict[Key, PolyCoeff] = {}
    for (a, b), p in A._terms.items():
        for (d, e), q in B._terms.items():
            pq = p * q
            for l, w in enumerate(_reorder_weights(b, d)):
                term = pq.mul_c_power(l)
                if w != 1:
                    term = term * w
                _accumulate(out, (a + d - l, b + e - l), term)
    return NormalForm._raw(out)


def nf_commutator(A: NormalForm, B: NormalForm) -> NormalForm:
    return nf_mul(A, B) - nf_mul(B, A)


def nf_anticommutator(A: NormalForm, B: NormalForm) -> NormalForm:
    return nf_mul(A, B) + nf_mul(B, A)


def nf_substitute_c(A: NormalForm, value) -> NormalForm:
    """Replace the symbol c in every coefficient by ``value`` (free of c)."""
    value = PolyCoeff.coerce(value)
    if value.contains("c"):
        raise ValueError("substituted value must not contain c")
    return A.map_coeffs(lambda p: p.substitute("c", value))


def nf_substitute(A: NormalForm, name: str, value) -> NormalForm:
    return A.map_coeffs(lambda p: p.substitute(name, value))


def nf_swap_xy(A: NormalForm) -> NormalForm:
    """Image under X -> Y, Y -> X, c -> -c, normal-ordered again.

    The map preserves X*Y - Y*X = c, so it is an algebra automorphism; it is
    also an involution.
    """
    out = ZERO
    for (a, b), p in A._terms.items():
        # Y^a X^b  ->  X^a Y^b
        out = out + nf_mul(x_pow(a), y_pow(b)) * p.flip_sign("c")
    return out


@lru_cache(maxsize=1024)
def x_pow(n: int) -> NormalForm:
    return nf_monomial(0, n)


@lru_cache(maxsize=1024)
def y_pow(n: int) -> NormalForm:
    return nf_monomial(n, 0)


X = nf_monomial(0, 1)
Y = nf_monomial(1, 0)
ONE = nf_monomial(0, 0)
ZERO = NormalForm()


# -- independent oracle ------------------------------------------------------

def normal_order_word(word: str) -> NormalForm:
    """Normal-order a word over {X, Y} by repeatedly rewriting XY -> YX + c.

    Deliberately naive: it never uses the closed-form product and serves as
    the reference the engine is tested against.
    """
    pending: dict[str, PolyCoeff] = {word: PolyCoeff.const(1)}
    done: dict[Key, PolyCoeff] = {}
    c = PolyCoeff.symbol("c")
    while pending:
        w, coeff = pending.popitem()
        pos = w.find("XY")
        if pos < 0:
            a = w.count("Y")
            assert w == "Y" * a + "X" * (len(w) - a)
            _accumulate(done, (a, len(w) - a), coeff)
            continue
        for nw, nc in ((w[:pos] + "YX" + w[pos + 2:], coeff), (w[:pos] + w[pos + 2:], coeff * c)):
            prev = pending.get(nw)
            pending[nw] = nc if prev is None else prev + nc
    return NormalForm._raw(done)


def word_to_nf(word: str) -> NormalForm:
    """Evaluate a word over {X, Y} with the engine's product."""
    out = ONE
    for ch in word:
        if ch == "X":
            out = nf_mul(out, X)
        elif ch == "Y":
            out = nf_mul(out, Y)
        else:
            raise ValueError(f"bad generator {ch!r}")
    return out


# -- expression trees ---------------------------------------------------------

@dataclass(frozen=True)
class Gen:
    name: str  # "X" or "Y"


@dataclass(frozen=True)
class Scalar:
    value: PolyCoeff


@dataclass(frozen=True)
class Sum:
    terms: tuple


@dataclass(frozen=True)
class Product:
    factors: tuple


@dataclass(frozen=True)
class Power:
    base: object
    exponent: int


@dataclass(frozen=True)
class Commutator:
    left: object
    right: object


@dataclass(frozen=True)
class AntiCommutator:
    left: object
    right: object


OperatorExpr = Union[Gen, Scalar, Sum, Product, Power, Commutator, AntiCommutator]


def expr_to_nf(e: OperatorExpr) -> NormalForm:
    if isinstance(e, Gen):
        if e.name == "X":
            return X
        if e.name == "Y":
            return Y
        raise ValueError(f"unknown generator {e.name!r}")
    if isinstance(e, Scalar):
        return NormalForm.scalar(e.value)
    if isinstance(e, Sum):
        out = ZERO
        for t in e.terms:
            out = out + expr_to_nf(t)
        return out
    if isinstance(e, Product):
        out = ONE
        for f in e.factors:
            out = nf_mul(out, expr_to_nf(f))
        return out
    if isinstance(e, Power):
        return expr_to_nf(e.base) ** _check_exp(e.exponent)
    if isinstance(e, Commutator):
        return nf_commutator(expr_to_nf(e.left), expr_to_nf(e.right))
    if isinstance(e, AntiCommutator):
        return nf_anticommutator(expr_to_nf(e.left), expr_to_nf(e.right))
    raise TypeError(f"not an operator expression: {e!r}")


def nf_sum(items: Iterable[NormalForm]) -> NormalForm:
    out = ZERO
    for it in items:
        out = out + it
    return out
