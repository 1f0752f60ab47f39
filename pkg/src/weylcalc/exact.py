"""Exact scalars and sparse polynomials in the commuting symbols c, s, t.

Rationals are :class:`fractions.Fraction` (always reduced, positive
denominator).  :class:`GaussianRational` adds an imaginary part, and
:class:`PolyCoeff` is a sparse polynomial over Gaussian rationals keyed by the
exponent triple ``(e_c, e_s, e_t)``.  Every value is immutable.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Mapping, Union

__all__ = [
    "Rational",
    "GaussianRational",
    "PolyCoeff",
    "SYMBOLS",
    "I",
    "binomial",
    "scalar_arith",
    "poly_arith",
    "poly_substitute",
    "check_canonical",
]

Rational = Fraction
SYMBOLS = ("c", "s", "t")

Exponents = tuple[int, int, int]
ScalarLike = Union[int, Fraction, "GaussianRational"]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot convert {type(x).__name__} to a rational")


class GaussianRational:
    """Exact complex number ``re + im*i`` with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _frac(re))
        object.__setattr__(self, "im", _frac(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @classmethod
    def coerce(cls, x) -> GaussianRational:
        if isinstance(x, GaussianRational):
            return x
        return cls(x, 0)

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, other) -> bool:
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self) -> str:
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}*i"
        sign = "-" if self.im < 0 else "+"
        return f"({self.re} {sign} {abs(self.im)}*i)"

    def __neg__(self) -> GaussianRational:
        return GaussianRational(-self.re, -self.im)

    def __add__(self, other) -> GaussianRational:
        if isinstance(other, GaussianRational):
            return GaussianRational(self.re + other.re, self.im + other.im)
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other) -> GaussianRational:
        if isinstance(other, GaussianRational):
            return GaussianRational(self.re - other.re, self.im - other.im)
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.re - other, self.im)
        return NotImplemented

    def __rsub__(self, other) -> GaussianRational:
        return (-self) + other

    def __mul__(self, other) -> GaussianRational:
        if isinstance(other, GaussianRational):
            a, b, c, d = self.re, self.im, other.re, other.im
            if not b and not d:
                return GaussianRational(a * c, 0)
            return GaussianRational(a * c - b * d, a * d + b * c)
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def conjugate(self) -> GaussianRational:
        return GaussianRational(self.re, -self.im)

    def __truediv__(self, other) -> GaussianRational:
        other = GaussianRational.coerce(other)
        norm = other.re * other.re + other.im * other.im
        if norm == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        num = self * other.conjugate()
        return GaussianRational(num.re / norm, num.im / norm)

    def __rtruediv__(self, other) -> GaussianRational:
        return GaussianRational.coerce(other) / self

    def __pow__(self, k: int) -> GaussianRational:
        if k < 0:
            return GaussianRational(1) / self**-k
        out, base = GaussianRational(1), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out


I = GaussianRational(0, 1)
_ZERO = GaussianRational(0)
_ONE = GaussianRational(1)


def scalar_arith(a: ScalarLike, b: ScalarLike, op: str) -> GaussianRational:
    """Apply ``op`` in {"add", "sub", "mul", "div"} to two exact scalars."""
    a, b = GaussianRational.coerce(a), GaussianRational.coerce(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown scalar op {op!r}")


def _grlex_key(e: Exponents):
    return (sum(e), e)


class PolyCoeff:
    """Sparse polynomial in c, s, t with Gaussian-rational coefficients.

    Zero coefficients are never stored, so ``==`` is mathematical equality.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponents, ScalarLike] | None = None):
        clean: dict[Exponents, GaussianRational] = {}
        if terms:
            for e, v in terms.items():
                if len(e) != 3 or any((not isinstance(k, int)) or k < 0 for k in e):
                    raise ValueError(f"bad exponent triple {e!r}")
                v = GaussianRational.coerce(v)
                if v:
                    clean[tuple(e)] = v
        object.__setattr__(self, "_terms", clean)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _raw(cls, terms: dict[Exponents, GaussianRational]) -> PolyCoeff:
        # trusted constructor: caller guarantees no zero values
        obj = cls.__new__(cls)
        object.__setattr__(obj, "_terms", terms)
        object.__setattr__(obj, "_hash", None)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("PolyCoeff is immutable")

    # construction helpers
    @classmethod
    def const(cls, value: ScalarLike) -> PolyCoeff:
        return cls({(0, 0, 0): value})

    @classmethod
    def symbol(cls, name: str, power: int = 1) -> PolyCoeff:
        idx = SYMBOLS.index(name)
        e = [0, 0, 0]
        e[idx] = power
        return cls({tuple(e): 1})

    @classmethod
    def coerce(cls, x) -> PolyCoeff:
        if isinstance(x, PolyCoeff):
            return x
        return cls.const(x)

    # inspection
    @property
    def terms(self) -> dict[Exponents, GaussianRational]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def sorted_terms(self) -> list[tuple[Exponents, GaussianRational]]:
        """Terms in ascending graded-lexicographic order of (e_c, e_s, e_t)."""
        return sorted(self._terms.items(), key=lambda kv: _grlex_key(kv[0]))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def constant_value(self) -> GaussianRational | None:
        """The scalar value if this polynomial has no symbols, else None."""
        if not self._terms:
            return _ZERO
        if len(self._terms) == 1 and (0, 0, 0) in self._terms:
            return self._terms[(0, 0, 0)]
        return None

    def degree_in(self, name: str) -> int:
        idx = SYMBOLS.index(name)
        return max((e[idx] for e in self._terms), default=0)

    def contains(self, name: str) -> bool:
        idx = SYMBOLS.index(name)
        return any(e[idx] for e in self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, PolyCoeff):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self._terms == PolyCoeff.const(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"PolyCoeff({self})"

    def __str__(self) -> str:
        from .expr import poly_to_text

        return poly_to_text(self)

    # arithmetic
    def __neg__(self) -> PolyCoeff:
        return PolyCoeff._raw({e: -v for e, v in self._terms.items()})

    def __add__(self, other) -> PolyCoeff:
        if not isinstance(other, PolyCoeff):
            if isinstance(other, (int, Fraction, GaussianRational)):
                other = PolyCoeff.const(other)
            else:
                return NotImplemented
        out = dict(self._terms)
        for e, v in other._terms.items():
            w = out.get(e)
            if w is None:
                out[e] = v
            else:
                w = w + v
                if w:
                    out[e] = w
                else:
                    del out[e]
        return PolyCoeff._raw(out)

    __radd__ = __add__

    def __sub__(self, other) -> PolyCoeff:
        if not isinstance(other, PolyCoeff):
            if isinstance(other, (int, Fraction, GaussianRational)):
                other = PolyCoeff.const(other)
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> PolyCoeff:
        return (-self) + other

    def __mul__(self, other) -> PolyCoeff:
        if isinstance(other, (int, Fraction, GaussianRational)):
            if not other:
                return PolyCoeff._raw({})
            return PolyCoeff._raw({e: v * other for e, v in self._terms.items()})
        if not isinstance(other, PolyCoeff):
            return NotImplemented
        out: dict[Exponents, GaussianRational] = {}
        for (a0, a1, a2), v in self._terms.items():
            for (b0, b1, b2), w in other._terms.items():
                e = (a0 + b0, a1 + b1, a2 + b2)
                acc = out.get(e)
                out[e] = v * w if acc is None else acc + v * w
        return PolyCoeff._raw({e: v for e, v in out.items() if v})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> PolyCoeff:
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out, base = PolyCoeff.const(1), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def mul_c_power(self, k: int) -> PolyCoeff:
        """Multiply by c**k (cheap exponent shift)."""
        if k == 0:
            return self
        return PolyCoeff._raw({(e0 + k, e1, e2): v for (e0, e1, e2), v in self._terms.items()})

    def flip_sign(self, name: str) -> PolyCoeff:
        """Substitute name -> -name."""
        idx = SYMBOLS.index(name)
        return PolyCoeff._raw({e: (-v if e[idx] % 2 else v) for e, v in self._terms.items()})

    def substitute(self, name: str, value) -> PolyCoeff:
        value = PolyCoeff.coerce(value)
        if value.contains(name):
            raise ValueError(f"self-referential substitution of {name}")
        idx = SYMBOLS.index(name)
        powers: dict[int, PolyCoeff] = {0: PolyCoeff.const(1)}
        out = PolyCoeff()
        for e, v in self._terms.items():
            k = e[idx]
            if k not in powers:
                powers[k] = value**k
            rest = list(e)
            rest[idx] = 0
            out = out + PolyCoeff._raw({tuple(rest): v}) * powers[k]
        return out

    def evaluate(self, c=None, s=None, t=None) -> PolyCoeff:
        out = self
        for name, val in (("c", c), ("s", s), ("t", t)):
            if val is not None:
                out = out.substitute(name, val)
        return out


def poly_arith(p: PolyCoeff, q: PolyCoeff, op: str) -> PolyCoeff:
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown polynomial op {op!r}")


def poly_substitute(p: PolyCoeff, symbol: str, value) -> PolyCoeff:
    return p.substitute(symbol, value)


def binomial(n: int, k: int) -> int:
    """C(n, k), zero when k falls outside 0..n."""
    if n < 0:
        raise ValueError("binomial requires n >= 0")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def check_canonical(value) -> None:
    """Raise AssertionError unless ``value`` satisfies its representation invariants.

    Accepts Fraction, GaussianRational, PolyCoeff, or anything exposing
    ``check_canonical()`` (normal forms, free series).
    """
    if isinstance(value, Fraction):
        from math import gcd

        assert value.denominator > 0
        assert gcd(abs(value.numerator), value.denominator) == 1
        return
    if isinstance(value, GaussianRational):
        check_canonical(value.re)
        check_canonical(value.im)
        return
    if isinstance(value, PolyCoeff):
        for e, v in value.items():
            assert len(e) == 3 and all(isinstance(k, int) and k >= 0 for k in e), e
            assert v, "stored zero coefficient"
            check_canonical(v)
        return
    hook = getattr(value, "check_canonical", None)
    if hook is None:
        raise TypeError(f"no canonical form defined for {type(value).__name__}")
    hook()


def sum_polys(polys: Iterable[PolyCoeff]) -> PolyCoeff:
    out = PolyCoeff()
    for p in polys:
        out = out + p
    return out
