"""Surface syntax: parser, text/LaTeX renderers and the JSON wire format.

Grammar (whitespace ignored, explicit ``*`` required)::

    expr     := term (('+' | '-') term)*
    term     := unary ('*' unary)*
    unary    := '-' unary | factor
    factor   := base ('^' uint)?
    base     := 'X' | 'Y' | 'c' | 's' | 't' | 'i' | rational
              | '(' expr ')' | '[' expr ',' expr ']' | '{' expr ',' expr '}'
    rational := uint ('/' uint)?

``i`` is the imaginary unit; ``c``, ``s``, ``t`` are commuting scalars.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    AntiCommutator,
    Commutator,
    Gen,
    NormalForm,
    Power,
    Product,
    Scalar,
    Sum,
    expr_to_nf,
)
from .exact import SYMBOLS, GaussianRational, PolyCoeff

__all__ = [
    "Token",
    "ParseError",
    "tokenize",
    "parse",
    "parse_nf",
    "render",
    "to_json",
    "from_json",
    "roundtrip",
    "unparse",
    "poly_to_text",
]

_SINGLE = {
    "+": "plus",
    "-": "minus",
    "−": "minus",
    "*": "star",
    "^": "caret",
    "/": "slash",
    "(": "lparen",
    ")": "rparen",
    "[": "lbracket",
    "]": "rbracket",
    "{": "lbrace",
    "}": "rbrace",
    ",": "comma",
}
_IDENTS = frozenset("XYcsti")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int


class ParseError(ValueError):
    """Syntax error at a 0-based character offset into the source."""

    def __init__(self, position: int, expected: str, found: str):
        self.position = position
        self.expected = expected
        self.found = found
        super().__init__(f"position {position}: expected {expected}, found {found}")


def tokenize(src: str) -> list[Token]:
    out: list[Token] = []
    i, n = 0, len(src)
    while i < n:
        ch = src[i]
        if ch.isspace():
            i += 1
        elif ch in _SINGLE:
            out.append(Token(_SINGLE[ch], ch, i))
            i += 1
        elif ch.isdigit() and ch.isascii():
            j = i
            while j < n and src[j].isdigit() and src[j].isascii():
                j += 1
            out.append(Token("integer", src[i:j], i))
            i = j
        elif ch in _IDENTS:
            if i + 1 < n and (src[i + 1].isalnum() or src[i + 1] == "_"):
                raise ParseError(i + 1, "operator or delimiter", repr(src[i + 1]))
            out.append(Token("ident", ch, i))
            i += 1
        else:
            raise ParseError(i, "X, Y, c, s, t, i, number or delimiter", repr(ch))
    out.append(Token("end", "", n))
    return out


class _Parser:
    def __init__(self, src: str):
        self.toks = tokenize(src)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def _found(self) -> str:
        return "end of input" if self.tok.kind == "end" else repr(self.tok.text)

    def expect(self, kind: str, what: str) -> Token:
        if self.tok.kind != kind:
            raise ParseError(self.tok.pos, what, self._found())
        t = self.tok
        self.i += 1
        return t

    def parse(self):
        e = self.expr()
        self.expect("end", "end of input")
        return e

    def expr(self):
        terms = [self.term()]
        while self.tok.kind in ("plus", "minus"):
            neg = self.tok.kind == "minus"
            self.i += 1
            t = self.term()
            terms.append(_negate(t) if neg else t)
        return terms[0] if len(terms) == 1 else Sum(tuple(terms))

    def term(self):
        factors = [self.unary()]
        while self.tok.kind == "star":
            self.i += 1
            factors.append(self.unary())
        return factors[0] if len(factors) == 1 else Product(tuple(factors))

    def unary(self):
        if self.tok.kind == "minus":
            self.i += 1
            return _negate(self.unary())
        return self.factor()

    def factor(self):
        base = self.base()
        if self.tok.kind == "caret":
            self.i += 1
            exp = self.expect("integer", "nonnegative integer exponent")
            return Power(base, int(exp.text))
        return base

    def base(self):
        t = self.tok
        if t.kind == "ident":
            self.i += 1
            if t.text in ("X", "Y"):
                return Gen(t.text)
            if t.text == "i":
                return Scalar(PolyCoeff.const(GaussianRational(0, 1)))
            return Scalar(PolyCoeff.symbol(t.text))
        if t.kind == "integer":
            self.i += 1
            num = int(t.text)
            if self.tok.kind == "slash":
                self.i += 1
                den_tok = self.expect("integer", "denominator")
                den = int(den_tok.text)
                if den == 0:
                    raise ParseError(den_tok.pos, "nonzero denominator", "0")
                return Scalar(PolyCoeff.const(Fraction(num, den)))
            return Scalar(PolyCoeff.const(num))
        if t.kind == "lparen":
            self.i += 1
            e = self.expr()
            self.expect("rparen", "')'")
            return e
        if t.kind in ("lbracket", "lbrace"):
            self.i += 1
            left = self.expr()
            self.expect("comma", "','")
            right = self.expr()
            if t.kind == "lbracket":
                self.expect("rbracket", "']'")
                return Commutator(left, right)
            self.expect("rbrace", "'}'")
            return AntiCommutator(left, right)
        raise ParseError(t.pos, "operand", self._found())


def _negate(e):
    return Product((Scalar(PolyCoeff.const(-1)), e))


def parse(src: str):
    """Parse ``src`` into an operator expression tree."""
    return _Parser(src).parse()


def parse_nf(src: str) -> NormalForm:
    return expr_to_nf(parse(src))


# -- text rendering -------------------------------------------------------------

def _sym_factors(e) -> list[tuple[str, int]]:
    return [(name, k) for name, k in zip(SYMBOLS, e) if k]


def _frac_text(q: Fraction) -> str:
    return str(q)


def _scalar_text(g: GaussianRational) -> tuple[str, str | None]:
    """Split a nonzero scalar into (sign, magnitude text); magnitude None means 1."""
    if g.im == 0 or g.re == 0:
        q = g.re if g.im == 0 else g.im
        sign = "-" if q < 0 else "+"
        q = abs(q)
        if g.im == 0:
            return sign, None if q == 1 else _frac_text(q)
        return sign, "i" if q == 1 else f"{_frac_text(q)}*i"
    im_sign = "-" if g.im < 0 else "+"
    im = abs(g.im)
    im_txt = "i" if im == 1 else f"{_frac_text(im)}*i"
    if g.re < 0:
        flip = "+" if g.im < 0 else "-"
        return "-", f"({_frac_text(-g.re)} {flip} {im_txt})"
    return "+", f"({_frac_text(g.re)} {im_sign} {im_txt})"


def _join_signed(parts: list[tuple[str, str]]) -> str:
    if not parts:
        return "0"
    out = []
    for idx, (sign, body) in enumerate(parts):
        if idx == 0:
            out.append(("-" if sign == "-" else "") + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


def _monomial_text(g: GaussianRational, sym: list[tuple[str, int]], ops: list[str]) -> tuple[str, str]:
    sign, mag = _scalar_text(g)
    factors = []
    if mag is not None:
        factors.append(mag)
    factors.extend(n if k == 1 else f"{n}^{k}" for n, k in sym)
    factors.extend(ops)
    return sign, "*".join(factors) if factors else "1"


def poly_to_text(p: PolyCoeff) -> str:
    parts = [_monomial_text(v, _sym_factors(e), []) for e, v in p.sorted_terms()]
    return _join_signed(parts)


def _op_factors(a: int, b: int) -> list[str]:
    ops = []
    if a:
        ops.append("Y" if a == 1 else f"Y^{a}")
    if b:
        ops.append("X" if b == 1 else f"X^{b}")
    return ops


def _render_text(A: NormalForm) -> str:
    parts = []
    for (a, b), p in A.sorted_terms():
        ops = _op_factors(a, b)
        if len(p) == 1:
            (e, v), = p.items()
            parts.append(_monomial_text(v, _sym_factors(e), ops))
        else:
            body = "(" + poly_to_text(p) + ")"
            parts.append(("+", "*".join([body] + ops)))
    return _join_signed(parts)


# -- LaTeX ---------------------------------------------------------------------

def _frac_latex(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return rf"\frac{{{q.numerator}}}{{{q.denominator}}}"


def _scalar_latex(g: GaussianRational) -> tuple[str, str | None]:
    if g.im == 0 or g.re == 0:
        q = g.re if g.im == 0 else g.im
        sign = "-" if q < 0 else "+"
        q = abs(q)
        if g.im == 0:
            return sign, None if q == 1 else _frac_latex(q)
        return sign, "i" if q == 1 else f"{_frac_latex(q)} i"
    im = abs(g.im)
    im_txt = "i" if im == 1 else f"{_frac_latex(im)} i"
    if g.re < 0:
        return "-", rf"\left({_frac_latex(-g.re)} {'+' if g.im < 0 else '-'} {im_txt}\right)"
    return "+", rf"\left({_frac_latex(g.re)} {'-' if g.im < 0 else '+'} {im_txt}\right)"


def _monomial_latex(g, sym, ops) -> tuple[str, str]:
    sign, mag = _scalar_latex(g)
    factors = []
    if mag is not None:
        factors.append(mag)
    factors.extend(n if k == 1 else f"{n}^{{{k}}}" for n, k in sym)
    factors.extend(ops)
    return sign, " ".join(factors) if factors else "1"


def _render_latex(A: NormalForm) -> str:
    parts = []
    for (a, b), p in A.sorted_terms():
        ops = []
        if a:
            ops.append("Y" if a == 1 else f"Y^{{{a}}}")
        if b:
            ops.append("X" if b == 1 else f"X^{{{b}}}")
        if len(p) == 1:
            (e, v), = p.items()
            parts.append(_monomial_latex(v, _sym_factors(e), ops))
        else:
            inner = _join_signed([_monomial_latex(v, _sym_factors(e), []) for e, v in p.sorted_terms()])
            parts.append(("+", " ".join([rf"\left({inner}\right)"] + ops)))
    return _join_signed(parts)


# -- JSON ------------------------------------------------------------------------

def _frac_json(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def nf_to_obj(A: NormalForm) -> dict:
    terms = []
    for (a, b), p in A.sorted_terms():
        coeff = [
            {"c": e[0], "s": e[1], "t": e[2], "re": _frac_json(v.re), "im": _frac_json(v.im)}
            for e, v in p.sorted_terms()
        ]
        terms.append({"y": a, "x": b, "coeff": coeff})
    return {"basis": "YX", "symbols": list(SYMBOLS), "terms": terms}


def to_json(A: NormalForm) -> str:
    return json.dumps(nf_to_obj(A), separators=(",", ":"))


def _parse_frac(text: str) -> Fraction:
    num, sep, den = text.partition("/")
    if not sep:
        raise ValueError(f"rational {text!r} lacks an explicit denominator")
    return Fraction(int(num), int(den))


def nf_from_obj(obj: dict) -> NormalForm:
    if obj.get("basis") != "YX" or obj.get("symbols") != list(SYMBOLS):
        raise ValueError("unsupported basis or symbol list")
    terms = {}
    for t in obj["terms"]:
        poly = {}
        for m in t["coeff"]:
            poly[(m["c"], m["s"], m["t"])] = GaussianRational(_parse_frac(m["re"]), _parse_frac(m["im"]))
        key = (t["y"], t["x"])
        if key in terms:
            raise ValueError(f"duplicate term {key}")
        terms[key] = PolyCoeff(poly)
    return NormalForm(terms)


def from_json(text: str) -> NormalForm:
    return nf_from_obj(json.loads(text))


def render(A: NormalForm, format: str = "text") -> str:
    if format == "text":
        return _render_text(A)
    if format == "latex":
        return _render_latex(A)
    if format == "json":
        return to_json(A)
    raise ValueError(f"unknown format {format!r}")


def roundtrip(src: str) -> NormalForm:
    """Normal form of ``src`` after a render/parse cycle; raises if unstable."""
    first = parse_nf(src)
    second = parse_nf(render(first, "text"))
    if first != second:
        raise AssertionError(f"round trip changed {src!r}: {first} != {second}")
    return second


# -- expression trees back to source ---------------------------------------------

def unparse(e) -> str:
    """Source text for an expression tree (fully parenthesised where needed)."""
    if isinstance(e, Gen):
        return e.name
    if isinstance(e, Scalar):
        return "(" + poly_to_text(e.value) + ")"
    if isinstance(e, Sum):
        return "(" + " + ".join(unparse(t) for t in e.terms) + ")"
    if isinstance(e, Product):
        return "(" + "*".join(unparse(f) for f in e.factors) + ")"
    if isinstance(e, Power):
        return f"({unparse(e.base)})^{e.exponent}"
    if isinstance(e, Commutator):
        return f"[{unparse(e.left)}, {unparse(e.right)}]"
    if isinstance(e, AntiCommutator):
        return f"{{{unparse(e.left)}, {unparse(e.right)}}}"
    raise TypeError(f"not an operator expression: {e!r}")
