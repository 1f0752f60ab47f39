"""Exact symbolic engine for the Weyl algebra XY - YX = c."""

from .algebra import (
    ONE,
    ZERO,
    NormalForm,
    X,
    Y,
    expr_to_nf,
    nf_anticommutator,
    nf_commutator,
    nf_monomial,
    nf_mul,
    nf_substitute_c,
    nf_swap_xy,
    normal_order_word,
)
from .exact import I, GaussianRational, PolyCoeff, Rational, binomial
from .expr import ParseError, from_json, parse, parse_nf, render, roundtrip, to_json
from .free import FreeSeries, fs_exp, fs_log, fs_mul
from .identities import IdentityReport, v_system_solve
from .ordering import SOrderedMonomial, born_jordan, s_convert, s_ordered_ground, weyl_T
from .special import EulerPolynomial, bernoulli, bernoulli_determinant, euler_polynomial, euler_zero

__version__ = "0.1.0"

__all__ = [
    "ONE",
    "ZERO",
    "NormalForm",
    "X",
    "Y",
    "expr_to_nf",
    "nf_anticommutator",
    "nf_commutator",
    "nf_monomial",
    "nf_mul",
    "nf_substitute_c",
    "nf_swap_xy",
    "normal_order_word",
    "I",
    "GaussianRational",
    "PolyCoeff",
    "Rational",
    "binomial",
    "ParseError",
    "from_json",
    "parse",
    "parse_nf",
    "render",
    "roundtrip",
    "to_json",
    "FreeSeries",
    "fs_exp",
    "fs_log",
    "fs_mul",
    "IdentityReport",
    "v_system_solve",
    "SOrderedMonomial",
    "born_jordan",
    "s_convert",
    "s_ordered_ground",
    "weyl_T",
    "EulerPolynomial",
    "bernoulli",
    "bernoulli_determinant",
    "euler_polynomial",
    "euler_zero",
]
