from fractions import Fraction

from hypothesis import strategies as st

from weylcalc.algebra import NormalForm
from weylcalc.exact import GaussianRational, PolyCoeff
from weylcalc.free import FreeSeries

small_fracs = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))
gaussians = st.builds(GaussianRational, small_fracs, small_fracs)


@st.composite
def exponent_triples(draw, max_total=8):
    ec = draw(st.integers(0, max_total))
    es = draw(st.integers(0, max_total - ec))
    et = draw(st.integers(0, max_total - ec - es))
    return (ec, es, et)


polys = st.dictionaries(exponent_triples(), gaussians, max_size=4).map(PolyCoeff)
small_polys = st.dictionaries(exponent_triples(2), small_fracs, max_size=2).map(PolyCoeff)


@st.composite
def normal_forms(draw, max_degree=5, max_terms=3, coeffs=small_polys):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        a = draw(st.integers(0, max_degree))
        b = draw(st.integers(0, max_degree - a))
        terms[(a, b)] = draw(coeffs)
    return NormalForm(terms)


words = st.text(alphabet="XY", min_size=0, max_size=4)


@st.composite
def free_series(draw, cutoff=4, zero_constant=False):
    w = st.text(alphabet="XY", min_size=1 if zero_constant else 0, max_size=cutoff)
    return FreeSeries(cutoff, draw(st.dictionaries(w, small_fracs, max_size=4)))


_leaves = st.sampled_from(["X", "Y", "c", "s", "t", "i", "2", "1/3", "-1", "0"])


def _extend(inner):
    return st.one_of(
        st.tuples(inner, st.sampled_from([" + ", " - "]), inner).map(lambda t: f"{t[0]}{t[1]}{t[2]}"),
        st.tuples(inner, inner).map(lambda t: f"{t[0]}*{t[1]}"),
        st.tuples(inner, st.integers(0, 3)).map(lambda t: f"({t[0]})^{t[1]}"),
        st.tuples(inner, inner).map(lambda t: f"[{t[0]}, {t[1]}]"),
        st.tuples(inner, inner).map(lambda t: f"{{{t[0]}, {t[1]}}}"),
        inner.map(lambda s: f"({s})"),
    )


expressions = st.recursive(_leaves, _extend, max_leaves=8)
