from fractions import Fraction
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from weylcalc.exact import PolyCoeff
from weylcalc.special import (
    EulerPolynomial,
    bareiss_determinant,
    bernoulli,
    bernoulli_determinant,
    bernoulli_matrix,
    bernoulli_table,
    cofactor_determinant,
    euler_polynomial,
    euler_zero,
    euler_zero_bernoulli,
    euler_zero_explicit,
)

F = Fraction

# frozen from the recurrence, B_1 = -1/2 convention
BERNOULLI_0_12 = [F(1), F(-1, 2), F(1, 6), F(0), F(-1, 30), F(0), F(1, 42), F(0), F(-1, 30), F(0), F(5, 66), F(0), F(-691, 2730)]


def test_bernoulli_examples():
    assert bernoulli(0) == 1
    assert bernoulli(7) == 0
    assert bernoulli(8) == F(-1, 30)
    assert list(bernoulli_table(12)) == BERNOULLI_0_12
    assert bernoulli(20) == F(-174611, 330)
    with pytest.raises(ValueError):
        bernoulli(-1)


def test_bernoulli_table_is_immutable():
    assert isinstance(bernoulli_table(5), tuple)


def test_determinant_examples():
    assert bernoulli_determinant(0) == 1
    assert bernoulli_determinant(2) == F(1, 6)
    assert bernoulli_determinant(12) == F(-691, 2730)


def test_determinant_agrees_with_recurrence():
    for n in range(21):
        assert bernoulli_determinant(n) == bernoulli(n)


def test_cofactor_oracle_matches_bareiss():
    from math import factorial

    for n in range(7):
        m = bernoulli_matrix(n)
        assert cofactor_determinant(m) * factorial(n) == bernoulli(n)
    assert bareiss_determinant([[2, 1], [1, 3]]) == 5
    assert bareiss_determinant([[0, 1], [1, 0]]) == -1
    assert bareiss_determinant([[1, 2], [2, 4]]) == 0


def test_euler_polynomial_examples():
    assert euler_polynomial(0).coeffs == (F(1),)
    assert euler_polynomial(1).coeffs == (F(-1, 2), F(1))
    assert euler_polynomial(2).coeffs == (F(0), F(-1), F(1))
    with pytest.raises(ValueError):
        EulerPolynomial(1, (F(0), F(2)))


def test_euler_zero_examples():
    assert euler_zero_explicit(1) == F(-1, 2)
    assert euler_zero_explicit(3) == F(1, 4)
    assert euler_zero_explicit(7) == F(17, 8)
    assert euler_zero_bernoulli(2) == 0
    assert euler_zero_bernoulli(5) == F(-1, 2)
    assert euler_zero_bernoulli(9) == F(-31, 2)


def test_three_routes_agree():
    for k in range(1, 31):
        e = euler_polynomial(k).at_zero
        assert euler_zero_explicit(k) == e
        assert euler_zero_bernoulli(k) == e
        assert euler_zero(k) == e


def test_parity_zeros():
    for k in range(2, 31, 2):
        assert euler_zero(k) == 0
    for k in range(1, 15):
        assert bernoulli(2 * k + 1) == 0


def test_defining_relation():
    # E_l(x + 1) + E_l(x) = 2 x^l
    x = PolyCoeff.symbol("s")
    for l in range(12):
        E = euler_polynomial(l)
        assert E(x + 1) + E(x) == 2 * x**l


def test_translation_identity():
    x, h = PolyCoeff.symbol("s"), PolyCoeff.symbol("t")
    for k in range(11):
        rhs = PolyCoeff()
        for l in range(k + 1):
            rhs = rhs + euler_polynomial(l)(x) * h ** (k - l) * comb(k, l)
        assert euler_polynomial(k)(x + h) == rhs


@given(st.integers(1, 40))
def test_bernoulli_recurrence(n):
    table = bernoulli_table(n)
    assert sum(comb(n + 1, k) * table[k] for k in range(n + 1)) == 0
