from fractions import Fraction

import pytest

from weylcalc.algebra import ZERO, nf_anticommutator, nf_monomial, nf_mul, nf_swap_xy, x_pow, y_pow
from weylcalc.exact import I, PolyCoeff
from weylcalc.identities import (
    APPENDIX_V,
    at_i,
    bd_anticommutator,
    bd_commutator,
    bd_engine_anticommutator,
    bd_engine_commutator,
    bd_engine_product,
    bd_parity_parts,
    bd_product,
    bd_shift,
    bd_shift_coefficient,
    commutator_anti_bernoulli,
    commutator_anti_euler,
    commutator_xy_form,
    commutator_yx_form,
    compare,
    engine_commutator,
    moment_bracket,
    moment_bracket_anti,
    moment_bracket_engine,
    poly_commutator,
    v_system_solve,
    weyl_T_at_i,
)
from weylcalc.ordering import weyl_T
from weylcalc.special import euler_zero

c = PolyCoeff.symbol("c")
F = Fraction
two_c_anti = nf_monomial(1, 1, 4 * c) + 2 * c**2  # 2c{X,Y}


def test_ordered_form_examples():
    assert commutator_xy_form(1, 1) == c
    assert commutator_xy_form(2, 1) == nf_monomial(0, 1, 2 * c)
    assert commutator_xy_form(2, 2) == two_c_anti
    assert commutator_yx_form(1, 1) == c
    assert commutator_yx_form(1, 2) == nf_monomial(1, 0, 2 * c)
    assert commutator_yx_form(3, 3) == engine_commutator(3, 3)


def test_anti_form_examples():
    assert commutator_anti_euler(1, 1) == c
    assert commutator_anti_euler(2, 2) == two_c_anti
    assert commutator_anti_euler(1, 3) == nf_monomial(2, 0, 3 * c)
    assert commutator_anti_bernoulli(2, 2) == two_c_anti


def test_poly_commutator_examples():
    assert poly_commutator([0, 1], [0, 1]) == c
    assert poly_commutator([5], [1, 2, 3]) == ZERO
    f_of_x = x_pow(1) + x_pow(2)
    assert poly_commutator([0, 1, 1], [0, 0, 1]) == nf_mul(f_of_x, y_pow(2)) - nf_mul(y_pow(2), f_of_x)


def test_main_theorem_through_10():
    for n in range(1, 11):
        for m in range(1, 11):
            engine = engine_commutator(n, m)
            assert commutator_anti_euler(n, m) == engine
            assert commutator_anti_bernoulli(n, m) == engine
            assert commutator_xy_form(n, m) == engine
            assert commutator_yx_form(n, m) == engine


def test_swap_antisymmetry_of_euler_form():
    for n in range(1, 7):
        for m in range(1, 7):
            assert nf_swap_xy(commutator_anti_euler(n, m)) == -commutator_anti_euler(m, n)


def test_v_system():
    assert v_system_solve(1).solution == (F(1, 2),)
    sys30 = v_system_solve(30)
    assert sys30.solution[:9] == APPENDIX_V
    assert sys30.solution[6] == F(-17, 8)
    assert sys30.solution[8] == F(31, 2)
    assert all(v == -euler_zero(k) for k, v in enumerate(sys30.solution, 1))
    assert set(sys30.diagonal()) == {2}
    assert not any(sys30.residuals())
    with pytest.raises(ValueError):
        v_system_solve(0)


def test_c_equals_i_from_smallest_product():
    # T_{0,1} T_{1,0} = X Y = T_{1,1} + (i/2) fixes XY - YX = i
    assert bd_engine_product(0, 1, 1, 0) == weyl_T_at_i(1, 1) + I * F(1, 2)
    assert bd_product(0, 1, 1, 0) == weyl_T_at_i(1, 1) + I * F(1, 2)


def test_bd_examples():
    for r in range(4):
        for s in range(4):
            assert bd_product(0, 0, r, s) == weyl_T_at_i(r, s)
    assert bd_product(1, 1, 1, 1) == bd_engine_product(1, 1, 1, 1)
    assert bd_commutator(0, 1, 1, 0) == I
    assert bd_anticommutator(0, 1, 1, 0) == nf_monomial(1, 1, 2) + I
    assert bd_commutator(2, 1, 2, 1) == ZERO


def test_bd_grid():
    for m in range(4):
        for n in range(4):
            for r in range(4):
                for s in range(4):
                    p = (m, n, r, s)
                    assert bd_product(*p) == bd_engine_product(*p)
                    odd, even = bd_parity_parts(*p)
                    assert odd == bd_engine_commutator(*p)
                    assert even == bd_engine_anticommutator(*p)


def test_bd_literal_sums_match_on_small_grid():
    # the printed odd/even sums are the product sum re-indexed by k -> J - k
    for m in range(3):
        for n in range(3):
            for r in range(3):
                for s in range(3):
                    assert bd_commutator(m, n, r, s) == bd_engine_commutator(m, n, r, s)
                    assert bd_anticommutator(m, n, r, s) == bd_engine_anticommutator(m, n, r, s)


def test_bd_shift_printed_coefficient():
    assert bd_shift_coefficient(0, 1) == F(1, 2)
    assert bd_shift_coefficient(1, 1) == F(3, 4)
    assert bd_shift_coefficient(1, 0) == F(1, 2)
    assert bd_shift(0, 1, "x").equal
    assert bd_shift(1, 0, "y").equal
    with pytest.raises(ValueError):
        bd_shift(1, 1, "z")


def test_bd_shift_as_printed_fails_beyond_trivial_cases():
    # T_{1,2} = (1/2){T_{1,1}, X}, not (3/4){T_{1,1}, X}
    report = bd_shift(1, 1, "x")
    assert not report.equal
    half_anti = at_i(nf_anticommutator(weyl_T(1, 1), x_pow(1))) * F(1, 2)
    assert weyl_T_at_i(1, 2) == half_anti
    for m in range(5):
        for k in range(5):
            for side in ("x", "y"):
                assert bd_shift(m, k, side).equal == (m == 0 or k == 0)


def test_moment_examples():
    assert moment_bracket_engine(1, 1, 1) == nf_monomial(0, 1, 2 * c)
    assert moment_bracket(1, 1, 1) == nf_monomial(0, 1, 2 * c)
    assert moment_bracket_anti(1, 1, 1) == nf_monomial(0, 1, 2 * c)
    for n in range(1, 4):
        for l in range(1, 4):
            got = moment_bracket(n, 1, l)
            assert set(got.terms) <= {(0, n + l - 1)}


def test_moment_grid():
    for n in range(1, 5):
        for k in range(1, 5):
            for l in range(1, 5):
                engine = moment_bracket_engine(n, k, l)
                assert moment_bracket(n, k, l) == engine
                assert moment_bracket_anti(n, k, l) == engine


def test_report_fields():
    r = compare("demo", [1, 2], x_pow(1), x_pow(1))
    assert r.equal and r.parameter_tuple == (1, 2) and r.discrepancy.is_zero()
    r = compare("demo", (), x_pow(1), ZERO)
    assert not r.equal and r.discrepancy == x_pow(1)
