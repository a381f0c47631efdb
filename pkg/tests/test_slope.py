from fractions import Fraction

import pytest

from grdcalc.errors import PreconditionError
from grdcalc.exact import RatFunc, ratfunc_equal
from grdcalc.invariants import castelnuovo_count, rho_zero_triples
from grdcalc.picard import LAMBDA, delta
from grdcalc.slope import (family_gap_function, family_gap_symbolic,
                           m_family_gap_identity, m_family_report,
                           m_family_triple, quadric_degeneracy_class,
                           quadric_divisor, quadric_lambda_delta0,
                           slope_report, symbolic_gap_identity)


def test_quadric_class_coefficients():
    combo = quadric_degeneracy_class(6)
    assert (combo.alpha, combo.beta, combo.gamma, combo.hodge_pullback) == (2, -1, -8, 1)
    assert quadric_degeneracy_class(4).gamma == -6
    # The alpha, beta, hodge part is independent of r.
    for r in range(1, 9):
        c = quadric_degeneracy_class(r)
        assert (c.alpha, c.beta, c.hodge_pullback) == (2, -1, 1)


def test_quadric_divisor_genus21_ratio():
    n = castelnuovo_count(21, 6, 24)
    D = quadric_divisor(21, 6, 24)
    assert D.get(LAMBDA) == Fraction(2459, 95) * n
    assert D.get(delta(0)) == Fraction(-377, 95) * n
    assert D.get(LAMBDA) / D.get(delta(0)) == Fraction(-2459, 377)


def test_quadric_divisor_genus10_ratio():
    n = castelnuovo_count(10, 4, 12)
    D = quadric_divisor(10, 4, 12)
    assert D.get(LAMBDA) == 7 * n
    assert D.get(delta(0)) == -n


def test_slope_report_genus21():
    rep = slope_report(21, 6, 24)
    assert rep.lambda_coeff == Fraction(2459, 95)
    assert rep.delta0_coeff == Fraction(-377, 95)
    assert rep.ratio == Fraction(2459, 377)
    assert rep.bound == Fraction(72, 11)
    assert rep.gap == Fraction(95, 4147)
    assert rep.ratio < rep.bound
    assert rep.violates
    assert not rep.conjectural


def test_slope_report_genus10():
    rep = slope_report(10, 4, 12)
    assert rep.ratio == 7
    assert rep.bound == Fraction(78, 11)
    assert rep.violates
    assert rep.conjectural


def test_slope_report_small_triple_pinned():
    # Frozen golden values for (4,1,3): positive delta_0 coefficient, so no
    # effective-orientation violation even though a ratio exists.
    rep = slope_report(4, 1, 3)
    assert rep.lambda_coeff == -17
    assert rep.delta0_coeff == 2
    assert rep.ratio == Fraction(17, 2)
    assert rep.bound == Fraction(42, 5)
    assert not rep.violates
    assert rep.conjectural


def test_slope_report_requires_rho_zero():
    with pytest.raises(PreconditionError):
        slope_report(5, 1, 3)


def test_m_family_triples():
    assert m_family_triple(1) == (3, 2, 4)
    assert m_family_triple(2) == (10, 4, 12)
    assert m_family_triple(3) == (21, 6, 24)
    with pytest.raises(PreconditionError):
        m_family_triple(0)


def test_m_family_reports():
    assert m_family_report(2).ratio == 7
    rep3 = m_family_report(3)
    assert rep3.ratio == Fraction(2459, 377)
    assert rep3.gap == Fraction(5700, 248820)
    rep1 = m_family_report(1)
    assert rep1.gap == 0
    assert rep1.ratio == rep1.bound == 9


def test_gap_identity_pointwise():
    assert m_family_gap_identity(15)


def test_gap_sign_matches_numerator_sign():
    numerator = lambda m: 36 * m**5 - 24 * m**4 - 57 * m**3 + 48 * m**2 + 3 * m - 6
    for m in range(1, 7):
        gap = m_family_report(m).gap
        num = numerator(m)
        assert (gap > 0) == (num > 0)
        assert (gap == 0) == (num == 0)


def test_symbolic_gap_equals_printed_function():
    assert symbolic_gap_identity()
    assert ratfunc_equal(family_gap_symbolic(), family_gap_function())


def test_generic_coefficients_match_full_pushforward():
    # The scalar-generic helper and the full divisor computation must agree
    # per cover degree; this is also the ratio's N-independence.
    for t in rho_zero_triples(10):
        if t.g < 3:
            continue
        lam, d0 = quadric_lambda_delta0(t.g, t.r, t.d)
        n = castelnuovo_count(t.g, t.r, t.d)
        D = quadric_divisor(t.g, t.r, t.d)
        assert D.get(LAMBDA) == lam * n
        assert D.get(delta(0)) == d0 * n


def test_generic_coefficients_work_symbolically():
    m = RatFunc.variable()
    lam, d0 = quadric_lambda_delta0(2 * m * m + m, 2 * m, 2 * m * m + 2 * m)
    for mv in (1, 2, 3, 5):
        g, r, d = m_family_triple(mv)
        lam_num, d0_num = quadric_lambda_delta0(g, r, d)
        assert lam.eval(mv) == lam_num
        assert d0.eval(mv) == d0_num
