"""Truncated multivariate Laurent arithmetic."""

import pytest

from kostant.series import TruncatedLaurentSeries as TLS, window_product


def test_window_product_combines_bounds():
    w1 = ((0, 3), (None, -1))
    w2 = ((-2, 5), (-4, 0))
    assert window_product(w1, w2) == ((-2, 8), (None, -1))


class TestConstruction:
    def test_drops_zero_coefficients(self):
        s = TLS(1, {(0,): 0, (1,): 2}, ((None, None),))
        assert s.terms == {(1,): 2}

    def test_rejects_terms_outside_window(self):
        with pytest.raises(ValueError):
            TLS(1, {(2,): 1}, ((0, 1),))

    def test_rejects_wrong_arity(self):
        with pytest.raises(ValueError):
            TLS(2, {(1,): 1}, ((None, None), (None, None)))

    def test_constant_and_scalar(self):
        c = TLS.constant(0, 7)
        assert c.scalar() == 7
        assert TLS.constant(0, 0).is_zero()


class TestArithmetic:
    def test_add_matches_termwise(self):
        w = ((None, None),)
        a = TLS(1, {(0,): 1, (2,): 3}, w)
        b = TLS(1, {(2,): -3, (5,): 1}, w)
        assert (a + b).terms == {(0,): 1, (5,): 1}

    def test_add_requires_same_window(self):
        a = TLS(1, {(0,): 1}, ((0, 4),))
        b = TLS(1, {(0,): 1}, ((0, 5),))
        with pytest.raises(ValueError):
            a + b

    def test_mul_exact_small_case(self):
        w = ((None, None),)
        a = TLS(1, {(0,): 1, (1,): 1}, w)  # 1 + z
        sq = a.mul(a)
        assert sq.terms == {(0,): 1, (1,): 2, (2,): 1}

    def test_mul_truncates_to_window(self):
        w = ((0, 1),)
        a = TLS(1, {(0,): 1, (1,): 1}, w)
        sq = a.mul(a, window=w)
        assert sq.terms == {(0,): 1, (1,): 2}

    def test_negation_and_subtraction(self):
        w = ((None, None),)
        a = TLS(1, {(1,): 4}, w)
        assert (a - a).is_zero()
        assert (-a).terms == {(1,): -4}


class TestResidues:
    def test_coefficient_extraction_drops_variable(self):
        w = ((None, None), (None, None))
        s = TLS(2, {(-1, 2): 5, (0, 2): 1}, w)
        c = s.coefficient_of(0, -1)
        assert c.nvars == 1
        assert c.terms == {(2,): 5}

    def test_residue_is_coefficient_of_minus_one(self):
        w = ((None, None),)
        s = TLS(1, {(-1,): 3, (-2,): 9}, w)
        assert s.residue(0).scalar() == 3

    def test_residue_linearity(self):
        w = ((None, None),)
        a = TLS(1, {(-1,): 2, (0,): 1}, w)
        b = TLS(1, {(-1,): 5, (3,): 4}, w)
        lhs = (a + b).residue(0).scalar()
        assert lhs == a.residue(0).scalar() + b.residue(0).scalar()

    def test_residue_against_matches_multiply_then_extract(self):
        # state carries negative powers, expansion carries non-negative ones
        wa = ((None, -1), (None, -1))
        wb = ((0, 3), (-4, 0))
        a = TLS(2, {(-1, -1): 1, (-2, -1): 4, (-3, -2): -2}, wa)
        b = TLS(2, {(0, 0): 1, (1, -1): 2, (2, -3): 7}, wb)
        fused = a.residue_against(b, 0)
        full = a.mul(b).coefficient_of(0, -1)
        assert fused.terms == full.terms
        assert fused.nvars == 1

    def test_residue_against_empty_result(self):
        wa = ((None, -1),)
        wb = ((0, 2),)
        a = TLS(1, {(-3,): 1}, wa)
        b = TLS(1, {(0,): 1}, wb)
        assert a.residue_against(b, 0).is_zero()


def test_series_is_not_hashable():
    s = TLS.constant(1, 1)
    with pytest.raises(TypeError):
        hash(s)
