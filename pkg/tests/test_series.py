import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qcap.series import (
    Monomial,
    QSeries,
    TLaurent,
    WindowError,
    ZPoly,
    format_term,
    pochhammer_finite,
    pochhammer_infinite,
    qbinomial,
    qbinomial_poly,
    qs_add,
    qs_inv,
    qs_mul,
    qs_substitute_q,
    zpoly_scale_z,
)

ORDER = 8

coeff_dicts = st.dictionaries(st.integers(-3, 3), st.integers(-5, 5), max_size=3)
series = st.lists(coeff_dicts, min_size=ORDER, max_size=ORDER).map(lambda cs: QSeries(cs, 0, ORDER))


def S(terms, order=ORDER, lo=0):
    return QSeries.from_terms(terms, order, lo)


def q_poly(coeffs, order=ORDER):
    return QSeries(coeffs, 0, order)


class TestMonomial:
    def test_zero_is_canonical(self):
        assert Monomial(0, 3, 5) == Monomial(0, 0, 0)

    def test_inverse_and_powers(self):
        m = Monomial(-1, 2, 3)
        assert m * m.inverse() == Monomial(1, 0, 0)
        assert m ** -2 == Monomial(1, -4, -6)

    def test_non_unit_has_no_inverse(self):
        with pytest.raises(ArithmeticError):
            Monomial(2, 1, 1).inverse()


class TestTLaurent:
    def test_no_stored_zeros(self):
        a = TLaurent({1: 2, 0: 1})
        b = TLaurent({1: -2})
        assert (a + b).items() == [(0, 1)]

    def test_at_one(self):
        assert TLaurent({-1: 2, 3: -5}).at_one() == -3


@pytest.mark.parametrize("args,text", [
    ((1, 0, 0), "1"),
    ((1, 1, 1), "t q"),
    ((1, -1, 2), "t^-1 q^2"),
    ((-1, 1, 0), "-t"),
    ((3, 0, 4), "3 q^4"),
    ((-2, 2, 1), "-2 t^2 q"),
])
def test_format_term(args, text):
    assert format_term(*args) == text


class TestQSeriesExamples:
    def test_add_cancellation(self):
        assert qs_add(S([(1, 0, 0), (1, 1, 1)]), S([(1, 0, 0), (-1, 1, 1)])) == QSeries.constant(2, ORDER)

    def test_add_zero(self):
        s = S([(1, 0, 0), (4, -2, 3)])
        assert s + QSeries.zero(ORDER) == s

    def test_add_initial_value(self):
        c1 = S([(1, 0, 0), (1, 1, 1)])
        assert c1 + S([(1, -1, 2)]) == S([(1, 0, 0), (1, 1, 1), (1, -1, 2)])

    def test_mul_difference_of_squares(self):
        a, b = S([(1, 0, 0), (1, 1, 1)]), S([(1, 0, 0), (-1, 1, 1)])
        assert qs_mul(a, b) == S([(1, 0, 0), (-1, 2, 2)])

    def test_mul_one(self):
        s = S([(1, 0, 0), (4, -2, 3)])
        assert s * QSeries.one(ORDER) == s

    def test_mul_hand_expansion(self):
        assert q_poly([1, 1]) * q_poly([1, 0, 1]) == q_poly([1, 1, 1, 1])

    def test_inv_geometric(self):
        assert qs_inv(q_poly([1, -1])) == q_poly([1] * ORDER)
        assert qs_inv(QSeries.one(ORDER)) == QSeries.one(ORDER)
        assert qs_inv(q_poly([1, 0, 0, -1], 10)) == q_poly([1, 0, 0, 1, 0, 0, 1, 0, 0, 1], 10)

    def test_substitute_q(self):
        assert qs_substitute_q(q_poly([1, 1]), 6, 10) == S([(1, 0, 0), (1, 0, 6)], 10)
        s = S([(2, 1, 1), (1, -1, 3)])
        assert qs_substitute_q(s, 1) == s
        assert qs_substitute_q(q_poly([1, -1, 1]), 3, 9) == S([(1, 0, 0), (-1, 0, 3), (1, 0, 6)], 9)

    def test_truncation_to_min_order(self):
        assert (q_poly([1, 1], 5) + q_poly([1], 3)).order == 3
        assert (q_poly([1, 1], 5) * q_poly([1], 3)).order == 3

    def test_negative_window_product(self):
        a = S([(1, -1, -4), (1, 0, 0)], 10, -4)
        b = S([(1, 0, 0)], 10)
        p = a * b
        assert (p.lo, p.order) == (-4, 6)

    def test_getitem_outside_window(self):
        s = q_poly([1, 2, 3], 3)
        assert s[-5] == TLaurent()
        with pytest.raises(WindowError):
            s[3]

    def test_first_difference_is_minimal(self):
        a = S([(1, 0, 0), (1, 2, 3), (1, -1, 5)])
        b = S([(1, 0, 0), (2, 2, 3), (1, -3, 3)])
        assert a.first_difference(b) == (3, -3, 0, 1)

    def test_empty_window_rejected(self):
        with pytest.raises(WindowError):
            QSeries.zero(0)

    def test_inv_needs_unit_leading_term(self):
        with pytest.raises(ArithmeticError):
            q_poly([2, 1]).inv()


class TestRingAxioms:
    @given(series, series, series)
    @settings(max_examples=60, deadline=None)
    def test_add_associative(self, a, b, c):
        assert (a + b) + c == a + (b + c)

    @given(series, series, series)
    @settings(max_examples=60, deadline=None)
    def test_distributive(self, a, b, c):
        assert a * (b + c) == a * b + a * c

    @given(series, series)
    @settings(max_examples=60, deadline=None)
    def test_mul_commutative(self, a, b):
        assert a * b == b * a

    @given(series, series, series)
    @settings(max_examples=40, deadline=None)
    def test_mul_associative(self, a, b, c):
        assert (a * b) * c == a * (b * c)

    @given(series)
    @settings(max_examples=60, deadline=None)
    def test_coefficients_stay_integers(self, a):
        for _, _, c in (a * a - a).terms():
            assert type(c) is int and c != 0


def test_inv_round_trip_200_random():
    rng = random.Random(20)
    for _ in range(200):
        order = rng.randint(1, 15)
        lead = Monomial(rng.choice((1, -1)), rng.randint(-3, 3), 0)
        terms = [(lead.coeff, lead.t_exp, 0)]
        terms += [(rng.randint(-4, 4), rng.randint(-3, 3), rng.randint(1, order)) for _ in range(5)]
        a = QSeries.from_terms(terms, order)
        assert a * a.inv() == QSeries.one(order)


def test_inv_with_shifted_leading_term():
    a = S([(-1, 1, 2), (1, 0, 3)], 10)
    b = a.inv()
    assert b.lo == -2
    assert (a * b).first_difference(QSeries.one(a.order)) is None


class TestPochhammer:
    def test_empty(self):
        assert pochhammer_finite(Monomial(1, 1, 1), 1, 0, ORDER) == QSeries.one(ORDER)

    def test_hand_expansions(self):
        assert pochhammer_finite(Monomial(-1, 0, 1), 1, 2, ORDER) == q_poly([1, 1, 1, 1])
        assert pochhammer_finite(Monomial(-1, -1, 2), 6, 1, ORDER) == S([(1, 0, 0), (1, -1, 2)])

    def test_pentagonal(self):
        assert pochhammer_infinite(Monomial(1, 0, 1), 1, 6) == q_poly([1, -1, -1, 0, 0, 1], 6)

    def test_beyond_window(self):
        assert pochhammer_infinite(Monomial(3, 1, 9), 2, 9) == QSeries.one(9)

    def test_neg_q3(self):
        assert pochhammer_infinite(Monomial(-1, 0, 3), 3, 7) == S([(1, 0, 0), (1, 0, 3), (1, 0, 6)], 7)


class TestQBinomial:
    def test_examples(self):
        assert qbinomial(5, 0, 1, ORDER) == QSeries.one(ORDER)
        assert qbinomial(2, 1, 1, ORDER) == q_poly([1, 1])

    def test_m_greater_than_n(self):
        with pytest.raises(ValueError):
            qbinomial_poly(2, 3)

    @pytest.mark.parametrize("n", range(0, 14))
    def test_symmetry_and_pascal(self, n):
        for m in range(n + 1):
            assert qbinomial_poly(n, m) == qbinomial_poly(n, n - m)
            if 0 < m < n:
                a = list(qbinomial_poly(n - 1, m))
                b = [0] * (n - m) + list(qbinomial_poly(n - 1, m - 1))
                size = max(len(a), len(b))
                total = [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(size)]
                while total and total[-1] == 0:
                    total.pop()
                assert tuple(total) == qbinomial_poly(n, m)

    @pytest.mark.parametrize("modulus", [1, 3])
    def test_limit(self, modulus):
        order = 30
        for m in range(9):
            n = order // modulus + m
            assert qbinomial(n, m, modulus, order) == \
                pochhammer_finite(Monomial(1, 0, modulus), modulus, m, order).inv()

    def test_big_integers(self):
        top = max(qbinomial_poly(120, 60))
        assert top > 2 ** 63


class TestZPoly:
    def test_scale_examples(self):
        one = QSeries.one(20)
        p = ZPoly([one, one, one])
        expected = ZPoly([one, S([(1, 0, 6)], 20), S([(1, 0, 12)], 20)])
        assert zpoly_scale_z(p, 6) == expected
        assert zpoly_scale_z(p, 0) == p
        z = ZPoly([QSeries.zero(20), one])
        assert z.scale_z(3)[1] == S([(1, 0, 3)], 20)

    def test_common_window(self):
        p = ZPoly([q_poly([1], 5), S([(1, 0, -1)], 8, -1)])
        assert all((c.lo, c.order) == (-1, 5) for c in p.zcoeffs)
