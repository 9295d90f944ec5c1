import pytest

from qcap.partitions import ALL_CONFIGS, GapConfig, brute_force_series
from qcap.qdiff import (
    M,
    build_F_H,
    combined_recurrence_check,
    delta_closed,
    delta_seq,
    ell_sum_stages,
    finite_C,
    finite_C_table,
    gamma_seq,
    lemma_eval,
    limit_chain,
    qdiff_residual,
    theorem_rhs,
)
from qcap.series import QSeries, ZPoly, pochhammer_infinite
from qcap.theta import ThetaSpec, theta_sum

ORDER = 30
ids = [c.label for c in ALL_CONFIGS]


def S(terms, order=ORDER):
    return QSeries.from_terms(terms, order)


def one_minus_q3_inv(order=ORDER):
    return S([(1, 0, 0), (-1, 0, 3)], order).inv()


class TestFiniteC:
    @pytest.mark.parametrize("cfg", ALL_CONFIGS, ids=ids)
    def test_c4(self, cfg):
        a, b = cfg.alpha, cfg.beta
        assert finite_C(cfg, 4, ORDER) == S([(1, 0, 0), (a, 1, 1), (b, -1, 2), (1, 0, 3), (1, 1, 4), (b, 0, 6)])

    @pytest.mark.parametrize("cfg", ALL_CONFIGS, ids=ids)
    def test_c_minus_two(self, cfg):
        assert finite_C(cfg, -2, ORDER) == QSeries.constant(cfg.beta, ORDER)

    def test_c_minus_one_undefined(self):
        with pytest.raises(ValueError):
            finite_C(GapConfig(), -1, ORDER)
        with pytest.raises(ValueError):
            finite_C(GapConfig(), -3, ORDER)

    def test_c10_vs_enumeration(self):
        cfg = GapConfig(1, 1)
        assert finite_C(cfg, 10, ORDER) == brute_force_series(cfg, 10, ORDER)

    @pytest.mark.parametrize("cfg", ALL_CONFIGS, ids=ids)
    def test_combined_recurrence(self, cfg):
        assert combined_recurrence_check(cfg, 2, ORDER)
        for n in range(3, 8):
            assert combined_recurrence_check(cfg, n, ORDER)

    def test_combined_recurrence_detects_perturbation(self):
        cfg = GapConfig(0, 1)
        n = 4
        table = finite_C_table(cfg, 3 * n + 1, ORDER)
        table[3 * n - 2] = table[3 * n - 2] + S([(1, 2, 11)])
        assert not combined_recurrence_check(cfg, n, ORDER, table)

    def test_combined_recurrence_domain(self):
        with pytest.raises(ValueError):
            combined_recurrence_check(GapConfig(), 1, ORDER)


class TestGammaDelta:
    @pytest.mark.parametrize("cfg", ALL_CONFIGS, ids=ids)
    def test_initial_values(self, cfg):
        g = gamma_seq(cfg, 3, ORDER)
        assert g[0] == QSeries.constant(cfg.beta, ORDER)
        assert g[1] == S([(1, 0, 0), (cfg.alpha, 1, 1)]) * one_minus_q3_inv()
        d = delta_seq(cfg, 3, ORDER)
        assert d[0] == QSeries.constant(cfg.beta, ORDER)
        assert d[1] == S([(1 - cfg.beta, 0, 0), (cfg.alpha, 1, 1)]) * one_minus_q3_inv()

    @pytest.mark.parametrize("cfg", ALL_CONFIGS, ids=ids)
    def test_closed_forms_at_zero(self, cfg):
        assert delta_closed(cfg, 0, ORDER) == QSeries.constant(cfg.beta, ORDER)
        assert delta_closed(cfg, 0, ORDER, odd=True) == \
            S([(1 - cfg.beta, 0, 0), (cfg.alpha, 1, 1)]) * one_minus_q3_inv()

    def test_closed_vs_recurrence_n3(self):
        cfg = GapConfig(0, 0)
        seq = delta_seq(cfg, 7, ORDER)
        assert delta_closed(cfg, 3, ORDER) == seq[6]
        assert delta_closed(cfg, 3, ORDER, odd=True) == seq[7]


class TestFH:
    @pytest.mark.parametrize("cfg", ALL_CONFIGS, ids=ids)
    def test_build_and_tie(self, cfg):
        F, H = build_F_H(cfg, 6, ORDER)
        assert H[0] == QSeries.constant(cfg.beta, ORDER)
        assert F[1] == gamma_seq(cfg, 1, ORDER)[1]

    def test_degree_too_small(self):
        with pytest.raises(ValueError):
            build_F_H(GapConfig(), 2, ORDER)

    @pytest.mark.parametrize("which", ["F", "H"])
    @pytest.mark.parametrize("cfg", ALL_CONFIGS, ids=ids)
    def test_residual_vanishes(self, which, cfg):
        res = qdiff_residual(which, cfg, 8, ORDER)
        for n in range(7):
            assert res[n].is_zero(), (which, n)

    def test_residual_sees_a_bad_F(self):
        cfg = GapConfig(0, 1)
        F, _ = build_F_H(cfg, 6, ORDER)
        bad = ZPoly([F[0], F[1] + S([(1, 0, 5)]), *F.zcoeffs[2:]], F.degree)
        res = qdiff_residual("F", cfg, 6, ORDER, series=bad)
        assert not all(res[n].is_zero() for n in range(5))

    def test_unknown_equation(self):
        with pytest.raises(ValueError):
            qdiff_residual("G", GapConfig(), 4, ORDER)


class TestLemma:
    @pytest.mark.parametrize("cfg", ALL_CONFIGS, ids=ids)
    def test_small_n(self, cfg):
        assert lemma_eval(cfg, 0, ORDER) == QSeries.constant(cfg.beta, ORDER)
        assert lemma_eval(cfg, 1, ORDER) == S([(1, 0, 0), (cfg.alpha, 1, 1)])

    @pytest.mark.parametrize("cfg", ALL_CONFIGS, ids=ids)
    def test_vs_recurrence(self, cfg):
        for n in range(2, 7):
            assert lemma_eval(cfg, n, ORDER) == finite_C(cfg, 3 * n - 2, ORDER)

    def test_negative_n(self):
        with pytest.raises(ValueError):
            lemma_eval(GapConfig(), -1, ORDER)


class TestLimit:
    @pytest.mark.parametrize("cfg", ALL_CONFIGS, ids=ids)
    def test_chain(self, cfg):
        ch = limit_chain(cfg, ORDER)
        assert ch.C0_raw == ch.C0_final
        assert ch.C1_raw == ch.C1_final
        assert ch.C0_final + ch.C1_final == ch.theorem_rhs

    def test_c2_specialization(self):
        expected = theta_sum(ThetaSpec(M(1, 1, 4), 6), ORDER) * pochhammer_infinite(M(1, 0, 3), 3, ORDER).inv()
        assert theorem_rhs(GapConfig(0, 1), ORDER) == expected

    def test_stabilization(self):
        cfg = GapConfig(1, 1)
        n = 6
        a = finite_C(cfg, 3 * n - 2, 3 * (n - 2) + 1)
        b = finite_C(cfg, 3 * n + 4, 3 * (n - 2) + 1)
        assert a == b

    def test_lemma_at_20(self):
        for cfg in ALL_CONFIGS:
            assert lemma_eval(cfg, 20, 41) == theorem_rhs(cfg, 41)

    @pytest.mark.parametrize("parity", [0, 1])
    def test_stages_agree(self, parity):
        stages = ell_sum_stages(parity, ORDER)
        first = stages[0][1]
        for name, s in stages[1:]:
            assert s == first, name

    def test_order_too_small(self):
        with pytest.raises(ValueError):
            limit_chain(GapConfig(), 3)
