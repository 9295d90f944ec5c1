import pytest

from qcap.partitions import (
    ALL_CONFIGS,
    GapConfig,
    Partition,
    brute_force_series,
    count_c2star,
    count_cm,
    count_dj,
    count_series,
    enumerate_gap_partitions,
    enumerate_partitions,
    is_level3_gap,
    is_level3_multiplicity,
    partition_number,
)
from qcap.series import QSeries


def P(*parts):
    return Partition(tuple(parts))


def test_partition_validation():
    with pytest.raises(ValueError):
        P(1, 3)
    with pytest.raises(ValueError):
        P(2, 0)


def test_partition_statistics():
    lam = P(7, 5, 4, 2, 1)
    assert lam.size == 19
    assert (lam.nu(1), lam.nu(2)) == (3, 2)
    assert lam.t_statistic == 1
    assert (lam.psi(1), lam.psi(2), lam.psi(3)) == (1, 1, 0)


def test_config_labels_and_weights():
    assert [c.label for c in ALL_CONFIGS] == ["C1", "C2", "C2star", "C3"]
    assert GapConfig(0, 1).weight(P(4, 1)) == 0
    assert GapConfig(1, 0).weight(P(4, 1)) == 1
    assert GapConfig(1, 0).weight(P(5, 2)) == 0
    with pytest.raises(ValueError):
        GapConfig(2, 0)


@pytest.mark.parametrize("lam,gap,mult", [
    (P(), True, True),
    (P(4, 2), True, True),
    (P(8, 5), False, False),
    (P(3, 1), False, False),
    (P(3, 3), False, False),
    (P(6, 3), True, True),
    (P(7, 4), False, False),
    (P(9, 5, 1), True, True),
])
def test_gap_examples(lam, gap, mult):
    assert is_level3_gap(lam) is gap
    assert is_level3_multiplicity(lam) is mult


def test_formulations_agree_up_to_24():
    # the full n <= 40 sweep lives in the acceptance suite
    for n in range(25):
        for lam in enumerate_partitions(n):
            assert is_level3_gap(lam) == is_level3_multiplicity(lam), lam


def test_enumerate_partitions_counts():
    assert list(enumerate_partitions(0)) == [P()]
    assert len(list(enumerate_partitions(4))) == 5
    assert sum(1 for _ in enumerate_partitions(40)) == 37338
    assert partition_number(40) == 37338
    assert len(list(enumerate_partitions(10, 3))) == 14


def test_gap_enumerator_matches_filtered_listing():
    listed = sorted(lam.parts for n in range(20) for lam in enumerate_partitions(n) if is_level3_gap(lam))
    pruned = sorted(lam.parts for lam in enumerate_gap_partitions(20))
    assert listed == pruned


def test_count_examples():
    assert count_cm(2, 0) == 1
    assert count_cm(2, 5) == 1
    assert count_dj(1, 0) == 1
    assert count_dj(1, 5) == 1
    with pytest.raises(ValueError):
        count_dj(3, 4)


def test_count_cm_matches_listing():
    for m in (1, 2, 3):
        for n in range(25):
            listed = sum(1 for lam in enumerate_partitions(n)
                         if is_level3_gap(lam) and all(p >= m for p in lam.parts))
            assert count_cm(m, n) == listed


def test_monotonicity():
    for n in range(61):
        assert count_cm(3, n) <= count_cm(2, n) <= count_cm(1, n)


def test_c2star_relation_small():
    for n in range(30):
        assert count_c2star(n) == count_cm(1, n) - count_cm(2, n) + count_cm(3, n)


class TestBruteForceSeries:
    def test_initial_values(self):
        c11 = GapConfig(1, 1)
        assert brute_force_series(c11, 1, 10) == QSeries.from_terms([(1, 0, 0), (1, 1, 1)], 10)
        assert brute_force_series(c11, 4, 10) == QSeries.from_terms(
            [(1, 0, 0), (1, 1, 1), (1, -1, 2), (1, 0, 3), (1, 1, 4), (1, 0, 6)], 10)
        assert brute_force_series(GapConfig(1, 0), 4, 10) == QSeries.from_terms(
            [(1, 0, 0), (1, 1, 1), (1, 0, 3), (1, 1, 4)], 10)

    def test_t_exponents_bounded_by_size(self):
        s = brute_force_series(GapConfig(1, 1), None, 40)
        for q, t, _ in s.terms():
            assert -q <= t <= q

    @pytest.mark.parametrize("cfg,m", [(GapConfig(1, 1), 1), (GapConfig(0, 1), 2), (GapConfig(0, 0), 3)])
    def test_specialization_at_t1(self, cfg, m):
        order = 40
        s = brute_force_series(cfg, None, order)
        assert count_series(s.at_t1()) == count_series([count_cm(m, n) for n in range(order)])

    def test_bad_order(self):
        with pytest.raises(ValueError):
            brute_force_series(GapConfig(), None, 0)
