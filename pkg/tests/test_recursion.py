import pytest

from gordonlab.partitions import ParameterError
from gordonlab.series import TruncatedSeries, product_side
from gordonlab.recursion import (
    hp_coefficient_table, lz_coefficient_table, lz_g_series,
    empirical_hypothesis_check, hp_expansion_check, lz_expansion_check,
    convergence_check,
)


def test_initial_entries():
    tab = hp_coefficient_table(2, 2, 2, 6)
    assert tab[(1, 2)].coeffs == (1, 1, 0, 0, 0, 0, 0)
    # second row carries the q^{2(j-1)} prefactor
    assert tab[(2, 2)].coeffs == (0, 0, 1, 0, 0, 0, 0)
    lz = lz_coefficient_table(2, 1, 2, 6)
    assert lz[(1, 2)] == tab[(1, 2)]


def test_tables_coincide_under_index_swap():
    for r in (2, 3, 4):
        for i in range(1, r + 1):
            a = lz_coefficient_table(r, r + 1 - i, 5, 20)
            b = hp_coefficient_table(r, i, 5, 20)
            for j in range(1, r + 1):
                for d in range(2, 6):
                    assert a[(j, d)] == b[(j, d)]


def test_entry_valuations():
    tab = hp_coefficient_table(3, 3, 6, 25)
    for j in range(1, 4):
        for d in range(2, 7):
            v = tab[(j, d)].valuation()
            assert v is None or v >= (j - 1) * d


def test_g_series_base_cases():
    G = lz_g_series(3, 5, 15)
    for l in range(1, 4):
        assert G[l] == product_side(3, 4 - l, 15)


def test_ladder_divisibility_and_limit():
    # every ladder step divides exactly and the entries approach 1
    for r in (2, 3):
        G = lz_g_series(r, 4 * (r - 1) + r, 12)
        one = TruncatedSeries.one(12)
        for d in (2, 3, 4):
            t = (r - 1) * d + 1
            v = (G[t] - one).valuation()
            assert v is None or v >= d + 1


def test_empirical_hypothesis_small():
    for r in (2, 3, 4):
        rep = empirical_hypothesis_check(r, 5, 16)
        assert rep["status"] == "pass", rep["failures"]


def test_expansion_identities():
    for r in (2, 3):
        for i in range(1, r + 1):
            assert hp_expansion_check(r, i, 3, 15)
            assert hp_expansion_check(r, i, 4, 15)
            assert lz_expansion_check(r, r + 1 - i, 2, 15)
            assert lz_expansion_check(r, r + 1 - i, 3, 15)


def test_convergence_report():
    rep = convergence_check(2, 2, 18, 15)
    assert rep["status"] == "pass", rep["mismatches"]
    rep = convergence_check(3, 1, 18, 15)
    assert rep["status"] == "pass", rep["mismatches"]


def test_parameter_validation():
    with pytest.raises(ParameterError):
        hp_coefficient_table(1, 1, 4, 10)
    with pytest.raises(ParameterError):
        lz_coefficient_table(3, 2, 1, 10)
    with pytest.raises(ParameterError):
        lz_g_series(3, 2, 10)  # t_max < r
    with pytest.raises(ParameterError):
        hp_expansion_check(3, 1, 2, 10)  # d too small
