import pytest

from gordonlab.partitions import CountFamily, count, partitions_of, ParameterError
from gordonlab.series import TruncatedSeries, full_product, h_closed_form
from gordonlab.monomials import (
    Monomial, MonomialIdeal, minimalize, gordon_ideal, prime_ideal,
    tail_ideal, block_ideal, ideal_generators, standard_monomial_series,
    hp_via_exact_sequence, h_series,
)


def test_monomial_basics():
    m = Monomial((3, 1, 1))
    assert m.weight == 5
    assert m.degree == 3
    assert m.exps == {3: 1, 1: 2}
    assert Monomial.from_exps({1: 2, 3: 1}) == m
    assert Monomial(()).is_one()
    with pytest.raises(ValueError):
        Monomial((0, 1))


def test_divisibility_and_minimalize():
    a, b = Monomial((1, 1)), Monomial((2, 1, 1))
    assert a.divides(b)
    assert not b.divides(a)
    assert minimalize([a, b, Monomial((2, 2))]) == (a, Monomial((2, 2)))
    assert a.without_one(1) == Monomial((1,))
    assert a.without_one(5) == a


def test_gap_ideal_generators_small_weight():
    gens = {g.parts for g in gordon_ideal(2, 2, 5).generators}
    assert gens == {(1, 1), (2, 1), (2, 2), (3, 2)}


def test_prime_ideal_smallest_generator():
    gens = prime_ideal(2, 2, 6).generators
    assert gens[0] == Monomial((1, 1))


def test_prime_ideal_chain_pattern_r3():
    # each generator is x_c x_{k_1}..x_{k_c} x_{i_1}..x_{i_{k_c}} with
    # c <= k_1 <= ... <= k_c <= i_{k_c} <= ... <= i_1
    for g in prime_ideal(3, 3, 12).generators:
        asc = sorted(g.parts)
        c = asc[0]
        ks = asc[1:1 + c]
        rest = asc[1 + c:]
        assert len(ks) == c
        assert len(rest) == ks[-1]
        assert all(x >= ks[-1] for x in rest)


def test_zero_and_principal_ideals():
    zero = MonomialIdeal([], 10)
    assert standard_monomial_series(zero, 10) == full_product(10)
    principal = MonomialIdeal([Monomial((1,))], 5)
    s = standard_monomial_series(principal, 5)
    assert s.coeffs == (1, 0, 1, 1, 2, 2)
    assert hp_via_exact_sequence(principal, 5) == s


def test_standard_counts_match_partition_families():
    for r in (2, 3):
        for i in range(1, r + 1):
            s = standard_monomial_series(gordon_ideal(r, i, 18), 18)
            sp = standard_monomial_series(prime_ideal(r, i, 18), 18)
            famB = CountFamily("B", r=r, i=i)
            famC = CountFamily("C", r=r, i=i)
            for n in range(19):
                assert s[n] == count(famB, n)
                assert sp[n] == count(famC, n)


def test_two_methods_agree():
    for ideal in (gordon_ideal(3, 2, 16), prime_ideal(2, 2, 16),
                  tail_ideal(3, 2, 2, 16), block_ideal(2, 2, 2, 16)):
        assert (hp_via_exact_sequence(ideal, 16)
                == standard_monomial_series(ideal, 16))


def test_intrinsic_membership_agrees_with_divisibility():
    for r, i in ((2, 1), (3, 3)):
        ideal = prime_ideal(r, i, 12)
        for n in range(13):
            for p in partitions_of(n):
                m = Monomial(p)
                assert ideal.contains(m) == ideal.intrinsic_contains(m)


def test_membership_beyond_bound_raises():
    ideal = gordon_ideal(2, 2, 6)
    with pytest.raises(ValueError):
        ideal.contains(Monomial((7,)))
    with pytest.raises(ValueError):
        standard_monomial_series(ideal, 7)


def test_shifted_ring_series_identities():
    # boundary identities of the tail-ideal series
    for r in (2, 3):
        for k in (1, 2, 3):
            assert h_series(r, 1, k, 15) == h_series(r, r, k + 1, 15)
    # H^d - 1 has valuation >= d
    for r in (2, 3):
        for d in (2, 3, 4):
            diff = h_series(r, r, d, 15) - TruncatedSeries.one(15)
            v = diff.valuation()
            assert v is None or v >= d


def test_tail_sum_lemma():
    for r in (2, 3):
        for k in (1, 2):
            for l in range(1, r + 1):
                lhs = h_series(r, l, k, 18)
                rhs = TruncatedSeries.zero(18)
                for j in range(1, l + 1):
                    rhs = rhs + h_series(r, r - l + j, k + 1, 18).shift((l - j) * k)
                assert lhs == rhs


def test_block_series_matches_closed_form():
    for r in (2, 3):
        for c in (1, 2):
            for m in (1, 2):
                assert (h_series(r, c, m, 16, convention="section7")
                        == h_closed_form(r, c, m, 16))


def test_ideal_constructor_dispatch():
    ideal = ideal_generators("gap", {"r": 2, "i": 2}, 8)
    assert ideal.tag == "gap"
    data = ideal.to_json_dict()
    assert data["generators"][0] == [1, 1]
    with pytest.raises(ParameterError):
        ideal_generators("nope", {}, 5)
    with pytest.raises(ParameterError):
        tail_ideal(3, 4, 1, 10)
