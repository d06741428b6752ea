import pytest

from gordonlab.partitions import CountFamily, count, all_partitions, ParameterError
from gordonlab.monomials import Monomial, gordon_ideal, prime_ideal
from gordonlab.arcideal import (
    DiffPolynomial, derive, graded_ideal_spanning_set, weight_basis,
    order_key, leading_monomials_at_weight, standard_monomials_at_weight,
    leading_ideal_minimal_generators, compare_with_candidate,
)


def x1_squared():
    return DiffPolynomial.variable_power(1, 2)


def test_derive_examples():
    f = x1_squared()
    assert derive(f, 0) == f
    assert derive(f, 1) == DiffPolynomial({Monomial((2, 1)): 2})
    assert derive(f, 2) == DiffPolynomial({Monomial((2, 2)): 2,
                                           Monomial((3, 1)): 2})


def test_derivation_raises_weight_by_one():
    f = DiffPolynomial.variable_power(1, 3)
    for j in range(6):
        assert derive(f, j).weight() == 3 + j


def test_spanning_set_small():
    span = graded_ideal_spanning_set(2, 3)
    assert len(span) == 2
    polys = {frozenset(p.terms.items()) for _, p in span}
    assert frozenset({(Monomial((1, 1, 1)), 1)}) in polys      # x1 * x1^2
    assert frozenset({(Monomial((2, 1)), 2)}) in polys         # D(x1^2)
    assert {p.weight() for _, p in span} == {3}
    assert graded_ideal_spanning_set(2, 1) == []


def test_order_keys_are_total_orders():
    for order in ("wlex", "wrevlex"):
        basis = weight_basis(6, order)
        keys = [order_key(m, order, 6) for m in basis]
        assert keys == sorted(keys, reverse=True)
        assert len(set(keys)) == len(keys)


def test_wlex_vs_wrevlex_disagree_where_expected():
    # x1 x3 vs x2^2 at weight 4: lex prefers the x1-divisible monomial,
    # revlex ranks it below
    a, b = Monomial((3, 1)), Monomial((2, 2))
    assert order_key(a, "wlex", 4) > order_key(b, "wlex", 4)
    assert order_key(a, "wrevlex", 4) < order_key(b, "wrevlex", 4)


def test_single_generator_weight():
    assert leading_monomials_at_weight(2, 2, "wlex") == {Monomial((1, 1))}
    assert leading_monomials_at_weight(2, 2, "wrevlex") == {Monomial((1, 1))}


def test_rank_nullity_per_weight():
    for r in (2, 3):
        for n in range(r, 11):
            basis = weight_basis(n, "wlex")
            for order in ("wlex", "wrevlex"):
                leads = leading_monomials_at_weight(r, n, order)
                std = standard_monomials_at_weight(r, n, order)
                assert len(leads) + len(std) == len(basis)


def test_revlex_matches_pattern_ideal():
    for r in (2, 3):
        computed = set(leading_ideal_minimal_generators(r, 10, "wrevlex"))
        oracle = set(gordon_ideal(r, r, 10).generators)
        assert computed == oracle


def test_counts_order_independent_and_match_gap_family():
    for r in (2, 3):
        fam = CountFamily("B", r=r, i=r)
        for n in range(11):
            a = len(standard_monomials_at_weight(r, n, "wlex"))
            b = len(standard_monomials_at_weight(r, n, "wrevlex"))
            assert a == b == count(fam, n)


def test_determinism():
    one = leading_monomials_at_weight(2, 9, "wlex")
    two = leading_monomials_at_weight(2, 9, "wlex")
    assert one == two


def test_candidate_comparison_r2():
    rep = compare_with_candidate(2, 10, "wlex", prime_ideal(2, 2, 10))
    assert rep["candidate_only"] == []
    assert rep["computed_only"] == []
    assert rep["shared"]


def test_parameter_validation():
    with pytest.raises(ParameterError):
        graded_ideal_spanning_set(1, 5)
    with pytest.raises(ParameterError):
        leading_ideal_minimal_generators(3, 2, "wlex")
    with pytest.raises(ParameterError):
        order_key(Monomial((1,)), "nope", 1)
    with pytest.raises(ParameterError):
        derive(x1_squared(), -1)
