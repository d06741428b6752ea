"""Exact verification toolkit for gap-condition partition identities,
their congruence product sides, and the monomial-ideal Hilbert series
that realize them."""

from .partitions import (
    ParameterError,
    CountFamily,
    count,
    gordon_b,
    congruence_a,
    c_predicate,
    new_parts,
    NewPartProfile,
    partitions_of,
    all_partitions,
    andrews_system_check,
)
from .series import (
    TruncatedSeries,
    qpochhammer,
    product_side,
    andrews_gordon_sum,
    q_binomial,
    lemma_qbin_sum,
    double_sum_r3,
    chain_sum_r3,
    conjecture_sum,
    h_closed_form,
)
from .bijections import DomainError, bijection_apply, BIJECTION_NAMES
from .monomials import (
    Monomial,
    MonomialIdeal,
    ideal_generators,
    gordon_ideal,
    prime_ideal,
    tail_ideal,
    block_ideal,
    standard_monomial_series,
    hp_via_exact_sequence,
    h_series,
)
from .recursion import (
    hp_coefficient_table,
    lz_coefficient_table,
    lz_g_series,
    empirical_hypothesis_check,
    convergence_check,
)
from .arcideal import (
    DiffPolynomial,
    derive,
    graded_ideal_spanning_set,
    leading_monomials_at_weight,
    leading_ideal_minimal_generators,
    compare_with_candidate,
)

__version__ = "0.1.0"
