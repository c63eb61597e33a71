from itertools import product

import pytest

from bcmatroid.constructions import Graph, graphic, uniform
from bcmatroid.errors import HasLoops, NegativeCoefficients, PreconditionViolation, UnknownPredicate
from bcmatroid.lab import (
    HCache, LEMMA_CHECKS, check_hbar_deletion_contraction, check_series1, check_series2,
    complementary_from_h, complementary_h, g_from_h, g_vector, h_or_zero, predicate_report,
    product_strongly_flawless_check, series1_terms, split_at, verify_two_sum,
)
from bcmatroid.matroid import circuit_matroid
from bcmatroid.polynomial import IntPolynomial
from bcmatroid.sequences import is_strongly_flawless

# three internally disjoint paths of lengths 2, 2 and 3 between vertices 0 and 4
THETA = Graph.from_pairs([(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 5), (4, 5)])


def test_k23_complementary_and_g(k23):
    assert complementary_h(k23).entries == (0, 1)
    assert g_vector(k23).entries == (1, 1)
    S = frozenset({1, 2})
    assert complementary_h(k23.contract([1])).entries == (0, 0)
    assert h_or_zero(k23.contract(S)).trimmed == (1,)


def test_loopy_conventions():
    M = uniform(0, 3)
    assert complementary_h(M).entries == (0,)
    assert h_or_zero(M).full == (0,)
    with pytest.raises(HasLoops):
        g_vector(M)


def test_complementary_and_g_from_h():
    hb = complementary_from_h((1, 2, 3, 3, 1))
    assert hb.entries == (0, 1, 0) and hb.s == 4
    assert hb(7) == 0 and hb.is_nonnegative()
    assert g_from_h((1, 3, 4, 2)).entries == (1, 2)


def test_predicate_report():
    rep = predicate_report((1, 2, 3, 1), ["strongly-flawless", "o-sequence", "unimodal-flawless"])
    assert rep.ok
    rep = predicate_report((2, 1), ["flawless"])
    assert rep.outcomes == {"flawless": False} and rep.first_violation == {"flawless": 0}
    with pytest.raises(UnknownPredicate):
        predicate_report((1,), ["pretty"])


def test_product_check_errors():
    with pytest.raises(NegativeCoefficients):
        product_strongly_flawless_check(IntPolynomial([1, -1]), IntPolynomial([1]))
    with pytest.raises(ValueError):
        product_strongly_flawless_check(IntPolynomial(), IntPolynomial([1]))


def test_product_of_strongly_flawless_small_grid():
    seqs = [a for n in range(1, 4) for a in product(range(3), repeat=n)
            if a[0] and a[-1] and is_strongly_flawless(a)]
    for a in seqs:
        for b in seqs:
            phi = IntPolynomial.from_descending(a, 1)
            psi = IntPolynomial.from_descending(b)
            assert product_strongly_flawless_check(phi, psi)


def test_series1_on_k23(k23):
    cache = HCache()
    for S in k23.removable_series_classes():
        for e in S:
            assert check_series1(k23, S, e, cache).ok


def test_series1_preconditions(k23):
    with pytest.raises(PreconditionViolation, match="not in S"):
        check_series1(k23, {1, 2}, 3)
    with pytest.raises(PreconditionViolation, match="series class"):
        check_series1(k23, {1, 3}, 1)
    with pytest.raises(PreconditionViolation, match="connected"):
        check_series1(k23.delete([1]), {2}, 2)


def test_series1_boundary_index_on_theta_graph():
    # h = (1,2,3,3,1): the truncated and unrestricted readings differ at i = s/2
    M = graphic(THETA)
    S = frozenset({3, 6, 7})
    assert S in M.removable_series_classes()
    lhs, rhs = series1_terms(M, S, 3)
    assert lhs == [0, 1, 0] and rhs == [0, 1, 1]
    assert check_series1(M, S, 3).first_violation["series1"] == 2
    assert check_series1(M, S, 3, convention="unrestricted").ok


def test_series2_on_k23_and_theta(k23):
    for M in (k23, graphic(THETA)):
        for S in M.series_classes():
            for e in S:
                rep = check_series2(M, S, e)
                assert rep.ok, rep.to_dict()


def test_series2_circuit_class():
    # S is the whole matroid, so M/S is loopy and contributes zero
    M = circuit_matroid([1, 2, 3, 4])
    assert check_series2(M, {1, 2, 3, 4}, 1).ok


def test_hbar_deletion_contraction_needs_connected_minors(k23):
    with pytest.raises(PreconditionViolation):
        check_hbar_deletion_contraction(k23, 1)


def test_two_sum_degenerate_circuit():
    tally = verify_two_sum(circuit_matroid([1, 2, 3]))
    assert tally.ok and tally.checked == 1


def test_split_at():
    # two triangles sharing edge 3: contracting 3 separates them
    M = graphic(Graph.from_pairs([(0, 1), (1, 2), (0, 2), (0, 3), (3, 2)]))
    M1, M2 = split_at(M, 3)
    assert {M1.size, M2.size} == {3}
    assert split_at(M, 1) is None


@pytest.mark.parametrize("name", sorted(set(LEMMA_CHECKS) - {"series1"}))
def test_lemma_checks_pass_on_small_corpus(name, small_corpus):
    cache = HCache()
    for ident, M in small_corpus:
        tally = LEMMA_CHECKS[name](M, cache)
        assert tally.ok, (ident, tally.failures[:2])


def test_series1_small_corpus_passes(small_corpus):
    # the boundary failures need at least seven elements
    cache = HCache()
    assert all(LEMMA_CHECKS["series1"](M, cache).ok for _, M in small_corpus)
