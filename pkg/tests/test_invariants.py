from itertools import permutations
from math import comb

import pytest
from hypothesis import given, strategies as st

from bcmatroid.constructions import complete, graphic, uniform
from bcmatroid.errors import HasLoops, LengthMismatch, TooLarge
from bcmatroid.invariants import (
    FVector, HVector, TutteCache, bc_f_vector, broken_circuits, char_poly_subset_expansion,
    characteristic_polynomial, f_to_h, h_from_characteristic, h_from_tutte, h_polynomial,
    h_to_f, h_vector, tutte, tutte_subset_expansion,
)
from bcmatroid.matroid import LinearOrder, circuit_matroid, direct_sum
from bcmatroid.polynomial import T, BivariatePolynomial

from .strategies import loopless_matroids, matroids


def test_k23_worked_example(k23):
    assert bc_f_vector(k23).entries == (1, 6, 15, 17, 7)
    h = h_vector(k23)
    assert h.full == (1, 2, 3, 1, 0)
    assert h.trimmed == (1, 2, 3, 1)
    assert h.s == 3
    assert h_polynomial(k23) == T ** 4 + 2 * T ** 3 + 3 * T ** 2 + T
    assert characteristic_polynomial(k23) == T ** 4 - 6 * T ** 3 + 15 * T ** 2 - 17 * T + 7


def test_k23_minors(k23):
    assert h_vector(k23.contract([1])).trimmed == (1, 2, 1)
    assert h_vector(k23.delete([1])).trimmed == (1, 1, 1)
    assert h_vector(k23.contract([1, 2])).trimmed == (1,)
    assert h_vector(k23.delete([1, 2])).trimmed == (1, 1, 1)


def test_k23_tutte(k23):
    x = BivariatePolynomial({(1, 0): 1})
    y = BivariatePolynomial({(0, 1): 1})
    expected = x * x * x * x + BivariatePolynomial({(3, 0): 2, (2, 0): 3, (1, 1): 3, (0, 2): 1,
                                                    (1, 0): 1, (0, 1): 1})
    assert tutte(k23) == expected
    assert tutte_subset_expansion(k23) == expected


def test_k4_tutte():
    # x^3 + 3x^2 + 2x + 4xy + 2y + 3y^2 + y^3
    terms = {(3, 0): 1, (2, 0): 3, (1, 0): 2, (1, 1): 4, (0, 1): 2, (0, 2): 3, (0, 3): 1}
    assert tutte(graphic(complete(4))) == BivariatePolynomial(terms)


def test_chromatic_polynomial_of_k4():
    # the graph's chromatic polynomial is t * chi
    chi = characteristic_polynomial(graphic(complete(4)))
    assert chi * T == T * (T - 1) * (T - 2) * (T - 3)


def test_broken_circuits_of_triangle(triangle):
    assert broken_circuits(triangle) == {frozenset({2, 3})}
    order = LinearOrder((3, 2, 1))
    assert broken_circuits(triangle, order) == {frozenset({1, 2})}


def test_loops_are_rejected():
    with pytest.raises(HasLoops):
        bc_f_vector(uniform(0, 2))
    assert h_from_tutte(uniform(0, 2)).is_zero()


def test_circuit_h_vectors_are_all_ones():
    for r in range(1, 9):
        assert h_vector(circuit_matroid(range(r + 1))).trimmed == (1,) * r


def test_uniform_h_vector_closed_form():
    for n in range(1, 9):
        for r in range(1, n):
            expected = tuple(comb(n - r + i - 1, i) for i in range(r)) + (0,)
            assert h_vector(uniform(r, n)).full == expected
        # free matroid: h(t) = t^n
        assert h_vector(uniform(n, n)).full == (1,) + (0,) * n


def test_vector_lengths():
    with pytest.raises(LengthMismatch):
        FVector((1, 2), 2)
    with pytest.raises(LengthMismatch):
        HVector((1,), 1)
    with pytest.raises(LengthMismatch):
        h_to_f((1, 2, 3), 1)
    with pytest.raises(LengthMismatch):
        h_to_f((1, 2))
    with pytest.raises(LengthMismatch):
        f_to_h((1, 2), 3)


def test_short_h_is_padded():
    assert h_to_f((1, 1), 2).entries == (1, 3, 2)


def test_h_call_outside_range():
    h = HVector((1, 2, 0), 2)
    assert h(-1) == 0 and h(5) == 0 and h(1) == 2
    assert h.s == 1


def test_subset_expansion_cap():
    with pytest.raises(TooLarge):
        char_poly_subset_expansion(uniform(2, 21))


@given(st.lists(st.integers(0, 20), min_size=1, max_size=8))
def test_f_h_transforms_are_inverse(seq):
    r = len(seq) - 1
    assert f_to_h(h_to_f(seq, r)).full == tuple(seq)
    assert h_to_f(f_to_h(seq)).entries == tuple(seq)


@given(matroids(max_size=8))
def test_tutte_matches_subset_expansion(M):
    assert tutte(M, TutteCache()) == tutte_subset_expansion(M)


@given(loopless_matroids(max_size=8))
def test_whitney_rota_matches_subset_expansion(M):
    assert characteristic_polynomial(M) == char_poly_subset_expansion(M)


@given(loopless_matroids(max_size=8))
def test_h_routes_agree(M):
    # h_vector itself raises if the f-transform and T(t, 0) disagree
    assert h_polynomial(M) == h_from_characteristic(M)


@given(loopless_matroids(max_size=6), st.randoms(use_true_random=False))
def test_f_vector_is_order_independent(M, rnd):
    ref = bc_f_vector(M)
    labels = list(M.ground)
    for _ in range(10):
        rnd.shuffle(labels)
        assert bc_f_vector(M, LinearOrder(tuple(labels))) == ref


def test_f_vector_every_order_k4():
    M = graphic(complete(4))
    ref = bc_f_vector(M)
    assert all(bc_f_vector(M, LinearOrder(p)) == ref for p in permutations(M.ground))


@given(matroids(max_size=5), matroids(max_size=5))
def test_tutte_multiplies_over_direct_sums(A, B):
    B = B.relabel({x: f"b{x}" for x in B.ground})
    assert tutte(direct_sum(A, B)) == tutte(A) * tutte(B)


@given(matroids(max_size=7))
def test_tutte_duality(M):
    assert tutte(M.dual()) == tutte(M).swap()
