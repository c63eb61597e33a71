from fractions import Fraction
from itertools import combinations_with_replacement, permutations

import pytest
from hypothesis import given, strategies as st

from bcmatroid.constructions import (
    Graph, PrimeFieldMatrix, RationalMatrix, complete, complete_bipartite, cycle_graph,
    family_graphs, graphic, incidence_matrix, linear_prime, linear_rational, uniform, wheel,
)
from bcmatroid.errors import BadParameters, TooLarge
from bcmatroid.matroid import circuit_matroid, satisfies_circuit_axioms

from .strategies import multigraphs


def brute_family_count(m):
    """Connected loopless multigraphs with m edges, by canonical form over all relabellings."""
    seen = set()
    for n in range(2, m + 2):
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        for edges in combinations_with_replacement(pairs, m):
            g = Graph.from_pairs(list(edges), n)
            if g.component_count() != 1:
                continue
            canon = min(tuple(sorted(tuple(sorted((p[u], p[v]))) for u, v in edges))
                        for p in permutations(range(n)))
            seen.add((n, canon))
    return len(seen)


def test_family_counts_against_brute_force():
    counts = [0] * 6
    for g in family_graphs(5):
        counts[len(g.edges)] += 1
    assert counts[1:] == [brute_family_count(m) for m in range(1, 6)]


def test_family_counts_up_to_seven_edges():
    counts = [0] * 8
    for g in family_graphs(7):
        counts[len(g.edges)] += 1
    assert counts[1:] == [1, 2, 5, 12, 33, 103, 333]


def test_family_graphs_connected_and_deterministic():
    a = [g.edges for g in family_graphs(5)]
    assert a == [g.edges for g in family_graphs(5)]
    assert all(g.component_count() == 1 for g in family_graphs(5))


def test_family_graphs_caps():
    with pytest.raises(TooLarge):
        list(family_graphs(13))
    with pytest.raises(BadParameters):
        list(family_graphs(-1))


def test_uniform_errors():
    with pytest.raises(BadParameters):
        uniform(3, 2)
    with pytest.raises(TooLarge):
        uniform(1, 40)


def test_circuit_is_uniform():
    for r in range(1, 6):
        assert uniform(r, r + 1) == circuit_matroid(range(1, r + 2))


def test_graph_validation():
    with pytest.raises(BadParameters):
        Graph(2, ((0, 1, 1), (0, 1, 1)))
    with pytest.raises(BadParameters):
        Graph(2, ((0, 2, 1),))


def test_self_loop_is_a_loop():
    M = graphic(Graph(2, ((0, 0, "x"), (0, 1, "y"))))
    assert M.loops() == {"x"}
    assert M.coloops() == {"y"}


def test_named_graphs():
    K4 = graphic(complete(4))
    assert (K4.size, K4.rank(), len(K4.circuits)) == (6, 3, 7)
    assert graphic(wheel(3)).rank() == 3
    assert graphic(wheel(4)).size == 8
    assert graphic(complete_bipartite(2, 3)).rank() == 4
    assert graphic(cycle_graph(4)) == circuit_matroid([1, 2, 3, 4])
    with pytest.raises(BadParameters):
        wheel(2)


def test_cycle_count_of_k5():
    # K5 has 37 cycles
    assert len(graphic(complete(5)).circuits) == 37


def test_linear_uniform():
    M = linear_rational(RationalMatrix([[1, 0, 1], [0, 1, 1]]))
    assert M == uniform(2, 3)
    assert linear_prime(PrimeFieldMatrix([[1, 0, 1], [0, 1, 1]], 2)) == uniform(2, 3)


def test_fano_is_not_rational():
    cols = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, 0, 1), (0, 1, 1), (1, 1, 1)]
    rows = [[c[i] for c in cols] for i in range(3)]
    fano = linear_prime(PrimeFieldMatrix(rows, 2))
    non_fano = linear_rational(RationalMatrix(rows))
    assert frozenset({4, 5, 6}) in fano.circuits
    assert frozenset({4, 5, 6}) not in non_fano.circuits
    assert satisfies_circuit_axioms(fano)


def test_prime_field_checks():
    with pytest.raises(BadParameters):
        PrimeFieldMatrix([[1]], 4)
    with pytest.raises(BadParameters):
        RationalMatrix([[1, 2], [3]])
    with pytest.raises(TooLarge):
        linear_rational(RationalMatrix([[1] * 20]))


def test_rational_entries():
    M = linear_rational(RationalMatrix([[Fraction(1, 2), 1], [1, 2]]))
    assert M.circuits == {frozenset({1, 2})}


@given(multigraphs(max_edges=8))
def test_graphic_rank_is_vertices_minus_components(g):
    assert graphic(g).rank() == g.n_vertices - g.component_count()


@given(multigraphs(max_edges=7))
def test_incidence_matrix_represents_graph(g):
    M = graphic(g)
    assert linear_rational(incidence_matrix(g)) == M
    # signs vanish mod 2, and cycles are still the dependencies
    rows = [[int(x) % 2 for x in row] for row in incidence_matrix(g, drop_row=None).rows]
    if rows:
        assert linear_prime(PrimeFieldMatrix(rows, 2)) == M


small = st.integers(-2, 2)


@given(st.integers(1, 3).flatmap(
    lambda r: st.integers(0, 7).flatmap(
        lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r))))
def test_rational_and_large_prime_agree(rows):
    # every minor is at most 3! * 2^3 = 48 in absolute value, below 101
    assert linear_rational(RationalMatrix(rows)) == linear_prime(PrimeFieldMatrix(rows, 101))
