"""Hypothesis strategies for small matroids."""
from hypothesis import strategies as st

from bcmatroid.constructions import Graph, PrimeFieldMatrix, graphic, linear_prime, uniform


@st.composite
def multigraphs(draw, max_vertices=5, max_edges=8, loops=False):
    n = draw(st.integers(1, max_vertices))
    pair = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
    if not loops:
        pair = pair.filter(lambda p: p[0] != p[1]) if n > 1 else st.nothing()
    pairs = draw(st.lists(pair, max_size=max_edges)) if n > 1 or loops else []
    return Graph.from_pairs(pairs, n)


@st.composite
def gf_matrices(draw, p=3, max_rows=3, max_cols=7):
    rows = draw(st.integers(1, max_rows))
    cols = draw(st.integers(0, max_cols))
    entries = st.lists(st.integers(0, p - 1), min_size=cols, max_size=cols)
    return PrimeFieldMatrix(draw(st.lists(entries, min_size=rows, max_size=rows)), p)


def matroids(max_size=8, loops=True):
    """Graphic, GF(3)-linear and uniform matroids on at most ``max_size`` elements."""
    g = multigraphs(max_edges=max_size, loops=loops).map(graphic)
    lin = gf_matrices(max_cols=min(max_size, 7)).map(linear_prime)
    if not loops:
        lin = lin.filter(lambda M: not M.has_loops())
    uni = st.integers(1, max_size).flatmap(
        lambda n: st.integers(0 if loops else 1, n).map(lambda r: uniform(r, n)))
    return st.one_of(g, lin, uni)


def loopless_matroids(max_size=8):
    return matroids(max_size, loops=False)
