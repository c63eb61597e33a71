"""Concrete matroid families: uniform, graphic and linear (over Q or GF(p))."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterator, Sequence

import networkx as nx

from .errors import BadParameters, TooLarge
from .matroid import MAX_GROUND, Matroid, from_circuits, minimal_masks


def uniform(r: int, n: int) -> Matroid:
    """U_{r,n} on labels 1..n: every (r+1)-subset is a circuit."""
    if not 0 <= r <= n:
        raise BadParameters(f"need 0 <= r <= n, got r={r}, n={n}")
    if n > MAX_GROUND:
        raise TooLarge(f"n={n} exceeds the cap of {MAX_GROUND}")
    masks = [sum(1 << i for i in c) for c in combinations(range(n), r + 1)]
    return Matroid(tuple(range(1, n + 1)), masks)


# -- graphs -----------------------------------------------------------------

@dataclass(frozen=True)
class Graph:
    """Multigraph on vertices ``0..n_vertices-1``; edges are ``(u, v, label)``."""

    n_vertices: int
    edges: tuple[tuple[int, int, object], ...]

    def __post_init__(self):
        labels = [e[2] for e in self.edges]
        if len(set(labels)) != len(labels):
            raise BadParameters("edge labels must be distinct")
        for u, v, _ in self.edges:
            if not (0 <= u < self.n_vertices and 0 <= v < self.n_vertices):
                raise BadParameters(f"edge ({u}, {v}) uses a vertex outside 0..{self.n_vertices - 1}")

    @classmethod
    def from_pairs(cls, pairs: Sequence[tuple[int, int]], n_vertices: int | None = None,
                   first_label: int = 1) -> Graph:
        if n_vertices is None:
            n_vertices = 1 + max((max(u, v) for u, v in pairs), default=-1)
        return cls(n_vertices, tuple((u, v, first_label + k) for k, (u, v) in enumerate(pairs)))

    @property
    def labels(self) -> tuple:
        return tuple(e[2] for e in self.edges)

    def component_count(self) -> int:
        parent = list(range(self.n_vertices))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v, _ in self.edges:
            parent[find(u)] = find(v)
        return len({find(x) for x in range(self.n_vertices)})

    def describe(self) -> str:
        return ",".join(f"{u + 1}-{v + 1}" for u, v, _ in self.edges)


def cycle_masks(g: Graph) -> set[int]:
    """Edge sets of all simple cycles, as bitmasks over edge positions.

    Each cycle is found from its smallest vertex by a depth-first search
    through larger vertices; the two traversal directions collapse in the set.
    """
    adj: list[list[tuple[int, int]]] = [[] for _ in range(g.n_vertices)]
    found: set[int] = set()
    for k, (u, v, _) in enumerate(g.edges):
        if u == v:
            found.add(1 << k)
        else:
            adj[u].append((v, k))
            adj[v].append((u, k))

    for start in range(g.n_vertices):
        def walk(u, on_path, used):
            for w, k in adj[u]:
                if used >> k & 1:
                    continue
                if w == start:
                    found.add(used | (1 << k))
                elif w > start and not on_path >> w & 1:
                    walk(w, on_path | (1 << w), used | (1 << k))

        walk(start, 1 << start, 0)
    return found


def graphic(g: Graph, *, max_edges: int = MAX_GROUND, validate: bool = True) -> Matroid:
    """Cycle matroid of ``g``; ground set = edge labels."""
    if len(g.edges) > max_edges:
        raise TooLarge(f"{len(g.edges)} edges exceeds the cap of {max_edges}")
    labels = g.labels
    masks = cycle_masks(g)
    if validate:
        circuits = [[labels[i] for i in range(len(labels)) if m >> i & 1] for m in masks]
        return from_circuits(labels, circuits, max_size=max_edges)
    return Matroid(labels, minimal_masks(masks))


def complete(n: int) -> Graph:
    if n < 1:
        raise BadParameters("complete graph needs n >= 1")
    return Graph.from_pairs(list(combinations(range(n), 2)), n)


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise BadParameters("complete bipartite graph needs a, b >= 1")
    return Graph.from_pairs([(i, a + j) for i in range(a) for j in range(b)], a + b)


def wheel(n: int) -> Graph:
    """Wheel with ``n`` spokes: hub 0, rim 1..n; rim edges first."""
    if n < 3:
        raise BadParameters("wheel needs at least 3 spokes")
    rim = [(1 + i, 1 + (i + 1) % n) for i in range(n)]
    spokes = [(0, 1 + i) for i in range(n)]
    return Graph.from_pairs(rim + spokes, n + 1)


def cycle_graph(n: int) -> Graph:
    if n < 1:
        raise BadParameters("cycle needs n >= 1")
    return Graph.from_pairs([(i, (i + 1) % n) for i in range(n)], n)


def _to_nx(pairs, n) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(n))
    for u, v in pairs:
        if G.has_edge(u, v):
            G[u][v]["mult"] += 1
        else:
            G.add_edge(u, v, mult=1)
    return G


def _edge_match(a, b):
    return a["mult"] == b["mult"]


def family_graphs(max_edges: int) -> Iterator[Graph]:
    """Connected loopless multigraphs with 1..max_edges edges, up to isomorphism.

    Level k+1 is grown from level k by adding one edge (between existing
    vertices, or to a new vertex); isomorphic duplicates are dropped. The
    order is deterministic.
    """
    if max_edges < 0:
        raise BadParameters("max_edges must be nonnegative")
    if max_edges > 12:
        raise TooLarge("multigraph enumeration is capped at 12 edges")
    level: list[tuple[int, tuple[tuple[int, int], ...]]] = [(1, ())]
    for k in range(1, max_edges + 1):
        buckets: dict[str, list[nx.Graph]] = {}
        nxt = []
        for n, pairs in level:
            candidates = [(n, pairs + ((u, v),)) for u, v in combinations(range(n), 2)]
            candidates += [(n + 1, pairs + ((u, n),)) for u in range(n)]
            for m, cand in candidates:
                cand = tuple(sorted(cand))
                G = _to_nx(cand, m)
                h = nx.weisfeiler_lehman_graph_hash(G, edge_attr="mult")
                seen = buckets.setdefault(h, [])
                if any(nx.is_isomorphic(G, H, edge_match=_edge_match) for H in seen):
                    continue
                seen.append(G)
                nxt.append((m, cand))
        level = nxt
        for n, pairs in level:
            yield Graph.from_pairs(list(pairs), n)


# -- linear matroids ----------------------------------------------------------

@dataclass(frozen=True)
class RationalMatrix:
    rows: tuple[tuple[Fraction, ...], ...]

    def __init__(self, rows):
        rows = tuple(tuple(Fraction(x) for x in row) for row in rows)
        if len({len(r) for r in rows}) > 1:
            raise BadParameters("ragged matrix")
        object.__setattr__(self, "rows", rows)

    @property
    def n_columns(self) -> int:
        return len(self.rows[0]) if self.rows else 0


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class PrimeFieldMatrix:
    rows: tuple[tuple[int, ...], ...]
    p: int

    def __init__(self, rows, p: int):
        if not _is_prime(p):
            raise BadParameters(f"{p} is not prime")
        rows = tuple(tuple(int(x) % p for x in row) for row in rows)
        if len({len(r) for r in rows}) > 1:
            raise BadParameters("ragged matrix")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "p", p)

    @property
    def n_columns(self) -> int:
        return len(self.rows[0]) if self.rows else 0


def _rank_rational(cols: list[list[Fraction]]) -> int:
    m = [list(c) for c in cols]
    rank = 0
    n_rows = len(m[0]) if m else 0
    for j in range(n_rows):
        pivot = next((i for i in range(rank, len(m)) if m[i][j] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for i in range(rank + 1, len(m)):
            if m[i][j]:
                f = m[i][j] / m[rank][j]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def _rank_mod_p(cols: list[list[int]], p: int) -> int:
    m = [list(c) for c in cols]
    rank = 0
    n_rows = len(m[0]) if m else 0
    for j in range(n_rows):
        pivot = next((i for i in range(rank, len(m)) if m[i][j] % p), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = pow(m[rank][j], -1, p)
        for i in range(rank + 1, len(m)):
            if m[i][j] % p:
                f = m[i][j] * inv % p
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def minimal_dependent_sets(n: int, independent: Callable[[Sequence[int]], bool]) -> list[int]:
    """Circuits as bitmasks: minimal dependent index sets, by increasing size."""
    found: list[int] = []
    for k in range(1, n + 1):
        for combo in combinations(range(n), k):
            m = sum(1 << i for i in combo)
            if any(c & m == c for c in found):
                continue
            if not independent(combo):
                found.append(m)
    return found


def _linear(n_cols: int, independent, max_columns: int) -> Matroid:
    if n_cols > max_columns:
        raise TooLarge(f"{n_cols} columns exceeds the cap of {max_columns}")
    return Matroid(tuple(range(1, n_cols + 1)), minimal_dependent_sets(n_cols, independent))


def linear_rational(A: RationalMatrix, max_columns: int = 16) -> Matroid:
    """Vector matroid of the columns of ``A`` over Q; columns are labelled 1..n."""
    cols = [[row[j] for row in A.rows] for j in range(A.n_columns)]
    return _linear(A.n_columns, lambda idx: _rank_rational([cols[i] for i in idx]) == len(idx),
                   max_columns)


def linear_prime(A: PrimeFieldMatrix, max_columns: int = 16) -> Matroid:
    """Vector matroid of the columns of ``A`` over GF(p); columns are labelled 1..n."""
    cols = [[row[j] for row in A.rows] for j in range(A.n_columns)]
    return _linear(A.n_columns, lambda idx: _rank_mod_p([cols[i] for i in idx], A.p) == len(idx),
                   max_columns)


def incidence_matrix(g: Graph, drop_row: int | None = 0) -> RationalMatrix:
    """Signed vertex-edge incidence matrix, optionally without one row."""
    rows = []
    for x in range(g.n_vertices):
        if x == drop_row:
            continue
        row = []
        for u, v, _ in g.edges:
            if u == v:
                row.append(0)
            else:
                row.append(1 if x == u else -1 if x == v else 0)
        rows.append(row)
    return RationalMatrix(rows)
