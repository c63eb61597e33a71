"""Matroids stored by their circuit families.

Subsets of the ground set are bitmasks over internal indices; index ``i``
corresponds to ``M.ground[i]``. Public methods accept and return element
labels, the ``*_mask`` helpers work on raw bitmasks.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Hashable, Iterable, Iterator, Sequence

from .errors import (
    AxiomViolation,
    BadBasepoint,
    EmptyCircuit,
    ElementNotInGroundSet,
    HasLoops,
    NotConnected,
    OverlappingGroundSets,
    PreconditionViolation,
    TooLarge,
)

Label = Hashable

#: exhaustive routines are exponential in the ground set size
MAX_GROUND = 24


def label_key(x):
    """Sort key putting integers (numerically) before everything else (as strings)."""
    if isinstance(x, int) and not isinstance(x, bool):
        return (0, x, "")
    return (1, 0, str(x))


def popcount(m: int) -> int:
    return bin(m).count("1")


def iter_bits(m: int) -> Iterator[int]:
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


def minimal_masks(masks: Iterable[int]) -> tuple[int, ...]:
    """Inclusion-minimal members of a family of bitmasks, sorted canonically."""
    out: list[int] = []
    for m in sorted(set(masks), key=lambda c: (popcount(c), c)):
        if not any(c & m == c for c in out):
            out.append(m)
    return tuple(sorted(out))


def compact_mask(m: int, keep: Sequence[int]) -> int:
    """Re-index ``m`` onto positions ``0..len(keep)-1`` (``keep`` is increasing)."""
    out = 0
    for j, i in enumerate(keep):
        if m >> i & 1:
            out |= 1 << j
    return out


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, i):
        while self.parent[i] != i:
            self.parent[i] = self.parent[self.parent[i]]
            i = self.parent[i]
        return i

    def union(self, i, j):
        a, b = self.find(i), self.find(j)
        if a != b:
            self.parent[max(a, b)] = min(a, b)


class Matroid:
    """A matroid on an ordered tuple of labels, given by its circuits.

    Instances are immutable. The rank memo is a plain dict; concurrent
    writers can only ever store equal values under a key.
    """

    __slots__ = ("_ground", "_index", "_circuits", "_rank_memo", "_full")

    def __init__(self, ground: Sequence[Label], circuit_masks: Iterable[int]):
        # trusted constructor: no validation, masks must already be minimal
        self._ground = tuple(ground)
        self._index = {x: i for i, x in enumerate(self._ground)}
        self._circuits = tuple(sorted(circuit_masks))
        self._full = (1 << len(self._ground)) - 1
        self._rank_memo: dict[int, int] = {}

    # -- basic accessors -------------------------------------------------

    @property
    def ground(self) -> tuple:
        return self._ground

    @property
    def size(self) -> int:
        return len(self._ground)

    def __len__(self):
        return len(self._ground)

    @property
    def full_mask(self) -> int:
        return self._full

    @property
    def circuit_masks(self) -> tuple[int, ...]:
        return self._circuits

    @property
    def circuits(self) -> frozenset[frozenset]:
        return frozenset(self.labels(c) for c in self._circuits)

    def circuit_list(self) -> list[list]:
        """Circuits as sorted label lists, in a canonical order."""
        cs = [sorted(self.labels(c), key=label_key) for c in self._circuits]
        return sorted(cs, key=lambda c: (len(c), [label_key(x) for x in c]))

    def index(self, x) -> int:
        try:
            return self._index[x]
        except (KeyError, TypeError):
            raise ElementNotInGroundSet(f"{x!r} is not in the ground set") from None

    def mask(self, X: Iterable) -> int:
        m = 0
        for x in X:
            m |= 1 << self.index(x)
        return m

    def labels(self, m: int) -> frozenset:
        return frozenset(self._ground[i] for i in iter_bits(m))

    def sorted_labels(self, m: int) -> list:
        return [self._ground[i] for i in iter_bits(m)]

    # -- equality --------------------------------------------------------

    def _key(self):
        return (frozenset(self._ground), self.circuits)

    def __eq__(self, other):
        if not isinstance(other, Matroid):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"Matroid(size={self.size}, rank={self.rank()}, circuits={len(self._circuits)})"

    def __getstate__(self):
        return (self._ground, self._circuits)

    def __setstate__(self, state):
        ground, circuits = state
        Matroid.__init__(self, ground, circuits)

    # -- independence and rank -------------------------------------------

    def is_independent_mask(self, m: int) -> bool:
        return not any(c & m == c for c in self._circuits)

    def is_independent(self, X: Iterable) -> bool:
        return self.is_independent_mask(self.mask(X))

    def rank_mask(self, m: int) -> int:
        r = self._rank_memo.get(m)
        if r is None:
            indep = 0
            for i in iter_bits(m):
                trial = indep | (1 << i)
                if self.is_independent_mask(trial):
                    indep = trial
            r = popcount(indep)
            self._rank_memo[m] = r
        return r

    def rank(self, X: Iterable | None = None) -> int:
        """Rank of ``X`` (the whole ground set when omitted)."""
        return self.rank_mask(self._full if X is None else self.mask(X))

    def bases_masks(self) -> list[int]:
        """All bases, found by depth-first extension of independent sets."""
        n, r = self.size, self.rank()
        out: list[int] = []

        def extend(i, cur, k):
            if k == r:
                out.append(cur)
                return
            if n - i < r - k:
                return
            nxt = cur | (1 << i)
            if self.is_independent_mask(nxt):
                extend(i + 1, nxt, k + 1)
            extend(i + 1, cur, k)

        extend(0, 0, 0)
        return out

    def bases(self) -> list[frozenset]:
        return [self.labels(b) for b in self.bases_masks()]

    # -- loops, coloops, components --------------------------------------

    def loop_mask(self) -> int:
        m = 0
        for c in self._circuits:
            if c & (c - 1) == 0:
                m |= c
        return m

    def coloop_mask(self) -> int:
        support = 0
        for c in self._circuits:
            support |= c
        return self._full & ~support

    def loops(self) -> frozenset:
        return self.labels(self.loop_mask())

    def coloops(self) -> frozenset:
        return self.labels(self.coloop_mask())

    def has_loops(self) -> bool:
        return self.loop_mask() != 0

    def component_masks(self) -> list[int]:
        uf = _UnionFind(self.size)
        for c in self._circuits:
            bits = list(iter_bits(c))
            for b in bits[1:]:
                uf.union(bits[0], b)
        groups: dict[int, int] = {}
        for i in range(self.size):
            root = uf.find(i)
            groups[root] = groups.get(root, 0) | (1 << i)
        return [groups[k] for k in sorted(groups)]

    def components(self) -> list[frozenset]:
        return [self.labels(m) for m in self.component_masks()]

    def is_connected(self) -> bool:
        # the empty matroid counts as connected (vacuous pairwise condition)
        return len(self.component_masks()) <= 1

    # -- minors ----------------------------------------------------------

    def _rest(self, xmask: int) -> list[int]:
        return [i for i in range(self.size) if not xmask >> i & 1]

    def delete_mask(self, xmask: int) -> Matroid:
        keep = self._rest(xmask)
        cs = [compact_mask(c, keep) for c in self._circuits if not c & xmask]
        return Matroid([self._ground[i] for i in keep], cs)

    def contract_mask(self, xmask: int) -> Matroid:
        keep = self._rest(xmask)
        cs = minimal_masks(c & ~xmask for c in self._circuits if c & ~xmask)
        return Matroid([self._ground[i] for i in keep], [compact_mask(c, keep) for c in cs])

    def delete(self, X: Iterable) -> Matroid:
        return self.delete_mask(self.mask(X))

    def contract(self, X: Iterable) -> Matroid:
        return self.contract_mask(self.mask(X))

    def restrict(self, X: Iterable) -> Matroid:
        return self.delete_mask(self._full & ~self.mask(X))

    def dual(self) -> Matroid:
        """Dual matroid, circuits taken as fundamental cocircuits over all bases."""
        bases = self.bases_masks()
        basis_set = set(bases)
        cocircuits = set()
        for b in bases:
            outside = self._full & ~b
            for i in iter_bits(b):
                rest = b & ~(1 << i)
                d = 1 << i
                for j in iter_bits(outside):
                    if rest | (1 << j) in basis_set:
                        d |= 1 << j
                cocircuits.add(d)
        return Matroid(self._ground, minimal_masks(cocircuits))

    def relabel(self, mapping: dict) -> Matroid:
        """Rename elements; labels missing from ``mapping`` are kept."""
        new = [mapping.get(x, x) for x in self._ground]
        if len(set(new)) != len(new):
            raise AxiomViolation("relabelling is not injective")
        return Matroid(new, self._circuits)

    # -- series classes --------------------------------------------------

    def is_cocircuit_pair(self, e, f) -> bool:
        r = self.rank()
        em, fm = self.mask([e]), self.mask([f])
        return (self.rank_mask(self._full & ~em) == r
                and self.rank_mask(self._full & ~fm) == r
                and self.rank_mask(self._full & ~(em | fm)) == r - 1)

    def series_classes(self) -> SeriesClassPartition:
        if self.has_loops():
            raise HasLoops("series classes are defined here for loopless matroids only")
        r = self.rank()
        coloops = self.coloop_mask()
        free = [i for i in range(self.size) if not coloops >> i & 1]
        uf = _UnionFind(self.size)
        for a, b in combinations(free, 2):
            if self.rank_mask(self._full & ~((1 << a) | (1 << b))) == r - 1:
                uf.union(a, b)
        groups: dict[int, int] = {}
        for i in free:
            root = uf.find(i)
            groups[root] = groups.get(root, 0) | (1 << i)
        classes = [self.labels(groups[k]) for k in sorted(groups)]
        flags = [False] * len(classes)
        for i in iter_bits(coloops):
            classes.append(frozenset([self._ground[i]]))
            flags.append(True)
        return SeriesClassPartition(tuple(classes), tuple(flags))

    def removable_series_classes(self) -> list[frozenset]:
        """Series classes whose deletion leaves a connected matroid."""
        if not self.is_connected():
            raise NotConnected("removable series classes need a connected matroid")
        if self.size < 2:
            raise PreconditionViolation("ground set needs at least two elements")
        return [S for S in self.series_classes() if self.delete(S).is_connected()]

    def is_minimally_connected(self) -> bool:
        if not self.is_connected():
            return False
        return all(not self.delete_mask(1 << i).is_connected() for i in range(self.size))


@dataclass(frozen=True)
class SeriesClassPartition:
    """Series classes of a loopless matroid.

    ``classes`` lists the proper series classes first, then one singleton per
    coloop with the matching ``coloop_singletons`` flag set. Iterating yields
    only the proper classes.
    """

    classes: tuple[frozenset, ...]
    coloop_singletons: tuple[bool, ...]

    @property
    def proper(self) -> list[frozenset]:
        return [c for c, flag in zip(self.classes, self.coloop_singletons) if not flag]

    @property
    def coloops(self) -> frozenset:
        return frozenset().union(*(c for c, f in zip(self.classes, self.coloop_singletons) if f))

    def __iter__(self):
        return iter(self.proper)

    def __len__(self):
        return len(self.proper)

    def class_of(self, x) -> frozenset | None:
        for c in self.proper:
            if x in c:
                return c
        return None


@dataclass(frozen=True)
class LinearOrder:
    """A total order on a ground set; earlier elements are smaller."""

    elements: tuple

    def __post_init__(self):
        if len(set(self.elements)) != len(self.elements):
            raise AxiomViolation("linear order repeats an element")

    @classmethod
    def ascending(cls, M: Matroid) -> LinearOrder:
        return cls(tuple(sorted(M.ground, key=label_key)))

    def positions(self, M: Matroid) -> list[int]:
        """Priority of each internal index of ``M`` (lower = smaller)."""
        if set(self.elements) != set(M.ground) or len(self.elements) != M.size:
            raise AxiomViolation("order is not a bijection on the ground set")
        pos = {x: k for k, x in enumerate(self.elements)}
        return [pos[x] for x in M.ground]


# -- construction ------------------------------------------------------------

def from_circuits(ground: Iterable, circuits: Iterable[Iterable], *,
                  max_size: int = MAX_GROUND, check_elimination: bool = True) -> Matroid:
    """Build a matroid from an explicit circuit family, validating the axioms."""
    ground = tuple(ground)
    if len(set(ground)) != len(ground):
        raise AxiomViolation("ground set labels are not distinct")
    if len(ground) > max_size:
        raise TooLarge(f"{len(ground)} elements exceeds the cap of {max_size}")
    index = {x: i for i, x in enumerate(ground)}
    masks = set()
    for C in circuits:
        m = 0
        for x in C:
            if x not in index:
                raise ElementNotInGroundSet(f"circuit element {x!r} is not in the ground set")
            m |= 1 << index[x]
        if m == 0:
            raise EmptyCircuit("the empty set cannot be a circuit")
        masks.add(m)
    masks = sorted(masks)
    for a, b in combinations(masks, 2):
        if a & b == a or a & b == b:
            raise AxiomViolation("circuit family is not an antichain")
    if check_elimination:
        _check_elimination(masks, ground)
    return Matroid(ground, masks)


def _check_elimination(masks: Sequence[int], ground) -> None:
    for a, b in combinations(masks, 2):
        union = a | b
        for i in iter_bits(a & b):
            target = union & ~(1 << i)
            if not any(c & target == c for c in masks):
                raise AxiomViolation(
                    "circuit elimination fails for "
                    f"{sorted((ground[j] for j in iter_bits(a)), key=label_key)} and "
                    f"{sorted((ground[j] for j in iter_bits(b)), key=label_key)} at {ground[i]!r}")


def satisfies_circuit_axioms(M: Matroid) -> bool:
    try:
        from_circuits(M.ground, M.circuit_list())
    except AxiomViolation:
        return False
    return True


def free_matroid(labels: Iterable) -> Matroid:
    return Matroid(tuple(labels), ())


def circuit_matroid(labels: Iterable) -> Matroid:
    """The matroid whose whole ground set is a single circuit."""
    labels = tuple(labels)
    if not labels:
        raise EmptyCircuit("a circuit needs at least one element")
    return Matroid(labels, [(1 << len(labels)) - 1])


def _from_label_circuits(ground, circuits) -> Matroid:
    index = {x: i for i, x in enumerate(ground)}
    masks = []
    for C in circuits:
        m = 0
        for x in C:
            m |= 1 << index[x]
        masks.append(m)
    return Matroid(ground, minimal_masks(masks))


def direct_sum(M1: Matroid, M2: Matroid) -> Matroid:
    if set(M1.ground) & set(M2.ground):
        raise OverlappingGroundSets("direct sum needs disjoint ground sets")
    shift = M1.size
    return Matroid(M1.ground + M2.ground,
                   list(M1.circuit_masks) + [c << shift for c in M2.circuit_masks])


def _check_basepoint(M1: Matroid, M2: Matroid, e) -> None:
    common = set(M1.ground) & set(M2.ground)
    if common != {e}:
        raise BadBasepoint(f"ground sets must meet exactly in {{{e!r}}}, they meet in {common}")
    for M in (M1, M2):
        if e in M.loops():
            raise BadBasepoint(f"{e!r} is a loop")
        if e in M.coloops():
            raise BadBasepoint(f"{e!r} is a coloop")


def parallel_connection(M1: Matroid, M2: Matroid, e) -> Matroid:
    """Glue two matroids along the shared non-loop, non-coloop element ``e``."""
    _check_basepoint(M1, M2, e)
    ground = M1.ground + tuple(x for x in M2.ground if x != e)
    c1 = M1.circuits
    c2 = M2.circuits
    glued = [(a | b) - {e} for a in c1 if e in a for b in c2 if e in b]
    return _from_label_circuits(ground, list(c1) + list(c2) + glued)


def two_sum(M1: Matroid, M2: Matroid, e) -> Matroid:
    return parallel_connection(M1, M2, e).delete([e])


def fresh_label(taken: Iterable, base) -> str:
    taken = set(taken)
    cand = f"{base}'"
    while cand in taken:
        cand += "'"
    return cand


def series_reconstruction(M: Matroid, S: Iterable, e) -> Matroid:
    """Rebuild ``M`` as the 2-sum of ``M/(S-e)`` with an (|S|+1)-circuit.

    The basepoint ``e`` of the contraction is renamed to a fresh label ``p``
    and glued to the circuit ``S + {p}``, so the result lives on the original
    ground set and can be compared by labelled equality.
    """
    S = frozenset(S)
    if e not in S:
        raise PreconditionViolation(f"{e!r} is not in the series class")
    tilde = M.contract(S - {e})
    p = fresh_label(M.ground, e)
    tilde = tilde.relabel({e: p})
    circ = circuit_matroid(sorted(S, key=label_key) + [p])
    return two_sum(tilde, circ, p)
