"""Broken circuit complexes, f- and h-vectors, characteristic and Tutte polynomials.

Every invariant here has a second, brute-force route (subset expansions)
kept deliberately independent of the fast one so the two can be compared.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from .errors import HasLoops, InternalInconsistency, LengthMismatch, TooLarge
from .matroid import LinearOrder, Matroid, compact_mask, iter_bits, minimal_masks, popcount
from .polynomial import BivariatePolynomial, IntPolynomial

#: largest ground set accepted by the 2^n subset expansions
SUBSET_EXPANSION_CAP = 20


@dataclass(frozen=True)
class FVector:
    """Face counts ``f_0..f_r`` of a broken circuit complex."""

    entries: tuple[int, ...]
    rank: int

    def __post_init__(self):
        if len(self.entries) != self.rank + 1:
            raise LengthMismatch(f"f-vector of rank {self.rank} needs {self.rank + 1} entries")

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]


@dataclass(frozen=True)
class HVector:
    """h-vector with both the full view (length r+1) and the trimmed view.

    ``h(i)`` follows the convention ``h_i = 0`` outside ``0..r``.
    """

    full: tuple[int, ...]
    rank: int

    def __post_init__(self):
        if len(self.full) != self.rank + 1:
            raise LengthMismatch(f"h-vector of rank {self.rank} needs {self.rank + 1} entries")

    @property
    def s(self) -> int:
        """Largest index with a nonzero entry (0 for the all-zero vector)."""
        for i in range(len(self.full) - 1, -1, -1):
            if self.full[i]:
                return i
        return 0

    @property
    def trimmed(self) -> tuple[int, ...]:
        return self.full[: self.s + 1]

    def __call__(self, i: int) -> int:
        return self.full[i] if 0 <= i <= self.rank else 0

    def polynomial(self) -> IntPolynomial:
        """``sum h_i t^(r-i)``."""
        return IntPolynomial.from_descending(self.full)


def _require_loopless(M: Matroid) -> None:
    if M.has_loops():
        raise HasLoops(f"matroid has loops {sorted(map(str, M.loops()))}")


def _positions(M: Matroid, order: LinearOrder | None) -> list[int]:
    if order is None:
        order = LinearOrder.ascending(M)
    return order.positions(M)


def broken_circuit_masks(M: Matroid, order: LinearOrder | None = None) -> tuple[int, ...]:
    _require_loopless(M)
    pos = _positions(M, order)
    bcs = []
    for c in M.circuit_masks:
        least = min(iter_bits(c), key=pos.__getitem__)
        bcs.append(c & ~(1 << least))
    return minimal_masks(bcs)


def broken_circuits(M: Matroid, order: LinearOrder | None = None) -> frozenset[frozenset]:
    """Circuits with their least element (under ``order``) removed, minimalized."""
    return frozenset(M.labels(b) for b in broken_circuit_masks(M, order))


def _count_faces(n: int, bcs: Sequence[int]) -> list[int]:
    # faces are built in index order; a broken circuit is tested once, when
    # its highest element is added
    by_top: list[list[int]] = [[] for _ in range(n)]
    for b in bcs:
        by_top[b.bit_length() - 1].append(b)
    counts = [0] * (n + 1)

    def grow(i, face, size):
        if i == n:
            counts[size] += 1
            return
        grow(i + 1, face, size)
        nxt = face | (1 << i)
        for b in by_top[i]:
            if b & nxt == b:
                return
        grow(i + 1, nxt, size + 1)

    grow(0, 0, 0)
    return counts


def bc_f_vector(M: Matroid, order: LinearOrder | None = None) -> FVector:
    """f-vector of BC(M) by depth-first enumeration with broken-circuit pruning."""
    bcs = broken_circuit_masks(M, order)
    counts = _count_faces(M.size, bcs)
    r = M.rank()
    if any(counts[r + 1:]):
        raise InternalInconsistency("broken circuit complex has a face larger than the rank")
    return FVector(tuple(counts[: r + 1]), r)


def f_to_h(f: FVector | Sequence[int], r: int | None = None) -> HVector:
    """``h_i = sum_j (-1)^(i-j) C(r-j, i-j) f_j``."""
    entries, r = _with_rank(f, r)
    h = [sum((-1) ** (i - j) * comb(r - j, i - j) * entries[j] for j in range(i + 1))
         for i in range(r + 1)]
    return HVector(tuple(h), r)


def h_to_f(h: HVector | Sequence[int], r: int | None = None) -> FVector:
    """``f_i = sum_j C(r-j, i-j) h_j``; a short ``h`` is padded with zeros."""
    if isinstance(h, HVector):
        entries, r = h.full, h.rank if r is None else r
        if r != h.rank:
            raise LengthMismatch("rank does not match the h-vector")
    else:
        if r is None:
            raise LengthMismatch("rank is required for a bare sequence")
        entries = tuple(h)
        if len(entries) > r + 1:
            raise LengthMismatch(f"{len(entries)} entries exceed rank {r}")
        entries = entries + (0,) * (r + 1 - len(entries))
    f = [sum(comb(r - j, i - j) * entries[j] for j in range(i + 1)) for i in range(r + 1)]
    return FVector(tuple(f), r)


def _with_rank(f, r):
    if isinstance(f, FVector):
        if r is not None and r != f.rank:
            raise LengthMismatch("rank does not match the f-vector")
        return f.entries, f.rank
    entries = tuple(f)
    if r is None:
        r = len(entries) - 1
    if len(entries) != r + 1:
        raise LengthMismatch(f"expected {r + 1} entries, got {len(entries)}")
    return entries, r


def characteristic_polynomial(M: Matroid, order: LinearOrder | None = None) -> IntPolynomial:
    """Whitney-Rota: ``chi(t) = sum (-1)^i f_i t^(r-i)``."""
    f = bc_f_vector(M, order)
    return IntPolynomial.from_descending([(-1) ** i * fi for i, fi in enumerate(f.entries)])


def _check_cap(M: Matroid, cap: int) -> None:
    if M.size > cap:
        raise TooLarge(f"subset expansion over {M.size} elements exceeds the cap of {cap}")


def _corank_nullity_counts(M: Matroid, cap: int) -> dict[tuple[int, int], int]:
    _check_cap(M, cap)
    r = M.rank()
    counts: dict[tuple[int, int], int] = {}
    for X in range(1 << M.size):
        rx = _plain_rank(M, X)
        key = (r - rx, popcount(X) - rx)
        counts[key] = counts.get(key, 0) + 1
    return counts


def _plain_rank(M: Matroid, X: int) -> int:
    # greedy rank without touching the matroid's memo (2^n entries otherwise)
    indep = 0
    circuits = M.circuit_masks
    for i in iter_bits(X):
        trial = indep | (1 << i)
        if not any(c & trial == c for c in circuits):
            indep = trial
    return popcount(indep)


def char_poly_subset_expansion(M: Matroid, cap: int = SUBSET_EXPANSION_CAP) -> IntPolynomial:
    """``chi(t) = sum_X (-1)^|X| t^(r(M) - r(X))`` summed literally."""
    counts = _corank_nullity_counts(M, cap)
    r = M.rank()
    cs = [0] * (r + 1)
    for (corank, nullity), n in counts.items():
        size = r - corank + nullity
        cs[corank] += (-1) ** size * n
    return IntPolynomial(cs)


def tutte_subset_expansion(M: Matroid, cap: int = SUBSET_EXPANSION_CAP) -> BivariatePolynomial:
    """``T(x, y) = sum_X (x-1)^(r(E)-r(X)) (y-1)^(|X|-r(X))`` summed literally."""
    return BivariatePolynomial.from_corank_nullity(_corank_nullity_counts(M, cap))


class TutteCache(dict):
    """Memo for :func:`tutte`, keyed on ``(n, sorted circuit masks)``.

    Keys are compacted (loops and coloops stripped, indices renumbered), so
    distinct labelled minors with identical circuit structure share an entry.
    """


def tutte(M: Matroid, cache: TutteCache | None = None) -> BivariatePolynomial:
    """Tutte polynomial by memoized deletion-contraction."""
    if cache is None:
        cache = TutteCache()
    return BivariatePolynomial(_tutte(M.size, M.circuit_masks, cache))


def _tutte(n: int, circuits: tuple[int, ...], cache) -> dict:
    full = (1 << n) - 1
    loops = 0
    support = 0
    for c in circuits:
        support |= c
        if c & (c - 1) == 0:
            loops |= c
    coloops = full & ~support
    a, b = popcount(coloops), popcount(loops)
    if a or b:
        keep = [i for i in range(n) if not (loops | coloops) >> i & 1]
        core = tuple(sorted(compact_mask(c, keep) for c in circuits if not c & loops))
        inner = _tutte(len(keep), core, cache)
        return {(i + a, j + b): v for (i, j), v in inner.items()}
    if n == 0:
        return {(0, 0): 1}
    key = (n, circuits)
    hit = cache.get(key)
    if hit is not None:
        return hit
    # after stripping, index 0 is neither a loop nor a coloop
    deleted = tuple(sorted(c >> 1 for c in circuits if not c & 1))
    contracted = minimal_masks(c >> 1 for c in circuits)
    out = dict(_tutte(n - 1, deleted, cache))
    for k, v in _tutte(n - 1, contracted, cache).items():
        out[k] = out.get(k, 0) + v
    out = {k: v for k, v in out.items() if v}
    cache[key] = out
    return out


def h_from_tutte(M: Matroid, cache: TutteCache | None = None) -> IntPolynomial:
    """``T(M; t, 0)``; this is the zero polynomial when ``M`` has a loop."""
    return tutte(M, cache).at_y_zero()


def h_vector(M: Matroid, order: LinearOrder | None = None,
             cache: TutteCache | None = None) -> HVector:
    """h-vector of BC(M), computed from the f-vector and from ``T(M; t, 0)``.

    Raises InternalInconsistency if the two routes disagree.
    """
    via_f = f_to_h(bc_f_vector(M, order))
    poly = h_from_tutte(M, cache)
    r = via_f.rank
    if poly.degree > r:
        raise InternalInconsistency(f"T(M;t,0) has degree {poly.degree} > rank {r}")
    via_t = tuple(poly[r - i] for i in range(r + 1))
    if via_t != via_f.full:
        raise InternalInconsistency(
            f"h-vector routes disagree: f-transform {via_f.full} vs Tutte {via_t}")
    return via_f


def h_polynomial(M: Matroid, order: LinearOrder | None = None,
                 cache: TutteCache | None = None) -> IntPolynomial:
    return h_vector(M, order, cache).polynomial()


def h_from_characteristic(M: Matroid) -> IntPolynomial:
    """``(-1)^r chi(M; 1 - t)`` with chi taken from the subset expansion."""
    chi = char_poly_subset_expansion(M)
    return chi(IntPolynomial([1, -1])) * (-1) ** M.rank()
