"""Complementary h-vectors, g-vectors and the series-class identity checks.

All shape predicates act on the trimmed h-vector ``(h_0, ..., h_s)`` with
``s = r - c``; the untrimmed vector carries trailing zeros that would make
almost everything fail flawlessness.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import HasLoops, NegativeCoefficients, PreconditionViolation, UnknownPredicate
from .invariants import HVector, TutteCache, h_from_tutte, h_vector
from .matroid import (
    Matroid,
    direct_sum,
    label_key,
    parallel_connection,
    series_reconstruction,
)
from .polynomial import IntPolynomial, T
from .sequences import (
    PREDICATES,
    is_strongly_flawless,
    o_sequence_violation,
)


@dataclass(frozen=True)
class ComplementaryHVector:
    """``hbar_i = h_{s-i} - h_i`` for ``0 <= i <= s // 2``; ``(0)`` for loopy matroids."""

    entries: tuple[int, ...]
    s: int

    def __call__(self, i: int) -> int:
        return self.entries[i] if 0 <= i < len(self.entries) else 0

    def is_nonnegative(self) -> bool:
        return all(x >= 0 for x in self.entries)


@dataclass(frozen=True)
class GVector:
    entries: tuple[int, ...]

    def __post_init__(self):
        if not self.entries or self.entries[0] != 1:
            raise ValueError("g-vectors start with 1")


@dataclass
class PredicateReport:
    """Outcome per check, with the first failing index when a check fails."""

    outcomes: dict[str, bool] = field(default_factory=dict)
    first_violation: dict[str, int | None] = field(default_factory=dict)
    detail: dict = field(default_factory=dict)

    def record(self, name: str, index: int | None) -> None:
        self.outcomes[name] = index is None
        self.first_violation[name] = index

    @property
    def ok(self) -> bool:
        return all(self.outcomes.values())

    def to_dict(self) -> dict:
        return {"outcomes": dict(self.outcomes),
                "first_violation": dict(self.first_violation),
                "detail": self.detail}


# -- h-vector helpers ---------------------------------------------------------

class HCache:
    """Trimmed h-vectors keyed by matroid, sharing one Tutte memo."""

    def __init__(self):
        self.tutte = TutteCache()
        self._h: dict[Matroid, HVector] = {}

    def h(self, M: Matroid) -> HVector:
        got = self._h.get(M)
        if got is None:
            got = h_vector(M, cache=self.tutte)
            self._h[M] = got
        return got


def _h(M: Matroid, cache: HCache | None) -> HVector:
    return cache.h(M) if cache is not None else h_vector(M)


def h_or_zero(M: Matroid, cache: HCache | None = None) -> HVector:
    """h-vector read off ``T(M; t, 0)``: all zeros when ``M`` has a loop."""
    if M.has_loops():
        r = M.rank()
        return HVector((0,) * (r + 1), r)
    return _h(M, cache)


def complementary_from_h(h: Sequence[int]) -> ComplementaryHVector:
    """Complementary vector of a trimmed h-vector."""
    h = list(h)
    s = len(h) - 1
    return ComplementaryHVector(tuple(h[s - i] - h[i] for i in range(s // 2 + 1)), s)


def complementary_h(M: Matroid, cache: HCache | None = None) -> ComplementaryHVector:
    if M.has_loops():
        return ComplementaryHVector((0,), 0)
    return complementary_from_h(_h(M, cache).trimmed)


def g_from_h(h: Sequence[int]) -> GVector:
    h = list(h)
    half = (len(h) - 1) // 2
    return GVector((1,) + tuple(h[i] - h[i - 1] for i in range(1, half + 1)))


def g_vector(M: Matroid, cache: HCache | None = None) -> GVector:
    if M.has_loops():
        raise HasLoops("g-vector needs a loopless matroid")
    return g_from_h(_h(M, cache).trimmed)


def predicate_report(h: Sequence[int], names: Iterable[str]) -> PredicateReport:
    """Evaluate named shape predicates on a (trimmed) sequence.

    Besides the sequence predicates, ``o-sequence`` tests the g-vector and
    ``unimodal-flawless`` tests that unimodal-and-flawless coincides with
    strongly flawless.
    """
    rep = PredicateReport()
    for name in names:
        if name in PREDICATES:
            rep.record(name, PREDICATES[name](h))
        elif name == "o-sequence":
            rep.record(name, o_sequence_violation(g_from_h(h).entries))
        elif name == "unimodal-flawless":
            lhs = PREDICATES["unimodal"](h) is None and PREDICATES["flawless"](h) is None
            rep.record(name, None if lhs == is_strongly_flawless(h) else 0)
        else:
            raise UnknownPredicate(f"unknown predicate {name!r}")
    return rep


ALL_PREDICATES = tuple(PREDICATES) + ("o-sequence", "unimodal-flawless")


# -- products of polynomials ---------------------------------------------------

def product_strongly_flawless_check(phi: IntPolynomial, psi: IntPolynomial) -> bool:
    """Strong flawlessness of ``phi * psi`` (descending coefficients, power of t stripped)."""
    for p in (phi, psi):
        if any(c < 0 for c in p.coeffs):
            raise NegativeCoefficients(f"{p} has a negative coefficient")
        if p.is_zero():
            raise ValueError("zero polynomial has no coefficient sequence")
    return is_strongly_flawless((phi * psi).descending())


# -- removable series classes -------------------------------------------------

def _series_preconditions(M: Matroid, S, e, *, removable: bool) -> frozenset:
    S = frozenset(S)
    if not M.is_connected():
        raise PreconditionViolation("M is not connected")
    if M.has_loops():
        raise PreconditionViolation("M has loops")
    if e not in S:
        raise PreconditionViolation(f"{e!r} is not in S")
    if S not in set(M.series_classes()):
        raise PreconditionViolation("S is not a series class of M")
    if removable:
        if len(S) < 2:
            raise PreconditionViolation("S is a trivial series class")
        if not M.delete(S).is_connected():
            raise PreconditionViolation("S is not removable")
    return S


def series1_terms(M: Matroid, S, e, cache: HCache | None = None, *,
                  convention: str = "truncated") -> tuple[list[int], list[int]]:
    """Left and right sides of the removable-series-class identity, per index.

    ``convention="truncated"`` reads every complementary term as 0 outside
    ``0..s//2`` of its own matroid. ``"unrestricted"`` instead takes the
    ``M/e`` term as ``h_{s-1-i}(M/e) - h_i(M/e)`` for every ``i``; the two
    differ only at ``i = s/2`` for even ``s``.
    """
    if convention not in ("truncated", "unrestricted"):
        raise ValueError(f"unknown convention {convention!r}")
    S = frozenset(S)
    m = len(S)
    hbar = complementary_h(M, cache)
    s = hbar.s
    Me = M.contract([e])
    bar_ce = complementary_h(Me, cache)
    h_ce = h_or_zero(Me, cache)
    bar_ds = complementary_h(M.delete(S), cache)
    h_cs = h_or_zero(M.contract(S), cache)
    lhs, rhs = [], []
    for i in range(s // 2 + 1):
        if convention == "truncated":
            first = bar_ce(i)
        else:
            first = h_ce(s - 1 - i) - h_ce(i)
        lhs.append(hbar(i))
        rhs.append(first + bar_ds(i - m + 1) + (h_cs(i - m + 1) - h_cs(i - m)))
    return lhs, rhs


def check_series1(M: Matroid, S, e, cache: HCache | None = None, *,
                  convention: str = "truncated") -> PredicateReport:
    S = _series_preconditions(M, S, e, removable=True)
    lhs, rhs = series1_terms(M, S, e, cache, convention=convention)
    rep = PredicateReport(detail={"lhs": lhs, "rhs": rhs, "convention": convention})
    rep.record("series1", next((i for i, (a, b) in enumerate(zip(lhs, rhs)) if a != b), None))
    return rep


# -- series classes, three branches ---------------------------------------------

def series2_branches(M: Matroid, S, e, cache: HCache | None = None) -> tuple[list[int], dict]:
    """Left side per index and, per index, the value of every applicable branch."""
    S = frozenset(S)
    m = len(S)
    s = complementary_h(M, cache).s
    lhs = [complementary_h(M, cache)(i) for i in range(s // 2 + 1)]
    tilde = M.contract(S - {e})
    bar_t = complementary_h(tilde, cache)
    h_cs = h_or_zero(M.contract(S), cache)
    top = s - m + 1
    branches: dict[int, dict[str, int]] = {i: {} for i in range(s // 2 + 1)}
    for i in range(s // 2 + 1):
        if 0 <= i <= min(m - 1, top):
            branches[i]["A"] = (
                sum(bar_t(j) for j in range(0, min(i, s - m - i) + 1))
                + sum(h_cs(i - j) - h_cs(top - j) for j in range(1, i + 1)))
        if m - 1 <= top and m - 1 <= i:
            branches[i]["B"] = (
                sum(bar_t(j) for j in range(i - m + 1, min(i, s - m - i) + 1))
                + sum(h_cs(i - j) - h_cs(s - i - j) for j in range(1, m)))
        if top <= m - 1 and top <= i:
            branches[i]["C"] = 0
    return lhs, branches


def check_series2(M: Matroid, S, e, cache: HCache | None = None) -> PredicateReport:
    """Three-branch identity; overlapping branches must also agree with each other."""
    _series_preconditions(M, S, e, removable=False)
    lhs, branches = series2_branches(M, S, e, cache)
    identity = overlap = uncovered = None
    for i, vals in branches.items():
        if not vals and uncovered is None:
            uncovered = i
        if identity is None and any(v != lhs[i] for v in vals.values()):
            identity = i
        if overlap is None and len(set(vals.values())) > 1:
            overlap = i
    rep = PredicateReport(detail={"lhs": lhs,
                                  "branches": {str(i): v for i, v in branches.items()}})
    rep.record("series2", identity)
    rep.record("series2-overlap", overlap)
    rep.record("series2-coverage", uncovered)
    return rep


# -- deletion-contraction of hbar --------------------------------------------

def check_hbar_deletion_contraction(M: Matroid, e, cache: HCache | None = None) -> PredicateReport:
    """``hbar_i(M) = hbar_i(M-e) + hbar_i(M/e) + (h_i(M/e) - h_{i-1}(M/e))``.

    Needs M, M-e and M/e connected; holds for ``i <= (s-1) // 2``.
    """
    D, C = M.delete([e]), M.contract([e])
    if not (M.is_connected() and D.is_connected() and C.is_connected()):
        raise PreconditionViolation("M, M-e and M/e must all be connected")
    if M.has_loops() or C.has_loops():
        raise PreconditionViolation("M and M/e must be loopless")
    hb, hd, hc = complementary_h(M, cache), complementary_h(D, cache), complementary_h(C, cache)
    h_c = _h(C, cache)
    idx = range((hb.s - 1) // 2 + 1) if hb.s >= 1 else range(0)
    lhs = [hb(i) for i in idx]
    rhs = [hd(i) + hc(i) + (h_c(i) - h_c(i - 1)) for i in idx]
    rep = PredicateReport(detail={"lhs": lhs, "rhs": rhs})
    rep.record("hbar-deletion-contraction",
               next((i for i, (a, b) in enumerate(zip(lhs, rhs)) if a != b), None))
    return rep


# -- property suites over a single matroid -------------------------------------

@dataclass
class CheckTally:
    """Counts instances of one identity family checked on a matroid."""

    checked: int = 0
    failures: list = field(default_factory=list)

    def add(self, ok: bool, what) -> None:
        self.checked += 1
        if not ok:
            self.failures.append(what)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {"checked": self.checked, "ok": self.ok, "failures": self.failures}


def _sorted(X) -> list:
    return sorted(X, key=label_key)


def verify_series1(M: Matroid, cache: HCache | None = None, *,
                   convention: str = "truncated") -> CheckTally:
    tally = CheckTally()
    if M.size < 2 or M.has_loops() or not M.is_connected():
        return tally
    for S in M.removable_series_classes():
        if len(S) < 2:
            continue
        for e in _sorted(S):
            rep = check_series1(M, S, e, cache, convention=convention)
            tally.add(rep.ok, {"S": _sorted(S), "e": e,
                               "index": rep.first_violation["series1"],
                               "lhs": rep.detail["lhs"], "rhs": rep.detail["rhs"]})
    return tally


def verify_series2(M: Matroid, cache: HCache | None = None) -> CheckTally:
    tally = CheckTally()
    if M.size < 1 or M.has_loops() or not M.is_connected():
        return tally
    for S in M.series_classes():
        for e in _sorted(S):
            rep = check_series2(M, S, e, cache)
            tally.add(rep.ok, {"S": _sorted(S), "e": e, "outcomes": rep.outcomes})
    return tally


def verify_two_sum(M: Matroid) -> CheckTally:
    """Series-class reconstruction by 2-sum, compared with labelled equality.

    A series class that is itself a circuit forms a whole component and its
    contraction leaves the basepoint as a loop, so the 2-sum is undefined;
    there the reconstruction degenerates to ``M = (M - S) + circuit(S)``.
    """
    from .matroid import circuit_matroid

    tally = CheckTally()
    if M.has_loops():
        return tally
    for S in M.series_classes():
        if S in M.circuits:
            rebuilt = direct_sum(M.delete(S), circuit_matroid(_sorted(S)))
            tally.add(rebuilt == M, {"S": _sorted(S), "degenerate": True})
            continue
        for e in _sorted(S):
            tally.add(series_reconstruction(M, S, e) == M, {"S": _sorted(S), "e": e})
    return tally


def verify_deletion_contraction(M: Matroid, cache: HCache | None = None) -> CheckTally:
    """h(M) = t h(M-e) for coloops, h(M-e) + h(M/e) otherwise (h via T(t, 0))."""
    tally = CheckTally()
    if M.size < 2 or M.has_loops():
        return tally
    tc = cache.tutte if cache is not None else TutteCache()
    h_m = h_from_tutte(M, tc)
    coloops = M.coloops()
    for e in M.ground:
        D = M.delete([e])
        if e in coloops:
            ok = h_m == T * h_from_tutte(D, tc)
        else:
            C = M.contract([e])
            ok = h_m == h_from_tutte(D, tc) + h_from_tutte(C, tc)
            if M.is_connected():
                ok = ok and (D.is_connected() or C.is_connected())
        tally.add(ok, {"e": e})
    return tally


def verify_h_basics(M: Matroid, cache: HCache | None = None) -> CheckTally:
    """Nonnegativity, top index ``s = r - c``, and the direct-sum product rule."""
    tally = CheckTally()
    if M.has_loops():
        return tally
    h = _h(M, cache)
    comps = M.component_masks()
    tally.add(all(x >= 0 for x in h.full), "nonnegative")
    tally.add(h.s == h.rank - len(comps) and h(h.s) != 0, "top-index")
    prod = IntPolynomial([1])
    for cm in comps:
        prod = prod * _h(M.restrict(M.labels(cm)), cache).polynomial()
    tally.add(prod == h.polynomial(), "direct-sum-product")
    return tally


def verify_series_minors(M: Matroid, cache: HCache | None = None) -> CheckTally:
    """Rank, connectivity and h-vector facts for contractions inside a series class."""
    tally = CheckTally()
    if M.has_loops():
        return tally
    r = M.rank()
    connected = M.is_connected()
    for S in M.series_classes():
        seq = _sorted(S)
        m = len(seq)
        MS = M.delete(S)
        tally.add(MS.rank() == r - m + 1, {"S": seq, "clause": "rank(M-S)"})
        reference = _h(MS, cache).trimmed
        for e in seq:
            tally.add(_h(M.delete([e]), cache).trimmed == reference,
                      {"S": seq, "e": e, "clause": "h(M-e)"})
        for j in range(m):
            Mj = M.contract(seq[:j])
            Sj = frozenset(seq[j:])
            tally.add(Mj.rank() == r - j, {"S": seq, "j": j, "clause": "rank(M_j)"})
            if connected:
                tally.add(Mj.is_connected(), {"S": seq, "j": j, "clause": "M_j connected"})
            if not Mj.has_loops():
                tally.add(Sj in set(Mj.series_classes()),
                          {"S": seq, "j": j, "clause": "S_j series class"})
            tally.add(Mj.delete(Sj) == MS, {"S": seq, "j": j, "clause": "M_j - S_j"})
            for e2 in seq[j:]:
                D = Mj.delete([e2])
                if D.has_loops():
                    tally.add(False, {"S": seq, "j": j, "e'": e2, "clause": "loopless"})
                    continue
                tally.add(_h(D, cache).trimmed == reference,
                          {"S": seq, "j": j, "e'": e2, "clause": "h(M_j-e')"})
    return tally


def split_at(M: Matroid, e) -> tuple[Matroid, Matroid] | None:
    """If ``M/e`` is disconnected, the two restrictions whose parallel connection is ``M``."""
    comps = M.contract([e]).components()
    if len(comps) < 2:
        return None
    first = comps[0]
    rest = frozenset(M.ground) - first - {e}
    return M.delete(rest), M.delete(first)


def verify_parallel(M: Matroid, cache: HCache | None = None) -> CheckTally:
    """Wherever ``M/e`` splits, rebuild ``M`` as a parallel connection and check
    ``M/e = M1/e + M2/e`` and ``t h(M) = h(M1) h(M2)``."""
    tally = CheckTally()
    if M.has_loops() or not M.is_connected() or M.size < 2:
        return tally
    for e in M.ground:
        parts = split_at(M, e)
        if parts is None:
            continue
        M1, M2 = parts
        P = parallel_connection(M1, M2, e)
        tally.add(P == M, {"e": e, "clause": "parallel connection"})
        tally.add(M.contract([e]) == direct_sum(M1.contract([e]), M2.contract([e])),
                  {"e": e, "clause": "contraction splits"})
        lhs = _h(M, cache).polynomial().shift(1)
        rhs = _h(M1, cache).polynomial() * _h(M2, cache).polynomial()
        tally.add(lhs == rhs, {"e": e, "clause": "h product"})
    return tally


def verify_hbar_deletion_contraction(M: Matroid, cache: HCache | None = None) -> CheckTally:
    tally = CheckTally()
    if M.has_loops() or not M.is_connected() or M.size < 2:
        return tally
    for e in M.ground:
        D, C = M.delete([e]), M.contract([e])
        if D.is_connected() and C.is_connected() and not C.has_loops():
            tally.add(check_hbar_deletion_contraction(M, e, cache).ok, {"e": e})
    return tally


LEMMA_CHECKS = {
    "series1": verify_series1,
    "series1-unrestricted": lambda M, cache=None: verify_series1(M, cache, convention="unrestricted"),
    "series2": verify_series2,
    "two-sum": lambda M, cache=None: verify_two_sum(M),
    "deletion-contraction": verify_deletion_contraction,
    "h-basics": verify_h_basics,
    "series-minors": verify_series_minors,
    "parallel": verify_parallel,
    "hbar-deletion-contraction": verify_hbar_deletion_contraction,
}

