"""Run predicates and lemma checks over generated families of matroids."""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Iterable, Iterator

from .constructions import complete, complete_bipartite, family_graphs, graphic, uniform, wheel
from .errors import BadParameters, UnknownPredicate
from .lab import (
    ALL_PREDICATES,
    LEMMA_CHECKS,
    HCache,
    complementary_h,
    g_vector,
    predicate_report,
)
from .matroid import Matroid

FAMILIES = ("graphic", "uniform", "wheel", "complete", "complete-bipartite")


@dataclass(frozen=True)
class SweepConfig:
    family: str = "graphic"
    max_edges: int = 7
    max_n: int = 8
    predicates: tuple[str, ...] = ("strongly-flawless",)
    lemmas: tuple[str, ...] = ()
    jobs: int = 1

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise BadParameters(f"unknown family {self.family!r}; choose from {', '.join(FAMILIES)}")
        if self.max_edges < 0 or self.max_n < 0 or self.jobs < 1:
            raise BadParameters("max-edges, max-n must be >= 0 and jobs >= 1")
        for p in self.predicates:
            if p not in ALL_PREDICATES:
                raise UnknownPredicate(f"unknown predicate {p!r}")
        for lemma in self.lemmas:
            if lemma not in LEMMA_CHECKS:
                raise BadParameters(f"unknown lemma check {lemma!r}")

    def family_items(self) -> Iterator[tuple[str, Matroid]]:
        return family_matroids(self.family, max_edges=self.max_edges, max_n=self.max_n)

    def to_dict(self) -> dict:
        d = asdict(self)
        d.pop("jobs")
        d["predicates"] = list(self.predicates)
        d["lemmas"] = list(self.lemmas)
        return d


def family_matroids(family: str, *, max_edges: int = 7, max_n: int = 8) -> Iterator[tuple[str, Matroid]]:
    """Named matroids of one family, in a fixed order."""
    if family == "graphic":
        for g in family_graphs(max_edges):
            yield f"graph[{g.describe()}]", graphic(g)
    elif family == "uniform":
        for n in range(1, max_n + 1):
            for r in range(n + 1):
                yield f"U({r},{n})", uniform(r, n)
    elif family == "wheel":
        n = 3
        while 2 * n <= max_edges:
            yield f"W{n}", graphic(wheel(n))
            n += 1
    elif family == "complete":
        n = 2
        while n * (n - 1) // 2 <= max_edges:
            yield f"K{n}", graphic(complete(n))
            n += 1
    elif family == "complete-bipartite":
        for a in range(1, max_edges + 1):
            for b in range(a, max_edges // a + 1):
                yield f"K{a},{b}", graphic(complete_bipartite(a, b))
    else:
        raise BadParameters(f"unknown family {family!r}")


def evaluate(ident: str, M: Matroid, predicates=(), lemmas=()) -> tuple[dict, float]:
    """Deterministic record for one matroid, plus the seconds it took."""
    start = time.perf_counter()
    cache = HCache()
    rec: dict = {"id": ident, "size": M.size, "rank": M.rank(),
                 "components": len(M.component_masks()), "loops": M.has_loops()}
    if M.has_loops():
        rec["h"] = None
        rec["h_bar"] = [0]
        rec["g"] = None
        rec["predicates"] = {p: {"ok": True, "first_violation": None, "vacuous": True}
                             for p in predicates}
    else:
        h = cache.h(M).trimmed
        rec["h"] = list(h)
        rec["h_bar"] = list(complementary_h(M, cache).entries)
        rec["g"] = list(g_vector(M, cache).entries)
        rep = predicate_report(h, predicates)
        rec["predicates"] = {p: {"ok": rep.outcomes[p], "first_violation": rep.first_violation[p]}
                             for p in predicates}
    rec["lemmas"] = {name: LEMMA_CHECKS[name](M, cache).to_dict() for name in lemmas}
    return rec, time.perf_counter() - start


def _evaluate_packed(args):
    return evaluate(*args)


@dataclass
class SweepReport:
    config: dict
    records: list[dict] = field(default_factory=list)
    timings: dict = field(default_factory=dict)

    @property
    def aggregate(self) -> dict:
        out: dict[str, dict[str, int]] = {}
        for rec in self.records:
            for p, res in rec["predicates"].items():
                agg = out.setdefault(f"predicate:{p}", {"evaluated": 0, "violations": 0})
                agg["evaluated"] += 1
                agg["violations"] += not res["ok"]
            for name, res in rec["lemmas"].items():
                agg = out.setdefault(f"lemma:{name}", {"evaluated": 0, "violations": 0,
                                                       "instances": 0})
                agg["evaluated"] += 1
                agg["instances"] += res["checked"]
                agg["violations"] += len(res["failures"])
        return out

    @property
    def first_counterexample(self) -> dict | None:
        for rec in self.records:
            bad = [f"predicate:{p}" for p, r in rec["predicates"].items() if not r["ok"]]
            bad += [f"lemma:{n}" for n, r in rec["lemmas"].items() if not r["ok"]]
            if bad:
                return {"checks": bad, "record": rec}
        return None

    @property
    def ok(self) -> bool:
        return self.first_counterexample is None

    def to_dict(self, include_timings: bool = True) -> dict:
        d = {"config": self.config,
             "count": len(self.records),
             "aggregate": self.aggregate,
             "first_counterexample": self.first_counterexample,
             "records": self.records}
        if include_timings:
            d["timings"] = self.timings
        return d


def sweep(family: Iterable[tuple[str, Matroid]], predicates=("strongly-flawless",), lemmas=(),
          jobs: int = 1, config: dict | None = None) -> SweepReport:
    """Evaluate every item; report order follows the family order for any ``jobs``."""
    for p in predicates:
        if p not in ALL_PREDICATES:
            raise UnknownPredicate(f"unknown predicate {p!r}")
    items = [(ident, M, tuple(predicates), tuple(lemmas)) for ident, M in family]
    start = time.perf_counter()
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_evaluate_packed, items, chunksize=8))
    else:
        results = [_evaluate_packed(it) for it in items]
    report = SweepReport(config or {"predicates": list(predicates), "lemmas": list(lemmas)})
    per_item = {}
    for rec, seconds in results:
        report.records.append(rec)
        per_item[rec["id"]] = round(seconds, 6)
    report.timings = {"total_seconds": round(time.perf_counter() - start, 6), "per_item": per_item}
    return report


def run_config(cfg: SweepConfig) -> SweepReport:
    return sweep(cfg.family_items(), cfg.predicates, cfg.lemmas, cfg.jobs, cfg.to_dict())
