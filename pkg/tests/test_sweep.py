import json

import pytest

from bcmatroid.errors import BadParameters, UnknownPredicate
from bcmatroid.sweep import SweepConfig, evaluate, family_matroids, run_config, sweep
from bcmatroid.constructions import uniform


def test_config_validation():
    with pytest.raises(BadParameters):
        SweepConfig(family="petersen")
    with pytest.raises(BadParameters):
        SweepConfig(jobs=0)
    with pytest.raises(UnknownPredicate):
        SweepConfig(predicates=("pretty",))
    with pytest.raises(BadParameters):
        SweepConfig(lemmas=("lemma-9",))


def test_family_ids():
    assert [i for i, _ in family_matroids("wheel", max_edges=10)] == ["W3", "W4", "W5"]
    assert [i for i, _ in family_matroids("complete", max_edges=6)] == ["K2", "K3", "K4"]
    assert [i for i, _ in family_matroids("complete-bipartite", max_edges=4)] == \
        ["K1,1", "K1,2", "K1,3", "K1,4", "K2,2"]
    assert len(list(family_matroids("uniform", max_n=4))) == 2 + 3 + 4 + 5


def test_loopy_items_are_vacuous():
    rec, _ = evaluate("U(0,2)", uniform(0, 2), ("strongly-flawless",))
    assert rec["h"] is None and rec["h_bar"] == [0]
    assert rec["predicates"]["strongly-flawless"] == {"ok": True, "first_violation": None,
                                                      "vacuous": True}


def test_parallel_sweep_matches_sequential():
    cfg = SweepConfig("graphic", 5, predicates=("strongly-flawless", "o-sequence"),
                      lemmas=("series2",))
    one = run_config(cfg).to_dict(include_timings=False)
    four = run_config(SweepConfig(**{**cfg.__dict__, "jobs": 3})).to_dict(include_timings=False)
    assert json.dumps(one) == json.dumps(four)
    assert one["count"] == 1 + 2 + 5 + 12 + 33
    assert one["first_counterexample"] is None


def test_counterexample_is_reported():
    rep = run_config(SweepConfig("graphic", 7, predicates=(), lemmas=("series1",)))
    agg = rep.aggregate["lemma:series1"]
    assert agg["violations"] == 3
    first = rep.first_counterexample
    assert first["checks"] == ["lemma:series1"]
    assert first["record"]["h"] == [1, 2, 3, 3, 1]


def test_sweep_rejects_unknown_predicate():
    with pytest.raises(UnknownPredicate):
        sweep([], predicates=("pretty",))


def test_timings_are_separate():
    rep = sweep(family_matroids("complete", max_edges=3))
    assert "timings" not in rep.to_dict(include_timings=False)
    assert set(rep.timings["per_item"]) == {"K2", "K3"}
