import json

import pytest

from cqfsym.classify import (
    MIXED,
    NUI,
    OTHER,
    ClassificationRecord,
    ResultCache,
    cache_key,
    classify,
    classify_graph,
    dumps,
    summarize,
)
from cqfsym.families import mountain, natural_unit_interval
from cqfsym.graph import OrientedGraph

STAR = OrientedGraph(3, ((1, 3), (2, 3)))


def test_dumps_is_canonical():
    assert dumps({"b": 1, "a": [1, 2]}) == '{"a":[1,2],"b":1}'


def test_record_for_in_star():
    r = classify_graph(STAR)
    assert not r.symmetric
    assert r.witness == ((2, 1), (1, 2))
    assert r.e_positive is None
    assert r.tags == (OTHER,)
    assert (r.sources, r.sinks, r.width) == (2, 1, 2)


def test_record_for_path_and_triangle():
    path = classify_graph(natural_unit_interval((2, 3, 3)))
    assert path.symmetric and path.e_positive and path.palindromic
    assert path.tags == (NUI,)
    tri = classify_graph(mountain(2, 2)[0])
    assert tri.tags == (NUI, MIXED)


def test_record_round_trip():
    r = classify_graph(mountain(3, 2)[0])
    assert ClassificationRecord.from_json(json.loads(dumps(r.to_json()))) == r
    assert r.n == 4 and r.num_edges == 4


def test_record_invariants():
    res = classify(4)
    for r in res.records:
        assert (r.e_positive is not None) == r.symmetric
        assert (r.witness is None) == r.symmetric


def test_cache_key_ignores_labeling():
    assert cache_key(STAR) == cache_key(OrientedGraph(3, ((2, 1), (3, 1))))


def test_cache_atomic_put(tmp_path):
    cache = ResultCache(tmp_path)
    cache.put(STAR, "x")
    assert cache.get(STAR) == "x"
    assert cache.path(STAR).parent.name == "n3"
    assert not list(cache.path(STAR).parent.glob(".tmp-*"))


def test_classify_summary_small():
    res = classify(5)
    s = summarize(res.records)
    assert [s[str(n)]["total"] for n in range(1, 6)] == [1, 1, 4, 24, 267]
    assert [s[str(n)]["symmetric"] for n in range(1, 6)] == [1, 1, 2, 6, 16]
    assert all(row["untagged_symmetric"] == 0 for row in s.values())


def test_classify_cache_resume_and_recheck(tmp_path):
    first = classify(4, cache_dir=tmp_path)
    assert first.computed == 30 and first.cached == 0
    files = sorted((tmp_path / "n4").glob("*.json"))
    files[0].unlink()
    files[1].unlink()
    second = classify(4, cache_dir=tmp_path, recheck=5)
    assert (second.computed, second.cached) == (2, 28)
    assert second.recheck_mismatches == []
    assert second.lines() == first.lines()


def test_recheck_detects_tampering(tmp_path):
    classify(3, cache_dir=tmp_path)
    victim = next((tmp_path / "n3").glob("*.json"))
    data = json.loads(victim.read_text())
    data["width"] += 1
    victim.write_text(dumps(data))
    res = classify(3, cache_dir=tmp_path, recheck=10)
    assert len(res.recheck_mismatches) == 1


def test_workers_do_not_change_output():
    assert classify(4, workers=2).lines() == classify(4).lines()
