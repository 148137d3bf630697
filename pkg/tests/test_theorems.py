import pytest

from cqfsym.errors import UnknownTheorem
from cqfsym.graph import is_connected, sources_and_sinks
from cqfsym.theorems import (
    THEOREMS,
    bottomless_instances,
    mixed_instances,
    mountain_instances,
    run_theorem,
)

from conftest import all_labeled_dags, iso_classes


@pytest.mark.parametrize(
    "tid,params",
    [
        ("lemma-rev", {"max_n": 4}),
        ("lemma-sources-sinks", {"max_n": 5}),
        ("lemma-antichain", {"max_n": 5}),
        ("thm-dag", {"max_n": 5}),
        ("cor-dpath", {"max_n": 5}),
        ("thm-product", {"max_n": 3}),
        ("cor-tree", {"max_n": 5}),
        ("cor-cycle", {"max_n": 5}),
        ("thm-mountain", {"max_n": 7}),
        ("thm-bottomless", {"max_n": 7}),
        ("thm-mixed", {"max_n": 7}),
        ("thm-swap", {"max_n": 7}),
    ],
)
def test_theorems_hold_at_small_scale(tid, params):
    rep = run_theorem(tid, **params)
    assert rep.passed, rep.counterexamples
    assert rep.checked > 0
    assert rep.to_json()["theorem"] == tid


def test_hypothesis_counts_are_nontrivial():
    # oracle: connected labeled DAGs on <= 4 vertices with two or more sources, up to isomorphism
    expected = 0
    for n in range(1, 5):
        conn = [g for g in all_labeled_dags(n) if is_connected(g)]
        expected += sum(1 for g in iso_classes(conn) if len(sources_and_sinks(g)[0]) >= 2)
    rep = run_theorem("thm-dag", max_n=4)
    assert rep.notes["graphs_meeting_hypothesis"] == expected


def test_single_instance_params():
    assert run_theorem("thm-mountain", p=2, k=3).checked == 1
    assert run_theorem("thm-mixed", spec="fbf", k=3).checked == 1
    assert run_theorem("thm-swap", spec="ffb", k=3).checked == 1


def test_instance_lists():
    assert [label for label, _ in mountain_instances(5)] == ["M(2,2)", "M(3,2)", "M(4,2)", "M(2,3)"]
    assert [label for label, _ in bottomless_instances(7)] == ["B(2,3)"]
    assert all(g.n <= 6 for _, g in mixed_instances(6))


def test_unknown_theorem():
    with pytest.raises(UnknownTheorem):
        run_theorem("thm-nope")
    assert "thm-mixed" in THEOREMS
