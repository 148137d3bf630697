import random
from itertools import combinations

import networkx as nx
import pytest

from cqfsym.errors import InvalidGraph
from cqfsym.families import all_connected_dags, all_dags
from cqfsym.graph import (
    OrientedGraph,
    canonical_form,
    canonical_key,
    connected_components,
    disjoint_union,
    is_antichain,
    is_connected,
    is_isomorphic,
    max_antichain,
    min_chain_cover,
    natural_graph,
    poset_closure,
    reverse,
    source_sink_chain_cover,
    sources_and_sinks,
    width,
)

from conftest import all_labeled_dags, iso_classes, nx_isomorphic, relabelings, to_nx


def test_validation():
    with pytest.raises(InvalidGraph):
        OrientedGraph(2, ((1, 1),))
    with pytest.raises(InvalidGraph):
        OrientedGraph(2, ((1, 3),))
    with pytest.raises(InvalidGraph):
        OrientedGraph(2, ((1, 2), (2, 1)))
    with pytest.raises(InvalidGraph):
        OrientedGraph(3, ((1, 2), (2, 3), (3, 1)))


def test_edges_sorted_and_deduplicated():
    g = OrientedGraph(3, ((2, 3), (1, 3), (2, 3)))
    assert g.edges == ((1, 3), (2, 3))
    assert g.to_json() == {"n": 3, "edges": [[1, 3], [2, 3]]}
    assert OrientedGraph.from_json(g.to_json()) == g


def test_natural_graph_orients_upward():
    g = natural_graph(3, [(3, 1), (2, 3)])
    assert g.edges == ((1, 3), (2, 3))
    assert g.is_natural


def test_sources_sinks():
    g = OrientedGraph(3, ((1, 3), (2, 3)))
    assert sources_and_sinks(g) == ({1, 2}, {3})
    assert sources_and_sinks(OrientedGraph(1)) == ({1}, {1})


def test_reverse_swaps_sources_and_sinks():
    for n in range(1, 5):
        for g in all_dags(n):
            s, t = sources_and_sinks(g)
            rs, rt = sources_and_sinks(reverse(g))
            assert (rs, rt) == (t, s)


def _dags_up_to(n):
    return [g for m in range(1, n + 1) for g in all_dags(m)]


def test_closure_matches_networkx():
    for g in _dags_up_to(5):
        closure = poset_closure(g)
        expected = set(nx.transitive_closure_dag(to_nx(g)).edges)
        assert closure.reachable == expected


def test_closure_transitive_and_acyclic():
    for g in _dags_up_to(5):
        c = poset_closure(g)
        rel = c.reachable
        assert all((u, u) not in rel for u in g.vertices)
        for (a, b) in rel:
            for (x, y) in rel:
                if b == x:
                    assert (a, y) in rel


def _brute_width(g):
    c = poset_closure(g)
    best = 0
    for r in range(1, g.n + 1):
        for s in combinations(g.vertices, r):
            if all(not c.comparable(u, v) for u, v in combinations(s, 2)):
                best = r
    return best


def test_dilworth_equality_n6():
    for g in _dags_up_to(6):
        cover = min_chain_cover(g)
        anti = max_antichain(g)
        assert len(cover) == len(anti) == width(g)
        assert is_antichain(g, anti)
        c = poset_closure(g)
        assert sorted(v for ch in cover.chains for v in ch) == list(g.vertices)
        for ch in cover.chains:
            assert all(c.less(a, b) for a, b in zip(ch, ch[1:]))


def test_width_against_brute_force():
    for g in _dags_up_to(5):
        assert width(g) == _brute_width(g)


def test_chain_cover_examples():
    assert len(min_chain_cover(OrientedGraph(3, ((1, 3), (2, 3))))) == 2
    path = OrientedGraph(4, ((1, 2), (2, 3), (3, 4)))
    assert min_chain_cover(path).chains == ((1, 2, 3, 4),)


def test_source_sink_cover_when_balanced():
    hits = 0
    for g in _dags_up_to(6):
        s, t = sources_and_sinks(g)
        if len(s) == len(t) == width(g):
            hits += 1
            cover = source_sink_chain_cover(g)
            for ch in cover.chains:
                assert ch[0] in s and ch[-1] in t
    assert hits > 100


def test_connected_components():
    g = OrientedGraph(4, ((1, 2), (3, 4)))
    assert connected_components(g) == [OrientedGraph(2, ((1, 2),))] * 2
    assert connected_components(OrientedGraph(3)) == [OrientedGraph(1)] * 3
    assert not is_connected(g)
    h = OrientedGraph(3, ((3, 1), (2, 3)))
    assert connected_components(h) == [h]


def test_disjoint_union_offsets():
    u = disjoint_union([OrientedGraph(2, ((2, 1),)), OrientedGraph(1)])
    assert u == OrientedGraph(3, ((2, 1),))


def test_canonical_form_examples():
    a = OrientedGraph(3, ((1, 3), (2, 3)))
    b = OrientedGraph(3, ((2, 1), (3, 1)))
    assert canonical_form(a) == canonical_form(b)
    assert canonical_form(a).is_natural


def test_canonical_form_invariant_under_relabeling():
    for g in _dags_up_to(5):
        if g.n > 4 and g.num_edges < 3:
            continue
        key = canonical_key(g)
        for h in relabelings(g):
            assert canonical_key(h) == key


def test_canonical_form_is_isomorphic_to_input():
    rng = random.Random(7)
    for g in _dags_up_to(6)[::7]:
        perm = list(g.vertices)
        rng.shuffle(perm)
        h = g.relabel({v: perm[v - 1] for v in g.vertices})
        assert nx_isomorphic(canonical_form(h), g)


def test_dag_classes_against_labeled_brute_force():
    for n in range(1, 5):
        expected = iso_classes(all_labeled_dags(n))
        got = all_dags(n)
        assert len(got) == len(expected)
        for g in got:
            assert sum(nx_isomorphic(g, e) for e in expected) == 1


def test_dag_counts():
    # unlabeled DAGs and connected ones (OEIS A003087, A101228)
    assert [len(all_dags(n)) for n in range(1, 6)] == [1, 2, 6, 31, 302]
    assert [len(all_connected_dags(n)) for n in range(1, 6)] == [1, 1, 4, 24, 267]


def test_is_isomorphic_agrees_with_networkx():
    graphs = all_dags(4)
    rng = random.Random(1)
    for _ in range(200):
        g, h = rng.choice(graphs), rng.choice(graphs)
        perm = list(range(1, 5))
        rng.shuffle(perm)
        h = h.relabel({v: perm[v - 1] for v in h.vertices})
        assert is_isomorphic(g, h) == nx_isomorphic(g, h)
