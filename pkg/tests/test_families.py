from itertools import product
from math import comb

import networkx as nx
import pytest

from cqfsym.errors import InvalidFunction, InvalidParams, InvalidSwapSite, SizeGuard
from cqfsym.families import (
    BOTTOMLESS,
    FULL,
    MountainSpec,
    all_connected_dags,
    bottomless_mountain,
    cycle_acyclic_orientations,
    family_keys,
    hessenberg_functions,
    mixed_mountain,
    mountain,
    mountain_specs,
    natural_unit_interval,
    naturally_oriented_cycle,
    oriented_star,
    oriented_trees,
    path_oriented,
    reflect_relabel,
    swap_graph,
    swap_sites,
    unswap_graph,
)
from cqfsym.graph import OrientedGraph, canonical_key, is_connected, natural_graph

from conftest import all_labeled_dags, iso_classes, nx_isomorphic


def _spec(tags, k):
    return MountainSpec.parse(tags, k)


def test_mountain_examples():
    g, geom = mountain(2, 2)
    assert g == OrientedGraph(3, ((1, 2), (1, 3), (2, 3)))
    assert geom.bottom_edge == (1, 3)
    assert mountain(5, 4)[0].n == 16


@pytest.mark.parametrize("p", [2, 3, 4, 5])
def test_mountain_p2_is_natural_cycle(p):
    assert mountain(p, 2)[0] == naturally_oriented_cycle(p + 1)


def test_mountain_counts():
    for p in range(2, 5):
        for k in range(2, 5):
            g, geom = mountain(p, k)
            assert g.n == p * (k - 1) + 1
            assert g.num_edges == p * comb(k, 2) + 1
            assert len(geom.lower) == p + 1
            assert len(geom.upper) == p * (k - 2)


def test_bottomless_examples():
    g, geom = bottomless_mountain(2, 3)
    assert g.n == 7
    for p in range(2, 5):
        for k in range(3, 5):
            g, geom = bottomless_mountain(p, k)
            assert g.n == 1 + p * k
            assert g.num_edges == p * (comb(k + 1, 2) - 1) + 1


def test_bottomless_5_4_lower_edges():
    g, geom = bottomless_mountain(5, 4)
    lower = geom.lower
    lower_edges = [(u, v) for u, v in g.edges if u in lower and v in lower]
    assert lower_edges == [(1, g.n)]


def test_mixed_degenerate_cases():
    assert mixed_mountain(_spec("fff", 3))[0] == mountain(3, 3)[0]
    assert mixed_mountain(_spec("bb", 4))[0] == bottomless_mountain(2, 4)[0]
    g, geom = mixed_mountain(_spec("fb", 3))
    assert g.n == 6 and geom.bottom_edge == (1, 6)


def test_geometry_layout():
    g, geom = mixed_mountain(_spec("fbf", 4))
    for c in geom.cliques:
        assert all(c.left < u < c.right for u in c.uppers)
    assert geom.to_json()["cliques"] == [[1, 4], [4, 8], [8, 11]]
    assert sorted(geom.lower + geom.upper) == list(g.vertices)


def test_spec_validation():
    with pytest.raises(InvalidParams):
        MountainSpec(2, (BOTTOMLESS, FULL))
    with pytest.raises(InvalidParams):
        MountainSpec(3, (FULL,))
    with pytest.raises(InvalidParams):
        _spec("fx", 3)
    with pytest.raises(InvalidParams):
        mountain(1, 3)
    with pytest.raises(InvalidParams):
        bottomless_mountain(2, 2)


def test_family_graphs_natural_and_connected():
    for n in range(3, 11):
        for spec in mountain_specs(n):
            g, _ = mixed_mountain(spec)
            assert g.n == n == spec.n
            assert g.is_natural and is_connected(g)


def test_reverse_spec_is_reflection():
    for n in range(4, 10):
        for spec in mountain_specs(n):
            g, _ = mixed_mountain(spec)
            assert mixed_mountain(spec.reversed())[0] == reflect_relabel(g)


def test_swap_and_unswap():
    g, geom = mixed_mountain(_spec("ffb", 3))
    assert swap_sites(geom) == [1]
    g2, geom2 = swap_graph(g, geom, 1)
    assert str(geom2.spec) == "fbf" and g2.n == g.n
    back = unswap_graph(g2, geom2, 1)
    assert back == (g, geom)
    with pytest.raises(InvalidSwapSite):
        swap_graph(g, geom, 0)
    with pytest.raises(InvalidSwapSite):
        swap_graph(g2, geom2, 1)


def test_mountain_specs_enumeration():
    # n - 1 = 5 must split into parts of k-1 (full) and k (bottomless)
    assert {(str(s), s.k) for s in mountain_specs(6)} == {("fffff", 2), ("fb", 3), ("bf", 3)}
    assert {(str(s), s.k) for s in mountain_specs(5)} == {("ffff", 2), ("ff", 3)}


def test_nui_examples():
    assert natural_unit_interval((2, 3, 4, 4)) == natural_graph(4, [(1, 2), (2, 3), (3, 4)])
    assert natural_unit_interval((3, 3, 3)).num_edges == 3
    assert natural_unit_interval((2, 2)) == OrientedGraph(2, ((1, 2),))
    with pytest.raises(InvalidFunction):
        natural_unit_interval((0, 3, 3))
    with pytest.raises(InvalidFunction):
        natural_unit_interval((3, 2, 3))
    with pytest.raises(InvalidFunction):
        natural_unit_interval((2, 4, 3))


def test_hessenberg_counts_are_catalan():
    assert [len(hessenberg_functions(n)) for n in range(1, 7)] == [1, 2, 5, 14, 42, 132]
    assert [len(hessenberg_functions(n, connected=True)) for n in range(1, 7)] == [1, 1, 2, 5, 14, 42]


def test_small_catalogs():
    assert oriented_trees(2) == [OrientedGraph(2, ((1, 2),))]
    assert oriented_star(4, "in") == OrientedGraph(4, ((1, 4), (2, 4), (3, 4)))
    assert oriented_star(3, [True, False]) == OrientedGraph(3, ((1, 3), (3, 2)))
    assert path_oriented([True, False]) == OrientedGraph(3, ((1, 2), (3, 2)))
    with pytest.raises(InvalidParams):
        oriented_star(3, "sideways")
    with pytest.raises(InvalidParams):
        cycle_acyclic_orientations(2)


def test_oriented_tree_counts_against_networkx():
    for n in range(1, 7):
        expected = 0
        for t in nx.nonisomorphic_trees(n) if n > 1 else [nx.empty_graph(1)]:
            orientations = []
            edges = list(t.edges)
            for bits in product((0, 1), repeat=len(edges)):
                es = tuple((u + 1, v + 1) if b else (v + 1, u + 1) for (u, v), b in zip(edges, bits))
                orientations.append(OrientedGraph(n, es))
            expected += len(iso_classes(orientations))
        assert len(oriented_trees(n)) == expected


def test_cycle_orientation_classes():
    assert len(cycle_acyclic_orientations(3)) == 1
    for n in range(3, 7):
        cyc = nx.cycle_graph(n)
        graphs = []
        for bits in product((0, 1), repeat=n):
            es = tuple((u + 1, v + 1) if b else (v + 1, u + 1) for (u, v), b in zip(cyc.edges, bits))
            d = nx.DiGraph(es)
            if nx.is_directed_acyclic_graph(d):
                graphs.append(OrientedGraph(n, es))
        assert len(cycle_acyclic_orientations(n)) == len(iso_classes(graphs))


def test_connected_dag_examples():
    assert len(all_connected_dags(1)) == 1
    assert all_connected_dags(2) == [OrientedGraph(2, ((1, 2),))]
    conn3 = [g for g in all_labeled_dags(3) if is_connected(g)]
    assert len(all_connected_dags(3)) == len(iso_classes(conn3)) == 4


def test_dag_guard():
    with pytest.raises(SizeGuard, match="unsafe-large"):
        all_connected_dags(8)
    with pytest.raises(SizeGuard):
        all_connected_dags(9, allow_large=True)


def test_family_keys():
    nui, mm = family_keys(3)
    assert canonical_key(natural_unit_interval((2, 3, 3))) in nui
    assert canonical_key(mountain(2, 2)[0]) in mm
    assert len(nui) == 2
