"""Independent oracles shared by the test modules.

Nothing here calls into the engine: each oracle recomputes its answer from
the definitions with the simplest possible code.
"""

from __future__ import annotations

from collections import defaultdict
from itertools import permutations, product
from math import comb

import networkx as nx
import pytest

from cqfsym.graph import OrientedGraph
from cqfsym.poly import QPoly
from cqfsym.qsym import QSymElement


def brute_cqf(g: OrientedGraph) -> QSymElement:
    """Sum q^asc over every proper coloring whose colors are exactly 1..l."""
    n = g.n
    terms = defaultdict(lambda: defaultdict(int))
    for kappa in product(range(1, n + 1), repeat=n):
        if any(kappa[u - 1] == kappa[v - 1] for u, v in g.edges):
            continue
        used = set(kappa)
        if used != set(range(1, len(used) + 1)):
            continue
        alpha = tuple(kappa.count(c) for c in range(1, len(used) + 1))
        asc = sum(kappa[u - 1] < kappa[v - 1] for u, v in g.edges)
        terms[alpha][asc] += 1
    out = {}
    for alpha, by_asc in terms.items():
        coeffs = [0] * (max(by_asc) + 1)
        for e, c in by_asc.items():
            coeffs[e] = c
        out[alpha] = QPoly(coeffs)
    return QSymElement(n, out)


def chromatic_polynomial(n: int, edges) -> dict:
    """Deletion-contraction on an undirected simple graph; returns {power: coeff}."""
    edges = {frozenset(e) for e in edges}
    if not edges:
        return {n: 1}
    e = next(iter(edges))
    u, v = sorted(e)
    rest = edges - {e}
    deleted = chromatic_polynomial(n, rest)
    merged = set()
    for f in rest:
        a, b = (v if w == u else w for w in f) if u in f else tuple(f)
        if a != b:
            merged.add(frozenset((a, b)))
    contracted = chromatic_polynomial(n - 1, merged)
    out = dict(deleted)
    for k, c in contracted.items():
        out[k] = out.get(k, 0) - c
    return {k: c for k, c in out.items() if c}


def eval_poly(p: dict, x: int) -> int:
    return sum(c * x**k for k, c in p.items())


def count_from_cqf(x: QSymElement, palette: int) -> int:
    """Colorings with colors from 1..palette: choose which colors appear."""
    return sum(p(1) * comb(palette, len(alpha)) for alpha, p in x.items())


def to_nx(g: OrientedGraph) -> nx.DiGraph:
    d = nx.DiGraph()
    d.add_nodes_from(g.vertices)
    d.add_edges_from(g.edges)
    return d


def nx_isomorphic(g: OrientedGraph, h: OrientedGraph) -> bool:
    return nx.is_isomorphic(to_nx(g), to_nx(h))


def all_labeled_dags(n: int):
    """Every acyclic orientation of every simple graph on 1..n, labeled."""
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    for choice in product((0, 1, 2), repeat=len(pairs)):
        edges = []
        for (i, j), c in zip(pairs, choice):
            if c == 1:
                edges.append((i, j))
            elif c == 2:
                edges.append((j, i))
        d = nx.DiGraph()
        d.add_nodes_from(range(1, n + 1))
        d.add_edges_from(edges)
        if nx.is_directed_acyclic_graph(d):
            yield OrientedGraph(n, tuple(edges))


def iso_classes(graphs):
    reps = []
    for g in graphs:
        if not any(nx_isomorphic(g, r) for r in reps):
            reps.append(g)
    return reps


def relabelings(g: OrientedGraph):
    for perm in permutations(range(1, g.n + 1)):
        yield g.relabel({v: perm[v - 1] for v in g.vertices})


@pytest.fixture
def edge12():
    return OrientedGraph(2, ((1, 2),))


@pytest.fixture
def in_star3():
    return OrientedGraph(3, ((1, 3), (2, 3)))
