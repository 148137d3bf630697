"""Graph families: mountains and their variants, unit interval graphs, small DAG catalogs."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, List, Sequence, Tuple

from .errors import InvalidFunction, InvalidParams, InvalidSwapSite, SizeGuard
from .graph import OrientedGraph, canonical_form, canonical_key, is_connected, natural_graph

FULL = "f"
BOTTOMLESS = "b"

MAX_DAG_N = 7
MAX_DAG_N_UNSAFE = 8


@dataclass(frozen=True)
class MountainSpec:
    """A sequence of clique tags: ``"f"`` for a k-clique, ``"b"`` for a bottomless (k+1)-clique."""

    k: int
    cliques: Tuple[str, ...]

    def __post_init__(self):
        tags = tuple(self.cliques)
        object.__setattr__(self, "cliques", tags)
        if self.k < 2:
            raise InvalidParams(f"clique size k={self.k} must be at least 2")
        if len(tags) < 2:
            raise InvalidParams("a mountain needs at least two cliques")
        bad = [t for t in tags if t not in (FULL, BOTTOMLESS)]
        if bad:
            raise InvalidParams(f"unknown clique tags {bad!r}; use 'f' or 'b'")
        if BOTTOMLESS in tags and self.k < 3:
            raise InvalidParams("bottomless cliques require k >= 3")

    @classmethod
    def parse(cls, tags: str, k: int) -> MountainSpec:
        return cls(k, tuple(tags.strip().lower()))

    @property
    def p(self) -> int:
        return len(self.cliques)

    @property
    def n(self) -> int:
        return 1 + sum(self.k - 1 if t == FULL else self.k for t in self.cliques)

    def reversed(self) -> MountainSpec:
        return MountainSpec(self.k, self.cliques[::-1])

    def __str__(self) -> str:
        return "".join(self.cliques)


@dataclass(frozen=True)
class Clique:
    left: int
    uppers: Tuple[int, ...]
    right: int
    tag: str

    @property
    def vertices(self) -> Tuple[int, ...]:
        return (self.left,) + self.uppers + (self.right,)


@dataclass(frozen=True)
class MountainGeometry:
    spec: MountainSpec
    cliques: Tuple[Clique, ...]

    @property
    def k(self) -> int:
        return self.spec.k

    @property
    def tags(self) -> Tuple[str, ...]:
        return self.spec.cliques

    @property
    def n(self) -> int:
        return self.spec.n

    @property
    def lower(self) -> Tuple[int, ...]:
        return (self.cliques[0].left,) + tuple(c.right for c in self.cliques)

    @property
    def upper(self) -> Tuple[int, ...]:
        return tuple(v for c in self.cliques for v in c.uppers)

    @property
    def bottom_edge(self) -> Tuple[int, int]:
        return (1, self.n)

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "spec": str(self.spec),
            "lower": list(self.lower),
            "upper": list(self.upper),
            "cliques": [[c.left, c.right] for c in self.cliques],
        }


def _geometry(spec: MountainSpec) -> MountainGeometry:
    cliques = []
    left = 1
    for tag in spec.cliques:
        m = spec.k - 2 if tag == FULL else spec.k - 1
        uppers = tuple(range(left + 1, left + 1 + m))
        right = left + m + 1
        cliques.append(Clique(left, uppers, right, tag))
        left = right
    return MountainGeometry(spec, tuple(cliques))


def mixed_mountain(spec: MountainSpec) -> Tuple[OrientedGraph, MountainGeometry]:
    geom = _geometry(spec)
    edges = set()
    for c in geom.cliques:
        for u, v in combinations(c.vertices, 2):
            edges.add((u, v))
        if c.tag == BOTTOMLESS:
            edges.discard((c.left, c.right))
    edges.add(geom.bottom_edge)
    return OrientedGraph(geom.n, tuple(edges)), geom


def mountain(p: int, k: int) -> Tuple[OrientedGraph, MountainGeometry]:
    if p < 2 or k < 2:
        raise InvalidParams(f"mountain needs p >= 2 and k >= 2, got p={p}, k={k}")
    return mixed_mountain(MountainSpec(k, (FULL,) * p))


def bottomless_mountain(p: int, k: int) -> Tuple[OrientedGraph, MountainGeometry]:
    """``p`` bottomless (k+1)-cliques: n = 1 + p*k."""
    if p < 2 or k < 3:
        raise InvalidParams(f"bottomless mountain needs p >= 2 and k >= 3, got p={p}, k={k}")
    return mixed_mountain(MountainSpec(k, (BOTTOMLESS,) * p))


def _retag(geom: MountainGeometry, i: int, expect: Tuple[str, str]) -> MountainSpec:
    tags = geom.tags
    if not 0 <= i < len(tags) - 1 or (tags[i], tags[i + 1]) != expect:
        raise InvalidSwapSite(
            f"clique pair at {i} must be {''.join(expect)!r}, spec is {str(geom.spec)!r}"
        )
    new = list(tags)
    new[i], new[i + 1] = new[i + 1], new[i]
    return MountainSpec(geom.k, tuple(new))


def swap_graph(g: OrientedGraph, geom: MountainGeometry, clique_index: int):
    """Exchange a k-clique with the bottomless (k+1)-clique to its right."""
    return mixed_mountain(_retag(geom, clique_index, (FULL, BOTTOMLESS)))


def unswap_graph(g: OrientedGraph, geom: MountainGeometry, clique_index: int):
    """Inverse of :func:`swap_graph`: bottomless then full becomes full then bottomless."""
    return mixed_mountain(_retag(geom, clique_index, (BOTTOMLESS, FULL)))


def swap_sites(geom: MountainGeometry) -> List[int]:
    return [i for i in range(geom.spec.p - 1) if geom.tags[i : i + 2] == (FULL, BOTTOMLESS)]


def reflect_relabel(g: OrientedGraph) -> OrientedGraph:
    """Relabel ``i -> n+1-i`` and orient every edge from smaller to larger label."""
    n = g.n
    return natural_graph(n, ((n + 1 - u, n + 1 - v) for u, v in g.edges))


def mountain_specs(n: int) -> List[MountainSpec]:
    """Every mixed mountain spec on exactly ``n`` vertices."""
    out = []
    for k in range(2, n):
        kinds = (FULL,) if k == 2 else (FULL, BOTTOMLESS)
        p = 2
        while 1 + p * (k - 1) <= n:
            for tags in product(kinds, repeat=p):
                spec = MountainSpec(k, tags)
                if spec.n == n:
                    out.append(spec)
            p += 1
    return out


# -- unit interval graphs ------------------------------------------------------------


def natural_unit_interval(h: Sequence[int]) -> OrientedGraph:
    """Edges ``i -> j`` for ``i < j <= h(i)``; ``h`` is 1-indexed via position."""
    h = [int(x) for x in h]
    n = len(h)
    for i, hi in enumerate(h, start=1):
        if not i <= hi <= n:
            raise InvalidFunction(f"h({i}) = {hi} is outside [{i}, {n}]")
    if any(a > b for a, b in zip(h, h[1:])):
        raise InvalidFunction(f"h = {tuple(h)} is not nondecreasing")
    return OrientedGraph(n, tuple((i, j) for i in range(1, n + 1) for j in range(i + 1, h[i - 1] + 1)))


def hessenberg_functions(n: int, connected: bool = False) -> List[Tuple[int, ...]]:
    """All nondecreasing ``h`` with ``i <= h(i) <= n``; with ``connected``, also ``h(i) > i`` for ``i < n``."""
    out = []

    def grow(prefix: List[int]) -> None:
        i = len(prefix) + 1
        if i > n:
            out.append(tuple(prefix))
            return
        lo = max(prefix[-1] if prefix else 1, i + 1 if connected and i < n else i)
        for hi in range(lo, n + 1):
            prefix.append(hi)
            grow(prefix)
            prefix.pop()

    grow([])
    return out


# -- small catalogs ------------------------------------------------------------------


def _dedup(graphs: Iterable[OrientedGraph]) -> List[OrientedGraph]:
    seen = {}
    for g in graphs:
        c = canonical_form(g)
        seen.setdefault((c.n, c.edges), c)
    return [seen[key] for key in sorted(seen)]


def path_oriented(bits: Sequence[bool]) -> OrientedGraph:
    """Path ``1 - 2 - ... - n``; ``bits[i]`` true orients the edge as ``i+1 -> i+2``."""
    edges = [(i + 1, i + 2) if b else (i + 2, i + 1) for i, b in enumerate(bits)]
    return OrientedGraph(len(bits) + 1, tuple(edges))


def oriented_star(n: int, orientation="in") -> OrientedGraph:
    """Star with center ``n``; ``orientation`` is ``"in"``, ``"out"`` or one flag per leaf (true = inward)."""
    if n < 1:
        raise InvalidParams("a star needs at least one vertex")
    if isinstance(orientation, str):
        if orientation not in ("in", "out"):
            raise InvalidParams(f"unknown star orientation {orientation!r}")
        flags = [orientation == "in"] * (n - 1)
    else:
        flags = list(orientation)
        if len(flags) != n - 1:
            raise InvalidParams(f"need {n - 1} orientation flags, got {len(flags)}")
    return OrientedGraph(n, tuple((i, n) if f else (n, i) for i, f in enumerate(flags, start=1)))


def oriented_trees(n: int) -> List[OrientedGraph]:
    """All oriented trees on ``n`` vertices up to digraph isomorphism.

    Every tree on ``n`` vertices is a tree on ``n - 1`` vertices plus a leaf,
    so the catalog grows one leaf (in either direction) at a time.
    """
    if n < 1:
        raise InvalidParams("n must be positive")
    level = [OrientedGraph(1)]
    for m in range(2, n + 1):
        level = _dedup(
            OrientedGraph(m, t.edges + (e,))
            for t in level
            for v in range(1, m)
            for e in ((v, m), (m, v))
        )
    return level


def cycle_acyclic_orientations(n: int) -> List[OrientedGraph]:
    if n < 3:
        raise InvalidParams("cycles need at least 3 vertices")
    pairs = [(i, i % n + 1) for i in range(1, n + 1)]
    graphs = []
    for bits in product((True, False), repeat=n):
        if all(bits) or not any(bits):
            continue
        graphs.append(OrientedGraph(n, tuple(e if b else e[::-1] for e, b in zip(pairs, bits))))
    return _dedup(graphs)


def naturally_oriented_cycle(n: int) -> OrientedGraph:
    return natural_graph(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def all_dags(n: int, allow_large: bool = False) -> List[OrientedGraph]:
    """Every DAG on ``n`` vertices (connected or not) up to isomorphism.

    A DAG minus one of its sinks is a DAG on one fewer vertex, so each level
    adds a new sink with an arbitrary in-neighborhood to every class of the
    previous level and de-duplicates by canonical form.
    """
    _guard(n, allow_large)
    level = [OrientedGraph(0)]
    for m in range(1, n + 1):
        level = _dedup(
            OrientedGraph(m, g.edges + tuple((u, m) for u in range(1, m) if mask >> (u - 1) & 1))
            for g in level
            for mask in range(1 << (m - 1))
        )
    return level


def all_connected_dags(n: int, allow_large: bool = False) -> List[OrientedGraph]:
    """Connected acyclic orientations on ``n`` vertices, one canonical form per class."""
    return [g for g in all_dags(n, allow_large) if is_connected(g)]


def _guard(n: int, allow_large: bool) -> None:
    limit = MAX_DAG_N_UNSAFE if allow_large else MAX_DAG_N
    if n > limit:
        hint = "" if allow_large else " (n = 8 needs the unsafe-large option)"
        raise SizeGuard(f"DAG enumeration refused for n={n} > {limit}{hint}")


def family_keys(n: int) -> Tuple[frozenset, frozenset]:
    """Canonical keys of connected natural unit interval graphs and mixed mountains on ``n`` vertices."""
    nui = frozenset(
        canonical_key(natural_unit_interval(h)) for h in hessenberg_functions(n, connected=True)
    )
    mm = frozenset(canonical_key(mixed_mountain(s)[0]) for s in mountain_specs(n))
    return nui, mm
