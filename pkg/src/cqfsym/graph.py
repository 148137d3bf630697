"""Acyclically oriented labeled graphs and their poset structure."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .errors import InvalidGraph, NotFound

Edge = Tuple[int, int]


@dataclass(frozen=True)
class OrientedGraph:
    """Graph on vertices ``1..n`` with every edge ``(u, v)`` oriented ``u -> v``.

    The edge tuple is stored sorted.  Construction rejects loops, parallel
    or anti-parallel pairs and directed cycles.
    """

    n: int
    edges: Tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise InvalidGraph("vertex count must be nonnegative")
        edges = tuple(sorted({(int(u), int(v)) for u, v in self.edges}))
        for u, v in edges:
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise InvalidGraph(f"edge {(u, v)} out of range for n={self.n}")
            if u == v:
                raise InvalidGraph(f"self-loop at {u}")
        es = set(edges)
        for u, v in edges:
            if (v, u) in es:
                raise InvalidGraph(f"anti-parallel pair {(u, v)}")
        object.__setattr__(self, "edges", edges)
        if self.topological_order() is None:
            raise InvalidGraph("orientation has a directed cycle")

    # -- adjacency -----------------------------------------------------------

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @cached_property
    def out_masks(self) -> Tuple[int, ...]:
        """``out_masks[v-1]`` has bit ``w-1`` set for every edge ``v -> w``."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u - 1] |= 1 << (v - 1)
        return tuple(masks)

    @cached_property
    def in_masks(self) -> Tuple[int, ...]:
        masks = [0] * self.n
        for u, v in self.edges:
            masks[v - 1] |= 1 << (u - 1)
        return tuple(masks)

    @cached_property
    def adj_masks(self) -> Tuple[int, ...]:
        return tuple(a | b for a, b in zip(self.out_masks, self.in_masks))

    @cached_property
    def neighbors(self) -> Tuple[Tuple[int, ...], ...]:
        """Undirected neighbor lists, index ``v-1``."""
        return tuple(
            tuple(w + 1 for w in range(self.n) if m >> w & 1) for m in self.adj_masks
        )

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.out_masks[u - 1] >> (v - 1) & 1)

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.adj_masks[u - 1] >> (v - 1) & 1)

    def is_natural(self) -> bool:
        return all(u < v for u, v in self.edges)

    def topological_order(self) -> Optional[List[int]]:
        indeg = [0] * (self.n + 1)
        out: Dict[int, List[int]] = {v: [] for v in range(1, self.n + 1)}
        for u, v in self.edges:
            indeg[v] += 1
            out[u].append(v)
        ready = [v for v in range(1, self.n + 1) if indeg[v] == 0]
        order = []
        while ready:
            ready.sort(reverse=True)
            v = ready.pop()
            order.append(v)
            for w in out[v]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    ready.append(w)
        return order if len(order) == self.n else None

    # -- conversions ---------------------------------------------------------

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, data: dict) -> OrientedGraph:
        return cls(int(data["n"]), tuple(tuple(e) for e in data["edges"]))

    def relabel(self, mapping: Dict[int, int]) -> OrientedGraph:
        """Apply a vertex bijection ``old -> new``; orientation travels with the edges."""
        return OrientedGraph(self.n, tuple((mapping[u], mapping[v]) for u, v in self.edges))

    def undirected_edges(self) -> FrozenSet[FrozenSet[int]]:
        return frozenset(frozenset(e) for e in self.edges)


def natural_graph(n: int, edges: Iterable[Tuple[int, int]]) -> OrientedGraph:
    """Graph whose orientation is induced by the labels (smaller -> larger)."""
    return OrientedGraph(n, tuple((min(u, v), max(u, v)) for u, v in edges))


def disjoint_union(graphs: Sequence[OrientedGraph]) -> OrientedGraph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return OrientedGraph(offset, tuple(edges))


def sources_and_sinks(g: OrientedGraph) -> Tuple[FrozenSet[int], FrozenSet[int]]:
    """Vertices without incoming edges, and vertices without outgoing edges."""
    sources = frozenset(v for v in g.vertices if not g.in_masks[v - 1])
    sinks = frozenset(v for v in g.vertices if not g.out_masks[v - 1])
    return sources, sinks


def reverse(g: OrientedGraph) -> OrientedGraph:
    return OrientedGraph(g.n, tuple((v, u) for u, v in g.edges))


# -- poset structure -------------------------------------------------------------


@dataclass(frozen=True)
class PosetClosure:
    """Strict order ``u < v`` iff a directed path ``u -> ... -> v`` exists."""

    n: int
    below: Tuple[int, ...]  # below[v-1]: bitmask of vertices strictly less than v

    @cached_property
    def above(self) -> Tuple[int, ...]:
        masks = [0] * self.n
        for v in range(self.n):
            m = self.below[v]
            while m:
                low = m & -m
                masks[low.bit_length() - 1] |= 1 << v
                m ^= low
        return tuple(masks)

    def less(self, u: int, v: int) -> bool:
        return bool(self.below[v - 1] >> (u - 1) & 1)

    def comparable(self, u: int, v: int) -> bool:
        return self.less(u, v) or self.less(v, u)

    @property
    def reachable(self) -> FrozenSet[Tuple[int, int]]:
        return frozenset(
            (u, v)
            for v in range(1, self.n + 1)
            for u in range(1, self.n + 1)
            if self.below[v - 1] >> (u - 1) & 1
        )

    def strictly_below(self, v: int) -> List[int]:
        return [u for u in range(1, self.n + 1) if self.below[v - 1] >> (u - 1) & 1]


def poset_closure(g: OrientedGraph) -> PosetClosure:
    below = [0] * g.n
    for v in g.topological_order():
        m = g.in_masks[v - 1]
        acc = m
        while m:
            low = m & -m
            acc |= below[low.bit_length() - 1]
            m ^= low
        below[v - 1] = acc
    return PosetClosure(g.n, tuple(below))


@dataclass(frozen=True)
class ChainDecomposition:
    chains: Tuple[Tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.chains)

    def chain_of(self, v: int) -> int:
        for i, c in enumerate(self.chains):
            if v in c:
                return i
        raise KeyError(v)


def _max_matching(g: OrientedGraph, closure: PosetClosure) -> Dict[int, int]:
    """Maximum matching of the split comparability graph (left ``u`` to right ``v`` when ``u < v``).

    Returns ``match_right``: right vertex -> matched left vertex.
    """
    above = closure.above
    match_right: Dict[int, int] = {}

    def augment(u: int, seen: set) -> bool:
        m = above[u - 1]
        while m:
            low = m & -m
            v = low.bit_length()
            m ^= low
            if v in seen:
                continue
            seen.add(v)
            if v not in match_right or augment(match_right[v], seen):
                match_right[v] = u
                return True
        return False

    for u in g.vertices:
        augment(u, set())
    return match_right


def min_chain_cover(g: OrientedGraph) -> ChainDecomposition:
    """A minimum chain decomposition from a maximum matching (Fulkerson's reduction)."""
    closure = poset_closure(g)
    match_right = _max_matching(g, closure)
    succ = {u: v for v, u in match_right.items()}
    chains = []
    for v in g.vertices:
        if v in match_right:
            continue
        chain = [v]
        while chain[-1] in succ:
            chain.append(succ[chain[-1]])
        chains.append(tuple(chain))
    return ChainDecomposition(tuple(chains))


def max_antichain(g: OrientedGraph) -> FrozenSet[int]:
    """A maximum antichain, read off a minimum vertex cover via Koenig's theorem."""
    if g.n == 0:
        return frozenset()
    closure = poset_closure(g)
    match_right = _max_matching(g, closure)
    match_left = {u: v for v, u in match_right.items()}
    above = closure.above
    # alternating search from unmatched left vertices
    z_left = {u for u in g.vertices if u not in match_left}
    z_right = set()
    frontier = list(z_left)
    while frontier:
        u = frontier.pop()
        m = above[u - 1]
        while m:
            low = m & -m
            v = low.bit_length()
            m ^= low
            if v in z_right:
                continue
            z_right.add(v)
            w = match_right.get(v)
            if w is not None and w not in z_left:
                z_left.add(w)
                frontier.append(w)
    cover_left = set(g.vertices) - z_left
    cover_right = z_right
    return frozenset(v for v in g.vertices if v not in cover_left and v not in cover_right)


def width(g: OrientedGraph) -> int:
    return len(max_antichain(g))


def is_antichain(g: OrientedGraph, vertices: Iterable[int], closure: Optional[PosetClosure] = None) -> bool:
    closure = closure or poset_closure(g)
    vs = list(vertices)
    return not any(closure.comparable(a, b) for i, a in enumerate(vs) for b in vs[i + 1:])


def _is_source_sink_cover(cover: ChainDecomposition, sources, sinks) -> bool:
    return all(
        sum(v in sources for v in c) == 1 and sum(v in sinks for v in c) == 1
        for c in cover.chains
    )


def source_sink_chain_cover(g: OrientedGraph, max_n: int = 10) -> ChainDecomposition:
    """A minimum chain decomposition whose chains each hold one source and one sink.

    Sources (and sinks) form antichains, so a chain meets each set at most
    once; when both sets have size equal to the width every minimum cover
    already qualifies.  The exhaustive fallback exists to surface graphs
    where that reasoning breaks.
    """
    sources, sinks = sources_and_sinks(g)
    cover = min_chain_cover(g)
    if _is_source_sink_cover(cover, sources, sinks):
        return cover
    if g.n > max_n:
        raise NotFound(f"no source-sink chain cover found greedily for {g.to_json()}")
    found = _search_source_sink_cover(g, len(cover), sources, sinks)
    if found is None:
        raise NotFound(f"no source-sink chain cover exists for {g.to_json()}")
    return found


def _search_source_sink_cover(g, size, sources, sinks) -> Optional[ChainDecomposition]:
    closure = poset_closure(g)
    order = g.topological_order()
    chains: List[List[int]] = []

    def place(i: int) -> Optional[ChainDecomposition]:
        if i == len(order):
            cover = ChainDecomposition(tuple(tuple(c) for c in chains))
            return cover if _is_source_sink_cover(cover, sources, sinks) else None
        v = order[i]
        for c in chains:
            if closure.less(c[-1], v):
                c.append(v)
                res = place(i + 1)
                c.pop()
                if res is not None:
                    return res
        if len(chains) < size:
            chains.append([v])
            res = place(i + 1)
            chains.pop()
            if res is not None:
                return res
        return None

    return place(0)


# -- connectivity and canonical forms ------------------------------------------------


def connected_components(g: OrientedGraph) -> List[OrientedGraph]:
    """Components of the underlying graph, each relabeled ``1..k`` in vertex order."""
    seen = 0
    comps = []
    for v in g.vertices:
        if seen >> (v - 1) & 1:
            continue
        comp = 1 << (v - 1)
        frontier = comp
        while frontier:
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                nxt |= g.adj_masks[low.bit_length() - 1]
                m ^= low
            frontier = nxt & ~comp
            comp |= nxt
        seen |= comp
        members = [w for w in g.vertices if comp >> (w - 1) & 1]
        index = {w: i + 1 for i, w in enumerate(members)}
        edges = tuple((index[a], index[b]) for a, b in g.edges if a in index)
        comps.append(OrientedGraph(len(members), edges))
    return comps


def is_connected(g: OrientedGraph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def canonical_form(g: OrientedGraph) -> OrientedGraph:
    """Canonical naturally labeled representative of the digraph isomorphism class.

    Among all natural relabelings (topological orders), pick the one whose
    sequence of in-neighbor codes is lexicographically least; the code of
    the vertex labeled ``t`` is the bitmask of labels of its in-neighbors.
    Labels are assigned one position at a time, keeping only the partial
    labelings that attain the least code so far.
    """
    n = g.n
    in_lists = [[u - 1 for u in g.vertices if g.in_masks[v] >> (u - 1) & 1] for v in range(n)]
    in_masks = [g.in_masks[v] for v in range(n)]
    # state: (positions tuple indexed by vertex (-1 = unlabeled), placed mask)
    states = [((-1,) * n, 0)]
    codes: List[int] = []
    for t in range(n):
        best = None
        nxt = []
        for pos, placed in states:
            for v in range(n):
                if placed >> v & 1 or in_masks[v] & ~placed:
                    continue
                code = 0
                for u in in_lists[v]:
                    code |= 1 << pos[u]
                if best is None or code < best:
                    best = code
                    nxt = []
                if code == best:
                    new_pos = pos[:v] + (t,) + pos[v + 1:]
                    nxt.append((new_pos, placed | 1 << v))
        codes.append(best)
        # distinct partial labelings can coincide only if they are identical
        states = list(dict.fromkeys(nxt))
    edges = []
    for t, code in enumerate(codes):
        s = 0
        while code:
            if code & 1:
                edges.append((s + 1, t + 1))
            code >>= 1
            s += 1
    return OrientedGraph(n, tuple(edges))


def canonical_key(g: OrientedGraph) -> Tuple[int, Tuple[Edge, ...]]:
    c = canonical_form(g)
    return (c.n, c.edges)


def is_isomorphic(g: OrientedGraph, h: OrientedGraph) -> bool:
    return g.n == h.n and g.num_edges == h.num_edges and canonical_key(g) == canonical_key(h)
