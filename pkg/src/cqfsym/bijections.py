"""Ascent-preserving coloring maps on mountain graphs and on DAGs, with an exhaustive harness.

Colorings are tuples indexed by ``vertex - 1``.  Maps on mountain graphs
work with a fixed palette ``1..N``: the recoloring steps that send color 1
to the top color are only invertible when the top color is fixed in advance
rather than read off each coloring.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .engine import (
    Coloring,
    ascent_count,
    count_proper_colorings,
    is_proper,
    iter_max_ascent_colorings,
    iter_proper_colorings,
    weight,
)
from .errors import (
    ImproperColoring,
    InvalidA,
    InvalidParams,
    MalformedInput,
    NotFound,
    PreconditionViolation,
    SizeGuard,
    StructureViolation,
    WrongClass,
)
from .families import (
    FULL,
    MountainGeometry,
    MountainSpec,
    mixed_mountain,
    swap_graph,
    unswap_graph,
)
from .graph import (
    ChainDecomposition,
    OrientedGraph,
    is_connected,
    min_chain_cover,
    poset_closure,
    source_sink_chain_cover,
    sources_and_sinks,
    width,
)

MAX_COLORINGS = 10**7


# -- coloring classes ----------------------------------------------------------------


def in_L(kappa: Sequence[int], a: int) -> bool:
    """Both ends of the bottom edge ``(1, n)`` are colored ``a`` or ``a+1``."""
    return kappa[0] in (a, a + 1) and kappa[-1] in (a, a + 1)


def coloring_class(kappa: Sequence[int], a: int) -> str:
    return "L" if in_L(kappa, a) else "K"


def _check_palette(kappa: Sequence[int], palette: int) -> None:
    if any(not 1 <= c <= palette for c in kappa):
        raise WrongClass(f"{tuple(kappa)} uses colors outside 1..{palette}")


@dataclass(frozen=True)
class Component:
    """A connected component of a two-colored subgraph, in walk order."""

    vertices: Tuple[int, ...]
    cycle: bool = False


def colored_subgraph_components(
    g: OrientedGraph, geom: MountainGeometry, kappa: Sequence[int], a: int
) -> List[Component]:
    """Components of the subgraph induced on colors ``a`` and ``a+1``.

    Paths are returned in walk order: increasing labels, or, for a path that
    uses the bottom edge, increasing up to ``n`` and then increasing again
    from ``1``.  A cycle is accepted only when it passes through the bottom
    edge.  Anything else raises :class:`StructureViolation`.
    """
    n = g.n
    keep = [v for v in g.vertices if kappa[v - 1] in (a, a + 1)]
    keep_set = set(keep)
    adj = {v: [w for w in g.neighbors[v - 1] if w in keep_set] for v in keep}
    seen = set()
    out = []
    for start in keep:
        if start in seen:
            continue
        comp = []
        stack = [start]
        seen.add(start)
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        comp.sort()
        degrees = [len(adj[v]) for v in comp]
        n_edges = sum(degrees) // 2
        if len(comp) >= 3 and all(d == 2 for d in degrees):
            if not (1 in comp and n in comp and n in adj[1]):
                raise StructureViolation(f"cycle {comp} avoids the bottom edge")
            out.append(Component(tuple(comp), cycle=True))
            continue
        if n_edges != len(comp) - 1 or max(degrees) > 2:
            raise StructureViolation(f"component {comp} is neither a path nor a cycle")
        walk = _walk_path(comp, adj, n)
        if walk is None:
            raise StructureViolation(f"path {comp} is not monotone in the labels")
        out.append(Component(walk))
    return out


def _walk_path(comp: List[int], adj: Dict[int, List[int]], n: int) -> Optional[Tuple[int, ...]]:
    if len(comp) == 1:
        return (comp[0],)
    ends = [v for v in comp if len(adj[v]) == 1]
    for first in ends:
        walk = [first]
        prev = None
        while True:
            nxt = [w for w in adj[walk[-1]] if w != prev]
            if not nxt:
                break
            prev = walk[-1]
            walk.append(nxt[0])
        if _monotone_walk(walk, n):
            return tuple(walk)
    return None


def _monotone_walk(walk: List[int], n: int) -> bool:
    drops = [i for i in range(len(walk) - 1) if walk[i] > walk[i + 1]]
    if not drops:
        return True
    return len(drops) == 1 and walk[drops[0]] == n and walk[drops[0] + 1] == 1


# -- psi: the involution on K ------------------------------------------------------


def psi(g: OrientedGraph, geom: MountainGeometry, kappa: Sequence[int], a: int) -> Coloring:
    """Swap ``a`` and ``a+1`` on every odd-size component of the ``(a, a+1)``-colored subgraph."""
    if in_L(kappa, a):
        raise WrongClass(f"{tuple(kappa)} is in L_{a},{a + 1}, not K")
    out = list(kappa)
    for comp in colored_subgraph_components(g, geom, kappa, a):
        if len(comp.vertices) % 2:
            for v in comp.vertices:
                out[v - 1] = 2 * a + 1 - out[v - 1]
    return tuple(out)


# -- cycle ---------------------------------------------------------------------------


def _mirror_upper(out: List[int], clique_uppers: Tuple[int, ...], marker: int) -> None:
    """Move the upper vertex colored ``marker`` from index ``i`` to index ``len - 1 - i``."""
    colors = [out[u - 1] for u in clique_uppers]
    if marker not in colors:
        return
    i = colors.index(marker)
    c = colors.pop(i)
    colors.insert(len(clique_uppers) - 1 - i, c)
    for u, col in zip(clique_uppers, colors):
        out[u - 1] = col


def cycle_map(
    g: OrientedGraph, geom: MountainGeometry, kappa: Sequence[int], a: int, palette: Optional[int] = None
) -> Coloring:
    """``L_{a,a+1} -> L_{a-1,a}``: color 1 becomes the top color, everything else drops by one."""
    N = palette or g.n
    if a <= 1:
        raise InvalidA("cycle needs a > 1")
    _check_palette(kappa, N)
    if not in_L(kappa, a):
        raise WrongClass(f"{tuple(kappa)} is not in L_{a},{a + 1}")
    out = [N + 1 if c == 1 else c for c in kappa]
    for clique in geom.cliques:
        _mirror_upper(out, clique.uppers, N + 1)
    return tuple(c - 1 for c in out)


def cycle_inverse(
    g: OrientedGraph, geom: MountainGeometry, kappa: Sequence[int], a: int, palette: Optional[int] = None
) -> Coloring:
    """Inverse of :func:`cycle_map` with the same ``a``: ``L_{a-1,a} -> L_{a,a+1}``."""
    N = palette or g.n
    if a <= 1:
        raise InvalidA("cycle needs a > 1")
    if a + 1 > N:
        raise InvalidA(f"a + 1 = {a + 1} exceeds the palette {N}")
    _check_palette(kappa, N)
    if not in_L(kappa, a - 1):
        raise WrongClass(f"{tuple(kappa)} is not in L_{a - 1},{a}")
    out = [c + 1 for c in kappa]
    for clique in geom.cliques:
        _mirror_upper(out, clique.uppers, N + 1)
    return tuple(1 if c == N + 1 else c for c in out)


# -- reflect -------------------------------------------------------------------------


def reflect_target(geom: MountainGeometry) -> Tuple[OrientedGraph, MountainGeometry]:
    """The graph that ``reflect`` lands on: the same cliques in reverse order."""
    return mixed_mountain(geom.spec.reversed())


def reflect_map(
    g: OrientedGraph, geom: MountainGeometry, kappa: Sequence[int], palette: Optional[int] = None
) -> Coloring:
    """``L_{1,2}(G) -> L_{1,2}(G')`` where ``G'`` has the clique order reversed.

    Mirror the coloring left to right, exchange colors 1 and 2, reverse the
    colors ``3..N``, then in each clique put the new 1/2 upper entries back
    at the upper positions the old clique used for its 1/2 entries.
    """
    N = palette or g.n
    _check_palette(kappa, N)
    if not in_L(kappa, 1):
        raise WrongClass(f"{tuple(kappa)} is not in L_1,2")
    n = g.n

    def tau(c: int) -> int:
        return 3 - c if c <= 2 else N + 3 - c

    out = [tau(kappa[n - 1 - i]) for i in range(n)]
    _, target = reflect_target(geom)
    p = len(geom.cliques)
    for j, clique in enumerate(geom.cliques):
        image = target.cliques[p - 1 - j]
        slots = [t for t, u in enumerate(clique.uppers) if kappa[u - 1] <= 2]
        vals = [out[u - 1] for u in image.uppers]
        low = [c for c in vals if c <= 2]
        high = iter(c for c in vals if c > 2)
        placed = dict(zip(slots, low))
        for t, u in enumerate(image.uppers):
            out[u - 1] = placed[t] if t in placed else next(high)
    return tuple(out)


# -- swap ----------------------------------------------------------------------------


def special_vertex(u_colors: Sequence[int], w_colors: Sequence[int], v_color: int) -> int:
    """Index into ``w_colors`` of the special vertex, by parenthesis matching.

    When fewer ``U`` colors than ``W`` colors lie below ``v_color``, the
    smaller colors are listed in decreasing order; otherwise the larger colors
    are listed in increasing order.  Ties list ``U`` first.  ``U`` entries open
    and ``W`` entries close; the first unmatched closer is special.
    """
    u_colors, w_colors = list(u_colors), list(w_colors)
    if len(w_colors) != len(u_colors) + 1:
        raise MalformedInput(f"need |W| = |U| + 1, got {len(u_colors)} and {len(w_colors)}")
    if len(set(u_colors)) != len(u_colors) or len(set(w_colors)) != len(w_colors):
        raise MalformedInput("colors within a clique must be distinct")
    if v_color in u_colors or v_color in w_colors:
        raise MalformedInput(f"v color {v_color} repeats inside a clique")
    small_u = [c for c in u_colors if c < v_color]
    small_w = [(c, i) for i, c in enumerate(w_colors) if c < v_color]
    if len(small_u) < len(small_w):
        entries = [(-c, 0, -1) for c in small_u] + [(-c, 1, i) for c, i in small_w]
    else:
        entries = [(c, 0, -1) for c in u_colors if c > v_color]
        entries += [(c, 1, i) for i, c in enumerate(w_colors) if c > v_color]
    entries.sort()
    depth = 0
    for _, closer, i in entries:
        if not closer:
            depth += 1
        elif depth:
            depth -= 1
        else:
            return i
    raise MalformedInput("no unmatched W entry; the branch rule was violated")


def _arrange(values: Iterable[int], pattern: Sequence[int]) -> List[int]:
    """Place ``values`` so they have the same relative order as ``pattern``."""
    vals = sorted(values)
    order = sorted(range(len(pattern)), key=pattern.__getitem__)
    out = [0] * len(pattern)
    for r, idx in enumerate(order):
        out[idx] = vals[r]
    return out


def swap_map(
    g: OrientedGraph, geom: MountainGeometry, clique_index: int, kappa: Sequence[int]
) -> Tuple[Coloring, OrientedGraph, MountainGeometry]:
    """Carry a proper coloring across :func:`swap_graph`; returns the coloring and the new graph."""
    g2, geom2 = swap_graph(g, geom, clique_index)
    if not is_proper(g, kappa):
        raise ImproperColoring(f"{tuple(kappa)} is not proper")
    U, W = geom.cliques[clique_index], geom.cliques[clique_index + 1]
    cu = [kappa[x - 1] for x in U.uppers]
    cw = [kappa[x - 1] for x in W.uppers]
    cv = kappa[U.right - 1]
    s = special_vertex(cu, cw, cv)
    rest = cw[:s] + cw[s + 1:]
    B, F = geom2.cliques[clique_index], geom2.cliques[clique_index + 1]
    out = list(kappa)
    out[B.right - 1] = cw[s]
    for x, c in zip(B.uppers, _arrange(cu + [cv], cw)):
        out[x - 1] = c
    for x, c in zip(F.uppers, _arrange(rest, cu)):
        out[x - 1] = c
    return tuple(out), g2, geom2


def unswap_map(
    g: OrientedGraph, geom: MountainGeometry, clique_index: int, rho: Sequence[int]
) -> Tuple[Coloring, OrientedGraph, MountainGeometry]:
    """Inverse of :func:`swap_map`, from the bottomless-then-full side back.

    The color of the shared vertex before the swap is one of the bottomless
    clique's upper colors; each candidate is rebuilt and pushed forward, and
    exactly one must reproduce ``rho``.
    """
    g0, geom0 = unswap_graph(g, geom, clique_index)
    B, F = geom.cliques[clique_index], geom.cliques[clique_index + 1]
    cb = [rho[x - 1] for x in B.uppers]
    cf = [rho[x - 1] for x in F.uppers]
    U, W = geom0.cliques[clique_index], geom0.cliques[clique_index + 1]
    hits = []
    for cand in cb:
        kappa = list(rho)
        kappa[U.right - 1] = cand
        for x, c in zip(U.uppers, _arrange([c for c in cb if c != cand], cf)):
            kappa[x - 1] = c
        for x, c in zip(W.uppers, _arrange(cf + [rho[B.right - 1]], cb)):
            kappa[x - 1] = c
        kappa = tuple(kappa)
        if is_proper(g0, kappa) and swap_map(g0, geom0, clique_index, kappa)[0] == tuple(rho):
            hits.append(kappa)
    if len(hits) != 1:
        raise NotFound(f"{len(hits)} preimages for {tuple(rho)} under swap")
    return hits[0], g0, geom0


def swap_path(spec: MountainSpec, target: MountainSpec) -> List[Tuple[int, str]]:
    """Adjacent clique exchanges turning ``spec`` into ``target`` (same tag multiset).

    Each step is ``(index, "swap")`` for full-then-bottomless or
    ``(index, "unswap")`` for bottomless-then-full.
    """
    cur = list(spec.cliques)
    want = list(target.cliques)
    if sorted(cur) != sorted(want):
        raise InvalidParams(f"{spec} and {target} have different clique multisets")
    steps = []
    for i in range(len(cur)):
        j = cur.index(want[i], i)
        for t in range(j - 1, i - 1, -1):
            steps.append((t, "swap" if cur[t] == FULL else "unswap"))
            cur[t], cur[t + 1] = cur[t + 1], cur[t]
    return steps


# -- the automorphism on L -----------------------------------------------------------


def l_automorphism(
    g: OrientedGraph, geom: MountainGeometry, kappa: Sequence[int], a: int, palette: Optional[int] = None
) -> Coloring:
    """Ascent-preserving map on ``L_{a,a+1}`` exchanging the multiplicities of ``a`` and ``a+1``.

    cycle ``a-1`` times, exchange cliques until the order is reversed, reflect
    back onto the original graph, reverse colors ``3..N`` with the psi word
    ``(s3)(s4 s3)(s5 s4 s3)...``, then undo the cycling.
    """
    N = palette or g.n
    _check_palette(kappa, N)
    if not 1 <= a < N:
        raise InvalidA(f"a must satisfy 1 <= a < {N}")
    if not in_L(kappa, a):
        raise WrongClass(f"{tuple(kappa)} is not in L_{a},{a + 1}")
    x = tuple(kappa)
    for b in range(a, 1, -1):
        x = cycle_map(g, geom, x, b, N)
    cur_g, cur_geom = g, geom
    for i, kind in swap_path(geom.spec, geom.spec.reversed()):
        step = swap_map if kind == "swap" else unswap_map
        x, cur_g, cur_geom = step(cur_g, cur_geom, i, x)
    x = reflect_map(cur_g, cur_geom, x, N)
    for top in range(3, N):
        for i in range(top, 2, -1):
            x = psi(g, geom, x, i)
    for b in range(2, a + 1):
        x = cycle_inverse(g, geom, x, b, N)
    return x


def theta(g: OrientedGraph, geom: MountainGeometry, kappa: Sequence[int], a: int, palette: Optional[int] = None) -> Coloring:
    """psi on K, the L automorphism on L: one map on every proper coloring."""
    if in_L(kappa, a):
        return l_automorphism(g, geom, kappa, a, palette)
    return psi(g, geom, kappa, a)


# -- phi on DAGs with several sources ------------------------------------------------


@dataclass(frozen=True)
class PhiSetup:
    a: int
    k: int
    v: int
    S: Tuple[int, ...]
    stat: Dict[int, int]
    cover: ChainDecomposition
    n: int

    @property
    def domain_weight(self) -> Tuple[int, ...]:
        return (1,) * self.k + (self.a,) + (1,) * (self.n - self.k - self.a)

    @property
    def codomain_weight(self) -> Tuple[int, ...]:
        return (self.a,) + (1,) * (self.n - self.a)


def phi_setup(g: OrientedGraph) -> PhiSetup:
    """Source count ``a``, the set ``S(G)``, ``k_G`` and a chain cover with one source per chain."""
    if not is_connected(g):
        raise PreconditionViolation("graph is not connected")
    sources, sinks = sources_and_sinks(g)
    a = len(sources)
    if a < 2:
        raise PreconditionViolation(f"need at least two sources, found {a}")
    closure = poset_closure(g)
    src_mask = sum(1 << (s - 1) for s in sources)
    S = tuple(v for v in g.vertices if (closure.below[v - 1] & src_mask).bit_count() >= 2)
    if not S:
        raise PreconditionViolation("no vertex lies above two sources")
    stat = {v: (closure.below[v - 1] & ~src_mask).bit_count() for v in S}
    low = min(stat.values())
    v = min(u for u in S if stat[u] == low)
    if width(g) != a:
        raise PreconditionViolation(f"width {width(g)} differs from the source count {a}")
    cover = source_sink_chain_cover(g) if len(sinks) == a else min_chain_cover(g)
    if len(cover) != a:
        raise PreconditionViolation("no chain cover with one source per chain")
    return PhiSetup(a, low + 1, v, S, stat, cover, g.n)


def phi(g: OrientedGraph, setup: PhiSetup, kappa: Sequence[int]) -> Coloring:
    """Per chain: if no vertex is colored 1, recolor the ``k+1`` vertex to 1 and sort upward."""
    k = setup.k
    if weight(kappa) != setup.domain_weight or ascent_count(g, kappa) != g.num_edges:
        raise WrongClass(f"{tuple(kappa)} is not a top-ascent coloring of weight {setup.domain_weight}")
    out = list(kappa)
    for chain in setup.cover.chains:
        colors = [out[v - 1] for v in chain]
        if 1 in colors:
            continue
        if colors.count(k + 1) != 1 or len(set(colors)) != len(colors):
            raise PreconditionViolation(f"chain {chain} colors {colors} break the chain invariant")
        colors[colors.index(k + 1)] = 1
        for v, c in zip(chain, sorted(colors)):
            out[v - 1] = c
    return tuple(out)


def phi_non_image_witness(g: OrientedGraph, setup: Optional[PhiSetup] = None) -> Coloring:
    """Sources get 1, the non-sources below ``v`` get ``2..k``, ``v`` gets ``k+1``, the rest follow."""
    if setup is None:
        setup = _phi_core(g)
    closure = poset_closure(g)
    sources, _ = sources_and_sinks(g)
    v = setup.v
    order = g.topological_order()
    below = [u for u in order if u not in sources and closure.less(u, v)]
    rest = [u for u in order if u not in sources and u != v and u not in below]
    out = [0] * g.n
    for s in sources:
        out[s - 1] = 1
    for c, u in enumerate(below + [v] + rest, start=2):
        out[u - 1] = c
    return tuple(out)


def _phi_core(g: OrientedGraph) -> PhiSetup:
    """``a``, ``S(G)`` and ``k`` without the chain-cover requirement (for the witness alone)."""
    sources, _ = sources_and_sinks(g)
    closure = poset_closure(g)
    src_mask = sum(1 << (s - 1) for s in sources)
    S = tuple(v for v in g.vertices if (closure.below[v - 1] & src_mask).bit_count() >= 2)
    if len(sources) < 2 or not S:
        raise PreconditionViolation("need two sources and a vertex above both")
    stat = {v: (closure.below[v - 1] & ~src_mask).bit_count() for v in S}
    low = min(stat.values())
    v = min(u for u in S if stat[u] == low)
    return PhiSetup(len(sources), low + 1, v, S, stat, ChainDecomposition(()), g.n)


# -- the harness ---------------------------------------------------------------------


@dataclass
class MapReport:
    map_id: str
    params: dict
    domain_size: int = 0
    image_size: int = 0
    codomain_size: int = 0
    ascent_preserved: bool = True
    proper: bool = True
    injective: bool = True
    surjective: bool = True
    content_effect: str = ""
    content_ok: bool = True
    inverse_ok: Optional[bool] = None
    expect_surjective: bool = True
    witness: Optional[Coloring] = None
    counterexamples: List[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def fail(self, reason: str, **data) -> None:
        if len(self.counterexamples) < 20:
            self.counterexamples.append({"reason": reason, **{k: _jsonable(v) for k, v in data.items()}})

    def to_json(self) -> dict:
        return {
            "map": self.map_id,
            "params": self.params,
            "domain_size": self.domain_size,
            "image_size": self.image_size,
            "codomain_size": self.codomain_size,
            "ascent_preserved": self.ascent_preserved,
            "proper": self.proper,
            "injective": self.injective,
            "surjective": self.surjective,
            "content_effect": self.content_effect,
            "content_ok": self.content_ok,
            "inverse_ok": self.inverse_ok,
            "witness": list(self.witness) if self.witness else None,
            "counterexamples": self.counterexamples,
            "passed": self.passed,
        }


def _jsonable(v):
    if isinstance(v, tuple):
        return [_jsonable(x) for x in v]
    return v


def _guard_colorings(g: OrientedGraph, palette: int, limit: int) -> None:
    total = count_proper_colorings(g, palette)
    if total > limit:
        raise SizeGuard(f"{total} colorings with palette {palette} exceed the bound {limit}")


def _content(kappa: Sequence[int], N: int) -> Tuple[int, ...]:
    return weight(kappa, N)


def _run(
    report: MapReport,
    domain: List[Coloring],
    codomain: List[Coloring],
    fn: Callable[[Coloring], Coloring],
    g_src: OrientedGraph,
    g_dst: OrientedGraph,
    content_fn: Callable[[Tuple[int, ...]], Tuple[int, ...]],
    N: int,
    inverse: Optional[Callable[[Coloring], Coloring]] = None,
) -> Dict[Coloring, Coloring]:
    report.domain_size = len(domain)
    report.codomain_size = len(codomain)
    codomain_set = set(codomain)
    images: Dict[Coloring, Coloring] = {}
    seen: Dict[Coloring, Coloring] = {}
    for kappa in domain:
        try:
            out = fn(kappa)
        except Exception as exc:  # a map crashing on its own domain is a finding
            report.proper = False
            report.fail("map raised", coloring=kappa, error=f"{type(exc).__name__}: {exc}")
            continue
        images[kappa] = out
        if not is_proper(g_dst, out):
            report.proper = False
            report.fail("image not proper", coloring=kappa, image=out)
            continue
        if out not in codomain_set:
            report.fail("image outside the codomain class", coloring=kappa, image=out)
        if ascent_count(g_src, kappa) != ascent_count(g_dst, out):
            report.ascent_preserved = False
            report.fail("ascent count changed", coloring=kappa, image=out)
        if _content(out, N) != content_fn(_content(kappa, N)):
            report.content_ok = False
            report.fail("unexpected content", coloring=kappa, image=out)
        if out in seen:
            report.injective = False
            report.fail("two colorings share an image", first=seen[out], second=kappa, image=out)
        seen[out] = kappa
        if inverse is not None:
            try:
                back = inverse(out)
            except Exception as exc:
                back = None
                report.fail("inverse raised", image=out, error=f"{type(exc).__name__}: {exc}")
            if back != kappa:
                report.inverse_ok = False
                report.fail("inverse does not recover the coloring", coloring=kappa, image=out, back=back)
            elif report.inverse_ok is None:
                report.inverse_ok = True
    report.image_size = len(seen)
    report.surjective = codomain_set <= set(seen)
    if report.surjective != report.expect_surjective:
        report.fail("surjectivity differs from the claim", surjective=report.surjective)
    return images


def _swap_positions(content: Tuple[int, ...], i: int, j: int) -> Tuple[int, ...]:
    c = list(content)
    c[i], c[j] = c[j], c[i]
    return tuple(c)


MAP_IDS = ("psi", "cycle", "reflect", "swap", "phi", "l-auto")


def verify_map(
    map_id: str,
    g: OrientedGraph,
    geom: Optional[MountainGeometry] = None,
    *,
    a: Optional[int] = None,
    palette: Optional[int] = None,
    site: Optional[int] = None,
    max_colorings: int = MAX_COLORINGS,
) -> MapReport:
    """Exhaustively check one map on one graph.

    ``a`` selects the color pair for psi, cycle and l-auto (every valid value
    when omitted); ``site`` selects the clique pair for swap (every full then
    bottomless pair when omitted).  Mountain maps enumerate colorings with
    colors ``1..palette`` (default ``n``).
    """
    if map_id not in MAP_IDS:
        raise InvalidParams(f"unknown map {map_id!r}; choose from {', '.join(MAP_IDS)}")
    if map_id == "phi":
        return _verify_phi(g, max_colorings)
    if geom is None:
        raise InvalidParams(f"map {map_id!r} needs a mountain geometry")
    N = palette or g.n
    _guard_colorings(g, N, max_colorings)
    colorings = list(iter_proper_colorings(g, N))
    report = MapReport(map_id, {"palette": N})

    if map_id == "swap":
        from .families import swap_sites

        sites = [site] if site is not None else swap_sites(geom)
        if not sites:
            raise InvalidParams(f"spec {geom.spec} has no full-then-bottomless pair")
        report.params["site"] = sites
        report.content_effect = "content preserved"
        for s in sites:
            g2, geom2 = swap_graph(g, geom, s)
            sub = MapReport(map_id, {})
            _run(
                sub,
                colorings,
                list(iter_proper_colorings(g2, N)),
                lambda k, s=s: swap_map(g, geom, s, k)[0],
                g,
                g2,
                lambda c: c,
                N,
                inverse=lambda r, s=s, g2=g2, geom2=geom2: unswap_map(g2, geom2, s, r)[0],
            )
            _merge(report, sub)
        return report

    if map_id == "reflect":
        g2, geom2 = reflect_target(geom)
        report.content_effect = "(c1, c2, c3..cN) -> (c2, c1, cN..c3)"
        _run(
            report,
            [k for k in colorings if in_L(k, 1)],
            [k for k in iter_proper_colorings(g2, N) if in_L(k, 1)],
            lambda k: reflect_map(g, geom, k, N),
            g,
            g2,
            lambda c: (c[1], c[0]) + tuple(reversed(c[2:])),
            N,
            inverse=lambda r: reflect_map(g2, geom2, r, N),
        )
        return report

    lo = 2 if map_id == "cycle" else 1
    values = [a] if a is not None else list(range(lo, N))
    for b in values:
        if not lo <= b < N:
            raise InvalidA(f"a={b} is outside {lo}..{N - 1}")
    report.params["a"] = values
    for b in values:
        sub = MapReport(map_id, {})
        if map_id == "psi":
            dom = [k for k in colorings if not in_L(k, b)]
            sub.content_effect = "multiplicities of a and a+1 exchanged"
            _run(sub, dom, dom, lambda k, b=b: psi(g, geom, k, b), g, g,
                 lambda c, b=b: _swap_positions(c, b - 1, b), N,
                 inverse=lambda r, b=b: psi(g, geom, r, b))
        elif map_id == "cycle":
            dom = [k for k in colorings if in_L(k, b)]
            cod = [k for k in colorings if in_L(k, b - 1)]
            sub.content_effect = "content rotated left by one"
            _run(sub, dom, cod, lambda k, b=b: cycle_map(g, geom, k, b, N), g, g,
                 lambda c: c[1:] + c[:1], N,
                 inverse=lambda r, b=b: cycle_inverse(g, geom, r, b, N))
        else:
            dom = [k for k in colorings if in_L(k, b)]
            sub.content_effect = "multiplicities of a and a+1 exchanged"
            _run(sub, dom, dom, lambda k, b=b: l_automorphism(g, geom, k, b, N), g, g,
                 lambda c, b=b: _swap_positions(c, b - 1, b), N)
        _merge(report, sub)
    return report


def _merge(report: MapReport, sub: MapReport) -> None:
    report.domain_size += sub.domain_size
    report.image_size += sub.image_size
    report.codomain_size += sub.codomain_size
    report.ascent_preserved &= sub.ascent_preserved
    report.proper &= sub.proper
    report.injective &= sub.injective
    report.surjective &= sub.surjective
    report.content_ok &= sub.content_ok
    report.content_effect = report.content_effect or sub.content_effect
    if sub.inverse_ok is not None:
        report.inverse_ok = sub.inverse_ok if report.inverse_ok is None else report.inverse_ok and sub.inverse_ok
    for c in sub.counterexamples:
        report.fail(c.pop("reason"), **c)


def _verify_phi(g: OrientedGraph, max_colorings: int) -> MapReport:
    setup = phi_setup(g)
    report = MapReport("phi", {"a": setup.a, "k": setup.k, "v": setup.v}, expect_surjective=False)
    report.content_effect = f"weight {setup.domain_weight} -> {setup.codomain_weight}"
    if g.n > 10:
        raise SizeGuard("phi verification is limited to n <= 10")
    dom = list(iter_max_ascent_colorings(g, setup.domain_weight))
    cod = list(iter_max_ascent_colorings(g, setup.codomain_weight))
    if len(dom) + len(cod) > max_colorings:
        raise SizeGuard("phi classes exceed the coloring bound")
    target = setup.codomain_weight
    _run(report, dom, cod, lambda k: phi(g, setup, k), g, g, lambda c: target, len(target))
    wit = phi_non_image_witness(g, setup)
    report.witness = wit
    if wit not in set(cod):
        report.fail("witness is not a top-ascent coloring of the codomain weight", witness=wit)
    if wit in set(report_images(g, setup, dom)):
        report.fail("witness lies in the image", witness=wit)
    return report


def report_images(g: OrientedGraph, setup: PhiSetup, domain: Iterable[Coloring]) -> List[Coloring]:
    return [phi(g, setup, k) for k in domain]


def witness_outside_image(g: OrientedGraph) -> Tuple[bool, Coloring]:
    """The explicit non-image coloring, checked without requiring a chain cover.

    The witness colors ``v`` with ``k+1``.  Every top-ascent coloring of the
    domain weight puts ``v`` strictly above ``k+1``, and phi never touches
    colors above ``k+1``, so the witness is missed whenever no domain coloring
    has ``v`` at ``k+1`` or below.  When the chain cover exists the image is
    also computed directly.
    """
    core = _phi_core(g)
    wit = phi_non_image_witness(g, core)
    target = (core.a,) + (1,) * (g.n - core.a)
    ok = weight(wit) == target and ascent_count(g, wit) == g.num_edges
    dom_weight = (1,) * core.k + (core.a,) + (1,) * (g.n - core.k - core.a)
    dom = list(iter_max_ascent_colorings(g, dom_weight))
    ok &= all(k[core.v - 1] > core.k + 1 for k in dom)
    try:
        setup = phi_setup(g)
    except PreconditionViolation:
        return ok, wit
    ok &= wit not in set(report_images(g, setup, dom))
    return ok, wit


# -- symmetry certificate ------------------------------------------------------------


@dataclass
class CertificateReport:
    palette: int
    colorings: int
    passed: bool
    counterexamples: List[dict] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "palette": self.palette,
            "colorings": self.colorings,
            "passed": self.passed,
            "counterexamples": self.counterexamples,
        }


def symmetry_certificate(
    g: OrientedGraph, geom: MountainGeometry, palette: Optional[int] = None, max_colorings: int = MAX_COLORINGS
) -> CertificateReport:
    """For each ``a``, psi on K together with the L automorphism must be an
    ascent-preserving permutation of all colorings that exchanges the
    multiplicities of ``a`` and ``a+1``.  With ``palette >= n`` this proves
    the CQF symmetric."""
    N = palette or g.n
    _guard_colorings(g, N, max_colorings)
    colorings = list(iter_proper_colorings(g, N))
    everything = set(colorings)
    cex: List[dict] = []
    for a in range(1, N):
        images = set()
        for kappa in colorings:
            out = theta(g, geom, kappa, a, N)
            bad = None
            if out not in everything:
                bad = "image is not a proper coloring in the palette"
            elif ascent_count(g, out) != ascent_count(g, kappa):
                bad = "ascent count changed"
            elif weight(out, N) != _swap_positions(weight(kappa, N), a - 1, a):
                bad = "content not exchanged"
            if bad and len(cex) < 20:
                cex.append({"a": a, "reason": bad, "coloring": list(kappa), "image": list(out)})
            images.add(out)
        if len(images) != len(colorings) and len(cex) < 20:
            cex.append({"a": a, "reason": "not a permutation"})
    return CertificateReport(N, len(colorings), not cex, cex)
