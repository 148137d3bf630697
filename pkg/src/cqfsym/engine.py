"""Chromatic quasisymmetric functions by exact enumeration of proper colorings."""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Dict, Iterator, List, Sequence, Tuple

from .errors import ImproperColoring, SizeGuard
from .graph import OrientedGraph, disjoint_union, reverse
from .poly import QPoly
from .qsym import Composition, QSymElement, compositions, quasi_shuffle

Coloring = Tuple[int, ...]

MAX_MATERIALIZE_N = 10


def is_proper(g: OrientedGraph, kappa: Sequence[int]) -> bool:
    return len(kappa) == g.n and all(kappa[u - 1] != kappa[v - 1] for u, v in g.edges)


def ascent_count(g: OrientedGraph, kappa: Sequence[int]) -> int:
    """Number of edges ``u -> v`` with ``kappa(u) < kappa(v)``."""
    if not is_proper(g, kappa):
        raise ImproperColoring(f"{tuple(kappa)} is not a proper coloring")
    return sum(1 for u, v in g.edges if kappa[u - 1] < kappa[v - 1])


def weight(kappa: Sequence[int], length: int = 0) -> Tuple[int, ...]:
    """Color multiplicities ``(|k^-1(1)|, |k^-1(2)|, ...)``, padded to ``length``."""
    top = max(max(kappa, default=0), length)
    mult = [0] * top
    for c in kappa:
        mult[c - 1] += 1
    return tuple(mult)


def coefficient(g: OrientedGraph, alpha: Composition) -> QPoly:
    """Sum of ``q**asc`` over proper colorings with color multiplicities ``alpha``.

    Vertices are colored in label order; each color carries a remaining
    budget, so only colorings of the exact weight are ever built.
    """
    alpha = tuple(alpha)
    if sum(alpha) != g.n:
        raise ValueError(f"{alpha} does not have weight {g.n}")
    n = g.n
    if n == 0:
        return QPoly((1,))
    budget = list(alpha)
    colors = [0] * n
    counts = [0] * (g.num_edges + 1)
    # earlier neighbors of v, split by edge direction
    into = [[u - 1 for u, w in g.edges if w == v and u < v] for v in g.vertices]
    out_of = [[w - 1 for u, w in g.edges if u == v and w < v] for v in g.vertices]

    def place(i: int, asc: int) -> None:
        if i == n:
            counts[asc] += 1
            return
        for c in range(1, len(budget) + 1):
            if not budget[c - 1]:
                continue
            gained = 0
            ok = True
            for u in into[i]:
                cu = colors[u]
                if cu == c:
                    ok = False
                    break
                if cu < c:
                    gained += 1
            if not ok:
                continue
            for w in out_of[i]:
                cw = colors[w]
                if cw == c:
                    ok = False
                    break
                if c < cw:
                    gained += 1
            if not ok:
                continue
            budget[c - 1] -= 1
            colors[i] = c
            place(i + 1, asc + gained)
            budget[c - 1] += 1
        colors[i] = 0

    place(0, 0)
    return QPoly(counts)


@lru_cache(maxsize=None)
def _fubini(n: int) -> int:
    """Number of ordered set partitions of an ``n``-set."""
    if n == 0:
        return 1
    return sum(math.comb(n, k) * _fubini(n - k) for k in range(1, n + 1))


def _independent_sets(g: OrientedGraph) -> List[Tuple[int, Tuple[int, ...]]]:
    """Nonempty independent sets as ``(mask, members)``; members are 0-based."""
    out = []

    def grow(start: int, mask: int, forbidden: int, members: Tuple[int, ...]) -> None:
        for v in range(start, g.n):
            if forbidden >> v & 1:
                continue
            m = mask | 1 << v
            mem = members + (v,)
            out.append((m, mem))
            grow(v + 1, m, forbidden | g.adj_masks[v], mem)

    grow(0, 0, 0, ())
    return out


def cqf(g: OrientedGraph) -> QSymElement:
    """``X_G(x; q)`` in the monomial quasisymmetric basis.

    A coloring of weight ``alpha`` is a chain of vertex sets
    ``S_0 < S_1 < ... < S_l`` whose steps are independent sets of sizes
    ``alpha_1, ..., alpha_l``; adding the color class ``B`` on top of ``S``
    creates one ascent per edge directed from ``S`` into ``B``.  The walk
    over subsets keeps, for each ``S``, a polynomial per composition of
    ``|S|``.  Polynomials are packed into single integers (one fixed-width
    slot per power of ``q``) so accumulation is plain integer addition.
    """
    n = g.n
    if n == 0:
        return QSymElement.one()
    slot = max(_fubini(n).bit_length() + 1, 8)
    full = (1 << n) - 1
    in_masks = g.in_masks
    indep = _independent_sets(g)
    dp: List[Dict[Composition, int]] = [None] * (full + 1)  # type: ignore[list-item]
    dp[0] = {(): 1}
    for S in range(full):
        layer = dp[S]
        if not layer:
            continue
        dp[S] = None  # type: ignore[call-overload]
        items = list(layer.items())
        for mask, members in indep:
            if mask & S:
                continue
            gained = 0
            for v in members:
                gained += (in_masks[v] & S).bit_count()
            shift = gained * slot
            part = (len(members),)
            T = S | mask
            target = dp[T]
            if target is None:
                target = dp[T] = {}
            for comp, packed in items:
                key = comp + part
                target[key] = target.get(key, 0) + (packed << shift)
    final = dp[full]
    width_mask = (1 << slot) - 1
    terms = {}
    for comp, packed in final.items():
        coeffs = []
        while packed:
            coeffs.append(packed & width_mask)
            packed >>= slot
        terms[comp] = QPoly(coeffs)
    return QSymElement(n, terms)


def cqf_by_coefficients(g: OrientedGraph) -> QSymElement:
    """Same value as :func:`cqf`, assembled one composition at a time."""
    return QSymElement(g.n, {alpha: coefficient(g, alpha) for alpha in compositions(g.n)})


def iter_max_ascent_colorings(g: OrientedGraph, alpha: Composition) -> Iterator[Coloring]:
    alpha = tuple(alpha)
    if sum(alpha) != g.n:
        raise ValueError(f"{alpha} does not have weight {g.n}")
    n = g.n
    budget = list(alpha)
    colors = [0] * n
    # every edge must ascend: a neighbor with a smaller label constrains v from one side
    lower_bound_from = [[u - 1 for u, w in g.edges if w == v and u < v] for v in g.vertices]
    upper_bound_from = [[w - 1 for u, w in g.edges if u == v and w < v] for v in g.vertices]

    def place(i: int):
        if i == n:
            yield tuple(colors)
            return
        lo = max((colors[u] for u in lower_bound_from[i]), default=0)
        hi = min((colors[w] for w in upper_bound_from[i]), default=len(budget) + 1)
        for c in range(lo + 1, hi):
            if not budget[c - 1]:
                continue
            budget[c - 1] -= 1
            colors[i] = c
            yield from place(i + 1)
            budget[c - 1] += 1
        colors[i] = 0

    yield from place(0)


def max_ascent_colorings(g: OrientedGraph, alpha: Composition) -> List[Coloring]:
    """All proper colorings of weight ``alpha`` in which every edge ascends."""
    if g.n > MAX_MATERIALIZE_N:
        raise SizeGuard(f"refusing to materialize colorings for n={g.n} > {MAX_MATERIALIZE_N}")
    return list(iter_max_ascent_colorings(g, alpha))


def cqf_disjoint_union(parts: Sequence[OrientedGraph]) -> QSymElement:
    acc = QSymElement.one()
    for g in parts:
        acc = quasi_shuffle(acc, cqf(g))
    return acc


def reversal_identity_check(g: OrientedGraph) -> bool:
    """``X_{G^rev}(x; q) == q^|E| X_G(x; 1/q)``, coefficient by coefficient."""
    m = g.num_edges
    forward = cqf(g)
    backward = cqf(reverse(g))
    return backward == forward.map_coefficients(lambda p: p.reflect(m))


# -- coloring enumeration used by the bijection harness -----------------------------


def iter_proper_colorings(g: OrientedGraph, palette: int) -> Iterator[Coloring]:
    """Proper colorings with colors in ``1..palette``, in lexicographic order."""
    n = g.n
    colors = [0] * n
    earlier = [[u - 1 for u in g.neighbors[v - 1] if u < v] for v in g.vertices]

    def place(i: int):
        if i == n:
            yield tuple(colors)
            return
        taken = {colors[u] for u in earlier[i]}
        for c in range(1, palette + 1):
            if c in taken:
                continue
            colors[i] = c
            yield from place(i + 1)
        colors[i] = 0

    yield from place(0)


def count_proper_colorings(g: OrientedGraph, palette: int, x: QSymElement = None) -> int:
    """Chromatic polynomial at ``palette``, read off the CQF at ``q = 1``."""
    x = cqf(g) if x is None else x
    return sum(p(1) * math.comb(palette, len(alpha)) for alpha, p in x.items())


def union_graph(parts: Sequence[OrientedGraph]) -> OrientedGraph:
    return disjoint_union(parts)
