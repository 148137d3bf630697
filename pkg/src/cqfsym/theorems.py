"""Exhaustive checks of the structural claims about CQF symmetry, keyed by short ids."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Callable, Dict, List, Optional

from .engine import cqf, reversal_identity_check
from .errors import UnknownTheorem
from .families import (
    BOTTOMLESS,
    FULL,
    MountainSpec,
    all_connected_dags,
    bottomless_mountain,
    cycle_acyclic_orientations,
    mixed_mountain,
    mountain,
    mountain_specs,
    naturally_oriented_cycle,
    oriented_trees,
    swap_graph,
    swap_sites,
)
from .graph import canonical_key, sources_and_sinks, width
from .qsym import is_e_positive, is_symmetric, quasi_shuffle


@dataclass
class TheoremReport:
    theorem: str
    params: dict
    checked: int = 0
    counterexamples: List[dict] = field(default_factory=list)
    notes: Dict[str, object] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def fail(self, **data) -> None:
        if len(self.counterexamples) < 20:
            self.counterexamples.append(data)

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "params": self.params,
            "checked": self.checked,
            "passed": self.passed,
            "counterexamples": self.counterexamples,
            "notes": self.notes,
        }


def _dags(max_n: int, min_n: int = 1):
    for n in range(min_n, max_n + 1):
        yield from all_connected_dags(n)


def lemma_rev(max_n: int = 5) -> TheoremReport:
    rep = TheoremReport("lemma-rev", {"max_n": max_n})
    for g in _dags(max_n):
        rep.checked += 1
        if not reversal_identity_check(g):
            rep.fail(graph=g.to_json())
    return rep


def _nonsymmetric_when(tid: str, max_n: int, cond: Callable) -> TheoremReport:
    rep = TheoremReport(tid, {"max_n": max_n})
    hits = 0
    for g in _dags(max_n):
        rep.checked += 1
        if cond(g):
            hits += 1
            if is_symmetric(cqf(g)):
                rep.fail(graph=g.to_json())
    rep.notes["graphs_meeting_hypothesis"] = hits
    return rep


def lemma_sources_sinks(max_n: int = 6) -> TheoremReport:
    def cond(g):
        s, t = sources_and_sinks(g)
        return len(s) != len(t)

    return _nonsymmetric_when("lemma-sources-sinks", max_n, cond)


def lemma_antichain(max_n: int = 6) -> TheoremReport:
    return _nonsymmetric_when(
        "lemma-antichain", max_n, lambda g: width(g) > len(sources_and_sinks(g)[0])
    )


def thm_dag(max_n: int = 6) -> TheoremReport:
    return _nonsymmetric_when("thm-dag", max_n, lambda g: len(sources_and_sinks(g)[0]) >= 2)


def cor_dpath(max_n: int = 6) -> TheoremReport:
    """Symmetric implies a Hamiltonian directed path, i.e. the reachability order is total."""
    rep = TheoremReport("cor-dpath", {"max_n": max_n})
    for g in _dags(max_n):
        rep.checked += 1
        if is_symmetric(cqf(g)) and width(g) != 1:
            rep.fail(graph=g.to_json())
    return rep


def thm_product(max_n: int = 4) -> TheoremReport:
    """A product of two CQFs is symmetric exactly when both factors are."""
    rep = TheoremReport("thm-product", {"max_n": max_n})
    xs = [(g, cqf(g)) for g in _dags(max_n)]
    sym = [is_symmetric(x) for _, x in xs]
    for i, j in combinations_with_replacement(range(len(xs)), 2):
        rep.checked += 1
        prod = quasi_shuffle(xs[i][1], xs[j][1])
        if is_symmetric(prod) != (sym[i] and sym[j]):
            rep.fail(first=xs[i][0].to_json(), second=xs[j][0].to_json())
    return rep


def cor_tree(max_n: int = 7) -> TheoremReport:
    rep = TheoremReport("cor-tree", {"max_n": max_n})
    for n in range(1, max_n + 1):
        for t in oriented_trees(n):
            rep.checked += 1
            is_path = width(t) == 1
            if is_symmetric(cqf(t)) != is_path:
                rep.fail(graph=t.to_json(), directed_path=is_path)
    return rep


def cor_cycle(max_n: int = 7) -> TheoremReport:
    rep = TheoremReport("cor-cycle", {"max_n": max_n})
    for n in range(3, max_n + 1):
        natural = canonical_key(naturally_oriented_cycle(n))
        for c in cycle_acyclic_orientations(n):
            rep.checked += 1
            is_natural = canonical_key(c) == natural
            if is_symmetric(cqf(c)) != is_natural:
                rep.fail(graph=c.to_json(), naturally_oriented=is_natural)
    return rep


def _symmetric_family(tid: str, instances, params: dict, e_positive: bool = True) -> TheoremReport:
    rep = TheoremReport(tid, params)
    for label, g in instances:
        rep.checked += 1
        x = cqf(g)
        if not is_symmetric(x):
            rep.fail(instance=label, reason="not symmetric")
        elif e_positive and not is_e_positive(x):
            rep.fail(instance=label, reason="not e-positive")
    return rep


def mountain_instances(max_n: int = 10):
    out = []
    for k in range(2, max_n + 1):
        p = 2
        while p * (k - 1) + 1 <= max_n:
            out.append((f"M({p},{k})", mountain(p, k)[0]))
            p += 1
    return out


def bottomless_instances(max_n: int = 10):
    out = []
    for k in range(3, max_n + 1):
        p = 2
        while 1 + p * k <= max_n:
            out.append((f"B({p},{k})", bottomless_mountain(p, k)[0]))
            p += 1
    return out


def mixed_instances(max_n: int = 10):
    return [
        (f"{spec}/k={spec.k}", mixed_mountain(spec)[0])
        for n in range(3, max_n + 1)
        for spec in mountain_specs(n)
    ]


def thm_mountain(max_n: int = 10, p: Optional[int] = None, k: Optional[int] = None) -> TheoremReport:
    if p is not None and k is not None:
        inst = [(f"M({p},{k})", mountain(p, k)[0])]
    else:
        inst = mountain_instances(max_n)
    return _symmetric_family("thm-mountain", inst, {"max_n": max_n, "p": p, "k": k})


def thm_bottomless(max_n: int = 10, p: Optional[int] = None, k: Optional[int] = None) -> TheoremReport:
    if p is not None and k is not None:
        inst = [(f"B({p},{k})", bottomless_mountain(p, k)[0])]
    else:
        inst = bottomless_instances(max_n)
    return _symmetric_family("thm-bottomless", inst, {"max_n": max_n, "p": p, "k": k})


def thm_mixed(max_n: int = 10, spec: Optional[str] = None, k: Optional[int] = None) -> TheoremReport:
    if spec is not None:
        s = MountainSpec.parse(spec, k or 3)
        inst = [(f"{s}/k={s.k}", mixed_mountain(s)[0])]
    else:
        inst = mixed_instances(max_n)
    return _symmetric_family("thm-mixed", inst, {"max_n": max_n, "spec": spec, "k": k})


def thm_swap(max_n: int = 10, spec: Optional[str] = None, k: Optional[int] = None) -> TheoremReport:
    """``cqf(G) == cqf(swap_v(G))`` at every full-then-bottomless site."""
    rep = TheoremReport("thm-swap", {"max_n": max_n, "spec": spec, "k": k})
    if spec is not None:
        specs = [MountainSpec.parse(spec, k or 3)]
    else:
        specs = [
            s
            for n in range(3, max_n + 1)
            for s in mountain_specs(n)
            if FULL in s.cliques and BOTTOMLESS in s.cliques
        ]
    for s in specs:
        g, geom = mixed_mountain(s)
        x = cqf(g)
        for i in swap_sites(geom):
            rep.checked += 1
            g2, _ = swap_graph(g, geom, i)
            if cqf(g2) != x:
                rep.fail(spec=str(s), k=s.k, site=i)
    return rep


THEOREMS: Dict[str, Callable[..., TheoremReport]] = {
    "lemma-rev": lemma_rev,
    "lemma-sources-sinks": lemma_sources_sinks,
    "lemma-antichain": lemma_antichain,
    "thm-product": thm_product,
    "thm-dag": thm_dag,
    "cor-dpath": cor_dpath,
    "cor-tree": cor_tree,
    "cor-cycle": cor_cycle,
    "thm-mountain": thm_mountain,
    "thm-bottomless": thm_bottomless,
    "thm-mixed": thm_mixed,
    "thm-swap": thm_swap,
}


def run_theorem(tid: str, **params) -> TheoremReport:
    try:
        fn = THEOREMS[tid]
    except KeyError:
        raise UnknownTheorem(f"unknown theorem id {tid!r}; known: {', '.join(THEOREMS)}") from None
    return fn(**{k: v for k, v in params.items() if v is not None})
