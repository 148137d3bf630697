"""Exhaustive classification of small connected DAGs by CQF symmetry, with an on-disk cache."""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Iterator, List, Optional, Sequence, Tuple

from .engine import cqf
from .families import all_connected_dags, family_keys
from .graph import OrientedGraph, canonical_form, canonical_key, sources_and_sinks, width
from .qsym import is_e_positive, is_palindromic, nonsymmetry_witness

NUI = "unit-interval-relabeling"
MIXED = "mixed-mountain"
OTHER = "other"


def dumps(obj) -> str:
    """Canonical JSON text: sorted keys, no insignificant whitespace."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


@dataclass(frozen=True)
class ClassificationRecord:
    graph: OrientedGraph
    symmetric: bool
    e_positive: Optional[bool]
    palindromic: bool
    tags: Tuple[str, ...]
    witness: Optional[Tuple[Tuple[int, ...], Tuple[int, ...]]]
    sources: int
    sinks: int
    width: int

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def num_edges(self) -> int:
        return self.graph.num_edges

    def to_json(self) -> dict:
        return {
            "graph": self.graph.to_json(),
            "n": self.n,
            "num_edges": self.num_edges,
            "symmetric": self.symmetric,
            "e_positive": self.e_positive,
            "palindromic": self.palindromic,
            "tags": list(self.tags),
            "witness": [list(w) for w in self.witness] if self.witness else None,
            "sources": self.sources,
            "sinks": self.sinks,
            "width": self.width,
        }

    @classmethod
    def from_json(cls, data: dict) -> ClassificationRecord:
        w = data.get("witness")
        return cls(
            graph=OrientedGraph.from_json(data["graph"]),
            symmetric=data["symmetric"],
            e_positive=data["e_positive"],
            palindromic=data["palindromic"],
            tags=tuple(data["tags"]),
            witness=(tuple(w[0]), tuple(w[1])) if w else None,
            sources=data["sources"],
            sinks=data["sinks"],
            width=data["width"],
        )


@lru_cache(maxsize=None)
def _keys(n: int):
    return family_keys(n)


def classify_graph(g: OrientedGraph) -> ClassificationRecord:
    g = canonical_form(g)
    x = cqf(g)
    witness = nonsymmetry_witness(x)
    symmetric = witness is None
    nui, mm = _keys(g.n)
    key = canonical_key(g)
    tags = tuple(t for t, hit in ((NUI, key in nui), (MIXED, key in mm)) if hit) or (OTHER,)
    sources, sinks = sources_and_sinks(g)
    return ClassificationRecord(
        graph=g,
        symmetric=symmetric,
        e_positive=is_e_positive(x) if symmetric else None,
        palindromic=is_palindromic(x, g.num_edges),
        tags=tags,
        witness=witness,
        sources=len(sources),
        sinks=len(sinks),
        width=width(g),
    )


def _job(payload: Tuple[int, Tuple[Tuple[int, int], ...]]) -> str:
    n, edges = payload
    return dumps(classify_graph(OrientedGraph(n, edges)).to_json())


# -- cache ---------------------------------------------------------------------------


def cache_key(g: OrientedGraph) -> str:
    return hashlib.sha256(dumps(canonical_form(g).to_json()).encode()).hexdigest()


class ResultCache:
    """One JSON file per record under ``<root>/n<n>/<sha256>.json``, written atomically."""

    def __init__(self, root: os.PathLike):
        self.root = Path(root)

    def path(self, g: OrientedGraph) -> Path:
        return self.root / f"n{g.n}" / f"{cache_key(g)}.json"

    def get(self, g: OrientedGraph) -> Optional[str]:
        p = self.path(g)
        try:
            return p.read_text()
        except FileNotFoundError:
            return None

    def put(self, g: OrientedGraph, text: str) -> None:
        p = self.path(g)
        p.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=p.parent, prefix=".tmp-", suffix=".json")
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(text)
            os.replace(tmp, p)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise


@dataclass
class ClassifyResult:
    records: List[ClassificationRecord]
    computed: int = 0
    cached: int = 0
    recheck_mismatches: List[str] = field(default_factory=list)

    def lines(self) -> List[str]:
        return [dumps(r.to_json()) for r in self.records]


def _sample(items: Sequence, count: int) -> List:
    """``count`` evenly spaced items, deterministic."""
    if count <= 0 or not items:
        return []
    if count >= len(items):
        return list(items)
    step = len(items) / count
    return [items[int(i * step)] for i in range(count)]


def classify(
    max_n: int,
    *,
    min_n: int = 1,
    cache_dir: Optional[os.PathLike] = None,
    workers: int = 1,
    recheck: int = 0,
    allow_large: bool = False,
) -> ClassifyResult:
    """Classify every connected DAG with ``min_n <= n <= max_n``.

    Records come back in a fixed order (by ``n``, then canonical edge list)
    regardless of worker count or cache state.  With ``recheck``, that many
    cached records are recomputed and compared byte for byte.
    """
    cache = ResultCache(cache_dir) if cache_dir else None
    graphs = [g for n in range(min_n, max_n + 1) for g in all_connected_dags(n, allow_large)]
    texts: List[Optional[str]] = [cache.get(g) if cache else None for g in graphs]
    result = ClassifyResult([])
    result.cached = sum(t is not None for t in texts)
    todo = [i for i, t in enumerate(texts) if t is None]
    for i, text in zip(todo, _map([(graphs[i].n, graphs[i].edges) for i in todo], workers)):
        texts[i] = text
        if cache:
            cache.put(graphs[i], text)
    result.computed = len(todo)
    if recheck and cache:
        done = set(todo)
        for i in _sample([i for i in range(len(graphs)) if i not in done], recheck):
            if _job((graphs[i].n, graphs[i].edges)) != texts[i]:
                result.recheck_mismatches.append(cache_key(graphs[i]))
    result.records = [ClassificationRecord.from_json(json.loads(t)) for t in texts]
    return result


def _map(payloads: List, workers: int) -> Iterator[str]:
    if workers <= 1 or len(payloads) < 2:
        return map(_job, payloads)
    ex = ProcessPoolExecutor(max_workers=workers)
    try:
        return iter(list(ex.map(_job, payloads, chunksize=max(1, len(payloads) // (8 * workers)))))
    finally:
        ex.shutdown()


def summarize(records: Sequence[ClassificationRecord]) -> dict:
    """Counts by ``n``: total, symmetric, and symmetric classes outside both families."""
    out = {}
    for r in records:
        row = out.setdefault(r.n, {"total": 0, "symmetric": 0, "untagged_symmetric": 0})
        row["total"] += 1
        if r.symmetric:
            row["symmetric"] += 1
            if r.tags == (OTHER,):
                row["untagged_symmetric"] += 1
    return {str(n): out[n] for n in sorted(out)}
