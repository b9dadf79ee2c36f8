"""Exact small-n extremal numbers and graph corpora, with an on-disk cache."""

from __future__ import annotations

import json
import os
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator

from ..blocks import in_P_n
from ..plane_graph import PlaneGraph, format_rot, plane_code
from .canonical import canonical_form, edge_count, graph6, parse_graph6
from .embed import all_embeddings, biconnected_components, embed_planar
from .generate import MAX_N, GraphClass, GuardExceeded, graphs

Adj = tuple[int, ...]

CACHE_ENV = "PTURAN_CACHE_DIR"


class LevelStore:
    """Finished generation levels as graph6 lines, one file per class and order."""

    def __init__(self, root: str | os.PathLike):
        self.root = Path(root)

    def _path(self, cls: GraphClass, n: int) -> Path:
        return self.root / "levels" / f"{cls.key}-n{n}.g6"

    def load(self, cls: GraphClass, n: int) -> list[Adj] | None:
        path = self._path(cls, n)
        if not path.exists():
            return None
        lines = path.read_bytes().split(b"\n")
        if not lines or lines[-1] != b"#done":
            return None
        return [parse_graph6(x) for x in lines[:-1]]

    def save(self, cls: GraphClass, n: int, level: list[Adj]) -> None:
        path = self._path(cls, n)
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".tmp")
        body = b"\n".join(graph6(len(a), a) for a in level)
        tmp.write_bytes(body + (b"\n" if level else b"") + b"#done")
        tmp.replace(path)


def default_store(resume: bool = True) -> LevelStore | None:
    root = os.environ.get(CACHE_ENV)
    if not root or not resume:
        return None
    return LevelStore(root)


def adj_to_plane(adj: Adj) -> PlaneGraph | None:
    return embed_planar(adj)


def is_two_connected_adj(adj: Adj) -> bool:
    n = len(adj)
    if n < 3 or any(x == 0 for x in adj):
        return False
    comps = biconnected_components(adj)
    return len(comps) == 1 and len(comps[0]) >= 3


@dataclass
class SearchResult:
    n: int
    ell: int
    max_edges: int
    witnesses: list[PlaneGraph]
    graphs_examined: int
    elapsed: float = field(default=0.0, compare=False)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "ell": self.ell,
            "max_edges": self.max_edges,
            "graphs_examined": self.graphs_examined,
            "witnesses": [format_rot(w) for w in self.witnesses],
        }


def _check_n(n: int) -> None:
    if n > MAX_N:
        raise GuardExceeded(f"n={n} exceeds the enumeration guard {MAX_N}")


def ex_planar(n: int, ell: int, jobs: int = 1, store: LevelStore | None = None) -> SearchResult:
    """Maximum edges of an n-vertex planar graph with no cycle of length ``ell``.

    The class is closed under vertex deletion, so generation prunes every
    non-member parent; the answer is read off the last level.
    """
    _check_n(n)
    if ell < 3:
        raise ValueError("cycle length must be at least 3")
    start = time.perf_counter()
    level = graphs(n, GraphClass(planar=True, forbidden_cycle=ell), jobs, store)
    best = max(edge_count(a) for a in level)
    winners = sorted(
        (a for a in level if edge_count(a) == best), key=lambda a: canonical_form(a)
    )
    witnesses = [embed_planar(a) for a in winners]
    return SearchResult(n, ell, best, witnesses, len(level), time.perf_counter() - start)


def two_connected_planar(
    n: int, forbidden_cycle: int | None = None, jobs: int = 1, store: LevelStore | None = None
) -> list[Adj]:
    _check_n(n)
    cls = GraphClass(planar=True, forbidden_cycle=forbidden_cycle)
    return [a for a in graphs(n, cls, jobs, store) if is_two_connected_adj(a)]


def plane_corpus(
    max_n: int,
    forbidden_cycle: int | None = None,
    min_n: int = 3,
    jobs: int = 1,
    store: LevelStore | None = None,
) -> Iterator[PlaneGraph]:
    """Every 2-connected plane graph with min_n <= n <= max_n, up to isomorphism.

    Mirror images count once; each abstract graph contributes all of its
    embeddings.
    """
    for n in range(min_n, max_n + 1):
        for adj in two_connected_planar(n, forbidden_cycle, jobs, store):
            yield from all_embeddings(adj)


def corpus_P_n(
    n: int, all_embeddings_flag: bool = False, jobs: int = 1, store: LevelStore | None = None
) -> Iterator[PlaneGraph]:
    """Members of the tight class: 2-connected, C7-free, no sparse set of order <= 4."""
    if not 7 <= n <= MAX_N:
        raise GuardExceeded(f"corpus defined for 7 <= n <= {MAX_N}")
    for adj in two_connected_planar(n, 7, jobs, store):
        if min(x.bit_count() for x in adj) < 3:
            continue
        first = embed_planar(adj)
        if not in_P_n(first):
            continue
        if all_embeddings_flag:
            yield from all_embeddings(adj)
        else:
            yield first


def result_json(result: SearchResult) -> str:
    return json.dumps(result.to_json(), sort_keys=True, indent=2)


__all__ = [
    "SearchResult",
    "LevelStore",
    "ex_planar",
    "corpus_P_n",
    "plane_corpus",
    "two_connected_planar",
    "is_two_connected_adj",
    "plane_code",
]
