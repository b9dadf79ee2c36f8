"""Isomorph-free generation of small graphs by canonical augmentation.

A child ``H`` is the parent plus a new last vertex joined to a subset of the
old ones.  It is kept only if the new vertex lies in the canonical deletion
orbit of ``H``: among the first cell ``M`` of the equitable partition of ``H``
(the lowest degree vertices after refinement), the orbit whose vertex, once
individualised, yields the largest certificate.  Children of one parent are
then deduplicated by that certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from ..cycle_search import has_cycle_through
from ..plane_graph import GuardExceeded
from .canonical import _refine, canonical_labeling, edge_count
from .embed import is_planar

Adj = tuple[int, ...]
Accept = Callable[[Adj, int], bool]

MAX_N = 9


@dataclass(frozen=True)
class GraphClass:
    """A hereditary class (closed under deleting a vertex) used for pruning."""

    planar: bool = False
    forbidden_cycle: int | None = None

    @property
    def key(self) -> str:
        parts = ["planar" if self.planar else "all"]
        if self.forbidden_cycle is not None:
            parts.append(f"c{self.forbidden_cycle}free")
        return "-".join(parts)

    def accepts(self, adj: Adj, v: int) -> bool:
        """Membership of ``adj`` given that ``adj`` minus vertex ``v`` is a member."""
        n = len(adj)
        if self.planar and n >= 3 and edge_count(adj) > 3 * n - 6:
            return False
        if self.forbidden_cycle is not None and has_cycle_through(adj, v, self.forbidden_cycle):
            return False
        if self.planar and not is_planar(adj):
            return False
        return True


def _augment_key(child: Adj, v: int) -> tuple[int, ...] | None:
    """Certificate of ``child`` if ``v`` is a canonical deletion vertex, else None."""
    n = len(child)
    cells = _refine(child, [list(range(n))])
    first = cells[0]
    if v not in first:
        return None

    def cert_for(x: int) -> tuple[int, ...]:
        parts = [[x], [y for y in first if y != x]] + cells[1:]
        return canonical_labeling(child, [p for p in parts if p])[0]

    mine = cert_for(v)
    if len(first) == 1:
        return mine
    for x in first:
        if x != v and cert_for(x) > mine:
            return None
    return mine


def children(parent: Adj, cls: GraphClass) -> list[Adj]:
    """Canonical, pairwise non-isomorphic one-vertex extensions of ``parent``."""
    k = len(parent)
    bit = 1 << k
    seen: set[tuple[int, ...]] = set()
    out = []
    limit = 3 * (k + 1) - 6 if cls.planar and k + 1 >= 3 else None
    base_edges = edge_count(parent)
    for s in range(1 << k):
        if limit is not None and base_edges + s.bit_count() > limit:
            continue
        rows = list(parent)
        m = s
        while m:
            low = m & -m
            rows[low.bit_length() - 1] |= bit
            m ^= low
        rows.append(s)
        child = tuple(rows)
        key = _augment_key(child, k)
        if key is None or key in seen:
            continue
        if not cls.accepts(child, k):
            continue
        seen.add(key)
        out.append(child)
    return out


def _children_batch(args: tuple[list[Adj], GraphClass]) -> list[list[Adj]]:
    parents, cls = args
    return [children(p, cls) for p in parents]


def next_level(parents: Sequence[Adj], cls: GraphClass, jobs: int = 1) -> list[Adj]:
    """All graphs with one more vertex, in deterministic parent order."""
    if jobs <= 1 or len(parents) < 64:
        batches = [children(p, cls) for p in parents]
    else:
        from multiprocessing import Pool

        chunk = max(1, len(parents) // (jobs * 8))
        pieces = [(list(parents[i : i + chunk]), cls) for i in range(0, len(parents), chunk)]
        with Pool(jobs) as pool:
            batches = [b for part in pool.map(_children_batch, pieces) for b in part]
    return [c for batch in batches for c in batch]


# finished levels, shared by every caller in this process; the guard bounds its size
_MEMO: dict[tuple[GraphClass, int], tuple[Adj, ...]] = {}


def levels(max_n: int, cls: GraphClass = GraphClass(), jobs: int = 1, store=None) -> Iterator[tuple[int, list[Adj]]]:
    """Yield ``(n, graphs)`` for n = 1 .. max_n.

    ``store`` (optional) supplies ``load(cls, n)`` and ``save(cls, n, graphs)``
    so finished levels survive interruption.
    """
    if max_n > MAX_N:
        raise GuardExceeded(f"n={max_n} exceeds the enumeration guard {MAX_N}")
    current: Sequence[Adj] = ((0,),)
    yield 1, current
    for n in range(2, max_n + 1):
        memo = _MEMO.get((cls, n))
        if memo is not None:
            current = memo
            if store is not None and store.load(cls, n) is None:
                store.save(cls, n, list(current))
            yield n, current
            continue
        cached = store.load(cls, n) if store is not None else None
        if cached is None:
            current = next_level(current, cls, jobs)
            if store is not None:
                store.save(cls, n, current)
        else:
            current = cached
        current = _MEMO[(cls, n)] = tuple(current)
        yield n, current


def graphs(n: int, cls: GraphClass = GraphClass(), jobs: int = 1, store=None) -> Sequence[Adj]:
    if n < 1:
        return [()] if n == 0 else []
    result: Sequence[Adj] = []
    for k, level in levels(n, cls, jobs, store):
        result = level
    return result


def enumerate_abstract_graphs(n: int, jobs: int = 1, store=None) -> Iterator[Adj]:
    """All graphs on ``n`` vertices up to isomorphism, deterministic order."""
    yield from graphs(n, GraphClass(), jobs, store)
