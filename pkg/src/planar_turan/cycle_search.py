"""Exact fixed-length cycle and path-length queries on small graphs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .plane_graph import GraphError, PlaneGraph

DEFAULT_GUARD = 12


class TooLarge(GraphError):
    """Exhaustive path search refused: the graph exceeds the guard."""


class Acyclic(GraphError):
    """The graph is a forest, so girth is undefined."""


@dataclass(frozen=True)
class PathSpectrum:
    source: int
    target: int
    lengths: frozenset[int]


def _masks(g) -> tuple[int, ...]:
    if isinstance(g, PlaneGraph):
        return g.adjacency
    return tuple(g)


def _bfs_layers(adj: Sequence[int], alive: int, root: int) -> list[int]:
    """Distance to ``root`` inside the vertex set ``alive``; unreachable = large."""
    n = len(adj)
    dist = [n + 1] * n
    dist[root] = 0
    frontier = 1 << root
    seen = frontier
    d = 0
    while frontier:
        d += 1
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= adj[low.bit_length() - 1]
            f ^= low
        nxt &= alive & ~seen
        seen |= nxt
        frontier = nxt
        f = nxt
        while f:
            low = f & -f
            dist[low.bit_length() - 1] = d
            f ^= low
    return dist


def find_cycle(g, length: int) -> list[int] | None:
    """A simple cycle with exactly ``length`` vertices, or None.

    ``g`` is a PlaneGraph or a sequence of neighbourhood bitsets.  Anchors are
    taken in degree-descending order; each exhausted anchor is deleted, so
    the anchor is always the first vertex of any cycle found through it.
    """
    if length < 3:
        raise ValueError("cycle length must be at least 3")
    adj = _masks(g)
    n = len(adj)
    if length > n:
        return None
    alive = (1 << n) - 1
    order = sorted(range(n), key=lambda v: (-bin(adj[v]).count("1"), v))
    for anchor in order:
        if bin(alive).count("1") < length:
            return None
        if bin(adj[anchor] & alive).count("1") >= 2:
            dist = _bfs_layers(adj, alive, anchor)
            path = [anchor]
            found = _extend(adj, alive, anchor, dist, length, path, 1 << anchor)
            if found:
                return path
        alive &= ~(1 << anchor)
    return None


def _extend(adj, alive, anchor, dist, length, path, used) -> bool:
    v = path[-1]
    k = len(path)
    if k == length:
        return bool(adj[v] >> anchor & 1)
    remaining = length - k  # edges still to add before closing back
    cand = adj[v] & alive & ~used
    while cand:
        low = cand & -cand
        w = low.bit_length() - 1
        cand ^= low
        if dist[w] > remaining:
            continue
        path.append(w)
        if _extend(adj, alive, anchor, dist, length, path, used | low):
            return True
        path.pop()
    return False


def has_cycle_of_length(g, length: int) -> bool:
    return find_cycle(g, length) is not None


def path_spectrum(
    g: PlaneGraph, x: int, y: int, guard: int = DEFAULT_GUARD
) -> PathSpectrum:
    """Every length realised by a simple x-y path, by exhaustive DFS."""
    if x == y:
        raise ValueError("path endpoints must differ")
    n = g.vertex_count
    if n > guard:
        raise TooLarge(f"{n} vertices exceeds path search guard {guard}")
    adj = g.adjacency
    lengths: set[int] = set()
    target = 1 << y

    def dfs(v: int, used: int, depth: int) -> None:
        cand = adj[v] & ~used
        if cand & target:
            lengths.add(depth + 1)
            cand &= ~target
        while cand:
            low = cand & -cand
            cand ^= low
            dfs(low.bit_length() - 1, used | low, depth + 1)

    dfs(x, 1 << x, 0)
    return PathSpectrum(x, y, frozenset(lengths))


def has_hamiltonian_path_between(
    g: PlaneGraph, x: int, y: int, guard: int = DEFAULT_GUARD
) -> bool:
    return g.vertex_count - 1 in path_spectrum(g, x, y, guard).lengths


def girth(g) -> int:
    """Shortest cycle length via BFS from every vertex."""
    adj = _masks(g)
    n = len(adj)
    best = n + 1
    for s in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[s] = 0
        queue = [s]
        for x in queue:
            if 2 * dist[x] >= best:
                break
            m = adj[x]
            while m:
                low = m & -m
                m ^= low
                y = low.bit_length() - 1
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif y != parent[x]:
                    best = min(best, dist[x] + dist[y] + 1)
    if best > n:
        raise Acyclic("graph has no cycle")
    return best


def has_cycle_through(adj: Sequence[int], v: int, length: int) -> bool:
    """Is there a simple cycle of exactly ``length`` vertices through ``v``?"""
    n = len(adj)
    if length > n or (adj[v]).bit_count() < 2:
        return False
    alive = (1 << n) - 1
    dist = _bfs_layers(adj, alive, v)
    return _extend(adj, alive, v, dist, length, [v], 1 << v)
