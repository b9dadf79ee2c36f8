"""Canonical labelling of small graphs by partition refinement and backtracking.

Graphs are tuples of neighbourhood bitsets.  The canonical form is the
largest relabelled adjacency certificate over the leaves of the
individualisation-refinement tree, encoded as graph6 bytes.
"""

from __future__ import annotations

from typing import Iterable, Sequence

Adj = tuple[int, ...]


def _refine(adj: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement of an ordered partition (deterministic)."""
    cells = [list(c) for c in cells]
    queue = list(range(len(cells)))
    queued = set(queue)
    while queue:
        w = queue.pop(0)
        queued.discard(w)
        if w >= len(cells):
            continue
        wmask = 0
        for x in cells[w]:
            wmask |= 1 << x
        i = 0
        while i < len(cells):
            cell = cells[i]
            if len(cell) == 1:
                i += 1
                continue
            counts = [(adj[x] & wmask).bit_count() for x in cell]
            if min(counts) == max(counts):
                i += 1
                continue
            groups: dict[int, list[int]] = {}
            for x, c in zip(cell, counts):
                groups.setdefault(c, []).append(x)
            pieces = [groups[c] for c in sorted(groups)]
            cells[i : i + 1] = pieces
            shift = len(pieces) - 1
            queue = [q + shift if q > i else q for q in queue]
            queued = set(queue)
            if w > i:
                w += shift
            for j in range(i, i + len(pieces)):
                if j not in queued:
                    queue.append(j)
                    queued.add(j)
            i += len(pieces)
    return cells


def _certificate(adj: Sequence[int], order: Sequence[int]) -> tuple[int, ...]:
    label = [0] * len(order)
    for i, v in enumerate(order):
        label[v] = i
    rows = []
    for v in order:
        m = adj[v]
        r = 0
        while m:
            low = m & -m
            m ^= low
            r |= 1 << label[low.bit_length() - 1]
        rows.append(r)
    return tuple(rows)


def canonical_labeling(
    adj: Sequence[int], partition: Iterable[Iterable[int]] | None = None
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(certificate, order) where ``order[i]`` is the vertex given label ``i``.

    ``partition`` is an ordered colouring; isomorphisms must respect it.
    """
    n = len(adj)
    if n == 0:
        return (), ()
    if partition is None:
        cells = [list(range(n))]
    else:
        cells = [sorted(c) for c in partition if c]
    best_cert: tuple[int, ...] | None = None
    best_order: tuple[int, ...] = ()
    autos: list[tuple[int, ...]] = []

    def search(cells: list[list[int]], fixed: tuple[int, ...]) -> None:
        nonlocal best_cert, best_order
        cells = _refine(adj, cells)
        target = None
        for idx, c in enumerate(cells):
            if len(c) > 1 and (target is None or len(c) < len(cells[target])):
                target = idx
        if target is None:
            order = tuple(c[0] for c in cells)
            cert = _certificate(adj, order)
            if best_cert is None or cert > best_cert:
                best_cert, best_order = cert, order
            elif cert == best_cert:
                perm = [0] * n
                for a, b in zip(best_order, order):
                    perm[a] = b
                autos.append(tuple(perm))
            return
        done: list[int] = []
        for v in cells[target]:
            if done and _same_orbit(v, done, fixed, autos, n):
                continue
            done.append(v)
            rest = [x for x in cells[target] if x != v]
            child = cells[:target] + [[v], rest] + cells[target + 1 :]
            search(child, fixed + (v,))

    search(cells, ())
    return best_cert, best_order


def _same_orbit(v: int, done: list[int], fixed: tuple[int, ...], autos, n: int) -> bool:
    """Is ``v`` in the orbit of an explored vertex under automorphisms fixing ``fixed``?"""
    gens = [p for p in autos if all(p[x] == x for x in fixed)]
    if not gens:
        return False
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in gens:
        for x in range(n):
            a, b = find(x), find(p[x])
            if a != b:
                parent[a] = b
    rv = find(v)
    return any(find(u) == rv for u in done)


def graph6(n: int, rows: Sequence[int]) -> bytes:
    """graph6 encoding of a graph given as neighbourhood bitsets."""
    if n < 63:
        out = bytearray([n + 63])
    elif n < 258048:
        out = bytearray([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    else:
        raise ValueError("graph too large for this encoder")
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(rows[i] >> j & 1)
    bits += [0] * (-len(bits) % 6)
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = val << 1 | b
        out.append(val + 63)
    return bytes(out)


def parse_graph6(data: bytes | str) -> Adj:
    if isinstance(data, str):
        data = data.encode()
    data = data.strip()
    if data[0] == 126:
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        body = data[4:]
    else:
        n = data[0] - 63
        body = data[1:]
    bits = []
    for ch in body:
        val = ch - 63
        bits.extend((val >> s) & 1 for s in range(5, -1, -1))
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return tuple(rows)


def canonical_form(adj: Sequence[int], partition=None) -> bytes:
    """Equal for two graphs iff they are isomorphic (respecting ``partition``)."""
    cert, _ = canonical_labeling(adj, partition)
    return graph6(len(adj), cert)


def relabel(adj: Sequence[int], order: Sequence[int]) -> Adj:
    return _certificate(adj, order)


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Adj:
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError("loops are not allowed")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return tuple(rows)


def edge_list(adj: Sequence[int]) -> list[tuple[int, int]]:
    return [(u, v) for u in range(len(adj)) for v in range(u + 1, len(adj)) if adj[u] >> v & 1]


def edge_count(adj: Sequence[int]) -> int:
    return sum(m.bit_count() for m in adj) // 2
