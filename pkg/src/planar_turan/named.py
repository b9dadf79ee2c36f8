"""Built-in graphs: small standard graphs and the drawn block catalog.

Catalog entries are given as polar drawings (angle in degrees, radius) with
straight edges; the clockwise rotation at each vertex is read off by sorting
neighbours by decreasing direction angle.  Vertex ``k`` of a drawing listed
from 1 becomes vertex ``k - 1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .plane_graph import PlaneGraph

R = 1.0


def from_drawing(
    points: list[tuple[float, float]], edges: list[tuple[int, int]]
) -> PlaneGraph:
    """Embed a straight-line drawing; ``edges`` use 1-based vertex labels."""
    xy = [
        (r * math.cos(math.radians(a)), r * math.sin(math.radians(a)))
        for a, r in points
    ]
    nbrs: list[list[int]] = [[] for _ in points]
    for a, b in edges:
        nbrs[a - 1].append(b - 1)
        nbrs[b - 1].append(a - 1)

    def angle(v: int, w: int) -> float:
        return math.atan2(xy[w][1] - xy[v][1], xy[w][0] - xy[v][0])

    rot = [sorted(ns, key=lambda w, v=v: -angle(v, w)) for v, ns in enumerate(nbrs)]
    return PlaneGraph.from_neighbors(len(points), rot)


def _ring(count: int, start: float = 0.0, radius: float = R) -> list[tuple[float, float]]:
    return [(start + i * 360.0 / count, radius) for i in range(count)]


def _cycle_edges(count: int) -> list[tuple[int, int]]:
    return [(i, i % count + 1) for i in range(1, count + 1)]


SQUARE = [(45, R), (135, R), (225, R), (315, R)]
PENTAGON = [(18, R), (90, R), (162, R), (234, R), (306, R)]
HEXAGON = _ring(6)
TRIANGLE = [(90, R), (210, R), (330, R)]


def cycle(n: int) -> PlaneGraph:
    return from_drawing(_ring(n), _cycle_edges(n))


def k2() -> PlaneGraph:
    return PlaneGraph.from_neighbors(2, [[1], [0]])


def k4() -> PlaneGraph:
    return from_drawing(TRIANGLE + [(0, 0)], [(1, 2), (2, 3), (3, 1), (1, 4), (2, 4), (3, 4)])


def octahedron() -> PlaneGraph:
    outer = [(90, R), (210, R), (330, R)]
    inner = [(270, R / 3), (30, R / 3), (150, R / 3)]
    edges = [(1, 2), (2, 3), (3, 1), (4, 5), (5, 6), (6, 4)]
    # inner vertex 4 faces outer edge 2-3, 5 faces 3-1, 6 faces 1-2
    edges += [(4, 2), (4, 3), (5, 3), (5, 1), (6, 1), (6, 2)]
    return from_drawing(outer + inner, edges)


def prism() -> PlaneGraph:
    outer = [(90, R), (210, R), (330, R)]
    inner = [(90, R / 3), (210, R / 3), (330, R / 3)]
    edges = [(1, 2), (2, 3), (3, 1), (4, 5), (5, 6), (6, 4), (1, 4), (2, 5), (3, 6)]
    return from_drawing(outer + inner, edges)


def theta(a: int, b: int, c: int) -> PlaneGraph:
    """Two poles joined by three internally disjoint paths of the given lengths."""
    nbrs: dict[int, list[int]] = {0: [], 1: []}
    next_id = 2
    paths = []
    for length in (a, b, c):
        inner = list(range(next_id, next_id + length - 1))
        next_id += length - 1
        paths.append([0] + inner + [1])
    n = next_id
    adj: list[list[int]] = [[] for _ in range(n)]
    for p in paths:
        for x, y in zip(p, p[1:]):
            adj[x].append(y)
            adj[y].append(x)
    # pole 0 sees the paths in order, pole 1 in reverse: a planar theta.
    adj[1] = list(reversed(adj[1]))
    return PlaneGraph.from_neighbors(n, adj)


def glued_k4_pair() -> PlaneGraph:
    """Two K4s on the common edge 0-1, the second drawn inside a face of the first."""
    from .constructor import glued_k4_chain

    return glued_k4_chain(2).graph


@dataclass(frozen=True)
class CatalogEntry:
    label: str
    graph: PlaneGraph
    marks: tuple[int, int] | None = None


def _catalog_specs() -> dict[str, tuple[list, list, tuple[int, int] | None]]:
    s = SQUARE
    p = PENTAGON
    h = HEXAGON
    t = TRIANGLE
    return {
        "B2": ([(0, R), (180, R)], [(1, 2)], None),
        "B3": (t, _cycle_edges(3), None),
        "B4a": (s, _cycle_edges(4) + [(2, 4)], None),
        "B4b": (t + [(90, R / 5)], _cycle_edges(3) + [(1, 4), (2, 4), (3, 4)], None),
        "B5a": (p, _cycle_edges(5) + [(2, 4), (2, 5)], None),
        "B5b": (s + [(0, 0)], _cycle_edges(4) + [(1, 5), (2, 5), (3, 5), (4, 5)], None),
        "B5c": (s + [(45, R / 2)], _cycle_edges(4) + [(2, 4), (1, 5), (2, 5), (4, 5)], None),
        "B5d": (
            t + [(0, 0), (90, R / 2)],
            _cycle_edges(3) + [(1, 5), (5, 4), (2, 4), (3, 4), (2, 5), (3, 5)],
            None,
        ),
        "B6a": (h, _cycle_edges(6) + [(3, 5), (3, 6), (3, 1)], (5, 1)),
        "B6b": (h, _cycle_edges(6) + [(3, 5), (3, 6), (2, 6)], None),
        "B6c": (h, _cycle_edges(6) + [(3, 5), (5, 1), (3, 1)], (5, 2)),
        "B6d": (
            p + [(0, 0)],
            _cycle_edges(5) + [(2, 4), (2, 6), (2, 5), (4, 6), (5, 6)],
            (4, 5),
        ),
        "B6e": (
            p + [(162, 2 * R / 3)],
            _cycle_edges(5) + [(2, 4), (2, 6), (2, 5), (4, 6), (3, 6)],
            None,
        ),
        "B6f": (
            p + [(270, R / 3)],
            [(1, 2), (1, 3), (2, 3), (3, 4), (4, 5), (5, 1), (1, 6), (3, 6), (4, 6), (5, 6)],
            None,
        ),
        "B6g": (
            s + [(45, R / 3), (45, 2 * R / 3)],
            _cycle_edges(4) + [(2, 4), (1, 6), (2, 5), (2, 6), (4, 5), (4, 6), (5, 6)],
            None,
        ),
        "B6h": (
            s + [(20, R / 2), (70, R / 2)],
            _cycle_edges(4) + [(2, 4), (1, 5), (1, 6), (2, 6), (4, 5), (4, 6), (5, 6)],
            None,
        ),
        "B6i": (
            s + [(45, R / 2), (225, R / 2)],
            _cycle_edges(4) + [(2, 4), (1, 5), (2, 5), (4, 5), (3, 6), (2, 6), (4, 6)],
            None,
        ),
        "B7a": (
            h + [(0, 0)],
            _cycle_edges(6) + [(3, 5), (5, 1), (3, 1), (7, 1), (3, 7), (5, 7)],
            None,
        ),
        "B7b": (
            s + [(45, R / 6), (45, 2 * R / 3), (90, 2 * R / 5)],
            _cycle_edges(4)
            + [(2, 4), (1, 6), (2, 5), (2, 6), (4, 5), (4, 6), (5, 6), (2, 7), (6, 7)],
            None,
        ),
    }


def catalog() -> dict[str, CatalogEntry]:
    out = {}
    for label, (points, edges, marks) in _catalog_specs().items():
        g = from_drawing(points, edges)
        m = (marks[0] - 1, marks[1] - 1) if marks else None
        out[label] = CatalogEntry(label, g, m)
    return out


def exceptional_flowers() -> dict[str, PlaneGraph]:
    """The two flowers whose block charge exceeds zero in a tight graph.

    Vertices: 0=c, 1=b, 2=a, 3=d, 4=v, 5=u, 6=centre vertex of the block.
    """
    ring = [(0, 2 * R / 3), (90, 2 * R / 3), (180, 2 * R / 3), (270, 2 * R / 3)]
    outer = [(0, 1.5 * R), (180, 1.5 * R)]
    stem = [(1, 2), (2, 3), (3, 4), (1, 4), (2, 5), (4, 5), (2, 6), (4, 6)]
    wheel = from_drawing(ring + outer + [(0, 0)], stem + [(1, 7), (2, 7), (3, 7), (4, 7)])
    chorded = from_drawing(
        ring + outer + [(90, R / 3)], stem + [(1, 3), (1, 7), (2, 7), (3, 7)]
    )
    return {"B5b": wheel, "B5c": chorded}


def _catalog_graph(label: str) -> Callable[[], PlaneGraph]:
    return lambda: catalog()[label].graph


NAMED: dict[str, Callable[[], PlaneGraph]] = {
    "k2": k2,
    "c3": lambda: cycle(3),
    "c7": lambda: cycle(7),
    "c8": lambda: cycle(8),
    "k4": k4,
    "octahedron": octahedron,
    "prism": prism,
    "theta444": lambda: theta(4, 4, 4),
    "glued-k4-pair": glued_k4_pair,
}
for _label in _catalog_specs():
    NAMED[_label.lower()] = _catalog_graph(_label)


def named_graph(name: str) -> PlaneGraph:
    try:
        return NAMED[name.lower()]()
    except KeyError:
        raise KeyError(f"unknown graph name {name!r}; known: {', '.join(sorted(NAMED))}") from None
