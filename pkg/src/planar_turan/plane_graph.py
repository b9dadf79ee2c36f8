"""Combinatorial plane embeddings stored as rotation systems.

Edge ``k`` owns the two darts ``2k`` and ``2k + 1``; dart ``2k`` leaves the
smaller endpoint.  Each vertex lists its outgoing darts in clockwise order and
faces are the orbits of ``phi = sigma . alpha`` (reverse the dart, then step to
the next dart clockwise around the new origin).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence


class GraphError(ValueError):
    """Base class for invalid graph input."""


class MalformedRotation(GraphError):
    """A rotation system references missing, duplicated or inconsistent darts."""


class NonSimple(GraphError):
    """The rotation system describes a loop or a multi-edge."""


class NonPlanarRotation(MalformedRotation):
    """The rotation system has positive genus on some component."""


class Disconnected(GraphError):
    """No path joins the requested vertices."""


class GuardExceeded(ValueError):
    """A search was asked to run beyond its supported size."""


@dataclass(frozen=True)
class Face:
    """One face of a plane graph: a cyclic dart sequence and its vertices."""

    index: int
    darts: tuple[int, ...]
    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.darts)

    def is_simple(self) -> bool:
        return len(set(self.vertices)) == len(self.vertices)


def rev(d: int) -> int:
    """Reversal involution: dart 2k <-> 2k+1."""
    return d ^ 1


class PlaneGraph:
    """Immutable simple graph with a clockwise rotation system.

    ``rotations[v]`` is the clockwise cyclic list of darts leaving ``v``.
    Use :meth:`from_neighbors` to build from clockwise neighbour lists.
    """

    __slots__ = (
        "vertex_count",
        "rotations",
        "_origin",
        "_pos",
        "__dict__",
    )

    def __init__(self, vertex_count: int, rotations: Sequence[Sequence[int]]):
        if vertex_count < 0:
            raise MalformedRotation("negative vertex count")
        if len(rotations) != vertex_count:
            raise MalformedRotation(
                f"expected {vertex_count} rotations, got {len(rotations)}"
            )
        self.vertex_count = vertex_count
        self.rotations: tuple[tuple[int, ...], ...] = tuple(
            tuple(int(d) for d in rot) for rot in rotations
        )
        total = sum(len(r) for r in self.rotations)
        if total % 2:
            raise MalformedRotation("odd number of darts")
        origin = [-1] * total
        pos = [-1] * total
        for v, rot in enumerate(self.rotations):
            for i, d in enumerate(rot):
                if not 0 <= d < total:
                    raise MalformedRotation(f"dart {d} out of range at vertex {v}")
                if origin[d] != -1:
                    raise MalformedRotation(f"dart {d} appears twice")
                origin[d] = v
                pos[d] = i
        self._origin = tuple(origin)
        self._pos = tuple(pos)
        seen: set[tuple[int, int]] = set()
        for k in range(total // 2):
            u, v = origin[2 * k], origin[2 * k + 1]
            if u == v:
                raise NonSimple(f"loop at vertex {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise NonSimple(f"parallel edges between {u} and {v}")
            seen.add(key)
        self._check_genus()

    # -- construction -----------------------------------------------------

    @classmethod
    def from_neighbors(
        cls, vertex_count: int, neighbors: Mapping[int, Sequence[int]] | Sequence[Sequence[int]]
    ) -> "PlaneGraph":
        """Build from clockwise neighbour lists; edge ids follow sorted (u, v) order."""
        if isinstance(neighbors, Mapping):
            lists = [list(neighbors.get(v, ())) for v in range(vertex_count)]
        else:
            lists = [list(x) for x in neighbors]
            if len(lists) != vertex_count:
                raise MalformedRotation("neighbour list count differs from vertex count")
        pairs = set()
        for v, nbrs in enumerate(lists):
            if len(set(nbrs)) != len(nbrs):
                raise NonSimple(f"repeated neighbour at vertex {v}")
            for w in nbrs:
                if not 0 <= w < vertex_count:
                    raise MalformedRotation(f"vertex {w} out of range")
                if w == v:
                    raise NonSimple(f"loop at vertex {v}")
                pairs.add((v, w))
        for v, w in pairs:
            if (w, v) not in pairs:
                raise MalformedRotation(f"edge {v}-{w} listed at {v} but not at {w}")
        edges = sorted({(min(a, b), max(a, b)) for a, b in pairs})
        dart = {}
        for k, (u, v) in enumerate(edges):
            dart[(u, v)] = 2 * k
            dart[(v, u)] = 2 * k + 1
        rotations = [[dart[(v, w)] for w in nbrs] for v, nbrs in enumerate(lists)]
        return cls(vertex_count, rotations)

    # -- dart structure ---------------------------------------------------

    @property
    def dart_count(self) -> int:
        return len(self._origin)

    @property
    def edge_count(self) -> int:
        return len(self._origin) // 2

    def origin(self, d: int) -> int:
        return self._origin[d]

    def target(self, d: int) -> int:
        return self._origin[d ^ 1]

    def next_cw(self, d: int) -> int:
        """sigma: the dart after ``d`` clockwise around its origin."""
        rot = self.rotations[self._origin[d]]
        return rot[(self._pos[d] + 1) % len(rot)]

    def prev_cw(self, d: int) -> int:
        rot = self.rotations[self._origin[d]]
        return rot[(self._pos[d] - 1) % len(rot)]

    def face_next(self, d: int) -> int:
        """phi = sigma . alpha."""
        return self.next_cw(d ^ 1)

    def dart(self, u: int, v: int) -> int:
        try:
            return self._dart_index[(u, v)]
        except KeyError:
            raise KeyError(f"no edge {u}-{v}") from None

    @cached_property
    def _dart_index(self) -> dict[tuple[int, int], int]:
        return {(self._origin[d], self._origin[d ^ 1]): d for d in range(self.dart_count)}

    # -- derived data -----------------------------------------------------

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edge k as (origin of dart 2k, origin of dart 2k+1)."""
        o = self._origin
        return tuple((o[2 * k], o[2 * k + 1]) for k in range(self.edge_count))

    def edge_id(self, u: int, v: int) -> int:
        return self.dart(u, v) >> 1

    @cached_property
    def neighbor_lists(self) -> tuple[tuple[int, ...], ...]:
        """Clockwise neighbour lists."""
        o = self._origin
        return tuple(tuple(o[d ^ 1] for d in rot) for rot in self.rotations)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.neighbor_lists[v]

    def degree(self, v: int) -> int:
        return len(self.rotations[v])

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        """Neighbourhoods as integer bitsets."""
        masks = []
        for nbrs in self.neighbor_lists:
            m = 0
            for w in nbrs:
                m |= 1 << w
            masks.append(m)
        return tuple(masks)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    @cached_property
    def faces(self) -> tuple[Face, ...]:
        seen = [False] * self.dart_count
        out = []
        for start in range(self.dart_count):
            if seen[start]:
                continue
            darts = []
            d = start
            while not seen[d]:
                seen[d] = True
                darts.append(d)
                d = self.face_next(d)
            verts = tuple(self._origin[x] for x in darts)
            out.append(Face(len(out), tuple(darts), verts))
        return tuple(out)

    @cached_property
    def face_of_dart(self) -> tuple[int, ...]:
        table = [0] * self.dart_count
        for f in self.faces:
            for d in f.darts:
                table[d] = f.index
        return tuple(table)

    @property
    def face_count(self) -> int:
        return len(self.faces)

    @cached_property
    def components(self) -> tuple[tuple[int, ...], ...]:
        """Connected components as sorted vertex tuples (isolated vertices included)."""
        comp = [-1] * self.vertex_count
        out = []
        for s in range(self.vertex_count):
            if comp[s] != -1:
                continue
            comp[s] = len(out)
            members = [s]
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in self.neighbor_lists[x]:
                    if comp[y] == -1:
                        comp[y] = len(out)
                        members.append(y)
                        queue.append(y)
            out.append(tuple(sorted(members)))
        return tuple(out)

    def is_connected(self) -> bool:
        return len(self.components) <= 1

    def _check_genus(self) -> None:
        comp_of = {}
        for i, comp in enumerate(self.components):
            for v in comp:
                comp_of[v] = i
        verts = [0] * len(self.components)
        edges = [0] * len(self.components)
        faces = [0] * len(self.components)
        for comp in self.components:
            for v in comp:
                verts[comp_of[v]] += 1
        for u, _ in self.edges:
            edges[comp_of[u]] += 1
        for f in self.faces:
            faces[comp_of[f.vertices[0]]] += 1
        for i in range(len(self.components)):
            if edges[i] == 0:
                continue
            if verts[i] - edges[i] + faces[i] != 2:
                raise NonPlanarRotation(
                    f"component {i} has Euler characteristic "
                    f"{verts[i] - edges[i] + faces[i]}"
                )

    # -- transformations --------------------------------------------------

    def restrict(self, edge_ids: Iterable[int]) -> "PlaneGraph":
        """Subgraph on the given edges with the inherited rotation.

        Vertex ids are kept (unused vertices become isolated); edges are
        renumbered in sorted endpoint order.
        """
        keep = set(edge_ids)
        nbrs = []
        for v, rot in enumerate(self.rotations):
            nbrs.append([self._origin[d ^ 1] for d in rot if (d >> 1) in keep])
        return PlaneGraph.from_neighbors(self.vertex_count, nbrs)

    def compact(self) -> tuple["PlaneGraph", tuple[int, ...]]:
        """Drop isolated vertices; returns the graph and new-to-old vertex map."""
        used = [v for v in range(self.vertex_count) if self.rotations[v]]
        new_id = {v: i for i, v in enumerate(used)}
        nbrs = [[new_id[w] for w in self.neighbor_lists[v]] for v in used]
        return PlaneGraph.from_neighbors(len(used), nbrs), tuple(used)

    def relabel(self, order: Sequence[int]) -> "PlaneGraph":
        """Graph whose vertex i is old vertex ``order[i]``."""
        new_id = {v: i for i, v in enumerate(order)}
        nbrs = [[new_id[w] for w in self.neighbor_lists[v]] for v in order]
        return PlaneGraph.from_neighbors(self.vertex_count, nbrs)

    def mirror(self) -> "PlaneGraph":
        return PlaneGraph.from_neighbors(
            self.vertex_count, [list(reversed(n)) for n in self.neighbor_lists]
        )

    # -- identity ---------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PlaneGraph):
            return NotImplemented
        return self.vertex_count == other.vertex_count and self.rotations == other.rotations

    def __hash__(self) -> int:
        return hash((self.vertex_count, self.rotations))

    def __repr__(self) -> str:
        return (
            f"PlaneGraph(V={self.vertex_count}, E={self.edge_count}, "
            f"F={self.face_count})"
        )


def build(vertex_count: int, rotations: Sequence[Sequence[int]]) -> PlaneGraph:
    return PlaneGraph(vertex_count, rotations)


def faces(g: PlaneGraph) -> tuple[Face, ...]:
    return g.faces


def is_two_connected(g: PlaneGraph) -> bool:
    """At least 3 vertices, connected, and no cut vertex."""
    n = g.vertex_count
    if n < 3 or not g.is_connected():
        return False
    return not cut_vertices(g)


def cut_vertices(g: PlaneGraph) -> set[int]:
    """Articulation points via iterative low-point DFS."""
    n = g.vertex_count
    disc = [-1] * n
    low = [0] * n
    cuts: set[int] = set()
    timer = 0
    nbrs = g.neighbor_lists
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack = [(root, -1, iter(nbrs[root]))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, iter(nbrs[w])))
                    advanced = True
                    break
                if w != parent:
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[v])
            if parent == root:
                root_children += 1
            elif low[v] >= disc[parent]:
                cuts.add(parent)
        if root_children > 1:
            cuts.add(root)
    return cuts


def bfs_distances(g: PlaneGraph, source: int) -> list[int]:
    """Hop distances from ``source``; -1 marks unreachable vertices."""
    dist = [-1] * g.vertex_count
    dist[source] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in g.neighbor_lists[x]:
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def distance(g: PlaneGraph, x: int, y: int) -> int:
    d = bfs_distances(g, x)[y]
    if d < 0:
        raise Disconnected(f"no path between {x} and {y}")
    return d


# -- plane canonical code ---------------------------------------------------


def _bfs_code(g: PlaneGraph, start: int, clockwise: bool, colors, best):
    """Plantri-style BFS code from ``start``; aborts early once worse than ``best``."""
    step = g.next_cw if clockwise else g.prev_cw
    label = {g.origin(start): 0}
    first = [start]
    order = [g.origin(start)]
    code: list[int] = []
    i = 0
    limit = len(best) if best is not None else None
    while i < len(order):
        d0 = first[i]
        d = d0
        while True:
            y = g.target(d)
            if y not in label:
                label[y] = len(order)
                order.append(y)
                first.append(d ^ 1)
            code.append(label[y])
            if limit is not None:
                k = len(code) - 1
                if k < limit and code[k] != best[k]:
                    if code[k] > best[k]:
                        return None
                    limit = None
            d = step(d)
            if d == d0:
                break
        code.append(-1)
        if limit is not None:
            k = len(code) - 1
            if k < limit and code[k] != best[k]:
                if code[k] > best[k]:
                    return None
                limit = None
        i += 1
    if colors is not None:
        code.append(-2)
        code.extend(colors[v] for v in order)
    return tuple(code)


def plane_code(
    g: PlaneGraph,
    colors: Mapping[int, int] | Sequence[int] | None = None,
    marked_face: int | None = None,
    mirror: bool = True,
) -> tuple[int, ...]:
    """Canonical code of a connected plane graph.

    Equal codes mean isomorphic embeddings (orientation reversal allowed when
    ``mirror``).  ``colors`` refines vertices; ``marked_face`` pins one face.
    """
    if g.edge_count == 0:
        return (g.vertex_count,)
    if not g.is_connected():
        raise GraphError("plane_code needs a connected graph")
    if colors is not None and not isinstance(colors, Mapping):
        colors = dict(enumerate(colors))
    if marked_face is None:
        starts_cw = range(g.dart_count)
        starts_ccw = range(g.dart_count)
    else:
        face = g.faces[marked_face].darts
        starts_cw = face
        starts_ccw = [d ^ 1 for d in face]
    best = None
    for d in starts_cw:
        c = _bfs_code(g, d, True, colors, best)
        if c is not None and (best is None or c < best):
            best = c
    if mirror:
        for d in starts_ccw:
            c = _bfs_code(g, d, False, colors, best)
            if c is not None and (best is None or c < best):
                best = c
    return best


# -- .rot text format -------------------------------------------------------


def format_rot(g: PlaneGraph) -> str:
    lines = [f"n {g.vertex_count}"]
    for v, nbrs in enumerate(g.neighbor_lists):
        lines.append(f"{v}: " + " ".join(str(w) for w in nbrs) if nbrs else f"{v}:")
    return "\n".join(lines) + "\n"


def _parse_block(lines: list[tuple[int, str]]) -> PlaneGraph:
    lineno, head = lines[0]
    parts = head.split()
    if len(parts) != 2 or parts[0] != "n":
        raise MalformedRotation(f"line {lineno}: expected 'n <count>'")
    try:
        n = int(parts[1])
    except ValueError:
        raise MalformedRotation(f"line {lineno}: bad vertex count") from None
    nbrs: dict[int, list[int]] = {}
    for lineno, text in lines[1:]:
        if ":" not in text:
            raise MalformedRotation(f"line {lineno}: expected '<v>: <neighbours>'")
        left, right = text.split(":", 1)
        try:
            v = int(left)
            ws = [int(x) for x in right.split()]
        except ValueError:
            raise MalformedRotation(f"line {lineno}: non-integer vertex") from None
        if not 0 <= v < n:
            raise MalformedRotation(f"line {lineno}: vertex {v} out of range")
        if v in nbrs:
            raise MalformedRotation(f"line {lineno}: vertex {v} listed twice")
        nbrs[v] = ws
    return PlaneGraph.from_neighbors(n, nbrs)


def parse_rot(text: str) -> list[PlaneGraph]:
    """Parse one or more blank-line separated ``.rot`` blocks."""
    blocks: list[list[tuple[int, str]]] = []
    current: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            if current:
                blocks.append(current)
                current = []
            continue
        current.append((lineno, line))
    if current:
        blocks.append(current)
    return [_parse_block(b) for b in blocks]


def read_rot(path) -> list[PlaneGraph]:
    with open(path, encoding="utf-8") as fh:
        return parse_rot(fh.read())


def iter_face_edges(g: PlaneGraph, face: Face) -> Iterator[int]:
    for d in face.darts:
        yield d >> 1
