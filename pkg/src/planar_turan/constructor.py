"""Extremal and boundary constructions with recomputed certificates."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import named
from .cycle_search import Acyclic, girth, has_cycle_of_length
from .plane_graph import GraphError, NonSimple, PlaneGraph

ELL = 7


class HostInvalid(GraphError):
    """The host graph violates a girth, degree or edge-count condition."""


class BlockInvalid(GraphError):
    """The substituted block is not a triangulation of the required order."""


class IdentificationConflict(GraphError):
    """Identifying ports would create a loop or a repeated edge."""


class NonIntegralBound(GraphError):
    """The bound (18 n - 48) / 7 is not an integer for the resulting order."""


@dataclass(frozen=True)
class HostSpec:
    graph: PlaneGraph
    girth: int
    degrees: frozenset[int]
    edge_target: Fraction


@dataclass
class Certificate:
    planar: bool
    c7_free: bool
    vertex_count: int
    edge_count: int
    bound_value: Fraction

    def to_json(self) -> dict:
        from .blocks import fmt

        return {
            "planar": self.planar,
            "c7_free": self.c7_free,
            "n": self.vertex_count,
            "e": self.edge_count,
            "bound": fmt(self.bound_value),
            "exceeds_bound": self.edge_count > self.bound_value,
            "meets_bound": self.edge_count == self.bound_value,
        }


@dataclass
class ConstructionResult:
    graph: PlaneGraph
    family: str
    parameters: dict
    certified: Certificate
    edge_copy: tuple[int, ...] = field(default=(), repr=False)

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "parameters": self.parameters,
            "certified": self.certified.to_json(),
        }


def bound(n: int) -> Fraction:
    """The extremal value 18n/7 - 48/7."""
    return Fraction(18 * n - 48, 7)


def certify(g: PlaneGraph) -> Certificate:
    euler = g.vertex_count - g.edge_count + g.face_count == 2
    return Certificate(
        planar=euler and g.is_connected(),
        c7_free=not has_cycle_of_length(g, ELL),
        vertex_count=g.vertex_count,
        edge_count=g.edge_count,
        bound_value=bound(g.vertex_count),
    )


def glued_k4_chain(k: int) -> ConstructionResult:
    """k copies of K4 sharing the edge 0-1, drawn as pages of a book.

    Copy i adds vertices 2 + 2i and 3 + 2i.  Edge 0-1 runs round the left of
    all pages.
    """
    if k < 1:
        raise ValueError("need at least one copy")
    u, v = 0, 1
    cs = [2 + 2 * i for i in range(k)]
    ds = [3 + 2 * i for i in range(k)]
    rot: list[list[int]] = [[] for _ in range(2 + 2 * k)]
    for c, d in zip(reversed(cs), reversed(ds)):
        rot[u] += [d, c]
    rot[u].append(v)
    rot[v].append(u)
    for c, d in zip(cs, ds):
        rot[v] += [c, d]
        rot[c] = [v, u, d]
        rot[d] = [v, c, u]
    g = PlaneGraph.from_neighbors(2 + 2 * k, rot)
    copy = tuple(
        0 if (a, b) == (u, v) else (max(a, b) - 2) // 2 for a, b in g.edges
    )
    return ConstructionResult(g, "glued-k4", {"copies": k}, certify(g), copy)


def validate_host(g: PlaneGraph) -> HostSpec:
    n, e = g.vertex_count, g.edge_count
    if not g.is_connected():
        raise HostInvalid("host must be connected")
    try:
        gi = girth(g)
    except Acyclic:
        raise HostInvalid("host has no cycle") from None
    if gi != ELL + 1:
        raise HostInvalid(f"girth is {gi}, need {ELL + 1}")
    degrees = frozenset(g.degree(x) for x in range(n))
    if not degrees <= {2, 3}:
        raise HostInvalid(f"degrees {sorted(degrees)} not within {{2, 3}}")
    target = Fraction(ELL + 1, ELL - 1) * (n - 2)
    if e != target:
        raise HostInvalid(f"edge count {e} differs from (4/3)(n-2) = {target}")
    return HostSpec(g, gi, degrees, target)


def _port_face(block: PlaneGraph) -> tuple[int, ...]:
    """Vertices of the first facial triangle in face order."""
    for f in block.faces:
        if f.length == 3:
            return f.vertices
    raise BlockInvalid("block has no facial triangle")


def substitute(host: HostSpec | PlaneGraph, block: PlaneGraph | None = None) -> ConstructionResult:
    """Replace each host vertex by a copy of a 6-vertex triangulation.

    Copies of adjacent host vertices share one port vertex, so the result has
    ``6 n - e(host)`` vertices and ``12 n`` edges.
    """
    if isinstance(host, PlaneGraph):
        host = validate_host(host)
    if block is None:
        block = named.octahedron()
    if block.vertex_count != ELL - 1:
        raise BlockInvalid(f"block must have {ELL - 1} vertices, has {block.vertex_count}")
    if any(f.length != 3 for f in block.faces) or not block.is_connected():
        raise BlockInvalid("block must be a triangulation")
    h = host.graph
    size = block.vertex_count
    ports = _port_face(block)
    # vertex (x, i) = copy of block vertex i for host vertex x, id x*size + i.
    # Host rotation around x lists neighbours clockwise; the port face is
    # traversed clockwise round the copy, so the j-th neighbour gets ports[j].
    port_of: dict[tuple[int, int], int] = {}
    for x in range(h.vertex_count):
        for j, w in enumerate(h.neighbors(x)):
            port_of[(x, w)] = x * size + ports[j]
    total = h.vertex_count * size
    rot: list[list[int]] = []
    for x in range(h.vertex_count):
        for i in range(size):
            rot.append([x * size + w for w in block.neighbors(i)])
    # attach each host edge in the outer corner of its port
    L = len(ports)
    for x in range(h.vertex_count):
        for j, w in enumerate(h.neighbors(x)):
            p = ports[j]
            after = x * size + ports[(j + 1) % L]
            r = rot[x * size + p]
            r.insert(r.index(after), port_of[(w, x)])
    # contract every host edge
    alias = list(range(total))

    def find(a: int) -> int:
        while alias[a] != a:
            a = alias[a]
        return a

    for a_x, b_x in h.edges:
        a, b = port_of[(a_x, b_x)], port_of[(b_x, a_x)]
        ra, rb = rot[a], rot[b]
        ia, ib = ra.index(b), rb.index(a)
        merged = ra[ia + 1 :] + ra[:ia] + rb[ib + 1 :] + rb[:ib]
        if len(set(merged)) != len(merged) or a in merged or b in merged:
            raise IdentificationConflict(f"ports {a} and {b} would create a repeated edge")
        rot[a] = merged
        rot[b] = []
        alias[b] = a
        for y in merged:
            rot[y] = [a if z == b else z for z in rot[y]]
    keep = [v for v in range(total) if alias[v] == v]
    new_id = {v: i for i, v in enumerate(keep)}
    try:
        g = PlaneGraph.from_neighbors(len(keep), [[new_id[find(w)] for w in rot[v]] for v in keep])
    except NonSimple as exc:
        raise IdentificationConflict(str(exc)) from None
    n_out = g.vertex_count
    if (18 * n_out - 48) % 7:
        raise NonIntegralBound(f"(18*{n_out} - 48)/7 is not an integer")
    owner = {}
    for x in range(h.vertex_count):
        for a, b in block.edges:
            key = tuple(sorted((new_id[find(x * size + a)], new_id[find(x * size + b)])))
            owner[key] = x
    copy = tuple(owner[tuple(sorted(e))] for e in g.edges)
    params = {
        "host_n": h.vertex_count,
        "host_e": h.edge_count,
        "block_n": block.vertex_count,
        "block_e": block.edge_count,
    }
    return ConstructionResult(g, "substitution", params, certify(g), copy)
