"""Triangular-block decomposition and exact charge accounting.

A triangular-block is a class of facial triangles under the "shares an edge"
relation, or a single edge lying in no facial triangle.  Each block receives
an exact charge ``g = 24 f - 17 e + 6 n`` whose sum over all blocks equals
``24 F - 17 E + 6 V``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Iterable

from . import named
from .cycle_search import has_cycle_of_length
from .plane_graph import GraphError, GuardExceeded, PlaneGraph, is_two_connected, plane_code


class NotTwoConnected(GraphError):
    """The decomposition needs a 2-connected plane graph."""


class ExceptionalOverlap(RuntimeError):
    """Two exceptional flowers claim the same block."""


TIGHT_ALPHA = Fraction(18, 7)
EXCEPTIONAL_CLASSES = ("B5b", "B5c")
CHERRY_CLASSES = frozenset({"B5d", "B6g", "B6h", "B7b"})


def fmt(q: Fraction) -> str:
    """Rational as ``p/q`` (or ``p`` when integral)."""
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _directed_key(g: PlaneGraph, darts: Iterable[int]) -> frozenset[tuple[int, int]]:
    return frozenset((g.origin(d), g.target(d)) for d in darts)


@dataclass(eq=False)
class TriangularBlock:
    parent: PlaneGraph
    index: int
    edges: frozenset[int]
    vertices: frozenset[int]
    triangles: tuple[int, ...]

    @property
    def is_trivial(self) -> bool:
        return len(self.vertices) == 2

    @cached_property
    def own_graph(self) -> PlaneGraph:
        """The block with the rotation inherited from the parent (same vertex ids)."""
        return self.parent.restrict(self.edges)

    @cached_property
    def own_faces(self):
        if self.is_trivial:
            return ()
        return self.own_graph.faces

    def __repr__(self) -> str:
        return f"TriangularBlock(#{self.index}, V={len(self.vertices)}, E={len(self.edges)})"


@dataclass(frozen=True)
class Petal:
    face: int
    block: int
    intersection: frozenset[int]
    leaky: bool
    is_bad_cherry_intersection: bool
    refinement_length: int


@dataclass(frozen=True)
class BlockClass:
    label: str
    order: int
    has_chord: bool


@dataclass(frozen=True)
class BlockCharge:
    e: int
    n: Fraction
    f: Fraction
    g: Fraction


@dataclass
class LedgerRow:
    block: int
    label: str
    e: int
    n: Fraction
    f: Fraction
    g: Fraction
    exceptional: bool


@dataclass
class ChargeLedger:
    vertex_count: int
    edge_count: int
    face_count: int
    rows: list[LedgerRow]
    groups: list[list[int]]
    group_sums: list[Fraction]
    exceptional_groups: list[int] = field(default_factory=list)

    @property
    def total_g(self) -> Fraction:
        return sum((r.g for r in self.rows), Fraction(0))

    @property
    def verdict(self) -> bool:
        return all(s <= 0 for s in self.group_sums)

    def identities(self) -> dict[str, bool]:
        V, E, F = self.vertex_count, self.edge_count, self.face_count
        return {
            "edges": sum(r.e for r in self.rows) == E,
            "vertices": sum((r.n for r in self.rows), Fraction(0)) == V,
            "faces": sum((r.f for r in self.rows), Fraction(0)) == F,
            "charge": self.total_g == 24 * F - 17 * E + 6 * V,
        }

    def to_json(self) -> dict:
        return {
            "n": self.vertex_count,
            "e": self.edge_count,
            "f": self.face_count,
            "blocks": [
                {
                    "id": r.block,
                    "class": r.label,
                    "e": r.e,
                    "n": fmt(r.n),
                    "f": fmt(r.f),
                    "g": fmt(r.g),
                    "exceptional": r.exceptional,
                }
                for r in self.rows
            ],
            "groups": self.groups,
            "group_sums": [fmt(s) for s in self.group_sums],
            "total_g": fmt(self.total_g),
            "verdict": self.verdict,
        }


class Decomposition:
    """Blocks of one graph plus the shared lookup tables built from them."""

    def __init__(self, g: PlaneGraph):
        if not is_two_connected(g):
            raise NotTwoConnected("triangular-block decomposition needs a 2-connected graph")
        self.graph = g
        tri = [f.index for f in g.faces if f.length == 3]
        parent = {t: t for t in tri}

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for k in range(g.edge_count):
            a, b = g.face_of_dart[2 * k], g.face_of_dart[2 * k + 1]
            if a in parent and b in parent:
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
        groups: dict[int, list[int]] = {}
        for t in tri:
            groups.setdefault(find(t), []).append(t)
        edge_block = [-1] * g.edge_count
        raw: list[tuple[frozenset[int], tuple[int, ...]]] = []
        for root in sorted(groups):
            es = set()
            for t in groups[root]:
                es.update(d >> 1 for d in g.faces[t].darts)
            raw.append((frozenset(es), tuple(groups[root])))
        covered = set().union(*(es for es, _ in raw)) if raw else set()
        for k in range(g.edge_count):
            if k not in covered:
                raw.append((frozenset({k}), ()))
        raw.sort(key=lambda item: min(item[0]))
        self.blocks: list[TriangularBlock] = []
        for i, (es, ts) in enumerate(raw):
            verts = frozenset(v for k in es for v in g.edges[k])
            self.blocks.append(TriangularBlock(g, i, es, verts, ts))
            for k in es:
                edge_block[k] = i
        self.edge_block = tuple(edge_block)
        at = [0] * g.vertex_count
        for b in self.blocks:
            for v in b.vertices:
                at[v] += 1
        self.blocks_at = tuple(at)
        self.junctions = frozenset(v for v in range(g.vertex_count) if at[v] > 1)
        self._face_keys = {_directed_key(g, f.darts): f.index for f in g.faces}

    # -- faces of blocks --------------------------------------------------

    @cached_property
    def block_face_status(self) -> list[list[int | None]]:
        """For each block, each own face: the matching G face index or None (a hole)."""
        out = []
        for b in self.blocks:
            bg = b.own_graph
            out.append([self._face_keys.get(_directed_key(bg, f.darts)) for f in b.own_faces])
        return out

    def holes(self, b: TriangularBlock) -> list[int]:
        return [i for i, m in enumerate(self.block_face_status[b.index]) if m is None]

    def non_hole_faces(self, b: TriangularBlock) -> list[int]:
        return [m for m in self.block_face_status[b.index] if m is not None]

    # -- cherries and refinement -----------------------------------------

    def _cherry_candidates(self, face_index: int) -> list[tuple[int, int, int]]:
        g = self.graph
        f = g.faces[face_index]
        verts = f.vertices
        L = len(verts)
        if L < 4:
            return []
        face_edges = {d >> 1 for d in f.darts}
        out = []
        for i in range(L):
            x1, x2, x3 = verts[i], verts[(i + 1) % L], verts[(i + 2) % L]
            if not g.has_edge(x1, x3):
                continue
            chord = g.edge_id(x1, x3)
            if chord in face_edges:
                continue
            b = self.edge_block[chord]
            if b != self.edge_block[g.edge_id(x1, x2)] or b != self.edge_block[g.edge_id(x2, x3)]:
                continue
            if x1 in self.junctions and x3 in self.junctions:
                out.append((i, x1, x2, x3))
        return out

    @cached_property
    def _refinements(self) -> dict[int, tuple[list[tuple[int, int, int]], list[int]]]:
        """Face index -> (bad cherries, edge ids of the refined cycle)."""
        g = self.graph
        table = {}
        for f in g.faces:
            cands = self._cherry_candidates(f.index)
            cherries = [(a, b, c) for _, a, b, c in cands]
            L = f.length
            # apply cherries greedily around the face, skipping any that
            # would reuse an edge already replaced
            replaced: set[int] = set()
            applied = []
            for i, a, _, c in cands:
                pos = {i % L, (i + 1) % L}
                if pos & replaced:
                    continue
                replaced |= pos
                applied.append((i, a, c))
            edges = [f.darts[j] >> 1 for j in range(L) if j not in replaced]
            edges += [g.edge_id(a, c) for _, a, c in applied]
            table[f.index] = (cherries, edges)
        return table

    def bad_cherries(self, face_index: int) -> list[tuple[int, int, int]]:
        return list(self._refinements[face_index][0])

    def refined_edges(self, face_index: int) -> list[int]:
        return list(self._refinements[face_index][1])

    def refinement_length(self, face_index: int) -> int:
        return len(self._refinements[face_index][1])

    # -- petals -----------------------------------------------------------

    @cached_property
    def _petals(self) -> list[list[Petal]]:
        g = self.graph
        per_block: list[list[Petal]] = [[] for _ in self.blocks]
        for f in g.faces:
            touched: dict[int, set[int]] = {}
            for d in f.darts:
                touched.setdefault(self.edge_block[d >> 1], set()).add(d >> 1)
            cherry_paths = {
                frozenset((g.edge_id(a, b), g.edge_id(b, c)))
                for a, b, c in self.bad_cherries(f.index)
            }
            rlen = self.refinement_length(f.index)
            for bi, es in sorted(touched.items()):
                b = self.blocks[bi]
                if f.index in self.non_hole_faces(b):
                    continue
                per_block[bi].append(
                    Petal(
                        face=f.index,
                        block=bi,
                        intersection=frozenset(es),
                        leaky=_components(g, es) > 1,
                        is_bad_cherry_intersection=frozenset(es) in cherry_paths,
                        refinement_length=rlen,
                    )
                )
        return per_block

    def petals(self, b: TriangularBlock) -> list[Petal]:
        return list(self._petals[b.index])

    # -- charges ----------------------------------------------------------

    def charge(self, b: TriangularBlock) -> BlockCharge:
        e = len(b.edges)
        n = sum((Fraction(1, self.blocks_at[v]) for v in b.vertices), Fraction(0))
        f = Fraction(len(self.non_hole_faces(b)))
        for p in self.petals(b):
            refined = self.refined_edges(p.face)
            share = sum(1 for k in refined if self.edge_block[k] == b.index)
            f += Fraction(share, len(refined))
        g = 24 * f - 17 * e + 6 * n
        return BlockCharge(e, n, f, g)

    @cached_property
    def classes(self) -> list[BlockClass]:
        return [classify(b) for b in self.blocks]

    def flower(self, b: TriangularBlock) -> PlaneGraph:
        es = set(b.edges)
        for p in self.petals(b):
            es.update(d >> 1 for d in self.graph.faces[p.face].darts)
        return self.graph.restrict(es).compact()[0]

    def flower_edges(self, b: TriangularBlock) -> set[int]:
        es = set()
        for p in self.petals(b):
            es.update(d >> 1 for d in self.graph.faces[p.face].darts)
        return es - set(b.edges)

    def is_exceptional(self, b: TriangularBlock) -> bool:
        if self.classes[b.index].label not in EXCEPTIONAL_CLASSES:
            return False
        fl = self.flower(b)
        if fl.vertex_count != 7 or fl.edge_count != 12 or plane_code(fl) not in _flower_codes():
            return False
        # the four stem edges must be trivial blocks for the grouping to apply
        return all(self.blocks[self.edge_block[k]].is_trivial for k in self.flower_edges(b))


@lru_cache(maxsize=4096)
def decomposition(g: PlaneGraph) -> Decomposition:
    return Decomposition(g)


def _components(g: PlaneGraph, edge_ids: Iterable[int]) -> int:
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for k in edge_ids:
        u, v = g.edges[k]
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    return len({find(x) for x in parent})


# -- public operations --------------------------------------------------------


def decompose(g: PlaneGraph) -> list[TriangularBlock]:
    return list(decomposition(g).blocks)


def holes(b: TriangularBlock) -> list[int]:
    return decomposition(b.parent).holes(b)


def petals(b: TriangularBlock) -> list[Petal]:
    return decomposition(b.parent).petals(b)


def bad_cherries(g: PlaneGraph, face: int) -> list[tuple[int, int, int]]:
    return decomposition(g).bad_cherries(face)


def refinement_length(g: PlaneGraph, face: int) -> int:
    return decomposition(g).refinement_length(face)


def charge(b: TriangularBlock) -> BlockCharge:
    return decomposition(b.parent).charge(b)


@lru_cache(maxsize=None)
def _catalog_codes() -> dict[tuple[int, ...], str]:
    return {plane_code(entry.graph): label for label, entry in named.catalog().items()}


@lru_cache(maxsize=None)
def _flower_codes() -> frozenset[tuple[int, ...]]:
    return frozenset(plane_code(g) for g in named.exceptional_flowers().values())


def _has_chord(g: PlaneGraph, face_vertices: tuple[int, ...]) -> bool:
    L = len(face_vertices)
    for i in range(L):
        for j in range(i + 2, L):
            if i == 0 and j == L - 1:
                continue
            if g.has_edge(face_vertices[i], face_vertices[j]):
                return True
    return False


def classify_plane(g: PlaneGraph) -> BlockClass:
    """Catalog label of a connected plane graph with no isolated vertices."""
    label = _catalog_codes().get(plane_code(g))
    big = [f for f in g.faces if f.length > 3]
    outer = big[0] if big else g.faces[0]
    chord = _has_chord(g, outer.vertices) if outer.is_simple() else False
    if label is None:
        if g.vertex_count == 6 and len(big) <= 1 and outer.is_simple() and not chord:
            label = "B6_chordless_NT"
        else:
            label = "Other"
    return BlockClass(label, g.vertex_count, chord)


def classify(b: TriangularBlock) -> BlockClass:
    if b.is_trivial:
        return BlockClass("B2", 2, False)
    return classify_plane(b.own_graph.compact()[0])


# -- sparse sets and membership -------------------------------------------------


def incident_edge_count(g: PlaneGraph, s: Iterable[int]) -> int:
    s = set(s)
    inside = sum(1 for u, v in g.edges if u in s and v in s)
    return sum(g.degree(v) for v in s) - inside


def find_sparse_set(
    g: PlaneGraph, alpha: Fraction = TIGHT_ALPHA, max_order: int = 4
) -> tuple[int, ...] | None:
    """Smallest, then lexicographically first, S with at most alpha|S| incident edges."""
    if max_order > 6:
        raise GuardExceeded(f"max_order {max_order} exceeds the guard of 6")
    alpha = Fraction(alpha)
    adj = g.adjacency
    deg = [m.bit_count() for m in adj]
    for k in range(1, max_order + 1):
        # incident edges = sum of degrees - edges inside S; compare scaled by the denominator
        cap = alpha * k
        for s in combinations(range(g.vertex_count), k):
            total = sum(deg[v] for v in s)
            if total - k * (k - 1) // 2 > cap:
                continue
            mask = 0
            for v in s:
                mask |= 1 << v
            inside = sum((adj[v] & mask).bit_count() for v in s) // 2
            if total - inside <= cap:
                return s
    return None


def membership_reasons(g: PlaneGraph) -> dict[str, object]:
    two = is_two_connected(g)
    c7 = has_cycle_of_length(g, 7)
    sparse = find_sparse_set(g, TIGHT_ALPHA, 4)
    return {
        "two_connected": two,
        "c7_free": not c7,
        "sparse_set": list(sparse) if sparse is not None else None,
        "member": two and not c7 and sparse is None,
    }


def in_P_n(g: PlaneGraph) -> bool:
    if not is_two_connected(g):
        return False
    if has_cycle_of_length(g, 7):
        return False
    return find_sparse_set(g, TIGHT_ALPHA, 4) is None


# -- ledger ---------------------------------------------------------------------


def charge_report(g: PlaneGraph) -> ChargeLedger:
    """Charges of every block, grouped so each exceptional flower absorbs its stem edges."""
    dec = decomposition(g)
    rows = []
    charges = []
    for b in dec.blocks:
        c = dec.charge(b)
        charges.append(c)
        rows.append(
            LedgerRow(b.index, dec.classes[b.index].label, c.e, c.n, c.f, c.g, False)
        )
    owner: dict[int, int] = {}
    groups: list[list[int]] = []
    exceptional_groups = []
    for b in dec.blocks:
        if not dec.is_exceptional(b):
            continue
        rows[b.index].exceptional = True
        members = {b.index} | {dec.edge_block[k] for k in dec.flower_edges(b)}
        for m in members:
            if m in owner:
                raise ExceptionalOverlap(
                    f"block {m} claimed by the flowers of blocks {owner[m]} and {b.index}"
                )
            owner[m] = b.index
        exceptional_groups.append(len(groups))
        groups.append(sorted(members))
    for b in dec.blocks:
        if b.index not in owner:
            groups.append([b.index])
    order = sorted(range(len(groups)), key=lambda i: groups[i][0])
    groups = [groups[i] for i in order]
    exceptional_groups = sorted(order.index(i) for i in exceptional_groups)
    sums = [sum((charges[m].g for m in grp), Fraction(0)) for grp in groups]
    return ChargeLedger(
        g.vertex_count, g.edge_count, g.face_count, rows, groups, sums, exceptional_groups
    )


# -- structural checks ------------------------------------------------------------


def common_vertex_violations(g: PlaneGraph) -> list[tuple[int, int, int]]:
    """Pairs of long faces of one block that share two or more vertices."""
    dec = decomposition(g)
    out = []
    for b in dec.blocks:
        long_faces = [f for f in b.own_faces if f.length >= 4]
        for f1, f2 in combinations(long_faces, 2):
            if len(set(f1.vertices) & set(f2.vertices)) > 1:
                out.append((b.index, f1.index, f2.index))
    return out


def refinement_shape_violations(g: PlaneGraph) -> list[tuple[int, int]]:
    """Short petals whose refinement differs, outside the allowed block shapes.

    The shape rule presumes G has no (18/7)-sparse set of order at most two;
    on graphs with such sets it reports genuine but expected departures.
    """
    dec = decomposition(g)
    out = []
    for b in dec.blocks:
        if len(b.vertices) < 3:
            continue
        for p in dec.petals(b):
            face = g.faces[p.face]
            if not 4 <= face.length <= 6 or p.refinement_length == face.length:
                continue
            ok = dec.classes[b.index].label in CHERRY_CLASSES and face.length == 4
            if ok:
                for x1, x2, x3 in dec.bad_cherries(p.face):
                    w = next(v for v in face.vertices if v not in (x1, x2, x3))
                    for x in (x1, x3):
                        if not dec.blocks[dec.edge_block[g.edge_id(w, x)]].is_trivial:
                            ok = False
            if not ok:
                out.append((b.index, p.face))
    return out
