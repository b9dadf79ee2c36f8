"""Exhaustive checks of the path-length and block-shape lemmas on small graphs."""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator

from . import blocks
from .cycle_search import has_hamiltonian_path_between, path_spectrum
from .oracle.embed import _rotation_from_faces, all_embeddings
from .oracle.search import plane_corpus, two_connected_planar
from .plane_graph import GuardExceeded, PlaneGraph, bfs_distances, format_rot, plane_code

MAX_NT = 9


@dataclass(frozen=True)
class NearTriangulation:
    graph: PlaneGraph
    outer: int

    @property
    def outer_cycle(self) -> tuple[int, ...]:
        return self.graph.faces[self.outer].vertices

    def code(self) -> tuple[int, ...]:
        return plane_code(self.graph, marked_face=self.outer)


@dataclass
class LemmaReport:
    lemma: str
    instances: int = 0
    violations: list[dict] = field(default_factory=list)
    elapsed: float = 0.0
    census: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "lemma": self.lemma,
            "instances": self.instances,
            "violations": self.violations,
            "census": self.census,
            "passed": self.passed,
        }


def _k2() -> NearTriangulation:
    return NearTriangulation(PlaneGraph.from_neighbors(2, [[1], [0]]), 0)


def _is_near_triangulation(g: PlaneGraph) -> list[int]:
    """Faces that may serve as the outer face (all others are triangles)."""
    big = [f.index for f in g.faces if f.length != 3]
    if len(big) > 1:
        return []
    if big:
        return big
    return [f.index for f in g.faces]


def near_triangulations_by_filter(max_n: int, jobs: int = 1) -> Iterator[NearTriangulation]:
    """Near triangulations found among all embeddings of 2-connected planar graphs."""
    if max_n > MAX_NT:
        raise GuardExceeded(f"max_n={max_n} exceeds the guard {MAX_NT}")
    if max_n >= 2:
        yield _k2()
    for n in range(3, max_n + 1):
        seen: set[tuple[int, ...]] = set()
        for adj in two_connected_planar(n, jobs=jobs):
            m = sum(x.bit_count() for x in adj) // 2
            if m < 2 * n - 3:
                continue
            for g in all_embeddings(adj, distinct=False):
                for outer in _is_near_triangulation(g):
                    nt = NearTriangulation(g, outer)
                    c = nt.code()
                    if c not in seen:
                        seen.add(c)
                        yield nt


def _insert_before(rot: list[int], anchor: int, new: int) -> None:
    rot.insert(rot.index(anchor), new)


def _insert_after(rot: list[int], anchor: int, new: int) -> None:
    rot.insert(rot.index(anchor) + 1, new)


def _grow(nt: NearTriangulation, max_n: int) -> Iterator[NearTriangulation]:
    g = nt.graph
    n = g.vertex_count
    cyc = nt.outer_cycle
    L = len(cyc)
    for i in range(L):
        a, b = cyc[i], cyc[(i + 1) % L]
        if n < max_n:
            # new vertex in the outer face on edge a-b
            rot = [list(r) for r in g.neighbor_lists] + [[a, b]]
            _insert_before(rot[a], b, n)
            _insert_after(rot[b], a, n)
            h = PlaneGraph.from_neighbors(n + 1, rot)
            yield NearTriangulation(h, h.face_of_dart[h.dart(a, n)])
        c = cyc[(i + 2) % L]
        if L >= 4 and not g.has_edge(a, c):
            # chord a-c across the outer path a-b-c
            rot = [list(r) for r in g.neighbor_lists]
            _insert_before(rot[a], b, c)
            _insert_after(rot[c], b, a)
            h = PlaneGraph.from_neighbors(n, rot)
            yield NearTriangulation(h, h.face_of_dart[h.dart(a, c)])


def near_triangulations_by_accretion(max_n: int) -> Iterator[NearTriangulation]:
    """Independent generator: glue one triangle at a time onto the outer face."""
    if max_n < 2:
        return
    yield _k2()
    if max_n < 3:
        return
    tri = PlaneGraph.from_neighbors(3, [[1, 2], [2, 0], [0, 1]])
    start = NearTriangulation(tri, 0)
    seen = {start.code()}
    frontier = [start]
    by_n: dict[int, list[NearTriangulation]] = {3: [start]}
    while frontier:
        nxt = []
        for nt in frontier:
            for child in _grow(nt, max_n):
                c = child.code()
                if c not in seen:
                    seen.add(c)
                    nxt.append(child)
                    by_n.setdefault(child.graph.vertex_count, []).append(child)
        frontier = nxt
    for n in sorted(by_n):
        yield from by_n[n]


def enumerate_near_triangulations(max_n: int, jobs: int = 1) -> Iterator[NearTriangulation]:
    """Every near triangulation with at most ``max_n`` vertices, one per class.

    Classes identify mirror images and keep track of the outer face.  The K2
    convention object comes first.
    """
    yield from near_triangulations_by_filter(max_n, jobs)


def _outer_pairs(nt: NearTriangulation) -> Iterator[tuple[int, int]]:
    cyc = sorted(set(nt.outer_cycle))
    for i, x in enumerate(cyc):
        for y in cyc[i + 1 :]:
            yield x, y


def verify_lemma_paths(max_n: int, jobs: int = 1) -> LemmaReport:
    """Outer pairs joined by a Hamiltonian path realise every length from d(x,y) up."""
    if max_n > 8:
        raise GuardExceeded(f"max_n={max_n} exceeds the guard 8")
    start = time.perf_counter()
    report = LemmaReport("paths")
    for nt in enumerate_near_triangulations(max_n, jobs):
        g = nt.graph
        n = g.vertex_count
        for x, y in _outer_pairs(nt):
            lengths = path_spectrum(g, x, y).lengths
            if n - 1 not in lengths:
                continue
            report.instances += 2
            d = bfs_distances(g, x)[y]
            missing = sorted(set(range(d, n)) - lengths)
            if missing:
                report.violations.append(
                    {"graph": format_rot(g), "outer": nt.outer, "x": x, "y": y, "missing": missing}
                )
    report.elapsed = time.perf_counter() - start
    return report


# The three marked exceptional graphs as oriented face lists (inner faces
# counterclockwise, outer face clockwise) with the marked pair (x, y).
_MARKED_EXCEPTIONS = {
    "B6a": (6, [(0, 1, 2), (2, 3, 4), (2, 4, 5), (2, 5, 0), (5, 4, 3, 2, 1, 0)], (4, 0)),
    "B6c": (6, [(0, 1, 2), (2, 3, 4), (4, 5, 0), (0, 2, 4), (5, 4, 3, 2, 1, 0)], (4, 1)),
    "B6d": (6, [(1, 2, 3), (1, 3, 5), (3, 4, 5), (1, 5, 4), (0, 1, 4), (4, 3, 2, 1, 0)], (3, 4)),
}


def marked_exception_graphs() -> dict[str, tuple[PlaneGraph, tuple[int, int]]]:
    out = {}
    for label, (n, faces, marks) in _MARKED_EXCEPTIONS.items():
        rot = _rotation_from_faces([list(f) for f in faces], range(n))
        out[label] = (PlaneGraph.from_neighbors(n, [rot[v] for v in range(n)]), marks)
    return out


def _marked_code(g: PlaneGraph, x: int, y: int) -> tuple[int, ...]:
    colors = [0] * g.vertex_count
    colors[x] = colors[y] = 1
    return plane_code(g, colors=colors)


def _marked_exception_codes() -> dict[tuple[int, ...], str]:
    return {_marked_code(g, *m): label for label, (g, m) in marked_exception_graphs().items()}


def _chords(nt: NearTriangulation) -> set[frozenset[int]]:
    g = nt.graph
    cyc = nt.outer_cycle
    L = len(cyc)
    outer = {frozenset((cyc[i], cyc[(i + 1) % L])) for i in range(L)}
    on = set(cyc)
    return {
        frozenset(e) for e in g.edges if e[0] in on and e[1] in on and frozenset(e) not in outer
    }


def exceptions(nt: NearTriangulation, x: int, y: int) -> list[str]:
    """Which of the structural exceptions (i), (ii), (iii) hold for the pair."""
    g = nt.graph
    chords = _chords(nt)
    found = []
    if frozenset((x, y)) in chords:
        found.append("i")
    for z in g.neighbors(x):
        if z == y or not g.has_edge(z, y):
            continue
        if frozenset((x, z)) not in chords or frozenset((z, y)) not in chords:
            continue
        rest = [v for v in range(g.vertex_count) if v not in (x, y, z)]
        if len(rest) == 3 and all(not (g.adjacency[v] & ~(1 << x | 1 << y | 1 << z)) for v in rest):
            found.append("ii")
            break
    codes = _marked_exception_codes()
    if codes.get(_marked_code(g, x, y)) == "B6c":
        found.append("iii")
    return found


def verify_lemma_hpath(max_n: int = 6, jobs: int = 1) -> LemmaReport:
    """Outer pairs with no Hamiltonian path fall under one of the listed exceptions."""
    if max_n > 6:
        raise GuardExceeded(f"max_n={max_n} exceeds the guard 6")
    start = time.perf_counter()
    report = LemmaReport("hpath")
    census: Counter = Counter()
    triple: set[tuple[str, str]] = set()
    codes = _marked_exception_codes()
    for nt in enumerate_near_triangulations(max_n, jobs):
        g = nt.graph
        if g.vertex_count < 3:
            continue
        for x, y in _outer_pairs(nt):
            report.instances += 1
            ham = has_hamiltonian_path_between(g, x, y)
            exc = exceptions(nt, x, y)
            if ham:
                # exceptions (ii) and (iii) assert that no Hamiltonian path exists
                if set(exc) & {"ii", "iii"}:
                    report.violations.append(
                        {"graph": format_rot(g), "x": x, "y": y, "reason": "false positive", "exceptions": exc}
                    )
                continue
            if not exc:
                report.violations.append(
                    {"graph": format_rot(g), "x": x, "y": y, "reason": "no exception applies"}
                )
                continue
            census["+".join(exc)] += 1
            label = codes.get(_marked_code(g, x, y))
            if label is not None:
                for kind in exc:
                    if kind != "i":
                        triple.add((label, kind))
    report.census = {
        "by_exception": dict(sorted(census.items())),
        "marked_triple": sorted([list(t) for t in triple]),
    }
    report.elapsed = time.perf_counter() - start
    return report


def verify_block_catalog(max_n: int = 9, jobs: int = 1) -> LemmaReport:
    """Every block of a C7-free 2-connected plane graph is a catalogued shape."""
    if max_n > 9:
        raise GuardExceeded(f"max_n={max_n} exceeds the guard 9")
    start = time.perf_counter()
    report = LemmaReport("catalog")
    labels: Counter = Counter()
    for g in plane_corpus(max_n, forbidden_cycle=7, jobs=jobs):
        for b in blocks.decompose(g):
            cls = blocks.classify(b)
            report.instances += 1
            labels[cls.label] += 1
            bad = cls.label == "Other" or (
                len(b.vertices) >= 7 and cls.label not in ("B7a", "B7b")
            )
            if bad:
                report.violations.append(
                    {"graph": format_rot(g), "block": b.index, "label": cls.label}
                )
    report.census = {"labels": dict(sorted(labels.items()))}
    report.elapsed = time.perf_counter() - start
    return report


def verify_charges(max_n: int = 8, jobs: int = 1) -> LemmaReport:
    """The four partition identities hold exactly on every 2-connected plane graph."""
    if max_n > 9:
        raise GuardExceeded(f"max_n={max_n} exceeds the guard 9")
    start = time.perf_counter()
    report = LemmaReport("charges")
    for g in plane_corpus(max_n, jobs=jobs):
        ledger = blocks.charge_report(g)
        report.instances += 1
        failed = [k for k, ok in ledger.identities().items() if not ok]
        if failed:
            report.violations.append({"graph": format_rot(g), "failed": failed})
    report.elapsed = time.perf_counter() - start
    return report
