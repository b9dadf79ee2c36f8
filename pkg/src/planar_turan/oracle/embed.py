"""Planar embeddings of abstract graphs.

``embed_planar`` runs the face-based path embedding of Demoucron, Malgrange
and Pertuiset on each biconnected component and glues the rotations at cut
vertices.  ``all_embeddings`` enumerates every embedding of a 2-connected
graph by inserting the ears of a fixed ear decomposition into all faces that
can hold them.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from ..plane_graph import PlaneGraph, plane_code

Adj = Sequence[int]


def _bits(m: int) -> list[int]:
    out = []
    while m:
        low = m & -m
        out.append(low.bit_length() - 1)
        m ^= low
    return out


def biconnected_components(adj: Adj) -> list[list[tuple[int, int]]]:
    """Edge lists of the blocks (bridges included), via the edge-stack DFS."""
    n = len(adj)
    disc = [-1] * n
    low = [0] * n
    comps: list[list[tuple[int, int]]] = []
    timer = 0
    for root in range(n):
        if disc[root] != -1 or not adj[root]:
            continue
        disc[root] = low[root] = timer
        timer += 1
        estack: list[tuple[int, int]] = []
        stack = [(root, -1, iter(_bits(adj[root])))]
        while stack:
            v, parent, it = stack[-1]
            pushed = False
            for w in it:
                if disc[w] == -1:
                    estack.append((v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, iter(_bits(adj[w]))))
                    pushed = True
                    break
                if w != parent and disc[w] < disc[v]:
                    estack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if pushed:
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                comp = []
                while True:
                    e = estack.pop()
                    comp.append(e)
                    if e == (parent, v):
                        break
                comps.append(comp)
    return comps


def _rotation_from_faces(faces: list[list[int]], vertices: Sequence[int]) -> dict[int, list[int]]:
    """Clockwise rotations from consistently oriented face cycles."""
    succ: dict[int, dict[int, int]] = {v: {} for v in vertices}
    for f in faces:
        L = len(f)
        for i in range(L):
            u, v, w = f[i], f[(i + 1) % L], f[(i + 2) % L]
            succ[v][u] = w
    rot = {}
    for v in vertices:
        s = succ[v]
        if not s:
            rot[v] = []
            continue
        start = min(s)
        order = [start]
        x = s[start]
        while x != start:
            order.append(x)
            x = s[x]
        if len(order) != len(s):
            raise AssertionError("face cycles do not form a single rotation")
        rot[v] = order
    return rot


def _split_face(face: list[int], path: list[int]) -> tuple[list[int], list[int]]:
    a, b = path[0], path[-1]
    i, j = face.index(a), face.index(b)
    L = len(face)
    first = []
    k = i
    while True:
        first.append(face[k])
        if k == j:
            break
        k = (k + 1) % L
    second = []
    k = j
    while True:
        second.append(face[k])
        if k == i:
            break
        k = (k + 1) % L
    inner = path[1:-1]
    return first + inner[::-1], second + inner


def _find_cycle(adj: Adj, verts: int) -> list[int]:
    """Some cycle inside the vertex set ``verts`` (a 2-connected piece)."""
    start = _bits(verts)[0]
    parent = {start: -1}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in _bits(adj[v] & verts):
            if w == parent[v]:
                continue
            if w in parent:
                # tree paths from v and w back to their common ancestor
                pv, pw = [v], [w]
                seen = {v}
                x = v
                while parent[x] != -1:
                    x = parent[x]
                    pv.append(x)
                    seen.add(x)
                x = w
                while x not in seen:
                    x = parent[x]
                    pw.append(x)
                top = pw[-1]
                pv = pv[: pv.index(top) + 1]
                return pv + pw[-2::-1]
            parent[w] = v
            stack.append(w)
    raise ValueError("no cycle")


def _fragments(adj: Adj, verts: int, emb_vs: int, emb_edges: set[tuple[int, int]]):
    """Bridges of the embedded part: (attachment set, vertex mask, chord edge or None)."""
    out = []
    for u in _bits(emb_vs):
        for w in _bits(adj[u] & emb_vs):
            if u < w and (u, w) not in emb_edges:
                out.append(((1 << u) | (1 << w), 0, (u, w)))
    rest = verts & ~emb_vs
    seen = 0
    for s in _bits(rest):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = comp
        while frontier:
            nxt = 0
            for x in _bits(frontier):
                nxt |= adj[x] & rest
            nxt &= ~comp
            comp |= nxt
            frontier = nxt
        seen |= comp
        att = 0
        for x in _bits(comp):
            att |= adj[x] & emb_vs
        out.append((att, comp, None))
    return out


def _fragment_path(adj: Adj, att: int, comp: int, chord) -> list[int]:
    if chord is not None:
        return list(chord)
    a_list = _bits(att)
    a = a_list[0]
    # BFS from a through the fragment interior to another attachment
    start = [x for x in _bits(adj[a] & comp)]
    parent = {x: a for x in start}
    queue = list(start)
    for x in queue:
        for y in _bits(adj[x]):
            if y in (a,) or y in parent:
                continue
            if att >> y & 1:
                path = [y, x]
                while path[-1] != a:
                    path.append(parent[path[-1]])
                return path[::-1]
            if comp >> y & 1:
                parent[y] = x
                queue.append(y)
    raise AssertionError("fragment with a single attachment in a 2-connected piece")


def _demoucron(adj: Adj, verts: int) -> list[list[int]] | None:
    cycle = _find_cycle(adj, verts)
    faces = [list(cycle), list(reversed(cycle))]
    emb_vs = 0
    emb_edges: set[tuple[int, int]] = set()
    for i, v in enumerate(cycle):
        emb_vs |= 1 << v
        w = cycle[(i + 1) % len(cycle)]
        emb_edges.add((min(v, w), max(v, w)))
    total = sum((adj[v] & verts).bit_count() for v in _bits(verts)) // 2
    while len(emb_edges) < total:
        frags = _fragments(adj, verts, emb_vs, emb_edges)
        face_masks = []
        for f in faces:
            m = 0
            for v in f:
                m |= 1 << v
            face_masks.append(m)
        choice = None
        for att, comp, chord in frags:
            admissible = [i for i, m in enumerate(face_masks) if att & ~m == 0]
            if not admissible:
                return None
            if choice is None or len(admissible) < len(choice[1]):
                choice = ((att, comp, chord), admissible)
                if len(admissible) == 1:
                    break
        (att, comp, chord), admissible = choice
        path = _fragment_path(adj, att, comp, chord)
        fi = admissible[0]
        f1, f2 = _split_face(faces[fi], path)
        faces[fi : fi + 1] = [f1, f2]
        for x, y in zip(path, path[1:]):
            emb_edges.add((min(x, y), max(x, y)))
            emb_vs |= 1 << x | 1 << y
    return faces


def embed_planar(adj: Adj) -> PlaneGraph | None:
    """Some planar embedding of the graph, or None when it is not planar."""
    n = len(adj)
    m = sum(x.bit_count() for x in adj) // 2
    if n >= 3 and m > 3 * n - 6:
        return None
    rot: dict[int, list[int]] = {v: [] for v in range(n)}
    for comp in biconnected_components(adj):
        if len(comp) == 1:
            u, w = comp[0]
            rot[u].append(w)
            rot[w].append(u)
            continue
        verts = 0
        sub = {}
        for u, w in comp:
            verts |= 1 << u | 1 << w
        local = [0] * n
        for u, w in comp:
            local[u] |= 1 << w
            local[w] |= 1 << u
        faces = _demoucron(local, verts)
        if faces is None:
            return None
        sub = _rotation_from_faces(faces, _bits(verts))
        for v, order in sub.items():
            rot[v].extend(order)
    return PlaneGraph.from_neighbors(n, [rot[v] for v in range(n)])


def is_planar(adj: Adj) -> bool:
    return embed_planar(adj) is not None


# -- all embeddings of a 2-connected graph -----------------------------------


def ear_decomposition(adj: Adj) -> tuple[list[int], list[list[int]]]:
    """A cycle and a list of open ears covering a 2-connected graph."""
    n = len(adj)
    verts = 0
    for v in range(n):
        if adj[v]:
            verts |= 1 << v
    cycle = _find_cycle(adj, verts)
    emb_vs = 0
    emb_edges: set[tuple[int, int]] = set()
    for i, v in enumerate(cycle):
        emb_vs |= 1 << v
        w = cycle[(i + 1) % len(cycle)]
        emb_edges.add((min(v, w), max(v, w)))
    total = sum(x.bit_count() for x in adj) // 2
    ears = []
    while len(emb_edges) < total:
        frags = _fragments(adj, verts, emb_vs, emb_edges)
        att, comp, chord = frags[0]
        path = _fragment_path(adj, att, comp, chord)
        ears.append(path)
        for x, y in zip(path, path[1:]):
            emb_edges.add((min(x, y), max(x, y)))
            emb_vs |= 1 << x | 1 << y
    return cycle, ears


def all_embeddings(adj: Adj, distinct: bool = True) -> Iterator[PlaneGraph]:
    """Every embedding of a 2-connected graph, one per mirror pair.

    With ``distinct`` the output is further reduced to one embedding per
    isomorphism class of plane graphs (mirror images identified).
    """
    n = len(adj)
    cycle, ears = ear_decomposition(adj)
    seen: set[tuple[int, ...]] = set()
    verts = [v for v in range(n) if adj[v]]

    def rec(faces: list[list[int]], k: int) -> Iterator[list[list[int]]]:
        if k == len(ears):
            yield faces
            return
        ear = ears[k]
        a, b = ear[0], ear[-1]
        choices = [i for i, f in enumerate(faces) if a in f and b in f]
        if k == 0:
            choices = choices[:1]
        for i in choices:
            f1, f2 = _split_face(faces[i], ear)
            yield from rec(faces[:i] + [f1, f2] + faces[i + 1 :], k + 1)

    for faces in rec([list(cycle), list(reversed(cycle))], 0):
        rot = _rotation_from_faces(faces, verts)
        g = PlaneGraph.from_neighbors(n, [rot.get(v, []) for v in range(n)])
        if distinct:
            code = plane_code(g)
            if code in seen:
                continue
            seen.add(code)
        yield g


def abstract(g: PlaneGraph) -> tuple[int, ...]:
    return g.adjacency
