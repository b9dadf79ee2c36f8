import random

import pytest
from hypothesis import strategies as st

from planar_turan.oracle.canonical import from_edges
from planar_turan.oracle.embed import embed_planar


def stacked_triangulation(n: int, rng: random.Random) -> list[tuple[int, int]]:
    """Edges of a random stacked triangulation; every subgraph is planar."""
    edges = {(0, 1), (0, 2), (1, 2)}
    faces = [(0, 1, 2), (0, 1, 2)]
    for v in range(3, n):
        a, b, c = faces.pop(rng.randrange(len(faces)))
        edges |= {(a, v), (b, v), (c, v)}
        faces += [(a, b, v), (b, c, v), (a, c, v)]
    return sorted(edges)


@st.composite
def planar_adjacency(draw, min_n: int = 3, max_n: int = 9, connected: bool = True):
    n = draw(st.integers(min_n, max_n))
    rng = random.Random(draw(st.integers(0, 2**32 - 1)))
    edges = stacked_triangulation(n, rng)
    keep = draw(st.lists(st.booleans(), min_size=len(edges), max_size=len(edges)))
    chosen = [e for e, k in zip(edges, keep) if k]
    if connected:
        # a spanning tree of the triangulation keeps the sample connected
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in chosen:
            parent[find(a)] = find(b)
        for a, b in edges:
            if find(a) != find(b):
                parent[find(a)] = find(b)
                chosen.append((a, b))
    return from_edges(n, chosen)


@st.composite
def plane_graphs(draw, min_n: int = 3, max_n: int = 9):
    adj = draw(planar_adjacency(min_n, max_n))
    g = embed_planar(adj)
    assert g is not None
    return g


@pytest.fixture(scope="session")
def corpus8():
    from planar_turan.oracle.search import plane_corpus

    return list(plane_corpus(8))


ACCEPTANCE: list[str] = []


@pytest.fixture
def criterion(capsys):
    """Record one PASS/FAIL line for an acceptance criterion and assert it."""

    def record(number: int, ok: bool, detail: str) -> None:
        line = f"ACCEPTANCE {number}: {'PASS' if ok else 'FAIL'} - {detail}"
        ACCEPTANCE.append(line)
        with capsys.disabled():
            print("\n" + line)
        assert ok, line

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
