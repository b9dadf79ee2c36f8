import random
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from planar_turan.blocks import in_P_n
from planar_turan.oracle import canonical, embed, search
from planar_turan.oracle.canonical import canonical_form, from_edges, graph6, parse_graph6, relabel
from planar_turan.oracle.embed import all_embeddings, embed_planar, is_planar
from planar_turan.oracle.generate import GraphClass, enumerate_abstract_graphs, graphs
from planar_turan.oracle.search import LevelStore, corpus_P_n, ex_planar, plane_corpus
from planar_turan.plane_graph import GuardExceeded

from conftest import planar_adjacency


def to_nx(adj):
    G = nx.Graph()
    G.add_nodes_from(range(len(adj)))
    G.add_edges_from(canonical.edge_list(adj))
    return G


@st.composite
def any_graph(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    rng = random.Random(draw(st.integers(0, 2**32 - 1)))
    p = draw(st.sampled_from([0.2, 0.4, 0.6, 0.8]))
    return from_edges(n, [(a, b) for a, b in combinations(range(n), 2) if rng.random() < p])


@pytest.mark.parametrize("n,count", [(3, 4), (4, 11), (5, 34), (6, 156), (7, 1044)])
def test_graph_counts(n, count):
    assert len(list(enumerate_abstract_graphs(n))) == count


def test_n5_against_naive_filter():
    # every labelled graph on 5 vertices, isomorph-rejected with networkx
    pairs = list(combinations(range(5), 2))
    reps: list[nx.Graph] = []
    for mask in range(1 << len(pairs)):
        G = nx.Graph()
        G.add_nodes_from(range(5))
        G.add_edges_from(p for i, p in enumerate(pairs) if mask >> i & 1)
        if not any(nx.faster_could_be_isomorphic(G, H) and nx.is_isomorphic(G, H) for H in reps):
            reps.append(G)
    ours = list(enumerate_abstract_graphs(5))
    assert len(reps) == len(ours) == 34
    for adj in ours:
        assert sum(nx.is_isomorphic(to_nx(adj), H) for H in reps) == 1


@pytest.mark.parametrize("n,count", [(5, 33), (6, 142), (7, 822)])
def test_planar_counts(n, count):
    assert len(graphs(n, GraphClass(planar=True))) == count


@settings(max_examples=200, deadline=None)
@given(any_graph())
def test_canonical_form_is_invariant(adj):
    perm = list(range(len(adj)))
    random.Random(sum(adj)).shuffle(perm)
    other = relabel(adj, perm)
    assert canonical_form(other) == canonical_form(adj)
    assert nx.is_isomorphic(to_nx(parse_graph6(canonical_form(adj))), to_nx(adj))


@settings(max_examples=200, deadline=None)
@given(any_graph())
def test_graph6_matches_networkx(adj):
    ours = graph6(len(adj), adj)
    assert ours == nx.to_graph6_bytes(to_nx(adj), header=False).strip()
    assert parse_graph6(ours) == tuple(adj)


@settings(max_examples=300, deadline=None)
@given(any_graph(max_n=9))
def test_planarity_matches_networkx(adj):
    planar, _ = nx.check_planarity(to_nx(adj))
    assert is_planar(adj) == planar
    g = embed_planar(adj)
    assert (g is not None) == planar
    if g is not None:
        assert embed.abstract(g) == tuple(adj)
        if g.is_connected() and g.edge_count:
            assert g.vertex_count - g.edge_count + g.face_count == 2
        m = canonical.edge_count(adj)
        if len(adj) >= 3:
            assert m <= 3 * len(adj) - 6


def test_embed_examples():
    k5 = from_edges(5, combinations(range(5), 2))
    k33 = from_edges(6, [(a, b) for a in range(3) for b in range(3, 6)])
    assert embed_planar(k5) is None
    assert embed_planar(k33) is None
    k4 = embed_planar(from_edges(4, combinations(range(4), 2)))
    assert sorted(f.length for f in k4.faces) == [3, 3, 3, 3]


@settings(max_examples=100, deadline=None)
@given(planar_adjacency(min_n=3, max_n=9))
def test_embedding_round_trip(adj):
    g = embed_planar(adj)
    assert g is not None
    assert embed_planar(embed.abstract(g)) is not None


@settings(max_examples=50, deadline=None)
@given(planar_adjacency(min_n=3, max_n=7))
def test_all_embeddings_are_embeddings_of_the_graph(adj):
    from planar_turan.oracle.search import is_two_connected_adj

    if not is_two_connected_adj(adj):
        return
    embs = list(all_embeddings(adj))
    assert embs
    for g in embs:
        assert embed.abstract(g) == tuple(adj)
        assert g.vertex_count - g.edge_count + g.face_count == 2


def test_ex_planar_triangle():
    for n in range(4, 9):
        assert ex_planar(n, 3).max_edges == 2 * n - 4


def test_ex_planar_c7_small():
    assert [ex_planar(n, 7).max_edges for n in (4, 5, 6)] == [6, 9, 12]
    r = ex_planar(7, 7)
    assert r.max_edges == 13
    assert r.graphs_examined == 601
    for w in r.witnesses:
        assert w.edge_count == 13


def test_ex_planar_monotone():
    vals = [ex_planar(n, 7).max_edges for n in range(3, 9)]
    assert vals == sorted(vals)


def test_guard():
    with pytest.raises(GuardExceeded):
        ex_planar(10, 7)
    with pytest.raises(GuardExceeded):
        list(corpus_P_n(6))


def test_level_store_round_trip(tmp_path):
    store = LevelStore(tmp_path)
    cls = GraphClass(planar=True, forbidden_cycle=5)
    levels = graphs(6, cls)
    store.save(cls, 6, list(levels))
    assert store.load(cls, 6) == list(levels)
    # an unfinished file is ignored
    p = store._path(cls, 7)
    p.write_bytes(b"E??W\n")
    assert store.load(cls, 7) is None


def test_corpus_p7_empty_against_atlas():
    members = list(corpus_P_n(7))
    assert members == []
    # independent route: every 7-vertex graph in the networkx atlas
    candidates = 0
    for G in nx.graph_atlas_g():
        if G.number_of_nodes() != 7 or not nx.is_biconnected(G):
            continue
        if not nx.check_planarity(G)[0] or min(d for _, d in G.degree) < 3:
            continue
        candidates += 1
        g = embed_planar(from_edges(7, G.edges))
        assert not in_P_n(g)
    assert candidates > 0


def test_plane_corpus_small():
    # 2-connected plane graphs on 3 and 4 vertices: triangle, C4, C4+chord, K4
    assert len(list(plane_corpus(4))) == 4


def test_search_result_json_is_deterministic():
    a = search.result_json(ex_planar(6, 5))
    b = search.result_json(ex_planar(6, 5))
    assert a == b
    assert "elapsed" not in a
