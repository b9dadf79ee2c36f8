from collections import Counter

import pytest

from planar_turan import blocks, lemma_lab, named
from planar_turan.lemma_lab import (
    NearTriangulation,
    enumerate_near_triangulations,
    exceptions,
    marked_exception_graphs,
    near_triangulations_by_accretion,
    near_triangulations_by_filter,
    verify_block_catalog,
    verify_lemma_hpath,
    verify_lemma_paths,
)
from planar_turan.plane_graph import GuardExceeded, plane_code


def by_order(nts):
    return Counter(nt.graph.vertex_count for nt in nts)


def test_small_counts():
    nts = list(enumerate_near_triangulations(4))
    assert by_order(nts) == {2: 1, 3: 1, 4: 2}
    shapes = {tuple(sorted(f.length for f in nt.graph.faces)) for nt in nts if nt.graph.vertex_count == 4}
    # K4 and the 4-cycle with a chord
    assert shapes == {(3, 3, 3, 3), (3, 3, 4)}


def test_generators_agree():
    a = {nt.code() for nt in near_triangulations_by_filter(7)}
    b = {nt.code() for nt in near_triangulations_by_accretion(7)}
    assert a == b
    assert by_order(near_triangulations_by_filter(7)) == {2: 1, 3: 1, 4: 2, 5: 4, 6: 16, 7: 63}


def test_near_triangulation_shape():
    for nt in enumerate_near_triangulations(6):
        g = nt.graph
        if g.vertex_count < 3:
            continue
        assert all(f.length == 3 for f in g.faces if f.index != nt.outer)
        assert g.faces[nt.outer].is_simple()


def test_guard():
    with pytest.raises(GuardExceeded):
        list(near_triangulations_by_filter(10))
    with pytest.raises(GuardExceeded):
        verify_lemma_hpath(7)


def test_paths_k4():
    k4 = NearTriangulation(named.k4(), 0)
    from planar_turan.cycle_search import path_spectrum

    x, y = k4.outer_cycle[:2]
    assert path_spectrum(k4.graph, x, y).lengths >= {1, 2, 3}


def test_paths_lemma_n6():
    r = verify_lemma_paths(6)
    assert r.passed and r.instances > 0


def test_marked_graphs_match_catalog():
    figs = marked_exception_graphs()
    cat = named.catalog()
    for label, (g, marks) in figs.items():
        assert plane_code(g) == plane_code(cat[label].graph)
        assert cat[label].marks is not None


def test_marked_graph_exceptions():
    figs = marked_exception_graphs()
    got = {}
    for label, (g, (x, y)) in figs.items():
        outer = next(f.index for f in g.faces if f.length > 3)
        got[label] = exceptions(NearTriangulation(g, outer), x, y)
    assert "ii" in got["B6a"]
    assert "ii" in got["B6d"]
    assert "iii" in got["B6c"]


def test_hpath_report():
    r = verify_lemma_hpath(6)
    assert r.passed
    assert r.census["by_exception"] == {"i": 18, "i+ii": 3, "ii": 2, "iii": 3}
    assert r.census["marked_triple"] == [["B6a", "ii"], ["B6c", "iii"], ["B6d", "ii"]]


def test_chord_exception_at_five():
    # 5-vertex pairs with no Hamiltonian path are all chord cases
    from planar_turan.cycle_search import has_hamiltonian_path_between

    seen = 0
    for nt in enumerate_near_triangulations(5):
        g = nt.graph
        if g.vertex_count != 5:
            continue
        cyc = sorted(set(nt.outer_cycle))
        for i, x in enumerate(cyc):
            for y in cyc[i + 1 :]:
                if not has_hamiltonian_path_between(g, x, y):
                    seen += 1
                    assert exceptions(nt, x, y) == ["i"]
    assert seen > 0


def test_catalog_small():
    r = verify_block_catalog(7)
    assert r.passed
    assert "Other" not in r.census["labels"]


def test_report_json():
    data = verify_lemma_hpath(5).to_json()
    assert set(data) == {"lemma", "instances", "violations", "census", "passed"}
