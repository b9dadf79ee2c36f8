from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings

from planar_turan import blocks, constructor, named
from planar_turan.blocks import (
    NotTwoConnected,
    TIGHT_ALPHA,
    bad_cherries,
    charge,
    charge_report,
    classify,
    decompose,
    find_sparse_set,
    holes,
    in_P_n,
    incident_edge_count,
    membership_reasons,
    petals,
    refinement_length,
)
from planar_turan.plane_graph import is_two_connected, parse_rot

from conftest import plane_graphs

# A B5d block on 0..4 with a pendant 4-face 3-0-5-1 whose cherry 1-3-0 is bad.
CHERRY_ROT = """n 7
0: 1 4 2 3 5 6
1: 0 5 3 2 4
2: 0 4 1 3
3: 0 2 1
4: 0 1 2
5: 0 1 6
6: 0 5
"""


@pytest.fixture(scope="module")
def sub40():
    return constructor.substitute(named.cycle(8)).graph


def labels(g):
    return sorted(classify(b).label for b in decompose(g))


def test_k4_single_block():
    assert labels(named.k4()) == ["B4b"]


def test_glued_pair_is_one_block():
    (b,) = decompose(named.glued_k4_pair())
    assert len(b.vertices) == 6
    assert classify(b).label == "B6i"


def test_c8_trivial_blocks():
    bs = decompose(named.cycle(8))
    assert len(bs) == 8 and all(b.is_trivial for b in bs)
    assert labels(named.cycle(8)) == ["B2"] * 8


def test_requires_two_connected():
    with pytest.raises(NotTwoConnected):
        decompose(named.named_graph("k2"))


def test_holes():
    (b,) = decompose(named.octahedron())
    assert holes(b) == []
    for t in decompose(named.cycle(8)):
        assert holes(t) == []
    prism = named.prism()
    tris = [b for b in decompose(prism) if not b.is_trivial]
    assert len(tris) == 2 and all(len(holes(b)) == 1 for b in tris)


def test_petals():
    for t in decompose(named.cycle(8)):
        assert len(petals(t)) == 2
    (b,) = decompose(named.octahedron())
    assert petals(b) == []
    for b in decompose(named.prism()):
        if not b.is_trivial:
            ps = petals(b)
            assert len(ps) == 3
            assert all(named.prism().faces[p.face].length == 4 for p in ps)


def test_bad_cherries():
    k4 = named.k4()
    assert all(bad_cherries(k4, f.index) == [] for f in k4.faces)
    c8 = named.cycle(8)
    assert all(bad_cherries(c8, f.index) == [] for f in c8.faces)
    (g,) = parse_rot(CHERRY_ROT)
    face = next(f for f in g.faces if set(f.vertices) == {0, 1, 3, 5})
    assert bad_cherries(g, face.index) == [(1, 3, 0)]
    assert refinement_length(g, face.index) == 3
    b = next(b for b in decompose(g) if b.vertices == frozenset(range(5)))
    assert classify(b).label == "B5d"


def test_refinement_of_triangles():
    g = named.octahedron()
    assert all(refinement_length(g, f.index) == 3 for f in g.faces)


def test_long_faces_stay_long(corpus8):
    # in a C7-free graph a face of length >= 8 keeps length >= 8 after refinement
    from planar_turan.cycle_search import has_cycle_of_length

    checked = 0
    for g in corpus8:
        if has_cycle_of_length(g, 7):
            continue
        for f in g.faces:
            if f.length >= 8:
                checked += 1
                assert refinement_length(g, f.index) >= 8
    assert checked > 0


def test_octahedron_charge():
    (b,) = decompose(named.octahedron())
    c = charge(b)
    assert (c.e, c.n, c.f, c.g) == (12, 6, 8, 24)


def test_b3_with_three_petals_is_zero():
    prism = named.prism()
    for b in decompose(prism):
        if not b.is_trivial:
            c = charge(b)
            assert c.n == Fraction(3, 2)
            assert c.f == Fraction(7, 4)
            assert c.g == 0


def test_glued_pair_total():
    ledger = charge_report(named.glued_k4_pair())
    assert ledger.total_g == 17


def test_classify_examples():
    assert classify(decompose(named.named_graph("b4a"))[0]).label == "B4a"
    (b,) = [b for b in decompose(named.named_graph("b7a")) if not b.is_trivial]
    assert classify(b).label == "B7a"


@pytest.mark.parametrize("label", sorted(named.catalog()))
def test_catalog_self_classification(label):
    g = named.catalog()[label].graph
    if label == "B2":
        assert blocks.classify_plane(g).label == "B2"
        return
    # relabelled mirror images classify the same
    order = list(reversed(range(g.vertex_count)))
    for h in (g, g.mirror(), g.relabel(order)):
        bs = [b for b in decompose(h) if not b.is_trivial]
        assert [classify(b).label for b in bs] == [label]


def test_planted_large_block_has_c7():
    # every 8-vertex triangulation contains a C7, so such a block never enters the corpus
    from planar_turan.cycle_search import has_cycle_of_length
    from planar_turan.oracle.embed import embed_planar
    from planar_turan.oracle.generate import GraphClass, graphs

    tri8 = [a for a in graphs(8, GraphClass(planar=True)) if sum(x.bit_count() for x in a) == 36]
    assert tri8
    assert all(has_cycle_of_length(embed_planar(a), 7) for a in tri8)


def naive_sparse(g, alpha, max_order):
    for k in range(1, max_order + 1):
        for s in combinations(range(g.vertex_count), k):
            inc = sum(1 for u, v in g.edges if u in s or v in s)
            if inc <= alpha * k:
                return s
    return None


def test_sparse_examples():
    assert find_sparse_set(named.cycle(8)) == (0,)
    chain = constructor.glued_k4_chain(3).graph
    s = find_sparse_set(chain)
    assert len(s) == 2 and incident_edge_count(chain, s) == 5
    assert chain.has_edge(*s)
    assert find_sparse_set(named.octahedron(), TIGHT_ALPHA, 4) is None


@settings(max_examples=150, deadline=None)
@given(plane_graphs(max_n=9))
def test_sparse_matches_naive(g):
    for alpha in (Fraction(2), TIGHT_ALPHA, Fraction(3)):
        assert find_sparse_set(g, alpha, 3) == naive_sparse(g, alpha, 3)


def test_membership_examples():
    assert in_P_n(named.octahedron())
    assert not in_P_n(constructor.glued_k4_chain(2).graph)
    assert not in_P_n(constructor.glued_k4_chain(18).graph)
    assert not in_P_n(named.cycle(8))
    r = membership_reasons(named.cycle(8))
    assert r["sparse_set"] == [0] and r["member"] is False


def test_octahedron_ledger():
    ledger = charge_report(named.octahedron())
    assert ledger.groups == [[0]]
    assert ledger.group_sums == [24]
    assert ledger.verdict is False


def test_equality_graph_ledger(sub40):
    ledger = charge_report(sub40)
    assert ledger.face_count == 58
    assert ledger.total_g == 24 * 58 - 17 * 96 + 6 * 40 == 0
    assert ledger.verdict
    assert all(ledger.identities().values())
    assert in_P_n(sub40)


def test_ledger_json_rationals(sub40):
    data = charge_report(sub40).to_json()
    assert isinstance(data["total_g"], str)
    assert all(isinstance(r[k], str) for r in data["blocks"] for k in ("n", "f", "g"))


def test_exceptional_flower_grouping():
    # B5b wheel whose four stem edges are trivial blocks
    (g,) = parse_rot("n 7\n0: 1 2 4 3\n1: 0 3 2\n2: 0 1 5 6 4\n3: 0 4 6 5 1\n4: 0 2 3\n5: 2 3\n6: 2 3\n")
    ledger = charge_report(g)
    assert len(ledger.exceptional_groups) == 1
    grp = ledger.groups[ledger.exceptional_groups[0]]
    assert len(grp) == 5
    assert [ledger.rows[i].label for i in grp] == ["B5b", "B2", "B2", "B2", "B2"]
    assert ledger.group_sums[ledger.exceptional_groups[0]] == sum(ledger.rows[i].g for i in grp)
    assert all(ledger.identities().values())


@settings(max_examples=150, deadline=None)
@given(plane_graphs(min_n=3, max_n=9))
def test_identities_property(g):
    if not is_two_connected(g):
        return
    ledger = charge_report(g)
    assert ledger.identities() == {"edges": True, "vertices": True, "faces": True, "charge": True}


def test_common_vertex_lemma(corpus8):
    assert all(blocks.common_vertex_violations(g) == [] for g in corpus8)


def test_refinement_shape_lemma(sub40):
    assert blocks.refinement_shape_violations(sub40) == []
    big = constructor.substitute(named.named_graph("theta444")).graph
    assert blocks.refinement_shape_violations(big) == []
