import json
import math

import pytest

from multilat import irreducibles as ir
from multilat import multinomial as mn
from multilat.errors import MultilatError

VECTORS = ["2,1", "1,1,1", "2,2", "2,1,1", "1,2,1", "3,3", "1,1,1,1", "2,2,1"]


def V(text):
    return mn.parse_vector(text)


def materialized(text):
    return mn.to_finite_lattice(V(text))


@pytest.mark.parametrize("text", VECTORS)
def test_count_formula(text):
    v = V(text)
    expected = math.prod(c + 1 for c in v.entries) - (1 + v.k)
    assert ir.count_ji(v) == expected == len(ir.enumerate_ji(v))
    assert len(ir.enumerate_mi(v)) == ir.count_ji(v)


def test_count_examples():
    assert ir.count_ji(V("3,3")) == 9
    assert ir.count_ji(V("1,1,1,1")) == 11


@pytest.mark.parametrize("text", VECTORS)
def test_ji_words_are_the_lattice_join_irreducibles(text):
    L = materialized(text)
    from_vectors = sorted(mn.word_str(ir.ji_word(j)) for j in ir.enumerate_ji(V(text)))
    from_lattice = sorted(L.labels[i] for i in L.join_irreducibles())
    assert from_vectors == from_lattice
    from_vectors = sorted(mn.word_str(ir.mi_word(m)) for m in ir.enumerate_mi(V(text)))
    from_lattice = sorted(L.labels[i] for i in L.meet_irreducibles())
    assert from_vectors == from_lattice


@pytest.mark.parametrize("text", VECTORS)
def test_word_vector_roundtrips(text):
    v = V(text)
    for j in ir.enumerate_ji(v):
        assert ir.parse_ji_word(ir.ji_word(j)) == j
    for m in ir.enumerate_mi(v):
        assert ir.parse_mi_word(ir.mi_word(m)) == m


def test_parse_rejects_wrong_shape():
    v = V("2,2")
    with pytest.raises(MultilatError):
        ir.parse_ji_word(mn.parse_word(v, "baba"))  # two descents
    with pytest.raises(MultilatError):
        ir.parse_ji_word(mn.parse_word(v, "aabb"))  # bottom: no descent


@pytest.mark.parametrize("text", VECTORS)
def test_kappa_and_dual_are_mutually_inverse(text):
    v = V(text)
    for j in ir.enumerate_ji(v):
        m = ir.kappa(j)
        assert m.kind == ir.MEET and not m.degenerate
        assert ir.kappa_d(m) == j
    for m in ir.enumerate_mi(v):
        assert ir.kappa(ir.kappa_d(m)) == m


@pytest.mark.parametrize("text", ["2,1", "1,1,1", "2,2", "2,1,1", "3,3"])
def test_kappa_matches_lattice_kappa(text):
    v = V(text)
    L = materialized(text)
    for j in ir.enumerate_ji(v):
        i = L.index_of(mn.word_str(ir.ji_word(j)))
        expected = L.kappa_of(i)
        assert expected is not None
        assert L.labels[expected] == mn.word_str(ir.mi_word(ir.kappa(j)))


def test_kappa_example():
    v = V("3,3")
    j = ir.parse_ji_word(mn.parse_word(v, "aabbab"))
    assert mn.word_str(ir.mi_word(ir.kappa(j))) == "baaabb"


@pytest.mark.parametrize("text", ["2,1", "1,1,1", "2,2", "2,1,1", "1,2,1"])
def test_arrows_match_lattice_arrows(text):
    v = V(text)
    L = materialized(text)
    jis = ir.enumerate_ji(v)
    mis = ir.enumerate_mi(v)
    jw = {j: L.index_of(mn.word_str(ir.ji_word(j))) for j in jis}
    mw = {m: L.index_of(mn.word_str(ir.mi_word(m))) for m in mis}
    for j in jis:
        for m in mis:
            assert ir.arrow_up(j, m) == L.arrow_up(jw[j], mw[m]), (j, m)
            assert ir.arrow_down(m, j) == L.arrow_down(mw[m], jw[j]), (m, j)


@pytest.mark.parametrize("text", ["1,1,1", "2,1,1", "1,2,1", "1,1,1,1"])
def test_d_rel_matches_bruteforce(text):
    v = V(text)
    L = materialized(text)
    jis = ir.enumerate_ji(v)
    idx = {L.index_of(mn.word_str(ir.ji_word(j))): j for j in jis}
    brute = {(idx[a], idx[b]) for a, b in L.bruteforce_D()}
    explicit = {(a, b) for a in jis for b in jis if ir.d_rel(a, b)}
    assert explicit == brute


@pytest.mark.parametrize("text", VECTORS)
def test_witness_m_connects_the_arrows(text):
    v = V(text)
    jis = ir.enumerate_ji(v)
    for j in jis:
        for k in jis:
            if ir.d_rel(j, k):
                m = ir.witness_m(j, k)
                assert ir.arrow_up(j, m) and ir.arrow_down(m, k)


@pytest.mark.parametrize("text", VECTORS)
def test_cover_type_tags(text):
    v = V(text)
    jis = ir.enumerate_ji(v)
    for j in jis:
        for k in jis:
            if not ir.d_rel(j, k):
                continue
            tag = ir.cover_type(j, k)
            assert tag in ir.COVER_TAGS
            ja, jb = ir.principal_plan(j)
            ke, kf = ir.principal_plan(k)
            if tag.startswith("L"):
                assert kf == jb and ke > ja
                assert (ir.arrow_up(j, ir.kappa(k)) if tag == "LA"
                        else ir.arrow_down(ir.kappa(j), k))
            elif tag.startswith("R"):
                assert ke == ja and kf < jb
                assert (ir.arrow_up(j, ir.kappa(k)) if tag == "RA"
                        else ir.arrow_down(ir.kappa(j), k))


@pytest.mark.parametrize("text", ["1,1,1,1", "2,1,1,1", "1,1,2,1,1"])
def test_left_move_factor_splits_long_left_moves(text):
    v = V(text)
    jis = ir.enumerate_ji(v)
    found = 0
    for j in jis:
        for k in jis:
            if not ir.d_rel(j, k):
                continue
            ja, jb = ir.principal_plan(j)
            ke, kf = ir.principal_plan(k)
            if kf == jb and ke - ja >= 2:
                mid = ir.left_move_factor(j, k)
                assert ir.principal_plan(mid) == (ja + 1, jb)
                assert ir.d_rel(j, mid) and ir.d_rel(mid, k)
                found += 1
    assert found > 0


def test_perm_ji_triple():
    v = V("1,1,1,1")
    j = ir.parse_ji_word(mn.parse_word(v, "bdac"))
    a, b = ir.principal_plan(j)
    ta, tb, mids = ir.perm_ji_triple(j)
    assert (ta, tb) == (a, b)
    assert mids <= set(range(a + 1, b))
    with pytest.raises(MultilatError):
        ir.perm_ji_triple(ir.enumerate_ji(V("2,1"))[0])


def test_d_graph_exports():
    g = ir.d_graph(V("1,1,1"))
    data = json.loads(g.to_json())
    assert len(data["nodes"]) == 4
    assert len(data["edges"]) == 4
    dot = g.to_dot()
    assert dot.startswith("digraph")
    assert dot.count("->") == 4


def test_longest_simple_path_values():
    assert ir.longest_simple_path(ir.d_graph(V("2,2"))) == 0
    assert ir.longest_simple_path(ir.d_graph(V("1,1,1"))) == 1
    assert ir.longest_simple_path(ir.d_graph(V("1,1,1,1"))) == 2
    assert ir.longest_simple_path(ir.d_graph(V("1,1,2,1,1"))) == 3


def test_degenerate_vectors_have_no_plan():
    v = V("2,2")
    bottom_like = ir.IrrVector(v, (0, 0), ir.JOIN)
    assert bottom_like.degenerate
    with pytest.raises(MultilatError):
        ir.principal_plan(bottom_like)
