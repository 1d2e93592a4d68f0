import itertools

import pytest

from conftest import oracle_sd_holds_on
from multilat import finite_lattice as fl
from multilat import multinomial as mn
from multilat.errors import MultilatError, NotALattice

ALL_FIXTURES = {
    "chain3": fl.chain(3),
    "chain4": fl.chain(4),
    "b2": fl.boolean_lattice(2),
    "b3": fl.boolean_lattice(3),
    "m3": fl.m3(),
    "n5": fl.n5(),
    "benzene": fl.benzene(),
}


def brute_join(L, i, j):
    ubs = [t for t in L.elements() if L.le(i, t) and L.le(j, t)]
    least = [t for t in ubs if all(L.le(t, u) for u in ubs)]
    assert len(least) == 1
    return least[0]


@pytest.mark.parametrize("name", sorted(ALL_FIXTURES))
def test_tables_against_bruteforce_bounds(name):
    L = ALL_FIXTURES[name]
    D = L.dual()
    for i in L.elements():
        for j in L.elements():
            assert L.join(i, j) == brute_join(L, i, j)
            assert L.meet(i, j) == brute_join(D, i, j)


def test_from_covers_rejects_cycle():
    with pytest.raises(NotALattice):
        fl.FiniteLattice.from_covers([("a", "b"), ("b", "a")])


def test_from_covers_rejects_two_maximal():
    with pytest.raises(NotALattice):
        fl.FiniteLattice.from_covers([("0", "a"), ("0", "b")])


def test_from_covers_rejects_missing_bounds():
    # a, b < c, d: the pair (a, b) has two minimal upper bounds
    covers = [("0", "a"), ("0", "b"), ("a", "c"), ("b", "c"),
              ("a", "d"), ("b", "d"), ("c", "1"), ("d", "1")]
    with pytest.raises(NotALattice):
        fl.FiniteLattice.from_covers(covers)


@pytest.mark.parametrize("name", sorted(ALL_FIXTURES))
def test_irreducibles_match_bruteforce(name):
    L = ALL_FIXTURES[name]
    assert L.join_irreducibles() == L.bruteforce_ji()
    assert L.meet_irreducibles() == L.bruteforce_mi()


def test_classification_of_fixtures():
    assert fl.chain(5).is_distributive()
    assert fl.boolean_lattice(3).is_distributive()
    m3, n5, benzene = fl.m3(), fl.n5(), fl.benzene()
    assert not m3.is_semidistributive() and not m3.is_distributive()
    assert n5.is_semidistributive() and not n5.is_distributive()
    assert n5.is_bounded()
    assert benzene.is_semidistributive() and benzene.is_bounded()
    assert not benzene.is_distributive()


def test_distributive_iff_empty_D():
    for name, L in ALL_FIXTURES.items():
        assert L.is_distributive() == (not L.bruteforce_D()), name


def test_arrows_and_kappa_on_n5():
    L = fl.n5()
    a, b, c = (L.index_of(x) for x in "abc")
    # each join irreducible has a unique arrow-up partner here
    for j in L.join_irreducibles():
        partners = [m for m in L.meet_irreducibles() if L.arrow_up(j, m)]
        assert L.kappa_of(j) in partners
    assert L.kappa_of(a) == b
    assert L.kappa_of(b) == c
    assert L.kappa_of(c) == a


def test_dual_involution_and_D_duality():
    L = fl.benzene()
    assert L.dual().dual().leq_table.tolist() == L.leq_table.tolist()
    assert L.bruteforce_D_dual() == L.dual().bruteforce_D()


@pytest.mark.parametrize("name", sorted(ALL_FIXTURES))
def test_principal_congruence_is_least_collapsing(name):
    L = ALL_FIXTURES[name]
    cong = L.congruences()
    for u in L.elements():
        for w in L.elements():
            if u == w:
                continue
            theta = L.principal_congruence(u, w)
            assert theta in cong
            blocks_uw = [t for t in cong
                         if any(u in blk and w in blk for blk in t)]
            # least: theta refines every congruence collapsing (u, w)
            for other in blocks_uw:
                for blk in theta:
                    assert any(blk <= oblk for oblk in other)


def test_congruence_counts():
    expected = {"chain3": 4, "chain4": 8, "b2": 4, "b3": 8,
                "m3": 2, "n5": 5, "benzene": 7}
    for name, count in expected.items():
        assert len(ALL_FIXTURES[name].congruences()) == count, name


def test_quotient_to_ji():
    L = fl.n5()
    a, b = L.index_of("a"), L.index_of("b")
    j = L.quotient_to_ji(a, b)
    assert j == a
    with pytest.raises(MultilatError):
        L.quotient_to_ji(L.top, L.bottom)


@pytest.mark.parametrize("name", sorted(ALL_FIXTURES))
@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_sd_holds_matches_direct_recursion(name, n):
    L = ALL_FIXTURES[name]
    verdict = L.sd_holds(n)
    all_ok = all(oracle_sd_holds_on(L, x, y, z, n)
                 for x, y, z in itertools.product(L.elements(), repeat=3))
    assert (verdict is True) == all_ok
    if verdict is not True:
        x, y, z = verdict
        assert not oracle_sd_holds_on(L, x, y, z, n)


def test_sd_eval_trace_consistency():
    L = fl.n5()
    x, y, z = L.index_of("c"), L.index_of("a"), L.index_of("b")
    tr = L.sd_eval(x, y, z, 2)
    assert tr.y_seq[0] == y and tr.z_seq[0] == z
    for k in range(2):
        assert tr.y_seq[k + 1] == L.join(y, L.meet(x, tr.z_seq[k]))
        assert tr.z_seq[k + 1] == L.join(z, L.meet(x, tr.y_seq[k]))
        assert tr.x_seq[k] == L.join(L.meet(x, tr.y_seq[k]),
                                     L.meet(x, tr.z_seq[k]))
    assert tr.holds == (L.meet(x, tr.y_seq[2]) == L.meet(x, L.join(y, z)))


def test_sd_mu_values():
    assert fl.chain(3).sd_mu() == 2
    assert fl.n5().sd_mu() == 3
    assert fl.benzene().sd_mu() == 3


def test_pentagon_search():
    pents = fl.n5().pentagon_search()
    L = fl.n5()
    assert all(p.nondegenerate for p in pents)
    assert any((L.labels[p.a], L.labels[p.b], L.labels[p.c]) == ("a", "b", "c")
               for p in pents)
    assert fl.boolean_lattice(3).pentagon_search() == []


def test_dpath_from_n5_failure():
    L = fl.n5()
    path = L.dpath_from_sd_failure(L.index_of("a"), L.index_of("b"),
                                   L.index_of("c"), 1)
    assert [L.labels[i] for i in path] == ["a", "b"]
    with pytest.raises(MultilatError):
        fl.m3().dpath_from_sd_failure(0, 1, 2, 1)  # not meet semidistributive


def test_dpath_rejects_non_failure():
    L = fl.benzene()
    with pytest.raises(MultilatError):
        L.dpath_from_sd_failure(L.bottom, L.bottom, L.bottom, 1)


def test_cover_file_roundtrip():
    for L in (fl.n5(), fl.benzene(), fl.boolean_lattice(3)):
        text = L.to_cover_file()
        back = fl.parse_cover_file(text)
        idx = {lbl: i for i, lbl in enumerate(back.labels)}
        for i in L.elements():
            for j in L.elements():
                assert L.le(i, j) == back.le(idx[L.labels[i]], idx[L.labels[j]])


def test_parse_cover_file_diagnostics():
    with pytest.raises(MultilatError, match="line 2"):
        fl.parse_cover_file("a<b\nnonsense\n")


def test_to_dot_mentions_all_labels():
    L = fl.n5()
    dot = L.to_dot()
    assert dot.startswith("digraph")
    for lbl in L.labels:
        assert f'"{lbl}"' in dot


def test_fixture_registry_and_seed_content():
    assert set(fl.FIXTURES) == {"n5", "m3", "benzene"}
    for make in fl.FIXTURES.values():
        assert make().n >= 5


def test_against_materialized_multinomial_lattice():
    L = mn.to_finite_lattice(mn.parse_vector("1,1,1"))
    assert L.n == 6
    assert L.is_semidistributive()
    assert not L.is_distributive()
    assert len(L.join_irreducibles()) == 4
    assert L.sd_holds(2) is True
    assert L.sd_holds(1) is not True
