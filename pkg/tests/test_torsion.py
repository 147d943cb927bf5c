import pytest

import oracles as O
from liecheck.repchar import irrep_character
from liecheck.rootdata import build_datum, fundamental_coweights, fundamental_weights
from liecheck.torsion import (KacCoordinates, component_group_adjoint, enumerate_torsion,
                              eigenspace_decomposition, is_elliptic,
                              kac_to_point, point_to_kac, summarize)


@pytest.mark.parametrize("desc", ["A2", "B2:ad", "G2", "C3", "E6"])
@pytest.mark.parametrize("m", [2, 3, 4])
def test_kac_round_trip(desc, m):
    d = build_datum(desc)
    for p in enumerate_torsion(d, m):
        k = point_to_kac(p)
        assert k.order(d) == p.kac_order
        assert point_to_kac(kac_to_point(d, k)) == k


def test_e7_order_two_classes():
    d = build_datum("E7:sc")
    rows = sorted((s.label, s.order, s.elliptic) for s in map(lambda p: summarize(d, p),
                                                               enumerate_torsion(d, 2)))
    assert ("A7", 4, True) in rows
    assert ("E6+T1", 4, False) in rows  # x = ω7∨/2: Kac order 2, group order 4
    assert sum(1 for r in rows if r[0] == "D6+A1") == 2
    assert sum(1 for r in rows if r[0] == "E7") == 2


def test_group_order_kind():
    d = build_datum("E8")
    # E8: the identity plus the two involutions, centralizers D8 and E7+A1
    labels = sorted(summarize(d, p).label for p in enumerate_torsion(d, 2, "group"))
    assert labels == ["D8", "E7+A1", "E8"]


def test_bad_order_kind():
    with pytest.raises(ValueError):
        enumerate_torsion(build_datum("A1"), 2, "weird")


def test_eigenspaces_of_central_element():
    d = build_datum("E7:sc")
    lam = tuple(int(x) for x in fundamental_weights(d)[6])
    chi = irrep_character(d, lam)
    (z,) = [p for p in enumerate_torsion(d, 2)
            if summarize(d, p).label == "E7" and p.exact_order == 2]
    m, parts = eigenspace_decomposition(chi, z)
    assert {k: c.dim for k, c in parts.items()} == {m // 2: 56}
    assert is_elliptic(d, z)


@pytest.mark.parametrize("desc", ["A1", "A1:ad", "A2", "A2:ad", "B2", "B2:ad", "G2"])
def test_counts_match_brute_force_small(desc):
    d = build_datum(desc)
    cw = fundamental_coweights(d)
    for m in (1, 2, 3):
        assert len(enumerate_torsion(d, m)) == len(
            O.torsion_orbits(d.simple_roots, d.simple_coroots, d.rank, cw, m, 4))
        assert len(enumerate_torsion(d, m, "group")) == len(
            O.torsion_orbits(d.simple_roots, d.simple_coroots, d.rank, O.unit_vectors(d.rank), m))


def test_a1_examples():
    d = build_datum("A1")
    group = enumerate_torsion(d, 2, "group")
    assert sorted(p.exact_order for p in group) == [1, 2]
    minus_one = kac_to_point(d, KacCoordinates(((0, 1),)))
    assert minus_one.exact_order == 2 and is_elliptic(d, minus_one)
    # (1,1) sits halfway: diag(i, -i), order 4 in SL2, order 2 in PGL2
    half = kac_to_point(d, KacCoordinates(((1, 1),)))
    assert half.exact_order == 4
    assert not is_elliptic(d, half)
    assert len(enumerate_torsion(d, 2)) == 3


def test_component_groups_in_adjoint_forms():
    a1 = build_datum("A1:ad")
    half = kac_to_point(a1, KacCoordinates(((1, 1),)))
    assert component_group_adjoint(a1, half).order == 2
    assert component_group_adjoint(a1, kac_to_point(a1, KacCoordinates(((1, 0),)))).order == 1
    e7 = build_datum("E7:ad")
    # involutions of adjoint E7: D6+A1 has a connected centralizer, the other two do not
    got = {summarize(e7, p).label: component_group_adjoint(e7, p).order
           for p in enumerate_torsion(e7, 2)}
    assert got == {"E7": 1, "D6+A1": 1, "A7": 2, "E6+T1": 2}
