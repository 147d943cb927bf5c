import pytest
from hypothesis import given, settings, strategies as st

import oracles as O
from liecheck.repchar import (FormalCharacter, decompose, dim_weyl, dual, exterior_power,
                              fs_indicator, irrep_character, symmetric_power, symplectic_type,
                              tensor)
from liecheck.rootdata import build_datum, fundamental_weights


def weight(d, labels):
    fw = fundamental_weights(d)
    w = [0] * d.rank
    for k, v in enumerate(labels):
        w = [a + v * b for a, b in zip(w, fw[k])]
    return tuple(int(x) for x in w)


@pytest.mark.parametrize("desc,labels,dim", [
    ("E7:sc", (0, 0, 0, 0, 0, 0, 1), 56), ("E7:sc", (1, 0, 0, 0, 0, 0, 0), 133),
    ("E6", (1, 0, 0, 0, 0, 0), 27), ("E8", (0, 0, 0, 0, 0, 0, 0, 1), 248),
    ("F4", (0, 0, 0, 1), 26), ("G2", (1, 0), 7), ("D6", (0, 0, 0, 0, 0, 1), 32),
    ("B5", (0, 0, 0, 0, 1), 32), ("A5", (0, 0, 1, 0, 0), 20), ("C3", (0, 0, 1), 14)])
def test_known_dimensions(desc, labels, dim):
    d = build_datum(desc)
    lam = weight(d, labels)
    assert dim_weyl(d, lam) == dim
    assert irrep_character(d, lam).dim == dim


@pytest.mark.parametrize("desc,labels", [("A2", (1, 1)), ("B2", (1, 1)), ("G2", (0, 1)),
                                         ("B3", (0, 0, 1)), ("C3", (0, 1, 0))])
def test_character_matches_weyl_formula(desc, labels):
    d = build_datum(desc)
    lam = weight(d, labels)
    got = dict(irrep_character(d, lam).items())
    assert got == O.weyl_character(d.simple_roots, d.simple_coroots, d.rank, lam)


def test_fs_formula_against_invariant_forms():
    a1, b3 = build_datum("A1"), build_datum("B3")
    assert fs_indicator(a1, weight(a1, (1,))) == O.form_sign(O.sl2_std()) == -1
    assert fs_indicator(b3, weight(b3, (0, 0, 1))) == O.form_sign(O.so7_spin()) == 1


@pytest.mark.parametrize("desc,labels,fs", [
    ("E7:sc", (0, 0, 0, 0, 0, 0, 1), -1), ("E7:sc", (1, 0, 0, 0, 0, 0, 0), 1),
    ("A2", (1, 0), 0), ("D6", (0, 0, 0, 0, 0, 1), -1), ("D4", (0, 0, 0, 1), 1),
    ("B5", (0, 0, 0, 0, 1), -1), ("C3", (0, 0, 1), -1), ("D5", (0, 0, 0, 0, 1), 0)])
def test_fs_known(desc, labels, fs):
    d = build_datum(desc)
    assert fs_indicator(d, weight(d, labels)) == fs


def test_exterior_and_symmetric_squares():
    d = build_datum("A3")
    std = irrep_character(d, weight(d, (1, 0, 0)))
    assert decompose(exterior_power(std, 2)) == [(weight(d, (0, 1, 0)), 1)]
    assert decompose(symmetric_power(std, 2)) == [(weight(d, (2, 0, 0)), 1)]
    sq = tensor(std, std)
    assert sq == exterior_power(std, 2) + symmetric_power(std, 2)


def test_symplectic_type():
    d = build_datum("A1")
    std = irrep_character(d, (1,))
    adj = irrep_character(d, (2,))
    assert symplectic_type(std)
    assert not symplectic_type(adj)
    assert symplectic_type(adj + adj)
    a2 = build_datum("A2")
    v = irrep_character(a2, weight(a2, (1, 0)))
    assert symplectic_type(v + dual(v))
    assert not symplectic_type(v)


def test_decompose_rejects_virtual():
    d = build_datum("A1")
    with pytest.raises(ValueError):
        decompose(irrep_character(d, (1,)) - irrep_character(d, (3,)))


def test_non_dominant_rejected():
    with pytest.raises(ValueError):
        dim_weyl(build_datum("A2"), (-1, 0))


A2 = build_datum("A2")
labels = st.tuples(st.integers(0, 3), st.integers(0, 3))


@settings(max_examples=25, deadline=None)
@given(labels, labels)
def test_tensor_decomposition_is_consistent(a, b):
    x, y = irrep_character(A2, weight(A2, a)), irrep_character(A2, weight(A2, b))
    t = tensor(x, y)
    pieces = decompose(t)
    assert sum(dim_weyl(A2, w) * m for w, m in pieces) == x.dim * y.dim
    total = FormalCharacter(A2)
    for w, m in pieces:
        total = total + irrep_character(A2, w).scale(m)
    assert total == t
    assert t.is_weyl_invariant()


@settings(max_examples=25, deadline=None)
@given(labels)
def test_dual_is_reversed_labels(a):
    x = irrep_character(A2, weight(A2, a))
    assert decompose(dual(x)) == [(weight(A2, a[::-1]), 1)]
