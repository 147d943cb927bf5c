import pytest

from liecheck.branching import (branch, branch_rows, embedding_map, identity_map, levi_map,
                                pseudo_levi_map, restrict)
from liecheck.models import analyse_case, builtin_models
from liecheck.repchar import FormalCharacter, irrep_character
from liecheck.rootdata import build_datum, fundamental_weights
from liecheck.torsion import enumerate_torsion, summarize

E7 = build_datum("E7:sc")
W7 = tuple(int(x) for x in fundamental_weights(E7)[6])


def _dims(m, chi):
    return sorted((r.dim, r.multiplicity) for r in branch_rows(branch(chi, m), m.source))


def test_e7_to_e6_levi():
    m = levi_map(E7, range(6))
    rows = branch_rows(branch(irrep_character(E7, W7), m), m.source)
    assert m.source.type_label == "E6+T1"
    assert sorted(r.dim for r in rows) == [1, 1, 27, 27]
    charges = sorted(r.central[0] for r in rows)
    assert charges == sorted(-c for c in charges)  # the constituents come in dual pairs


@pytest.mark.parametrize("label,dims", [("D6+A1", [(24, 1), (32, 1)]), ("A7", [(28, 1), (28, 1)])])  # Λ² and its dual
def test_e7_pseudo_levis(label, dims):
    (p,) = [p for p in enumerate_torsion(E7, 2) if summarize(E7, p).label == label][:1]
    m = pseudo_levi_map(E7, p)
    assert _dims(m, irrep_character(E7, W7)) == dims


def test_identity_map_is_trivial():
    d = build_datum("B3")
    chi = irrep_character(d, (0, 0, 1))
    assert restrict(chi, identity_map(d)) == chi
    assert branch(chi, identity_map(d)) == [((0, 0, 1), 1)]


def test_diagonal_embedding():
    # GL2 -> GL2 x GL2 diagonally: std ⊠ std restricts to Sym² + det
    src, tgt = build_datum("GL2"), build_datum("GL2 x GL2")
    m = embedding_map(src, tgt, [[1, 0], [0, 1], [1, 0], [0, 1]])
    chi = irrep_character(tgt, tgt.weight_from_ambient([1, 0, 1, 0]))
    assert _dims(m, chi) == [(1, 1), (3, 1)]


def test_restrict_checks_datum():
    with pytest.raises(ValueError):
        restrict(irrep_character(build_datum("A1"), (1,)), identity_map(E7))


@pytest.mark.parametrize("model", builtin_models(), ids=lambda m: m.name)
def test_reconstruction_on_every_case(model):
    for case in model.endoscopic_cases:
        an = analyse_case(model, case)
        total = FormalCharacter(an.centralizer)
        for u in an.units:
            total = total + irrep_character(an.centralizer, u.hw)
        assert total == an.restriction, case.name
