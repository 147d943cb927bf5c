"""Acceptance suite: one test per criterion, summarized at the end of the run."""
import subprocess
import sys
import time

import pytest

import oracles as O
from liecheck.endoscopy import (IDENTITIES, gu_shapes, kottwitz_sign, parse_stable, side_of,
                                stable_matches, transfer_sign, verify_cancellation)
from liecheck.models import (TABLE_ORDER, analyse_case, builtin_models, get_model,
                             verify_case, verify_elliptic_lifts, verify_model_level,
                             verify_weyl_constants)
from liecheck.repchar import (FormalCharacter, dim_weyl, fs_indicator, irrep_character,
                              symplectic_type)
from liecheck.rootdata import build_datum, fundamental_coweights, fundamental_weights
from liecheck.torsion import enumerate_torsion

TABLE = [get_model(n) for n in TABLE_ORDER]


def _weight(d, labels):
    fw = fundamental_weights(d)
    w = [0] * d.rank
    for k, v in enumerate(labels):
        w = [a + v * b for a, b in zip(w, fw[k])]
    return tuple(int(x) for x in w)


@pytest.mark.criterion(1, "dim V(w7, E7) = 56 and the ten model dimensions by two routes, < 5 s")
def test_dimension_constants():
    start = time.perf_counter()
    e7 = build_datum("E7:sc")
    w7 = _weight(e7, (0, 0, 0, 0, 0, 0, 1))
    assert dim_weyl(e7, w7) == 56
    assert irrep_character(e7, w7).dim == 56
    by_weyl = [sum(dim_weyl(m.dual_datum, w) for w in m.rho_x) for m in TABLE]
    by_support = [m.character().dim for m in TABLE]
    expected = [20, 20, 32, 20, 20, 32, 16, 16, 32, 56]
    assert by_weyl == expected
    assert by_support == expected
    assert time.perf_counter() - start < 5


@pytest.mark.criterion(2, "Weyl orders 1152, 96, 192, 9216, 768, 1536 and the index sum 18")
def test_weyl_constants():
    r = verify_weyl_constants()
    got = {it.claim_id: it.computed for it in r.items}
    assert sorted(v for k, v in got.items() if k != "weyl:index-sum") == [96, 192, 768, 1152,
                                                                          1536, 9216]
    assert got["weyl:index-sum"] == 18
    assert r.ok


V_MINUS_ZERO = [("GSp6xGL2", "order 4"), ("GSp10", "dimW-=6"), ("GSp10", "dimW-=10"),
                ("GSO12", "dimW-=6"), ("E7", "A7")]


@pytest.mark.criterion(3, "eigenspace decomposition of every endoscopic case, < 60 s")
def test_decomposition_suite():
    start = time.perf_counter()
    failures, n_cases, pair_cases, claims = [], 0, 0, set()
    for model in builtin_models():
        for case in model.endoscopic_cases:
            n_cases += 1
            r = verify_case(model, case)
            failures += [(f.claim_id, f.computed, f.expected) for f in r.failures()]
            claims |= {it.claim_id for it in r.items}
            if any(not p.self_dual for p in case.expected_pieces):
                pair_cases += 1
    elapsed = time.perf_counter() - start
    assert failures == []
    assert n_cases >= 25
    assert pair_cases > 0
    for name, case in V_MINUS_ZERO:
        assert f"{name}:{case}:minus-one-empty" in claims
        assert f"{name}:{case}:sign:V- = 0 gives omega = constants" in claims
    assert elapsed < 60


@pytest.mark.criterion(4, "E7 elliptic classes D6+A1, A5+A2 (orders 3, 6), 2A3+A1, A7; A-type Levis")
def test_elliptic_lifts():
    r = verify_elliptic_lifts()
    assert r.ok, [(f.claim_id, f.computed) for f in r.failures()]
    got = {it.claim_id: it.computed for it in r.items}
    assert got["elliptic:D6+A1"] == [2]
    assert got["elliptic:A5+A2"] == [3, 6]
    assert got["elliptic:A3+A3+A1"] == [4]
    assert got["elliptic:A7"] == [4]
    quotients = {k.split(":")[1]: v for k, v in got.items() if k.endswith(":quotient")}
    assert quotients == {"A3+A2+A1+T1": 12, "A4+A2+T1": 15, "A5+A1+T1": 6, "A6+T1": 7}
    for label in quotients:
        assert got[f"levi:{label}:elliptic-are-central"] == [1]


@pytest.mark.criterion(5, "every rho_X is symplectic; FS formula checked on A1 std and B3 spin")
def test_symplectic_type():
    a1, b3 = build_datum("A1"), build_datum("B3")
    assert fs_indicator(a1, _weight(a1, (1,))) == O.form_sign(O.sl2_std()) == -1
    assert fs_indicator(b3, _weight(b3, (0, 0, 1))) == O.form_sign(O.so7_spin()) == 1
    for model in builtin_models():
        assert symplectic_type(model.character()), model.name
        claims = {it.claim_id: it.status for it in verify_model_level(model).items}
        assert claims[f"{model.name}:symplectic"] == "pass"


@pytest.mark.criterion(6, "transfer-sign cancellation over all shapes, both eta(-1), six matches")
def test_cancellation():
    generic = parse_stable("GU4xGU2: E,E | E,E")
    assert len(stable_matches(generic)) == 6
    nonzero = []
    for shape in gu_shapes():
        for eta in (1, -1):
            for identity, (left, right) in IDENTITIES.items():
                if verify_cancellation(shape, eta, identity):
                    nonzero.append((str(shape), eta, identity))
                for desc, m in stable_matches(shape):
                    raw = O.raw_cancellation(shape, eta, m, {left}, {right}, side_of,
                                             kottwitz_sign, transfer_sign)
                    if raw:
                        nonzero.append((str(shape), eta, identity, desc, raw))
    assert nonzero == []


RANK_LE_3 = ["A1", "A2", "A3", "B2", "B3", "C3", "G2"]


def _weights_up_to(d, bound):
    r = d.semisimple_rank
    seen, frontier = {(0,) * r}, [(0,) * r]
    while frontier:
        nxt = []
        for lab in frontier:
            for i in range(r):
                new = lab[:i] + (lab[i] + 1,) + lab[i + 1:]
                if new not in seen and dim_weyl(d, _weight(d, new)) <= bound:
                    seen.add(new)
                    nxt.append(new)
        frontier = nxt
    return sorted(seen)


@pytest.mark.criterion(7, "oracles: Weyl character formula, brute-force torsion, reconstruction")
def test_oracle_equivalences():
    mismatches = []
    for desc in RANK_LE_3:
        d = build_datum(desc)
        for lab in _weights_up_to(d, 200):
            lam = _weight(d, lab)
            if dict(irrep_character(d, lam).items()) != O.weyl_character(
                    d.simple_roots, d.simple_coroots, d.rank, lam):
                mismatches.append(("character", desc, lab))
    for desc in ["A1", "A1:ad", "A2", "A2:ad", "B2", "B2:ad", "G2"]:
        d = build_datum(desc)
        cw = fundamental_coweights(d)
        for m in range(1, 7):
            if len(enumerate_torsion(d, m)) != len(
                    O.torsion_orbits(d.simple_roots, d.simple_coroots, d.rank, cw, m, 4)):
                mismatches.append(("torsion", desc, m))
            if len(enumerate_torsion(d, m, "group")) != len(
                    O.torsion_orbits(d.simple_roots, d.simple_coroots, d.rank,
                                     O.unit_vectors(d.rank), m)):
                mismatches.append(("torsion-group", desc, m))
    for model in builtin_models():
        for case in model.endoscopic_cases:
            an = analyse_case(model, case)
            total = FormalCharacter(an.centralizer)
            for units in an.assignment.values():
                for u in units:
                    total = total + irrep_character(an.centralizer, u.hw)
            if total != an.restriction:
                mismatches.append(("reconstruction", model.name, case.name))
    assert mismatches == []


@pytest.mark.criterion(8, "two verify-all --format json runs are byte-identical")
def test_determinism():
    cmd = [sys.executable, "-m", "liecheck.cli", "verify-all", "--format", "json"]
    first = subprocess.run(cmd, capture_output=True, check=False)
    second = subprocess.run(cmd, capture_output=True, check=False)
    assert first.returncode == 0, first.stderr.decode()
    assert first.stdout == second.stdout
    assert len(first.stdout) > 0
