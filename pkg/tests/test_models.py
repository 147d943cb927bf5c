import copy
import json
from dataclasses import replace

import pytest
from hypothesis import given, strategies as st

from liecheck.models import (BUILTIN_CONFIG, TABLE_ORDER, FormalSymbolError, SignExpr,
                             builtin_models, get_model, load_models, model_from_config,
                             verify_case, verify_elliptic_lifts, verify_model,
                             verify_weyl_constants)

MODELS = builtin_models()


@pytest.mark.parametrize("model", MODELS, ids=lambda m: m.name)
def test_every_model_verifies(model):
    r = verify_model(model)
    assert r.ok, [(f.claim_id, f.computed, f.expected) for f in r.failures()]


def test_registry_shape():
    assert [m.name for m in MODELS if not m.auxiliary] == list(TABLE_ORDER)
    assert len(MODELS) == 14
    with pytest.raises(KeyError):
        get_model("nope")


def test_elliptic_lifts_and_weyl_constants():
    assert verify_elliptic_lifts().ok
    assert verify_weyl_constants().ok


# -- negative controls: a wrong expectation must be caught ------------------

def _first_case(name):
    m = get_model(name)
    return m, m.endoscopic_cases[-1]


def _fails(model, case, **changes):
    return not verify_case(model, replace(case, **changes)).ok


def test_wrong_centralizer_is_caught():
    m, c = _first_case("E7")
    assert _fails(m, c, expected_centralizer="E6+T1")


def test_wrong_piece_flags_are_caught():
    m, c = _first_case("GSp10")
    p = c.expected_pieces[0]
    for change in ({"symplectic": not p.symplectic}, {"self_dual": not p.self_dual},
                   {"eigen": "+1" if p.eigen != "+1" else "-1"}):
        pieces = [replace(p, **change)] + c.expected_pieces[1:]
        assert _fails(m, c, expected_pieces=pieces), change


def test_wrong_labels_are_caught():
    m, c = _first_case("GL6")
    p = c.expected_pieces[0]
    first = p.labels[0][0]
    bad = ((((first[0] + 1,) + first[1:]),) + p.labels[0][1:],) + p.labels[1:]
    pieces = [replace(p, labels=bad)] + c.expected_pieces[1:]
    assert _fails(m, c, expected_pieces=pieces)


def test_wrong_omega_rule_is_caught():
    m, c = _first_case("GSO12")
    assert _fails(m, c, omega_rule=c.omega_rule * SignExpr(frozenset(), -1))


def test_wrong_order_is_caught():
    m, c = _first_case("GSp6xGL2")
    assert _fails(m, c, order=(c.order or 1) + 1)


def test_wrong_total_dim_is_caught():
    m = get_model("GL4xGL2")
    assert not verify_model(replace(m, total_dim=21)).ok


# -- configuration files ------------------------------------------------------

def test_config_round_trip(tmp_path):
    path = tmp_path / "models.json"
    path.write_text(json.dumps({"models": BUILTIN_CONFIG[:2]}))
    loaded = load_models(path)
    assert [m.name for m in loaded] == [c["name"] for c in BUILTIN_CONFIG[:2]]
    assert all(verify_model(m).ok for m in loaded)


def test_config_rejects_inconsistent_dims():
    cfg = copy.deepcopy(BUILTIN_CONFIG[0])
    cfg["cases"][0]["pieces"][0]["dim"] += 1
    with pytest.raises(ValueError):
        model_from_config(cfg)


def test_config_rejects_non_dominant():
    cfg = copy.deepcopy(BUILTIN_CONFIG[0])
    cfg["rho_x"][0] = [0, 0, 1, 1, 0, 1]
    with pytest.raises(ValueError):
        model_from_config(cfg)


def test_config_rejects_bad_eigen_class():
    cfg = copy.deepcopy(BUILTIN_CONFIG[0])
    cfg["cases"][0]["pieces"][0]["eigen"] = "i"
    with pytest.raises(ValueError):
        model_from_config(cfg)


# -- sign expressions ---------------------------------------------------------

names = st.lists(st.sampled_from(["eps(a)", "eps(b)", "eta(-1)", "c"]), max_size=6)
signs = st.sampled_from([1, -1])


@given(names, signs)
def test_sign_squares_to_one(syms, s):
    e = SignExpr(frozenset(), s)
    for n in syms:
        e = e * SignExpr.symbol(n)
    assert (e * e) == SignExpr()


@given(names, names, signs)
def test_sign_parse_round_trip(a, b, s):
    e = SignExpr(frozenset(a), s) * SignExpr(frozenset(b))
    assert SignExpr.parse(str(e)) == e


def test_free_symbols_do_not_evaluate():
    with pytest.raises(FormalSymbolError):
        SignExpr.parse("eps(rho)").value()
    assert SignExpr.parse("-1*x*x").value() == -1
