import json
from fractions import Fraction

import pytest

import cyclotome as cy


def test_quiver_basics():
    q = cy.Quiver.load("A3", "linear")
    assert q.rank == 3
    assert q.coxeter_number == 4
    assert q.arrows == [(2, 1), (3, 2)]
    assert len(q.positive_roots()) == 6
    assert len(cy.all_orientations("D4")) == 8


def test_index_sets():
    ci = cy.CycIndex.of("A2")
    assert ci.h == 3
    assert len(ci.sigma_hat()) == 6
    assert ci.name(1, 1) == "S1"


def test_generators_A2():
    ci = cy.CycIndex.of("A2")
    assert ci.format(cy.v_f(ci, 0)) == ci.format(cy.parse_v(ci, "S1,P2"))
    for i in range(2):
        w = cy.w_f(ci, i)
        assert cy.residual(ci, _pair(cy.v_f(ci, i), w)).is_zero()
        assert cy.residual(ci, _pair(cy.v_sigma_f(ci, i), w)).is_zero()


def _pair(v, w):
    p = cy.Pair()
    p.v = v
    p.w = w
    return p


def test_lift_P2():
    ci = cy.CycIndex.of("A2")
    p = cy.lift(ci, cy.parse_w(ci, "sigma(P2)"))
    assert ci.format(p) == "(e[S1], e[sigma(S1)] + e[sigma(S2)])"
    assert p == cy.iota(ci, "P2")


def test_enumerate_matches_kostant():
    ci = cy.CycIndex.of("A3", "alternating")
    w = cy.parse_w(ci, "sigma(S1)=2,sigma(S2)=1,sigma(S3)=1")
    vs = cy.enumerate_l_dominant(ci, w)
    assert len(vs) == cy.kostant_partitions(ci.quiver, [2, 1, 1])
    assert vs == cy.enumerate_l_dominant_bruteforce(ci, w)


def test_forms_are_exact():
    ci = cy.CycIndex.of("A2")
    e1 = _pair(cy.parse_v(ci, "0"), cy.parse_w(ci, "sigma(S1)"))
    k1 = _pair(cy.v_sigma_f(ci, 0), cy.w_f(ci, 0))
    assert cy.leading_exponent(ci, e1, k1) - cy.leading_exponent(ci, k1, e1) == Fraction(-2)
    assert isinstance(cy.twist_exponent(ci, e1.w, k1.w), Fraction)


def test_verify_all_A2():
    ci = cy.CycIndex.of("A2")
    reports = cy.verify(ci, "all")
    assert reports and all(r["pass"] for r in reports)
    doc = json.loads(cy.verify_json(ci, "ek"))
    assert doc["schema"] == 1 and doc["pass"]


def test_serre_dims():
    dims = cy.serre_quotient_dims(cy.Quiver.load("A2"), 3)
    assert dims[(1, 1)] == 2
    assert dims[(2, 1)] == 2


def test_errors():
    with pytest.raises(cy.Error):
        cy.Quiver.load("F4")
    ci = cy.CycIndex.of("A2")
    with pytest.raises(cy.Error):
        cy.parse_w(ci, "S1")
