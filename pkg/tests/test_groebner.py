"""Tests for Buchberger's algorithm and radical membership."""

from fractions import Fraction

from pentacheck.groebner import (
    Ideal,
    buchberger,
    normal_form,
    radical_membership,
    same_radical,
)
from pentacheck.multipoly import parse_poly

XYZ = ("x", "y", "z")


def P(text, variables=XYZ):
    return parse_poly(text, variables)


def test_groebner_basis_of_principal_ideal():
    gb = buchberger([P("2*x^2 - 2*y^2")])
    assert len(gb) == 1 and gb[0] == P("x^2 - y^2")


def test_groebner_deterministic_under_permutation():
    gens = [P("x^2 + y"), P("x*y - 1"), P("y^3 + x")]
    assert buchberger(gens) == buchberger(list(reversed(gens)))


def test_ideal_membership():
    ideal = Ideal([P("x^2 + y"), P("x*y - 1")])
    combo = P("x^2 + y") * P("y^2") + P("x*y - 1") * P("x - 3")
    assert ideal.contains(combo)
    assert not ideal.contains(P("x"))


def test_normal_form_is_zero_exactly_on_members():
    basis = buchberger([P("x - y"), P("y^2 - 1")])
    assert normal_form(P("x^2 - 1"), basis).is_zero()
    assert not normal_form(P("x + 1"), basis).is_zero()


def test_unit_ideal_detection():
    assert Ideal([P("x"), P("x + 1")]).is_unit_ideal()
    assert not Ideal([P("x"), P("y")]).is_unit_ideal()


def test_radical_membership_positive():
    # x vanishes on V(x^2)
    ok, cert = radical_membership(P("x"), Ideal([P("x^2")]))
    assert ok
    assert len(cert) == 1 and cert[0].is_constant()


def test_radical_membership_negative():
    ok, _ = radical_membership(P("y"), Ideal([P("x^2")]))
    assert not ok


def test_same_radical_cusp_jacobian():
    f = P("z^2*x - z*y^2 + z*x^3")
    jac = Ideal([f, f.derivative("x"), f.derivative("y"), f.derivative("z")])
    cusp = Ideal([P("z"), P("y^2 - x^3")])
    assert same_radical(jac, cusp)
    assert not same_radical(jac, Ideal([P("z"), P("y")]))


def test_empty_variety_equals_unit_ideal():
    smooth = Ideal([P("1")])
    partials = Ideal([P("1"), P("z")])
    assert same_radical(partials, smooth)
