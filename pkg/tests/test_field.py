"""Tests for the quartic field Q(alpha), alpha = sqrt(10 + 2*sqrt(5))."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pentacheck.field import (
    AlgebraicNumber,
    eval_poly,
    galois_group,
    galois_orbit,
    minimal_polynomial,
    real_value,
    solve_linear,
    to_float,
)

A = AlgebraicNumber

small_fracs = st.fractions(
    min_value=-10, max_value=10, max_denominator=12
)
numbers = st.builds(
    lambda a, b, c, d: A(a, b, c, d),
    small_fracs, small_fracs, small_fracs, small_fracs,
)


def test_alpha_satisfies_minimal_polynomial():
    a = A.alpha()
    assert a**4 - a**2 * 20 + 80 == A.from_rational(0)


def test_minimal_polynomial_of_alpha():
    mp = minimal_polynomial(A.alpha())
    assert mp == [Fraction(80), Fraction(0), Fraction(-20), Fraction(0), Fraction(1)]


def test_sqrt5_squares_to_five():
    s = A.sqrt5()
    assert s * s == A.from_rational(5)
    assert s == (A.alpha() ** 2 - 10) / 2


def test_rationality_detection():
    assert A.from_rational(Fraction(3, 7)).is_rational
    assert A.from_rational(Fraction(3, 7)).rational_value() == Fraction(3, 7)
    assert not A.alpha().is_rational
    assert A.sqrt5().is_rational is False


def test_galois_group_order_four_and_closed():
    G = galois_group()
    assert len(G) == 4
    images = {tuple(g.image_of_alpha.coords) for g in G}
    assert len(images) == 4
    mp = minimal_polynomial(A.alpha())
    for g in G:
        assert not eval_poly(mp, g.image_of_alpha)
        for h in G:
            comp = g.apply(h.image_of_alpha)
            assert tuple(comp.coords) in images


def test_galois_orbit_of_alpha_has_four_elements():
    assert len({tuple(x.coords) for x in galois_orbit(A.alpha())}) == 4


def test_identity_element_present():
    names = {g.name for g in galois_group()}
    assert names == {"sigma0", "sigma1", "sigma2", "sigma3"}
    sigma0 = galois_group()[0]
    assert sigma0.apply(A.alpha()) == A.alpha()


@settings(max_examples=60, deadline=None)
@given(numbers, numbers)
def test_field_homomorphism_property(a, b):
    for g in galois_group():
        assert g.apply(a * b) == g.apply(a) * g.apply(b)
        assert g.apply(a + b) == g.apply(a) + g.apply(b)


@settings(max_examples=60, deadline=None)
@given(numbers)
def test_inverse_multiplies_to_one(a):
    if not a:
        with pytest.raises(ZeroDivisionError):
            a.inverse()
    else:
        assert a * a.inverse() == A.from_rational(1)


def test_galois_fixes_exactly_the_rationals():
    a = A.alpha()
    fixed = [g for g in galois_group() if g.apply(a) == a]
    assert len(fixed) == 1  # only the identity moves nothing


def test_solve_linear_two_by_two():
    a = A.alpha()
    rows = [[a, A.from_rational(1)], [A.from_rational(1), a]]
    rhs = [a * a + 1, a + a]
    x = solve_linear(rows, rhs)
    assert rows[0][0] * x[0] + rows[0][1] * x[1] == rhs[0]
    assert rows[1][0] * x[0] + rows[1][1] * x[1] == rhs[1]


def test_real_value_brackets_alpha():
    iv = real_value(A.alpha(), 12)
    assert iv.width <= Fraction(1, 10**12)
    assert abs(to_float(A.alpha()) - 3.8042260651806146) < 1e-9


def test_json_round_trip():
    a = A(Fraction(1, 2), -3, Fraction(5, 7), 0)
    assert A.from_json(a.to_json()) == a
