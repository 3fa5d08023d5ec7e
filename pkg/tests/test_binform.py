from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, strategies as st

from wronskian_combinants.binform import (BinaryForm, Mat2, add, from_binomial,
                                          multiply, partial_derivative, polarize,
                                          sl2_substitute, to_binomial)

from conftest import forms, from_sympy, to_sympy, x1, x2, y1, y2

X1 = BinaryForm([1, 0])
X2 = BinaryForm([0, 1])


def test_add_examples():
    assert add(BinaryForm([1, 0, 0]), BinaryForm([0, 0, 1])) == BinaryForm([1, 0, 1])
    f = BinaryForm([3, -1, 2])
    assert f + BinaryForm.zero(2) == f
    assert BinaryForm([1, 2, 1]) + BinaryForm([0, -2, 0]) == BinaryForm([1, 0, 1])


def test_add_order_mismatch():
    with pytest.raises(ValueError):
        add(BinaryForm([1, 0]), BinaryForm([1, 0, 0]))


def test_multiply_examples():
    assert multiply(X1, X2) == BinaryForm([0, 1, 0])
    f = BinaryForm([2, -3, 0, 7])
    assert multiply(f, BinaryForm.one()) == f
    assert multiply(BinaryForm([1, 1]), BinaryForm([1, -1])) == BinaryForm([1, 0, -1])


def test_zero_form_keeps_its_order():
    assert BinaryForm.zero(5) != BinaryForm.zero(0)
    assert BinaryForm.zero(5).order == 5
    with pytest.raises(ValueError):
        BinaryForm([1, 2], order=3)


def test_partial_derivative_examples():
    assert partial_derivative(BinaryForm([1, 0, 0, 0]), 1, 0) == BinaryForm([3, 0, 0])
    # d^2/dx1 dx2 of x1^2 x2^2 = 4 x1 x2, by hand
    assert partial_derivative(BinaryForm([0, 0, 1, 0, 0]), 1, 1) == BinaryForm([0, 4, 0])
    assert partial_derivative(BinaryForm([1, 2, 3]), 2, 1) == BinaryForm.zero(0)


@given(forms(0, 7), st.integers(0, 4), st.integers(0, 4))
def test_partial_derivative_matches_sympy(f, k1, k2):
    got = partial_derivative(f, k1, k2)
    if k1 + k2 > f.order:
        assert got == BinaryForm.zero(0)
    else:
        expr = sp.diff(to_sympy(f), x1, k1, x2, k2) if k1 or k2 else to_sympy(f)
        assert got == from_sympy(expr, f.order - k1 - k2)


@given(forms(2, 7))
def test_derivatives_commute(f):
    a = partial_derivative(partial_derivative(f, 1, 0), 0, 1)
    b = partial_derivative(partial_derivative(f, 0, 1), 1, 0)
    assert a == b


def test_sl2_substitute_examples():
    f = BinaryForm([3, -2, 5, 1])
    assert sl2_substitute(f, Mat2(1, 0, 0, 1)) == f
    assert sl2_substitute(BinaryForm([1, 0, 0, 0, 0]), Mat2(0, 1, -1, 0)) == BinaryForm([0, 0, 0, 0, 1])
    # x1 -> x1 + x2: x1^2 -> (x1 + x2)^2, x2^2 unchanged
    shear = Mat2(1, 1, 0, 1)
    assert sl2_substitute(BinaryForm([1, 0, 0]), shear) == BinaryForm([1, 2, 1])
    assert sl2_substitute(BinaryForm([0, 0, 1]), shear) == BinaryForm([0, 0, 1])


@given(forms(0, 6), st.lists(st.integers(-4, 4), min_size=8, max_size=8))
def test_substitution_composition(f, e):
    try:
        g, h = Mat2(*e[:4]), Mat2(*e[4:])
    except ValueError:
        return
    assert sl2_substitute(sl2_substitute(f, g), h) == sl2_substitute(f, g @ h)


@given(forms(0, 5), st.lists(st.integers(-4, 4), min_size=4, max_size=4))
def test_substitution_matches_sympy(f, e):
    try:
        g = Mat2(*e)
    except ValueError:
        return
    expr = to_sympy(f).subs({x1: e[0] * y1 + e[1] * y2, x2: e[2] * y1 + e[3] * y2},
                            simultaneous=True).subs({y1: x1, y2: x2}, simultaneous=True)
    assert sl2_substitute(f, g) == from_sympy(expr, f.order)


def test_mat2_det_flags():
    assert Mat2(2, 1, 1, 1).unimodular
    assert not Mat2(2, 0, 0, 1).unimodular
    with pytest.raises(ValueError):
        Mat2(1, 2, 2, 4)


@given(forms(0, 5), forms(0, 5), forms(0, 5))
def test_ring_laws(f, g, h):
    assert multiply(f, g) == multiply(g, f)
    assert multiply(multiply(f, g), h) == multiply(f, multiply(g, h))
    h2 = BinaryForm(list(reversed(h.coeffs)), h.order)
    assert multiply(f, h + h2) == multiply(f, h) + multiply(f, h2)


def test_polarize_examples():
    f = BinaryForm([2, -1, 3])
    p0 = polarize(f, 0)
    assert (p0.xorder, p0.yorder) == (2, 0) and p0.restitute() == f
    full = polarize(f, 2)
    assert full.xorder == 0 and [row for row in full.coeffs] == [tuple(f.coeffs)]
    # polarize(x1^2, 1) = (1/2) y1 * 2 x1 = x1 y1
    p = polarize(BinaryForm([1, 0, 0]), 1)
    assert p.coeffs == ((1, 0), (0, 0))
    with pytest.raises(ValueError):
        polarize(f, 3)


@given(forms(0, 6), st.data())
def test_polarize_matches_sympy_and_restitutes(f, data):
    n = f.order
    k = data.draw(st.integers(0, n))
    P = polarize(f, k)
    assert P.restitute() == f
    expr = to_sympy(f)
    for _ in range(k):
        expr = y1 * sp.diff(expr, x1) + y2 * sp.diff(expr, x2)
    expr = sp.expand(expr * sp.Rational(sp.factorial(n - k), sp.factorial(n)))
    got = sum(sp.Rational(c.numerator, c.denominator) * x1 ** (n - k - i) * x2 ** i
              * y1 ** (k - j) * y2 ** j
              for i, row in enumerate(P.coeffs) for j, c in enumerate(row))
    assert sp.expand(got - expr) == 0


def test_binomial_conversions():
    assert to_binomial(BinaryForm([1, 2, 1])) == [1, 1, 1]
    assert to_binomial(BinaryForm.zero(3)) == [0, 0, 0, 0]
    assert from_binomial([1, 1, 1]) == BinaryForm([1, 2, 1])


@given(forms(0, 8))
def test_binomial_round_trip(f):
    assert from_binomial(to_binomial(f)) == f


def test_str_and_call():
    f = BinaryForm([Fraction(1), Fraction(0), Fraction(-1, 2), Fraction(3)])
    assert str(f) == "x1^3 - 1/2*x1*x2^2 + 3*x2^3"
    assert f(2, 1) == 8 - 1 + 3
    assert str(BinaryForm.zero(3)) == "0"


def test_immutable():
    f = BinaryForm([1, 2])
    with pytest.raises(AttributeError):
        f.order = 3
