"""Laurent polynomial arithmetic: examples, canonical form, ring axioms."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clusterkit.errors import NotDivisible, ZeroAtPole
from clusterkit.laurent import Context, default_context

CTX = default_context(4)
X1, X2, X3, X4 = CTX.gens()
ONE = CTX.one()


def P(text):
    return CTX.parse(text)


# -- multiplication ----------------------------------------------------------

def test_mul_inverse_pair():
    assert X1 * P("x1^-1") == ONE


def test_mul_distributes_over_monomial():
    assert (ONE + X2) * P("x1^-1") == P("x1^-1 + x1^-1*x2")


def test_mul_binomial_square():
    assert (X1 + X2) ** 2 == P("x1^2 + 2*x1*x2 + x2^2")


# -- exact division ----------------------------------------------------------

def test_div_monomial_factor():
    assert (X1 * X2 + X2).exact_div(X2) == X1 + 1


def test_div_laurent_shift():
    assert (ONE + X1 + X2).exact_div(X1) == P("1 + x1^-1 + x1^-1*x2")


def test_div_non_factor_rejected():
    with pytest.raises(NotDivisible):
        (X1 + X2).exact_div(ONE + X1)


def test_div_by_zero_rejected():
    with pytest.raises(ZeroDivisionError):
        X1.exact_div(CTX.zero())


def test_div_can_leave_the_polynomial_ring():
    # x*(1+y) divided by x^2 exists in the Laurent ring only.
    num = X1 * (ONE + X2)
    assert num.exact_div(X1 * X1) == P("x1^-1 + x1^-1*x2")


# -- evaluation ---------------------------------------------------------------

def test_eval_direct_substitution():
    p = P("x1^-1 + x1^-1*x2")
    assert p.evaluate({0: 2, 1: 3}) == 2


def test_eval_product():
    assert (X1 * X2).evaluate({0: 5, 1: 7}) == 35


def test_eval_pole():
    with pytest.raises(ZeroAtPole):
        P("x1^-1").evaluate({0: 0})


def test_eval_zero_with_positive_exponent_is_fine():
    assert (X1 + X2).evaluate({0: 0, 1: 4}) == 4


def test_eval_missing_assignment():
    with pytest.raises(ValueError):
        (X1 * X2).evaluate({0: 1})


# -- positivity ---------------------------------------------------------------

def test_positive_laurent_variable():
    assert P("x1^-1 + x1^-1*x2").is_positive()


def test_mixed_signs_not_positive():
    assert not (X1 - X2).is_positive()


def test_zero_not_positive():
    assert not CTX.zero().is_positive()


# -- canonical form and text round trip ----------------------------------------

def test_construction_order_is_canonical():
    a = (X1 + X2) + X3
    b = X3 + (X2 + X1)
    assert a.terms == b.terms
    assert str(a) == str(b)
    assert hash(a) == hash(b)


def test_text_round_trip():
    for text in ["0", "1", "-1", "x1", "-x1", "x1^-1 + x1^-1*x2",
                 "2*x1^3*x2^-2 + -5 + x4"]:
        assert str(P(text)) == str(CTX.parse(str(P(text))))
        assert CTX.parse(str(P(text))) == P(text)


def test_context_rejects_bad_names():
    with pytest.raises(ValueError):
        Context(["x1", "x1"])
    with pytest.raises(ValueError):
        Context(["a b"])
    with pytest.raises(ValueError):
        Context(["12"])


def test_cross_context_operations_rejected():
    other = default_context(2)
    with pytest.raises(ValueError):
        X1 + other.gen(0)


# -- specialization -------------------------------------------------------------

def test_specialize_ones():
    p = P("x1^-2*x2 + x1*x3 + 7")
    assert p.specialize_ones([0]) == P("x2 + x3 + 7")
    assert p.specialize_ones([0, 1, 2]) == CTX.const(9)


# -- property tests --------------------------------------------------------------

def monomials():
    return st.dictionaries(st.integers(0, 3),
                           st.integers(-3, 3).filter(bool),
                           max_size=3).map(lambda d: tuple(sorted(d.items())))


def polys():
    return st.dictionaries(monomials(), st.integers(-9, 9), max_size=4).map(CTX.poly)


@settings(max_examples=150, deadline=None)
@given(polys(), polys(), polys())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=150, deadline=None)
@given(polys(), polys())
def test_division_round_trip(a, b):
    if b.is_zero():
        return
    assert (a * b).exact_div(b) == a


@settings(max_examples=150, deadline=None)
@given(polys())
def test_text_round_trip_property(p):
    assert CTX.parse(str(p)) == p


@settings(max_examples=150, deadline=None)
@given(polys(), polys())
def test_eval_is_a_homomorphism(a, b):
    assignment = {v: Fraction(3, 2) + v for v in range(4)}
    assert (a * b).evaluate(assignment) == a.evaluate(assignment) * b.evaluate(assignment)
    assert (a + b).evaluate(assignment) == a.evaluate(assignment) + b.evaluate(assignment)
