import pytest
from hypothesis import given, strategies as st

from ratmaps.ring import (GREVLEX, NotHomogeneous, ParseError, Poly, Ring, RingError, TermOrder,
                          ZeroPolynomial, compare_monomials, format_polynomial, multi_degree)


def test_parse_two_terms(plane):
    f = plane("x0^2 - 2*x1*x2")
    assert f.terms == {(2, 0, 0): 1, (0, 1, 1): -2}


def test_parse_cancellation(plane):
    assert plane("x0 - x0").terms == {}


def test_parse_reduces_mod_p():
    R = Ring([["x0", "x1"]], 3)
    assert R("3*x0").is_zero()
    assert R("-1*x1").terms == {(0, 1): 2}


@pytest.mark.parametrize("text", ["x0^-1", "x0 x1", "y7", "x0 +", "(x0", "x0^", "2x0"])
def test_parse_errors(plane, text):
    with pytest.raises(ParseError):
        plane(text)


def test_parse_parentheses_and_powers(plane):
    assert plane("(x0 + x1)^2") == plane("x0^2 + 2*x0*x1 + x1^2")
    assert plane("-(x0 - x2)*x1") == plane("x1*x2 - x0*x1")


def test_print_round_trip(plane):
    for s in ["x0^2 - 2*x1*x2", "3*x0*x1*x2 - x2^3 + 7", "-x1"]:
        f = plane(s)
        assert plane(str(f)) == f
    assert format_polynomial(plane("x2^2 + x0*x2 + x1^2")) == "x1^2 + x0*x2 + x2^2"


def test_multi_degree(p1p1, plane):
    assert multi_degree(p1p1("x10*x20")) == (1, 1)
    assert multi_degree(plane("x0^4")) == (4,)
    with pytest.raises(NotHomogeneous):
        multi_degree(plane("x0 + x1^2"))
    with pytest.raises(ZeroPolynomial):
        multi_degree(plane.zero)


def test_arithmetic(plane):
    a, b = plane("x0 + x1"), plane("x0 - x1")
    assert a * b == plane("x0^2 - x1^2")
    assert a + plane.zero == a
    G = Ring([["x0", "x1"]], 2)
    assert G("x0 + x1") ** 2 == G("x0^2 + x1^2")


def test_ring_mismatch(plane):
    other = Ring([["x0", "x1", "x2"]], 5)
    with pytest.raises(RingError):
        plane("x0") + other("x0")


def test_ring_invariants():
    with pytest.raises(RingError):
        Ring([["x0", "x1"], ["x1", "x2"]])
    with pytest.raises(RingError):
        Ring([["x0", "x1"]], 4)
    with pytest.raises(RingError):
        Ring([["a0", "a1"], ["b0", "b1"]], 0, [["a0*b0"], []])


def test_grevlex_example():
    assert compare_monomials((0, 2, 0), (1, 0, 1)) > 0


def test_lex_example():
    assert compare_monomials((1, 0), (0, 100), TermOrder.lex()) > 0


def test_elimination_example():
    # t first, then x0
    assert compare_monomials((1, 0), (0, 5), TermOrder.elimination(1)) > 0


def test_compare_length_mismatch():
    with pytest.raises(ValueError):
        compare_monomials((1, 0), (1, 0, 0))


# ------------------------------------------------------------ properties

R3 = Ring([["x0", "x1", "x2"]])
Q3 = Ring([["x0", "x1", "x2"]], 101)

exps = st.tuples(*[st.integers(0, 3)] * 3)
coef = st.integers(-20, 20)


@st.composite
def polys(draw, ring=R3, max_terms=5):
    terms = draw(st.dictionaries(exps, coef, max_size=max_terms))
    return Poly.from_dict(ring, terms)


@st.composite
def forms(draw, ring=R3):
    deg = draw(st.integers(0, 3))
    mons = ring.monomials_of_degree((deg,))
    cs = draw(st.lists(st.integers(-9, 9), min_size=len(mons), max_size=len(mons)))
    f = Poly.from_dict(ring, dict(zip(mons, cs)))
    return f if f.terms else ring.monomial(mons[0])


@given(polys(), polys(), polys())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == R3.zero


@given(polys(Q3), polys(Q3))
def test_ring_axioms_mod_p(a, b):
    assert a * b == b * a
    assert (a + b) * (a - b) == a * a - b * b
    assert all(0 <= int(c) < 101 for c in (a * b).terms.values())


@given(forms(), forms())
def test_multi_degree_additive(a, b):
    assert multi_degree(a * b) == tuple(x + y for x, y in zip(multi_degree(a), multi_degree(b)))


ORDERS = [GREVLEX, TermOrder.lex(), TermOrder.elimination(1), TermOrder.elimination(2),
          TermOrder.weighted((3, 1, 2)), TermOrder.grevlex(perm=(2, 0, 1))]


@pytest.mark.parametrize("order", ORDERS, ids=repr)
@given(u=exps, v=exps, w=exps)
def test_orders_monotone(order, u, v, w):
    one = (0, 0, 0)
    if u != one:
        assert compare_monomials(u, one, order) > 0
    c = compare_monomials(u, v, order)
    uw = tuple(a + b for a, b in zip(u, w))
    vw = tuple(a + b for a, b in zip(v, w))
    assert compare_monomials(uw, vw, order) == c
    assert (c == 0) == (u == v)


@given(u=exps, v=exps)
def test_elimination_property(u, v):
    order = TermOrder.elimination(1)
    if u[0] > 0 and v[0] == 0:
        assert compare_monomials(u, v, order) > 0
