from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from singlab import ParseError
from singlab.polycore import (
    Polynomial,
    RingContext,
    evaluate,
    gradient,
    homogenize,
    parse_polynomial,
    weighted_decompose,
)

XYZ = RingContext(("x", "y", "z"))


def P(text, ring=XYZ):
    return parse_polynomial(text, ring)


def mono(ring, exps, c=1):
    return Polynomial(ring, {tuple(exps): c})


# -- parsing -----------------------------------------------------------------


def test_parse_example_polynomial():
    f = P("x + x^2*y + z^2")
    assert f.terms == {(1, 0, 0): 1, (2, 1, 0): 1, (0, 0, 2): 1}


def test_parse_zero():
    assert P("0").terms == {}
    assert P("0").is_zero()


def test_parse_expands_to_constant():
    # 2(x+1)^2 = 2x^2 + 4x + 2, by hand
    assert P("2*(x+1)^2 - 2*x^2 - 4*x") == XYZ.constant(2)


@pytest.mark.parametrize("text, expected", [
    ("3/4*x", {(1, 0, 0): Fraction(3, 4)}),
    ("-x^2", {(2, 0, 0): -1}),
    ("  x  *  y ", {(1, 1, 0): 1}),
    ("(x - y)*(x + y)", {(2, 0, 0): 1, (0, 2, 0): -1}),
    ("x^0", {(0, 0, 0): 1}),
    ("-(-z)", {(0, 0, 1): 1}),
    ("1/2 + 1/2", {(0, 0, 0): 1}),
])
def test_parse_various(text, expected):
    assert P(text).terms == expected


@pytest.mark.parametrize("text, pos", [
    ("x + ", 4),
    ("x + w", 4),
    ("x ^ y", 4),
    ("x $ y", 2),
    ("(x + y", 6),
    ("x y", 2),
    ("1/0", 2),
    ("", 0),
])
def test_parse_errors_report_position(text, pos):
    with pytest.raises(ParseError) as info:
        P(text)
    assert info.value.position == pos


def test_unknown_variable_is_named():
    with pytest.raises(ParseError, match="unknown variable 'w'"):
        P("x*w")


def test_ring_validation():
    with pytest.raises(ValueError):
        RingContext(("x", "x"))
    with pytest.raises(ValueError):
        RingContext(("x", "y"), (1,))
    with pytest.raises(ValueError):
        RingContext(("x",), (0,))
    with pytest.raises(ValueError):
        RingContext(("",))


def test_printing_is_grevlex():
    assert str(P("z^2 + x + x^2*y")) == "x^2*y + z^2 + x"
    assert str(P("-3/2*x*y + y - 1")) == "-3/2*x*y + y - 1"
    assert str(P("0")) == "0"


# -- random polynomials ----------------------------------------------------------

coeff = st.fractions(min_value=-5, max_value=5, max_denominator=4)
exps = st.tuples(*(st.integers(0, 3),) * 3)
polys = st.dictionaries(exps, coeff, max_size=5).map(lambda t: Polynomial(XYZ, t))


@settings(max_examples=200, deadline=None)
@given(polys, polys, polys)
def test_ring_laws(f, g, h):
    assert (f + g) * h == f * h + g * h
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f - f == XYZ.zero()


@settings(max_examples=200, deadline=None)
@given(polys)
def test_print_parse_roundtrip(f):
    text = str(f)
    assert P(text) == f
    assert str(P(text)) == text


@settings(max_examples=200, deadline=None)
@given(polys.filter(lambda f: not f.is_zero()))
def test_decomposition_parts_sum_and_are_homogeneous(f):
    dec = weighted_decompose(f)
    total = XYZ.zero()
    for deg, part in dec.parts.items():
        assert part.is_weighted_homogeneous()
        assert part.weighted_degree() == deg
        total = total + part
    assert total == f
    assert dec.d == max(dec.parts)
    if dec.k is not None:
        assert dec.parts[dec.d - dec.k]
        assert not any(dec.d - dec.k < deg < dec.d for deg in dec.parts)


@settings(max_examples=200, deadline=None)
@given(polys.filter(lambda f: not f.is_zero()))
def test_homogenize_then_dehomogenize(f):
    F = homogenize(f, "w")
    assert F.is_weighted_homogeneous()
    assert F.weighted_degree() == f.weighted_degree()
    assert F.specialize("w", 1) == f


W = RingContext(("a", "b", "c"), (2, 3, 1))


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 9), st.lists(coeff, min_size=1, max_size=4))
def test_weighted_euler_relation(d, cs):
    # all monomials of weighted degree d, with random coefficients
    monos = [(i, j, d - 2 * i - 3 * j) for i in range(d // 2 + 1)
             for j in range((d - 2 * i) // 3 + 1)]
    f = Polynomial(W, {m: c for m, c in zip(monos, cs)})
    if f.is_zero():
        return
    euler = W.zero()
    for w, v, df in zip(W.weights, W.gens(), gradient(f)):
        euler = euler + v * df * w
    assert euler == f * d


# -- decomposition, gradient, homogenize, evaluate ---------------------------------


def test_decompose_example():
    dec = weighted_decompose(P("x + x^2*y + z^2"))
    assert dec.d == 3 and dec.k == 1
    assert dec.top == P("x^2*y")
    assert dec.next_part == P("z^2")


def test_decompose_homogeneous_flags_k():
    f = P("x^2 + y*z")
    dec = weighted_decompose(f)
    assert dec.k is None and dec.homogeneous
    assert dec.parts == {2: f}


def test_decompose_weighted_brieskorn():
    ring = RingContext(("x3", "x4"), (4, 5))
    dec = weighted_decompose(P("x3^5 + x4^4", ring))
    assert dec.d == 20 and dec.k is None


def test_decompose_rejects_zero():
    with pytest.raises(ValueError):
        weighted_decompose(XYZ.zero())


def test_gradient_examples():
    assert gradient(P("x^2*y")) == [P("2*x*y"), P("x^2"), XYZ.zero()]
    assert gradient(P("7")) == [XYZ.zero()] * 3
    # term by term: d/dx(x + x^2 y + z^2) = 1 + 2xy, ...
    assert gradient(P("x + x^2*y + z^2")) == [P("1 + 2*x*y"), P("x^2"), P("2*z")]


def test_homogenize_examples():
    F = homogenize(P("x + x^2*y + z^2"), "w")
    assert F.ring.variables == ("x", "y", "z", "w")
    assert F == parse_polynomial("x*w^2 + x^2*y + z^2*w", F.ring)
    h = P("x^2 + y*z")
    assert homogenize(h, "w").specialize("w", 1) == h
    assert homogenize(h, "w").terms == {m + (0,): c for m, c in h.terms.items()}


def test_homogenize_low_term_in_degree_8():
    ring = RingContext(("x1", "x2", "x3", "x4"))
    f = parse_polynomial("x1^4*x2^4 + (x1 + x2)^6 + x3^5 + x4^4 + x1^2", ring)
    F = homogenize(f, "w")
    assert F.terms[(2, 0, 0, 0, 6)] == 1


def test_homogenize_name_collision():
    with pytest.raises(ValueError):
        homogenize(P("x"), "y")


def test_evaluate_examples():
    assert evaluate(P("x^2*y"), [2, 3, 0]) == 12
    f = P("x^3 - 2*y + 5/3")
    assert evaluate(f, [0, 0, 0]) == f.constant_term() == Fraction(5, 3)
    assert evaluate(P("x + x^2*y + z^2"), [1, 1, 1]) == 3
    with pytest.raises(ValueError):
        evaluate(f, [1, 2])
