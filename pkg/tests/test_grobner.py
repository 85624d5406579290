import itertools
import random
from fractions import Fraction

import pytest
import sympy

from singlab import HypothesisError, ResourceLimitError
from singlab.grobner import (
    Ideal,
    ResourceLimits,
    affine_dimension,
    buchberger,
    is_groebner,
    jacobian_ideal,
    milnor_number,
    normal_form,
    projective_dimension,
)
from singlab.polycore import Polynomial, RingContext, parse_polynomial

XY = RingContext(("x", "y"))
XYZ = RingContext(("x", "y", "z"))


def ideal(ring, *texts):
    return Ideal(ring, [parse_polynomial(t, ring) for t in texts])


def basis_texts(G):
    return [str(g) for g in G.basis]


def test_already_reduced():
    assert basis_texts(buchberger(ideal(XY, "x", "y"))) == ["y", "x"]


def test_hand_reduction():
    # x^2 - 1 = (x+1)(x-1), so the ideal is (x - 1)
    assert basis_texts(buchberger(ideal(XY, "x^2 - 1", "x - 1"))) == ["x - 1"]


def test_jacobian_without_common_zero():
    f = parse_polynomial("x + x^2*y + z^2", XYZ)
    assert basis_texts(buchberger(jacobian_ideal(f))) == ["1"]


def test_zero_generators_dropped():
    I = Ideal(XY, [XY.zero(), parse_polynomial("x", XY)])
    assert len(I.generators) == 1


def test_lex_order():
    G = buchberger(ideal(XY, "x^2 + y", "x*y - 1"), order="lex")
    assert is_groebner(G)
    # elimination: the last element lives in y alone
    assert all(m[0] == 0 for m in G.basis[0].terms)


def test_normal_form_examples():
    G = buchberger(ideal(XY, "x"))
    assert normal_form(parse_polynomial("x^2", XY), G).is_zero()
    assert normal_form(parse_polynomial("x^2 + y", XY), G) == parse_polynomial("y", XY)
    J = buchberger(jacobian_ideal(parse_polynomial("x^2 + y^3", XY)))
    assert basis_texts(J) == ["x", "y^2"]
    assert normal_form(parse_polynomial("y^3", XY), J).is_zero()


def test_resource_limits_abort():
    I = ideal(XYZ, "x*y - 1", "x^2 + y^2 - 4")
    with pytest.raises(ResourceLimitError):
        buchberger(I, limits=ResourceLimits(max_basis=2))
    with pytest.raises(ResourceLimitError):
        buchberger(ideal(XY, "x^5 - y"), limits=ResourceLimits(max_degree=4))


def test_resource_limits_from_env():
    lim = ResourceLimits.from_env({"SINGLAB_MAX_BASIS": "7"})
    assert lim.max_basis == 7 and lim.max_degree == 64


# -- dimension -----------------------------------------------------------------------


def test_affine_dimension_examples():
    r = affine_dimension(ideal(XY, "x"))
    assert r.dim == 1 and r.witness == ("y",)
    assert affine_dimension(ideal(XY, "1")).dim == -1
    r = affine_dimension(ideal(XYZ, "2*x*y", "x^2", "2*z"))
    assert r.dim == 1 and r.witness == ("y",)


def test_zero_ideal_is_whole_space():
    assert affine_dimension(Ideal(XYZ, [])).dim == 3


def test_projective_dimension_examples():
    assert projective_dimension(ideal(XYZ, "x")).dim == 1
    assert projective_dimension(ideal(XYZ, "x", "z")).dim == 0
    assert projective_dimension(ideal(XYZ, "1")).dim == -1
    assert projective_dimension(ideal(XYZ, "x", "y", "z")).dim == -1


def test_projective_dimension_rejects_inhomogeneous():
    with pytest.raises(HypothesisError):
        projective_dimension(ideal(XYZ, "x + y^2"))


def test_projective_dimension_accepts_weighted_homogeneous():
    ring = RingContext(("a", "b"), (2, 3))
    assert projective_dimension(ideal(ring, "a^3 - b^2")).dim == 0


# -- Milnor numbers --------------------------------------------------------------------


def test_milnor_examples():
    ring = RingContext(("x3", "x4"))
    assert milnor_number(ideal(ring, "5*x3^4", "4*x4^3")) == 12
    assert milnor_number(jacobian_ideal(parse_polynomial("x^2 + y^2", XY))) == 1
    assert milnor_number(jacobian_ideal(parse_polynomial("x^2 + y^3", XY))) == 2


def test_milnor_rejects_positive_dimension():
    with pytest.raises(HypothesisError):
        milnor_number(ideal(XYZ, "x", "y"))


def test_milnor_of_nonmonomial_jacobian():
    # oracle: standard monomials of sympy's grevlex basis, counted by brute force
    x1, x2 = sympy.symbols("x1 x2")
    g = x1**4 * x2**4 + (x1 + x2)**6 + x1**2
    G = sympy.groebner([g.diff(x1), g.diff(x2)], x1, x2, order="grevlex")
    lms = [sympy.Poly(p, x1, x2).monoms(order="grevlex")[0] for p in G.exprs]
    oracle = sum(1 for a in range(40) for b in range(40)
                 if not any(a >= m[0] and b >= m[1] for m in lms))
    ring = RingContext(("x1", "x2"))
    f = parse_polynomial("x1^4*x2^4 + (x1 + x2)^6 + x1^2", ring)
    assert milnor_number(jacobian_ideal(f)) == oracle == 37


@pytest.mark.parametrize("exps", [(2,), (3,), (2, 2), (2, 3), (3, 4), (2, 3, 5), (4, 4, 4), (6, 5)])
def test_milnor_brieskorn_product(exps):
    names = tuple(f"x{i}" for i in range(len(exps)))
    ring = RingContext(names)
    f = sum((ring.gen(v) ** a for v, a in zip(names, exps)), ring.zero())
    expected = 1
    for a in exps:
        expected *= a - 1
    assert milnor_number(jacobian_ideal(f)) == expected


# -- cross-check against an independent Groebner implementation ------------------------


def _random_poly(rng, ring, nterms, maxdeg):
    terms = {}
    for _ in range(nterms):
        m = tuple(rng.randint(0, maxdeg) for _ in range(ring.nvars))
        if sum(m) <= maxdeg:
            terms[m] = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
    return Polynomial(ring, terms)


def _to_sympy(p, syms):
    return sum(sympy.Rational(c.numerator, c.denominator) *
               sympy.prod([s**e for s, e in zip(syms, m)]) for m, c in p.terms.items())


def test_reduced_basis_matches_sympy():
    rng = random.Random(7)
    syms = sympy.symbols("x y z")
    for _ in range(40):
        gens = [_random_poly(rng, XYZ, rng.randint(1, 3), 2) for _ in range(rng.randint(1, 3))]
        I = Ideal(XYZ, gens)
        if not I.generators:
            continue
        ours = buchberger(I)
        theirs = sympy.groebner([_to_sympy(g, syms) for g in I.generators], *syms, order="grevlex")
        theirs_set = {sympy.expand(e) for e in theirs.exprs}
        ours_set = {sympy.expand(_to_sympy(g, syms)) for g in ours.basis}
        assert ours_set == theirs_set


def test_normal_form_invariant_under_ideal_translation():
    rng = random.Random(11)
    for _ in range(50):
        gens = [_random_poly(rng, XY, 3, 2) for _ in range(2)]
        I = Ideal(XY, gens)
        if not I.generators:
            continue
        G = buchberger(I)
        f = _random_poly(rng, XY, 4, 3)
        combo = XY.zero()
        for g in I.generators:
            combo = combo + g * _random_poly(rng, XY, 2, 1)
        nf = normal_form(f, G)
        assert normal_form(f + combo, G) == nf
        assert normal_form(f - nf, G).is_zero()
        lms = G.leading_monomials()
        assert not any(all(a <= b for a, b in zip(lm, m)) for m in nf.terms for lm in lms)


def test_homogeneous_projective_is_affine_minus_one():
    rng = random.Random(5)
    checked = 0
    for _ in range(60):
        d = rng.randint(1, 2)
        monos = [m for m in itertools.product(range(d + 1), repeat=3) if sum(m) == d]
        gens = [Polynomial(XYZ, {m: rng.randint(-2, 2) for m in rng.sample(monos, 2)})
                for _ in range(rng.randint(1, 2))]
        I = Ideal(XYZ, gens)
        if not I.generators:
            continue
        a = affine_dimension(I).dim
        if a >= 1:
            assert projective_dimension(I).dim == a - 1
            checked += 1
    assert checked > 10
