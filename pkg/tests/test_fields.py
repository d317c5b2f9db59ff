from fractions import Fraction
import itertools

import mpmath
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from hypermoduli.errors import CharTwoError, DivisibilityError, ReducibleModulusError
from hypermoduli.fields import (
    ComplexBall,
    cyclotomic_field,
    cyclotomic_poly,
    euler_phi,
    format_cycnum,
    fp_is_irreducible,
    gaussian,
    gf_make,
    parse_cycnum,
)

from oracle import embed_exact

ORDERS = [1, 3, 4, 5, 8, 9, 12, 20, 36]


def elements(N):
    F = cyclotomic_field(N)
    q = st.fractions(min_value=-20, max_value=20, max_denominator=12)
    return st.lists(q, min_size=F.degree, max_size=F.degree).map(F.from_coeffs)


@pytest.mark.parametrize("N", range(1, 41))
def test_cyclotomic_poly_matches_sympy(N):
    x = sympy.Symbol("x")
    ref = sympy.Poly(sympy.cyclotomic_poly(N, x), x).all_coeffs()[::-1]
    assert cyclotomic_poly(N) == [int(c) for c in ref]
    assert len(cyclotomic_poly(N)) - 1 == euler_phi(N)


@pytest.mark.parametrize("N", ORDERS)
def test_roots_of_unity(N):
    F = cyclotomic_field(N)
    z = F.zeta_power(1)
    assert (z ** N).is_one()
    for d in range(1, N):
        if N % d == 0:
            assert not (z ** d).is_one()
    if N % 4 == 0:
        assert F.i * F.i == -F.one
        assert F.i.conjugate() == -F.i


def test_root_of_unity_requires_divisor():
    with pytest.raises(DivisibilityError):
        cyclotomic_field(12).root_of_unity(5)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([4, 5, 8, 12]).flatmap(lambda N: st.tuples(elements(N), elements(N), elements(N))))
def test_field_axioms(abc):
    a, b, c = abc
    assert (a + b) * c == a * c + b * c
    assert a * (b * c) == (a * b) * c
    assert a - a == a.field.zero
    if not a.is_zero():
        assert a * a.inverse() == a.field.one
        assert (b / a) * a == b


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([5, 8, 12, 20]).flatmap(lambda N: st.tuples(elements(N), elements(N))))
def test_conjugation_is_a_field_automorphism(ab):
    a, b = ab
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    assert (a + b).conjugate() == a.conjugate() + b.conjugate()
    assert a.conjugate().conjugate() == a
    assert (a * a.conjugate()).is_real()


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([5, 8, 9, 12]).flatmap(lambda N: st.tuples(elements(N), elements(N))))
def test_embedding_agrees_with_direct_sum(ab):
    # [DERIVED] embedding of a product against an independent mpmath evaluation
    a, b = ab
    N = a.field.N
    with mpmath.workprec(200):
        want = embed_exact(a, N) * embed_exact(b, N)
        ball = (a * b).embed(200)
        assert abs(ball.center - want) < mpmath.mpf(2) ** -150 * (1 + abs(want))
        val = embed_exact(a.conjugate(), N)
        assert abs(val - mpmath.conj(embed_exact(a, N))) < mpmath.mpf(2) ** -150 * (1 + abs(val))


def test_coerce_respects_embedding():
    F4, F12 = cyclotomic_field(4), cyclotomic_field(12)
    assert F12.coerce(F4.i) == F12.i
    z3 = cyclotomic_field(3).zeta_power(1)
    assert F12.coerce(z3) == F12.root_of_unity(3)
    with pytest.raises(DivisibilityError):
        cyclotomic_field(8).coerce(z3)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([4, 7, 36]).flatmap(elements))
def test_format_parse_round_trip(a):
    F = a.field
    s = format_cycnum(a)
    assert all("/" in item for item in s)
    assert parse_cycnum(F, s) == a


def test_gaussian_helper():
    F = cyclotomic_field(8)
    z = gaussian(F, 1, 2)
    assert z == F.one + F.i * 2
    assert z * z.conjugate() == F(5)


def test_complex_ball_rounding_encloses_true_value():
    with mpmath.workprec(400):
        exact = mpmath.mpf(1) / 3 + mpmath.mpc(0, 1) / 7
    b = ComplexBall(exact, 0, prec=60)
    with mpmath.workprec(400):
        assert abs(b.center - exact) <= b.radius


def test_complex_ball_arithmetic_contains():
    with mpmath.workprec(200):
        x, y = mpmath.mpc(1.25, -0.5), mpmath.mpc(-3, 2)
    bx, by = ComplexBall(x, 1e-30, 100), ComplexBall(y, 1e-30, 100)
    with mpmath.workprec(200):
        assert (bx * by).contains(x * y)
        assert (bx / by).contains(x / y)
        assert (bx - by).contains(x - y)


# finite fields ---------------------------------------------------------------

@pytest.mark.parametrize("p,r", [(3, 1), (3, 2), (3, 3), (5, 2), (7, 2), (11, 1), (3, 4)])
def test_gf_field_structure(p, r):
    F = gf_make(p, r)
    assert len(F.elements()) == p ** r
    nonzero = [x for x in F.elements() if not x.is_zero()]
    assert all((x ** (p ** r - 1)).is_one() for x in nonzero)
    assert all((x * x.inverse()).is_one() for x in nonzero)
    # some element generates the multiplicative group
    q1 = p ** r - 1
    gen = next(x for x in nonzero
               if all(not (x ** (q1 // l)).is_one() for l in sympy.primefactors(q1)))
    assert len({gen ** k for k in range(q1)}) == q1


def test_f9_is_f3_adjoin_i():
    F = gf_make(3, 2)
    assert F.modulus == (1, 0, 1)
    assert F.gen * F.gen == -F.one


@pytest.mark.parametrize("p,r", [(3, 2), (3, 3), (5, 2), (5, 3), (7, 2)])
def test_irreducibility_matches_sympy(p, r):
    x = sympy.Symbol("x")
    for tail in itertools.product(range(p), repeat=r):
        coeffs = list(tail) + [1]
        ref = sympy.Poly(list(reversed(coeffs)), x, modulus=p).is_irreducible
        assert fp_is_irreducible(coeffs, p) == ref


def test_gf_errors():
    with pytest.raises(CharTwoError):
        gf_make(2, 3)
    with pytest.raises(ReducibleModulusError):
        gf_make(3, 2, modulus=[2, 0, 1])  # x^2 - 1
    with pytest.raises(ValueError):
        gf_make(9, 1)


def test_subfield_and_sqrt():
    F = gf_make(5, 2)
    sub = F.subfield_elements(1)
    assert len(sub) == 5
    for a in sub:
        s = F.sqrt(a)
        assert s is not None and s * s == a
    assert F(Fraction(1, 2)) * 2 == F.one
