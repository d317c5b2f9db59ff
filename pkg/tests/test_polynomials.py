from fractions import Fraction

import mpmath
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from hypermoduli.errors import PrecisionError
from hypermoduli.fields import cyclotomic_field
from hypermoduli.moebius import MoebiusMap
from hypermoduli.polynomials import (
    Poly,
    RatFunc,
    gcd,
    is_squarefree,
    moebius_pullback,
    proportionality,
    ratfunc_compose,
    ratfunc_substitute,
)
from hypermoduli.recognition import recognize, recognize_sqrt, recognition_precision
from hypermoduli.roots import refine_roots, roots_numeric

from oracle import embed_exact

QQ = cyclotomic_field(1)
F8 = cyclotomic_field(8)


def qpoly(coeffs):
    return Poly(QQ, [QQ(c) for c in coeffs])


small_int_polys = st.lists(st.integers(-6, 6), min_size=2, max_size=7).filter(lambda c: c[-1] != 0)


def to_sympy(p):
    x = sympy.Symbol("x")
    return sympy.Poly([sympy.Rational(c.rational().numerator, c.rational().denominator)
                       for c in reversed(p.coeffs)], x, domain="QQ")


@settings(max_examples=60, deadline=None)
@given(small_int_polys, small_int_polys)
def test_gcd_matches_sympy(a, b):
    # [DERIVED] sympy's rational gcd, made monic
    g = gcd(qpoly(a), qpoly(b))
    ref = sympy.gcd(to_sympy(qpoly(a)), to_sympy(qpoly(b))).monic()
    assert to_sympy(g.monic()) == ref


@settings(max_examples=40, deadline=None)
@given(small_int_polys, small_int_polys)
def test_division_identity(a, b):
    A, B = qpoly(a), qpoly(b)
    q, r = A.divmod(B)
    assert q * B + r == A
    assert r.is_zero() or r.degree < B.degree


def test_squarefree():
    x = Poly.x(QQ)
    assert is_squarefree(x ** 6 - 1)
    assert not is_squarefree((x ** 2 + 1) ** 3)
    assert not is_squarefree(x * x * (x + 1))


def test_pullback_is_a_right_action():
    x = Poly.x(F8)
    f = x ** 6 + x ** 3 * F8.i - 2
    A = MoebiusMap(F8(2), F8.i, F8.one, F8(3))
    B = MoebiusMap(F8.one, F8(-1), F8.i, F8(5))
    lhs = moebius_pullback(moebius_pullback(f, A, 6), B, 6)
    rhs = moebius_pullback(f, A * B, 6)
    assert proportionality(lhs, rhs) is not None


def test_pullback_drops_degree_at_infinity():
    x = Poly.x(QQ)
    f = x ** 5 - x
    g = moebius_pullback(f, MoebiusMap(QQ.zero, QQ.one, QQ.one, QQ.zero), 6)
    # x^6 f(1/x) = x - x^5
    assert g == x - x ** 5


def test_proportionality():
    x = Poly.x(F8)
    f = x ** 4 + 3
    assert proportionality(f * F8.i, f) == F8.i
    assert proportionality(f + 1, f) is None


def test_ratfunc_arithmetic_and_composition():
    x = RatFunc(Poly.x(QQ))
    t = x + 1 / x
    assert t.degree == 2
    assert ratfunc_compose(t, MoebiusMap(QQ.zero, QQ.one, QQ.one, QQ.zero)) == t
    assert ratfunc_substitute(x * x, t) == t * t
    assert (t - t).num.is_zero()


# roots -------------------------------------------------------------------------

@pytest.mark.parametrize("coeffs", [
    [-1, 0, 0, 0, 0, 0, 1],
    [5, -3, 0, 2, 0, 0, 1],
    [1, 0, 14, 0, 0, 0, 0, 0, 1],
    [3, 1, -4, 1, 5, -9, 2],
])
def test_roots_enclose_mpmath_roots(coeffs):
    # [DERIVED] mpmath.polyroots at doubled precision must land in the balls
    f = qpoly(coeffs)
    balls = roots_numeric(f, 128)
    assert len(balls) == f.degree
    with mpmath.workprec(256):
        ref = mpmath.polyroots(list(reversed(coeffs)), maxsteps=300, extraprec=512)
        for r in ref:
            assert sum(1 for b in balls if b.contains(r)) == 1


def test_refine_shrinks_balls():
    f = qpoly([5, -3, 0, 2, 0, 0, 1])
    coarse = roots_numeric(f, 64)
    fine = refine_roots(f, coarse, 256)
    for b in fine:
        assert b.radius < mpmath.mpf(2) ** -200


def test_nonsquarefree_roots_fail():
    with pytest.raises((PrecisionError, ValueError)):
        roots_numeric(qpoly([1, 0, 2, 0, 1]), 64)


# recognition -----------------------------------------------------------------

@settings(max_examples=40, deadline=None)
@given(st.sampled_from([4, 8, 12]).flatmap(
    lambda N: st.lists(st.fractions(min_value=-50, max_value=50, max_denominator=9),
                       min_size=cyclotomic_field(N).degree, max_size=cyclotomic_field(N).degree)
    .map(cyclotomic_field(N).from_coeffs)))
def test_recognize_round_trip(a):
    F = a.field
    prec = recognition_precision(F)
    with mpmath.workprec(prec):
        z = embed_exact(a, F.N)
        assert recognize(z, F, prec=prec) == a


def test_recognize_rejects_outsiders():
    F = cyclotomic_field(4)
    prec = recognition_precision(F)
    with mpmath.workprec(prec):
        assert recognize(mpmath.sqrt(2), F, prec=prec) is None
        assert recognize(mpmath.pi, F, prec=prec) is None


def test_recognize_sqrt():
    F = cyclotomic_field(8)
    s = recognize_sqrt(F(2))
    assert s is not None and s * s == F(2)
    assert recognize_sqrt(F(3)) is None
    assert recognize_sqrt(F(Fraction(9, 4))) in (F(Fraction(3, 2)), F(Fraction(-3, 2)))


def test_counterexample_polynomial_is_squarefree_over_larger_field():
    F = cyclotomic_field(72)
    g = F(1) + F.i * 2
    f = Poly.from_dict(F, {36: F.one, 30: g, 24: g, 18: F.one, 12: -g.conjugate(), 6: g.conjugate(), 0: F(-1)})
    assert is_squarefree(f)
