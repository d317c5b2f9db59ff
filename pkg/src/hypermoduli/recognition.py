"""Bounded-height recognition of complex numbers as elements of Q(zeta_N).

Results are guesses: every caller verifies them exactly afterwards.  The
search tries, in order: zero, rationals, rational multiples of N-th roots of
unity, and then integer-relation search (PSLQ) in cyclotomic subfields of
increasing degree, using the coordinates 1, zeta_d, ..., zeta_d^(phi(d)-1).
Real and imaginary parts are combined with a transcendental weight (pi) so
that a single real relation encodes both.
"""

from __future__ import annotations

from fractions import Fraction

import mpmath

from .fields import CycField, CycNum, cyclotomic_field, divisors, euler_phi

DEFAULT_HEIGHT = 10 ** 6


def _close(a, b, tol) -> bool:
    return abs(a - b) <= tol * max(1, abs(b))


def _rational_guess(x, height: int, tol):
    q = Fraction(str(x)).limit_denominator(height)
    if abs(q.numerator) > height * max(1, abs(x)) * 4:
        return None
    if _close(mpmath.mpf(q.numerator) / q.denominator, x, tol):
        return q
    return None


def recognition_precision(F: CycField, height: int = DEFAULT_HEIGHT) -> int:
    """Working precision that makes the full-field relation search meaningful."""
    bits = mpmath.log(height, 2)
    return int(64 + (F.degree + 2) * (bits + 4))


def recognize(z, F: CycField, height: int = DEFAULT_HEIGHT, prec: int | None = None):
    """Return a CycNum near z (to roughly 3/4 of the working precision) or None."""
    prec = prec or mpmath.mp.prec
    with mpmath.workprec(prec):
        z = mpmath.mpc(z)
        tol = mpmath.mpf(2) ** (-(3 * prec) // 4)
        if abs(z) <= tol:
            return F.zero
        # rational
        if abs(z.imag) <= tol * max(1, abs(z)):
            q = _rational_guess(z.real, height, tol)
            if q is not None:
                return F(q)
        # rational times a root of unity
        N = F.N
        w = mpmath.expjpi(mpmath.mpf(-2) / N)
        rot = mpmath.mpc(z)
        for k in range(N):
            if abs(rot.imag) <= tol * abs(rot) and rot.real != 0:
                q = _rational_guess(rot.real, height, tol)
                if q is not None:
                    return F.zeta_power(k) * q
            rot *= w
        # relation search in subfields Q(zeta_d), d | N
        for d in sorted(divisors(N), key=lambda d: (euler_phi(d), d)):
            # Q(zeta_d) = Q(zeta_{d/2}) for d = 2 mod 4
            if euler_phi(d) < 2 or d % 4 == 2:
                continue
            guess = _pslq_in_subfield(z, d, height, prec, tol)
            if guess is not None:
                return F.coerce(guess)
    return None


def _pslq_in_subfield(z, d: int, height: int, prec: int, tol):
    K = cyclotomic_field(d)
    basis = K.numeric_powers(prec)
    weight = mpmath.pi
    vec = [z.real + weight * z.imag]
    vec += [-(b.real + weight * b.imag) for b in basis]
    try:
        rel = mpmath.pslq(vec, maxcoeff=height, maxsteps=20000)
    except (ValueError, ZeroDivisionError):
        return None
    if rel is None or rel[0] == 0:
        return None
    q0 = rel[0]
    cand = K.from_coeffs(Fraction(c, q0) for c in rel[1:])
    c = cand.embed(prec).center
    if _close(c.real, z.real, tol * 16) and _close(c.imag, z.imag, tol * 16) and abs(c - z) <= tol * 16 * max(1, abs(z)):
        return cand
    return None


def recognize_sqrt(a: CycNum, height: int = DEFAULT_HEIGHT):
    """Exact square root of ``a`` in its field, or None when none is found."""
    F = a.field
    if a.is_zero():
        return F.zero
    if a.is_rational():
        q = a.rational()
        if q > 0:
            n, d = mpmath.sqrt(q.numerator), mpmath.sqrt(q.denominator)
            if int(n) ** 2 == q.numerator and int(d) ** 2 == q.denominator:
                return F(Fraction(int(n), int(d)))
    prec = recognition_precision(F, height)
    with mpmath.workprec(prec):
        s = mpmath.sqrt(a.embed(prec).center)
    r = recognize(s, F, height, prec)
    if r is not None and r * r == a:
        return r
    return None
