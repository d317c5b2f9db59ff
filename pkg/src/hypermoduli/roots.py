"""Certified numeric root isolation for squarefree polynomials over Q(zeta_N).

Approximations come from Aberth iteration; each root is then enclosed by a
disc of radius n*|W_i| (W_i the Weierstrass correction), which by the
Braess-Hadeler inclusion theorem isolates exactly one root when the discs
are pairwise disjoint.  Evaluation error is bounded from the coefficient
magnitudes and added to |p(z_i)|.
"""

from __future__ import annotations

import mpmath
import numpy as np

from .errors import PrecisionError
from .fields import ComplexBall, embed_numeric


def numeric_coeffs(f, prec: int) -> list:
    return [embed_numeric(c, prec).center for c in f.coeffs]


def _horner(cs, z):
    acc = mpmath.mpc(0)
    for c in reversed(cs):
        acc = acc * z + c
    return acc


def _horner_with_derivative(cs, z):
    p = mpmath.mpc(0)
    dp = mpmath.mpc(0)
    for c in reversed(cs):
        dp = dp * z + p
        p = p * z + c
    return p, dp


def _initial_guesses(cs) -> list:
    n = len(cs) - 1
    try:
        arr = np.array([complex(c) for c in reversed(cs)], dtype=complex)
        if np.all(np.isfinite(arr)):
            guess = np.roots(arr)
            if len(guess) == n and np.all(np.isfinite(guess)):
                # perturb exact coincidences so Aberth can separate them
                out, seen = [], set()
                for k, g in enumerate(guess):
                    key = (round(g.real, 10), round(g.imag, 10))
                    if key in seen:
                        g = g + 1e-6 * complex(np.cos(k), np.sin(k))
                    seen.add(key)
                    out.append(mpmath.mpc(g))
                return out
    except (OverflowError, np.linalg.LinAlgError, ValueError):
        pass
    radius = 1 + max(abs(c) for c in cs[:-1]) / abs(cs[-1])
    return [radius * mpmath.expjpi(mpmath.mpf(2 * k) / n + mpmath.mpf(1) / (2 * n)) for k in range(n)]


def aberth(cs, prec: int, start=None, max_iter: int = 400) -> list:
    n = len(cs) - 1
    with mpmath.workprec(prec):
        z = [mpmath.mpc(s) for s in (start if start is not None else _initial_guesses(cs))]
        tol = mpmath.mpf(2) ** (-prec + 8)
        for _ in range(max_iter):
            worst = mpmath.mpf(0)
            for i in range(n):
                p, dp = _horner_with_derivative(cs, z[i])
                if p == 0:
                    continue
                ratio = p / dp if dp != 0 else mpmath.mpc(1)
                s = mpmath.mpc(0)
                for j in range(n):
                    if j != i:
                        s += 1 / (z[i] - z[j])
                w = ratio / (1 - ratio * s)
                z[i] -= w
                worst = max(worst, abs(w) / max(1, abs(z[i])))
            if worst < tol:
                break
    return z


def inclusion_balls(cs, approx, prec: int) -> list[ComplexBall]:
    n = len(cs) - 1
    with mpmath.workprec(prec + 32):
        eps = mpmath.mpf(2) ** (-(prec + 24))
        absc = [abs(c) for c in cs]
        lead = cs[-1]
        balls = []
        for i, zi in enumerate(approx):
            p = _horner(cs, zi)
            bound = 2 * (n + 1) * eps * _horner(absc, abs(zi)).real
            prod = lead
            for j, zj in enumerate(approx):
                if j != i:
                    prod *= zi - zj
            if abs(prod) == 0:
                raise PrecisionError("coincident root approximations")
            w = (abs(p) + bound) / (abs(prod) * (1 - 4 * n * eps))
            radius = n * w * (1 + eps) + eps * (1 + abs(zi))
            balls.append(ComplexBall(zi, radius, prec))
    return balls


def _disjoint(balls) -> bool:
    pts = sorted(balls, key=lambda b: (b.center.real, b.center.imag))
    # sweep over real parts to avoid n^2 comparisons for large n
    for i, b in enumerate(pts):
        for c in pts[i + 1:]:
            if c.center.real - b.center.real > b.radius + c.radius:
                break
            if b.overlaps(c):
                return False
    return True


def roots_numeric(f, prec: int = 128) -> list[ComplexBall]:
    """Pairwise disjoint balls, one per root, ordered by (real, imag) of centre."""
    if f.degree < 1:
        return []
    cs = numeric_coeffs(f, prec + 32)
    approx = aberth(cs, prec + 32)
    balls = inclusion_balls(cs, approx, prec)
    if not _disjoint(balls):
        raise PrecisionError(f"root balls overlap at {prec} bits")
    return sorted(balls, key=lambda b: (float(b.center.real), float(b.center.imag)))


def refine_roots(f, balls, prec: int) -> list[ComplexBall]:
    """Re-certify the given root balls at a higher precision (Newton from centres)."""
    cs = numeric_coeffs(f, prec + 32)
    with mpmath.workprec(prec + 32):
        z = [mpmath.mpc(b.center) for b in balls]
    z = aberth(cs, prec + 32, start=z, max_iter=60)
    out = inclusion_balls(cs, z, prec)
    if not _disjoint(out):
        raise PrecisionError(f"refined balls overlap at {prec} bits")
    for old, new in zip(balls, out):
        if not old.overlaps(new):
            raise PrecisionError("refinement drifted to a different root")
    return out
