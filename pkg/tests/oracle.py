"""Independent numeric oracle for reduced automorphism groups.

Shares no code with the engine beyond reading exact coefficients. Roots
come from mpmath.polyroots at doubled precision. Every ordered target triple
is tried against the first three branch points, in projective coordinates, and
a map counts when it moves the branch set onto itself to within the tolerance.
"""

from __future__ import annotations

import itertools

import mpmath


def embed_exact(a, N: int):
    """Complex value of a power-basis element of Q(zeta_N), computed afresh."""
    z = mpmath.expjpi(mpmath.mpf(2) / N)
    return mpmath.fsum(mpmath.mpf(c.numerator) / c.denominator * z ** k for k, c in enumerate(a.coeffs))


def branch_points(f, N: int, dps: int):
    """Projective branch points [u:v] of y^2 = f."""
    with mpmath.workdps(dps):
        coeffs = [embed_exact(c, N) for c in reversed(f.coeffs)]
        roots = mpmath.polyroots(coeffs, maxsteps=400, extraprec=4 * dps)
        pts = [(mpmath.mpc(r), mpmath.mpc(1)) for r in roots]
        if f.degree % 2 == 1:
            pts.append((mpmath.mpc(1), mpmath.mpc(0)))
        return pts


def _frame(p1, p2, p3):
    """Matrix sending [1:0], [0:1], [1:1] to p1, p2, p3."""
    M = mpmath.matrix([[p1[0], p2[0]], [p1[1], p2[1]]])
    a, b = mpmath.lu_solve(M, mpmath.matrix([p3[0], p3[1]]))
    return mpmath.matrix([[a * p1[0], b * p2[0]], [a * p1[1], b * p2[1]]])


def _apply(M, p):
    return (M[0, 0] * p[0] + M[0, 1] * p[1], M[1, 0] * p[0] + M[1, 1] * p[1])


def _chordal(p, q):
    # distance on the Riemann sphere, up to a constant factor
    num = abs(p[0] * q[1] - p[1] * q[0])
    den = mpmath.sqrt((abs(p[0]) ** 2 + abs(p[1]) ** 2) * (abs(q[0]) ** 2 + abs(q[1]) ** 2))
    return num / den


def normalise(M, tol):
    """Scale so the first entry (row-major) of non-negligible size is 1."""
    entries = [M[0, 0], M[0, 1], M[1, 0], M[1, 1]]
    scale = max(abs(e) for e in entries)
    lead = next(e for e in entries if abs(e) > tol * scale)
    return tuple(e / lead if abs(e) > tol * scale else mpmath.mpc(0) for e in entries)


def oracle_reduced_group(f, N: int, dps: int = 80):
    """Normalised entry tuples of every Moebius map permuting the branch points."""
    with mpmath.workdps(dps):
        pts = branch_points(f, N, dps)
        tol = mpmath.mpf(10) ** (-dps // 3)
        src = _frame(*pts[:3])
        src_inv = src ** -1
        found = []
        for tgt in itertools.permutations(pts, 3):
            M = _frame(*tgt) * src_inv
            images = [_apply(M, p) for p in pts]
            if all(min(_chordal(im, q) for q in pts) < tol for im in images):
                found.append(normalise(M, tol))
        return found


def same_element_sets(engine_maps, oracle_maps, tol=1e-15) -> bool:
    """Bijective numeric match of two sets of normalised 2x2 matrices."""
    if len(engine_maps) != len(oracle_maps):
        return False
    remaining = [tuple(complex(e) for e in m) for m in oracle_maps]
    for m in engine_maps:
        m = tuple(complex(e) for e in m)
        hit = next((k for k, o in enumerate(remaining)
                    if max(abs(x - y) for x, y in zip(m, o)) < tol * (1 + max(abs(x) for x in m))), None)
        if hit is None:
            return False
        remaining.pop(hit)
    return not remaining
