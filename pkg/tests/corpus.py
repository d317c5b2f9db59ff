"""Curves shared by the oracle comparison, the descent round trips and the noncyclic sweep."""

from __future__ import annotations

import random

from hypermoduli.curves import curve_new
from hypermoduli.fields import cyclotomic_field
from hypermoduli.moebius import MoebiusMap
from hypermoduli.polynomials import Poly, moebius_pullback


def _poly(N, terms):
    F = cyclotomic_field(N)
    return Poly.from_dict(F, {k: (F(c) if not isinstance(c, tuple) else F(c[0]) + F.i * c[1])
                              for k, c in terms.items()})


def _random_gaussian(N, degree, seed):
    rng = random.Random(seed)
    F = cyclotomic_field(N)
    while True:
        coeffs = [F(rng.randint(-4, 4)) + F.i * rng.randint(-4, 4) for _ in range(degree)] + [F.one]
        try:
            return curve_new(Poly(F, coeffs), label=f"random deg {degree} seed {seed}")
        except ValueError:
            seed += 1000
            rng = random.Random(seed)


# (label, N, {power: rational or (re, im)}, expected reduced label or None)
_SPECS = [
    ("x^6 - 1", 12, {6: 1, 0: -1}, "D12"),
    ("x^5 - x", 8, {5: 1, 1: -1}, "S4"),
    ("x^6 + 2x^3 - 3x + 5", 4, {6: 1, 3: 2, 1: -3, 0: 5}, "C1"),
    ("x^5 - 1", 10, {5: 1, 0: -1}, "C5"),
    ("x^8 - 1", 8, {8: 1, 0: -1}, "D16"),
    ("x^8 + 14x^4 + 1", 8, {8: 1, 4: 14, 0: 1}, "S4"),
    ("x^6 + 1", 12, {6: 1, 0: 1}, "D12"),
    ("x^7 - x", 12, {7: 1, 1: -1}, None),
    ("x^8 - 3i x^6 - 3x^4 - 3i x^2 + 1", 8, {8: 1, 6: (0, -3), 4: -3, 2: (0, -3), 0: 1}, "V4"),
    ("x^5 + x", 8, {5: 1, 1: 1}, "S4"),
    ("x(x^2-1)(x^2-4)", 4, {5: 1, 3: -5, 1: 4}, None),
    ("(x^2-1)(x^2-4)(x^2-9)", 4, {6: 1, 4: -14, 2: 49, 0: -36}, None),
    ("x^6 - x", 20, {6: 1, 1: -1}, None),
    ("x^6 + x^3 + 1", 18, {6: 1, 3: 1, 0: 1}, None),
    ("x^8 + 3x^4 + 1", 8, {8: 1, 4: 3, 0: 1}, None),
    ("x^6 - 3x^4 + 2x + 1", 4, {6: 1, 4: -3, 1: 2, 0: 1}, None),
    ("x^7 + 1", 14, {7: 1, 0: 1}, None),
    ("x^6 + (1+2i)x^3 + 1", 12, {6: 1, 3: (1, 2), 0: 1}, None),
]


def oracle_curves():
    out = []
    for label, N, terms, expected in _SPECS:
        out.append((curve_new(_poly(N, terms), label=label), expected))
    for deg, seed in ((6, 1), (7, 2), (8, 3)):
        out.append((_random_gaussian(4, deg, seed), None))
    return out


# real curves over Q(zeta_8) and the complex maps used to twist them
_REAL = [
    {6: 1, 3: 2, 1: -3, 0: 5},
    {5: 1, 2: -1, 0: 3},
    {6: 1, 4: -2, 1: 1, 0: -1},
    {8: 1, 4: 3, 0: 1},
    {5: 1, 1: -1},
]


def _twists(F):
    i, z = F.i, F.root_of_unity(8)
    return [
        MoebiusMap(F.one, i, F.zero, F.one),
        MoebiusMap(z, F.zero, F.zero, F.one),
        MoebiusMap(F(2), i, F.one, F(3)),
        MoebiusMap(F.one, F.zero, i, F.one),
        MoebiusMap(F.one + i, F.one, F.zero, F.one),
    ]


def twisted_real_curves(limit=None):
    """(twisted curve, real source curve) pairs, in a fixed order."""
    F = cyclotomic_field(8)
    out = []
    for k, terms in enumerate(_REAL):
        f = Poly.from_dict(F, {e: F(c) for e, c in terms.items()})
        for j, T in enumerate(_twists(F)[: 2 if k >= 3 else 3]):
            g = moebius_pullback(f, T, 2 * curve_new(f).genus + 2)
            out.append((curve_new(g, label=f"real {k} twisted by map {j}"), curve_new(f)))
    return out[:limit] if limit else out
