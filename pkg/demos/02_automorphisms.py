# Automorphism groups of a few hyperelliptic curves.
#
# Branch points are isolated numerically, every matching of three of them
# proposes a Moebius map, and surviving maps are recognised exactly in
# Q(zeta_N) and verified against y^2 = f(x).

from hypermoduli.cli import pretty_map
from hypermoduli.curves import aut_group, curve_new
from hypermoduli.fields import cyclotomic_field
from hypermoduli.polynomials import Poly

curves = [
    ("y^2 = x^6 - 1", 12, {6: 1, 0: -1}),
    ("y^2 = x^5 - x", 8, {5: 1, 1: -1}),
    ("y^2 = x^8 + 14x^4 + 1", 8, {8: 1, 4: 14, 0: 1}),
    ("y^2 = x^7 + 1", 14, {7: 1, 0: 1}),
    ("y^2 = x^6 + 2x^3 - 3x + 5", 4, {6: 1, 3: 2, 1: -3, 0: 5}),
]

for name, N, terms in curves:
    F = cyclotomic_field(N)
    X = curve_new(Poly.from_dict(F, {k: F(c) for k, c in terms.items()}))
    A = aut_group(X)
    print(f"{name:28s} genus {X.genus}  reduced {str(A.reduced_label()):5s}  "
          f"|Aut| = {A.order:3d}  {A.abstract_type()}")

# %% the group elements themselves are exact
F = cyclotomic_field(12)
A = aut_group(curve_new(Poly.from_dict(F, {6: F.one, 0: -F.one})))
for g in A.reduced.sorted()[:4]:
    print(pretty_map(g))
