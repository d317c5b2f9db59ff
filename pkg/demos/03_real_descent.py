# Hiding a real curve behind a complex change of variable, then finding it again.

from hypermoduli.curves import curve_new, isomorphisms
from hypermoduli.descent import cocycle_composite, weil_search
from hypermoduli.fields import cyclotomic_field
from hypermoduli.moebius import MoebiusMap
from hypermoduli.polynomials import Poly, moebius_pullback

F = cyclotomic_field(8)
i = F.i

f0 = Poly.from_dict(F, {6: F.one, 3: F(2), 1: F(-3), 0: F(5)})
T = MoebiusMap(F(2), i, F.one, F(3))        # x -> (2x + i)/(x + 3)
X = curve_new(moebius_pullback(f0, T, 6))
print("twisted model is real?", X.f.is_real())

D = weil_search(X)
print("verdict:", D.status)
print("cocycle phi^c o phi trivial?", cocycle_composite(D.cocycle).is_identity())
print("recovered real model:", [c.rational() for c in D.f_real.coeffs])

Y = curve_new(D.f_real)
print("isomorphic to the input:", bool(isomorphisms(X, Y)))
print("isomorphic to the original real curve:", bool(isomorphisms(curve_new(f0), Y)))
