# A genus-17 curve whose field of moduli is R but which has no real model.
#
# y^2 = x^18 + a_1 x^24 - conj(a_1) x^12 + a_2 x^30 + conj(a_2) x^6 + x^36 - 1
# with a_1 = a_2 = 1 + 2i, over Q(zeta_36).

import time

from hypermoduli.cli import pretty_map
from hypermoduli.descent import counterexample_generate, counterexample_verify, weil_search
from hypermoduli.fields import cyclotomic_field

F = cyclotomic_field(36)
a = [F(1), F(1) + F.i * 2, F(1) + F.i * 2, F(1)]
spec, X = counterexample_generate(6, 3, coefficients=a)
print(f"genus {X.genus}, {X.hom_degree} branch points")

t = time.perf_counter()
report = counterexample_verify(spec, X)
for c in report["clauses"]:
    print(f"  {c['clause']:28s} {c['verdict']}  {c['detail']}")
print(f"verified in {time.perf_counter() - t:.1f}s")

# %% the obstruction: every isomorphism to the conjugate curve fails the cocycle test
cert = weil_search(X).certificate
for phi, comp in cert.entries[:4]:
    print(f"phi = {pretty_map(phi.M)} e={phi.sign:+d}   phi^c phi = {pretty_map(comp.M)} e={comp.sign:+d}")
print(f"... {len(cert)} isomorphisms in total, none with trivial composite")
