# Finite subgroups of PGL2 in standard position, and what normalizes them.
#
# Each group is built from explicit generators over a small field, closed
# under composition, and then identified again from its element orders.

from hypermoduli.fields import cyclotomic_field, gf_make
from hypermoduli.moebius import (GroupLabel, centralizer, cyclic, dihedral, identify,
                                 normalizer, standard_group)

F4 = cyclotomic_field(4)

# %% characteristic zero
for label, F in [(cyclic(5), cyclotomic_field(5)), (dihedral(3), cyclotomic_field(6)),
                 (GroupLabel("V4"), F4), (GroupLabel("A4"), F4), (GroupLabel("S4"), F4),
                 (GroupLabel("A5"), cyclotomic_field(20))]:
    G = standard_group(label, F)
    print(f"{str(label):6s} order {G.order:3d}  identified as {identify(G)}  "
          f"element orders {G.order_counts()}")

# %% normalizers: the Klein group sits inside the octahedral group
V4 = standard_group(GroupLabel("V4"), F4)
N = normalizer(V4)
print("N(V4) has order", N.order, "and is", identify(N))
print("Z(V4) = V4:", centralizer(V4) == V4)

# a cyclic group has an infinite normalizer, returned as a family
family = normalizer(standard_group(cyclic(5), cyclotomic_field(5)))
print("N(C5) is the", family.kind, "family {alpha x, alpha/x}")

# %% positive characteristic: PSL2(F_3) inside PGL2(F_9)
F9 = gf_make(3, 2)
P = standard_group(GroupLabel("PSL2", q=3), F9)
print("PSL2(F_3):", P.order, "elements; normalizer", identify(normalizer(P)))
