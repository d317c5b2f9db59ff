import pytest
from hypothesis import given, settings, strategies as st

from hypermoduli.errors import InfiniteOrUnboundedError, NeedsExtension, UnsupportedCase
from hypermoduli.fields import cyclotomic_field, gf_make
from hypermoduli.moebius import (
    INF,
    AdditiveSubgroupSpec,
    GroupLabel,
    MoebiusMap,
    ParametricFamily,
    centralizer,
    closure,
    conjugate_into_standard,
    cyclic,
    dihedral,
    fixed_points,
    identify,
    normalizer,
    standard_group,
    three_point_map,
)

F4 = cyclotomic_field(4)
F12 = cyclotomic_field(12)


def unit_maps(F):
    vals = st.sampled_from([F(0), F(1), F(-1), F(2), F.i, F.i * 3, F(1) + F.i])
    return st.tuples(vals, vals, vals, vals).filter(
        lambda e: not (e[0] * e[3] - e[1] * e[2]).is_zero()).map(lambda e: MoebiusMap(*e))


@settings(max_examples=60, deadline=None)
@given(unit_maps(F4), unit_maps(F4), unit_maps(F4))
def test_composition_laws(A, B, C):
    assert (A * B) * C == A * (B * C)
    assert (A * A.inverse()).is_identity()
    for z in (F4(0), F4(5), F4.i * 7):
        w = B(z)
        assert (A * B)(z) == (A(w) if w is not INF else A(INF))


def test_canonical_form_and_application():
    M = MoebiusMap(F4(2), F4(4), F4(0), F4(2))
    assert M.entries == (F4(1), F4(2), F4(0), F4(1))
    inv = MoebiusMap(F4(0), F4(1), F4(1), F4(0))
    assert inv(F4(0)) is INF and inv(INF) == F4(0)
    assert inv.order() == 2


def test_three_point_map():
    pts = [F4(0), INF, F4(1)]
    dst = [F4.i, F4(2), INF]
    M = three_point_map(pts, dst, F4)
    assert [M(p) for p in pts] == dst


def test_closure_detects_infinite_order():
    with pytest.raises(InfiniteOrUnboundedError):
        closure([MoebiusMap.translation(F4(1))], bound=200)


def test_fixed_points_need_extension():
    assert fixed_points(MoebiusMap(F4(0), F4(-1), F4(1), F4(0))) == sorted(
        [F4.i, -F4.i], key=lambda z: tuple(z.coeffs))
    with pytest.raises(NeedsExtension) as info:
        fixed_points(MoebiusMap(F4(0), F4(2), F4(1), F4(0)))  # x -> 2/x fixes +-sqrt 2
    assert info.value.suggested_order is not None


# atlas ------------------------------------------------------------------------

ATLAS = (
    [(cyclic(n), cyclotomic_field(n if n > 2 else 1)) for n in range(1, 9)]
    + [(dihedral(n), cyclotomic_field(2 * n)) for n in (3, 4)]
    + [(GroupLabel("V4"), F4), (GroupLabel("A4"), F4), (GroupLabel("S4"), F4),
       (GroupLabel("A5"), cyclotomic_field(20))]
)


@pytest.mark.parametrize("label,F", ATLAS, ids=[str(lab) for lab, _ in ATLAS])
def test_standard_groups_characteristic_zero(label, F):
    G = standard_group(label, F)
    assert G.is_closed()
    assert G.order == label.order
    assert identify(G) == label


@pytest.mark.parametrize("beta,d", [(1, 1), (-1, 2)])
def test_beta_a_groups(beta, d):
    F3 = gf_make(3, 1)
    spec = AdditiveSubgroupSpec((F3.one,), F3(beta), d)
    label = GroupLabel("BetaA", d=d, a_size=3)
    G = standard_group(label, F3, spec)
    assert G.is_closed() and G.order == 3 * d
    assert identify(G) == label


@pytest.mark.parametrize("q", [3, 5])
@pytest.mark.parametrize("kind", ["PSL2", "PGL2"])
def test_linear_groups(kind, q):
    F = gf_make(q, 2)
    label = GroupLabel(kind, q=q)
    G = standard_group(label, F)
    assert G.is_closed()
    assert G.order == label.order == (q * (q * q - 1) // (2 if kind == "PSL2" else 1))
    assert identify(G) == label


# normalizers ---------------------------------------------------------------------
# reference normalizers in characteristic zero and for PSL2/PGL2

def _normalizes(Nset, G):
    return all(G.conjugate_by(U) == G for U in Nset)


@pytest.mark.parametrize("n", [3, 4])
def test_dihedral_normalizer_doubles(n):
    F = cyclotomic_field(4 * n)
    G = standard_group(dihedral(n), F)
    Nm = normalizer(G)
    assert Nm == standard_group(dihedral(2 * n), F)
    assert _normalizes(Nm, G)


@pytest.mark.parametrize("name,expected", [("V4", "S4"), ("A4", "S4"), ("S4", "S4")])
def test_polyhedral_normalizers(name, expected):
    G = standard_group(GroupLabel(name), F4)
    Nm = normalizer(G)
    assert Nm == standard_group(GroupLabel(expected), F4)
    assert _normalizes(Nm, G)


def test_icosahedral_normalizer_and_centralizer():
    F = cyclotomic_field(20)
    G = standard_group(GroupLabel("A5"), F)
    assert normalizer(G) == G
    assert centralizer(G).order == 1


def test_v4_is_self_centralizing():
    G = standard_group(GroupLabel("V4"), F4)
    assert centralizer(G) == G


def test_cyclic_normalizer_is_parametric():
    G = standard_group(cyclic(5), cyclotomic_field(5))
    Nm = normalizer(G)
    assert isinstance(Nm, ParametricFamily)
    F = cyclotomic_field(5)
    assert Nm.contains(MoebiusMap.diagonal(F(7)))
    assert Nm.contains(MoebiusMap.antidiagonal(F(3)))
    assert not Nm.contains(MoebiusMap.translation(F(1)))


@pytest.mark.parametrize("kind", ["PSL2", "PGL2"])
def test_linear_group_normalizer_is_pgl2(kind):
    F = gf_make(3, 2)
    G = standard_group(GroupLabel(kind, q=3), F)
    assert normalizer(G) == standard_group(GroupLabel("PGL2", q=3), F)


# standard position -------------------------------------------------------------

@pytest.mark.parametrize("name", ["V4", "A4", "S4"])
def test_conjugate_into_standard(name):
    G0 = standard_group(GroupLabel(name), F12)
    W = MoebiusMap(F12(2), F12.i, F12(1), F12(3))
    G = G0.conjugate_by(W)
    assert G != G0
    U, label = conjugate_into_standard(G)
    assert label == GroupLabel(name)
    assert G.conjugate_by(U) == G0


def test_conjugate_cyclic_into_diagonal():
    F = cyclotomic_field(12)
    g = MoebiusMap.diagonal(F.root_of_unity(6))
    W = MoebiusMap(F(1), F(2), F(1), F(-1))
    G = closure([g]).conjugate_by(W)
    U, label = conjugate_into_standard(G)
    assert label == cyclic(6)
    assert all(h.is_diagonal() for h in G.conjugate_by(U))


def test_unsupported_in_positive_characteristic():
    F = gf_make(3, 2)
    G = standard_group(GroupLabel("PSL2", q=3), F)
    W = MoebiusMap(F.one, F.gen, F.zero, F.one)
    moved = G.conjugate_by(W)
    if moved != G:
        with pytest.raises((UnsupportedCase, NeedsExtension)):
            conjugate_into_standard(moved)
