"""Finite subgroups of PGL_2: Moebius maps, the standard atlas, closure,
recognition of the abstract type, fixed points, normalizers, centralizers.

Maps are stored in a canonical projective form (first nonzero entry of
(a, b, c, d) equal to 1) so that equality in PGL_2 is structural.  All
constructions work over both cyclotomic fields and finite fields.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

from .errors import InfiniteOrUnboundedError, NeedsExtension, UnsupportedCase
from .fields import CycField, CycNum, GFElem, GFq


class _Infinity:
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self) -> str:
        return "oo"

    def __hash__(self):
        return hash("oo")

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()


def elem_key(x):
    if x is INF:
        return (2,)
    if isinstance(x, CycNum):
        return (0, x.den, x.nums)
    return (1, x.c)


# ---------------------------------------------------------------------------
# Moebius maps
# ---------------------------------------------------------------------------

class MoebiusMap:
    """x -> (a x + b)/(c x + d), canonical up to scalars."""

    __slots__ = ("a", "b", "c", "d", "field", "_hash")

    def __init__(self, a, b, c, d, _canonical: bool = False):
        F = a.field
        if not _canonical:
            det = a * d - b * c
            if det.is_zero():
                raise ValueError("singular matrix")
            lead = next(e for e in (a, b, c, d) if not e.is_zero())
            if not lead.is_one():
                inv = lead.inverse()
                a, b, c, d = a * inv, b * inv, c * inv, d * inv
        self.a, self.b, self.c, self.d = a, b, c, d
        self.field = F
        self._hash = None

    @classmethod
    def from_matrix(cls, a, b, c, d):
        """Canonical map together with kappa such that (a,b,c,d) = kappa * canonical."""
        lead = next(e for e in (a, b, c, d) if not e.is_zero())
        m = cls(a, b, c, d)
        return m, lead

    @classmethod
    def identity(cls, F) -> "MoebiusMap":
        return cls(F.one, F.zero, F.zero, F.one, _canonical=True)

    @classmethod
    def diagonal(cls, alpha, F=None) -> "MoebiusMap":
        F = F or alpha.field
        return cls(alpha, F.zero, F.zero, F.one)

    @classmethod
    def antidiagonal(cls, alpha, F=None) -> "MoebiusMap":
        """x -> alpha / x."""
        F = F or alpha.field
        return cls(F.zero, alpha, F.one, F.zero)

    @classmethod
    def translation(cls, t, F=None) -> "MoebiusMap":
        F = F or t.field
        return cls(F.one, t, F.zero, F.one, _canonical=True)

    @property
    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def det(self):
        return self.a * self.d - self.b * self.c

    def __eq__(self, other):
        return isinstance(other, MoebiusMap) and self.entries == other.entries

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.entries)
        return self._hash

    def sort_key(self):
        return tuple(elem_key(e) for e in self.entries)

    def matmul_raw(self, other: "MoebiusMap"):
        a, b, c, d = self.entries
        e, f, g, h = other.entries
        return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def __mul__(self, other: "MoebiusMap") -> "MoebiusMap":
        """Composition: (self * other)(x) = self(other(x))."""
        return MoebiusMap(*self.matmul_raw(other))

    def inverse(self) -> "MoebiusMap":
        return MoebiusMap(self.d, -self.b, -self.c, self.a)

    def __pow__(self, k: int) -> "MoebiusMap":
        if k < 0:
            return self.inverse() ** (-k)
        result, base = MoebiusMap.identity(self.field), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_identity(self) -> bool:
        return self.b.is_zero() and self.c.is_zero() and self.d.is_one()

    def is_diagonal(self) -> bool:
        return self.b.is_zero() and self.c.is_zero()

    def is_antidiagonal(self) -> bool:
        return self.a.is_zero() and self.d.is_zero()

    def is_upper_triangular(self) -> bool:
        return self.c.is_zero()

    def conjugate(self) -> "MoebiusMap":
        # canonical form is preserved entrywise
        return MoebiusMap(*(e.conjugate() for e in self.entries), _canonical=True)

    def __call__(self, z):
        a, b, c, d = self.entries
        if z is INF:
            return INF if c.is_zero() else a / c
        den = c * z + d
        if den.is_zero():
            return INF
        return (a * z + b) / den

    def order(self, bound: int = 10080) -> int:
        g = self
        for k in range(1, bound + 1):
            if g.is_identity():
                return k
            g = g * self
        raise InfiniteOrUnboundedError("element order exceeds bound")

    def to_complex(self):
        return tuple(e.to_complex() for e in self.entries)

    def __repr__(self) -> str:
        return f"MoebiusMap({self.a!r}, {self.b!r}, {self.c!r}, {self.d!r})"


def _hvec(z, F):
    return (F.one, F.zero) if z is INF else (z, F.one)


def three_point_map(src: Sequence, dst: Sequence, F) -> MoebiusMap:
    """The unique Moebius map sending src[k] -> dst[k] (points of P^1, distinct)."""

    def frame(p1, p2, p3):
        # S: infinity -> p3, 0 -> p1, 1 -> p2
        u1, u2, u3 = _hvec(p1, F), _hvec(p2, F), _hvec(p3, F)
        det = u3[0] * u1[1] - u1[0] * u3[1]
        alpha = (u2[0] * u1[1] - u1[0] * u2[1]) / det
        beta = (u3[0] * u2[1] - u2[0] * u3[1]) / det
        return (alpha * u3[0], beta * u1[0], alpha * u3[1], beta * u1[1])

    s = frame(*src)
    t = frame(*dst)
    sa, sb, sc, sd = s
    s_inv = MoebiusMap(sd, -sb, -sc, sa)
    return MoebiusMap(*t) * s_inv


def moebius_conjugate(U: MoebiusMap, g: MoebiusMap) -> MoebiusMap:
    return U * g * U.inverse()


# ---------------------------------------------------------------------------
# groups
# ---------------------------------------------------------------------------

class PGL2Group:
    """A finite group of canonical Moebius maps."""

    def __init__(self, elements: Iterable[MoebiusMap], field):
        self.field = field
        self.elements = frozenset(elements)
        self._sorted = None
        self._gens = None

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.sorted())

    def __contains__(self, g) -> bool:
        return g in self.elements

    def __eq__(self, other):
        return isinstance(other, PGL2Group) and self.elements == other.elements

    def __hash__(self):
        return hash(self.elements)

    def __repr__(self) -> str:
        return f"PGL2Group(order={self.order}, field={self.field})"

    def sorted(self) -> list[MoebiusMap]:
        if self._sorted is None:
            self._sorted = sorted(self.elements, key=MoebiusMap.sort_key)
        return self._sorted

    def generators(self) -> list[MoebiusMap]:
        if self._gens is None:
            gens: list[MoebiusMap] = []
            current = {MoebiusMap.identity(self.field)}
            for g in sorted(self.elements, key=lambda m: (-m.order(), m.sort_key())):
                if g not in current:
                    gens.append(g)
                    current = set(closure(gens, field=self.field).elements)
                if len(current) == self.order:
                    break
            self._gens = gens
        return self._gens

    def is_closed(self) -> bool:
        return all(g * h in self.elements for g in self.elements for h in self.elements)

    def is_abelian(self) -> bool:
        gens = self.generators()
        return all(g * h == h * g for g in gens for h in gens)

    def order_counts(self) -> Counter:
        return Counter(g.order() for g in self.elements)

    def conjugate_by(self, U: MoebiusMap) -> "PGL2Group":
        Ui = U.inverse()
        return PGL2Group((U * g * Ui for g in self.elements), self.field)

    def conjugate(self) -> "PGL2Group":
        return PGL2Group((g.conjugate() for g in self.elements), self.field)

    def normalized_by(self, U: MoebiusMap) -> bool:
        Ui = U.inverse()
        return all(U * g * Ui in self.elements for g in self.generators())


def closure(gens: Iterable[MoebiusMap], bound: int = 10080, field=None) -> PGL2Group:
    """Smallest group containing ``gens`` (breadth-first products)."""
    gens = list(gens)
    if not gens and field is None:
        raise ValueError("need a generator or a field")
    F = field or gens[0].field
    ident = MoebiusMap.identity(F)
    seen = {ident}
    frontier = [ident]
    gens = [g for g in gens if not g.is_identity()]
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                p = h * g
                if p not in seen:
                    seen.add(p)
                    nxt.append(p)
                    if len(seen) > bound:
                        raise InfiniteOrUnboundedError(f"closure exceeds {bound} elements")
        frontier = nxt
    return PGL2Group(seen, F)


# ---------------------------------------------------------------------------
# labels and the standard atlas
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AdditiveSubgroupSpec:
    """A = F_p-span of ``generators`` (must contain 1), beta with beta*A = A."""

    generators: tuple
    beta: object
    d: int

    def elements(self) -> list:
        F = self.beta.field
        span = {F.zero}
        for g in self.generators:
            span = {s + g * k for s in span for k in range(F.p)}
        return sorted(span, key=elem_key)

    def validate(self):
        F = self.beta.field
        A = set(self.elements())
        if F.one not in A:
            raise ValueError("A must contain 1")
        if {self.beta * a for a in A} != A:
            raise ValueError("beta * A != A")
        if not (self.beta ** self.d).is_one() or any((self.beta ** k).is_one() for k in range(1, self.d)):
            raise ValueError("d is not the multiplicative order of beta")


@dataclass(frozen=True)
class GroupLabel:
    kind: str
    n: int | None = None
    d: int | None = None
    a_size: int | None = None
    q: int | None = None

    KINDS = ("Cn", "D2n", "V4", "A4", "S4", "A5", "BetaA", "PSL2", "PGL2", "Unknown")

    @property
    def order(self) -> int | None:
        k = self.kind
        if k == "Cn":
            return self.n
        if k == "D2n":
            return 2 * self.n
        if k == "V4":
            return 4
        if k == "A4":
            return 12
        if k == "S4":
            return 24
        if k == "A5":
            return 60
        if k == "BetaA":
            return self.d * self.a_size
        if k == "PSL2":
            return (self.q ** 3 - self.q) // 2
        if k == "PGL2":
            return self.q ** 3 - self.q
        return self.n

    def __str__(self) -> str:
        k = self.kind
        if k == "Cn":
            return f"C{self.n}"
        if k == "D2n":
            return f"D{2 * self.n}"
        if k == "BetaA":
            return f"BetaA(d={self.d},|A|={self.a_size})"
        if k in ("PSL2", "PGL2"):
            return f"{k}(F_{self.q})"
        if k == "Unknown":
            return f"Unknown(order={self.n})"
        return k


def cyclic(n: int) -> GroupLabel:
    return GroupLabel("Cn", n=n)


def dihedral(n: int) -> GroupLabel:
    """Dihedral group of order 2n."""
    return GroupLabel("D2n", n=n)


def primitive_root(F, n: int):
    """exp(2 pi i/n) in a cyclotomic field, or a deterministic element of
    exact order n in a finite field."""
    if isinstance(F, CycField):
        if F.N % n == 0:
            return F.root_of_unity(n, 1)
        if F.N % 2 == 1 and (2 * F.N) % n == 0:
            z2n = -F.zeta_power((F.N + 1) // 2)  # exp(2 pi i / 2N)
            return z2n ** ((2 * F.N) // n)
        raise NeedsExtension(f"{F} lacks a primitive {n}-th root of unity", math.lcm(F.N, n))
    if (F.order - 1) % n:
        raise NeedsExtension(f"{F} lacks a primitive {n}-th root of unity")
    for x in F.elements():
        if x.is_zero():
            continue
        if (x ** n).is_one() and all(not (x ** k).is_one() for k in range(1, n) if n % k == 0):
            return x
    raise NeedsExtension("no element of the requested order")  # unreachable


def _need_cyclotomic(F, k: int, what: str):
    if not isinstance(F, CycField):
        raise UnsupportedCase(f"{what} is built over cyclotomic fields only")
    if F.N % k:
        raise NeedsExtension(f"{what} needs zeta_{k}; {F} is too small", math.lcm(F.N, k))


def _M(*entries):
    return MoebiusMap(*entries)


def standard_group(label: GroupLabel, F, spec: AdditiveSubgroupSpec | None = None) -> PGL2Group:
    """The explicit standard-position group for ``label`` over ``F``."""
    k = label.kind
    one, zero = F.one, F.zero
    els: list[MoebiusMap] = []
    if k == "Cn":
        z = primitive_root(F, label.n)
        els = [_M(z ** r, zero, zero, one) for r in range(label.n)]
    elif k == "D2n":
        z = primitive_root(F, label.n)
        els = [_M(z ** r, zero, zero, one) for r in range(label.n)]
        els += [_M(zero, z ** r, one, zero) for r in range(label.n)]
    elif k == "V4":
        els = [_M(s, zero, zero, one) for s in (one, -one)]
        els += [_M(zero, s, one, zero) for s in (one, -one)]
    elif k == "A4":
        _need_cyclotomic(F, 4, "A4")
        i = F.i
        els = [_M(s, zero, zero, one) for s in (one, -one)]
        els += [_M(zero, s, one, zero) for s in (one, -one)]
        for nu in (1, 3):
            iv = i ** nu
            els += [_M(iv, iv, one, -one), _M(iv, -iv, one, one),
                    _M(one, iv, one, -iv), _M(-one, -iv, one, -iv)]
    elif k == "S4":
        _need_cyclotomic(F, 4, "S4")
        i = F.i
        for nu in range(4):
            els.append(_M(i ** nu, zero, zero, one))
            els.append(_M(zero, i ** nu, one, zero))
            for nu2 in range(4):
                els.append(_M(i ** nu, -(i ** (nu + nu2)), one, i ** nu2))
    elif k == "A5":
        _need_cyclotomic(F, 5, "A5")
        eps = F.root_of_unity(5, 1)
        omega = eps + eps ** 4
        omega_bar = eps ** 2 + eps ** 3
        for r in range(5):
            els.append(_M(eps ** r, zero, zero, one))
            els.append(_M(zero, eps ** r, -one, zero))
            for s in range(5):
                for w in (omega, omega_bar):
                    els.append(_M(eps ** r * w, eps ** (r - s), one, -(eps ** (-s)) * w))
    elif k == "BetaA":
        if spec is None:
            raise ValueError("BetaA needs an AdditiveSubgroupSpec")
        spec.validate()
        A = spec.elements()
        if label.d is not None and (label.d != spec.d or label.a_size != len(A)):
            raise ValueError("label does not match the additive subgroup spec")
        els = [_M(spec.beta ** kk, a, zero, one) for kk in range(spec.d) for a in A]
    elif k in ("PSL2", "PGL2"):
        if not isinstance(F, GFq):
            raise UnsupportedCase(f"{k} is built over finite fields only")
        q = label.q
        s = round(math.log(q, F.p))
        if F.p ** s != q:
            raise ValueError(f"{q} is not a power of {F.p}")
        sub = F.subfield_elements(s)
        if k == "PSL2":
            gens = [_M(zero, -one, one, zero)] + [MoebiusMap.translation(a, F) for a in sub if not a.is_zero()]
            return closure(gens, field=F)
        for a in (zero, one):
            if a.is_one():
                for b in sub:
                    for c in sub:
                        for d in sub:
                            if not (d - b * c).is_zero():
                                els.append(MoebiusMap(one, b, c, d, _canonical=True))
            else:
                for c in sub:
                    for d in sub:
                        if not c.is_zero():
                            els.append(MoebiusMap(zero, one, c, d, _canonical=True))
    else:
        raise UnsupportedCase(f"no standard group for {label}")
    return PGL2Group(els, F)


def identify(G: PGL2Group) -> GroupLabel:
    """Abstract type from the order, element-order statistics and commutativity."""
    n = G.order
    counts = G.order_counts()
    p = getattr(G.field, "characteristic", 0)
    if p and n % p == 0:
        pel = [g for g in G.elements if _is_power_of(g.order(), p)]
        pset = set(pel)
        if _is_power_of(len(pel), p) and all(g * h in pset for g in pel for h in pel):
            return GroupLabel("BetaA", d=n // len(pel), a_size=len(pel))
        for q in range(3, 200):
            if (q ** 3 - q) // 2 == n and _is_power_of(q, p):
                return GroupLabel("PSL2", q=q)
            if q ** 3 - q == n and _is_power_of(q, p):
                return GroupLabel("PGL2", q=q)
        return GroupLabel("Unknown", n=n)
    if counts.get(n):
        return cyclic(n)
    if n == 4:
        return GroupLabel("V4")
    if G.is_abelian():
        return GroupLabel("Unknown", n=n)
    if n % 2 == 0 and counts.get(n // 2) and n // 2 > 2:
        return dihedral(n // 2)
    if n == 12 and counts == Counter({1: 1, 2: 3, 3: 8}):
        return GroupLabel("A4")
    if n == 24 and counts == Counter({1: 1, 2: 9, 3: 8, 4: 6}):
        return GroupLabel("S4")
    if n == 60 and counts == Counter({1: 1, 2: 15, 3: 20, 5: 24}):
        return GroupLabel("A5")
    return GroupLabel("Unknown", n=n)


def _is_power_of(m: int, p: int) -> bool:
    while m > 1 and m % p == 0:
        m //= p
    return m == 1


# ---------------------------------------------------------------------------
# fixed points, normalizers, centralizers
# ---------------------------------------------------------------------------

def field_sqrt(a):
    F = a.field
    if isinstance(F, GFq):
        return F.sqrt(a)
    from .recognition import recognize_sqrt

    return recognize_sqrt(a)


def _suggest_order(F) -> int | None:
    if isinstance(F, CycField):
        return 2 * math.lcm(F.N, 4)
    return None


def fixed_points(M: MoebiusMap) -> list:
    """Fixed points of a nontrivial map, as field elements or INF."""
    if M.is_identity():
        raise ValueError("the identity fixes every point")
    a, b, c, d = M.entries
    if c.is_zero():
        dm = d - a
        if dm.is_zero():
            return [INF]
        return sorted([b / dm], key=elem_key) + [INF]
    disc = (d - a) * (d - a) + b * c * 4
    two_c = c * 2
    if disc.is_zero():
        return [(a - d) / two_c]
    s = field_sqrt(disc)
    if s is None:
        raise NeedsExtension(f"fixed points of {M} need sqrt({disc!r})", _suggest_order(M.field))
    return sorted([(a - d + s) / two_c, (a - d - s) / two_c], key=elem_key)


@dataclass
class ParametricFamily:
    """The infinite family {U^-1 V U : V in family(kind)}, where ``kind`` is
    'diagonal' (x -> alpha x) or 'diagonal+antidiagonal' (also x -> alpha/x)."""

    conjugator: MoebiusMap
    kind: str

    def contains(self, M: MoebiusMap) -> bool:
        V = self.conjugator * M * self.conjugator.inverse()
        if V.is_diagonal():
            return True
        return self.kind == "diagonal+antidiagonal" and V.is_antidiagonal()

    def member(self, alpha, anti: bool = False) -> MoebiusMap:
        V = MoebiusMap.antidiagonal(alpha) if anti else MoebiusMap.diagonal(alpha)
        if anti and self.kind != "diagonal+antidiagonal":
            raise ValueError("family has no antidiagonal members")
        U = self.conjugator
        return U.inverse() * V * U


def _is_cyclic(G: PGL2Group) -> bool:
    n = G.order
    return any(g.order() == n for g in G.elements)


def _cyclic_conjugator(G: PGL2Group) -> MoebiusMap:
    F = G.field
    gen = max(G.sorted(), key=lambda g: g.order())
    pts = fixed_points(gen)
    if len(pts) != 2:
        raise UnsupportedCase("cyclic group of unipotent type has an affine normalizer")
    third = _third_point(F, pts)
    return three_point_map([pts[0], pts[1], third], [F.zero, INF, F.one], F)


def _third_point(F, avoid):
    for k in range(0, 10):
        cand = F(k)
        if cand not in avoid:
            return cand
    raise RuntimeError("no free point")  # unreachable for fields of size > 11


class _FixedPointTable:
    def __init__(self, G: PGL2Group):
        self.G = G
        self.by_order: dict[int, list[MoebiusMap]] = {}
        for g in G.sorted():
            if not g.is_identity():
                self.by_order.setdefault(g.order(), []).append(g)
        self._fix: dict[int, dict] = {}

    def fixed(self, k: int):
        if k not in self._fix:
            self._fix[k] = {g: fixed_points(g) for g in self.by_order[k]}
        return self._fix[k]


def _normalizer_noncyclic(G: PGL2Group) -> PGL2Group:
    F = G.field
    table = _FixedPointTable(G)
    orders = sorted(table.by_order, reverse=True)
    usable = {}
    failure = None
    for k in orders:
        try:
            usable[k] = table.fixed(k)
        except NeedsExtension as exc:
            failure = exc
    if not usable:
        raise failure
    best = None
    for k1, fix1 in usable.items():
        pair_maps = [g for g, pts in fix1.items() if len(pts) == 2]
        if not pair_maps:
            continue
        pairs = {tuple(pts) for g, pts in fix1.items() if len(pts) == 2}
        g1 = pair_maps[0]
        p, q = fix1[g1]
        for k2, fix2 in usable.items():
            pool = sorted({pt for pts in fix2.values() for pt in pts}, key=elem_key)
            r = next((pt for pt in pool if pt not in (p, q)), None)
            if r is None:
                continue
            cost = 2 * len(pairs) * len(pool)
            if best is None or cost < best[0]:
                best = (cost, (p, q, r), sorted(pairs, key=lambda t: [elem_key(x) for x in t]), pool)
    if best is None:
        if failure is not None:
            raise failure
        raise UnsupportedCase("no usable fixed-point frame")
    _, src, pairs, pool = best
    found = set()
    for p2, q2 in pairs:
        for a, b in ((p2, q2), (q2, p2)):
            for r2 in pool:
                if r2 == a or r2 == b:
                    continue
                U = three_point_map(list(src), [a, b, r2], F)
                if U not in found and G.normalized_by(U):
                    found.add(U)
    return PGL2Group(found, F)


def normalizer(G: PGL2Group):
    """Normalizer in PGL_2 of the algebraic closure: a finite group for
    noncyclic G, a :class:`ParametricFamily` for cyclic G."""
    if G.order < 2:
        raise ValueError("normalizer needs |G| >= 2")
    if _is_cyclic(G):
        return ParametricFamily(_cyclic_conjugator(G), "diagonal+antidiagonal")
    return _normalizer_noncyclic(G)


def centralizer(G: PGL2Group):
    if G.order < 2:
        raise ValueError("centralizer needs |G| >= 2")
    if _is_cyclic(G):
        kind = "diagonal+antidiagonal" if G.order == 2 else "diagonal"
        return ParametricFamily(_cyclic_conjugator(G), kind)
    N = _normalizer_noncyclic(G)
    gens = G.generators()
    return PGL2Group((u for u in N.elements if all(u * g == g * u for g in gens)), G.field)


# ---------------------------------------------------------------------------
# conjugation into standard position
# ---------------------------------------------------------------------------

_FRAME_ORDER = {"D2n": None, "V4": 2, "A4": 2, "S4": 4, "A5": 5}


def conjugate_into_standard(G: PGL2Group, field=None):
    """Return (U, label) with U G U^-1 == standard_group(label).

    A maximal-order element g has its fixed points sent to 0 and infinity;
    the third frame point is a fixed point of an element h swapping them,
    sent to 1 (or to i for A5, whose standard involutions are -eps^r/x)."""
    F = field or G.field
    label = identify(G)
    if label.kind == "Unknown":
        raise UnsupportedCase("group is not of a recognised type")
    std = standard_group(label, F)
    if std == G:
        return MoebiusMap.identity(F), label
    if label.kind == "Cn":
        U = _cyclic_conjugator(G)
        if G.conjugate_by(U) == std:
            return U, label
        raise UnsupportedCase(f"no conjugator found for {label}")
    if label.kind not in _FRAME_ORDER:
        raise UnsupportedCase(f"conjugation into standard form for {label} is not implemented")
    k = _FRAME_ORDER[label.kind] or label.n
    target = F.i if label.kind == "A5" else F.one
    if label.kind == "A5":
        _need_cyclotomic(F, 20, "A5 conjugation")
    elements = G.sorted()
    missing = None
    for g in (e for e in elements if e.order() == k):
        try:
            pts = fixed_points(g)
        except NeedsExtension as exc:
            missing = exc
            continue
        if len(pts) != 2:
            continue
        for p, q in ((pts[0], pts[1]), (pts[1], pts[0])):
            for h in elements:
                if h.is_identity() or h(p) != q:
                    continue
                try:
                    rs = fixed_points(h)
                except NeedsExtension as exc:
                    missing = exc
                    continue
                for r in rs:
                    U = three_point_map([p, q, r], [F.zero, INF, target], F)
                    if G.conjugate_by(U) == std:
                        return U, label
    if missing is not None:
        raise missing
    raise UnsupportedCase(f"no conjugator found for {label}")


def _frame_from_fixed(g: MoebiusMap, F) -> MoebiusMap:
    pts = fixed_points(g)
    if len(pts) != 2:
        raise UnsupportedCase("element has a single fixed point")
    return three_point_map([pts[0], pts[1], _third_point(F, pts)], [F.zero, INF, F.one], F)
