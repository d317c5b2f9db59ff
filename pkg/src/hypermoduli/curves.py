"""Hyperelliptic curves y^2 = f(x), their branch divisors, isomorphisms and
automorphism groups.

An isomorphism X -> X' is stored as (M, lam, s) with

    (c x + d)^(2g+2) f'((a x + b)/(c x + d)) = lam * f(x),

M canonical and e = s * sqrt(lam) for the principal square root under the
fixed embedding zeta_N -> exp(2 pi i/N); the map on points is
(x, y) -> (M x, e y/(c x + d)^(g+1)).
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

import mpmath
import numpy as np

from .errors import (
    AmbiguousCandidate,
    GenusTooSmallError,
    NotSquarefreeError,
    PrecisionError,
)
from .fields import ComplexBall, CycNum, embed_numeric
from .moebius import INF, MoebiusMap, PGL2Group, closure, identify
from .polynomials import Poly, is_squarefree, moebius_pullback, proportionality
from .recognition import DEFAULT_HEIGHT, recognition_precision, recognize
from .roots import refine_roots, roots_numeric

MAX_PREC = 4096


# ---------------------------------------------------------------------------
# curves
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class HyperCurve:
    f: Poly
    label: str = ""

    @property
    def field(self):
        return self.f.field

    @property
    def N(self) -> int:
        return self.f.field.N

    @property
    def genus(self) -> int:
        return (self.f.degree + 1) // 2 - 1

    @property
    def branch_at_infinity(self) -> bool:
        return self.f.degree % 2 == 1

    @property
    def hom_degree(self) -> int:
        return 2 * self.genus + 2

    def __eq__(self, other):
        return isinstance(other, HyperCurve) and self.f == other.f

    def __hash__(self):
        return hash(self.f)

    def __repr__(self) -> str:
        return f"HyperCurve(genus={self.genus}, N={self.N}, f={self.f!r})"


def curve_new(f: Poly, N: int | None = None, label: str = "") -> HyperCurve:
    if N is not None and f.field.N != N:
        from .fields import cyclotomic_field

        f = f.map_coeffs(cyclotomic_field(N).coerce, cyclotomic_field(N))
    if f.degree < 5:
        raise GenusTooSmallError(f"deg f = {f.degree} < 5 gives genus < 2")
    if not is_squarefree(f):
        raise NotSquarefreeError("f has a repeated factor")
    return HyperCurve(f, label)


def conjugate_curve(X: HyperCurve) -> HyperCurve:
    return HyperCurve(X.f.conjugate(), (X.label + "^c") if X.label else "")


@dataclass
class BranchDivisor:
    """Certified branch balls in (real, imag) order, then infinity if present."""

    balls: list
    at_infinity: bool
    prec: int

    def __len__(self) -> int:
        return len(self.balls) + int(self.at_infinity)

    def points(self) -> list:
        return [b.center for b in self.balls] + ([INF] if self.at_infinity else [])


def branch_divisor(X: HyperCurve, prec: int = 128) -> BranchDivisor:
    p = prec
    while True:
        try:
            return BranchDivisor(roots_numeric(X.f, p), X.branch_at_infinity, p)
        except PrecisionError:
            if p >= MAX_PREC:
                raise
            p *= 2


def _refined(X: HyperCurve, B: BranchDivisor, prec: int) -> BranchDivisor:
    if prec <= B.prec:
        return B
    return BranchDivisor(refine_roots(X.f, B.balls, prec), B.at_infinity, prec)


# ---------------------------------------------------------------------------
# complex balls for e = s * sqrt(lam)
# ---------------------------------------------------------------------------

def principal_sqrt_ball(lam: CycNum, prec: int = 128) -> ComplexBall:
    with mpmath.workprec(prec + 16):
        ball = embed_numeric(lam, prec + 16)
        c = ball.center
        if lam.is_real() and c.real < 0:
            root = mpmath.mpc(0, mpmath.sqrt(-c.real))
        else:
            if abs(c.imag) <= ball.radius and c.real < 0:
                raise PrecisionError("lambda ball straddles the branch cut")
            root = mpmath.sqrt(c)
        radius = ball.radius / max(abs(root), mpmath.mpf(2) ** (-prec)) + mpmath.mpf(2) ** (-prec)
        return ComplexBall(root, radius, prec)


def _sign_of(ratio: ComplexBall) -> int:
    """Decide an exactly +-1 quantity from a ball."""
    if ratio.radius >= 1:
        raise PrecisionError("ball too wide to decide a sign")
    return 1 if ratio.center.real > 0 else -1


# ---------------------------------------------------------------------------
# isomorphisms
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class CurveIso:
    M: MoebiusMap
    lam: CycNum
    sign: int
    source: HyperCurve
    target: HyperCurve

    @property
    def g(self) -> int:
        return self.source.genus

    def e_ball(self, prec: int = 128) -> ComplexBall:
        b = principal_sqrt_ball(self.lam, prec)
        return b if self.sign > 0 else ComplexBall(-b.center, b.radius, prec)

    def key(self):
        return (self.M, self.lam, self.sign)

    def __eq__(self, other):
        return (isinstance(other, CurveIso) and self.key() == other.key()
                and self.source == other.source and self.target == other.target)

    def __hash__(self):
        return hash(self.key())

    def __repr__(self) -> str:
        return f"CurveIso(M={self.M!r}, lam={self.lam!r}, sign={self.sign:+d})"

    def is_identity(self) -> bool:
        return self.M.is_identity() and self.lam.is_one() and self.sign == 1

    def verify(self) -> bool:
        D = self.source.hom_degree
        return moebius_pullback(self.target.f, self.M, D) == self.source.f * self.lam

    def after(self, other: "CurveIso") -> "CurveIso":
        """self o other (other first): matrix M_self * M_other, e_self * e_other."""
        return _from_raw(self.M.matmul_raw(other.M), self.lam * other.lam,
                         self.e_ball(), other.e_ball(), other.source, self.target)

    def inverse(self) -> "CurveIso":
        a, b, c, d = self.M.entries
        det = self.M.det()
        g1 = self.g + 1
        lam_raw = det ** (2 * g1) / self.lam
        e = self.e_ball()
        with mpmath.workprec(e.prec + 16):
            detb = embed_numeric(det, e.prec + 16)
            num = detb
            for _ in range(g1 - 1):
                num = num * detb
            e_inv = num / e
        return _from_raw((d, -b, -c, a), lam_raw, e_inv, None, self.target, self.source)

    def conjugate(self) -> "CurveIso":
        lam = self.lam
        flip = lam.is_real() and lam.embed(64).center.real < 0
        return CurveIso(self.M.conjugate(), lam.conjugate(), -self.sign if flip else self.sign,
                        conjugate_curve(self.source), conjugate_curve(self.target))

    def order(self, bound: int = 10080) -> int:
        h = self
        for k in range(1, bound + 1):
            if h.is_identity():
                return k
            h = h.after(self)
        raise RuntimeError("isomorphism order exceeds bound")


def _from_raw(raw, lam_raw, e1: ComplexBall, e2: ComplexBall | None, source, target) -> CurveIso:
    M, kappa = MoebiusMap.from_matrix(*raw)
    g1 = source.genus + 1
    kpow = kappa ** g1
    lam = lam_raw / (kpow * kpow)
    prec = e1.prec
    with mpmath.workprec(prec + 16):
        e = e1 if e2 is None else e1 * e2
        e = e / embed_numeric(kpow, prec + 16)
        ratio = e / principal_sqrt_ball(lam, prec)
    return CurveIso(M, lam, _sign_of(ratio), source, target)


def identity_iso(X: HyperCurve) -> CurveIso:
    F = X.field
    return CurveIso(MoebiusMap.identity(F), F.one, 1, X, X)


def hyperelliptic_involution(X: HyperCurve) -> CurveIso:
    F = X.field
    return CurveIso(MoebiusMap.identity(F), F.one, -1, X, X)


def iso_from_map(M: MoebiusMap, X: HyperCurve, Y: HyperCurve) -> list[CurveIso]:
    """Both lifts of M as isomorphisms X -> Y, or [] when M is not one."""
    lam = proportionality(moebius_pullback(Y.f, M, X.hom_degree), X.f)
    if lam is None:
        return []
    return [CurveIso(M, lam, s, X, Y) for s in (1, -1)]


# -- numeric candidate search -------------------------------------------------

def _hom_np(points) -> np.ndarray:
    out = np.empty((len(points), 2), dtype=complex)
    for k, p in enumerate(points):
        out[k] = (1.0, 0.0) if p is INF else (complex(p), 1.0)
    return out / np.linalg.norm(out, axis=1)[:, None]


def _chordal_np(w: np.ndarray, v: np.ndarray) -> np.ndarray:
    # w: (..., 2) normalised, v: (m, 2) normalised -> (..., m)
    return np.abs(w[..., 0, None] * v[:, 1] - w[..., 1, None] * v[:, 0])


def _frames_np(P1, P2, P3):
    det = P3[:, 0] * P1[:, 1] - P1[:, 0] * P3[:, 1]
    al = (P2[:, 0] * P1[:, 1] - P1[:, 0] * P2[:, 1]) / det
    be = (P3[:, 0] * P2[:, 1] - P2[:, 0] * P3[:, 1]) / det
    S = np.empty((len(det), 2, 2), dtype=complex)
    S[:, 0, 0] = al * P3[:, 0]
    S[:, 0, 1] = be * P1[:, 0]
    S[:, 1, 0] = al * P3[:, 1]
    S[:, 1, 1] = be * P1[:, 1]
    return S


def _min_separation(V: np.ndarray) -> float:
    d = _chordal_np(V, V)
    np.fill_diagonal(d, np.inf)
    return float(d.min())


def candidate_triples(src_points, tgt_points, chunk: int = 4096) -> list[tuple]:
    """Indices (i, j, k) of target triples whose frame map sends the first
    three source points there and maps all source points onto target points
    (numerically, in complex128)."""
    U = _hom_np(src_points)
    V = _hom_np(tgt_points)
    n = len(V)
    tol = 0.25 * min(_min_separation(U), _min_separation(V))
    S_src = _frames_np(U[None, 0], U[None, 1], U[None, 2])[0]
    S_inv = np.linalg.inv(S_src)
    triples = np.array(list(itertools.permutations(range(n), 3)), dtype=np.int64)
    keep = []
    for s in range(0, len(triples), chunk):
        t = triples[s:s + chunk]
        S = _frames_np(V[t[:, 0]], V[t[:, 1]], V[t[:, 2]])
        M = S @ S_inv
        img = np.einsum("tab,nb->tna", M, U)
        img /= np.linalg.norm(img, axis=2)[..., None]
        dist = _chordal_np(img, V)
        best = dist.argmin(axis=2)
        ok = dist.min(axis=2).max(axis=1) < tol
        for r in np.nonzero(ok)[0]:
            if len(set(best[r].tolist())) == n:
                keep.append(tuple(int(x) for x in t[r]))
    return keep


def _hom_mp(p):
    return (mpmath.mpc(1), mpmath.mpc(0)) if p is INF else (mpmath.mpc(p), mpmath.mpc(1))


def _frame_mp(p1, p2, p3):
    u1, u2, u3 = _hom_mp(p1), _hom_mp(p2), _hom_mp(p3)
    det = u3[0] * u1[1] - u1[0] * u3[1]
    al = (u2[0] * u1[1] - u1[0] * u2[1]) / det
    be = (u3[0] * u2[1] - u2[0] * u3[1]) / det
    return [[al * u3[0], be * u1[0]], [al * u3[1], be * u1[1]]]


def _numeric_map(src3, tgt3, prec: int):
    with mpmath.workprec(prec):
        S = mpmath.matrix(_frame_mp(*src3))
        T = mpmath.matrix(_frame_mp(*tgt3))
        M = T * S ** -1
        entries = [M[0, 0], M[0, 1], M[1, 0], M[1, 1]]
        big = max(abs(e) for e in entries)
        tiny = big * mpmath.mpf(2) ** (-(prec // 2))
        lead = next(e for e in entries if abs(e) > tiny)
        return [None if abs(e) <= tiny else e / lead for e in entries]


def _chordal_mp(p, q):
    u, v = _hom_mp(p), _hom_mp(q)
    return abs(u[0] * v[1] - u[1] * v[0]) / (mpmath.sqrt(abs(u[0]) ** 2 + abs(u[1]) ** 2)
                                           * mpmath.sqrt(abs(v[0]) ** 2 + abs(v[1]) ** 2))


def _apply_mp(entries, p):
    a, b, c, d = (mpmath.mpc(0) if e is None else e for e in entries)
    if p is INF:
        return INF if c == 0 else a / c
    den = c * p + d
    return INF if den == 0 else (a * p + b) / den


def _permutes(entries, src, tgt, prec) -> bool:
    with mpmath.workprec(prec):
        tol = mpmath.mpf(2) ** (-(prec // 3))
        used = set()
        for p in src:
            img = _apply_mp(entries, p)
            dists = [_chordal_mp(img, q) for q in tgt]
            k = min(range(len(tgt)), key=lambda j: dists[j])
            if dists[k] > tol or k in used:
                return False
            used.add(k)
        return True


def _recognize_map(entries, F, height, prec):
    out = []
    for e in entries:
        if e is None:
            out.append(F.zero)
            continue
        r = recognize(e, F, height, prec)
        if r is None:
            return None
        out.append(r)
    return out


def isomorphisms(X: HyperCurve, Y: HyperCurve, prec: int = 128,
                 height: int = DEFAULT_HEIGHT) -> list[CurveIso]:
    """All isomorphisms X -> Y (both lifts of each Moebius map), sorted."""
    if X.field != Y.field:
        raise ValueError("curves must share the working field")
    if X.genus != Y.genus:
        return []
    F = X.field
    BX, BY = branch_divisor(X, prec), branch_divisor(Y, prec)
    triples = candidate_triples(BX.points(), BY.points())
    if not triples:
        return []
    rprec = max(recognition_precision(F, height), prec)
    maps: dict[MoebiusMap, CycNum] = {}
    for work in (rprec, 2 * rprec):
        pending = []
        hx, hy = _refined(X, BX, work), _refined(Y, BY, work)
        sx, sy = hx.points(), hy.points()
        for (i, j, k) in triples:
            entries = _numeric_map(sx[:3], [sy[i], sy[j], sy[k]], work)
            if not _permutes(entries, sx, sy, work):
                continue
            exact = _recognize_map(entries, F, height, work)
            if exact is None:
                pending.append((i, j, k))
                continue
            try:
                M = MoebiusMap(*exact)
            except (ValueError, StopIteration):
                pending.append((i, j, k))
                continue
            lam = proportionality(moebius_pullback(Y.f, M, X.hom_degree), X.f)
            if lam is None:
                pending.append((i, j, k))
                continue
            maps[M] = lam
        if not pending:
            break
        triples = pending
    else:
        raise AmbiguousCandidate(
            f"{len(pending)} numerically valid candidate(s) could not be made exact",
            data={"triples": pending, "prec": 2 * rprec,
                  "source_points": [str(p) for p in sx], "target_points": [str(p) for p in sy]},
        )
    out = [CurveIso(M, lam, s, X, Y) for M, lam in maps.items() for s in (1, -1)]
    return sorted(out, key=lambda phi: (phi.M.sort_key(), -phi.sign))


def reduced_aut(X: HyperCurve, prec: int = 128, height: int = DEFAULT_HEIGHT) -> PGL2Group:
    maps = {phi.M for phi in isomorphisms(X, X, prec, height)}
    G = closure(maps, field=X.field)
    if G.elements != maps:
        # never expected: the candidate set must already be a group
        raise AmbiguousCandidate("verified maps do not form a group", data=sorted(map(repr, G.elements)))
    return G


# ---------------------------------------------------------------------------
# automorphism groups
# ---------------------------------------------------------------------------

def _abelian_invariants(orders: Sequence[int]) -> list[int]:
    """Invariant factors of a finite abelian group from its element orders."""
    n = len(orders)
    primary: list[list[int]] = []
    for p in (q for q in range(2, n + 1) if n % q == 0 and all(q % r for r in range(2, q))):
        full = _p_part(n, p)
        # c[j] = log_p #{x : x^(p^j) = 1}; factors of exponent >= j number c[j] - c[j-1]
        c = [0]
        while p ** c[-1] != full:
            pj = p ** len(c)
            count = sum(1 for o in orders if pj % o == 0)
            c.append(round(mpmath.log(count, p)))
        at_least = [c[j] - c[j - 1] for j in range(1, len(c))] + [0]
        exps = [j + 1 for j in range(len(at_least) - 1) for _ in range(at_least[j] - at_least[j + 1])]
        primary.append(sorted((p ** x for x in exps), reverse=True))
    width = max((len(f) for f in primary), default=0)
    inv = []
    for k in range(width):
        v = 1
        for f in primary:
            if k < len(f):
                v *= f[k]
        inv.append(v)
    return sorted(inv)


def _p_part(n: int, p: int) -> int:
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


@dataclass
class AutGroup:
    curve: HyperCurve
    reduced: PGL2Group
    lifts: list
    iota: CurveIso

    @property
    def order(self) -> int:
        return len(self.lifts)

    def reduced_label(self):
        return identify(self.reduced)

    def is_abelian(self) -> bool:
        if not self.reduced.is_abelian():
            return False
        gens = self._lift_generators()
        return all(a.after(b) == b.after(a) for a in gens for b in gens)

    def _lift_generators(self) -> list[CurveIso]:
        by_M = {phi.M: phi for phi in self.lifts if phi.sign == 1}
        return [by_M[g] for g in self.reduced.generators()] + [self.iota]

    def element_orders(self) -> Counter:
        return Counter(phi.order() for phi in self.lifts)

    def abstract_type(self) -> str:
        if self.is_abelian():
            orders = [phi.order() for phi in self.lifts]
            inv = _abelian_invariants(orders)
            return " x ".join(f"C{k}" for k in inv) if inv else "C1"
        return f"NonAbelian({self.order})"


def aut_group(X: HyperCurve, prec: int = 128, height: int = DEFAULT_HEIGHT) -> AutGroup:
    lifts = isomorphisms(X, X, prec, height)
    maps = {phi.M for phi in lifts}
    G = PGL2Group(maps, X.field)
    if closure(maps, field=X.field).elements != maps:
        raise AmbiguousCandidate("verified maps do not form a group")
    return AutGroup(X, G, lifts, hyperelliptic_involution(X))


__all__ = [
    "HyperCurve", "curve_new", "conjugate_curve", "BranchDivisor", "branch_divisor",
    "CurveIso", "isomorphisms", "reduced_aut", "AutGroup", "aut_group", "identity_iso",
    "hyperelliptic_involution", "iso_from_map", "principal_sqrt_ball", "candidate_triples",
]
