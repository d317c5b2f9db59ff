"""Dense univariate polynomials and rational functions over an exact field.

Coefficients are little-endian; the zero polynomial has no coefficients.
Moebius pullback takes the homogenisation degree explicitly so that a
branch point at infinity needs no special value.
"""

from __future__ import annotations

from typing import Sequence



class Poly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs: Sequence = ()):
        cs = [field(c) if not hasattr(c, "field") else c for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    # -- constructors ---------------------------------------------------
    @classmethod
    def x(cls, field) -> "Poly":
        return cls(field, [field.zero, field.one])

    @classmethod
    def const(cls, field, c) -> "Poly":
        return cls(field, [field(c) if not hasattr(c, "field") else c])

    @classmethod
    def monomial(cls, field, k: int, c=1) -> "Poly":
        c = field(c) if not hasattr(c, "field") else c
        return cls(field, [field.zero] * k + [c])

    @classmethod
    def from_dict(cls, field, terms: dict) -> "Poly":
        if not terms:
            return cls(field)
        top = max(terms)
        cs = [field.zero] * (top + 1)
        for k, c in terms.items():
            cs[k] = cs[k] + (field(c) if not hasattr(c, "field") else c)
        return cls(field, cs)

    # -- basic properties ------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self):
        return self.coeffs[-1]

    def coeff(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self.field.zero

    def __eq__(self, other):
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self) -> str:
        terms = [f"({c!r})*x^{k}" for k, c in enumerate(self.coeffs) if not c.is_zero()]
        return "Poly(" + " + ".join(terms or ["0"]) + ")"

    # -- ring operations ---------------------------------------------------
    def _lift(self, other):
        if isinstance(other, Poly):
            return other
        return Poly.const(self.field, other)

    def __add__(self, other):
        o = self._lift(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return Poly(self.field, [self.coeff(k) + o.coeff(k) for k in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.field, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = self.field(other) if not hasattr(other, "field") else other
            if c.is_zero():
                return Poly(self.field)
            return Poly(self.field, [a * c for a in self.coeffs])
        if self.is_zero() or other.is_zero():
            return Poly(self.field)
        zero = self.field.zero
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        b = [(j, y) for j, y in enumerate(other.coeffs) if not y.is_zero()]
        for i, x in enumerate(self.coeffs):
            if x.is_zero():
                continue
            for j, y in b:
                out[i + j] = out[i + j] + x * y
        return Poly(self.field, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result, base = Poly.const(self.field, 1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divmod(self, other: "Poly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly(self.field), self
        inv = other.lc().inverse()
        q = [self.field.zero] * (dq + 1)
        lo = len(other.coeffs) - 1
        ocs = [(j, c) for j, c in enumerate(other.coeffs[:-1]) if not c.is_zero()]
        for k in range(dq, -1, -1):
            c = rem[k + lo]
            if c.is_zero():
                continue
            c = c * inv
            q[k] = c
            for j, oc in ocs:
                rem[k + j] = rem[k + j] - c * oc
            rem[k + lo] = self.field.zero
        return Poly(self.field, q), Poly(self.field, rem[:lo])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self * self.lc().inverse()

    def derivative(self) -> "Poly":
        return Poly(self.field, [c * k for k, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def conjugate(self) -> "Poly":
        return Poly(self.field, [c.conjugate() for c in self.coeffs])

    def map_coeffs(self, fn, field=None) -> "Poly":
        return Poly(field or self.field, [fn(c) for c in self.coeffs])

    def is_real(self) -> bool:
        return all(c.is_real() for c in self.coeffs)

    def to_complex(self) -> list[complex]:
        return [c.to_complex() for c in self.coeffs]


def gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    while not b.is_zero():
        a, b = b, a % b
        if not b.is_zero():
            b = b.monic()
    return a.monic()


def is_squarefree(f: Poly) -> bool:
    if f.degree < 1:
        raise ValueError("squarefreeness needs degree >= 1")
    return gcd(f, f.derivative()).degree == 0


def _times_linear(p: list, lin0, lin1, zero) -> list:
    # p * (lin1*x + lin0); lin0/lin1 may be None to mean zero
    out = [zero] * (len(p) + 1)
    for k, c in enumerate(p):
        if c.is_zero():
            continue
        if lin0 is not None:
            out[k] = out[k] + c * lin0
        if lin1 is not None:
            out[k + 1] = out[k + 1] + c * lin1
    return out


def moebius_pullback(f: Poly, M, D: int | None = None) -> Poly:
    """(c x + d)^D * f((a x + b)/(c x + d)) for M = (a, b, c, d)."""
    a, b, c, d = M.entries if hasattr(M, "entries") else M
    n = f.degree
    if D is None:
        D = n
    if D < n:
        raise ValueError("homogenisation degree below deg f")
    F = f.field
    zero = F.zero
    if f.is_zero():
        return Poly(F)
    A0 = None if b.is_zero() else b
    A1 = None if a.is_zero() else a
    B0 = None if d.is_zero() else d
    B1 = None if c.is_zero() else c
    cs = f.coeffs
    # homogeneous Horner: P_j = A * P_{j-1} + f_{n-j} * B^j
    P = [cs[n]]
    Bpow = [F.one]
    for j in range(1, n + 1):
        Bpow = _times_linear(Bpow, B0, B1, zero)
        P = _times_linear(P, A0, A1, zero)
        fk = cs[n - j]
        if not fk.is_zero():
            for k, bc in enumerate(Bpow):
                if not bc.is_zero():
                    P[k] = P[k] + fk * bc
    for _ in range(D - n):
        P = _times_linear(P, B0, B1, zero)
    return Poly(F, P)


def proportionality(g: Poly, f: Poly):
    """Return lam with g == lam * f, or None."""
    if f.is_zero():
        return g.field.one if g.is_zero() else None
    if g.degree != f.degree and not g.is_zero():
        return None
    if g.is_zero():
        return None
    k0 = f.degree
    lam = g.coeffs[k0] / f.coeffs[k0]
    gk, fk = g.coeffs[k0], f.coeffs[k0]
    for k in range(k0):
        x, y = g.coeffs[k], f.coeffs[k]
        if x.is_zero() != y.is_zero():
            return None
        if not x.is_zero() and x * fk != gk * y:
            return None
    return lam


class RatFunc:
    """num/den with gcd(num, den) = 1 and den monic."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly | None = None, _reduced: bool = False):
        if den is None:
            den = Poly.const(num.field, 1)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if not _reduced:
            if num.is_zero():
                den = Poly.const(num.field, 1)
            else:
                g = gcd(num, den)
                if g.degree > 0:
                    num, den = num // g, den // g
            lc = den.lc()
            if not lc.is_one():
                inv = lc.inverse()
                num, den = num * inv, den * inv
        self.num = num
        self.den = den

    @property
    def field(self):
        return self.num.field

    @property
    def degree(self) -> int:
        """Degree as a map P^1 -> P^1."""
        return max(self.num.degree, self.den.degree)

    def __eq__(self, other):
        return isinstance(other, RatFunc) and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RatFunc({self.num!r} / {self.den!r})"

    def _lift(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, Poly):
            return RatFunc(other)
        return RatFunc(Poly.const(self.field, other))

    def __add__(self, other):
        o = self._lift(other)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return RatFunc(self.den, self.num) ** (-k)
        return RatFunc(self.num ** k, self.den ** k, _reduced=True) if k else RatFunc(Poly.const(self.field, 1))

    def __call__(self, x):
        """Evaluate at a field element; returns None at a pole."""
        dv = self.den(x)
        if dv.is_zero():
            return None
        return self.num(x) / dv

    def value_at_infinity(self):
        """Value at x = infinity, or None for a pole there."""
        if self.num.degree > self.den.degree:
            return None
        if self.num.degree < self.den.degree:
            return self.field.zero
        return self.num.lc() / self.den.lc()

    def moebius_apply(self, M) -> "RatFunc":
        """(alpha*R + beta)/(gamma*R + delta) for M = (alpha, beta, gamma, delta)."""
        al, be, ga, de = M.entries if hasattr(M, "entries") else M
        return RatFunc(self.num * al + self.den * be, self.num * ga + self.den * de)


def ratfunc_compose(R: RatFunc, M) -> RatFunc:
    """R((a x + b)/(c x + d))."""
    D = max(R.num.degree, R.den.degree)
    num = moebius_pullback(R.num, M, D) if not R.num.is_zero() else R.num
    den = moebius_pullback(R.den, M, D)
    return RatFunc(num, den)


def ratfunc_substitute(R: RatFunc, S: RatFunc) -> RatFunc:
    """R(S(x)) for rational functions R, S."""
    D = max(R.num.degree, R.den.degree)
    F = R.field

    def homog(p: Poly):
        # sum p_k S.num^k S.den^(D-k)
        total = Poly(F)
        for k, c in enumerate(p.coeffs):
            if not c.is_zero():
                total = total + (S.num ** k) * (S.den ** (D - k)) * c
        return total

    return RatFunc(homog(R.num), homog(R.den))


__all__ = [
    "Poly", "RatFunc", "gcd", "is_squarefree", "moebius_pullback", "proportionality",
    "ratfunc_compose", "ratfunc_substitute",
]
