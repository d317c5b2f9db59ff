"""Exact field arithmetic: cyclotomic fields Q(zeta_N), finite fields GF(p^r),
and complex balls for certified numeric embeddings.

Elements of Q(zeta_N) are kept in the power basis 1, z, ..., z^(phi(N)-1)
reduced modulo the N-th cyclotomic polynomial, with a single common
denominator, so equality is structural.  The embedding is fixed once and
for all as zeta_N -> exp(2*pi*i/N).
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import mpmath

from .errors import CharTwoError, DivisibilityError, ReducibleModulusError


# ---------------------------------------------------------------------------
# integer polynomial helpers (little-endian lists of ints)
# ---------------------------------------------------------------------------

def _int_poly_divexact(num: list[int], den: list[int]) -> list[int]:
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for k in range(len(q) - 1, -1, -1):
        c = num[k + len(den) - 1]
        if c % lead:
            raise ArithmeticError("inexact integer polynomial division")
        c //= lead
        q[k] = c
        if c:
            for j, dj in enumerate(den):
                num[k + j] -= c * dj
    if any(num[: len(den) - 1]):
        raise ArithmeticError("nonzero remainder")
    return q


def _int_poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def euler_phi(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


@lru_cache(maxsize=None)
def _cyclotomic_tuple(n: int) -> tuple[int, ...]:
    if n == 1:
        return (-1, 1)
    num = [-1] + [0] * (n - 1) + [1]
    den = [1]
    for d in divisors(n)[:-1]:
        den = _int_poly_mul(den, list(_cyclotomic_tuple(d)))
    return tuple(_int_poly_divexact(num, den))


def cyclotomic_poly(n: int) -> list[int]:
    """Return Phi_n as a little-endian list of integer coefficients.

    Computed by dividing x^n - 1 by the product of Phi_d over the proper
    divisors d of n.
    """
    if n < 1:
        raise ValueError("cyclotomic order must be positive")
    return list(_cyclotomic_tuple(n))


# ---------------------------------------------------------------------------
# complex balls
# ---------------------------------------------------------------------------

class ComplexBall:
    """A disc {z : |z - center| <= radius} carried at a working precision.

    Arithmetic propagates radii and adds a rounding term of a few ulps of the
    result, so the enclosure property is preserved.
    """

    __slots__ = ("center", "radius", "prec")

    def __init__(self, center, radius=0, prec: int = 128):
        self.prec = prec
        with mpmath.workprec(prec):
            self.center = mpmath.mpc(center)
            self.radius = mpmath.mpf(radius)
            if isinstance(center, (mpmath.mpc, mpmath.mpf)) and self.center != center:
                # rounding the centre moves it by at most one ulp per component
                self.radius += mpmath.mpf(2) ** (2 - prec) * (abs(self.center) + mpmath.mpf(2) ** (-prec))

    def _ulp(self, value) -> mpmath.mpf:
        return mpmath.mpf(2) ** (3 - self.prec) * (abs(value) + mpmath.mpf(2) ** (-self.prec))

    @staticmethod
    def _coerce(x, prec):
        if isinstance(x, ComplexBall):
            return x
        return ComplexBall(x, 0, prec)

    def __add__(self, other):
        o = self._coerce(other, self.prec)
        with mpmath.workprec(self.prec):
            c = self.center + o.center
            return ComplexBall(c, self.radius + o.radius + self._ulp(c), self.prec)

    __radd__ = __add__

    def __neg__(self):
        return ComplexBall(-self.center, self.radius, self.prec)

    def __sub__(self, other):
        return self + (-self._coerce(other, self.prec))

    def __rsub__(self, other):
        return self._coerce(other, self.prec) - self

    def __mul__(self, other):
        o = self._coerce(other, self.prec)
        with mpmath.workprec(self.prec):
            c = self.center * o.center
            r = (abs(self.center) * o.radius + abs(o.center) * self.radius
                 + self.radius * o.radius + self._ulp(c))
            return ComplexBall(c, r, self.prec)

    __rmul__ = __mul__

    def inverse(self) -> "ComplexBall":
        with mpmath.workprec(self.prec):
            m = abs(self.center)
            if m <= self.radius:
                raise ZeroDivisionError("ball contains zero")
            c = 1 / self.center
            r = self.radius / (m * (m - self.radius)) + self._ulp(c)
            return ComplexBall(c, r, self.prec)

    def __truediv__(self, other):
        return self * self._coerce(other, self.prec).inverse()

    def conjugate(self) -> "ComplexBall":
        return ComplexBall(mpmath.conj(self.center), self.radius, self.prec)

    def contains(self, z, slack=0) -> bool:
        with mpmath.workprec(self.prec):
            return abs(mpmath.mpc(z) - self.center) <= self.radius + slack

    def overlaps(self, other: "ComplexBall") -> bool:
        with mpmath.workprec(max(self.prec, other.prec)):
            return abs(self.center - other.center) <= self.radius + other.radius

    def decide_sign(self) -> int:
        """Return +1 or -1 for a ball known to contain exactly one of them."""
        if self.radius < 1 and self.contains(1, slack=0) and not self.contains(-1):
            return 1
        if self.radius < 1 and self.contains(-1) and not self.contains(1):
            return -1
        raise ArithmeticError(f"ball {self!r} does not decide a sign")

    def __repr__(self) -> str:
        return f"ComplexBall({mpmath.nstr(self.center, 12)}, r={mpmath.nstr(self.radius, 3)})"


# ---------------------------------------------------------------------------
# cyclotomic fields
# ---------------------------------------------------------------------------

class CycField:
    """The cyclotomic field Q(zeta_N).  Use :func:`cyclotomic_field` to obtain
    the shared instance for a given N."""

    characteristic = 0

    def __init__(self, N: int):
        if N < 1:
            raise ValueError("cyclotomic order must be positive")
        self.N = N
        self.modulus = cyclotomic_poly(N)
        self.degree = len(self.modulus) - 1
        self._phi_terms = [(j, c) for j, c in enumerate(self.modulus[:-1]) if c]
        # zeta^k for k in [0, N) reduced to integer vectors
        powers = []
        vec = [0] * self.degree
        vec[0] = 1
        for _ in range(N):
            powers.append(tuple(vec))
            vec = self._shift(vec)
        self._powers = powers
        self.zero = CycNum(self, (0,) * self.degree, 1)
        self.one = CycNum(self, (1,) + (0,) * (self.degree - 1), 1)
        self._numeric: dict[int, list] = {}

    def _shift(self, vec: Sequence[int]) -> list[int]:
        top = vec[-1]
        out = [0] + list(vec[:-1])
        if top:
            for j, c in self._phi_terms:
                out[j] -= top * c
        return out

    def _reduce(self, conv: list[int]) -> list[int]:
        deg = self.degree
        for k in range(len(conv) - 1, deg - 1, -1):
            c = conv[k]
            if c:
                base = k - deg
                for j, p in self._phi_terms:
                    conv[base + j] -= c * p
                conv[k] = 0
        return conv[:deg] + [0] * (deg - len(conv))

    def __repr__(self) -> str:
        return f"Q(zeta_{self.N})"

    def __reduce__(self):
        return (cyclotomic_field, (self.N,))

    def __call__(self, value) -> "CycNum":
        if isinstance(value, CycNum):
            if value.field is self:
                return value
            return self.coerce(value)
        q = Fraction(value)
        return CycNum(self, (q.numerator,) + (0,) * (self.degree - 1), q.denominator)

    def from_coeffs(self, coeffs: Iterable) -> "CycNum":
        """Element from power-basis coordinates (any length; reduced mod Phi_N)."""
        fr = [Fraction(c) for c in coeffs]
        den = 1
        for c in fr:
            den = den * c.denominator // math.gcd(den, c.denominator)
        ints = [int(c * den) for c in fr]
        if len(ints) > self.degree:
            ints = self._reduce(ints)
        return CycNum(self, tuple(ints) + (0,) * (self.degree - len(ints)), den)

    def zeta_power(self, k: int) -> "CycNum":
        return CycNum(self, self._powers[k % self.N], 1)

    def root_of_unity(self, k: int, j: int = 1) -> "CycNum":
        """zeta_k^j realised as zeta_N^(j*N/k)."""
        if k < 1 or self.N % k:
            raise DivisibilityError(f"{k} does not divide {self.N}")
        return self.zeta_power(j * (self.N // k))

    @property
    def i(self) -> "CycNum":
        return self.root_of_unity(4, 1)

    def has_root_of_unity(self, k: int) -> bool:
        return self.N % k == 0

    def coerce(self, a: "CycNum") -> "CycNum":
        """Embed an element of Q(zeta_d), d | N, compatibly with the fixed embeddings."""
        d = a.field.N
        if self.N % d:
            raise DivisibilityError(f"Q(zeta_{d}) is not a subfield of Q(zeta_{self.N})")
        step = self.N // d
        acc = [0] * self.degree
        for j, c in enumerate(a.nums):
            if c:
                vec = self._powers[(j * step) % self.N]
                for t, v in enumerate(vec):
                    if v:
                        acc[t] += c * v
        return CycNum(self, tuple(acc), a.den)

    def numeric_powers(self, prec: int) -> list:
        if prec not in self._numeric:
            with mpmath.workprec(prec + 20):
                w = mpmath.expjpi(mpmath.mpf(2) / self.N)
                vals = [mpmath.mpc(1)]
                for _ in range(self.degree - 1):
                    vals.append(vals[-1] * w)
            self._numeric[prec] = vals
        return self._numeric[prec]

    def galois(self, a: "CycNum", k: int) -> "CycNum":
        """The automorphism zeta -> zeta^k (k coprime to N)."""
        acc = [0] * self.degree
        for j, c in enumerate(a.nums):
            if c:
                for t, v in enumerate(self._powers[(j * k) % self.N]):
                    if v:
                        acc[t] += c * v
        return CycNum(self, tuple(acc), a.den)


@lru_cache(maxsize=None)
def cyclotomic_field(N: int) -> CycField:
    return CycField(N)



@lru_cache(maxsize=65536)
def _invert(field: CycField, nums: tuple, den: int) -> tuple:
    # extended Euclid in Q[x] between a(x) and Phi_N
    def trim(p):
        while p and p[-1] == 0:
            p.pop()
        return p

    a = trim([Fraction(c) for c in nums])
    m = [Fraction(c) for c in field.modulus]
    r0, r1 = m, a
    s0, s1 = [], [Fraction(1)]
    while r1:
        if len(r1) == 1:
            break
        q, r = _frac_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _frac_sub(s0, _frac_mul(q, s1))
    if len(r1) != 1:
        raise ZeroDivisionError("element is not invertible")
    inv = [c / r1[0] * den for c in s1]
    return tuple(inv)


def _frac_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _frac_sub(a, b):
    n = max(len(a), len(b))
    out = [(a[k] if k < len(a) else 0) - (b[k] if k < len(b) else 0) for k in range(n)]
    while out and out[-1] == 0:
        out.pop()
    return out


def _frac_divmod(a, b):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    for k in range(len(q) - 1, -1, -1):
        c = a[k + len(b) - 1] / lead
        q[k] = c
        if c:
            for j, bj in enumerate(b):
                a[k + j] -= c * bj
    a = a[: len(b) - 1]
    while a and a[-1] == 0:
        a.pop()
    return q, a


class CycNum:
    """Element of Q(zeta_N): integer numerators over one positive denominator."""

    __slots__ = ("field", "nums", "den", "_hash")

    def __init__(self, field: CycField, nums: tuple, den: int = 1):
        if den < 0:
            nums, den = tuple(-c for c in nums), -den
        g = den
        for c in nums:
            if c:
                g = math.gcd(g, c)
                if g == 1:
                    break
        if not any(nums):
            den = 1
        elif g != 1:
            nums = tuple(c // g for c in nums)
            den //= g
        self.field = field
        self.nums = nums
        self.den = den
        self._hash = None

    # -- basic predicates -------------------------------------------------
    def is_zero(self) -> bool:
        return not any(self.nums)

    def is_one(self) -> bool:
        return self.den == 1 and self.nums[0] == 1 and not any(self.nums[1:])

    def is_rational(self) -> bool:
        return not any(self.nums[1:])

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return Fraction(self.nums[0], self.den)

    @property
    def coeffs(self) -> list[Fraction]:
        return [Fraction(c, self.den) for c in self.nums]

    # -- arithmetic ---------------------------------------------------------
    def _lift(self, other):
        if isinstance(other, CycNum):
            if other.field is not self.field:
                raise TypeError(f"mixing {self.field} and {other.field}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if self.den == o.den:
            return CycNum(self.field, tuple(x + y for x, y in zip(self.nums, o.nums)), self.den)
        d1, d2 = self.den, o.den
        return CycNum(self.field, tuple(x * d2 + y * d1 for x, y in zip(self.nums, o.nums)), d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        return CycNum(self.field, tuple(-x for x in self.nums), self.den)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return CycNum(self.field, tuple(x * other for x in self.nums), self.den)
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if o.is_rational():
            return CycNum(self.field, tuple(x * o.nums[0] for x in self.nums), self.den * o.den)
        if self.is_rational():
            return CycNum(self.field, tuple(x * self.nums[0] for x in o.nums), self.den * o.den)
        a = [(i, x) for i, x in enumerate(self.nums) if x]
        b = [(j, y) for j, y in enumerate(o.nums) if y]
        conv = [0] * (2 * self.field.degree - 1)
        for i, x in a:
            for j, y in b:
                conv[i + j] += x * y
        return CycNum(self.field, tuple(self.field._reduce(conv)), self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "CycNum":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.is_rational():
            return self.field(Fraction(self.den, self.nums[0]))
        return self.field.from_coeffs(_invert(self.field, self.nums, self.den))

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result, base = self.field.one, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, CycNum):
            return self.field is other.field and self.den == other.den and self.nums == other.nums
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self.nums[0], self.den) == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field.N, self.nums, self.den))
        return self._hash

    # -- conjugation and embedding -------------------------------------------
    def conjugate(self) -> "CycNum":
        return self.field.galois(self, self.field.N - 1)

    def is_real(self) -> bool:
        return self.conjugate() == self

    def embed(self, prec: int = 128) -> ComplexBall:
        return embed_numeric(self, prec)

    def to_complex(self) -> complex:
        c = self.embed(64).center
        return complex(c)

    def __repr__(self) -> str:
        return f"CycNum({format_cycnum(self)}, N={self.field.N})"


def conjugate(a: CycNum) -> CycNum:
    return a.conjugate()


def is_real(a: CycNum) -> bool:
    return a.is_real()


def embed_root_of_unity(F: CycField, k: int, j: int) -> CycNum:
    return F.root_of_unity(k, j)


def embed_numeric(a: CycNum, prec: int = 128) -> ComplexBall:
    """Certified complex ball around the image of ``a`` under zeta_N -> exp(2 pi i/N)."""
    if prec < 32:
        raise ValueError("precision must be at least 32 bits")
    powers = a.field.numeric_powers(prec)
    with mpmath.workprec(prec + 20):
        acc = mpmath.mpc(0)
        weight = mpmath.mpf(0)
        for c, z in zip(a.nums, powers):
            if c:
                acc += c * z
                weight += abs(c)
        acc /= a.den
        radius = (weight / a.den + 1) * mpmath.mpf(2) ** (-prec)
    return ComplexBall(acc, radius, prec)


def format_cycnum(a: CycNum) -> list[str]:
    """Textual form: one 'numerator/denominator' string per power-basis coordinate."""
    return [f"{c.numerator}/{c.denominator}" for c in a.coeffs]


def parse_cycnum(F: CycField, items: Sequence[str]) -> CycNum:
    if len(items) != F.degree:
        raise ValueError(f"expected {F.degree} coordinates, got {len(items)}")
    return F.from_coeffs(Fraction(s.strip()) for s in items)


def gaussian(F: CycField, re, im) -> CycNum:
    """re + im*i in F (requires 4 | N)."""
    return F(re) + F.i * Fraction(im)


QQ = cyclotomic_field(1)


# ---------------------------------------------------------------------------
# finite fields
# ---------------------------------------------------------------------------

def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % k for k in range(2, int(math.isqrt(n)) + 1))


def _fp_trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_mod(a, m, p):
    a = [x % p for x in a]
    inv = pow(m[-1], p - 2, p)
    for k in range(len(a) - len(m), -1, -1):
        c = a[k + len(m) - 1] * inv % p
        if c:
            for j, mj in enumerate(m):
                a[k + j] = (a[k + j] - c * mj) % p
    return _fp_trim(a[: len(m) - 1])


def _fp_mulmod(a, b, m, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _fp_mod(out, m, p)


def _fp_powmod(a, e, m, p):
    result, base = [1], _fp_mod(a, m, p)
    while e:
        if e & 1:
            result = _fp_mulmod(result, base, m, p)
        base = _fp_mulmod(base, base, m, p)
        e >>= 1
    return result


def _fp_gcd(a, b, p):
    a, b = _fp_trim([x % p for x in a]), _fp_trim([x % p for x in b])
    while b:
        a, b = b, _fp_mod(a, b, p)
    return a


def _prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def fp_is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Rabin's test for a monic polynomial over F_p."""
    m = _fp_trim([c % p for c in modulus])
    r = len(m) - 1
    if r < 1:
        return False
    if r == 1:
        return True
    if any(sum(c * pow(x, k, p) for k, c in enumerate(m)) % p == 0 for x in range(p)):
        return False
    x = [0, 1]
    if _fp_powmod(x, p ** r, m, p) != _fp_mod(x, m, p):
        return False
    for ell in _prime_factors(r):
        h = _fp_powmod(x, p ** (r // ell), m, p)
        diff = _fp_trim([(h[k] if k < len(h) else 0) - (x[k] if k < 2 else 0) for k in range(max(len(h), 2))])
        if len(_fp_gcd(m, diff, p)) != 1:
            return False
    return True


class GFq:
    """The finite field F_{p^r} = F_p[x]/(modulus)."""

    def __init__(self, p: int, r: int, modulus: Sequence[int]):
        self.p = p
        self.r = r
        self.modulus = tuple(modulus)
        self.order = p ** r
        self.characteristic = p
        self.zero = GFElem(self, (0,) * r)
        self.one = GFElem(self, (1,) + (0,) * (r - 1))
        self._elements = None

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.r})"

    def __call__(self, value) -> "GFElem":
        if isinstance(value, GFElem):
            return value
        if isinstance(value, Fraction):
            return self(value.numerator) / self(value.denominator)
        return GFElem(self, (int(value) % self.p,) + (0,) * (self.r - 1))

    def from_coeffs(self, coeffs: Sequence[int]) -> "GFElem":
        red = _fp_mod(list(coeffs), list(self.modulus), self.p)
        return GFElem(self, tuple(red) + (0,) * (self.r - len(red)))

    @property
    def gen(self) -> "GFElem":
        return self.from_coeffs([0, 1])

    def elements(self) -> list["GFElem"]:
        if self._elements is None:
            out = []
            for k in range(self.order):
                digits, v = [], k
                for _ in range(self.r):
                    digits.append(v % self.p)
                    v //= self.p
                out.append(GFElem(self, tuple(digits)))
            self._elements = out
        return self._elements

    def subfield_elements(self, s: int) -> list["GFElem"]:
        """Elements of the subfield F_{p^s} (s | r)."""
        if self.r % s:
            raise DivisibilityError(f"F_{self.p}^{s} is not a subfield of {self}")
        q = self.p ** s
        return [x for x in self.elements() if x ** q == x]

    def sqrt(self, a: "GFElem"):
        for x in self.elements():
            if x * x == a:
                return x
        return None

    def __eq__(self, other):
        return isinstance(other, GFq) and (self.p, self.r, self.modulus) == (other.p, other.r, other.modulus)

    def __hash__(self):
        return hash((self.p, self.r, self.modulus))


class GFElem:
    __slots__ = ("field", "c")

    def __init__(self, field: GFq, c: tuple):
        self.field = field
        self.c = c

    def _lift(self, other):
        if isinstance(other, GFElem):
            return other
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return NotImplemented

    def is_zero(self) -> bool:
        return not any(self.c)

    def is_one(self) -> bool:
        return self == self.field.one

    def __add__(self, other):
        o = self._lift(other)
        p = self.field.p
        return GFElem(self.field, tuple((x + y) % p for x, y in zip(self.c, o.c)))

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return GFElem(self.field, tuple(-x % p for x in self.c))

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        F = self.field
        red = _fp_mulmod(_fp_trim(self.c), _fp_trim(o.c), list(F.modulus), F.p)
        return GFElem(F, tuple(red) + (0,) * (F.r - len(red)))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result, base = self.field.one, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in finite field")
        return self ** (self.field.order - 2)

    def __truediv__(self, other):
        return self * self._lift(other).inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __eq__(self, other):
        if isinstance(other, GFElem):
            return self.c == other.c and self.field == other.field
        if isinstance(other, int):
            return self == self.field(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.c)

    def conjugate(self):
        # the identity; finite-field curves carry no complex conjugation
        return self

    def frobenius(self):
        return self ** self.field.p

    def __repr__(self) -> str:
        return f"GF{self.field.order}({list(self.c)})"


def gf_make(p: int, r: int = 1, modulus: Sequence[int] | None = None) -> GFq:
    """Construct F_{p^r}.  Without a modulus, the first irreducible monic
    polynomial in lexicographic order of (c_0, ..., c_{r-1}) is used."""
    if p == 2:
        raise CharTwoError("characteristic 2 is excluded")
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if r < 1:
        raise ValueError("degree must be positive")
    if modulus is not None:
        m = [c % p for c in modulus]
        if len(m) != r + 1 or m[-1] != 1:
            raise ValueError("modulus must be monic of degree r")
        if not fp_is_irreducible(m, p):
            raise ReducibleModulusError(f"{modulus} is reducible over F_{p}")
        return GFq(p, r, m)
    for k in range(p ** r):
        cand = _lex_candidate(k, p, r)
        if fp_is_irreducible(cand, p):
            return GFq(p, r, cand)
    raise ReducibleModulusError("no irreducible polynomial found")  # unreachable


def _lex_candidate(k: int, p: int, r: int) -> list[int]:
    # k-th monic polynomial x^r + c_{r-1} x^{r-1} + ... + c_0 with
    # (c_{r-1}, ..., c_0) read as base-p digits of k, most significant first
    digits = []
    v = k
    for _ in range(r):
        digits.append(v % p)
        v //= p
    return digits + [1]
