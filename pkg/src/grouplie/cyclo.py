"""Exact arithmetic in cyclotomic fields Q(zeta_m).

A scalar is a rational vector over the power basis 1, z, ..., z^(d-1) with
z = exp(2*pi*i/m) and d = deg Phi_m = phi(m).  Every result is reduced
through the m-th cyclotomic polynomial, so the stored form is canonical:
equality and zero tests are plain tuple comparisons.

Coefficients are kept as native ints whenever they are integral (the
overwhelmingly common case) and only promoted to Fraction when a division
makes them genuinely rational; int and Fraction compare and hash equal, so
canonicity is unaffected.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache

import mpmath

from .errors import ConductorMismatch, DivisionByZero


def _norm(q):
    """Collapse integral Fractions back to int."""
    if type(q) is int:
        return q
    return q.numerator if q.denominator == 1 else q


def _poly_div_exact(num: list[int], den: tuple[int, ...]) -> list[int]:
    """Exact quotient of integer polynomials (coefficients low-degree first)."""
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for k in range(len(q) - 1, -1, -1):
        c = num[len(den) - 1 + k]
        if c % lead:
            raise ArithmeticError("polynomial division is not exact")
        q[k] = c // lead
        if q[k]:
            for i, di in enumerate(den):
                num[i + k] -= q[k] * di
    if any(num):
        raise ArithmeticError("polynomial division left a remainder")
    return q


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Integer coefficients of the m-th cyclotomic polynomial, low degree first."""
    if m < 1:
        raise ValueError(f"conductor must be positive, got {m}")
    poly = [-1] + [0] * (m - 1) + [1]  # x^m - 1
    for d in range(1, m):
        if m % d == 0:
            poly = _poly_div_exact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def context(m: int) -> "CycloContext":
    return CycloContext(m)


class CycloContext:
    """Per-conductor data: Phi_m and the reduction table for powers of zeta."""

    def __init__(self, m: int):
        self.m = m
        phi_m = cyclotomic_polynomial(m)
        d = len(phi_m) - 1
        self.degree = d
        # x^d == -(phi[0] + ... + phi[d-1] x^(d-1)) since Phi_m is monic
        top = tuple(-c for c in phi_m[:d])
        table: list[tuple[int, ...]] = []
        cur = [0] * d
        cur[0] = 1
        for _ in range(max(m, 2 * d - 1)):
            table.append(tuple(cur))
            lead = cur[d - 1]
            nxt = [0] + cur[: d - 1]
            if lead:
                nxt = [a + lead * b for a, b in zip(nxt, top)]
            cur = nxt
        self.power_table = tuple(table)
        self._roots = tuple(cmath.exp(2j * cmath.pi * k / m) for k in range(m))
        self.zero = CycloScalar(self, (0,) * d)
        self._zeta_cache: dict[int, CycloScalar] = {}
        self.one = self.zeta(0)
        self.minus_one = self.from_fraction(-1)

    def from_fraction(self, q) -> "CycloScalar":
        q = _norm(Fraction(q))
        return CycloScalar(self, (q,) + (0,) * (self.degree - 1))

    def zeta(self, k: int) -> "CycloScalar":
        k = k % self.m
        out = self._zeta_cache.get(k)
        if out is None:
            out = CycloScalar(self, self.power_table[k])
            self._zeta_cache[k] = out
        return out

    def from_powers(self, coeffs) -> "CycloScalar":
        """Sum of a_k * zeta^k over an arbitrary power-indexed sequence."""
        out = [0] * self.degree
        for k, a in enumerate(coeffs):
            if a:
                a = _norm(a)
                for i, r in enumerate(self.power_table[k % self.m]):
                    if r:
                        out[i] += a * r
        return CycloScalar(self, tuple(_norm(x) for x in out))

    def __repr__(self):
        return f"CycloContext(m={self.m})"


class CycloScalar:
    """Element of Q(zeta_m) in canonical reduced form."""

    __slots__ = ("ctx", "coeffs", "_nz")

    def __init__(self, ctx: CycloContext, coeffs: tuple):
        self.ctx = ctx
        self.coeffs = coeffs
        self._nz = True if any(coeffs) else False

    # -- coercion ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CycloScalar):
            if other.ctx is not self.ctx and other.ctx.m != self.ctx.m:
                raise ConductorMismatch(
                    f"mixed conductors {self.ctx.m} and {other.ctx.m}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return self.ctx.from_fraction(other)
        return None

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self._nz:
            return o
        if not o._nz:
            return self
        return CycloScalar(self.ctx, tuple([a + b for a, b in zip(self.coeffs, o.coeffs)]))

    __radd__ = __add__

    def __neg__(self):
        if not self._nz:
            return self
        return CycloScalar(self.ctx, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o._nz:
            return self
        if not self._nz:
            return -o
        return CycloScalar(self.ctx, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        ctx = self.ctx
        if not self._nz or not o._nz:
            return ctx.zero
        d = ctx.degree
        acc = [0] * (2 * d - 1)
        for i, ai in enumerate(self.coeffs):
            if ai:
                for j, bj in enumerate(o.coeffs):
                    if bj:
                        acc[i + j] += ai * bj
        out = acc[:d]
        for k in range(d, 2 * d - 1):
            ck = acc[k]
            if ck:
                for i, r in enumerate(ctx.power_table[k]):
                    if r:
                        out[i] += ck * r
        return CycloScalar(ctx, tuple([_norm(x) for x in out]))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = self.ctx.one
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def inverse(self) -> "CycloScalar":
        if not self._nz:
            raise DivisionByZero(f"cannot invert 0 in Q(zeta_{self.ctx.m})")
        # Extended Euclid against Phi_m over Q[x]; the gcd is a nonzero
        # constant because Phi_m is irreducible.
        r0 = [Fraction(c) for c in cyclotomic_polynomial(self.ctx.m)]
        r1 = [Fraction(c) for c in self.coeffs]
        u0, u1 = [Fraction(0)], [Fraction(1)]
        while True:
            while r1 and not r1[-1]:
                r1.pop()
            if len(r1) == 1:
                break
            q, rem = _poly_divmod(r0, r1)
            r0, r1 = r1, rem
            u0, u1 = u1, _poly_sub(u0, _poly_mul(q, u1))
            if not any(r1):
                raise DivisionByZero("zero divisor in cyclotomic inversion")
        c = r1[0]
        inv = [_norm(ui / c) for ui in u1]
        inv += [0] * (self.ctx.degree - len(inv))
        return CycloScalar(self.ctx, tuple(inv[: self.ctx.degree]))

    def conj(self) -> "CycloScalar":
        """Ring conjugation zeta -> zeta^(m-1) (complex conjugation)."""
        ctx = self.ctx
        if not self._nz:
            return self
        out = [0] * ctx.degree
        for k, a in enumerate(self.coeffs):
            if a:
                for i, r in enumerate(ctx.power_table[(ctx.m - k) % ctx.m]):
                    if r:
                        out[i] += a * r
        return CycloScalar(ctx, tuple(_norm(x) for x in out))

    # -- predicates and conversions ---------------------------------------

    def __bool__(self):
        return self._nz

    def is_zero(self) -> bool:
        return not self._nz

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self.coeffs[0])

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ctx.from_fraction(other)
        if not isinstance(other, CycloScalar):
            return NotImplemented
        return self.ctx.m == other.ctx.m and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ctx.m, self.coeffs))

    def __complex__(self):
        roots = self.ctx._roots
        return sum((float(a) * roots[k] for k, a in enumerate(self.coeffs) if a), 0j)

    def to_complex(self, precision: int = 15) -> complex:
        """Evaluate at zeta = exp(2*pi*i/m) with |error| < 10**-precision.

        The sum is carried out in mpmath at a working precision that leaves
        ample guard digits over the requested accuracy before rounding to a
        double.
        """
        m = self.ctx.m
        with mpmath.workdps(precision + 15):
            total = mpmath.mpc(0)
            for k, a in enumerate(self.coeffs):
                if a:
                    a = Fraction(a)
                    angle = 2 * mpmath.pi * k / m
                    val = mpmath.mpf(a.numerator) / a.denominator
                    total += val * mpmath.mpc(mpmath.cos(angle), mpmath.sin(angle))
            return complex(total)

    def embed(self, target: CycloContext | int) -> "CycloScalar":
        """Image under Q(zeta_m) -> Q(zeta_M), zeta_m -> zeta_M^(M/m)."""
        ctx = target if isinstance(target, CycloContext) else context(target)
        if ctx.m % self.ctx.m:
            raise ConductorMismatch(f"{self.ctx.m} does not divide {ctx.m}")
        step = ctx.m // self.ctx.m
        out = [0] * ctx.degree
        for k, a in enumerate(self.coeffs):
            if a:
                for i, r in enumerate(ctx.power_table[(k * step) % ctx.m]):
                    if r:
                        out[i] += a * r
        return CycloScalar(ctx, tuple(_norm(x) for x in out))

    # -- serialization ------------------------------------------------------

    def padded_coeffs(self) -> list[Fraction]:
        """Canonical coefficients zero-padded to length m."""
        pad = self.ctx.m - self.ctx.degree
        return [Fraction(c) for c in self.coeffs] + [Fraction(0)] * pad

    def to_json(self) -> list[str]:
        return [str(c) for c in self.padded_coeffs()]

    @classmethod
    def from_json(cls, m: int, data: list[str]) -> "CycloScalar":
        ctx = context(m)
        return ctx.from_powers([Fraction(s) for s in data])

    def __repr__(self):
        d = self.ctx.degree
        terms = []
        for k, a in enumerate(self.coeffs):
            if a:
                if k == 0:
                    terms.append(str(a))
                else:
                    z = f"z{self.ctx.m}" if d > 1 else "1"
                    terms.append(f"{a}*{z}^{k}" if k > 1 else f"{a}*{z}")
        return " + ".join(terms) if terms else "0"


def _poly_divmod(num: list[Fraction], den: list[Fraction]):
    num = list(num)
    dd = len(den) - 1
    lead = den[-1]
    q = [Fraction(0)] * max(len(num) - dd, 1)
    for k in range(len(num) - dd - 1, -1, -1):
        c = num[dd + k] / lead
        if c:
            q[k] = c
            for i, di in enumerate(den):
                num[i + k] -= c * di
    return q, num[:dd] if dd else [Fraction(0)]


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return out


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]
