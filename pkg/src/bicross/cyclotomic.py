"""Exact arithmetic in cyclotomic fields Q(zeta_N).

A scalar is stored as a sparse combination sum_k c_k * zeta^k with rational
coefficients and exponents k in Z/N.  Products only add exponents mod N, so
arithmetic never leaves the representation; equality and zero tests reduce
against the N-th cyclotomic polynomial, which keeps every comparison exact.
Scalars of different orders are promoted to the lcm before combining.
"""
from __future__ import annotations

import cmath
import functools
import math
from fractions import Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _poly_trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(num: list[Fraction], den: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    num = list(num)
    q = [_ZERO] * max(0, len(num) - len(den) + 1)
    inv_lead = 1 / den[-1]
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1] * inv_lead
        q[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    return _poly_trim(q), _poly_trim(num)


@functools.lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[Fraction, ...]:
    """Coefficients of Phi_n, ascending degree."""
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    # x^n - 1 divided by the product of Phi_d over proper divisors d of n
    p: list[Fraction] = [-_ONE] + [_ZERO] * (n - 1) + [_ONE]
    for d in range(1, n):
        if n % d == 0:
            q, r = _poly_divmod(p, list(cyclotomic_polynomial(d)))
            assert not r
            p = q
    return tuple(p)


@functools.lru_cache(maxsize=None)
def _reduction_row(n: int, k: int) -> tuple[Fraction, ...]:
    """zeta_n^k written in the power basis zeta^0..zeta^{phi(n)-1}."""
    phi = len(cyclotomic_polynomial(n)) - 1
    k %= n
    if k < phi:
        row = [_ZERO] * phi
        row[k] = _ONE
        return tuple(row)
    mono = [_ZERO] * k + [_ONE]
    _, r = _poly_divmod(mono, list(cyclotomic_polynomial(n)))
    r += [_ZERO] * (phi - len(r))
    return tuple(r)


class CycScalar:
    """Immutable element of Q(zeta_N)."""

    __slots__ = ("order", "terms", "_canon")

    def __init__(self, order: int, terms: dict[int, Fraction]):
        self.order = order
        self.terms = {k % order: v for k, v in terms.items() if v}
        self._canon: tuple[Fraction, ...] | None = None

    # -- constructors ------------------------------------------------------
    @staticmethod
    def rational(q, order: int = 1) -> CycScalar:
        return CycScalar(order, {0: Fraction(q)})

    @staticmethod
    def root_of_unity(order: int, k: int) -> CycScalar:
        return CycScalar(order, {k % order: _ONE})

    @staticmethod
    def zero(order: int = 1) -> CycScalar:
        return CycScalar(order, {})

    @staticmethod
    def one(order: int = 1) -> CycScalar:
        return CycScalar(order, {0: _ONE})

    # -- representation ----------------------------------------------------
    def promote(self, order: int) -> CycScalar:
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError(f"cannot embed Q(zeta_{self.order}) in Q(zeta_{order})")
        step = order // self.order
        return CycScalar(order, {k * step: v for k, v in self.terms.items()})

    def canonical(self) -> tuple[Fraction, ...]:
        """Coordinates in the power basis of Q(zeta_N), reduced mod Phi_N."""
        if self._canon is None:
            phi = len(cyclotomic_polynomial(self.order)) - 1
            acc = [_ZERO] * phi
            for k, v in self.terms.items():
                row = _reduction_row(self.order, k)
                for i, r in enumerate(row):
                    if r:
                        acc[i] += v * r
            self._canon = tuple(acc)
        return self._canon

    def is_zero(self) -> bool:
        # a single monomial q*zeta^k vanishes iff q does; only genuine sums
        # need reduction mod the cyclotomic polynomial
        if len(self.terms) <= 1:
            return not any(self.terms.values())
        return not any(self.canonical())

    def is_one(self) -> bool:
        c = self.canonical()
        return c[0] == 1 and not any(c[1:])

    def as_monomial(self) -> tuple[Fraction, int] | None:
        """Return (q, k) with self == q * zeta^k, or None if not monomial."""
        if not self.terms:
            return (_ZERO, 0)
        if len(self.terms) == 1:
            (k, v), = self.terms.items()
            return (v, k)
        # a reduced sum may still be a monomial in disguise; check power basis
        c = self.canonical()
        nz = [i for i, v in enumerate(c) if v]
        if len(nz) == 1:
            return (c[nz[0]], nz[0])
        return None

    # -- arithmetic --------------------------------------------------------
    def _pair(self, other) -> tuple[CycScalar, CycScalar]:
        if isinstance(other, (int, Fraction)):
            other = CycScalar.rational(other)
        if not isinstance(other, CycScalar):
            return NotImplemented, NotImplemented  # type: ignore[return-value]
        if self.order == other.order:
            return self, other
        n = math.lcm(self.order, other.order)
        return self.promote(n), other.promote(n)

    def __add__(self, other):
        a, b = self._pair(other)
        if a is NotImplemented:
            return NotImplemented
        terms = dict(a.terms)
        for k, v in b.terms.items():
            s = terms.get(k, _ZERO) + v
            if s:
                terms[k] = s
            else:
                terms.pop(k, None)
        return CycScalar(a.order, terms)

    __radd__ = __add__

    def __neg__(self):
        return CycScalar(self.order, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        a, b = self._pair(other)
        if a is NotImplemented:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._pair(other)
        if a is NotImplemented:
            return NotImplemented
        if len(a.terms) == 1 and len(b.terms) == 1:
            (ka, va), = a.terms.items()
            (kb, vb), = b.terms.items()
            return CycScalar(a.order, {(ka + kb) % a.order: va * vb})
        out: dict[int, Fraction] = {}
        n = a.order
        for ka, va in a.terms.items():
            for kb, vb in b.terms.items():
                k = (ka + kb) % n
                s = out.get(k, _ZERO) + va * vb
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return CycScalar(n, out)

    __rmul__ = __mul__

    def inverse(self) -> CycScalar:
        """Field inverse, via extended gcd with Phi_N."""
        c = list(self.canonical())
        if not any(c):
            raise ZeroDivisionError("inverse of zero cyclotomic scalar")
        mono = self.as_monomial()
        if mono is not None:
            q, k = mono
            return CycScalar(self.order, {(-k) % self.order: 1 / q})
        phi = list(cyclotomic_polynomial(self.order))
        # extended Euclid: u*c + v*phi = gcd (a nonzero constant in a field ext)
        r0, r1 = phi, _poly_trim(c)
        s0, s1 = [_ZERO], [_ONE]
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            s = _poly_sub(s0, _poly_mul(q, s1))
            r0, r1, s0, s1 = r1, r, s1, s
        if not r1:
            raise ZeroDivisionError("scalar is a zero divisor mod Phi_N (not a field element?)")
        inv_const = 1 / r1[0]
        u = [x * inv_const for x in s1]
        _, u = _poly_divmod(u, phi)
        return CycScalar(self.order, {i: v for i, v in enumerate(u)})

    def __truediv__(self, other):
        a, b = self._pair(other)
        if a is NotImplemented:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    # -- comparisons / conversions ----------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycScalar.rational(other)
        if not isinstance(other, CycScalar):
            return NotImplemented
        a, b = self._pair(other)
        return a.canonical() == b.canonical()

    def __bool__(self):
        return not self.is_zero()

    def __complex__(self) -> complex:
        tau = 2.0 * math.pi / self.order
        return sum((complex(v) * cmath.exp(1j * tau * k) for k, v in self.terms.items()),
                   complex(0))

    def conjugate(self) -> CycScalar:
        return CycScalar(self.order, {(-k) % self.order: v for k, v in self.terms.items()})

    def __repr__(self):
        if not self.terms:
            return "Cyc(0)"
        bits = []
        for k in sorted(self.terms):
            v = self.terms[k]
            bits.append(f"{v}" if k == 0 else f"{v}*z{self.order}^{k}")
        return "Cyc(" + " + ".join(bits) + ")"

    __hash__ = None  # type: ignore[assignment]  # values compare across orders


@functools.lru_cache(maxsize=None)
def root_mono(order: int, k: int, num: int = 1, den: int = 1) -> CycScalar:
    """Interned monomial (num/den) * zeta_order^k.  Hot paths produce the same
    few root-of-unity scalars over and over; sharing them keeps the big sparse
    tables small."""
    return CycScalar(order, {k % order: Fraction(num, den)})


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return _poly_trim(out)


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = list(a) + [_ZERO] * max(0, len(b) - len(a))
    for j, y in enumerate(b):
        out[j] -= y
    return _poly_trim(out)
