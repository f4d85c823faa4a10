"""Exact arithmetic in cyclotomic fields Q(zeta_n).

Elements are canonical residues modulo the n-th cyclotomic polynomial,
stored as integer coefficient vectors over a common denominator.  No
floating point is used anywhere; equality across different orders is
decided after promotion to the lcm order.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("order must be a positive integer")
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _poly_div_exact(num: list[int], den: list[int]) -> list[int]:
    # Exact division of integer polynomials; den must be monic.
    num = list(num)
    dn, dd = len(num) - 1, len(den) - 1
    quot = [0] * (dn - dd + 1)
    for k in range(dn - dd, -1, -1):
        c = num[k + dd]
        quot[k] = c
        if c:
            for i, d in enumerate(den):
                num[k + i] -= c * d
    if any(num):
        raise ArithmeticError("non-exact polynomial division")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients (c0..c_phi) of the n-th cyclotomic polynomial, monic."""
    if n == 1:
        return (-1, 1)
    poly = [0] * n + [1]
    poly[0] = -1
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_div_exact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


@lru_cache(maxsize=None)
def _reduction_table(n: int) -> tuple[tuple[int, ...], ...]:
    # Row e - phi(n) holds the residue of x^e mod Phi_n, for
    # phi(n) <= e <= max(n - 1, 2*phi(n) - 2).
    phi = euler_phi(n)
    poly = cyclotomic_polynomial(n)
    limit = max(n - 1, 2 * phi - 2)
    rows: list[tuple[int, ...]] = []
    if limit >= phi:
        rows.append(tuple(-c for c in poly[:phi]))
        for _ in range(phi + 1, limit + 1):
            prev = rows[-1]
            shifted = [0] + list(prev[: phi - 1])
            lead = prev[phi - 1]
            if lead:
                base = rows[0]
                shifted = [s + lead * b for s, b in zip(shifted, base)]
            rows.append(tuple(shifted))
    return tuple(rows)


def _reduce_dense(n: int, dense: list[int]) -> tuple[int, ...]:
    phi = euler_phi(n)
    table = _reduction_table(n)
    for e in range(len(dense) - 1, phi - 1, -1):
        c = dense[e]
        if c:
            row = table[e - phi]
            for i in range(phi):
                dense[i] += c * row[i]
        dense[e] = 0
    out = dense[:phi]
    out += [0] * (phi - len(out))
    return tuple(out)


def _normalize(den: int, num: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    if den < 0:
        den, num = -den, tuple(-c for c in num)
    g = den
    for c in num:
        g = gcd(g, c)
        if g == 1:
            break
    if g > 1:
        den //= g
        num = tuple(c // g for c in num)
    return den, num


class Cyclotomic:
    """An element of Q(zeta_n) in the power basis 1, zeta, ..., zeta^(phi(n)-1)."""

    __slots__ = ("_n", "_den", "_num")
    __hash__ = None  # cross-order equality makes hashing a trap

    def __init__(self, n: int, den: int, num: tuple[int, ...]):
        if den == 0:
            raise ZeroDivisionError("division by zero")
        if len(num) != euler_phi(n):
            raise ValueError("coefficient vector has wrong length")
        self._n = n
        self._den, self._num = _normalize(den, num)

    # -- constructors -------------------------------------------------

    @classmethod
    def rational(cls, value) -> "Cyclotomic":
        f = Fraction(value)
        return cls(1, f.denominator, (f.numerator,))

    @classmethod
    def from_coeffs(cls, n: int, coeffs) -> "Cyclotomic":
        """Build from phi(n) rational coefficients in the power basis."""
        fracs = [Fraction(c) for c in coeffs]
        if len(fracs) != euler_phi(n):
            raise ValueError("expected %d coefficients for order %d" % (euler_phi(n), n))
        den = 1
        for f in fracs:
            den = lcm(den, f.denominator)
        num = tuple(int(f * den) for f in fracs)
        return cls(n, den, num)

    # -- basic accessors ----------------------------------------------

    @property
    def order(self) -> int:
        return self._n

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self._den) for c in self._num)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self._num)

    def as_rational(self) -> Fraction | None:
        """The value as a Fraction, or None when it is irrational."""
        if any(self._num[1:]):
            return None
        return Fraction(self._num[0], self._den)

    def as_integer(self) -> int:
        r = self.as_rational()
        if r is None or r.denominator != 1:
            raise ValueError("value is not a rational integer: %s" % self)
        return r.numerator

    # -- order promotion ----------------------------------------------

    def promote(self, m: int) -> "Cyclotomic":
        """The same value expressed in Q(zeta_m); m must be a multiple of the order."""
        if m == self._n:
            return self
        if m % self._n != 0:
            raise ValueError("can only promote to a multiple of the order")
        step = m // self._n
        dense = [0] * (euler_phi(self._n) * step)
        for i, c in enumerate(self._num):
            if c:
                dense[i * step] += c
        return Cyclotomic(m, self._den, _reduce_dense(m, dense))

    def _match(self, other: "Cyclotomic") -> tuple["Cyclotomic", "Cyclotomic"]:
        if self._n == other._n:
            return self, other
        m = lcm(self._n, other._n)
        return self.promote(m), other.promote(m)

    @staticmethod
    def _coerce(value):
        if isinstance(value, Cyclotomic):
            return value
        if isinstance(value, (int, Fraction)):
            return Cyclotomic.rational(value)
        return None

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._match(o)
        den = a._den * b._den
        num = tuple(x * b._den + y * a._den for x, y in zip(a._num, b._num))
        return Cyclotomic(a._n, den, num)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self._n, self._den, tuple(-c for c in self._num))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._match(o)
        phi = len(a._num)
        dense = [0] * (2 * phi - 1 if phi > 1 else 1)
        for i, x in enumerate(a._num):
            if x:
                for j, y in enumerate(b._num):
                    if y:
                        dense[i + j] += x * y
        return Cyclotomic(a._n, a._den * b._den, _reduce_dense(a._n, dense))

    __rmul__ = __mul__

    def inv(self) -> "Cyclotomic":
        """Multiplicative inverse; raises on zero."""
        if self.is_zero():
            raise ZeroDivisionError("division by zero")
        # Extended Euclid in Q[x] against Phi_n: u*self + v*Phi = 1.
        phi_poly = [Fraction(c) for c in cyclotomic_polynomial(self._n)]
        a = list(self.coefficients)
        r0, r1 = phi_poly, a
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while True:
            while r1 and r1[-1] == 0:
                r1.pop()
            if len(r1) == 1:
                c = r1[0]
                inv_coeffs = [x / c for x in s1]
                break
            q, rem = _frac_poly_divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _frac_poly_sub(s0, _frac_poly_mul(q, s1))
        den = 1
        for f in inv_coeffs:
            den = lcm(den, f.denominator)
        dense = [int(f * den) for f in inv_coeffs]
        dense += [0] * max(0, euler_phi(self._n) - len(dense))
        return Cyclotomic(self._n, den, _reduce_dense(self._n, dense))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        base = self
        if exponent < 0:
            base = self.inv()
            exponent = -exponent
        result = Cyclotomic.rational(1)
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._match(o)
        return a._den == b._den and a._num == b._num

    # -- Galois action ------------------------------------------------

    def galois(self, k: int) -> "Cyclotomic":
        """Apply the automorphism zeta_n -> zeta_n^k; k must be coprime to n."""
        n = self._n
        if gcd(k, n) != 1:
            raise ValueError("galois exponent must be coprime to the order")
        if n <= 2:
            return self
        dense = [0] * n
        for i, c in enumerate(self._num):
            if c:
                dense[(i * k) % n] += c
        return Cyclotomic(n, self._den, _reduce_dense(n, dense))

    def conj(self) -> "Cyclotomic":
        """Complex conjugation, the automorphism zeta -> zeta^(-1)."""
        return self.galois(self._n - 1) if self._n > 2 else self

    def abs_square(self) -> "Cyclotomic":
        """|x|^2 = x * conj(x); rational and nonnegative for every element."""
        return self * self.conj()

    # -- serialization ------------------------------------------------

    def serialize(self) -> str:
        parts = []
        for c in self.coefficients:
            if c.denominator == 1:
                parts.append(str(c.numerator))
            else:
                parts.append("%d/%d" % (c.numerator, c.denominator))
        return "cyc(%d)[%s]" % (self._n, ",".join(parts))

    def __repr__(self) -> str:
        return self.serialize()

    def to_complex(self) -> complex:
        """Float shadow for debugging only; never use in assertions."""
        import cmath

        z = cmath.exp(2j * cmath.pi / self._n)
        return sum(float(c) * z**i for i, c in enumerate(self.coefficients))


def _frac_poly_divmod(a: list[Fraction], b: list[Fraction]):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    db = len(b) - 1
    lead = b[-1]
    quot = [Fraction(0)] * max(1, len(a) - db)
    while len(a) - 1 >= db and any(a):
        k = len(a) - 1 - db
        c = a[-1] / lead
        quot[k] = c
        for i in range(db + 1):
            a[k + i] -= c * b[i]
        while a and a[-1] == 0:
            a.pop()
    if not a:
        a = [Fraction(0)]
    return quot, a


def _frac_poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _frac_poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


def root_of_unity(n: int, k: int = 1) -> Cyclotomic:
    """zeta_n^k as an element of Q(zeta_n)."""
    if n < 1:
        raise ValueError("order must be a positive integer")
    k %= n
    phi = euler_phi(n)
    if k < phi and not (n == 1):
        num = [0] * phi
        num[k] = 1
        return Cyclotomic(n, 1, tuple(num))
    dense = [0] * (k + 1)
    dense[k] = 1
    return Cyclotomic(n, 1, _reduce_dense(n, dense))


ZERO = Cyclotomic.rational(0)
ONE = Cyclotomic.rational(1)

_SERIAL_RE = re.compile(r"^cyc\((\d+)\)\[(.*)\]$")


def parse(text: str) -> Cyclotomic:
    """Inverse of Cyclotomic.serialize; round-trips bit-exactly."""
    m = _SERIAL_RE.match(text.strip())
    if not m:
        raise ValueError("not a serialized cyclotomic: %r" % text)
    n = int(m.group(1))
    body = m.group(2)
    coeffs = [Fraction(part) for part in body.split(",")] if body else []
    return Cyclotomic.from_coeffs(n, coeffs)
