"""Finite fields GF(p^k) of odd characteristic, with subfield structure,
norm/trace, and the character groups of the multiplicative and norm-one
subgroups.  Everything is table-based: these are desk-scale fields (at most
a few thousand elements), and determinism matters more than asymptotics.

Elements are represented as int indices into the lexicographic enumeration
of coefficient tuples (c0,...,c_{k-1}), c0 compared first.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from math import gcd as _gcd

from .cyclo import Cyclotomic, root_of_unity


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# -- polynomial helpers over GF(p), coefficient lists low-to-high ------


def _poly_mod(poly: list[int], mod: list[int], p: int) -> list[int]:
    poly = [c % p for c in poly]
    dm = len(mod) - 1
    for i in range(len(poly) - 1, dm - 1, -1):
        c = poly[i]
        if c:
            for j in range(dm + 1):
                poly[i - dm + j] = (poly[i - dm + j] - c * mod[j]) % p
    out = poly[:dm]
    return out + [0] * (dm - len(out))


def _poly_mulmod(a: list[int], b: list[int], mod: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _poly_mod(out, mod, p)


def _poly_powmod(a: list[int], e: int, mod: list[int], p: int) -> list[int]:
    result = _poly_mod([1], mod, p)
    base = _poly_mod(list(a), mod, p)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, mod, p)
        base = _poly_mulmod(base, base, mod, p)
        e >>= 1
    return result


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    def trim(u):
        u = list(u)
        while u and u[-1] % p == 0:
            u.pop()
        return u

    a, b = trim(a), trim(b)
    while b:
        inv_lead = pow(b[-1], p - 2, p)
        r = list(a)
        while len(r) >= len(b):
            c = (r[-1] * inv_lead) % p
            shift = len(r) - len(b)
            for i, bc in enumerate(b):
                r[shift + i] = (r[shift + i] - c * bc) % p
            r = trim(r)
            if not r:
                break
        a, b = b, r
    return a


def _is_irreducible(poly: list[int], p: int) -> bool:
    # f of degree k is irreducible iff x^(p^k) = x mod f and
    # gcd(x^(p^(k/l)) - x, f) = 1 for every prime l dividing k.
    k = len(poly) - 1
    if k == 1:
        return True
    x = [0, 1]
    xq = _poly_powmod(x, p**k, poly, p)
    if _poly_mod(list(x), poly, p) != xq:
        return False
    for ell in range(2, k + 1):
        if k % ell == 0 and _is_prime(ell):
            xe = _poly_powmod(x, p ** (k // ell), poly, p)
            diff = [(a - b) % p for a, b in zip(xe, _poly_mod(list(x), poly, p))]
            g = _poly_gcd(diff, list(poly), p)
            if len(g) != 1:
                return False
    return True


class FField:
    """GF(p^k) with flat arithmetic tables and a fixed generator."""

    def __init__(self, p: int, k: int):
        if not _is_prime(p):
            raise ValueError("p must be prime")
        if p == 2:
            raise ValueError("odd characteristic only")
        if k < 1:
            raise ValueError("k must be a positive integer")
        if p**k > 4096:
            raise ValueError("field too large for table-based arithmetic")
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = self._smallest_irreducible(p, k)
        self._tuples = [t for t in product(range(p), repeat=k)]
        self._index = {t: i for i, t in enumerate(self._tuples)}
        self.zero = self._index[(0,) * k]
        self.one = self._index[(1,) + (0,) * (k - 1)]
        self._build_tables()
        self.generator = self._find_generator()
        self._build_dlog()
        self._embeddings: dict[tuple[int, int], list[int]] = {}

    @staticmethod
    def _smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
        # Lexicographically smallest monic irreducible, coefficients
        # (c0,...,c_{k-1}) compared low-to-high degree first.
        for coeffs in product(range(p), repeat=k):
            poly = list(coeffs) + [1]
            if _is_irreducible(poly, p):
                return tuple(poly)
        raise AssertionError("no irreducible polynomial found")

    def _build_tables(self):
        q, p, k = self.q, self.p, self.k
        mod = list(self.modulus)
        self._add = [[0] * q for _ in range(q)]
        self._mul = [[0] * q for _ in range(q)]
        self._neg = [0] * q
        for i, ti in enumerate(self._tuples):
            self._neg[i] = self._index[tuple((-c) % p for c in ti)]
            for j, tj in enumerate(self._tuples):
                if j < i:
                    self._add[i][j] = self._add[j][i]
                    self._mul[i][j] = self._mul[j][i]
                    continue
                s = tuple((a + b) % p for a, b in zip(ti, tj))
                self._add[i][j] = self._index[s]
                prod_poly = _poly_mulmod(list(ti), list(tj), mod, p)
                self._mul[i][j] = self._index[tuple(prod_poly[:k])]

    def _find_generator(self) -> int:
        target = self.q - 1
        for x in range(self.q):
            if x == self.zero:
                continue
            e, y = 1, x
            while y != self.one:
                y = self._mul[y][x]
                e += 1
            if e == target:
                return x
        raise AssertionError("no generator found")

    def _build_dlog(self):
        self._dlog = [None] * self.q
        self._gpow = [self.one]
        x = self.one
        self._dlog[self.one] = 0
        for j in range(1, self.q - 1):
            x = self._mul[x][self.generator]
            self._dlog[x] = j
            self._gpow.append(x)

    # -- arithmetic ---------------------------------------------------

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def sub(self, a: int, b: int) -> int:
        return self._add[a][self._neg[b]]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def inv(self, a: int) -> int:
        if a == self.zero:
            raise ZeroDivisionError("division by zero")
        return self._gpow[(-self._dlog[a]) % (self.q - 1)]

    def pow(self, a: int, e: int) -> int:
        if a == self.zero:
            if e < 0:
                raise ZeroDivisionError("division by zero")
            return self.one if e == 0 else self.zero
        return self._gpow[(self._dlog[a] * e) % (self.q - 1)]

    def dlog(self, a: int) -> int:
        if a == self.zero:
            raise ValueError("dlog of zero")
        return self._dlog[a]

    def scalar(self, c: int) -> int:
        """The element representing the integer c mod p."""
        return self._index[(c % self.p,) + (0,) * (self.k - 1)]

    def frobenius(self, a: int, times: int = 1) -> int:
        return self.pow(a, self.p**times) if a != self.zero else self.zero

    def elements(self) -> range:
        return range(self.q)

    def nonzero(self):
        return (x for x in range(self.q) if x != self.zero)

    def element_order(self, a: int) -> int:
        if a == self.zero:
            raise ValueError("zero has no multiplicative order")
        return (self.q - 1) // _gcd(self._dlog[a], self.q - 1)

    def coeffs(self, a: int) -> tuple[int, ...]:
        return self._tuples[a]

    def from_coeffs(self, coeffs) -> int:
        t = tuple(c % self.p for c in coeffs)
        if len(t) != self.k:
            raise ValueError("expected %d coefficients" % self.k)
        return self._index[t]

    def serialize_element(self, a: int) -> str:
        return "[%s]" % ",".join(str(c) for c in self._tuples[a])

    def smallest_nonsquare(self) -> int:
        squares = {self.mul(x, x) for x in self.nonzero()}
        for x in self.nonzero():
            if x not in squares:
                return x
        raise AssertionError("every element is a square")

    # -- subfield structure -------------------------------------------

    def is_subfield(self, sub: "FField") -> bool:
        return sub.p == self.p and self.k % sub.k == 0

    def embedding(self, sub: "FField") -> list[int]:
        """The fixed embedding of sub into this field, as an index map."""
        if not self.is_subfield(sub):
            raise ValueError("not a subfield pair")
        key = (sub.p, sub.k)
        if key not in self._embeddings:
            root = None
            for x in range(self.q):
                acc = self.zero
                for c in reversed(sub.modulus):
                    acc = self.add(self.mul(acc, x), self.scalar(c))
                if acc == self.zero:
                    root = x
                    break
            if root is None:
                raise AssertionError("subfield modulus has no root")
            table = []
            for s in range(sub.q):
                acc = self.zero
                for c in reversed(sub.coeffs(s)):
                    acc = self.add(self.mul(acc, root), self.scalar(c))
                table.append(acc)
            self._embeddings[key] = table
        return self._embeddings[key]

    def retract(self, a: int, sub: "FField") -> int:
        """Inverse of the embedding on its image; errors off the image."""
        table = self.embedding(sub)
        try:
            return table.index(a)
        except ValueError:
            raise ValueError("element does not lie in the subfield") from None

    def __repr__(self) -> str:
        return "GF(%d^%d)" % (self.p, self.k) if self.k > 1 else "GF(%d)" % self.p


@lru_cache(maxsize=None)
def make_field(p: int, k: int = 1) -> FField:
    """The canonical GF(p^k); instances are cached, so identity is stable."""
    return FField(p, k)


def norm(field: FField, x: int, sub: FField) -> int:
    """Product of the Frobenius orbit of x over sub; lands in sub."""
    if not field.is_subfield(sub):
        raise ValueError("not a subfield pair")
    steps = field.k // sub.k
    acc = field.one
    y = x
    for _ in range(steps):
        acc = field.mul(acc, y)
        y = field.frobenius(y, sub.k)
    return field.retract(acc, sub)


def trace(field: FField, x: int, sub: FField) -> int:
    """Sum of the Frobenius orbit of x over sub; lands in sub."""
    if not field.is_subfield(sub):
        raise ValueError("not a subfield pair")
    steps = field.k // sub.k
    acc = field.zero
    y = x
    for _ in range(steps):
        acc = field.add(acc, y)
        y = field.frobenius(y, sub.k)
    return field.retract(acc, sub)


def _require_quadratic(field: FField, sub: FField):
    if not (field.is_subfield(sub) and field.k == 2 * sub.k):
        raise ValueError("expected a quadratic extension pair")


def norm_one_generator(field: FField, sub: FField) -> int:
    """The fixed generator g^(q-1) of the norm-one subgroup."""
    _require_quadratic(field, sub)
    return field.pow(field.generator, sub.q - 1)


def norm_one_subgroup(field: FField, sub: FField) -> list[int]:
    """The q+1 norm-one elements, cyclically ordered by the fixed generator."""
    u = norm_one_generator(field, sub)
    out = [field.one]
    x = u
    while x != field.one:
        out.append(x)
        x = field.mul(x, u)
    if len(out) != sub.q + 1:
        raise AssertionError("norm-one subgroup has wrong order")
    return out


class MultChar:
    """Character of GF(p^k)^x: chi(g^j) = zeta_{q-1}^{t j} on the fixed generator g."""

    def __init__(self, field: FField, t: int):
        self.field = field
        self.t = t % (field.q - 1)

    def __call__(self, x: int) -> Cyclotomic:
        if x == self.field.zero:
            raise ValueError("character undefined at zero")
        return root_of_unity(self.field.q - 1, self.t * self.field.dlog(x))

    def __eq__(self, other):
        return (
            isinstance(other, MultChar)
            and other.field is self.field
            and other.t == self.t
        )

    def __hash__(self):
        return hash((id(self.field), self.t))

    def __mul__(self, other: "MultChar") -> "MultChar":
        if other.field is not self.field:
            raise ValueError("characters live on different groups")
        return MultChar(self.field, self.t + other.t)

    def inverse(self) -> "MultChar":
        return MultChar(self.field, -self.t)

    def order(self) -> int:
        n = self.field.q - 1
        return n // _gcd(self.t, n)

    def galois_twist(self) -> "MultChar":
        """Precomposition with the quadratic-pair Frobenius x -> x^q."""
        if self.field.k % 2 != 0:
            raise ValueError("galois twist needs a quadratic pair")
        q = self.field.p ** (self.field.k // 2)
        return MultChar(self.field, self.t * q)

    def is_regular(self) -> bool:
        """Regular = moved by the quadratic-pair Frobenius twist."""
        if self.field.k % 2 != 0:
            raise ValueError("regularity needs a quadratic pair")
        q = self.field.p ** (self.field.k // 2)
        return self.t % (q + 1) != 0

    def restrict_norm_one(self, sub: FField) -> "NormOneChar":
        _require_quadratic(self.field, sub)
        return NormOneChar(self.field, sub, self.t)

    def restrict_subfield(self, sub: FField) -> "MultChar":
        """The character of sub^x obtained by precomposing with the embedding."""
        if not self.field.is_subfield(sub):
            raise ValueError("not a subfield pair")
        e = self.field.dlog(self.field.embedding(sub)[sub.generator])
        m = sub.q - 1
        s = (self.t * e * m) // (self.field.q - 1)
        return MultChar(sub, s)

    def extends(self, theta: "NormOneChar") -> bool:
        """Whether this character restricts to theta on the norm-one subgroup."""
        _require_quadratic(self.field, theta.sub)
        return self.t % (theta.sub.q + 1) == theta.s

    def serialize(self) -> str:
        return "(%s,%d)" % (self.field.serialize_element(self.field.generator), self.t)

    def __repr__(self):
        return "MultChar(%r, t=%d)" % (self.field, self.t)


class NormOneChar:
    """Character of the norm-one subgroup of a quadratic pair, on the fixed
    generator u = g^(q-1): theta(u^m) = zeta_{q+1}^{s m}."""

    def __init__(self, field: FField, sub: FField, s: int):
        _require_quadratic(field, sub)
        self.field = field
        self.sub = sub
        self.s = s % (sub.q + 1)

    def _log_u(self, x: int) -> int:
        d = self.field.dlog(x)
        step = self.sub.q - 1
        if d % step != 0:
            raise ValueError("element is not norm-one")
        return d // step

    def __call__(self, x: int) -> Cyclotomic:
        return root_of_unity(self.sub.q + 1, self.s * self._log_u(x))

    def __eq__(self, other):
        return (
            isinstance(other, NormOneChar)
            and other.field is self.field
            and other.sub is self.sub
            and other.s == self.s
        )

    def __hash__(self):
        return hash((id(self.field), id(self.sub), self.s))

    def __mul__(self, other: "NormOneChar") -> "NormOneChar":
        if other.field is not self.field or other.sub is not self.sub:
            raise ValueError("characters live on different groups")
        return NormOneChar(self.field, self.sub, self.s + other.s)

    def inverse(self) -> "NormOneChar":
        return NormOneChar(self.field, self.sub, -self.s)

    def order(self) -> int:
        n = self.sub.q + 1
        return n // _gcd(self.s, n)

    def is_regular(self) -> bool:
        """Regular = not fixed by inversion, i.e. theta^2 != 1."""
        return (2 * self.s) % (self.sub.q + 1) != 0

    def serialize(self) -> str:
        u = norm_one_generator(self.field, self.sub)
        return "(%s,%d)" % (self.field.serialize_element(u), self.s)

    def __repr__(self):
        return "NormOneChar(%r/%r, s=%d)" % (self.field, self.sub, self.s)


def mult_characters(field: FField) -> list[MultChar]:
    return [MultChar(field, t) for t in range(field.q - 1)]


def norm_one_characters(field: FField, sub: FField) -> list[NormOneChar]:
    _require_quadratic(field, sub)
    return [NormOneChar(field, sub, s) for s in range(sub.q + 1)]
