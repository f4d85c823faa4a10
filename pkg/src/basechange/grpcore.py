"""Generic finite-group machinery: enumeration into index tables, conjugacy
classes, class functions, induction/restriction, and an exact character-table
oracle (class-sum eigenvector method over a large prime field, lifted to
cyclotomic integers).  Independent of any character formula it validates.
"""

from __future__ import annotations

import os
import random
from fractions import Fraction
from math import isqrt, lcm

from .cyclo import ZERO, Cyclotomic, root_of_unity

DEFAULT_MAX_GROUP = 10000
_CHECK_SEED = 3735928559
_FULL_CLOSURE_LIMIT = 1500


def max_group_order() -> int:
    """Size bound for the character-table oracle; BASECHANGE_MAX_GROUP overrides."""
    return int(os.environ.get("BASECHANGE_MAX_GROUP", DEFAULT_MAX_GROUP))


class GroupTable:
    """A finite group as sorted canonical keys plus index-level mul/inv."""

    def __init__(self, keys, mul_key, inv_key, id_key, name: str = "G", check: bool = True):
        self.name = name
        self.elements = sorted(keys)
        self.index = {k: i for i, k in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise ValueError("duplicate element keys")
        self._mul_key = mul_key
        if id_key not in self.index:
            raise ValueError("identity not in carrier")
        self.id = self.index[id_key]
        self.order = len(self.elements)
        try:
            self.inv_table = [self.index[inv_key(k)] for k in self.elements]
        except KeyError:
            raise ValueError("not closed under inversion") from None
        self._orders: list[int | None] = [None] * self.order
        self._classes_cache = None
        if check:
            self._check_axioms()

    # -- construction helpers -----------------------------------------

    @classmethod
    def from_predicate(cls, candidates, predicate, mul_key, inv_key, id_key, name="G"):
        keys = [k for k in candidates if predicate(k)]
        return cls(keys, mul_key, inv_key, id_key, name=name)

    @classmethod
    def from_generators(cls, generators, mul_key, inv_key, id_key, name="G"):
        seen = {id_key}
        frontier = [id_key]
        gens = list(generators)
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = mul_key(x, g)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return cls(seen, mul_key, inv_key, id_key, name=name)

    def _check_axioms(self):
        for i in range(self.order):
            if self.mul(self.id, i) != i or self.mul(i, self.id) != i:
                raise ValueError("identity axiom fails")
            if self.mul(i, self.inv_table[i]) != self.id:
                raise ValueError("inverse axiom fails")
        rng = random.Random(_CHECK_SEED)
        n = self.order
        if n <= _FULL_CLOSURE_LIMIT:
            for i in range(n):
                row = self._mul_key
                ei = self.elements[i]
                for j in range(n):
                    if row(ei, self.elements[j]) not in self.index:
                        raise ValueError("not closed under multiplication")
        else:
            for _ in range(6 * n):
                i, j = rng.randrange(n), rng.randrange(n)
                if self._mul_key(self.elements[i], self.elements[j]) not in self.index:
                    raise ValueError("not closed under multiplication")
        for _ in range(min(300, n * n)):
            i, j, k = rng.randrange(n), rng.randrange(n), rng.randrange(n)
            if self.mul(self.mul(i, j), k) != self.mul(i, self.mul(j, k)):
                raise ValueError("associativity spot-check fails")

    # -- index-level group operations ---------------------------------

    def mul(self, i: int, j: int) -> int:
        try:
            return self.index[self._mul_key(self.elements[i], self.elements[j])]
        except KeyError:
            raise ValueError("not closed under multiplication") from None

    def inv(self, i: int) -> int:
        return self.inv_table[i]

    def conj(self, g: int, h: int) -> int:
        """h^-1 g h."""
        return self.mul(self.mul(self.inv_table[h], g), h)

    def power(self, g: int, e: int) -> int:
        if e < 0:
            g, e = self.inv_table[g], -e
        result = self.id
        base = g
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def element_order(self, g: int) -> int:
        cached = self._orders[g]
        if cached is None:
            e, x = 1, g
            while x != self.id:
                x = self.mul(x, g)
                e += 1
            self._orders[g] = cached = e
        return cached

    def key(self, i: int):
        return self.elements[i]

    def __repr__(self):
        return "GroupTable(%s, order=%d)" % (self.name, self.order)


def enumerate_group(candidates, predicate, mul_key, inv_key, id_key, name="G") -> GroupTable:
    """Filter a finite carrier by a subgroup predicate and build the table."""
    return GroupTable.from_predicate(candidates, predicate, mul_key, inv_key, id_key, name)


class ConjClasses:
    """Conjugacy partition with deterministic class ordering."""

    def __init__(self, group: GroupTable):
        self.group = group
        n = group.order
        class_of = [-1] * n
        raw: list[tuple[int, ...]] = []
        for seed in range(n):
            if class_of[seed] >= 0:
                continue
            orbit = {seed}
            for h in range(n):
                orbit.add(group.conj(seed, h))
            cid = len(raw)
            for x in orbit:
                class_of[x] = cid
            raw.append(tuple(sorted(orbit)))
        # Deterministic order: element order, then size, then least index.
        order_key = []
        for c in raw:
            rep = c[0]
            order_key.append((group.element_order(rep), len(c), rep))
        perm = sorted(range(len(raw)), key=lambda i: order_key[i])
        self.classes = tuple(raw[i] for i in perm)
        self.representatives = tuple(c[0] for c in self.classes)
        self.sizes = tuple(len(c) for c in self.classes)
        lookup = [0] * n
        for ci, c in enumerate(self.classes):
            for x in c:
                lookup[x] = ci
        self.class_of = tuple(lookup)
        self.centralizer_orders = []
        for s in self.sizes:
            if group.order % s != 0:
                raise AssertionError("class size does not divide group order")
            self.centralizer_orders.append(group.order // s)
        self.centralizer_orders = tuple(self.centralizer_orders)
        self.rep_orders = tuple(group.element_order(r) for r in self.representatives)
        if self.rep_orders[0] != 1:
            raise AssertionError("identity class is not first")

    def __len__(self):
        return len(self.classes)

    def class_of_key(self, key) -> int:
        return self.class_of[self.group.index[key]]

    def inverse_class(self, ci: int) -> int:
        return self.class_of[self.group.inv(self.representatives[ci])]

    def power_class(self, ci: int, e: int) -> int:
        return self.class_of[self.group.power(self.representatives[ci], e)]


def conjugacy_classes(group: GroupTable) -> ConjClasses:
    if group._classes_cache is None:
        group._classes_cache = ConjClasses(group)
    return group._classes_cache


class ClassFunction:
    """One exact cyclotomic value per conjugacy class, in class order."""

    def __init__(self, classes: ConjClasses, values):
        values = tuple(
            v if isinstance(v, Cyclotomic) else Cyclotomic.rational(v) for v in values
        )
        if len(values) != len(classes):
            raise ValueError("expected one value per class")
        self.classes = classes
        self.group = classes.group
        self.values = values

    def on_class(self, ci: int) -> Cyclotomic:
        return self.values[ci]

    def on_element(self, i: int) -> Cyclotomic:
        return self.values[self.classes.class_of[i]]

    @property
    def degree(self) -> Cyclotomic:
        return self.values[self.classes.class_of[self.group.id]]

    def conj(self) -> "ClassFunction":
        return ClassFunction(self.classes, [v.conj() for v in self.values])

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        if other.classes is not self.classes:
            raise ValueError("class functions live on different groups")
        return ClassFunction(self.classes, [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other: "ClassFunction") -> "ClassFunction":
        if other.classes is not self.classes:
            raise ValueError("class functions live on different groups")
        return ClassFunction(self.classes, [a - b for a, b in zip(self.values, other.values)])

    def __mul__(self, other: "ClassFunction") -> "ClassFunction":
        if other.classes is not self.classes:
            raise ValueError("class functions live on different groups")
        return ClassFunction(self.classes, [a * b for a, b in zip(self.values, other.values)])

    def __eq__(self, other):
        return (
            isinstance(other, ClassFunction)
            and other.classes is self.classes
            and all(a == b for a, b in zip(self.values, other.values))
        )

    def serialize(self) -> tuple[str, ...]:
        return tuple(v.serialize() for v in self.values)

    def __repr__(self):
        return "ClassFunction(%s, deg=%s)" % (self.group.name, self.degree)


def trivial_character(group: GroupTable) -> ClassFunction:
    classes = conjugacy_classes(group)
    return ClassFunction(classes, [1] * len(classes))


def inner_product(phi: ClassFunction, psi: ClassFunction) -> Cyclotomic:
    """(1/|G|) sum_g phi(g) conj(psi(g)), classwise and exact."""
    if phi.group is not psi.group:
        raise ValueError("class functions live on different groups")
    total = ZERO
    for size, a, b in zip(phi.classes.sizes, phi.values, psi.values):
        total = total + a * b.conj() * size
    return total * Fraction(1, phi.group.order)


def _require_subgroup(sub: GroupTable, group: GroupTable):
    if sub.key(sub.id) != group.key(group.id):
        raise ValueError("H is not a subgroup of G (identity differs)")
    for k in sub.elements:
        if k not in group.index:
            raise ValueError("H is not a subgroup of G")
    rng = random.Random(_CHECK_SEED)
    for _ in range(min(200, sub.order * sub.order)):
        i, j = rng.randrange(sub.order), rng.randrange(sub.order)
        ki, kj = sub.elements[i], sub.elements[j]
        gk = group.elements[group.mul(group.index[ki], group.index[kj])]
        if sub.key(sub.mul(i, j)) != gk:
            raise ValueError("H multiplication disagrees with G")


def restrict(chi: ClassFunction, sub: GroupTable) -> ClassFunction:
    """Transport values of a G-class function to the classes of H <= G."""
    group = chi.group
    _require_subgroup(sub, group)
    sub_classes = conjugacy_classes(sub)
    values = []
    for rep in sub_classes.representatives:
        gi = group.index[sub.key(rep)]
        values.append(chi.on_element(gi))
    return ClassFunction(sub_classes, values)


def induce(psi: ClassFunction, group: GroupTable) -> ClassFunction:
    """Frobenius induction of a class function from H <= G up to G."""
    sub = psi.group
    _require_subgroup(sub, group)
    classes = conjugacy_classes(group)
    h_index = {k: i for i, k in enumerate(sub.elements)}
    values = []
    for rep in classes.representatives:
        total = ZERO
        for x in range(group.order):
            y = group.mul(group.mul(x, rep), group.inv(x))
            hk = group.key(y)
            hi = h_index.get(hk)
            if hi is not None:
                total = total + psi.on_element(hi)
        values.append(total * Fraction(1, sub.order))
    return ClassFunction(classes, values)


# -- modular linear algebra over F_r ----------------------------------


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _factorize(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _primitive_root(r: int) -> int:
    primes = _factorize(r - 1)
    g = 2
    while True:
        if all(pow(g, (r - 1) // p, r) != 1 for p in primes):
            return g
        g += 1


def _mat_vec(m: list[list[int]], v: list[int], r: int) -> list[int]:
    return [sum(row[l] * v[l] for l in range(len(v))) % r for row in m]


def _mat_inv(m: list[list[int]], r: int) -> list[list[int]]:
    n = len(m)
    a = [row[:] + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next(i for i in range(col, n) if a[i][col] % r != 0)
        a[col], a[piv] = a[piv], a[col]
        inv = pow(a[col][col], r - 2, r)
        a[col] = [(x * inv) % r for x in a[col]]
        for i in range(n):
            if i != col and a[i][col]:
                c = a[i][col]
                a[i] = [(x - c * y) % r for x, y in zip(a[i], a[col])]
    return [row[n:] for row in a]


def _charpoly(m: list[list[int]], r: int) -> list[int]:
    # Newton's identities from power traces; valid since r > deg.
    n = len(m)
    powers = m
    traces = [sum(m[i][i] for i in range(n)) % r]
    for _ in range(n - 1):
        powers = [
            [sum(powers[i][k] * m[k][j] for k in range(n)) % r for j in range(n)]
            for i in range(n)
        ]
        traces.append(sum(powers[i][i] for i in range(n)) % r)
    e = [1] + [0] * n
    for s in range(1, n + 1):
        acc = 0
        for i in range(1, s + 1):
            term = (e[s - i] * traces[i - 1]) % r
            acc = (acc - term) if i % 2 == 0 else (acc + term)
        e[s] = (acc * pow(s, r - 2, r)) % r
    # p(x) = sum_{s} (-1)^s e_s x^(n-s), coefficients low-to-high.
    coeffs = [0] * (n + 1)
    for s in range(n + 1):
        c = e[s] if s % 2 == 0 else (-e[s]) % r
        coeffs[n - s] = c % r
    return coeffs


def _poly_eval(coeffs: list[int], x: int, r: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * x + c) % r
    return acc


def _nullspace(m: list[list[int]], r: int) -> list[list[int]]:
    n = len(m)
    a = [row[:] for row in m]
    pivots = []
    prow = 0
    for col in range(n):
        piv = next((i for i in range(prow, n) if a[i][col] % r != 0), None)
        if piv is None:
            continue
        a[prow], a[piv] = a[piv], a[prow]
        inv = pow(a[prow][col], r - 2, r)
        a[prow] = [(x * inv) % r for x in a[prow]]
        for i in range(n):
            if i != prow and a[i][col]:
                c = a[i][col]
                a[i] = [(x - c * y) % r for x, y in zip(a[i], a[prow])]
        pivots.append(col)
        prow += 1
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        vec = [0] * n
        vec[f] = 1
        for i, col in enumerate(pivots):
            vec[col] = (-a[i][f]) % r
        basis.append(vec)
    return basis


def _pivot_rows(vectors: list[list[int]], r: int) -> list[int]:
    # Row indices at which the given independent column vectors have pivots.
    k = len(vectors[0])
    work = [list(v) for v in vectors]
    pivots = []
    for vi in range(len(work)):
        piv = next(i for i in range(k) if work[vi][i] % r != 0 and i not in pivots)
        inv = pow(work[vi][piv], r - 2, r)
        work[vi] = [(x * inv) % r for x in work[vi]]
        for vj in range(len(work)):
            if vj != vi and work[vj][piv]:
                c = work[vj][piv]
                work[vj] = [(x - c * y) % r for x, y in zip(work[vj], work[vi])]
        pivots.append(piv)
    return pivots


# -- the character-table oracle ---------------------------------------


def _class_matrix(group, classes, i: int) -> list[list[int]]:
    k = len(classes)
    m = [[0] * k for _ in range(k)]
    inv_members = [group.inv(x) for x in classes.classes[i]]
    for l, z in enumerate(classes.representatives):
        for xi in inv_members:
            j = classes.class_of[group.mul(xi, z)]
            m[j][l] += 1
    return m


def character_table(group: GroupTable, bound: int | None = None) -> list[ClassFunction]:
    """All irreducible characters with exact cyclotomic values.

    Class-sum eigenvector method: the column space of F_r^k is split into
    common eigenspaces of the class matrices, with r = the smallest prime
    r = 1 (mod exp G) exceeding 2*sqrt(|G|)*exp(G) so that eigenvalue data
    determines character values; the values are then lifted exactly through
    root-of-unity multiplicity sums.
    """
    if bound is None:
        bound = max_group_order()
    n = group.order
    if n > bound:
        raise ValueError(
            "group order %d exceeds character table bound %d" % (n, bound)
        )
    classes = conjugacy_classes(group)
    k = len(classes)
    exponent = 1
    for o in classes.rep_orders:
        exponent = lcm(exponent, o)
    s = isqrt(n)
    if s * s < n:
        s += 1
    threshold = 2 * s * exponent
    r = exponent + 1
    while r <= threshold or not _is_prime(r):
        r += exponent
    zgen = pow(_primitive_root(r), (r - 1) // exponent, r)

    inv_class = [classes.inverse_class(ci) for ci in range(k)]
    subspaces = [[[1 if i == j else 0 for i in range(k)] for j in range(k)]]
    for mi in range(1, k):
        if all(len(b) == 1 for b in subspaces):
            break
        m = _class_matrix(group, classes, mi)
        new_spaces = []
        for basis in subspaces:
            if len(basis) == 1:
                new_spaces.append(basis)
                continue
            dim = len(basis)
            images = [_mat_vec(m, v, r) for v in basis]
            pivots = _pivot_rows(basis, r)
            bp = [[basis[b][p] for b in range(dim)] for p in pivots]
            mbp = [[images[b][p] for b in range(dim)] for p in pivots]
            bp_inv = _mat_inv(bp, r)
            rmat = [
                [sum(bp_inv[i][t] * mbp[t][j] for t in range(dim)) % r for j in range(dim)]
                for i in range(dim)
            ]
            poly = _charpoly(rmat, r)
            found = 0
            for lam in range(r):
                if found == dim:
                    break
                if _poly_eval(poly, lam, r) != 0:
                    continue
                shifted = [
                    [(rmat[i][j] - (lam if i == j else 0)) % r for j in range(dim)]
                    for i in range(dim)
                ]
                null = _nullspace(shifted, r)
                if not null:
                    continue
                found += len(null)
                child = []
                for nv in null:
                    vec = [0] * k
                    for b, c in enumerate(nv):
                        if c:
                            for i in range(k):
                                vec[i] = (vec[i] + c * basis[b][i]) % r
                    child.append(vec)
                new_spaces.append(child)
        subspaces = new_spaces
    if any(len(b) != 1 for b in subspaces):
        raise AssertionError("class matrices failed to separate characters")

    chars = []
    ident = classes.class_of[group.id]
    for basis in subspaces:
        w = basis[0]
        if w[ident] % r == 0:
            raise AssertionError("eigenvector vanishes at the identity class")
        scale = pow(w[ident], r - 2, r)
        w = [(x * scale) % r for x in w]
        d2_sum = 0
        for l in range(k):
            d2_sum += w[l] * w[inv_class[l]] * pow(classes.sizes[l], r - 2, r)
        d2_sum %= r
        deg_sq = (n * pow(d2_sum, r - 2, r)) % r
        deg = isqrt(deg_sq)
        if deg * deg != deg_sq or deg == 0 or n % deg != 0:
            raise AssertionError("character degree recovery failed")
        modular = [
            (deg * w[l] * pow(classes.sizes[l], r - 2, r)) % r for l in range(k)
        ]
        values = []
        for l in range(k):
            o = classes.rep_orders[l]
            zo = pow(zgen, exponent // o, r)
            o_inv = pow(o, r - 2, r)
            power_classes = [classes.power_class(l, e) for e in range(o)]
            value = ZERO
            total_mult = 0
            for j in range(o):
                acc = 0
                for e in range(o):
                    acc += modular[power_classes[e]] * pow(zo, (-j * e) % (r - 1), r)
                mj = (acc * o_inv) % r
                if mj > deg:
                    raise AssertionError("eigenvalue multiplicity lift out of range")
                total_mult += mj
                if mj:
                    value = value + mj * root_of_unity(o, j)
            if total_mult != deg:
                raise AssertionError("eigenvalue multiplicities do not sum to degree")
            values.append(value)
        chars.append((deg, ClassFunction(classes, values)))

    if len(chars) != k:
        raise AssertionError("character count differs from class count")
    if sum(d * d for d, _ in chars) != n:
        raise AssertionError("degree squares do not sum to group order")
    for deg, _ in chars:
        if n % deg != 0:
            raise AssertionError("character degree does not divide group order")
    # Modular row orthonormality: cheap and strong; exact checks live in tests.
    mod_values = []
    for _, cf in chars:
        row = []
        for v in cf.values:
            row.append(_cyclotomic_mod(v, exponent, zgen, r))
        mod_values.append(row)
    for a in range(k):
        for b in range(k):
            acc = 0
            for l in range(k):
                acc += classes.sizes[l] * mod_values[a][l] * mod_values[b][inv_class[l]]
            if acc % r != (n if a == b else 0) % r:
                raise AssertionError("modular orthonormality check failed")
    chars.sort(key=lambda item: (item[0], item[1].serialize()))
    return [cf for _, cf in chars]


def _cyclotomic_mod(value: Cyclotomic, exponent: int, zgen: int, r: int) -> int:
    # Image of a Q(zeta_m) integer under zeta_m -> zgen^(exponent/m) mod r.
    m = value.order
    if exponent % m != 0:
        raise AssertionError("value order does not divide the group exponent")
    zm = pow(zgen, exponent // m, r)
    acc = 0
    for i, c in enumerate(value.coefficients):
        if c.denominator != 1:
            raise AssertionError("character value is not an algebraic integer")
        acc = (acc + c.numerator * pow(zm, i, r)) % r
    return acc


# -- export -----------------------------------------------------------


def table_to_csv(group: GroupTable, chars: list[ClassFunction]) -> str:
    classes = conjugacy_classes(group)
    rep_keys = [repr(group.key(rep)) for rep in classes.representatives]
    lines = ["class," + ",".join('"%s"' % key for key in rep_keys)]
    lines.append("size," + ",".join(str(s) for s in classes.sizes))
    for i, cf in enumerate(chars):
        lines.append("chi_%d," % i + ",".join('"%s"' % v for v in cf.serialize()))
    return "\n".join(lines) + "\n"


def table_to_json(group: GroupTable, chars: list[ClassFunction]) -> dict:
    classes = conjugacy_classes(group)
    return {
        "group": group.name,
        "order": group.order,
        "classes": [
            {
                "representative": repr(group.key(rep)),
                "size": classes.sizes[ci],
                "element_order": classes.rep_orders[ci],
                "centralizer_order": classes.centralizer_orders[ci],
            }
            for ci, rep in enumerate(classes.representatives)
        ],
        "irreducibles": [list(cf.serialize()) for cf in chars],
    }
