"""Concrete rank-one groups over small finite fields: GL2, SL2, and the
quasi-split unitary group U2 of a quadratic pair, together with the twisting
involution tau, twisted conjugacy, the cyclic norm, and quadratic torus
embeddings.

Matrices are row-major 4-tuples (a, b, c, d) of field element indices.
"""

from __future__ import annotations

from itertools import product

from .ffield import FField, make_field, norm_one_subgroup
from .grpcore import GroupTable, conjugacy_classes, enumerate_group, max_group_order

Mat2 = tuple[int, int, int, int]


# -- matrix helpers ---------------------------------------------------


def mat_id(F: FField) -> Mat2:
    return (F.one, F.zero, F.zero, F.one)


def mat_scalar(F: FField, c: int) -> Mat2:
    return (c, F.zero, F.zero, c)


def mat_mul(F: FField, x: Mat2, y: Mat2) -> Mat2:
    a, b, c, d = x
    e, f, g, h = y
    return (
        F.add(F.mul(a, e), F.mul(b, g)),
        F.add(F.mul(a, f), F.mul(b, h)),
        F.add(F.mul(c, e), F.mul(d, g)),
        F.add(F.mul(c, f), F.mul(d, h)),
    )


def mat_det(F: FField, x: Mat2) -> int:
    a, b, c, d = x
    return F.sub(F.mul(a, d), F.mul(b, c))


def mat_trace(F: FField, x: Mat2) -> int:
    return F.add(x[0], x[3])


def mat_inv(F: FField, x: Mat2) -> Mat2:
    a, b, c, d = x
    di = F.inv(mat_det(F, x))
    return (F.mul(di, d), F.mul(di, F.neg(b)), F.mul(di, F.neg(c)), F.mul(di, a))


def mat_frobenius(F: FField, x: Mat2, times: int = 1) -> Mat2:
    return tuple(F.frobenius(e, times) for e in x)


def mat_transpose(x: Mat2) -> Mat2:
    a, b, c, d = x
    return (a, c, b, d)


def is_scalar(F: FField, x: Mat2) -> bool:
    return x[1] == F.zero and x[2] == F.zero and x[0] == x[3]


# -- group builders ---------------------------------------------------


def build_gl2(F: FField, bound: int | None = None) -> GroupTable:
    """All invertible 2x2 matrices over F as a GroupTable."""
    if bound is None:
        bound = max_group_order()
    q = F.q
    expected = (q * q - 1) * (q * q - q)
    if expected > bound:
        raise ValueError(
            "GL2 order %d exceeds size bound %d" % (expected, bound)
        )
    cand = product(F.elements(), repeat=4)
    G = enumerate_group(
        cand,
        lambda m: mat_det(F, m) != F.zero,
        lambda x, y: mat_mul(F, x, y),
        lambda x: mat_inv(F, x),
        mat_id(F),
        name="GL2(%d)" % q,
    )
    if G.order != expected:
        raise AssertionError("GL2 enumeration has wrong order")
    return G


def build_sl2(F: FField, bound: int | None = None) -> GroupTable:
    """The determinant-one subgroup of GL2(F)."""
    if bound is None:
        bound = max_group_order()
    q = F.q
    expected = (q * q - 1) * q
    if expected > bound:
        raise ValueError(
            "SL2 order %d exceeds size bound %d" % (expected, bound)
        )
    cand = product(F.elements(), repeat=4)
    G = enumerate_group(
        cand,
        lambda m: mat_det(F, m) == F.one,
        lambda x, y: mat_mul(F, x, y),
        lambda x: mat_inv(F, x),
        mat_id(F),
        name="SL2(%d)" % q,
    )
    if G.order != expected:
        raise AssertionError("SL2 enumeration has wrong order")
    return G


class UnitarySpec:
    """The quadratic pair GF(q^2)/GF(q) with the hyperbolic hermitian form
    whose Gram matrix is antidiag(1,1)."""

    def __init__(self, q: int):
        self.q = q
        self.sub = make_field(_prime_of(q), _power_of(q))
        self.field = make_field(self.sub.p, 2 * self.sub.k)
        F = self.field
        self.gram: Mat2 = (F.zero, F.one, F.one, F.zero)
        if conj_transpose(self, self.gram) != self.gram:
            raise AssertionError("Gram matrix is not hermitian")

    def __repr__(self):
        return "UnitarySpec(q=%d)" % self.q


def _prime_of(q: int) -> int:
    for p in range(2, q + 1):
        if q % p == 0:
            return p
    raise ValueError("q must be a prime power")


def _power_of(q: int) -> int:
    p = _prime_of(q)
    k = 0
    while q > 1:
        if q % p != 0:
            raise ValueError("q must be a prime power")
        q //= p
        k += 1
    return k


def conj_transpose(spec: UnitarySpec, g: Mat2) -> Mat2:
    """g-bar-transpose, bar = entrywise x -> x^q."""
    return mat_transpose(mat_frobenius(spec.field, g, spec.sub.k))


def is_unitary(spec: UnitarySpec, g: Mat2) -> bool:
    F = spec.field
    return mat_mul(F, mat_mul(F, conj_transpose(spec, g), spec.gram), g) == spec.gram


def build_u2(spec: UnitarySpec, max_q: int = 7) -> GroupTable:
    """The unitary group of the pair, as a subgroup of GL2(GF(q^2)).

    Enumeration is pruned column-by-column; brute force over all of
    GF(q^2)^4 would be q^8 candidates.
    """
    if spec.q > max_q:
        raise ValueError("q=%d exceeds unitary size bound max_q=%d" % (spec.q, max_q))
    F = spec.field
    iso_cols = []
    pairs = []
    for a, c in product(F.elements(), repeat=2):
        # Column conditions from conj(g)^T * antidiag(1,1) * g = antidiag(1,1).
        bar = lambda x: F.frobenius(x, spec.sub.k)
        if F.add(F.mul(bar(a), c), F.mul(bar(c), a)) == F.zero:
            iso_cols.append((a, c))
    for a, c in iso_cols:
        bar_a = F.frobenius(a, spec.sub.k)
        bar_c = F.frobenius(c, spec.sub.k)
        for b, d in iso_cols:
            if F.add(F.mul(bar_a, d), F.mul(bar_c, b)) == F.one:
                pairs.append((a, b, c, d))
    keys = [g for g in pairs if is_unitary(spec, g)]
    G = GroupTable(
        keys,
        lambda x, y: mat_mul(F, x, y),
        lambda x: mat_inv(F, x),
        mat_id(F),
        name="U2(%d)" % spec.q,
    )
    expected = spec.q * (spec.q - 1) * (spec.q + 1) ** 2
    if G.order != expected:
        raise AssertionError("U2 enumeration has wrong order")
    return G


# -- the involution tau and the cyclic norm ---------------------------


def tau(spec: UnitarySpec, g: Mat2) -> Mat2:
    """tau(g) = Gram^-1 * (g-bar-transpose)^-1 * Gram; fixes exactly U2."""
    F = spec.field
    gi = mat_inv(F, conj_transpose(spec, g))
    return mat_mul(F, mat_mul(F, mat_inv(F, spec.gram), gi), spec.gram)


def norm_tau(spec: UnitarySpec, g: Mat2) -> Mat2:
    """N_tau(g) = g * tau(g)."""
    return mat_mul(spec.field, g, tau(spec, g))


def tau_classes(G: GroupTable, spec: UnitarySpec) -> list[tuple[int, ...]]:
    """Partition of G = GL2(GF(q^2)) into twisted-conjugacy orbits of
    g -> h^-1 g tau(h), ordered by least seed index.

    Since tau is a homomorphism, h -> (x -> h^-1 x tau(h)) is a right group
    action, so each orbit is the closure of its seed under the moves of a
    generating set (elementary matrices plus diag(gen, 1)); that the chosen
    set generates the whole group is verified first.
    """
    F = spec.field
    gens = [
        G.index[(F.one, F.one, F.zero, F.one)],
        G.index[(F.one, F.zero, F.one, F.one)],
        G.index[(F.generator, F.zero, F.zero, F.one)],
    ]
    reached = {G.id}
    frontier = [G.id]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = G.mul(x, g)
                if y not in reached:
                    reached.add(y)
                    nxt.append(y)
        frontier = nxt
    if len(reached) != G.order:
        raise AssertionError("generating set does not generate the group")
    moves = [(G.inv(g), G.index[tau(spec, G.key(g))]) for g in gens]
    seen = [False] * G.order
    out = []
    for seed in range(G.order):
        if seen[seed]:
            continue
        orbit = {seed}
        seen[seed] = True
        frontier = [seed]
        while frontier:
            nxt = []
            for x in frontier:
                for ginv, taug in moves:
                    y = G.mul(G.mul(ginv, x), taug)
                    if not seen[y]:
                        seen[y] = True
                        orbit.add(y)
                        nxt.append(y)
            frontier = nxt
        out.append(tuple(sorted(orbit)))
    return out


def norm_class_map(
    G: GroupTable, spec: UnitarySpec, partition: list[tuple[int, ...]]
) -> list[int]:
    """For each twisted class, the ordinary conjugacy class of N_tau(seed)."""
    classes = conjugacy_classes(G)
    out = []
    for orbit in partition:
        seed = orbit[0]
        n = G.index[norm_tau(spec, G.key(seed))]
        out.append(classes.class_of[n])
    return out


def residue_tau_ramified(F: FField, g: Mat2) -> Mat2:
    """g -> (det g)^-1 * g, the residue of the ramified involution."""
    di = F.inv(mat_det(F, g))
    return tuple(F.mul(di, e) for e in g)


# -- torus embeddings -------------------------------------------------


class QuadraticTorus:
    """The embedding x = a + b*sqrt(nu) -> [[a, b*nu], [b, a]] of the
    quadratic extension's multiplicative group into GL2 of the base field."""

    def __init__(self, field: FField, sub: FField):
        if not (field.is_subfield(sub) and field.k == 2 * sub.k):
            raise ValueError("expected a quadratic extension pair")
        self.field = field
        self.sub = sub
        self.nu = sub.smallest_nonsquare()
        emb = field.embedding(sub)
        nu_up = emb[self.nu]
        roots = sorted(x for x in field.elements() if field.mul(x, x) == nu_up)
        self.sqrt_nu = roots[0]
        self._coords = {}
        for a, b in product(sub.elements(), repeat=2):
            x = field.add(emb[a], field.mul(emb[b], self.sqrt_nu))
            self._coords[x] = (a, b)

    def coordinates(self, x: int) -> tuple[int, int]:
        """(a, b) with x = a + b*sqrt(nu)."""
        return self._coords[x]

    def __call__(self, x: int) -> Mat2:
        if x == self.field.zero:
            raise ValueError("torus embedding is defined on nonzero elements")
        a, b = self._coords[x]
        k0 = self.sub
        return (a, k0.mul(b, self.nu), b, a)


def embed_quadratic_torus(field: FField, sub: FField) -> QuadraticTorus:
    return QuadraticTorus(field, sub)


# -- the orthogonal-basis torus of U2 ---------------------------------


def u2_basis_change(spec: UnitarySpec) -> Mat2:
    """Columns e(-1) + (1/2)e(1) and e(-1) - (1/2)e(1): the basis in which
    the hermitian form becomes diag(1, -1)."""
    F = spec.field
    # (p+1)/2 is 1/2 mod p; push it from the subfield into the big field.
    half = F.embedding(spec.sub)[spec.sub.scalar((spec.sub.p + 1) // 2)]
    return (F.one, F.one, half, F.neg(half))


def u2_torus_element(spec: UnitarySpec, u1: int, u2: int) -> Mat2:
    """P diag(u1, u2) P^-1 for norm-one u1, u2: a point of the torus H."""
    F = spec.field
    P = u2_basis_change(spec)
    diag = (u1, F.zero, F.zero, u2)
    g = mat_mul(F, mat_mul(F, P, diag), mat_inv(F, P))
    if not is_unitary(spec, g):
        raise ValueError("torus parameters are not norm-one")
    return g


def u2_weyl_swap(spec: UnitarySpec) -> Mat2:
    """A unitary element conjugating the torus by the coordinate swap."""
    F = spec.field
    minus_one = spec.sub.neg(spec.sub.one)
    emb = F.embedding(spec.sub)
    a = next(
        x
        for x in F.elements()
        if x != F.zero and F.mul(x, F.frobenius(x, spec.sub.k)) == emb[minus_one]
    )
    P = u2_basis_change(spec)
    anti = (F.zero, a, a, F.zero)
    w = mat_mul(F, mat_mul(F, P, anti), mat_inv(F, P))
    if not is_unitary(spec, w):
        raise AssertionError("swap element is not unitary")
    return w


def u2_scalars(spec: UnitarySpec) -> list[int]:
    """The norm-one scalars, i.e. the center of U2."""
    return norm_one_subgroup(spec.field, spec.sub)
