"""Explicit cuspidal character formulas for SL2, GL2 and U2 over a small
base field, as exact ClassFunctions, plus identification of each formula
against the independent character-table oracle.

Conventions: the base field k0 = GF(q) with q an odd prime, the quadratic
extension l = GF(q^2), gamma the nontrivial automorphism of l/k0, l1 the
norm-one subgroup.  Values not forced by a formula are 0 on split regular
classes; U2 values off the torus are read from the oracle, never guessed.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache

from .cyclo import ZERO, Cyclotomic
from .ffield import MultChar, NormOneChar, make_field, norm_one_subgroup
from .grpcore import ClassFunction, character_table, conjugacy_classes
from .rankone import (
    UnitarySpec,
    build_gl2,
    build_sl2,
    build_u2,
    embed_quadratic_torus,
    mat_mul,
    mat_scalar,
    u2_torus_element,
)


@dataclass
class CuspidalTag:
    """Bookkeeping for a constructed character: family, base q, parameters."""

    family: str
    q: int
    params: dict = dc_field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"family": self.family, "q": self.q, "params": dict(self.params)}


# -- shared contexts (built once per q) -------------------------------


class _GL2Context:
    def __init__(self, q: int):
        self.q = q
        self.k0 = make_field(q)
        self.l = make_field(q, 2)
        self.group = build_gl2(self.k0)
        self.classes = conjugacy_classes(self.group)
        self.embed = embed_quadratic_torus(self.l, self.k0)
        F, cls, G = self.k0, self.classes, self.group
        self.central = {
            x: cls.class_of[G.index[mat_scalar(F, x)]] for x in F.nonzero()
        }
        n1 = (F.one, F.one, F.zero, F.one)
        self.unipotent = {
            x: cls.class_of[G.index[mat_mul(F, mat_scalar(F, x), n1)]]
            for x in F.nonzero()
        }
        embedded = set(self.l.embedding(self.k0))
        self.elliptic = {}
        for x in self.l.nonzero():
            if x not in embedded:
                self.elliptic[x] = cls.class_of[G.index[self.embed(x)]]
        listed = (
            set(self.central.values())
            | set(self.unipotent.values())
            | set(self.elliptic.values())
        )
        if len(self.central) != q - 1 or len(self.unipotent) != q - 1:
            raise AssertionError("central/unipotent classification failed")
        if len(set(self.elliptic.values())) != q * (q - 1) // 2:
            raise AssertionError("elliptic classification failed")
        if len(listed) != 2 * (q - 1) + q * (q - 1) // 2:
            raise AssertionError("class families overlap")
        self.split_classes = [ci for ci in range(len(cls)) if ci not in listed]
        self._table = None
        self._formula_cache: dict[int, ClassFunction] = {}

    @property
    def table(self):
        if self._table is None:
            self._table = character_table(self.group)
        return self._table


class _SL2Context:
    def __init__(self, q: int):
        self.q = q
        self.k0 = make_field(q)
        self.l = make_field(q, 2)
        self.group = build_sl2(self.k0)
        self.classes = conjugacy_classes(self.group)
        self.embed = embed_quadratic_torus(self.l, self.k0)
        F, cls, G = self.k0, self.classes, self.group
        one, minus = F.one, F.neg(F.one)
        self.central = {
            x: cls.class_of[G.index[mat_scalar(F, x)]] for x in (one, minus)
        }
        nu = F.smallest_nonsquare()
        self.unipotent = {}
        for x in (one, minus):
            for n_off in (F.one, nu):
                n = (F.one, n_off, F.zero, F.one)
                key = (x, n_off)
                self.unipotent[key] = cls.class_of[G.index[mat_mul(F, mat_scalar(F, x), n)]]
        l1 = norm_one_subgroup(self.l, self.k0)
        emb = self.l.embedding(self.k0)
        central_points = {emb[one], emb[minus]}
        self.elliptic = {}
        for u in l1:
            if u not in central_points:
                self.elliptic[u] = cls.class_of[G.index[self.embed(u)]]
        listed = (
            set(self.central.values())
            | set(self.unipotent.values())
            | set(self.elliptic.values())
        )
        if len(listed) != 2 + 4 + (q - 1) // 2:
            raise AssertionError("class families overlap")
        self.split_classes = [ci for ci in range(len(cls)) if ci not in listed]
        self._table = None

    @property
    def table(self):
        if self._table is None:
            self._table = character_table(self.group)
        return self._table


class _U2Context:
    def __init__(self, q: int):
        self.q = q
        self.spec = UnitarySpec(q)
        self.k0 = self.spec.sub
        self.l = self.spec.field
        self.group = build_u2(self.spec)
        self.classes = conjugacy_classes(self.group)
        self.l1 = norm_one_subgroup(self.l, self.k0)
        cls, G = self.classes, self.group
        self.torus_class = {}
        for u1 in self.l1:
            for u2 in self.l1:
                g = u2_torus_element(self.spec, u1, u2)
                self.torus_class[(u1, u2)] = cls.class_of[G.index[g]]
        self.central = {u: self.torus_class[(u, u)] for u in self.l1}
        self._table = None

    @property
    def table(self):
        if self._table is None:
            self._table = character_table(self.group)
        return self._table


@lru_cache(maxsize=None)
def gl2_context(q: int) -> _GL2Context:
    return _GL2Context(q)


@lru_cache(maxsize=None)
def sl2_context(q: int) -> _SL2Context:
    return _SL2Context(q)


@lru_cache(maxsize=None)
def u2_context(q: int) -> _U2Context:
    return _U2Context(q)


def standard_group(family: str, q: int):
    """The group table for one of the standard families sl2/gl2/u2."""
    if family == "sl2":
        return sl2_context(q).group
    if family == "gl2":
        return gl2_context(q).group
    if family == "u2":
        return u2_context(q).group
    raise ValueError("unknown family: %r" % family)


def standard_table(family: str, q: int):
    """The oracle character table for one of the standard families."""
    if family == "sl2":
        return sl2_context(q).table
    if family == "gl2":
        return gl2_context(q).table
    if family == "u2":
        return u2_context(q).table
    raise ValueError("unknown family: %r" % family)


def match_oracle(cf: ClassFunction, table: list[ClassFunction]) -> list[int]:
    """Indices of oracle irreducibles equal to cf as class functions."""
    return [i for i, chi in enumerate(table) if chi == cf]


# -- SL2 --------------------------------------------------------------


def _sl2_values(theta: NormOneChar) -> ClassFunction:
    ctx = sl2_context(theta.sub.q)
    if theta.field is not ctx.l or theta.sub is not ctx.k0:
        raise ValueError("parameter lives on the wrong quadratic pair")
    F, L = ctx.k0, ctx.l
    emb = L.embedding(F)
    values: list[Cyclotomic] = [ZERO] * len(ctx.classes)
    qm1 = ctx.q - 1
    for x, ci in ctx.central.items():
        values[ci] = qm1 * theta(emb[x])
    for (x, _n), ci in ctx.unipotent.items():
        values[ci] = -theta(emb[x])
    for u, ci in ctx.elliptic.items():
        values[ci] = -(theta(u) + theta(L.frobenius(u)))
    return ClassFunction(ctx.classes, values)


def sl2_cuspidal(theta: NormOneChar) -> ClassFunction:
    """The cuspidal character of SL2(k0) with regular norm-one parameter:
    (q-1)theta(x) central, -theta(x) on x*n, -(theta(u)+theta(u^-1)) elliptic,
    0 on split regular classes."""
    if not theta.is_regular():
        raise ValueError("reducible parameter (order-2 θ): packet {σ⁺,σ⁻}")
    return _sl2_values(theta)


def sl2_reducible_formula(theta: NormOneChar) -> ClassFunction:
    """The same formula at an order-2 theta: not irreducible, but the sum of
    the two members of a packet of degree (q-1)/2 each."""
    if theta.is_regular():
        raise ValueError("expected an order-2 (non-regular) parameter")
    if theta.order() != 2:
        raise ValueError("expected an order-2 parameter, got the trivial one")
    return _sl2_values(theta)


# -- GL2 --------------------------------------------------------------


def gl2_cuspidal(theta_tilde: MultChar) -> ClassFunction:
    """The cuspidal character of GL2(k0) with regular parameter on l^x:
    (q-1)tt(x) central, -tt(x) on x*n, -(tt(x)+tt(x^q)) elliptic, 0 split."""
    L = theta_tilde.field
    if L.k % 2 != 0:
        raise ValueError("parameter must live on a quadratic extension")
    if not theta_tilde.is_regular():
        raise ValueError("non-regular parameter: the formula is not cuspidal")
    ctx = gl2_context(L.p ** (L.k // 2))
    if L is not ctx.l:
        raise ValueError("parameter lives on the wrong quadratic pair")
    cached = ctx._formula_cache.get(theta_tilde.t)
    if cached is not None:
        return cached
    emb = L.embedding(ctx.k0)
    values: list[Cyclotomic] = [ZERO] * len(ctx.classes)
    qm1 = ctx.q - 1
    for x, ci in ctx.central.items():
        values[ci] = qm1 * theta_tilde(emb[x])
    for x, ci in ctx.unipotent.items():
        values[ci] = -theta_tilde(emb[x])
    for x, ci in ctx.elliptic.items():
        values[ci] = -(theta_tilde(x) + theta_tilde(L.frobenius(x)))
    out = ClassFunction(ctx.classes, values)
    ctx._formula_cache[theta_tilde.t] = out
    return out


def gl2_central_character(cf: ClassFunction, q: int) -> dict[int, Cyclotomic]:
    """The central character of a GL2(k0) class function, as x -> value."""
    ctx = gl2_context(q)
    deg = cf.degree
    return {x: cf.on_class(ci) / deg for x, ci in ctx.central.items()}


# -- U2 ---------------------------------------------------------------


def _u2_torus_values(ctx: _U2Context, theta1, theta2) -> dict[int, Cyclotomic]:
    values: dict[int, Cyclotomic] = {}
    qm1 = ctx.q - 1
    for (u1, u2), ci in ctx.torus_class.items():
        if u1 == u2:
            val = qm1 * (theta1(u1) * theta2(u1))
        else:
            val = -(theta1(u1) * theta2(u2) + theta1(u2) * theta2(u1))
        if ci in values:
            if values[ci] != val:
                raise AssertionError("inconsistent torus values on one class")
        else:
            values[ci] = val
    return values


def u2_cuspidal(theta1: NormOneChar, theta2: NormOneChar) -> ClassFunction:
    """The unique irreducible character of U2(k0) agreeing with the torus
    formula (q-1)theta1(u)theta2(u) on central classes and
    -(theta1(u1)theta2(u2) + theta1(u2)theta2(u1)) on regular torus classes.
    Off-torus values come from the oracle."""
    if theta1.field is not theta2.field or theta1.sub is not theta2.sub:
        raise ValueError("parameters live on different norm-one groups")
    if theta1 == theta2:
        raise ValueError("parameter pair is not regular (theta1 = theta2)")
    ctx = u2_context(theta1.sub.q)
    if theta1.field is not ctx.l:
        raise ValueError("parameter lives on the wrong quadratic pair")
    wanted = _u2_torus_values(ctx, theta1, theta2)
    hits = []
    for idx, chi in enumerate(ctx.table):
        if all(chi.on_class(ci) == val for ci, val in wanted.items()):
            hits.append(idx)
    if not hits:
        raise ValueError("Ennola mismatch: no oracle irreducible fits the torus values")
    if len(hits) > 1:
        raise ValueError("ambiguous: several oracle irreducibles fit the torus values")
    return ctx.table[hits[0]]


# -- sigma0 -----------------------------------------------------------


def canonical_gamma_rep(theta_tilde: MultChar) -> MultChar:
    """The smaller-exponent member of {tt, tt o gamma}."""
    L = theta_tilde.field
    q = L.p ** (L.k // 2)
    t = theta_tilde.t
    tq = (t * q) % (L.q - 1)
    return MultChar(L, min(t, tq))


def sigma0(
    theta1: NormOneChar,
    theta2: NormOneChar,
    Theta1: MultChar,
    Theta2: MultChar,
) -> tuple[ClassFunction, MultChar]:
    """Build the endoscopic-transfer class function on GL2(k0) attached to a
    regular pair (theta1, theta2) with chosen extensions (Theta1, Theta2):
    (q-1)Omega(z) central, -Omega(z) on z*n,
    -Omega(x^q)(theta1(x^(1-q)) + theta2(x^(1-q))) elliptic, 0 split,
    with Omega = Theta1*Theta2.  Returns it with the unique (up to gamma
    twist) regular parameter whose cuspidal character equals it."""
    ctx = gl2_context(theta1.sub.q)
    L = ctx.l
    for Th, th in ((Theta1, theta1), (Theta2, theta2)):
        if Th.field is not L or th.field is not L:
            raise ValueError("parameters live on the wrong quadratic pair")
        if not Th.extends(th):
            raise ValueError("extension does not restrict to the norm-one parameter")
    if theta1 == theta2:
        raise ValueError("parameter pair is not regular (theta1 = theta2)")
    omega = Theta1 * Theta2
    emb = L.embedding(ctx.k0)
    values: list[Cyclotomic] = [ZERO] * len(ctx.classes)
    qm1 = ctx.q - 1
    for z, ci in ctx.central.items():
        values[ci] = qm1 * omega(emb[z])
    for z, ci in ctx.unipotent.items():
        values[ci] = -omega(emb[z])
    one_minus_q_exp = 1 - ctx.q
    for x, ci in ctx.elliptic.items():
        xg = L.frobenius(x)
        xn = L.pow(x, one_minus_q_exp)
        values[ci] = -omega(xg) * (theta1(xn) + theta2(xn))
    built = ClassFunction(ctx.classes, values)
    hits = []
    for t in range(L.q - 1):
        cand = MultChar(L, t)
        if not cand.is_regular():
            continue
        if cand.t != canonical_gamma_rep(cand).t:
            continue
        if gl2_cuspidal(cand) == built:
            hits.append(cand)
    if not hits:
        raise ValueError(
            "no cuspidal identification for the built class function "
            "(formula transcription bug)"
        )
    if len(hits) > 1:
        raise ValueError("ambiguous cuspidal identification")
    return built, hits[0]


def sigma0_expected_parameter(Theta1: MultChar, Theta2: MultChar) -> MultChar:
    """The predicted identification Theta1 * (Theta2 o gamma), canonicalized."""
    return canonical_gamma_rep(Theta1 * Theta2.galois_twist())
