"""Cuspidal character formulas against the independent oracle.

Expected values marked "frozen" were produced by running the character-table
oracle once and pinning the result; class order is the deterministic
(element order, class size, least representative index) order.
"""

import pytest

from basechange.cyclo import Cyclotomic
from basechange.cuspchar import (
    canonical_gamma_rep,
    gl2_central_character,
    gl2_context,
    gl2_cuspidal,
    match_oracle,
    sigma0,
    sigma0_expected_parameter,
    sl2_context,
    sl2_cuspidal,
    sl2_reducible_formula,
    standard_group,
    standard_table,
    u2_context,
    u2_cuspidal,
)
from basechange.ffield import MultChar, NormOneChar, make_field
from basechange.grpcore import inner_product

ONE = Cyclotomic.rational(1)
TWO = Cyclotomic.rational(2)


def norm_one(q, s):
    return NormOneChar(make_field(q, 2), make_field(q), s)


def regular_norm_one(q):
    return [norm_one(q, s) for s in range(q + 2) if (2 * s) % (q + 1) != 0]


def regular_mult(q):
    L = make_field(q, 2)
    return [MultChar(L, t) for t in range(L.q - 1) if t % (q + 1) != 0]


class TestSL2:
    def test_q3_order4_theta_frozen_values(self):
        # frozen: classes in order I, -I, n1, n_nu, elliptic, -n1, -n_nu
        chi = sl2_cuspidal(norm_one(3, 1))
        assert [v.as_rational() for v in chi.values] == [2, -2, -1, -1, 0, 1, 1]
        assert chi.degree == TWO

    def test_q3_self_inner_product_one_and_oracle_match(self):
        chi = sl2_cuspidal(norm_one(3, 1))
        assert inner_product(chi, chi) == ONE
        hits = match_oracle(chi, standard_table("sl2", 3))
        assert len(hits) == 1
        assert standard_table("sl2", 3)[hits[0]].degree == TWO

    def test_rejects_non_regular_theta(self):
        for s in (0, 2):
            with pytest.raises(ValueError, match="reducible parameter"):
                sl2_cuspidal(norm_one(3, s))

    @pytest.mark.parametrize("q", [3, 5])
    def test_every_regular_theta_matches_one_oracle_irreducible(self, q):
        table = standard_table("sl2", q)
        for theta in regular_norm_one(q):
            chi = sl2_cuspidal(theta)
            assert chi.degree == Cyclotomic.rational(q - 1)
            assert inner_product(chi, chi) == ONE
            assert len(match_oracle(chi, table)) == 1

    @pytest.mark.parametrize("q", [3, 5])
    def test_parameter_separation(self, q):
        # chi_theta == chi_theta' exactly when theta' in {theta, theta^-1}
        thetas = regular_norm_one(q)
        for t1 in thetas:
            for t2 in thetas:
                same = sl2_cuspidal(t1) == sl2_cuspidal(t2)
                orbit = t2 in (t1, t1.inverse())
                assert same == orbit

    @pytest.mark.parametrize("q", [3, 5])
    def test_split_regular_classes_vanish(self, q):
        ctx = sl2_context(q)
        assert len(ctx.split_classes) == (q - 3) // 2
        chi = sl2_cuspidal(norm_one(q, 1))
        for ci in ctx.split_classes:
            assert chi.on_class(ci).is_zero()

    @pytest.mark.parametrize("q", [3, 5])
    def test_order2_theta_packet(self, q):
        # The same formula at the order-2 theta is the sum of two distinct
        # irreducibles of degree (q-1)/2.
        theta = norm_one(q, (q + 1) // 2)
        red = sl2_reducible_formula(theta)
        assert inner_product(red, red) == TWO
        table = standard_table("sl2", q)
        mults = [inner_product(red, chi) for chi in table]
        hits = [i for i, m in enumerate(mults) if not m.is_zero()]
        assert len(hits) == 2
        half = Cyclotomic.rational((q - 1) // 2)
        for i in hits:
            assert mults[i] == ONE
            assert table[i].degree == half
        assert red == table[hits[0]] + table[hits[1]]

    def test_reducible_formula_guards(self):
        with pytest.raises(ValueError, match="order-2"):
            sl2_reducible_formula(norm_one(3, 1))
        with pytest.raises(ValueError, match="trivial"):
            sl2_reducible_formula(norm_one(3, 0))


class TestGL2:
    def test_q3_regular_count_and_distinct_characters(self):
        chars = [gl2_cuspidal(tt) for tt in regular_mult(3)]
        assert len(chars) == 6
        distinct = []
        for c in chars:
            if not any(c == d for d in distinct):
                distinct.append(c)
        assert len(distinct) == 3  # q(q-1)/2

    @pytest.mark.parametrize("q", [3, 5])
    def test_oracle_match_and_degree(self, q):
        table = standard_table("gl2", q)
        hit_set = set()
        for tt in regular_mult(q):
            chi = gl2_cuspidal(tt)
            assert chi.degree == Cyclotomic.rational(q - 1)
            assert inner_product(chi, chi) == ONE
            hits = match_oracle(chi, table)
            assert len(hits) == 1
            hit_set.add(hits[0])
        # the q(q-1)/2 cuspidal irreducibles of degree q-1, each hit twice
        assert len(hit_set) == q * (q - 1) // 2

    @pytest.mark.parametrize("q", [3, 5])
    def test_parameter_separation(self, q):
        for t1 in regular_mult(q):
            for t2 in regular_mult(q):
                same = gl2_cuspidal(t1) == gl2_cuspidal(t2)
                orbit = t2 in (t1, t1.galois_twist())
                assert same == orbit

    def test_central_character_is_restriction(self):
        q = 3
        L, F = make_field(q, 2), make_field(q)
        emb = L.embedding(F)
        tt = MultChar(L, 1)
        omega = gl2_central_character(gl2_cuspidal(tt), q)
        for x, val in omega.items():
            assert val == tt(emb[x])

    def test_rejects_non_regular(self):
        with pytest.raises(ValueError, match="non-regular"):
            gl2_cuspidal(MultChar(make_field(3, 2), 4))

    def test_rejects_odd_degree_field(self):
        with pytest.raises(ValueError, match="quadratic"):
            gl2_cuspidal(MultChar(make_field(3), 1))

    @pytest.mark.parametrize("q", [3, 5])
    def test_split_regular_classes_vanish(self, q):
        ctx = gl2_context(q)
        assert len(ctx.split_classes) == (q - 1) * (q - 2) // 2
        chi = gl2_cuspidal(MultChar(ctx.l, 1))
        for ci in ctx.split_classes:
            assert chi.on_class(ci).is_zero()


class TestU2:
    @pytest.mark.parametrize("q", [3, 5])
    def test_all_regular_pairs_match_uniquely(self, q):
        L, F = make_field(q, 2), make_field(q)
        thetas = [NormOneChar(L, F, s) for s in range(q + 1)]
        seen = {}
        for th1 in thetas:
            for th2 in thetas:
                if th1 == th2:
                    continue
                chi = u2_cuspidal(th1, th2)
                assert chi.degree == Cyclotomic.rational(q - 1)
                assert inner_product(chi, chi) == ONE
                seen[(th1.s, th2.s)] = chi
        # swap symmetry, and distinct unordered pairs give distinct characters
        for (s1, s2), chi in seen.items():
            assert chi == seen[(s2, s1)]
            for (r1, r2), other in seen.items():
                same = chi == other
                assert same == ({r1, r2} == {s1, s2})

    def test_rejects_equal_parameters(self):
        th = norm_one(3, 1)
        with pytest.raises(ValueError, match="not regular"):
            u2_cuspidal(th, th)

    def test_central_values_follow_torus_formula(self):
        q = 3
        ctx = u2_context(q)
        th1, th2 = norm_one(q, 0), norm_one(q, 1)
        chi = u2_cuspidal(th1, th2)
        for u, ci in ctx.central.items():
            assert chi.on_class(ci) == (q - 1) * (th1(u) * th2(u))

    def test_off_torus_classes_exist_and_are_oracle_valued(self):
        # the matched character is a verbatim oracle row, including values
        # on classes the torus formula never touches
        ctx = u2_context(3)
        torus_classes = set(ctx.torus_class.values())
        assert len(torus_classes) < len(ctx.classes)
        chi = u2_cuspidal(norm_one(3, 1), norm_one(3, 3))
        assert any(chi is row for row in ctx.table)


class TestSigma0:
    def test_q3_all_pairs_all_extensions(self):
        q = 3
        L, F = make_field(q, 2), make_field(q)
        for s1 in range(q + 1):
            for s2 in range(q + 1):
                if s1 == s2:
                    continue
                th1, th2 = NormOneChar(L, F, s1), NormOneChar(L, F, s2)
                exts1 = [MultChar(L, s1), MultChar(L, s1 + q + 1)]
                exts2 = [MultChar(L, s2), MultChar(L, s2 + q + 1)]
                for Th1 in exts1:
                    for Th2 in exts2:
                        built, ident = sigma0(th1, th2, Th1, Th2)
                        assert ident == sigma0_expected_parameter(Th1, Th2)
                        assert built == gl2_cuspidal(ident)
                        assert inner_product(built, built) == ONE

    def test_identified_parameter_is_canonical(self):
        q = 3
        L, F = make_field(q, 2), make_field(q)
        _, ident = sigma0(
            NormOneChar(L, F, 1),
            NormOneChar(L, F, 2),
            MultChar(L, 1),
            MultChar(L, 2),
        )
        assert ident == canonical_gamma_rep(ident)

    def test_rejects_non_extension(self):
        q = 3
        L, F = make_field(q, 2), make_field(q)
        with pytest.raises(ValueError, match="does not restrict"):
            sigma0(
                NormOneChar(L, F, 1),
                NormOneChar(L, F, 2),
                MultChar(L, 2),
                MultChar(L, 2),
            )

    def test_rejects_equal_parameters(self):
        q = 3
        L, F = make_field(q, 2), make_field(q)
        with pytest.raises(ValueError, match="not regular"):
            sigma0(
                NormOneChar(L, F, 1),
                NormOneChar(L, F, 1),
                MultChar(L, 1),
                MultChar(L, 1),
            )


class TestStandardAccess:
    def test_standard_group_orders(self):
        assert standard_group("sl2", 3).order == 24
        assert standard_group("gl2", 3).order == 48
        assert standard_group("u2", 3).order == 96

    def test_unknown_family(self):
        with pytest.raises(ValueError, match="unknown family"):
            standard_group("so5", 3)
        with pytest.raises(ValueError, match="unknown family"):
            standard_table("so5", 3)
