"""Extraspecial groups, torus actions, Heisenberg representations and their
extensions: frozen expected values plus structural property checks."""

import pytest

from basechange.cyclo import ONE, root_of_unity
from basechange.heis import (
    ExtraspecialGroup,
    SymplecticSpace,
    TorusAction,
    build_extraspecial,
    cyclic_pair_sum_nonvanishing,
    expected_multiplicity_multiset,
    extend,
    extraspecial_group,
    heisenberg_rep,
    intertwiner,
    lemma_H_verify,
    multiplicities,
    nonsplit_torus_action,
    split_torus_action,
    torus_action_consequences,
    torus_realization,
)

TUPLES = [
    (3, 1, 2, "split"),
    (3, 1, 4, "nonsplit"),
    (5, 1, 4, "split"),
    (5, 1, 6, "nonsplit"),
    (7, 1, 8, "nonsplit"),
]

EXPECTED_MULTISETS = {
    (3, 1, 2): [1, 2],
    (3, 1, 4): [0, 1, 1, 1],
    (5, 1, 4): [1, 1, 1, 2],
    (5, 1, 6): [0, 1, 1, 1, 1, 1],
    (7, 1, 8): [0, 1, 1, 1, 1, 1, 1, 1],
}

EXPECTED_EPSILON = {
    (3, 1, 2): -1,
    (3, 1, 4): -1,
    (5, 1, 4): 1,
    (5, 1, 6): -1,
    (7, 1, 8): -1,
}


class TestSymplecticSpace:
    def test_standard_gram(self):
        sp = SymplecticSpace(3, 1)
        assert sp.gram == ((0, 1), (2, 0))
        sp2 = SymplecticSpace(3, 2)
        assert sp2.gram[0][2] == 1 and sp2.gram[2][0] == 2
        assert sp2.gram[1][3] == 1 and sp2.gram[3][1] == 2

    def test_pairing_antisymmetric_nondegenerate(self):
        sp = SymplecticSpace(5, 1)
        vecs = sp.vectors()
        assert len(vecs) == 25
        for v in vecs:
            for w in vecs:
                assert (sp.pairing(v, w) + sp.pairing(w, v)) % 5 == 0
        for v in vecs:
            if v == sp.zero:
                continue
            assert any(sp.pairing(v, w) != 0 for w in vecs)

    def test_rejects_bad_parameters(self):
        with pytest.raises(ValueError, match="odd prime"):
            SymplecticSpace(2, 1)
        with pytest.raises(ValueError, match="odd prime"):
            SymplecticSpace(9, 1)
        with pytest.raises(ValueError, match="positive"):
            SymplecticSpace(3, 0)


class TestExtraspecialGroup:
    @pytest.mark.parametrize("p,a,order", [(3, 1, 27), (5, 1, 125), (3, 2, 243)])
    def test_order(self, p, a, order):
        G = extraspecial_group(p, a)
        assert G.group.order == order

    def test_center_is_z_coordinate(self):
        G = extraspecial_group(3, 1)
        assert len(G.center_keys) == 3
        for z_key in G.center_keys:
            assert all(
                G.mul_key(z_key, g) == G.mul_key(g, z_key)
                for g in G.group.elements
            )

    def test_commutator_realizes_pairing(self):
        G = extraspecial_group(3, 1)
        sp = G.space
        for g in G.group.elements:
            for h in G.group.elements:
                assert G.commutator_key(g, h) == (sp.zero, sp.pairing(g[0], h[0]))

    def test_exponent_p(self):
        G = extraspecial_group(5, 1)
        table = G.group
        for i in range(table.order):
            assert table.power(i, 5) == table.id

    def test_rejects_even_characteristic(self):
        with pytest.raises(ValueError, match="odd"):
            build_extraspecial(2, 1)

    def test_cached(self):
        assert extraspecial_group(3, 1) is extraspecial_group(3, 1)


class TestTorusRealizations:
    @pytest.mark.parametrize("p,d,realization", [(t[0], t[2], t[3]) for t in TUPLES])
    def test_order_and_hypothesis(self, p, d, realization):
        act = torus_realization(p, d, realization)
        assert act.order == d
        assert act.hypothesis_H()

    def test_split_needs_divisor_of_p_minus_one(self):
        with pytest.raises(ValueError, match=r"realization impossible for \(p=3, d=4\)"):
            split_torus_action(3, 4)

    def test_nonsplit_needs_divisor_of_p_plus_one(self):
        with pytest.raises(ValueError, match=r"split needs d \| p-1 = 4, nonsplit needs d \| p\+1 = 6"):
            nonsplit_torus_action(5, 4)

    def test_impossible_both_ways(self):
        with pytest.raises(ValueError, match=r"realization impossible for \(p=3, d=5\)"):
            torus_realization(3, 5, "split")

    def test_unknown_realization(self):
        with pytest.raises(ValueError, match="unknown realization"):
            torus_realization(3, 2, "twisted")

    def test_rejects_non_symplectic_matrix(self):
        with pytest.raises(ValueError, match="preserve the symplectic form"):
            TorusAction(SymplecticSpace(3, 1), ((2, 0), (0, 1)))

    def test_rejects_singular_matrix(self):
        with pytest.raises(ValueError, match="singular"):
            TorusAction(SymplecticSpace(3, 1), ((1, 0), (2, 0)))

    def test_trivial_power_fixes_everything(self):
        act = torus_realization(3, 4, "nonsplit")
        assert len(act.fixed_vectors(0)) == 9
        for j in range(1, 4):
            assert act.fixed_vectors(j) == [(0, 0)]


class TestHeisRep:
    def test_dimension(self):
        assert heisenberg_rep(3, 1).dim == 3
        assert heisenberg_rep(5, 1).dim == 5

    def test_rejects_trivial_central_character(self):
        with pytest.raises(ValueError, match="nontrivial"):
            heisenberg_rep(3, 1, theta_exp=3)

    def test_central_elements_act_by_scalar(self):
        rep = heisenberg_rep(3, 1)
        zero_v = rep.group.space.zero
        for z in range(3):
            m = rep.matrix((zero_v, z))
            for i in range(rep.dim):
                for j in range(rep.dim):
                    expected = rep.theta(z) if i == j else 0
                    assert m[i][j] == expected

    def test_matrix_of_inverse_is_inverse(self):
        rep = heisenberg_rep(3, 1)
        group = rep.group
        for key in list(group.group.elements)[:9]:
            m = rep.matrix(key)
            mi = rep.matrix(group.inv_key(key))
            for i in range(rep.dim):
                for j in range(rep.dim):
                    acc = sum(
                        (m[i][k] * mi[k][j] for k in range(rep.dim)),
                        m[i][0] * 0,
                    )
                    assert acc == (1 if i == j else 0)

    def test_trace_product_matches_dense_trace(self):
        rep = heisenberg_rep(3, 1)
        dense = rep.matrix(((1, 2), 1))
        for key in ((0, 0), 0), ((1, 0), 2), ((2, 1), 0):
            prod_trace = rep.trace_product(dense, key)
            m = rep.matrix(key)
            direct = sum(
                (
                    dense[i][k] * m[k][i]
                    for i in range(rep.dim)
                    for k in range(rep.dim)
                ),
                dense[0][0] * 0,
            )
            assert prod_trace == direct


class TestExtensions:
    def test_extension_count_and_order(self):
        rep = heisenberg_rep(3, 1)
        act = torus_realization(3, 4, "nonsplit")
        exts = extend(rep, act)
        assert len(exts) == 4
        assert sorted(e.label for e in exts) == [0, 1, 2, 3]
        for e in exts:
            m = e.op(1)
            acc = m
            for _ in range(3):
                acc = tuple(
                    tuple(
                        sum((acc[i][k] * m[k][j] for k in range(3)), acc[0][0] * 0)
                        for j in range(3)
                    )
                    for i in range(3)
                )
            for i in range(3):
                for j in range(3):
                    assert acc[i][j] == (1 if i == j else 0)

    def test_seed_independence_up_to_scalar(self):
        rep = heisenberg_rep(3, 1)
        act = torus_realization(3, 4, "nonsplit")
        a1 = intertwiner(rep, act, seed=(0, 0))
        a2 = intertwiner(rep, act, seed=(1, 2))
        n = rep.dim
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    for l in range(n):
                        assert a1[i][j] * a2[k][l] == a1[k][l] * a2[i][j]

    def test_rejects_torus_order_divisible_by_p(self):
        rep = heisenberg_rep(3, 1)
        unipotent = TorusAction(SymplecticSpace(3, 1), ((1, 1), (0, 1)))
        assert unipotent.order == 3
        with pytest.raises(ValueError, match="prime to p"):
            extend(rep, unipotent)

    def test_rejects_hypothesis_H_failure(self):
        rep = heisenberg_rep(3, 2)
        mat = (
            (1, 0, 0, 0),
            (0, 2, 0, 0),
            (0, 0, 1, 0),
            (0, 0, 0, 2),
        )
        act = TorusAction(SymplecticSpace(3, 2), mat)
        assert act.order == 2
        assert not act.hypothesis_H()
        with pytest.raises(ValueError, match=r"hypothesis \(H\) fails"):
            extend(rep, act)

    @pytest.mark.parametrize("p,a,d,realization", TUPLES)
    def test_multiplicity_multisets(self, p, a, d, realization):
        rep = heisenberg_rep(p, a)
        act = torus_realization(p, d, realization)
        expected = EXPECTED_MULTISETS[(p, a, d)]
        for ext in extend(rep, act):
            mult = multiplicities(ext)
            assert sorted(mult.values()) == expected
            assert sum(mult.values()) == p**a

    @pytest.mark.parametrize("p,a,d,realization", TUPLES)
    def test_traces_are_signed_characters(self, p, a, d, realization):
        rep = heisenberg_rep(p, a)
        act = torus_realization(p, d, realization)
        eps = EXPECTED_EPSILON[(p, a, d)]
        seen = set()
        for ext in extend(rep, act):
            hits = [
                xi
                for xi in range(d)
                if all(
                    ext.trace(j) == eps * root_of_unity(d, xi * j)
                    for j in range(1, d)
                )
            ]
            assert len(hits) == 1
            seen.add(hits[0])
            for j in range(1, d):
                assert ext.trace(j).abs_square() == ONE
        assert seen == set(range(d))


class TestClosedForms:
    def test_expected_multiset_branches(self):
        assert expected_multiplicity_multiset(3, 1, 2) == [1, 2]
        assert expected_multiplicity_multiset(5, 1, 4) == [1, 1, 1, 2]
        assert expected_multiplicity_multiset(7, 1, 8) == [0] + [1] * 7

    def test_expected_multiset_rejects_bad_d(self):
        with pytest.raises(ValueError, match="divides neither"):
            expected_multiplicity_multiset(5, 1, 7)


class TestLemmaHReports:
    @pytest.mark.parametrize("p,a,d,realization", TUPLES)
    def test_all_checks_pass(self, p, a, d, realization):
        rpt = lemma_H_verify(p, a, d, realization)
        assert rpt.passed
        names = [c.name for c in rpt.checks]
        assert names == [
            "extension_count",
            "trace_sign_law",
            "trace_modulus_one",
            "multiplicity_multiset",
            "coset_trace_support",
        ]
        sign = rpt.checks[1]
        assert "epsilon = %d" % EXPECTED_EPSILON[(p, a, d)] in sign.details

    def test_consequences_pass(self):
        for p, a, d, realization in TUPLES:
            rpt = torus_action_consequences(
                extraspecial_group(p, a), torus_realization(p, d, realization)
            )
            assert rpt.passed
            assert [c.name for c in rpt.checks] == [
                "fixed_space_character_trivial",
                "fixed_space_form_nondegenerate_even",
                "torus_center_conjugacy_separated",
            ]


class TestCyclicPairSums:
    def test_no_joint_vanishing_up_to_order_50(self):
        assert cyclic_pair_sum_nonvanishing(50) is None
