"""Finite Heisenberg groups and their exact representation theory."""

import pytest

from skverify.errors import NotASubrepError, RepresentationInvalidError
from skverify.field import ONE, ZERO, fe, root_of_unity
from skverify.freealg import NcPoly, span
from skverify.heisenberg import (Character, GroupRep, HeisenbergGroup,
                                 antisymmetric_character, decompose,
                                 decompose_character, h2_gen_rep, h3_gen_rep,
                                 h4_gen_rep, h4_gen_rep_pm, h4_pm_basis,
                                 invariant_subspace, irrep_table, is_subrep,
                                 mat_id, mat_inv, mat_mul, rep_on_degree,
                                 subspace_character, twist_equivalence_table)


def test_group_orders_and_inverses():
    for n in (2, 3, 4):
        G = HeisenbergGroup(n)
        elems = list(G.elements())
        assert len(elems) == n ** 3
        for g in elems[:10]:
            assert G.mul(g, G.inv(g)) == G.identity()


def test_generator_reps_satisfy_weyl_commutation():
    # e1 e2 = (primitive n-th root) e2 e1, and both generators have order n
    for n, rep in ((2, h2_gen_rep()), (3, h3_gen_rep()), (4, h4_gen_rep())):
        z = root_of_unity(n)
        lhs = mat_mul(rep.e1, rep.e2)
        rhs = tuple(tuple(z * v for v in row) for row in mat_mul(rep.e2, rep.e1))
        assert lhs == rhs
        for gen in (rep.e1, rep.e2):
            power = gen
            for _ in range(n - 1):
                power = mat_mul(power, gen)
            assert power == mat_id(n)


def test_irrep_tables_complete():
    for n, count, sumsq in ((2, 5, 8), (3, 11, 27), (4, 22, 64)):
        table = irrep_table(n)
        assert len(table) == count
        assert sum(r.dim ** 2 for r in table) == sumsq
        # characters orthonormal under the group inner product
        chars = [r.character() for r in table]
        for i, ci in enumerate(chars):
            for j, cj in enumerate(chars):
                want = ONE if i == j else ZERO
                assert ci.inner(cj) == want


def test_rep_matrices_respect_group_law():
    G = HeisenbergGroup(3)
    rep = h3_gen_rep()
    elems = list(G.elements())
    for g in elems[:6]:
        for h in elems[:6]:
            assert mat_mul(rep.matrix(g), rep.matrix(h)) == rep.matrix(G.mul(g, h))
        assert mat_inv(rep.matrix(g)) == rep.matrix(G.inv(g))


def test_tensor_square_decompositions():
    assert decompose(rep_on_degree(h3_gen_rep(), 2)) == {"H3:V2": 3}
    assert decompose(rep_on_degree(h4_gen_rep(), 2)) == {
        "H4:V_{0,0}": 2, "H4:V_{0,1}": 2, "H4:V_{1,0}": 2, "H4:V_{1,1}": 2}


def test_antisymmetric_square_of_four_dim_rep():
    rep = h4_gen_rep()
    chi = antisymmetric_character(rep)
    got = decompose_character(rep.group, chi, 6)
    assert got == {"H4:V_{0,1}": 1, "H4:V_{1,0}": 1, "H4:V_{1,1}": 1}


def test_decompose_character_rejects_non_characters():
    G = HeisenbergGroup(2)
    rep = h2_gen_rep()
    chi = rep.character()
    broken = Character(G, {g: v + fe(1) if g == G.identity() else v
                           for g, v in chi.values.items()})
    with pytest.raises(RepresentationInvalidError):
        decompose_character(G, broken, 3)


def test_bad_generator_matrices_rejected():
    # order-4 matrices cannot represent the order-2 group
    G = HeisenbergGroup(2)
    bad = h4_gen_rep()
    with pytest.raises(RepresentationInvalidError):
        GroupRep(G, bad.e1, bad.e2, "broken")


def test_invariant_subspace_of_cubics():
    tp = rep_on_degree(h3_gen_rep(), 3)
    inv = invariant_subspace(tp)
    assert inv.dim == 3
    for b in inv.basis():
        row = b.to_row(3)
        for g in ((1, 0, 0), (0, 1, 0)):
            assert tp.act_row(g, row) == row


def test_invariant_subspace_restricted_to_subrep():
    x, y = NcPoly.gens(2)
    tp = rep_on_degree(h2_gen_rep(), 2)
    stable = span([x * x, y * y, x * y + y * x, x * y - y * x], 2, 2)
    inv = invariant_subspace(tp, stable)
    assert inv.dim <= stable.dim
    for b in inv.basis():
        row = b.to_row(2)
        for g in ((1, 0, 0), (0, 1, 0)):
            assert tp.act_row(g, row) == row


def test_is_subrep_and_rejection():
    x, y = NcPoly.gens(2)
    tp = rep_on_degree(h2_gen_rep(), 2)
    assert is_subrep(span([x * y - y * x], 2, 2), tp)
    assert not is_subrep(span([x * y], 2, 2), tp)
    with pytest.raises(NotASubrepError):
        subspace_character(span([x * y], 2, 2), tp)


def test_subspace_character_of_full_space():
    tp = rep_on_degree(h3_gen_rep(), 2)
    from skverify.freealg import Subspace
    chi = subspace_character(Subspace.full(3, 2), tp)
    base = h3_gen_rep().character()
    G = base.group
    for g in G.elements():
        assert chi.values[g] == base.values[g] * base.values[g]


def test_twist_table_shape():
    table = twist_equivalence_table()
    assert len(table) == 256
    assert sum(1 for v in table.values() if v) == 64
    # reflexive and symmetric
    for (s, t), v in table.items():
        assert table[(t, s)] == v
        if s == t:
            assert v


def test_pm_basis_conjugates_generator_rep():
    rep = h4_gen_rep()
    pm = h4_gen_rep_pm()
    basis = h4_pm_basis()
    binv = mat_inv(basis)
    assert mat_mul(binv, mat_mul(rep.e1, basis)) == pm.e1
    assert mat_mul(binv, mat_mul(rep.e2, basis)) == pm.e2


def test_conjugate_rep_has_same_character():
    rep = h3_gen_rep()
    basis = ((fe(1), fe(1), fe(0)), (fe(0), fe(1), fe(0)), (fe(0), fe(0), fe(1)))
    conj = rep.conjugate(basis, "H3:conj")
    av, bv = rep.character().values, conj.character().values
    assert av == bv
