"""Acceptance gate: the ten headline checks, one printed verdict line each.

Each test prints exactly one "criterion NN <name>: PASS/FAIL" line and then
asserts, so a red criterion is visible in the log even when the assertion
message scrolls away.  All comparisons are exact; nothing is approximate.
"""

from skverify.cli import main
from skverify.families import SextupleParams, build_s2, build_s3, build_s4
from skverify.freealg import member
from skverify.graded import centralizer_slice, hilbert_dims, quotient_hilbert
from skverify.heisenberg import (HeisenbergGroup, antisymmetric_character,
                                 decompose, decompose_character, h3_gen_rep,
                                 h4_gen_rep, invariant_subspace, irrep_table,
                                 rep_on_degree, twist_equivalence_table)
from skverify.pointscheme import (ProjPoint, group_law_record, hesse_add,
                                  hesse_origin, hesse_tangent_third,
                                  invariant_cubic_basis, s2_point_determinant,
                                  s3_degree3_overlap, s3_next_point,
                                  s4_minor_membership, verify_c3_description)
from skverify.sampling import sample_parameters
from skverify.veronese import (central_pair, extract_c4, verify_c4_central,
                               verify_central_pair, verify_quotient_map)

SEED = 7
ABC3 = sample_parameters("s3", 3, SEED)
ABC2 = sample_parameters("s2", 3, SEED)
ALPHAS = sample_parameters("s4", 3, SEED)
LAMBDAS = sample_parameters("sqrt", 3, SEED)


def verdict(num, name, ok):
    print(f"criterion {num:02d} {name}: {'PASS' if ok else 'FAIL'}", flush=True)
    assert ok, f"criterion {num} {name}"


def test_criterion_01_hilbert_functions():
    ok = True
    for p in ABC3:
        ok &= hilbert_dims(build_s3(p), 6).dims == tuple(
            (m + 1) * (m + 2) // 2 for m in range(7))
    for p in ABC2:
        ok &= hilbert_dims(build_s2(p), 6).dims == tuple(
            (m + 2) ** 2 // 4 for m in range(7))
    for t in ALPHAS:
        pres = build_s4(SextupleParams.from_alpha(t))
        ok &= hilbert_dims(pres, 5).dims == tuple(
            (m + 1) * (m + 2) * (m + 3) // 6 for m in range(6))
    verdict(1, "hilbert functions of all three families", ok)


def test_criterion_02_degree3_relation_overlap():
    ok = True
    for p in ABC3:
        rec = s3_degree3_overlap(p)
        ok &= rec["sum_dim"] == 17
        ok &= rec["meet_dim"] == 1
        ok &= rec["meet_is_relation_combo"]
    verdict(2, "degree-3 overlap of shifted relation spaces", ok)


def test_criterion_03_representation_suite():
    ok = True
    for n, count, sumsq in ((2, 5, 8), (3, 11, 27), (4, 22, 64)):
        table = irrep_table(n)
        ok &= len(table) == count
        ok &= sum(r.dim ** 2 for r in table) == sumsq
    ok &= decompose(rep_on_degree(h3_gen_rep(), 2)) == {"H3:V2": 3}
    ok &= decompose(rep_on_degree(h4_gen_rep(), 2)) == {
        "H4:V_{0,0}": 2, "H4:V_{0,1}": 2, "H4:V_{1,0}": 2, "H4:V_{1,1}": 2}
    wedge = decompose_character(HeisenbergGroup(4),
                                antisymmetric_character(h4_gen_rep()), 6)
    ok &= wedge == {"H4:V_{0,1}": 1, "H4:V_{1,0}": 1, "H4:V_{1,1}": 1}
    table = twist_equivalence_table()
    ok &= len(table) == 256 and sum(1 for v in table.values() if v) == 64
    inv = invariant_subspace(rep_on_degree(h3_gen_rep(), 3))
    basis = invariant_cubic_basis()
    ok &= inv.dim == 3
    ok &= all(member(b, inv) for b in basis)
    for p in ABC3:
        ok &= s3_degree3_overlap(p)["invariant_dim"] == 1
    verdict(3, "heisenberg representation decompositions", ok)


def test_criterion_04_central_cubic():
    ok = True
    for p in ABC3:
        rec = verify_c3_description(p)
        ok &= rec["centralizer_dim"] == 1
        ok &= rec["invariant_basis_match"]
        ok &= rec["ratio"] is not None
        ok &= rec["sigma_is_identity"]
        ok &= rec["pass"]
        tau = ProjPoint.of(p.a, p.b, p.c)
        want = hesse_tangent_third(p, tau)
        ok &= ProjPoint.of(*rec["coefficient_triple"]) == want
    verdict(4, "degree-3 center described by the tangent construction", ok)


def test_criterion_05_central_quartic():
    ok = True
    for p in ABC2:
        rec = verify_c4_central(p)
        ok &= rec["quartic_in_centralizer"]
        ok &= rec["quartic_nonzero_mod_ideal"]
        ok &= rec["sigma_is_identity"]
        ok &= rec["quartic_invariant"]
        ok &= rec["centralizer_dim"] >= 1
    verdict(5, "invariant central quartic in the 2-generator family", ok)


def test_criterion_06_central_pair_and_quotient_series():
    ok = True
    for t in ALPHAS:
        pres = build_s4(SextupleParams.from_alpha(t))
        ok &= centralizer_slice(pres, 2).dim == 2
    for p in ABC2:
        rec = verify_central_pair(p)
        ok &= rec["omega1_central"] and rec["omega2_central"]
        ok &= rec["independent_mod_relations"]
        ok &= rec["pass"]
        cp = central_pair(p)
        pres = build_s4(cp.sextuple)
        dims = quotient_hilbert(pres, [cp.omega1, cp.omega2], 5).dims
        ok &= dims == (1, 4, 8, 12, 16, 20)
    verdict(6, "two central quadrics and the quotient growth", ok)


def test_criterion_07_quotient_map():
    ok = True
    for p in ABC2:
        rec = verify_quotient_map(p)
        ok &= rec["pass"]
        ok &= rec["kernel_dim"] == 7
        ok &= rec["relations_in_ideal"] == (True,) * 7
        ok &= rec["sextuple_matches_closed_form"]
        ok &= rec["alpha_matches_closed_form"]
        ok &= rec["fivefold_holds"]
        ok &= rec["elements_are_eigenvectors"]
        ok &= rec["image_equivariance"]
        img = extract_c4(p)
        ok &= img["omega1_maps_to_zero"]
        ok &= img["mu_nonzero"]
    verdict(7, "equivariant quotient map onto the squared generators", ok)


def test_criterion_08_point_matrices():
    ok = True
    for p in ABC3:
        tau = ProjPoint.of(p.a, p.b, p.c)
        ok &= s3_next_point(p, hesse_origin()) == tau
        two = hesse_add(p, tau, tau)
        ok &= s3_next_point(p, tau) == two
        ok &= s3_next_point(p, two) == hesse_add(p, two, tau)
    for p in ABC2:
        rec = s2_point_determinant(p)
        ok &= rec["matrix_matches_reference"]
        ok &= rec["proportional"]
    for lam in LAMBDAS:
        rec = s4_minor_membership(*lam)
        ok &= rec["pass"]
        ok &= rec["minor_count"] == 15 and rec["all_members"]
        ok &= rec["perturbed_failures"] >= 1
    verdict(8, "point matrices, determinants, and minor membership", ok)


def test_criterion_09_group_law():
    ok = True
    for p in ABC3:
        rec = group_law_record(p, 10)
        ok &= rec["count"] >= 10
        ok &= rec["pass"]
    verdict(9, "cubic group law on ten translation multiples", ok)


def test_criterion_10_deterministic_reports(tmp_path):
    first = tmp_path / "a.txt"
    second = tmp_path / "b.txt"
    code1 = main(["verify", "all", "--samples", "3", "--seed", "7",
                  "--out", str(first)])
    code2 = main(["verify", "all", "--samples", "3", "--seed", "7",
                  "--out", str(second)])
    strip = lambda t: "\n".join(
        l for l in t.splitlines() if not l.startswith("timing"))
    ok = code1 == 0 and code2 == 0
    ok &= strip(first.read_text()) == strip(second.read_text())
    verdict(10, "byte-identical reruns outside the timing section", ok)
