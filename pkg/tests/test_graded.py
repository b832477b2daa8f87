"""Graded quotients: ideal slices, Hilbert dimensions, centralizers, normality.

Small presentations with hand-countable monomial bases pin down the slice
recurrence before the three main families rely on it.
"""

from fractions import Fraction

import pytest

from skverify.errors import DegreeError, ParameterError
from skverify.families import (AbcParams, AlphaTriple, SextupleParams,
                               alpha_from_abc, build_s2, build_s3, build_s4)
from skverify.freealg import NcPoly, acomm, comm
from skverify.graded import (Presentation, abelianized_hilbert,
                             centralizer_slice, hilbert_dims, ideal_slice,
                             normality_automorphism, quotient_hilbert,
                             set_disk_cache)
import skverify.graded as graded_module


def series_coeffs(numer, denom, count):
    """Taylor coefficients of numer(t)/denom(t), exact division."""
    out = []
    state = list(Fraction(c) for c in numer)
    state += [Fraction(0)] * (count + len(denom))
    lead = Fraction(denom[0])
    for m in range(count):
        c = state[m] / lead
        out.append(c)
        for j, d in enumerate(denom):
            state[m + j] -= c * d
    return out


def test_series_helper_against_geometric():
    assert series_coeffs([1], [1, -1], 5) == [1, 1, 1, 1, 1]
    assert series_coeffs([1], [1, -2, 1], 5) == [1, 2, 3, 4, 5]


S3_POINTS = [AbcParams.of(1, 2, 3), AbcParams.of(1, Fraction(-1, 3), -2),
             AbcParams.of(2, 5, 7)]
S2_POINTS = [AbcParams.of(1, 2, 3), AbcParams.of(1, Fraction(3, 4), Fraction(-3, 5)),
             AbcParams.of(3, 1, 2)]


def test_commutative_toy_presentations():
    x, y = NcPoly.gens(2)
    comm2 = Presentation.make("xy", [comm(x, y)])
    assert hilbert_dims(comm2, 6).dims == (1, 2, 3, 4, 5, 6, 7)
    gens3 = NcPoly.gens(3)
    comm3 = Presentation.make("xyz", [comm(a, b) for a in gens3 for b in gens3
                                      if a is not b])
    assert hilbert_dims(comm3, 6).dims == (1, 3, 6, 10, 15, 21, 28)


def test_single_square_quotient_counts_fibonacci_words():
    # words with no "xx" factor: 1, 2, 3, 5, 8, 13, 21
    x, y = NcPoly.gens(2)
    p = Presentation.make("xy", [x * x])
    assert hilbert_dims(p, 6).dims == (1, 2, 3, 5, 8, 13, 21)


def test_exterior_style_collapse():
    x, y = NcPoly.gens(2)
    p = Presentation.make("xy", [x * x, y * y, acomm(x, y)])
    assert hilbert_dims(p, 5).dims == (1, 2, 1, 0, 0, 0)


def test_ideal_slice_absorbs_products():
    x, y = NcPoly.gens(2)
    p = Presentation.make("xy", [x * x - y * y])
    rel = x * x - y * y
    for left, right in ((x, y), (y * x, NcPoly.one(2)), (NcPoly.one(2), x * y)):
        elem = left * rel * right
        s = ideal_slice(p, elem.degree())
        assert s.contains(elem)


def test_empty_relation_set_rejected():
    with pytest.raises(ParameterError):
        Presentation.make("xy", [])


def test_degree_ceiling_enforced():
    x, y = NcPoly.gens(2)
    p = Presentation.make("xy", [comm(x, y)])
    assert p.degree_ceiling == 6
    with pytest.raises(DegreeError):
        hilbert_dims(p, p.degree_ceiling + 1)


def test_three_generator_family_matches_polynomial_growth():
    for p in S3_POINTS:
        dims = hilbert_dims(build_s3(p), 6).dims
        assert dims == tuple((m + 1) * (m + 2) // 2 for m in range(7))


def test_two_generator_family_quarter_squares():
    for p in S2_POINTS:
        dims = hilbert_dims(build_s2(p), 6).dims
        assert dims == tuple((m + 2) ** 2 // 4 for m in range(7))


def test_four_generator_family_matches_polynomial_growth():
    triples = [alpha_from_abc(p) for p in S2_POINTS]
    triples.append(AlphaTriple.complete(Fraction(4, 5), Fraction(-3, 2)))
    for t in triples:
        dims = hilbert_dims(build_s4(SextupleParams.from_alpha(t)), 5).dims
        assert dims == tuple((m + 1) * (m + 2) * (m + 3) // 6 for m in range(6))


def test_quotient_by_central_cubic_matches_curve_series():
    # (1 - t^3) / (1 - t)^3
    want = tuple(int(c) for c in series_coeffs([1, 0, 0, -1], [1, -3, 3, -1], 7))
    assert want == (1, 3, 6, 9, 12, 15, 18)
    for p in S3_POINTS:
        pres = build_s3(p)
        c3 = centralizer_slice(pres, 3).basis()[0]
        dims = quotient_hilbert(pres, [c3], 6).dims
        assert dims == want


def test_abelianized_toy_case():
    g = NcPoly.gens(3)
    p = Presentation.make("xyz", [g[0] * g[0]])
    # commutative monomials with x-exponent at most one: 2m + 1 of degree m
    assert abelianized_hilbert(p, 4).dims == (1, 3, 5, 7, 9)


def test_abelianized_four_generator_family():
    for t in (alpha_from_abc(AbcParams.of(1, 2, 3)),
              AlphaTriple.complete(Fraction(4, 5), Fraction(-3, 2))):
        pres = build_s4(SextupleParams.from_alpha(t))
        assert abelianized_hilbert(pres, 4).dims == (1, 4, 4, 4, 4)


def test_centralizer_in_commutative_quotient_is_everything():
    x, y = NcPoly.gens(2)
    p = Presentation.make("xy", [comm(x, y)])
    assert centralizer_slice(p, 2).dim == 3
    assert centralizer_slice(p, 3).dim == 4


def test_centralizer_detects_noncommutativity():
    x, y = NcPoly.gens(2)
    p = Presentation.make("xy", [x * x])
    assert centralizer_slice(p, 1).dim == 0


def test_normality_certificates_on_toy_quotients():
    x, y = NcPoly.gens(2)
    comm2 = Presentation.make("xy", [comm(x, y)])
    cert = normality_automorphism(comm2, x)
    assert cert.is_central and cert.is_normal

    skew = Presentation.make("xy", [acomm(x, y)])
    cert = normality_automorphism(skew, x)
    assert cert.is_normal and not cert.is_central
    assert cert.sigma == ((1, 0), (0, -1))

    xsq = Presentation.make("xy", [x * x])
    cert = normality_automorphism(xsq, x)
    assert not cert.is_normal and cert.sigma is None


def test_disk_cache_round_trip(tmp_path):
    p = build_s3(AbcParams.of(1, 2, 3))
    try:
        set_disk_cache(str(tmp_path))
        graded_module._SLICE_CACHE.clear()
        first = hilbert_dims(p, 5).dims
        assert any(tmp_path.iterdir())
        # force the reload path
        graded_module._SLICE_CACHE.clear()
        assert hilbert_dims(p, 5).dims == first
    finally:
        set_disk_cache(None)
        graded_module._SLICE_CACHE.clear()
