"""Point-scheme matrices, the cubic curve group law, and membership checks.

Multilinearizing the degree-k relations of a family and reading off the
coefficients of the last tensor factor produces a matrix of (k-1)-linear
forms; a point sequence lies on the point scheme iff consecutive points sit
in its kernels.  For the 3-generator family this is the classical 3x3 matrix
whose determinant cuts out a Hesse cubic, and the kernel walk is translation
by tau = [a:b:c] under the chord-tangent group law with origin [1:-1:0].

The group law is computed exactly via polarization: restricted to the line
s*P + t*Q the cubic form f factors through the known roots at P and Q,

    f(sP + tQ) = s^2 t (grad f(P).Q) + s t^2 (grad f(Q).P),

so the third intersection needs no root finding and stays in the ground
field.  [1:-1:0] is a base point of the pencil (an inflection of every smooth
member), which makes neg(P) = third(P, O) and add = third(third(P,Q), O) the
standard chord-tangent group structure.
"""

from __future__ import annotations

from .errors import (OffCurveError, ParameterError, RankError, ShapeError,
                     SingularCurveError, VerificationError)
from . import linalg
from .families import (AbcParams, SextupleParams, build_s3, is_smooth_hesse,
                       s2_relation_polys, s3_relation_polys, s4_relation_polys)
from .field import ONE, ZERO, FieldElem, fe, root_of_unity
from .freealg import (MultiPoly, NcPoly, Subspace, multilinearize, proportional,
                      span, span_rows, sum_and_intersect)
from .graded import centralizer_slice, ideal_slice, normality_automorphism
from .heisenberg import h3_gen_rep, invariant_subspace, rep_on_degree


class ProjPoint:
    """Projective point with exact coordinates, first nonzero scaled to 1."""

    __slots__ = ("coords",)

    def __init__(self, coords) -> None:
        cs = tuple(fe(c) for c in coords)
        lead = next((c for c in cs if c), None)
        if lead is None:
            raise ParameterError("all projective coordinates are zero")
        inv = lead.inverse()
        self.coords = tuple(inv * c for c in cs)

    @staticmethod
    def of(*coords) -> "ProjPoint":
        return ProjPoint(coords)

    def __iter__(self):
        return iter(self.coords)

    def __len__(self):
        return len(self.coords)

    def __eq__(self, other):
        if not isinstance(other, ProjPoint):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return "[" + ":".join(str(c) for c in self.coords) + "]"


# -- multilinear coefficient matrices --------------------------------------

def coefficient_matrix(rels: list[NcPoly]) -> list[list[MultiPoly]]:
    """Rows: relations in their given order; columns: last-factor variables."""
    if not rels:
        raise ShapeError("no relations")
    n = rels[0].ngens
    out = []
    for r in rels:
        mp = multilinearize(r)
        out.append([mp.coefficient_of_var(mp.blocks - 1, j) for j in range(n)])
    return out


def s3_point_matrix(p: AbcParams, pt: ProjPoint) -> list[list[FieldElem]]:
    """The 3x3 matrix of linear forms evaluated at a point."""
    entries = coefficient_matrix(s3_relation_polys(p))
    return [[e.evaluate([tuple(pt)]) for e in row] for row in entries]


def s3_next_point(p: AbcParams, pt: ProjPoint) -> ProjPoint:
    """Unique kernel direction of the point matrix at ``pt``.

    Rank 3 means no successor (the point is off the scheme); rank < 2 means
    the successor is not unique.  Both raise RankError.
    """
    m = s3_point_matrix(p, pt)
    rows = [{j: v for j, v in enumerate(row) if v} for row in m]
    kernel = linalg.nullspace(rows, 3)
    if len(kernel) == 0:
        raise RankError("matrix is invertible: no successor point")
    if len(kernel) > 1:
        raise RankError("kernel dimension > 1: successor not unique")
    v = kernel[0]
    return ProjPoint.of(*(v.get(j, ZERO) for j in range(3)))


def s2_point_matrix_forms(p: AbcParams) -> list[list[MultiPoly]]:
    """The 2x2 matrix of bilinear forms from the two cubic relations."""
    return coefficient_matrix(s2_relation_polys(p))


def s2_reference_matrix(p: AbcParams) -> list[list[MultiPoly]]:
    """Closed-form comparison target for the 2x2 matrix."""
    a, b, c = fe(p.a), fe(p.b), fe(p.c)
    x0 = MultiPoly.var(2, 2, 0, 0)
    y0 = MultiPoly.var(2, 2, 0, 1)
    x1 = MultiPoly.var(2, 2, 1, 0)
    y1 = MultiPoly.var(2, 2, 1, 1)
    return [[a * (y0 * y1) + c * (x0 * x1), a * (x0 * y1) + b * (y0 * x1)],
            [a * (y0 * x1) + b * (x0 * y1), a * (x0 * x1) + c * (y0 * y1)]]


def s2_reference_curve(p: AbcParams) -> MultiPoly:
    """The (2,2)-form the determinant is checked against:

    (b^2-c^2) x0 y0 x1 y1 - ac (x0^2 x1^2 + y0^2 y1^2) + ab (x0^2 y1^2 + y0^2 x1^2).
    """
    a, b, c = fe(p.a), fe(p.b), fe(p.c)
    x0 = MultiPoly.var(2, 2, 0, 0)
    y0 = MultiPoly.var(2, 2, 0, 1)
    x1 = MultiPoly.var(2, 2, 1, 0)
    y1 = MultiPoly.var(2, 2, 1, 1)
    return ((b * b - c * c) * (x0 * y0 * x1 * y1)
            - a * c * (x0 * x0 * x1 * x1 + y0 * y0 * y1 * y1)
            + a * b * (x0 * x0 * y1 * y1 + y0 * y0 * x1 * x1))


def s2_point_determinant(p: AbcParams) -> dict:
    """Determinant of the 2x2 matrix, compared to the reference (2,2)-form.

    At a = 0 the determinant degenerates to a multiple of x0 y0 x1 y1
    (a product of coordinate lines); the record flags that case.
    """
    m = s2_point_matrix_forms(p)
    ref = s2_reference_matrix(p)
    det = m[0][0] * m[1][1] - m[0][1] * m[1][0]
    if not det:
        raise ParameterError("identically zero determinant")
    ratio = proportional(det, s2_reference_curve(p))
    return {
        "matrix_matches_reference": m == ref,
        "determinant": det,
        "ratio_to_reference": ratio,
        "proportional": ratio is not None and bool(ratio),
        "degenerate_product_of_lines": p.a == 0,
    }


# -- the Hesse cubic and its group law -------------------------------------

def hesse_cubic(p: AbcParams) -> MultiPoly:
    """abc(X^3 + Y^3 + Z^3) - (a^3 + b^3 + c^3) XYZ."""
    a, b, c = p.a, p.b, p.c
    x = MultiPoly.var(1, 3, 0, 0)
    y = MultiPoly.var(1, 3, 0, 1)
    z = MultiPoly.var(1, 3, 0, 2)
    return fe(a * b * c) * (x ** 3 + y ** 3 + z ** 3) \
        - fe(a ** 3 + b ** 3 + c ** 3) * (x * y * z)


def hesse_origin() -> ProjPoint:
    return ProjPoint.of(1, -1, 0)


def on_hesse(p: AbcParams, pt: ProjPoint) -> bool:
    return not hesse_cubic(p).evaluate([tuple(pt)])


def _require_curve(p: AbcParams, *pts: ProjPoint) -> MultiPoly:
    if not is_smooth_hesse(p):
        raise SingularCurveError(f"{p} fails the smoothness criterion")
    f = hesse_cubic(p)
    for pt in pts:
        if f.evaluate([tuple(pt)]):
            raise OffCurveError(f"{pt} is not on the curve at {p}")
    return f


def _grad_at(f: MultiPoly, pt) -> tuple[FieldElem, FieldElem, FieldElem]:
    return tuple(f.derivative(0, j).evaluate([pt]) for j in range(3))


def _dot(u, v) -> FieldElem:
    return sum((a * b for a, b in zip(u, v)), ZERO)


def _combine(s, pt1, t, pt2) -> ProjPoint:
    return ProjPoint.of(*(s * a + t * b for a, b in zip(pt1, pt2)))


def hesse_third(p: AbcParams, pt1: ProjPoint, pt2: ProjPoint) -> ProjPoint:
    """Third intersection of the curve with the line (or tangent) through the points."""
    f = _require_curve(p, pt1, pt2)
    if pt1 == pt2:
        n = _grad_at(f, tuple(pt1))
        n0, n1, n2 = n
        # directions orthogonal to the gradient; the point itself is one (Euler),
        # pick a second, independent one
        d = None
        for cand in ((ZERO, n2, -n1), (-n2, ZERO, n0), (n1, -n0, ZERO)):
            if not any(cand):
                continue
            u, v = tuple(pt1), cand
            minors = (u[0] * v[1] - u[1] * v[0], u[0] * v[2] - u[2] * v[0],
                      u[1] * v[2] - u[2] * v[1])
            if any(minors):
                d = cand
                break
        if d is None:
            raise SingularCurveError("gradient vanishes: singular point")
        big_a = _dot(_grad_at(f, d), tuple(pt1))
        big_b = f.evaluate([d])
        if not big_a and not big_b:
            raise SingularCurveError("tangent line lies on the curve")
        return _combine(big_b, pt1, -big_a, d)
    g1 = _dot(_grad_at(f, tuple(pt1)), tuple(pt2))
    g2 = _dot(_grad_at(f, tuple(pt2)), tuple(pt1))
    if not g1 and not g2:
        raise SingularCurveError("chord lies on the curve")
    return _combine(g2, pt1, -g1, pt2)


def hesse_neg(p: AbcParams, pt: ProjPoint) -> ProjPoint:
    return hesse_third(p, pt, hesse_origin())


def hesse_add(p: AbcParams, pt1: ProjPoint, pt2: ProjPoint) -> ProjPoint:
    return hesse_third(p, hesse_third(p, pt1, pt2), hesse_origin())


def hesse_tangent_third(p: AbcParams, pt: ProjPoint) -> ProjPoint:
    """Third intersection of the tangent at ``pt``; equals -2*pt in the group."""
    return hesse_third(p, pt, pt)


def group_law_record(p: AbcParams, count: int = 10) -> dict:
    """Group axioms of the chord construction on the first multiples of [a:b:c].

    pts[k] is the (k+1)-fold multiple, so besides identity, inverses,
    commutativity and associativity the walk itself is cross-checked:
    pts[i] + pts[j] must land on pts[i+j+1].
    """
    tau = ProjPoint.of(p.a, p.b, p.c)
    origin = hesse_origin()
    pts = [tau]
    while len(pts) < count:
        pts.append(hesse_add(p, pts[-1], tau))
    sums = {}
    for i in range(count):
        for j in range(i, count):
            sums[(i, j)] = hesse_add(p, pts[i], pts[j])
    record = {
        "count": count,
        "tau_on_curve": on_hesse(p, tau),
        "multiples_on_curve": all(on_hesse(p, q) for q in pts),
        "identity": all(hesse_add(p, q, origin) == q for q in pts),
        "inverses": all(hesse_add(p, q, hesse_neg(p, q)) == origin for q in pts),
        "commutative": all(sums[(i, j)] == hesse_add(p, pts[j], pts[i])
                           for i in range(count) for j in range(i + 1, count)),
        "multiple_consistency": all(sums[(i, j)] == pts[i + j + 1]
                                    for i in range(count) for j in range(i, count)
                                    if i + j + 1 < count),
        "associative": all(
            hesse_add(p, sums[(i, j)], pts[k]) == hesse_add(p, pts[i], sums[(j, k)])
            for i in range(count) for j in range(i, count) for k in range(j, count)),
    }
    record["pass"] = all(v for k, v in record.items() if k != "count")
    return record


# -- degree-3 structure of the 3-generator family --------------------------

def invariant_cubic_basis() -> list[NcPoly]:
    """The three degree-3 invariants of the order-27 group action:

    f1 = zxy + xyz + yzx,  f2 = yxz + zyx + xzy,  f3 = x^3 + y^3 + z^3.
    """
    x, y, z = NcPoly.gens(3)
    f1 = z * x * y + x * y * z + y * z * x
    f2 = y * x * z + z * y * x + x * z * y
    f3 = x ** 3 + y ** 3 + z ** 3
    return [f1, f2, f3]


def s3_degree3_overlap(p: AbcParams) -> dict:
    """Dimensions of R*V + V*R in degree 3 and the line they intersect in."""
    pres = build_s3(p)
    rel = pres.relations[0][1]
    gens = NcPoly.gens(3)
    rv = span([r * g for r in rel.basis() for g in gens])
    vr = span([g * r for r in rel.basis() for g in gens])
    total, meet = sum_and_intersect(rv, vr)
    f1, f2, f3 = invariant_cubic_basis()
    combo = fe(p.a) * f1 + fe(p.b) * f2 + fe(p.c) * f3
    combo_in_meet = meet.dim == 1 and meet.contains(combo)
    inv = invariant_subspace(rep_on_degree(h3_gen_rep(), 3), total)
    return {
        "rv_dim": rv.dim,
        "vr_dim": vr.dim,
        "sum_dim": total.dim,
        "meet_dim": meet.dim,
        "meet_is_relation_combo": combo_in_meet,
        "invariant_dim": inv.dim,
        "invariant_is_meet": inv.rows == meet.rows,
    }


def verify_c3_description(p: AbcParams) -> dict:
    """Certify the degree-3 central element against the invariant cubics.

    The central element is only defined modulo the ideal, and the span of the
    invariant cubics meets the degree-3 ideal slice in the line through
    a*f1 + b*f2 + c*f3, so the coefficient triple is a point of P^2 modulo
    that line.  The check is therefore proportionality of canonical residues:
    the combination with coefficients -2*tau (the tangent-third of [a:b:c])
    must reduce to a nonzero multiple of the central element's residue.
    """
    if not is_smooth_hesse(p):
        raise SingularCurveError(f"{p} fails the smoothness criterion")
    from .families import tau_order_flag
    flag = tau_order_flag(p)
    if flag in ("order1", "order3"):
        raise ParameterError(f"translation point has {flag}: not in the verified regime")
    pres = build_s3(p)
    cents = centralizer_slice(pres, 3)
    record: dict = {"tau_flag": flag, "centralizer_dim": cents.dim}
    basis = invariant_cubic_basis()
    inv = invariant_subspace(rep_on_degree(h3_gen_rep(), 3))
    record["invariant_dim"] = inv.dim
    record["invariant_basis_match"] = span(basis) == inv
    if cents.dim != 1:
        record["pass"] = False
        record["reason"] = "centralizer dimension is not 1"
        return record
    c3 = cents.basis()[0]
    j3 = ideal_slice(pres, 3)
    tangent = hesse_tangent_third(p, ProjPoint.of(p.a, p.b, p.c))
    record["coefficient_triple"] = tuple(tangent)
    combo = sum((t * f for t, f in zip(tangent, basis)), NcPoly.zero(3))
    ratio = proportional(j3.reduce(combo), j3.reduce(c3))
    record["ratio"] = ratio
    cert = normality_automorphism(pres, c3)
    record["sigma_is_identity"] = cert.is_central
    record["pass"] = bool(record["invariant_basis_match"] and ratio and cert.is_central)
    return record


# -- minors of the 6x4 matrix of the 4-generator family --------------------

def _det(m: list[list[MultiPoly]]) -> MultiPoly:
    if len(m) == 1:
        return m[0][0]
    shape = next(e for row in m for e in row)
    total = MultiPoly.zero(shape.blocks, shape.nvars)
    for j, e in enumerate(m[0]):
        if not e:
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = e * _det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def s4_reference_matrix(l10, l01, l11) -> list[list[MultiPoly]]:
    """Closed-form 6x4 matrix for the square-root parameter slice."""
    l10, l01, l11 = fe(l10), fe(l01), fe(l11)
    v = [MultiPoly.var(1, 4, 0, j) for j in range(4)]
    v00, v10, v01, v11 = v
    return [
        [-v10, v00, -l10 * v11, -l10 * v01],
        [l10 * v10, l10 * v00, -v11, v01],
        [-v01, -l01 * v11, v00, -l01 * v10],
        [l01 * v01, v11, l01 * v00, -v10],
        [-v11, -l11 * v01, -l11 * v10, v00],
        [-l11 * v11, -v01, v10, -l11 * v00],
    ]


def _poly_row(mp: MultiPoly, index: dict) -> linalg.Row:
    return {index[key]: c for key, c in mp.terms.items()}


def quadric_pair(l10, l01, l11) -> tuple[MultiPoly, MultiPoly, FieldElem]:
    """The two quadrics cutting the point scheme, and their modulus lambda.

    lambda = l10 (l01 l11 + 1) / (l01 - l11); values in {0, +-1, +-i} make the
    pencil degenerate and raise.
    """
    l10, l01, l11 = fe(l10), fe(l01), fe(l11)
    den = l01 - l11
    if not den:
        raise ParameterError("modulus undefined on this chart (l01 = l11)")
    lam = l10 * (l01 * l11 + fe(1)) / den
    ii = root_of_unity(4)
    if any(lam == v for v in (fe(0), fe(1), fe(-1), ii, -ii)):
        raise ParameterError(f"degenerate modulus {lam}")
    v = [MultiPoly.var(1, 4, 0, j) for j in range(4)]
    v00, v10, v01, v11 = v
    q1 = v00 * v00 + v10 * v10 - lam * (v01 * v01 - v11 * v11)
    q2 = v01 * v01 + v11 * v11 - lam * (v00 * v00 - v10 * v10)
    return q1, q2, lam


def _quartic_membership(minors, q1, q2) -> list[bool]:
    keys = set()
    for m in minors:
        keys.update(m.terms)
    deg2 = []
    for i in range(4):
        for j in range(i, 4):
            e = [0, 0, 0, 0]
            e[i] += 1
            e[j] += 1
            deg2.append((tuple(e),))
    products = []
    for q in (q1, q2):
        for mono in deg2:
            products.append(q * MultiPoly(1, 4, {mono: ONE}))
    for pr in products:
        keys.update(pr.terms)
    index = {k: i for i, k in enumerate(sorted(keys))}
    pivots, rows = linalg.rref([_poly_row(pr, index) for pr in products])
    return [not linalg.reduce_mod(_poly_row(m, index), pivots, rows) for m in minors]


def s4_minor_membership(l10, l01, l11) -> dict:
    """All fifteen 4x4 minors against the span of quartic multiples of the quadrics.

    Also re-runs the membership with the modulus shifted by 1, where at least
    one minor must escape the span.
    """
    sx = SextupleParams.from_sqrt(l10, l01, l11)
    assembled = coefficient_matrix(s4_relation_polys(sx))
    reference = s4_reference_matrix(l10, l01, l11)
    q1, q2, lam = quadric_pair(l10, l01, l11)
    minors = []
    rows6 = list(range(6))
    from itertools import combinations
    for quad in combinations(rows6, 4):
        minors.append(_det([assembled[r] for r in quad]))
    members = _quartic_membership(minors, q1, q2)
    v = [MultiPoly.var(1, 4, 0, j) for j in range(4)]
    v00, v10, v01, v11 = v
    lam_p = lam + fe(1)
    p1 = v00 * v00 + v10 * v10 - lam_p * (v01 * v01 - v11 * v11)
    p2 = v01 * v01 + v11 * v11 - lam_p * (v00 * v00 - v10 * v10)
    perturbed = _quartic_membership(minors, p1, p2)
    return {
        "sextuple": sx,
        "alpha": sx.alpha(),
        "lambda": lam,
        "matrix_matches_reference": assembled == reference,
        "minor_count": len(minors),
        "memberships": members,
        "all_members": all(members),
        "perturbed_failures": sum(1 for b in perturbed if not b),
        "pass": all(members) and assembled == reference
                and sum(1 for b in perturbed if not b) >= 1,
    }


def s2_centralizer_record(p: AbcParams) -> dict:
    """Degree-4 centralizer of the 2-generator family; membership of the quartic."""
    from .families import build_s2, s2_central_quartic
    pres = build_s2(p)
    cs = centralizer_slice(pres, 4)
    j4 = ideal_slice(pres, 4)
    c4 = s2_central_quartic(p)
    if not c4:
        raise ParameterError("closed-form quartic vanishes identically at these parameters")
    resid = j4.reduce(c4)
    return {
        "centralizer_dim": cs.dim,
        "quartic_in_centralizer": bool(resid) and cs.contains(resid),
        "quartic_nonzero_mod_ideal": bool(resid),
    }
