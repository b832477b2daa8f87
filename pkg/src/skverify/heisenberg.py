"""Finite Heisenberg groups of order n^3 and their exact character theory.

Group elements are normal forms (i, j, k) standing for e1^i e2^j z^k with z
the commutator [e1, e2], central of order n.  From e2 e1 = e1 e2 z^-1 the
product rule is

    (i1,j1,k1)(i2,j2,k2) = (i1+i2, j1+j2, k1+k2 - j1*i2)   (mod n).

All the representations used here have generalized permutation matrices over
Q(zeta_12), so every trace, inner product and projector is exact.  Characters
decide decompositions; multiplicities that fail to be nonnegative integers
raise, since that can only mean the input matrices violate the presentation.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import NotASubrepError, RepresentationInvalidError, ShapeError
from .field import ONE, ZERO, FieldElem, fe, root_of_unity
from .freealg import Subspace, index_to_word, span_rows

Matrix = tuple[tuple[FieldElem, ...], ...]


def mat_id(n: int) -> Matrix:
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(tuple(sum((a[i][k] * b[k][j] for k in range(n)), ZERO)
                       for j in range(n)) for i in range(n))


def mat_pow(a: Matrix, e: int) -> Matrix:
    out = mat_id(len(a))
    for _ in range(e):
        out = mat_mul(out, a)
    return out


def mat_inv(a: Matrix) -> Matrix:
    """Inverse via row reduction of [a | id]; raises on singular input."""
    from . import linalg
    n = len(a)
    rows = []
    for i in range(n):
        row = {j: a[i][j] for j in range(n) if a[i][j]}
        row[n + i] = ONE
        rows.append(row)
    pivots, prows = linalg.rref(rows)
    if pivots != tuple(range(n)):
        raise ShapeError("matrix is singular")
    return tuple(tuple(prows[i].get(n + j, ZERO) for j in range(n)) for i in range(n))


def mat_trace(a: Matrix) -> FieldElem:
    return sum((a[i][i] for i in range(len(a))), ZERO)


class HeisenbergGroup:
    """The finite Heisenberg group on two generators of order n."""

    def __init__(self, n: int) -> None:
        if n < 2:
            raise ShapeError("order must be >= 2")
        self.n = n

    @property
    def order(self) -> int:
        return self.n ** 3

    def identity(self):
        return (0, 0, 0)

    def mul(self, g, h):
        n = self.n
        return ((g[0] + h[0]) % n, (g[1] + h[1]) % n, (g[2] + h[2] - g[1] * h[0]) % n)

    def inv(self, g):
        n = self.n
        # solve g * h = identity
        i, j, k = g
        return ((-i) % n, (-j) % n, (-k - j * i) % n)

    def elements(self):
        n = self.n
        return [(i, j, k) for i in range(n) for j in range(n) for k in range(n)]

    def __eq__(self, other):
        return isinstance(other, HeisenbergGroup) and self.n == other.n

    def __hash__(self):
        return hash(("heisenberg", self.n))

    def __repr__(self):
        return f"HeisenbergGroup({self.n})"


class Character:
    """Exact class function on a Heisenberg group."""

    def __init__(self, group: HeisenbergGroup, values: dict) -> None:
        self.group = group
        self.values = {g: fe(v) for g, v in values.items()}

    def __call__(self, g) -> FieldElem:
        return self.values.get(g, ZERO)

    def inner(self, other: "Character") -> FieldElem:
        """<self, other> = |G|^-1 sum chi(g) conj(psi(g))."""
        total = ZERO
        for g in self.group.elements():
            a = self(g)
            b = other(g)
            if a and b:
                total = total + a * b.conj()
        return total / self.group.order

    def __mul__(self, other: "Character") -> "Character":
        return Character(self.group, {g: self(g) * other(g) for g in self.group.elements()})

    def __pow__(self, d: int) -> "Character":
        return Character(self.group, {g: self(g) ** d for g in self.group.elements()})

    def __eq__(self, other):
        if not isinstance(other, Character):
            return NotImplemented
        gs = self.group.elements()
        return self.group == other.group and all(self(g) == other(g) for g in gs)


class GroupRep:
    """Representation given by the matrices of e1 and e2.

    The defining relations e1^n = e2^n = 1, z = [e1,e2] central with z^n = 1
    are checked at construction; matrices act on column vectors, so column j
    of e1 is the image of basis vector j.
    """

    def __init__(self, group: HeisenbergGroup, e1: Matrix, e2: Matrix, label: str) -> None:
        self.group = group
        self.e1 = tuple(tuple(fe(x) for x in row) for row in e1)
        self.e2 = tuple(tuple(fe(x) for x in row) for row in e2)
        self.label = label
        self.dim = len(self.e1)
        n = group.n
        ident = mat_id(self.dim)
        if mat_pow(self.e1, n) != ident or mat_pow(self.e2, n) != ident:
            raise RepresentationInvalidError(f"{label}: generator order is not {n}")
        z = mat_mul(mat_mul(self.e1, self.e2),
                    mat_mul(mat_pow(self.e1, n - 1), mat_pow(self.e2, n - 1)))
        self._z = z
        if mat_pow(z, n) != ident:
            raise RepresentationInvalidError(f"{label}: commutator order does not divide {n}")
        if mat_mul(z, self.e1) != mat_mul(self.e1, z) or mat_mul(z, self.e2) != mat_mul(self.e2, z):
            raise RepresentationInvalidError(f"{label}: commutator is not central")
        self._matrices: dict = {}

    def matrix(self, g) -> Matrix:
        m = self._matrices.get(g)
        if m is None:
            i, j, k = g
            m = mat_mul(mat_pow(self.e1, i), mat_mul(mat_pow(self.e2, j), mat_pow(self._z, k)))
            self._matrices[g] = m
        return m

    def character(self) -> Character:
        return Character(self.group, {g: mat_trace(self.matrix(g)) for g in self.group.elements()})

    def conjugate(self, c: Matrix, label: str) -> "GroupRep":
        """The same representation written in the basis given by the columns of c."""
        cinv = mat_inv(c)
        return GroupRep(self.group,
                        mat_mul(cinv, mat_mul(self.e1, c)),
                        mat_mul(cinv, mat_mul(self.e2, c)),
                        label)

    def __repr__(self):
        return f"GroupRep({self.label}, dim={self.dim})"


class TensorPowerRep:
    """d-th tensor power of a representation, acting on degree-d word vectors."""

    def __init__(self, base: GroupRep, degree: int) -> None:
        if degree < 0:
            raise ShapeError("negative tensor power")
        self.base = base
        self.degree = degree
        self.group = base.group
        self.dim = base.dim ** degree

    def character(self) -> Character:
        return self.base.character() ** self.degree

    def act_row(self, g, row) -> dict:
        """Apply g to a sparse vector over degree-d word columns."""
        m = self.base.matrix(g)
        dim = self.base.dim
        out: dict = {}
        for col, coeff in row.items():
            letters = index_to_word(col, dim, self.degree)
            acc = {0: coeff}
            for a in letters:
                nxt: dict = {}
                for idx, v in acc.items():
                    base_idx = idx * dim
                    for r in range(dim):
                        e = m[r][a]
                        if e:
                            key = base_idx + r
                            s = nxt.get(key, ZERO) + v * e
                            if s:
                                nxt[key] = s
                            elif key in nxt:
                                del nxt[key]
                acc = nxt
            for k, v in acc.items():
                s = out.get(k, ZERO) + v
                if s:
                    out[k] = s
                elif k in out:
                    del out[k]
        return out

    def __repr__(self):
        return f"TensorPowerRep({self.base.label}, degree={self.degree})"


def rep_on_degree(rep: GroupRep, d: int) -> TensorPowerRep:
    """Action on the degree-d component of the free algebra on the basis."""
    return TensorPowerRep(rep, d)


# -- the irreducible representations ---------------------------------------

def _perm_shift_matrix(n: int, shift: int) -> Matrix:
    """Basis vector k goes to basis vector k+shift mod n."""
    return tuple(tuple(ONE if r == (c + shift) % n else ZERO for c in range(n))
                 for r in range(n))


def _diag(vals) -> Matrix:
    n = len(vals)
    return tuple(tuple(vals[i] if i == j else ZERO for j in range(n)) for i in range(n))


@lru_cache(maxsize=None)
def irrep_table(n: int) -> tuple[GroupRep, ...]:
    """All irreducibles of the order-n^3 Heisenberg group, for n in {2, 3, 4}.

    n=2: four characters and one 2-dim (4*1+4 = 8).
    n=3: nine characters and two 3-dim (9*1+9+9 = 27).
    n=4: sixteen characters, four 2-dim through the order-8 quotient, and two
         faithful 4-dim (16*1+4*4+16+16 = 64).
    """
    if n not in (2, 3, 4):
        raise ShapeError(f"no irreducible table for n={n}")
    g = HeisenbergGroup(n)
    om = root_of_unity(n)
    reps = []
    for i in range(n):
        for j in range(n):
            reps.append(GroupRep(g, ((om ** i,),), ((om ** j,),),
                                 f"H{n}:chi_{{{i},{j}}}"))
    if n == 2:
        swap = ((ZERO, ONE), (ONE, ZERO))
        sign = _diag((ONE, -ONE))
        reps.append(GroupRep(g, swap, sign, "H2:V"))
    elif n == 3:
        e1 = _perm_shift_matrix(3, -1)     # x -> z, y -> x, z -> y
        reps.append(GroupRep(g, e1, _diag((ONE, om, om ** 2)), "H3:V1"))
        reps.append(GroupRep(g, e1, _diag((ONE, om ** 2, om)), "H3:V2"))
    else:
        ii = root_of_unity(4)
        swap = ((ZERO, ONE), (ONE, ZERO))
        sign = _diag((ONE, -ONE))
        for i in range(2):
            for j in range(2):
                reps.append(GroupRep(g,
                                     tuple(tuple(ii ** i * x for x in row) for row in swap),
                                     tuple(tuple(ii ** j * x for x in row) for row in sign),
                                     f"H4:V_{{{i},{j}}}"))
        e1 = _perm_shift_matrix(4, -1)     # x_k -> x_{k-1}
        reps.append(GroupRep(g, e1, _diag(tuple(ii ** k for k in range(4))), "H4:V1"))
        reps.append(GroupRep(g, e1, _diag(tuple((-ii) ** k for k in range(4))), "H4:V3"))
    return tuple(reps)


def decompose_character(group: HeisenbergGroup, chi: Character, total_dim: int) -> dict[str, int]:
    """Multiplicities of ``chi`` against the irreducible table."""
    out: dict[str, int] = {}
    dim_sum = 0
    for irr in irrep_table(group.n):
        m = chi.inner(irr.character())
        if not m.is_integer() or m.coeffs[0] < 0:
            raise RepresentationInvalidError(
                f"multiplicity of {irr.label} is {m}, not a nonnegative integer")
        mult = int(m.coeffs[0])
        if mult:
            out[irr.label] = mult
            dim_sum += mult * irr.dim
    if dim_sum != total_dim:
        raise RepresentationInvalidError(
            f"multiplicities account for dimension {dim_sum}, expected {total_dim}")
    return out


def decompose(rep) -> dict[str, int]:
    """Decompose a GroupRep or TensorPowerRep into irreducibles by character."""
    return decompose_character(rep.group, rep.character(), rep.dim)


def antisymmetric_character(rep: GroupRep) -> Character:
    """Character of the exterior square: (chi(g)^2 - chi(g^2)) / 2."""
    chi = rep.character()
    g = rep.group
    vals = {}
    for x in g.elements():
        vals[x] = (chi(x) ** 2 - chi(g.mul(x, x))) / 2
    return Character(g, vals)


def is_subrep(s: Subspace, tp: TensorPowerRep) -> bool:
    """Whether a subspace of the degree-d component is stable under the action."""
    if s.ncols != tp.dim:
        raise ShapeError("subspace does not match the representation space")
    for g in ((1, 0, 0), (0, 1, 0)):
        image = span_rows(s.ngens, s.degree, [tp.act_row(g, r) for r in s.rows])
        if image != s:
            return False
    return True


def invariant_subspace(tp: TensorPowerRep, s: Subspace | None = None) -> Subspace:
    """Fixed vectors, via the exact averaging projector over the whole group.

    With ``s`` given, projects s (which must be stable); otherwise projects the
    full degree-d component.
    """
    ngens = tp.base.dim
    if s is not None:
        if not is_subrep(s, tp):
            raise NotASubrepError("subspace is not stable under the group")
        rows = s.rows
    else:
        rows = tuple({c: ONE} for c in range(tp.dim))
    elements = tp.group.elements()
    scale = fe(1) / tp.group.order
    projected = []
    for row in rows:
        acc: dict = {}
        for g in elements:
            for c, v in tp.act_row(g, row).items():
                w = acc.get(c, ZERO) + v
                if w:
                    acc[c] = w
                elif c in acc:
                    del acc[c]
        projected.append({c: v * scale for c, v in acc.items()})
    return span_rows(ngens, tp.degree, projected)


def subspace_character(s: Subspace, tp: TensorPowerRep) -> Character:
    """Character of the action restricted to a stable subspace.

    RREF coordinates make the trace cheap: the coefficient of basis row i in
    any vector is the vector's entry at pivot i.
    """
    if not is_subrep(s, tp):
        raise NotASubrepError("subspace is not stable under the group")
    vals = {}
    for g in tp.group.elements():
        t = ZERO
        for piv, row in zip(s.pivots, s.rows):
            t = t + tp.act_row(g, row).get(piv, ZERO)
        vals[g] = t
    return Character(tp.group, vals)


def twist_equivalence_table() -> dict[tuple[tuple[int, int], tuple[int, int]], bool]:
    """Which character twists of the 2-dim rep of the order-64 group coincide.

    Entry ((i,j),(i',j')) is True iff V (x) chi_{i,j} and V (x) chi_{i',j'}
    are equivalent; computed by character equality and cross-checked against
    the congruence rule (i-i', j-j') in 2Z4 x 2Z4.
    """
    table = irrep_table(4)
    base = next(r for r in table if r.label == "H4:V_{0,0}")
    chars = {(i, j): next(r for r in table if r.label == f"H4:chi_{{{i},{j}}}").character()
             for i in range(4) for j in range(4)}
    twisted = {(i, j): base.character() * chars[(i, j)] for i in range(4) for j in range(4)}
    out = {}
    for a in twisted:
        for b in twisted:
            same = twisted[a] == twisted[b]
            rule = (a[0] - b[0]) % 2 == 0 and (a[1] - b[1]) % 2 == 0
            if same != rule:
                raise RepresentationInvalidError(
                    f"twist equivalence of {a},{b} disagrees with the congruence rule")
            out[(a, b)] = same
    return out


# -- generator-space actions used by the algebra families ------------------

def h2_gen_rep() -> GroupRep:
    """Order-8 group acting on the 2-generator family: swap and sign."""
    return next(r for r in irrep_table(2) if r.label == "H2:V")


def h3_gen_rep() -> GroupRep:
    """Order-27 group on the 3-generator family: cycle and diag(1, w, w^2)."""
    return next(r for r in irrep_table(3) if r.label == "H3:V1")


def h4_gen_rep() -> GroupRep:
    """Order-64 group on the 4-generator family, coordinate basis."""
    return next(r for r in irrep_table(4) if r.label == "H4:V1")


def h4_pm_basis() -> Matrix:
    """Columns: x0+x2, x0-x2, x1+x3, x1-x3 (the sum/difference basis)."""
    f = fe
    return ((f(1), f(1), f(0), f(0)),
            (f(0), f(0), f(1), f(1)),
            (f(1), f(-1), f(0), f(0)),
            (f(0), f(0), f(1), f(-1)))


def h4_gen_rep_pm() -> GroupRep:
    """The 4-dim action rewritten in the sum/difference basis."""
    return h4_gen_rep().conjugate(h4_pm_basis(), "H4:V1(pm)")
