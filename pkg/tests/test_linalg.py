"""Sparse exact row reduction: canonical forms, kernels, solving, meets."""

import random
from fractions import Fraction

from skverify import linalg
from skverify.field import ONE, ZERO, FieldElem, fe


def random_rows(rng, nrows, ncols, density=0.4, cyclotomic=False):
    rows = []
    for _ in range(nrows):
        row = {}
        for c in range(ncols):
            if rng.random() >= density:
                continue
            if cyclotomic:
                coeffs = tuple(Fraction(rng.randint(-5, 5)) for _ in range(4))
            else:
                coeffs = (Fraction(rng.randint(-5, 5)), Fraction(0),
                          Fraction(0), Fraction(0))
            v = FieldElem(coeffs)
            if v:
                row[c] = v
        rows.append(row)
    return rows


def dot(eq, vec):
    total = ZERO
    for c, coef in eq.items():
        total = total + coef * vec.get(c, ZERO)
    return total


def test_rref_is_canonical_under_row_shuffles():
    rng = random.Random(7)
    for trial in range(30):
        rows = random_rows(rng, 8, 10, cyclotomic=trial % 2 == 1)
        piv1, red1 = linalg.rref([dict(r) for r in rows])
        shuffled = [dict(r) for r in rows]
        rng.shuffle(shuffled)
        piv2, red2 = linalg.rref(shuffled)
        assert piv1 == piv2
        assert red1 == red2
        # pivots are monic and cleared above and below
        for p, r in zip(piv1, red1):
            assert r[p] == ONE
            for q, other in zip(piv1, red1):
                if q != p:
                    assert p not in other or not other[p]


def test_rref_scaling_invariance():
    rng = random.Random(8)
    rows = random_rows(rng, 6, 9)
    piv1, red1 = linalg.rref([dict(r) for r in rows])
    scaled = [{c: fe(3) * v for c, v in r.items()} for r in rows]
    piv2, red2 = linalg.rref(scaled)
    assert (piv1, red1) == (piv2, red2)


def test_reduce_mod_is_idempotent_and_pivot_free():
    rng = random.Random(9)
    for _ in range(20):
        piv, red = linalg.rref(random_rows(rng, 6, 8))
        target = random_rows(rng, 1, 8, density=0.8)[0]
        out = linalg.reduce_mod(target, piv, red)
        assert linalg.reduce_mod(out, piv, red) == out
        for p in piv:
            assert p not in out


def test_nullspace_vectors_annihilate_equations():
    rng = random.Random(10)
    for trial in range(20):
        ncols = 9
        rows = random_rows(rng, 5, ncols, cyclotomic=trial % 3 == 0)
        kernel = linalg.nullspace(rows, ncols)
        for vec in kernel:
            for eq in rows:
                assert dot(eq, vec) == ZERO
        rank = len(linalg.rref(rows)[0])
        assert rank + len(kernel) == ncols


def test_nullspace_of_zero_map_is_everything():
    kernel = linalg.nullspace([], 4)
    assert len(kernel) == 4


def test_solve_columns_reproduces_combinations():
    rng = random.Random(11)
    for _ in range(25):
        cols = [r for r in random_rows(rng, 5, 7, density=0.6) if r]
        coeffs = [fe(rng.randint(-4, 4)) for _ in cols]
        target = {}
        for x, col in zip(coeffs, cols):
            for c, v in col.items():
                acc = target.get(c, ZERO) + x * v
                if acc:
                    target[c] = acc
                elif c in target:
                    del target[c]
        sol = linalg.solve_columns(cols, target)
        assert sol is not None
        assert len(sol) == len(cols)
        rebuilt = {}
        for j, x in enumerate(sol):
            for c, v in cols[j].items():
                acc = rebuilt.get(c, ZERO) + x * v
                if acc:
                    rebuilt[c] = acc
                elif c in rebuilt:
                    del rebuilt[c]
        assert rebuilt == target


def test_solve_columns_detects_unsolvable():
    cols = [{0: ONE}, {1: ONE}]
    assert linalg.solve_columns(cols, {2: ONE}) is None
    assert linalg.solve_columns(cols, {0: fe(2), 1: fe(-1)}) is not None


def test_intersect_dimension_formula():
    rng = random.Random(12)
    for _ in range(15):
        ncols = 8
        rows_a = random_rows(rng, 5, ncols)
        rows_b = random_rows(rng, 5, ncols)
        piv_a, red_a = linalg.rref([dict(r) for r in rows_a])
        piv_b, red_b = linalg.rref([dict(r) for r in rows_b])
        meet = linalg.intersect(rows_a, rows_b, ncols)
        for vec in meet:
            assert not linalg.reduce_mod(dict(vec), piv_a, red_a)
            assert not linalg.reduce_mod(dict(vec), piv_b, red_b)
        join_rank = len(linalg.rref(
            [dict(r) for r in rows_a] + [dict(r) for r in rows_b])[0])
        assert len(piv_a) + len(piv_b) == join_rank + len(meet)


def test_intersect_of_space_with_itself():
    rng = random.Random(13)
    rows = random_rows(rng, 4, 6)
    rank = len(linalg.rref([dict(r) for r in rows])[0])
    meet = linalg.intersect(rows, [dict(r) for r in rows], 6)
    assert len(meet) == rank
