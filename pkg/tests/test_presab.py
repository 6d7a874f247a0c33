import random

import pytest

from mwkit.presab import (
    ZLattice,
    contains,
    det,
    element_order,
    mat_identity,
    mat_mul,
    quotient,
    smith_normal_form,
)


def assert_snf_valid(m):
    u, d, v = smith_normal_form(m)
    assert mat_mul(mat_mul(u, [list(r) for r in m]), v) == d
    assert det(u) in (1, -1)
    assert det(v) in (1, -1)
    diag = [d[i][i] for i in range(min(len(d), len(d[0]) if d else 0))]
    for i in range(len(diag) - 1):
        if diag[i + 1] != 0:
            assert diag[i] != 0 and diag[i + 1] % diag[i] == 0
        assert diag[i] >= 0
    for i in range(len(d)):
        for j in range(len(d[0]) if d else 0):
            if i != j:
                assert d[i][j] == 0
    return u, d, v


def test_snf_single_row():
    _, d, _ = smith_normal_form([[2, -2]])
    assert d == [[2, 0]]


def test_snf_zero_matrix():
    u, d, v = smith_normal_form([[0, 0], [0, 0]])
    assert d == [[0, 0], [0, 0]]
    assert u == mat_identity(2)
    assert v == mat_identity(2)


def test_snf_diag_2_3():
    u, d, v = assert_snf_valid([[2, 0], [0, 3]])
    assert d == [[1, 0], [0, 6]]


def test_snf_random_matrices():
    rng = random.Random(20240817)
    for _ in range(40):
        rows = rng.randrange(1, 5)
        cols = rng.randrange(1, 5)
        m = [[rng.randrange(-9, 10) for _ in range(cols)] for _ in range(rows)]
        assert_snf_valid(m)


def random_unimodular(rng, n, steps=12):
    m = mat_identity(n)
    for _ in range(steps):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        q = rng.randrange(-3, 4)
        for k in range(n):
            m[i][k] += q * m[j][k]
    return m


def test_invariants_stable_under_unimodular_premultiplication():
    rng = random.Random(5)
    for _ in range(25):
        rows = rng.randrange(1, 5)
        cols = rng.randrange(1, 5)
        m = [[rng.randrange(-6, 7) for _ in range(cols)] for _ in range(rows)]
        base = quotient(cols, m)
        w = random_unimodular(rng, rows)
        twisted = quotient(cols, mat_mul(w, m))
        assert twisted.rank == base.rank
        assert twisted.torsion == base.torsion


def test_quotient_examples():
    p = quotient(2, [[2, -2]])
    assert (p.rank, p.torsion) == (1, (2,))
    p = quotient(2, [])
    assert (p.rank, p.torsion) == (2, ())
    p = quotient(1, [[0]])
    assert (p.rank, p.torsion) == (1, ())
    assert p.rank + len(p.torsion) <= 1


def test_quotient_rejects_bad_width():
    with pytest.raises(ValueError):
        quotient(3, [[1, 2]])


def test_contains_examples():
    assert contains([[2, -2]], [4, -4]) is True
    assert contains([[2, -2]], [1, -1]) is False
    assert contains([], [0, 0]) is True


def test_contains_every_relation_row():
    rng = random.Random(11)
    for _ in range(20):
        cols = rng.randrange(1, 5)
        rows = [[rng.randrange(-6, 7) for _ in range(cols)] for _ in range(rng.randrange(1, 5))]
        for r in rows:
            assert contains(rows, r)


def test_element_order_examples():
    p = quotient(2, [[2, -2]])
    assert p.element_order([1, -1]) == 2
    assert p.element_order([0, 0]) == 1
    assert p.element_order([1, 0]) is None
    assert element_order(p, [1, -1]) == 2


def test_canonical_class_additivity():
    rng = random.Random(7)
    p = quotient(3, [[2, 0, -2], [0, 4, 0]])
    for _ in range(50):
        v = [rng.randrange(-8, 9) for _ in range(3)]
        w = [rng.randrange(-8, 9) for _ in range(3)]
        tv, fv = p.to_canonical(v)
        tw, fw = p.to_canonical(w)
        ts, fs = p.to_canonical([a + b for a, b in zip(v, w)])
        assert fs == tuple(a + b for a, b in zip(fv, fw))
        assert ts == tuple(
            (a + b) % d for a, b, d in zip(tv, tw, [p.diagonal[i] for i in p.torsion_coords])
        )


def test_from_canonical_is_a_section():
    p = quotient(3, [[2, 0, -2], [0, 4, 0]])
    rng = random.Random(13)
    for _ in range(50):
        tor = tuple(rng.randrange(d) for d in p.torsion)
        free = tuple(rng.randrange(-5, 6) for _ in range(p.rank))
        vec = p.from_canonical((tor, free))
        assert p.to_canonical(vec) == (tor, free)


def test_zlattice_membership_and_growth():
    lat = ZLattice(3)
    assert lat.contains([0, 0, 0])
    assert lat.add([2, 0, -2]) is True
    assert lat.add([4, 0, -4]) is False
    assert lat.contains([6, 0, -6])
    assert not lat.contains([1, 0, -1])
    lat.add([0, 1, 1])
    assert lat.contains([2, 3, 1])
    other = ZLattice(3, [[0, 1, 1], [2, 0, -2]])
    assert lat.spans_same(other)


def test_det_values():
    assert det([[3]]) == 3
    assert det([[1, 2], [3, 4]]) == -2
    assert det(mat_identity(4)) == 1
    assert det([[0, 1], [1, 0]]) == -1
