import random

import pytest

from thetaforge import linalg
from thetaforge.pillowcase import (
    CosObservable,
    equivalence_check,
    svn_irreducibility,
    weyl_cos_matrix,
    wilson_cos_matrix,
    wilson_decompose,
    zeta_fold,
)
from thetaforge.rt_torus import rt_rep_matrix, wilson_matrix
from thetaforge.scalar import CycScalar, t_power


def test_weyl_diagonal_observable():
    for r in (2, 3, 5, 7):
        mat = weyl_cos_matrix(CosObservable(0, 1), r)
        for j in range(1, r):
            assert mat[j - 1][j - 1] == t_power(r, 2 * j) + t_power(r, -2 * j)
        offdiag = [
            mat[i][j] for i in range(r - 1) for j in range(r - 1) if i != j
        ]
        assert all(x.is_zero() for x in offdiag)


def test_weyl_shift_observable_r3():
    got = [[x.to_complex() for x in row] for row in weyl_cos_matrix(CosObservable(1, 0), 3)]
    assert got == [[0, 1], [1, 0]]


def test_weyl_even_in_pq():
    rng = random.Random(0)
    for r in (2, 3, 4, 6):
        for _ in range(25):
            p, q = rng.randint(-7, 7), rng.randint(-7, 7)
            a = weyl_cos_matrix(CosObservable(p, q), r)
            b = weyl_cos_matrix(CosObservable(-p, -q), r)
            assert linalg.mat_eq(a, b)


def test_weyl_self_adjoint():
    rng = random.Random(1)
    for r in (3, 5):
        for _ in range(15):
            p, q = rng.randint(-5, 5), rng.randint(-5, 5)
            m = [[x.to_complex() for x in row] for row in weyl_cos_matrix(CosObservable(p, q), r)]
            n = r - 1
            for i in range(n):
                for j in range(n):
                    assert abs(m[i][j] - m[j][i].conjugate()) < 1e-12


def test_zeta_fold_involution():
    for r in (2, 3, 5, 9):
        for j in range(-4 * r, 4 * r):
            sign, idx = zeta_fold(j, r)
            if sign:
                assert zeta_fold(idx, r) == (1, idx)
                assert 1 <= idx <= r - 1
            else:
                assert j % r == 0


def test_wilson_decompose():
    one = wilson_decompose(2, 3, 1)
    assert one.cosines == () and one.constant == 1

    w2 = wilson_decompose(1, 2, 2)
    assert w2.cosines == (CosObservable(1, 2),) and w2.constant == 0

    w3 = wilson_decompose(1, 0, 3)
    assert w3.cosines == (CosObservable(2, 0),) and w3.constant == 1

    with pytest.raises(ValueError):
        wilson_decompose(2, 4, 2)
    with pytest.raises(ValueError):
        wilson_decompose(0, 0, 2)


def test_wilson_recomposition_matches_skein_side():
    for r in (2, 3, 4, 5, 6):
        for (p, q) in ((1, 0), (0, 1), (1, 1), (2, 1)):
            for n in range(0, r + 1):
                lhs = wilson_cos_matrix(p, q, n, r)
                rhs = wilson_matrix(p, q, n, r)
                assert linalg.mat_eq(lhs, rhs), (r, p, q, n)


def test_equivalence_check():
    for r in (2, 3, 4):
        report = equivalence_check(r)
        assert report["mismatches"] == []
        assert report["checked"] == (6 * r + 1) ** 2


def test_equivalence_spot_r3():
    lhs = weyl_cos_matrix(CosObservable(1, 1), 3)
    rhs = rt_rep_matrix((1, 1), 3)
    assert linalg.mat_eq(lhs, rhs)


def test_svn_irreducibility():
    for r in range(2, 7):
        report = svn_irreducibility(r)
        assert report["all_cyclic"]
        assert report["algebra_dimension"] == (r - 1) ** 2
        assert report["commutant_dimension"] == 1
