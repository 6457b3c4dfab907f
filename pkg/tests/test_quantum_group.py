import itertools

import pytest

from thetaforge import linalg
from thetaforge.quantum_group import (
    FusionElement,
    TrivalentGraph,
    admissible_colorings,
    caterpillar_graph,
    circle_graph,
    d_iso,
    dual_rep,
    dumbbell_graph,
    fusion_fold,
    fusion_from_chebyshev,
    fusion_matrix,
    fusion_mul,
    irrep,
    theta_graph,
    verlinde_numeric,
    vertex_admissible,
)
from thetaforge.scalar import CycScalar, qint, t_power


def test_irrep_small():
    rep = irrep(1, 5)
    assert linalg.mat_is_zero(rep.X) and linalg.mat_is_zero(rep.Y)
    assert rep.K[0][0] == CycScalar.one(5)

    rep = irrep(2, 5)
    assert rep.X[1][0] == qint(1, 5) == CycScalar.one(5)
    assert rep.K[0][0] == t_power(5, -1)
    assert rep.K[1][1] == t_power(5, 1)


def test_irrep_commutator_oracle():
    # [X,Y] = (K^2 - K^{-2})/(t^2 - t^{-2}) checked entrywise on V^3 at r=5
    rep = irrep(3, 5)
    comm = linalg.mat_sub(
        linalg.mat_mul(rep.X, rep.Y), linalg.mat_mul(rep.Y, rep.X)
    )
    # weights are -1, 0, 1: the commutator is diag([2j]) = diag([-2],[0],[2])
    assert comm[0][0] == qint(-2, 5)
    assert comm[1][1].is_zero()
    assert comm[2][2] == qint(2, 5)


def test_all_relations_hold():
    for r in range(2, 9):
        for k in range(1, r):
            assert irrep(k, r).relations_hold(), (k, r, "irrep")
            assert dual_rep(k, r).relations_hold(), (k, r, "dual")


def test_irrep_rejects_out_of_range():
    with pytest.raises(ValueError):
        irrep(5, 5)
    with pytest.raises(ValueError):
        irrep(0, 5)
    with pytest.raises(ValueError):
        dual_rep(4, 4)


def test_dual_rep_k_diagonal():
    rep = dual_rep(2, 6)
    assert rep.K[0][0] == t_power(6, 1)
    assert rep.K[1][1] == t_power(6, -1)


def test_d_iso_trivial():
    iso = d_iso(1, 5)
    assert iso.matrix[0][0] == CycScalar.one(5)


def test_d_iso_intertwines_everywhere():
    for r in range(2, 9):
        for k in range(1, r):
            iso = d_iso(k, r)
            dual = dual_rep(k, r)
            std = irrep(k, r)
            for g_dual, g_std in ((dual.X, std.X), (dual.Y, std.Y), (dual.K, std.K)):
                lhs = linalg.mat_mul(iso.matrix, [list(row) for row in g_dual])
                rhs = linalg.mat_mul([list(row) for row in g_std], iso.matrix)
                assert linalg.mat_eq(lhs, rhs), (k, r)


def test_d_iso_invertible():
    for r in range(2, 9):
        for k in range(1, r):
            mat = d_iso(k, r).matrix
            # antidiagonal with nonzero entries
            for i in range(k):
                assert not mat[k - 1 - i][i].is_zero()


def test_fusion_unit():
    for r in (3, 5, 8):
        one = FusionElement.one(r)
        for n in range(1, r):
            v = FusionElement.basis(n, r)
            assert fusion_mul(one, v) == v
            assert fusion_mul(v, one) == v


def test_fusion_examples():
    got = fusion_mul(FusionElement.basis(2, 4), FusionElement.basis(2, 4))
    assert got == FusionElement(4, (1, 0, 1))
    got = fusion_mul(FusionElement.basis(3, 4), FusionElement.basis(3, 4))
    assert got == FusionElement(4, (1, 0, 0))


def test_fusion_commutative_associative():
    for r in (3, 4, 5, 6):
        basis = [FusionElement.basis(n, r) for n in range(1, r)]
        for a, b in itertools.product(basis, repeat=2):
            assert fusion_mul(a, b) == fusion_mul(b, a)
        for a, b, c in itertools.product(basis, repeat=3):
            assert fusion_mul(fusion_mul(a, b), c) == fusion_mul(a, fusion_mul(b, c))


def test_chebyshev_generates_basis():
    for r in (3, 5, 8):
        for n in range(0, 3 * r):
            assert fusion_from_chebyshev(n, r) == fusion_fold(n, r), (n, r)
        assert fusion_from_chebyshev(r, r).is_zero()
        assert fusion_from_chebyshev(r + 1, r) == -FusionElement.basis(r - 1, r)


def test_chebyshev_matches_clebsch_gordan():
    # V^m V^n via the ring of Chebyshev polynomials agrees with the rule
    for r in (3, 4, 5, 6, 7):
        for m in range(1, r):
            for n in range(1, r):
                lhs = fusion_mul(FusionElement.basis(m, r), FusionElement.basis(n, r))
                rhs = FusionElement.zero(r)
                for p in range(abs(m - n) + 1, m + n, 2):
                    rhs = rhs + fusion_fold(p, r)
                assert lhs == rhs, (r, m, n)


def test_quantum_dimension_eigenvector():
    for r in range(2, 9):
        qdim = [qint(n, r) for n in range(1, r)]
        for a in range(1, r):
            mat = fusion_matrix(a, r)
            image = [
                sum((CycScalar.from_int(mat[p][n], r) * qdim[n] for n in range(r - 1)),
                    CycScalar.zero(r))
                for p in range(r - 1)
            ]
            want = [qint(a, r) * qdim[p] for p in range(r - 1)]
            assert image == want, (r, a)


def test_graph_validation():
    with pytest.raises(ValueError):
        TrivalentGraph((0,), ((0, 0),))  # degree 2
    with pytest.raises(ValueError):
        TrivalentGraph((0, 1), ((0, 0), (0, 0), (1, 1), (1, 1)))  # disconnected
    assert circle_graph().genus == 1
    assert theta_graph().genus == 2
    assert dumbbell_graph().genus == 2
    for g in (3, 4):
        assert caterpillar_graph(g).genus == g


def test_vertex_condition_symmetric():
    for r in (3, 5):
        for m, n, p in itertools.product(range(1, r), repeat=3):
            vals = {
                vertex_admissible(*perm, r)
                for perm in itertools.permutations((m, n, p))
            }
            assert len(vals) == 1, (r, m, n, p)


def test_genus_one_counts():
    for r in range(2, 9):
        count, colorings = admissible_colorings(circle_graph(), r)
        assert count == r - 1 == len(colorings)


def test_theta_graph_r3():
    count, colorings = admissible_colorings(theta_graph(), 3)
    assert count == 4
    got = {tuple(c[i] for i in range(3)) for c in colorings}
    assert got == {(1, 1, 1), (1, 2, 2), (2, 1, 2), (2, 2, 1)}


def test_dumbbell_matches_theta():
    for r in range(3, 9):
        c1, _ = admissible_colorings(theta_graph(), r)
        c2, _ = admissible_colorings(dumbbell_graph(), r)
        assert c1 == c2, r


def test_verlinde_numeric_matches_counts():
    assert abs(verlinde_numeric(2, 3) - 4) < 1e-6
    for r in range(3, 8):
        for genus in (1, 2, 3):
            graph = caterpillar_graph(genus)
            count, _ = admissible_colorings(graph, r)
            assert abs(verlinde_numeric(genus, r) - count) < 1e-6, (genus, r)
