"""Constructions that attain spectral norm one, and the grid checker."""

import numpy as np
import pytest

from specnorm import (
    Algebra,
    check_orthogonal,
    fooling_tensor,
    frobenius_inner,
    frobenius_norm,
    known4_tensor,
    lift_orthogonal,
    mult_table,
    mult_tensor,
    multiform_apply,
    permute_modes,
    rank_one,
    subtensor,
    tall_orthogonal,
)
from specnorm.linalg import Seed, gaussian_tensor

ALGEBRAS = list(Algebra)


def _unit(n, k, sign=1.0):
    e = np.zeros(n)
    e[k] = sign
    return e


@pytest.mark.parametrize("algebra", ALGEBRAS)
def test_mult_tensor_is_orthogonal(algebra):
    x = mult_tensor(algebra)
    n = algebra.dim
    report = check_orthogonal(x)
    assert report.is_orthogonal
    assert report.max_violation <= 1e-12
    assert report.grid_size == (n * (n + 1) // 2) ** 2
    assert frobenius_norm(x) ** 2 == float(n * n)


@pytest.mark.parametrize("algebra", ALGEBRAS)
def test_mult_tensor_fibers_are_signed_basis_vectors(algebra):
    x = mult_tensor(algebra)
    n = algebra.dim
    for i in range(n):
        for j in range(n):
            f = x.data[i, j]
            assert np.sum(f != 0.0) == 1
            assert abs(np.linalg.norm(f) - 1.0) == 0.0
    # row and column 0 multiply by the neutral element
    np.testing.assert_array_equal(x.data[0], np.eye(n))
    np.testing.assert_array_equal(x.data[:, 0], np.eye(n))


def test_mult_tensor_spot_entries():
    c = mult_tensor(Algebra.COMPLEXES)
    np.testing.assert_array_equal(c.data[1, 1], _unit(2, 0, -1.0))
    q = mult_tensor(Algebra.QUATERNIONS)
    np.testing.assert_array_equal(q.data[2, 3], _unit(4, 1))
    np.testing.assert_array_equal(q.data[1, 2], _unit(4, 3))
    o = mult_tensor(Algebra.OCTONIONS)
    np.testing.assert_array_equal(o.data[4, 4], _unit(8, 0, -1.0))
    np.testing.assert_array_equal(o.data[1, 6], _unit(8, 7, -1.0))


@pytest.mark.parametrize("algebra", ALGEBRAS)
def test_mult_tensor_norm_multiplicative(algebra):
    x = mult_tensor(algebra)
    rng = np.random.default_rng(3)
    for _ in range(5):
        u = rng.standard_normal(algebra.dim)
        v = rng.standard_normal(algebra.dim)
        w = multiform_apply(x, (u, v))
        assert abs(np.linalg.norm(w) - np.linalg.norm(u) * np.linalg.norm(v)) < 1e-12


def test_mult_table_copy_and_lookup():
    t = mult_table(Algebra.COMPLEXES)
    assert t == [[1, 2], [2, -1]]
    t[0][0] = 99
    assert mult_table(Algebra.COMPLEXES)[0][0] == 1
    assert Algebra.from_dim(4) is Algebra.QUATERNIONS
    assert Algebra.from_name("octonions") is Algebra.OCTONIONS
    with pytest.raises(ValueError):
        Algebra.from_dim(3)
    with pytest.raises(ValueError):
        Algebra.from_name("sedenions")


def test_tall_identity_blocks():
    x = tall_orthogonal(2, 3, 7)
    assert x.shape == (2, 3, 7)
    np.testing.assert_array_equal(x.data[0, :, 0:3], np.eye(3))
    np.testing.assert_array_equal(x.data[1, :, 3:6], np.eye(3))
    assert np.all(x.data[:, :, 6] == 0.0)
    assert check_orthogonal(x).is_orthogonal
    assert frobenius_inner(x, x) == 6.0


def test_tall_random_blocks_deterministic():
    a = tall_orthogonal(3, 4, 12, seed=Seed(7))
    b = tall_orthogonal(3, 4, 12, seed=Seed(7))
    np.testing.assert_array_equal(a.data, b.data)
    assert check_orthogonal(a).is_orthogonal
    c = tall_orthogonal(3, 4, 12, seed=Seed(8))
    assert np.any(a.data != c.data)


def test_tall_explicit_blocks():
    rot = np.array([[0.0, -1.0], [1.0, 0.0]])
    x = tall_orthogonal(2, 2, 4, blocks=[np.eye(2), rot])
    np.testing.assert_array_equal(x.data[1, :, 2:4], rot)
    assert check_orthogonal(x).is_orthogonal


def test_tall_validation():
    with pytest.raises(ValueError):
        tall_orthogonal(3, 2, 6)  # l > m
    with pytest.raises(ValueError):
        tall_orthogonal(2, 3, 5)  # l*m > n
    with pytest.raises(ValueError):
        tall_orthogonal(1, 2, 2, blocks=[np.ones((2, 2))])
    with pytest.raises(ValueError):
        tall_orthogonal(2, 2, 4, blocks=[np.eye(2)])


def test_lift_complex_by_complex():
    x = lift_orthogonal(mult_tensor(Algebra.COMPLEXES), 0, Algebra.COMPLEXES)
    assert x.shape == (2, 2, 2, 2)
    assert check_orthogonal(x).is_orthogonal
    assert frobenius_inner(x, x) == 8.0
    # pair (0, 1) selects e_1 * e_2 = e_2, the second slice, positively
    base = mult_tensor(Algebra.COMPLEXES)
    np.testing.assert_array_equal(x.data[0, 1], base.data[1])
    np.testing.assert_array_equal(x.data[1, 1], -base.data[0])


def test_lift_preserves_orthogonality_elsewhere():
    base = tall_orthogonal(2, 2, 4, seed=Seed(3))
    lifted = lift_orthogonal(base, 1, Algebra.COMPLEXES)
    assert lifted.shape == (2, 2, 2, 4)
    assert check_orthogonal(lifted).is_orthogonal
    assert abs(frobenius_norm(lifted) ** 2 - 8.0) < 1e-12


def test_lift_custom_slices():
    base = tall_orthogonal(1, 4, 4)
    lifted = lift_orthogonal(base, 1, Algebra.COMPLEXES, slices=(2, 3))
    assert lifted.shape == (1, 2, 2, 4)
    assert check_orthogonal(lifted).is_orthogonal


def test_lift_validation():
    base = mult_tensor(Algebra.COMPLEXES)
    with pytest.raises(ValueError):
        lift_orthogonal(base, 2, Algebra.COMPLEXES)  # last mode
    with pytest.raises(ValueError):
        lift_orthogonal(base, 0, Algebra.QUATERNIONS)  # dim 4 > mode size 2
    with pytest.raises(ValueError):
        lift_orthogonal(base, 0, Algebra.COMPLEXES, slices=(0, 0))
    with pytest.raises(ValueError):
        lift_orthogonal(gaussian_tensor((2, 2, 2), Seed(1)), 0, Algebra.COMPLEXES)


def test_subtensor_keeps_orthogonality():
    x = subtensor(mult_tensor(Algebra.OCTONIONS), [(0, 1), (0, 1, 2, 3)])
    assert x.shape == (2, 4, 8)
    assert check_orthogonal(x).is_orthogonal
    assert frobenius_inner(x, x) == 8.0


def test_subtensor_validation():
    x = mult_tensor(Algebra.QUATERNIONS)
    with pytest.raises(ValueError):
        subtensor(x, [(0, 1)])
    with pytest.raises(ValueError):
        subtensor(x, [(0, 0), (0, 1)])
    with pytest.raises(ValueError):
        subtensor(x, [(0, 5), (0, 1)])


def test_check_rejects_gaussian():
    report = check_orthogonal(gaussian_tensor((3, 3, 3), Seed(2)))
    assert not report.is_orthogonal
    assert report.witness is not None
    # the reported witness reproduces the reported defect
    u, v = report.witness.vectors
    x = gaussian_tensor((3, 3, 3), Seed(2))
    w = multiform_apply(x, (u, v))
    defect = abs(float(w @ w) - float(u @ u) * float(v @ v))
    assert abs(defect - report.max_violation) < 1e-12


def test_check_sorts_modes_first():
    x = permute_modes(tall_orthogonal(2, 3, 7, seed=Seed(4)), (2, 1, 0))
    report = check_orthogonal(x)
    assert report.is_orthogonal
    assert report.permutation == (2, 1, 0)


def test_check_scalar_multiples():
    x = mult_tensor(Algebra.QUATERNIONS)
    from specnorm import DenseTensor

    assert check_orthogonal(DenseTensor(-x.data)).is_orthogonal
    assert not check_orthogonal(DenseTensor(2.0 * x.data)).is_orthogonal
    assert not check_orthogonal(DenseTensor(0.5 * x.data)).is_orthogonal


def test_check_order_one():
    from specnorm import make_tensor

    assert check_orthogonal(make_tensor((3,), [1, 0, 0])).is_orthogonal
    assert not check_orthogonal(make_tensor((3,), [1, 1, 0])).is_orthogonal


def test_check_matrix_case():
    q = np.linalg.qr(np.random.default_rng(8).standard_normal((4, 4)))[0]
    from specnorm import DenseTensor

    assert check_orthogonal(DenseTensor(q)).is_orthogonal
    # rows of a wide orthonormal-row matrix: 3 x 5 with unit rows fails,
    # orthonormal rows succeed only when rows stay unit under the sorted
    # orientation (3 <= 5 puts the row space first)
    rows = np.linalg.qr(np.random.default_rng(9).standard_normal((5, 3)))[0].T
    assert check_orthogonal(DenseTensor(rows)).is_orthogonal


def test_fooling_structure():
    x = fooling_tensor(4)
    assert x.shape == (4, 4, 4)
    for k in range(4):
        p = x.data[:, :, k]
        np.testing.assert_array_equal(p @ p.T, np.eye(4))
    assert frobenius_norm(x) ** 2 == 16.0
    assert not check_orthogonal(x).is_orthogonal


def test_known4_planted_pair_small():
    x, a, b = known4_tensor(5, 1, Seed(20), eig_band=0.0)
    np.testing.assert_allclose(x.data, rank_one((a, a, b, b)).data, atol=1e-12)


def test_known4_overlap_is_term_count():
    x, a, b = known4_tensor(6, 4, Seed(21))
    assert abs(frobenius_inner(x, rank_one((a, a, b, b))) - 4.0) < 1e-10
    assert abs(np.linalg.norm(a) - 1.0) < 1e-12
    assert abs(np.linalg.norm(b) - 1.0) < 1e-12


def test_known4_deterministic():
    x, a, b = known4_tensor(4, 2, Seed(22))
    y, c, d = known4_tensor(4, 2, Seed(22))
    np.testing.assert_array_equal(x.data, y.data)
    np.testing.assert_array_equal(a, c)


def test_known4_validation():
    with pytest.raises(ValueError):
        known4_tensor(1, 1, Seed(0))
    with pytest.raises(ValueError):
        known4_tensor(3, 0, Seed(0))
    with pytest.raises(ValueError):
        known4_tensor(3, 1, Seed(0), eig_band=1.0)
