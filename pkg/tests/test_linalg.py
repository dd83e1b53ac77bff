import numpy as np
import pytest

from raps.errors import DimensionMismatch, NotPositiveDefinite
from raps.linalg import chol_solve, spd_inverse, sym_eig_min, sym_part

from conftest import random_spd


class TestCholSolve:
    def test_identity(self):
        x = chol_solve(np.eye(3), np.array([1.0, 0.0, 0.0]))
        np.testing.assert_allclose(x, [1.0, 0.0, 0.0], atol=1e-15)

    def test_diagonal(self):
        x = chol_solve(np.diag([2.0, 4.0]), np.array([2.0, 4.0]))
        np.testing.assert_allclose(x, [1.0, 1.0], atol=1e-15)

    def test_random_spd_residual(self, rng):
        # Residual oracle: multiply back and check the defect.
        for _ in range(20):
            a = random_spd(rng, 9)
            b = rng.standard_normal((9, 4))
            x = chol_solve(a, b)
            resid = np.linalg.norm(a @ x - b)
            assert resid <= 1e-10 * (1.0 + np.linalg.norm(b))

    def test_recovers_known_solution(self, rng):
        for _ in range(20):
            a = random_spd(rng, 7, cond_max=1e6)
            x0 = rng.standard_normal(7)
            x = chol_solve(a, a @ x0)
            assert np.linalg.norm(x - x0) <= 1e-8 * (1.0 + np.linalg.norm(x0))

    def test_not_positive_definite(self):
        with pytest.raises(NotPositiveDefinite):
            chol_solve(np.diag([1.0, -1.0]), np.ones(2))
        with pytest.raises(NotPositiveDefinite):
            chol_solve(np.zeros((2, 2)), np.ones(2))

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            chol_solve(np.eye(3), np.ones(2))
        with pytest.raises(DimensionMismatch):
            chol_solve(np.ones((2, 3)), np.ones(2))


class TestSymEigMin:
    def test_diagonal(self):
        lam, v = sym_eig_min(np.diag([3.0, 1.0, 2.0]))
        assert lam == pytest.approx(1.0, abs=1e-12)
        np.testing.assert_allclose(np.abs(v), [0.0, 1.0, 0.0], atol=1e-12)

    def test_identity(self):
        lam, v = sym_eig_min(np.eye(4))
        assert lam == pytest.approx(1.0, abs=1e-12)
        assert np.linalg.norm(v) == pytest.approx(1.0, abs=1e-12)

    def test_matches_full_spectrum_oracle(self, rng):
        for _ in range(20):
            a = rng.standard_normal((9, 9))
            a = sym_part(a)
            lam, v = sym_eig_min(a)
            # Independent oracle: roots of the characteristic polynomial.
            roots = np.sort(np.real(np.roots(np.poly(a))))
            assert lam == pytest.approx(roots[0], abs=1e-8 * np.linalg.norm(a))
            assert np.linalg.norm(a @ v - lam * v) <= 1e-8 * np.linalg.norm(a)
            assert np.linalg.norm(v) == pytest.approx(1.0, abs=1e-12)

    def test_rayleigh_bound(self, rng):
        a = sym_part(rng.standard_normal((6, 6)))
        lam, _ = sym_eig_min(a)
        for _ in range(100):
            u = rng.standard_normal(6)
            u /= np.linalg.norm(u)
            assert lam <= u @ a @ u + 1e-12

    def test_rejects_asymmetric(self):
        a = np.array([[1.0, 2.0], [0.0, 1.0]])
        with pytest.raises(ValueError):
            sym_eig_min(a)

    def test_sign_canonicalization(self):
        lam, v = sym_eig_min(np.diag([1.0, -2.0]))
        assert lam == pytest.approx(-2.0)
        np.testing.assert_allclose(v, [0.0, 1.0], atol=1e-14)


def test_spd_inverse_roundtrip(rng):
    a = random_spd(rng, 9)
    inv = spd_inverse(a)
    np.testing.assert_allclose(inv @ a, np.eye(9), atol=1e-9)
    np.testing.assert_allclose(inv, inv.T, atol=0.0)
