import numpy as np
import pytest

from manifold_approx import matfun


class TestSymFunm:
    def test_exp_of_zero_is_identity(self):
        assert np.allclose(matfun.sym_funm(np.zeros((3, 3)), "exp"), np.eye(3), atol=1e-15)

    def test_diagonal_case(self):
        out = matfun.sym_funm(np.diag([2.0, 0.0]), "exp")
        assert np.allclose(out, np.diag([np.e**2, 1.0]), atol=1e-12)

    def test_exp_log_roundtrip(self):
        rng = np.random.default_rng(0)
        for _ in range(20):
            a = rng.standard_normal((4, 4))
            a = 0.5 * (a + a.T)
            a *= 1.0 / max(np.linalg.norm(a), 1.0)
            back = matfun.sym_funm(matfun.sym_funm(a, "exp"), "log")
            assert np.abs(back - a).max() <= 1e-10

    def test_exp_has_positive_spectrum(self):
        rng = np.random.default_rng(1)
        a = rng.standard_normal((5, 5))
        a = a + a.T
        w = np.linalg.eigvalsh(matfun.sym_funm(a, "exp"))
        assert w.min() > 0.0

    def test_commutes_with_orthogonal_conjugation(self):
        rng = np.random.default_rng(2)
        a = rng.standard_normal((4, 4))
        a = 0.5 * (a + a.T)
        q, _ = matfun.thin_qr(rng.standard_normal((4, 4)))
        lhs = matfun.sym_funm(q @ a @ q.T, "exp")
        rhs = q @ matfun.sym_funm(a, "exp") @ q.T
        assert np.abs(lhs - rhs).max() <= 1e-10

    def test_sqrt_invsqrt_are_inverses(self):
        rng = np.random.default_rng(3)
        a = rng.standard_normal((4, 4))
        spd = a @ a.T + np.eye(4)
        prod = matfun.sym_funm(spd, "sqrt") @ matfun.sym_funm(spd, "invsqrt")
        assert np.abs(prod - np.eye(4)).max() <= 1e-10

    def test_rejects_nonsymmetric(self):
        with pytest.raises(ValueError, match="symmetric"):
            matfun.sym_funm(np.array([[0.0, 1.0], [0.0, 0.0]]), "exp")

    def test_rejects_nonpositive_spectrum_for_log(self):
        with pytest.raises(ValueError, match="positive spectrum"):
            matfun.sym_funm(np.diag([1.0, -0.5]), "log")

    def test_result_symmetric(self):
        rng = np.random.default_rng(4)
        a = rng.standard_normal((6, 6))
        out = matfun.sym_funm(0.5 * (a + a.T), "exp")
        assert np.abs(out - out.T).max() <= 1e-12


class TestExpmLogm:
    def test_expm_zero(self):
        assert np.allclose(matfun.expm(np.zeros((3, 3))), np.eye(3), atol=1e-15)

    def test_planar_rotation_closed_form(self):
        theta = np.pi / 3
        w = np.array([[0.0, -theta], [theta, 0.0]])
        expected = np.array([[np.cos(theta), -np.sin(theta)],
                             [np.sin(theta), np.cos(theta)]])
        assert np.abs(matfun.expm(w) - expected).max() <= 1e-14

    def test_logm_rotation_roundtrip(self):
        rng = np.random.default_rng(5)
        for _ in range(20):
            w = rng.standard_normal((4, 4))
            w = 0.5 * (w - w.T)
            w *= min(1.0, 1.0 / np.linalg.norm(w, 2))
            q = matfun.expm(w)
            back = matfun.logm_rotation(q)
            assert np.abs(back - w).max() <= 1e-10
            assert np.abs(matfun.expm(back) - q).max() <= 1e-10

    def test_logm_result_is_skew(self):
        rng = np.random.default_rng(6)
        w = rng.standard_normal((3, 3))
        w = 0.4 * (w - w.T)
        out = matfun.logm_rotation(matfun.expm(w))
        assert np.abs(out + out.T).max() == 0.0

    def test_pi_rotation_rejected(self):
        q = np.diag([-1.0, -1.0, 1.0])  # rotation by pi in the xy-plane
        with pytest.raises(ValueError, match="pi"):
            matfun.logm_rotation(q)

    def test_non_orthogonal_rejected(self):
        with pytest.raises(ValueError, match="orthogonal"):
            matfun.logm_rotation(np.array([[1.0, 0.5], [0.0, 1.0]]))


class TestFactorizations:
    def test_svd_identity(self):
        u, s, vt = matfun.thin_svd(np.eye(3))
        assert np.allclose(u, np.eye(3)) and np.allclose(s, 1.0) and np.allclose(vt, np.eye(3))

    def test_svd_rank_one(self):
        a = np.array([1.0, 2.0, -2.0])
        b = np.array([3.0, 4.0])
        _, s, _ = matfun.thin_svd(np.outer(a, b))
        assert abs(s[0] - np.linalg.norm(a) * np.linalg.norm(b)) <= 1e-12
        assert np.all(s[1:] <= 1e-12 * s[0])

    def test_svd_reconstruction(self):
        rng = np.random.default_rng(7)
        a = rng.standard_normal((20, 5))
        u, s, vt = matfun.thin_svd(a)
        assert np.linalg.norm(a - (u * s) @ vt) <= 1e-10 * np.linalg.norm(a)
        assert np.abs(u.T @ u - np.eye(5)).max() <= 1e-12
        assert np.abs(vt @ vt.T - np.eye(5)).max() <= 1e-12
        assert np.all(np.diff(s) <= 0.0) and np.all(s >= 0.0)

    def test_svd_sign_convention(self):
        rng = np.random.default_rng(8)
        u, _, _ = matfun.thin_svd(rng.standard_normal((6, 4)))
        for j in range(4):
            col = u[:, j]
            assert col[np.flatnonzero(col)[0]] > 0.0

    def test_qr_reconstruction_and_signs(self):
        rng = np.random.default_rng(9)
        a = rng.standard_normal((8, 3))
        q, r = matfun.thin_qr(a)
        assert np.linalg.norm(a - q @ r) <= 1e-10 * np.linalg.norm(a)
        assert np.all(np.diag(r) >= 0.0)
        assert np.abs(np.triu(r) - r).max() == 0.0

    def test_qr_determinism(self):
        rng = np.random.default_rng(10)
        a = rng.standard_normal((10, 4))
        q1, r1 = matfun.thin_qr(a)
        q2, r2 = matfun.thin_qr(a.copy())
        assert np.array_equal(q1, q2) and np.array_equal(r1, r2)

    def test_svd_determinism(self):
        rng = np.random.default_rng(11)
        a = rng.standard_normal((7, 7))
        out1 = matfun.thin_svd(a)
        out2 = matfun.thin_svd(a.copy())
        for x, y in zip(out1, out2):
            assert np.array_equal(x, y)
