import itertools

import numpy as np
import pytest

from manifold_approx.tucker import TuckerModel, fold, mode_multiply, reconstruct, sthosvd, unfold


def loop_mode_multiply(tensor, matrix, mode):
    """Brute-force elementwise n-mode product (oracle)."""
    shape = list(tensor.shape)
    shape[mode] = matrix.shape[0]
    out = np.zeros(shape)
    for idx in itertools.product(*(range(s) for s in shape)):
        total = 0.0
        for i in range(tensor.shape[mode]):
            src = list(idx)
            src[mode] = i
            total += matrix[idx[mode], i] * tensor[tuple(src)]
        out[idx] = total
    return out


def loop_reconstruct(model):
    """Brute-force multilinear contraction of a Tucker model (oracle)."""
    out = model.core
    for mode, factor in enumerate(model.factors):
        out = loop_mode_multiply(out, factor, mode)
    return loop_mode_multiply(out, model.component.T, out.ndim - 1)


def random_model(rng, shape, ranks):
    core = rng.standard_normal(ranks)
    factors = []
    for size, rank in zip(shape[:-1], ranks[:-1]):
        q, _ = np.linalg.qr(rng.standard_normal((size, rank)))
        factors.append(q)
    q, _ = np.linalg.qr(rng.standard_normal((shape[-1], ranks[-1])))
    return TuckerModel(core=core, factors=tuple(factors), component=q.T)


class TestUnfoldAndProducts:
    def test_matrix_unfolds_to_itself(self):
        a = np.array([[1.0, 2.0], [3.0, 4.0]])
        assert np.array_equal(unfold(a, 0), a)

    def test_fold_inverts_unfold(self):
        rng = np.random.default_rng(0)
        t = rng.standard_normal((3, 4, 5, 2))
        for mode in range(4):
            assert np.array_equal(fold(unfold(t, mode), mode, t.shape), t)

    def test_identity_mode_multiply(self):
        rng = np.random.default_rng(1)
        t = rng.standard_normal((3, 4, 5))
        for mode in range(3):
            assert np.allclose(mode_multiply(t, np.eye(t.shape[mode]), mode), t, atol=1e-15)

    def test_mode_multiply_matches_loop_oracle(self):
        rng = np.random.default_rng(2)
        t = rng.standard_normal((3, 4, 5))
        for mode in range(3):
            m = rng.standard_normal((2, t.shape[mode]))
            assert np.abs(mode_multiply(t, m, mode) - loop_mode_multiply(t, m, mode)).max() <= 1e-13

    def test_shape_mismatch_rejected(self):
        with pytest.raises(ValueError):
            mode_multiply(np.zeros((3, 4)), np.zeros((2, 5)), 0)


class TestSthosvd:
    def test_exact_low_rank_recovery(self):
        rng = np.random.default_rng(3)
        model = random_model(rng, shape=(6, 7, 8), ranks=(2, 2, 3))
        g = reconstruct(model)
        fitted = sthosvd(g, ranks=(2, 2, 3))
        assert np.linalg.norm(g - reconstruct(fitted)) <= 1e-10

    def test_full_rank_reconstruction(self):
        rng = np.random.default_rng(4)
        g = rng.standard_normal((5, 4, 6))
        fitted = sthosvd(g)
        assert np.linalg.norm(g - reconstruct(fitted)) <= 1e-12 * np.linalg.norm(g)

    def test_truncation_error_bounded_by_discarded_tail(self):
        rng = np.random.default_rng(5)
        g = rng.standard_normal((6, 6, 6, 4))
        ranks = (3, 3, 3, 2)
        fitted = sthosvd(g, ranks=ranks)
        error_sq = np.linalg.norm(g - reconstruct(fitted)) ** 2
        # oracle: per-mode SVDs of the original unfoldings bound the ST-HOSVD
        # tail mode by mode
        tail = 0.0
        for mode, rank in enumerate(ranks):
            s = np.linalg.svd(unfold(g, mode), compute_uv=False)
            tail += float(np.sum(s[rank:] ** 2))
        assert error_sq <= tail + 1e-10

    def test_factor_orthonormality(self):
        rng = np.random.default_rng(6)
        g = rng.standard_normal((6, 6, 6, 4))
        fitted = sthosvd(g, ranks=(3, 3, 3, 2))
        for factor in fitted.factors:
            assert np.abs(factor.T @ factor - np.eye(factor.shape[1])).max() <= 1e-10
        comp = fitted.component
        assert np.abs(comp @ comp.T - np.eye(comp.shape[0])).max() <= 1e-10

    def test_determinism(self):
        rng = np.random.default_rng(7)
        g = rng.standard_normal((5, 5, 5))
        a = sthosvd(g, ranks=(3, 3, 2))
        b = sthosvd(g.copy(), ranks=(3, 3, 2))
        assert np.array_equal(a.core, b.core)
        assert all(np.array_equal(x, y) for x, y in zip(a.factors, b.factors))
        assert np.array_equal(a.component, b.component)

    def test_tolerance_mode_respects_budget(self):
        rng = np.random.default_rng(8)
        model = random_model(rng, shape=(8, 8, 6), ranks=(2, 2, 2))
        g = reconstruct(model)
        noise = rng.standard_normal(g.shape)
        g = g + 1e-8 * noise / np.linalg.norm(noise) * np.linalg.norm(g)
        fitted = sthosvd(g, tol=1e-6)
        assert fitted.ranks == (2, 2, 2)
        assert np.linalg.norm(g - reconstruct(fitted)) <= 1e-6 * np.linalg.norm(g)

    def test_quasi_optimality_against_refined_model(self):
        # ST-HOSVD is within sqrt(#modes) of the best rank-(r) error; compare
        # against an alternating-refinement (HOOI) estimate of that best error
        rng = np.random.default_rng(9)
        g = rng.standard_normal((5, 5, 5, 3))
        ranks = (3, 3, 3, 2)
        fitted = sthosvd(g, ranks=ranks)
        st_error = np.linalg.norm(g - reconstruct(fitted))

        factors = list(fitted.factors) + [fitted.component.T]
        for _ in range(10):
            for mode in range(4):
                current = g
                for other in range(4):
                    if other != mode:
                        current = mode_multiply(current, factors[other].T, other)
                u, _, _ = np.linalg.svd(unfold(current, mode), full_matrices=False)
                factors[mode] = u[:, : ranks[mode]]
        core = g
        for mode in range(4):
            core = mode_multiply(core, factors[mode].T, mode)
        refined = TuckerModel(core=core, factors=tuple(factors[:-1]), component=factors[-1].T)
        refined_error = np.linalg.norm(g - reconstruct(refined))
        assert st_error <= np.sqrt(4.0) * refined_error

    def test_empty_tensor_rejected(self):
        with pytest.raises(ValueError):
            sthosvd(np.zeros((0, 3)))

    def test_bad_ranks_rejected(self):
        with pytest.raises(ValueError):
            sthosvd(np.zeros((3, 3)), ranks=(4, 1))
        with pytest.raises(ValueError):
            sthosvd(np.zeros((3, 3)), ranks=(1,))


class TestReconstruct:
    def test_identity_factors_return_core(self):
        rng = np.random.default_rng(10)
        core = rng.standard_normal((3, 4, 5))
        model = TuckerModel(core=core, factors=(np.eye(3), np.eye(4)), component=np.eye(5))
        assert np.array_equal(reconstruct(model), core)

    def test_rank_one_outer_product(self):
        a = np.array([[1.0], [0.0]])
        b = np.array([[0.0], [1.0]])
        model = TuckerModel(core=np.ones((1, 1)), factors=(a,), component=b.T)
        assert np.allclose(reconstruct(model), np.outer(a, b), atol=1e-15)

    def test_matches_loop_oracle(self):
        rng = np.random.default_rng(11)
        model = random_model(rng, shape=(4, 3, 5), ranks=(2, 3, 2))
        assert np.abs(reconstruct(model) - loop_reconstruct(model)).max() <= 1e-12
