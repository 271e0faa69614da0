import math

import numpy as np
import pytest

from manifold_approx.chebyshev import (
    AnalyticityData,
    apriori_error_bound,
    barycentric_weights,
    cardinal_row,
    chebyshev_nodes,
    eval_univariate,
    fit_univariate,
    lebesgue_bound,
    make_grid,
)


def chebyshev_t(n, x):
    """T_n(x) by the three-term recurrence (oracle)."""
    a, b = np.ones_like(x), x
    if n == 0:
        return a
    for _ in range(n - 1):
        a, b = b, 2.0 * x * b - a
    return b


class TestNodes:
    def test_single_node_is_zero(self):
        assert np.allclose(chebyshev_nodes(1), [0.0], atol=1e-16)

    def test_two_nodes(self):
        assert np.allclose(chebyshev_nodes(2), [np.sqrt(2) / 2, -np.sqrt(2) / 2])

    def test_three_nodes(self):
        assert np.allclose(chebyshev_nodes(3), [np.cos(np.pi / 6), 0.0, -np.cos(np.pi / 6)],
                           atol=1e-16)

    def test_strictly_decreasing_in_open_interval(self):
        for count in (1, 2, 5, 17):
            nodes = chebyshev_nodes(count)
            assert np.all(np.diff(nodes) < 0.0)
            assert np.all(np.abs(nodes) < 1.0)

    def test_zero_count_rejected(self):
        with pytest.raises(ValueError):
            chebyshev_nodes(0)
        with pytest.raises(ValueError):
            make_grid((3, 0))

    def test_grid_carries_per_mode_nodes(self):
        grid = make_grid((2, 4))
        assert grid.counts == (2, 4)
        assert len(grid.nodes[0]) == 2 and len(grid.nodes[1]) == 4


class TestInterpolation:
    def test_constant_reproduced(self):
        h = fit_univariate(np.full(4, 2.5))
        for x in np.linspace(-1, 1, 11):
            assert abs(h(x) - 2.5) <= 1e-14

    def test_degree_one_reproduction(self):
        h = fit_univariate(chebyshev_nodes(2))  # values of x -> x at the nodes
        assert abs(h(0.3) - 0.3) <= 1e-15

    def test_t5_against_recurrence_oracle(self):
        nodes = chebyshev_nodes(6)
        h = fit_univariate(chebyshev_t(5, nodes))
        rng = np.random.default_rng(0)
        xs = rng.uniform(-1.0, 1.0, 100)
        assert np.abs([h(x) - chebyshev_t(5, x) for x in xs]).max() <= 1e-12

    def test_exact_at_nodes(self):
        rng = np.random.default_rng(1)
        values = rng.standard_normal(7)
        h = fit_univariate(values)
        for node, value in zip(chebyshev_nodes(7), values):
            assert abs(h(node) - value) <= 1e-13

    def test_polynomial_exactness_below_degree(self):
        rng = np.random.default_rng(2)
        count = 6
        coeffs = rng.standard_normal(count)  # degree count-1
        poly = np.polynomial.Polynomial(coeffs)
        h = fit_univariate(poly(chebyshev_nodes(count)))
        for x in np.linspace(-1, 1, 41):
            assert abs(h(x) - poly(x)) <= 1e-12

    def test_linearity(self):
        rng = np.random.default_rng(3)
        u = rng.standard_normal(5)
        v = rng.standard_normal(5)
        alpha, beta = 1.7, -0.3
        combined = fit_univariate(alpha * u + beta * v)
        hu, hv = fit_univariate(u), fit_univariate(v)
        for x in np.linspace(-1, 1, 17):
            assert abs(combined(x) - (alpha * hu(x) + beta * hv(x))) <= 1e-12

    def test_no_extrapolation(self):
        h = fit_univariate(np.ones(3))
        with pytest.raises(ValueError, match="outside"):
            h(1.001)
        with pytest.raises(ValueError, match="outside"):
            eval_univariate(h, -1.1)

    def test_cardinal_row_sums_to_one(self):
        nodes = chebyshev_nodes(9)
        weights = barycentric_weights(9)
        for x in np.linspace(-1, 1, 13):
            assert abs(cardinal_row(nodes, weights, x).sum() - 1.0) <= 1e-12


class TestLebesgueBound:
    def test_degree_zero(self):
        assert lebesgue_bound(0) == 1.0

    def test_degree_one(self):
        expected = (2.0 / math.pi) * math.log(2.0) + 1.0
        assert abs(lebesgue_bound(1) - expected) == 0.0
        assert abs(lebesgue_bound(1) - 1.44127) <= 1e-5

    def test_degree_nine(self):
        expected = (2.0 / math.pi) * math.log(10.0) + 1.0
        assert abs(lebesgue_bound(9) - expected) == 0.0
        assert abs(lebesgue_bound(9) - 2.46588) <= 1e-5

    def test_measured_lebesgue_constant_below_bound(self):
        xs = np.linspace(-1.0, 1.0, 10_000)
        for degree in range(21):
            nodes = chebyshev_nodes(degree + 1)
            weights = barycentric_weights(degree + 1)
            diff = xs[:, None] - nodes[None, :]
            terms = weights / diff
            measured = np.abs(terms / terms.sum(axis=1, keepdims=True)).sum(axis=1).max()
            assert measured <= lebesgue_bound(degree)


class TestAprioriBound:
    def test_zero_magnitudes_give_zero(self):
        data = AnalyticityData(rho=(2.0, 3.0), magnitude=(0.0, 0.0))
        assert apriori_error_bound(data, (4, 4)) == 0.0

    def test_single_mode_formula(self):
        data = AnalyticityData(rho=(2.0,), magnitude=(1.0,))
        assert abs(apriori_error_bound(data, (3,)) - 0.5) <= 1e-15

    def test_uniform_case_matches_simplified_expression(self):
        rho, mag, degree, m = 3.0, 2.0, 5, 2
        eval_error = 1e-3
        data = AnalyticityData(rho=(rho,) * m, magnitude=(mag,) * m, eval_error=eval_error)
        leb = lebesgue_bound(degree)
        simplified = 4.0 * (leb**m - 1.0) * mag / ((rho - 1.0) * rho**degree * (leb - 1.0)) \
            + leb**m * eval_error
        assert abs(apriori_error_bound(data, (degree,) * m) - simplified) <= 1e-12

    def test_invalid_rho_rejected(self):
        with pytest.raises(ValueError):
            AnalyticityData(rho=(1.0,), magnitude=(1.0,))

    def test_measured_error_below_certificate_for_pole_function(self):
        # target 1/(2-x): the relevant Bernstein ellipse parameter is 2+sqrt(3);
        # its magnitude bound is taken as the max over a midpoint angular grid,
        # which stays clear of the pole sitting exactly on that ellipse
        rho = 2.0 + math.sqrt(3.0)
        theta = (np.arange(10_000) + 0.5) * (2.0 * np.pi / 10_000)
        ellipse = 0.5 * (rho * np.exp(1j * theta) + np.exp(-1j * theta) / rho)
        magnitude = np.abs(1.0 / (2.0 - ellipse)).max()
        xs = np.linspace(-1.0, 1.0, 1000)
        for degree in range(2, 13):
            values = 1.0 / (2.0 - chebyshev_nodes(degree + 1))
            h = fit_univariate(values)
            measured = max(abs(h(x) - 1.0 / (2.0 - x)) for x in xs)
            data = AnalyticityData(rho=(rho,), magnitude=(magnitude,))
            assert measured <= apriori_error_bound(data, (degree,))
