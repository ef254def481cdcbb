import numpy as np
import pytest
from numpy.testing import assert_allclose
from ptwig.algebra import identity, min_eigenvalue, DimensionError
from ptwig.states import DensityMatrix, StateError, SINGLE, BIPARTITE, \
    pure_state, position_eigenstate, momentum_eigenstate, maximally_mixed, \
    bell_state, isotropic, isotropic_matrix, isotropic_range, random_state, \
    momentum_probabilities, momentum_distribution, position_distribution
from ptwig.transpose import partial_transpose_1


class TestDensityMatrix:
    def test_wrong_dimension(self):
        with pytest.raises(DimensionError):
            DensityMatrix(identity(3) / 3, 2, BIPARTITE)

    def test_not_hermitian(self):
        m = np.array([[0.5, 0.1], [0.2, 0.5]])
        with pytest.raises(StateError):
            DensityMatrix(m, 2, SINGLE)

    def test_trace(self):
        with pytest.raises(StateError):
            DensityMatrix(identity(2), 2, SINGLE)

    def test_not_positive(self):
        m = np.diag([1.5, -0.5])
        with pytest.raises(StateError):
            DensityMatrix(m, 2, SINGLE)
        rho = DensityMatrix(m, 2, SINGLE, validate=False)
        assert not rho.validated

    def test_input_not_locked(self):
        m = identity(2) / 2
        rho = DensityMatrix(m, 2, SINGLE)
        m[0, 0] = 1.0
        assert rho.matrix[0, 0] == 0.5
        with pytest.raises(ValueError):
            rho.matrix[0, 0] = 1.0

    def test_json(self, tmp_path, rng):
        rho = random_state(3, BIPARTITE, rng)
        path = str(tmp_path / "rho.json")
        rho.write_json(path)
        back = DensityMatrix.read_json(path)
        assert back.n_dim == 3 and back.shape == BIPARTITE
        assert_allclose(back.matrix, rho.matrix, atol=1e-15)

    def test_json_wrong_size(self):
        data = {"n_dim": 2, "shape": "single", "entries": [[1, 0]] * 3}
        with pytest.raises(StateError):
            DensityMatrix.from_dict(data)

    def test_transpose_and_purity(self, rng):
        rho = random_state(3, SINGLE, rng)
        assert_allclose(rho.transpose().matrix, rho.matrix.T)
        assert 1 / 3 - 1e-12 <= rho.purity <= 1 + 1e-12


class TestStates:
    def test_bell_state(self):
        rho = bell_state(3)
        v = identity(3).ravel() / np.sqrt(3)
        assert_allclose(rho.matrix, np.outer(v, v))
        assert_allclose(rho.purity, 1.0)

    @pytest.mark.parametrize("n", [2, 3, 5])
    def test_isotropic_limits(self, n):
        assert_allclose(isotropic(n, 1).matrix, bell_state(n).matrix,
                        atol=1e-15)
        assert_allclose(isotropic(n, 0).matrix, maximally_mixed(n).matrix)

    @pytest.mark.parametrize("n", [2, 3, 5])
    def test_isotropic_psd_on_grid(self, n):
        for r in np.linspace(0, 1, 1000):
            rho = isotropic(n, r)
            assert rho.validated
            assert min_eigenvalue(rho.matrix) >= (1 - r) / n ** 2 - 1e-12

    def test_isotropic_range(self):
        with pytest.raises(StateError):
            isotropic(3, 1.2)
        with pytest.raises(StateError):
            isotropic(3, -0.1)
        lo, hi = isotropic_range(3, permissive=True)
        assert_allclose(lo, -1 / 8)
        rho = isotropic(3, lo, permissive=True)
        assert rho.validated

    def test_isotropic_pt_is_swap(self):
        n, r = 3, 0.4
        swap = np.zeros((n * n, n * n))
        for a in range(n):
            for b in range(n):
                swap[a * n + b, b * n + a] = 1
        expected = r / n * swap + (1 - r) / n ** 2 * identity(n * n)
        assert_allclose(partial_transpose_1(isotropic_matrix(n, r), n),
                        expected, atol=1e-15)

    def test_pure_state_normalizes(self):
        rho = pure_state([1, 1j], 2, SINGLE)
        assert_allclose(rho.matrix, [[0.5, -0.5j], [0.5j, 0.5]])
        with pytest.raises(StateError):
            pure_state([0, 0], 2, SINGLE)

    def test_eigenstates(self):
        n = 5
        assert_allclose(position_distribution(position_eigenstate(n, 7)),
                        np.eye(n)[2])
        dist = momentum_distribution(momentum_eigenstate(n, 3))
        assert_allclose(dist.values, np.eye(n)[3], atol=1e-12)
        # a position eigenstate has flat momentum
        dist = momentum_distribution(position_eigenstate(n, 1))
        assert_allclose(dist.values, np.full(n, 1 / n), atol=1e-12)

    def test_bell_state_momentum(self):
        dist = momentum_distribution(bell_state(3))
        p = np.arange(3)
        expected = ((p[:, None] + p[None, :]) % 3 == 0) / 3
        assert_allclose(dist.values, expected, atol=1e-12)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_random_state(self, rng, n):
        rho = random_state(n, BIPARTITE, rng)
        assert rho.validated
        dist = momentum_distribution(rho)
        assert dist.values.shape == (n, n)
        assert_allclose(dist.values.sum(), 1.0, atol=1e-12)
        assert np.all(dist.values >= -1e-12)
        assert_allclose(position_distribution(rho).sum(), 1.0, atol=1e-12)

    def test_seeded_random_state(self, rng_factory):
        a = random_state(3, BIPARTITE, rng_factory(7))
        b = random_state(3, BIPARTITE, rng_factory(7))
        assert_allclose(a.matrix, b.matrix)

    def test_momentum_needs_validated(self):
        rho = DensityMatrix(np.diag([1.5, -0.5]), 2, SINGLE, validate=False)
        with pytest.raises(StateError):
            momentum_distribution(rho)


class TestMomentumFlip:
    @pytest.mark.parametrize("n", [
        pytest.param(2, marks=pytest.mark.skip(
            reason="for N = 2 the labels p and -p coincide")),
        3, 5, 7])
    def test_pt_flips_p1(self, rng, n):
        for _ in range(5):
            rho = random_state(n, BIPARTITE, rng)
            p = momentum_probabilities(rho.matrix, n)
            p_pt = momentum_probabilities(partial_transpose_1(rho.matrix, n),
                                          n)
            flipped = p[(-np.arange(n)) % n, :]
            assert_allclose(p_pt, flipped, atol=1e-10)

    @pytest.mark.parametrize("n", [3, 5])
    def test_single_particle_transpose_flips_p(self, rng, n):
        rho = random_state(n, SINGLE, rng)
        p = momentum_probabilities(rho.matrix, n, SINGLE)
        p_t = momentum_probabilities(rho.matrix.T, n, SINGLE)
        assert_allclose(p_t, p[(-np.arange(n)) % n], atol=1e-10)
