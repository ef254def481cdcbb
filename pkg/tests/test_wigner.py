import numpy as np
import pytest
from numpy.testing import assert_allclose
from ptwig.states import SINGLE, BIPARTITE, StateError, maximally_mixed, \
    bell_state, position_eigenstate, momentum_eigenstate, pure_state, \
    random_state
from ptwig.transpose import pt_state
from ptwig.wigner import WignerGrid, WignerDimensionError, TWO, \
    check_wigner_dimension, wigner_one, wigner_two, reflect_p1, \
    reflection_deviation


class TestDimension:
    @pytest.mark.parametrize("n", [2, 4, 6, 9, 15])
    def test_rejected(self, n):
        with pytest.raises(WignerDimensionError, match="odd prime"):
            check_wigner_dimension(n)

    @pytest.mark.parametrize("n", [3, 5, 7, 11])
    def test_accepted(self, n):
        check_wigner_dimension(n)

    def test_n2_explains(self):
        with pytest.raises(WignerDimensionError, match="larger than 2"):
            wigner_one(maximally_mixed(2, SINGLE))

    def test_shape_checks(self):
        with pytest.raises(StateError):
            wigner_one(bell_state(3))
        with pytest.raises(StateError):
            wigner_two(maximally_mixed(3, SINGLE))
        with pytest.raises(ValueError):
            WignerGrid(np.zeros((3, 3)), 3, TWO)


class TestOneParticle:
    def test_position_eigenstate(self):
        grid = wigner_one(position_eigenstate(5, 2))
        expected = np.zeros((5, 5))
        expected[2, :] = 1
        assert_allclose(grid.values, expected, atol=1e-12)

    def test_zero_momentum_eigenstate(self):
        grid = wigner_one(momentum_eigenstate(5, 0))
        expected = np.zeros((5, 5))
        expected[:, 0] = 1
        assert_allclose(grid.values, expected, atol=1e-12)

    @pytest.mark.parametrize("n", [3, 5, 7])
    def test_normalization_and_marginal(self, rng, n):
        rho = random_state(n, SINGLE, rng)
        grid = wigner_one(rho)
        assert_allclose(grid.total(), n, atol=1e-10)
        assert_allclose(grid.position_marginal(), n * np.diag(rho.matrix).real,
                        atol=1e-10)

    @pytest.mark.parametrize("n", [3, 5])
    def test_transpose_reflects_p(self, rng, n):
        for _ in range(20):
            rho = random_state(n, SINGLE, rng)
            w_t = wigner_one(rho.transpose())
            assert w_t.max_deviation(reflect_p1(wigner_one(rho))) < 1e-10


class TestTwoParticle:
    def test_maximally_mixed(self):
        grid = wigner_two(maximally_mixed(3))
        assert grid.values.shape == (3, 3, 3, 3)
        assert_allclose(grid.values, 1 / 9, atol=1e-14)

    def test_product_position_eigenstate(self):
        v = np.zeros(9)
        v[0] = 1
        grid = wigner_two(pure_state(v, 3, BIPARTITE))
        expected = np.zeros((3, 3, 3, 3))
        expected[0, 0, :, :] = 1
        assert_allclose(grid.values, expected, atol=1e-12)

    @pytest.mark.parametrize("n", [3, 5])
    def test_normalization_and_marginal(self, rng, n):
        rho = random_state(n, BIPARTITE, rng)
        grid = wigner_two(rho)
        assert_allclose(grid.total(), n ** 2, atol=1e-9)
        marginal = n ** 2 * np.diag(rho.matrix).real.reshape(n, n)
        assert_allclose(grid.position_marginal(), marginal, atol=1e-9)

    @pytest.mark.parametrize("n", [3, 5, 7])
    def test_pt_reflects_p1(self, rng, n):
        for _ in range(20):
            rho = random_state(n, BIPARTITE, rng)
            assert reflection_deviation(rho) < 1e-10

    def test_bell_state_pt_grid(self):
        rho = bell_state(3)
        assert wigner_two(rho).values.min() >= -1e-12
        w_pt = wigner_two(pt_state(rho))
        assert_allclose(w_pt.values, reflect_p1(wigner_two(rho)).values,
                        atol=1e-12)

    def test_reflect_twice(self, rng):
        grid = wigner_two(random_state(3, BIPARTITE, rng))
        assert_allclose(reflect_p1(reflect_p1(grid)).values, grid.values)
        # p1 = 0 is a fixed point
        assert_allclose(reflect_p1(grid).values[:, :, 0, :],
                        grid.values[:, :, 0, :])


class TestFrame:
    def test_two_particle_frame(self):
        df = wigner_two(maximally_mixed(3)).to_frame()
        assert list(df.columns) == ['q1', 'q2', 'p1', 'p2', 'w']
        assert len(df.index) == 81
        row = df.iloc[5]
        # row-major over (q1, q2, p1, p2)
        assert (row['q1'], row['q2'], row['p1'], row['p2']) == (0, 0, 1, 2)

    def test_one_particle_csv(self, tmp_path):
        path = str(tmp_path / "w.csv")
        wigner_one(position_eigenstate(3, 0)).write_csv(path)
        with open(path) as f:
            lines = f.read().splitlines()
        assert lines[0] == "q,p,w"
        assert len(lines) == 10
        assert lines[1] == "0,0,1"
