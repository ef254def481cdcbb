import numpy as np
import pytest
from numpy.testing import assert_allclose
from ptwig.states import BIPARTITE, StateError, random_state, isotropic_matrix
from ptwig.witness import WitnessSpec, MomentReport, ORIGINAL, \
    PARTIALLY_TRANSPOSED, build_omega, split_hk, omega_kernel_sum, \
    moments_original_closed, moments_pt_closed, moments_matrix, \
    moments_via_hk, variance_polynomial, r0_threshold, ppt_min_eigenvalue, \
    ppt_min_eigenvalue_expected, ppt_zero_crossing

TABLE1 = [2, 3, 4, 5, 9, 20, 50]


def assert_same_moments(a, b, tol=1e-9):
    assert_allclose(a.mean, b.mean, rtol=tol, atol=tol)
    assert_allclose(a.second, b.second, rtol=tol, atol=tol)
    assert_allclose(a.variance, b.variance, rtol=tol, atol=tol)


class TestWitnessSpec:
    def test_shape(self):
        with pytest.raises(ValueError):
            WitnessSpec(3, np.ones((2, 2)))
        with pytest.raises(ValueError):
            WitnessSpec(1, np.ones((1, 1)))

    def test_json(self, tmp_path, rng):
        spec = WitnessSpec.random(3, rng)
        path = str(tmp_path / "x.json")
        spec.write_json(path)
        back = WitnessSpec.read_json(path)
        assert back.n_dim == 3
        assert_allclose(back.coeffs, spec.coeffs)

    def test_json_missing_key(self):
        with pytest.raises(ValueError):
            WitnessSpec.from_dict({"coeffs": [[[1, 0]]]})


class TestOmega:
    def test_split(self, rng):
        omega = build_omega(WitnessSpec.random(3, rng))
        h, k = split_hk(omega)
        assert_allclose(h, h.conj().T)
        assert_allclose(k, k.conj().T)
        assert_allclose(h + 1j * k, omega, atol=1e-14)

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 9])
    def test_kernel_all_ones(self, n):
        assert_allclose(omega_kernel_sum(WitnessSpec.all_ones(n)), n ** 2,
                        atol=1e-9)

    def test_polynomial_all_ones(self):
        n = 3
        a, b, c = variance_polynomial(WitnessSpec.all_ones(n))
        assert_allclose([a, b, c],
                        [-(n ** 2 - 1) ** 2, -2 * (n ** 2 - 1), n ** 2 - 1],
                        atol=1e-10)

    def test_polynomial_matches_closed_form(self, rng):
        spec = WitnessSpec.random(4, rng)
        a, b, c = variance_polynomial(spec)
        for r in (0.0, 0.25, 0.8):
            assert_allclose(a * r ** 2 + b * r + c,
                            moments_pt_closed(spec, r).variance, atol=1e-9)


class TestClosedFormOracle:
    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_random_tables(self, rng, n):
        for _ in range(10):
            spec = WitnessSpec.random(n, rng)
            for r in (0.0, 0.3, 0.7, 1.0):
                assert_same_moments(moments_original_closed(spec, r),
                                    moments_matrix(spec, r, ORIGINAL))
                assert_same_moments(
                        moments_pt_closed(spec, r),
                        moments_matrix(spec, r, PARTIALLY_TRANSPOSED))

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_permissive_range(self, rng, n):
        spec = WitnessSpec.random(n, rng)
        r = -1 / (n ** 2 - 1)
        assert_same_moments(
                moments_original_closed(spec, r, permissive=True),
                moments_matrix(spec, r, ORIGINAL, permissive=True))
        with pytest.raises(StateError):
            moments_original_closed(spec, r)

    def test_report_fields(self):
        rep = moments_pt_closed(WitnessSpec.all_ones(2), 1.0)
        assert isinstance(rep, MomentReport)
        assert rep.basis == PARTIALLY_TRANSPOSED
        assert rep.method == 'closed_form'

    def test_matrix_size_guard(self):
        with pytest.raises(ValueError):
            moments_matrix(WitnessSpec.all_ones(13), 0.5)

    def test_unknown_basis(self):
        with pytest.raises(ValueError):
            moments_matrix(WitnessSpec.all_ones(2), 0.5, basis='diagonal')


class TestOriginalState:
    @pytest.mark.parametrize("n", [2, 3, 4, 5, 9])
    @pytest.mark.parametrize("r", [0.0, 0.1, 0.5, 0.9, 1.0])
    def test_all_ones(self, n, r):
        var = moments_original_closed(WitnessSpec.all_ones(n), r).variance
        assert_allclose(var, n ** 2 - (r * n + 1 - r) ** 2, atol=1e-10)
        assert var >= -1e-9

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_random_tables_non_negative(self, rng, n):
        for _ in range(10):
            spec = WitnessSpec.random(n, rng)
            for r in np.linspace(0, 1, 11):
                assert moments_original_closed(spec, r).variance >= -1e-9


class TestPartiallyTransposed:
    @pytest.mark.parametrize("n, expected", [(2, -12.0), (3, -72.0)])
    def test_bell_limit(self, n, expected):
        rep = moments_pt_closed(WitnessSpec.all_ones(n), 1.0)
        assert_allclose(rep.variance, expected, atol=1e-10)

    @pytest.mark.parametrize("n", [2, 3, 5, 9])
    def test_sign_change(self, n):
        spec = WitnessSpec.all_ones(n)
        r0 = 1 / (n + 1)
        for r in np.linspace(0, 1, 1000):
            if abs(r - r0) < 1e-9:
                continue
            var = moments_pt_closed(spec, r).variance
            assert (var > 0) == (r < r0)

    def test_scan_grid_n2(self):
        spec = WitnessSpec.all_ones(2)
        assert moments_pt_closed(spec, 0.33).variance > 0
        assert moments_pt_closed(spec, 0.34).variance < 0


class TestHermitianParts:
    @pytest.mark.parametrize("n", [2, 3])
    @pytest.mark.parametrize("basis", [ORIGINAL, PARTIALLY_TRANSPOSED])
    def test_matches_matrix(self, rng, n, basis):
        spec = WitnessSpec.random(n, rng)
        rho = random_state(n, BIPARTITE, rng)
        assert_same_moments(moments_via_hk(spec, rho.matrix, basis),
                            moments_matrix(spec, None, basis,
                                           rho_matrix=rho.matrix))

    def test_isotropic(self):
        spec = WitnessSpec.all_ones(3)
        rho = isotropic_matrix(3, 0.6)
        assert_same_moments(moments_via_hk(spec, rho, PARTIALLY_TRANSPOSED),
                            moments_pt_closed(spec, 0.6))


class TestThreshold:
    @pytest.mark.parametrize("n", TABLE1)
    def test_isotropic_thresholds(self, n):
        assert abs(r0_threshold(n) - 1 / (n + 1)) <= 1e-12

    def test_custom_witness(self):
        spec = WitnessSpec(2, np.array([[0, 1], [1, 0]]))
        assert_allclose(r0_threshold(2, spec), 0.5, atol=1e-12)
        assert_allclose(moments_pt_closed(spec, 0.5).variance, 0.0,
                        atol=1e-12)

    def test_no_sign_change(self):
        spec = WitnessSpec(2, np.array([[1, 0], [0, 0]]))
        with pytest.raises(ValueError):
            r0_threshold(2, spec)


class TestPPT:
    @pytest.mark.parametrize("n", [2, 3, 5, 9])
    def test_min_eigenvalue(self, n):
        for r in (0.0, 0.2, 0.5, 1.0):
            expected = -r / n + (1 - r) / n ** 2
            assert_allclose(ppt_min_eigenvalue(n, r), expected, atol=1e-10)
            assert_allclose(ppt_min_eigenvalue_expected(n, r), expected,
                            atol=1e-15)

    @pytest.mark.parametrize("n", [2, 3, 5, 9])
    def test_zero_crossing(self, n):
        assert abs(ppt_zero_crossing(n) - r0_threshold(n)) <= 1e-8

    def test_size_guard(self):
        with pytest.raises(ValueError):
            ppt_min_eigenvalue(51, 0.5)
