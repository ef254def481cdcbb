#!/usr/bin/python3
"""
--------------------------------------------------------------------------------

This program is free software: you can redistribute it and/or modify
it under the terms of the GNU General Public License as published by
the Free Software Foundation, either version 3 of the License, or
(at your option) any later version.

This program is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
GNU General Public License for more details.

--------------------------------------------------------------------------------

Variance witness built from Schwinger monomials::

    Omega = sum_{m,l} x_ml (X1^m Z1^l)(X2^m Z2^l)^H

Omega Omega^H is positive with respect to every physical state, but its
partial transpose need not be. A negative ``Var(Omega)`` in the partially
transposed isotropic state rho_r^T1 therefore signals entanglement of rho_r.
With all ``x_ml = 1`` this happens exactly for ``r > r0 = 1 / (N + 1)``.

Moments are available in closed form (isotropic states only) and from dense
matrices (any state); the two are each other's oracle. The variance of a
non-Hermitian Omega is ``<Omega Omega^H> - |<Omega>|^2``.

With ``M_ml = X^m Z^l`` the closed forms follow from::

    <Phi+| A (x) B |Phi+> = Tr(A B^T) / N,    Tr(SWAP A (x) B) = Tr(A B)

and the isotropic state is r |Phi+><Phi+| + (1 - r) I / N^2, whose partial
transpose is (r / N) SWAP + (1 - r) I / N^2.
"""
import logging
from collections import namedtuple
import numpy as np
from scipy import optimize
from .algebra import PSD_TOL, adjoint, kron, as_matrix, omega_power, \
    min_eigenvalue, ConvergenceError
from .schwinger import build
from .states import isotropic_matrix, check_mixing
from .transpose import partial_transpose_1, expectation
from .utils import encode_complex_array, decode_complex_array, read_json, \
    write_json

ORIGINAL = 'original'
PARTIALLY_TRANSPOSED = 'partially_transposed'
CLOSED_FORM = 'closed_form'
MATRIX = 'matrix'
MATRIX_MAX_N = 12
PPT_MAX_N = 50
PPT_WARN_N = 12

MomentReport = namedtuple(
        'MomentReport', ['mean', 'second', 'variance', 'basis', 'method'])


class WitnessSpec:
    """
    Coefficient table x_ml defining Omega (row m, column l).

    :param n_dim: dimension N >= 2
    :param coeffs: N x N complex array
    """
    def __init__(self, n_dim, coeffs):
        self.n_dim = int(n_dim)
        if self.n_dim < 2:
            raise ValueError("Witness needs N >= 2, got {}".format(n_dim))
        self.coeffs = np.array(coeffs, dtype=complex)
        if self.coeffs.shape != (self.n_dim, self.n_dim):
            raise ValueError("Coefficient table must be {0}x{0}, got {1}"
                             "".format(self.n_dim, self.coeffs.shape))
        if not np.all(np.isfinite(self.coeffs)):
            raise ValueError("Coefficient table has NaN or Inf entries")
        self.coeffs.setflags(write=False)

    def __repr__(self):
        return "WitnessSpec(n_dim={})".format(self.n_dim)

    @classmethod
    def all_ones(cls, n_dim):
        return cls(n_dim, np.ones((n_dim, n_dim), dtype=complex))

    @classmethod
    def random(cls, n_dim, rng):
        x = rng.standard_normal((n_dim, n_dim)) + \
            1j * rng.standard_normal((n_dim, n_dim))
        return cls(n_dim, x)

    def to_dict(self):
        return {"n_dim": self.n_dim,
                "coeffs": encode_complex_array(self.coeffs)}

    @classmethod
    def from_dict(cls, data):
        try:
            return cls(data["n_dim"], decode_complex_array(data["coeffs"]))
        except (KeyError, TypeError) as e:
            raise ValueError("Invalid witness JSON: {}".format(e))

    def write_json(self, path=None):
        return write_json(self.to_dict(), path)

    @classmethod
    def read_json(cls, path):
        return cls.from_dict(read_json(path))


def _report(mean, second, basis, method):
    if abs(second.imag) > 1e-8 * max(1.0, abs(second)):
        logging.warning("<Omega Omega^H> has imaginary part {:.3e}".format(
                second.imag))
    second = float(second.real)
    variance = second - abs(mean) ** 2
    if basis == ORIGINAL and variance < -PSD_TOL:
        logging.warning("Negative variance {} in a physical state".format(
                variance))
    return MomentReport(complex(mean), second, variance, basis, method)


def build_omega(spec):
    """
    Dense N^2 x N^2 matrix of Omega.

    :param spec: :py:class:`WitnessSpec`
    :return: complex matrix
    """
    pair = build(spec.n_dim)
    n = spec.n_dim
    omega = np.zeros((n ** 2, n ** 2), dtype=complex)
    for m in range(n):
        for l in range(n):
            x = spec.coeffs[m, l]
            if x == 0:
                continue
            mono = pair.monomial(m, l)
            omega += x * kron(mono, adjoint(mono))
    return omega


def split_hk(omega):
    """
    Hermitian parts H = (Omega + Omega^H)/2, K = (Omega - Omega^H)/(2i), so
    that Omega = H + iK.

    :param omega: square matrix
    :return: (H, K)
    """
    omega = as_matrix(omega)
    omega_h = omega.conj().T
    h = (omega + omega_h) / 2
    k = (omega - omega_h) / 2j
    return h, k


def omega_kernel_sum(spec):
    """
    sum_{m,l,m',l'} x_ml x*_m'l' omega^(m l' - m' l), by direct loop over m
    (the inner three indices are broadcast).
    """
    n = spec.n_dim
    x = spec.coeffs
    idx = np.arange(n)
    # exponent[l, m', l'] for fixed m: m l' - m' l
    total = 0j
    for m in range(n):
        expo = m * idx[None, None, :] - idx[None, :, None] * idx[:, None, None]
        phase = omega_power(expo, n)
        total += np.einsum('l,ab,lab->', x[m], x.conj(), phase)
    return total


def moments_original_closed(spec, r, permissive=False):
    """
    Closed-form <Omega> and <Omega Omega^H> in the isotropic state rho_r.

    The Bell part pairs monomials m, m' with 2(m - m') = 0 mod N: m' = m, and
    for even N also m' = m + N/2 (mod N), the latter taken once per m::

        <Omega> = r sum_l x_0l + r d(N even) sum_l x_{N/2,l} omega^(l N/2)
                  + (1 - r) x_00
        <Omega Omega^H> = r sum_{m,l,l'} x_ml x*_ml' omega^((l' - l) m)
                  + (1 - r) sum |x_ml|^2
                  + r d(N even) sum_{m,l,l'} x_ml x*_m'l' omega^(l m + (l' - 2l) m')

    :param spec: :py:class:`WitnessSpec`
    :param r: mixing parameter
    :param permissive: accept the full PSD range of r
    :return: :py:class:`MomentReport`
    """
    n = spec.n_dim
    check_mixing(n, r, permissive)
    x = spec.coeffs
    idx = np.arange(n)
    even = n % 2 == 0

    mean = r * x[0].sum() + (1 - r) * x[0, 0]
    if even:
        mean += r * np.sum(x[n // 2] * omega_power(idx * (n // 2), n))

    second = (1 - r) * np.sum(np.abs(x) ** 2)
    for m in range(n):
        row = x[m]
        # sum_{l,l'} x_ml x*_ml' omega^((l'-l) m) = |sum_l x_ml omega^(-l m)|^2
        second += r * abs(np.sum(row * omega_power(-idx * m, n))) ** 2
        if even:
            mp = (m + n // 2) % n
            phase = omega_power(idx[:, None] * m +
                                (idx[None, :] - 2 * idx[:, None]) * mp, n)
            second += r * np.einsum('l,k,lk->', row, x[mp].conj(), phase)
    return _report(mean, complex(second), ORIGINAL, CLOSED_FORM)


def moments_pt_closed(spec, r, permissive=False):
    """
    Closed-form moments in the partially transposed isotropic state::

        <Omega>_T1 = r sum x_ml + (1 - r) x_00
        <Omega Omega^H>_T1 = r sum x_ml x*_m'l' omega^(m l' - m' l)
                             + (1 - r) sum |x_ml|^2

    :param spec: :py:class:`WitnessSpec`
    :param r: mixing parameter
    :param permissive: accept the full PSD range of r
    :return: :py:class:`MomentReport`
    """
    check_mixing(spec.n_dim, r, permissive)
    x = spec.coeffs
    mean = r * x.sum() + (1 - r) * x[0, 0]
    second = r * omega_kernel_sum(spec) + (1 - r) * np.sum(np.abs(x) ** 2)
    return _report(mean, complex(second), PARTIALLY_TRANSPOSED, CLOSED_FORM)


def moments_matrix(spec, r, basis=ORIGINAL, rho_matrix=None, permissive=False):
    """
    Moments from dense matrices: Tr(rho Omega) and Tr(rho Omega Omega^H).

    :param spec: :py:class:`WitnessSpec`, N <= 12
    :param r: mixing parameter of the isotropic state (ignored when
        ``rho_matrix`` is given)
    :param basis: ``original`` or ``partially_transposed``
    :param rho_matrix: optional state matrix replacing rho_r
    :param permissive: accept the full PSD range of r
    :return: :py:class:`MomentReport`
    """
    n = spec.n_dim
    if n > MATRIX_MAX_N:
        raise ValueError("Dense moments limited to N <= {}, got {}".format(
                MATRIX_MAX_N, n))
    if rho_matrix is None:
        check_mixing(n, r, permissive)
        rho_matrix = isotropic_matrix(n, r)
    if basis == PARTIALLY_TRANSPOSED:
        rho_matrix = partial_transpose_1(rho_matrix, n)
    elif basis != ORIGINAL:
        raise ValueError("Unknown basis '{}'".format(basis))
    omega = build_omega(spec)
    mean = expectation(rho_matrix, omega)
    second = expectation(rho_matrix, omega @ omega.conj().T)
    return _report(mean, second, basis, MATRIX)


def moments_via_hk(spec, rho_matrix, basis=ORIGINAL):
    """
    Moments from the Hermitian parts H and K only, i.e. from measurable
    observables. In the partially transposed basis every expectation is
    moved onto the observable: <H>_T1 = <H^T1>_rho, and likewise for every
    product of H and K.

    ``<Omega> = <H> + i<K>`` and
    ``Var(Omega) = Var(H) + Var(K) - i <[H, K]>``.

    :param spec: :py:class:`WitnessSpec`
    :param rho_matrix: physical state matrix rho
    :param basis: ``original`` or ``partially_transposed``
    :return: :py:class:`MomentReport`
    """
    n = spec.n_dim
    h, k = split_hk(build_omega(spec))
    if basis == PARTIALLY_TRANSPOSED:
        def expect(op):
            return expectation(rho_matrix, partial_transpose_1(op, n))
    else:
        def expect(op):
            return expectation(rho_matrix, op)
    mean_h, mean_k = expect(h).real, expect(k).real
    var_h = expect(h @ h).real - mean_h ** 2
    var_k = expect(k @ k).real - mean_k ** 2
    commutator = expect(h @ k - k @ h)
    mean = complex(mean_h, mean_k)
    variance = var_h + var_k - 1j * commutator
    second = variance + abs(mean) ** 2
    return _report(mean, complex(second), basis, MATRIX)


def variance_polynomial(spec):
    """
    Coefficients (a, b, c) with Var(Omega)_{rho_r^T1} = a r^2 + b r + c.

    With S = sum |x|^2, T = sum x, d = T - x_00 and the omega kernel sum K::

        Var = r K + (1 - r) S - |x_00 + r d|^2

    :param spec: :py:class:`WitnessSpec`
    :return: tuple of floats
    """
    x = spec.coeffs
    x00 = x[0, 0]
    s = float(np.sum(np.abs(x) ** 2))
    d = x.sum() - x00
    kernel = omega_kernel_sum(spec).real
    a = -abs(d) ** 2
    b = kernel - s - 2 * (np.conj(x00) * d).real
    c = s - abs(x00) ** 2
    return float(a), float(b), float(c)


def _quadratic_roots(a, b, c):
    if a == 0:
        return [-c / b] if b != 0 else []
    disc = b * b - 4 * a * c
    if disc < 0:
        return []
    q = -0.5 * (b + np.copysign(np.sqrt(disc), b))
    roots = [q / a]
    if q != 0:
        roots.append(c / q)
    return sorted(roots)


def r0_threshold(n_dim, spec=None, grid_points=1000, tol=1e-10):
    """
    Mixing parameter r0 at which Var(Omega) in rho_r^T1 changes sign.

    The analytic root of the quadratic is confirmed by bisection started
    from the first sign change on an r-grid over [0, 1].

    :param n_dim: dimension N
    :param spec: :py:class:`WitnessSpec`, all-ones by default
    :param grid_points: number of grid intervals for the bracketing scan
    :param tol: allowed disagreement between analytic and bisection roots
    :return: r0
    """
    if spec is None:
        spec = WitnessSpec.all_ones(n_dim)
    if n_dim >= 20:
        logging.info("Evaluating the omega kernel for N = {} ({} terms)".format(
                n_dim, n_dim ** 4))
    a, b, c = variance_polynomial(spec)

    def variance(r):
        return (a * r + b) * r + c

    grid = np.linspace(0.0, 1.0, grid_points + 1)
    values = variance(grid)
    change = np.nonzero((values[:-1] > 0) & (values[1:] <= 0))[0]
    if len(change) == 0:
        raise ValueError("No sign change of the PT variance in [0, 1] for "
                         "N = {}".format(n_dim))
    i = change[0]
    bisected = optimize.bisect(variance, grid[i], grid[i + 1], xtol=1e-15,
                               maxiter=200)

    roots = [x for x in _quadratic_roots(a, b, c) if 0 <= x <= 1]
    if len(roots) == 0:
        raise ValueError("Quadratic has no root in [0, 1] for N = {}".format(
                n_dim))
    analytic = min(roots, key=lambda x: abs(x - bisected))
    if abs(analytic - bisected) > tol:
        raise ConvergenceError("Analytic root {} and bisection root {} disagree"
                           "".format(analytic, bisected))
    logging.debug("N = {}: r0 = {} (bisection {})".format(
            n_dim, analytic, bisected))
    return float(analytic)


def ppt_min_eigenvalue(n_dim, r, permissive=False):
    """
    Minimum eigenvalue of rho_r^T1 (expected -r/N + (1 - r)/N^2 for r >= 0).

    :param n_dim: dimension N <= 50
    :param r: mixing parameter
    :param permissive: accept the full PSD range of r
    :return: float
    """
    if n_dim > PPT_MAX_N:
        raise ValueError("PPT eigensolve limited to N <= {}, got {}".format(
                PPT_MAX_N, n_dim))
    if n_dim > PPT_WARN_N:
        logging.warning("Eigensolve of a {0}x{0} matrix may be slow".format(
                n_dim ** 2))
    check_mixing(n_dim, r, permissive)
    return min_eigenvalue(partial_transpose_1(isotropic_matrix(n_dim, r),
                                              n_dim))


def ppt_min_eigenvalue_expected(n_dim, r):
    """
    Spectrum of (r/N) SWAP + (1 - r)/N^2: the smaller of the two eigenvalues.
    """
    return min(r / n_dim, -r / n_dim) + (1 - r) / n_dim ** 2


def ppt_zero_crossing(n_dim, xtol=1e-14):
    """
    Mixing parameter where the minimum eigenvalue of rho_r^T1 crosses zero.
    """
    return optimize.brentq(lambda r: ppt_min_eigenvalue(n_dim, r), 0.0, 1.0,
                           xtol=xtol)
