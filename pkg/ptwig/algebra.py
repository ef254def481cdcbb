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

Dense complex linear algebra used throughout ``ptwig``.

Every operator and state is a square ``numpy.ndarray`` of dtype ``complex128``.
Composite two-particle indices are always row-major: the basis state
``|n1, n2>`` sits at index ``n1 * N + n2``, which is what ``numpy.kron``
produces and what :py:func:`ptwig.transpose.partial_transpose_1` assumes.
"""
import logging
from collections import namedtuple
import numpy as np

TOL = 1e-10
PSD_TOL = 1e-9
JACOBI_MAX_SWEEPS = 100


class DimensionError(ValueError):
    pass


class HermitianError(ValueError):
    pass


class ConvergenceError(RuntimeError):
    pass


EigenResult = namedtuple('EigenResult', ['eigenvalues', 'eigenvectors'])


def as_matrix(a):
    """
    Coerce input to a finite square complex matrix.

    :param a: array-like
    :return: ``numpy.ndarray`` of dtype complex128
    """
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] == 0:
        raise DimensionError("Matrix must be square, got shape {}".format(
                m.shape))
    if not np.all(np.isfinite(m)):
        raise ValueError("Matrix contains NaN or Inf entries")
    return m


def _check_same_dim(a, b):
    if a.shape != b.shape:
        raise DimensionError("Dimension mismatch: {} vs. {}".format(
                a.shape[0], b.shape[0]))


def identity(n):
    return np.eye(n, dtype=complex)


def omega_power(k, n):
    """
    omega^k with omega = exp(2 pi i / n); k is reduced mod n first.

    :param k: integer or integer array
    :param n: dimension
    :return: complex scalar or array
    """
    return np.exp(2j * np.pi * (np.asarray(k) % n) / n)


def matmul(a, b):
    a, b = as_matrix(a), as_matrix(b)
    _check_same_dim(a, b)
    return a @ b


def kron(a, b):
    """
    Kronecker product, entry ((i1, i2), (j1, j2)) = a[i1, j1] * b[i2, j2]
    with composite index i1 * dim(b) + i2.
    """
    return np.kron(as_matrix(a), as_matrix(b))


def adjoint(a):
    return as_matrix(a).conj().T


def trace(a):
    return complex(np.trace(as_matrix(a)))


def max_abs_diff(a, b):
    a, b = as_matrix(a), as_matrix(b)
    _check_same_dim(a, b)
    return float(np.max(np.abs(a - b)))


def approx_equal(a, b, tol=TOL):
    """
    True iff the largest entrywise modulus difference is at most ``tol``.
    """
    return max_abs_diff(a, b) <= tol


def is_hermitian(a, tol=TOL):
    a = as_matrix(a)
    return float(np.max(np.abs(a - a.conj().T))) <= tol


def jacobi_eigh(a, max_sweeps=JACOBI_MAX_SWEEPS, eps=1e-12):
    """
    Cyclic Jacobi eigensolver for a complex Hermitian matrix.

    Each rotation first removes the phase of the pivot ``a[p, q]`` and then
    applies the real symmetric Jacobi rotation to the resulting 2x2 block.
    Sweeps stop once the off-diagonal Frobenius norm drops below
    ``eps * dim * max(1, ||A||_F)``.

    :param a: Hermitian matrix
    :param max_sweeps: hard cap on the number of sweeps
    :param eps: convergence factor
    :return: :py:class:`EigenResult`, eigenvalues ascending
    """
    a = as_matrix(a).copy()
    n = a.shape[0]
    v = identity(n)
    threshold = eps * n * max(1.0, float(np.linalg.norm(a)))

    for sweep in range(max_sweeps + 1):
        off = float(np.linalg.norm(a - np.diag(np.diag(a))))
        logging.debug("Jacobi sweep {}: off-diagonal norm {:.3e}".format(
                sweep, off))
        if off < threshold:
            break
        if sweep == max_sweeps:
            raise ConvergenceError(
                    "Jacobi eigensolver did not converge in {} sweeps "
                    "(off-diagonal norm {:.3e})".format(max_sweeps, off))
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                mod = abs(apq)
                if mod < 1e-300:
                    continue
                phase = apq / mod
                theta = (a[q, q].real - a[p, p].real) / (2.0 * mod)
                t = 1.0 / (abs(theta) + np.sqrt(theta ** 2 + 1.0))
                if theta < 0:
                    t = -t
                c = 1.0 / np.sqrt(t ** 2 + 1.0)
                s = t * c
                g = np.array([[c, s], [-s * phase.conjugate(),
                                       c * phase.conjugate()]])
                idx = [p, q]
                a[:, idx] = a[:, idx] @ g
                a[idx, :] = g.conj().T @ a[idx, :]
                v[:, idx] = v[:, idx] @ g
                a[p, q] = a[q, p] = 0.0

    eigenvalues = np.real(np.diag(a))
    order = np.argsort(eigenvalues)
    return EigenResult(eigenvalues[order], v[:, order])


def eig_hermitian(a, tol=TOL, method='lapack'):
    """
    Full spectral decomposition of a Hermitian matrix.

    :param a: Hermitian matrix
    :param tol: Hermiticity tolerance
    :param method: ``lapack`` (``numpy.linalg.eigh``) or ``jacobi``
        (:py:func:`jacobi_eigh`)
    :return: :py:class:`EigenResult`, eigenvalues ascending, eigenvectors as
        columns
    """
    a = as_matrix(a)
    if not is_hermitian(a, tol):
        raise HermitianError("Matrix is not Hermitian (max |A - A^H| = "
                             "{:.3e})".format(max_abs_diff(a, adjoint(a))))
    if method == 'jacobi':
        return jacobi_eigh(a)
    elif method == 'lapack':
        w, v = np.linalg.eigh(a)
        return EigenResult(w, v)
    raise ValueError("Unknown eigensolver '{}'".format(method))


def reconstruct(eigen):
    """
    V diag(lambda) V^H from an :py:class:`EigenResult`.
    """
    v = eigen.eigenvectors
    return (v * eigen.eigenvalues) @ v.conj().T


def min_eigenvalue(a, tol=TOL, method='lapack'):
    return float(eig_hermitian(a, tol=tol, method=method).eigenvalues[0])
