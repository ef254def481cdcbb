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

Partial transposition of bipartite states and observables.

Transposition acts on particle 1 only::

    (A^T1)[(n1, n2), (m1, m2)] = A[(m1, n2), (n1, m2)]

For a state rho and an observable A the expectation values satisfy
``Tr(rho^T1 A) = Tr(rho A^T1)``, so the expectation of A in the (possibly
unphysical) state rho^T1 is the expectation of the observable A^T1 in the
physical state rho, and can in principle be measured.
"""
import logging
from collections import namedtuple
import numpy as np
from .algebra import TOL, PSD_TOL, as_matrix, is_hermitian, trace, \
    min_eigenvalue, DimensionError, HermitianError
from .states import BIPARTITE, StateError

PTExpectationCheck = namedtuple('PTExpectationCheck', ['lhs', 'rhs', 'agree'])


def _blocks(a, n_dim):
    a = as_matrix(a)
    if a.shape[0] != n_dim ** 2:
        raise DimensionError("Partial transpose needs a {0}x{0} matrix for "
                             "N = {1}, got {2}x{2}".format(
                                n_dim ** 2, n_dim, a.shape[0]))
    # axes (n1, n2, m1, m2)
    return a.reshape(n_dim, n_dim, n_dim, n_dim)


def partial_transpose_1(a, n_dim):
    """
    Partial transpose on particle 1.

    :param a: N^2 x N^2 matrix (state or observable)
    :param n_dim: single-particle dimension N
    :return: N^2 x N^2 matrix
    """
    return _blocks(a, n_dim).transpose(2, 1, 0, 3).reshape(
            n_dim ** 2, n_dim ** 2).copy()


def partial_transpose_2(a, n_dim):
    """
    Partial transpose on particle 2, i.e. the full transpose of A^T1.
    """
    return _blocks(a, n_dim).transpose(0, 3, 2, 1).reshape(
            n_dim ** 2, n_dim ** 2).copy()


class PartialTransposed:
    """
    A partially transposed state. Trace and Hermiticity are inherited from
    the source state, positivity is not: the minimum eigenvalue is computed
    on first access only.

    :param matrix: partially transposed matrix
    :param n_dim: single-particle dimension
    """
    def __init__(self, matrix, n_dim):
        self.matrix = as_matrix(matrix)
        self.n_dim = n_dim
        self.hermitian = is_hermitian(self.matrix)
        self._min_eigenvalue = None
        self.matrix.setflags(write=False)

    def __repr__(self):
        return "PartialTransposed(n_dim={})".format(self.n_dim)

    @property
    def min_eigenvalue(self):
        if self._min_eigenvalue is None:
            if not self.hermitian:
                return None
            logging.debug("Eigensolve of {0}x{0} partial transpose".format(
                    self.matrix.shape[0]))
            self._min_eigenvalue = min_eigenvalue(self.matrix)
        return self._min_eigenvalue

    @property
    def is_npt(self):
        """
        True when the partial transpose has a negative eigenvalue (beyond
        the positivity tolerance), which proves the source state entangled.
        """
        lam = self.min_eigenvalue
        return lam is not None and lam < -PSD_TOL


def pt_state(rho):
    """
    Partial transpose of a bipartite state.

    :param rho: bipartite :py:class:`ptwig.states.DensityMatrix`
    :return: :py:class:`PartialTransposed`
    """
    if rho.shape != BIPARTITE:
        raise StateError("Partial transposition needs a bipartite state")
    pt = PartialTransposed(partial_transpose_1(rho.matrix, rho.n_dim),
                           rho.n_dim)
    tr = trace(pt.matrix)
    if abs(tr - 1) > TOL:
        logging.warning("Partial transpose has trace {}".format(tr))
    return pt


def is_ppt(rho, tol=PSD_TOL):
    """
    PPT test: a negative eigenvalue of rho^T1 proves entanglement.

    :param rho: bipartite DensityMatrix
    :param tol: positivity tolerance
    :return: (ppt boolean, minimum eigenvalue of rho^T1)
    """
    lam = pt_state(rho).min_eigenvalue
    return lam >= -tol, lam


def expectation(rho_matrix, a):
    """
    <A> = Tr(rho A).

    :param rho_matrix: state matrix (or any matrix of matching dimension)
    :param a: operator
    :return: complex
    """
    rho_matrix, a = as_matrix(rho_matrix), as_matrix(a)
    if rho_matrix.shape != a.shape:
        raise DimensionError("Dimension mismatch: state {} vs. operator {}"
                             "".format(rho_matrix.shape[0], a.shape[0]))
    # Tr(rho A) without forming the product
    return complex(np.sum(rho_matrix * a.T))


def pt_expectation_check(rho, a, tol=TOL):
    """
    Compare <A> in rho^T1 with <A^T1> in rho, both computed independently.

    :param rho: bipartite DensityMatrix
    :param a: Hermitian observable on the two-particle space
    :param tol: agreement tolerance
    :return: :py:class:`PTExpectationCheck` (lhs, rhs, agree)
    """
    if rho.shape != BIPARTITE:
        raise StateError("PT expectation check needs a bipartite state")
    a = as_matrix(a)
    if a.shape != rho.matrix.shape:
        raise DimensionError("Observable and state dimensions differ")
    if not is_hermitian(a):
        raise HermitianError("Observable must be Hermitian")
    lhs = expectation(partial_transpose_1(rho.matrix, rho.n_dim), a)
    rhs = expectation(rho.matrix, partial_transpose_1(a, rho.n_dim))
    return PTExpectationCheck(lhs, rhs, abs(lhs - rhs) <= tol)


def positivity_pair(rho, omega):
    """
    The two candidate PT extensions of <Omega Omega^H>:
    ``<(Omega Omega^H)^T1>_rho``, which may be negative, and
    ``<Omega^T1 (Omega^T1)^H>_rho``, which cannot be for a valid state.

    :param rho: bipartite DensityMatrix
    :param omega: operator on the two-particle space
    :return: tuple of two floats
    """
    omega = as_matrix(omega)
    n = rho.n_dim
    pt_of_product = partial_transpose_1(omega @ omega.conj().T, n)
    omega_pt = partial_transpose_1(omega, n)
    product_of_pt = omega_pt @ omega_pt.conj().T
    return (expectation(rho.matrix, pt_of_product).real,
            expectation(rho.matrix, product_of_pt).real)
