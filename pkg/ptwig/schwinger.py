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

Schwinger (clock and shift) operators for an N-dimensional Hilbert space.

With the reference basis ``|q>``, ``q = 0, ..., N-1`` and ``|q + N> = |q>``::

    Z|q> = omega^q |q>,    X|q> = |q + 1>,    omega = exp(2 pi i / N)

so that ``Z X = omega X Z`` and ``X^N = Z^N = I``. X translates the position
label q and Z the momentum label p (``X = omega^(-p)``, ``Z = omega^q``).
"""
import logging
from functools import lru_cache
import numpy as np
from .algebra import identity, omega_power, adjoint, trace, approx_equal


class SchwingerPair:
    """
    The X and Z operators for dimension N together with omega.

    All matrices are read-only after construction, so a pair can be shared
    freely (:py:func:`build` caches one pair per dimension).

    :param n_dim: Hilbert space dimension, at least 2
    """
    def __init__(self, n_dim):
        n_dim = int(n_dim)
        if n_dim < 2:
            raise ValueError("Schwinger operators need N >= 2, got {}".format(
                    n_dim))
        self.n_dim = n_dim
        self.omega = complex(omega_power(1, n_dim))
        # X[q + 1, q] = 1
        self.x_op = np.roll(identity(n_dim), 1, axis=0)
        self.z_op = np.diag(omega_power(np.arange(n_dim), n_dim))
        self.x_op.setflags(write=False)
        self.z_op.setflags(write=False)
        self._powers = {
            which: tuple(self._frozen_power(op, k) for k in range(n_dim))
            for which, op in (('x', self.x_op), ('z', self.z_op))
        }

    def __repr__(self):
        return "SchwingerPair(n_dim={})".format(self.n_dim)

    @staticmethod
    def _frozen_power(op, k):
        m = np.linalg.matrix_power(op, k)
        m.setflags(write=False)
        return m

    def _power(self, which, k):
        return self._powers[which][int(k) % self.n_dim]

    def monomial(self, m, l):
        """
        X^m Z^l, X-power first; exponents are reduced mod N.

        :param m: power of X
        :param l: power of Z
        :return: N x N unitary matrix
        """
        return self._power('x', m) @ self._power('z', l)

    def check_identities(self, tol=1e-12):
        """
        Check X^N = Z^N = I and Z X = omega X Z.

        :param tol: entrywise tolerance
        :return: boolean
        """
        n = self.n_dim
        eye = identity(n)
        x_n = np.linalg.matrix_power(self.x_op, n)
        z_n = np.linalg.matrix_power(self.z_op, n)
        ok = all([
            approx_equal(x_n, eye, tol),
            approx_equal(z_n, eye, tol),
            approx_equal(self.z_op @ self.x_op,
                         self.omega * self.x_op @ self.z_op, tol)
        ])
        if not ok:
            logging.warning("Schwinger identities violated for N = {}".format(n))
        return ok

    def trace_pair_identity(self, m, l, m2, l2):
        """
        (1/N) Tr[(X^m Z^l)(X^m2 Z^l2)^H], which equals
        delta(m, m2) delta(l, l2) for indices in [0, N).
        """
        a = self.monomial(m, l)
        b = self.monomial(m2, l2)
        return trace(a @ adjoint(b)) / self.n_dim

    def trace_quad_identity(self, m, l, m2, l2):
        """
        (1/N) Tr[(X^m Z^l)(X^m2 Z^l2)^H (X^m Z^l)^H (X^m2 Z^l2)], which equals
        omega^(m l2 - m2 l).
        """
        a = self.monomial(m, l)
        b = self.monomial(m2, l2)
        return trace(a @ adjoint(b) @ adjoint(a) @ b) / self.n_dim

    def momentum_basis(self):
        """
        Matrix whose column p is ``|p> = N^(-1/2) sum_q omega^(q p) |q>``,
        the eigenvector of X with eigenvalue omega^(-p).
        """
        q = np.arange(self.n_dim)
        return omega_power(np.outer(q, q), self.n_dim) / np.sqrt(self.n_dim)


@lru_cache(maxsize=64)
def build(n_dim):
    """
    Build (or fetch the cached) :py:class:`SchwingerPair` for dimension N.

    :param n_dim: Hilbert space dimension, at least 2
    :return: SchwingerPair
    """
    logging.debug("Building Schwinger operators for N = {}".format(n_dim))
    return SchwingerPair(n_dim)
