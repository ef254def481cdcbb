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

Discrete Wigner functions for N an odd prime, from the explicit sum::

    W(q, p) = sum_{q', q''} <q'|rho|q''> d(q' + q'' = 2q) omega^(p (q'' - q'))

(all congruences mod N), and its two-particle version with one delta and one
phase per particle. No 1/N prefactor is applied, so the grid sums to
N Tr(rho) for one particle and N^2 Tr(rho) for two.

Partial transposition on particle 1 maps W(q1, q2, p1, p2) to
W(q1, q2, -p1, p2): a reflection of the momentum of particle 1.
"""
import logging
import numpy as np
import pandas as pd
from .algebra import TOL, omega_power
from .states import SINGLE, BIPARTITE, StateError
from .transpose import pt_state
from .utils import is_prime, write_table

ONE = 'one'
TWO = 'two'


class WignerDimensionError(ValueError):
    pass


def check_wigner_dimension(n_dim):
    """
    Raise unless N is an odd prime.
    """
    if n_dim == 2:
        raise WignerDimensionError(
                "N must be an odd prime: this Wigner function requires N to be "
                "a prime number larger than 2")
    if not is_prime(n_dim):
        raise WignerDimensionError(
                "N must be an odd prime, got N = {}".format(n_dim))


class WignerGrid:
    """
    Real Wigner function values on the phase-space lattice.

    :param values: array indexed (q, p) or (q1, q2, p1, p2)
    :param n_dim: odd prime N
    :param arity: ``one`` or ``two`` particles
    """
    def __init__(self, values, n_dim, arity):
        self.values = np.asarray(values, dtype=float)
        self.n_dim = n_dim
        self.arity = arity
        expected = (n_dim,) * (2 if arity == ONE else 4)
        if self.values.shape != expected:
            raise ValueError("Grid shape {} does not match arity {} and N = {}"
                             "".format(self.values.shape, arity, n_dim))

    def __repr__(self):
        return "WignerGrid(n_dim={}, arity={})".format(self.n_dim, self.arity)

    @property
    def p1_axis(self):
        return 1 if self.arity == ONE else 2

    def total(self):
        return float(self.values.sum())

    def position_marginal(self):
        """
        Sum over momenta, equal to N <q|rho|q> (or N^2 <q1 q2|rho|q1 q2>).
        """
        if self.arity == ONE:
            return self.values.sum(axis=1)
        return self.values.sum(axis=(2, 3))

    def max_deviation(self, other):
        return float(np.max(np.abs(self.values - other.values)))

    def to_frame(self):
        """
        Long-format data frame, one row per grid point, columns
        ``q,p,w`` or ``q1,q2,p1,p2,w``.
        """
        columns = ['q', 'p'] if self.arity == ONE else ['q1', 'q2', 'p1', 'p2']
        index = np.indices(self.values.shape).reshape(len(columns), -1).T
        df = pd.DataFrame(index, columns=columns)
        df['w'] = self.values.ravel()
        return df

    def write_csv(self, path=None):
        return write_table(self.to_frame(), path, fmt='csv')


def _phase_space_kernel(n_dim):
    """
    K[q, p, a, b] = d(a + b = 2q) omega^(p (b - a)), the weight of
    <a|rho|b> in W(q, p).
    """
    x = np.arange(n_dim)
    delta = ((x[None, :, None] + x[None, None, :]) % n_dim ==
             (2 * x[:, None, None]) % n_dim)
    phase = omega_power(x[:, None, None] * (x[None, None, :] - x[None, :, None]),
                        n_dim)
    return delta[:, None, :, :] * phase[None, :, :, :]


def _real_part(w, tol=TOL):
    imag = float(np.max(np.abs(w.imag)))
    if imag > tol:
        raise StateError("Wigner function has imaginary part {:.3e}, input is "
                         "not Hermitian".format(imag))
    return w.real


def wigner_one(rho):
    """
    One-particle Wigner function W(q, p).

    :param rho: single-particle DensityMatrix with N an odd prime
    :return: :py:class:`WignerGrid`
    """
    if rho.shape != SINGLE:
        raise StateError("wigner_one needs a single-particle state")
    n = rho.n_dim
    check_wigner_dimension(n)
    k = _phase_space_kernel(n)
    w = np.einsum('ab,qpab->qp', rho.matrix, k)
    return WignerGrid(_real_part(w), n, ONE)


def wigner_two(rho):
    """
    Two-particle Wigner function W(q1, q2, p1, p2).

    :param rho: bipartite DensityMatrix (or PartialTransposed) with N an odd
        prime
    :return: :py:class:`WignerGrid`
    """
    if getattr(rho, 'shape', BIPARTITE) != BIPARTITE:
        raise StateError("wigner_two needs a bipartite state")
    n = rho.n_dim
    check_wigner_dimension(n)
    k = _phase_space_kernel(n)
    # rho4[a1, a2, b1, b2] = <a1 a2|rho|b1 b2>
    rho4 = np.asarray(rho.matrix).reshape(n, n, n, n)
    logging.debug("Contracting {}^4 Wigner grid".format(n))
    w = np.einsum('ijkl,qpik,rsjl->qrps', rho4, k, k, optimize=True)
    return WignerGrid(_real_part(w), n, TWO)


def reflect_p1(grid):
    """
    Reindex p1 -> -p1 mod N (p for one-particle grids).

    :param grid: :py:class:`WignerGrid`
    :return: :py:class:`WignerGrid`
    """
    n = grid.n_dim
    flipped = np.take(grid.values, (-np.arange(n)) % n, axis=grid.p1_axis)
    return WignerGrid(flipped, n, grid.arity)


def reflection_deviation(rho):
    """
    Max |W_{rho^T1} - reflect_p1(W_rho)| over the grid.

    :param rho: bipartite DensityMatrix
    :return: float
    """
    return wigner_two(pt_state(rho)).max_deviation(reflect_p1(wigner_two(rho)))
