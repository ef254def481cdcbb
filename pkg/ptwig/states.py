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

Density matrices for one particle (dimension N) or two particles (N x N),
the generalized Bell state, the isotropic state and position / momentum
distributions.

Momentum labels p run over 0, ..., N-1 and -p is stored as (N - p) mod N.
The momentum eigenstates are ``|p> = N^(-1/2) sum_q omega^(q p) |q>``, so the
(joint) momentum distribution is the quadratic form::

    P(p1, p2) = 1/N^2 sum <n1 n2|rho|n1' n2'> omega^(p1 (n1' - n1)) omega^(p2 (n2' - n2))
"""
import logging
from collections import namedtuple
import numpy as np
from .algebra import TOL, PSD_TOL, as_matrix, identity, kron, is_hermitian, \
    min_eigenvalue, trace, DimensionError
from .schwinger import build
from .utils import random_complex, encode_complex_array, decode_complex_array, \
    read_json, write_json

SINGLE = 'single'
BIPARTITE = 'bipartite'

MomentumDistribution = namedtuple(
        'MomentumDistribution', ['values', 'n_dim', 'shape'])


class StateError(ValueError):
    pass


def _system_dim(n_dim, shape):
    if shape == SINGLE:
        return n_dim
    elif shape == BIPARTITE:
        return n_dim ** 2
    raise StateError("Unknown state shape '{}'".format(shape))


class DensityMatrix:
    """
    A density matrix with its system shape.

    Hermiticity and unit trace are always enforced. With ``validate=True``
    the minimum eigenvalue is also checked against ``-PSD_TOL``; only
    validated states are accepted where a probability interpretation is
    needed (e.g. :py:func:`momentum_distribution`).

    :param matrix: square complex matrix
    :param n_dim: single-particle dimension N
    :param shape: ``single`` or ``bipartite``
    :param validate: check positive semi-definiteness
    :param tol: Hermiticity / trace tolerance
    """
    def __init__(self, matrix, n_dim, shape=BIPARTITE, validate=True, tol=TOL):
        self.matrix = as_matrix(matrix).copy()
        self.n_dim = int(n_dim)
        self.shape = shape
        dim = _system_dim(self.n_dim, shape)
        if self.matrix.shape[0] != dim:
            raise DimensionError(
                    "A {} state with N = {} needs a {}x{} matrix, got {}x{}"
                    "".format(shape, n_dim, dim, dim, *self.matrix.shape))
        if not is_hermitian(self.matrix, tol):
            raise StateError("Density matrix is not Hermitian")
        tr = trace(self.matrix)
        if abs(tr - 1) > tol:
            raise StateError("Density matrix trace is {}, not 1".format(tr))
        self.validated = False
        if validate:
            lam = min_eigenvalue(self.matrix, tol=tol)
            if lam < -PSD_TOL:
                raise StateError("Density matrix is not positive "
                                 "semi-definite (min eigenvalue {:.3e})"
                                 "".format(lam))
            self.validated = True
        self.matrix.setflags(write=False)

    def __repr__(self):
        return "DensityMatrix(n_dim={}, shape={}, validated={})".format(
                self.n_dim, self.shape, self.validated)

    @property
    def dim(self):
        return self.matrix.shape[0]

    @property
    def purity(self):
        return float(np.real(np.trace(self.matrix @ self.matrix)))

    def transpose(self):
        """
        Full transpose in the reference basis (the transpose of a state is a
        state, so validation carries over).
        """
        return DensityMatrix(self.matrix.T, self.n_dim, self.shape,
                             validate=self.validated)

    def to_dict(self):
        return {
            "n_dim": self.n_dim,
            "shape": self.shape,
            "entries": encode_complex_array(self.matrix.ravel())
        }

    @classmethod
    def from_dict(cls, data, validate=True):
        try:
            n_dim = int(data["n_dim"])
            shape = data.get("shape", BIPARTITE)
            entries = decode_complex_array(data["entries"])
        except (KeyError, TypeError) as e:
            raise StateError("Invalid state JSON: {}".format(e))
        dim = _system_dim(n_dim, shape)
        if entries.size != dim ** 2:
            raise StateError("State JSON has {} entries, expected {}".format(
                    entries.size, dim ** 2))
        return cls(entries.reshape(dim, dim), n_dim, shape, validate=validate)

    def write_json(self, path=None):
        return write_json(self.to_dict(), path)

    @classmethod
    def read_json(cls, path, validate=True):
        return cls.from_dict(read_json(path), validate=validate)


def pure_state(vector, n_dim, shape=BIPARTITE):
    """
    |psi><psi| for a (not necessarily normalized) state vector.
    """
    v = np.asarray(vector, dtype=complex).ravel()
    norm = np.linalg.norm(v)
    if norm == 0:
        raise StateError("Zero state vector")
    v = v / norm
    return DensityMatrix(np.outer(v, v.conj()), n_dim, shape)


def position_eigenstate(n_dim, q):
    v = np.zeros(n_dim, dtype=complex)
    v[q % n_dim] = 1
    return pure_state(v, n_dim, SINGLE)


def momentum_eigenstate(n_dim, p):
    return pure_state(build(n_dim).momentum_basis()[:, p % n_dim], n_dim,
                      SINGLE)


def maximally_mixed(n_dim, shape=BIPARTITE):
    dim = _system_dim(n_dim, shape)
    return DensityMatrix(identity(dim) / dim, n_dim, shape)


def bell_state(n_dim):
    """
    The maximally entangled state (1/N) sum_{q, q'} |q q><q' q'|.

    :param n_dim: single-particle dimension N >= 2
    :return: bipartite DensityMatrix
    """
    if n_dim < 2:
        raise StateError("Bell state needs N >= 2")
    v = identity(n_dim).ravel()
    return pure_state(v, n_dim, BIPARTITE)


def isotropic_range(n_dim, permissive=False):
    """
    Accepted mixing parameters: [0, 1], or the full positive range
    [-1/(N^2 - 1), 1] when ``permissive``.
    """
    if permissive:
        return -1.0 / (n_dim ** 2 - 1), 1.0
    return 0.0, 1.0


def check_mixing(n_dim, r, permissive=False):
    lo, hi = isotropic_range(n_dim, permissive)
    if not lo - 1e-15 <= r <= hi + 1e-15:
        raise StateError("Mixing parameter r = {} outside [{:.6g}, {}]"
                         "".format(r, lo, hi))


def isotropic_matrix(n_dim, r):
    """
    Matrix of the isotropic state, no checks::

        <q1 q2|rho_r|q1' q2'> = (r/N) d(q1,q2) d(q1',q2') + (1-r)/N^2 d(q1,q1') d(q2,q2')
    """
    v = identity(n_dim).ravel()
    return (r / n_dim) * np.outer(v, v) + \
        ((1 - r) / n_dim ** 2) * identity(n_dim ** 2)


def isotropic(n_dim, r, permissive=False, validate=True):
    """
    The isotropic state r |Phi+><Phi+| + (1 - r) I / N^2.

    :param n_dim: single-particle dimension N >= 2
    :param r: mixing parameter
    :param permissive: accept the full PSD range of r instead of [0, 1]
    :param validate: check positivity with an eigensolve
    :return: bipartite DensityMatrix
    """
    if n_dim < 2:
        raise StateError("Isotropic state needs N >= 2")
    check_mixing(n_dim, r, permissive)
    return DensityMatrix(isotropic_matrix(n_dim, r), n_dim, BIPARTITE,
                         validate=validate)


def random_state(n_dim, shape=BIPARTITE, rng=None):
    """
    Random mixed state G G^H / Tr(G G^H) with complex Gaussian G.

    :param n_dim: single-particle dimension
    :param shape: ``single`` or ``bipartite``
    :param rng: ``numpy.random.Generator`` (seed it for reproducibility)
    :return: validated DensityMatrix
    """
    if rng is None:
        rng = np.random.default_rng()
    dim = _system_dim(n_dim, shape)
    g = random_complex((dim, dim), rng)
    rho = g @ g.conj().T
    rho = (rho + rho.conj().T) / 2
    return DensityMatrix(rho / np.trace(rho).real, n_dim, shape)


def momentum_probabilities(matrix, n_dim, shape=BIPARTITE):
    """
    Evaluate the momentum quadratic form on any Hermitian matrix, e.g. a
    partially transposed state for which the result is a quasi-distribution.

    :param matrix: Hermitian matrix
    :param n_dim: single-particle dimension
    :param shape: ``single`` or ``bipartite``
    :return: real array indexed by p, or by (p1, p2)
    """
    matrix = as_matrix(matrix)
    basis = build(n_dim).momentum_basis()
    if shape == BIPARTITE:
        basis = kron(basis, basis)
    probs = np.einsum('ip,ij,jp->p', basis.conj(), matrix, basis)
    if np.max(np.abs(probs.imag)) > TOL:
        raise StateError("Momentum distribution is not real, input is not "
                         "Hermitian")
    probs = probs.real
    if shape == BIPARTITE:
        probs = probs.reshape(n_dim, n_dim)
    return probs


def momentum_distribution(rho):
    """
    Momentum distribution of a validated state, over Z_N or Z_N x Z_N.

    :param rho: validated DensityMatrix
    :return: :py:class:`MomentumDistribution`
    """
    if not rho.validated:
        raise StateError("Momentum distribution needs a validated state")
    values = momentum_probabilities(rho.matrix, rho.n_dim, rho.shape)
    if abs(values.sum() - 1) > PSD_TOL:
        logging.warning("Momentum distribution sums to {}".format(values.sum()))
    return MomentumDistribution(values, rho.n_dim, rho.shape)


def position_distribution(rho):
    """
    Diagonal of rho in the reference basis (flat, composite index
    q1 * N + q2 for two particles).
    """
    diag = np.diag(rho.matrix)
    if np.max(np.abs(diag.imag)) > 1e-12:
        raise StateError("Diagonal of density matrix is not real")
    return diag.real.copy()
