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

Two spin-1/2 particles in the Bell state |Phi+> = (|00> + |11>)/sqrt(2)
(|0> spin up) and the Heisenberg coupling::

    A = sx (x) sx + sy (x) sy + sz (x) sz,      A^2 = 3 - 2A

|Phi+> is an eigenstate of A, so Var(A) = 0. In the partially transposed
state the variance is -12, which no physical state allows. Note that
(A^2)^T1 = 3 - 2A^T1 differs from (A^T1)^2 = 3 + 2A^T1.
"""
import json
import logging
from collections import namedtuple
import numpy as np
from .algebra import identity, kron, max_abs_diff
from .states import bell_state
from .transpose import partial_transpose_1, expectation

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)

PauliReport = namedtuple('PauliReport', [
    'mean_original', 'second_original', 'var_original', 'mean_pt',
    'second_pt', 'second_of_pt_op', 'var_pt'])

EXPECTED = PauliReport(1.0, 1.0, 0.0, 3.0, -3.0, 9.0, -12.0)

LABELS = {
    'mean_original': '<A>',
    'second_original': '<A^2>',
    'var_original': 'Var',
    'mean_pt': '<A>_PT',
    'second_pt': '<A^2>_PT',
    'second_of_pt_op': '<(A^T1)^2>',
    'var_pt': 'Var_PT'
}


def heisenberg_operator():
    return kron(SIGMA_X, SIGMA_X) + kron(SIGMA_Y, SIGMA_Y) + \
        kron(SIGMA_Z, SIGMA_Z)


def run_pauli_demo():
    """
    Compute the seven numbers of the two-spin example from the state and
    operator matrices. PT quantities use the observable route
    ``<B>_{rho^T1} = <B^T1>_rho``.

    :return: :py:class:`PauliReport`
    """
    rho = bell_state(2).matrix
    a = heisenberg_operator()
    a_pt = partial_transpose_1(a, 2)
    a2_pt = partial_transpose_1(a @ a, 2)

    mean = expectation(rho, a).real
    second = expectation(rho, a @ a).real
    mean_pt = expectation(rho, a_pt).real
    second_pt = expectation(rho, a2_pt).real
    second_of_pt_op = expectation(rho, a_pt @ a_pt).real
    return PauliReport(mean, second, second - mean ** 2, mean_pt, second_pt,
                       second_of_pt_op, second_pt - mean_pt ** 2)


def variance_pt_two_ways():
    """
    Var(A) in rho^T1, once from the partially transposed observables in
    rho and once from the partially transposed state.

    :return: (via observable, via state)
    """
    rho = bell_state(2).matrix
    a = heisenberg_operator()
    via_op = expectation(rho, partial_transpose_1(a @ a, 2)).real - \
        expectation(rho, partial_transpose_1(a, 2)).real ** 2
    rho_pt = partial_transpose_1(rho, 2)
    via_state = expectation(rho_pt, a @ a).real - \
        expectation(rho_pt, a).real ** 2
    return via_op, via_state


def operator_identities():
    """
    :return: dict with the residuals of A^2 = 3 - 2A and
        (A^2)^T1 = 3 - 2A^T1, and max |(A^2)^T1 - (A^T1)^2|
    """
    a = heisenberg_operator()
    eye = identity(4)
    a_pt = partial_transpose_1(a, 2)
    a2_pt = partial_transpose_1(a @ a, 2)
    return {
        'square': max_abs_diff(a @ a, 3 * eye - 2 * a),
        'square_pt': max_abs_diff(a2_pt, 3 * eye - 2 * a_pt),
        'pt_square': max_abs_diff(a_pt @ a_pt, 3 * eye + 2 * a_pt),
        'noncommuting': max_abs_diff(a2_pt, a_pt @ a_pt)
    }


def check_operator_identities(tol=1e-12):
    """
    True when both operator identities hold entrywise and the PT of the
    square visibly differs from the square of the PT.
    """
    res = operator_identities()
    ok = res['square'] <= tol and res['square_pt'] <= tol and \
        res['pt_square'] <= tol and res['noncommuting'] > 0.5
    if not ok:
        logging.warning("Operator identities failed: {}".format(res))
    return ok


def deviations(report, expected=EXPECTED):
    return {k: abs(getattr(report, k) - getattr(expected, k))
            for k in report._fields}


def report_passes(report, tol=1e-12):
    return all(d <= tol for d in deviations(report).values())


def format_report(report, tol=1e-12):
    """
    Aligned text table, one line per quantity, e.g.
    ``    Var_PT = -12 (expected -12) PASS``.
    """
    width = max(len(x) for x in LABELS.values())
    lines = []
    for k, dev in deviations(report).items():
        lines.append("{:>{w}} = {:.12g} (expected {:.12g}) {}".format(
                LABELS[k], round(getattr(report, k), 12) + 0.0, getattr(EXPECTED, k),
                "PASS" if dev <= tol else "FAIL", w=width))
    return "\n".join(lines)


def report_json(report, tol=1e-12):
    data = {
        "values": dict(report._asdict()),
        "expected": dict(EXPECTED._asdict()),
        "pass": report_passes(report, tol)
    }
    return json.dumps(data, indent=2)
