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

Every package has it's utils module, right?
"""
import os
import sys
import json
import logging
from dataclasses import dataclass, field
from typing import List, Optional
import numpy as np

FLOAT_FORMAT = '%.12g'
COMMANDS = ('table1', 'pauli', 'wigner', 'scan', 'ppt')
FORMATS = ('csv', 'json', 'text')


def is_prime(n):
    """
    Primality by trial division.

    :param n: integer
    :return: boolean
    """
    n = int(n)
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def parse_r_values(r_string):
    """
    Parse an r specification, either a single float (``0.3``), a comma
    separated list (``0,0.3,1``) or a grid ``start:end:step`` (end included
    when it falls on the grid).

    :param r_string: string
    :return: list of floats
    """
    r_string = r_string.strip()
    if ':' in r_string:
        parts = r_string.split(':')
        if len(parts) != 3:
            raise ValueError("Grid spec must be start:end:step, got '{}'"
                             "".format(r_string))
        start, end, step = [float(x) for x in parts]
        if not start < end:
            raise ValueError("Grid spec needs start < end, got {} >= {}".format(
                    start, end))
        if not step > 0:
            raise ValueError("Grid spec needs a positive step, got {}".format(
                    step))
        n = int(np.floor((end - start) / step + 1e-9))
        # round away accumulated float noise so rows print cleanly
        return [float(np.round(start + k * step, 12)) for k in range(n + 1)]
    return [float(x) for x in r_string.split(',') if x.strip() != '']


@dataclass
class RunConfig:
    """
    Validated options for one CLI invocation.
    """
    command: str
    n_dim: Optional[int] = None
    n_values: List[int] = field(default_factory=list)
    r_values: List[float] = field(default_factory=list)
    input_path: Optional[str] = None
    witness_path: Optional[str] = None
    output_path: Optional[str] = None
    fmt: str = 'csv'
    seed: int = 0
    tolerance: Optional[float] = None
    check_reflection: bool = False
    n_jobs: int = 1

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError("Unknown command '{}'".format(self.command))
        if self.fmt not in FORMATS:
            raise ValueError("Unknown format '{}'".format(self.fmt))
        for n in ([self.n_dim] if self.n_dim is not None else []) + \
                list(self.n_values):
            if int(n) < 2:
                raise ValueError("N must be >= 2, got {}".format(n))
        if self.tolerance is not None and not self.tolerance > 0:
            raise ValueError("Tolerance must be positive, got {}".format(
                    self.tolerance))
        if self.input_path and not os.path.isfile(self.input_path):
            raise ValueError("Input file {} does not exist".format(
                    self.input_path))
        if self.witness_path and not os.path.isfile(self.witness_path):
            raise ValueError("Witness file {} does not exist".format(
                    self.witness_path))

    def tol(self, default):
        return default if self.tolerance is None else self.tolerance

    def rng(self):
        return np.random.default_rng(self.seed)


def random_complex(shape, rng):
    """
    Complex Gaussian array with independent standard normal parts.
    """
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def random_hermitian(dim, rng):
    g = random_complex((dim, dim), rng)
    return (g + g.conj().T) / 2


def encode_complex_array(a):
    """
    Nested lists of ``[re, im]`` pairs, the JSON encoding of complex data.
    """
    a = np.asarray(a, dtype=complex)
    return [[float(z.real), float(z.imag)] for z in a.ravel()] if a.ndim == 1 \
        else [encode_complex_array(row) for row in a]


def decode_complex_array(data):
    """
    Inverse of :py:func:`encode_complex_array`; the innermost level must be
    ``[re, im]`` pairs.
    """
    a = np.asarray(data, dtype=float)
    if a.shape[-1] != 2:
        raise ValueError("Complex entries must be [re, im] pairs")
    return a[..., 0] + 1j * a[..., 1]


def read_json(path):
    logging.debug("Reading {}".format(path))
    with open(path, 'r') as f:
        try:
            return json.load(f)
        except json.JSONDecodeError as e:
            raise ValueError("Malformed JSON in {}: {}".format(path, e))


def write_json(data, path=None):
    """
    Write JSON to a file, or to stdout when no path is given.
    """
    text = json.dumps(data, indent=2)
    if path is None:
        sys.stdout.write(text + "\n")
    else:
        with open(path, 'w') as f:
            f.write(text + "\n")
        logging.info("Wrote {}".format(path))
    return path


def write_table(df, path=None, fmt='csv'):
    """
    Write a results data frame as CSV (12 significant digits) or JSON records.

    :param df: pandas data frame
    :param path: output file, stdout when None
    :param fmt: ``csv`` or ``json``
    :return: path
    """
    if fmt == 'json':
        return write_json(json.loads(df.to_json(orient='records',
                                                double_precision=12)), path)
    if path is None:
        df.to_csv(sys.stdout, index=False, float_format=FLOAT_FORMAT)
    else:
        df.to_csv(path, index=False, float_format=FLOAT_FORMAT)
        logging.info("Wrote {} rows to {}".format(len(df.index), path))
    return path
