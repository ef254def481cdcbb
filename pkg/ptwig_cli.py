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

The **command line interface** (CLI) is the main way to interact with the
`ptwig` package. The CLI is organized with a Click command that wraps a
function with the same name followed by an underscore, which takes a
:py:class:`ptwig.utils.RunConfig` and returns the exit code.

Upon successful installation you should be able to run::

    $ ptwig -h

    Usage: ptwig [OPTIONS] COMMAND [ARGS]...

      Welcome to the ptwig command line interface!

    Options:
      -v, --verbosity [info|debug]  Verbosity level, default = info.
      -l, --logfile TEXT            File to write logs to (optional)
      --version                     Print version number
      -h, --help                    Show this message and exit.

    Commands:
      pauli   Two-spin Heisenberg example.
      ppt     PPT test of a bipartite state.
      scan    Witness variance over a grid of mixing parameters.
      table1  Entanglement threshold r0 of the isotropic state.
      wigner  Discrete Wigner function of a state.

Exit codes are 0 on success, 1 on a usage or input error and 2 when a
numerical check fails.

Example
=======

(1) Thresholds for the default dimensions::

    $ ptwig table1

(2) Witness scan for N = 2, written as CSV::

    $ ptwig scan --n 2 --r 0:1:0.01 --out scan_n2.csv

(3) Wigner function of a state, with the momentum reflection check::

    $ ptwig wigner --state bell3.json --out bell3_wigner.csv --check-reflection

--------------------------------------------------------------------------------

Reference
=========
"""
# keep these imports to a minimum to speed up initial CLI loading
import click
import logging
import sys
import coloredlogs
from ptwig import __version__
from ptwig.algebra import ConvergenceError
from ptwig.utils import RunConfig, parse_r_values

TABLE1_N = (2, 3, 4, 5, 9, 20, 50)
SCAN_PPT_MAX_N = 12


# CLI ENTRY POINT --------------------------------------------------------------
@click.group(context_settings={'help_option_names': ['-h', '--help']})
@click.option(
        '--verbosity', '-v', type=click.Choice(['info', 'debug']),
        default='info', help="Verbosity level, default = info."
)
@click.option(
        '--logfile', '-l', default=None,
        help="File to write logs to (optional)"
)
@click.option('--version', is_flag=True, help="Print version number")
def cli(verbosity, logfile, version):
    """
    Welcome to the ptwig command line interface!

    \b
    Partial transposition, discrete Wigner functions and entanglement
    detection for pairs of N-level systems.
    """
    if not logfile:
        coloredlogs.install(
                fmt='%(asctime)s: %(levelname)s\t%(message)s',
                level=verbosity.upper(), stream=sys.stdout
        )
    else:
        print('Logs will be written to {}'.format(logfile))
        logging.basicConfig(
                filename=logfile,
                filemode='a',
                format='%(asctime)s: %(levelname)s\t%(message)s',
                datefmt='%H:%M:%S',
                level=verbosity.upper()
        )

    if version:
        logging.info("This is ptwig v{}".format(__version__))
    pass


def _run(func, **kwargs):
    """
    Build the run configuration and call ``func``; usage and input errors
    exit with code 1, failed checks and solver disagreements with code 2.
    """
    try:
        config = RunConfig(**kwargs)
        code = func(config)
    except ConvergenceError as e:
        logging.error(str(e))
        code = 2
    except (ValueError, OSError) as e:
        logging.error(str(e))
        code = 1
    if code:
        sys.exit(code)


def _fraction(n):
    return "1/{}".format(n + 1)


def _load_state(config):
    """
    Read the state given by ``--state``, or draw a seeded random bipartite
    state for ``--n``.
    """
    from ptwig.states import DensityMatrix, random_state, BIPARTITE
    if config.input_path:
        rho = DensityMatrix.read_json(config.input_path)
        logging.info("Read {} state with N = {} from {}".format(
                rho.shape, rho.n_dim, config.input_path))
        return rho
    if config.n_dim is None:
        raise ValueError("Provide either --state or --n")
    logging.info("Random bipartite state, N = {}, seed = {}".format(
            config.n_dim, config.seed))
    return random_state(config.n_dim, BIPARTITE, config.rng())


# TABLE 1 ----------------------------------------------------------------------
@cli.command(context_settings={'help_option_names': ['-h', '--help']})
@click.option(
        '--n', '-n', 'n_values', multiple=True, type=int,
        help='dimension N, can be given multiple times (default: 2, 3, 4, 5, '
             '9, 20, 50)'
)
@click.option(
        '--format', '-f', 'fmt', type=click.Choice(['text', 'csv', 'json']),
        default='text', show_default=True, help='output format'
)
@click.option('--out', '-o', default=None, help='output file (default stdout)')
@click.option(
        '--tol', default=None, type=float,
        help='allowed deviation from 1/(N+1) (default 1e-10)'
)
def table1(n_values, fmt, out, tol):
    """
    Entanglement threshold r0 of the isotropic state.

    For every N the mixing parameter r0 at which the variance of the
    all-ones witness in the partially transposed isotropic state changes sign
    is computed and compared with 1/(N+1).

    Example:

        ptwig table1 --n 9 --n 20
    """
    _run(table1_, command='table1', n_values=list(n_values or TABLE1_N),
         fmt=fmt, output_path=out, tolerance=tol)


def table1_(config):
    """
    Compute r0 for every N in ``config.n_values``.

    :param config: :py:class:`ptwig.utils.RunConfig`
    :return: exit code, 2 when any r0 deviates from 1/(N+1)
    """
    import pandas as pd
    from ptwig.witness import r0_threshold
    from ptwig.utils import write_table
    tol = config.tol(1e-10)
    rows = []
    for n in config.n_values:
        r0 = r0_threshold(n)
        rows.append({'N': n, 'r0': r0, 'analytic': _fraction(n),
                     'deviation': abs(r0 - 1 / (n + 1))})
        logging.info("N = {}: r0 = {:.12g}".format(n, r0))
    df = pd.DataFrame(rows, columns=['N', 'r0', 'analytic', 'deviation'])

    if config.fmt == 'text':
        lines = ["{}, {:.12g}, {}".format(row.N, row.r0, row.analytic)
                 for row in df.itertuples()]
        text = "\n".join(["N, r0, 1/(N+1)"] + lines) + "\n"
        if config.output_path:
            with open(config.output_path, 'w') as f:
                f.write(text)
        else:
            click.echo(text, nl=False)
    else:
        write_table(df, config.output_path, config.fmt)

    bad = df[df['deviation'] > tol]
    if len(bad.index) > 0:
        logging.error("r0 deviates from 1/(N+1) for N = {}".format(
                ", ".join(str(n) for n in bad['N'])))
        return 2
    return 0


# PAULI ------------------------------------------------------------------------
@cli.command(context_settings={'help_option_names': ['-h', '--help']})
@click.option(
        '--format', '-f', 'fmt', type=click.Choice(['text', 'json']),
        default='text', show_default=True, help='output format'
)
@click.option(
        '--tol', default=None, type=float,
        help='allowed deviation per value (default 1e-12)'
)
def pauli(fmt, tol):
    """
    Two-spin Heisenberg example.

    Prints the moments of A = sx sx + sy sy + sz sz in the Bell state and in
    its partial transpose, together with the expected values.

    Example:

        ptwig pauli --format json
    """
    _run(pauli_, command='pauli', fmt=fmt, tolerance=tol)


def pauli_(config):
    """
    Run the two-spin example.

    :param config: :py:class:`ptwig.utils.RunConfig`
    :return: exit code, 2 when any value deviates from the expected one
    """
    from ptwig.pauli import run_pauli_demo, check_operator_identities, \
        format_report, report_json, report_passes
    tol = config.tol(1e-12)
    report = run_pauli_demo()
    if config.fmt == 'json':
        click.echo(report_json(report, tol))
    else:
        click.echo(format_report(report, tol))
    ok = report_passes(report, tol)
    if not check_operator_identities(tol):
        ok = False
    if not ok:
        logging.error("Two-spin example deviates from the expected values")
        return 2
    return 0


# WIGNER -----------------------------------------------------------------------
@cli.command(context_settings={'help_option_names': ['-h', '--help']})
@click.option(
        '--state', '-s', default=None, type=click.Path(exists=True),
        help='state JSON file'
)
@click.option(
        '--n', '-n', 'n_dim', default=None, type=int,
        help='dimension N of a seeded random bipartite state (if no --state)'
)
@click.option('--seed', default=0, show_default=True, help='random seed')
@click.option('--out', '-o', default=None, help='output CSV (default stdout)')
@click.option(
        '--check-reflection', is_flag=True,
        help='check that partial transposition reflects p1'
)
@click.option(
        '--tol', default=None, type=float,
        help='reflection check tolerance (default 1e-10)'
)
def wigner(state, n_dim, seed, out, check_reflection, tol):
    """
    Discrete Wigner function of a state.

    N must be an odd prime. Writes one CSV row per phase-space point
    (q, p, w for one particle, q1, q2, p1, p2, w for two).

    Example:

        ptwig wigner --state bell3.json --check-reflection
    """
    _run(wigner_, command='wigner', input_path=state, n_dim=n_dim, seed=seed,
         output_path=out, check_reflection=check_reflection, tolerance=tol)


def wigner_(config):
    """
    Compute and write the Wigner grid, optionally checking the p1 reflection
    under partial transposition.

    :param config: :py:class:`ptwig.utils.RunConfig`
    :return: exit code, 2 when the reflection check fails
    """
    from ptwig.wigner import check_wigner_dimension, wigner_one, wigner_two, \
        reflect_p1, reflection_deviation
    from ptwig.states import SINGLE
    if config.input_path is None and config.n_dim is not None:
        check_wigner_dimension(config.n_dim)
    rho = _load_state(config)
    check_wigner_dimension(rho.n_dim)

    if rho.shape == SINGLE:
        grid = wigner_one(rho)
    else:
        grid = wigner_two(rho)
    grid.write_csv(config.output_path)

    if not config.check_reflection:
        return 0
    tol = config.tol(1e-10)
    if rho.shape == SINGLE:
        deviation = wigner_one(rho.transpose()).max_deviation(reflect_p1(grid))
    else:
        deviation = reflection_deviation(rho)
    logging.info("Reflection check: max deviation {:.3e}".format(deviation))
    if deviation < tol:
        click.echo("max deviation < {:g}, PASS".format(tol))
        return 0
    click.echo("max deviation = {:.3e}, FAIL".format(deviation))
    return 2


# SCAN -------------------------------------------------------------------------
@cli.command(context_settings={'help_option_names': ['-h', '--help']})
@click.option('--n', '-n', 'n_dim', required=True, type=int, help='dimension N')
@click.option(
        '--r', '-r', 'r_spec', default='0:1:0.001', show_default=True,
        help='mixing parameters: a value, a comma separated list or '
             'start:end:step'
)
@click.option(
        '--witness', '-w', default=None, type=click.Path(exists=True),
        help='witness coefficient JSON (default all ones)'
)
@click.option(
        '--format', '-f', 'fmt', type=click.Choice(['csv', 'json']),
        default='csv', show_default=True, help='output format'
)
@click.option('--out', '-o', default=None, help='output file (default stdout)')
@click.option(
        '--n-jobs', '-j', 'n_jobs', default=1, show_default=True,
        help='number of parallel jobs'
)
def scan(n_dim, r_spec, witness, fmt, out, n_jobs):
    """
    Witness variance over a grid of mixing parameters.

    For each r the variance of Omega in the isotropic state and in its
    partial transpose are computed in closed form; for N <= 12 the minimum
    eigenvalue of the partial transpose is added.

    Example:

        ptwig scan --n 3 --r 0:1:0.01 --out scan_n3.csv
    """
    _run(scan_, command='scan', n_dim=n_dim,
         r_values=_parse_or_fail(r_spec), witness_path=witness, fmt=fmt,
         output_path=out, n_jobs=n_jobs)


def _parse_or_fail(r_spec):
    try:
        return parse_r_values(r_spec)
    except ValueError as e:
        logging.error(str(e))
        sys.exit(1)


def _scan_row(spec, r, with_ppt):
    from ptwig.algebra import PSD_TOL
    from ptwig.witness import moments_original_closed, moments_pt_closed, \
        ppt_min_eigenvalue
    var_original = moments_original_closed(spec, r).variance
    var_pt = moments_pt_closed(spec, r).variance
    row = {'r': r, 'var_original': var_original, 'var_pt': var_pt}
    if with_ppt:
        row['ppt_min_eig'] = ppt_min_eigenvalue(spec.n_dim, r)
    row['entangled_flag'] = bool(var_pt < -PSD_TOL)
    return row


def scan_(config):
    """
    Scan the r grid in parallel; rows come out ordered by r.

    :param config: :py:class:`ptwig.utils.RunConfig`
    :return: exit code
    """
    import pandas as pd
    from joblib import Parallel, delayed
    from ptwig.witness import WitnessSpec, r0_threshold
    from ptwig.states import check_mixing
    from ptwig.utils import write_table
    if config.witness_path:
        spec = WitnessSpec.read_json(config.witness_path)
        if spec.n_dim != config.n_dim:
            raise ValueError("Witness has N = {}, scan has N = {}".format(
                    spec.n_dim, config.n_dim))
    else:
        spec = WitnessSpec.all_ones(config.n_dim)
    if len(config.r_values) == 0:
        raise ValueError("Empty r grid")
    for r in config.r_values:
        check_mixing(config.n_dim, r)

    with_ppt = config.n_dim <= SCAN_PPT_MAX_N
    logging.info("Scanning {} values of r for N = {} ({} jobs)".format(
            len(config.r_values), config.n_dim, config.n_jobs))
    rows = Parallel(n_jobs=config.n_jobs)(
            delayed(_scan_row)(spec, r, with_ppt) for r in config.r_values)
    columns = ['r', 'var_original', 'var_pt'] + \
        (['ppt_min_eig'] if with_ppt else []) + ['entangled_flag']
    df = pd.DataFrame(rows, columns=columns)
    write_table(df, config.output_path, config.fmt)

    try:
        logging.info("Variance of the partial transpose changes sign at "
                     "r0 = {:.12g}".format(r0_threshold(config.n_dim, spec)))
    except (ValueError, RuntimeError) as e:
        logging.info("No threshold in [0, 1]: {}".format(e))
    return 0


# PPT --------------------------------------------------------------------------
@cli.command(context_settings={'help_option_names': ['-h', '--help']})
@click.option(
        '--state', '-s', default=None, type=click.Path(exists=True),
        help='bipartite state JSON file'
)
@click.option(
        '--n', '-n', 'n_dim', default=None, type=int,
        help='dimension N of a seeded random state (if no --state)'
)
@click.option('--seed', default=0, show_default=True, help='random seed')
@click.option(
        '--tol', default=None, type=float,
        help='positivity tolerance (default 1e-9)'
)
def ppt(state, n_dim, seed, tol):
    """
    PPT test of a bipartite state.

    Prints the minimum eigenvalue of the partial transpose; a negative value
    proves the state entangled.

    Example:

        ptwig ppt --state bell3.json
    """
    _run(ppt_, command='ppt', input_path=state, n_dim=n_dim, seed=seed,
         tolerance=tol)


def ppt_(config):
    """
    :param config: :py:class:`ptwig.utils.RunConfig`
    :return: exit code
    """
    from ptwig.algebra import PSD_TOL
    from ptwig.transpose import is_ppt
    rho = _load_state(config)
    ok, lam = is_ppt(rho, config.tol(PSD_TOL))
    click.echo("min eigenvalue of rho^T1: {:.12g}".format(lam))
    click.echo("PPT" if ok else "NPT (entangled)")
    return 0


if __name__ == '__main__':
    cli()
