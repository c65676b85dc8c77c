r"""
DIMACS CNF files and external SAT solvers.
"""
import logging
import os
import shlex
import subprocess
import tempfile
from .sat import SatResult
from ..errors import Timeout

__all__ = ['write_dimacs', 'read_dimacs', 'read_model', 'run_external']

logger = logging.getLogger(__name__)


def write_dimacs(clauses, num_vars, fp, comments=()):
    r"""
    Write clauses in DIMACS CNF format to the open file ``fp``.

    Parameters
    ----------
    clauses : list of list of int
    num_vars : int
    fp : file object
    comments : iterable of str
        Written as ``c`` lines before the header.
    """
    for line in comments:
        fp.write('c ' + line + '\n')
    fp.write('p cnf ' + str(num_vars) + ' ' + str(len(clauses)) + '\n')
    for c in clauses:
        fp.write(' '.join(str(lit) for lit in c) + ' 0\n')


def read_dimacs(fp):
    r"""
    Read a DIMACS CNF file.

    Returns
    -------
    clauses : list of list of int
    num_vars : int

    Raises
    ------
    ValueError
        If the header is missing or malformed.
    """
    num_vars = None
    clauses = []
    current = []
    for line in fp:
        line = line.strip()
        if not line or line[0] in 'c%':
            continue
        if line[0] == 'p':
            fields = line.split()
            if len(fields) != 4 or fields[1] != 'cnf':
                raise ValueError('Malformed DIMACS header: ' + line)
            num_vars = int(fields[2])
            continue
        for lit in map(int, line.split()):
            if lit == 0:
                clauses.append(current)
                current = []
            else:
                current.append(lit)
    if num_vars is None:
        raise ValueError('Missing DIMACS header.')
    if current:
        clauses.append(current)
    return clauses, num_vars


def read_model(text):
    r"""
    Parse solver output with ``s`` and ``v`` lines.

    Returns
    -------
    :class:`fieldbv.SatResult` or None
        None if no status line was found.
    """
    status = None
    model = {}
    for line in text.splitlines():
        fields = line.split()
        if not fields:
            continue
        if fields[0] == 's':
            status = {'SATISFIABLE': 'sat',
                      'UNSATISFIABLE': 'unsat'}.get(fields[1])
        elif fields[0] == 'v':
            for lit in map(int, fields[1:]):
                if lit != 0:
                    model[abs(lit)] = lit > 0
    if status is None:
        return None
    return SatResult(status, model if status == 'sat' else None)


def run_external(clauses, num_vars, command, timeout=None):
    r"""
    Solve with an external DIMACS solver.

    Parameters
    ----------
    clauses : list of list of int
    num_vars : int
    command : str
        Command line; the CNF file name is appended.
    timeout : float, optional
        Seconds before the solver is killed.

    Raises
    ------
    Timeout
        If the solver does not finish in time.
    RuntimeError
        If its output has no status line.
    """
    fd, path = tempfile.mkstemp(suffix='.cnf')
    try:
        with os.fdopen(fd, 'w') as fp:
            write_dimacs(clauses, num_vars, fp)
        args = shlex.split(command) + [path]
        logger.debug('running %s', args)
        try:
            done = subprocess.run(args, capture_output=True, text=True,
                                  timeout=timeout)
        except subprocess.TimeoutExpired:
            raise Timeout('bitblast') from None
    finally:
        os.remove(path)
    result = read_model(done.stdout)
    if result is None:
        raise RuntimeError('External solver gave no status (exit code '
                           + str(done.returncode) + ').')
    return result
