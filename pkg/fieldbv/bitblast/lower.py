r"""
Lowering of bit-vector validity problems to SAT.
"""
import logging
import time
from .circuit import Circuit
from .sat import CDCLSolver, check_model
from .dimacs import run_external
from .._settings import get_sat_backend, get_external_solver

__all__ = ['lower', 'sat_solve']

logger = logging.getLogger(__name__)


def lower(goals, hyps=(), side_constraints=()):
    r"""
    Circuit whose satisfiability refutes the goals.

    The hypotheses and side constraints are asserted together
    with the negated conjunction of the goals, so the circuit is
    unsatisfiable iff the goals follow from the hypotheses.

    Parameters
    ----------
    goals : list of :class:`fieldbv.Term`
        Bit-vector formulas.
    hyps : list of :class:`fieldbv.Term`
        Bit-vector formulas.
    side_constraints : list of :class:`fieldbv.Term`
        Bounds of atom variables, see
        :meth:`fieldbv.BVAtomizer.side_constraints`.

    Returns
    -------
    :class:`Circuit`
        ``goal`` attribute holds the literal of the goal
        conjunction.

    Raises
    ------
    Unsupported
        If some formula has a node outside the bit-vector fragment.

    Examples
    --------
    .. doctest::

        >>> import fieldbv as fbv
        >>> a = fbv.var('a', fbv.BV(2))
        >>> c = fbv.lower([fbv.eq(a, a)])
        >>> fbv.sat_solve(c).status
        'unsat'
    """
    c = Circuit()
    for h in list(hyps) + list(side_constraints):
        c.assert_lit(c.encode(h))
    c.goal = c.all_(c.encode(g) for g in goals)
    c.assert_lit(-c.goal)
    assert c.is_acyclic()
    logger.debug('lowered to %s', c)
    return c


def sat_solve(circuit, deadline=None, backend=None):
    r"""
    Decide the clauses of a circuit.

    Parameters
    ----------
    circuit : :class:`Circuit`
    deadline : float, optional
        Value of :func:`time.monotonic` at which to give up.
    backend : str, optional
        ``'internal'`` or ``'external'``. Defaults to
        :func:`fieldbv.get_sat_backend`.

    Returns
    -------
    :class:`fieldbv.SatResult`

    Raises
    ------
    Timeout
        If the deadline passes.
    RuntimeError
        If a model fails the clause or gate self-check.
    """
    backend = get_sat_backend() if backend is None else backend
    if backend == 'external':
        command = get_external_solver()
        if command is None:
            raise ValueError('No external solver set. '
                             + 'Call `set_external_solver` first.')
        timeout = (None if deadline is None
                   else max(0.0, deadline - time.monotonic()))
        result = run_external(circuit.clauses, circuit.num_nets, command,
                              timeout)
    else:
        result = CDCLSolver(circuit.clauses, circuit.num_nets,
                            deadline).solve()

    logger.debug('%s %s', result.status, result.stats)
    if result.sat:
        if not check_model(circuit.clauses, result.model):
            raise RuntimeError('SAT model violates a clause.')
        if not circuit.consistent(result.model):
            raise RuntimeError('SAT model disagrees with gate simulation.')
    return result
