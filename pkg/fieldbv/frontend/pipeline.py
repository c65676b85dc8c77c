r"""
The verification pipeline: field to naturals, range analysis,
naturals to bit-vectors, bit-blasting.
"""
import logging
import time
import warnings
from contextlib import contextmanager
from ..term.rewrite import normalize
from ..range_analysis import RangeAnalyzer
from ..translate.ff2nat import to_nat_strategy
from ..translate.nat2bv import (WidthPlan, to_bv_strategy, BVAtomizer,
                                is_pure_bv, _image)
from ..bitblast.lower import lower, sat_solve
from ..bitblast.dimacs import write_dimacs
from ..bitblast.lift import lift_countermodel
from ..oracle.oracle import evaluate
from ..errors import LiftFailure
from .._settings import get_timeout, get_countermodel_check
from .problem import Verdict

__all__ = ['run_pipeline']

logger = logging.getLogger(__name__)


@contextmanager
def _stage(timing, name):
    logger.info('stage %s', name)
    start = time.perf_counter()
    try:
        yield
    finally:
        timing[name] = timing.get(name, 0.0) + time.perf_counter() - start


def _is_nat_ineq(f):
    return f.op in ('leq', 'geq') and f.args[0].sort.is_nat


def _discharge_inequalities(ctx, analyzer):
    pending = [g for g in ctx.goals if _is_nat_ineq(g)]
    for g in pending:
        if analyzer.prove(g):
            n = sum(1 for h in ctx.goals if _is_nat_ineq(h))
            ctx.goals.remove(g)
            ctx.trace.record('range_analysis', 'discharge', g, (),
                             (n,), (n - 1,))
        else:
            logger.info('range analysis left %s', g)


def _residue_reason(residue):
    if all(_is_nat_ineq(g) for g in residue):
        return 'inequalities left'
    return 'no bit-vector form'


def _bv_hyps(ctx, plan, atomizer):
    hyps = []
    for h in ctx.hyps:
        a = atomizer.atomize(h)
        if is_pure_bv(a):
            hyps.append(a)
        elif not (_is_nat_ineq(h) and _image(h, plan) in ctx.hyps):
            warnings.warn('Dropped hypothesis without bit-vector form: '
                          + str(h))
    return hyps


def run_pipeline(problem, timeout=None, dimacs=None):
    r"""
    Decide a problem.

    Parameters
    ----------
    problem : :class:`fieldbv.Problem`
        Sort-checked problem.
    timeout : float, optional
        Seconds; defaults to :func:`fieldbv.get_timeout`.
    dimacs : file object, optional
        Receives the final CNF in DIMACS format.

    Returns
    -------
    :class:`fieldbv.Verdict`
        ``'valid'`` only if every goal was proven, ``'invalid'``
        only with a counterexample that falsifies ``problem``.

    Raises
    ------
    Timeout
        If a stage runs past the deadline.
    Unsupported
        For constructs outside the translation.

    Examples
    --------
    .. doctest::

        >>> import fieldbv as fbv
        >>> pb = fbv.gen_jolt_or(1, 7)
        >>> fbv.run_pipeline(pb).status
        'valid'
    """
    timeout = get_timeout() if timeout is None else timeout
    ctx = problem.context(time.monotonic() + timeout)
    ctx.map_formulas(lambda f: normalize(f, group_sub=False))
    analyzer = RangeAnalyzer(ctx)
    timing = {}
    verdict = Verdict('unknown', trace=ctx.trace, timing=timing,
                      name=problem.name)

    with _stage(timing, 'to_nat'):
        to_nat_strategy(ctx, analyzer)
        ctx.check_invariants()
    with _stage(timing, 'range_analysis'):
        _discharge_inequalities(ctx, analyzer)
        ctx.check_invariants()
    with _stage(timing, 'to_bv'):
        plan = WidthPlan.from_context(ctx)
        verdict.width = plan.b
        to_bv_strategy(ctx, plan, analyzer)
        ctx.check_invariants()
        atomizer = BVAtomizer(ctx)
        goals = []
        for g in ctx.goals:
            a = atomizer.atomize(g)
            if is_pure_bv(a):
                goals.append(a)
            else:
                verdict.undischarged.append(g)
                if not _is_nat_ineq(g):
                    warnings.warn('Goal without bit-vector form: ' + str(g))
        hyps = _bv_hyps(ctx, plan, atomizer)
    verdict.audit_failures = list(analyzer.audit_failures)

    if not goals:
        if verdict.undischarged:
            verdict.reason = _residue_reason(verdict.undischarged)
        else:
            verdict.status = 'valid'
        return verdict

    with _stage(timing, 'bitblast'):
        circuit = lower(goals, hyps, atomizer.side_constraints())
        if dimacs is not None:
            write_dimacs(circuit.clauses, circuit.num_nets, dimacs,
                         comments=[problem.name or 'fieldbv'])
        result = sat_solve(circuit, ctx.deadline)

    if not result.sat:
        if verdict.undischarged:
            verdict.reason = _residue_reason(verdict.undischarged)
        else:
            verdict.status = 'valid'
        return verdict

    try:
        model = lift_countermodel(result.model, circuit, atomizer,
                                  problem.declarations)
    except LiftFailure as err:
        warnings.warn(str(err))
        verdict.reason = 'countermodel could not be lifted'
        return verdict
    if not get_countermodel_check():
        verdict.reason = 'countermodel not checked'
    elif evaluate(problem.hyps, model) \
            and not evaluate(problem.goals, model):
        verdict.status = 'invalid'
        verdict.counterexample = model
    else:
        verdict.reason = 'spurious countermodel'
    return verdict
