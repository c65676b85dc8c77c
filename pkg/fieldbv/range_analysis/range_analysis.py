r"""
Range analysis: sound, incomplete proofs of natural number
inequalities from the bounds stated in the hypotheses.
"""
import logging
import warnings
from ..term.term import sort_check
from ..term.rewrite import normalize
from ..term.context import RuleTrace
from ..oracle.oracle import entails
from ..errors import BudgetExceeded, NoRuleApplies
from .._settings import get_case_splits, get_audit
from .helpers import RangeGoalSet, hypothesis_bounds, nat_view
from .decompose import DECOMPOSE_RULES
from .eliminate import ELIMINATE_RULES
from .reasoning import (Refuted, eval_const, zero_atoms, case_split,
                        xor_rewrite)

__all__ = ['RangeAnalyzer', 'rng_analyze']

logger = logging.getLogger(__name__)

STAGE = 'range_analysis'


class RangeAnalyzer:
    r"""
    Memoizing prover for natural number inequalities.

    Parameters
    ----------
    hyps : list of :class:`fieldbv.Term` or :class:`fieldbv.ProofContext`
        Hypotheses :math:`H`. If a proof context is given, its
        current hypotheses are read at every query.
    case_splits : bool, optional
        Whether the case-splitting and XOR rules are enabled.
        Defaults to :func:`fieldbv.get_case_splits`.
    trace : :class:`fieldbv.RuleTrace`, optional
        Receives one entry per rule application, each
        with a snapshot of the goal set.
    max_steps : int, default=10000
        Rule applications per query before giving up.

    Notes
    -----
    Answers are cached per normalized goal and hypothesis set.
    A proven :math:`t \leq C'` also answers :math:`t \leq C`
    for every :math:`C \geq C'`.

    If auditing is on (:func:`fieldbv.set_audit`), every positive
    answer is checked against :func:`fieldbv.entails` and
    disagreements are kept in :attr:`audit_failures`.
    """

    def __init__(self, hyps=(), case_splits=None, trace=None,
                 max_steps=10000):
        self._source = hyps
        self.case_splits = (get_case_splits() if case_splits is None
                            else case_splits)
        if trace is None:
            trace = getattr(hyps, 'trace', None)
        self.trace = RuleTrace() if trace is None else trace
        self.max_steps = max_steps
        self.audit_failures = []
        self._memo = {}
        self._proven_upper = {}
        self._bounds_key = None
        self._bounds = ({}, {})

    @property
    def hyps(self):
        src = self._source
        return list(src.hyps) if hasattr(src, 'hyps') else list(src)

    def _rules(self):
        rules = [('eval', eval_const), ('ineqZero', zero_atoms)]
        if self.case_splits:
            rules += [('ineqCases', case_split), ('ineqXOR', xor_rewrite)]
        return (rules + list(ELIMINATE_RULES[:2]) + list(DECOMPOSE_RULES)
                + list(ELIMINATE_RULES[2:]))

    def _current_bounds(self, hyps):
        key = tuple(hyps)
        if key != self._bounds_key:
            self._bounds_key = key
            self._bounds = hypothesis_bounds(nat_view(h) for h in hyps)
        return key

    def prove(self, goal):
        r"""
        Try to prove ``goal`` from the hypotheses.

        Parameters
        ----------
        goal : :class:`fieldbv.Term`
            Inequality (``leq`` or ``geq``) between terms of sort
            :math:`\mathbb{N}`. ``toNat`` of compound field terms
            is rewritten exactly before the derivation starts.

        Returns
        -------
        bool
            True only if the goal follows from the hypotheses.
            False means no proof was found.
        """
        if goal.op not in ('leq', 'geq') or not goal.args[0].sort.is_nat:
            logger.debug('not a Nat inequality: %s', goal)
            return False

        hyps = self.hyps
        hyps_key = self._current_bounds(hyps)
        view = nat_view(goal)
        key = (normalize(view), hyps_key)
        if key in self._memo:
            return self._memo[key]

        lhs, rhs = key[0].args
        shared = (self._proven_upper.get((lhs, hyps_key))
                  if rhs.op == 'const' else None)
        if shared is not None and shared <= rhs.value:
            result = True
        else:
            result = self._derive(view)
            if result and rhs.op == 'const':
                best = self._proven_upper.get((lhs, hyps_key))
                if best is None or rhs.value < best:
                    self._proven_upper[(lhs, hyps_key)] = rhs.value
        self._memo[key] = result
        logger.debug('range analysis %s: %s', goal, result)

        if result and get_audit():
            self._audit(hyps, goal)
        return result

    def _derive(self, goal):
        gs = RangeGoalSet([goal], *self._bounds)
        rules = self._rules()
        check = getattr(self._source, 'check_deadline', None)
        for step in range(self.max_steps):
            if not gs.goals:
                return True
            if check is not None and step % 64 == 0:
                check(STAGE)
            before = gs.measure()
            hit = None
            for name, rule in rules:
                try:
                    hit = rule(gs)
                except NoRuleApplies:
                    continue
                except Refuted as err:
                    logger.debug('false instance %s', err.args[0])
                    return False
                if hit is not None:
                    break
            if hit is None:
                logger.debug('stuck at %s', gs.goals)
                return False
            target, substitution = hit
            self.trace.record(STAGE, name, target, substitution, before,
                              gs.measure(), snapshot=gs.goals)
            for g in gs.goals:
                sort_check(g)
        warnings.warn('Range analysis gave up after '
                      + str(self.max_steps) + ' steps on ' + str(goal)
                      + '.')
        return False

    def _audit(self, hyps, goal):
        try:
            ok = entails(hyps, goal)
        except BudgetExceeded:
            logger.debug('audit skipped for %s', goal)
            return
        if not ok:
            self.audit_failures.append(goal)
            warnings.warn('Range analysis proved ' + str(goal)
                          + ' but the oracle disagrees.')


def rng_analyze(goal, hyps, case_splits=None, trace=None):
    r"""
    Prove a natural number inequality from hypotheses.

    Parameters
    ----------
    goal : :class:`fieldbv.Term`
    hyps : iterable of :class:`fieldbv.Term`
    case_splits : bool, optional
        See :class:`RangeAnalyzer`.
    trace : :class:`fieldbv.RuleTrace`, optional

    Returns
    -------
    bool

    Examples
    --------
    .. doctest::

        >>> import fieldbv as fbv
        >>> x = fbv.to_nat(fbv.var('x', fbv.FF(7)))
        >>> y = fbv.to_nat(fbv.var('y', fbv.FF(7)))
        >>> H = [fbv.leq(x, fbv.const(1)), fbv.leq(y, fbv.const(1))]
        >>> fbv.rng_analyze(fbv.leq(fbv.add(x, y), fbv.const(6)), H)
        True
    """
    return RangeAnalyzer(list(hyps), case_splits, trace).prove(goal)
