r"""
Decomposition rules of range analysis.

Each rule takes a :class:`RangeGoalSet`, rewrites the first goal
it matches in place and returns ``(goal, substitution)``,
or returns ``None`` if it matches no goal.
"""
import logging
from ..term.term import const, add, mul, max_, leq, geq
from ..term.sort import NAT
from ..errors import NoRuleApplies
from .helpers import has_vars, is_placeholder, var_names

__all__ = ['intro_pvar', 'leq_add_mul', 'geq_add_mul', 'leq_sub',
           'leq_mod', 'leq_if', 'decompose', 'DECOMPOSE_RULES']

logger = logging.getLogger(__name__)

_FLIP = {'leq': 'geq', 'geq': 'leq'}


def _cmp(op, a, b):
    return leq(a, b) if op == 'leq' else geq(a, b)


def split_bound(goal, placeholders):
    r"""``(t, op, w)`` if ``goal`` reads :math:`t \bowtie w`."""
    if goal.op in ('leq', 'geq') and is_placeholder(goal.args[1],
                                                    placeholders):
        return goal.args[0], goal.op, goal.args[1]
    return None


def _operand(gs, t, op, new_goals):
    # variable-free operands stay in place
    if not var_names(t):
        return t
    w = gs.fresh()
    new_goals.append(_cmp(op, t, w))
    return w


def _matches(gs, op, heads):
    for g in gs.goals:
        hit = split_bound(g, gs.placeholders)
        if hit is None:
            continue
        t, cmp_op, w = hit
        if cmp_op == op and t.op in heads and has_vars(t, gs.placeholders):
            yield g, t, w


def intro_pvar(gs):
    r"""
    :math:`t_1 \bowtie t_2 \to \{t_1 \bowtie w, t_2 \bowtie' w\}`
    for a fresh placeholder :math:`w`.
    """
    for g in gs.goals:
        if g.op in ('leq', 'geq') and has_vars(g, gs.placeholders):
            w = gs.fresh()
            gs.replace(g, [_cmp(g.op, g.args[0], w),
                           _cmp(_FLIP[g.op], g.args[1], w)])
            return g, (w,)
    return None


def _add_mul(gs, op):
    for g, t, w in _matches(gs, op, ('add', 'mul')):
        new_goals = []
        operands = [_operand(gs, a, op, new_goals) for a in t.args]
        combine = add if t.op == 'add' else mul
        new_goals.append(_cmp(op, combine(*operands), w))
        gs.replace(g, new_goals)
        return g, tuple(o for o in operands if o not in t.args)
    return None


def leq_add_mul(gs):
    r"""
    :math:`t_1 \circ \dots \circ t_n \leq w \to
    \{t_i \leq w_i\} \cup \{w_1 \circ \dots \circ w_n \leq w\}`
    for :math:`\circ \in \{+, \cdot\}`.
    """
    return _add_mul(gs, 'leq')


def geq_add_mul(gs):
    r"""Lower-bound counterpart of :func:`leq_add_mul`."""
    return _add_mul(gs, 'geq')


def leq_sub(gs):
    r""":math:`t_1 - t_2 \leq w \to t_1 \leq w`."""
    for g, t, w in _matches(gs, 'leq', ('sub',)):
        gs.replace(g, [leq(t.args[0], w)])
        return g, ()
    return None


def leq_mod(gs):
    r"""
    :math:`t_1 \bmod C \leq w \to C - 1 \leq w` for a positive
    constant :math:`C`; otherwise the goal becomes
    :math:`t_1 \leq w`, since :math:`t \bmod 0 = t`.
    """
    for g, t, w in _matches(gs, 'leq', ('mod',)):
        m = t.args[1]
        if m.op == 'const' and m.value > 0:
            gs.replace(g, [leq(const(m.value - 1, NAT), w)])
        else:
            gs.replace(g, [leq(t.args[0], w)])
        return g, ()
    for g, t, w in _matches(gs, 'geq', ('mod',)):
        logger.debug('no lower-bound rule for %s', g)
    return None


def leq_if(gs):
    r"""
    :math:`ite(c, t_1, t_2) \leq w \to
    \{t_1 \leq w_1, t_2 \leq w_2, max(w_1, w_2) \leq w\}`.
    """
    for g, t, w in _matches(gs, 'leq', ('ite',)):
        new_goals = []
        a = _operand(gs, t.args[1], 'leq', new_goals)
        b = _operand(gs, t.args[2], 'leq', new_goals)
        new_goals.append(leq(max_(a, b), w))
        gs.replace(g, new_goals)
        return g, tuple(o for o in (a, b) if o not in t.args)
    return None


DECOMPOSE_RULES = (
    ('introPVar', intro_pvar),
    ('leqAddMul', leq_add_mul),
    ('geqAddMul', geq_add_mul),
    ('leqSub', leq_sub),
    ('leqMod', leq_mod),
    ('leqIf', leq_if),
)


def decompose(gs):
    r"""
    Apply the first decomposition rule that matches a goal.

    Parameters
    ----------
    gs : :class:`fieldbv.RangeGoalSet`
        Rewritten in place.

    Returns
    -------
    rule : str
    goal : :class:`fieldbv.Term`
        The replaced goal.
    substitution : tuple
        Placeholders introduced by the rule.

    Raises
    ------
    NoRuleApplies
        If no goal matches a decomposition rule.
    """
    for name, rule in DECOMPOSE_RULES:
        hit = rule(gs)
        if hit is not None:
            return (name,) + tuple(hit)
    raise NoRuleApplies('no decomposition of ' + str(gs.goals))
