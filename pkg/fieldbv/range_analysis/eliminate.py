r"""
Elimination rules of range analysis.

An elimination drops a goal :math:`t \bowtie w` and instantiates
the placeholder :math:`w` with a constant in every other goal.
"""
from ..term.term import const
from ..term.sort import NAT
from ..oracle.oracle import eval_term
from ..errors import NoRuleApplies
from .helpers import has_vars, var_names
from .decompose import split_bound

__all__ = ['ineq_hyp', 'ineq_const', 'leq_zmod', 'leq_bv', 'ge_nat',
           'eliminate', 'ELIMINATE_RULES']


def _bounded(gs, check):
    for g in gs.goals:
        hit = split_bound(g, gs.placeholders)
        if hit is None:
            continue
        t, op, w = hit
        if not has_vars(t, gs.placeholders):
            continue
        c = check(gs, t, op)
        if c is not None:
            gs.instantiate(g, w, c)
            return g, (w, const(c, NAT))
    return None


def ineq_hyp(gs):
    r"""
    :math:`t \leq w` becomes :math:`w := C` for the least
    :math:`C` with :math:`t \leq C \in H`; dually for :math:`\geq`.
    """
    return _bounded(gs, lambda gs, t, op: gs.upper_bound(t)
                    if op == 'leq' else gs.lower_bound(t))


def _zmod(gs, t, op):
    if op == 'leq' and t.op == 'to_nat':
        v = t.args[0]
        if v.op == 'var' and v.sort.is_ff:
            return v.sort.param - 1
    return None


def leq_zmod(gs):
    r""":math:`toNat(v) \leq w` with :math:`w := P - 1`."""
    return _bounded(gs, _zmod)


def _bv(gs, t, op):
    if op == 'leq' and t.op == 'bv_to_nat' and t.args[0].op == 'var':
        return 2**t.args[0].sort.param - 1
    return None


def leq_bv(gs):
    r""":math:`bvToNat(v) \leq w` with :math:`w := 2^N - 1`."""
    return _bounded(gs, _bv)


def ge_nat(gs):
    r""":math:`t \geq w` with :math:`w := 0`."""
    return _bounded(gs, lambda gs, t, op: 0 if op == 'geq' else None)


def _candidates(gs):
    # goals `C op w` with a variable-free C
    out = {}
    for g in gs.goals:
        hit = split_bound(g, gs.placeholders)
        if hit is not None and not var_names(hit[0]):
            out.setdefault(hit[2], []).append(
                (g, hit[1], eval_term(hit[0], {})))
    return out


def ineq_const(gs):
    r"""
    Instantiate a placeholder bounded by constants.

    A placeholder :math:`w` with goals :math:`C \bowtie w` is
    eligible when no goal mentioning :math:`w` has an original
    variable. If :math:`w` also occurs in other goals it takes
    its greatest lower bound, which keeps those goals weakest;
    otherwise it takes its least upper bound.
    """
    for w, cands in _candidates(gs).items():
        others = [g for g in gs.goals
                  if w.name in var_names(g) and all(c[0] != g for c in cands)]
        if any(var_names(g) - gs.placeholders for g in others):
            continue
        lower = [c for c in cands if c[1] == 'leq']
        upper = [c for c in cands if c[1] == 'geq']
        if others and lower:
            chosen = max(lower, key=lambda c: c[2])
        elif upper:
            chosen = min(upper, key=lambda c: c[2])
        else:
            chosen = max(lower, key=lambda c: c[2])
        gs.instantiate(chosen[0], w, chosen[2])
        return chosen[0], (w, const(chosen[2], NAT))
    return None


# ineqHyp and ineqConst are tried before any decomposition,
# the others after it
ELIMINATE_RULES = (
    ('ineqHyp', ineq_hyp),
    ('ineqConst', ineq_const),
    ('leqZMod', leq_zmod),
    ('leqBV', leq_bv),
    ('geNat', ge_nat),
)


def eliminate(gs):
    r"""
    Apply the first elimination rule that matches a goal.

    The goal is dropped and its placeholder is replaced by
    the derived constant in every other goal of ``gs``.

    Returns
    -------
    rule : str
    goal : :class:`fieldbv.Term`
    substitution : tuple
        The placeholder and its constant.

    Raises
    ------
    NoRuleApplies
        If no goal matches an elimination rule.

    Examples
    --------
    .. doctest::

        >>> import fieldbv as fbv
        >>> x = fbv.var('x', fbv.FF(7))
        >>> h = [fbv.leq(fbv.to_nat(x), fbv.const(1))]
        >>> gs = fbv.RangeGoalSet([], *fbv.hypothesis_bounds(h))
        >>> w = gs.fresh()
        >>> gs.goals = [fbv.leq(fbv.to_nat(x), w),
        ...             fbv.leq(fbv.add(w, w), fbv.const(6))]
        >>> fbv.eliminate(gs)[0]
        'ineqHyp'
        >>> gs.goals
        [(<= (+ 1 1) 6)]
    """
    for name, rule in ELIMINATE_RULES:
        hit = rule(gs)
        if hit is not None:
            return (name,) + tuple(hit)
    raise NoRuleApplies('no elimination in ' + str(gs.goals))
