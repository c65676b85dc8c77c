r"""
Helper predicates and goal-set bookkeeping of range analysis.
"""
from ..term.term import (Term, subterms, const, add, mul, sub, mod, ite,
                         to_nat)
from ..term.sort import NAT
from ..term.rewrite import normalize, replace
from .._constants import PLACEHOLDER_PREFIX
from ..oracle.oracle import eval_term

__all__ = ['has_vars', 'two_orig_vars', 'has_sub', 'is_placeholder',
           'var_names', 'nat_atoms', 'fold_constants', 'nat_view',
           'hypothesis_bounds', 'RangeGoalSet']


def var_names(t):
    return {s.name for s in subterms(t) if s.op == 'var'}


def is_placeholder(t, placeholders):
    return t.op == 'var' and t.name in placeholders


def has_vars(t, placeholders):
    r"""
    True iff ``t`` has a variable and none of its
    variables is a placeholder.
    """
    names = var_names(t)
    return bool(names) and not (names & placeholders)


def two_orig_vars(t, placeholders):
    r"""True iff ``t`` has exactly two distinct original variables."""
    return len(var_names(t) - placeholders) == 2


def has_sub(t):
    r"""True iff ``t`` contains a natural number subtraction."""
    return any(s.op == 'sub' and s.sort.is_nat for s in subterms(t))


def nat_atoms(t, placeholders):
    r"""
    Natural number leaves over original variables.

    A leaf is ``toNat(v)``, ``bvToNat(v)`` or a variable of sort
    :math:`\mathbb{N}` that is no placeholder.

    Returns
    -------
    list
        Distinct leaves in order of first occurrence.
    """
    out = []
    for s in subterms(t):
        leaf = (s.op in ('to_nat', 'bv_to_nat') and s.args[0].op == 'var'
                or s.op == 'var' and s.sort.is_nat
                and s.name not in placeholders)
        if leaf and s not in out:
            out.append(s)
    return out


def fold_constants(t):
    r"""
    Replace every variable-free term of sort :math:`\mathbb{N}`
    by its value.

    An ``ite`` with a variable-free condition becomes the chosen
    branch and a natural number product with a zero factor
    becomes 0.
    """
    if t.op in ('var', 'const'):
        return t
    if t.op == 'ite' and not var_names(t.args[0]):
        return fold_constants(t.args[1] if eval_term(t.args[0], {})
                              else t.args[2])
    t = t.with_args(fold_constants(a) for a in t.args)
    if t.sort.is_nat and not var_names(t):
        return const(eval_term(t, {}), NAT)
    if t.op == 'mul' and t.sort.is_nat \
            and any(a.op == 'const' and a.value == 0 for a in t.args):
        return const(0, NAT)
    return t


def nat_view(t):
    r"""
    Push ``toNat`` to the leaves of ``t`` without loss.

    Every ``toNat`` of a compound field term is replaced by an
    equal natural number term: sums and products get a trailing
    :math:`\bmod P`, differences become
    :math:`(a + P - b) \bmod P`.
    """
    if t.op == 'to_nat':
        return _view_ff(t.args[0])
    if not t.args:
        return t
    return t.with_args(nat_view(a) for a in t.args)


def _view_ff(u):
    p = u.sort.param
    P = const(p, NAT)
    if u.op == 'var':
        return to_nat(u)
    if u.op == 'const':
        return const(u.value, NAT)
    if u.op in ('add', 'mul'):
        op = add if u.op == 'add' else mul
        return mod(op(*[_view_ff(a) for a in u.args]), P)
    if u.op == 'sub':
        a, b = _view_ff(u.args[0]), _view_ff(u.args[1])
        return mod(sub(add(a, P), b), P)
    if u.op == 'ite':
        return ite(nat_view(u.args[0]), _view_ff(u.args[1]),
                   _view_ff(u.args[2]))
    return to_nat(u)


def hypothesis_bounds(hyps):
    r"""
    Constant bounds stated by hypotheses.

    Returns
    -------
    upper, lower : dict
        Map normalized natural number terms to the least upper
        and greatest lower bound found in ``hyps``.
    """
    upper = {}
    lower = {}

    def put(table, t, c, better):
        key = normalize(t)
        if key not in table or better(c, table[key]):
            table[key] = c

    for h in hyps:
        if h.op not in ('leq', 'geq') or not h.args[0].sort.is_nat:
            continue
        a, b = h.args
        if h.op == 'geq':
            a, b = b, a
        if b.op == 'const':
            put(upper, a, b.value, lambda x, y: x < y)
        if a.op == 'const':
            put(lower, b, a.value, lambda x, y: x > y)
    return upper, lower


class RangeGoalSet:
    r"""
    Goal set of one range-analysis derivation.

    Parameters
    ----------
    goals : list of :class:`fieldbv.Term`
        Natural number inequalities.
    upper, lower : dict
        Hypothesis bounds, see :func:`hypothesis_bounds`.
        They are a read-only view of :math:`H`.

    Attributes
    ----------
    placeholders : set of str
        Names of the placeholder variables introduced so far.
    """
    def __init__(self, goals, upper, lower):
        self.goals = []
        for g in goals:
            if g not in self.goals:
                self.goals.append(g)
        self.upper = upper
        self.lower = lower
        self.placeholders = set()
        self._counter = 0

    def fresh(self):
        self._counter += 1
        name = PLACEHOLDER_PREFIX + str(self._counter)
        self.placeholders.add(name)
        return Term('var', NAT, name=name)

    def replace(self, goal, new_goals):
        r"""Replace ``goal`` by ``new_goals`` at its position."""
        i = self.goals.index(goal)
        out = []
        for g in self.goals[:i] + list(new_goals) + self.goals[i + 1:]:
            if g not in out:
                out.append(g)
        self.goals = out

    def instantiate(self, goal, w, value):
        r"""
        Drop ``goal`` and substitute ``value`` for the
        placeholder ``w`` in every other goal.
        """
        c = value if isinstance(value, Term) else const(value, NAT)
        out = []
        for g in self.goals:
            if g == goal:
                continue
            g = replace(g, {w: c})
            if g not in out:
                out.append(g)
        self.goals = out
        self.placeholders.discard(w.name)

    def upper_bound(self, t):
        return self.upper.get(normalize(t))

    def lower_bound(self, t):
        return self.lower.get(normalize(t))

    def measure(self):
        r"""
        Termination measure ``(vars, ops, expps, size)``.

        ``vars`` counts occurrences of original variables,
        ``ops`` the arithmetic and ``ite`` operators of goals with
        an original variable, ``expps`` the goals with an original
        variable but no placeholder, ``size`` the number of goals.
        """
        n_vars = n_ops = n_expps = 0
        for g in self.goals:
            orig = 0
            placeholder = False
            ops = 0
            for s in subterms(g):
                if s.op == 'var':
                    if s.name in self.placeholders:
                        placeholder = True
                    else:
                        orig += 1
                elif s.op in ('add', 'mul', 'sub', 'mod', 'ite'):
                    ops += 1
            n_vars += orig
            if orig:
                n_ops += ops
                n_expps += 0 if placeholder else 1
        return (n_vars, n_ops, n_expps, len(self.goals))
