r"""
Evaluation and bit-level reasoning rules of range analysis.
"""
from itertools import product
from ..term.term import const, eq, ite
from ..term.sort import NAT
from ..term.rewrite import replace
from ..oracle.oracle import eval_term
from ..errors import NoRuleApplies
from .helpers import (var_names, nat_atoms, has_vars, has_sub,
                      two_orig_vars, fold_constants)

__all__ = ['Refuted', 'eval_const', 'zero_atoms', 'case_split',
           'xor_rewrite']


class Refuted(Exception):
    r"""A variable-free goal evaluated to false."""


def eval_const(gs):
    r"""Drop a variable-free goal that holds."""
    for g in gs.goals:
        if not var_names(g):
            if not eval_term(g, {}):
                raise Refuted(g)
            gs.goals.remove(g)
            return g, ()
    return None


def zero_atoms(gs):
    r"""
    Substitute 0 for every atom bounded by 0 in :math:`H`.

    The goal is then folded, so products with such an atom
    vanish and ``ite`` on its value is decided.

    Raises
    ------
    NoRuleApplies
        If no goal has such an atom.
    """
    for g in gs.goals:
        zero = [a for a in nat_atoms(g, gs.placeholders)
                if gs.upper_bound(a) == 0]
        if zero:
            new = fold_constants(replace(g, {a: const(0, NAT) for a in zero}))
            gs.replace(g, [new])
            return g, tuple(zero)
    raise NoRuleApplies('ineqZero')


def _bit_bound(gs, atom):
    c = gs.upper_bound(atom)
    return c if c is not None and c <= 1 else None


def case_split(gs):
    r"""
    Enumerate two bit-bounded atoms.

    A goal with exactly two original variables, both under
    atoms bounded by at most 1 in :math:`H`, is replaced by its
    instances at every value pair. Applies when the goal has a
    subtraction or variables on both sides.

    Raises
    ------
    NoRuleApplies
        If no goal qualifies.
    """
    ph = gs.placeholders
    for g in gs.goals:
        if g.op not in ('leq', 'geq') or not two_orig_vars(g, ph):
            continue
        if not (has_sub(g) or has_vars(g.args[0], ph)
                and has_vars(g.args[1], ph)):
            continue
        atoms = nat_atoms(g, ph)
        if len(atoms) != 2:
            continue
        bounds = [_bit_bound(gs, a) for a in atoms]
        if None in bounds:
            continue
        instances = []
        for values in product(*[range(c + 1) for c in bounds]):
            mapping = {a: const(v, NAT) for a, v in zip(atoms, values)}
            inst = fold_constants(replace(g, mapping))
            if var_names(inst) - ph:
                break
            instances.append(inst)
        else:
            gs.replace(g, instances)
            return g, tuple(atoms)
    raise NoRuleApplies('ineqCases')


def _xor_operands(gs, m1, m2):
    # m1 = v * t1, m2 = (1 - v) * t2
    if m1.op != 'mul' or m2.op != 'mul' or len(m1.args) != 2 \
            or len(m2.args) != 2:
        return None
    for v, t1 in (m1.args, m1.args[::-1]):
        if v not in nat_atoms(v, gs.placeholders) \
                or _bit_bound(gs, v) is None:
            continue
        for s, t2 in (m2.args, m2.args[::-1]):
            if s.op == 'sub' and s.args[1] == v \
                    and s.args[0].op == 'const' and s.args[0].value == 1:
                return v, t1, t2
    return None


def xor_rewrite(gs):
    r"""
    :math:`v \cdot t_1 + (1 - v) \cdot t_2 \to
    ite(v = 0, t_2, t_1)` for a bit-bounded atom :math:`v`.

    Raises :class:`fieldbv.NoRuleApplies` if no goal has that shape.
    """
    for g in gs.goals:
        if g.op not in ('leq', 'geq'):
            continue
        t = g.args[0]
        if t.op != 'add' or len(t.args) != 2:
            continue
        for m1, m2 in (t.args, t.args[::-1]):
            hit = _xor_operands(gs, m1, m2)
            if hit is not None:
                v, t1, t2 = hit
                new = g.with_args((ite(eq(v, const(0, NAT)), t2, t1),
                                   g.args[1]))
                gs.replace(g, [new])
                return g, (v,)
    raise NoRuleApplies('ineqXOR')
