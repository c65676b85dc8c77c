r"""
Substitution, occurrence checks and normal forms.
"""
from functools import lru_cache
from .term import Term, subterms, sort_check
from ..errors import SortMismatch

__all__ = ['substitute', 'replace', 'subterm_occurs', 'normalize',
           'term_order_key']


def replace(t, mapping):
    r"""
    Simultaneously replace subterms.

    Parameters
    ----------
    t : :class:`Term`
    mapping : dict
        Maps subterms to their replacements. Occurrences are
        replaced outermost first; replacements are not rewritten
        again.

    Returns
    -------
    :class:`Term`
    """
    if not mapping:
        return t
    memo = {}

    def rec(node):
        hit = mapping.get(node)
        if hit is not None:
            return hit
        if not node.args:
            return node
        got = memo.get(node)
        if got is None:
            got = node.with_args(rec(a) for a in node.args)
            memo[node] = got
        return got

    return rec(t)


def substitute(f, old, new):
    r"""
    Replace every occurrence of ``old`` in ``f`` by ``new``.

    Written :math:`f[old/new]`.

    Raises
    ------
    SortMismatch
        If ``old`` and ``new`` have different sorts.

    Examples
    --------
    .. doctest::

        >>> import fieldbv as fbv
        >>> x = fbv.var('x', fbv.FF(7))
        >>> w = fbv.var('?w1', fbv.NAT)
        >>> f = fbv.leq(fbv.to_nat(x), w)
        >>> fbv.substitute(f, w, fbv.const(1))
        (<= (to-nat x) 1)
    """
    if old.sort != new.sort:
        raise SortMismatch((), 'cannot substitute ' + str(new.sort)
                           + ' for ' + str(old.sort))
    if old == new:
        return f
    return replace(f, {old: new})


def subterm_occurs(f, s):
    r"""
    Whether ``s`` occurs in ``f`` up to normalization.
    """
    s = normalize(s)
    for t in subterms(normalize(f)):
        if t == s:
            return True
    return False


@lru_cache(maxsize=2**16)
def term_order_key(t):
    r"""
    Sort key of the fixed total order on terms.

    Constants come first (by value), then variables (by name),
    then compound terms (by operator, then operands).
    """
    if t.op == 'const':
        return (0, t.value, str(t.sort))
    if t.op == 'var':
        return (1, t.name, str(t.sort))
    return (2, t.op, str(t.sort),
            tuple(term_order_key(a) for a in t.args))


def _flatten(op, sort, args):
    out = []
    for a in args:
        if a.op == op and a.sort == sort:
            out.extend(a.args)
        else:
            out.append(a)
    return out


def _normalize(t, group_sub):
    if not t.args:
        return t
    args = [_normalize(a, group_sub) for a in t.args]
    op = t.op

    if op in ('add', 'mul'):
        args = sorted(_flatten(op, t.sort, args), key=term_order_key)
        if op == 'add' and group_sub and t.sort.is_ff:
            for i, a in enumerate(args):
                if a.op == 'sub':
                    rest = args[:i] + args[i + 1:]
                    grouped = Term('add', t.sort, (a.args[0],) + tuple(rest))
                    return Term('sub', t.sort,
                                (_normalize(grouped, group_sub), a.args[1]))
        return Term(op, t.sort, tuple(args))
    if op == 'geq':
        return Term('leq', t.sort, (args[1], args[0]))
    if op == 'eq':
        args = sorted(args, key=term_order_key)
    elif op == 'and':
        args = sorted(_flatten('and', t.sort, args), key=term_order_key)
    return t.with_args(args)


def normalize(f, group_sub=True):
    r"""
    Canonical form of a well-sorted term or formula.

    Parameters
    ----------
    f : :class:`Term`
    group_sub : bool, default=True
        Whether field sums are rewritten so that additions
        are grouped before subtractions,
        :math:`t_1 - t_2 + t_3 \to (t_1 + t_3) - t_2`.

    Returns
    -------
    :class:`Term`

    Notes
    -----
    Chains of ``+`` and :math:`\cdot` are flattened and their
    operands sorted by :func:`term_order_key`; so are conjunctions
    and the two sides of equalities. :math:`a \geq b` becomes
    :math:`b \leq a`. Subtraction grouping only applies to field
    sorts: natural number subtraction is truncated.

    ``normalize`` is idempotent.

    Examples
    --------
    .. doctest::

        >>> import fieldbv as fbv
        >>> F = fbv.FF(7)
        >>> x, y = fbv.var('x', F), fbv.var('y', F)
        >>> fbv.normalize(fbv.add(y, x))
        (+ x y)
    """
    sort_check(f)
    return _normalize(f, group_sub)
