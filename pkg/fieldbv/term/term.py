r"""
Many-sorted terms.

Terms and formulas share one immutable node type, :class:`Term`;
formulas are the terms of sort ``BOOL``.
Nodes are compared structurally and hash in constant time.
"""
from dataclasses import dataclass, field
from .sort import Sort, NAT, BOOL, BV
from .printer import pretty_print
from ..errors import SortMismatch

__all__ = ['Term', 'var', 'const', 'add', 'mul', 'sub', 'mod', 'max_',
           'ite', 'to_nat', 'to_bv', 'bv_to_nat', 'bvor', 'concat',
           'resize', 'eq', 'leq', 'geq', 'conj', 'neg', 'true', 'false',
           'sort_check', 'subterms', 'free_vars', 'is_formula',
           'ARITH_OPS', 'COMPARISONS']

ARITH_OPS = ('add', 'mul', 'sub', 'mod', 'max')
COMPARISONS = ('eq', 'leq', 'geq')
_ASSOCIATIVE = ('add', 'mul')


@dataclass(frozen=True, eq=False)
class Term:
    r"""
    Node of a many-sorted term.

    Parameters
    ----------
    op : str
        One of ``'var'``, ``'const'``, ``'add'``, ``'mul'``,
        ``'sub'``, ``'mod'``, ``'max'``, ``'ite'``, ``'to_nat'``,
        ``'to_bv'``, ``'bv_to_nat'``, ``'bvor'``, ``'concat'``,
        ``'resize'``, ``'eq'``, ``'leq'``, ``'geq'``, ``'and'``
        or ``'not'``.
    sort : :class:`Sort`
        Sort annotation of the node.
    args : tuple of :class:`Term`
        Operands. ``add``, ``mul``, ``concat`` and ``and``
        are n-ary.
    name : str, optional
        Variable name (``op == 'var'`` only).
    value : int, optional
        Constant value (``op == 'const'`` only).

    Notes
    -----
    Build terms with the module-level constructors
    (:func:`var`, :func:`add`, ...). They reduce field constants
    modulo :math:`p` and flatten nothing; see
    :func:`fieldbv.normalize` for canonical forms.
    """
    op: str
    sort: Sort
    args: tuple = ()
    name: str = None
    value: int = None
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, '_hash', hash(
            (self.op, self.sort, self.args, self.name, self.value)))

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Term) or self._hash != other._hash:
            return False
        return (self.op == other.op and self.sort == other.sort
                and self.name == other.name and self.value == other.value
                and self.args == other.args)

    def __repr__(self):
        return pretty_print(self)

    @property
    def is_var(self):
        return self.op == 'var'

    @property
    def is_const(self):
        return self.op == 'const'

    def with_args(self, args):
        r"""Copy of the node with new operands (sort recomputed)."""
        args = tuple(args)
        if args == self.args:
            return self
        return _rebuild(self, args)


def _rebuild(t, args):
    op = t.op
    if op in ('add', 'mul', 'max', 'sub', 'mod', 'bvor'):
        return Term(op, args[0].sort, args)
    if op == 'ite':
        return Term(op, args[1].sort, args)
    if op == 'concat':
        return concat(*args)
    return Term(op, t.sort, args)


def var(name, sort):
    return Term('var', sort, name=name)


def const(value, sort=NAT):
    r"""
    Constant of the given sort.

    Field constants are stored reduced modulo :math:`p`.

    Raises
    ------
    ValueError
        If ``value`` is negative or does not fit a
        bit-vector sort.
    """
    value = int(value)
    if value < 0:
        raise ValueError('Unexpected value of `value`: ' + str(value)
                         + '. Expected a natural number.')
    if sort.is_ff:
        value %= sort.param
    elif sort.is_bv and value >= 2**sort.param:
        raise ValueError('Constant ' + str(value)
                         + ' does not fit ' + str(sort) + '.')
    elif sort.is_bool and value > 1:
        raise ValueError('Boolean constants are 0 or 1.')
    return Term('const', sort, value=value)


def true():
    return Term('const', BOOL, value=1)


def false():
    return Term('const', BOOL, value=0)


def _nary(op, args):
    args = tuple(args)
    if len(args) == 0:
        raise ValueError('`' + op + '` expects at least one operand.')
    if len(args) == 1:
        return args[0]
    return Term(op, args[0].sort, args)


def add(*args):
    return _nary('add', args)


def mul(*args):
    return _nary('mul', args)


def sub(a, b):
    return Term('sub', a.sort, (a, b))


def mod(a, b):
    return Term('mod', a.sort, (a, b))


def max_(a, b):
    return Term('max', a.sort, (a, b))


def ite(cond, a, b):
    return Term('ite', a.sort, (cond, a, b))


def to_nat(a):
    return Term('to_nat', NAT, (a,))


def to_bv(width, a):
    return Term('to_bv', BV(width), (a,))


def bv_to_nat(a):
    return Term('bv_to_nat', NAT, (a,))


def bvor(a, b):
    return Term('bvor', a.sort, (a, b))


def concat(*args):
    r"""Concatenation, most significant operand first."""
    args = tuple(args)
    if len(args) == 1:
        return args[0]
    width = 0
    for a in args:
        width += a.sort.param if a.sort.is_bv else 0
    return Term('concat', BV(max(width, 1)), args)


def resize(width, a):
    r"""Bit-vector of ``width`` bits holding ``a`` modulo :math:`2^{width}`."""
    return Term('resize', BV(width), (a,))


def eq(a, b):
    return Term('eq', BOOL, (a, b))


def leq(a, b):
    return Term('leq', BOOL, (a, b))


def geq(a, b):
    return Term('geq', BOOL, (a, b))


def conj(*args):
    args = tuple(args)
    if len(args) == 0:
        return true()
    if len(args) == 1:
        return args[0]
    return Term('and', BOOL, args)


def neg(a):
    return Term('not', BOOL, (a,))


def is_formula(t):
    return t.sort.is_bool


def subterms(t):
    r"""
    Yield every subterm of ``t``, ``t`` included.

    The order is leftmost-innermost (post-order):
    operands before the node, left operands first.
    Repeated subterms are yielded once per occurrence.
    """
    stack = [(t, False)]
    while stack:
        node, expanded = stack.pop()
        if expanded or not node.args:
            yield node
            continue
        stack.append((node, True))
        for a in reversed(node.args):
            stack.append((a, False))


def free_vars(*terms):
    r"""
    Variables of the given terms.

    Returns
    -------
    dict
        Maps each variable name to its sort,
        in order of first occurrence.
    """
    out = {}
    for t in terms:
        for s in subterms(t):
            if s.op == 'var' and s.name not in out:
                out[s.name] = s.sort
    return out


def sort_check(t, _path=()):
    r"""
    Sort of a well-sorted term.

    Parameters
    ----------
    t : :class:`Term`

    Returns
    -------
    :class:`Sort`

    Raises
    ------
    SortMismatch
        If some subterm is ill-sorted. ``path`` holds the
        operand indices leading to it.

    Examples
    --------
    .. doctest::

        >>> import fieldbv as fbv
        >>> x = fbv.var('x', fbv.FF(7))
        >>> fbv.sort_check(fbv.to_nat(x))
        Sort(kind='nat', param=None)
    """
    op = t.op
    if op == 'var':
        return t.sort
    if op == 'const':
        if t.sort.is_ff and t.value >= t.sort.param:
            raise SortMismatch(_path, 'unreduced field constant')
        if t.sort.is_bv and t.value >= 2**t.sort.param:
            raise SortMismatch(_path, 'constant exceeds width')
        return t.sort

    sorts = [sort_check(a, _path + (i,)) for i, a in enumerate(t.args)]

    def fail(message):
        raise SortMismatch(_path, message + ' in `' + op + '`')

    if op in ('add', 'mul', 'sub', 'mod', 'max', 'bvor'):
        if len(set(sorts)) != 1:
            fail('operands of different sorts '
                 + ', '.join(str(s) for s in sorts))
        s = sorts[0]
        if s.is_bool:
            fail('Boolean operands')
        if op == 'mod' and s.is_ff:
            fail('mod over a field sort')
        if op == 'max' and not s.is_nat:
            fail('max outside Nat')
        if op == 'bvor' and not s.is_bv:
            fail('bvor outside BV')
        if t.sort != s:
            fail('annotation ' + str(t.sort) + ' differs from operands')
        return s
    if op == 'ite':
        if not sorts[0].is_bool:
            fail('non-Boolean condition')
        if sorts[1] != sorts[2] or sorts[1] != t.sort:
            fail('branches of different sorts')
        return t.sort
    if op == 'to_nat':
        if not sorts[0].is_ff:
            fail('argument of sort ' + str(sorts[0]))
        return NAT
    if op == 'to_bv':
        if not sorts[0].is_nat:
            fail('argument of sort ' + str(sorts[0]))
        return t.sort
    if op == 'bv_to_nat':
        if not sorts[0].is_bv:
            fail('argument of sort ' + str(sorts[0]))
        return NAT
    if op in ('concat', 'resize'):
        if not all(s.is_bv for s in sorts):
            fail('non bit-vector operand')
        if op == 'concat' and sum(s.param for s in sorts) != t.sort.param:
            fail('width mismatch')
        return t.sort
    if op in COMPARISONS:
        if sorts[0] != sorts[1]:
            fail('operands of different sorts '
                 + str(sorts[0]) + ', ' + str(sorts[1]))
        if op != 'eq' and not (sorts[0].is_nat or sorts[0].is_bv):
            fail('order comparison over ' + str(sorts[0]))
        return BOOL
    if op in ('and', 'not'):
        if not all(s.is_bool for s in sorts):
            fail('non-Boolean operand')
        return BOOL
    raise SortMismatch(_path, 'unknown operator `' + op + '`')
