r"""
S-expression rendering of terms, the syntax read by
:func:`fieldbv.parse_problem`.
"""

__all__ = ['pretty_print']

_SYMBOLS = {
    'add': '+', 'mul': '*', 'sub': '-', 'mod': 'mod', 'max': 'max',
    'ite': 'ite', 'to_nat': 'to-nat', 'bv_to_nat': 'bv-to-nat',
    'bvor': 'bvor', 'concat': 'concat', 'eq': '=', 'leq': '<=',
    'geq': '>=', 'and': 'and', 'not': 'not',
}

_SAME_SORT_OPS = ('add', 'mul', 'sub', 'mod', 'max', 'bvor',
                  'eq', 'leq', 'geq')


def _anchored(t):
    # the parser can infer the sort of t without an expected sort
    if t.op == 'const':
        return t.sort.is_bv or t.sort.is_bool
    if t.op in ('add', 'mul', 'sub', 'mod', 'max'):
        return any(_anchored(a) for a in t.args)
    if t.op == 'ite':
        return _anchored(t.args[1]) or _anchored(t.args[2])
    return True


def _const(t, tag_ff):
    if t.sort.is_bv:
        return '(bv ' + str(t.value) + ' ' + str(t.sort.param) + ')'
    if t.sort.is_bool:
        return 'true' if t.value else 'false'
    if t.sort.is_ff and tag_ff:
        return '(ff ' + str(t.value) + ')'
    return str(t.value)


def _render(t, tag_ff, out):
    op = t.op
    if op == 'var':
        out.append(t.name)
        return
    if op == 'const':
        out.append(_const(t, tag_ff))
        return

    if op in _SAME_SORT_OPS:
        operands = t.args
        tag = tag_ff if op in ('add', 'mul', 'sub', 'mod', 'max') else False
        tag = tag or not any(_anchored(a) for a in operands)
        out.append('(' + _SYMBOLS[op])
        for a in operands:
            out.append(' ')
            _render(a, tag, out)
        out.append(')')
        return

    if op == 'ite':
        tag = tag_ff or not (_anchored(t.args[1]) or _anchored(t.args[2]))
        out.append('(ite ')
        _render(t.args[0], False, out)
        for a in t.args[1:]:
            out.append(' ')
            _render(a, tag, out)
        out.append(')')
        return

    if op in ('to_bv', 'resize'):
        out.append('(' + op.replace('_', '-') + ' '
                   + str(t.sort.param) + ' ')
        _render(t.args[0], False, out)
        out.append(')')
        return

    # to_nat fixes a field sort only through its argument
    tag = op == 'to_nat' and not _anchored(t.args[0])
    out.append('(' + _SYMBOLS[op])
    for a in t.args:
        out.append(' ')
        _render(a, tag, out)
    out.append(')')


def pretty_print(t):
    r"""
    Render a term or formula as an s-expression.

    Parameters
    ----------
    t : :class:`fieldbv.Term`

    Returns
    -------
    str
    """
    out = []
    _render(t, False, out)
    return ''.join(out)
