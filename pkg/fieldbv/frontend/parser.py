r"""
Reader of the s-expression problem format.

A problem file is a sequence of commands::

    (set-field 7)
    (declare-ff x)
    (declare-bv b 4)
    (declare-nat n)
    (assert-hyp (<= (to-nat x) 1))
    (goal (= (* x x) x))

Bare numerals take the sort of their operand group, and
:math:`\mathbb{N}` if no operand fixes it; ``(ff c)`` and
``(bv c N)`` are explicit constants. ``;`` starts a comment.
"""
import re
from ..term.term import (var, const, add, mul, sub, mod, max_, ite, to_nat,
                         to_bv, bv_to_nat, bvor, concat, resize, eq, leq,
                         geq, conj, neg, true, false, sort_check)
from ..term.sort import FF, BV, NAT, BOOL, is_prime
from ..errors import ParseError, NonPrimeField
from .problem import Problem

__all__ = ['parse_problem', 'parse_term']

_TOKEN = re.compile(r'\s+|;[^\n]*|\(|\)|[^\s();]+')
_NUMERAL = re.compile(r'[0-9]+$')

_GROUP = {'+': add, '*': mul, '-': sub, 'mod': mod, 'max': max_,
          'bvor': bvor}
_COMPARE = {'=': eq, '<=': leq, '>=': geq}


class _Atom(str):
    line = 0
    col = 0


def _tokens(text):
    line, col = 1, 1
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        tok = m.group()
        if not tok.isspace() and tok[0] != ';':
            atom = _Atom(tok)
            atom.line, atom.col = line, col
            yield atom
        newlines = tok.count('\n')
        if newlines:
            line += newlines
            col = len(tok) - tok.rfind('\n')
        else:
            col += len(tok)
        pos = m.end()


def _read(text):
    r"""Nested lists of atoms; the list's first atom gives its position."""
    stack = [[]]
    opened = []
    for tok in _tokens(text):
        if tok == '(':
            opened.append(tok)
            stack.append([])
        elif tok == ')':
            if len(stack) == 1:
                raise ParseError(tok.line, tok.col, 'unbalanced )')
            done = stack.pop()
            done_pos = opened.pop()
            stack[-1].append(_List(done, done_pos.line, done_pos.col))
        else:
            stack[-1].append(tok)
    if opened:
        tok = opened[-1]
        raise ParseError(tok.line, tok.col, 'unclosed (')
    return stack[0]


class _List(list):
    def __init__(self, items, line, col):
        super().__init__(items)
        self.line = line
        self.col = col


def _fail(expr, message):
    raise ParseError(expr.line, expr.col, message)


class _Elaborator:
    def __init__(self, field, declarations):
        self.field = field
        self.declarations = declarations

    def _field(self, expr):
        if self.field is None:
            _fail(expr, 'field constant before set-field')
        return self.field

    def _int(self, expr):
        if isinstance(expr, _List) or not _NUMERAL.match(expr):
            _fail(expr, 'expected a numeral, got ' + str(expr))
        return int(expr)

    def _bv(self, expr, width):
        try:
            return BV(self._int(width))
        except ValueError as err:
            _fail(expr, str(err))

    def _arity(self, expr, n):
        if len(expr) - 1 != n:
            _fail(expr, '`' + expr[0] + '` expects ' + str(n)
                  + ' operands')

    def infer(self, expr):
        r"""Sort fixed by ``expr`` alone, or None for bare numerals."""
        if not isinstance(expr, _List):
            if _NUMERAL.match(expr):
                return None
            if expr in ('true', 'false'):
                return BOOL
            if expr not in self.declarations:
                _fail(expr, 'undeclared variable ' + expr)
            return self.declarations[expr]
        if not expr:
            _fail(expr, 'empty expression')
        head = expr[0]
        if head == 'ff':
            return self._field(expr)
        if head == 'bv':
            self._arity(expr, 2)
            return self._bv(expr, expr[2])
        if head in _GROUP:
            return self._group_sort(expr[1:])
        if head == 'ite':
            self._arity(expr, 3)
            return self._group_sort(expr[2:])
        if head in _COMPARE or head in ('and', 'not'):
            return BOOL
        if head in ('to-nat', 'bv-to-nat'):
            return NAT
        if head in ('to-bv', 'resize'):
            self._arity(expr, 2)
            return self._bv(expr, expr[1])
        if head == 'concat':
            return BV(sum(self.infer(a).param for a in expr[1:]))
        _fail(expr, 'unknown operator ' + str(head))

    def _group_sort(self, operands):
        for a in operands:
            s = self.infer(a)
            if s is not None:
                return s
        return None

    def term(self, expr, expected=None):
        if not isinstance(expr, _List):
            if _NUMERAL.match(expr):
                sort = NAT if expected is None else expected
                if sort.is_bool:
                    _fail(expr, 'numeral where a formula is expected')
                try:
                    return const(int(expr), sort)
                except ValueError as err:
                    _fail(expr, str(err))
            if expr == 'true':
                return true()
            if expr == 'false':
                return false()
            return var(str(expr), self.infer(expr))

        head = expr[0]
        args = expr[1:]
        if head == 'ff':
            self._arity(expr, 1)
            return const(self._int(args[0]), self._field(expr))
        if head == 'bv':
            self._arity(expr, 2)
            try:
                return const(self._int(args[0]), self._bv(expr, args[1]))
            except ValueError as err:
                _fail(expr, str(err))
        if head in _GROUP or head in _COMPARE:
            if head in _GROUP and head not in ('+', '*') \
                    or head in _COMPARE:
                self._arity(expr, 2)
            elif not args:
                _fail(expr, '`' + head + '` expects operands')
            sort = self._group_sort(args)
            if sort is None:
                sort = expected if head in _GROUP and expected else NAT
            operands = [self.term(a, sort) for a in args]
            build = _GROUP.get(head) or _COMPARE[head]
            return build(*operands)
        if head == 'ite':
            self._arity(expr, 3)
            sort = self._group_sort(args[1:]) or expected or NAT
            return ite(self.term(args[0], BOOL), self.term(args[1], sort),
                       self.term(args[2], sort))
        if head == 'to-nat':
            self._arity(expr, 1)
            inner = self.infer(args[0])
            return to_nat(self.term(args[0], inner or self._field(expr)))
        if head == 'bv-to-nat':
            self._arity(expr, 1)
            return bv_to_nat(self.term(args[0]))
        if head == 'to-bv':
            self._arity(expr, 2)
            width = self._bv(expr, args[0]).param
            return to_bv(width, self.term(args[1], NAT))
        if head == 'resize':
            self._arity(expr, 2)
            width = self._bv(expr, args[0]).param
            return resize(width, self.term(args[1]))
        if head == 'concat':
            return concat(*[self.term(a) for a in args])
        if head == 'and':
            return conj(*[self.term(a, BOOL) for a in args])
        if head == 'not':
            self._arity(expr, 1)
            return neg(self.term(args[0], BOOL))
        _fail(expr, 'unknown operator ' + str(head))

    def formula(self, expr):
        f = self.term(expr, BOOL)
        sort_check(f)
        if not f.sort.is_bool:
            _fail(expr, 'expected a formula')
        return f


def parse_term(text, declarations=None, field=None, expected=None):
    r"""
    Read a single term.

    Parameters
    ----------
    text : str
    declarations : dict, optional
        Variable sorts.
    field : :class:`fieldbv.Sort`, optional
        Sort of ``(ff c)`` constants.
    expected : :class:`fieldbv.Sort`, optional
        Sort given to bare numerals without context.
    """
    exprs = _read(text)
    if len(exprs) != 1:
        raise ParseError(1, 1, 'expected exactly one term')
    t = _Elaborator(field, dict(declarations or {})).term(exprs[0],
                                                          expected)
    sort_check(t)
    return t


def _split_goal(f):
    if f.op == 'and':
        out = []
        for a in f.args:
            out += _split_goal(a)
        return out
    return [f]


def parse_problem(text, name=None):
    r"""
    Read a problem file.

    Parameters
    ----------
    text : str
        File contents.
    name : str, optional
        Stored as :attr:`Problem.name`.

    Returns
    -------
    :class:`fieldbv.Problem`
        Sort-checked. Conjunctive goals are split.

    Raises
    ------
    ParseError
        On malformed input, with its line and column.
    SortMismatch
        If a formula is ill-sorted.
    NonPrimeField
        If the field order is not prime.

    Examples
    --------
    .. doctest::

        >>> import fieldbv as fbv
        >>> pb = fbv.parse_problem('(set-field 7) (declare-ff x) '
        ...                        '(goal (<= (to-nat x) 6))')
        >>> pb.goals
        [(<= (to-nat x) 6)]
    """
    problem = Problem(name=name)
    elab = _Elaborator(None, problem.declarations)

    def declare(expr, name, sort):
        if isinstance(name, _List) or _NUMERAL.match(name):
            _fail(expr, 'bad variable name')
        if name in problem.declarations:
            _fail(expr, 'variable ' + name + ' declared twice')
        problem.declarations[str(name)] = sort

    for expr in _read(text):
        if not isinstance(expr, _List) or not expr:
            _fail(expr, 'expected a command')
        cmd = expr[0]
        if cmd == 'set-field':
            elab._arity(expr, 1)
            if problem.field is not None:
                _fail(expr, 'field order set twice')
            p = elab._int(expr[1])
            if not is_prime(p):
                raise NonPrimeField(p)
            problem.field = elab.field = FF(p)
        elif cmd == 'declare-ff':
            for a in expr[1:]:
                declare(expr, a, elab._field(expr))
        elif cmd == 'declare-nat':
            for a in expr[1:]:
                declare(expr, a, NAT)
        elif cmd == 'declare-bv':
            elab._arity(expr, 2)
            declare(expr, expr[1], elab._bv(expr, expr[2]))
        elif cmd == 'assert-hyp':
            elab._arity(expr, 1)
            problem.hyps.append(elab.formula(expr[1]))
        elif cmd == 'goal':
            elab._arity(expr, 1)
            problem.goals.extend(_split_goal(elab.formula(expr[1])))
        else:
            _fail(expr, 'unknown command ' + str(cmd))
    return problem.check()
