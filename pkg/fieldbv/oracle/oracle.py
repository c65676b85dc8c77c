r"""
Brute-force semantics.

Terms are evaluated on Python integers (:func:`eval_term`) or,
for enumeration, on numpy arrays holding one entry per assignment.
Validity and entailment are decided by evaluating the formulas on
all assignments at once.
"""
import logging
from dataclasses import dataclass
import numpy as np
from .._settings import get_oracle_budget, get_nat_domain
from ..errors import UnboundVariable, BudgetExceeded
from ..term.term import free_vars

__all__ = ['eval_term', 'evaluate', 'check_validity', 'entails',
           'OracleResult', 'assignment_count']

logger = logging.getLogger(__name__)

_INT64_SAFE = 2**62


def _reduce(value, sort):
    m = sort.modulus() if not sort.is_nat else None
    return value if m is None else value % m


class _IntOps:
    r"""Operations on Python integers and Booleans."""
    @staticmethod
    def trunc_sub(a, b):
        return a - b if a > b else 0

    @staticmethod
    def mod(a, b):
        return a if b == 0 else a % b

    maximum = staticmethod(max)

    @staticmethod
    def where(c, a, b):
        return a if c else b

    @staticmethod
    def bitor(a, b):
        return a | b

    @staticmethod
    def both(a, b):
        return bool(a) and bool(b)

    @staticmethod
    def negate(a):
        return not a


class _ArrayOps:
    r"""The same operations, elementwise on numpy arrays."""
    @staticmethod
    def trunc_sub(a, b):
        return np.maximum(a - b, 0)

    @staticmethod
    def mod(a, b):
        zero = np.equal(b, 0)
        return np.where(zero, a, np.mod(a, np.where(zero, 1, b)))

    maximum = staticmethod(np.maximum)
    where = staticmethod(np.where)
    bitor = staticmethod(np.bitwise_or)
    both = staticmethod(np.logical_and)
    negate = staticmethod(np.logical_not)


def _eval(t, env, ops, memo):
    got = memo.get(t)
    if got is not None:
        return got

    op = t.op
    if op == 'var':
        try:
            return env[t.name]
        except KeyError:
            raise UnboundVariable(t.name) from None
    if op == 'const':
        return bool(t.value) if t.sort.is_bool else t.value

    args = [_eval(a, env, ops, memo) for a in t.args]
    s = t.sort
    if op == 'add':
        r = args[0]
        for a in args[1:]:
            r = r + a
        r = _reduce(r, s)
    elif op == 'mul':
        r = args[0]
        for a in args[1:]:
            r = _reduce(r * a, s)
    elif op == 'sub':
        if s.is_nat:
            r = ops.trunc_sub(args[0], args[1])
        else:
            r = (args[0] - args[1]) % s.modulus()
    elif op == 'mod':
        r = ops.mod(args[0], args[1])
    elif op == 'max':
        r = ops.maximum(args[0], args[1])
    elif op == 'ite':
        r = ops.where(args[0], args[1], args[2])
    elif op in ('to_nat', 'bv_to_nat'):
        r = args[0]
    elif op in ('to_bv', 'resize'):
        r = args[0] % s.modulus()
    elif op == 'bvor':
        r = ops.bitor(args[0], args[1])
    elif op == 'concat':
        r = args[0]
        for a, sub_term in zip(args[1:], t.args[1:]):
            r = r * sub_term.sort.modulus() + a
    elif op == 'eq':
        r = args[0] == args[1]
    elif op == 'leq':
        r = args[0] <= args[1]
    elif op == 'geq':
        r = args[0] >= args[1]
    elif op == 'and':
        r = args[0]
        for a in args[1:]:
            r = ops.both(r, a)
    elif op == 'not':
        r = ops.negate(args[0])
    else:
        raise ValueError('Unexpected operator `' + op + '`.')
    memo[t] = r
    return r


def eval_term(t, assignment):
    r"""
    Value of a term under an assignment.

    Parameters
    ----------
    t : :class:`fieldbv.Term`
    assignment : dict
        Maps variable names to natural numbers.

    Returns
    -------
    int or bool
        Formulas evaluate to ``bool``.

    Raises
    ------
    UnboundVariable
        If a variable of ``t`` has no value.

    Notes
    -----
    Field operations are reduced modulo :math:`p`, bit-vector
    operations modulo :math:`2^N`; natural number subtraction is
    truncated at zero and :math:`t \bmod 0 = t`.

    Examples
    --------
    .. doctest::

        >>> import fieldbv as fbv
        >>> fbv.eval_term(fbv.sub(fbv.const(2), fbv.const(5)), {})
        0
    """
    return _eval(t, assignment, _IntOps, {})


def evaluate(formulas, assignment):
    r"""Whether every formula holds under ``assignment``."""
    return all(bool(eval_term(f, assignment)) for f in formulas)


def _domain_size(sort):
    if sort.is_nat:
        return get_nat_domain()
    return sort.modulus()


def _peak(t, env_max, memo):
    r"""Upper bound of every intermediate value while evaluating t."""
    got = memo.get(t)
    if got is not None:
        return got
    op = t.op
    if op == 'var':
        r = (env_max[t.name], env_max[t.name])
    elif op == 'const':
        r = (t.value, t.value)
    else:
        parts = [_peak(a, env_max, memo) for a in t.args]
        tops = [p[0] for p in parts]
        inner = max(p[1] for p in parts)
        s = t.sort
        if op == 'add':
            raw = sum(tops)
        elif op == 'mul':
            raw = 1
            for x in tops:
                raw *= x
        elif op == 'concat':
            raw = s.modulus()
        else:
            raw = max(tops)
        if s.is_bool:
            top = 1
        elif s.is_nat or s.is_bv and op in ('bvor', 'concat'):
            top = raw
        else:
            top = min(raw, s.modulus() - 1)
        r = (top, max(inner, raw, top))
    memo[t] = r
    return r


def assignment_count(variables):
    count = 1
    for s in variables.values():
        count *= _domain_size(s)
    return count


@dataclass
class OracleResult:
    r"""
    Outcome of an enumeration.

    ``witness`` is the first falsifying assignment in
    lexicographic order (variables by name, then values);
    ``models`` counts the assignments satisfying the hypotheses.
    """
    valid: bool
    witness: dict
    count: int
    models: int

    def __bool__(self):
        return self.valid


def _enumerate(hyps, goals, extra_vars=None, budget=None):
    variables = dict(extra_vars or {})
    variables.update(free_vars(*hyps, *goals))
    names = sorted(variables)
    sizes = [_domain_size(variables[n]) for n in names]
    count = assignment_count(variables)
    budget = get_oracle_budget() if budget is None else budget
    if count > budget:
        raise BudgetExceeded(count, budget)

    env_max = {n: s - 1 for n, s in zip(names, sizes)}
    memo = {}
    peak = max([_peak(f, env_max, memo)[1] for f in hyps + goals] + [0])
    dtype = object if peak >= _INT64_SAFE else np.int64

    grids = np.meshgrid(*[np.arange(s, dtype=np.int64) for s in sizes],
                        indexing='ij')
    env = {n: g.ravel().astype(dtype) for n, g in zip(names, grids)}
    logger.debug('enumerating %d assignments of %s (dtype %s)',
                 count, names, dtype)

    memo = {}
    ok_h = np.ones(count, dtype=bool)
    for h in hyps:
        ok_h &= np.broadcast_to(
            np.asarray(_eval(h, env, _ArrayOps, memo), dtype=bool), (count,))
    ok_g = np.ones(count, dtype=bool)
    for g in goals:
        ok_g &= np.broadcast_to(
            np.asarray(_eval(g, env, _ArrayOps, memo), dtype=bool), (count,))

    bad = ok_h & ~ok_g
    models = int(np.count_nonzero(ok_h))
    if not bad.any():
        return OracleResult(True, None, count, models)
    i = int(np.argmax(bad))
    witness = {n: int(env[n][i]) for n in names}
    return OracleResult(False, witness, count, models)


def check_validity(target, budget=None):
    r"""
    Decide validity by enumerating all assignments.

    Parameters
    ----------
    target : :class:`fieldbv.ProofContext` or :class:`fieldbv.Problem`
        Valid iff every assignment satisfying all hypotheses
        satisfies all goals.
    budget : int, optional
        Largest number of assignments enumerated. Defaults to
        :func:`fieldbv.get_oracle_budget`.

    Returns
    -------
    :class:`OracleResult`
        Evaluates to ``True`` iff valid.

    Raises
    ------
    BudgetExceeded
        If the assignment space is larger than ``budget``.

    Notes
    -----
    Variables of sort :math:`\mathbb{N}` range over
    ``range(get_nat_domain())``, so validity over them is bounded.
    """
    extra = getattr(target, 'declarations', None)
    return _enumerate(list(target.hyps), list(target.goals),
                      dict(extra) if extra else None, budget)


def entails(hyps, goal, budget=None):
    r"""
    Whether ``hyps`` entail ``goal`` (:math:`H \models \gamma`).

    Parameters
    ----------
    hyps : iterable of :class:`fieldbv.Term`
    goal : :class:`fieldbv.Term`
    budget : int, optional

    Returns
    -------
    bool

    Raises
    ------
    BudgetExceeded
    """
    return _enumerate(list(hyps), [goal], None, budget).valid


