import numpy as np
from ..term.sort import FF, is_prime
from ..term.term import (var, const, add, mul, sub, ite, to_nat, eq, leq)
from ..errors import NonPrimeField
from ..frontend.problem import Problem

__all__ = ['gen_random']

_OPS = ('sub', 'add', 'mul', 'ite')
# subtraction first: it exercises the overflow side conditions
_OP_WEIGHTS = (0.4, 0.25, 0.2, 0.15)
_BOUND_KINDS = ('bit', 'square', 'free')


class _TermGen:
    def __init__(self, rng, xs, F):
        self.rng = rng
        self.xs = xs
        self.F = F

    def leaf(self):
        if self.rng.random() < 0.75:
            return self.xs[self.rng.integers(len(self.xs))]
        return const(int(self.rng.integers(self.F.param)), self.F)

    def term(self, depth):
        if depth <= 0 or self.rng.random() < 0.2:
            return self.leaf()
        op = _OPS[self.rng.choice(len(_OPS), p=_OP_WEIGHTS)]
        if op == 'ite':
            cond = eq(self.leaf(), const(0, self.F))
            return ite(cond, self.term(depth - 1), self.term(depth - 1))
        a, b = self.term(depth - 1), self.term(depth - 1)
        if op == 'sub':
            return sub(a, b)
        return add(a, b) if op == 'add' else mul(a, b)


def gen_random(seed, depth=2, var_count=2, p=7):
    r"""
    Random verification problem over a prime field.

    Parameters
    ----------
    seed : int
        Seed of :func:`numpy.random.default_rng`. Equal
        arguments give equal problems.
    depth : int, default=2
        Maximal operator depth of the goal terms. Depth 0
        gives goals over variables and constants only.
    var_count : int, default=2
        Number of field variables ``x0, x1, ...``.
    p : int, default=7
        Field order.

    Returns
    -------
    :class:`fieldbv.Problem`

    Notes
    -----
    Each variable is independently bit-bounded by
    :math:`toNat(x) \leq 1`, bit-bounded by :math:`x \cdot x = x`,
    or left unbounded. The goal is either a field equality
    or an upper bound on ``toNat`` of a field term.

    .. doctest::

        >>> import fieldbv as fbv
        >>> pb = fbv.gen_random(0)
        >>> pb == fbv.gen_random(0)
        True
    """
    if not is_prime(p):
        raise NonPrimeField(p)
    if var_count < 1:
        raise ValueError('Unexpected value of `var_count`: '
                         + str(var_count) + '. Expected at least 1.')
    rng = np.random.default_rng(seed)
    F = FF(p)
    xs = [var('x' + str(i), F) for i in range(var_count)]
    hyps = []
    for x in xs:
        kind = _BOUND_KINDS[rng.integers(len(_BOUND_KINDS))]
        if kind == 'bit':
            hyps.append(leq(to_nat(x), const(1)))
        elif kind == 'square':
            hyps.append(eq(mul(x, x), x))

    gen = _TermGen(rng, xs, F)
    lhs = gen.term(depth)
    if rng.random() < 0.5:
        goal = eq(lhs, gen.term(depth))
    else:
        goal = leq(to_nat(lhs), const(int(rng.integers(p))))
    declarations = {x.name: F for x in xs}
    name = 'random-' + str(seed) + '-' + str(depth)
    return Problem(F, declarations, hyps, [goal], name=name).check()
