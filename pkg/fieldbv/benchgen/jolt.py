from ..term.sort import FF, BV, is_prime
from ..term.term import (var, const, add, mul, sub, to_nat, to_bv, bvor,
                         concat, eq, leq)
from ..errors import NonPrimeField, ConstraintViolation
from ..frontend.problem import Problem

__all__ = ['gen_jolt_or', 'or_polynomial']


def or_polynomial(xs, ys, mutate=False):
    r"""
    Field polynomial of the bitwise OR of two bit decompositions.

    .. math::
        \sum_{i} 2^i (x_i + y_i - x_i y_i)

    With ``mutate=True`` the product is added instead of
    subtracted, which breaks the encoding.
    """
    F = xs[0].sort
    summands = []
    for i, (x, y) in enumerate(zip(xs, ys)):
        bit = (add(x, y, mul(x, y)) if mutate
               else sub(add(x, y), mul(x, y)))
        summands.append(mul(const(2**i, F), bit))
    return add(*summands)


def gen_jolt_or(bits, p, mutate=False):
    r"""
    Bitwise OR lookup of a zkVM, as a verification problem.

    The operands are given as ``bits`` single-bit vectors per
    side, ``bv1_i`` and ``bv2_i``, each tied to a field element
    ``x_i`` (resp. ``y_i``) that is constrained to be a bit.
    The goal states that the OR polynomial of the field elements,
    read as a natural number, is the OR of the two bit-vectors
    and stays below :math:`2^{bits}`.

    Parameters
    ----------
    bits : int
        Bits per operand, :math:`B \geq 1`.
    p : int
        Field order, prime and larger than :math:`2^B`.
    mutate : bool, default=False
        Use the wrong sign for the product term
        (see :func:`or_polynomial`).

    Returns
    -------
    :class:`fieldbv.Problem`

    Raises
    ------
    NonPrimeField
        If ``p`` is not prime.
    ConstraintViolation
        If :math:`2^B \geq p`.

    Notes
    -----
    ``bv1_i`` is bit :math:`i` of the first operand; the operand
    itself is the concatenation ``bv1_{B-1} ... bv1_0``.

    .. doctest::

        >>> import fieldbv as fbv
        >>> pb = fbv.gen_jolt_or(1, 7)
        >>> pb.goals[1]
        (<= (to-nat (* 1 (- (+ x0 y0) (* x0 y0)))) 1)
        >>> fbv.check_validity(pb).valid
        True
    """
    if bits < 1:
        raise ValueError('Unexpected value of `bits`: ' + str(bits)
                         + '. Expected a positive integer.')
    if not is_prime(p):
        raise NonPrimeField(p)
    if 2**bits >= p:
        raise ConstraintViolation(
            'field order ' + str(p) + ' does not exceed 2^' + str(bits))

    F = FF(p)
    declarations = {}
    hyps = []
    sides = []
    for prefix, field_prefix in (('bv1_', 'x'), ('bv2_', 'y')):
        slices = []
        elems = []
        for i in range(bits):
            s = var(prefix + str(i), BV(1))
            x = var(field_prefix + str(i), F)
            declarations[s.name] = s.sort
            declarations[x.name] = F
            hyps.append(eq(s, to_bv(1, to_nat(x))))
            hyps.append(leq(to_nat(x), const(1)))
            slices.append(s)
            elems.append(x)
        sides.append((slices, elems))
    (s1, xs), (s2, ys) = sides

    poly = to_nat(or_polynomial(xs, ys, mutate))
    word1 = concat(*reversed(s1))
    word2 = concat(*reversed(s2))
    goals = [eq(bvor(word1, word2), to_bv(bits, poly)),
             leq(poly, const(2**bits - 1))]
    name = 'jolt-or-' + str(bits) + '-' + str(p)
    if mutate:
        name += '-mutated'
    return Problem(F, declarations, hyps, goals, name=name).check()
