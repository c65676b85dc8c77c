from dataclasses import dataclass
from functools import lru_cache
from ..errors import NonPrimeField

__all__ = ['Sort', 'FF', 'BV', 'NAT', 'BOOL', 'is_prime', 'bit_width']


@lru_cache(maxsize=None)
def is_prime(n):
    r"""Primality test by trial division."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def bit_width(value):
    r"""
    Least :math:`W \geq 1` with ``value`` :math:`< 2^W`.
    """
    return max(1, int(value).bit_length())


@dataclass(frozen=True)
class Sort:
    r"""
    Sort of a term.

    Parameters
    ----------
    kind : {'ff', 'nat', 'bv', 'bool'}
    param : int or None
        Field order for ``'ff'``, width for ``'bv'``.

    Notes
    -----
    Use the constructors :func:`FF` and :func:`BV` and the
    constants ``NAT`` and ``BOOL`` instead of building
    sorts directly; they validate the parameter.
    """
    kind: str
    param: int = None

    @property
    def is_ff(self):
        return self.kind == 'ff'

    @property
    def is_nat(self):
        return self.kind == 'nat'

    @property
    def is_bv(self):
        return self.kind == 'bv'

    @property
    def is_bool(self):
        return self.kind == 'bool'

    def modulus(self):
        r"""
        Number of values of the sort, ``None`` if infinite.
        """
        if self.kind == 'ff':
            return self.param
        if self.kind == 'bv':
            return 2**self.param
        if self.kind == 'bool':
            return 2
        return None

    def __str__(self):
        if self.kind == 'ff':
            return 'FF(' + str(self.param) + ')'
        if self.kind == 'bv':
            return 'BV(' + str(self.param) + ')'
        return 'Nat' if self.kind == 'nat' else 'Bool'


def FF(p):
    if not is_prime(p):
        raise NonPrimeField(p)
    return Sort('ff', int(p))


def BV(width):
    if width < 1:
        raise ValueError('Unexpected value of `width`: ' + str(width)
                         + '. Expected a positive integer.')
    return Sort('bv', int(width))


NAT = Sort('nat')
BOOL = Sort('bool')
