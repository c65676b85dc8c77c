import dataclasses
from .jolt import gen_jolt_or
from .fuzz import gen_random

__all__ = ['BenchSpec', 'generate']

_FAMILIES = ('jolt-or', 'random')


@dataclasses.dataclass(frozen=True)
class BenchSpec:
    r"""
    Parameters of a generated problem.

    Parameters
    ----------
    family : {'jolt-or', 'random'}
    bits : int, default=1
        Bits per operand (``'jolt-or'``).
    p : int, default=7
        Field order.
    seed, depth, var_count : int
        See :func:`fieldbv.gen_random`.
    mutate : bool, default=False
        See :func:`fieldbv.gen_jolt_or`.
    """
    family: str
    bits: int = 1
    p: int = 7
    seed: int = 0
    depth: int = 2
    var_count: int = 2
    mutate: bool = False


def generate(spec):
    r"""
    Problem described by a :class:`BenchSpec`.

    Raises
    ------
    ValueError
        If the family is unknown.
    """
    family = spec.family.lower().strip()
    if family == 'jolt-or':
        return gen_jolt_or(spec.bits, spec.p, spec.mutate)
    if family == 'random':
        return gen_random(spec.seed, spec.depth, spec.var_count, spec.p)
    raise ValueError('Unexpected value of `family`: ' + spec.family
                     + '. Expected one of ' + str(_FAMILIES) + '.')
