r"""
Translation from prime-field to natural number formulas.

The rules push ``toNat`` from field equalities down to field
variables. Sums and products carry a trailing :math:`\bmod P`
which is later dropped wherever range analysis bounds the
operand by :math:`P - 1`.
"""
import logging
from ..term.term import (var, subterms, const, add, mul, sub, mod, ite,
                         to_nat, eq, leq, free_vars)
from ..term.sort import NAT
from ..term.rewrite import replace
from ..errors import Unsupported
from ..range_analysis import RangeAnalyzer, hypothesis_bounds

__all__ = ['inj_nat', 'normalize_sub', 'push_toNat', 'mod_simplify',
           'add_bounds', 'to_nat_strategy', 'to_nat_measure',
           'FF2NAT_RULES']

logger = logging.getLogger(__name__)

STAGE = 'to_nat'


def _rewrite(ctx, match):
    # first match in leftmost-innermost order, replaced everywhere
    for f in ctx.formulas():
        for s in subterms(f):
            r = match(s)
            if r is not None:
                ctx.map_formulas(lambda g: replace(g, {s: r}))
                return s, (r,)
    return None


def _nat_const(c):
    return const(c, NAT)


def _sqr_bds(ctx, analyzer):
    def match(s):
        if s.op != 'eq' or not s.args[0].sort.is_ff:
            return None
        for m, t in (s.args, s.args[::-1]):
            if m.op == 'mul' and len(m.args) == 2 \
                    and m.args[0] == t and m.args[1] == t:
                return leq(to_nat(t), _nat_const(1))
        return None
    return _rewrite(ctx, match)


def _inj_nat(ctx, analyzer):
    def match(s):
        if s.op == 'eq' and s.args[0].sort.is_ff:
            return eq(to_nat(s.args[0]), to_nat(s.args[1]))
        return None
    return _rewrite(ctx, match)


def _mv_zmod_sub(ctx, analyzer):
    def match(s):
        if s.op != 'add' or not s.sort.is_ff:
            return None
        for i, a in enumerate(s.args):
            if a.op == 'sub':
                rest = s.args[:i] + s.args[i + 1:]
                return sub(add(a.args[0], *rest), a.args[1])
        return None
    return _rewrite(ctx, match)


def _under_to_nat(op):
    def decorator(fun):
        def rule(ctx, analyzer):
            def match(s):
                if s.op == 'to_nat' and s.args[0].op in op:
                    return fun(s.args[0], analyzer)
                return None
            return _rewrite(ctx, match)
        rule.__doc__ = fun.__doc__
        return rule
    return decorator


@_under_to_nat(('add', 'mul', 'const'))
def _dist_nat(u, analyzer):
    r"""toNat of sums and products; toNat(c) is folded."""
    if u.op == 'const':
        return _nat_const(u.value)
    op = add if u.op == 'add' else mul
    return mod(op(*[to_nat(a) for a in u.args]),
               _nat_const(u.sort.param))


@_under_to_nat(('ite',))
def _dist_nat_ite(u, analyzer):
    return ite(u.args[0], to_nat(u.args[1]), to_nat(u.args[2]))


@_under_to_nat(('sub',))
def _dist_nat_sub(u, analyzer):
    a, b = to_nat(u.args[0]), to_nat(u.args[1])
    if analyzer.prove(leq(b, a)):
        return sub(a, b)
    return None


@_under_to_nat(('sub',))
def _dist_nat_sub_ovrflw(u, analyzer):
    P = _nat_const(u.sort.param)
    return mod(sub(add(to_nat(u.args[0]), P), to_nat(u.args[1])), P)


def _mv_mod(ctx, analyzer):
    def match(s):
        if s.op != 'mod':
            return None
        inner, m = s.args
        if inner.op == 'mod' and inner.args[1] == m:
            return inner
        if inner.op not in ('add', 'mul'):
            return None
        if not any(a.op == 'mod' and a.args[1] == m for a in inner.args):
            return None
        return mod(inner.with_args(
            a.args[0] if a.op == 'mod' and a.args[1] == m else a
            for a in inner.args), m)
    return _rewrite(ctx, match)


def _drop_mod(ctx, analyzer):
    def match(s):
        if s.op != 'mod' or s.args[1].op != 'const' \
                or s.args[1].value == 0:
            return None
        t = s.args[0]
        if analyzer.prove(leq(t, _nat_const(s.args[1].value - 1))):
            return t
        return None
    return _rewrite(ctx, match)


def _unbounded_ff_vars(ctx):
    upper, _ = hypothesis_bounds(ctx.hyps)
    out = []
    for name, sort in free_vars(*ctx.formulas()).items():
        if not sort.is_ff:
            continue
        v = var(name, sort)
        bound = upper.get(to_nat(v))
        if bound is None or bound > sort.param - 1:
            out.append(v)
    return out


def _add_bds(ctx, analyzer):
    for v in _unbounded_ff_vars(ctx):
        h = leq(to_nat(v), _nat_const(v.sort.param - 1))
        ctx.add_hyp(h)
        return v, (h,)
    return None


FF2NAT_RULES = (
    ('sqrBds', _sqr_bds),
    ('injNat', _inj_nat),
    ('mvZModSub', _mv_zmod_sub),
    ('distNat', _dist_nat),
    ('distNatIte', _dist_nat_ite),
    ('distNatSub', _dist_nat_sub),
    ('distNatSubOvrflw', _dist_nat_sub_ovrflw),
    ('mvMod', _mv_mod),
    ('dropMod', _drop_mod),
    ('addBds', _add_bds),
)


def to_nat_measure(ctx):
    r"""
    Termination measure of the field to naturals strategy.

    Returns
    -------
    tuple
        Number of field equalities, of non-variable nodes strictly
        inside ``toNat``, of ``mod`` nodes, of field subtractions
        below a field sum, and of field variables without bound.
    """
    eqs = inside = mods = pairs = 0
    for f in ctx.formulas():
        for s in subterms(f):
            if s.op == 'eq' and s.args[0].sort.is_ff:
                eqs += 1
            elif s.op == 'to_nat':
                inside += sum(1 for u in subterms(s.args[0])
                              if u.op != 'var')
            elif s.op == 'mod':
                mods += 1
            elif s.op == 'add' and s.sort.is_ff:
                pairs += sum(1 for u in subterms(s) if u.op == 'sub')
    return (eqs, inside, mods, pairs, len(_unbounded_ff_vars(ctx)))


def _apply(ctx, analyzer, names):
    analyzer = RangeAnalyzer(ctx) if analyzer is None else analyzer
    for name, rule in FF2NAT_RULES:
        if name not in names:
            continue
        before = to_nat_measure(ctx)
        hit = rule(ctx, analyzer)
        if hit is not None:
            ctx.trace.record(STAGE, name, hit[0], hit[1], before,
                             to_nat_measure(ctx))
            logger.debug('%s: %s', name, hit[0])
            ctx.check_invariants()
            return True
    return False


def inj_nat(ctx, analyzer=None):
    r"""
    Replace one field equality :math:`t_1 = t_2` by
    :math:`toNat(t_1) = toNat(t_2)`.

    Returns
    -------
    bool
        Whether :math:`\Gamma` changed.
    """
    return _apply(ctx, analyzer, ('injNat',))


def normalize_sub(ctx, analyzer=None):
    r"""Rewrite one :math:`t_1 - t_2 + t_3` to :math:`(t_1 + t_3) - t_2`."""
    return _apply(ctx, analyzer, ('mvZModSub',))


def push_toNat(ctx, analyzer=None):
    r"""
    Distribute one ``toNat`` over a compound field term.

    Subtraction distributes without ``mod`` if range analysis
    proves :math:`toNat(t_1) \geq toNat(t_2)`; otherwise
    :math:`(toNat(t_1) + P - toNat(t_2)) \bmod P` is used.
    """
    return _apply(ctx, analyzer, ('distNat', 'distNatIte', 'distNatSub',
                                  'distNatSubOvrflw'))


def mod_simplify(ctx, analyzer=None):
    r"""Factor one ``mod`` outward, or drop one bounded ``mod``."""
    return _apply(ctx, analyzer, ('mvMod', 'dropMod'))


def add_bounds(ctx, analyzer=None):
    r"""
    Turn one :math:`t \cdot t = t` into :math:`toNat(t) \leq 1`,
    or bound one field variable by :math:`P - 1` in :math:`H`.
    """
    return _apply(ctx, analyzer, ('sqrBds', 'addBds'))


def _check_pure_nat(ctx):
    for f in ctx.formulas():
        for s in subterms(f):
            if s.op == 'to_nat' and s.args[0].op != 'var':
                raise Unsupported('toNat of ' + str(s.args[0]))
            if s.op == 'eq' and s.args[0].sort.is_ff:
                raise Unsupported('field equality ' + str(s))


def to_nat_strategy(ctx, analyzer=None):
    r"""
    Saturate the field to naturals rules.

    Rules are tried in the priority order of :data:`FF2NAT_RULES`;
    the first one with a match fires and the loop restarts.

    Parameters
    ----------
    ctx : :class:`fieldbv.ProofContext`
        Rewritten in place.
    analyzer : :class:`fieldbv.RangeAnalyzer`, optional
        Decides the ``distNatSub`` and ``dropMod`` premises.

    Returns
    -------
    :class:`fieldbv.ProofContext`
        ``ctx``, in which ``toNat`` only wraps field variables.

    Raises
    ------
    Timeout
        If the deadline of ``ctx`` passes.

    Examples
    --------
    .. doctest::

        >>> import fieldbv as fbv
        >>> x = fbv.var('x', fbv.FF(7))
        >>> ctx = fbv.ProofContext(goals=[fbv.eq(fbv.mul(x, x, x), x)])
        >>> fbv.to_nat_strategy(ctx).goals
        [(= (mod (* (to-nat x) (to-nat x) (to-nat x)) 7) (to-nat x))]
    """
    analyzer = RangeAnalyzer(ctx) if analyzer is None else analyzer
    names = [name for name, _ in FF2NAT_RULES]
    while True:
        ctx.check_deadline(STAGE)
        if not _apply(ctx, analyzer, names):
            break
    _check_pure_nat(ctx)
    return ctx
