r"""
Translation from natural number to bit-vector formulas.

All natural number terms are converted at one global width
:math:`b`, chosen so that no term of :math:`\Gamma` can reach
:math:`2^b`. ``toBV`` is then pushed down to the leaves, which
:class:`BVAtomizer` maps to bit-vector variables and constants.
"""
import logging
from dataclasses import dataclass, field
from ..term.term import (var, const, add, mul, sub, mod, ite, to_bv, eq, leq,
                         geq, resize, subterms)
from ..term.sort import NAT, BV, bit_width
from ..term.rewrite import replace, normalize
from ..term.context import ProofContext
from .._constants import ATOM_SUFFIX
from .._settings import get_ineq_fallback
from ..errors import Unsupported
from ..range_analysis import RangeAnalyzer, hypothesis_bounds

__all__ = ['WidthPlan', 'clc_bv_width', 'inj_bv', 'push_toBV',
           'inj_bv_leq_goal', 'to_bv_strategy', 'to_bv_measure',
           'BVAtomizer', 'as_bv_atom', 'is_pure_bv', 'NAT2BV_RULES']

logger = logging.getLogger(__name__)

STAGE = 'to_bv'

def _leaf_bound(t, upper):
    c = upper.get(normalize(t))
    if t.op == 'to_nat':
        top = t.args[0].sort.param - 1
        return top if c is None else min(c, top)
    return c


def clc_bv_width(t, upper=None):
    r"""
    Bits needed by every value of a natural number term.

    Parameters
    ----------
    t : :class:`fieldbv.Term`
        Term of sort :math:`\mathbb{N}` without field operators.
    upper : dict, optional
        Upper bounds from :func:`fieldbv.hypothesis_bounds`;
        they tighten the widths of leaves.

    Returns
    -------
    int or None
        :math:`W \geq 1` with :math:`t < 2^W` in every model
        of the hypotheses, or ``None`` if ``t`` has a natural
        number variable without upper bound.

    Notes
    -----
    An n-ary sum takes the bits of the sum of its operands'
    maxima. A product takes the sum of the widths of its
    non-constant factors, scaled by the product of its constants.
    Subtraction and ``mod`` keep the width of their first operand,
    ``ite`` the larger branch width.

    Examples
    --------
    .. doctest::

        >>> import fieldbv as fbv
        >>> x = fbv.to_nat(fbv.var('x', fbv.FF(7)))
        >>> fbv.clc_bv_width(fbv.mul(x, x, x))
        9
        >>> fbv.clc_bv_width(fbv.const(7))
        3
    """
    upper = {} if upper is None else upper
    memo = {}

    def width(u):
        if u in memo:
            return memo[u]
        op = u.op
        if op == 'const':
            w = bit_width(u.value)
        elif op in ('var', 'to_nat'):
            c = _leaf_bound(u, upper)
            w = None if c is None else bit_width(c)
        elif op == 'bv_to_nat':
            w = u.args[0].sort.param
        elif op == 'add':
            ws = [width(a) for a in u.args]
            w = None if None in ws else bit_width(sum(2**v - 1 for v in ws))
        elif op == 'mul':
            w = _mul_width(u.args, width)
        elif op in ('sub', 'mod'):
            w = width(u.args[0])
        elif op in ('ite', 'max'):
            ws = [width(a) for a in u.args[-2:]]
            w = None if None in ws else max(ws)
        else:
            raise Unsupported('width of ' + op)
        memo[u] = w
        return w

    return width(t)


def _mul_width(args, width):
    scale = 1
    bits = 0
    for a in args:
        if a.op == 'const':
            scale *= a.value
            continue
        w = width(a)
        if w is None:
            return None
        bits += w
    return bit_width(scale * (2**bits - 1) if bits else scale)


@dataclass
class WidthPlan:
    r"""
    Global conversion width.

    Attributes
    ----------
    b : int
        Width used for every injection, at least 2.
    upper : dict
        Hypothesis bounds the width was computed with.
    """
    b: int = 2
    upper: dict = field(default_factory=dict)

    @classmethod
    def from_context(cls, ctx):
        r"""
        Largest width of a bounded natural number subterm
        of :math:`\Gamma`.
        """
        upper, _ = hypothesis_bounds(ctx.hyps)
        b = 2
        for f in ctx.formulas():
            for s in subterms(f):
                if s.sort.is_nat and s.op != 'max':
                    w = clc_bv_width(s, upper)
                    if w is not None:
                        b = max(b, w)
        logger.debug('global width %d', b)
        return cls(b, upper)

    def fits(self, t, width, analyzer=None):
        r"""Whether :math:`t \leq 2^{width} - 1` follows from :math:`H`."""
        w = clc_bv_width(t, self.upper)
        if w is not None and w <= width:
            return True
        if analyzer is None:
            return False
        return analyzer.prove(leq(t, const(2**width - 1, NAT)))


def _comparison(op, a, b):
    return {'eq': eq, 'leq': leq, 'geq': geq}[op](a, b)


def _is_nat_cmp(s):
    return s.op in ('eq', 'leq', 'geq') and s.args[0].sort.is_nat


def _nested_cmps(ctx):
    # natural number comparisons that are not whole formulas
    seen = []
    for f in ctx.formulas():
        for s in subterms(f):
            if s is not f and _is_nat_cmp(s) and s not in seen:
                seen.append(s)
    return seen


def _is_atom(t):
    return (t.op == 'const' or t.op == 'var'
            or t.op in ('to_nat', 'bv_to_nat') and t.args[0].op == 'var')


def to_bv_measure(ctx, plan):
    r"""
    Termination measure of the naturals to bit-vectors strategy.

    Returns
    -------
    tuple
        Natural number comparisons still to inject, non-atom nodes
        below ``toBV``, and ``toBV`` of a difference or remainder
        narrower than the global width.
    """
    cmps = len(_nested_cmps(ctx))
    cmps += sum(1 for f in ctx.formulas() if f.op == 'eq'
                and f.args[0].sort.is_nat)
    inside = narrow = 0
    for f in ctx.formulas():
        for s in subterms(f):
            if s.op != 'to_bv':
                continue
            stack = [s.args[0]]
            while stack:
                u = stack.pop()
                if not _is_atom(u):
                    inside += 1
                    stack.extend(a for a in u.args if a.sort.is_nat)
            if s.sort.param < plan.b and s.args[0].op in ('sub', 'mod'):
                narrow += 1
    return (cmps, inside, narrow)


def _rewrite(ctx, match):
    for f in ctx.formulas():
        for s in subterms(f):
            r = match(s)
            if r is not None:
                ctx.map_formulas(lambda g: replace(g, {s: r}))
                return s, (r,)
    return None


def _inj_bv_leq_hyp(ctx, plan, analyzer):
    for h in list(ctx.hyps):
        if h.op not in ('leq', 'geq') or not h.args[0].sort.is_nat:
            continue
        image = _image(h, plan)
        if image in ctx.hyps:
            continue
        if all(plan.fits(a, plan.b, analyzer) for a in h.args):
            ctx.add_hyp(image)
            return h, (image,)
    return None


def _image(f, plan):
    return _comparison(f.op, to_bv(plan.b, f.args[0]),
                       to_bv(plan.b, f.args[1]))


def _inj_bv(ctx, plan, analyzer):
    nested = set(_nested_cmps(ctx))

    def match(s):
        if not _is_nat_cmp(s) or (s.op != 'eq' and s not in nested):
            return None
        if all(plan.fits(a, plan.b, analyzer) for a in s.args):
            return _image(s, plan)
        return None
    return _rewrite(ctx, match)


def _under_to_bv(ops):
    def decorator(fun):
        def rule(ctx, plan, analyzer):
            def match(s):
                if s.op == 'to_bv' and s.args[0].op in ops:
                    return fun(s.sort.param, s.args[0], plan, analyzer)
                return None
            return _rewrite(ctx, match)
        rule.__doc__ = fun.__doc__
        return rule
    return decorator


@_under_to_bv(('add', 'mul'))
def _dist_bv(n, u, plan, analyzer):
    op = add if u.op == 'add' else mul
    return op(*[to_bv(n, a) for a in u.args])


@_under_to_bv(('ite',))
def _dist_bv_ite(n, u, plan, analyzer):
    return ite(u.args[0], to_bv(n, u.args[1]), to_bv(n, u.args[2]))


@_under_to_bv(('sub',))
def _dist_bv_sub(n, u, plan, analyzer):
    t1, t2 = u.args
    if plan.fits(t1, n, analyzer) and analyzer.prove(leq(t2, t1)):
        return sub(to_bv(n, t1), to_bv(n, t2))
    return None


@_under_to_bv(('mod',))
def _dist_bv_mod(n, u, plan, analyzer):
    t, c = u.args
    if plan.fits(c, n, analyzer) and plan.fits(t, n, analyzer):
        return mod(to_bv(n, t), to_bv(n, c))
    return None


@_under_to_bv(('sub', 'mod'))
def _widen_bv(n, u, plan, analyzer):
    if n < plan.b:
        return resize(n, to_bv(plan.b, u))
    return None


NAT2BV_RULES = (
    ('injBV', _inj_bv),
    ('distBV', _dist_bv),
    ('distBVIte', _dist_bv_ite),
    ('distBVSub', _dist_bv_sub),
    ('distBVMod', _dist_bv_mod),
    ('widenBV', _widen_bv),
)


def _record(ctx, name, hit, before, after):
    ctx.trace.record(STAGE, name, hit[0], hit[1], before, after)
    logger.debug('%s: %s', name, hit[0])
    ctx.check_invariants()


def _unimaged(ctx, plan):
    return sum(1 for h in ctx.hyps if h.op in ('leq', 'geq')
               and h.args[0].sort.is_nat and _image(h, plan) not in ctx.hyps)


def inj_bv(ctx, plan, analyzer=None):
    r"""
    Inject one natural number comparison into bit-vectors.

    A hypothesis inequality without bit-vector image gains one
    (the original is kept); otherwise an equality, or a
    comparison nested in another formula, is replaced by its
    image at width ``plan.b``.

    Returns
    -------
    bool
        Whether :math:`\Gamma` changed.
    """
    analyzer = RangeAnalyzer(ctx) if analyzer is None else analyzer
    before = (_unimaged(ctx, plan),)
    hit = _inj_bv_leq_hyp(ctx, plan, analyzer)
    if hit is not None:
        _record(ctx, 'injBVLeqHyp', hit, before, (_unimaged(ctx, plan),))
        return True
    return _apply(ctx, plan, analyzer, ('injBV',))


def _apply(ctx, plan, analyzer, names):
    for name, rule in NAT2BV_RULES:
        if name not in names:
            continue
        before = to_bv_measure(ctx, plan)
        hit = rule(ctx, plan, analyzer)
        if hit is not None:
            _record(ctx, name, hit, before, to_bv_measure(ctx, plan))
            return True
    return False


def push_toBV(ctx, plan, analyzer=None):
    r"""
    Distribute one ``toBV`` over a compound natural number term.

    Differences need :math:`t_1 \leq 2^N - 1` and
    :math:`t_1 \geq t_2`; remainders need both operands below
    :math:`2^N`. A difference or remainder that fails at a width
    :math:`N < b` is widened to ``resize(N, toBV(b, t))``.
    """
    analyzer = RangeAnalyzer(ctx) if analyzer is None else analyzer
    return _apply(ctx, plan, analyzer, ('distBV', 'distBVIte', 'distBVSub',
                                        'distBVMod', 'widenBV'))


def inj_bv_leq_goal(ctx, plan, analyzer=None):
    r"""
    Replace the first natural number goal inequality by its
    bit-vector image, if both sides fit ``plan.b``.

    Only used for goals range analysis could not discharge.
    """
    goals = [g for g in ctx.goals
             if g.op in ('leq', 'geq') and g.args[0].sort.is_nat]
    for g in goals:
        if all(plan.fits(a, plan.b, analyzer) for a in g.args):
            image = _image(g, plan)
            ctx.replace_formula(g, image)
            _record(ctx, 'injBVLeqGoal', (g, (image,)), (len(goals),),
                    (len(goals) - 1,))
            return True
    return False


def to_bv_strategy(ctx, plan=None, analyzer=None, fallback=None):
    r"""
    Saturate the naturals to bit-vectors rules.

    Parameters
    ----------
    ctx : :class:`fieldbv.ProofContext`
        Output of :func:`fieldbv.to_nat_strategy`; rewritten in place.
    plan : :class:`WidthPlan`, optional
        Computed from ``ctx`` if omitted.
    analyzer : :class:`fieldbv.RangeAnalyzer`, optional
    fallback : bool, optional
        Whether remaining goal inequalities are injected.
        Defaults to :func:`fieldbv.get_ineq_fallback`.

    Returns
    -------
    :class:`fieldbv.ProofContext`

    Raises
    ------
    Timeout
        If the deadline of ``ctx`` passes.
    """
    plan = WidthPlan.from_context(ctx) if plan is None else plan
    analyzer = RangeAnalyzer(ctx) if analyzer is None else analyzer
    fallback = get_ineq_fallback() if fallback is None else fallback

    while True:
        ctx.check_deadline(STAGE)
        before = (_unimaged(ctx, plan),)
        hit = _inj_bv_leq_hyp(ctx, plan, analyzer)
        if hit is None:
            break
        _record(ctx, 'injBVLeqHyp', hit, before, (_unimaged(ctx, plan),))

    if fallback:
        while inj_bv_leq_goal(ctx, plan, analyzer):
            ctx.check_deadline(STAGE)

    names = [name for name, _ in NAT2BV_RULES]
    while True:
        ctx.check_deadline(STAGE)
        if not _apply(ctx, plan, analyzer, names):
            break
    return ctx


def is_pure_bv(f):
    r"""Whether ``f`` only has Boolean and bit-vector nodes."""
    return all(s.sort.is_bv or s.sort.is_bool for s in subterms(f))


class BVAtomizer:
    r"""
    Map ``toBV`` leaves to bit-vector variables and constants.

    Every field or natural number variable gets one canonical
    bit-vector variable, named after it with the ``#bv`` suffix.
    Its width covers the variable's bound in :math:`H`; a field
    variable is never wider than :math:`P - 1` needs.
    ``toBV(N, v)`` then becomes ``resize(N, canonical)``.

    Parameters
    ----------
    ctx : :class:`fieldbv.ProofContext`
        Output of :func:`to_bv_strategy`. Its formulas are scanned
        for the widths requested of unbounded natural number
        variables.

    Attributes
    ----------
    canonical : dict
        Maps original variable names to
        ``(original variable, bit-vector variable, bound)``.
    """

    def __init__(self, ctx):
        self.upper, _ = hypothesis_bounds(ctx.hyps)
        self.canonical = {}
        self._requested = {}
        for f in ctx.formulas():
            for s in subterms(f):
                if s.op == 'to_bv' and s.args[0].op == 'var':
                    v = s.args[0]
                    self._requested[v.name] = max(
                        self._requested.get(v.name, 1), s.sort.param)

    def _canonical(self, leaf, n):
        v = leaf.args[0] if leaf.op == 'to_nat' else leaf
        got = self.canonical.get(v.name)
        if got is not None:
            return got[1]
        bound = _leaf_bound(leaf, self.upper)
        if bound is None:
            # only the low bits requested by toBV are observable
            width = max(self._requested.get(v.name, n), n)
        else:
            width = bit_width(bound)
        atom = var(v.name + ATOM_SUFFIX, BV(width))
        self.canonical[v.name] = (v, atom, bound)
        return atom

    def atom(self, t):
        r"""
        Bit-vector leaf for ``toBV(N, u)``.

        Raises
        ------
        Unsupported
            If ``u`` is no constant, variable, ``toNat`` of a
            variable or ``bvToNat`` of a variable.
        """
        if t.op != 'to_bv':
            raise Unsupported('atom ' + str(t))
        n = t.sort.param
        u = t.args[0]
        if u.op == 'const':
            return const(u.value % 2**n, BV(n))
        if u.op == 'bv_to_nat' and u.args[0].op == 'var':
            return _resized(n, u.args[0])
        if u.op == 'var' or u.op == 'to_nat' and u.args[0].op == 'var':
            return _resized(n, self._canonical(u, n))
        raise Unsupported('atom ' + str(t))

    def atomize(self, f):
        r"""Replace every ``toBV`` atom of ``f``; other nodes stay."""
        mapping = {}
        for s in subterms(f):
            if s.op == 'to_bv' and s not in mapping:
                try:
                    mapping[s] = self.atom(s)
                except Unsupported:
                    pass
        return replace(f, mapping)

    def side_constraints(self):
        r"""
        Bounds of the canonical variables that their width
        does not already imply.
        """
        out = []
        for v, atom, bound in self.canonical.values():
            if bound is not None and bound < 2**atom.sort.param - 1:
                out.append(leq(atom, const(bound, atom.sort)))
        return out


def _resized(n, t):
    return t if t.sort.param == n else resize(n, t)


def as_bv_atom(t, atomizer=None):
    r"""
    Bit-blastable leaf for a ``toBV`` atom.

    Parameters
    ----------
    t : :class:`fieldbv.Term`
        ``toBV(N, toNat(v))``, ``toBV(N, bvToNat(v))``,
        ``toBV(N, v)`` or ``toBV(N, c)``.
    atomizer : :class:`BVAtomizer`, optional
        Supplies the canonical variables and hypothesis bounds.
        Without it, variables take the width of their sort.

    Raises
    ------
    Unsupported
        For any other shape.

    Examples
    --------
    .. doctest::

        >>> import fieldbv as fbv
        >>> fbv.as_bv_atom(fbv.to_bv(2, fbv.const(3)))
        (bv 3 2)
    """
    if atomizer is None:
        atomizer = BVAtomizer(ProofContext(goals=[]))
    return atomizer.atom(t)
