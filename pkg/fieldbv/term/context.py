r"""
Proof contexts and rule traces.
"""
import json
import time
from collections import Counter
from dataclasses import dataclass
from .term import free_vars, sort_check
from .printer import pretty_print
from .._constants import ATOM_SUFFIX
from ..errors import Timeout, SortMismatch

__all__ = ['ProofContext', 'RuleTrace', 'TraceEntry']


@dataclass(frozen=True)
class TraceEntry:
    r"""
    One rule application.

    ``before`` and ``after`` are the measure tuples of the
    strategy that fired the rule; ``snapshot`` optionally
    holds the goal set after the application.
    """
    stage: str
    rule: str
    target: object
    substitution: tuple
    before: tuple
    after: tuple
    snapshot: tuple = None

    def decreases(self):
        return self.after < self.before

    def as_dict(self):
        d = {'stage': self.stage, 'rule': self.rule,
             'target': _show(self.target),
             'substitution': [_show(s) for s in self.substitution],
             'before': list(self.before), 'after': list(self.after)}
        if self.snapshot is not None:
            d['goals'] = [_show(g) for g in self.snapshot]
        return d


def _show(x):
    return x if isinstance(x, str) else pretty_print(x)


class RuleTrace:
    r"""
    Ordered log of rule applications.

    Every entry stores the measure tuple of its strategy before
    and after the application; :meth:`violations` lists the
    entries whose measure did not strictly decrease in the
    lexicographic order.
    """
    def __init__(self):
        self.entries = []

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def record(self, stage, rule, target, substitution, before, after,
               snapshot=None):
        entry = TraceEntry(stage, rule, target, tuple(substitution),
                           tuple(before), tuple(after),
                           None if snapshot is None else tuple(snapshot))
        self.entries.append(entry)
        return entry

    def violations(self):
        return [e for e in self.entries if not e.decreases()]

    def rule_counts(self):
        return Counter(e.rule for e in self.entries)

    def fired(self, rule):
        return any(e.rule == rule for e in self.entries)

    def write_jsonl(self, fp):
        r"""Write one JSON object per entry to the open file ``fp``."""
        for e in self.entries:
            fp.write(json.dumps(e.as_dict()) + '\n')


class ProofContext:
    r"""
    Proof context :math:`\Gamma = (G, H)`.

    Parameters
    ----------
    goals : iterable of :class:`fieldbv.Term`
    hyps : iterable of :class:`fieldbv.Term`
    field : :class:`fieldbv.Sort`, optional
        Field sort of the problem, if any.
    deadline : float, optional
        Value of :func:`time.monotonic` after which
        :meth:`check_deadline` raises :class:`fieldbv.Timeout`.

    Notes
    -----
    Goals and hypotheses are kept as duplicate-free lists in
    insertion order so that derivations are deterministic.
    The variables present at construction are the original
    variables; placeholder variables are registered by range
    analysis.
    """
    def __init__(self, goals=(), hyps=(), field=None, deadline=None,
                 trace=None):
        self.goals = []
        self.hyps = []
        for g in goals:
            self.add_goal(g)
        for h in hyps:
            self.add_hyp(h)
        self.field = field
        self.deadline = deadline
        self.trace = RuleTrace() if trace is None else trace
        self.original_vars = free_vars(*self.goals, *self.hyps)
        self.placeholder_vars = set()

    def copy(self):
        ctx = ProofContext(self.goals, self.hyps, self.field,
                           self.deadline, self.trace)
        ctx.original_vars = dict(self.original_vars)
        ctx.placeholder_vars = set(self.placeholder_vars)
        return ctx

    def formulas(self):
        return self.goals + self.hyps

    def add_goal(self, f):
        if f not in self.goals:
            self.goals.append(f)
            return True
        return False

    def add_hyp(self, f):
        if f not in self.hyps:
            self.hyps.append(f)
            return True
        return False

    def map_formulas(self, fun):
        r"""
        Apply ``fun`` to every goal and hypothesis.

        Returns
        -------
        bool
            Whether some formula changed.
        """
        changed = False
        for name in ('goals', 'hyps'):
            new = []
            for f in getattr(self, name):
                g = fun(f)
                changed = changed or g != f
                if g not in new:
                    new.append(g)
            setattr(self, name, new)
        return changed

    def replace_formula(self, old, new):
        r"""Replace the goal or hypothesis ``old`` by ``new``."""
        return self.map_formulas(lambda f: new if f == old else f)

    def check_deadline(self, stage):
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise Timeout(stage)

    def check_invariants(self):
        r"""
        Assert well-sortedness and variable bookkeeping.

        Every goal and hypothesis is a well-sorted formula.
        Original and placeholder variables are disjoint and every
        free variable is one of them or the bit-vector atom of an
        original variable.

        Raises
        ------
        SortMismatch
            If some formula is ill-sorted or not Boolean.
        AssertionError
            If a variable is unaccounted for.
        """
        for f in self.formulas():
            s = sort_check(f)
            if not s.is_bool:
                raise SortMismatch((), 'formula of sort ' + str(s))
        assert not (set(self.original_vars) & self.placeholder_vars)
        known = set(self.original_vars) | self.placeholder_vars
        for name in free_vars(*self.formulas()):
            if name.endswith(ATOM_SUFFIX):
                name = name[:-len(ATOM_SUFFIX)]
            assert name in known, name

    def __repr__(self):
        return ('ProofContext(goals=' + str(self.goals)
                + ', hyps=' + str(self.hyps) + ')')
