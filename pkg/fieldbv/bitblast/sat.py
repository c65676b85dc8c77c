r"""
Conflict-driven clause learning SAT solver.
"""
import heapq
import logging
import time
from collections import defaultdict
from dataclasses import dataclass, field
from ..errors import Timeout

__all__ = ['SatResult', 'CDCLSolver', 'check_model']

logger = logging.getLogger(__name__)

STAGE = 'bitblast'


@dataclass
class SatResult:
    r"""
    Outcome of a SAT call.

    Attributes
    ----------
    status : str
        ``'sat'`` or ``'unsat'``.
    model : dict or None
        Maps every variable to a bool if ``status == 'sat'``.
    stats : dict
        Solver counters (decisions, conflicts, propagations).
    """
    status: str
    model: dict = None
    stats: dict = field(default_factory=dict)

    @property
    def sat(self):
        return self.status == 'sat'


def check_model(clauses, model):
    r"""Whether ``model`` satisfies every clause."""
    for c in clauses:
        if not any(model.get(abs(lit), False) == (lit > 0) for lit in c):
            return False
    return True


class CDCLSolver:
    r"""
    Complete SAT search.

    Unit propagation uses two watched literals per clause;
    conflicts are analyzed to the first unique implication point
    and the learnt clause drives a non-chronological backjump.
    Branching follows variable activities with ties broken by
    the smaller variable, and the saved phase (initially False),
    so runs are deterministic. Restarts are geometric.

    Parameters
    ----------
    clauses : iterable of list of int
        Clauses over nonzero integer literals.
    num_vars : int, optional
        Largest variable; inferred from the clauses if omitted.
    deadline : float, optional
        Value of :func:`time.monotonic` after which
        :meth:`solve` raises :class:`fieldbv.Timeout`.
    """

    def __init__(self, clauses, num_vars=None, deadline=None):
        clauses = [list(c) for c in clauses]
        if num_vars is None:
            num_vars = max((abs(lit) for c in clauses for lit in c),
                           default=0)
        self.num_vars = num_vars
        n = num_vars + 1
        self.deadline = deadline
        self.value = [0] * n
        self.level = [0] * n
        self.reason = [None] * n
        self.activity = [0.0] * n
        self.phase = [False] * n
        self.trail = []
        self.trail_lim = []
        self.qhead = 0
        self.clauses = []
        self.watches = defaultdict(list)
        self.increment = 1.0
        self.ok = True
        self.stats = {'decisions': 0, 'conflicts': 0, 'propagations': 0,
                      'restarts': 0}
        self.heap = [(0.0, v) for v in range(1, n)]
        heapq.heapify(self.heap)
        for c in clauses:
            self.add_clause(c)

    def lit_value(self, lit):
        v = self.value[abs(lit)]
        return v if lit > 0 else -v

    def add_clause(self, lits):
        r"""Add an input clause at decision level 0."""
        c = []
        for lit in lits:
            if -lit in c:
                return
            if lit not in c:
                c.append(lit)
        c = [lit for lit in c if self.lit_value(lit) != -1]
        if any(self.lit_value(lit) == 1 for lit in c):
            return
        if not c:
            self.ok = False
        elif len(c) == 1:
            self._enqueue(c[0], None)
        else:
            self._attach(c)

    def _attach(self, c):
        idx = len(self.clauses)
        self.clauses.append(c)
        self.watches[c[0]].append(idx)
        self.watches[c[1]].append(idx)
        return idx

    def _enqueue(self, lit, reason):
        v = abs(lit)
        self.value[v] = 1 if lit > 0 else -1
        self.level[v] = len(self.trail_lim)
        self.reason[v] = reason
        self.trail.append(lit)

    def propagate(self):
        r"""Unit propagation; returns a conflicting clause index or None."""
        while self.qhead < len(self.trail):
            false_lit = -self.trail[self.qhead]
            self.qhead += 1
            self.stats['propagations'] += 1
            ws = self.watches[false_lit]
            kept = []
            for j, ci in enumerate(ws):
                c = self.clauses[ci]
                if c[0] == false_lit:
                    c[0], c[1] = c[1], c[0]
                if self.lit_value(c[0]) == 1:
                    kept.append(ci)
                    continue
                for k in range(2, len(c)):
                    if self.lit_value(c[k]) != -1:
                        c[1], c[k] = c[k], c[1]
                        self.watches[c[1]].append(ci)
                        break
                else:
                    kept.append(ci)
                    if self.lit_value(c[0]) == -1:
                        kept.extend(ws[j + 1:])
                        self.watches[false_lit] = kept
                        self.qhead = len(self.trail)
                        return ci
                    self._enqueue(c[0], ci)
            self.watches[false_lit] = kept
        return None

    def _bump(self, v):
        self.activity[v] += self.increment
        if self.activity[v] > 1e100:
            self.activity = [a * 1e-100 for a in self.activity]
            self.increment *= 1e-100
            self.heap = [(-self.activity[u], u)
                         for u in range(1, self.num_vars + 1)
                         if self.value[u] == 0]
            heapq.heapify(self.heap)
        elif self.value[v] == 0:
            heapq.heappush(self.heap, (-self.activity[v], v))

    def analyze(self, confl):
        r"""
        First-UIP learning.

        Returns
        -------
        learnt : list of int
            Asserting literal first, then a literal of the
            backjump level.
        level : int
            Backjump level.
        """
        current = len(self.trail_lim)
        seen = set()
        learnt = [None]
        counter = 0
        p = None
        idx = len(self.trail) - 1
        clause = self.clauses[confl]
        while True:
            for q in clause:
                if q == p:
                    continue
                v = abs(q)
                if v in seen or self.level[v] == 0:
                    continue
                seen.add(v)
                self._bump(v)
                if self.level[v] == current:
                    counter += 1
                else:
                    learnt.append(q)
            while abs(self.trail[idx]) not in seen:
                idx -= 1
            p = self.trail[idx]
            idx -= 1
            counter -= 1
            if counter == 0:
                break
            clause = self.clauses[self.reason[abs(p)]]
        learnt[0] = -p
        if len(learnt) == 1:
            return learnt, 0
        best = max(range(1, len(learnt)),
                   key=lambda i: self.level[abs(learnt[i])])
        learnt[1], learnt[best] = learnt[best], learnt[1]
        return learnt, self.level[abs(learnt[1])]

    def backtrack(self, level):
        if len(self.trail_lim) <= level:
            return
        start = self.trail_lim[level]
        for lit in self.trail[start:]:
            v = abs(lit)
            self.phase[v] = lit > 0
            self.value[v] = 0
            self.reason[v] = None
            heapq.heappush(self.heap, (-self.activity[v], v))
        del self.trail[start:]
        del self.trail_lim[level:]
        self.qhead = len(self.trail)

    def _pick(self):
        while self.heap:
            _, v = heapq.heappop(self.heap)
            if self.value[v] == 0:
                return v
        return None

    def _check_deadline(self):
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise Timeout(STAGE)

    def _result(self, status, model=None):
        logger.debug('%s after %d decisions and %d conflicts', status,
                     self.stats['decisions'], self.stats['conflicts'])
        return SatResult(status, model, self.stats)

    def solve(self):
        r"""
        Decide satisfiability.

        Returns
        -------
        :class:`SatResult`

        Raises
        ------
        Timeout
            If the deadline passes.
        """
        if not self.ok:
            return self._result('unsat')
        restart_limit = 100
        since_restart = 0
        while True:
            confl = self.propagate()
            if confl is not None:
                self.stats['conflicts'] += 1
                since_restart += 1
                if not self.trail_lim:
                    return self._result('unsat')
                learnt, level = self.analyze(confl)
                self.backtrack(level)
                if len(learnt) == 1:
                    self._enqueue(learnt[0], None)
                else:
                    self._enqueue(learnt[0], self._attach(learnt))
                self.increment /= 0.95
                if self.stats['conflicts'] % 128 == 0:
                    self._check_deadline()
                continue
            if since_restart >= restart_limit:
                self.stats['restarts'] += 1
                since_restart = 0
                restart_limit = int(restart_limit * 1.5)
                self.backtrack(0)
                continue
            v = self._pick()
            if v is None:
                model = {u: self.value[u] == 1
                         for u in range(1, self.num_vars + 1)}
                return self._result('sat', model)
            self.stats['decisions'] += 1
            if self.stats['decisions'] % 1024 == 0:
                self._check_deadline()
            self.trail_lim.append(len(self.trail))
            self._enqueue(v if self.phase[v] else -v, None)
