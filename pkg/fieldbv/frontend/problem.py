r"""
Verification problems and verdicts.
"""
import dataclasses
from ..term.term import sort_check, free_vars
from ..term.context import ProofContext
from ..term.printer import pretty_print
from ..errors import SortMismatch, UnboundVariable

__all__ = ['Problem', 'Verdict', 'pretty_print_problem', 'EXIT_CODES']

EXIT_CODES = {'valid': 0, 'invalid': 1, 'unknown': 2}


@dataclasses.dataclass
class Problem:
    r"""
    Validity query :math:`H \Rightarrow G` over one prime field.

    Parameters
    ----------
    field : :class:`fieldbv.Sort`, optional
        ``FF(p)``; None if no field variable is declared.
    declarations : dict
        Maps variable names to sorts, in declaration order.
    hyps : list of :class:`fieldbv.Term`
    goals : list of :class:`fieldbv.Term`
        The problem is valid iff every assignment satisfying all
        hypotheses satisfies all goals.
    options : dict
        Free-form solver options carried with the problem.
    name : str, optional
    """
    field: object = None
    declarations: dict = dataclasses.field(default_factory=dict)
    hyps: list = dataclasses.field(default_factory=list)
    goals: list = dataclasses.field(default_factory=list)
    options: dict = dataclasses.field(default_factory=dict)
    name: str = None

    @property
    def p(self):
        return None if self.field is None else self.field.param

    def check(self):
        r"""
        Sort-check every formula against the declarations.

        Raises
        ------
        SortMismatch
            If a formula is ill-sorted or not Boolean, or uses
            a second field.
        UnboundVariable
            If a formula uses an undeclared variable.
        """
        for f in self.hyps + self.goals:
            if not sort_check(f).is_bool:
                raise SortMismatch((), 'formula of sort ' + str(f.sort))
            for name, sort in free_vars(f).items():
                if name not in self.declarations:
                    raise UnboundVariable(name)
                if sort != self.declarations[name]:
                    raise SortMismatch((), name + ' used at ' + str(sort)
                                       + ', declared '
                                       + str(self.declarations[name]))
                if sort.is_ff and sort != self.field:
                    raise SortMismatch((), 'second field ' + str(sort))
        return self

    def context(self, deadline=None):
        r"""Fresh :class:`fieldbv.ProofContext` of the problem."""
        return ProofContext(self.goals, self.hyps, self.field, deadline)


def pretty_print_problem(problem):
    r"""
    Problem file text read back by :func:`fieldbv.parse_problem`.

    Examples
    --------
    .. doctest::

        >>> import fieldbv as fbv
        >>> x = fbv.var('x', fbv.FF(7))
        >>> pb = fbv.Problem(fbv.FF(7), {'x': fbv.FF(7)},
        ...                  goals=[fbv.leq(fbv.to_nat(x), fbv.const(6))])
        >>> print(fbv.pretty_print_problem(pb))
        (set-field 7)
        (declare-ff x)
        (goal (<= (to-nat x) 6))
    """
    lines = []
    if problem.name:
        lines.append('; ' + problem.name)
    if problem.field is not None:
        lines.append('(set-field ' + str(problem.field.param) + ')')
    for name, sort in problem.declarations.items():
        if sort.is_ff:
            lines.append('(declare-ff ' + name + ')')
        elif sort.is_bv:
            lines.append('(declare-bv ' + name + ' '
                         + str(sort.param) + ')')
        else:
            lines.append('(declare-nat ' + name + ')')
    for h in problem.hyps:
        lines.append('(assert-hyp ' + pretty_print(h) + ')')
    for g in problem.goals:
        lines.append('(goal ' + pretty_print(g) + ')')
    return '\n'.join(lines)


@dataclasses.dataclass
class Verdict:
    r"""
    Result of :func:`fieldbv.run_pipeline`.

    Attributes
    ----------
    status : str
        ``'valid'``, ``'invalid'`` or ``'unknown'``.
    counterexample : dict, optional
        Assignment falsifying the original problem
        (``status == 'invalid'`` only).
    trace : :class:`fieldbv.RuleTrace`
    timing : dict
        Seconds spent per stage.
    undischarged : list of :class:`fieldbv.Term`
        Goals that were neither proven by range analysis nor
        reduced to bit-vectors.
    width : int, optional
        Global bit-vector width.
    audit_failures : list of :class:`fieldbv.Term`
        Range-analysis results the oracle disagreed with.
    reason : str, optional
        Why the status is ``'unknown'``.
    """
    status: str
    counterexample: dict = None
    trace: object = None
    timing: dict = dataclasses.field(default_factory=dict)
    undischarged: list = dataclasses.field(default_factory=list)
    width: int = None
    audit_failures: list = dataclasses.field(default_factory=list)
    reason: str = None
    name: str = None

    @property
    def exit_code(self):
        return EXIT_CODES[self.status]
