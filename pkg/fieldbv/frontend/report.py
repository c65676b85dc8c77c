r"""
Human and line-oriented rendering of verdicts.
"""
from ..term.printer import pretty_print
from .._constants import STAGES

__all__ = ['emit_report']

_FORMATS = ('human', 'lines')


def _human(verdict):
    out = []
    head = verdict.status
    if verdict.name:
        head = verdict.name + ': ' + head
    if verdict.reason:
        head += ' (' + verdict.reason + ')'
    out.append(head)
    if verdict.width is not None:
        out.append('  width: ' + str(verdict.width))

    total = sum(verdict.timing.values())
    if verdict.timing:
        out.append('  time: {:.3f} s'.format(total))
        for stage in STAGES:
            if stage in verdict.timing:
                out.append('    {:<15}{:.3f} s'.format(
                    stage, verdict.timing[stage]))

    if verdict.trace is not None and len(verdict.trace):
        out.append('  rules:')
        counts = verdict.trace.rule_counts()
        for rule in sorted(counts):
            out.append('    {:<19}{}'.format(rule, counts[rule]))

    if verdict.counterexample:
        out.append('  counterexample:')
        for name in sorted(verdict.counterexample):
            out.append('    ' + name + ' = '
                       + str(verdict.counterexample[name]))
    for g in verdict.undischarged:
        out.append('  undischarged: ' + pretty_print(g))
    for g in verdict.audit_failures:
        out.append('  audit failure: ' + pretty_print(g))
    return '\n'.join(out) + '\n'


def _lines(verdict):
    out = []
    if verdict.name:
        out.append('name=' + verdict.name)
    out.append('status=' + verdict.status)
    if verdict.reason:
        out.append('reason=' + verdict.reason)
    if verdict.width is not None:
        out.append('width=' + str(verdict.width))
    for stage in STAGES:
        if stage in verdict.timing:
            out.append('time.' + stage + '={:.6f}'.format(
                verdict.timing[stage]))
    if verdict.trace is not None:
        counts = verdict.trace.rule_counts()
        for rule in sorted(counts):
            out.append('rule.' + rule + '=' + str(counts[rule]))
    for g in verdict.undischarged:
        out.append('undischarged=' + pretty_print(g))
    if verdict.counterexample:
        for name in sorted(verdict.counterexample):
            out.append('counterexample.' + name + '='
                       + str(verdict.counterexample[name]))
    for g in verdict.audit_failures:
        out.append('audit_failure=' + pretty_print(g))
    return '\n'.join(out) + '\n'


def emit_report(verdict, fmt='human'):
    r"""
    Render a verdict.

    Parameters
    ----------
    verdict : :class:`fieldbv.Verdict`
    fmt : {'human', 'lines'}, default='human'
        ``'human'`` shows the status, time per stage and rule
        application counts. ``'lines'`` writes one ``key=value``
        pair per line: ``status``, ``width``, ``time.<stage>``,
        ``rule.<name>``, ``undischarged``,
        ``counterexample.<variable>`` and ``audit_failure``.

    Returns
    -------
    str

    Raises
    ------
    ValueError
        If ``fmt`` is unknown.
    """
    fmt = fmt.lower().strip()
    if fmt == 'human':
        return _human(verdict)
    if fmt == 'lines':
        return _lines(verdict)
    raise ValueError('Unexpected value of `fmt`: ' + fmt
                     + '. Expected one of ' + str(_FORMATS) + '.')
