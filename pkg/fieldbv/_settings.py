r"""
Module-global solver settings.

Each setting has a ``set_`` and a ``get_`` function.
After a ``set_`` call every subsequent fieldbv command
uses the new value.
"""
from warnings import warn

__all__ = ['set_case_splits', 'get_case_splits',
           'set_ineq_fallback', 'get_ineq_fallback',
           'set_countermodel_check', 'get_countermodel_check',
           'set_audit', 'get_audit',
           'set_oracle_budget', 'get_oracle_budget',
           'set_nat_domain', 'get_nat_domain',
           'set_sat_backend', 'get_sat_backend',
           'set_external_solver', 'get_external_solver',
           'set_timeout', 'get_timeout',
           'set_memory_limit', 'get_memory_limit']

__case_splits = True
__ineq_fallback = True
__countermodel_check = True
__audit = False
__oracle_budget = 2**20
__nat_domain = 16
__sat_backend = 'internal'
__external_solver = None
__timeout = 300.0
__memory_limit = 8 * 2**30


def _check_bool(name, value):
    if not isinstance(value, bool):
        raise ValueError('Unexpected value of `' + name + '`: '
                         + str(value) + '. Expected True or False.')


def _check_positive(name, value):
    if value is None or value <= 0:
        raise ValueError('Unexpected value of `' + name + '`: '
                         + str(value) + '. Expected a positive number.')


def set_case_splits(case_splits):
    r"""
    Enable or disable case splitting in range analysis.

    Case splitting comprises the ``ineqCases`` and
    ``ineqXOR`` rules.

    Parameters
    ----------
    case_splits : bool
    """
    _check_bool('case_splits', case_splits)
    global __case_splits
    __case_splits = case_splits


def get_case_splits():
    return __case_splits


def set_ineq_fallback(ineq_fallback):
    r"""
    Carry undischarged goal inequalities into bit-blasting.

    When range analysis cannot prove an inequality of the
    original goal and ``ineq_fallback`` is ``True``,
    the inequality is converted to bit-vectors
    (if both sides provably fit the global width)
    and decided together with the remaining equalities.
    Otherwise the verdict is ``unknown``.

    Parameters
    ----------
    ineq_fallback : bool
    """
    _check_bool('ineq_fallback', ineq_fallback)
    global __ineq_fallback
    __ineq_fallback = ineq_fallback


def get_ineq_fallback():
    return __ineq_fallback


def set_countermodel_check(countermodel_check):
    r"""
    Validate SAT countermodels against the original problem.

    Parameters
    ----------
    countermodel_check : bool
        If ``False``, a satisfiable negated goal always
        yields ``unknown``.
    """
    _check_bool('countermodel_check', countermodel_check)
    global __countermodel_check
    __countermodel_check = countermodel_check


def get_countermodel_check():
    return __countermodel_check


def set_audit(audit):
    r"""
    Audit range analysis and rule premises by enumeration.

    Every inequality proved by range analysis is checked with
    :func:`fieldbv.entails`. Discrepancies are reported through
    :func:`warnings.warn` and stored in the verdict.
    Audits whose enumeration exceeds the oracle budget are skipped.

    Parameters
    ----------
    audit : bool
    """
    _check_bool('audit', audit)
    global __audit
    __audit = audit


def get_audit():
    return __audit


def set_oracle_budget(budget):
    _check_positive('budget', budget)
    global __oracle_budget
    __oracle_budget = int(budget)


def get_oracle_budget():
    return __oracle_budget


def set_nat_domain(size):
    r"""
    Number of values enumerated for natural number variables.

    The oracle enumerates a variable of sort :math:`\mathbb{N}`
    over :math:`\{0, \ldots, size - 1\}`.

    Parameters
    ----------
    size : int
    """
    _check_positive('size', size)
    global __nat_domain
    __nat_domain = int(size)


def get_nat_domain():
    return __nat_domain


def set_sat_backend(backend):
    r"""
    Select the SAT solver used by bit-blasting.

    Parameters
    ----------
    backend : {'internal', 'external'}
        ``'external'`` runs the command given to
        :func:`set_external_solver` on a DIMACS file.
    """
    new_backend = backend.lower().strip()
    if new_backend not in ('internal', 'external'):
        raise ValueError('Unexpected value of `backend`: '
                         + backend + ". Expected a value in "
                         + "['internal', 'external'].")

    if new_backend == 'external' and __external_solver is None:
        warn("No external solver set. "
             + "Call `set_external_solver` before solving.")

    global __sat_backend
    __sat_backend = new_backend


def get_sat_backend():
    return __sat_backend


def set_external_solver(command):
    r"""
    Command of an external DIMACS SAT solver.

    Parameters
    ----------
    command : list of str or None
        The CNF file name is appended as last argument.
        The solver must print the model in ``v``-lines.
    """
    global __external_solver
    __external_solver = None if command is None else list(command)


def get_external_solver():
    return __external_solver


def set_timeout(seconds):
    _check_positive('seconds', seconds)
    global __timeout
    __timeout = float(seconds)


def get_timeout():
    return __timeout


def set_memory_limit(num_bytes):
    _check_positive('num_bytes', num_bytes)
    global __memory_limit
    __memory_limit = int(num_bytes)


def get_memory_limit():
    return __memory_limit
