r"""
Countermodels of the original problem from SAT models.
"""
from .._constants import ATOM_SUFFIX
from ..errors import LiftFailure

__all__ = ['lift_countermodel']


def lift_countermodel(model, circuit, atomizer, declarations=None):
    r"""
    Variable assignment read off a SAT model.

    Parameters
    ----------
    model : dict
        Net assignment of a satisfiable :class:`Circuit`.
    circuit : :class:`Circuit`
    atomizer : :class:`fieldbv.BVAtomizer`
        Relates original variables to their bit-vector atoms.
    declarations : dict, optional
        Declared variables; those absent from the circuit are 0.

    Returns
    -------
    dict
        Maps variable names to naturals; field variables get
        their canonical representative in :math:`[0, P)`.

    Raises
    ------
    LiftFailure
        If an atom exceeds its hypothesis bound or the field size.
    """
    assignment = {}
    for name, (v, atom, bound) in atomizer.canonical.items():
        bits = circuit.bit_vars.get(atom.name)
        value = 0 if bits is None else circuit.bv_value(bits, model)
        if bound is not None and value > bound:
            raise LiftFailure(atom.name + ' = ' + str(value)
                              + ' exceeds its bound ' + str(bound))
        if v.sort.is_ff and value >= v.sort.param:
            raise LiftFailure(atom.name + ' = ' + str(value)
                              + ' is outside ' + str(v.sort))
        assignment[name] = value
    for name, bits in circuit.bit_vars.items():
        if not name.endswith(ATOM_SUFFIX):
            assignment[name] = circuit.bv_value(bits, model)
    for name in (declarations or {}):
        assignment.setdefault(name, 0)
    return assignment
