r"""
Exceptions raised by fieldbv.

Every class derives from the builtin exception that describes the
same kind of failure.
"""

__all__ = ['SortMismatch', 'ParseError', 'NonPrimeField', 'Unsupported',
           'ConstraintViolation', 'UnboundVariable', 'BudgetExceeded',
           'Timeout', 'NoRuleApplies', 'LiftFailure']


class SortMismatch(TypeError):
    r"""
    A term is not well-sorted.

    Parameters
    ----------
    path : tuple of int
        Child indices leading from the checked root
        to the offending subterm.
    message : str
    """
    def __init__(self, path, message):
        self.path = tuple(path)
        super().__init__('Sort mismatch at ' + str(list(self.path))
                         + ': ' + message)


class ParseError(ValueError):
    def __init__(self, line, col, message):
        self.line = line
        self.col = col
        self.message = message
        super().__init__(str(line) + ':' + str(col) + ': ' + message)


class NonPrimeField(ValueError):
    def __init__(self, p):
        self.p = p
        super().__init__('Field order ' + str(p) + ' is not prime.')


class Unsupported(ValueError):
    def __init__(self, feature):
        self.feature = feature
        super().__init__('Unsupported: ' + str(feature))


class ConstraintViolation(ValueError):
    pass


class UnboundVariable(KeyError):
    def __init__(self, name):
        self.name = name
        super().__init__(name)

    def __str__(self):
        return 'Variable ' + repr(self.name) + ' has no value.'


class BudgetExceeded(RuntimeError):
    def __init__(self, count, budget):
        self.count = count
        self.budget = budget
        super().__init__('Enumeration of ' + str(count)
                         + ' assignments exceeds the budget of '
                         + str(budget) + '.')


class Timeout(RuntimeError):
    def __init__(self, stage):
        self.stage = stage
        super().__init__('Timeout during ' + str(stage) + '.')


class NoRuleApplies(RuntimeError):
    pass


class LiftFailure(RuntimeError):
    pass
