# pyright: strict

class CfdimError(Exception):
    pass

class ParameterError(CfdimError, ValueError):
    pass

class RangeError(ParameterError):
    pass

class EmptyAlphabetError(ParameterError):
    pass

class OutOfTheoremRangeError(RangeError):
    pass

class AlphabetSyntaxError(ParameterError):
    pass

class DomainError(CfdimError, ValueError):
    """Evaluation point outside [0, 1] or outside a function's domain."""
    pass

class PositivityError(CfdimError, ValueError):
    pass

class ContainmentError(CfdimError):
    pass

class ConditionInapplicableError(CfdimError):
    pass

class UnsupportedError(CfdimError):
    pass

class DivergentTailError(CfdimError, ArithmeticError):
    """The tail sum does not converge at the requested exponent."""
    pass

class NoBreakPointError(CfdimError):
    pass

class InconclusiveError(CfdimError):
    pass

class SchemaError(CfdimError):
    pass
