"""Exception taxonomy.

Two families: InputError covers malformed data handed to us (bad syntax,
wrong shapes, unknown names), MathError covers computations that cannot
proceed (singular matrices, vanishing denominators).  The CLI maps the
former to exit code 2 and the latter to exit code 3.
"""


class HomalgError(Exception):
    pass


class InputError(HomalgError):
    pass


class MathError(HomalgError):
    pass


class ZeroDenominator(MathError):
    """A scalar was built with denominator identically zero."""


class DivisionByZero(MathError):
    """Division of a scalar by the zero scalar."""


class Singular(MathError):
    """Matrix inversion or linear solve hit a singular matrix."""


class DenominatorVanishes(MathError):
    """A parameter binding makes a recorded denominator zero."""


class DenominatorAssumption(MathError):
    """Strict mode refused a nonconstant denominator (rerun with --assume-nonzero)."""


class ShapeMismatch(InputError):
    pass


class DuplicateLabel(InputError):
    pass


class UnknownLabel(InputError):
    pass


class UnknownParameter(InputError):
    pass


class ParseError(InputError):
    """Syntax error in scalar or identity text; carries the offset."""

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class SortError(InputError):
    """An identity mixes algebra-sorted and module-sorted subexpressions."""


class NotMultilinear(InputError):
    """An identity has a monomial where some variable is missing or repeated."""


class MissingProduct(InputError):
    pass


class MissingAction(InputError):
    pass


class UnknownExample(InputError):
    pass
