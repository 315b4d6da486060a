"""Exception hierarchy.

Each class carries the CLI exit code it maps to.
"""


class SoficError(Exception):
    exit_code = 1


class InputError(SoficError, ValueError):
    """Malformed or invalid input (graph file, group table, label map)."""

    exit_code = 1


class AssumptionError(SoficError):
    """A mathematical precondition does not hold (reducible, zero entropy, ...)."""

    exit_code = 2


class NumericalError(SoficError, ArithmeticError):
    exit_code = 3


class BudgetError(SoficError):
    """A size guard was exceeded; nothing is ever silently truncated."""

    exit_code = 4
