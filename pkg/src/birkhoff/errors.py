"""Exception hierarchy shared by the library and the CLI."""


class BirkhoffError(Exception):
    """Base class; ``exit_code`` is what the CLI returns for it."""

    exit_code = 1


class InvalidInput(BirkhoffError, ValueError):
    exit_code = 2


class EmptyFace(BirkhoffError):
    """The zero pattern excludes every permutation matrix."""

    exit_code = 3


class PoleEncountered(BirkhoffError, ZeroDivisionError):
    """Some factor 1 - z^b vanished at the evaluation point."""

    exit_code = 2


class BudgetExceeded(BirkhoffError):
    exit_code = 4


class InternalInconsistency(BirkhoffError, ArithmeticError):
    """An exactness check failed (non-integral count, e(0) != 1, leftover pole)."""

    exit_code = 1
