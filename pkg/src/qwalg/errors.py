"""Exception hierarchy shared by every qwalg module."""


class QWError(Exception):
    """Base class for all qwalg errors."""


class AlgebraError(QWError, ValueError):
    """A table, constant, or element reference is malformed."""


class NotQWAlgebraError(QWError, ValueError):
    """An operation that needs a quantum-Wajsberg algebra got something else."""


class WidthMismatchError(QWError, ValueError):
    """A subset was paired with an algebra of a different size."""


class GateError(QWError, ValueError):
    """An exhaustive enumeration was refused because the input is too large."""


class PreconditionError(QWError, ValueError):
    """An argument violates a documented precondition (e.g. not a deductive system)."""


class NotInFamilyError(QWError, ValueError):
    """A subset is not a member of the family it was asked about."""


class FalsificationError(QWError, RuntimeError):
    """Two characterizations that must agree on QW algebras disagreed.

    On valid input this never happens; seeing it means either a bug or a
    counterexample to a published equivalence, and it is never swallowed.
    """


class ParseError(QWError, ValueError):
    def __init__(self, line: int, column: int, reason: str):
        self.line = line
        self.column = column
        self.reason = reason
        super().__init__(f"line {line}, column {column}: {reason}")


class Contradiction(QWError):
    """Propagation derived two different values for one table entry."""
