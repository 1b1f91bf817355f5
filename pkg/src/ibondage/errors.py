"""Exception hierarchy shared by all modules.

The CLI maps these onto exit codes: ``DomainError`` -> 1,
``TheoremViolation`` -> 2, ``InputError`` -> 3.
"""

from __future__ import annotations


class IBondageError(Exception):
    """Base class for every error raised by this package."""


class InputError(IBondageError):
    """Malformed or unreadable input (parse failures, bad rotations)."""


class ParseError(InputError):
    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class SelfLoopError(ParseError):
    pass


class VertexRangeError(InputError):
    pass


class InconsistentRotation(InputError):
    pass


class DomainError(IBondageError):
    """The input is well formed but outside the operation's domain."""


class EmptyGraphError(DomainError):
    pass


class NonPlanarError(DomainError):
    pass


class DisconnectedError(DomainError):
    pass


class ClassMismatch(DomainError):
    pass


class SchemeMismatch(DomainError):
    pass


class InfeasibleSpec(DomainError):
    pass


class RoleEdgeMissing(DomainError):
    """A witness references an edge that is not in the graph."""


class TheoremViolation(IBondageError):
    """A counterexample candidate to one of the structural theorems.

    Never caught inside the package; carries enough state to reproduce.
    """

    def __init__(self, message: str, state: dict | None = None) -> None:
        self.state = state or {}
        super().__init__(message)
