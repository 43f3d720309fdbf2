"""Typed errors shared across the toolkit.

PreconditionError subclasses mark calls outside an operation's documented
domain (the CLI maps them to exit code 2).  Anything else that escapes is an
internal failure (exit code 3).
"""


class PreconditionError(ValueError):
    """An operation was invoked outside its documented domain."""


class NotEffective(PreconditionError):
    pass


class NotSmoothMember(PreconditionError):
    pass


class NonPositiveDegree(PreconditionError):
    pass


class NotALine(PreconditionError):
    pass


class InvalidK(PreconditionError):
    pass


class DprimeNotNef(PreconditionError):
    pass


class GenusOutOfHodgeRange(PreconditionError):
    pass


class DegreeTooSmall(PreconditionError):
    pass


class DegeneratePoints(RuntimeError):
    """Point sampling failed the general-position checks ten times running."""
