"""
Exception types shared by the overdurfee components.
"""


class OverpartitionParseError(ValueError):
    """Raised when overpartition or partition text cannot be parsed."""


class PreconditionError(ValueError):
    """Raised when an operation is called outside its documented domain."""


class InvariantViolation(RuntimeError):
    """Raised when a structural claim about a construction fails at runtime."""
