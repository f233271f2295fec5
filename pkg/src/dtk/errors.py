"""Exception types shared across the package.

The CLI maps these onto its exit-code protocol: usage errors exit 2,
guard refusals exit 3.  An infeasible or negative answer is not an
error (exit 1, handled by the commands themselves).
"""


class UsageError(ValueError):
    """Invalid input from the caller: malformed document, bad parameter."""


class ModeMismatchError(UsageError):
    """Float and exact values were mixed within one operation."""


class GuardExceededError(RuntimeError):
    """Instance is larger than the configured guard for this solver."""


class DisconnectedError(RuntimeError):
    """A network operation required connectivity that does not hold."""

    def __init__(self, vertex, message=None):
        self.vertex = vertex
        super().__init__(message or f"vertex {vertex} is unreachable from the source")


class PrecisionError(RuntimeError):
    """An exact-mode comparison stayed indeterminate at the working precision."""
