class InputError(ValueError):
    """Raised when arguments violate an operation's preconditions."""


class InternalError(RuntimeError):
    """Raised when a computation reaches a state that signals a bug."""
