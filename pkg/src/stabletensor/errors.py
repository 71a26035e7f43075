"""Exception hierarchy. Each class maps to one CLI exit code."""


class StableTensorError(Exception):
    exit_code = 1


class InputError(StableTensorError, ValueError):
    """Malformed or inconsistent input."""

    exit_code = 2


class OutOfStableRangeError(StableTensorError):
    """The requested rank is below the range where the Pieri engine applies."""

    exit_code = 3

    def __init__(self, message, min_rank):
        super().__init__(f"{message} (minimal admissible rank: {min_rank})")
        self.min_rank = min_rank


class ConsistencyError(StableTensorError, AssertionError):
    """An internal invariant failed. Always a bug, never clamped."""

    exit_code = 4


class ResourceError(StableTensorError):
    exit_code = 5
