"""Exception types shared across the package."""


class ParameterError(ValueError):
    """Invalid or incoherent user-supplied parameters."""


class ResourceLimitError(RuntimeError):
    """A configured size bound would be exceeded."""


class ConventionError(RuntimeError):
    """An internal consistency check failed; indicates a construction bug,
    not bad user input."""
