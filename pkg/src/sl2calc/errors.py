"""Exception types shared across the package."""


class ParameterError(ValueError):
    """A documented precondition on the parameters was violated."""


class FieldMismatchError(ParameterError):
    """Two values from different field contexts were combined."""


class UnsupportedTwistWindowError(ParameterError):
    """Both cohomology rows survive in the requested twist window."""


class ResourceGuardError(RuntimeError):
    """A brute-force computation exceeded its documented size limits."""
