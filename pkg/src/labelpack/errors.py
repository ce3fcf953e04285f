"""Exception types shared across the package."""


class RangeError(ValueError):
    """A parameter falls outside the range an operation is defined for."""


class ExcludedInstanceError(ValueError):
    """The requested circuit instance admits no placement at all."""


class CertificateError(ValueError):
    """A certificate file or dictionary does not match the schema."""


class ConstructionError(RuntimeError):
    """A construction produced a packing its own verifier rejects."""


class NoPlacementError(ValueError):
    """No k-placement exists for the requested instance."""
