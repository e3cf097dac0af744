"""Exception types shared across the package."""


class CapacityError(ValueError):
    """Requested atom count exceeds what an operation supports."""


class SubspaceError(ValueError):
    """A product-space state is not permutation symmetric."""


class NormalizationError(ValueError):
    """A state that must be normalized is not (or cannot be)."""
