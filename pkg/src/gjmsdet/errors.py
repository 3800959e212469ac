"""Error types shared across the library."""


class InvalidDimensionError(ValueError):
    """The sphere dimension is invalid (even, or too small)."""


class DivergentDeterminantError(ValueError):
    """The requested determinant diverges (operator order exceeds the dimension)."""
