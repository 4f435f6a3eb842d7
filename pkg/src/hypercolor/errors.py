"""Exception types shared across the package."""


class InvalidParameters(ValueError):
    """Raised when (n, k, r, p) or related arguments fall outside their valid range."""


class InvalidHypergraph(ValueError):
    """Raised for malformed hypergraph data (bad arity, range, duplicates, bad JSON)."""


class FeasibilityError(RuntimeError):
    """Raised when an explicit enumeration would exceed its configured cap."""
