"""Domain errors for fatgraph."""


class FatGraphError(Exception):
    """Base exception for all fatgraph errors."""
    pass


class ConfigError(FatGraphError):
    """Configuration-related errors."""
    pass


class InvalidInputError(FatGraphError):
    """Malformed instances, graphs, partitions or matchings."""
    pass


class UnsupportedError(FatGraphError):
    """Requested operation is not available for this input."""
    pass


class UnsupportedDimensionError(UnsupportedError):
    """Operation requires a higher ambient dimension."""

    def __init__(self, dimension: int, minimum: int, operation: str = ""):
        self.dimension = dimension
        self.minimum = minimum
        self.operation = operation
        message = f"Dimension {dimension} is not supported; at least {minimum} is required"
        if operation:
            message = f"{operation}: {message}"
        super().__init__(message)


class OracleLimitError(FatGraphError):
    """Brute-force oracle refused an instance above its size guard."""

    def __init__(self, n: int, limit: int, problem: str = ""):
        self.n = n
        self.limit = limit
        self.problem = problem
        message = f"Instance with {n} vertices exceeds the brute-force limit of {limit}"
        if problem:
            message = f"Problem '{problem}': {message}"
        super().__init__(message)


class VerificationError(FatGraphError):
    """A computed artifact failed its own verification."""
    pass


class WiringError(FatGraphError):
    """Internal wiring invariant was broken during routing."""
    pass
