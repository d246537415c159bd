"""Geometry and dynamics on the Siegel-Jacobi disk and upper half-plane."""

from sjd.errors import (
    DomainError,
    IntegrationError,
    InvariantError,
    SingularityError,
    SJDError,
    UnsupportedRegimeError,
)

__version__ = "0.1.0"

__all__ = [
    "DomainError",
    "IntegrationError",
    "InvariantError",
    "SingularityError",
    "SJDError",
    "UnsupportedRegimeError",
    "__version__",
]
