class SJDError(Exception):
    """Base class for errors raised by sjd."""


class DomainError(SJDError, ValueError):
    """A point lies outside (or on the boundary of) its chart."""


class InvariantError(SJDError, ValueError):
    """A group element violates its defining constraint."""


class UnsupportedRegimeError(SJDError):
    """A closed-form solver was asked for a regime it does not cover (e.g. Delta <= 0)."""


class SingularityError(SJDError, ArithmeticError):
    """A closed-form trajectory hit a vanishing denominator."""


class IntegrationError(SJDError, RuntimeError):
    """The numeric integrator could not proceed (step underflow, quadrature failure)."""
