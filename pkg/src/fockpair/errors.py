"""Exception types shared across the package."""


class FockpairError(Exception):
    """Base class for errors raised by this package."""


class DimensionMismatch(FockpairError):
    """Operands live over different underlying spaces or have wrong shapes."""


class GuardExceeded(FockpairError):
    """A combinatorial oracle or expansion was asked for beyond its size guard."""


class InsufficientHorizon(FockpairError):
    """A truncated series was evaluated against data beyond its stored degrees."""


class DomainError(FockpairError):
    """An operator lies outside the domain required by a closed-form evaluation."""
