"""Exception types shared across the package."""


class ZeipelError(Exception):
    """Base class for package errors."""


class DomainError(ZeipelError):
    """Input outside the documented domain of an operation."""


class SolverError(ZeipelError):
    """Iterative scalar solver failed to converge."""


class MapError(ZeipelError):
    """Canonical-map Newton iteration failed to converge."""


class DegenerateFrequencyError(ZeipelError):
    """Unperturbed frequency vector too close to zero for the homological solve."""


class IntegrationError(ZeipelError):
    """Numerical trajectory integration failed."""


class UsageError(ZeipelError):
    """Inconsistent arguments at a command or API boundary."""
