"""Exception types shared across the package."""


class SectorCoverError(Exception):
    """Base class for all package errors."""


class InvalidParametersError(SectorCoverError, ValueError):
    """Parameters fall outside a formula's domain (negative radicand, bad angle, ...)."""


class InfeasibleParametersError(SectorCoverError, ValueError):
    """Parameters are valid for the formula but the model does not admit them."""


class ConstructionError(SectorCoverError, RuntimeError):
    """No intra-pair offset gives full coverage at the requested period."""


class ConvergenceError(SectorCoverError, RuntimeError):
    """An iterative search hit its iteration cap before reaching tolerance."""


class EmptyDomainError(SectorCoverError, ValueError):
    """A search domain contains no feasible point."""
