"""Exception types shared across the package."""


class DomainError(ValueError):
    """A point lies outside the open box of its chart."""


class DegeneracyError(ValueError):
    """A metric, Levi form, or linear system is singular at a sampled point."""


class PreconditionError(ValueError):
    """A construction was invoked outside its validity range."""


class UsageError(ValueError):
    """Invalid configuration passed to the verification driver."""
