"""Exception hierarchy shared by the library and the CLI."""


class PowerCmpError(Exception):
    """Base class for all errors raised by powercmp."""


class ValidationError(PowerCmpError, ValueError):
    """Input does not describe a well-formed game or instance."""


class EmptyGameError(ValidationError):
    pass


class NegativeWeightError(ValidationError):
    pass


class NegativeQuotaError(ValidationError):
    pass


class PlayerIndexError(ValidationError, IndexError):
    """A 1-based player index falls outside 1..n."""


class DegenerateInstanceError(ValidationError):
    """An instance the requested reduction cannot encode (e.g. an empty family)."""


class CapacityError(PowerCmpError):
    """The requested exact computation exceeds the declared capacity of its backend."""
