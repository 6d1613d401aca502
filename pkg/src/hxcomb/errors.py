"""Exception hierarchy shared by every hxcomb module."""


class HypergraphError(ValueError):
    """Base class for all hxcomb errors."""


class InvalidArityError(HypergraphError):
    pass


class InvalidVertexError(HypergraphError):
    pass


class InvalidArgumentError(HypergraphError):
    pass


class InvalidParametersError(HypergraphError):
    pass


class GroundSetMismatchError(HypergraphError):
    pass


class PreconditionError(HypergraphError):
    pass


class GeneratorExhaustedError(HypergraphError):
    pass


class InstanceTooLargeError(HypergraphError):
    pass


class FormatError(HypergraphError):
    """Malformed family or certificate file."""
