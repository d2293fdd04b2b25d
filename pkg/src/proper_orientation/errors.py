"""Exception hierarchy shared by the library and the command line."""


class OrientationError(Exception):
    """Base class for every error raised by this package."""


class GraphError(OrientationError, ValueError):
    """A graph or orientation violates a structural invariant."""


class ParseError(OrientationError, ValueError):
    """Malformed input text (edge lists, orientations, DIMACS CNF)."""


class PreconditionError(OrientationError, ValueError):
    """An operation was called on an input outside its domain."""


class CapExceeded(OrientationError, RuntimeError):
    """The instance is larger than the configured exhaustive-search cap."""


class ReductionError(OrientationError, ValueError):
    """A certificate could not be translated through the SAT reduction."""
