class PolydistError(Exception):
    """Base class for errors raised by polydist."""


class GeometryError(PolydistError, ValueError):
    """A polygon, triangle or point violates one of its invariants.

    ``rule`` names the violated invariant, e.g. ``"self-intersection"``.
    """

    def __init__(self, message, rule=None):
        super().__init__(message)
        self.rule = rule


class ResourceError(PolydistError):
    """A requested computation exceeds the configured memory budget."""

