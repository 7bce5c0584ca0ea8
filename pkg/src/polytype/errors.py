"""Exception hierarchy shared by every polytype module."""


class PolytypeError(Exception):
    """Base class for all library errors."""


class GraphArgumentError(PolytypeError, ValueError):
    """An argument is outside the domain of the operation (bad vertex, bad parameter)."""


class DisconnectedGraphError(PolytypeError, ValueError):
    """A metric operation was asked for on a disconnected graph.

    Attributes:
        pair: two vertices with no path between them.
    """

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class ConstructionError(PolytypeError, RuntimeError):
    """A family constructor produced a graph that fails its own self-check.

    This always signals a bug in the constructor, never bad user input.
    """


class NotPolyhedralError(PolytypeError, ValueError):
    """Input is required to be a polyhedron but is not.

    Attributes:
        certificate: the PolyhedralityCertificate explaining the rejection.
    """

    def __init__(self, message, certificate=None):
        super().__init__(message)
        self.certificate = certificate


class FalsificationError(PolytypeError, AssertionError):
    """A computed result contradicts the classification theorems.

    Raised loudly; the CLI maps it to exit code 2.
    """


class FormatError(PolytypeError, ValueError):
    """Malformed graph6 / JSON / family-spec text."""
