"""Common-neighbour types of polyhedral graphs."""

from .errors import (
    ConstructionError,
    DisconnectedGraphError,
    FalsificationError,
    FormatError,
    GraphArgumentError,
    NotPolyhedralError,
    PolytypeError,
)
from .graph import (
    Graph,
    PairProfile,
    TypeSet,
    common_neighbors,
    contains_k2n,
    degree_sequence,
    diameter,
    eccentricity,
    has_four_cycle,
    radius,
    type_of,
)

__version__ = "0.1.0"
