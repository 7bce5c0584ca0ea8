"""Canonical graph6 strings of the exceptional triangulations.

Produced by ``tools/bootstrap_sporadic.py``: every triangulation on at most
twelve vertices in which no pair has exactly one common neighbour, minus
bipyramids and path-edge joins. The icosahedron is the remaining one and
is built directly. Indices 5..9 are the five of type {2,3,4} in
canonical-form order.
"""

SPORADIC_GRAPH6 = {
    3: r"HB]lmZR",      # {2,3}
    4: r"II\skueiW",    # {0,2,3}
    5: r"FBn^w",        # {2,3,4}
    6: r"FJn^W",        # {2,3,4}
    7: r"G?]}~[",       # {2,3,4}
    8: r"G@]u~[",       # {2,3,4}
    9: r"GK]}vK",       # {2,3,4}
    10: r"GJ]\\k",      # {0,2,3,4}
}
