"""Recover the eight exceptional triangulations by exhaustive search.

Scans every triangulation on 4..12 vertices, keeps those in which no pair
of vertices has exactly one common neighbour, and discards bipyramids and
joins of a path with an edge. What remains is printed grouped by type, in
canonical-form order, ready to paste into ``sporadic_data.py``.
"""

from polytype.canonical import canonical_form
from polytype.enumeration import triangulations
from polytype.families import bipyramid, t_graph, icosahedron
from polytype.graph import type_of


def main():
    known = {canonical_form(bipyramid(k)) for k in range(3, 11)}
    known |= {canonical_form(t_graph(k)) for k in range(2, 11)}
    found = []
    for n in range(4, 13):
        for g in triangulations(n):
            t = type_of(g)
            if 1 in t:
                continue
            form = canonical_form(g)
            if form in known:
                continue
            found.append((str(t), form))
    ico = canonical_form(icosahedron())
    for t, form in found:
        print(t, form.decode(), "(icosahedron)" if form == ico else "")


if __name__ == "__main__":
    main()
