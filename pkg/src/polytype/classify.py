"""Place a polyhedron in the complete classification of common-neighbour types.

The entry points are :func:`classify`, which computes the type, matches it
against the finite list of admissible type patterns and identifies named
families by reconstruction plus isomorphism, and :func:`verify_lemmas`,
which evaluates every structural statement about types that applies to a
given polyhedron and reports pass, fail or n/a for each.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import networkx as nx

from . import families
from .canonical import MAX_ORDER, canonical_form
from .errors import ConstructionError, FalsificationError, GraphArgumentError, NotPolyhedralError
from .graph import (
    Graph,
    PairProfile,
    TypeSet,
    contains_k2n,
    degree_sequence,
    dominating_vertices,
    eccentricities,
    extreme_pairs,
    has_four_cycle,
    type_of,
)
from .planarity import (
    Embedding,
    PolyhedralityCertificate,
    is_polyhedron,
    plane_neighbourhood,
    separating_set,
)

IMPOSSIBLE = "impossible"


# ---------------------------------------------------------------- rows

@dataclass(frozen=True)
class Row:
    """One admissible type pattern.

    ``id`` is a stable machine name, ``schema`` the pattern in set notation
    and ``members`` what is known about the polyhedra of that type.
    """

    id: str
    schema: str
    members: str
    has_one: bool

    def to_json(self) -> dict:
        return {"id": self.id, "schema": self.schema, "members": self.members}


def _tail(values, prefix, n):
    """``values`` is ``prefix`` plus a non-empty set of integers ``>= n``."""
    rest = values - prefix
    return prefix <= values and bool(rest) and min(rest) >= n


def _exact(s):
    s = frozenset(s)
    return lambda a: a == s


ROWS: tuple[tuple[Row, object], ...] = (
    (Row("no1:2", "{2}", "tetrahedron", False), _exact({2})),
    (Row("no1:0,2", "{0,2}", "cube, icosahedron", False), _exact({0, 2})),
    (Row("no1:2,3", "{2,3}", "triangular bipyramid, one sporadic triangulation", False), _exact({2, 3})),
    (Row("no1:2,4", "{2,4}", "octahedron", False), _exact({2, 4})),
    (Row("no1:0,2,3", "{0,2,3}", "one sporadic triangulation", False), _exact({0, 2, 3})),
    (Row("no1:2,3,4", "{2,3,4}", "T_4 and five sporadic triangulations", False), _exact({2, 3, 4})),
    (Row("no1:2,3,l", "{2,3,l}, l>=5", "l-gonal bipyramid, T_l", False),
     lambda a: len(a) == 3 and {2, 3} <= a and max(a) >= 5),
    (Row("no1:0,2,3,4", "{0,2,3,4}", "one sporadic triangulation", False), _exact({0, 2, 3, 4})),
    (Row("one:1,2", "{1,2}", "pyramid on >= 6 vertices, or p <= 24", True), _exact({1, 2})),
    (Row("one:1,2,3", "{1,2,3}", "W3 member, or p <= 47", True), _exact({1, 2, 3})),
    (Row("one:1,2,4", "{1,2,4}", "W4 member, or p <= 78", True), _exact({1, 2, 4})),
    (Row("one:1,2,even", "{1,2,l}, even l>=6", "exactly B_l and B'_l", True),
     lambda a: len(a) == 3 and {1, 2} <= a and max(a) >= 6 and max(a) % 2 == 0),
    (Row("one:1,2,3+A4", "{1,2,3} + A'_4", "infinitely many for each A'_4", True),
     lambda a: _tail(a, frozenset({1, 2, 3}), 4)),
    (Row("one:1,2,4+A5", "{1,2,4} + A'_5", "infinitely many for each A'_5", True),
     lambda a: _tail(a, frozenset({1, 2, 4}), 5)),
    (Row("one:0,1", "{0,1}", "exactly the polyhedra without 4-cycles", True), _exact({0, 1})),
    (Row("one:0,1,2", "{0,1,2}", "infinitely many", True), _exact({0, 1, 2})),
    (Row("one:0,1,2+A3", "{0,1,2} + A'_3", "infinitely many for each A'_3", True),
     lambda a: _tail(a, frozenset({0, 1, 2}), 3)),
)


def matching_rows(type_: TypeSet | set) -> list[Row]:
    """Every row whose pattern accepts ``type_``; the rows are disjoint, so at most one."""
    a = frozenset(type_)
    return [row for row, pred in ROWS if pred(a)]


def match_tables(type_: TypeSet | set) -> Row | str:
    rows = matching_rows(type_)
    if len(rows) > 1:
        raise FalsificationError(f"type {sorted(type_)} matches several rows: {[r.id for r in rows]}")
    return rows[0] if rows else IMPOSSIBLE


# ---------------------------------------------------------------- families

@lru_cache(maxsize=None)
def _form(kind: str, k: int) -> bytes:
    return canonical_form(families.FamilySpec(kind, (k,)).build())


def _sporadic_candidates(p):
    out = []
    for i in range(1, 11):
        if families.sporadic(i).p == p:
            out.append(("s", i))
    return out


def _nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.p))
    h.add_edges_from(g.edges())
    return h


def _same_graph(g: Graph, h: Graph) -> bool:
    """Isomorphism test: canonical forms up to ``MAX_ORDER`` vertices, VF2 above that."""
    if g.p != h.p or g.q != h.q or degree_sequence(g) != degree_sequence(h):
        return False
    if g.p <= MAX_ORDER:
        return canonical_form(g) == canonical_form(h)
    return nx.is_isomorphic(_nx(g), _nx(h))


def _first_match(g: Graph, candidates) -> str | None:
    if g.p > MAX_ORDER:
        for kind, k in candidates:
            if _same_graph(g, families.FamilySpec(kind, (k,)).build()):
                return f"{kind}:{k}"
        return None
    form = None
    for kind, k in candidates:
        if form is None:
            form = canonical_form(g)
        if _form(kind, k) == form:
            return f"{kind}:{k}"
    return None


def _no_one_candidates(g: Graph):
    """Named polyhedra of order ``p`` that have no pair sharing exactly one neighbour."""
    p = g.p
    out = []
    if p >= 5:
        out.append(("bipyr", p - 2))
    if p >= 4:
        out.append(("t", p - 2))
    return out + _sporadic_candidates(p)


def _base_cycle(g: Graph, emb: Embedding, u: int) -> list[int] | None:
    """The cycle of ``G - u`` read off the rotation at the dominating vertex ``u``."""
    cyc = list(emb.rotation[u])
    if len(cyc) != g.p - 1:
        return None
    for k, x in enumerate(cyc):
        if not g.has_edge(x, cyc[(k + 1) % len(cyc)]):
            return None
    return cyc


def _added_edges(g: Graph, u: int, base: list[int]):
    n = len(base)
    pos = {x: k for k, x in enumerate(base)}
    rim = {frozenset((base[k], base[(k + 1) % n])) for k in range(n)}
    return [
        (pos[a], pos[b]) for a, b in g.edges()
        if u not in (a, b) and frozenset((a, b)) not in rim
    ], pos


def _chord_cycles(n, chords):
    adj = {}
    for a, b in chords:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    if any(len(v) != 2 for v in adj.values()):
        return None
    seen, cycles = set(), []
    for start in sorted(adj):
        if start in seen:
            continue
        cyc, prev, cur = [start], None, start
        seen.add(start)
        while True:
            nxt = [w for w in adj[cur] if w != prev]
            nxt = nxt[0] if prev is not None else min(adj[cur])
            if nxt == start:
                break
            cyc.append(nxt)
            seen.add(nxt)
            prev, cur = cur, nxt
        cycles.append(cyc)
    return cycles


def _rebuilt_member(g: Graph, emb: Embedding, u: int, kind: str) -> str | None:
    """Rebuild ``g`` as a W3 or W4 member from the base cycle at ``u``.

    The constructor validates every defining clause, so a successful
    rebuild that is isomorphic to ``g`` is a membership proof. A failure is
    returned as ``None`` and left to the caller to judge.
    """
    base = _base_cycle(g, emb, u)
    if base is None:
        return None
    n = len(base)
    chords, _ = _added_edges(g, u, base)
    # the label should not depend on where the base cycle was entered, so take the
    # smallest chord list over every rotation and reflection of the base
    views = []
    for shift in range(n):
        for sign in (1, -1):
            views.append(sorted(tuple(sorted(((sign * x + shift) % n for x in e))) for e in chords))
    chords = min(views)
    try:
        if kind == "W3":
            spec = families.FamilySpec("w3", (n, tuple(chords)))
        else:
            cycles = _chord_cycles(n, chords)
            if cycles is None:
                return None
            # non-crossing chord cycles visit their vertices in base order
            spec = families.FamilySpec("w4", (n, tuple(sorted(tuple(sorted(c)) for c in cycles))))
        h = spec.build()
    except (GraphArgumentError, ConstructionError):
        return None
    return str(spec) if _same_graph(g, h) else None


# ---------------------------------------------------------------- radius 1

def _is_t_graph(g: Graph) -> bool:
    return g.p >= 4 and g.q == 3 * g.p - 6 and _first_match(g, [("t", g.p - 2)]) is not None


def _in_no_one_family(g: Graph) -> bool:
    return _first_match(g, _no_one_candidates(g)) is not None


def radius1_type(g: Graph, emb: Embedding | None = None) -> TypeSet:
    """Type of a radius-1 polyhedron from its degrees and one 4-cycle test.

    With ``u`` the dominating vertex, the type is ``{1,2}`` plus
    ``deg(v) - 1`` over ``v != u``, together with 3 exactly when ``G - u``
    has a 4-cycle. Graphs with no pair sharing exactly one neighbour are
    outside the formula's range and rejected. When an embedding is given
    the rotation at ``u`` must close up into a Hamiltonian cycle of
    ``G - u``.
    """
    dom = dominating_vertices(g)
    if not dom:
        raise GraphArgumentError("radius1_type needs a graph of radius 1")
    if len(dom) > 1 or _in_no_one_family(g):
        raise GraphArgumentError("radius1_type does not apply to the polyhedra without a pair sharing one neighbour")
    u = dom[0]
    if emb is not None and _base_cycle(g, emb, u) is None:
        raise GraphArgumentError("the rotation at the dominating vertex is not a cycle of G - u")
    values = {1, 2} | {g.degree(v) - 1 for v in range(g.p) if v != u}
    if has_four_cycle(g.delete_vertices([u])):
        values.add(3)
    return TypeSet(values)


# ---------------------------------------------------------------- lemmas

PASS, FAIL, NA = "pass", "fail", "n/a"


@dataclass
class LemmaReport:
    results: list[tuple[str, str, str]] = field(default_factory=list)

    def add(self, name: str, status: str, detail: str = "") -> None:
        self.results.append((name, status, detail))

    def check(self, name: str, applicable: bool, holds, detail: str = "") -> None:
        if not applicable:
            self.add(name, NA, detail)
        else:
            self.add(name, PASS if holds() else FAIL, detail)

    @property
    def failures(self) -> list[tuple[str, str, str]]:
        return [r for r in self.results if r[1] == FAIL]

    @property
    def ok(self) -> bool:
        return not self.failures

    def status(self, name: str) -> str:
        for n, s, _ in self.results:
            if n == name:
                return s
        raise KeyError(name)

    def to_json(self) -> dict:
        return {name: ({"status": s, "detail": d} if d else {"status": s}) for name, s, d in self.results}


LEMMA_NAMES = (
    "large_count_forces_two",
    "k2n_gives_count",
    "two_iff_four_cycle",
    "far_pair_gives_zero",
    "order_bound_without_dominating_vertex",
    "type_is_not_one",
    "zero_one_iff_no_four_cycle",
    "unique_dominating_vertex",
    "pyramid_neighbourhood",
    "dominated_pair_counts",
    "radius_one_formula",
    "radius_one_three_or_four",
    "small_degree_triangulation_order",
    "zero_one_two_structure",
)


def _largest_k2n(g: Graph) -> int:
    n = 1
    while contains_k2n(g, n + 1):
        n += 1
    return n


def verify_lemmas(g: Graph, emb: Embedding | None = None, strict: bool = True,
                  type_: TypeSet | None = None) -> LemmaReport:
    """Evaluate every applicable structural statement on the polyhedron ``g``.

    Statements whose hypothesis fails on ``g`` report ``n/a``. With
    ``strict`` any failure raises :class:`FalsificationError`.
    """
    if emb is None:
        emb = _certify(g, None)[1]
    a = type_ if type_ is not None else type_of(g)
    aset = a.as_set()
    top = max(aset)
    ecc = eccentricities(g)
    rad, diam = min(ecc), max(ecc)
    dom = [v for v in range(g.p) if ecc[v] == 1]
    four = has_four_cycle(g)
    rep = LemmaReport()

    rep.check("large_count_forces_two", top >= 3, lambda: 2 in aset, f"max={top}")
    k = _largest_k2n(g)
    rep.check("k2n_gives_count", k >= 2, lambda: any(x >= k for x in aset), f"K(2,{k})")
    rep.check("two_iff_four_cycle", True, lambda: (2 in aset) == four)
    rep.check("far_pair_gives_zero", diam >= 3, lambda: 0 in aset, f"diam={diam}")
    bound = 4 * top * top + 3 * top + 2
    rep.check("order_bound_without_dominating_vertex", rad != 1 and 0 not in aset,
              lambda: g.p <= bound, f"p={g.p} bound={bound}")
    rep.check("type_is_not_one", True, lambda: aset != {1})
    rep.check("zero_one_iff_no_four_cycle", True, lambda: (aset == {0, 1}) == (not four))

    t_like = rad == 1 and _is_t_graph(g)
    rep.check("unique_dominating_vertex", rad == 1 and not t_like, lambda: len(dom) == 1,
              f"dominating={dom}")

    def pyramid_ok():
        for u in dom:
            nb, _ = plane_neighbourhood(g, emb, u).without_isolated()
            if nb.p != g.p or nb.q != 2 * (g.p - 1):
                return False
            if _base_cycle(g, emb, u) is None:
                return False
        return sum(1 for v in range(g.p) if g.degree(v) == 3) >= 2

    rep.check("pyramid_neighbourhood", rad == 1, pyramid_ok)

    def pair_counts_ok():
        masks = g.masks
        for u in dom:
            rim = g.delete_vertices([u])
            ids = [v for v in range(g.p) if v != u]
            for v in ids:
                if (masks[v] & masks[u]).bit_count() != g.degree(v) - 1 or g.degree(v) - 1 < 2:
                    return False
            rmasks = rim.masks
            for i in range(len(ids)):
                for j in range(i + 1, len(ids)):
                    c = (masks[ids[i]] & masks[ids[j]]).bit_count()
                    if not 1 <= c <= 3:
                        return False
                    # opposite corners of a 4-cycle in G - u share two neighbours there
                    if (c == 3) != ((rmasks[i] & rmasks[j]).bit_count() >= 2):
                        return False
        return True

    rep.check("dominated_pair_counts", rad == 1, pair_counts_ok)

    formula_applies = rad == 1 and len(dom) == 1 and 1 in aset
    rep.check("radius_one_formula", formula_applies, lambda: radius1_type(g, emb) == a)
    rep.check("radius_one_three_or_four", rad == 1 and top >= 5, lambda: 3 in aset or 4 in aset)

    is_tri = g.q == 3 * g.p - 6
    maxdeg = max(g.degree(v) for v in range(g.p))
    rep.check("small_degree_triangulation_order", is_tri and maxdeg <= 5, lambda: g.p <= 12,
              f"p={g.p}")

    def zero_one_two_ok():
        fwd = four and not contains_k2n(g, 3)
        if g.p >= 25:
            is_pyr = g.q == 2 * (g.p - 1) and len(dom) >= 1 and _first_match(g, [("pyr", g.p - 1)]) is not None
            return (aset == {0, 1, 2}) == (fwd and not is_pyr)
        return fwd

    rep.check("zero_one_two_structure", aset == {0, 1, 2} or g.p >= 25, zero_one_two_ok)

    if strict and not rep.ok:
        names = ", ".join(n for n, _, _ in rep.failures)
        raise FalsificationError(f"structural statements fail on this polyhedron: {names}")
    return rep


# ---------------------------------------------------------------- classify

@dataclass
class Classification:
    certificate: PolyhedralityCertificate
    type: TypeSet
    table_row: Row | str
    family: str | None
    witnesses: tuple[PairProfile, PairProfile]
    lemma_report: LemmaReport | None = None
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        row = self.table_row
        lo, hi = self.witnesses
        return {
            "certificate": self.certificate.to_json(),
            "type": list(self.type),
            "table_row": row.to_json() if isinstance(row, Row) else row,
            "family": self.family,
            "witnesses": {
                "min": {"pair": [lo.u, lo.v], "count": lo.count, "common": sorted(lo.witnesses)},
                "max": {"pair": [hi.u, hi.v], "count": hi.count, "common": sorted(hi.witnesses)},
            },
            "lemma_report": self.lemma_report.to_json() if self.lemma_report is not None else None,
            "notes": list(self.notes),
        }


def _certify(g: Graph, emb: Embedding | None) -> tuple[PolyhedralityCertificate, Embedding]:
    """Polyhedrality certificate, reusing ``emb`` when it is a valid plane embedding of ``g``.

    A rotation system of a connected graph whose face count satisfies
    Euler's formula is a planar embedding, so a supplied embedding that
    passes that test certifies planarity without a separate planarity run.
    """
    if emb is not None:
        if not emb.matches(g) or emb.euler_characteristic() != 2:
            raise GraphArgumentError("supplied embedding is not a plane embedding of this graph")
        sep = separating_set(g)
        cert = PolyhedralityCertificate(True, sep is None, None, sep, emb)
    else:
        cert = is_polyhedron(g)
    if not cert:
        reason = "not planar" if not cert.is_planar else f"separated by {list(cert.separator)}"
        raise NotPolyhedralError(f"input is not a polyhedron ({reason})", certificate=cert)
    return cert, cert.embedding


def _identify(g: Graph, emb: Embedding, a: frozenset, rad: int, notes: list[str]) -> str | None:
    p = g.p
    if 1 not in a:
        fam = _first_match(g, _no_one_candidates(g))
        if fam is None:
            raise FalsificationError(
                f"polyhedron on {p} vertices of type {sorted(a)} is not one of the known graphs without a 1")
        return fam
    if rad == 1 and g.q == 2 * (p - 1):
        fam = _first_match(g, [("pyr", p - 1)])
        if fam:
            return fam
    top = max(a)
    if len(a) == 3 and {1, 2} <= a and top >= 6 and top % 2 == 0:
        cands = []
        if p == 2 * top + 2:
            cands.append(("b", top))
        if p == 2 * top:
            cands.append(("bp", top))
        fam = _first_match(g, cands)
        if fam is None:
            raise FalsificationError(
                f"polyhedron of type {sorted(a)} on {p} vertices is neither B_{top} nor B'_{top}")
        return fam
    if rad == 1 and p >= 6 and a in ({1, 2, 3}, {1, 2, 4}):
        kind = "W3" if 3 in a else "W4"
        dom = dominating_vertices(g)
        fam = _rebuilt_member(g, emb, dom[0], kind) if len(dom) == 1 else None
        if fam is None:
            raise FalsificationError(f"radius-1 polyhedron of type {sorted(a)} is not a {kind} member")
        return fam
    if a == {1, 2}:
        notes.append(f"type {{1,2}} on {p} vertices without being a pyramid (allowed for p <= 24)")
    elif a == {1, 2, 3} and rad != 1:
        notes.append(f"type {{1,2,3}} at radius {rad} on {p} vertices (allowed for p <= 47)")
    elif a == {1, 2, 4} and rad != 1:
        notes.append(f"type {{1,2,4}} at radius {rad} on {p} vertices (allowed for p <= 78)")
    return None


def classify(g: Graph, emb: Embedding | None = None, lemmas: bool = True, strict: bool = True) -> Classification:
    """Type, matching row, family and certificates for the polyhedron ``g``.

    Raises :class:`NotPolyhedralError` (carrying the certificate) for
    non-polyhedral input and :class:`FalsificationError` when the result
    contradicts the classification: a type with no row, a graph without a
    pair sharing one neighbour that is not a known member, or a type
    ``{1,2,l}`` with even ``l >= 6`` realised by anything but B_l or B'_l.
    """
    cert, emb = _certify(g, emb)
    a = type_of(g)
    aset = a.as_set()
    row = match_tables(a)
    if row == IMPOSSIBLE:
        raise FalsificationError(f"polyhedron of type {list(a)} matches no admissible row")
    if row.has_one != (1 in aset):
        raise FalsificationError(f"row {row.id} disagrees with type {list(a)}")
    ecc = eccentricities(g)
    rad = min(ecc)
    notes: list[str] = []
    family = _identify(g, emb, aset, rad, notes)
    if g.q == 3 * g.p - 6 and max(g.degree(v) for v in range(g.p)) <= 5:
        notes.append(f"triangulation with maximum degree <= 5 on {g.p} <= 12 vertices")
    report = verify_lemmas(g, emb, strict=strict, type_=a) if lemmas else None
    return Classification(cert, a, row, family, extreme_pairs(g), report, notes)


__all__ = [
    "Classification",
    "IMPOSSIBLE",
    "LEMMA_NAMES",
    "LemmaReport",
    "ROWS",
    "Row",
    "classify",
    "match_tables",
    "matching_rows",
    "radius1_type",
    "verify_lemmas",
]
