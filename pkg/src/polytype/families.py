"""Constructors for the named polyhedron families and the set-realising constructions.

Numbering conventions are fixed so that golden files stay stable: a base
cycle is ``0..n-1`` in cyclic order, and apexes come last. Every
constructor that promises a type checks it with :func:`type_of` before
returning and raises :class:`ConstructionError` if the promise fails.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product

from . import sporadic_data
from .errors import ConstructionError, FormatError, GraphArgumentError
from .formats import from_graph6
from .graph import Graph, TypeSet, four_cycles, type_of
from .planarity import check_planarity, is_polyhedron


def _require_int(name, value, lo):
    if not isinstance(value, int) or isinstance(value, bool) or value < lo:
        raise GraphArgumentError(f"{name} must be an integer >= {lo}, got {value!r}")


def _cycle_edges(n, offset=0):
    return [(offset + i, offset + (i + 1) % n) for i in range(n)]


def _self_check(g: Graph, expected, what: str) -> Graph:
    got = type_of(g)
    if got != TypeSet(expected):
        raise ConstructionError(f"{what}: expected type {TypeSet(expected)}, computed {got}")
    return g


def pyramid(n: int) -> Graph:
    """The wheel: base cycle ``0..n-1`` and apex ``n``."""
    _require_int("n", n, 3)
    return Graph(n + 1, _cycle_edges(n) + [(i, n) for i in range(n)])


def bipyramid(n: int) -> Graph:
    """Base cycle ``0..n-1`` with apexes ``n`` and ``n+1``."""
    _require_int("n", n, 3)
    return Graph(n + 2, _cycle_edges(n) + [(i, n) for i in range(n)] + [(i, n + 1) for i in range(n)])


def t_graph(length: int) -> Graph:
    """Join of the path ``0..length-1`` with the edge ``(length, length+1)``."""
    _require_int("length", length, 1)
    x, y = length, length + 1
    edges = [(i, i + 1) for i in range(length - 1)] + [(x, y)]
    edges += [(i, x) for i in range(length)] + [(i, y) for i in range(length)]
    return Graph(length + 2, edges)


def tetrahedron() -> Graph:
    return Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


def octahedron() -> Graph:
    return bipyramid(4)


def cube() -> Graph:
    edges = [(a, b) for a in range(8) for b in range(a + 1, 8) if (a ^ b).bit_count() == 1]
    return Graph(8, edges)


def icosahedron() -> Graph:
    # poles 0 and 11, upper ring 1..5, lower ring 6..10
    edges = []
    for i in range(5):
        up, nxt = 1 + i, 1 + (i + 1) % 5
        lo, lo_nxt = 6 + i, 6 + (i + 1) % 5
        edges += [(0, up), (up, nxt), (11, lo), (lo, lo_nxt), (up, lo), (nxt, lo)]
    return Graph(12, edges)


def dodecahedron() -> Graph:
    # outer 5-cycle 0..4, middle 10-cycle 5..14, inner 5-cycle 15..19
    edges = _cycle_edges(5) + _cycle_edges(10, 5) + [(15 + i, 15 + (i + 1) % 5) for i in range(5)]
    edges += [(i, 5 + 2 * i) for i in range(5)]
    edges += [(6 + 2 * i, 15 + i) for i in range(5)]
    return Graph(20, edges)


def _b_common(length, path):
    if not isinstance(length, int) or isinstance(length, bool) or length < 4 or length % 2:
        raise GraphArgumentError(f"B graphs need an even parameter >= 4, got {length!r}")
    k = 2 * length - 2 if path else 2 * length
    x, y = k, k + 1
    edges = [(i, i + 1) for i in range(k - 1)]
    if not path:
        edges.append((k - 1, 0))
    edges += [(i, x) for i in range(k)]
    edges += [(i, y) for i in range(k) if i % 4 in (0, 1)]
    return Graph(k + 2, edges)


def b_graph(length: int) -> Graph:
    """Cycle ``b_1..b_2l`` (vertices ``0..2l-1``), apex ``x`` on all of them, ``y`` on ``b_j``, ``j = 1,2 mod 4``.

    Raises :class:`GraphArgumentError` for odd ``length`` or ``length < 4``.
    For ``length >= 6`` the type ``{1, 2, length}`` is checked; the order-4
    members are built but not checked.
    """
    g = _b_common(length, path=False)
    if length >= 6:
        _self_check(g, {1, 2, length}, f"b_graph({length})")
    return g


def b_prime_graph(length: int) -> Graph:
    """Same as :func:`b_graph` on the path ``b_1..b_{2l-2}``."""
    g = _b_common(length, path=True)
    if length >= 6:
        _self_check(g, {1, 2, length}, f"b_prime_graph({length})")
    return g


def _crossing(a, b, c, d):
    """Chords ``ab`` and ``cd`` of a convex polygon with labels in cyclic order cross."""
    a, b = min(a, b), max(a, b)
    if len({a, b, c, d}) < 4:
        return False
    return (a < c < b) != (a < d < b)


def _check_chords(n, chords):
    seen = set()
    for a, b in chords:
        for x in (a, b):
            if not isinstance(x, int) or not 0 <= x < n:
                raise GraphArgumentError(f"chord endpoint {x!r} outside the base 0..{n - 1}")
        if a == b:
            raise GraphArgumentError(f"chord ({a}, {b}) is a loop")
        if (a - b) % n in (1, n - 1):
            raise GraphArgumentError(f"chord ({a}, {b}) duplicates a base edge")
        key = (min(a, b), max(a, b))
        if key in seen:
            raise GraphArgumentError(f"chord ({a}, {b}) given twice")
        seen.add(key)
    for i, (a, b) in enumerate(chords):
        for c, d in chords[i + 1:]:
            if _crossing(a, b, c, d):
                raise GraphArgumentError(f"chords ({a}, {b}) and ({c}, {d}) cross, so the result is not planar")


def _pyramid_plus(n, chords, what):
    g = pyramid(n).add_edges(chords)
    if not check_planarity(g)[0]:
        raise GraphArgumentError(f"{what}: the added edges break planarity")
    return g


def w3_member(n: int, extra_edges) -> Graph:
    """Pyramid over base ``0..n-1`` plus a non-empty matching of non-crossing chords."""
    _require_int("n", n, 5)
    chords = [tuple(e) for e in extra_edges]
    if not chords:
        raise GraphArgumentError("w3_member needs at least one added edge")
    _check_chords(n, chords)
    used = {}
    for a, b in chords:
        for x in (a, b):
            if x in used:
                raise GraphArgumentError(
                    f"added edges are not pairwise independent: ({a}, {b}) and {used[x]} share vertex {x}")
            used[x] = (a, b)
    g = _pyramid_plus(n, chords, "w3_member")
    return _self_check(g, {1, 2, 3}, f"w3_member({n}, {chords})")


def w4_member(n: int, cycles) -> Graph:
    """Pyramid over base ``0..n-1`` plus vertex-disjoint chord cycles.

    Each cycle is a sequence of base vertices. The clauses checked are:
    no cycle of length 4; every pair on a 3-cycle at base distance at
    least 4 both ways round; and for every edge ``v_i v_j`` with at least
    two base vertices strictly between its ends (read in either direction
    around the base), the edge ``v_{i+1} v_{j-1}`` is absent.
    """
    _require_int("n", n, 5)
    cycles = [list(c) for c in cycles]
    if not cycles:
        raise GraphArgumentError("w4_member needs at least one added cycle")
    seen = set()
    chords = []
    for cyc in cycles:
        if len(cyc) < 3:
            raise GraphArgumentError(f"cycle {cyc} is shorter than 3")
        if len(cyc) == 4:
            raise GraphArgumentError(f"cycle {cyc} has length 4, which is excluded")
        for x in cyc:
            if x in seen:
                raise GraphArgumentError(f"cycles are not vertex-disjoint: vertex {x} repeats")
            seen.add(x)
        if len(cyc) == 3:
            a, b, c = sorted(cyc)
            for i, j in ((a, b), (b, c), (a, c)):
                if not 4 <= j - i <= n - 4:
                    raise GraphArgumentError(
                        f"3-cycle {cyc}: vertices {i} and {j} violate 4 <= j-i <= n-4")
        chords += [(cyc[k], cyc[(k + 1) % len(cyc)]) for k in range(len(cyc))]
    _check_chords(n, chords)
    g = _pyramid_plus(n, chords, "w4_member")
    for a, b in chords:
        for i, j in ((a, b), (b, a)):
            span = (j - i) % n
            if span >= 3:
                s, t = (i + 1) % n, (j - 1) % n
                if g.has_edge(s, t):
                    raise GraphArgumentError(
                        f"edge ({i}, {j}) present together with ({s}, {t}) one step inside it")
    return _self_check(g, {1, 2, 4}, f"w4_member({n}, {cycles})")


def sporadic(i: int) -> Graph:
    """The exceptional polyhedra with no pair sharing exactly one neighbour.

    ``sporadic(1)`` is the cube and ``sporadic(2)`` the icosahedron. The
    other eight are triangulations recovered once by exhaustive
    enumeration and stored as canonical graph6 strings; see
    :mod:`polytype.sporadic_data` for how they were selected. Within the
    five of type ``{2,3,4}`` the numbering follows canonical-form order and
    carries no further meaning.
    """
    _require_int("i", i, 1)
    if i > 10:
        raise GraphArgumentError(f"sporadic index must be in 1..10, got {i}")
    if i == 1:
        return cube()
    if i == 2:
        return icosahedron()
    return from_graph6(sporadic_data.SPORADIC_GRAPH6[i])


SPORADIC_TYPES = {
    1: {0, 2}, 2: {0, 2}, 3: {2, 3}, 4: {0, 2, 3},
    5: {2, 3, 4}, 6: {2, 3, 4}, 7: {2, 3, 4}, 8: {2, 3, 4}, 9: {2, 3, 4}, 10: {0, 2, 3, 4},
}


def _as_sequence(values, n_min, sequence):
    base = TypeSet.at_least(n_min, values)
    if sequence is None:
        return base, None
    seq = [int(v) for v in sequence]
    if set(seq) != set(base.values):
        raise GraphArgumentError(
            f"sequence {seq} must use each value of {base} at least once and nothing else")
    return base, seq


def _caterpillar_layout(ts):
    """Centres and leaves of a caterpillar with central degrees ``ts``.

    Returns ``(edges, leaves)`` on vertex ids where centres are ``0..m-1`` and
    leaves follow; ``leaves[i]`` lists the leaves of centre ``i``.
    """
    m = len(ts)
    edges = [(i, i + 1) for i in range(m - 1)]
    nxt = m
    leaves = []
    for i, t in enumerate(ts):
        if m == 1:
            k = t
        elif i in (0, m - 1):
            k = t - 1
        else:
            k = t - 2
        own = list(range(nxt, nxt + k))
        nxt += k
        edges += [(i, x) for x in own]
        leaves.append(own)
    return edges, leaves, nxt


def _apexed(order, chords):
    """Pyramid over the base ``order`` (a list of node ids) with chords, relabelled densely."""
    pos = {x: k for k, x in enumerate(order)}
    h = len(order)
    edges = _cycle_edges(h) + [(k, h) for k in range(h)] + [(pos[a], pos[b]) for a, b in chords]
    return Graph(h + 1, edges), pos


def caterpillar123(values, sequence=None) -> Graph:
    """Pyramid whose base carries a caterpillar, realising ``{1,2,3}`` plus ``values``.

    The caterpillar has central degrees ``a - 2``, taken in increasing order
    or in the order of ``sequence`` (which may repeat values; each repeat
    gives a different graph of the same type). Centres alternate between
    the two sides of the base and each centre's leaves sit on the other
    side, so the caterpillar edges become non-crossing chords. Two spare
    base vertices at each end keep every chord off the base edges, giving
    a base of length ``6 + sum(t - 1)``. The apex is the last vertex.
    """
    base, seq = _as_sequence(values, 4, sequence)
    ts = [a - 2 for a in (seq or base.values)]
    edges, leaves, count = _caterpillar_layout(ts)
    m = len(ts)
    top, bottom = [], []
    for i in range(m):
        if i % 2 == 0:
            top.append(i)
            bottom.extend(leaves[i])
        else:
            bottom.append(i)
            top.extend(leaves[i])
    s = [count, count + 1, count + 2, count + 3]
    order = [s[0]] + top + [s[1], s[2]] + bottom[::-1] + [s[3]]
    g, _ = _apexed(order, edges)
    if len(order) != 6 + sum(t - 1 for t in ts):
        raise ConstructionError(f"caterpillar123: base length {len(order)} differs from 6 + sum(t-1)")
    if not is_polyhedron(g):
        raise ConstructionError(f"caterpillar123({list(base)}): result is not a polyhedron")
    return _self_check(g, {1, 2, 3} | set(base.values), f"caterpillar123({list(base)})")


def _leaf_counts(ts):
    m = len(ts)
    if m == 1:
        return [ts[0]]
    return [t - 1 if i in (0, m - 1) else t - 2 for i, t in enumerate(ts)]


def _matchings(items):
    """Perfect matchings of ``items`` (path indices) avoiding neighbouring indices."""
    if not items:
        yield []
        return
    first = items[0]
    for k in range(1, len(items)):
        if items[k] - first >= 2:
            rest = items[1:k] + items[k + 1:]
            for tail in _matchings(rest):
                yield [(first, items[k])] + tail


def _spine_layout(ts, leaves, pairs, sides):
    """Cyclic base order and chords for one choice of leftover pairing, or None.

    The central path runs left to right; every leaf hangs above (side 0)
    or below (side 1) it. A leftover pair on one side closes a region over
    the centres strictly between its ends, which therefore may not use
    that side and are themselves placed on the other side.
    """
    m = len(ts)
    blocked = [set() for _ in range(m)]
    partner = {}
    for (i, k), s in zip(pairs, sides):
        for j in range(i + 1, k):
            blocked[j].add(s)
        partner[i] = (k, s)
        partner[k] = (i, s)
    groups = [[[], []] for _ in range(m)]
    centre_side = []
    chords = []
    leftover = {}
    for j in range(m):
        free = [s for s in (0, 1) if s not in blocked[j]]
        if not free:
            return None
        own = leaves[j]
        rest = own
        if j in partner:
            rest = own[:-1]
            other, s_lo = partner[j]
            if s_lo in blocked[j]:
                return None
            leftover[j] = own[-1]
        chords += [(rest[k], rest[k + 1]) for k in range(0, len(rest), 2)]
        s_rest = free[0]
        groups[j][s_rest] = list(rest)
        if j in partner:
            other, s_lo = partner[j]
            if other > j:
                groups[j][s_lo] = groups[j][s_lo] + [own[-1]]
            else:
                groups[j][s_lo] = [own[-1]] + groups[j][s_lo]
        centre_side.append(1 if 0 in blocked[j] else 0)
    for i, k in pairs:
        chords.append((leftover[i], leftover[k]))
    # the walk above runs left to right and the walk below right to left; a
    # centre that closes a leftover pair on its own walk follows its leaves
    order = []
    for j in range(m):
        late = j in partner and partner[j][1] == 0 and partner[j][0] < j
        if centre_side[j] == 0 and not late:
            order.append(j)
        order.extend(groups[j][0])
        if centre_side[j] == 0 and late:
            order.append(j)
    for j in reversed(range(m)):
        late = j in partner and partner[j][1] == 1 and partner[j][0] > j
        if centre_side[j] == 1 and not late:
            order.append(j)
        order.extend(reversed(groups[j][1]))
        if centre_side[j] == 1 and late:
            order.append(j)
    return order, chords


def _non_crossing(order, chords):
    pos = {x: k for k, x in enumerate(order)}
    placed = [(pos[a], pos[b]) for a, b in chords]
    return not any(_crossing(a, b, c, d) for n, (a, b) in enumerate(placed) for c, d in placed[n + 1:])


def _layout124(ts):
    edges, leaves, count = _caterpillar_layout(ts)
    odd = [j for j, k in enumerate(_leaf_counts(ts)) if k % 2]
    for pairs in _matchings(odd):
        for sides in product((0, 1), repeat=len(pairs)):
            found = _spine_layout(ts, leaves, pairs, sides)
            if found is None:
                continue
            order, extra = found
            chords = edges + extra
            if _non_crossing(order, chords):
                return order, chords, count
    return None


def _search_sequence(values):
    """Shortest, then lexicographically first, central-degree sequence with a usable layout."""
    ts = [a - 2 for a in values]
    odd_ts = sorted(t for t in ts if t % 2)
    if len(odd_ts) % 2:
        ts.append(odd_ts[0])
    distinct = sorted(set(ts))
    for length in range(len(ts), len(ts) + 4):
        if length == len(ts):
            pool = sorted(set(permutations(sorted(ts))))
        else:
            pool = (p for p in product(distinct, repeat=length) if set(p) == set(distinct))
        for cand in pool:
            cand = list(cand)
            if sum(cand) % 2:
                continue
            layout = _layout124(cand)
            if layout is not None:
                return cand, layout
    raise ConstructionError(f"construction124: no usable caterpillar layout found for {values}")


def construction124(values, sequence=None) -> Graph:
    """Radius-1 polyhedron of type ``{1,2,4}`` plus ``values``.

    A caterpillar with central degrees ``a - 2`` (an extra copy of the
    smallest odd one when the number of odd values is odd) lies along the
    base of a pyramid, and its leaves are matched in pairs so that every
    leaf has degree 4 away from the apex. Leaves of one centre pair up
    among themselves; a centre with an odd number of leaves keeps one
    leftover, and leftovers are matched between centres that are not
    neighbours on the central path (neighbours would close a 4-cycle of
    added edges). The pairing, the side of the path each leaf group
    hangs on, and if necessary the order of centres are searched until
    the added edges are non-crossing chords of the base. Spare base
    vertices are inserted between chord neighbours, then on one base edge
    of every 4-cycle away from the apex, repeating until no such 4-cycle
    is left (a cut can open a new one).
    """
    base = TypeSet.at_least(5, values)
    if sequence is None:
        ts, layout = _search_sequence(list(base.values))
    else:
        seq = [int(v) for v in sequence]
        if set(seq) != set(base.values):
            raise GraphArgumentError(
                f"sequence {seq} must use each value of {base} at least once and nothing else")
        ts = [a - 2 for a in seq]
        if sum(ts) % 2:
            raise GraphArgumentError(f"sequence {seq} leaves an odd number of leaves to match")
        layout = _layout124(ts)
        if layout is None:
            raise GraphArgumentError(f"sequence {seq} admits no planar leaf matching without 4-cycles")
    order, chords, count = layout

    adj = {}
    for a, b in chords:
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)
    spaced = []
    for k, x in enumerate(order):
        spaced.append(x)
        if order[(k + 1) % len(order)] in adj.get(x, ()):
            spaced.append(count)
            count += 1
    order = spaced

    # cut one base edge of every 4-cycle away from the apex; cutting a
    # triangle edge makes a new 4-cycle, so repeat until none are left
    while True:
        g, _ = _apexed(order, chords)
        h = len(order)
        rim = g.delete_vertices([h])
        cut = set()
        for cyc in four_cycles(rim):
            rim_edges = sorted((a, b) if (b - a) % h == 1 else (b, a)
                               for a, b in ((cyc[k], cyc[(k + 1) % 4]) for k in range(4))
                               if (a - b) % h in (1, h - 1))
            if not rim_edges:
                raise ConstructionError("construction124: a 4-cycle made only of added edges survived")
            if not cut.intersection(rim_edges):
                cut.add(rim_edges[0])
        if not cut:
            break
        spaced = []
        for k, x in enumerate(order):
            spaced.append(x)
            if (k, (k + 1) % h) in cut:
                spaced.append(count)
                count += 1
        order = spaced
    rim_deg = [rim.degree(v) for v in range(h)]
    if 3 in rim_deg:
        raise ConstructionError("construction124: a base vertex has degree 3 away from the apex")
    if 4 not in rim_deg:
        raise ConstructionError("construction124: no base vertex has degree 4 away from the apex")
    if not is_polyhedron(g):
        raise ConstructionError(f"construction124({list(base)}): result is not a polyhedron")
    return _self_check(g, {1, 2, 4} | set(base.values), f"construction124({list(base)})")


def gadget(j: int) -> tuple[Graph, tuple[int, int, int, int], tuple[int, int, int, int]]:
    """Block with one pair of poles sharing exactly ``j`` neighbours.

    Poles ``u = 0`` and ``v = 1`` are joined through ``c_1..c_j`` (ids
    ``2..j+1``), splitting the plane into ``j`` quadrilaterals
    ``(u, c_k, v, c_{k+1})``. The first stays empty and is the entry
    square ``(u, c_1, v, c_2)``. The second holds a square ``s_1..s_4``
    with spokes ``s_1 u``, ``s_2 c_2``, ``s_3 v``, ``s_4 c_3``; the inner
    face ``(s_1, s_2, s_3, s_4)`` is the exit square. Each remaining
    quadrilateral gets a two-vertex path ``p_k q_k`` with ``p_k`` on ``u``
    and ``c_k`` and ``q_k`` on ``v`` and ``c_{k+1}``, which is what makes the
    block 3-connected while keeping every other pair at two or fewer
    common neighbours.

    Returns ``(graph, entry_square, exit_square)``.
    """
    _require_int("j", j, 3)
    u, v = 0, 1
    c = [None] + list(range(2, j + 2))
    s1, s2, s3, s4 = j + 2, j + 3, j + 4, j + 5
    edges = []
    for k in range(1, j + 1):
        edges += [(u, c[k]), (v, c[k])]
    edges += [(s1, s2), (s2, s3), (s3, s4), (s4, s1), (s1, u), (s2, c[2]), (s3, v), (s4, c[3])]
    nxt = j + 6
    for k in range(3, j + 1):
        pk, qk = nxt, nxt + 1
        nxt += 2
        c_next = c[k + 1] if k < j else c[1]
        edges += [(pk, u), (pk, c[k]), (pk, qk), (qk, v), (qk, c_next)]
    return Graph(nxt, edges), (u, c[1], v, c[2]), (s1, s2, s3, s4)


def glued_chain012(values, sequence=None) -> Graph:
    """Chain of :func:`gadget` blocks realising ``{0,1,2}`` plus ``values``.

    Block ``i``'s exit square is identified with block ``i+1``'s entry square,
    vertex by vertex. The poles of block ``i+1`` then coincide with
    ``s_1, s_3`` of block ``i``, whose own common neighbours are only
    ``s_2, s_4``, so the pole count of each block survives the gluing.
    A single value is realised with two copies of its block, which
    guarantees pairs far enough apart to share no neighbour.
    """
    base, seq = _as_sequence(values, 3, sequence)
    js = list(seq or base.values)
    if len(js) == 1:
        js = js * 2
    masks_edges = []
    total = 0
    prev_exit = None
    for j in js:
        g, entry, exit_sq = gadget(j)
        ids = {}
        if prev_exit is not None:
            for a, b in zip(entry, prev_exit):
                ids[a] = b
        for x in range(g.p):
            if x not in ids:
                ids[x] = total
                total += 1
        masks_edges += [(ids[a], ids[b]) for a, b in g.edges()]
        prev_exit = tuple(ids[x] for x in exit_sq)
    g = Graph(total, sorted({(min(a, b), max(a, b)) for a, b in masks_edges}))
    if not is_polyhedron(g):
        raise ConstructionError(f"glued_chain012({list(base)}): result is not a polyhedron")
    return _self_check(g, {0, 1, 2} | set(base.values), f"glued_chain012({list(base)})")


@dataclass(frozen=True)
class FamilySpec:
    """A family member named by its kind and parameters.

    Text forms: ``t:8``, ``b:6``, ``bp:6``, ``pyr:7``, ``bipyr:7``, ``s:4``,
    ``cat123:6,7,10,12``, ``c124:5,8``, ``glue012:3,5,9``, ``w3:n=6;e=0-2``,
    ``w4:n=12;c=0-4-8``. The three set constructions also accept
    ``;seq=...`` with a repeated sequence of the same values.
    """

    kind: str
    params: tuple

    KINDS = ("t", "b", "bp", "pyr", "bipyr", "s", "cat123", "c124", "glue012", "w3", "w4")

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        text = text.strip()
        if ":" not in text:
            raise FormatError(f"family spec {text!r} must look like kind:params")
        kind, _, rest = text.partition(":")
        kind = kind.strip().lower()
        if kind not in cls.KINDS:
            raise FormatError(f"unknown family kind {kind!r}; expected one of {', '.join(cls.KINDS)}")
        try:
            if kind in ("t", "b", "bp", "pyr", "bipyr", "s"):
                return cls(kind, (int(rest),))
            if kind in ("cat123", "c124", "glue012"):
                head, _, tail = rest.partition(";")
                values = tuple(int(x) for x in head.split(","))
                seq = None
                if tail:
                    key, _, val = tail.partition("=")
                    if key.strip() != "seq":
                        raise FormatError(f"unknown option {key!r} in {text!r}")
                    seq = tuple(int(x) for x in val.split(","))
                return cls(kind, (values, seq))
            fields = dict(part.split("=", 1) for part in rest.split(";") if part)
            n = int(fields["n"])
            if kind == "w3":
                edges = tuple(tuple(int(x) for x in e.split("-")) for e in fields["e"].split(","))
                if any(len(e) != 2 for e in edges):
                    raise FormatError(f"edges in {text!r} must be a-b pairs")
                return cls(kind, (n, edges))
            cycles = tuple(tuple(int(x) for x in c.split("-")) for c in fields["c"].split(","))
            return cls(kind, (n, cycles))
        except (ValueError, KeyError) as exc:
            raise FormatError(f"cannot parse family spec {text!r}: {exc}") from None

    def build(self) -> Graph:
        k, p = self.kind, self.params
        if k == "t":
            return t_graph(p[0])
        if k == "b":
            return b_graph(p[0])
        if k == "bp":
            return b_prime_graph(p[0])
        if k == "pyr":
            return pyramid(p[0])
        if k == "bipyr":
            return bipyramid(p[0])
        if k == "s":
            return sporadic(p[0])
        if k == "cat123":
            return caterpillar123(*p)
        if k == "c124":
            return construction124(*p)
        if k == "glue012":
            return glued_chain012(*p)
        if k == "w3":
            return w3_member(*p)
        return w4_member(*p)

    def __str__(self):
        k, p = self.kind, self.params
        if k in ("cat123", "c124", "glue012"):
            out = f"{k}:" + ",".join(map(str, p[0]))
            return out + (";seq=" + ",".join(map(str, p[1])) if p[1] else "")
        if k == "w3":
            return f"w3:n={p[0]};e=" + ",".join(f"{a}-{b}" for a, b in p[1])
        if k == "w4":
            return f"w4:n={p[0]};c=" + ",".join("-".join(map(str, c)) for c in p[1])
        return f"{k}:{p[0]}"


def build(text: str) -> Graph:
    """Parse a textual family spec and construct the graph."""
    return FamilySpec.parse(text).build()
