"""Isomorph-free generation of planar triangulations and polyhedra.

Triangulations grow from the tetrahedron by vertex splitting, the inverse
of contracting an edge whose endpoints have exactly two common
neighbours. A child is kept only when the freshly created edge has the
smallest contraction invariant in the child, which removes most repeats
before any canonical code is computed; the remaining repeats are removed
by a per-level dictionary keyed on the planar traversal code.

Polyhedra on ``n`` vertices are obtained from the triangulations on ``n``
vertices by deleting edges one level at a time while 3-connectivity
survives. The inverse operation is inserting a diagonal into a face, and
the same filter-then-deduplicate scheme is used with the face length as
leading invariant.

All graphs are carried as rotation systems relabelled by their planar
code, so every level is a deterministic sorted list whatever the number
of worker processes.
"""

from __future__ import annotations

import json
import logging
import os
import random
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .canonical import canonical_graph, planar_code
from .formats import to_graph6
from .errors import GraphArgumentError
from .graph import Graph, type_of
from .planarity import is_3_connected, trace_faces

log = logging.getLogger(__name__)

TRIANGULATION_CAP = 14
POLYHEDRA_CAP = 10

TETRAHEDRON_ROTATION = ((1, 2, 3), (0, 3, 2), (0, 1, 3), (0, 2, 1))


def _masks(rot):
    out = []
    for r in rot:
        m = 0
        for w in r:
            m |= 1 << w
        out.append(m)
    return out


def _split(rot, v, i, j):
    """Split ``v``: a new vertex takes the rotation arc from index ``i`` to ``j``."""
    r = rot[v]
    d = len(r)
    x = len(rot)
    k = (j - i) % d
    arc = [r[(i + t) % d] for t in range(k + 1)]
    keep = [r[(j + t) % d] for t in range(d - k + 1)]
    new = [list(a) for a in rot]
    new.append(arc + [v])
    new[v] = keep + [x]
    wi, wj = arc[0], arc[-1]
    ri = new[wi]
    ri.insert(ri.index(v), x)
    rj = new[wj]
    rj.insert(rj.index(v) + 1, x)
    for w in arc[1:-1]:
        rw = new[w]
        rw[rw.index(v)] = x
    return new


def _contraction_key(masks, deg, a, b):
    common = masks[a] & masks[b]
    c1 = (common & -common).bit_length() - 1
    c2 = common.bit_length() - 1
    da, db = deg[a], deg[b]
    dc1, dc2 = deg[c1], deg[c2]
    return (min(da, db), max(da, db), min(dc1, dc2), max(dc1, dc2))


def _triangulation_children(rot):
    """Canonically filtered vertex splittings of one triangulation."""
    n = len(rot)
    deg = [len(r) for r in rot]
    deg3 = deg.count(3)
    out = []
    for v in range(n):
        d = deg[v]
        r = rot[v]
        for i in range(d):
            for k in range(1, d):
                j = (i + k) % d
                dx, dv = k + 2, d - k + 2
                wi, wj = r[i], r[j]
                child3 = deg3 - (deg[wi] == 3) - (deg[wj] == 3) - (d == 3) + (dx == 3) + (dv == 3)
                if child3 and min(dx, dv) > 3:
                    continue
                child = _split(rot, v, i, j)
                masks = _masks(child)
                cdeg = [len(c) for c in child]
                mine = _contraction_key(masks, cdeg, v, n)
                # a smaller key needs an endpoint of degree <= mine[0]
                ok = True
                for a in range(n + 1):
                    if cdeg[a] > mine[0]:
                        continue
                    ma = masks[a]
                    for b in child[a]:
                        if (cdeg[a], cdeg[b]) > mine[:2] or (ma & masks[b]).bit_count() != 2:
                            continue
                        if _contraction_key(masks, cdeg, a, b) < mine:
                            ok = False
                            break
                    if not ok:
                        break
                if ok:
                    out.append(planar_code(child))
    return out


def _face_edge_sets(faces):
    sets = []
    for f in faces:
        s = set()
        for t, a in enumerate(f):
            b = f[(t + 1) % len(f)]
            s.add((a, b) if a < b else (b, a))
        sets.append(s)
    return sets


def _deletion_children(rot):
    """Canonically filtered single-edge deletions that keep 3-connectivity."""
    n = len(rot)
    deg = [len(r) for r in rot]
    masks = _masks(rot)
    faces = trace_faces(rot)
    fmask = []
    for f in faces:
        m = 0
        for v in f:
            m |= 1 << v
        fmask.append(m)
    fedges = _face_edge_sets(faces)
    lengths = [len(f) for f in faces]
    edge_faces = {}
    for idx, es in enumerate(fedges):
        for e in es:
            edge_faces.setdefault(e, []).append(idx)
    out = []
    for (a, b), (f1, f2) in sorted(edge_faces.items()):
        if deg[a] < 4 or deg[b] < 4:
            continue
        merged = lengths[f1] + lengths[f2] - 2
        if any(lengths[t] > merged for t in range(len(faces)) if t != f1 and t != f2):
            continue
        m = fmask[f1] | fmask[f2]
        ok = True
        for t in range(len(faces)):
            if t == f1 or t == f2:
                continue
            inter = fmask[t] & m
            c = inter.bit_count()
            if c <= 1:
                continue
            if c >= 3:
                ok = False
                break
            s = (inter & -inter).bit_length() - 1
            u = inter.bit_length() - 1
            if (s, u) not in fedges[t] or ((s, u) not in fedges[f1] and (s, u) not in fedges[f2]):
                ok = False
                break
        if not ok:
            continue
        # the new face must carry the best diagonal of the child
        cdeg = list(deg)
        cdeg[a] -= 1
        cdeg[b] -= 1
        cmask = list(masks)
        cmask[a] &= ~(1 << b)
        cmask[b] &= ~(1 << a)
        mine = (-merged, -max(cdeg[a], cdeg[b]), -min(cdeg[a], cdeg[b]))
        walk = _merged_walk(faces[f1], faces[f2], a, b)
        cand = [(merged, walk)]
        for t in range(len(faces)):
            if t != f1 and t != f2 and lengths[t] == merged:
                cand.append((merged, faces[t]))
        for length, f in cand:
            for s_i in range(length):
                s = f[s_i]
                for t_i in range(s_i + 2, length):
                    if s_i == 0 and t_i == length - 1:
                        continue
                    w = f[t_i]
                    if cmask[s] >> w & 1:
                        continue
                    key = (-length, -max(cdeg[s], cdeg[w]), -min(cdeg[s], cdeg[w]))
                    if key < mine:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if not ok:
            continue
        child = [list(r) for r in rot]
        child[a].remove(b)
        child[b].remove(a)
        out.append(planar_code(child))
    return out


def _merged_walk(f1, f2, a, b):
    """Boundary of the face obtained by removing the edge ``ab`` between two faces."""

    def path(f, x, y):
        # walk f starting just after the dart x->y, ending at x
        k = len(f)
        for s in range(k):
            if f[s] == x and f[(s + 1) % k] == y:
                return [f[(s + 1 + t) % k] for t in range(k)]
        raise AssertionError("dart not on face")

    if _has_dart(f1, a, b):
        p1, p2 = path(f1, a, b), path(f2, b, a)
    else:
        p1, p2 = path(f1, b, a), path(f2, a, b)
    return tuple(p1[:-1] + p2[:-1])


def _has_dart(f, x, y):
    k = len(f)
    return any(f[s] == x and f[(s + 1) % k] == y for s in range(k))


def _run_level(fn, parents, workers):
    found = {}
    if workers <= 1 or len(parents) < 64:
        for rot in parents:
            for code, child in fn(rot):
                found.setdefault(code, child)
    else:
        chunk = max(1, len(parents) // (workers * 8))
        with ProcessPoolExecutor(max_workers=workers) as ex:
            for res in ex.map(_apply_many, [fn] * ((len(parents) + chunk - 1) // chunk),
                              [parents[s:s + chunk] for s in range(0, len(parents), chunk)]):
                for code, child in res:
                    found.setdefault(code, child)
    return [found[c] for c in sorted(found)]


def _apply_many(fn, rots):
    out = []
    for rot in rots:
        out.extend(fn(rot))
    return out


def resolve_threads(threads: int | None) -> int:
    if threads is None:
        env = os.environ.get("POLYTYPE_THREADS")
        threads = int(env) if env and env.isdigit() else 1
    return max(1, threads)


def _check_cap(n, lo, cap, force, what):
    if not isinstance(n, int) or n < lo:
        raise GraphArgumentError(f"{what} need n >= {lo}, got {n}")
    if n > cap:
        if not force:
            raise GraphArgumentError(f"{what}: n={n} exceeds the cap {cap}; pass force=True to override")
        log.warning("%s: n=%d exceeds the cap %d, continuing because force is set", what, n, cap)


_TRI_LEVELS: dict[int, list] = {4: [TETRAHEDRON_ROTATION]}


def triangulation_rotations(n: int, threads: int | None = None, force: bool = False) -> list:
    """Rotation systems of all triangulations on ``n`` vertices, sorted by planar code."""
    _check_cap(n, 4, TRIANGULATION_CAP, force, "triangulations")
    workers = resolve_threads(threads)
    k = max(m for m in _TRI_LEVELS if m <= n)
    while k < n:
        _TRI_LEVELS[k + 1] = _run_level(_triangulation_children, _TRI_LEVELS[k], workers)
        k += 1
    return _TRI_LEVELS[n]


_POLY_CACHE: dict[int, list] = {}


def polyhedron_rotations(n: int, threads: int | None = None, force: bool = False) -> list:
    """Rotation systems of all polyhedra on ``n`` vertices, from most to fewest edges."""
    _check_cap(n, 4, POLYHEDRA_CAP, force, "polyhedra")
    if n in _POLY_CACHE:
        return _POLY_CACHE[n]
    workers = resolve_threads(threads)
    level = triangulation_rotations(n, workers, force=True)
    out = list(level)
    while level:
        level = _run_level(_deletion_children, level, workers)
        out.extend(level)
    _POLY_CACHE[n] = out
    return out


def _canonical_graphs(rotations):
    graphs = []
    for rot in rotations:
        g = canonical_graph(Graph.from_adjacency(rot))
        graphs.append((to_graph6(g), g))
    graphs.sort(key=lambda t: t[0])
    return [g for _, g in graphs]


def triangulations(n: int, threads: int | None = None, force: bool = False):
    """Every triangulation on ``n`` vertices once, canonically labelled, in canonical-form order."""
    yield from _canonical_graphs(triangulation_rotations(n, threads, force))


def polyhedra(n: int, threads: int | None = None, force: bool = False):
    """Every polyhedron on ``n`` vertices once, canonically labelled, in canonical-form order."""
    yield from _canonical_graphs(polyhedron_rotations(n, threads, force))


@dataclass
class EnumerationReport:
    kind: str
    n: int
    count: int = 0
    histogram: Counter = field(default_factory=Counter)
    elapsed: float = 0.0

    def add(self, g: Graph) -> None:
        self.count += 1
        self.histogram[str(type_of(g))] += 1

    def to_json(self, timing: bool = True) -> dict:
        out = {
            "kind": self.kind,
            "n": self.n,
            "count": self.count,
            "histogram": {k: self.histogram[k] for k in sorted(self.histogram, key=_type_sort_key)},
        }
        if timing:
            out["elapsed"] = round(self.elapsed, 3)
        return out

    def dumps(self, timing: bool = True) -> str:
        return json.dumps(self.to_json(timing), sort_keys=False)


def _type_sort_key(text):
    return [int(x) for x in text.strip("{}").split(",") if x]


def enumerate_with_report(kind: str, n: int, threads: int | None = None, force: bool = False):
    """Materialise a stream together with its per-type histogram."""
    start = time.perf_counter()
    if kind in ("tri", "triangulations"):
        graphs = list(triangulations(n, threads, force))
        kind = "tri"
    elif kind in ("poly", "polyhedra"):
        graphs = list(polyhedra(n, threads, force))
        kind = "poly"
    else:
        raise GraphArgumentError(f"unknown class {kind!r}; expected 'tri' or 'poly'")
    report = EnumerationReport(kind, n)
    for g in graphs:
        report.add(g)
    report.elapsed = time.perf_counter() - start
    return graphs, report


def random_polyhedron(n: int, seed: int = 0) -> Graph:
    """Seeded random polyhedron on ``n`` vertices.

    A random triangulation is grown by random vertex splits, then random
    edges are deleted (each deletion kept only if the graph stays
    3-connected) for a random number of attempts.
    """
    if not isinstance(n, int) or n < 4:
        raise GraphArgumentError(f"random_polyhedron needs n >= 4, got {n}")
    rng = random.Random(f"polytype:{n}:{seed}")
    rot = [list(r) for r in TETRAHEDRON_ROTATION]
    while len(rot) < n:
        v = rng.randrange(len(rot))
        d = len(rot[v])
        i = rng.randrange(d)
        k = rng.randrange(1, d)
        rot = _split(rot, v, i, (i + k) % d)
    g = Graph.from_adjacency(rot)
    attempts = rng.randrange(0, g.q - n + 2)
    for _ in range(attempts):
        edges = g.edges()
        u, v = edges[rng.randrange(len(edges))]
        if g.degree(u) <= 3 or g.degree(v) <= 3:
            continue
        h = Graph.from_masks([m & ~((1 << v) if w == u else (1 << u) if w == v else 0)
                              for w, m in enumerate(g.masks)])
        if is_3_connected(h):
            g = h
    return g


def random_radius1_polyhedron(n: int, seed: int = 0) -> Graph:
    """Seeded pyramid over an ``n``-cycle plus random non-crossing chords.

    Chords drawn on the side of the base away from the apex keep the graph
    planar, and adding edges never breaks 3-connectivity, so every result
    is a polyhedron of radius 1 with the apex ``n`` dominating.
    """
    if not isinstance(n, int) or n < 3:
        raise GraphArgumentError(f"random_radius1_polyhedron needs n >= 3, got {n}")
    rng = random.Random(f"polytype-r1:{n}:{seed}")
    chords = []
    for _ in range(rng.randrange(0, 2 * n)):
        a, b = sorted(rng.sample(range(n), 2))
        if b - a in (1, n - 1) or (a, b) in chords:
            continue
        if any((a < c < b) != (a < d < b) and len({a, b, c, d}) == 4 for c, d in chords):
            continue
        chords.append((a, b))
    edges = [(k, (k + 1) % n) for k in range(n)] + [(k, n) for k in range(n)] + chords
    return Graph(n + 1, edges)


def clear_caches() -> None:
    """Forget every enumerated level, so the next call recomputes from scratch."""
    _TRI_LEVELS.clear()
    _TRI_LEVELS[4] = [TETRAHEDRON_ROTATION]
    _POLY_CACHE.clear()
