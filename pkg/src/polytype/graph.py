"""Immutable simple graphs and the pairwise common-neighbour computations.

Vertices are the dense integers ``0..p-1``. Every graph keeps its
adjacency twice: as frozensets (for readable iteration) and as integer
bitmasks (for fast intersections and popcounts). The bitmask path is the
one used everywhere in hot loops; it is exact for any order, and for the
enumeration workloads (p <= 64) each row fits a machine word.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .errors import DisconnectedGraphError, GraphArgumentError


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Simple undirected graph on vertices ``0..p-1``.

    Instances are immutable and hashable; two graphs compare equal when
    they have the same order and the same labelled edge set.

    >>> g = Graph(3, [(0, 1), (1, 2)])
    >>> g.q, sorted(g.neighbors(1))
    (2, [0, 2])
    """

    __slots__ = ("_p", "_masks", "_adj", "_q", "_hash")

    def __init__(self, p: int, edges: Iterable[tuple[int, int]] = ()):
        if p < 0:
            raise GraphArgumentError(f"vertex count must be non-negative, got {p}")
        masks = [0] * p
        for u, v in edges:
            if not (0 <= u < p and 0 <= v < p):
                raise GraphArgumentError(f"edge ({u}, {v}) has an endpoint outside 0..{p - 1}")
            if u == v:
                raise GraphArgumentError(f"self-loop at vertex {u}")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self._init(p, tuple(masks))

    def _init(self, p, masks):
        self._p = p
        self._masks = masks
        self._adj = tuple(frozenset(_bits(m)) for m in masks)
        self._q = sum(m.bit_count() for m in masks) // 2
        self._hash = None

    @classmethod
    def from_masks(cls, masks: Iterable[int]) -> "Graph":
        """Build from adjacency bitmasks; symmetry and loop-freeness are checked."""
        masks = tuple(masks)
        p = len(masks)
        full = (1 << p) - 1
        for u, m in enumerate(masks):
            if m & ~full:
                raise GraphArgumentError(f"row {u} references a vertex outside 0..{p - 1}")
            if m >> u & 1:
                raise GraphArgumentError(f"self-loop at vertex {u}")
            for v in _bits(m):
                if not masks[v] >> u & 1:
                    raise GraphArgumentError(f"adjacency not symmetric on ({u}, {v})")
        g = cls.__new__(cls)
        g._init(p, masks)
        return g

    @classmethod
    def from_adjacency(cls, adjacency) -> "Graph":
        """Build from a mapping or sequence ``u -> iterable of neighbours``."""
        if hasattr(adjacency, "items"):
            p = len(adjacency)
            items = adjacency.items()
        else:
            adjacency = list(adjacency)
            p = len(adjacency)
            items = enumerate(adjacency)
        masks = [0] * p
        for u, nbrs in items:
            if not 0 <= u < p:
                raise GraphArgumentError(f"vertex {u} outside 0..{p - 1}")
            for v in nbrs:
                if not 0 <= v < p:
                    raise GraphArgumentError(f"vertex {v} outside 0..{p - 1}")
                masks[u] |= 1 << v
        return cls.from_masks(masks)

    @property
    def p(self) -> int:
        return self._p

    @property
    def q(self) -> int:
        return self._q

    @property
    def masks(self) -> tuple[int, ...]:
        return self._masks

    @property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        return self._adj

    def vertices(self) -> range:
        return range(self._p)

    def neighbors(self, u: int) -> frozenset[int]:
        return self._adj[u]

    def degree(self, u: int) -> int:
        return self._masks[u].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._masks[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self._p) for v in sorted(self._adj[u]) if u < v]

    def relabel(self, perm) -> "Graph":
        """Return the graph with vertex ``u`` renamed ``perm[u]``."""
        perm = list(perm)
        if sorted(perm) != list(range(self._p)):
            raise GraphArgumentError("relabelling must be a permutation of 0..p-1")
        return Graph(self._p, ((perm[u], perm[v]) for u, v in self.edges()))

    def subgraph(self, keep: Iterable[int]) -> "Graph":
        """Induced subgraph on ``keep``; vertices are renumbered in increasing order."""
        keep = sorted(set(keep))
        index = {v: i for i, v in enumerate(keep)}
        return Graph(
            len(keep),
            ((index[u], index[v]) for u, v in self.edges() if u in index and v in index),
        )

    def delete_vertices(self, drop: Iterable[int]) -> "Graph":
        drop = set(drop)
        return self.subgraph(v for v in range(self._p) if v not in drop)

    def without_isolated(self) -> tuple["Graph", list[int]]:
        """Drop isolated vertices; also return the kept original ids in order."""
        kept = [v for v in range(self._p) if self._masks[v]]
        return self.subgraph(kept), kept

    def add_edges(self, extra: Iterable[tuple[int, int]]) -> "Graph":
        return Graph(self._p, list(self.edges()) + list(extra))

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._p == other._p and self._masks == other._masks

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._p, self._masks))
        return self._hash

    def __repr__(self):
        return f"Graph(p={self._p}, q={self._q})"


@dataclass(frozen=True)
class TypeSet:
    """A finite set of non-negative integers, held sorted and deduplicated.

    This is the value ``A(G)`` computed by :func:`type_of`, and also the
    input currency of the set-parametrised constructions.
    """

    values: tuple[int, ...]

    def __init__(self, values: Iterable[int] = ()):
        vals = tuple(sorted(set(int(v) for v in values)))
        if vals and vals[0] < 0:
            raise GraphArgumentError(f"type values must be non-negative, got {vals[0]}")
        object.__setattr__(self, "values", vals)

    @classmethod
    def at_least(cls, n: int, values: Iterable[int]) -> "TypeSet":
        """Validated constructor for a non-empty set of integers all ``>= n``.

        Repeated values are rejected rather than merged: multiplicities are
        a separate parameter wherever they matter.
        """
        raw = [int(v) for v in values]
        if not raw:
            raise GraphArgumentError(f"a set of integers >= {n} must be non-empty")
        if len(set(raw)) != len(raw):
            raise GraphArgumentError(f"repeated values in {raw}; pass multiplicities separately")
        low = [v for v in raw if v < n]
        if low:
            raise GraphArgumentError(f"values {low} are below the minimum {n}")
        return cls(raw)

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def __contains__(self, item):
        return item in self.values

    def __or__(self, other):
        return TypeSet(self.values + tuple(other))

    def max(self) -> int:
        return self.values[-1]

    def min(self) -> int:
        return self.values[0]

    def as_set(self) -> frozenset[int]:
        return frozenset(self.values)

    def __str__(self):
        return "{" + ",".join(map(str, self.values)) + "}"


@dataclass(frozen=True)
class PairProfile:
    u: int
    v: int
    count: int
    witnesses: frozenset[int]


def _check_vertex(g: Graph, u: int) -> None:
    if not isinstance(u, int) or not 0 <= u < g.p:
        raise GraphArgumentError(f"vertex {u!r} outside 0..{g.p - 1}")


def common_neighbors(g: Graph, u: int, v: int) -> PairProfile:
    """Common neighbourhood of two distinct vertices, normalised to ``u < v``."""
    _check_vertex(g, u)
    _check_vertex(g, v)
    if u == v:
        raise GraphArgumentError("common neighbours need two distinct vertices")
    if u > v:
        u, v = v, u
    inter = g.masks[u] & g.masks[v]
    return PairProfile(u, v, inter.bit_count(), frozenset(_bits(inter)))


def pair_counts(g: Graph) -> Iterator[tuple[int, int, int]]:
    """Yield ``(u, v, |N(u,v)|)`` for every unordered pair ``u < v``."""
    masks = g.masks
    for u in range(g.p):
        mu = masks[u]
        for v in range(u + 1, g.p):
            yield u, v, (mu & masks[v]).bit_count()


def type_of(g: Graph) -> TypeSet:
    """The set of common-neighbour counts over all unordered vertex pairs.

    Pairs in different components simply contribute 0.
    """
    if g.p < 2:
        raise GraphArgumentError(f"the type is defined over pairs; graph has only {g.p} vertex")
    masks = g.masks
    seen = set()
    for u in range(g.p - 1):
        mu = masks[u]
        for mv in masks[u + 1:]:
            seen.add((mu & mv).bit_count())
    return TypeSet(seen)


def extreme_pairs(g: Graph) -> tuple[PairProfile, PairProfile]:
    """First pairs (in ``u < v`` order) realising the minimum and maximum of the type."""
    best_lo = best_hi = None
    for u, v, c in pair_counts(g):
        if best_lo is None or c < best_lo[2]:
            best_lo = (u, v, c)
        if best_hi is None or c > best_hi[2]:
            best_hi = (u, v, c)
    if best_lo is None:
        raise GraphArgumentError("graph has fewer than two vertices")
    return common_neighbors(g, *best_lo[:2]), common_neighbors(g, *best_hi[:2])


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop distances from ``source``; unreachable vertices get -1."""
    dist = [-1] * g.p
    dist[source] = 0
    frontier = 1 << source
    seen = frontier
    d = 0
    masks = g.masks
    while frontier:
        d += 1
        nxt = 0
        for u in _bits(frontier):
            nxt |= masks[u]
        nxt &= ~seen
        seen |= nxt
        for v in _bits(nxt):
            dist[v] = d
        frontier = nxt
    return dist


def is_connected(g: Graph) -> bool:
    if g.p == 0:
        return True
    return min(bfs_distances(g, 0)) >= 0


def eccentricity(g: Graph, u: int) -> int:
    _check_vertex(g, u)
    dist = bfs_distances(g, u)
    if min(dist) < 0:
        far = dist.index(-1)
        raise DisconnectedGraphError(f"no path between {u} and {far}", pair=(u, far))
    return max(dist)


def eccentricities(g: Graph) -> list[int]:
    return [eccentricity(g, u) for u in range(g.p)]


def radius(g: Graph) -> int:
    if g.p == 0:
        raise GraphArgumentError("radius of the empty graph is undefined")
    return min(eccentricities(g))


def diameter(g: Graph) -> int:
    if g.p == 0:
        raise GraphArgumentError("diameter of the empty graph is undefined")
    return max(eccentricities(g))


def dominating_vertices(g: Graph) -> list[int]:
    """Vertices adjacent to every other vertex (eccentricity 1)."""
    full = (1 << g.p) - 1
    return [u for u in range(g.p) if g.masks[u] | (1 << u) == full] if g.p > 1 else []


def contains_k2n(g: Graph, n: int) -> bool:
    """True iff some pair of vertices has at least ``n`` common neighbours."""
    if n < 2:
        raise GraphArgumentError(f"K(2,n) needs n >= 2, got {n}")
    return any(c >= n for _, _, c in pair_counts(g))


def has_four_cycle(g: Graph) -> bool:
    """Direct search for a cycle a-b-c-d-a.

    Walks paths of length two from every vertex instead of reading pair
    counts, so it can serve as an independent check on :func:`type_of`.
    """
    masks = g.masks
    for a in range(g.p):
        reached = 0
        for b in _bits(masks[a]):
            ends = masks[b] & ~(1 << a)
            if reached & ends:
                return True
            reached |= ends
    return False


def degree_sequence(g: Graph) -> list[int]:
    return sorted((m.bit_count() for m in g.masks), reverse=True)


def four_cycles(g: Graph) -> Iterator[tuple[int, int, int, int]]:
    """Every 4-cycle once, as ``(a, b, c, d)`` with ``a`` its smallest vertex."""
    masks = g.masks
    for a, c in combinations(range(g.p), 2):
        mids = [m for m in _bits(masks[a] & masks[c]) if m > a]
        for b, d in combinations(mids, 2):
            yield (a, b, c, d)
