"""Planar embeddings, 3-connectivity and polyhedrality certificates.

Planarity testing itself is delegated to networkx's left-right test; this
module turns its output into a plain rotation system and derives faces,
plane neighbourhoods and triangulation checks from that rotation system.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import networkx as nx

from .errors import DisconnectedGraphError, GraphArgumentError, NotPolyhedralError
from .graph import Graph, is_connected


def trace_faces(rotation) -> list[tuple[int, ...]]:
    """Face boundary walks of a rotation system.

    The dart following ``u -> v`` is ``v -> w`` where ``w`` comes right after
    ``u`` in the cyclic order at ``v``. Each walk is rotated so that it
    starts at its smallest vertex; walks are returned sorted.
    """
    pos = [{w: i for i, w in enumerate(r)} for r in rotation]
    seen = set()
    faces = []
    for u, rot in enumerate(rotation):
        for v in rot:
            if (u, v) in seen:
                continue
            walk = []
            a, b = u, v
            while (a, b) not in seen:
                seen.add((a, b))
                walk.append(a)
                rb = rotation[b]
                a, b = b, rb[(pos[b][a] + 1) % len(rb)]
            faces.append(_normalise_walk(walk))
    faces.sort()
    return faces


def _normalise_walk(walk):
    k = walk.index(min(walk))
    return tuple(walk[k:] + walk[:k])


@dataclass(frozen=True)
class Embedding:
    """A rotation system together with its faces.

    ``rotation[u]`` is the cyclic order of the neighbours of ``u``. Faces are
    the boundary walks produced by :func:`trace_faces`; ``outer_face`` indexes
    the lexicographically smallest walk. The choice is cosmetic: a polyhedron
    has one embedding up to which region is drawn outside.
    """

    rotation: tuple[tuple[int, ...], ...]
    faces: tuple[tuple[int, ...], ...] = field(default=())
    outer_face: int = 0

    @classmethod
    def from_rotation(cls, rotation) -> "Embedding":
        rotation = tuple(tuple(r) for r in rotation)
        faces = tuple(trace_faces(rotation))
        return cls(rotation, faces, 0)

    @property
    def p(self) -> int:
        return len(self.rotation)

    @property
    def q(self) -> int:
        return sum(len(r) for r in self.rotation) // 2

    def face_lengths(self) -> list[int]:
        return [len(f) for f in self.faces]

    def euler_characteristic(self) -> int:
        return self.p - self.q + len(self.faces)

    def graph(self) -> Graph:
        return Graph.from_adjacency(self.rotation)

    def matches(self, g: Graph) -> bool:
        return len(self.rotation) == g.p and all(
            len(r) == len(set(r)) and set(r) == g.neighbors(u) for u, r in enumerate(self.rotation)
        )

    def faces_at(self, u: int) -> list[tuple[int, ...]]:
        return [f for f in self.faces if u in f]


@dataclass(frozen=True)
class NonPlanarWitness:
    """Edge set of a subdivision of K5 or K(3,3) found in the input."""

    kind: str
    edges: tuple[tuple[int, int], ...]


def _to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.p))
    h.add_edges_from(g.edges())
    return h


def _witness_from(cert: nx.Graph) -> NonPlanarWitness:
    edges = tuple(sorted(tuple(sorted(e)) for e in cert.edges()))
    branch = [v for v in cert.nodes if cert.degree(v) > 2]
    kind = "K5" if len(branch) == 5 else "K3,3"
    return NonPlanarWitness(kind, edges)


def check_planarity(g: Graph) -> tuple[bool, Embedding | NonPlanarWitness]:
    """Planarity of any graph (connected or not): embedding or Kuratowski witness."""
    ok, cert = nx.check_planarity(_to_nx(g), counterexample=True)
    if not ok:
        return False, _witness_from(cert)
    rotation = [tuple(cert.neighbors_cw_order(u)) if g.degree(u) else () for u in range(g.p)]
    return True, Embedding.from_rotation(rotation)


def planar_embed(g: Graph) -> Embedding | NonPlanarWitness:
    """Rotation system of a connected planar graph, or a Kuratowski witness."""
    if not is_connected(g):
        raise DisconnectedGraphError("planar_embed needs a connected graph")
    return check_planarity(g)[1]


def _articulation_points(masks, alive: int) -> tuple[bool, list[int]]:
    """Connectivity and cut vertices of the subgraph induced on ``alive``."""
    if not alive:
        return True, []
    root = (alive & -alive).bit_length() - 1
    disc = {root: 0}
    low = {root: 0}
    parent = {root: -1}
    cuts = set()
    root_children = 0
    counter = 1
    stack = [(root, masks[root] & alive)]
    while stack:
        u, todo = stack[-1]
        if todo:
            w_bit = todo & -todo
            stack[-1] = (u, todo ^ w_bit)
            w = w_bit.bit_length() - 1
            if w not in disc:
                disc[w] = low[w] = counter
                counter += 1
                parent[w] = u
                if u == root:
                    root_children += 1
                stack.append((w, masks[w] & alive))
            elif w != parent[u]:
                low[u] = min(low[u], disc[w])
        else:
            stack.pop()
            pu = parent[u]
            if pu >= 0:
                low[pu] = min(low[pu], low[u])
                if pu != root and low[u] >= disc[pu]:
                    cuts.add(pu)
    if root_children > 1:
        cuts.add(root)
    connected = len(disc) == alive.bit_count()
    return connected, sorted(cuts)


def separating_set(g: Graph) -> tuple[int, ...] | None:
    """A vertex set of size < 3 whose removal disconnects ``g``; None if 3-connected.

    Graphs with at most three vertices are never 3-connected; for them the
    returned witness is the empty tuple.
    """
    if g.p <= 3:
        return ()
    full = (1 << g.p) - 1
    ok, cuts = _articulation_points(g.masks, full)
    if not ok:
        return ()
    if cuts:
        return (cuts[0],)
    for x in range(g.p):
        alive = full & ~(1 << x)
        ok, cuts = _articulation_points(g.masks, alive)
        if not ok:
            return (x,)
        if cuts:
            return tuple(sorted((x, cuts[0])))
    return None


def is_3_connected(g: Graph) -> bool:
    return separating_set(g) is None


def is_2_connected(g: Graph) -> bool:
    if g.p <= 2:
        return False
    ok, cuts = _articulation_points(g.masks, (1 << g.p) - 1)
    return ok and not cuts


@dataclass(frozen=True)
class PolyhedralityCertificate:
    is_planar: bool
    is_3_connected: bool
    kuratowski: NonPlanarWitness | None = None
    separator: tuple[int, ...] | None = None
    embedding: Embedding | None = field(default=None, compare=False, repr=False)

    @property
    def verdict(self) -> bool:
        return self.is_planar and self.is_3_connected

    def __bool__(self):
        return self.verdict

    def to_json(self) -> dict:
        out = {
            "polyhedron": self.verdict,
            "planar": self.is_planar,
            "three_connected": self.is_3_connected,
        }
        if self.kuratowski is not None:
            out["kuratowski"] = {"kind": self.kuratowski.kind, "edges": [list(e) for e in self.kuratowski.edges]}
        if self.separator is not None:
            out["separator"] = list(self.separator)
        return out


def is_polyhedron(g: Graph) -> PolyhedralityCertificate:
    """Planar and 3-connected (which already forces at least four vertices)."""
    planar, cert = check_planarity(g)
    sep = separating_set(g)
    return PolyhedralityCertificate(
        is_planar=planar,
        is_3_connected=sep is None,
        kuratowski=None if planar else cert,
        separator=sep,
        embedding=cert if planar else None,
    )


def require_polyhedron(g: Graph) -> Embedding:
    cert = is_polyhedron(g)
    if not cert:
        reason = "not planar" if not cert.is_planar else f"separated by {list(cert.separator)}"
        raise NotPolyhedralError(f"input is not a polyhedron ({reason})", certificate=cert)
    return cert.embedding


def faces(emb: Embedding) -> list[tuple[int, ...]]:
    return list(emb.faces)


def is_triangulation(g: Graph, emb: Embedding | None = None) -> bool:
    """Every face is a triangle; for polyhedra this is the same as ``q == 3p - 6``."""
    if emb is None:
        emb = require_polyhedron(g)
    elif not emb.matches(g):
        raise GraphArgumentError("embedding does not belong to this graph")
    return all(len(f) == 3 for f in emb.faces)


def is_quadrangulation(g: Graph, emb: Embedding | None = None) -> bool:
    if emb is None:
        emb = require_polyhedron(g)
    return all(len(f) == 4 for f in emb.faces)


def plane_neighbourhood(g: Graph, emb: Embedding, u: int) -> Graph:
    """Subgraph made of every edge lying on a face that contains ``u``.

    The result keeps all ``p`` vertex ids; vertices off those faces are
    isolated. Use :meth:`Graph.without_isolated` to compact it.
    """
    if not 0 <= u < g.p:
        raise GraphArgumentError(f"vertex {u} outside 0..{g.p - 1}")
    if not emb.matches(g):
        raise GraphArgumentError("embedding does not belong to this graph")
    if len(emb.faces) != g.q - g.p + 2:
        raise GraphArgumentError("rotation system is not a planar embedding")
    edges = set()
    for f in emb.faces:
        if u in f:
            for i, a in enumerate(f):
                b = f[(i + 1) % len(f)]
                edges.add((min(a, b), max(a, b)))
    return Graph(g.p, sorted(edges))


def vertex_mask(face) -> int:
    m = 0
    for v in face:
        m |= 1 << v
    return m


__all__ = [
    "Embedding",
    "NonPlanarWitness",
    "PolyhedralityCertificate",
    "check_planarity",
    "faces",
    "is_2_connected",
    "is_3_connected",
    "is_polyhedron",
    "is_quadrangulation",
    "is_triangulation",
    "plane_neighbourhood",
    "planar_embed",
    "require_polyhedron",
    "separating_set",
    "trace_faces",
]
