"""Canonical labelling of abstract graphs, and canonical codes of plane graphs.

``canonical_form`` is a small individualisation-refinement search in the
style of nauty: equitable partition refinement, depth-first
individualisation of the first smallest non-trivial cell, and pruning by
automorphisms discovered at equal leaves. The canonical form is the
graph6 string of the graph relabelled by the winning leaf.

``planar_code`` is the classical traversal code for 3-connected plane
graphs. By Whitney's theorem such graphs have one embedding up to mirror
image, so minimising the code over start darts and both orientations
yields an isomorphism-complete code; it is much cheaper than the general
search and is what the enumerators use for deduplication.
"""

from __future__ import annotations

from .errors import GraphArgumentError
from .formats import to_graph6
from .graph import Graph, _bits

MAX_ORDER = 64


def _refine(masks, cells, splitters):
    """Refine an ordered partition until it is equitable.

    ``cells`` is a list of lists; ``splitters`` a list of cell indices to
    process first. Fragments of a split cell are ordered by increasing
    neighbour count into the splitter, which keeps the procedure
    label-invariant.
    """
    queue = [sum(1 << v for v in cells[i]) for i in splitters]
    while queue:
        smask = queue.pop(0)
        k = 0
        while k < len(cells):
            cell = cells[k]
            if len(cell) == 1:
                k += 1
                continue
            counts = {}
            for v in cell:
                counts.setdefault((masks[v] & smask).bit_count(), []).append(v)
            if len(counts) == 1:
                k += 1
                continue
            frags = [counts[c] for c in sorted(counts)]
            cells[k:k + 1] = frags
            for f in frags:
                queue.append(sum(1 << v for v in f))
            k += len(frags)
    return cells


def _leaf_code(masks, lab):
    pos = [0] * len(lab)
    for i, v in enumerate(lab):
        pos[v] = i
    code = []
    for v in lab:
        row = 0
        for w in _bits(masks[v]):
            row |= 1 << pos[w]
        code.append(row)
    return tuple(code)


def _orbit_rep(gens, p, fixed):
    """Union-find orbit representatives under automorphisms fixing ``fixed`` pointwise."""
    parent = list(range(p))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        if all(g[f] == f for f in fixed):
            for x in range(p):
                a, b = find(x), find(g[x])
                if a != b:
                    parent[max(a, b)] = min(a, b)
    return find


def canonical_labeling(g: Graph) -> list[int]:
    """Vertex order ``lab`` such that ``lab[i]`` is the vertex placed at position ``i``."""
    if g.p > MAX_ORDER:
        raise GraphArgumentError(f"canonical labelling supports p <= {MAX_ORDER}, got {g.p}")
    p = g.p
    if p == 0:
        return []
    masks = g.masks
    by_deg = {}
    for v in range(p):
        by_deg.setdefault(masks[v].bit_count(), []).append(v)
    root = [by_deg[d] for d in sorted(by_deg)]
    root = _refine(masks, root, list(range(len(root))))

    best = {"code": None, "lab": None}
    autos = []

    def search(cells, path):
        target = None
        for i, c in enumerate(cells):
            if len(c) > 1 and (target is None or len(c) < len(cells[target])):
                target = i
        if target is None:
            lab = [c[0] for c in cells]
            code = _leaf_code(masks, lab)
            if best["code"] is None or code < best["code"]:
                best["code"], best["lab"] = code, lab
            elif code == best["code"]:
                perm = [0] * p
                for a, b in zip(best["lab"], lab):
                    perm[a] = b
                autos.append(perm)
            return
        tried = []
        for v in sorted(cells[target]):
            if tried:
                find = _orbit_rep(autos, p, path)
                if any(find(v) == find(t) for t in tried):
                    continue
            tried.append(v)
            rest = [w for w in cells[target] if w != v]
            child = [list(c) for c in cells[:target]] + [[v], rest] + [list(c) for c in cells[target + 1:]]
            child = _refine(masks, child, [target])
            search(child, path + [v])

    search(root, [])
    return best["lab"]


def canonical_graph(g: Graph) -> Graph:
    lab = canonical_labeling(g)
    pos = [0] * g.p
    for i, v in enumerate(lab):
        pos[v] = i
    return g.relabel(pos)


def canonical_form(g: Graph) -> bytes:
    """Isomorphism-complete byte string: graph6 of the canonically relabelled graph."""
    return to_graph6(canonical_graph(g))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.p != h.p or g.q != h.q:
        return False
    if sorted(g.masks[v].bit_count() for v in range(g.p)) != sorted(h.masks[v].bit_count() for v in range(h.p)):
        return False
    return canonical_form(g) == canonical_form(h)


def planar_code(rotation) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]:
    """Minimal traversal code of a 3-connected plane graph, with its relabelled rotation.

    Starting from a dart ``u -> v`` and an orientation, vertices are
    numbered in order of discovery while each numbered vertex lists its
    neighbours around its rotation, beginning at the neighbour it was
    discovered from. Only darts maximising ``(deg u, deg v)`` are tried;
    that key is preserved by every isomorphism, so the minimum stays
    canonical. Returns ``(code, rotation)`` where the rotation is expressed
    in the new numbering (0-based) and orientation.
    """
    n = len(rotation)
    deg = [len(r) for r in rotation]
    pos = [{w: i for i, w in enumerate(r)} for r in rotation]
    top = max(deg)
    starts = []
    best_key = None
    for u in range(n):
        if deg[u] != top:
            continue
        for v in rotation[u]:
            key = deg[v]
            if best_key is None or key > best_key:
                best_key = key
                starts = [(u, v)]
            elif key == best_key:
                starts.append((u, v))

    best = None
    best_rot = None
    for u, v in starts:
        for o in (1, -1):
            number = [-1] * n
            number[u], number[v] = 0, 1
            order = [u, v]
            first = {u: v, v: u}
            code = []
            k = 0
            worse = False
            better = best is None
            idx = 0
            while k < len(order):
                x = order[k]
                r = rotation[x]
                d = len(r)
                s = pos[x][first[x]]
                for t in range(d):
                    y = r[(s + o * t) % d]
                    if number[y] < 0:
                        number[y] = len(order)
                        order.append(y)
                        first[y] = x
                    c = number[y] + 1
                    if not better:
                        b = best[idx]
                        if c > b:
                            worse = True
                            break
                        if c < b:
                            better = True
                    code.append(c)
                    idx += 1
                if worse:
                    break
                if not better and best[idx] != 0:
                    better = True
                code.append(0)
                idx += 1
                k += 1
            if worse or not better:
                continue
            best = code
            best_rot = (order, number, o, first)
    order, number, o, first = best_rot
    new_rot = []
    for x in order:
        r = rotation[x]
        d = len(r)
        s = pos[x][first[x]]
        new_rot.append(tuple(number[r[(s + o * t) % d]] for t in range(d)))
    return tuple(best), tuple(new_rot)
