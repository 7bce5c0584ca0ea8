"""Batch verification suites behind ``polytype verify``.

Each suite returns ``(report, ok)`` where ``report`` is a JSON-ready dict
with no timing fields, so reports are byte-identical across runs and
thread counts. ``ok`` is False exactly when some observation contradicts
the classification.
"""

from __future__ import annotations

import random
from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor

from . import families
from .canonical import canonical_form
from .classify import classify, radius1_type, verify_lemmas
from .enumeration import polyhedron_rotations, random_radius1_polyhedron, resolve_threads, triangulation_rotations
from .errors import ConstructionError, FalsificationError, GraphArgumentError
from .formats import to_graph6
from .graph import Graph, dominating_vertices, type_of
from .planarity import Embedding, is_polyhedron

# simplicial 3-polytopes with n = 4..12 vertices; an independent published count
TRIANGULATION_COUNTS = {4: 1, 5: 1, 6: 2, 7: 5, 8: 14, 9: 50, 10: 233, 11: 1249, 12: 7595}
# all 3-polytopes with n = 4..10 vertices
POLYHEDRON_COUNTS = {4: 1, 5: 2, 6: 7, 7: 34, 8: 257, 9: 2606, 10: 32300}

SUITES = ("theorem1", "table2-sweep", "lemmas", "families")


def _pmap(fn, items, threads):
    """``map`` that fans out to processes for large inputs and keeps input order."""
    workers = resolve_threads(threads)
    if workers <= 1 or len(items) < 256:
        return [fn(x) for x in items]
    chunk = max(1, len(items) // (workers * 8))
    with ProcessPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(fn, items, chunksize=chunk))


def _g6(g: Graph) -> str:
    return to_graph6(g).decode("ascii")


# ---------------------------------------------------------------- theorem1

def _no_one_expected(n):
    """Canonical forms of the named graphs without a 1 on ``n`` vertices."""
    out = {}
    if n >= 5:
        out[canonical_form(families.bipyramid(n - 2))] = f"bipyr:{n - 2}"
    out.setdefault(canonical_form(families.t_graph(n - 2)), f"t:{n - 2}")
    for i in range(2, 11):
        s = families.sporadic(i)
        if s.p == n:
            out[canonical_form(s)] = f"s:{i}"
    return out


EXPECTED_PARTITION = {
    "no1:2": 1, "no1:0,2": 1, "no1:2,3": 2, "no1:2,4": 1, "no1:0,2,3": 1,
    "no1:2,3,4": 6, "no1:2,3,l": 12, "no1:0,2,3,4": 1,
}


def suite_theorem1(threads=None, max_tri: int = 12, max_poly: int = 10) -> tuple[dict, bool]:
    """Graphs without a pair sharing exactly one neighbour, found exhaustively.

    Over triangulations on 4..``max_tri`` vertices those graphs must be
    exactly the bipyramids, the T graphs and the sporadic triangulations,
    split over the rows as listed in ``EXPECTED_PARTITION``; over polyhedra
    on 4..``max_poly`` vertices the only other one must be the cube.
    """
    ok = True
    per_n = {}
    partition = defaultdict(list)
    for n in range(4, max_tri + 1):
        rots = triangulation_rotations(n, threads)
        found = {}
        for rot in rots:
            g = Graph.from_adjacency(rot)
            a = type_of(g)
            if 1 in a:
                continue
            c = classify(g, Embedding.from_rotation(rot), lemmas=False)
            found[canonical_form(g)] = (c.family, c.table_row.id, list(a))
        expected = _no_one_expected(n)
        extras = sorted(found[f][0] for f in found if f not in expected)
        missing = sorted(expected[f] for f in expected if f not in found)
        count_ok = n not in TRIANGULATION_COUNTS or len(rots) == TRIANGULATION_COUNTS[n]
        ok &= count_ok and not extras and not missing
        for fam, row, _ in found.values():
            partition[row].append(fam)
        per_n[str(n)] = {
            "count": len(rots),
            "count_matches_published": count_ok,
            "without_one": sorted(f"{fam} {row}" for fam, row, _ in found.values()),
            "extras": extras,
            "missing": missing,
        }
    part = {row: sorted(v) for row, v in sorted(partition.items())}
    part_ok = {row: len(v) for row, v in part.items()} == EXPECTED_PARTITION if max_tri == 12 else True
    pairs_ok = True
    if max_tri == 12:
        for ell in range(5, 11):
            have = sorted(f for f in part.get("no1:2,3,l", []) if f.endswith(f":{ell}"))
            pairs_ok &= have == sorted([f"bipyr:{ell}", f"t:{ell}"])
    ok &= part_ok and pairs_ok

    cube_form = canonical_form(families.cube())
    others = []
    poly_counts = {}
    for n in range(4, max_poly + 1):
        rots = polyhedron_rotations(n, threads)
        poly_counts[str(n)] = len(rots)
        for rot in rots:
            g = Graph.from_adjacency(rot)
            if g.q == 3 * g.p - 6 or 1 in type_of(g):
                continue
            others.append(canonical_form(g))
    cube_ok = others == [cube_form]
    ok &= cube_ok
    report = {
        "suite": "theorem1",
        "triangulations": per_n,
        "row_partition": part,
        "row_partition_matches": part_ok,
        "bipyramid_t_pairs": pairs_ok,
        "polyhedra_counts": poly_counts,
        "non_triangulations_without_one": [_g6_bytes(f) for f in others],
        "cube_unique": cube_ok,
        "ok": ok,
    }
    return report, ok


def _g6_bytes(b: bytes) -> str:
    return b.decode("ascii")


# ---------------------------------------------------------------- table2-sweep

def _sweep_one(rot):
    """Classify one enumerated polyhedron; returns a small picklable summary."""
    emb = Embedding.from_rotation(rot)
    g = emb.graph()
    try:
        c = classify(g, emb, lemmas=False)
    except FalsificationError as exc:
        return ("falsified", str(exc), _g6(g), None, None)
    r1 = None
    if len(dominating_vertices(g)) == 1 and 1 in c.type:
        r1 = radius1_type(g, emb) == c.type
    notes = [x for x in c.notes if "allowed" in x]
    return (c.table_row.id, c.family, _g6(g) if notes else None, r1, str(c.type))


def suite_table2(threads=None, max_poly: int = 10, max_tri: int = 12, samples: int = 200,
                 seed: int = 0) -> tuple[dict, bool]:
    """Every enumerated type must match exactly one admissible row.

    Also checks the radius-1 type formula on every enumerated radius-1
    polyhedron outside the no-1 list and on ``samples`` random
    pyramid-plus-chord graphs, and records the {1,2}/{1,2,3}/{1,2,4}
    polyhedra that are not pyramids or W members (allowed at small order).
    """
    ok = True
    rows = {}
    recorded = []
    falsified = []
    r1_checked = r1_failed = 0
    types_seen = set()
    streams = [("poly", n, polyhedron_rotations(n, threads)) for n in range(4, max_poly + 1)]
    streams += [("tri", n, triangulation_rotations(n, threads)) for n in range(max_poly + 1, max_tri + 1)]
    for kind, n, rots in streams:
        hist = Counter()
        for row, fam, g6, r1, t in _pmap(_sweep_one, rots, threads):
            if row == "falsified":
                falsified.append({"graph6": g6, "error": fam})
                continue
            hist[row] += 1
            types_seen.add(t)
            if g6 is not None:
                recorded.append({"n": n, "graph6": g6})
            if r1 is not None:
                r1_checked += 1
                r1_failed += not r1
        rows[f"{kind}:{n}"] = dict(sorted(hist.items()))
    sample_failed = 0
    for s in range(samples):
        rng = random.Random(f"sweep:{seed}:{s}")
        g = random_radius1_polyhedron(rng.randrange(4, 25), rng.randrange(1 << 30))
        if len(dominating_vertices(g)) != 1 or 1 not in type_of(g):
            continue
        sample_failed += radius1_type(g) != type_of(g)
    ok = not falsified and r1_failed == 0 and sample_failed == 0
    recorded.sort(key=lambda r: (r["n"], r["graph6"]))
    report = {
        "suite": "table2-sweep",
        "rows": rows,
        "types_observed": sorted(types_seen, key=lambda t: [int(x) for x in t.strip("{}").split(",")]),
        "falsified": falsified,
        "radius1_formula": {"enumerated": r1_checked, "failed": r1_failed,
                            "random_samples": samples, "random_failed": sample_failed},
        "small_order_records": recorded,
        "ok": ok,
    }
    return report, ok


# ---------------------------------------------------------------- lemmas

def _lemmas_one(rot):
    emb = Embedding.from_rotation(rot)
    g = emb.graph()
    rep = verify_lemmas(g, emb, strict=False)
    return [(name, status) for name, status, _ in rep.results], (_g6(g) if not rep.ok else None)


def suite_lemmas(n: int = 8, threads=None) -> tuple[dict, bool]:
    """Every applicable structural statement on every polyhedron with ``n`` vertices."""
    tally = defaultdict(Counter)
    failing = []
    rots = polyhedron_rotations(n, threads)
    for results, bad in _pmap(_lemmas_one, rots, threads):
        for name, status in results:
            tally[name][status] += 1
        if bad is not None:
            failing.append(bad)
    ok = not failing
    report = {
        "suite": "lemmas",
        "n": n,
        "graphs": len(rots),
        "lemmas": {name: {s: c[s] for s in ("pass", "fail", "n/a")} for name, c in tally.items()},
        "failing_graphs": sorted(failing),
        "ok": ok,
    }
    return report, ok


# ---------------------------------------------------------------- families

SET_CONSTRUCTIONS = {
    "cat123": (families.caterpillar123, 4, {1, 2, 3}),
    "c124": (families.construction124, 5, {1, 2, 4}),
    "glue012": (families.glued_chain012, 3, {0, 1, 2}),
}


def random_value_sets(kind: str, count: int, seed: int = 0, top: int = 30, size: int = 5) -> list[list[int]]:
    """Seeded random inputs for a set construction: 1..``size`` values in ``lo..top``."""
    lo = SET_CONSTRUCTIONS[kind][1]
    rng = random.Random(f"values:{kind}:{seed}")
    return [sorted(rng.sample(range(lo, top + 1), rng.randint(1, size))) for _ in range(count)]


def check_member(label: str, build, expected) -> dict:
    """Build one family member and compare its type with ``expected`` via ``type_of``."""
    entry = {"spec": label, "expected": sorted(expected) if expected is not None else None}
    try:
        g = build()
    except (ConstructionError, GraphArgumentError) as exc:
        entry.update(observed=None, polyhedron=False, ok=False, error=str(exc))
        return entry
    a = list(type_of(g))
    poly = bool(is_polyhedron(g))
    entry.update(p=g.p, observed=a, polyhedron=poly,
                 ok=poly and (expected is None or a == sorted(expected)))
    return entry


def family_cases(samples: int = 20, seed: int = 0):
    """``(label, builder, expected type or None)`` for every family self-check."""
    F = families
    cases = []
    for ell in range(6, 21, 2):
        cases.append((f"b:{ell}", lambda e=ell: F.b_graph(e), {1, 2, ell}))
        cases.append((f"bp:{ell}", lambda e=ell: F.b_prime_graph(e), {1, 2, ell}))
    cases.append(("b:4", lambda: F.b_graph(4), None))
    cases.append(("bp:4", lambda: F.b_prime_graph(4), None))
    for ell in range(2, 21):
        exp = {2} if ell == 2 else {2, 3} if ell == 3 else {2, 3, ell}
        cases.append((f"t:{ell}", lambda e=ell: F.t_graph(e), exp))
    cases.append(("bipyr:3", lambda: F.bipyramid(3), {2, 3}))
    cases.append(("bipyr:4", lambda: F.bipyramid(4), {2, 4}))
    for n in range(5, 21):
        cases.append((f"bipyr:{n}", lambda k=n: F.bipyramid(k), {2, 3, n}))
    cases.append(("pyr:4", lambda: F.pyramid(4), {1, 2, 3}))
    for n in range(5, 31):
        cases.append((f"pyr:{n}", lambda k=n: F.pyramid(k), {1, 2}))
    for i in range(1, 11):
        cases.append((f"s:{i}", lambda k=i: F.sporadic(k), F.SPORADIC_TYPES[i]))
    cases += [
        ("octahedron", F.octahedron, {2, 4}),
        ("icosahedron", F.icosahedron, {0, 2}),
        ("dodecahedron", F.dodecahedron, {0, 1}),
        ("w3:n=6;e=0-2", lambda: F.build("w3:n=6;e=0-2"), {1, 2, 3}),
        ("w4:n=12;c=0-4-8", lambda: F.build("w4:n=12;c=0-4-8"), {1, 2, 4}),
        ("cat123:6,7,10,12", lambda: F.caterpillar123([6, 7, 10, 12]), {1, 2, 3, 6, 7, 10, 12}),
        ("cat123:8", lambda: F.caterpillar123([8]), {1, 2, 3, 8}),
        ("cat123:4", lambda: F.caterpillar123([4]), {1, 2, 3, 4}),
        ("c124:5,8", lambda: F.construction124([5, 8]), {1, 2, 4, 5, 8}),
        ("c124:5", lambda: F.construction124([5]), {1, 2, 4, 5}),
        ("c124:6", lambda: F.construction124([6]), {1, 2, 4, 6}),
        ("glue012:3", lambda: F.glued_chain012([3]), {0, 1, 2, 3}),
        ("glue012:3,5,9", lambda: F.glued_chain012([3, 5, 9]), {0, 1, 2, 3, 5, 9}),
    ]
    for j in range(3, 9):
        cases.append((f"gadget:{j}", lambda k=j: F.gadget(k)[0], {0, 1, 2, j}))
    for kind, (fn, _, base) in SET_CONSTRUCTIONS.items():
        for vals in random_value_sets(kind, samples, seed):
            label = f"{kind}:" + ",".join(map(str, vals))
            cases.append((label, lambda f=fn, v=vals: f(v), base | set(vals)))
    return cases


def _family_one(case):
    label, build, expected = case
    return check_member(label, build, expected)


def suite_families(samples: int = 20, seed: int = 0) -> tuple[dict, bool]:
    """Build every family member in the supported ranges and check its type."""
    entries = [_family_one(c) for c in family_cases(samples, seed)]
    bad = [e["spec"] for e in entries if not e["ok"]]
    ok = not bad
    report = {
        "suite": "families",
        "samples_per_construction": samples,
        "seed": seed,
        "checked": len(entries),
        "failed": bad,
        "members": entries,
        "ok": ok,
    }
    return report, ok


def run_suite(name: str, threads=None, n: int | None = None, seed: int = 0,
              samples: int | None = None) -> tuple[dict, bool]:
    if name == "theorem1":
        return suite_theorem1(threads)
    if name == "table2-sweep":
        return suite_table2(threads, max_poly=n or 10, seed=seed,
                            samples=200 if samples is None else samples)
    if name == "lemmas":
        return suite_lemmas(n or 8, threads)
    if name == "families":
        return suite_families(20 if samples is None else samples, seed)
    raise GraphArgumentError(f"unknown suite {name!r}; expected one of {', '.join(SUITES)}")


__all__ = [
    "POLYHEDRON_COUNTS",
    "SUITES",
    "TRIANGULATION_COUNTS",
    "check_member",
    "family_cases",
    "random_value_sets",
    "run_suite",
    "suite_families",
    "suite_lemmas",
    "suite_table2",
    "suite_theorem1",
]
