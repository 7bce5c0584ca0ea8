from itertools import chain, combinations

import pytest

from polytype import families as F
from polytype.classify import (
    IMPOSSIBLE,
    LEMMA_NAMES,
    ROWS,
    Classification,
    classify,
    match_tables,
    matching_rows,
    radius1_type,
    verify_lemmas,
)
from polytype.errors import FalsificationError, GraphArgumentError, NotPolyhedralError
from polytype.graph import Graph, TypeSet, type_of
from polytype.planarity import require_polyhedron

from oracles import admissible

def subsets(universe):
    s = list(universe)
    return chain.from_iterable(combinations(s, k) for k in range(1, len(s) + 1))


def test_rows_are_disjoint_and_match_oracle():
    for sub in subsets(range(9)):
        rows = matching_rows(set(sub))
        assert len(rows) <= 1, sub
        got = match_tables(set(sub))
        assert (got != IMPOSSIBLE) == admissible(sub), sub


@pytest.mark.parametrize("a", [{1}, {1, 2, 5}, {1, 2, 7}, {0, 2, 5}, {2, 5}, {0, 1, 3}, {1, 3}, {0, 2, 4}])
def test_impossible_sets(a):
    assert match_tables(a) == IMPOSSIBLE


@pytest.mark.parametrize("a,row", [
    ({0, 1, 2, 7}, "one:0,1,2+A3"),
    ({1, 2, 3, 4}, "one:1,2,3+A4"),
    ({1, 2, 4, 5, 8}, "one:1,2,4+A5"),
    ({1, 2, 8}, "one:1,2,even"),
    ({2, 3, 9}, "no1:2,3,l"),
    ({0, 2}, "no1:0,2"),
])
def test_row_ids(a, row):
    assert match_tables(TypeSet(a)).id == row


def test_row_ids_unique():
    ids = [r.id for r, _ in ROWS]
    assert len(ids) == len(set(ids)) == 17


@pytest.mark.parametrize("g,row,family", [
    (F.octahedron(), "no1:2,4", "bipyr:4"),
    (F.pyramid(9), "one:1,2", "pyr:9"),
    (F.b_prime_graph(8), "one:1,2,even", "bp:8"),
    (F.b_prime_graph(10), "one:1,2,even", "bp:10"),
    (F.b_graph(6), "one:1,2,even", "b:6"),
    (F.t_graph(7), "no1:2,3,l", "t:7"),
    (F.cube(), "no1:0,2", "s:1"),
    (F.sporadic(10), "no1:0,2,3,4", "s:10"),
    (F.dodecahedron(), "one:0,1", None),
])
def test_classify_examples(g, row, family):
    c = classify(g)
    assert isinstance(c, Classification)
    assert c.table_row.id == row
    assert c.family == family
    assert c.lemma_report.ok


def test_w_members_identified():
    c = classify(F.build("w3:n=7;e=1-3,4-6"))
    assert c.family.startswith("w3:") and c.table_row.id == "one:1,2,3"
    assert F.build(c.family) is not None
    c = classify(F.build("w4:n=12;c=1-5-9"))
    assert c.family.startswith("w4:") and c.table_row.id == "one:1,2,4"


def test_family_label_rebuilds_isomorphic_graph():
    from polytype.canonical import canonical_form
    for spec in ("w3:n=9;e=0-2,3-7", "w4:n=13;c=0-4-8", "t:6", "b:8"):
        g = F.build(spec)
        c = classify(g.relabel(list(reversed(range(g.p)))))
        assert canonical_form(F.build(c.family)) == canonical_form(g)


def test_witnesses_realise_extremes():
    g = F.pyramid(6)
    c = classify(g)
    lo, hi = c.witnesses
    assert lo.count == min(c.type) and hi.count == max(c.type)


def test_to_json_keys():
    obj = classify(F.cube()).to_json()
    assert set(obj) == {"certificate", "type", "table_row", "family", "witnesses", "lemma_report", "notes"}
    assert obj["type"] == [0, 2]
    assert obj["table_row"]["id"] == "no1:0,2"
    assert set(obj["lemma_report"]) == set(LEMMA_NAMES)
    assert classify(F.cube(), lemmas=False).to_json()["lemma_report"] is None


def test_non_polyhedral_input():
    k23 = Graph(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
    with pytest.raises(NotPolyhedralError) as exc:
        classify(k23)
    assert exc.value.certificate.separator == (0, 1)
    k5 = Graph(5, list(combinations(range(5), 2)))
    with pytest.raises(NotPolyhedralError) as exc:
        classify(k5)
    assert exc.value.certificate.kuratowski is not None


def test_supplied_embedding_is_reused_or_rejected():
    g = F.icosahedron()
    emb = require_polyhedron(g)
    assert classify(g, emb).table_row.id == "no1:0,2"
    with pytest.raises(GraphArgumentError):
        classify(F.cube(), emb)


def test_small_order_notes():
    c = classify(F.icosahedron())
    assert any("maximum degree" in n for n in c.notes)


def test_radius1_type_matches_type_of():
    for g in (F.pyramid(8), F.b_graph(6).delete_vertices([13]), F.build("w3:n=8;e=0-2,4-6"),
              F.caterpillar123([5, 7])):
        assert radius1_type(g) == type_of(g)


def test_radius1_type_rejects():
    with pytest.raises(GraphArgumentError):
        radius1_type(F.cube())
    with pytest.raises(GraphArgumentError):
        radius1_type(F.t_graph(6))
    with pytest.raises(GraphArgumentError):
        radius1_type(F.tetrahedron())


def test_lemma_statuses():
    assert verify_lemmas(F.dodecahedron()).status("zero_one_iff_no_four_cycle") == "pass"
    assert verify_lemmas(F.cube()).status("two_iff_four_cycle") == "pass"
    assert verify_lemmas(F.b_graph(6)).status("order_bound_without_dominating_vertex") in ("pass", "n/a")
    rep = verify_lemmas(F.pyramid(7))
    assert rep.status("radius_one_formula") == "pass"
    assert rep.status("unique_dominating_vertex") == "pass"
    assert [name for name, _, _ in rep.results] == list(LEMMA_NAMES)


def test_wrong_type_is_caught():
    g = F.pyramid(7)
    with pytest.raises(FalsificationError):
        verify_lemmas(g, type_=TypeSet({1}))
    rep = verify_lemmas(g, type_=TypeSet({1}), strict=False)
    assert not rep.ok and rep.failures


@pytest.mark.parametrize("spec", ["pyr:100", "t:80", "bipyr:70", "w3:n=70;e=0-2,10-20"])
def test_families_identified_beyond_canonical_range(spec):
    g = F.build(spec)
    c = classify(g)
    assert c.family == spec and c.lemma_report.ok
    if spec.startswith("pyr"):
        assert radius1_type(g) == type_of(g)
