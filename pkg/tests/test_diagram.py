import json

import pytest
from hypothesis import given, settings, strategies as st

from cgsum import graph
from cgsum.diagram import (Crossing, Diagram, DiagramError, DiagramParseError, deserialize, dump,
                           errors, extract_knot, extract_link, load, serialize, validate)
from cgsum.geometry import random_embedding, diagram_from_points
from cgsum.knots import lk


def test_standard_is_valid(h):
    for n in (4, 6, 7):
        assert validate(h(n)) == []


def test_empty_diagram():
    d = Diagram.empty(5)
    assert len(d.walks) == 10 and d.num_crossings == 0 and validate(d) == []


def _broken(h, change):
    d = h(6).copy()
    change(d)
    return {v.kind for v in validate(d)}


def test_missing_and_dangling_edges(h):
    assert "missing edge" in _broken(h, lambda d: d.walks.pop((1, 2)))
    assert "dangling edge" in _broken(h, lambda d: d.walks.__setitem__((1, 9), ()))


def test_crossing_bookkeeping(h):
    def drop_passage(d):
        e = next(e for e, w in d.walks.items() if w)
        d.walks[e] = d.walks[e][1:]
    assert "unpaired crossing" in _broken(h, drop_passage)

    def bad_sign(d):
        c = d.crossings[0]
        d.crossings[0] = Crossing(c.over, c.under, 0)
    assert "bad sign" in _broken(h, bad_sign)

    def stray(d):
        d.walks[(1, 2)] = d.walks[(1, 2)] + ((999, "O"),)
    assert "unknown crossing" in _broken(h, stray)

    def misplace(d):
        c = d.crossings[0]
        other = next(e for e in d.walks if e not in (c.over, c.under))
        d.crossings[0] = Crossing(other, c.under, c.sign)
    assert "misplaced crossing" in _broken(h, misplace)

    assert "malformed passage" in _broken(h, lambda d: d.walks.__setitem__((1, 2), ((0, "X"),)))


def test_self_crossing_is_only_a_warning():
    d = Diagram.empty(4)
    d.walks[(1, 3)] = ((0, "O"), (0, "U"))
    d.crossings[0] = Crossing((1, 3), (1, 3), 1)
    kinds = {(v.kind, v.severity) for v in validate(d)}
    assert kinds == {("self crossing", "warning")}
    assert errors(d) == []


def test_hopf_pair_in_k6(h):
    d = h(6)
    nonzero = [p for p in graph.disjoint_triangle_pairs(6) if lk(extract_link(d, p))]
    assert nonzero == [((1, 3, 5), (2, 4, 6))]
    link = extract_link(d, ((1, 3, 5), (2, 4, 6)))
    assert abs(lk(link)) == 1
    assert extract_link(d, ((1, 2, 3), (4, 5, 6))).inter == frozenset()


def test_extraction_ignores_foreign_crossings(h):
    d = h(7)
    for cycle in list(graph.hamiltonian_cycles(7))[:40]:
        k = extract_knot(d, cycle)
        used = {tuple(sorted(e)) for e in graph.cycle_edges(cycle)}
        for p in k.passages:
            c = d.crossings[p.cid]
            assert c.over in used and c.under in used
        assert len(k.passages) % 2 == 0


def test_extraction_is_orientation_canonical(h):
    d = h(7)
    a = extract_knot(d, (1, 3, 5, 7, 2, 4, 6))
    b = extract_knot(d, (6, 4, 2, 7, 5, 3, 1))
    assert a == b


def test_extract_errors(h):
    with pytest.raises(DiagramError):
        extract_link(h(6), ((1, 2, 3), (3, 4, 5)))
    with pytest.raises(DiagramError):
        extract_knot(h(6), (1, 2, 8))


def test_round_trip(h, tmp_path):
    d = h(6)
    assert deserialize(serialize(d)) == d
    path = tmp_path / "k6.json"
    dump(d, path)
    assert load(path) == d
    assert serialize(load(path)) == serialize(d)


def test_serialized_layout(h):
    text = serialize(h(6))
    doc = json.loads(text)
    assert doc["format"] == "cgsum.diagram/1"
    assert len(doc["edges"]) == 15 and len(doc["crossings"]) == 15
    assert text.count("\n") > 30  # one record per line


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10_000))
def test_round_trip_random(seed):
    d = diagram_from_points(random_embedding(6, seed))
    assert deserialize(serialize(d)) == d


@pytest.mark.parametrize("text,where", [
    ("{\n  \"n\": 6,\n  oops", "line 3"),
    ('{"n": 6, "edges": []}', ""),
    ('{"n": "six", "edges": [], "crossings": []}', "n"),
    ('{"n": 4, "edges": [{"u": 1, "v": 2, "walk": [[0, "Q"]]}], "crossings": []}', "edges[0].walk[0]"),
    ('{"n": 4, "edges": [], "crossings": [{"id": 0, "over": [1], "under": [3, 4], "sign": 1}]}',
     "crossings[0].over"),
    ('[1, 2]', ""),
])
def test_parse_errors(text, where):
    with pytest.raises(DiagramParseError) as info:
        deserialize(text)
    assert info.value.where.startswith(where)


def test_consecutive_cycle_has_no_crossings(h):
    assert extract_knot(h(7), (1, 2, 3, 4, 5, 6, 7)).passages == ()


def test_link_components_match_knots(h):
    d = h(7)
    for pair in list(graph.disjoint_triangle_pairs(7))[:20]:
        link = extract_link(d, pair)
        for i in (0, 1):
            assert link.component(i) == extract_knot(d, pair[i])
        swapped = extract_link(d, pair[::-1])
        assert lk(swapped) == lk(link)
        assert link.inter <= set(d.crossings)


def test_empty_document_round_trip():
    d = Diagram.empty(4)
    assert deserialize(serialize(d)) == d
