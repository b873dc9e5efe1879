from fractions import Fraction
from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from cgsum.diagram import validate
from cgsum.geometry import (Certificate, DegenerateConfigurationError, GenerationError, _scan, certify,
                            diagram_from_points, format_points, make_points, moment_curve_points,
                            parse_points, random_embedding, standard_diagram, standard_points,
                            validate_generic)


def _interleaved(e, f):
    a, b = e
    c, d = f
    return (a < c < b < d) or (c < a < d < b)


@pytest.mark.parametrize("n", range(4, 11))
def test_standard_crossings_are_interleaved_chords(n):
    d = standard_diagram(n)
    assert d.num_crossings == comb(n, 4)
    assert validate(d) == []
    pairs = {frozenset((c.over, c.under)) for c in d.crossings.values()}
    expected = {frozenset((e, f)) for e, f in combinations(combinations(range(1, n + 1), 2), 2)
                if _interleaved(e, f)}
    assert pairs == expected


def test_standard_over_under_follows_height():
    # on the moment curve, of two interleaved chords a<c<b<d the chord (c, d) is on top
    d = standard_diagram(7)
    for c in d.crossings.values():
        (a, b), (p, q) = sorted([c.over, c.under])
        assert c.over == (p, q)


def test_integer_moment_curve_fallback():
    assert validate_generic(moment_curve_points(8)) is None
    bad = validate_generic(moment_curve_points(9))
    assert bad.check == "d"
    assert set(bad.simplex) == {(1, 6), (3, 7), (4, 9)}
    assert standard_points(9).meta.get("substituted") is True
    assert "substituted" not in standard_points(8).meta


def test_certificate():
    cert = certify(standard_points(6))
    assert cert == Certificate("z", 15, 15)


@pytest.mark.parametrize("coords,check", [
    ([(0, 0, 0), (0, 0, 1), (5, 1, 2), (1, 7, 3)], "a"),
    ([(0, 0, 0), (2, 0, 0), (1, 0, 5), (0, 3, 1)], "b"),
    ([(0, 0, 0), (2, 2, 0), (0, 2, 0), (2, 0, 0)], "e"),
    ([(0, 0, 0), (4, 4, 1), (0, 4, 2), (4, 0, 3), (1, -1, 5), (3, 5, 7)], "d"),
])
def test_degeneracies(coords, check):
    p = make_points(coords)
    bad = validate_generic(p)
    assert bad is not None and bad.check == check
    with pytest.raises(DegenerateConfigurationError) as info:
        diagram_from_points(p)
    assert info.value.violation.check == check


def test_collinear_overlap_is_reported():
    p = make_points([(0, 0, 0), (2, 0, 1), (1, 0, 3), (3, 0, 2)])
    found, _ = _scan(p, "z")
    assert "c" in {v.check for v in found}


def test_axis_choice():
    # a configuration degenerate from above can be generic from the side
    p = make_points([(0, 0, 0), (0, 0, 1), (5, 1, 2), (1, 7, 3)])
    assert validate_generic(p, "z").check == "a"
    assert validate_generic(p, "x") is None
    with pytest.raises(ValueError):
        validate_generic(p, "w")


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10**6), st.fractions(min_value=Fraction(1, 7), max_value=9).filter(bool))
def test_diagram_invariant_under_scaling(seed, factor):
    p = random_embedding(6, seed, bound=20)
    a, b = diagram_from_points(p), diagram_from_points(p.scaled(factor))
    assert (a.walks, a.crossings) == (b.walks, b.crossings)


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10**6))
def test_random_embeddings(seed):
    p = random_embedding(7, seed)
    assert validate_generic(p) is None
    q = random_embedding(7, seed)
    assert p == q
    assert p.meta["seed"] == seed and p.meta["attempts"] >= 1
    assert validate(diagram_from_points(p)) == []


def test_random_small_bound_warns(caplog):
    with caplog.at_level("WARNING"):
        p = random_embedding(6, 3, bound=4)
    assert validate_generic(p) is None
    assert any("bound" in r.message for r in caplog.records)


def test_random_gives_up():
    with pytest.raises(GenerationError):
        random_embedding(8, 0, bound=1, max_attempts=5)


def test_points_file_round_trip():
    p = standard_points(6)
    q = parse_points(format_points(p))
    assert q.points == p.points


@pytest.mark.parametrize("text", ["", "x\n", "2\n1 2 3\n", "1\n1 2\n", "1\n1 2 q\n", "2\n1 2 3\n1 2 3\n"])
def test_points_file_errors(text):
    with pytest.raises(ValueError):
        parse_points(text)


def test_moment_curve_values():
    p = moment_curve_points(3)
    assert p.points == ((1, 1, 1), (2, 4, 8), (3, 9, 27))
    with pytest.raises(ValueError):
        moment_curve_points(1)


def test_concurrent_diameters_on_a_circle():
    pts = [(1, 0, 0), (-1, 0, 1), (0, 1, 2), (0, -1, 3), (Fraction(3, 5), Fraction(4, 5), 4),
           (Fraction(-3, 5), Fraction(-4, 5), 5)]
    bad = validate_generic(make_points(pts))
    assert bad.check == "d" and len(bad.simplex) == 3


def test_tiny_bound_retries_are_logged(caplog):
    with caplog.at_level("DEBUG", logger="cgsum.geometry"):
        random_embedding(3, 0, bound=1)
    assert any("rejected" in r.message or "repeated" in r.message for r in caplog.records)


@pytest.mark.parametrize("n", [7, 8])
def test_standard_subgraph_structure(n):
    from cgsum import graph
    from cgsum.diagram import extract_knot, extract_link
    from cgsum.knots import a2, lk
    d = standard_diagram(n)
    assert all(a2(extract_knot(d, c)) == 0 for c in graph.p_cycles(n, 5))
    per_subset = {}
    for pair in graph.disjoint_triangle_pairs(n):
        if abs(lk(extract_link(d, pair))) == 1:
            key = tuple(sorted(pair[0] + pair[1]))
            per_subset[key] = per_subset.get(key, 0) + 1
    assert len(per_subset) == comb(n, 6) and set(per_subset.values()) == {1}
