from fractions import Fraction

import pytest

from cgsum.diagram import Crossing
from cgsum.geometry import diagram_from_points, random_embedding, standard_diagram
from cgsum.invariants import (InvariantReport, Verdict, invariant_report, sum_a2, triangle_link_sums,
                              verify_congruence, verify_identity, verify_sachs)


def test_h6(h, report):
    r = report(h(6))
    assert (r.sum_a2_hamiltonian, r.sum_a2_pentagons, r.sum_lk2_triangles) == (0, 0, 1)
    assert r.sum_lk_triangles % 2 == 1
    assert r.residue_modulus == 1 and r.residue == 0


def test_h7(h, report):
    r = report(h(7))
    assert r == InvariantReport(7, 1, 0, 7, -7, 2, 1)
    assert r.as_dict()["sum_a2_hamiltonian"] == 1


def test_verdicts_on_h7(h, report):
    r = report(h(7))
    v = verify_identity(r)
    assert v.passed and v.expected == v.actual == 1
    c = verify_congruence(r)
    assert c.passed and c.expected == c.actual == 1
    assert verify_identity(h(7)) == v


def test_congruence_modulus_handling(h, report):
    r = report(h(7))
    assert verify_congruence(r, 1).passed
    odd = verify_congruence(r, 3)
    assert odd.passed is None and odd.actual == 1
    with pytest.raises(ValueError):
        verify_congruence(r, 0)


@pytest.mark.parametrize("flips", [(0,), (3, 17), (1, 2, 5, 30)])
def test_crossing_changes_keep_identity(h, flips):
    # switching crossings gives another spatial embedding, so both checks still hold
    d = h(7).copy()
    for cid in flips:
        c = d.crossings[cid]
        d.crossings[cid] = Crossing(c.under, c.over, -c.sign)
        d.walks[c.over] = tuple((i, "U" if i == cid else r) for i, r in d.walks[c.over])
        d.walks[c.under] = tuple((i, "O" if i == cid else r) for i, r in d.walks[c.under])
    r = invariant_report(d)
    assert verify_identity(r).passed
    assert verify_congruence(r).passed


def test_verdict_serialization():
    v = Verdict("x", True, Fraction(1, 2), 3, "d")
    assert v.as_dict() == {"name": "x", "passed": True, "expected": "1/2", "actual": 3, "detail": "d"}


@pytest.mark.parametrize("seed", range(5))
def test_identity_on_random_k7(seed):
    d = diagram_from_points(random_embedding(7, seed))
    assert verify_identity(d).passed
    assert verify_congruence(d).passed


def test_workers_do_not_change_results(h):
    d = h(7)
    assert sum_a2(d, workers=1) == sum_a2(d, workers=3)
    assert sum_a2(d, 5, workers=1) == sum_a2(d, 5, workers=2)
    assert triangle_link_sums(d, workers=1) == triangle_link_sums(d, workers=3)
    assert invariant_report(d, 1) == invariant_report(d, 2)


def test_sachs(h):
    assert verify_sachs(h(6)).passed
    v = verify_sachs(h(7))
    assert v.passed and "7 six-vertex" in v.detail


def test_small_n_rejected():
    with pytest.raises(ValueError):
        invariant_report(standard_diagram(5))
    with pytest.raises(ValueError):
        verify_sachs(standard_diagram(5))
    with pytest.raises(ValueError):
        sum_a2(standard_diagram(6), workers=0)
