"""Knot and link invariants computed from signed Gauss sequences.

A knot diagram is a cyclic sequence of :class:`~cgsum.diagram.Passage`
records ``(cid, over, sign)``; each crossing id occurs twice, once over and
once under, with the same sign.
"""
from __future__ import annotations

from collections import Counter
from typing import Iterable, Sequence

from .diagram import KnotDiagram, LinkDiagram, Passage


class InvalidDiagramError(ValueError):
    pass


def _passages(k) -> list:
    return list(k.passages if isinstance(k, KnotDiagram) else k)


def check_gauss(seq: Sequence[Passage]) -> None:
    counts: dict = {}
    for p in seq:
        counts.setdefault(p.cid, []).append(p)
    for cid, ps in counts.items():
        if len(ps) != 2 or ps[0].over == ps[1].over:
            raise InvalidDiagramError(f"crossing {cid} is not paired over/under")
        if ps[0].sign != ps[1].sign:
            raise InvalidDiagramError(f"crossing {cid} has inconsistent signs")


def a2(k) -> int:
    """Second Conway coefficient by switching to a descending diagram.

    Walking from the first passage, every crossing first met as an
    underpass is switched. Switching a crossing of sign e changes a2 by
    -e * lk(smoothing), so a2(K) = sum of e * lk(K_0) over the switches,
    each smoothing taken in the partially switched diagram.
    """
    seq = _passages(k)
    check_gauss(seq)
    if not seq:
        return 0
    first: dict = {}
    second: dict = {}
    for i, p in enumerate(seq):
        if p.cid in first:
            second[p.cid] = i
        else:
            first[p.cid] = i
    sign = {p.cid: p.sign for p in seq}
    total = 0
    for i, p in enumerate(seq):
        if first[p.cid] != i or p.over:
            continue
        lo, hi = i, second[p.cid]
        s = 0
        for cid, a in first.items():
            if cid == p.cid:
                continue
            b = second[cid]
            if (lo < a < hi) != (lo < b < hi):
                s += sign[cid]
        total += sign[p.cid] * (s // 2)
        sign[p.cid] = -sign[p.cid]
    return total


def a2_gauss_diagram(k, basepoint: int = 0) -> int:
    """Independent a2: Polyak-Viro arrow count on the based Gauss diagram.

    Counts pairs of crossings met, from the basepoint, in the pattern
    under(c1), over(c2), over(c1), under(c2), weighted by the product of
    their signs.
    """
    seq = _passages(k)
    check_gauss(seq)
    if not seq:
        return 0
    seq = seq[basepoint:] + seq[:basepoint]
    pos: dict = {}
    for i, p in enumerate(seq):
        pos.setdefault(p.cid, [None, None, p.sign])
        pos[p.cid][0 if p.over else 1] = i
    total = 0
    items = list(pos.values())
    for o1, u1, s1 in items:
        if not u1 < o1:
            continue
        for o2, u2, s2 in items:
            if u1 < o2 < o1 < u2:
                total += s1 * s2
    return total


def lk(link: LinkDiagram) -> int:
    signs = Counter()
    for p in link.components[0]:
        if p.cid in link.inter:
            signs[p.cid] = p.sign
    s = sum(signs.values())
    if s % 2:
        raise InvalidDiagramError("odd inter-component sign sum")
    return s // 2


def linking_number_of(comp1: Sequence[Passage], comp2: Sequence[Passage]) -> int:
    ids2 = {p.cid for p in comp2}
    inter = frozenset(p.cid for p in comp1 if p.cid in ids2)
    return lk(LinkDiagram((tuple(comp1), tuple(comp2)), inter))


# -- planarity ---------------------------------------------------------------

def is_planar(components: Iterable[Sequence[Passage]]) -> bool:
    """Whether signed Gauss sequences come from a diagram in the plane.

    Over/under together with the sign fixes the rotation at each crossing;
    the diagram is planar iff every connected piece satisfies Euler's
    formula V - E + F = 2 for that rotation system.
    """
    comps = [list(c) for c in components]
    # darts: (component, index, "in"/"out"); edges join out(i) to in(i+1)
    where: dict = {}
    for ci, comp in enumerate(comps):
        for i, p in enumerate(comp):
            where.setdefault(p.cid, []).append((ci, i, p))
    for cid, visits in where.items():
        if len(visits) != 2 or visits[0][2].over == visits[1][2].over:
            raise InvalidDiagramError(f"crossing {cid} is not paired over/under")
    # rotation (counterclockwise) of half-edges at a crossing
    rot = {}
    for cid, visits in where.items():
        (o,) = [v for v in visits if v[2].over]
        (u,) = [v for v in visits if not v[2].over]
        oo, oi = (o[0], o[1], "out"), (o[0], o[1], "in")
        uo, ui = (u[0], u[1], "out"), (u[0], u[1], "in")
        order = [oo, uo, oi, ui] if o[2].sign > 0 else [oo, ui, oi, uo]
        for j, h in enumerate(order):
            rot[h] = order[(j + 1) % 4]

    def partner(h):
        ci, i, kind = h
        m = len(comps[ci])
        return (ci, (i + 1) % m, "in") if kind == "out" else (ci, (i - 1) % m, "out")

    # connected pieces via crossings shared between components
    parent = list(range(len(comps)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for visits in where.values():
        a, b = find(visits[0][0]), find(visits[1][0])
        parent[a] = b
    pieces: dict = {}
    for ci, comp in enumerate(comps):
        if comp:
            pieces.setdefault(find(ci), []).append(ci)
    for members in pieces.values():
        darts = [(ci, i, kind) for ci in members for i in range(len(comps[ci])) for kind in ("in", "out")]
        seen = set()
        faces = 0
        for start in darts:
            if start in seen:
                continue
            faces += 1
            h = start
            while h not in seen:
                seen.add(h)
                h = rot[partner(h)]
        v = sum(len(comps[ci]) for ci in members) // 2
        if v - 2 * v + faces != 2:
            return False
    return True


# -- standard diagrams ---------------------------------------------------------

def braid_closure(word: Sequence[int], strands: int) -> list[tuple]:
    """Components of the closure of a braid word.

    Letters are +-i for the generator between positions i and i+1; strands
    run upward and in +i the strand at position i passes over, giving a
    positive crossing. Returns one passage tuple per component, each
    starting at the bottom of the braid.
    """
    at = list(range(strands))  # at[pos] = strand
    visits = [[] for _ in range(strands)]
    for cid, letter in enumerate(word):
        i = abs(letter) - 1
        if not 0 <= i < strands - 1:
            raise ValueError(f"letter {letter} out of range for {strands} strands")
        left, right = at[i], at[i + 1]
        sign = 1 if letter > 0 else -1
        visits[left].append(Passage(cid, letter > 0, sign))
        visits[right].append(Passage(cid, letter < 0, sign))
        at[i], at[i + 1] = right, left
    # follow strands through the closure into components
    perm = {at[pos]: pos for pos in range(strands)}  # strand -> end position
    done = set()
    comps = []
    for s in range(strands):
        if s in done:
            continue
        seq = []
        cur = s
        while cur not in done:
            done.add(cur)
            seq.extend(visits[cur])
            cur = perm[cur]  # strand starting at the end position of cur
        comps.append(tuple(seq))
    return comps


def torus_knot_2(q: int) -> KnotDiagram:
    """Standard diagram of the (2, q) torus knot, q odd."""
    if q % 2 == 0:
        raise ValueError("(2, q) torus knot needs odd q")
    word = [1 if q > 0 else -1] * abs(q)
    (comp,) = braid_closure(word, 2)
    return KnotDiagram(comp)


def torus_link_2(q: int) -> LinkDiagram:
    """Standard diagram of the (2, q) torus link, q even."""
    if q % 2:
        raise ValueError("(2, q) torus link needs even q")
    word = [1 if q > 0 else -1] * abs(q)
    c1, c2 = braid_closure(word, 2)
    return LinkDiagram((c1, c2), frozenset(p.cid for p in c1))


def figure_eight() -> KnotDiagram:
    (comp,) = braid_closure([1, -2, 1, -2], 3)
    return KnotDiagram(comp)


def reverse(k) -> KnotDiagram:
    """Same knot traversed the other way; crossing signs are unchanged."""
    return KnotDiagram(tuple(reversed(_passages(k))))


def rotate(k, shift: int) -> KnotDiagram:
    seq = _passages(k)
    if not seq:
        return KnotDiagram(())
    shift %= len(seq)
    return KnotDiagram(tuple(seq[shift:] + seq[:shift]))


def mirror(k) -> KnotDiagram:
    return KnotDiagram(tuple(Passage(p.cid, not p.over, -p.sign) for p in _passages(k)))
