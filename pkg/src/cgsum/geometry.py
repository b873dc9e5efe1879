"""Straight-line spatial embeddings of K_n in exact rational arithmetic."""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import NamedTuple

from .diagram import OVER, UNDER, Crossing, Diagram

logger = logging.getLogger(__name__)

# plane coordinates and height for each projection axis; cyclic so the
# projected plane keeps the orientation seen from the positive axis
AXES = {"z": (0, 1, 2), "x": (1, 2, 0), "y": (2, 0, 1)}


class DegenerateConfigurationError(ValueError):
    def __init__(self, violation: "Violation"):
        self.violation = violation
        super().__init__(f"degenerate configuration ({violation.check}) {violation.message}")


class GenerationError(RuntimeError):
    pass


class Violation(NamedTuple):
    check: str  # one of "a".."e"
    simplex: tuple
    message: str


@dataclass(frozen=True)
class Certificate:
    axis: str
    segments: int
    crossings: int


@dataclass
class PointSet:
    points: tuple  # points[i] is vertex i+1, a triple of Fractions
    meta: dict = field(default_factory=dict)

    @property
    def n(self) -> int:
        return len(self.points)

    def __getitem__(self, vertex: int):
        return self.points[vertex - 1]

    def scaled(self, factor) -> "PointSet":
        f = Fraction(factor)
        return PointSet(tuple(tuple(f * c for c in p) for p in self.points), dict(self.meta))


def make_points(coords, meta: dict | None = None) -> PointSet:
    pts = tuple(tuple(Fraction(c) for c in p) for p in coords)
    if any(len(p) != 3 for p in pts):
        raise ValueError("points must have three coordinates")
    if len(set(pts)) != len(pts):
        raise ValueError("points must be pairwise distinct")
    return PointSet(pts, dict(meta or {}))


def moment_curve_points(n: int, params=None) -> PointSet:
    """Vertices i = 1..n at (t, t^2, t^3), with t_i = i unless ``params`` given."""
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    ts = [Fraction(i) for i in range(1, n + 1)] if params is None else [Fraction(t) for t in params]
    if len(ts) != n or any(a >= b for a, b in zip(ts, ts[1:])):
        raise ValueError("moment curve parameters must be n strictly increasing values")
    return PointSet(tuple((t, t * t, t * t * t) for t in ts),
                    {"builder": "moment_curve", "params": [str(t) for t in ts]})


def standard_points(n: int) -> PointSet:
    """Moment-curve vertices; falls back to t_i = i + 2^-i on a degeneracy."""
    p = moment_curve_points(n)
    if validate_generic(p) is None:
        return p
    alt = moment_curve_points(n, [Fraction(i) + Fraction(1, 2 ** i) for i in range(1, n + 1)])
    alt.meta["substituted"] = True
    return alt


def _project(p: PointSet, axis: str):
    try:
        i, j, k = AXES[axis]
    except KeyError:
        raise ValueError(f"projection axis must be one of {sorted(AXES)}, got {axis!r}") from None
    return [(q[i], q[j]) for q in p.points], [q[k] for q in p.points]


def _orient(a, b, c) -> int:
    v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (v > 0) - (v < 0)


def _cross(u, v):
    return u[0] * v[1] - u[1] * v[0]


def _strictly_inside(a, b, c) -> bool:
    """c lies in the open segment (a, b); assumes collinear."""
    lo_x, hi_x = sorted((a[0], b[0]))
    lo_y, hi_y = sorted((a[1], b[1]))
    if (lo_x, lo_y) == (hi_x, hi_y):
        return False
    return lo_x <= c[0] <= hi_x and lo_y <= c[1] <= hi_y and c != a and c != b


class _Hit(NamedTuple):
    e: tuple
    f: tuple
    t: Fraction  # parameter along e (low -> high)
    u: Fraction  # parameter along f
    point: tuple
    height_e: Fraction
    height_f: Fraction


def _scan(p: PointSet, axis: str):
    """Return (violations, proper crossings) of the projected straight-line drawing."""
    xy, h = _project(p, axis)
    n = p.n
    segs = list(combinations(range(1, n + 1), 2))
    found: list[Violation] = []

    seen = {}
    for v in range(1, n + 1):
        if xy[v - 1] in seen:
            found.append(Violation("a", (seen[xy[v - 1]], v),
                                   f"vertices {seen[xy[v - 1]]} and {v} share a projection"))
        else:
            seen[xy[v - 1]] = v

    for a, b in segs:
        for c in range(1, n + 1):
            if c in (a, b):
                continue
            P, Q, R = xy[a - 1], xy[b - 1], xy[c - 1]
            if _orient(P, Q, R) == 0 and _strictly_inside(P, Q, R):
                found.append(Violation("b", (a, b, c), f"vertex {c} projects into edge {a}-{b}"))

    hits: list[_Hit] = []
    for e, f in combinations(segs, 2):
        A, B = xy[e[0] - 1], xy[e[1] - 1]
        C, D = xy[f[0] - 1], xy[f[1] - 1]
        o1, o2 = _orient(A, B, C), _orient(A, B, D)
        o3, o4 = _orient(C, D, A), _orient(C, D, B)
        if o1 == o2 == o3 == o4 == 0:
            # collinear: overlap along a sub-segment?
            key = 0 if A[0] != B[0] else 1
            lo1, hi1 = sorted((A[key], B[key]))
            lo2, hi2 = sorted((C[key], D[key]))
            if min(hi1, hi2) > max(lo1, lo2):
                found.append(Violation("c", e + f, f"edges {e} and {f} overlap in projection"))
            continue
        if set(e) & set(f):
            continue
        if o1 * o2 < 0 and o3 * o4 < 0:
            r = (B[0] - A[0], B[1] - A[1])
            s = (D[0] - C[0], D[1] - C[1])
            w = (C[0] - A[0], C[1] - A[1])
            den = _cross(r, s)
            t = _cross(w, s) / den
            u = _cross(w, r) / den
            pt = (A[0] + t * r[0], A[1] + t * r[1])
            he = h[e[0] - 1] + t * (h[e[1] - 1] - h[e[0] - 1])
            hf = h[f[0] - 1] + u * (h[f[1] - 1] - h[f[0] - 1])
            hits.append(_Hit(e, f, t, u, pt, he, hf))

    at_point = {}
    for hit in hits:
        at_point.setdefault(hit.point, set()).update((hit.e, hit.f))
    for pt, group in at_point.items():
        if len(group) > 2:
            simplex = tuple(sorted(group))
            found.append(Violation("d", simplex, f"edges {list(simplex)} concurrent in projection"))

    for hit in hits:
        if hit.height_e == hit.height_f:
            found.append(Violation("e", hit.e + hit.f, f"edges {hit.e} and {hit.f} meet in space"))
    order = "abcde"
    found.sort(key=lambda v: order.index(v.check))
    return found, hits


def validate_generic(p: PointSet, axis: str = "z"):
    """First general-position violation, or None when the drawing is generic.

    Use :func:`certify` for a positive certificate.
    """
    found, _ = _scan(p, axis)
    return found[0] if found else None


def certify(p: PointSet, axis: str = "z"):
    found, hits = _scan(p, axis)
    if found:
        return found[0]
    return Certificate(axis, p.n * (p.n - 1) // 2, len(hits))


def diagram_from_points(p: PointSet, axis: str = "z") -> Diagram:
    found, hits = _scan(p, axis)
    if found:
        raise DegenerateConfigurationError(found[0])
    xy, _ = _project(p, axis)

    def direction(e):
        (x0, y0), (x1, y1) = xy[e[0] - 1], xy[e[1] - 1]
        return (x1 - x0, y1 - y0)

    hits.sort(key=lambda hit: hit.e + hit.f)
    d = Diagram.empty(p.n, {"builder": "points", "axis": axis, **p.meta})
    along = {e: [] for e in d.walks}
    for cid, hit in enumerate(hits):
        if hit.height_e > hit.height_f:
            over, under, t_over, t_under = hit.e, hit.f, hit.t, hit.u
        else:
            over, under, t_over, t_under = hit.f, hit.e, hit.u, hit.t
        sign = 1 if _cross(direction(over), direction(under)) > 0 else -1
        d.crossings[cid] = Crossing(over, under, sign)
        along[over].append((t_over, cid, OVER))
        along[under].append((t_under, cid, UNDER))
    for e, rows in along.items():
        rows.sort()
        d.walks[e] = tuple((cid, role) for _, cid, role in rows)
    return d


def standard_diagram(n: int) -> Diagram:
    """Diagram of the standard rectilinear embedding h(K_n)."""
    d = diagram_from_points(standard_points(n))
    d.meta["builder"] = "standard"
    return d


def random_embedding(n: int, seed: int, bound: int = 100, max_attempts: int = 1000,
                     axis: str = "z") -> PointSet:
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    if bound < 1:
        raise ValueError(f"coordinate bound must be positive, got {bound}")
    if bound < n:
        logger.warning("coordinate bound %d < n=%d; expect many rejected samples", bound, n)
    rng = random.Random(seed)
    for attempt in range(1, max_attempts + 1):
        coords = [tuple(rng.randint(-bound, bound) for _ in range(3)) for _ in range(n)]
        if len(set(coords)) < n:
            logger.debug("seed %d attempt %d: repeated point", seed, attempt)
            continue
        p = make_points(coords, {"builder": "random", "seed": seed, "bound": bound})
        bad = validate_generic(p, axis)
        if bad is None:
            p.meta["attempts"] = attempt
            return p
        logger.debug("seed %d attempt %d rejected: %s", seed, attempt, bad.message)
    raise GenerationError(f"no generic embedding for n={n} after {max_attempts} attempts")


def format_points(p: PointSet) -> str:
    lines = [str(p.n)]
    lines += [" ".join(str(c) for c in q) for q in p.points]
    return "\n".join(lines) + "\n"


def parse_points(text: str) -> PointSet:
    rows = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    rows = [r for r in rows if r]
    if not rows:
        raise ValueError("empty point file")
    try:
        n = int(rows[0])
    except ValueError:
        raise ValueError(f"line 1: expected vertex count, got {rows[0]!r}") from None
    if len(rows) - 1 != n:
        raise ValueError(f"expected {n} point lines, got {len(rows) - 1}")
    coords = []
    for i, row in enumerate(rows[1:], start=2):
        parts = row.split()
        if len(parts) != 3:
            raise ValueError(f"line {i}: expected three rationals, got {row!r}")
        try:
            coords.append(tuple(Fraction(x) for x in parts))
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"line {i}: bad rational in {row!r}") from None
    return make_points(coords, {"builder": "points-file"})
