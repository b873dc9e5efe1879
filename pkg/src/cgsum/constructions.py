"""Twist and delta gadgets on h(K_n), and realization of prescribed a2 sums."""
from __future__ import annotations

import logging
from dataclasses import asdict, dataclass
from math import factorial

from .closed_forms import c_n, check_twist, r_n, residue_modulus, sigma, tau, twist_sum
from .diagram import OVER, UNDER, Crossing, Diagram, norm_edge
from .geometry import standard_diagram, standard_points
from .invariants import invariant_report

logger = logging.getLogger(__name__)

__all__ = [
    "TwistParams", "RealizationPlan", "InadmissibleTargetError", "r_n", "c_n", "sigma", "tau",
    "twist_sum", "twist_embedding", "delta_gadget", "plan_realization", "realize",
    "nearest_admissible", "InternalConsistencyError",
]

# sign of every crossing in the twist block; fixed so that the
# Hopf pair of A-type subgraphs loses linking as the twist grows
TWIST_SIGN = -1

# Brunnian 3-braid whose closure is the Borromean rings
BORROMEAN_WORD = (1, -2, 1, -2, 1, -2)


class InadmissibleTargetError(ValueError):
    pass


class InternalConsistencyError(RuntimeError):
    pass


@dataclass(frozen=True)
class TwistParams:
    n: int
    k: int
    l: int
    s: int

    def __post_init__(self):
        check_twist(self.n, self.k, self.l, self.s)

    @property
    def e1(self) -> tuple:
        return (1, self.n - self.k)

    @property
    def e2(self) -> tuple:
        return (self.l + 2, self.n - self.k - 1)


def _perp(d):
    return (-d[1], d[0])


def _cross(a, b):
    return a[0] * b[1] - a[1] * b[0]


def _sgn(x) -> int:
    return (x > 0) - (x < 0)


def twist_embedding(params: TwistParams, base: Diagram | None = None) -> Diagram:
    """h(K_n) with edges e1 = {1, n-k} and e2 = {l+2, n-k-1} twisted s full times.

    Near vertex w = n-k-1, e2 sends a thin finger over the edges fanning out
    of w and of v = n-k to the last stretch of e1 next to v, where finger and
    e1 wind around each other with 2s crossings, then the finger returns.
    The finger lies above everything it crosses.
    """
    n, k, l, s = params.n, params.k, params.l, params.s
    d = (base or standard_diagram(n)).copy()
    d.meta = dict(d.meta, builder="twist", twist=asdict(params))
    if s == 0:
        return d
    pts = standard_points(n)
    xy = {i: (pts[i][0], pts[i][1]) for i in range(1, n + 1)}

    def towards(a, b):
        return (xy[b][0] - xy[a][0], xy[b][1] - xy[a][1])

    v, w = n - k, n - k - 1
    e1, e2 = norm_edge(1, v), norm_edge(l + 2, w)
    sweep_w = list(range(l + 1, 0, -1)) + list(range(n, v, -1))
    sweep_v = list(range(w - 1, 1, -1))
    cid = d.next_id()
    walks = {e: list(wk) for e, wk in d.walks.items()}
    crossings = dict(d.crossings)

    def fan(center, start, sweep):
        nonlocal cid
        rot = _sgn(_cross(towards(center, start), towards(center, sweep[0] if sweep else 1)))
        out_ids, ret_ids = [], []
        for x in sweep:
            edge = norm_edge(center, x)
            radial = towards(center, x)
            ref = radial if center < x else (-radial[0], -radial[1])
            tangent = (rot * _perp(radial)[0], rot * _perp(radial)[1])
            sgn = _sgn(_cross(tangent, ref))
            o, r = cid, cid + 1
            cid += 2
            crossings[o] = Crossing(e2, edge, sgn)
            crossings[r] = Crossing(e2, edge, -sgn)
            # the returning strand passes closer to the shared vertex
            if center < x:
                walks[edge] = [(r, UNDER), (o, UNDER)] + walks[edge]
            else:
                walks[edge] = walks[edge] + [(o, UNDER), (r, UNDER)]
            out_ids.append(o)
            ret_ids.append(r)
        return rot, out_ids, ret_ids

    _, out_w, ret_w = fan(w, l + 2, sweep_w)
    rot_v, out_v, ret_v = fan(v, w, sweep_v)

    # finger runs alongside e1 towards v; it sits on the left iff rot_v > 0,
    # and with both strands heading the same way the left one passes over
    # in a positive crossing
    finger_first = (rot_v > 0) == (TWIST_SIGN > 0)
    block = []
    for j in range(2 * s):
        finger_over = finger_first if j % 2 == 0 else not finger_first
        crossings[cid] = Crossing(e2, e1, TWIST_SIGN) if finger_over else Crossing(e1, e2, TWIST_SIGN)
        block.append((cid, finger_over))
        cid += 1
    walks[e1] = walks[e1] + [(c, UNDER if f else OVER) for c, f in block]
    walks[e2] = (walks[e2]
                 + [(c, OVER) for c in out_w + out_v]
                 + [(c, OVER if f else UNDER) for c, f in block]
                 + [(c, OVER) for c in reversed(ret_v)]
                 + [(c, OVER) for c in reversed(ret_w)])
    d.walks = {e: tuple(wk) for e, wk in walks.items()}
    d.crossings = crossings
    return d


def _band_sum_rings(word, start_id: int):
    """Ring passage sequences of a 3-braid closure, as seen from three bands.

    The bands reach the closure from the left of the braid, meeting the
    strands in the order they first occupy the leftmost position; each band
    enters its ring against the braid direction. Returns three passage
    lists (for the consecutive path edges) and the crossing table.
    """
    at = [0, 1, 2]
    passages = {0: [], 1: [], 2: []}
    table = {}
    attach = []  # (strand, passages of that strand before the band)
    for j, letter in enumerate(word):
        if at[0] not in [a for a, _ in attach]:
            attach.append((at[0], len(passages[at[0]])))
        i = abs(letter) - 1
        left, right = at[i], at[i + 1]
        cid = start_id + j
        sign = 1 if letter > 0 else -1
        table[cid] = (left if letter > 0 else right, right if letter > 0 else left, sign)
        passages[left].append((cid, OVER if letter > 0 else UNDER))
        passages[right].append((cid, UNDER if letter > 0 else OVER))
        at[i], at[i + 1] = right, left
    if at != [0, 1, 2] or len(attach) != 3:
        raise ValueError("gadget word must be a pure braid visiting the left edge with every strand")
    order = {strand: idx for idx, (strand, _) in enumerate(attach)}
    rings = [None, None, None]
    for strand, m in attach:
        seq = passages[strand]
        rings[order[strand]] = seq[m - 1::-1] + seq[:m - 1:-1] if m else seq[::-1]
    table = {cid: (order[o], order[u], sgn) for cid, (o, u, sgn) in table.items()}
    return rings, table


def _hull_path(n: int, path) -> tuple:
    path = tuple(path)
    if len(path) != 4 or len(set(path)) != 4 or any(not 1 <= v <= n for v in path):
        raise ValueError(f"path must be 4 distinct vertices of K_{n}, got {path!r}")
    if path[0] > path[-1]:
        path = path[::-1]
    if path != tuple(range(path[0], path[0] + 4)):
        # only runs of consecutive labels are edges of the outer face of h(K_n)
        raise ValueError(f"delta gadget needs four consecutive vertices i..i+3, got {path!r}")
    return path


def _delta_word(count: int) -> tuple:
    if count >= 0:
        return BORROMEAN_WORD * count
    return tuple(-x for x in BORROMEAN_WORD) * -count


def _strip(d: Diagram, ids: set) -> Diagram:
    """Drop crossings and renumber the rest densely in their old order."""
    keep = sorted(c for c in d.crossings if c not in ids)
    new = {old: i for i, old in enumerate(keep)}
    walks = {e: tuple((new[c], r) for c, r in wk if c not in ids) for e, wk in d.walks.items()}
    crossings = {new[c]: d.crossings[c] for c in keep}
    meta = dict(d.meta)
    if "delta" in meta:
        meta["delta"] = dict(meta["delta"], ids=[new[c] if c in new else c for c in meta["delta"]["ids"]])
    return Diagram(d.n, walks, crossings, meta)


def delta_gadget(d: Diagram, path=(1, 2, 3, 4), sign: int = 1) -> Diagram:
    """Band-sum Borromean rings onto the three edges of ``path``.

    Every knot through the whole path changes a2 by ``sign``; knots and links
    using only some of the three edges keep their type. Gadgets applied
    to the same path stack into a single block holding a power of the
    Borromean braid (or of its mirror), so opposite signs cancel exactly.
    """
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign!r}")
    path = _hull_path(d.n, path)
    edges = [norm_edge(path[i], path[i + 1]) for i in range(3)]
    for e in edges:
        if e not in d.walks:
            raise ValueError(f"edge {e} missing from diagram")
    count = sign
    prior = d.meta.get("delta")
    if prior:
        if tuple(prior["path"]) != path:
            raise ValueError(f"diagram already carries a delta block on {prior['path']}")
        count += prior["count"]
        d = _strip(d, set(prior["ids"]))
    out = d.copy()
    out.meta.pop("delta", None)
    if count == 0:
        return out
    start = out.next_id()
    rings, table = _band_sum_rings(_delta_word(count), start)
    walks = dict(out.walks)
    crossings = dict(out.crossings)
    ids = sorted(table)
    if count > 0:
        ring_of = [0, 1, 2]
        for e, ring in zip(edges, rings):
            walks[e] = tuple(ring) + walks[e]
    else:
        # the bands of the second and third edge cross, the second one on
        # top; this swaps the cyclic order in which the rings are met and
        # so reverses the effect on a2
        ring_of = [0, 2, 1]
        a, b, c = edges
        x1, x2, x3, x4 = range(start + len(table), start + len(table) + 4)
        for cid, sgn in zip((x1, x2, x3, x4), (-1, 1, 1, -1)):
            crossings[cid] = Crossing(b, c, sgn)
        ids += [x1, x2, x3, x4]
        walks[a] = tuple(rings[0]) + walks[a]
        walks[b] = ((x1, OVER), (x2, OVER)) + tuple(rings[2]) + ((x4, OVER), (x3, OVER)) + walks[b]
        walks[c] = ((x3, UNDER), (x1, UNDER)) + tuple(rings[1]) + ((x2, UNDER), (x4, UNDER)) + walks[c]
    edge_of = {r: edges[i] for i, r in enumerate(ring_of)}
    for cid, (o, u, sgn) in table.items():
        crossings[cid] = Crossing(edge_of[o], edge_of[u], sgn)
    out.walks, out.crossings = walks, crossings
    out.meta["delta"] = {"path": list(path), "count": count, "ids": ids}
    return out


@dataclass(frozen=True)
class RealizationPlan:
    n: int
    m: int
    k: int
    l: int
    s: int
    predicted_sum: int
    delta_count: int
    delta_path: tuple = (1, 2, 3, 4)

    @property
    def branch(self) -> str:
        return "odd" if self.n % 2 else "even"

    def as_dict(self) -> dict:
        out = asdict(self)
        out["delta_path"] = list(self.delta_path)
        out["branch"] = self.branch
        return out


def nearest_admissible(n: int, m: int) -> tuple[int, int]:
    """The admissible targets just below and just above ``m``."""
    mod = residue_modulus(n)
    below = m - (m - r_n(n)) % mod
    above = below if below == m else below + mod
    return below, above


def plan_realization(n: int, m: int) -> RealizationPlan:
    """Twist parameters and a signed delta count whose diagram has sum ``m``."""
    if not isinstance(m, int):
        raise TypeError(f"m must be an integer, got {m!r}")
    mod = residue_modulus(n)
    if (m - r_n(n)) % mod:
        lo, hi = nearest_admissible(n, m)
        raise InadmissibleTargetError(
            f"m must be \u2261 {r_n(n)} (mod {mod}) for n={n}; nearest admissible values are {lo} and {hi}")
    s = (m - c_n(n)) // mod % (n - 4)
    k, l = (1, 0) if n % 2 else ((n - 6) // 2, (n - 6) // 2)
    predicted = twist_sum(n, k, l, s)
    step = factorial(n - 4)
    if (m - predicted) % step:
        raise ArithmeticError(f"predicted sum {predicted} is not congruent to {m} mod {step}")
    return RealizationPlan(n, m, k, l, s, predicted, (m - predicted) // step)


def realize(n: int, m: int, verify: bool = False, workers: int | None = 1) -> Diagram:
    """Diagram of a rectilinear-based spatial K_n whose Hamiltonian a2 sum is ``m``."""
    plan = plan_realization(n, m)
    d = twist_embedding(TwistParams(n, plan.k, plan.l, plan.s))
    sign = 1 if plan.delta_count > 0 else -1
    for _ in range(abs(plan.delta_count)):
        d = delta_gadget(d, plan.delta_path, sign)
    d.meta = dict(d.meta, builder="realize", plan=plan.as_dict())
    if verify:
        got = invariant_report(d, workers).sum_a2_hamiltonian
        if got != m:
            raise InternalConsistencyError(f"realized diagram has sum {got}, planned {m}")
        logger.info("realize(n=%d, m=%d) verified", n, m)
    return d
