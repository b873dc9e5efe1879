"""Combinatorial diagrams of spatial complete graphs.

A :class:`Diagram` records, for every edge ``(u, v)`` with ``u < v``, the
ordered passages through crossings met when walking from ``u`` to ``v``,
plus a table of crossings ``id -> (over_edge, under_edge, sign)``. Signs are
taken with respect to the reference orientation of each edge (low label to
high label) and use the right-handed convention: with the over strand
pointing along ``o`` and the under strand along ``u`` in the projection
plane, the sign is that of ``o x u``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import NamedTuple, Sequence

from .graph import canonical_cycle, cycle_edges

Edge = tuple  # (u, v) with u < v

OVER = "O"
UNDER = "U"


class DiagramError(ValueError):
    """Inconsistent diagram or sub-diagram request."""


class DiagramParseError(DiagramError):
    def __init__(self, message: str, where: str = ""):
        self.where = where
        super().__init__(f"{where}: {message}" if where else message)


class Crossing(NamedTuple):
    over: Edge
    under: Edge
    sign: int


class Passage(NamedTuple):
    """One visit of a crossing along an oriented knot or link component."""

    cid: int
    over: bool
    sign: int


class Violation(NamedTuple):
    kind: str
    message: str
    severity: str = "error"


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass
class Diagram:
    n: int
    walks: dict = field(default_factory=dict)
    crossings: dict = field(default_factory=dict)
    meta: dict = field(default_factory=dict)

    @classmethod
    def empty(cls, n: int, meta: dict | None = None) -> "Diagram":
        walks = {e: () for e in combinations(range(1, n + 1), 2)}
        return cls(n, walks, {}, dict(meta or {}))

    def __eq__(self, other):
        if not isinstance(other, Diagram):
            return NotImplemented
        return (self.n, self.walks, self.crossings, self.meta) == (
            other.n, other.walks, other.crossings, other.meta)

    def __getstate__(self):
        return {"n": self.n, "walks": self.walks, "crossings": self.crossings, "meta": self.meta}

    def __setstate__(self, state):
        self.__dict__.update(state)

    @property
    def num_crossings(self) -> int:
        return len(self.crossings)

    def next_id(self) -> int:
        return max(self.crossings, default=-1) + 1

    def copy(self, meta: dict | None = None) -> "Diagram":
        return Diagram(self.n, dict(self.walks), dict(self.crossings),
                       dict(self.meta if meta is None else meta))

    @cached_property
    def _other_edge(self) -> dict:
        # for each edge, the list of (cid, over?, other_edge) along its walk
        table = {}
        for e, walk in self.walks.items():
            rows = []
            for cid, role in walk:
                c = self.crossings[cid]
                rows.append((cid, role == OVER, c.under if role == OVER else c.over))
            table[e] = rows
        return table

    def _traverse(self, cycle: Sequence[int], keep) -> list[Passage]:
        direction = {}
        for a, b in cycle_edges(cycle):
            direction[norm_edge(a, b)] = 1 if a < b else -1
        for e in direction:
            if e not in self.walks:
                raise DiagramError(f"edge {e} missing from diagram")
        out = []
        for a, b in cycle_edges(cycle):
            e = norm_edge(a, b)
            f = direction[e]
            rows = self._other_edge[e] if f == 1 else reversed(self._other_edge[e])
            for cid, is_over, other in rows:
                g = keep(other)
                if g:
                    out.append(Passage(cid, is_over, self.crossings[cid].sign * f * g))
        return out


def validate(d: Diagram) -> list[Violation]:
    """Violations of the diagram invariants; no errors means valid."""
    out: list[Violation] = []
    expected = set(combinations(range(1, d.n + 1), 2))
    keys = set(d.walks)
    for e in sorted(expected - keys):
        out.append(Violation("missing edge", f"edge {e} has no walk"))
    for e in sorted(keys - expected, key=repr):
        out.append(Violation("dangling edge", f"walk for edge {e} not in K_{d.n}"))
    seen: dict = {}
    for e in sorted(keys, key=repr):
        for pos, entry in enumerate(d.walks[e]):
            try:
                cid, role = entry
            except (TypeError, ValueError):
                out.append(Violation("malformed passage", f"edge {e} position {pos}: {entry!r}"))
                continue
            if role not in (OVER, UNDER):
                out.append(Violation("malformed passage", f"edge {e} position {pos}: role {role!r}"))
                continue
            seen.setdefault((cid, role), []).append((e, pos))
    for cid, c in sorted(d.crossings.items()):
        for edge in (c.over, c.under):
            if tuple(edge) not in expected:
                out.append(Violation("dangling edge", f"crossing {cid} references edge {edge}"))
        if c.sign not in (1, -1):
            out.append(Violation("bad sign", f"crossing {cid} has sign {c.sign!r}"))
        if c.over == c.under:
            out.append(Violation("self crossing", f"crossing {cid} on edge {c.over}", "warning"))
        for role, edge in ((OVER, c.over), (UNDER, c.under)):
            hits = seen.pop((cid, role), [])
            if len(hits) != 1:
                out.append(Violation(
                    "unpaired crossing",
                    f"crossing {cid} appears {len(hits)} times as {role}"))
            elif hits[0][0] != tuple(edge):
                out.append(Violation(
                    "misplaced crossing",
                    f"crossing {cid} role {role} found on {hits[0][0]}, table says {edge}"))
    for (cid, role), hits in sorted(seen.items(), key=repr):
        out.append(Violation("unknown crossing", f"crossing {cid} ({role}) on {hits[0][0]} not in table"))
    return out


def errors(d: Diagram) -> list[Violation]:
    return [v for v in validate(d) if v.severity == "error"]


@dataclass(frozen=True)
class KnotDiagram:
    passages: tuple

    @property
    def crossing_ids(self) -> set:
        return {p.cid for p in self.passages}


@dataclass(frozen=True)
class LinkDiagram:
    components: tuple  # two tuples of Passage
    inter: frozenset

    def component(self, i: int) -> KnotDiagram:
        """The i-th component alone (intra-component crossings only)."""
        return KnotDiagram(tuple(p for p in self.components[i] if p.cid not in self.inter))


def extract_knot(d: Diagram, cycle: Sequence[int]) -> KnotDiagram:
    """Gauss-style diagram of the knot carried by ``cycle``.

    Traversal follows the canonical orientation of the cycle.
    """
    cyc = canonical_cycle(cycle)
    _check_labels(d, cyc)
    member = {norm_edge(a, b): (1 if a < b else -1) for a, b in cycle_edges(cyc)}
    return KnotDiagram(tuple(d._traverse(cyc, member.get)))


def extract_link(d: Diagram, pair) -> LinkDiagram:
    c1, c2 = (canonical_cycle(c) for c in pair)
    if set(c1) & set(c2):
        raise DiagramError(f"cycles {c1} and {c2} are not disjoint")
    if min(c2) < min(c1):
        c1, c2 = c2, c1
    _check_labels(d, c1 + c2)
    member = {}
    for c in (c1, c2):
        for a, b in cycle_edges(c):
            member[norm_edge(a, b)] = 1 if a < b else -1
    comps = (tuple(d._traverse(c1, member.get)), tuple(d._traverse(c2, member.get)))
    ids1 = {p.cid for p in comps[0]}
    ids2 = {p.cid for p in comps[1]}
    return LinkDiagram(comps, frozenset(ids1 & ids2))


def _check_labels(d: Diagram, vertices) -> None:
    for v in vertices:
        if not 1 <= v <= d.n:
            raise DiagramError(f"vertex {v} not in K_{d.n}")


# -- file format ------------------------------------------------------------

FORMAT = "cgsum.diagram/1"


def to_document(d: Diagram) -> dict:
    return {
        "format": FORMAT,
        "n": d.n,
        "edges": [
            {"u": u, "v": v, "walk": [[cid, role] for cid, role in d.walks[(u, v)]]}
            for (u, v) in sorted(d.walks)
        ],
        "crossings": [
            {"id": cid, "over": list(c.over), "under": list(c.under), "sign": c.sign}
            for cid, c in sorted(d.crossings.items())
        ],
        "meta": d.meta,
    }


def serialize(d: Diagram) -> str:
    doc = to_document(d)
    # one edge / crossing per line keeps diffs readable
    lines = ["{", f'  "format": {json.dumps(doc["format"])},', f'  "n": {doc["n"]},', '  "edges": [']
    lines += [f"    {json.dumps(e)}," for e in doc["edges"]]
    if doc["edges"]:
        lines[-1] = lines[-1][:-1]
    lines.append("  ],")
    lines.append('  "crossings": [')
    lines += [f"    {json.dumps(c)}," for c in doc["crossings"]]
    if doc["crossings"]:
        lines[-1] = lines[-1][:-1]
    lines.append("  ],")
    lines.append(f'  "meta": {json.dumps(doc["meta"], sort_keys=True)}')
    lines.append("}")
    return "\n".join(lines) + "\n"


def deserialize(text: str) -> Diagram:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DiagramParseError(exc.msg, f"line {exc.lineno} column {exc.colno}") from None
    return from_document(doc)


def _int(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DiagramParseError(f"expected integer, got {value!r}", where)
    return value


def _pair(value, where: str) -> Edge:
    if not isinstance(value, list) or len(value) != 2:
        raise DiagramParseError(f"expected [u, v], got {value!r}", where)
    return (_int(value[0], where), _int(value[1], where))


def from_document(doc) -> Diagram:
    if not isinstance(doc, dict):
        raise DiagramParseError("document must be an object")
    for key in ("n", "edges", "crossings"):
        if key not in doc:
            raise DiagramParseError(f"missing field {key!r}")
    n = _int(doc["n"], "n")
    walks = {}
    if not isinstance(doc["edges"], list):
        raise DiagramParseError("expected a list", "edges")
    for i, entry in enumerate(doc["edges"]):
        where = f"edges[{i}]"
        if not isinstance(entry, dict) or not {"u", "v", "walk"} <= entry.keys():
            raise DiagramParseError("expected {u, v, walk}", where)
        e = (_int(entry["u"], where + ".u"), _int(entry["v"], where + ".v"))
        if not isinstance(entry["walk"], list):
            raise DiagramParseError("expected a list", where + ".walk")
        walk = []
        for j, step in enumerate(entry["walk"]):
            w = f"{where}.walk[{j}]"
            if not isinstance(step, list) or len(step) != 2 or step[1] not in (OVER, UNDER):
                raise DiagramParseError(f"expected [id, \"O\"|\"U\"], got {step!r}", w)
            walk.append((_int(step[0], w), step[1]))
        walks[e] = tuple(walk)
    crossings = {}
    if not isinstance(doc["crossings"], list):
        raise DiagramParseError("expected a list", "crossings")
    for i, entry in enumerate(doc["crossings"]):
        where = f"crossings[{i}]"
        if not isinstance(entry, dict) or not {"id", "over", "under", "sign"} <= entry.keys():
            raise DiagramParseError("expected {id, over, under, sign}", where)
        cid = _int(entry["id"], where + ".id")
        if cid in crossings:
            raise DiagramParseError(f"duplicate crossing id {cid}", where)
        crossings[cid] = Crossing(_pair(entry["over"], where + ".over"),
                                  _pair(entry["under"], where + ".under"),
                                  _int(entry["sign"], where + ".sign"))
    meta = doc.get("meta", {})
    if not isinstance(meta, dict):
        raise DiagramParseError("expected an object", "meta")
    return Diagram(n, walks, crossings, meta)


def load(path) -> Diagram:
    with open(path, encoding="utf-8") as fh:
        return deserialize(fh.read())


def dump(d: Diagram, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize(d))
