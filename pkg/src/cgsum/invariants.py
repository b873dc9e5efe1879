"""Aggregate knot and link invariants of a spatial K_n diagram."""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction
from itertools import combinations, islice
from math import comb, factorial

from . import graph
from .closed_forms import r_n
from .diagram import Diagram, extract_knot, extract_link
from .knots import a2, lk

__all__ = [
    "InvariantReport", "Verdict", "invariant_report", "sum_a2", "verify_identity",
    "verify_congruence", "verify_sachs", "a2", "lk",
]


@dataclass(frozen=True)
class InvariantReport:
    n: int
    sum_a2_hamiltonian: int
    sum_a2_pentagons: int
    sum_lk2_triangles: int
    sum_lk_triangles: int
    residue_modulus: int
    residue: int

    def as_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class Verdict:
    name: str
    passed: bool | None  # None: computed, but no claim applies
    expected: object
    actual: object
    detail: str = ""

    def as_dict(self) -> dict:
        out = asdict(self)
        for key in ("expected", "actual"):
            if isinstance(out[key], Fraction):
                out[key] = str(out[key])
        return out


def _a2_chunk(args) -> int:
    d, p, part, parts = args
    cycles = graph.p_cycles(d.n, p)
    return sum(a2(extract_knot(d, c)) for c in islice(cycles, part, None, parts))


def _lk_chunk(args) -> tuple:
    d, part, parts = args
    s1 = s2 = 0
    for pair in islice(graph.disjoint_triangle_pairs(d.n), part, None, parts):
        v = lk(extract_link(d, pair))
        s1 += v
        s2 += v * v
    return s1, s2


def _workers(workers) -> int:
    if workers is None:
        return os.cpu_count() or 1
    if workers < 1:
        raise ValueError(f"workers must be positive, got {workers}")
    return workers


def _run(fn, jobs, workers: int):
    if workers == 1 or len(jobs) == 1:
        return [fn(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, jobs))


def sum_a2(d: Diagram, p: int | None = None, workers: int | None = 1) -> int:
    """Sum of a2 over all p-cycles (Hamiltonian cycles by default)."""
    w = _workers(workers)
    p = d.n if p is None else p
    parts = w * 4 if w > 1 else 1
    return sum(_run(_a2_chunk, [(d, p, i, parts) for i in range(parts)], w))


def triangle_link_sums(d: Diagram, workers: int | None = 1) -> tuple[int, int]:
    """(sum of lk, sum of lk^2) over disjoint triangle pairs."""
    w = _workers(workers)
    parts = w if w > 1 else 1
    rows = _run(_lk_chunk, [(d, i, parts) for i in range(parts)], w)
    return sum(r[0] for r in rows), sum(r[1] for r in rows)


def invariant_report(d: Diagram, workers: int | None = 1) -> InvariantReport:
    if d.n < 6:
        raise ValueError(f"invariant report needs n >= 6, got n={d.n}")
    ham = sum_a2(d, d.n, workers)
    pent = sum_a2(d, 5, workers)
    s_lk, s_lk2 = triangle_link_sums(d, workers)
    mod = factorial(d.n - 5)
    return InvariantReport(d.n, ham, pent, s_lk2, s_lk, mod, ham % mod)


def _report(d_or_report, workers) -> InvariantReport:
    if isinstance(d_or_report, InvariantReport):
        return d_or_report
    return invariant_report(d_or_report, workers)


def verify_identity(d_or_report, workers: int | None = 1) -> Verdict:
    """Exact check of the integral relation between the a2 and lk^2 sums."""
    rep = _report(d_or_report, workers)
    n = rep.n
    lhs = rep.sum_a2_hamiltonian - factorial(n - 5) * rep.sum_a2_pentagons
    rhs = Fraction(factorial(n - 5), 2) * (rep.sum_lk2_triangles - comb(n - 1, 5))
    return Verdict("identity", lhs == rhs, rhs, lhs,
                   "sum a2(H) - (n-5)! sum a2(C5) vs (n-5)!/2 (sum lk^2 - C(n-1,5))")


def verify_congruence(d_or_report, modulus: int | None = None, workers: int | None = 1) -> Verdict:
    rep = _report(d_or_report, workers)
    n = rep.n
    full = factorial(n - 5)
    if modulus is None:
        modulus = full
    if modulus <= 0:
        raise ValueError(f"modulus must be positive, got {modulus}")
    residue = rep.sum_a2_hamiltonian % modulus
    if full % modulus:
        return Verdict("congruence", None, None, residue,
                       f"modulus {modulus} does not divide (n-5)! = {full}; residue only")
    expected = r_n(n) % modulus
    return Verdict("congruence", residue == expected, expected, residue,
                   f"sum a2(H) mod {modulus}")


def verify_sachs(d: Diagram) -> Verdict:
    """Sum of lk over triangle pairs is odd inside every 6-vertex subgraph."""
    if d.n < 6:
        raise ValueError("Sachs parity needs n >= 6")
    sums = {}
    for pair in graph.disjoint_triangle_pairs(d.n):
        key = tuple(sorted(pair[0] + pair[1]))
        sums[key] = sums.get(key, 0) + lk(extract_link(d, pair))
    even = [k for k, v in sums.items() if v % 2 == 0]
    total = sum(sums.values())
    detail = f"{len(sums)} six-vertex subgraphs, {len(even)} with even lk sum"
    return Verdict("sachs", not even, "odd in every K6", total, detail)
