"""Cycle families of the complete graph K_n.

Cycles are tuples of vertex labels in canonical form: the smallest label
first, and of the two traversal directions the one whose second entry is
smaller. Triangle pairs are tuples ``(first, second)`` of canonical
triangles with the overall smallest label in ``first``.
"""
from __future__ import annotations

from itertools import combinations, permutations
from math import comb, factorial
from typing import Iterator, Sequence

Cycle = tuple
CyclePair = tuple


class InvalidGraphError(ValueError):
    pass


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 3:
        raise InvalidGraphError(f"complete graph needs n >= 3, got {n!r}")


def edges(n: int) -> list[tuple[int, int]]:
    _check_n(n)
    return list(combinations(range(1, n + 1), 2))


def canonical_cycle(vertices: Sequence[int]) -> Cycle:
    """Rotate/reflect a vertex sequence into canonical form."""
    vs = list(vertices)
    if len(vs) < 3 or len(set(vs)) != len(vs):
        raise ValueError(f"not a cycle: {vertices!r}")
    i = vs.index(min(vs))
    vs = vs[i:] + vs[:i]
    if vs[1] > vs[-1]:
        vs = [vs[0]] + vs[:0:-1]
    return tuple(vs)


def cycle_edges(cycle: Sequence[int]) -> list[tuple[int, int]]:
    """Edges of a cycle as ``(u, v)`` pairs in traversal order."""
    p = len(cycle)
    return [(cycle[i], cycle[(i + 1) % p]) for i in range(p)]


def _cycles_on(vertices: Sequence[int]) -> Iterator[Cycle]:
    first, rest = vertices[0], vertices[1:]
    for perm in permutations(rest):
        if perm[0] < perm[-1]:
            yield (first,) + perm


def hamiltonian_cycles(n: int) -> Iterator[Cycle]:
    """All (n-1)!/2 Hamiltonian cycles, lexicographic in canonical form."""
    _check_n(n)
    return _cycles_on(tuple(range(1, n + 1)))


def p_cycles(n: int, p: int) -> Iterator[Cycle]:
    _check_n(n)
    if not 3 <= p <= n:
        raise ValueError(f"cycle length p must satisfy 3 <= p <= {n}, got {p}")
    if p == n:
        return hamiltonian_cycles(n)
    if p == 3:
        return iter(combinations(range(1, n + 1), 3))
    out = [c for vs in combinations(range(1, n + 1), p) for c in _cycles_on(vs)]
    out.sort()
    return iter(out)


def disjoint_triangle_pairs(n: int) -> Iterator[CyclePair]:
    _check_n(n)
    for t1 in combinations(range(1, n + 1), 3):
        for t2 in combinations(range(t1[0] + 1, n + 1), 3):
            if not set(t1) & set(t2):
                yield (t1, t2)


def hamiltonian_cycles_through_path(n: int, path: Sequence[int]) -> int:
    """Number of Hamiltonian cycles containing the three edges of a 4-vertex path.

    Contracting the path to a single edge leaves K_{n-2}, where each edge
    lies on (n-4)! Hamiltonian cycles.
    """
    _check_n(n)
    if len(path) != 4 or len(set(path)) != 4:
        raise ValueError(f"path must have 4 distinct vertices, got {path!r}")
    if any(not 1 <= v <= n for v in path):
        raise ValueError(f"path {path!r} has labels outside 1..{n}")
    if n < 4:
        raise InvalidGraphError("K_n with n < 4 has no 4-vertex path")
    return factorial(n - 4)


def count_hamiltonian(n: int) -> int:
    _check_n(n)
    return factorial(n - 1) // 2


def count_p_cycles(n: int, p: int) -> int:
    return comb(n, p) * factorial(p - 1) // 2


def count_triangle_pairs(n: int) -> int:
    return comb(n, 6) * 10
