"""Closed-form quantities for spatial complete graphs."""
from __future__ import annotations

from math import comb, factorial


def _need(n: int, low: int = 6) -> None:
    if not isinstance(n, int) or n < low:
        raise ValueError(f"need an integer n >= {low}, got {n!r}")


def residue_modulus(n: int) -> int:
    """(n-5)!, the modulus of the Hamiltonian a2 congruence."""
    _need(n)
    return factorial(n - 5)


def r_n(n: int) -> int:
    """Universal residue of the Hamiltonian a2 sum modulo (n-5)!."""
    _need(n)
    if n == 6:
        return 0
    return factorial(n - 5) // 2 if n % 8 in (0, 7) else 0


def c_n(n: int) -> int:
    """Hamiltonian a2 sum of the standard rectilinear embedding h(K_n)."""
    _need(n)
    return factorial(n - 5) * (comb(n, 6) - comb(n - 1, 5)) // 2


def check_twist(n: int, k: int, l: int, s: int) -> None:
    _need(n)
    for name, value in (("k", k), ("l", l), ("s", s)):
        if not isinstance(value, int) or value < 0:
            raise ValueError(f"{name} must be a non-negative integer, got {value!r}")
    if k + l > n - 4:
        raise ValueError(f"twist needs k + l <= n - 4, got k={k}, l={l}, n={n}")


def sigma(k: int, l: int, s: int) -> int:
    for name, value in (("k", k), ("l", l), ("s", s)):
        if not isinstance(value, int) or value < 0:
            raise ValueError(f"{name} must be a non-negative integer, got {value!r}")
    return s * (s * (k + l + 1) - k)


def tau(n: int, k: int, l: int, s: int) -> int:
    check_twist(n, k, l, s)
    return s * ((1 - s) * (k * k + k * l + l * l)
                + s * comb(k, 2)
                + s * comb(n - (k + l + 4), 2)
                + (s - 2) * comb(l, 2))


def twist_sum(n: int, k: int, l: int, s: int) -> int:
    """Predicted Hamiltonian a2 sum of the twisted embedding."""
    check_twist(n, k, l, s)
    return c_n(n) + factorial(n - 4) * sigma(k, l, s) + factorial(n - 5) * tau(n, k, l, s)
