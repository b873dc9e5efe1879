from math import comb, factorial

import pytest

from cgsum.closed_forms import c_n, r_n, residue_modulus, sigma, tau, twist_sum


def test_residues():
    assert [r_n(n) for n in (6, 7, 8, 9, 10, 15, 16)] == [0, 1, 3, 0, 0, factorial(10) // 2, factorial(11) // 2]


def test_c_n_values():
    assert [c_n(n) for n in (6, 7, 8)] == [0, 1, 21]


@pytest.mark.parametrize("n", range(6, 30))
def test_c_n_has_the_universal_residue(n):
    assert c_n(n) % residue_modulus(n) == r_n(n)
    assert 2 * c_n(n) == factorial(n - 5) * (comb(n, 6) - comb(n - 1, 5))


def test_sigma_tau_examples():
    assert sigma(0, 0, 0) == 0 and tau(9, 0, 0, 0) == 0
    assert sigma(1, 0, 1) == 1 and tau(7, 1, 0, 1) == 1
    assert sigma(1, 0, 2) == 6 and tau(7, 1, 0, 2) == 2
    assert twist_sum(7, 1, 0, 1) == 9
    assert twist_sum(7, 1, 0, 2) == 41
    assert twist_sum(8, 1, 1, 1) == 75


@pytest.mark.parametrize("n", range(7, 13))
def test_twist_branches_cover_every_residue(n):
    # the chosen (k, l) hit each class of (n-5)! s modulo (n-4)!
    k, l = (1, 0) if n % 2 else ((n - 6) // 2, (n - 6) // 2)
    big, small = factorial(n - 4), factorial(n - 5)
    for s in range(n - 4):
        assert (twist_sum(n, k, l, s) - c_n(n) - small * s) % big == 0


@pytest.mark.parametrize("bad", [lambda: r_n(5), lambda: c_n(3), lambda: tau(6, 2, 1, 1),
                                 lambda: sigma(-1, 0, 0), lambda: twist_sum(7, 0, 0, -1)])
def test_invalid_arguments(bad):
    with pytest.raises(ValueError):
        bad()
