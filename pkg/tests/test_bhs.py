import pytest

from dihedral_bredon.abelian import OMEGA, ZERO, Bounded, cyclic, direct_sum, free, is_exact, n_torsion, normalize, render
from dihedral_bredon.bhs import (
    apply_matrix, big_c, big_c_bar, coprime_pair_coker, ind_kernel, k_of_laurent, n_q_class_term,
)
from dihedral_bredon.errors import OutOfRangeError
from dihedral_bredon.ktheory import builtin, get_k

from brute import map_ker_coker

REGULAR = ["Z", "F2", "F3", "F4", "F9"]


@pytest.mark.parametrize("ring, q, total", [
    ("Z", 1, "Z (+) Z/2"),
    ("F2", 1, "Z"),
    ("Z[C2xC2]", 1, "Z (+) (+)_{w} Z/2"),
    ("Z[C4]", 0, "Z (+) Z^s[1..w] (+) (+)_{w} Z/2"),
])
def test_laurent_totals(ring, q, total):
    assert render(k_of_laurent(builtin(ring), q).total) == total


def test_laurent_parts():
    d = k_of_laurent(builtin("Z[C2xC2]"), 1)
    assert render(d.kq) == "(Z/2)^3" and d.kq_minus_1 == free(1)
    assert d.nil_pair == cyclic(2, OMEGA)


def test_ind_kernel_examples():
    k = ind_kernel(builtin("Z"), 1, 2)
    assert k.t1 == ZERO and k.t2 == ZERO
    k = ind_kernel(builtin("Z[C2xC2]"), 0, 3)
    assert k.t1 == ZERO and k.t2 == ZERO
    k = ind_kernel(builtin("Z[C2xC2]"), 0, 2)
    assert isinstance(k.t2, Bounded)
    assert render(k.t2) == "between(0 | (+)_{w} Z/2)"
    with pytest.raises(ValueError):
        ind_kernel(builtin("Z"), 1, 1)


@pytest.mark.parametrize("ring, q, expected", [
    ("Z", 1, "Z"),
    ("Z", 0, "0"),
    ("Z[C4]", 1, "Z (+) (+)_{w} Z/2"),
    ("Z[C2]", 1, "Z"),
])
def test_n_q(ring, q, expected):
    assert render(n_q_class_term(builtin(ring), q)) == expected


@pytest.mark.parametrize("ring, q, n, expected", [
    ("Z", 1, 3, "Z (+) Z/2"),
    ("Z", 0, 5, "Z"),
    ("Z[C2]", 1, 3, "Z (+) (Z/2)^2"),
    ("Z", 4, 3, "Z/16 (+) Z/3"),
])
def test_big_c(ring, q, n, expected):
    assert render(big_c(builtin(ring), q, n)) == expected


@pytest.mark.parametrize("ring, q, n, expected", [
    ("Z", 1, 3, "Z"),
    ("Z", 0, 3, "0"),
    ("F2", 1, 3, "Z"),
])
def test_big_c_bar(ring, q, n, expected):
    assert render(big_c_bar(builtin(ring), q, n)) == expected


def test_big_c_with_nil_is_bounded_then_reported():
    c = big_c(builtin("Z[C4]"), 1, 3)
    assert isinstance(c, Bounded)
    assert render(c.lower) == "Z (+) Z/2 (+) Z/4"


@pytest.mark.parametrize("n", [2, 4, 1])
def test_big_c_rejects_even(n):
    with pytest.raises(ValueError):
        big_c(builtin("Z"), 1, n)


def test_range_errors_propagate():
    with pytest.raises(OutOfRangeError):
        k_of_laurent(builtin("Z[C2]"), 2)
    with pytest.raises(OutOfRangeError):
        n_q_class_term(builtin("Z[C2xC2]"), -1)


@pytest.mark.parametrize("ring", REGULAR)
def test_regular_specialization(ring):
    p = builtin(ring)
    lo, hi = p.q_range
    for q in range(lo, hi + 1):
        d = k_of_laurent(p, q)
        assert d.nil_pair == ZERO
        assert d.total == direct_sum(get_k(p, q), get_k(p, q - 1))
        for n in (3, 5, 7):
            assert ind_kernel(p, q, n).t2 == ZERO
            c = big_c(p, q, n)
            assert is_exact(c) and c == direct_sum(get_k(p, q), get_k(p, q - 1))


@pytest.mark.parametrize("ring", ["Z", "F2", "Z[C4]"])
def test_t1_is_n_torsion_of_previous_k(ring):
    p = builtin(ring)
    for q in (1,):
        for n in (2, 3, 4):
            assert ind_kernel(p, q, n).t1 == n_torsion(get_k(p, q - 1), n)


@pytest.mark.parametrize("orders", [[2], [3], [4], [2, 2], [8], [9], [2, 4], [5], [3, 3], [16], [7], [2, 3]])
@pytest.mark.parametrize("n", [3, 5, 7])
def test_coprime_pair_by_enumeration(orders, n):
    assert map_ker_coker([[2], [n]], orders, 1) == ([], sorted(orders))
    k = normalize([(o, 1) for o in orders])
    ker, coker = apply_matrix([[2], [n]], k)
    assert ker == ZERO and coker == k


def test_coprime_pair_coker_on_symbolic():
    assert render(coprime_pair_coker(builtin("Z[C4]"), 0, 3)) == "Z^s[1..w]"
