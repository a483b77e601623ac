import pytest
from hypothesis import given, settings, strategies as st

from dihedral_bredon.abelian import (
    OMEGA, ZERO, Bounded, ExtNat, SymbolicRank, bounded, countable_sum, cyclic,
    direct_sum, embeds, free, is_exact, n_torsion, normalize, parse_group, render, tensor, tor,
)
from dihedral_bredon.errors import SymbolicRankError

from brute import n_torsion_structure


def g(text):
    return parse_group(text)


# -- ExtNat --------------------------------------------------------------

def test_extnat_arithmetic():
    assert ExtNat(3) + OMEGA == OMEGA
    assert OMEGA + 0 == OMEGA
    assert ExtNat(0) * OMEGA == 0
    assert ExtNat(2) * OMEGA == OMEGA
    assert ExtNat(2) * 3 == 6


def test_extnat_order_and_parsing():
    assert ExtNat(0) < ExtNat(1) < ExtNat(10 ** 30) < OMEGA
    assert ExtNat.of("w") is OMEGA and ExtNat.of("ω") is OMEGA
    assert str(OMEGA) == "w" and str(ExtNat(5)) == "5"
    assert hash(ExtNat(4)) == hash(4)
    with pytest.raises(ValueError):
        ExtNat(-1)
    with pytest.raises(OverflowError):
        int(OMEGA)


# -- normalize -----------------------------------------------------------

@pytest.mark.parametrize("raw, expected", [
    ([(6, 1)], "Z/2 (+) Z/3"),
    ([(0, OMEGA), (0, 3)], "(+)_{w} Z"),
    ([(48, 1)], "Z/16 (+) Z/3"),
    ([(2, 0), (0, 0)], "0"),
    ([(12, 2), (4, 1)], "(Z/4)^3 (+) (Z/3)^2"),
])
def test_normalize_examples(raw, expected):
    assert render(normalize(raw)) == expected


@pytest.mark.parametrize("order", [1, -2])
def test_normalize_rejects_bad_orders(order):
    with pytest.raises(ValueError):
        normalize([(order, 1)])


def test_symbolic_rank_absorbed_by_countable_free():
    r = SymbolicRank("r")
    assert normalize([(0, OMEGA)], [r]) == free(OMEGA)
    assert render(normalize([(2, 1)], [r])) == "Z^r[1..w] (+) Z/2"
    # a pinned symbolic rank is an ordinary rank
    assert normalize([], [SymbolicRank("r", 2, 2)]) == free(2)


def test_symbolic_rank_validation():
    with pytest.raises(ValueError):
        SymbolicRank("r", 0)
    with pytest.raises(ValueError):
        SymbolicRank("r", 3, 2)


# -- sums ----------------------------------------------------------------

def test_bounded_absorbed_by_countable_sum():
    nil = Bounded(ZERO, cyclic(2, OMEGA))
    assert direct_sum(cyclic(2, OMEGA), nil) == cyclic(2, OMEGA)


def test_zero_is_neutral():
    assert direct_sum(g("Z/4 (+) Z"), ZERO) == g("Z (+) Z/4")


def test_symbolic_rank_summed_countably():
    r = normalize([], [SymbolicRank("r")])
    assert countable_sum(r, OMEGA) == free(OMEGA)
    assert render(countable_sum(r, 2)) == "Z^r[1..w] (+) Z^r[1..w]"


@pytest.mark.parametrize("value, kappa, expected", [
    ("Z (+) Z/2", OMEGA, "(+)_{w} Z (+) (+)_{w} Z/2"),
    ("Z (+) Z/2", 0, "0"),
    ("Z^r[1..w] (+) (+)_{w} Z/2", OMEGA, "(+)_{w} Z (+) (+)_{w} Z/2"),
    ("Z/3", 4, "(Z/3)^4"),
])
def test_countable_sum_examples(value, kappa, expected):
    assert render(countable_sum(g(value), kappa)) == expected


def test_bounded_with_equal_bounds_never_escapes():
    assert bounded(cyclic(2), cyclic(2)) == cyclic(2)
    with pytest.raises(ValueError):
        Bounded(cyclic(2), cyclic(2))
    with pytest.raises(ValueError):
        Bounded(cyclic(4), cyclic(2))


# -- tensor / Tor / torsion ----------------------------------------------

@pytest.mark.parametrize("a, b, expected", [
    ("Z/4", "Z/6", "Z/2"),
    ("Z^2", "Z/2", "(Z/2)^2"),
    ("(+)_{w} Z", "Z/3", "(+)_{w} Z/3"),
    ("Z", "Z", "Z"),
    ("Z/9", "Z/3", "Z/3"),
])
def test_tensor_examples(a, b, expected):
    assert render(tensor(g(a), g(b))) == expected


@pytest.mark.parametrize("a, b, expected", [
    ("Z", "Z/7 (+) Z", "0"),
    ("Z/4", "Z/6", "Z/2"),
    ("Z/2 (+) Z", "Z/2", "Z/2"),
])
def test_tor_examples(a, b, expected):
    assert render(tor(g(a), g(b))) == expected


def test_n_torsion_examples():
    assert n_torsion(cyclic(48), 2) == cyclic(2)
    assert n_torsion(free(1), 5) == ZERO
    # enumeration of the torsion part Z/2 x Z/4: two cyclic factors of order 2
    assert n_torsion_structure([2, 4], 2) == [2, 2]
    assert n_torsion(g("Z/2 (+) Z/4 (+) Z"), 2) == cyclic(2, 2)
    assert n_torsion(normalize([], [SymbolicRank("r")]), 3) == ZERO
    with pytest.raises(ValueError):
        n_torsion(cyclic(2), 0)


def test_symbolic_tensor_with_torsion_is_rejected():
    with pytest.raises(SymbolicRankError):
        tensor(normalize([], [SymbolicRank("r")]), cyclic(2))


# -- text form -----------------------------------------------------------

@pytest.mark.parametrize("text", [
    "0", "Z", "Z^3", "Z/8", "(Z/2)^3", "(+)_{w} Z", "(+)_{w} Z/2", "Z^r[1..w]",
    "(+)_{w} Z (+) (+)_{w} Z/2 (+) Z/4", "Z^2 (+) Z^s[1..w] (+) Z/3",
    "between(0 | (+)_{w} Z/2)", "between(Z/2 | (Z/2)^2 (+) Z/3)",
])
def test_render_parse_round_trip(text):
    assert render(parse_group(text)) == text


@pytest.mark.parametrize("bad", ["Z/", "Z/1", "(Z/2", "Q", "between(Z/2)", ""])
def test_parse_errors(bad):
    with pytest.raises(ValueError):
        parse_group(bad)


def test_embeds_condition():
    assert embeds(cyclic(2), cyclic(4))
    assert not embeds(cyclic(4), cyclic(2, 5))
    assert embeds(free(3), free(OMEGA))
    assert not embeds(free(2), free(1))


# -- properties ----------------------------------------------------------

ORDERS = [0, 2, 3, 4, 5, 8, 9, 6, 12]
MULTS = st.one_of(st.integers(0, 3).map(ExtNat), st.just(OMEGA))
groups = st.lists(st.tuples(st.sampled_from(ORDERS), MULTS), max_size=4).map(normalize)
finite_groups = st.lists(st.tuples(st.sampled_from([2, 3, 4, 5, 8, 9]), st.integers(0, 2)),
                         max_size=3).map(normalize).filter(lambda a: a.order() <= 4096)


@given(st.lists(st.tuples(st.sampled_from(ORDERS), MULTS), max_size=5))
def test_normalize_idempotent(raw):
    once = normalize(raw)
    assert normalize(once.factors, once.symbolic) == once


@given(groups, groups, groups)
def test_direct_sum_commutative_associative(a, b, c):
    assert direct_sum(a, b) == direct_sum(b, a)
    assert direct_sum(direct_sum(a, b), c) == direct_sum(a, direct_sum(b, c))
    assert direct_sum(a, ZERO) == a


@given(groups, groups, groups)
def test_tensor_tor_commute_and_distribute(a, b, c):
    assert tensor(a, b) == tensor(b, a)
    assert tor(a, b) == tor(b, a)
    assert tensor(a, direct_sum(b, c)) == direct_sum(tensor(a, b), tensor(a, c))
    assert tor(a, direct_sum(b, c)) == direct_sum(tor(a, b), tor(a, c))


@given(groups)
def test_render_parse_round_trip_property(a):
    assert parse_group(render(a)) == a


@given(groups, groups, groups)
def test_no_degenerate_bounded(lo, extra, other):
    value = bounded(lo, direct_sum(lo, extra))
    assert is_exact(value) == (direct_sum(lo, extra) == lo)
    for result in (direct_sum(value, other), countable_sum(value, OMEGA), countable_sum(value, 2)):
        assert is_exact(result) or result.lower != result.upper


@settings(max_examples=60, deadline=None)
@given(finite_groups, st.integers(1, 12))
def test_n_torsion_matches_enumeration(a, n):
    assert sorted(n_torsion(a, n).cyclic_orders()) == n_torsion_structure(a.cyclic_orders(), n)
