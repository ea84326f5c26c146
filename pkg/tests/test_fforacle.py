"""Finite-field square-free census and its polynomial arithmetic core."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidchar.fforacle import (
    BudgetError,
    census_vs_theory,
    enumerate_irreducibles,
    factor_list,
    factor_type,
    factor_type_census,
    is_prime,
    is_squarefree,
    poly_degree,
    poly_derivative,
    poly_divmod,
    poly_from_code,
    poly_gcd,
    poly_mul,
    poly_to_code,
    poly_trim,
)
from braidchar.partitions import partitions
from braidchar.ratpoly import necklace_polynomial


def test_is_prime():
    primes = [p for p in range(50) if is_prime(p)]
    assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]


def test_code_roundtrip():
    for p in (2, 3, 5):
        for code in range(min(p**3, 60)):
            f = poly_from_code(code, 3, p)
            assert len(f) == 4
            assert f[-1] == 1  # monic
            assert poly_to_code(f, p) == code


def test_irreducible_counts_match_necklace_polynomials():
    for p, d_max in ((2, 8), (3, 5), (5, 3), (7, 2)):
        lists = enumerate_irreducibles(p, d_max)
        for d in range(1, d_max + 1):
            assert len(lists[d]) == necklace_polynomial(d)(p)


def test_irreducibles_smallest_cases_frozen():
    lists = enumerate_irreducibles(2, 4)
    assert lists[1] == [(0, 1), (1, 1)]          # z, z + 1
    assert lists[2] == [(1, 1, 1)]               # z^2 + z + 1
    assert sorted(lists[3]) == [(1, 0, 1, 1), (1, 1, 0, 1)]
    assert len(lists[4]) == 3


def test_factor_type_spot_values():
    lists = enumerate_irreducibles(2, 6)
    # x^4 + x^2 + x = x * (x^3 + x + 1)
    assert factor_type(poly_from_code(6, 4, 2), 2, lists) == (3, 1)
    # x^6 + x = x (x + 1)(x^2 + x + 1) ... squarefree part check via census
    assert factor_type((0, 1, 1), 2, lists) == (1, 1)
    assert factor_type((1, 1, 1), 2, lists) == (2,)


@pytest.mark.parametrize(
    "p, n, expected",
    [
        (2, 1, {(1,): 2}),
        (2, 2, {(2,): 1, (1, 1): 1}),
        (3, 2, {(2,): 3, (1, 1): 3}),
        (2, 3, {(3,): 2, (2, 1): 2, (1, 1, 1): 0}),
    ],
)
def test_census_small_frozen(p, n, expected):
    tally = factor_type_census(p, n)
    assert dict(tally.counts) == expected


def test_census_counts_ordered_canonically():
    tally = factor_type_census(3, 4)
    assert tuple(tally.counts) == partitions(4)


def test_engines_agree():
    for p, top in ((2, 8), (3, 5), (5, 3), (7, 2)):
        for n in range(1, top + 1):
            scalar = factor_type_census(p, n, engine="scalar")
            vector = factor_type_census(p, n, engine="vector")
            assert scalar.counts == vector.counts


def test_workers_match_serial():
    serial = factor_type_census(3, 8, engine="vector")
    parallel = factor_type_census(3, 8, engine="vector", workers=2)
    assert serial.counts == parallel.counts


def test_census_vs_theory_reports():
    for p, n in ((2, 7), (3, 5), (5, 3), (7, 2)):
        report = census_vs_theory(p, n)
        assert report.all_ok
        assert [r.partition for r in report.rows] == list(partitions(n))
        assert report.expected_total == p**n - p ** (n - 1)
        for row in report.rows:
            assert row.count == necklace_count(row.partition, p)


def necklace_count(lam, p):
    from braidchar.ratpoly import cycle_polynomial

    value = cycle_polynomial(lam)(p)
    assert value.denominator == 1
    return int(value)


def test_degree_one_total():
    report = census_vs_theory(5, 1)
    assert report.all_ok
    assert report.total_squarefree == 5
    assert report.expected_total == 5


def test_budget_refusal_carries_requirement():
    with pytest.raises(BudgetError) as info:
        factor_type_census(2, 21, budget=10**6)
    assert info.value.required == 2**21
    assert info.value.budget == 10**6
    assert isinstance(info.value, ValueError)


def test_bad_inputs_rejected():
    with pytest.raises(ValueError):
        factor_type_census(4, 3)
    with pytest.raises(ValueError):
        factor_type_census(2, 0)
    with pytest.raises(ValueError):
        factor_type_census(2, 3, engine="quantum")


def poly_add(a, b, p):
    width = max(len(a), len(b))
    a = a + (0,) * (width - len(a))
    b = b + (0,) * (width - len(b))
    return poly_trim([(x + y) % p for x, y in zip(a, b)], p)


coeff_pairs = st.sampled_from((2, 3, 5)).flatmap(
    lambda p: st.tuples(
        st.just(p),
        st.lists(st.integers(min_value=0, max_value=p - 1), max_size=6),
        st.lists(st.integers(min_value=0, max_value=p - 1), max_size=6),
    )
)


@given(coeff_pairs)
def test_poly_mul_commutative_with_degree_bound(triple):
    p, a, b = triple
    a, b = poly_trim(a, p), poly_trim(b, p)
    prod = poly_mul(a, b, p)
    assert prod == poly_mul(b, a, p)
    if poly_degree(a) >= 0 and poly_degree(b) >= 0:
        assert poly_degree(prod) == poly_degree(a) + poly_degree(b)


@given(coeff_pairs)
def test_poly_divmod_reconstructs(triple):
    p, a, b = triple
    a, b = poly_trim(a, p), poly_trim(b, p)
    if poly_degree(b) < 0:
        return
    q, r = poly_divmod(a, b, p)
    assert poly_degree(r) < poly_degree(b)
    assert poly_add(poly_mul(q, b, p), r, p) == a


@given(coeff_pairs)
def test_poly_gcd_divides_both(triple):
    p, a, b = triple
    a, b = poly_trim(a, p), poly_trim(b, p)
    if poly_degree(a) < 0 or poly_degree(b) < 0:
        return
    g = poly_gcd(a, b, p)
    assert poly_degree(g) >= 0
    for f in (a, b):
        _, rem = poly_divmod(f, g, p)
        assert poly_degree(rem) < 0


@settings(max_examples=60)
@given(
    p=st.sampled_from((2, 3, 5)),
    code=st.integers(min_value=0, max_value=3000),
    n=st.integers(min_value=1, max_value=5),
)
def test_squarefree_agrees_with_factorization(p, code, n):
    code %= p**n
    f = poly_from_code(code, n, p)
    lists = enumerate_irreducibles(p, n)
    factors = factor_list(f, p, lists)
    # multiplying the factors back must recover f
    prod = (1,)
    for g, mult in factors:
        for _ in range(mult):
            prod = poly_mul(prod, g, p)
    assert prod == f
    squarefree = all(mult == 1 for _, mult in factors)
    assert is_squarefree(f, p) == squarefree
    gcd = poly_gcd(f, poly_derivative(f, p), p)
    assert (poly_degree(gcd) == 0) == squarefree
