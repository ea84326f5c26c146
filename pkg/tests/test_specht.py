"""Irreducible characters, dimensions, and decomposition of class functions."""

from fractions import Fraction
from math import factorial

import pytest

from braidchar.characters import (
    ClassFunction,
    a_character,
    braid_character,
    inner_product,
)
from braidchar.partitions import (
    class_data,
    conjugate,
    partitions,
    sign_character,
)
from braidchar.specht import (
    IrrepDecomposition,
    decompose,
    irreducible_character,
    irreducible_character_value,
    irrep_dimension,
)


@pytest.mark.parametrize(
    "mu, expected",
    [
        ((3,), 1),
        ((2, 1), 2),
        ((1, 1, 1), 1),
        ((3, 1, 1), 6),
        ((2, 2), 2),
        ((4, 4), 14),
        ((3, 3, 3), 42),
        ((5, 4, 3, 2, 1), 292864),
    ],
)
def test_hook_length_dimensions(mu, expected):
    assert irrep_dimension(mu) == expected


def test_dimension_squares_sum_to_group_order():
    for n in range(1, 10):
        assert sum(irrep_dimension(mu) ** 2 for mu in partitions(n)) == factorial(n)


def test_hook_formula_matches_character_at_identity():
    # two independent computations: hook products vs the recursive rule
    for n in range(1, 9):
        for mu in partitions(n):
            assert irreducible_character(mu)((1,) * n) == irrep_dimension(mu)


S3_TABLE = {
    (3,): {(1, 1, 1): 1, (2, 1): 1, (3,): 1},
    (2, 1): {(1, 1, 1): 2, (2, 1): 0, (3,): -1},
    (1, 1, 1): {(1, 1, 1): 1, (2, 1): -1, (3,): 1},
}


def test_s3_character_table_frozen():
    for mu, row in S3_TABLE.items():
        for lam, value in row.items():
            assert irreducible_character_value(mu, lam) == value


@pytest.mark.parametrize(
    "mu, lam, value",
    [
        ((2, 2), (2, 2), 2),
        ((2, 2), (1, 1, 1, 1), 2),
        ((2, 2), (3, 1), -1),
        ((2, 2), (4,), 0),
        ((3, 1), (1, 1, 1, 1), 3),
        ((3, 1), (2, 1, 1), 1),
        ((3, 1), (2, 2), -1),
        ((3, 1), (3, 1), 0),
        ((3, 1), (4,), -1),
        ((4,), (2, 2), 1),
        # staircase characters vanish off odd cycle types; (9,5,1) peels
        # the principal hooks and a 15-hook does not fit at all
        ((5, 4, 3, 2, 1), (5, 4, 3, 2, 1), 0),
        ((5, 4, 3, 2, 1), (15,), 0),
        ((5, 4, 3, 2, 1), (9, 5, 1), 1),
    ],
)
def test_character_values_frozen(mu, lam, value):
    assert irreducible_character_value(mu, lam) == value


def test_size_mismatch_rejected():
    with pytest.raises(ValueError):
        irreducible_character_value((2, 1), (4,))


def test_trivial_and_sign_characters():
    for n in range(1, 8):
        triv = irreducible_character((n,))
        sgn = irreducible_character((1,) * n)
        for lam in partitions(n):
            assert triv(lam) == 1
            assert sgn(lam) == sign_character(lam)


def test_conjugate_twist_symmetry():
    for n in range(1, 8):
        for mu in partitions(n):
            twisted = irreducible_character(conjugate(mu))
            plain = irreducible_character(mu)
            for lam in partitions(n):
                assert twisted(lam) == sign_character(lam) * plain(lam)


def test_first_orthogonality():
    for n in range(1, 8):
        mus = partitions(n)
        for i, mu in enumerate(mus):
            for nu in mus[i:]:
                value = inner_product(
                    irreducible_character(mu), irreducible_character(nu)
                )
                assert value == (1 if mu == nu else 0)


def test_second_orthogonality():
    for n in range(1, 8):
        mus = partitions(n)
        for lam in partitions(n):
            for rho in partitions(n):
                total = sum(
                    irreducible_character_value(mu, lam)
                    * irreducible_character_value(mu, rho)
                    for mu in mus
                )
                expected = class_data(lam).centralizer_order if lam == rho else 0
                assert total == expected


def test_decompose_trivial_sign_regular():
    for n in range(2, 7):
        assert decompose(ClassFunction.trivial(n)).as_dict() == {(n,): 1}
        assert decompose(ClassFunction.sign(n)).as_dict() == {(1,) * n: 1}
        reg = decompose(ClassFunction.regular(n))
        assert reg.as_dict() == {mu: irrep_dimension(mu) for mu in partitions(n)}


def test_decompose_cohomology_spot():
    dec = decompose(braid_character(4, 1))
    assert dec.terms == (((4,), 1), ((3, 1), 1), ((2, 2), 1))
    assert dec.dimension == 6
    assert dec.genuine
    assert str(dec) == "[4] + [3,1] + [2,2]"


def test_decompose_roundtrip():
    for n in range(2, 8):
        for k in (1, 2):
            if k > n - 1:
                continue
            f = a_character(n, k)
            dec = decompose(f)
            back = dec.as_class_function()
            for lam in partitions(n):
                assert back(lam) == f(lam)


def test_decomposition_order_is_canonical():
    dec = decompose(braid_character(6, 2))
    labels = [mu for mu, _ in dec.terms]
    assert labels == sorted(labels, reverse=True)


def test_multiplicity_lookup():
    dec = decompose(a_character(5, 2))
    assert dec.multiplicity((3, 1, 1)) == 2
    assert dec.multiplicity((5,)) == 0
    assert dec.as_dict() == {(4, 1): 1, (3, 2): 1, (3, 1, 1): 2, (2, 2, 1): 1}


def test_tail_multiset():
    dec = decompose(a_character(6, 1))
    assert dec.tail_multiset() == {(1,): 1, (2,): 1}


def test_virtual_decomposition():
    f = ClassFunction.trivial(4) - ClassFunction.sign(4)
    with pytest.raises(ArithmeticError):
        decompose(f)
    dec = decompose(f, virtual=True)
    assert dec.as_dict() == {(4,): 1, (1, 1, 1, 1): -1}
    assert not dec.genuine
    assert str(dec) == "[4] - [1,1,1,1]"


def test_non_integer_multiplicity_rejected():
    f = ClassFunction.from_rule(3, lambda lam: Fraction(1, 2))
    with pytest.raises(ArithmeticError):
        decompose(f, virtual=True)


def test_empty_decomposition():
    zero = ClassFunction.from_rule(3, lambda lam: 0)
    dec = decompose(zero)
    assert dec.terms == ()
    assert dec.dimension == 0
    assert str(dec) == "0"
    assert isinstance(dec, IrrepDecomposition)
