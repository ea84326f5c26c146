"""Irreducible characters of S_n and decomposition of class functions.

Irreducible characters chi^mu are evaluated by the Murnaghan-Nakayama rule,
implemented on first-column hook lengths (beta sets): removing a border
strip of length t from mu is moving some beta number b down to b - t, the
sign being (-1)^(number of beta numbers jumped over).  Cycles are peeled
largest first and the recursion is memoized on (shape, remaining cycles).

Dimensions come independently from the hook length formula, and any
integer-valued class function is decomposed into irreducibles by inner
products against the chi^mu.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import factorial

from .characters import ClassFunction, inner_product
from .partitions import (
    Partition,
    check_partition,
    class_data,
    conjugate,
    format_partition,
    partitions,
)


def irrep_dimension(mu: Partition) -> int:
    """Dimension of the irreducible S_n module labeled mu (hook lengths).

    >>> irrep_dimension((3, 1, 1))
    6
    """
    mu = check_partition(mu)
    n = sum(mu)
    cols = conjugate(mu)
    hooks = 1
    for i, row in enumerate(mu):
        for j in range(row):
            hooks *= (row - j) + (cols[j] - i) - 1
    dim, rem = divmod(factorial(n), hooks)
    if rem:
        raise ArithmeticError(f"hook product does not divide n! for {mu}")
    return dim


def _beta_set(mu: Partition) -> tuple[int, ...]:
    length = len(mu)
    return tuple(mu[i] + length - 1 - i for i in range(length))


def _shape_from_beta(beta: list[int]) -> Partition:
    # beta strictly decreasing; shift out the staircase and drop zero parts
    length = len(beta)
    return tuple(
        p for i, b in enumerate(beta) if (p := b - (length - 1 - i)) > 0
    )


@cache
def _mn(mu: Partition, cycles: Partition) -> int:
    if not cycles:
        return 1
    t, rest = cycles[0], cycles[1:]
    beta = _beta_set(mu)
    held = set(beta)
    total = 0
    for b in beta:
        nb = b - t
        if nb < 0 or nb in held:
            continue
        jumped = sum(1 for c in beta if nb < c < b)
        nbeta = sorted((c for c in beta if c != b), reverse=True)
        # insert the lowered beta number back in decreasing position
        pos = 0
        while pos < len(nbeta) and nbeta[pos] > nb:
            pos += 1
        nbeta.insert(pos, nb)
        term = _mn(_shape_from_beta(nbeta), rest)
        total += -term if jumped % 2 else term
    return total


def irreducible_character_value(mu: Partition, lam: Partition) -> int:
    """chi^mu evaluated on the class of cycle type lam.

    >>> irreducible_character_value((2, 2), (2, 2))
    2
    """
    mu = check_partition(mu)
    lam = check_partition(lam)
    if sum(mu) != sum(lam):
        raise ValueError(f"{mu} and {lam} are partitions of different integers")
    return _mn(mu, tuple(sorted(lam, reverse=True)))


@cache
def irreducible_character(mu: Partition) -> ClassFunction:
    """chi^mu as a class function on S_n, n = |mu|."""
    mu = check_partition(mu)
    n = sum(mu)
    return ClassFunction(
        n, {lam: irreducible_character_value(mu, lam) for lam in partitions(n)}
    )


@dataclass(frozen=True)
class IrrepDecomposition:
    """Multiplicities of irreducibles in a class function.

    terms holds only nonzero multiplicities, keyed by partition in the
    canonical reverse lexicographic order.
    """

    n: int
    terms: tuple[tuple[Partition, int], ...]

    @property
    def genuine(self) -> bool:
        """True when every multiplicity is nonnegative."""
        return all(m >= 0 for _, m in self.terms)

    @property
    def dimension(self) -> int:
        return sum(m * irrep_dimension(mu) for mu, m in self.terms)

    def multiplicity(self, mu: Partition) -> int:
        mu = check_partition(mu)
        for nu, m in self.terms:
            if nu == mu:
                return m
        return 0

    def as_dict(self) -> dict[Partition, int]:
        return dict(self.terms)

    def as_class_function(self) -> ClassFunction:
        out = ClassFunction.from_rule(self.n, lambda lam: 0)
        for mu, m in self.terms:
            out = out + m * irreducible_character(mu)
        return out

    def tail_multiset(self) -> dict[Partition, int]:
        """Multiplicities keyed by the label with its first part dropped.

        In a stable range the decompositions of a sequence of characters
        differ only in the padding first part, so the tail multisets agree.
        """
        return {mu[1:]: m for mu, m in self.terms}

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for i, (mu, m) in enumerate(self.terms):
            size = "" if abs(m) == 1 else str(abs(m))
            term = f"{size}[{format_partition(mu)}]"
            if i == 0:
                pieces.append(term if m > 0 else f"-{term}")
            else:
                pieces.append(f"{'+' if m > 0 else '-'} {term}")
        return " ".join(pieces)


def decompose(f: ClassFunction, virtual: bool = False) -> IrrepDecomposition:
    """Write an integer-valued class function as a sum of irreducibles.

    Multiplicities must come out integral, and nonnegative unless
    virtual=True allows formal differences of representations.

    >>> from braidchar.characters import braid_character
    >>> str(decompose(braid_character(4, 1)))
    '[4] + [3,1] + [2,2]'
    """
    terms = []
    for mu in partitions(f.n):
        m = inner_product(f, irreducible_character(mu))
        if m.denominator != 1:
            raise ArithmeticError(
                f"multiplicity of {mu} is not an integer: {m}; not a virtual character"
            )
        m = int(m)
        if m < 0 and not virtual:
            raise ArithmeticError(
                f"multiplicity of {mu} is negative: {m}; pass virtual=True to allow"
            )
        if m:
            terms.append((mu, m))
    return IrrepDecomposition(f.n, tuple(terms))
