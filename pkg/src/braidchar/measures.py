"""z-splitting measures on conjugacy classes of the symmetric group.

For a partition lam of n >= 2 the class measure is the rational function

    nu_{n,z}(C_lam) = N_lam(z) / (z^n - z^{n-1}),

which turns out to be a polynomial in 1/z of degree < n:

    nu_{n,z}(C_lam) = sum_{k=0}^{n-1} alpha_k (1/z)^k.

The alpha vector is obtained exactly by dividing the cycle polynomial
N_lam(z) by (z - 1) (the division is exact because N_lam(1) = 0) and reading
the quotient coefficients from the top down.  For n = 1 the measure is the
constant 1.  At z = q >= 2 a prime power, nu is the probability that a random
monic square-free polynomial of degree n over F_q has factorization type lam;
at other rational z (z = -1, z = 1/q, ...) it is a signed "measure" with the
same total mass 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from numbers import Rational

from .partitions import Partition, check_partition, class_data
from .ratpoly import cycle_polynomial


@dataclass(frozen=True)
class SplittingMeasure:
    """Measure of one conjugacy class, as coefficients in 1/z.

    alpha[k] is the coefficient of (1/z)^k; the top coefficient alpha[n-1]
    always vanishes for n >= 2.
    """

    n: int
    partition: Partition
    alpha: tuple[Fraction, ...]

    def value(self, z: Rational, per_element: bool = False) -> Fraction:
        """Evaluate at a rational z != 0.

        With per_element=True the class value is divided by the class size,
        giving the measure of a single permutation of cycle type lam.
        """
        z = Fraction(z)
        if z == 0:
            if any(self.alpha[1:]):
                raise ValueError("pole at z = 0")
            total = self.alpha[0]
        else:
            w = 1 / z
            total = Fraction(0)
            for a in reversed(self.alpha):
                total = total * w + a
        if per_element:
            total /= class_data(self.partition).class_size
        return total

    def scaled_coefficients(self) -> tuple[int, ...]:
        """alpha scaled by the centralizer order z_lam; always integers."""
        z_lam = class_data(self.partition).centralizer_order
        out = []
        for a in self.alpha:
            v = a * z_lam
            if v.denominator != 1:
                raise ArithmeticError(
                    f"z_lam * alpha not integral for {self.partition}: {v}"
                )
            out.append(int(v))
        return tuple(out)


@cache
def splitting_coefficients(lam: Partition) -> SplittingMeasure:
    """Exact alpha vector of the class measure of lam.

    >>> [str(a) for a in splitting_coefficients((2, 1, 1)).alpha]
    ['1/4', '-1/4', '0', '0']
    """
    lam = check_partition(lam)
    n = sum(lam)
    if n == 0:
        raise ValueError("the empty partition has no splitting measure")
    if n == 1:
        return SplittingMeasure(1, lam, (Fraction(1),))
    quot, rem = cycle_polynomial(lam).synthetic_div(1)
    if rem:
        raise ArithmeticError(
            f"cycle polynomial of {lam} is not divisible by (z - 1): remainder {rem}"
        )
    # N_lam / (z^n - z^(n-1)) = quot / z^(n-1), so alpha_k is the quotient
    # coefficient of z^(n-1-k).
    alpha = tuple(quot.coefficient(n - 1 - k) for k in range(n))
    if alpha[n - 1] != 0:
        raise ArithmeticError(
            f"top coefficient alpha_{n-1} nonzero for {lam}: {alpha[n-1]}"
        )
    return SplittingMeasure(n, lam, alpha)


def measure_value(lam: Partition, z: Rational, per_element: bool = False) -> Fraction:
    """nu_{n,z} of the class of lam (or of one element of it).

    >>> measure_value((2, 2), -1)
    Fraction(0, 1)
    """
    return splitting_coefficients(check_partition(lam)).value(z, per_element)
