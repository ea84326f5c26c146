"""Characters of S_n acting on the rational cohomology of the pure braid group.

The cohomology H^k of the pure braid group on n strands carries an S_n
action whose character h_n^k is read off the cycle polynomial:

    h_n^k(lam) = (-1)^k * z_lam * [z^(n-k)] N_lam(z).

Each h_n^k splits as chi_n^(k-1) + chi_n^k where chi_n^k is the character of
an honest subrepresentation A_n^k (chi_n^(-1) = chi_n^n = 0), recovered by
the alternating partial sums

    chi_n^k = sum_{j=0}^{k} (-1)^(k-j) h_n^j.

The splitting measure coefficients are rescaled character values:
alpha_k(C_lam) = (-1)^k chi_n^k(lam) / z_lam.

Low-degree and top-degree values have closed forms in the cycle
multiplicities m_j, the Moebius function and harmonic numbers; the
``closed_form_*`` functions evaluate those directly, as an independent check
on the coefficient extraction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache
from math import comb, factorial
from numbers import Rational
from typing import Callable, Mapping

from .partitions import (
    Partition,
    centralizer_order,
    check_partition,
    class_data,
    moebius,
    multiplicities,
    partitions,
    sign_character,
)
from .ratpoly import cycle_polynomial


class NoClosedFormError(ValueError):
    """Raised when no closed form covers the requested character value."""


@dataclass(frozen=True)
class ClassFunction:
    """A function on the conjugacy classes of S_n, stored per cycle type."""

    n: int
    values: Mapping[Partition, Fraction] = field(compare=True)

    def __post_init__(self):
        expected = set(partitions(self.n))
        if set(self.values) != expected:
            raise ValueError(f"values must cover all partitions of {self.n}")

    def __call__(self, lam: Partition) -> Fraction:
        return self.values[check_partition(lam)]

    @property
    def dimension(self) -> Fraction:
        """Value at the identity class (1^n)."""
        return self.values[(1,) * self.n]

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        if not isinstance(other, ClassFunction):
            return NotImplemented
        if self.n != other.n:
            raise ValueError(f"degree mismatch: {self.n} != {other.n}")
        return ClassFunction(
            self.n, {lam: v + other.values[lam] for lam, v in self.values.items()}
        )

    def __sub__(self, other: "ClassFunction") -> "ClassFunction":
        if not isinstance(other, ClassFunction):
            return NotImplemented
        if self.n != other.n:
            raise ValueError(f"degree mismatch: {self.n} != {other.n}")
        return ClassFunction(
            self.n, {lam: v - other.values[lam] for lam, v in self.values.items()}
        )

    def __mul__(self, other) -> "ClassFunction":
        if isinstance(other, ClassFunction):
            if self.n != other.n:
                raise ValueError(f"degree mismatch: {self.n} != {other.n}")
            return ClassFunction(
                self.n, {lam: v * other.values[lam] for lam, v in self.values.items()}
            )
        return ClassFunction(self.n, {lam: v * other for lam, v in self.values.items()})

    __rmul__ = __mul__

    @classmethod
    def from_rule(cls, n: int, rule: Callable[[Partition], Rational]) -> "ClassFunction":
        return cls(n, {lam: rule(lam) for lam in partitions(n)})

    @classmethod
    def trivial(cls, n: int) -> "ClassFunction":
        return cls.from_rule(n, lambda lam: 1)

    @classmethod
    def sign(cls, n: int) -> "ClassFunction":
        return cls.from_rule(n, sign_character)

    @classmethod
    def regular(cls, n: int) -> "ClassFunction":
        return cls.from_rule(n, lambda lam: factorial(n) if lam == (1,) * n else 0)

    @classmethod
    def indicator(cls, lam: Partition) -> "ClassFunction":
        lam = check_partition(lam)
        return cls.from_rule(sum(lam), lambda mu: 1 if mu == lam else 0)


def _as_integer(v: Fraction, what: str) -> int:
    if v.denominator != 1:
        raise ArithmeticError(f"{what} is not an integer: {v}")
    return int(v)


@cache
def braid_character(n: int, k: int) -> ClassFunction:
    """Character h_n^k of S_n on degree-k pure braid cohomology.

    >>> braid_character(4, 2)((2, 2))
    -1
    """
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    sign = -1 if k % 2 else 1
    values = {}
    for lam in partitions(n):
        v = sign * centralizer_order(lam) * cycle_polynomial(lam).coefficient(n - k)
        values[lam] = _as_integer(v, f"h_{n}^{k}({lam})")
    return ClassFunction(n, values)


@cache
def a_character(n: int, k: int) -> ClassFunction:
    """Character chi_n^k of the subrepresentation A_n^k.

    >>> a_character(5, 2)((1, 1, 1, 1, 1))
    26
    """
    if not 0 <= k <= n - 1:
        raise ValueError(f"need 0 <= k <= n-1, got k={k}, n={n}")
    values = {lam: 0 for lam in partitions(n)}
    for j in range(k + 1):
        sign = -1 if (k - j) % 2 else 1
        h = braid_character(n, j)
        for lam in values:
            values[lam] += sign * h.values[lam]
    return ClassFunction(n, values)


def inner_product(f: ClassFunction, g: ClassFunction) -> Fraction:
    """Standard S_n inner product (1/n!) sum_lam |C_lam| f(lam) g(lam)."""
    if f.n != g.n:
        raise ValueError(f"degree mismatch: {f.n} != {g.n}")
    total = Fraction(0)
    for lam in partitions(f.n):
        total += class_data(lam).class_size * f.values[lam] * g.values[lam]
    return total / factorial(f.n)


def sign_twisted_sum(n: int) -> ClassFunction:
    """lam -> sum_k h_n^k(lam) sgn(lam)^k; equals the regular character.

    >>> sign_twisted_sum(4)((2, 2))
    0
    """
    values = {lam: 0 for lam in partitions(n)}
    for k in range(n + 1):
        h = braid_character(n, k)
        for lam in values:
            s = sign_character(lam)
            values[lam] += h.values[lam] * (s if k % 2 else 1)
    return ClassFunction(n, values)


def b_character(n: int, m: int) -> ClassFunction:
    """Character of B_{n,m} = sum_k A_n^k m^k, of dimension prod_{j=2}^{n-1} (1 + jm).

    >>> b_character(4, 1).dimension
    12
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    values = {lam: 0 for lam in partitions(n)}
    for k in range(n):
        chi = a_character(n, k)
        for lam in values:
            values[lam] += chi.values[lam] * m**k
    return ClassFunction(n, values)


def b_character_signed(n: int, m: int) -> tuple[ClassFunction, ClassFunction]:
    """The even/odd split (B+, B-) of B_{n,m} by cohomological degree.

    dim B+- = (prod_{j=2}^{n-1} (1 + jm) +- prod_{j=2}^{n-1} (1 - jm)) / 2.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    plus = {lam: 0 for lam in partitions(n)}
    minus = {lam: 0 for lam in partitions(n)}
    for k in range(n):
        chi = a_character(n, k)
        target = plus if k % 2 == 0 else minus
        for lam in target:
            target[lam] += chi.values[lam] * m**k
    return ClassFunction(n, plus), ClassFunction(n, minus)


# --- closed forms ---------------------------------------------------------


def _harmonic(m: int) -> Fraction:
    """H_m = 1 + 1/2 + ... + 1/m, exactly (H_0 = 0)."""
    return sum((Fraction(1, i) for i in range(1, m + 1)), Fraction(0))


def _moebius_or_zero(num: int, den: int) -> int:
    """mu(num/den), taken to vanish when num/den is not a positive integer."""
    if num % den:
        return 0
    return moebius(num // den)


def closed_form_h1(lam: Partition) -> int:
    """h_n^1(lam) = C(m_1, 2) + m_2."""
    m = multiplicities(lam)
    return comb(m.get(1, 0), 2) + m.get(2, 0)


def closed_form_h2(lam: Partition) -> int:
    """h_n^2 in the cycle multiplicities m_1..m_4."""
    m = multiplicities(lam)
    m1, m2, m3, m4 = (m.get(j, 0) for j in (1, 2, 3, 4))
    return (
        2 * comb(m1, 3)
        + 3 * comb(m1, 4)
        + comb(m1, 2) * m2
        - comb(m2, 2)
        - m3
        - m4
    )


def closed_form_h_top(n: int, lam: Partition) -> int:
    """h_n^(n-1), supported on rectangles lam = (j^m)."""
    m = multiplicities(lam)
    if len(m) != 1:
        return 0
    (j, mj), = m.items()
    sign = -1 if (mj - n) % 2 else 1
    return sign * moebius(j) * j ** (mj - 1) * factorial(mj - 1)


def closed_form_h_subtop(n: int, lam: Partition) -> int:
    """h_n^(n-2), supported on cycle types with at most two distinct part sizes.

    On a rectangle (j^m) the value involves an exact harmonic number:

        (-1)^(m-n) (m-1)! (mu(j)^2 H_{m-1} j^(m-2) - mu(j/2) j^(m-1)),

    with mu(j/2) = 0 for odd j.
    """
    m = multiplicities(lam)
    if len(m) > 2:
        return 0
    if len(m) == 2:
        (i, mi), (j, mj) = sorted(m.items())
        sign = -1 if (mi + mj - n) % 2 else 1
        return (
            sign
            * (moebius(i) * i ** (mi - 1) * factorial(mi - 1))
            * (moebius(j) * j ** (mj - 1) * factorial(mj - 1))
        )
    (j, mj), = m.items()
    sign = -1 if (mj - n) % 2 else 1
    val = factorial(mj - 1) * (
        moebius(j) ** 2 * _harmonic(mj - 1) * Fraction(j) ** (mj - 2)
        - _moebius_or_zero(j, 2) * j ** (mj - 1)
    )
    return _as_integer(sign * val, f"h_{n}^{n-2}({lam})")


def closed_form_h_ncycle(n: int, k: int) -> int:
    """h_n^k at the single n-cycle class lam = (n)."""
    t = n - k
    if t == 0 or n % t:
        return 0
    sign = -1 if k % 2 else 1
    return sign * moebius(n // t)


def closed_form_check(n: int, k: int, lam: Partition) -> int:
    """Evaluate h_n^k(lam) from a closed form, without touching polynomials.

    Covered: k in {1, 2}, k in {n-1, n-2}, and lam = (n).  When several
    closed forms apply they are all evaluated and must agree.  Raises
    NoClosedFormError outside the covered families.
    """
    lam = check_partition(lam)
    if sum(lam) != n:
        raise ValueError(f"{lam} is not a partition of {n}")
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}")
    candidates: list[int] = []
    if k == 1:
        candidates.append(closed_form_h1(lam))
    if k == 2:
        candidates.append(closed_form_h2(lam))
    if k == n - 1:
        candidates.append(closed_form_h_top(n, lam))
    if k == n - 2 and n >= 2:
        candidates.append(closed_form_h_subtop(n, lam))
    if lam == (n,):
        candidates.append(closed_form_h_ncycle(n, k))
    if not candidates:
        raise NoClosedFormError(f"no closed form for h_{n}^{k} at {lam}")
    if any(c != candidates[0] for c in candidates):
        raise ArithmeticError(
            f"closed forms disagree for h_{n}^{k}({lam}): {candidates}"
        )
    return candidates[0]
