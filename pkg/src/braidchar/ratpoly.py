"""Dense univariate polynomials over Q, and the cycle polynomials built on them.

Coefficients are `fractions.Fraction` values stored constant term first with
no trailing zeros, so equality of polynomials is equality of coefficient
tuples.  The variable is written z throughout.

The two polynomial families this package revolves around:

* the necklace polynomial  M_j(z) = (1/j) sum_{d | j} mu(d) z^{j/d},
  whose value at a prime power q counts monic irreducible polynomials of
  degree j over F_q, and
* the cycle polynomial     N_lam(z) = prod_j binom(M_j(z), m_j),
  whose value at q counts monic square-free polynomials of degree n with
  factorization type lam (m_j = multiplicity of j in lam).
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache
from math import factorial
from numbers import Rational
from typing import Iterable, Sequence

from .partitions import Partition, divisors, moebius, multiplicities


class RatPoly:
    """Immutable polynomial with exact rational coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Rational] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def monomial(cls, k: int, c: Rational = 1) -> "RatPoly":
        if k < 0:
            raise ValueError(f"exponent must be nonnegative, got {k}")
        return cls((0,) * k + (c,))

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        """Coefficients, constant term first, trailing zeros stripped."""
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial given degree -1."""
        return len(self._coeffs) - 1

    def coefficient(self, k: int) -> Fraction:
        """Coefficient of z^k (zero beyond the degree)."""
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return Fraction(0)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RatPoly):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self._coeffs == RatPoly((other,))._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __neg__(self) -> "RatPoly":
        return RatPoly(-c for c in self._coeffs)

    def __add__(self, other) -> "RatPoly":
        if isinstance(other, (int, Fraction)):
            other = RatPoly((other,))
        if not isinstance(other, RatPoly):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RatPoly(out)

    __radd__ = __add__

    def __sub__(self, other) -> "RatPoly":
        return self + (-other if isinstance(other, RatPoly) else RatPoly((-Fraction(other),)))

    def __rsub__(self, other) -> "RatPoly":
        return (-self) + other

    def __mul__(self, other) -> "RatPoly":
        if isinstance(other, (int, Fraction)):
            return RatPoly(c * other for c in self._coeffs)
        if not isinstance(other, RatPoly):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return RatPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return RatPoly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "RatPoly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"exponent must be a nonnegative integer, got {exponent}")
        out = ONE
        base = self
        e = exponent
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __truediv__(self, scalar) -> "RatPoly":
        return self * (1 / Fraction(scalar))

    def __call__(self, x: Rational) -> Fraction:
        """Evaluate by Horner's scheme."""
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def synthetic_div(self, root: Rational) -> tuple["RatPoly", Fraction]:
        """Quotient and remainder on division by (z - root).

        Synthetic division: running down from the leading coefficient,
        q_{k-1} = c_k + root * q_k, and the final fold-in is the remainder.
        """
        root = Fraction(root)
        if not self._coeffs:
            return RatPoly(), Fraction(0)
        acc = Fraction(0)
        folded: list[Fraction] = []
        for c in reversed(self._coeffs):
            acc = acc * root + c
            folded.append(acc)
        rem = folded.pop()
        folded.reverse()
        return RatPoly(folded), rem

    def to_strings(self) -> list[str]:
        """Coefficients as exact 'p/q' strings, constant term first."""
        return [str(c) for c in self._coeffs]

    @classmethod
    def from_strings(cls, items: Sequence[str]) -> "RatPoly":
        return cls(Fraction(s) for s in items)

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self._coeffs[k]
            if not c:
                continue
            mag = -c if c < 0 else c
            if k == 0:
                body = str(mag)
            else:
                var = "z" if k == 1 else f"z^{k}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(terms)

    def __repr__(self) -> str:
        return f"RatPoly({list(self._coeffs)!r})"


ZERO = RatPoly()
ONE = RatPoly((1,))
Z = RatPoly((0, 1))


@cache
def necklace_polynomial(j: int) -> RatPoly:
    """M_j(z) = (1/j) sum over divisors d of j of mu(d) z^(j/d).

    >>> print(necklace_polynomial(2))
    1/2*z^2 - 1/2*z
    """
    if j <= 0:
        raise ValueError(f"necklace polynomial needs a positive index, got {j}")
    out = RatPoly()
    for d in divisors(j):
        out = out + RatPoly.monomial(j // d, Fraction(moebius(d), j))
    return out


def poly_binomial(p: RatPoly, m: int) -> RatPoly:
    """binom(p, m) = p (p - 1) ... (p - m + 1) / m!.

    The product is accumulated first and divided by m! once at the end, so
    intermediate coefficients stay small multiples of the inputs.

    >>> print(poly_binomial(Z, 4))
    1/24*z^4 - 1/4*z^3 + 11/24*z^2 - 1/4*z
    """
    if m < 0:
        raise ValueError(f"m must be nonnegative, got {m}")
    out = ONE
    for k in range(m):
        out = out * (p - k)
    return out / factorial(m)


@cache
def cycle_polynomial(lam: Partition) -> RatPoly:
    """N_lam(z) = prod_j binom(M_j(z), m_j), of degree |lam|.

    At z = q this counts monic square-free polynomials over F_q whose
    factorization type is lam.

    >>> print(cycle_polynomial((2, 1, 1)))
    1/4*z^4 - 1/2*z^3 + 1/4*z^2
    """
    out = ONE
    for j, m in sorted(multiplicities(lam).items()):
        out = out * poly_binomial(necklace_polynomial(j), m)
    return out
