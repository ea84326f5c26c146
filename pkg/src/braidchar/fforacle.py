"""Brute-force census of square-free polynomials over prime fields.

This module checks the polynomial identities of the rest of the package
against raw enumeration: every monic polynomial of degree n over F_p is
tested for square-freeness via gcd(f, f') and factored by trial division,
and the counts per factorization type are compared with the cycle
polynomial values N_lam(p).

Polynomials over F_p are coefficient tuples, constant term first, reduced
mod p, with no trailing zeros; a monic polynomial of degree d is also
identified with its code in [0, p^d): the integer whose base-p digits are
the d lower coefficients (the leading 1 is implicit).

Two census engines produce identical tallies:

* a scalar engine that walks candidates one by one with per-polynomial
  gcd and trial division, exactly as described above, and
* a vectorized engine (numpy) that runs the same gcd batched over blocks
  of candidates and replaces per-polynomial trial division by a
  smallest-irreducible-factor sieve: for each degree d it marks every
  product g * h with g irreducible of degree <= d/2, so factorization is
  repeated table lookup.  This is the same factorization by smallest
  irreducible divisor, organized to be fast over millions of candidates.

The vectorized engine always cross-checks the gcd square-freeness verdict
against the factorization (a repeated factor must appear exactly when the
gcd is nonconstant) and the per-degree irreducible counts against the
necklace polynomial values M_d(p), and raises if either check fails.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .measures import measure_value
from .partitions import Partition, partitions
from .ratpoly import cycle_polynomial, necklace_polynomial

PolyCoeffs = tuple[int, ...]

DEFAULT_BUDGET = 10**7
_SCALAR_CUTOFF = 2048
_BLOCK = 1 << 18


class BudgetError(ValueError):
    """Raised when an enumeration would exceed the candidate budget."""

    def __init__(self, what: str, required: int, budget: int):
        self.required = required
        self.budget = budget
        super().__init__(
            f"{what} requires a budget of {required} candidates, configured {budget}"
        )


def is_prime(p: int) -> bool:
    """Primality by trial division; the oracle only handles prime fields."""
    if p < 2:
        return False
    q = 2
    while q * q <= p:
        if p % q == 0:
            return False
        q += 1
    return True


# --- scalar polynomial arithmetic over F_p --------------------------------


def poly_trim(coeffs: Sequence[int], p: int) -> PolyCoeffs:
    cs = [c % p for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def poly_degree(f: PolyCoeffs) -> int:
    """Degree, with the zero polynomial given degree -1."""
    return len(f) - 1


def poly_from_code(code: int, degree: int, p: int) -> PolyCoeffs:
    """Monic polynomial of the given degree with lower coefficients from code.

    >>> poly_from_code(6, 3, 2)
    (0, 1, 1, 1)
    """
    if not 0 <= code < p**degree:
        raise ValueError(f"code {code} out of range for degree {degree} over F_{p}")
    digits = []
    for _ in range(degree):
        code, r = divmod(code, p)
        digits.append(r)
    return tuple(digits) + (1,)


def poly_to_code(f: PolyCoeffs, p: int) -> int:
    """Inverse of poly_from_code for monic polynomials."""
    if not f or f[-1] != 1:
        raise ValueError(f"expected a monic polynomial, got {f}")
    code = 0
    for c in reversed(f[:-1]):
        code = code * p + c
    return code


def poly_mul(a: PolyCoeffs, b: PolyCoeffs, p: int) -> PolyCoeffs:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return poly_trim(out, p)


def poly_divmod(a: PolyCoeffs, b: PolyCoeffs, p: int) -> tuple[PolyCoeffs, PolyCoeffs]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    da, db = poly_degree(a), poly_degree(b)
    if da < db:
        return (), a
    inv_lead = pow(b[-1], -1, p)
    rem = list(a)
    quot = [0] * (da - db + 1)
    for k in range(da - db, -1, -1):
        q = rem[k + db] * inv_lead % p
        quot[k] = q
        if q:
            for j in range(db + 1):
                rem[k + j] = (rem[k + j] - q * b[j]) % p
    return poly_trim(quot, p), poly_trim(rem[:db], p)


def poly_gcd(a: PolyCoeffs, b: PolyCoeffs, p: int) -> PolyCoeffs:
    """Monic gcd over F_p."""
    while b:
        a, b = b, poly_divmod(a, b, p)[1]
    if a and a[-1] != 1:
        inv_lead = pow(a[-1], -1, p)
        a = tuple(c * inv_lead % p for c in a)
    return a


def poly_derivative(f: PolyCoeffs, p: int) -> PolyCoeffs:
    return poly_trim([i * c for i, c in enumerate(f)][1:], p)


def is_squarefree(f: PolyCoeffs, p: int) -> bool:
    """A nonconstant f is square-free iff gcd(f, f') is constant.

    In characteristic p this includes the f' = 0 case (then gcd = f).
    """
    if poly_degree(f) < 1:
        raise ValueError("square-freeness is asked of nonconstant polynomials")
    return poly_degree(poly_gcd(f, poly_derivative(f, p), p)) == 0


def enumerate_irreducibles(
    p: int, d_max: int, budget: int = DEFAULT_BUDGET
) -> dict[int, list[PolyCoeffs]]:
    """Monic irreducibles over F_p of each degree 1..d_max, by sieve.

    A monic polynomial of degree d is irreducible iff no previously found
    irreducible of degree <= d/2 divides it.  Per-degree counts are checked
    against the necklace polynomial values M_d(p).

    >>> [len(v) for v in enumerate_irreducibles(2, 3).values()]
    [2, 1, 2]
    """
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if d_max < 0:
        raise ValueError(f"d_max must be nonnegative, got {d_max}")
    required = p**d_max
    if required > budget:
        raise BudgetError(f"enumerating irreducibles to degree {d_max} over F_{p}",
                          required, budget)
    table: dict[int, list[PolyCoeffs]] = {}
    for d in range(1, d_max + 1):
        found = []
        testers = [g for e in range(1, d // 2 + 1) for g in table[e]]
        for code in range(p**d):
            f = poly_from_code(code, d, p)
            if all(poly_divmod(f, g, p)[1] for g in testers):
                found.append(f)
        expected = necklace_polynomial(d)(p)
        if expected.denominator != 1 or len(found) != expected:
            raise RuntimeError(
                f"irreducible count at degree {d} over F_{p} is {len(found)}, "
                f"expected M_{d}({p}) = {expected}"
            )
        table[d] = found
    return table


def factor_list(
    f: PolyCoeffs, p: int, irreducible_lists: dict[int, list[PolyCoeffs]]
) -> list[tuple[PolyCoeffs, int]]:
    """Full factorization of a monic f by trial division, smallest factor first.

    The lists must cover degrees up to deg(f)/2; whatever nonconstant
    cofactor survives all trial divisions is itself irreducible.
    """
    if not f or f[-1] != 1:
        raise ValueError(f"expected a monic polynomial, got {f}")
    covered = max(irreducible_lists, default=0)
    if covered < poly_degree(f) // 2:
        raise ValueError(
            f"irreducible lists cover degree {covered}, "
            f"need degree {poly_degree(f) // 2} for degree-{poly_degree(f)} input"
        )
    out = []
    for d in sorted(irreducible_lists):
        if 2 * d > poly_degree(f):
            break
        for g in irreducible_lists[d]:
            if 2 * d > poly_degree(f):
                break
            mult = 0
            while True:
                quot, rem = poly_divmod(f, g, p)
                if rem:
                    break
                f = quot
                mult += 1
            if mult:
                out.append((g, mult))
    if poly_degree(f) >= 1:
        out.append((f, 1))
    return out


def factor_type(
    f: PolyCoeffs, p: int, irreducible_lists: dict[int, list[PolyCoeffs]]
) -> Partition:
    """Factorization type: degrees of irreducible factors with multiplicity.

    >>> irr = enumerate_irreducibles(2, 4)
    >>> factor_type(poly_from_code(6, 4, 2), 2, irr)  # x^4 + x^2 + x
    (3, 1)
    """
    degrees: list[int] = []
    for g, mult in factor_list(f, p, irreducible_lists):
        degrees.extend([poly_degree(g)] * mult)
    return tuple(sorted(degrees, reverse=True))


# --- census ----------------------------------------------------------------


@dataclass(frozen=True)
class FactorTypeTally:
    """Counts of square-free monic degree-n polynomials by factorization type."""

    p: int
    n: int
    counts: dict[Partition, int]
    total_squarefree: int


@dataclass(frozen=True)
class CensusRow:
    partition: Partition
    count: int
    predicted: int
    ok: bool


@dataclass(frozen=True)
class CensusReport:
    p: int
    n: int
    total_squarefree: int
    expected_total: int
    rows: tuple[CensusRow, ...]

    @property
    def all_ok(self) -> bool:
        return self.total_squarefree == self.expected_total and all(
            r.ok for r in self.rows
        )


def _census_scalar(p: int, n: int, budget: int) -> dict[Partition, int]:
    irr = enumerate_irreducibles(p, n, budget=budget)
    counts: dict[Partition, int] = {}
    for code in range(p**n):
        f = poly_from_code(code, n, p)
        factors = factor_list(f, p, irr)
        squarefree = all(m == 1 for _, m in factors)
        if is_squarefree(f, p) != squarefree:
            raise RuntimeError(
                f"gcd square-freeness disagrees with factorization for {f} over F_{p}"
            )
        if squarefree:
            typ = tuple(
                sorted((poly_degree(g) for g, _ in factors), reverse=True)
            )
            counts[typ] = counts.get(typ, 0) + 1
    return counts


# Vectorized engine.  Degree-d tables: for every monic degree-d code,
# the degree and code of its smallest irreducible factor (degree 0 meaning
# the polynomial is itself irreducible) and the code of the cofactor.


class _FactorTable:
    __slots__ = ("sif_deg", "sif_code", "quot")

    def __init__(self, sif_deg, sif_code, quot):
        self.sif_deg = sif_deg
        self.sif_code = sif_code
        self.quot = quot


def _digit_matrix(p: int, codes: np.ndarray, width: int) -> np.ndarray:
    out = np.empty((codes.size, width), np.int8)
    c = codes.copy()
    for i in range(width):
        c, r = np.divmod(c, p)
        out[:, i] = r
    return out


@lru_cache(maxsize=None)
def _inverse_table(p: int) -> np.ndarray:
    inv = np.zeros(p, np.int16)
    for a in range(1, p):
        inv[a] = pow(a, -1, p)
    return inv


@lru_cache(maxsize=None)
def _factor_table(p: int, d: int) -> _FactorTable:
    size = p**d
    sif_deg = np.full(size, -1, np.int8)
    sif_code = np.zeros(size, np.int32)
    quot = np.zeros(size, np.int32)
    powers = p ** np.arange(d, dtype=np.int64)
    for e in range(1, d // 2 + 1):
        hdeg = d - e
        hsize = p**hdeg
        hfull = np.empty((hsize, hdeg + 1), np.int16)
        hfull[:, :hdeg] = _digit_matrix(p, np.arange(hsize, dtype=np.int64), hdeg)
        hfull[:, hdeg] = 1
        hcodes = np.arange(hsize, dtype=np.int32)
        for gc in _irreducible_codes(p, e).tolist():
            gfull = poly_from_code(gc, e, p)
            prod = np.zeros((hsize, d + 1), np.int32)
            for j, gj in enumerate(gfull):
                if gj:
                    prod[:, j : j + hdeg + 1] += gj * hfull
            prod %= p
            codes = prod[:, :d].astype(np.int64) @ powers
            fresh = sif_deg[codes] == -1
            target = codes[fresh]
            sif_deg[target] = e
            sif_code[target] = gc
            quot[target] = hcodes[fresh]
    missing = sif_deg == -1
    count = int(missing.sum())
    expected = necklace_polynomial(d)(p)
    if expected.denominator != 1 or count != expected:
        raise RuntimeError(
            f"irreducible count at degree {d} over F_{p} is {count}, "
            f"expected M_{d}({p}) = {expected}"
        )
    sif_deg[missing] = 0
    return _FactorTable(sif_deg, sif_code, quot)


@lru_cache(maxsize=None)
def _irreducible_codes(p: int, d: int) -> np.ndarray:
    return np.flatnonzero(_factor_table(p, d).sif_deg == 0).astype(np.int64)


@lru_cache(maxsize=None)
def _sig_layout(n: int) -> tuple[np.ndarray, tuple[int, ...]]:
    """Bit offsets and widths packing per-degree factor counts into int64."""
    shifts = np.zeros(n + 1, np.int64)
    widths = [0] * (n + 1)
    bit = 0
    for e in range(1, n + 1):
        w = (n // e).bit_length()
        shifts[e] = bit
        widths[e] = w
        bit += w
    if bit > 62:
        raise ValueError(f"degree {n} too large for signature packing")
    return shifts, tuple(widths)


def _sig_to_type(sig: int, n: int) -> Partition:
    shifts, widths = _sig_layout(n)
    parts: list[int] = []
    for e in range(n, 0, -1):
        count = (sig >> int(shifts[e])) & ((1 << widths[e]) - 1)
        parts.extend([e] * count)
    return tuple(parts)


def _batched_gcd_degree(full: np.ndarray, deriv: np.ndarray, p: int) -> np.ndarray:
    """Degree of gcd(f, f') per row.

    full: (m, n+1) low-aligned coefficients of monic degree-n rows.
    deriv: (m, n) low-aligned derivative coefficients.

    Works on top-aligned buffers (leading coefficient in column 0) so one
    masked subtraction cancels every row's leading term at once.
    """
    m, width = full.shape
    inv = _inverse_table(p)
    cols = np.arange(width, dtype=np.int64)[None, :]

    a = full[:, ::-1].astype(np.int16).copy()
    da = np.full(m, width - 1, np.int64)

    gw = deriv.shape[1]
    rev_nz = deriv[:, ::-1] != 0
    db = np.where(rev_nz.any(axis=1), (gw - 1) - np.argmax(rev_nz, axis=1), -1)
    idx = db[:, None] - np.arange(width, dtype=np.int64)[None, :]
    b = np.where(
        idx >= 0,
        np.take_along_axis(deriv, np.clip(idx, 0, gw - 1), axis=1),
        0,
    ).astype(np.int16)

    for _ in range(2 * width + 4):
        active = db >= 0
        if not active.any():
            return da
        swap = active & (da < db)
        if swap.any():
            a[swap], b[swap] = b[swap], a[swap]
            da[swap], db[swap] = db[swap], da[swap]
        coef = np.where(active, (a[:, 0] * inv[b[:, 0]]) % p, 0).astype(np.int16)
        a = (a - coef[:, None] * b) % p
        nz = a != 0
        nonzero = nz.any(axis=1)
        shift = np.where(nonzero, np.argmax(nz, axis=1), width).astype(np.int64)
        moved = np.take_along_axis(a, np.minimum(cols + shift[:, None], width - 1), axis=1)
        a = np.where(cols < (width - shift)[:, None], moved, 0)
        da = np.where(nonzero, da - shift, -1)
        db = np.where(active & (da == 0), -1, db)
    raise RuntimeError("batched gcd failed to converge")


def _chain_signatures(p: int, n: int, codes: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Factor-type signature and repeated-factor flag per monic degree-n code.

    Follows the smallest-factor tables; factors come out sorted by
    (degree, code), so a repeated factor shows up as consecutive equals.
    """
    shifts, _ = _sig_layout(n)
    m = codes.size
    sig = np.zeros(m, np.int64)
    repeated = np.zeros(m, bool)
    cur = codes.astype(np.int64).copy()
    cdeg = np.full(m, n, np.int64)
    prev_deg = np.zeros(m, np.int64)
    prev_code = np.full(m, -1, np.int64)
    while True:
        live = cdeg > 0
        if not live.any():
            return sig, repeated
        for d in np.unique(cdeg[live]).tolist():
            rows = np.flatnonzero(cdeg == d)
            table = _factor_table(p, d)
            c = cur[rows]
            e = table.sif_deg[c].astype(np.int64)
            own = e == 0
            fdeg = np.where(own, d, e)
            fcode = np.where(own, c, table.sif_code[c].astype(np.int64))
            repeated[rows] |= (fdeg == prev_deg[rows]) & (fcode == prev_code[rows])
            sig[rows] += np.int64(1) << shifts[fdeg]
            prev_deg[rows] = fdeg
            prev_code[rows] = fcode
            cur[rows] = np.where(own, 0, table.quot[c].astype(np.int64))
            cdeg[rows] = d - fdeg


def _census_range(p: int, n: int, lo: int, hi: int, block: int = _BLOCK) -> dict[int, int]:
    counts: dict[int, int] = {}
    mult = (np.arange(1, n + 1, dtype=np.int16) % p)[None, :]
    for start in range(lo, hi, block):
        codes = np.arange(start, min(start + block, hi), dtype=np.int64)
        m = codes.size
        full = np.empty((m, n + 1), np.int16)
        full[:, :n] = _digit_matrix(p, codes, n)
        full[:, n] = 1
        deriv = (full[:, 1:] * mult) % p
        gdeg = _batched_gcd_degree(full, deriv, p)
        sig, repeated = _chain_signatures(p, n, codes)
        if not np.array_equal(repeated, gdeg > 0):
            raise RuntimeError(
                f"gcd square-freeness disagrees with factorization over F_{p}, n={n}"
            )
        uniq, cnt = np.unique(sig[gdeg == 0], return_counts=True)
        for s, k in zip(uniq.tolist(), cnt.tolist()):
            counts[s] = counts.get(s, 0) + int(k)
    return counts


def _census_vector(p: int, n: int, workers: int | None) -> dict[Partition, int]:
    total = p**n
    if workers and workers > 1:
        # build the factor tables once in the parent so forked workers share them
        for d in range(1, n + 1):
            _factor_table(p, d)
        step = -(-total // workers)
        bounds = [(lo, min(lo + step, total)) for lo in range(0, total, step)]
        merged: dict[int, int] = {}
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_census_range, p, n, lo, hi) for lo, hi in bounds]
            for future in futures:
                for s, k in future.result().items():
                    merged[s] = merged.get(s, 0) + k
    else:
        merged = _census_range(p, n, 0, total)
    return {_sig_to_type(s, n): k for s, k in merged.items()}


def factor_type_census(
    p: int,
    n: int,
    *,
    budget: int = DEFAULT_BUDGET,
    workers: int | None = None,
    engine: str = "auto",
) -> FactorTypeTally:
    """Count square-free monic degree-n polynomials over F_p by type.

    >>> factor_type_census(3, 2).counts
    {(2,): 3, (1, 1): 3}
    """
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    required = p**n
    if required > budget:
        raise BudgetError(f"census of degree {n} over F_{p}", required, budget)
    if engine == "auto":
        engine = "scalar" if required <= _SCALAR_CUTOFF and not workers else "vector"
    if engine == "scalar":
        raw = _census_scalar(p, n, budget)
    elif engine == "vector":
        raw = _census_vector(p, n, workers)
    else:
        raise ValueError(f"unknown engine {engine!r}")
    counts = {lam: raw.pop(lam, 0) for lam in partitions(n)}
    if raw:
        raise RuntimeError(f"census produced non-partition types: {sorted(raw)}")
    return FactorTypeTally(p, n, counts, sum(counts.values()))


def census_vs_theory(
    p: int,
    n: int,
    *,
    budget: int = DEFAULT_BUDGET,
    workers: int | None = None,
    engine: str = "auto",
) -> CensusReport:
    """Compare the census against cycle polynomial and measure predictions.

    For every partition lam of n the census count must equal N_lam(p), and
    (for n >= 2) the splitting measure times the square-free total must give
    the same count back.
    """
    tally = factor_type_census(p, n, budget=budget, workers=workers, engine=engine)
    expected_total = p**n - p ** (n - 1) if n >= 2 else p
    rows = []
    for lam in partitions(n):
        predicted = cycle_polynomial(lam)(p)
        if predicted.denominator != 1:
            raise ArithmeticError(f"N_{lam}({p}) is not an integer: {predicted}")
        predicted = int(predicted)
        count = tally.counts[lam]
        ok = count == predicted
        if n >= 2:
            ok = ok and measure_value(lam, p) * expected_total == count
        rows.append(CensusRow(lam, count, predicted, ok))
    return CensusReport(p, n, tally.total_squarefree, expected_total, tuple(rows))
