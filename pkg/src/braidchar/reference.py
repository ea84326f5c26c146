"""Published reference values the verification suites compare against.

Everything here is a frozen copy of known tables: splitting measures for
n = 4 and 5, Betti numbers of pure braid group cohomology, dimensions of the
submodules A_n^k, and irreducible decompositions of H^1, A^1 and A^2.  The
test suite keeps its own independent copies; this module is the data source
for the runtime ``verify`` command.
"""

from __future__ import annotations

from .partitions import Partition

# Splitting measure rows (partition, class size, centralizer order,
# z_lam * alpha vector), with nu*_{n,z}(C_lam) = (1/z_lam) sum a_k / z^k.
MEASURE_ROWS: dict[int, tuple[tuple[Partition, int, int, tuple[int, ...]], ...]] = {
    4: (
        ((1, 1, 1, 1), 1, 24, (1, -5, 6, 0)),
        ((2, 1, 1), 6, 4, (1, -1, 0, 0)),
        ((2, 2), 3, 8, (1, -1, -2, 0)),
        ((3, 1), 8, 3, (1, 1, 0, 0)),
        ((4,), 6, 4, (1, 1, 0, 0)),
    ),
    5: (
        ((1, 1, 1, 1, 1), 1, 120, (1, -9, 26, -24, 0)),
        ((2, 1, 1, 1), 10, 12, (1, -3, 2, 0, 0)),
        ((2, 2, 1), 15, 8, (1, -1, -2, 0, 0)),
        ((3, 1, 1), 20, 6, (1, 0, -1, 0, 0)),
        ((3, 2), 20, 6, (1, 0, -1, 0, 0)),
        ((4, 1), 30, 4, (1, 1, 0, 0, 0)),
        ((5,), 24, 5, (1, 1, 1, 1, 0)),
    ),
}

# Betti numbers dim H^k(P_n, Q) = h_n^k((1^n)) for n = 1..9, k = 0..8.
BETTI_TRIANGLE: dict[int, tuple[int, ...]] = {
    1: (1, 0, 0, 0, 0, 0, 0, 0, 0),
    2: (1, 1, 0, 0, 0, 0, 0, 0, 0),
    3: (1, 3, 2, 0, 0, 0, 0, 0, 0),
    4: (1, 6, 11, 6, 0, 0, 0, 0, 0),
    5: (1, 10, 35, 50, 24, 0, 0, 0, 0),
    6: (1, 15, 85, 225, 274, 120, 0, 0, 0),
    7: (1, 21, 175, 735, 1624, 1764, 720, 0, 0),
    8: (1, 28, 322, 1960, 6769, 13132, 13068, 5040, 0),
    9: (1, 36, 546, 4536, 22449, 67284, 118124, 109584, 40320),
}

# dim A_n^k for n = 1..9, k = 0..8 (the k = n-1 column vanishes for n >= 2).
A_DIM_TRIANGLE: dict[int, tuple[int, ...]] = {
    1: (1, 0, 0, 0, 0, 0, 0, 0, 0),
    2: (1, 0, 0, 0, 0, 0, 0, 0, 0),
    3: (1, 2, 0, 0, 0, 0, 0, 0, 0),
    4: (1, 5, 6, 0, 0, 0, 0, 0, 0),
    5: (1, 9, 26, 24, 0, 0, 0, 0, 0),
    6: (1, 14, 71, 154, 120, 0, 0, 0, 0),
    7: (1, 20, 155, 580, 1044, 720, 0, 0, 0),
    8: (1, 27, 295, 1665, 5104, 8028, 5040, 0, 0),
    9: (1, 35, 511, 4025, 18424, 48860, 69264, 40320, 0),
}


def h1_decomposition(n: int) -> dict[Partition, int]:
    """Known decomposition of H^1(P_n, Q); stable shape [n]+[n-1,1]+[n-2,2]."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if n == 2:
        return {(2,): 1}
    if n == 3:
        return {(3,): 1, (2, 1): 1}
    return {(n,): 1, (n - 1, 1): 1, (n - 2, 2): 1}


def a1_decomposition(n: int) -> dict[Partition, int]:
    """Known decomposition of A_n^1; stable shape [n-1,1]+[n-2,2] from n = 4."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if n == 2:
        return {}
    if n == 3:
        return {(2, 1): 1}
    return {(n - 1, 1): 1, (n - 2, 2): 1}


def a2_decomposition(n: int) -> dict[Partition, int]:
    """Known decomposition of A_n^2 for n >= 3; stable shape from n = 7."""
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    if n == 3:
        return {}
    if n == 4:
        return {(3, 1): 1, (2, 1, 1): 1}
    if n == 5:
        return {(4, 1): 1, (3, 2): 1, (3, 1, 1): 2, (2, 2, 1): 1}
    if n == 6:
        return {(5, 1): 1, (4, 2): 1, (4, 1, 1): 2, (3, 3): 1, (3, 2, 1): 2}
    return {
        (n - 1, 1): 1,
        (n - 2, 2): 1,
        (n - 2, 1, 1): 2,
        (n - 3, 3): 1,
        (n - 3, 2, 1): 2,
        (n - 4, 3, 1): 1,
    }
