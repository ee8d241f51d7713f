"""Exact counting of the lattice translation sets.

Two families of translation sets drive every covering construction here:

* ``M1(n, k)``: nonnegative integer vectors of length ``n`` whose
  coordinate sum is at most ``k``.  There are ``C(n+k, n)`` of them.
* ``M2(n, k)``: integer vectors of length ``n`` whose l1 norm is at most
  ``k``.  Their number is the Delannoy-type count
  ``sum_j C(n, j) * C(k+j, n)``.

All counts are plain Python integers, so arithmetic is exact at any
magnitude; threshold searches against ``2**n`` never touch floating
point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k), 0 whenever k is outside [0, n]."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def m1_count(n: int, k: int) -> int:
    """Number of nonnegative integer vectors of length n with sum <= k.

    Equals C(n+k, n).  The degenerate n=0 row counts 1 (the empty
    vector), which keeps recurrences total.
    """
    _check_nk(n, k)
    return math.comb(n + k, n)


def m2_count_closed(n: int, k: int) -> int:
    """Number of integer vectors of length n with l1 norm <= k, closed form.

    Computes ``sum_{j=0..n} C(n, j) * C(k+j, n)``; terms with k+j < n
    vanish under the out-of-range convention of :func:`binomial`.
    """
    _check_nk(n, k)
    return sum(binomial(n, j) * binomial(k + j, n) for j in range(n + 1))


def m2_count_recurrence(n: int, k: int) -> int:
    """Same count as :func:`m2_count_closed`, via the slice recurrence.

    Splitting on the last coordinate's value gives

        m2(n, k) = m2(n-1, k) + 2 * sum_{j=0..k-1} m2(n-1, j)

    which the table builder evaluates with running prefix sums.
    """
    _check_nk(n, k)
    return CountTable.build("m2", n, k).entries[n][k]


def power_of_two(n: int) -> int:
    """2**n, exact."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return 1 << n


@dataclass(frozen=True)
class CountTable:
    """Memoized (n_max+1) x (k_max+1) table of m1 or m2 counts.

    Row 0 is the degenerate dimension-0 row (all ones: only the empty
    vector).  Completed tables are immutable and safe to share.
    """

    kind: str
    n_max: int
    k_max: int
    entries: tuple[tuple[int, ...], ...]

    @classmethod
    def build(cls, kind: str, n_max: int, k_max: int) -> "CountTable":
        if kind not in ("m1", "m2"):
            raise ValueError(f"unknown count kind: {kind!r}")
        _check_nk(n_max, k_max)
        rows = [[1] * (k_max + 1)]
        for _ in range(1, n_max + 1):
            prev = rows[-1]
            row = [1]
            if kind == "m1":
                for k in range(1, k_max + 1):
                    row.append(prev[k] + row[k - 1])
            else:
                acc = 0  # 2*acc collects the strictly shorter slices
                for k in range(1, k_max + 1):
                    acc += prev[k - 1]
                    row.append(prev[k] + 2 * acc)
            rows.append(row)
        return cls(kind, n_max, k_max, tuple(tuple(r) for r in rows))


def _check_nk(n: int, k: int) -> None:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if k < 0:
        raise ValueError("k must be nonnegative")
