"""Growth constants, exact threshold sequences, and convergence tables.

The translate counts grow like c-parametrized exponentials: the n-th
root of the simplex count C(n+cn, n) tends to (1+c)^(1+c)/c^c, and the
signed count m2(n, cn) is sandwiched between 2^(cn) C(n, cn) and
2^(cn) C(n+cn, cn).  Equating these growth rates to 2 yields the
constants c1, c3, c4 that govern how fast the 2^n-translate bounds
approach their limits.  Threshold sequences k(n) are computed by exact
big-integer comparison against 2^n, never by floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

from .bodies import CROSSPOLYTOPE, FAMILIES, LP, QUARTER_LP, SIMPLEX
from .combinatorics import binomial, m2_count_closed

DEFAULT_TOL = 1e-12


@dataclass(frozen=True)
class GrowthConstants:
    """Solved growth-rate roots: simplex (c1) and the m2 sandwich (c3, c4)."""

    c1: float
    c3: float
    c4: float


@dataclass(frozen=True)
class ConvergenceRow:
    """One table row: the exact threshold k at dimension n and the bound."""

    n: int
    k: int
    ratio: float
    bound: float


def m1_growth(c: float) -> float:
    """n-th root growth rate of C(n + cn, n): (1+c)^(1+c) / c^c."""
    return (1.0 + c) ** (1.0 + c) / c**c


def m2_upper_growth(c: float) -> float:
    """n-th root growth rate of 2^(cn) C(n + cn, cn)."""
    return 2.0**c * m1_growth(c)


def m2_lower_growth(c: float) -> float:
    """n-th root growth rate of 2^(cn) C(n, cn): 2^c / (c^c (1-c)^(1-c))."""
    return 2.0**c / (c**c * (1.0 - c) ** (1.0 - c))


def m2_lower_growth_printed(c: float) -> float:
    """Variant with (1+c)^(1+c) in the denominator.

    Kept for comparison: this expression stays below 2 on all of (0, 1),
    so equating it to 2 has no solution; see :func:`printed_variant_max`.
    """
    return 2.0**c / (c**c * (1.0 + c) ** (1.0 + c))


def solve_root(
    f: Callable[[float], float],
    target: float,
    lo: float,
    hi: float,
    tol: float = DEFAULT_TOL,
) -> float:
    """Bisection root of f(x) = target for monotone f on [lo, hi].

    Runs until both the bracket width and the residual |f(x) - target|
    drop below tol (or the bracket becomes unsplittable in floats, which
    for the smooth monotone functions used here implies full precision).
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    f_lo, f_hi = f(lo) - target, f(hi) - target
    if f_lo == 0:
        return lo
    if f_hi == 0:
        return hi
    if (f_lo > 0) == (f_hi > 0):
        raise ValueError("bracket endpoints do not straddle the target")
    increasing = f_hi > 0
    while True:
        mid = (lo + hi) / 2.0
        if mid <= lo or mid >= hi:
            break
        val = f(mid) - target
        if val == 0:
            return mid
        if (val < 0) == increasing:
            lo = mid
        else:
            hi = mid
        if hi - lo <= tol and abs(val) <= tol:
            return mid
    mid = (lo + hi) / 2.0
    if abs(f(mid) - target) > tol:
        raise ValueError("bisection stalled above the requested tolerance")
    return mid


def growth_constants(tol: float = DEFAULT_TOL) -> GrowthConstants:
    """Solve the three growth-rate equations (each set equal to 2).

    c4 uses the binomial-entropy growth rate of 2^(cn) C(n, cn); the
    alternative (1+c) form never reaches 2 and admits no root, see
    :func:`printed_variant_max`.
    """
    eps = 1e-6
    c1 = solve_root(m1_growth, 2.0, eps, 1.0 - eps, tol)
    c3 = solve_root(m2_upper_growth, 2.0, eps, 1.0 - eps, tol)
    # m2_lower_growth is increasing only while c < 2/3; cap the bracket there.
    c4 = solve_root(m2_lower_growth, 2.0, eps, 2.0 / 3.0, tol)
    return GrowthConstants(c1, c3, c4)


def printed_variant_max() -> tuple[float, float]:
    """Argmax and maximum of :func:`m2_lower_growth_printed` on (0, 1).

    The maximizer solves c(1+c) = 2 e^-2 in closed form; the maximum
    value sits well below 2, which is why that variant has no root.
    """
    c_star = (-1.0 + math.sqrt(1.0 + 8.0 * math.exp(-2.0))) / 2.0
    return c_star, m2_lower_growth_printed(c_star)


def a_of_t(t: float, tol: float = DEFAULT_TOL) -> float:
    """The positive root x of (1+x)^(1+x) / x^x = t, for t > 1.

    Generalizes c1 (which is a_of_t(2)) to translate budgets t^n.
    """
    if t <= 1:
        raise ValueError("t must be > 1")
    lo = 0.5
    while m1_growth(lo) >= t:
        lo /= 2.0
    hi = 1.0
    while m1_growth(hi) <= t:
        hi *= 2.0
    return solve_root(m1_growth, t, lo, hi, tol)


def k_of_n_simplex(n: int) -> int:
    """Largest k with C(n+k, n) <= 2^n, by exact comparison."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return _largest_k(lambda k: math.comb(n + k, n), 1 << n)


def k_max_crosspolytope(n: int) -> int:
    """Largest k with m2(n, k) <= 2^n, by exact comparison."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return _largest_k(lambda k: m2_count_closed(n, k), 1 << n)


def _largest_k(count: Callable[[int], int], target: int) -> int:
    # Doubling then binary search; count is strictly increasing in k.
    hi = 1
    while count(hi) <= target:
        hi *= 2
    lo = hi // 2 if hi > 1 else 0
    if lo == 0 and count(0) > target:
        raise ValueError("count exceeds target already at k = 0")
    while hi - lo > 1:
        mid = (lo + hi) // 2
        lo, hi = (mid, hi) if count(mid) <= target else (lo, mid)
    return lo


def k1_k2_of_n(n: int) -> tuple[int, int]:
    """Exact sandwich thresholds: k1 from 2^k C(n+k, k), k2 from 2^k C(n, k).

    Each is the last k before its product first exceeds 2^n.  The k2
    scan stays inside k <= n, where 2^k C(n, k) is still climbing.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    target = 1 << n
    k1 = 0
    while (1 << (k1 + 1)) * math.comb(n + k1 + 1, k1 + 1) <= target:
        k1 += 1
    k2 = 0
    while k2 + 1 <= n and (1 << (k2 + 1)) * binomial(n, k2 + 1) <= target:
        k2 += 1
    return k1, k2


def convergence_table(
    family: str, n_list: Sequence[int], p: float = 1.0
) -> list[ConvergenceRow]:
    """Exact threshold k and finite-n bound (n/(n+k))^(1/p) for each n."""
    if family not in FAMILIES:
        raise ValueError(f"unknown body family: {family!r}")
    if p < 1:
        raise ValueError("p must be >= 1")
    threshold = (
        k_of_n_simplex if family in (SIMPLEX, QUARTER_LP) else k_max_crosspolytope
    )
    rows = []
    for n in n_list:
        k = threshold(n)
        rows.append(ConvergenceRow(n, k, k / n, (n / (n + k)) ** (1.0 / p)))
    return rows


def rogers_zong_bound(n: int, r: float, variant: str = "remark") -> float:
    """Translate-count bound (1 + 1/r)^n (n log n + [n] log log n + 5n).

    The two printings differ in the middle term: "remark" uses
    log log n, "intro" uses n log log n.  Natural logarithms; n >= 3
    keeps log log n positive.
    """
    if n < 3:
        raise ValueError("n must be >= 3")
    if not 0 < r < 1:
        raise ValueError("r must be in (0, 1)")
    if variant == "remark":
        middle = math.log(math.log(n))
    elif variant == "intro":
        middle = n * math.log(math.log(n))
    else:
        raise ValueError(f"unknown variant: {variant!r}")
    return (1.0 + 1.0 / r) ** n * (n * math.log(n) + middle + 5.0 * n)
