"""Independent reference implementations used to check the package.

Everything here is deliberately naive: direct enumeration over integer
boxes, Pascal's triangle built by addition, and closed-form roots of
small polynomials.  None of it shares code with src/hadcover.
"""

from fractions import Fraction
from itertools import product
import math


def pascal_triangle(rows):
    """Binomial coefficients by repeated addition, rows 0..rows-1."""
    tri = [[1]]
    for _ in range(rows - 1):
        prev = tri[-1]
        row = [1]
        for i in range(1, len(prev)):
            row.append(prev[i - 1] + prev[i])
        row.append(1)
        tri.append(row)
    return tri


def box_count_m1(n, k):
    """Count nonnegative integer vectors with coordinate sum <= k.

    Scans the full (k+1)^n box.  Slow but unarguable.
    """
    return sum(1 for t in product(range(k + 1), repeat=n) if sum(t) <= k)


def box_count_m2(n, k):
    """Count integer vectors with absolute coordinate sum <= k."""
    box = range(-k, k + 1)
    return sum(1 for t in product(box, repeat=n) if sum(map(abs, t)) <= k)


def box_points_m1(n, k):
    return sorted(t for t in product(range(k + 1), repeat=n) if sum(t) <= k)


def box_points_m2(n, k):
    box = range(-k, k + 1)
    return sorted(t for t in product(box, repeat=n) if sum(map(abs, t)) <= k)


def recursive_count_m1(n, k):
    """Same set as box_count_m1 counted by budget recursion.

    Visits only members, so it stays fast where the box scan does not.
    """
    if n == 0:
        return 1
    return sum(recursive_count_m1(n - 1, k - v) for v in range(k + 1))


def recursive_count_m2(n, k):
    if n == 0:
        return 1
    total = recursive_count_m2(n - 1, k)
    for v in range(1, k + 1):
        total += 2 * recursive_count_m2(n - 1, k - v)
    return total


def t1_closed_form(n):
    """First inflation factor after 1 for exponent p=2.

    Root of (t-1)^2 + (n-1)t^2 = n, i.e. n t^2 - 2t + (1-n) = 0,
    taking the branch above 1.
    """
    return (1.0 + math.sqrt(1.0 - n + n * n)) / n


def rational_points(rng, n, bound, count, denominator=1000):
    """Random rational vectors with coordinates in [-bound, bound]."""
    pts = []
    for _ in range(count):
        pts.append(tuple(
            Fraction(rng.randint(-bound * denominator, bound * denominator),
                     denominator)
            for _ in range(n)))
    return pts
