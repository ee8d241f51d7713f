"""The four body families, membership tests, and boundary sampling.

Bodies are stored in normalized form: the defining sum (coordinate sum,
l1 norm, or p-th power sum) is bounded by ``n`` at scale 1, so integer
translates act naturally.  The unit bodies correspond to scale 1/n.

Polytopal families (simplex, cross-polytope, and the l_p families at
p = 1) are handled in exact rational arithmetic; p > 1 requires floats.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

SIMPLEX = "simplex"
CROSSPOLYTOPE = "crosspolytope"
QUARTER_LP = "qlp"
LP = "lp"

FAMILIES = (SIMPLEX, CROSSPOLYTOPE, QUARTER_LP, LP)

# Exact coordinates are plain Fractions; float points are plain tuples.
RationalPoint = tuple
FloatPoint = tuple

Scale = Union[int, Fraction, float]


@dataclass(frozen=True)
class BodySpec:
    """A normalized body together with a positive scale multiplier.

    scale=1 is the normalized body (defining sum bounded by n).  The
    scale must be exact (int or Fraction) for the polytopal families;
    a float scale is accepted only for p > 1, where membership is
    decided numerically anyway.
    """

    family: str
    n: int
    p: float = 1.0
    scale: Scale = Fraction(1)

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown body family: {self.family!r}")
        if self.n < 1:
            raise ValueError("dimension n must be >= 1")
        if self.p < 1:
            raise ValueError("p must be >= 1")
        if self.family in (SIMPLEX, CROSSPOLYTOPE) and self.p != 1:
            raise ValueError(f"{self.family} is a p=1 body")
        if isinstance(self.scale, float) and self.is_polytopal:
            raise ValueError("polytopal bodies need an exact (rational) scale")
        if self.scale <= 0:
            raise ValueError("scale must be positive")

    @property
    def is_polytopal(self) -> bool:
        """True when membership is decidable in exact rational arithmetic."""
        return self.family in (SIMPLEX, CROSSPOLYTOPE) or self.p == 1

    @property
    def nonnegative(self) -> bool:
        """True for bodies confined to the nonnegative orthant."""
        return self.family in (SIMPLEX, QUARTER_LP)

    def rescaled(self, scale: Scale) -> "BodySpec":
        return BodySpec(self.family, self.n, self.p, scale)


def simplex(n: int, scale: Scale = Fraction(1)) -> BodySpec:
    return BodySpec(SIMPLEX, n, 1.0, scale)


def cross_polytope(n: int, scale: Scale = Fraction(1)) -> BodySpec:
    return BodySpec(CROSSPOLYTOPE, n, 1.0, scale)


def quarter_lp(n: int, p: float, scale: Scale = Fraction(1)) -> BodySpec:
    return BodySpec(QUARTER_LP, n, p, scale)


def lp_ball(n: int, p: float, scale: Scale = Fraction(1)) -> BodySpec:
    return BodySpec(LP, n, p, scale)


def contains_exact(body: BodySpec, point: Sequence) -> bool:
    """Exact membership test for polytopal bodies (boundary counts as inside).

    Coordinates may be ints, Fractions, or anything Fraction accepts
    exactly; the decision never rounds.
    """
    if not body.is_polytopal:
        raise ValueError("exact membership needs a polytopal body (p = 1)")
    _check_dim(body, point)
    coords = [Fraction(c) for c in point]
    bound = Fraction(body.scale) * body.n
    if body.nonnegative:
        return all(c >= 0 for c in coords) and sum(coords) <= bound
    return sum(abs(c) for c in coords) <= bound


def contains_float(body: BodySpec, point: Sequence[float], tol: float = 1e-9) -> bool:
    """Tolerant membership test for the l_p families.

    Accepts the point when sum |x_i|^p <= scale^p * n * (1 + tol), and
    for the quarter ball additionally requires every x_i >= -tol.
    """
    if body.family not in (QUARTER_LP, LP):
        raise ValueError("float membership is for the l_p families")
    if tol <= 0:
        raise ValueError("tol must be positive")
    _check_dim(body, point)
    coords = [float(c) for c in point]
    if any(not math.isfinite(c) for c in coords):
        raise ValueError("coordinates must be finite")
    if body.family == QUARTER_LP and any(c < -tol for c in coords):
        return False
    limit = float(body.scale) ** body.p * body.n * (1.0 + tol)
    return sum(abs(c) ** body.p for c in coords) <= limit


def vertices(body: BodySpec) -> list[tuple]:
    """Vertex list of a polytopal body, as exact rational points.

    Simplex-like bodies: the origin plus (scale*n) e_i.  Cross-polytope
    bodies: +-(scale*n) e_i.  Curved bodies (p > 1) have no vertex list.
    """
    if not body.is_polytopal:
        raise ValueError("curved bodies (p > 1) have no vertex list")
    n = body.n
    r = Fraction(body.scale) * n
    zero = Fraction(0)
    if body.nonnegative:
        out = [tuple([zero] * n)]
        for i in range(n):
            v = [zero] * n
            v[i] = r
            out.append(tuple(v))
        return out
    out = []
    for i in range(n):
        for sign in (1, -1):
            v = [zero] * n
            v[i] = sign * r
            out.append(tuple(v))
    return out


# Rational samples draw numerators below this denominator.
_SAMPLE_DENOMINATOR = 10**4
# Fraction of samples forced into the outer shell, rest uniform in depth.
_SHELL_BIAS = 0.8


def sample_boundary(body: BodySpec, count: int, seed: int) -> list[tuple]:
    """Deterministic in-body samples, biased toward the outer shell.

    80% of the samples land in the outermost slab of the defining sum
    (width min(1, range/n), the region where covering arguments are
    nontrivial); the rest spread uniformly in depth.  Polytopal bodies
    yield exact rational points, curved ones float points.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    rng = random.Random(seed)
    if body.is_polytopal:
        return [_sample_exact(body, rng) for _ in range(count)]
    return [_sample_float(body, rng) for _ in range(count)]


def _shell_floor(total: Fraction, n: int) -> Fraction:
    # Outer slab: width 1 once the body is large enough, else top 1/n.
    return max(total - 1, total * (n - 1) / n)


def _sample_exact(body: BodySpec, rng: random.Random) -> tuple:
    n = body.n
    d = _SAMPLE_DENOMINATOR
    bound = Fraction(body.scale) * n
    if rng.random() < _SHELL_BIAS:
        lo = _shell_floor(bound, n)
        target = lo + (bound - lo) * Fraction(rng.randint(1, d), d)
    else:
        target = bound * Fraction(rng.randint(0, d), d)
    while True:
        weights = [Fraction(rng.randint(0, d), d) for _ in range(n)]
        total = sum(weights)
        if total > 0:
            break
    coords = [target * w / total for w in weights]
    if not body.nonnegative:
        coords = [c if rng.random() < 0.5 else -c for c in coords]
    return tuple(coords)


def _sample_float(body: BodySpec, rng: random.Random) -> tuple:
    n = body.n
    p = body.p
    bound = float(body.scale) ** p * n  # bound on the p-th power sum
    if rng.random() < _SHELL_BIAS:
        lo = max(bound - 1.0, bound * (n - 1) / n)
        target = lo + (bound - lo) * rng.random()
    else:
        target = bound * rng.random()
    while True:
        weights = [rng.random() for _ in range(n)]
        power_sum = sum(w**p for w in weights)
        if power_sum > 0:
            break
    factor = (target / power_sum) ** (1.0 / p)
    coords = [factor * w for w in weights]
    if not body.nonnegative:
        coords = [c if rng.random() < 0.5 else -c for c in coords]
    return tuple(coords)


def _check_dim(body: BodySpec, point: Sequence) -> None:
    if len(point) != body.n:
        raise ValueError(f"point has dimension {len(point)}, body needs {body.n}")
