"""Constructive covering witnesses, l_p scale recurrences, and gamma bounds.

The blown-up body ((n+k)/n) * body is covered by integer translates of
the normalized body.  For the polytopal families the witness is exact:
every point y splits as y = z + r with z in the translation set and r
back in the normalized body.  For p > 1 a peeling argument moves y into
the normalized body one unit step at a time, certified by the scale
sequence t_{n,p,k}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Union

from . import bodies, combinatorics, lattice_sets
from .bodies import BodySpec, CROSSPOLYTOPE, LP, QUARTER_LP, SIMPLEX
from .lattice_sets import LatticeSetSpec

_BISECT_TOL = 1e-12


@dataclass(frozen=True)
class WitnessDecomposition:
    """A translate z plus residual y - z certifying that y is covered."""

    z: tuple[int, ...]
    residual: tuple
    shell_level: int


@dataclass(frozen=True)
class TSequence:
    """Certified scale factors t_{n,p,0..k}; exact Fractions when p = 1."""

    n: int
    p: float
    values: tuple


@dataclass(frozen=True)
class GammaBound:
    """m translates of rho * body suffice to cover the body."""

    m: int
    rho: Union[Fraction, float]
    body: BodySpec


@dataclass
class CoveringReport:
    """Outcome of a sampled covering verification.

    witness_failures counts sampled points without a valid witness;
    translate_failures counts translate vertices escaping the scaled
    body (exact check, polytopal families only); shell_levels histograms
    where the decomposition placed each sample.
    """

    kind: str
    n: int
    k: int
    p: float
    samples: int
    seed: int
    witness_failures: int = 0
    translate_failures: int = 0
    translates_checked: int = 0
    shell_levels: dict = field(default_factory=dict)
    ok: bool = True

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "k": self.k,
            "p": self.p,
            "samples": self.samples,
            "seed": self.seed,
            "witness_failures": self.witness_failures,
            "translate_failures": self.translate_failures,
            "translates_checked": self.translates_checked,
            "shell_levels": {
                str(level): self.shell_levels[level]
                for level in sorted(self.shell_levels)
            },
            "success_rate": (self.samples - self.witness_failures) / self.samples,
            "ok": self.ok,
        }


def decompose_simplex(n: int, k: int, y: Sequence) -> WitnessDecomposition:
    """Split y in ((n+k)/n) * simplex as z + residual with z in M1(n, k).

    The required budget is m = max(0, ceil(sum y) - n); coordinate
    floors always sum to at least m, so a greedy scan assigning
    z_i = min(floor(y_i), remaining budget) terminates with sum z = m
    and leaves the residual inside the normalized simplex.
    """
    coords = [Fraction(c) for c in y]
    scaled = bodies.simplex(n, Fraction(n + k, n))
    if not bodies.contains_exact(scaled, coords):
        raise ValueError("point lies outside the scaled simplex")
    z, level = _greedy_budget(coords, n, k)
    residual = tuple(c - w for c, w in zip(coords, z))
    return WitnessDecomposition(z, residual, level)


def decompose_crosspolytope(n: int, k: int, y: Sequence) -> WitnessDecomposition:
    """Split y in ((n+k)/n) * cross-polytope as z + residual, z in M2(n, k).

    Reduces to the simplex greedy on |y|, then restores the original
    signs (zero coordinates take +1).
    """
    coords = [Fraction(c) for c in y]
    scaled = bodies.cross_polytope(n, Fraction(n + k, n))
    if not bodies.contains_exact(scaled, coords):
        raise ValueError("point lies outside the scaled cross-polytope")
    signs = [1 if c >= 0 else -1 for c in coords]
    z_abs, level = _greedy_budget([abs(c) for c in coords], n, k)
    z = tuple(s * w for s, w in zip(signs, z_abs))
    residual = tuple(c - w for c, w in zip(coords, z))
    return WitnessDecomposition(z, residual, level)


def _greedy_budget(coords: list, n: int, k: int) -> tuple[tuple[int, ...], int]:
    total = sum(coords)
    needed = max(0, math.ceil(total) - n)
    floors = [math.floor(c) for c in coords]
    if sum(floors) < needed:
        # The shell argument guarantees enough integer mass; reaching
        # here means the decomposition itself is broken.
        raise AssertionError("floor sum below required budget")
    z = []
    remaining = needed
    for f in floors:
        take = min(f, remaining)
        z.append(take)
        remaining -= take
    return tuple(z), needed


def verify_covering_exact(
    family: str,
    n: int,
    k: int,
    samples: int = 1000,
    seed: int = 42,
    corrupt_witness: bool = False,
) -> CoveringReport:
    """Check both inclusions of the exact covering identity by sampling.

    Every sampled point of the scaled body must decompose into a valid
    witness (zero failures allowed), and every translate vertex must lie
    inside the scaled body, exhaustively over the translation set.  The
    corrupt_witness hook deliberately breaks each witness so failure
    handling can be exercised end to end.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    if family == SIMPLEX:
        set_kind, base, decompose = lattice_sets.M1, bodies.simplex(n), decompose_simplex
    elif family == CROSSPOLYTOPE:
        set_kind, base = lattice_sets.M2, bodies.cross_polytope(n)
        decompose = decompose_crosspolytope
    else:
        raise ValueError("exact verification covers simplex and crosspolytope")
    spec = LatticeSetSpec(set_kind, n, k)
    scaled = base.rescaled(Fraction(n + k, n))
    report = CoveringReport(
        kind=f"{set_kind}-{family}", n=n, k=k, p=1.0, samples=samples, seed=seed
    )

    for y in bodies.sample_boundary(scaled, samples, seed):
        witness = decompose(n, k, y)
        z = witness.z
        if corrupt_witness:
            z = (z[0] + k + 1,) + z[1:]
        residual = tuple(c - w for c, w in zip(y, z))
        if not (lattice_sets.member(spec, z) and bodies.contains_exact(base, residual)):
            report.witness_failures += 1
        level = witness.shell_level
        report.shell_levels[level] = report.shell_levels.get(level, 0) + 1

    for z in lattice_sets.enumerate_points(spec):
        report.translates_checked += 1
        for v in bodies.vertices(base):
            shifted = tuple(c + w for c, w in zip(v, z))
            if not bodies.contains_exact(scaled, shifted):
                report.translate_failures += 1

    report.ok = report.witness_failures == 0 and report.translate_failures == 0
    return report


def t_sequence(n: int, p: float, k_max: int) -> TSequence:
    """Certified scale factors for the l_p peeling, t_0 = 1 upward.

    Each t_{k+1} is the unique root above t_k of
    (t - 1)^p + (n - 1) t^p = n t_k^p.  For p = 1 the recurrence
    linearizes and t_k = (n + k)/n exactly.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    if p < 1:
        raise ValueError("p must be >= 1")
    if k_max < 0:
        raise ValueError("k_max must be >= 0")
    if p == 1:
        return TSequence(n, p, tuple(Fraction(n + j, n) for j in range(k_max + 1)))
    values = [1.0]
    for _ in range(k_max):
        rhs = n * values[-1] ** p
        values.append(_next_scale(n, p, values[-1], rhs))
    return TSequence(n, p, tuple(values))


def _next_scale(n: int, p: float, t_prev: float, rhs: float) -> float:
    def g(t: float) -> float:
        return (t - 1.0) ** p + (n - 1) * t**p - rhs

    lo, hi = t_prev, t_prev + 1.0
    while g(hi) < 0:  # g is increasing; widen until it straddles zero
        lo, hi = hi, hi + 1.0
    while hi - lo > _BISECT_TOL:
        mid = (lo + hi) / 2.0
        if g(mid) < 0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2.0


def verify_covering_lp(
    family: str,
    n: int,
    p: float,
    k: int,
    samples: int = 500,
    seed: int = 42,
    tol: float = 1e-9,
    corrupt_witness: bool = False,
) -> CoveringReport:
    """Peeling verification of the one-sided l_p covering inclusion.

    Each sampled point of ((n+k)/n)^(1/p) * body is pushed into the
    normalized body by repeatedly moving its largest-magnitude
    coordinate one unit toward zero; the accumulated lattice vector must
    land in the matching translation set.  Only this inclusion is
    claimed for p > 1, so translates are not required to stay inside the
    scaled body.  p = 1 inputs route to the exact verifier.
    """
    if family not in (QUARTER_LP, LP):
        raise ValueError("l_p verification covers qlp and lp")
    if p < 1:
        raise ValueError("p must be >= 1")
    if p == 1:
        polytopal = SIMPLEX if family == QUARTER_LP else CROSSPOLYTOPE
        return verify_covering_exact(
            polytopal, n, k, samples, seed, corrupt_witness=corrupt_witness
        )
    if samples < 1:
        raise ValueError("samples must be >= 1")

    set_kind = lattice_sets.M1 if family == QUARTER_LP else lattice_sets.M2
    spec = LatticeSetSpec(set_kind, n, k)
    base = BodySpec(family, n, p, Fraction(1))
    scaled = BodySpec(family, n, p, ((n + k) / n) ** (1.0 / p))
    report = CoveringReport(
        kind=f"{set_kind}-{family}", n=n, k=k, p=p, samples=samples, seed=seed
    )

    for y in bodies.sample_boundary(scaled, samples, seed):
        x = list(y)
        z = [0] * n
        moves = 0
        while moves < k and not bodies.contains_float(base, x, tol):
            i = max(range(n), key=lambda j: abs(x[j]))
            step = 1 if x[i] >= 0 else -1
            x[i] -= step
            z[i] += step
            moves += 1
        if corrupt_witness:
            z[0] += k + 1
        ok = bodies.contains_float(base, x, tol) and lattice_sets.member(spec, z)
        if not ok:
            report.witness_failures += 1
        report.shell_levels[moves] = report.shell_levels.get(moves, 0) + 1

    report.ok = report.witness_failures == 0
    return report


def gamma_upper_bound(family: str, n: int, p: float, k: int) -> GammaBound:
    """Covering-functional upper bound from the k-th lattice covering.

    Simplex-like families use the C(n+k, n) translates of M1, the
    centrally symmetric ones the m2(n, k) translates of M2; the shrink
    factor is (n/(n+k))^(1/p), exact when p = 1.
    """
    if family not in bodies.FAMILIES:
        raise ValueError(f"unknown body family: {family!r}")
    if k < 0:
        raise ValueError("k must be >= 0")
    if family in (SIMPLEX, CROSSPOLYTOPE):
        p = 1.0
    if family in (SIMPLEX, QUARTER_LP):
        m = combinatorics.m1_count(n, k)
    else:
        m = combinatorics.m2_count_closed(n, k)
    ratio = Fraction(n, n + k)
    rho: Union[Fraction, float]
    rho = ratio if p == 1 else float(ratio) ** (1.0 / p)
    return GammaBound(m, rho, BodySpec(family, n, p, Fraction(1)))
