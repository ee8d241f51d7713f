"""Streaming enumeration of the translation sets M1(n, k) and M2(n, k)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from . import combinatorics

M1 = "m1"
M2 = "m2"


@dataclass(frozen=True)
class LatticeSetSpec:
    """Which translation set: m1 (nonnegative, sum <= k) or m2 (l1 norm <= k)."""

    kind: str
    n: int
    k: int

    def __post_init__(self) -> None:
        if self.kind not in (M1, M2):
            raise ValueError(f"unknown lattice set kind: {self.kind!r}")
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.k < 0:
            raise ValueError("k must be >= 0")


def enumerate_points(spec: LatticeSetSpec) -> Iterator[tuple[int, ...]]:
    """Yield every member exactly once, in lexicographic order.

    Memory stays O(n): each coordinate takes a value and the remaining
    coordinates recurse on the leftover budget.
    """
    yield from _walk(spec.n, spec.k, (), spec.kind == M2)


def _walk(
    n_left: int, budget: int, prefix: tuple[int, ...], signed: bool
) -> Iterator[tuple[int, ...]]:
    if n_left == 0:
        yield prefix
        return
    lo = -budget if signed else 0
    for v in range(lo, budget + 1):
        yield from _walk(n_left - 1, budget - abs(v), prefix + (v,), signed)


def member(spec: LatticeSetSpec, z: Sequence[int]) -> bool:
    """True iff z satisfies the defining constraints of the set."""
    if len(z) != spec.n:
        raise ValueError(f"point has dimension {len(z)}, set needs {spec.n}")
    if spec.kind == M1:
        return all(c >= 0 for c in z) and sum(z) <= spec.k
    return sum(abs(c) for c in z) <= spec.k


def count(spec: LatticeSetSpec) -> int:
    """Cardinality of the set, from the exact closed forms."""
    if spec.kind == M1:
        return combinatorics.m1_count(spec.n, spec.k)
    return combinatorics.m2_count_closed(spec.n, spec.k)
