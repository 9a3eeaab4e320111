"""Bounded search and exact verification of x^3 + y^3 + z^3 = k.

Search strategy: for each candidate z in [-B, B], solve x^3 + y^3 = k - z^3
with a two-pointer sweep over the sorted cube table, restricted to x <= y <= z
so every solution multiset is found exactly once.  Two mod-9 sieves prune the
work: targets in class 4 or 5 are skipped outright, and z values whose pair
target is unreachable by two cubic residues are dropped.  Verification is
plain Python integers throughout, so literature-scale solutions with
16+ digit terms check exactly.
"""

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .residues import ResidueTriple, is_feasible, label_solution

# classes reachable by a sum of two cubic residues: {0,1,8} + {0,1,8} mod 9
TWO_CUBE_CLASSES = frozenset({0, 1, 2, 7, 8})

# Python ints never overflow, so the cap only keeps the in-memory cube
# table (2B+1 entries) reasonable.
MAX_SEARCH_BOUND = 2_000_000


class SearchBoundsError(ValueError):
    pass


@dataclass(frozen=True)
class SearchBounds:
    """Search box |x|,|y|,|z| <= bound, plus an optional inclusive k interval."""

    bound: int
    k_range: tuple[int, int] | None = None

    def __post_init__(self):
        if self.bound < 1:
            raise SearchBoundsError(f"bound must be >= 1, got {self.bound}")
        if self.bound > MAX_SEARCH_BOUND:
            raise SearchBoundsError(
                f"bound {self.bound} exceeds the supported maximum {MAX_SEARCH_BOUND}")


@dataclass(frozen=True, order=True)
class Representation:
    """A verified solution x^3 + y^3 + z^3 = k in canonical order x <= y <= z."""

    x: int
    y: int
    z: int
    k: int
    path: ResidueTriple = field(compare=False)

    def __post_init__(self):
        if not self.x <= self.y <= self.z:
            raise ValueError(f"not in canonical order: ({self.x}, {self.y}, {self.z})")
        expected = label_solution(self.x, self.y, self.z, self.k)  # checks the cube identity
        if self.path != expected:
            raise ValueError(f"path {self.path} does not match {expected}")

    def triple(self) -> tuple[int, int, int]:
        return (self.x, self.y, self.z)


def verify(x: int, y: int, z: int, k: int) -> Representation:
    """Check x^3 + y^3 + z^3 = k at arbitrary precision and attach the
    residue path.  Raises CubeSumMismatch (with the actual sum, and an
    infeasibility note when k is in class 4 or 5) on failure."""
    a, b, c = sorted((x, y, z))
    return Representation(a, b, c, k, label_solution(a, b, c, k))


@dataclass(frozen=True)
class SearchStats:
    pairs_scanned: int = 0
    z_pruned: int = 0


@dataclass(frozen=True)
class SearchResult:
    k: int
    representations: tuple[Representation, ...]  # sorted lexicographically on (x, y, z)
    skipped: bool
    stats: SearchStats


def search_k(k: int, bounds: SearchBounds | int) -> SearchResult:
    """All representations of k with |x|,|y|,|z| <= bound, deduplicated under
    x <= y <= z and sorted; skipped without work when k is in class 4 or 5."""
    if isinstance(bounds, int):
        bounds = SearchBounds(bounds)
    if not is_feasible(k):
        return SearchResult(k, (), True, SearchStats())

    B = bounds.bound
    cubes = [i * i * i for i in range(-B, B + 1)]  # strictly increasing
    reachable = TWO_CUBE_CLASSES
    found: list[tuple[int, int, int]] = []
    pairs = 0
    pruned = 0
    for zi in range(2 * B + 1):
        target = k - cubes[zi]
        if target % 9 not in reachable:
            pruned += 1
            continue
        lo, hi = 0, zi  # x <= y <= z: pair values never exceed cubes[zi]
        while lo <= hi:
            pairs += 1
            s = cubes[lo] + cubes[hi]
            if s == target:
                found.append((lo - B, hi - B, zi - B))
                lo += 1
                hi -= 1
            elif s < target:
                lo += 1
            else:
                hi -= 1

    found.sort()
    reps = tuple(verify(x, y, z, k) for x, y, z in found)  # exact recheck of every hit
    return SearchResult(k, reps, False, SearchStats(pairs, pruned))


def _scan_worker(args: tuple[int, int]) -> SearchResult:
    k, bound = args
    return search_k(k, SearchBounds(bound))


def scan_range(bounds: SearchBounds, workers: int | None = None) -> list[SearchResult]:
    """One SearchResult per k in bounds.k_range, in order.  With workers > 1
    the per-k searches run in separate processes; results are collected in
    submission order, so output is identical to a sequential scan."""
    if bounds.k_range is None:
        raise SearchBoundsError("scan_range needs bounds.k_range")
    start, stop = bounds.k_range
    ks = range(start, stop + 1)
    if not ks:
        return []
    if workers is None:
        workers = 1
    if workers <= 1 or len(ks) == 1:
        return [search_k(k, bounds) for k in ks]
    tasks = [(k, bounds.bound) for k in ks]
    chunk = max(1, len(tasks) // (workers * 4))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_scan_worker, tasks, chunksize=chunk))


def available_workers() -> int:
    return os.cpu_count() or 1
