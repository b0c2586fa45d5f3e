"""Exhaustive fixed-point enumeration over {+1, -1}^n.

Three routes produce the same sorted set:

* :func:`enumerate_naive` evaluates every state's full field (vectorised
  numpy, O(n^2) per state). It is the reference.
* :func:`enumerate_gray` walks the binary-reflected Gray code so each step
  is one spin flip and an O(n) field update.
* :func:`enumerate_partitioned` splits the Gray ranks into contiguous blocks
  that run independently and merges the results.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from circmem._gray import CHECK_EVERY, gray_block
from circmem.circulant import BipolarState, CirculantMatrix, as_row, index_to_string
from circmem.errors import IntegrityError, SizeTooLarge

NAIVE_CAP = 22
GRAY_CAP = 28
NAIVE = "Naive"
GRAY = "GrayCode"

_NAIVE_CHUNK = 1 << 15


@dataclass(frozen=True)
class FixedPointSet:
    """Fixed points of one network, as ascending packed indices."""

    n: int
    states: tuple[int, ...]

    def __len__(self):
        return len(self.states)

    def __iter__(self) -> Iterator[int]:
        return iter(self.states)

    def __contains__(self, item):
        if isinstance(item, BipolarState):
            return item.n == self.n and item.index in self._lookup
        return item in self._lookup

    @property
    def _lookup(self) -> frozenset:
        cached = self.__dict__.get("_lookup_cache")
        if cached is None:
            cached = frozenset(self.states)
            object.__setattr__(self, "_lookup_cache", cached)
        return cached

    def bipolar(self) -> list[BipolarState]:
        return [BipolarState.from_index(i, self.n) for i in self.states]

    def strings(self) -> list[str]:
        return [index_to_string(i, self.n) for i in self.states]


@dataclass
class EnumerationStats:
    states_examined: int
    fixed_found: int
    method: str
    partitions: int = 1
    wall_time: float = 0.0
    checkpoints: int = 0
    checkpoint_failures: int = 0
    extra: dict = field(default_factory=dict)


def _as_matrix(W) -> CirculantMatrix:
    return W if isinstance(W, CirculantMatrix) else CirculantMatrix(as_row(W))


def _rotation_closed(n: int, states) -> bool:
    lookup = set(states)
    mask = (1 << n) - 1
    for s in states:
        # rotate right by one position == rotate the packed word right by one bit
        r = (s >> 1) | ((s & 1) << (n - 1)) if n > 1 else s
        if (r & mask) not in lookup:
            return False
    return True


def _finish(n, found, stats) -> FixedPointSet:
    states = tuple(int(v) for v in np.unique(np.asarray(found, dtype=np.int64)))
    if len(states) != len(found):
        raise IntegrityError("enumeration produced duplicate states")
    if not _rotation_closed(n, states):
        raise IntegrityError("fixed-point set is not closed under rotation")
    stats.fixed_found = len(states)
    return FixedPointSet(n, states)


def enumerate_naive(W, max_n: int = NAIVE_CAP) -> tuple[FixedPointSet, EnumerationStats]:
    """Test every state by a full matrix-vector product."""
    W = _as_matrix(W)
    n = W.n
    if n > max_n:
        raise SizeTooLarge(n, max_n, "naive")
    t0 = time.perf_counter()
    M = W.entries
    shifts = np.arange(n - 1, -1, -1, dtype=np.int64)
    total = 1 << n
    found = []
    for lo in range(0, total, _NAIVE_CHUNK):
        idx = np.arange(lo, min(lo + _NAIVE_CHUNK, total), dtype=np.int64)
        spins = 1 - 2 * ((idx[:, None] >> shifts) & 1)
        fields = spins @ M.T
        keep = np.all((fields >= 0) == (spins > 0), axis=1)
        found.extend(idx[keep].tolist())
    stats = EnumerationStats(total, 0, NAIVE)
    fps = _finish(n, found, stats)
    stats.wall_time = time.perf_counter() - t0
    return fps, stats


def _check_gray_cap(n, force_large):
    if n > GRAY_CAP and not force_large:
        raise SizeTooLarge(n, GRAY_CAP, "gray-code")
    if n > 62:
        raise SizeTooLarge(n, 62, "gray-code (64-bit index)")


def block_bounds(n: int, partitions: int) -> list[tuple[int, int]]:
    """Contiguous ``[start, stop)`` Gray-rank blocks covering ``[0, 2^n)``."""
    if partitions < 1:
        raise ValueError(f"partitions must be >= 1, got {partitions}")
    total = 1 << n
    return [(total * b // partitions, total * (b + 1) // partitions) for b in range(partitions)]


def enumerate_partitioned(
    W,
    partitions: int,
    workers: int | None = None,
    force_large: bool = False,
    check_every: int = CHECK_EVERY,
) -> tuple[FixedPointSet, EnumerationStats]:
    """Gray-code scan split over ``partitions`` independently seeded blocks.

    The result does not depend on ``partitions`` or ``workers``.
    """
    W = _as_matrix(W)
    n = W.n
    _check_gray_cap(n, force_large)
    bounds = block_bounds(n, partitions)
    c = np.asarray(W.row.c, dtype=np.int64)
    if workers is None:
        workers = min(partitions, os.cpu_count() or 1)

    t0 = time.perf_counter()
    if workers <= 1 or partitions == 1:
        results = [gray_block(c, a, b, check_every) for a, b in bounds]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(gray_block, c, a, b, check_every) for a, b in bounds]
            results = [fut.result() for fut in futures]

    found = np.concatenate([r[0] for r in results]) if results else np.empty(0, np.int64)
    checks = sum(int(r[1]) for r in results)
    fails = sum(int(r[2]) for r in results)
    stats = EnumerationStats(
        sum(b - a for a, b in bounds), 0, GRAY, partitions=partitions,
        checkpoints=checks, checkpoint_failures=fails,
    )
    if fails:
        raise IntegrityError(f"{fails} Gray-walk checkpoint(s) disagreed with a fresh field")
    if stats.states_examined != 1 << n:
        raise IntegrityError("Gray-code blocks did not cover the state space")
    fps = _finish(n, found.tolist(), stats)
    stats.wall_time = time.perf_counter() - t0
    return fps, stats


def enumerate_gray(W, force_large: bool = False) -> tuple[FixedPointSet, EnumerationStats]:
    return enumerate_partitioned(W, 1, workers=1, force_large=force_large)
