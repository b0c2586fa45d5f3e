"""Threshold neuron dynamics on a circulant network."""

from __future__ import annotations

import random
from dataclasses import dataclass
from operator import mul
from typing import Sequence, Union

from circmem.circulant import BipolarState, CirculantMatrix, local_field
from circmem.errors import InvalidPermutation, SizeMismatch


def threshold(field: int) -> int:
    # A zero field maps to +1.
    return 1 if field >= 0 else -1


def _check(W: CirculantMatrix, s: BipolarState):
    if s.n != W.n:
        raise SizeMismatch(f"matrix is {W.n}x{W.n} but state has {s.n} spins")


def sync_update(W: CirculantMatrix, s: BipolarState) -> BipolarState:
    """Update every neuron at once from the old state."""
    _check(W, s)
    return BipolarState(tuple(threshold(f) for f in local_field(W, s)))


def validate_order(order: Sequence[int], n: int) -> tuple[int, ...]:
    order = tuple(int(i) for i in order)
    if sorted(order) != list(range(n)):
        raise InvalidPermutation(f"{order} is not a permutation of 0..{n - 1}")
    return order


def async_sweep(W: CirculantMatrix, s: BipolarState, order: Sequence[int] | None = None) -> BipolarState:
    """Update neurons one at a time in ``order``; each sees earlier updates.

    The default order is the identity permutation.
    """
    _check(W, s)
    order = tuple(range(W.n)) if order is None else validate_order(order, W.n)
    spins = list(s.spins)
    rows = W.rows
    for i in order:
        spins[i] = threshold(sum(map(mul, rows[i], spins)))
    return BipolarState(tuple(spins))


def is_fixed_point(W: CirculantMatrix, s: BipolarState) -> bool:
    _check(W, s)
    return all(threshold(f) == v for f, v in zip(local_field(W, s), s.spins))


@dataclass(frozen=True)
class Synchronous:
    pass


@dataclass(frozen=True)
class AsynchronousSweep:
    order: tuple[int, ...] | None = None

    @classmethod
    def seeded(cls, n: int, seed: int) -> "AsynchronousSweep":
        order = list(range(n))
        random.Random(seed).shuffle(order)
        return cls(tuple(order))


UpdateMode = Union[Synchronous, AsynchronousSweep]


@dataclass(frozen=True)
class FixedPoint:
    state: BipolarState
    steps: int


@dataclass(frozen=True)
class Cycle:
    period: int
    first_state_of_cycle: BipolarState
    steps_to_enter: int


@dataclass(frozen=True)
class MaxItersExceeded:
    last_state: BipolarState


TrajectoryOutcome = Union[FixedPoint, Cycle, MaxItersExceeded]


def converge(
    W: CirculantMatrix,
    s0: BipolarState,
    mode: UpdateMode | None = None,
    max_iters: int = 1000,
) -> TrajectoryOutcome:
    """Iterate the update until a state repeats or ``max_iters`` updates pass.

    ``steps`` / ``steps_to_enter`` count the updates taken before the
    trajectory first reaches the fixed point or cycle.
    """
    _check(W, s0)
    if max_iters < 1:
        raise ValueError(f"max_iters must be >= 1, got {max_iters}")
    mode = Synchronous() if mode is None else mode
    if isinstance(mode, AsynchronousSweep):
        order = tuple(range(W.n)) if mode.order is None else validate_order(mode.order, W.n)

        def step(s):
            return async_sweep(W, s, order)
    else:
        def step(s):
            return sync_update(W, s)

    seen = {s0.index: 0}
    s = s0
    for t in range(1, max_iters + 1):
        s = step(s)
        first = seen.get(s.index)
        if first is not None:
            period = t - first
            if period == 1:
                return FixedPoint(s, first)
            return Cycle(period, s, first)
        seen[s.index] = t
    return MaxItersExceeded(s)
