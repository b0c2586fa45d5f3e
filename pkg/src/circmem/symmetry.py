"""Rotation and complement symmetry of bipolar states and fixed-point sets."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from circmem.circulant import BipolarState, index_to_string
from circmem.errors import MixedSizes


class Group(str, enum.Enum):
    ROTATION = "RotationOnly"
    COMPLEMENT = "ComplementOnly"
    ROTATION_AND_COMPLEMENT = "RotationAndComplement"


def rotate(s: BipolarState, k: int) -> BipolarState:
    """Right cyclic shift: ``result[i] = s[(i - k) mod n]``."""
    n = s.n
    if n == 0:
        return s
    k %= n
    return BipolarState(s.spins[n - k:] + s.spins[:n - k])


def complement(s: BipolarState) -> BipolarState:
    return BipolarState(tuple(-v for v in s.spins))


def rotate_index(index: int, k: int, n: int) -> int:
    """:func:`rotate` on a packed index (position 0 is the top bit)."""
    k %= n
    mask = (1 << n) - 1
    return ((index >> k) | (index << (n - k))) & mask


def complement_index(index: int, n: int) -> int:
    return index ^ ((1 << n) - 1)


def canonical_index(index: int, n: int) -> int:
    return min(rotate_index(index, k, n) for k in range(n))


def canonical_rotation(s: BipolarState) -> BipolarState:
    """The rotation of ``s`` with the smallest packed index."""
    return BipolarState.from_index(canonical_index(s.index, s.n), s.n)


class UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            # smaller index wins so roots are class minima
            if ry < rx:
                rx, ry = ry, rx
            self.parent[ry] = rx


@dataclass(frozen=True)
class OrbitPartition:
    group: Group
    n: int
    classes: tuple[tuple[int, ...], ...]

    @property
    def representatives(self) -> tuple[int, ...]:
        return tuple(cls[0] for cls in self.classes)

    def __len__(self):
        return len(self.classes)


def _packed(states, n=None) -> tuple[int, list[int]]:
    """Normalise a FixedPointSet or an iterable of BipolarStates."""
    if hasattr(states, "states") and hasattr(states, "n"):
        return states.n, list(states.states)
    items = list(states)
    sizes = {s.n for s in items}
    if len(sizes) > 1:
        raise MixedSizes(f"states of several sizes: {sorted(sizes)}")
    return (sizes.pop() if sizes else 0), [s.index for s in items]


def group_orbits(states, group: Group | str = Group.ROTATION) -> OrbitPartition:
    """Partition ``states`` into classes under the chosen symmetry generators.

    Only moves that land inside the input set join classes, so each class is
    closed under the group restricted to the input.
    """
    group = Group(group)
    n, packed = _packed(states)
    uf = UnionFind(packed)
    present = uf.parent
    for x in packed:
        neighbours = [x]
        if group in (Group.ROTATION, Group.ROTATION_AND_COMPLEMENT):
            neighbours = [rotate_index(x, k, n) for k in range(n)]
        if group in (Group.COMPLEMENT, Group.ROTATION_AND_COMPLEMENT):
            neighbours += [complement_index(y, n) for y in neighbours]
        for y in neighbours:
            if y in present:
                uf.union(x, y)
    buckets: dict[int, list[int]] = {}
    for x in packed:
        buckets.setdefault(uf.find(x), []).append(x)
    classes = tuple(tuple(sorted(set(v))) for _, v in sorted(buckets.items()))
    return OrbitPartition(group, n, classes)


def unique_memory_count(states) -> int:
    """Size of the set once each complement pair is counted once."""
    n, packed = _packed(states)
    lookup = set(packed)
    pairs = sum(1 for x in lookup if complement_index(x, n) in lookup) // 2
    return len(lookup) - pairs


def rotation_orbit(s: BipolarState) -> list[BipolarState]:
    return sorted({rotate(s, k) for k in range(s.n)})


def orbit_strings(partition: OrbitPartition) -> list[list[str]]:
    return [[index_to_string(i, partition.n) for i in cls] for cls in partition.classes]


def states_of(strings: Iterable[str]) -> list[BipolarState]:
    return [BipolarState.from_string(t) for t in strings]
