import pytest
from hypothesis import given
from hypothesis import strategies as st

from circmem.circulant import BipolarState
from circmem.enumeration import enumerate_gray
from circmem.errors import MixedSizes
from circmem.symmetry import (
    Group,
    canonical_index,
    canonical_rotation,
    complement,
    complement_index,
    group_orbits,
    orbit_strings,
    rotate,
    rotate_index,
    rotation_orbit,
    unique_memory_count,
)

from conftest import random_row

S = BipolarState.from_string
states = st.integers(1, 14).flatmap(
    lambda n: st.lists(st.sampled_from([1, -1]), min_size=n, max_size=n).map(lambda v: BipolarState(tuple(v)))
)


def class1():
    return enumerate_gray([0, 2, -5, 3])[0]


def test_rotate_examples():
    assert rotate(S("++--"), 1) == S("-++-")
    s = S("+--+-")
    assert rotate(s, 0) == s
    assert rotate(rotate(s, 2), 3) == s
    assert rotate(s, -1) == rotate(s, 4)


def test_complement_examples():
    assert complement(S("++--")) == S("--++")
    assert complement(S("++++")) == S("----")


@given(states, st.integers(-30, 30), st.integers(-30, 30))
def test_rotation_is_group_action(s, a, b):
    assert rotate(s, a + b) == rotate(rotate(s, a), b)
    assert rotate(rotate(s, a), s.n - a) == s
    assert rotate_index(s.index, a, s.n) == rotate(s, a).index


@given(states)
def test_complement_involution(s):
    assert complement(complement(s)) == s
    assert complement_index(s.index, s.n) == complement(s).index


@pytest.mark.parametrize("s, canon", [("-++-", "++--"), ("++++", "++++"), ("+-+-", "+-+-"), ("-+-+", "+-+-")])
def test_canonical_rotation_examples(s, canon):
    assert canonical_rotation(S(s)) == S(canon)


@given(states, st.integers(0, 20))
def test_canonical_rotation_idempotent_and_orbit_constant(s, k):
    c = canonical_rotation(s)
    assert canonical_rotation(c) == c
    assert canonical_rotation(rotate(s, k)) == c
    assert c.index == min(r.index for r in rotation_orbit(s))
    assert canonical_index(s.index, s.n) == c.index


def test_group_orbits_rotation_on_class1():
    p = group_orbits(class1(), Group.ROTATION)
    assert orbit_strings(p) == [["++++"], ["++--", "+--+", "-++-", "--++"]]
    assert p.representatives == (0b0000, 0b0011)


def test_group_orbits_complement_on_class1():
    p = group_orbits(class1(), Group.COMPLEMENT)
    assert len(p) == 3
    assert orbit_strings(p) == [["++++"], ["++--", "--++"], ["+--+", "-++-"]]


def test_group_orbits_both_on_class2():
    fps = enumerate_gray([0, 2, -5, 4])[0]
    p = group_orbits(fps, "RotationAndComplement")
    assert orbit_strings(p) == [["++++", "----"], ["++--", "+--+", "-++-", "--++"]]


def test_group_orbits_empty():
    for g in Group:
        assert len(group_orbits([], g)) == 0


def test_group_orbits_restricted_to_input():
    # only two members of the ++-- orbit are present; they still share a class
    p = group_orbits([S("++--"), S("--++"), S("++++")], Group.ROTATION)
    assert orbit_strings(p) == [["++++"], ["++--", "--++"]]


def test_group_orbits_mixed_sizes():
    with pytest.raises(MixedSizes):
        group_orbits([S("++"), S("+++")])


def test_rotation_classes_are_full_orbits_with_sizes_dividing_n(rng):
    for _ in range(100):
        n = rng.randint(1, 12)
        fps = enumerate_gray(random_row(rng, n))[0]
        for cls in group_orbits(fps, Group.ROTATION).classes:
            assert n % len(cls) == 0
            orbit = {rotate_index(cls[0], k, n) for k in range(n)}
            assert set(cls) == orbit


@pytest.mark.parametrize("row, unique", [
    ([0, 2, -5, 3], 3),
    ([0, -2, 3, 3, -2], 6),
    ([0, -2, -1, 3, 3, 1, -2], 8),
])
def test_unique_memory_count(row, unique):
    assert unique_memory_count(enumerate_gray(row)[0]) == unique


six_spin = st.integers(0, 63).map(lambda i: BipolarState.from_index(i, 6))


@given(st.lists(six_spin, max_size=30), st.randoms())
def test_unique_count_formula_and_order_invariance(items, rnd):
    items = list(dict.fromkeys(items))
    present = set(items)
    pairs = {frozenset((s, complement(s))) for s in items if complement(s) in present}
    assert unique_memory_count(items) == len(items) - len(pairs)
    shuffled = items[:]
    rnd.shuffle(shuffled)
    assert unique_memory_count(shuffled) == unique_memory_count(items)
    assert unique_memory_count(items) == len(group_orbits(items, Group.COMPLEMENT))
