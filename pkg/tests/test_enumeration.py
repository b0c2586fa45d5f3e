import random

import numpy as np
import pytest

from circmem._gray import gray_block
from circmem.catalog import catalog_entry, paper_catalog
from circmem.circulant import build_circulant
from circmem.enumeration import (
    GRAY,
    NAIVE,
    block_bounds,
    enumerate_gray,
    enumerate_naive,
    enumerate_partitioned,
)
from circmem.errors import SizeTooLarge
from circmem.symmetry import rotate_index

from conftest import brute_force_fixed_points, random_row

CLASS1 = ["++++", "++--", "+--+", "-++-", "--++"]


def test_naive_4x4_class1():
    fps, stats = enumerate_naive([0, 2, -5, 3])
    assert fps.strings() == CLASS1
    assert stats.method == NAIVE
    assert stats.states_examined == 16 and stats.fixed_found == 5


def test_naive_4x4_class2():
    fps, _ = enumerate_naive([0, 2, -5, 4])
    assert fps.strings() == CLASS1 + ["----"]


def test_zero_matrix_keeps_only_all_plus():
    fps, _ = enumerate_naive([0, 0])
    assert fps.strings() == ["++"]


@pytest.mark.parametrize("row, count", [
    ([0, -2, 3, 3, -2], 7),
    ([0, -2, -1, 4, 5, 1, -2, -4], 16),
])
def test_gray_counts(row, count):
    fps, stats = enumerate_gray(row)
    assert len(fps) == count
    assert stats.method == GRAY and stats.states_examined == 1 << len(row)


def test_empty_fixed_set():
    assert brute_force_fixed_points([0, -3, -2]) == []
    assert len(enumerate_gray([0, -3, -2])[0]) == 0
    assert len(enumerate_naive([0, -3, -2])[0]) == 0


def test_gray_matches_naive_and_brute_force(rng):
    for _ in range(150):
        n = rng.randint(1, 10)
        c = random_row(rng, n)
        expected = brute_force_fixed_points(c)
        naive, _ = enumerate_naive(c)
        gray, _ = enumerate_gray(c)
        assert naive.strings() == gray.strings() == expected


def test_catalog_against_brute_force():
    for e in paper_catalog():
        if e.n > 11:
            continue
        assert enumerate_gray(e.row)[0].strings() == brute_force_fixed_points(e.row.c)


def test_partitioned_degenerate_and_paper_10x10():
    row = catalog_entry("10x10").row
    one, _ = enumerate_partitioned(row, 1)
    eight, stats = enumerate_partitioned(row, 8)
    assert one == eight == enumerate_gray(row)[0]
    assert stats.partitions == 8 and stats.states_examined == 1024
    # reported count is 24; enumeration finds more (see suite discrepancy)
    assert len(eight) == 34


def test_partitioned_non_power_of_two_12x12():
    row = catalog_entry("12x12").row
    base, _ = enumerate_partitioned(row, 1)
    for k in (3, 5, 7, 13):
        assert enumerate_partitioned(row, k)[0] == base


def test_more_partitions_than_states():
    fps, stats = enumerate_partitioned([0, 2, -5, 3], 40)
    assert fps.strings() == CLASS1
    assert stats.states_examined == 16


def test_worker_count_does_not_change_result():
    c = random_row(random.Random(1), 14)
    ref = enumerate_partitioned(c, 6, workers=1)[0]
    assert enumerate_partitioned(c, 6, workers=3)[0] == ref
    assert enumerate_partitioned(c, 6, workers=6)[0] == ref


@pytest.mark.parametrize("n, parts", [(4, 1), (4, 3), (10, 8), (7, 7), (3, 20)])
def test_block_bounds_cover_range(n, parts):
    bounds = block_bounds(n, parts)
    assert bounds[0][0] == 0 and bounds[-1][1] == 1 << n
    assert all(a[1] == b[0] for a, b in zip(bounds, bounds[1:]))


def test_block_bounds_rejects_zero():
    with pytest.raises(ValueError):
        block_bounds(4, 0)


def test_gray_block_visits_each_state_once():
    c = np.array([0, 1, -2, 3, -1, 2], dtype=np.int64)
    whole = sorted(gray_block(c, 0, 64, 1 << 16)[0].tolist())
    parts = []
    for a, b in block_bounds(6, 5):
        parts.extend(gray_block(c, a, b, 1 << 16)[0].tolist())
    assert sorted(parts) == whole


def test_gray_walk_checkpoints_agree():
    c = np.array(random_row(random.Random(8), 16), dtype=np.int64)
    found, checks, fails = gray_block(c, 0, 1 << 16, 97)
    assert checks == -(-(1 << 16) // 97)
    assert fails == 0
    assert sorted(found.tolist()) == list(enumerate_naive(c.tolist())[0].states)


def test_default_checkpoint_interval():
    c = random_row(random.Random(2), 18)
    _, stats = enumerate_partitioned(c, 2)
    assert stats.checkpoints == 4 and stats.checkpoint_failures == 0


def test_rotation_closure_of_results(rng):
    for _ in range(100):
        n = rng.randint(1, 12)
        fps, _ = enumerate_gray(random_row(rng, n))
        present = set(fps.states)
        for s in fps.states:
            assert all(rotate_index(s, k, n) in present for k in range(n))


def test_size_caps():
    with pytest.raises(SizeTooLarge) as info:
        enumerate_naive([0] * 23)
    assert info.value.cap == 22
    with pytest.raises(SizeTooLarge) as info:
        enumerate_gray([0] * 29)
    assert info.value.cap == 28
    with pytest.raises(SizeTooLarge):
        enumerate_partitioned([0] * 29, 4)


def test_naive_cap_is_configurable():
    assert len(enumerate_naive([0, 1, 1], max_n=3)[0]) == len(brute_force_fixed_points([0, 1, 1]))
    with pytest.raises(SizeTooLarge):
        enumerate_naive([0, 1, 1], max_n=2)


def test_fixed_point_set_membership():
    fps, _ = enumerate_gray([0, 2, -5, 3])
    assert 0b0011 in fps
    assert 0b1111 not in fps
    assert [str(s) for s in fps.bipolar()] == CLASS1


def test_matrix_or_row_accepted():
    assert enumerate_gray(build_circulant([0, 2, -5, 3]))[0] == enumerate_gray([0, 2, -5, 3])[0]
