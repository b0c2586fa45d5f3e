import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from circmem.catalog import paper_catalog
from circmem.circulant import BipolarState, build_circulant, local_field, row_sum
from circmem.dynamics import (
    AsynchronousSweep,
    Cycle,
    FixedPoint,
    MaxItersExceeded,
    Synchronous,
    async_sweep,
    converge,
    is_fixed_point,
    sync_update,
    threshold,
)
from circmem.errors import InvalidPermutation, SizeMismatch
from circmem.symmetry import complement, rotate

S = BipolarState.from_string
W4 = build_circulant([0, 2, -5, 3])


@pytest.mark.parametrize("f, out", [(0, 1), (6, 1), (-6, -1)])
def test_threshold(f, out):
    assert threshold(f) == out


def test_sync_update_examples():
    assert sync_update(W4, S("++--")) == S("++--")
    assert sync_update(W4, S("----")) == S("++++")
    assert sync_update(W4, S("+-+-")) == S("-+-+")


def test_async_sweep_from_all_minus():
    # Hand evaluation, order 0..3: f0=0 -> +; f1=3-2+5=6 -> +; f2=-5+3-2=-4 -> -; f3=2-5-3=-6 -> -
    assert async_sweep(W4, S("----"), (0, 1, 2, 3)) == S("++--")
    assert async_sweep(W4, S("----")) == S("++--")


def test_async_sweep_single_neuron():
    assert async_sweep(build_circulant([0]), S("-")) == S("+")


def test_async_sweep_rejects_bad_order():
    with pytest.raises(InvalidPermutation):
        async_sweep(W4, S("++++"), (0, 1, 1, 3))
    with pytest.raises(InvalidPermutation):
        async_sweep(W4, S("++++"), (0, 1, 2))


def test_size_mismatch():
    for fn in (sync_update, is_fixed_point, async_sweep):
        with pytest.raises(SizeMismatch):
            fn(W4, S("+++"))


def test_is_fixed_point_examples():
    assert is_fixed_point(W4, S("++--"))
    assert not is_fixed_point(W4, S("----"))
    assert is_fixed_point(build_circulant([0, 2, -5, 4]), S("----"))


def _test_matrices():
    rng = random.Random(3)
    mats = [e.row.c for e in paper_catalog() if e.n <= 10]
    for _ in range(20):
        n = rng.randint(1, 10)
        mats.append((0, *(rng.randint(-6, 6) for _ in range(n - 1))))
    return mats


def test_fixed_point_agreement_all_states():
    rng = random.Random(5)
    for c in _test_matrices():
        W = build_circulant(c)
        n = len(c)
        order = list(range(n))
        rng.shuffle(order)
        for spins in itertools.product((1, -1), repeat=n):
            s = BipolarState(spins)
            fixed = is_fixed_point(W, s)
            assert fixed == (sync_update(W, s) == s)
            assert fixed == (async_sweep(W, s) == s) == (async_sweep(W, s, order) == s)


rows = st.integers(1, 10).flatmap(
    lambda n: st.lists(st.integers(-8, 8), min_size=n - 1, max_size=n - 1).map(lambda t: [0] + t)
)
row_and_state = rows.flatmap(lambda c: st.tuples(
    st.just(c), st.lists(st.sampled_from([1, -1]), min_size=len(c), max_size=len(c))
))


@settings(max_examples=300)
@given(row_and_state, st.integers(-12, 12))
def test_sync_update_shift_equivariant(args, k):
    c, spins = args
    W = build_circulant(c)
    s = BipolarState(tuple(spins))
    assert sync_update(W, rotate(s, k)) == rotate(sync_update(W, s), k)


@settings(max_examples=300)
@given(row_and_state)
def test_complement_covariance_away_from_ties(args):
    c, spins = args
    W = build_circulant(c)
    s = BipolarState(tuple(spins))
    if 0 not in local_field(W, s):
        assert sync_update(W, complement(s)) == complement(sync_update(W, s))


@settings(max_examples=200)
@given(rows)
def test_tie_asymmetry(c):
    W = build_circulant(c)
    n = len(c)
    plus, minus = BipolarState.all_plus(n), BipolarState.all_minus(n)
    total = row_sum(c)
    if total == 0:
        assert is_fixed_point(W, plus) and not is_fixed_point(W, minus)
    elif total > 0:
        assert is_fixed_point(W, plus) and is_fixed_point(W, minus)


def test_class1_vs_class2_tie_behaviour():
    W2 = build_circulant([0, 2, -5, 4])
    assert is_fixed_point(W4, S("++++")) and not is_fixed_point(W4, S("----"))
    assert is_fixed_point(W2, S("++++")) and is_fixed_point(W2, S("----"))


def test_converge_fixed_point():
    assert converge(W4, S("++--"), Synchronous()) == FixedPoint(S("++--"), 0)


def test_converge_two_cycle():
    out = converge(W4, S("+-+-"), Synchronous())
    assert out == Cycle(2, S("+-+-"), 0)
    assert sync_update(W4, sync_update(W4, S("+-+-"))) == S("+-+-")


def test_converge_transient_then_fixed():
    assert converge(W4, S("----")) == FixedPoint(S("++++"), 1)


def test_converge_async_default_order():
    assert converge(W4, S("----"), AsynchronousSweep()) == FixedPoint(S("++--"), 1)


def test_converge_async_seeded_order_is_reproducible():
    a = AsynchronousSweep.seeded(4, 99)
    assert a == AsynchronousSweep.seeded(4, 99)
    assert sorted(a.order) == [0, 1, 2, 3]
    assert converge(W4, S("-+--"), a) == converge(W4, S("-+--"), AsynchronousSweep.seeded(4, 99))


def test_converge_rejects_zero_iters():
    with pytest.raises(ValueError):
        converge(W4, S("++--"), Synchronous(), max_iters=0)


def test_converge_max_iters_exceeded():
    out = converge(W4, S("+-+-"), Synchronous(), max_iters=1)
    assert out == MaxItersExceeded(S("-+-+"))


def test_sync_converge_terminates_within_state_count():
    rng = random.Random(9)
    for c in _test_matrices():
        W = build_circulant(c)
        n = len(c)
        for _ in range(10):
            s0 = BipolarState(tuple(rng.choice((1, -1)) for _ in range(n)))
            out = converge(W, s0, Synchronous(), max_iters=1 << n)
            assert isinstance(out, (FixedPoint, Cycle))
            if isinstance(out, FixedPoint):
                assert is_fixed_point(W, out.state)
            else:
                assert out.period >= 2
