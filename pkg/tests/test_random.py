# coding:utf-8
import pytest

from affmatch._random import SplitMix64


def test_splitmix64_reference_value():
    assert SplitMix64(0).next_u64() == 0xE220A8397B1DCDAF


def test_splitmix64_is_deterministic():
    a, b = SplitMix64(42), SplitMix64(42)
    assert [a.next_u64() for _ in range(100)] == \
        [b.next_u64() for _ in range(100)]
    assert SplitMix64(1).next_u64() != SplitMix64(2).next_u64()


def test_below():
    rng = SplitMix64(7)
    for bound in range(1, 20):
        for i in range(50):
            assert 0 <= rng.below(bound) < bound
    with pytest.raises(ValueError):
        rng.below(0)


def test_random():
    rng = SplitMix64(9)
    for i in range(1000):
        value = rng.random()
        assert 0.0 <= value < 1.0


def test_permutation():
    rng = SplitMix64(3)
    for n in range(8):
        assert sorted(rng.permutation(n)) == list(range(n))
    seen = {tuple(rng.permutation(3)) for i in range(200)}
    assert len(seen) == 6
