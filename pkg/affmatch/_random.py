# coding:utf-8
"""
Platform-independent pseudo-random stream for market generation.

SplitMix64: the state advances by the golden-ratio increment
``0x9E3779B97F4A7C15`` modulo 2**64 and each output is the state passed
through the finalizer::

    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    z = z ^ (z >> 31)

all arithmetic modulo 2**64. Bounded integers use rejection sampling on
the top of the 64-bit range so every residue is equally likely; shuffles
are Fisher-Yates from the last position down. Python integers make the
stream bit-for-bit identical on every platform.
"""
from typing import Any, List, MutableSequence

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


class SplitMix64:

    def __init__(self, seed: int) -> None:
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + _GOLDEN) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)``."""
        if bound < 1:
            raise ValueError("bound must be positive")
        span = _MASK + 1
        limit = span - span % bound
        while True:
            value = self.next_u64()
            if value < limit:
                return value % bound

    def random(self) -> float:
        """Uniform float in ``[0, 1)`` with 53 random bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def shuffle(self, items: MutableSequence[Any]) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]

    def permutation(self, n: int) -> List[int]:
        items = list(range(n))
        self.shuffle(items)
        return items
