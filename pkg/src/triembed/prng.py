"""Deterministic 64-bit linear congruential generator.

Used for seeded orientation sampling so that goldens are portable: the
constants are Knuth's MMIX multiplier/increment, state advances as
state = (state * MULT + INC) mod 2**64, and each orientation flag is the top
bit of one step.
"""

from __future__ import annotations

MULT = 6364136223846793005
INC = 1442695040888963407
_MASK = (1 << 64) - 1


class Lcg64:
    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state * MULT + INC) & _MASK
        return self.state

    def next_bit(self) -> int:
        return self.next_u64() >> 63

    def flags(self, n: int) -> tuple[bool, ...]:
        return tuple(bool(self.next_bit()) for _ in range(n))

    def mask(self, n_bits: int) -> int:
        out = 0
        for i in range(n_bits):
            out |= self.next_bit() << i
        return out
