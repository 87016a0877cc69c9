"""Seeded 64-bit generator shared by every randomized routine.

SplitMix64 (Steele, Lea, Flood 2014), defined by the recurrence::

    state = (state + 0x9E3779B97F4A7C15) mod 2**64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2**64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) mod 2**64
    output = z ^ (z >> 31)

Bounded integers are drawn by rejection on the smallest power-of-two mask
covering the range, so results depend only on the output stream.
"""

MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:
    def __init__(self, seed):
        self.state = seed & MASK64

    def next_u64(self):
        self.state = (self.state + _GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, bound):
        """Uniform integer in [0, bound) for 1 <= bound <= 2**64."""
        if bound < 1 or bound > 1 << 64:
            raise ValueError(f"bound out of range: {bound}")
        mask = (1 << (bound - 1).bit_length()) - 1
        while True:
            r = self.next_u64() & mask
            if r < bound:
                return r

    def integer(self, lo, hi):
        """Uniform integer in the closed range [lo, hi]."""
        span = hi - lo + 1
        if span <= 1 << 64:
            return lo + self.below(span)
        # wide ranges: concatenate 64-bit words, then reject
        nbits = (span - 1).bit_length()
        while True:
            r = 0
            for _ in range((nbits + 63) // 64):
                r = (r << 64) | self.next_u64()
            r &= (1 << nbits) - 1
            if r < span:
                return lo + r
