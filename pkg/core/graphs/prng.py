from fractions import Fraction

MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 (Steele, Lea, Flood 2014) with its published constants.

    Pure integer arithmetic, so a seed gives the same stream on every platform.
    """

    GOLDEN_GAMMA = 0x9E3779B97F4A7C15
    MIX_1 = 0xBF58476D1CE4E5B9
    MIX_2 = 0x94D049BB133111EB

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + self.GOLDEN_GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * self.MIX_1) & MASK64
        z = ((z ^ (z >> 27)) * self.MIX_2) & MASK64
        return z ^ (z >> 31)

    def bernoulli(self, p: Fraction) -> bool:
        """True with probability exactly p (up to the 2^-64 grid): x/2^64 < p."""
        x = self.next_u64()
        return x * p.denominator < p.numerator << 64

    def below(self, bound: int) -> int:
        """Integer in [0, bound) by rejection, no modulo bias."""
        if bound <= 0:
            raise ValueError(f"bound must be positive, got {bound}")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % bound
