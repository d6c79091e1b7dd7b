from typing import Sequence

import numpy as np


class SeededRandom:
    """
    Per-estimator random source. Every draw an estimator makes goes through
    one instance, so a run is reproducible from its seed alone.
    """

    def __init__(self, seed: int):
        self.seed = seed
        self._rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed % 2 ** 64)))

    def bernoulli(self, p: float) -> bool:
        """One uniform draw; true with probability p."""
        return self._rng.random() < p

    def discrete_uniform(self, n: int) -> int:
        """Uniform index in [0, n). numpy's bounded integer draw is unbiased."""
        return int(self._rng.integers(0, n))

    def weighted_index(self, weights: Sequence[float]) -> int:
        """Index i with probability weights[i] / sum(weights), from one uniform draw."""
        total = float(sum(weights))
        target = self._rng.random() * total
        running = 0.0
        for i, w in enumerate(weights):
            running += w
            if target < running:
                return i
        # float round-off on the last bucket
        return len(weights) - 1
