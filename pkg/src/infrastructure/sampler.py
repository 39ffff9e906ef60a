"""
Seeded Involution Sampler

Uniform random involutions of Sym([n]) for sweeps too large to enumerate.
The transposition count a is drawn with probability proportional to the number
of involutions with a transpositions; a uniform shuffle of [n] then pairs up its
first 2a points. The same (n, seed) always yields the same stream.
"""

import logging
from typing import Iterator

import numpy as np

from src.domain.errors import DomainError
from src.domain.perm import InvolutionShape, involution_count

logger = logging.getLogger(__name__)


class InvolutionSampler:
    def __init__(self, n: int, seed: int):
        if n < 2:
            raise DomainError(f"Sym([{n}]) has no involutions")
        self.n = n
        self.seed = seed
        self._rng = np.random.default_rng(seed)
        self._counts = np.arange(1, n // 2 + 1)
        weights = np.array([float(involution_count(n, int(a))) for a in self._counts])
        self._probabilities = weights / weights.sum()

    def sample(self) -> InvolutionShape:
        a = int(self._rng.choice(self._counts, p=self._probabilities))
        points = [int(x) for x in self._rng.permutation(self.n) + 1]
        pairs = sorted(
            (min(points[2 * i], points[2 * i + 1]), max(points[2 * i], points[2 * i + 1]))
            for i in range(a)
        )
        return InvolutionShape(
            degree=self.n,
            transpositions=tuple(pairs),
            fixed_points=tuple(sorted(points[2 * a:])),
        )

    def draw(self, count: int) -> Iterator[InvolutionShape]:
        logger.debug(f"Sampling {count} involutions of Sym([{self.n}]) with seed {self.seed}")
        for _ in range(count):
            yield self.sample()
