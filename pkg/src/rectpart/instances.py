"""Seeded random instance generators.

Two families span the interesting range of area lists: ``uniform`` draws make
the areas similar in size, while ``geometric`` decay with ratio q makes them
shrink quickly (small q) or slowly (q near 1). Everything is driven by a
PCG64 generator seeded directly with the spec's 64-bit seed, so the same spec
reproduces the same instance bit for bit on any platform.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .geometry import Instance, Rect

FAMILIES = ("uniform", "geometric")


@dataclass(frozen=True)
class GenSpec:
    """Recipe for one random instance."""

    n: int
    family: str
    seed: int
    container: Rect
    q: float = 0.5

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"n must be at least 1, got {self.n}")
        if self.family not in FAMILIES:
            raise ValueError(f"family must be one of {FAMILIES}, got {self.family!r}")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in an unsigned 64-bit integer")
        if self.family == "geometric" and not 0.0 < self.q <= 1.0:
            raise ValueError(f"q must lie in (0, 1], got {self.q}")


def generate(spec: GenSpec, *, jitter: bool = True) -> Instance:
    """Draw the area list for ``spec``, rescaled to fill the container exactly.

    uniform: independent draws from (0, 1].
    geometric: q**i decay, each term multiplied by independent jitter from
    [0.9, 1.1]. ``jitter=False`` turns the noise off so analytic cases stay
    exact. Very small q with large n underflows to zero areas and is
    rejected by Instance validation.
    """
    rng = np.random.Generator(np.random.PCG64(spec.seed))
    if spec.family == "uniform":
        raw = 1.0 - rng.random(spec.n)
    else:
        raw = spec.q ** np.arange(1, spec.n + 1, dtype=float)
        if jitter:
            raw = raw * rng.uniform(0.9, 1.1, spec.n)
    total = float(raw.sum())
    area = spec.container.area
    return Instance(spec.container, tuple(float(v) / total * area for v in raw))
