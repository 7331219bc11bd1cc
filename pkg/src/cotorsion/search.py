"""Deterministic bounded search order for integer coefficient vectors.

Every existence proof backing this package is non-effective, so searches
scan coefficient boxes outward shell by shell and fail loudly when the
configured bound is exhausted.
"""

from __future__ import annotations

from itertools import product
from typing import Iterator


def shells(dim: int, bound: int) -> Iterator[tuple[int, ...]]:
    """All integer vectors with max-norm <= bound, by increasing max-norm.

    Within one shell the order is lexicographic, so the overall order is
    total and reproducible.
    """
    yield (0,) * dim
    for radius in range(1, bound + 1):
        for vec in product(range(-radius, radius + 1), repeat=dim):
            if max(abs(c) for c in vec) == radius:
                yield vec
