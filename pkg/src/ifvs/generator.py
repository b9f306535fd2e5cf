"""Reproducible random graph generation for tests and benchmarks."""

from __future__ import annotations

import random

from .graph import Graph


def generate(n: int, m: int, seed: int = 0) -> Graph:
    """Uniform random simple graph with exactly ``m`` edges.

    The edge set is drawn by ``random.Random(seed).sample`` from the
    lexicographically ordered list of all vertex pairs (Mersenne
    Twister), so a given ``(n, m, seed)`` triple always produces the
    same graph.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    limit = n * (n - 1) // 2
    if not 0 <= m <= limit:
        raise ValueError(f"m must be in [0, {limit}] for n={n}")
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = random.Random(seed).sample(pairs, m)
    return Graph(n, chosen)
