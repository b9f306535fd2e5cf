"""Shared graph builders for the test suite."""

from __future__ import annotations

import random

from ifvs import Graph


def cycle(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def star(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def petersen() -> Graph:
    outer = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]
    inner = [(5, 7), (7, 9), (9, 6), (6, 8), (8, 5)]
    spokes = [(i, i + 5) for i in range(5)]
    return Graph(10, outer + inner + spokes)


def random_graph(rng: random.Random, n_max: int = 12, m_cap: int | None = None) -> Graph:
    n = rng.randint(1, n_max)
    limit = n * (n - 1) // 2
    m = rng.randint(0, min(limit, m_cap if m_cap is not None else 2 * n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return Graph(n, rng.sample(pairs, m))


# smallest instances on which per-tree table optima assemble into an
# invalid certificate, exercising the validity gate and fallback
def gate_cross_tree() -> tuple[Graph, int]:
    # C_4 with the FVS on opposite corners: both one-vertex trees link
    # both components
    from ifvs import mask_of

    return cycle(4), mask_of([1, 3])


def gate_forced_fallback() -> tuple[Graph, int]:
    # hub 2 has a doubled link into component {0,5}, so it cannot be
    # kept; deleting it merges two kept regions that both touch {0,5}
    # and {1}
    from ifvs import mask_of

    g = Graph(6, [(0, 5), (2, 0), (2, 5), (2, 3), (2, 4), (3, 0), (3, 1), (4, 0), (4, 1)])
    return g, mask_of([0, 1, 5])


def gate_single_tree() -> tuple[Graph, int]:
    # hub 2 with children 3, 4, each linked to both components {0}, {1}
    from ifvs import mask_of

    g = Graph(5, [(2, 3), (2, 4), (3, 0), (3, 1), (4, 0), (4, 1)])
    return g, mask_of([0, 1])
