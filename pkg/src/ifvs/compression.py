"""Iterative-compression decision solver for independent feedback vertex sets.

The graph is rebuilt one vertex at a time.  After each insertion the new
vertex plus the previous prefix optimum forms a feedback vertex set of
the grown prefix (deleting it restores the old forest), which
:func:`ifvs.extension.min_ifvs_given_fvs` turns into the new prefix
optimum.  Any induced subgraph of a yes-instance is a yes-instance, so
the loop can answer "no" the moment a prefix optimum exceeds the budget,
and "absent" the moment a prefix has no solution at all.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable, TextIO

from .extension import min_ifvs_given_fvs
from .graph import Graph, mask_of


@dataclass
class StepRecord:
    prefix: int  # number of vertices in the grown graph
    fvs_size: int  # size of the FVS handed to the extension stage
    min_ifvs: int | None  # prefix optimum (None: no solution exists)
    candidates: int
    dp_cells: int
    fallbacks: int


@dataclass
class SolveStats:
    candidates: int = 0
    dp_cells: int = 0
    fallbacks: int = 0
    fallback_tests: int = 0
    ms: float = 0.0
    f_max: int = 0  # largest FVS handed to the extension stage
    steps: list[StepRecord] = field(default_factory=list)


@dataclass
class SolveOutcome:
    decision: str  # "yes" | "no" | "absent"
    certificate: tuple[int, ...] | None
    stats: SolveStats

    def __post_init__(self) -> None:
        if self.decision == "yes":
            assert self.certificate is not None


def _prefix_graph(g: Graph, order: list[int], size: int) -> Graph:
    """Subgraph on the first ``size`` vertices of ``order``.

    Local vertex ``i`` is ``order[i]``, so earlier prefixes keep their ids.
    """
    pos = {v: i for i, v in enumerate(order[:size])}
    edges = [
        (pos[u], pos[v]) for u, v in g.edges if u in pos and v in pos
    ]
    return Graph(size, edges)


def _resolve_order(g: Graph, order, seed) -> list[int]:
    if order is None:
        order = list(range(g.n))
    else:
        order = list(order)
        if sorted(order) != list(range(g.n)):
            raise ValueError("order must be a permutation of the vertex ids")
    if seed is not None:
        random.Random(seed).shuffle(order)
    return order


def solve_ifvs(
    g: Graph,
    k: int,
    *,
    order: list[int] | None = None,
    seed: int | None = None,
    threads: int = 1,
    trace: TextIO | None = None,
    progress: Callable[[str], None] | None = None,
) -> SolveOutcome:
    """Decide whether ``g`` has an independent feedback vertex set of size <= k.

    Returns decision "yes" with a certificate, "no" when the optimum
    exceeds ``k``, or "absent" when no such set of any size exists.
    Insertion order defaults to the input order; ``seed`` shuffles it
    reproducibly.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    t0 = time.perf_counter()
    stats = SolveStats()
    order = _resolve_order(g, order, seed)

    decision = "yes"
    current: tuple[int, ...] = ()  # prefix optimum, local ids
    # prefixes with at most two vertices are acyclic, so the empty set is
    # their optimum and the loop starts at size three
    for size in range(3, g.n + 1):
        prefix = _prefix_graph(g, order, size)
        fvs_input = mask_of(current) | 1 << (size - 1)
        assert prefix.is_fvs(fvs_input)
        outcome = min_ifvs_given_fvs(prefix, fvs_input, threads=threads, trace=trace)

        fvs_size = fvs_input.bit_count()
        stats.f_max = max(stats.f_max, fvs_size)
        stats.candidates += outcome.stats.candidates_scanned
        stats.dp_cells += outcome.stats.dp_cells
        stats.fallbacks += outcome.stats.fallbacks
        stats.fallback_tests += outcome.stats.fallback_tests
        stats.steps.append(
            StepRecord(
                prefix=size,
                fvs_size=fvs_size,
                min_ifvs=outcome.size,
                candidates=outcome.stats.candidates_scanned,
                dp_cells=outcome.stats.dp_cells,
                fallbacks=outcome.stats.fallbacks,
            )
        )
        if progress is not None:
            shown = "-" if outcome.size is None else str(outcome.size)
            progress(
                f"step {size}: {size} vertices, fvs = {fvs_size}, min = {shown}, "
                f"candidates = {outcome.stats.candidates_scanned}, "
                f"cells = {outcome.stats.dp_cells}"
            )
        if outcome.absent:
            decision = "absent"
            break
        current = outcome.certificate  # type: ignore[assignment]
        if len(current) > k:
            decision = "no"
            break

    certificate = None
    if decision == "yes":
        certificate = tuple(sorted(order[p] for p in current))
        assert g.is_ifvs(mask_of(certificate))
        assert len(certificate) <= k
    stats.ms = (time.perf_counter() - t0) * 1000.0
    return SolveOutcome(decision=decision, certificate=certificate, stats=stats)


def decide_prefix_chain(
    g: Graph,
    k: int | None = None,
    *,
    order: list[int] | None = None,
    seed: int | None = None,
    threads: int = 1,
) -> list[int | None]:
    """Prefix optima along the compression chain, for diagnostics.

    Entry ``j`` is the minimum solution size of the prefix with ``j + 2``
    vertices (``None``: that prefix has no solution).  With a budget
    ``k`` the chain stops right after the first entry exceeding it, as
    the solver would; without one it covers every prefix.
    """
    order = _resolve_order(g, order, seed)
    if g.n < 2:
        return []
    chain: list[int | None] = [0]  # two vertices hold at most one edge
    current: tuple[int, ...] = ()
    for size in range(3, g.n + 1):
        prefix = _prefix_graph(g, order, size)
        fvs_input = mask_of(current) | 1 << (size - 1)
        outcome = min_ifvs_given_fvs(prefix, fvs_input, threads=threads)
        chain.append(outcome.size)
        if outcome.absent:
            break
        current = outcome.certificate  # type: ignore[assignment]
        if k is not None and outcome.size > k:
            break
    return chain
