"""Reduction from the plain FVS problem to the independent variant.

Subdividing every edge once turns an instance of the feedback vertex set
problem into an equivalent independent-FVS instance with the same
budget: original vertices are pairwise non-adjacent afterwards, and any
selected subdivision vertex can be swapped for either endpoint of its
edge without uncovering a cycle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .compression import SolveOutcome, solve_ifvs
from .graph import Graph, mask_of


@dataclass(frozen=True)
class SubdivisionMap:
    """Bookkeeping for one subdivision pass.

    Subdivision vertex ``original_n + i`` splits ``edges[i]``; the
    resulting graph has ``n + m`` vertices and ``2 m`` edges.
    """

    original_n: int
    edges: tuple[tuple[int, int], ...]

    def edge_of(self, x: int) -> tuple[int, int]:
        return self.edges[x - self.original_n]

    def map_back(self, vertices) -> tuple[int, ...]:
        """Replace subdivision vertices by the lower-id endpoint, dedupe."""
        out = set()
        for v in vertices:
            out.add(v if v < self.original_n else self.edge_of(v)[0])
        return tuple(sorted(out))


def subdivide(g: Graph) -> tuple[Graph, SubdivisionMap]:
    """Replace every edge ``{u, v}`` by a path ``u - x - v``."""
    edges = []
    for i, (u, v) in enumerate(g.edges):
        x = g.n + i
        edges.append((u, x))
        edges.append((x, v))
    return Graph(g.n + g.m, edges), SubdivisionMap(g.n, g.edges)


def solve_fvs(g: Graph, k: int, **kwargs) -> SolveOutcome:
    """Decide whether ``g`` has a feedback vertex set of size <= k.

    Runs the independent-set solver on the subdivided graph and maps the
    certificate back.  Keyword arguments pass through to
    :func:`ifvs.compression.solve_ifvs`.
    """
    sub, smap = subdivide(g)
    outcome = solve_ifvs(sub, k, **kwargs)
    if outcome.decision == "absent":
        # cannot happen: any minimum FVS of g is an IFVS of the subdivision
        raise AssertionError("subdivided graph reported no solution")
    if outcome.decision != "yes":
        return SolveOutcome("no", None, outcome.stats)
    certificate = smap.map_back(outcome.certificate)
    assert g.is_fvs(mask_of(certificate))
    assert len(certificate) <= k
    return SolveOutcome("yes", certificate, outcome.stats)
