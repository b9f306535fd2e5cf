"""Rooting and binarization of the forest left after deleting an FVS.

Deleting a feedback vertex set ``f`` from a graph leaves a forest.  The
dynamic program wants every node of that forest to have at most two
children, so each vertex ``u`` with ``d > 2`` children is rewired: its
children are detached, a chain of ``d - 1`` auxiliary *white* nodes is
inserted below ``u``, the bottom white node adopts the first two original
children, and every other white node adopts the previous white node plus
one more original child.  White nodes all stand for (are *equal to*) the
original vertex ``u``; original vertices stay as *black* nodes.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graph import Graph, bits


class NotAForestError(ValueError):
    """The supposed feedback vertex set leaves a cyclic remainder."""


@dataclass(frozen=True)
class RootedForest:
    """The forest on ``V - f``, each tree rooted at its smallest vertex id."""

    roots: tuple[int, ...]
    parent: dict[int, int | None]
    children: dict[int, tuple[int, ...]]

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self.parent))


@dataclass(frozen=True)
class BinaryNode:
    node_id: int
    white: bool
    equal_to: int  # original vertex this node stands for
    parent: int | None
    children: tuple[int, ...]

    @property
    def color(self) -> str:
        return "white" if self.white else "black"


@dataclass(frozen=True)
class BinaryForest:
    nodes: tuple[BinaryNode, ...]
    roots: tuple[int, ...]
    black_count: int
    white_count: int

    def __len__(self) -> int:
        return len(self.nodes)


def root_forest(g: Graph, f: int) -> RootedForest:
    """Root each tree of the forest induced on ``V - f``.

    Roots are the smallest vertex id per tree; children are ordered by
    ascending vertex id.  Raises :class:`NotAForestError` if ``f`` is not
    a feedback vertex set of ``g``.
    """
    if not g.is_fvs(f):
        raise NotAForestError("deleting the given set leaves a cycle")
    remaining = g.vertex_mask & ~f
    parent: dict[int, int | None] = {}
    children: dict[int, tuple[int, ...]] = {}
    roots: list[int] = []
    seen = 0
    for r in bits(remaining):
        if seen >> r & 1:
            continue
        roots.append(r)
        parent[r] = None
        seen |= 1 << r
        queue = deque([r])
        while queue:
            v = queue.popleft()
            kids = []
            for u in bits(g.adj[v] & remaining):
                if not seen >> u & 1:
                    seen |= 1 << u
                    parent[u] = v
                    kids.append(u)
            children[v] = tuple(kids)
            queue.extend(kids)
    return RootedForest(tuple(roots), parent, children)


def binarize(forest: RootedForest) -> BinaryForest:
    """Convert a rooted forest into an equivalent binary forest.

    Every original vertex becomes a black node (node ids follow ascending
    vertex id); white chains are appended in creation order.  Vertices
    with at most two children are left untouched.
    """
    originals = forest.vertices
    node_of = {v: i for i, v in enumerate(originals)}
    white: list[bool] = [False] * len(originals)
    equal_to: list[int] = list(originals)
    kids: list[tuple[int, ...]] = [()] * len(originals)

    for v in originals:
        ch = forest.children[v]
        d = len(ch)
        if d <= 2:
            kids[node_of[v]] = tuple(node_of[c] for c in ch)
            continue
        # chain of d-1 white stand-ins for v, bottom-up
        w_ids = []
        for _ in range(d - 1):
            w_ids.append(len(white))
            white.append(True)
            equal_to.append(v)
            kids.append(())
        kids[w_ids[0]] = (node_of[ch[0]], node_of[ch[1]])
        for t in range(1, d - 1):
            kids[w_ids[t]] = (w_ids[t - 1], node_of[ch[t + 1]])
        kids[node_of[v]] = (w_ids[-1],)

    parent: list[int | None] = [None] * len(white)
    for nid, ch in enumerate(kids):
        for c in ch:
            parent[c] = nid

    nodes = tuple(
        BinaryNode(i, white[i], equal_to[i], parent[i], kids[i])
        for i in range(len(white))
    )
    return BinaryForest(
        nodes=nodes,
        roots=tuple(node_of[r] for r in forest.roots),
        black_count=len(originals),
        white_count=len(white) - len(originals),
    )


def contract_white_chains(bf: BinaryForest) -> RootedForest:
    """Undo :func:`binarize`: fold each white chain back into its vertex."""
    parent: dict[int, int | None] = {}
    children: dict[int, tuple[int, ...]] = {}
    roots = []

    def original_children(nid: int) -> list[int]:
        out: list[int] = []
        for c in bf.nodes[nid].children:
            node = bf.nodes[c]
            if node.white:
                out.extend(original_children(c))
            else:
                out.append(node.equal_to)
        return out

    for node in bf.nodes:
        if node.white:
            continue
        v = node.equal_to
        ch = original_children(node.node_id)
        children[v] = tuple(ch)
        for c in ch:
            parent[c] = v
        if node.parent is None:
            roots.append(v)
            parent.setdefault(v, None)
    return RootedForest(tuple(sorted(roots)), parent, children)


def dump_forest(bf: BinaryForest) -> str:
    """One line per node: ``id color equal_to parent [children]``."""
    lines = []
    for node in bf.nodes:
        par = "-" if node.parent is None else str(node.parent)
        ch = " ".join(str(c) for c in node.children)
        lines.append(f"{node.node_id} {node.color} {node.equal_to} {par} [{ch}]")
    return "\n".join(lines) + ("\n" if lines else "")
