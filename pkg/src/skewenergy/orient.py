"""Orientations, skew-adjacency matrices, cycle parity and switching."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .graph import Graph, is_unicyclic, unique_cycle

PLUS = "plus"
MINUS = "minus"
EVENLY = "evenly"
ODDLY = "oddly"


@dataclass(frozen=True)
class OrientedGraph:
    """A graph with every edge given a direction.

    ``arcs[i]`` is the ``(tail, head)`` pair for ``base.edges[i]``.
    """

    base: Graph
    arcs: tuple

    def __post_init__(self):
        arcs = tuple(tuple(a) for a in self.arcs)
        if len(arcs) != self.base.m:
            raise ValueError(f"expected {self.base.m} arcs, got {len(arcs)}")
        for (u, v), (t, h) in zip(self.base.edges, arcs):
            if (min(t, h), max(t, h)) != (u, v):
                raise ValueError(f"arc {(t, h)} does not match edge {(u, v)}")
        object.__setattr__(self, "arcs", arcs)

    @classmethod
    def from_arcs(cls, n: int, arcs) -> "OrientedGraph":
        arcs = [tuple(a) for a in arcs]
        base = Graph(n, tuple(arcs))
        direction = {(min(t, h), max(t, h)): (t, h) for t, h in arcs}
        return cls(base, tuple(direction[e] for e in base.edges))

    @property
    def n(self) -> int:
        return self.base.n

    @cached_property
    def direction(self) -> dict:
        return dict(zip(self.base.edges, self.arcs))

    @cached_property
    def arc_set(self) -> frozenset:
        return frozenset(self.arcs)

    def has_arc(self, t: int, h: int) -> bool:
        return self.direction.get((min(t, h), max(t, h))) == (t, h)

    def reverse(self) -> "OrientedGraph":
        return OrientedGraph(self.base, tuple((h, t) for t, h in self.arcs))

    def remove_edge(self, u: int, v: int) -> "OrientedGraph":
        base = self.base.remove_edge(u, v)
        return OrientedGraph(base, tuple(self.direction[x] for x in base.edges))

    def delete_vertices(self, removed) -> "OrientedGraph":
        removed = set(removed)
        keep = [v for v in range(self.n) if v not in removed]
        index = {v: i for i, v in enumerate(keep)}
        arcs = [(index[t], index[h]) for t, h in self.arcs if t in index and h in index]
        return OrientedGraph.from_arcs(len(keep), arcs)


def skew_matrix(og: OrientedGraph) -> np.ndarray:
    """Integer matrix with ``S[t, h] = 1`` and ``S[h, t] = -1`` for every arc."""
    S = np.zeros((og.n, og.n), dtype=np.int64)
    for t, h in og.arcs:
        S[t, h] = 1
        S[h, t] = -1
    return S


def cycle_parity(og: OrientedGraph, cycle) -> str:
    """``"evenly"`` or ``"oddly"`` for an even cycle given as a vertex traversal.

    Counts arcs that agree with the traversal; reversing the traversal flips
    every arc's agreement, which keeps the parity for even lengths.
    """
    cycle = list(cycle)
    if len(cycle) % 2:
        raise ValueError(f"parity is only defined for even cycles, got length {len(cycle)}")
    arcs = og.arc_set
    agreeing = 0
    for u, v in zip(cycle, cycle[1:] + cycle[:1]):
        if (u, v) in arcs:
            agreeing += 1
        elif (v, u) not in arcs:
            raise ValueError(f"({u}, {v}) is not an edge of the graph")
    return EVENLY if agreeing % 2 == 0 else ODDLY


def orient_unicyclic(G: Graph, sign: str) -> OrientedGraph:
    """Canonical orientation of a unicyclic graph.

    ``minus`` directs the whole cycle along its reference traversal; ``plus``
    additionally reverses the arc leaving the minimum cycle vertex. Tree
    edges point away from the cycle.
    """
    if sign not in (PLUS, MINUS):
        raise ValueError(f"sign must be 'plus' or 'minus', got {sign!r}")
    if not is_unicyclic(G):
        raise ValueError("orient_unicyclic needs a unicyclic graph")
    cycle = unique_cycle(G)
    arcs = [(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))]
    if sign == PLUS:
        arcs[0] = (arcs[0][1], arcs[0][0])
    seen = set(cycle)
    queue = deque(cycle)
    while queue:
        u = queue.popleft()
        for w in G.adjacency[u]:
            if w not in seen:
                seen.add(w)
                arcs.append((u, w))
                queue.append(w)
    return OrientedGraph.from_arcs(G.n, arcs)


def orient_by_index(G: Graph) -> OrientedGraph:
    """Every edge directed from its smaller to its larger endpoint."""
    return OrientedGraph(G, G.edges)


def orient_by_mask(G: Graph, mask: int) -> OrientedGraph:
    """Orientation whose bit ``i`` set reverses ``G.edges[i]``."""
    return OrientedGraph(G, tuple((v, u) if mask >> i & 1 else (u, v) for i, (u, v) in enumerate(G.edges)))


def switch(og: OrientedGraph, W) -> OrientedGraph:
    """Reverse every arc with exactly one endpoint in ``W``."""
    W = set(W)
    return OrientedGraph(og.base, tuple((h, t) if (t in W) != (h in W) else (t, h) for t, h in og.arcs))


def switching_signs(og1: OrientedGraph, og2: OrientedGraph):
    """A switching set turning ``og1`` into ``og2``, or ``None`` if none exists.

    Signs are propagated over a BFS spanning forest so that tree arcs match;
    the remaining arcs then decide.
    """
    if og1.base != og2.base:
        raise ValueError("switching equivalence needs the same base graph")
    G = og1.base
    # agree[e] is +1 when both orientations direct e the same way
    agree = {e: 1 if og1.direction[e] == og2.direction[e] else -1 for e in G.edges}
    sign = [0] * G.n
    for root in range(G.n):
        if sign[root]:
            continue
        sign[root] = 1
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in G.adjacency[u]:
                if not sign[w]:
                    sign[w] = sign[u] * agree[(min(u, w), max(u, w))]
                    queue.append(w)
    for (u, v), a in agree.items():
        if sign[u] * sign[v] != a:
            return None
    return {v for v in range(G.n) if sign[v] < 0}


def switching_equivalent(og1: OrientedGraph, og2: OrientedGraph) -> bool:
    return switching_signs(og1, og2) is not None
