"""Simple undirected graphs, the named unicyclic families and matching counts.

Vertices are the integers ``0..n-1``. Edges are stored as sorted pairs
``(u, v)`` with ``u < v`` so that two graphs with the same edge set compare
and hash equal.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Optional


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"vertex count must be non-negative, got {self.n}")
        normalized = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
            e = (u, v) if u < v else (v, u)
            if e in normalized:
                raise ValueError(f"duplicate edge {e}")
            normalized.add(e)
        object.__setattr__(self, "edges", tuple(sorted(normalized)))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple:
        """Sorted neighbour tuples, indexed by vertex."""
        adj = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list:
        return [len(a) for a in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def remove_edge(self, u: int, v: int) -> "Graph":
        e = (min(u, v), max(u, v))
        if e not in self.edges:
            raise ValueError(f"edge {e} not in graph")
        return Graph(self.n, tuple(x for x in self.edges if x != e))

    def delete_vertices(self, removed: Iterable[int]) -> "Graph":
        """Induced subgraph on the remaining vertices, relabelled in order."""
        return self.induced([v for v in range(self.n) if v not in set(removed)])

    def induced(self, keep: Iterable[int]) -> "Graph":
        keep = sorted(set(keep))
        index = {v: i for i, v in enumerate(keep)}
        return Graph(
            len(keep),
            tuple((index[u], index[v]) for u, v in self.edges if u in index and v in index),
        )

    def relabel(self, perm) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph(self.n, tuple((perm[u], perm[v]) for u, v in self.edges))

    def components(self) -> list:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self.adjacency[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        queue.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def is_forest(self) -> bool:
        return self.m == self.n - len(self.components())


def path_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"a cycle needs at least 3 vertices, got {n}")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def make_family(kind: str, n: int, girth: Optional[int] = None) -> Graph:
    """Build ``path`` P_n, ``cycle`` C_n, ``pnl`` P_n^l or ``snl`` S_n^l.

    Cycle vertices of the unicyclic families are ``0..l-1``; vertex 0 carries
    the attached path (``pnl``) or all the pendant vertices (``snl``), which
    are numbered ``l..n-1`` in attachment order.
    """
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    if kind in ("path", "cycle"):
        if girth is not None and not (kind == "cycle" and girth == n):
            raise ValueError(f"family {kind!r} takes no girth parameter")
        return path_graph(n) if kind == "path" else cycle_graph(n)
    if kind not in ("pnl", "snl"):
        raise ValueError(f"unknown family {kind!r}")
    if girth is None:
        raise ValueError(f"family {kind!r} needs a girth")
    if not 3 <= girth <= n:
        raise ValueError(f"girth must satisfy 3 <= girth <= n, got girth={girth}, n={n}")
    edges = [(i, (i + 1) % girth) for i in range(girth)]
    for v in range(girth, n):
        if kind == "snl" or v == girth:
            edges.append((0, v))
        else:
            edges.append((v - 1, v))
    return Graph(n, tuple(edges))


# -- matchings -------------------------------------------------------------


@lru_cache(maxsize=200_000)
def _matching_poly(edges: tuple) -> tuple:
    # m(G) = m(G - e) + x * m(G - u - v), expanding on the first edge.
    if not edges:
        return (1,)
    (u, v), rest = edges[0], edges[1:]
    without = _matching_poly(rest)
    removed = _matching_poly(tuple(e for e in rest if u not in e and v not in e))
    out = list(without) + [0] * max(0, len(removed) + 1 - len(without))
    for k, c in enumerate(removed):
        out[k + 1] += c
    return tuple(out)


def matching_counts(G: Graph) -> tuple:
    """Number of k-matchings of ``G`` for ``k = 0..n//2``."""
    poly = _matching_poly(G.edges)
    size = G.n // 2 + 1
    return tuple(poly[:size]) + (0,) * (size - len(poly))


# -- cycles ----------------------------------------------------------------


def girth(G: Graph) -> Optional[int]:
    """Length of a shortest cycle, or ``None`` for a forest."""
    best = None
    for root in range(G.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in G.adjacency[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    return best


def is_unicyclic(G: Graph) -> bool:
    return G.n >= 3 and G.m == G.n and G.is_connected()


def traverse_cycle(G: Graph, vertices) -> list:
    """Order the vertex set of a cycle of ``G`` as a traversal.

    The traversal starts at the minimum vertex and steps first to its smaller
    cycle neighbour, which fixes the reference direction used for parity.
    """
    on_cycle = set(vertices)
    start = min(on_cycle)
    nbrs = [w for w in G.adjacency[start] if w in on_cycle]
    order = [start, min(nbrs)]
    while len(order) < len(on_cycle):
        prev, cur = order[-2], order[-1]
        nxt = [w for w in G.adjacency[cur] if w in on_cycle and w != prev]
        order.append(nxt[0])
    return order


def unique_cycle(G: Graph) -> list:
    """Vertices of the unique cycle of a unicyclic graph, in traversal order."""
    if not is_unicyclic(G):
        raise ValueError("graph is not unicyclic")
    deg = G.degrees()
    alive = [True] * G.n
    leaves = deque(v for v in range(G.n) if deg[v] == 1)
    while leaves:
        v = leaves.popleft()
        alive[v] = False
        for w in G.adjacency[v]:
            if alive[w]:
                deg[w] -= 1
                if deg[w] == 1:
                    leaves.append(w)
    return traverse_cycle(G, [v for v in range(G.n) if alive[v]])


def simple_cycles(G: Graph) -> list:
    """All simple cycles as traversal-ordered vertex lists, each listed once."""
    cycles = []
    adj = G.adjacency
    for s in range(G.n):
        # only vertices above s, so each cycle is found from its minimum vertex
        path = [s]
        on_path = {s}

        def extend(u):
            for w in adj[u]:
                if w == s and len(path) >= 3 and path[1] < path[-1]:
                    cycles.append(list(path))
                elif w > s and w not in on_path:
                    path.append(w)
                    on_path.add(w)
                    extend(w)
                    path.pop()
                    on_path.remove(w)

        extend(s)
    return cycles


def even_cycles(G: Graph) -> list:
    return [c for c in simple_cycles(G) if len(c) % 2 == 0]


# -- linear subgraphs ------------------------------------------------------


@dataclass(frozen=True)
class LinearSubgraph:
    """Vertex-disjoint union of single edges and cycles."""

    matching_edges: tuple = ()
    cycles: tuple = ()
    vertex_count: int = field(init=False)

    def __post_init__(self):
        covered = [v for e in self.matching_edges for v in e]
        covered += [v for c in self.cycles for v in c]
        if len(covered) != len(set(covered)):
            raise ValueError("components of a linear subgraph must be vertex-disjoint")
        if any(len(c) < 3 for c in self.cycles):
            raise ValueError("cycles need length at least 3")
        object.__setattr__(self, "vertex_count", len(covered))


def enumerate_evenly_linear(G: Graph, i: int, cycles=None) -> list:
    """All linear subgraphs of ``G`` without odd cycles covering exactly ``i`` vertices.

    ``cycles`` may pass precomputed :func:`even_cycles` output.
    """
    if not 0 <= i <= G.n:
        raise ValueError(f"subgraph size must lie in 0..{G.n}, got {i}")
    if i % 2:
        return []
    if cycles is None:
        cycles = even_cycles(G)
    by_min = [[] for _ in range(G.n)]
    for c in cycles:
        by_min[c[0]].append(tuple(c))

    out = []
    used = [False] * G.n
    edges, cyc = [], []

    def place(v, remaining):
        if remaining == 0:
            out.append(LinearSubgraph(tuple(edges), tuple(cyc)))
            return
        if v >= G.n or G.n - v < remaining:
            return
        if used[v]:
            place(v + 1, remaining)
            return
        # components are added in increasing order of their lowest vertex
        place(v + 1, remaining)
        used[v] = True
        for w in G.adjacency[v]:
            if w > v and not used[w]:
                used[w] = True
                edges.append((v, w))
                place(v + 1, remaining - 2)
                edges.pop()
                used[w] = False
        for c in by_min[v]:
            if len(c) <= remaining and not any(used[x] for x in c[1:]):
                for x in c[1:]:
                    used[x] = True
                cyc.append(c)
                place(v + 1, remaining - len(c))
                cyc.pop()
                for x in c[1:]:
                    used[x] = False
        used[v] = False

    place(0, i)
    return out
