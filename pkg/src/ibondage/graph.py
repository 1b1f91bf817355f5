"""Immutable simple graphs with the degree-class and girth queries used throughout."""

from __future__ import annotations

import enum
import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .errors import SelfLoopError, VertexRangeError

Edge = tuple[int, int]

INFINITE = math.inf


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the sorted tuple of neighbours of ``v``. Build instances
    with :func:`build_graph`; the constructor trusts its arguments.
    """

    n: int
    adj: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return self.n

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.nbr_sets[u]

    @cached_property
    def nbr_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(a) for a in self.adj)

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        """All edges as ``(u, v)`` with ``u < v``, sorted."""
        return tuple((u, v) for u in range(self.n) for v in self.adj[u] if u < v)

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def closed_masks(self) -> tuple[int, ...]:
        """Bitmask of the closed neighbourhood ``N[v]`` for each vertex."""
        out = []
        for v in range(self.n):
            mask = 1 << v
            for w in self.adj[v]:
                mask |= 1 << w
            out.append(mask)
        return tuple(out)

    def min_degree(self) -> int:
        return min((len(a) for a in self.adj), default=0)

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def two_count(self, v: int) -> int:
        """Number of neighbours of ``v`` that have degree 2."""
        return sum(1 for w in self.adj[v] if len(self.adj[w]) == 2)

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in self.adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        queue.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def remove_edges(self, edges: Iterable[Edge]) -> Graph:
        drop = {norm_edge(u, v) for u, v in edges}
        return build_graph(self.n, [e for e in self.edges if e not in drop])

    def induced(self, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
        """Induced subgraph, relabelled densely; returns it with the old ids."""
        old = sorted(set(vertices))
        new_id = {v: i for i, v in enumerate(old)}
        edges = [
            (new_id[u], new_id[v])
            for u in old
            for v in self.adj[u]
            if u < v and v in new_id
        ]
        return build_graph(len(old), edges), old


def build_graph(n: int, edges: Iterable[Edge]) -> Graph:
    """Build a simple graph; duplicate pairs are dropped."""
    if n < 0:
        raise VertexRangeError(f"negative vertex count {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise VertexRangeError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs))


# -- degree classes ---------------------------------------------------------


class DegreeKind(enum.Enum):
    EXACT = "S_i"
    AT_LEAST = "S_i+"
    AT_MOST = "S_i-"
    S_EXACT = "S(i,j)"
    S_J_PLUS = "S(i,j+)"
    S_IJ_PLUS = "S(i+,j+)"


@dataclass(frozen=True)
class DegreeClassQuery:
    kind: DegreeKind
    i: int
    j: int | None = None

    def __post_init__(self) -> None:
        two_neighbor_kinds = (DegreeKind.S_EXACT, DegreeKind.S_J_PLUS, DegreeKind.S_IJ_PLUS)
        if self.kind in two_neighbor_kinds:
            if self.j is None:
                raise ValueError(f"{self.kind.value} needs j")
            if self.kind is DegreeKind.S_EXACT and self.j > self.i:
                raise ValueError("S(i,j) requires j <= i")


def matches(g: Graph, v: int, q: DegreeClassQuery) -> bool:
    d = g.degree(v)
    k = q.kind
    if k is DegreeKind.EXACT:
        return d == q.i
    if k is DegreeKind.AT_LEAST:
        return d >= q.i
    if k is DegreeKind.AT_MOST:
        return d <= q.i
    t = g.two_count(v)
    if k is DegreeKind.S_EXACT:
        return d == q.i and t == q.j
    if k is DegreeKind.S_J_PLUS:
        return d == q.i and t >= q.j
    return d >= q.i and t >= q.j


def degree_class(g: Graph, q: DegreeClassQuery) -> set[int]:
    return {v for v in range(g.n) if matches(g, v, q)}


# -- girth ------------------------------------------------------------------


def girth(g: Graph) -> int | float:
    """Length of a shortest cycle, or ``INFINITE`` for forests.

    BFS from every root; a non-tree edge ``xy`` met during the search closes
    a cycle of length at most ``dist[x] + dist[y] + 1``, and the minimum over
    all roots is exact.
    """
    best = INFINITE
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            if 2 * dist[x] + 1 >= best:
                break
            for y in g.adj[x]:
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


# -- edge weight classes ----------------------------------------------------


def edge_weight_class(g: Graph, a: int, b: int, b_is_upper: bool = True) -> set[Edge]:
    """Edges ``xy`` with ``d(x) = a`` and ``d(y) = b`` (or ``d(y) <= b``)."""
    out = set()
    for u, v in g.edges:
        du, dv = g.degree(u), g.degree(v)
        for dx, dy in ((du, dv), (dv, du)):
            if dx == a and (dy <= b if b_is_upper else dy == b):
                out.add((u, v))
    return out


def iter_darts(g: Graph) -> Iterator[Edge]:
    for u in range(g.n):
        for v in g.adj[u]:
            yield (u, v)
