"""Seeded generators of connected planar graphs with girth and minimum-degree floors.

Every generator keeps a rotation system in step with the graph, so the
output comes with its embedding. Results are re-checked before they are
returned; construction alone is never trusted.

Minimum degree <= 2 starts from a random stacked triangulation, thins it,
subdivides edges until every cycle is long enough and finally strips
pendant paths. Minimum degree 3 with girth <= 4 grows bipartite-style
quadrangulations: a cycle with a hub on each side, then random prism and
star insertions into faces and thinning that keeps degrees at least 3.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass

from .embedding import PlanarEmbedding, check_planar_embedding
from .errors import InfeasibleSpec
from .graph import INFINITE, Graph, build_graph, girth

MAX_ATTEMPTS = 400


@dataclass(frozen=True)
class ClassSpec:
    min_degree: int
    min_girth: int | float
    vertex_budget: int
    seed: int = 0


CLASS_SPECS = {
    "g5d2": (2, 5),
    "g4d3": (3, 4),
    "g7d2": (2, 7),
    "g10d2": (2, 10),
}


def class_spec(tag: str, vertex_budget: int, seed: int) -> ClassSpec:
    d, gg = CLASS_SPECS[tag]
    return ClassSpec(d, gg, vertex_budget, seed)


class _Rot:
    """Mutable rotation system over vertices ``0..n-1``."""

    def __init__(self, rows: list[list[int]]) -> None:
        self.rows = rows

    @property
    def n(self) -> int:
        return len(self.rows)

    def add_vertex(self) -> int:
        self.rows.append([])
        return self.n - 1

    def insert_after(self, v: int, anchor: int, new: int) -> None:
        row = self.rows[v]
        row.insert(row.index(anchor) + 1, new)

    def edges(self) -> list[tuple[int, int]]:
        return sorted((v, w) for v, row in enumerate(self.rows) for w in row if v < w)

    def degree(self, v: int) -> int:
        return len(self.rows[v])

    def remove_edge(self, u: int, v: int) -> None:
        self.rows[u].remove(v)
        self.rows[v].remove(u)

    def subdivide(self, u: int, v: int) -> int:
        x = self.add_vertex()
        self.rows[u][self.rows[u].index(v)] = x
        self.rows[v][self.rows[v].index(u)] = x
        self.rows[x] = [u, v]
        return x

    def succ(self, v: int, u: int) -> int:
        row = self.rows[v]
        return row[(row.index(u) + 1) % len(row)]

    def faces(self) -> list[list[int]]:
        """Boundary walks (vertex lists) under the package's tracing convention."""
        seen = set()
        out = []
        for u, row in enumerate(self.rows):
            for v in row:
                if (u, v) in seen:
                    continue
                walk = []
                a, b = u, v
                while (a, b) not in seen:
                    seen.add((a, b))
                    walk.append(a)
                    a, b = b, self.succ(b, a)
                out.append(walk)
        return out

    def connected_without(self, u: int, v: int) -> bool:
        """Is ``v`` reachable from ``u`` once the edge ``uv`` is ignored?"""
        stack, seen = [u], {u}
        while stack:
            x = stack.pop()
            for y in self.rows[x]:
                if (x, y) in ((u, v), (v, u)) or y in seen:
                    continue
                if y == v:
                    return True
                seen.add(y)
                stack.append(y)
        return False

    def compact(self) -> None:
        """Drop vertices with empty rows and renumber densely."""
        keep = [v for v in range(self.n) if self.rows[v]]
        new = {v: i for i, v in enumerate(keep)}
        self.rows = [[new[w] for w in self.rows[v]] for v in keep]

    def freeze(self) -> tuple[Graph, PlanarEmbedding]:
        g = build_graph(self.n, self.edges())
        return g, PlanarEmbedding(g, tuple(tuple(r) for r in self.rows))


# -- building blocks -------------------------------------------------------------------


def _triangle() -> _Rot:
    return _Rot([[1, 2], [2, 0], [0, 1]])


def _stack(rot: _Rot, walk: list[int]) -> int:
    """Put a new vertex inside the triangular face ``walk`` (a -> b -> c)."""
    a, b, c = walk
    x = rot.add_vertex()
    rot.insert_after(b, a, x)
    rot.insert_after(c, b, x)
    rot.insert_after(a, c, x)
    rot.rows[x] = [b, a, c]
    return x


def _star(rot: _Rot, walk: list[int], picks: list[int]) -> int:
    """New vertex inside a simple face joined to ``walk[i]`` for ``i`` in ``picks``."""
    x = rot.add_vertex()
    for i in picks:
        rot.insert_after(walk[i], walk[i - 1], x)
    rot.rows[x] = [walk[i] for i in reversed(picks)]
    return x


def _prism(rot: _Rot, walk: list[int]) -> list[int]:
    """Insert a copy of a simple face's cycle inside it, joined rung by rung."""
    k = len(walk)
    new = [rot.add_vertex() for _ in range(k)]
    for i in range(k):
        rot.insert_after(walk[i], walk[i - 1], new[i])
        rot.rows[new[i]] = [new[(i + 1) % k], walk[i], new[i - 1]]
    return new


def _double_wheel(k: int) -> _Rot:
    """A 2k-cycle with one hub inside on even positions and one outside on odd ones."""
    cyc = [[(i - 1) % (2 * k), (i + 1) % (2 * k)] for i in range(2 * k)]
    rot = _Rot(cyc)
    faces = rot.faces()
    inner, outer = faces[0], faces[1]
    for face, parity in ((inner, 0), (outer, 1)):
        picks = [i for i, v in enumerate(face) if v % 2 == parity]
        _star(rot, face, picks)
    return rot


# -- weighted subdivision ----------------------------------------------------------------


def _shortest_cycle(n: int, edges: list[tuple[int, int]], w: dict) -> tuple[float, list]:
    """Least total weight of a cycle and the edges on one such cycle."""
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for i, (u, v) in enumerate(edges):
        adj[u].append((v, i))
        adj[v].append((u, i))
    best, best_path = INFINITE, []
    for i, (s, t) in enumerate(edges):
        dist = {s: 0}
        prev: dict[int, tuple[int, int]] = {}
        heap = [(0, s)]
        while heap:
            d, x = heapq.heappop(heap)
            if d > dist[x] or d + w[edges[i]] >= best:
                continue
            if x == t:
                break
            for y, j in adj[x]:
                if j == i:
                    continue
                nd = d + w[edges[j]]
                if nd < dist.get(y, INFINITE):
                    dist[y] = nd
                    prev[y] = (x, j)
                    heapq.heappush(heap, (nd, y))
        if t in dist and dist[t] + w[edges[i]] < best:
            best = dist[t] + w[edges[i]]
            path, x = [edges[i]], t
            while x != s:
                x, j = prev[x]
                path.append(edges[j])
            best_path = path
    return best, best_path


def _lengthen(rot: _Rot, target: int, budget: int, rng: random.Random) -> bool:
    """Subdivide edges until every cycle has length >= ``target``; False if over budget."""
    if target <= 3:
        return rot.n <= budget
    edges = rot.edges()
    w = {e: 1 for e in edges}
    extra = 0
    while True:
        length, cyc = _shortest_cycle(rot.n, edges, w)
        if length >= target:
            break
        e = rng.choice(cyc)
        w[e] += 1
        extra += 1
        if rot.n + extra > budget:
            return False
    for (u, v), k in w.items():
        for _ in range(k - 1):
            x = rot.subdivide(u, v)
            u = x
    return True


def _strip_pendants(rot: _Rot) -> None:
    changed = True
    while changed:
        changed = False
        for v in range(rot.n):
            if rot.degree(v) == 1:
                rot.remove_edge(v, rot.rows[v][0])
                changed = True
    rot.compact()


def _thin(rot: _Rot, rng: random.Random, p: float, floor: int) -> None:
    """Delete each edge with probability ``p`` keeping connectivity and degrees >= ``floor``."""
    for u, v in rng.sample(rot.edges(), k=len(rot.edges())):
        if rng.random() >= p:
            continue
        if rot.degree(u) <= floor or rot.degree(v) <= floor:
            continue
        if rot.connected_without(u, v):
            rot.remove_edge(u, v)


# -- per-route generators ------------------------------------------------------------------


def _sparse_route(spec: ClassSpec, rng: random.Random) -> _Rot | None:
    budget = spec.vertex_budget
    target = spec.min_girth
    shape = rng.random()
    if shape < 0.15 and target <= budget:
        # a bare cycle
        k = rng.randint(max(3, target), budget)
        return _Rot([[(i - 1) % k, (i + 1) % k] for i in range(k)])
    if shape < 0.3:
        # theta graph: three paths between two hubs
        rot = _Rot([[2, 3, 4], [4, 3, 2], [0, 1], [0, 1], [0, 1]])
    else:
        rot = _triangle()
        size = rng.randint(3, max(3, min(12, budget // max(2, target // 2))))
        while rot.n < size:
            tri = [f for f in rot.faces() if len(f) == 3]
            _stack(rot, rng.choice(tri))
        _thin(rot, rng, rng.uniform(0.1, 0.6), 1)
    if not _lengthen(rot, target, budget, rng):
        return None
    _strip_pendants(rot)
    return rot if rot.n >= 3 else None


def _simple_faces(rot: _Rot, min_len: int) -> list[list[int]]:
    return [f for f in rot.faces() if len(f) >= min_len and len(set(f)) == len(f)]


def _quad_route(spec: ClassSpec, rng: random.Random) -> _Rot | None:
    budget = spec.vertex_budget
    k = rng.randint(3, max(3, min(6, (budget - 2) // 2)))
    rot = _double_wheel(k)
    for _ in range(rng.randint(0, 4)):
        op = rng.random()
        if op < 0.4:
            faces = [f for f in _simple_faces(rot, 4) if rot.n + len(f) <= budget]
            if faces:
                _prism(rot, rng.choice(faces))
        else:
            faces = [f for f in _simple_faces(rot, 6) if len(f) % 2 == 0 and rot.n < budget]
            if faces:
                f = rng.choice(faces)
                start = rng.randrange(2)
                picks = list(range(start, len(f), 2))
                _star(rot, f, picks)
    _thin(rot, rng, rng.uniform(0.0, 0.5), 3)
    return rot if rot.n <= budget else None


def _dodecahedron() -> _Rot:
    import networkx as nx

    planar, emb = nx.check_planarity(nx.dodecahedral_graph())
    data = emb.get_data()
    return _Rot([list(data[v]) for v in range(20)])


def _tree_route(spec: ClassSpec, rng: random.Random) -> _Rot:
    n = max(1, rng.randint(1, spec.vertex_budget))
    rows: list[list[int]] = [[] for _ in range(n)]
    for v in range(1, n):
        p = rng.randrange(v)
        rows[p].append(v)
        rows[v].append(p)
    return _Rot(rows)


def _check_feasible(spec: ClassSpec) -> None:
    d, gg, n = spec.min_degree, spec.min_girth, spec.vertex_budget
    if n < 1:
        raise InfeasibleSpec("vertex budget must be positive")
    if gg == INFINITE:
        if d >= 2:
            raise InfeasibleSpec("a forest has a vertex of degree at most 1")
        return
    if d >= 2 and n < gg:
        raise InfeasibleSpec(f"girth {gg} needs at least {gg} vertices, budget is {n}")
    if d >= 3 and gg >= 6:
        raise InfeasibleSpec("no planar graph has minimum degree 3 and girth at least 6")
    if d >= 3 and gg == 5 and n < 20:
        raise InfeasibleSpec("minimum degree 3 with girth 5 needs at least 20 vertices")
    if d >= 3 and n < 8:
        raise InfeasibleSpec("the quadrangulation route needs at least 8 vertices")
    if d >= 4:
        raise InfeasibleSpec("minimum degree above 3 is not supported")


def _meets(g: Graph, e: PlanarEmbedding, spec: ClassSpec) -> bool:
    return (
        g.n <= spec.vertex_budget
        and g.is_connected()
        and g.min_degree() >= spec.min_degree
        and girth(g) >= spec.min_girth
        and check_planar_embedding(e).ok
    )


def generate(spec: ClassSpec) -> tuple[Graph, PlanarEmbedding]:
    """A class member with its embedding; identical output for identical specs."""
    _check_feasible(spec)
    rng = random.Random(spec.seed)
    for _ in range(MAX_ATTEMPTS):
        if spec.min_girth == INFINITE:
            rot = _tree_route(spec, rng)
        elif spec.min_degree >= 3 and spec.min_girth == 5:
            rot = _dodecahedron()
        elif spec.min_degree >= 3:
            rot = _quad_route(spec, rng)
        else:
            rot = _sparse_route(spec, rng)
        if rot is None:
            continue
        g, e = rot.freeze()
        if _meets(g, e, spec):
            return g, e
    raise InfeasibleSpec(f"no class member found in {MAX_ATTEMPTS} attempts for {spec}")


def corpus(tag: str, count: int, vertex_budget: int = 24, base_seed: int = 0) -> list[tuple[Graph, PlanarEmbedding]]:
    return [generate(class_spec(tag, vertex_budget, base_seed + i)) for i in range(count)]
