"""Combinatorial embeddings: rotation systems, faces, and planarity.

Face tracing convention: the dart ``u -> v`` is followed by ``v -> w`` where
``w`` is the successor of ``u`` in the rotation at ``v``. A face is therefore
the closed walk of darts it traces, and its length counts repeated vertices
and edges with multiplicity, so the face lengths always sum to ``2|E|``.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from functools import cached_property

import networkx as nx

from .errors import DisconnectedError, InconsistentRotation, NonPlanarError
from .graph import Edge, Graph

Rotation = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Face:
    id: int
    darts: tuple[Edge, ...]

    @property
    def length(self) -> int:
        return len(self.darts)

    @property
    def walk(self) -> tuple[int, ...]:
        """Vertices in boundary order, one entry per incidence."""
        return tuple(u for u, _ in self.darts)

    @cached_property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.walk)

    def edge_multiset(self) -> dict[Edge, int]:
        counts: dict[Edge, int] = {}
        for u, v in self.darts:
            e = (u, v) if u < v else (v, u)
            counts[e] = counts.get(e, 0) + 1
        return counts

    def count(self, pred) -> int:
        """Number of boundary incidences whose vertex satisfies ``pred``."""
        return sum(1 for v in self.walk if pred(v))


def check_rotation(g: Graph, rotation: Rotation) -> list[str]:
    problems = []
    if len(rotation) != g.n:
        return [f"rotation has {len(rotation)} entries for {g.n} vertices"]
    for v in range(g.n):
        if len(rotation[v]) != len(set(rotation[v])) or sorted(rotation[v]) != list(g.adj[v]):
            problems.append(f"rotation at {v} is not a permutation of its neighbours")
    return problems


def faces_of(rotation: Rotation, g: Graph) -> list[Face]:
    problems = check_rotation(g, rotation)
    if problems:
        raise InconsistentRotation("; ".join(problems))
    if g.m == 0:
        # a lone vertex sits in one face with an empty boundary
        return [Face(0, ())] if g.n else []
    succ: dict[Edge, int] = {}
    for v in range(g.n):
        rot = rotation[v]
        for i, u in enumerate(rot):
            succ[(v, u)] = rot[(i + 1) % len(rot)]
    seen: set[Edge] = set()
    faces = []
    for u in range(g.n):
        for v in rotation[u]:
            if (u, v) in seen:
                continue
            darts = []
            a, b = u, v
            while (a, b) not in seen:
                seen.add((a, b))
                darts.append((a, b))
                a, b = b, succ[(b, a)]
            faces.append(Face(len(faces), tuple(darts)))
    return faces


@dataclass(frozen=True)
class PlanarEmbedding:
    graph: Graph
    rotation: Rotation
    faces: tuple[Face, ...] = field(init=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "faces", tuple(faces_of(self.rotation, self.graph)))

    @cached_property
    def dart_face(self) -> dict[Edge, int]:
        return {d: f.id for f in self.faces for d in f.darts}

    @cached_property
    def fingerprint(self) -> str:
        text = "\n".join(" ".join(map(str, r)) for r in self.rotation)
        return hashlib.sha256(text.encode()).hexdigest()[:12]

    def succ(self, v: int, u: int) -> int:
        rot = self.rotation[v]
        return rot[(rot.index(u) + 1) % len(rot)]

    def corners(self, v: int) -> list[tuple[int, int, int]]:
        """``(a, b, face_id)`` for each consecutive rotation pair at ``v``.

        The face contains the walk ``a -> v -> b``. A degree-1 vertex has a
        single corner with ``a == b``.
        """
        rot = self.rotation[v]
        out = []
        for i, a in enumerate(rot):
            b = rot[(i + 1) % len(rot)]
            out.append((a, b, self.dart_face[(v, b)]))
        return out

    def incidences(self, v: int) -> list[int]:
        """Face ids around ``v``, one per corner (with multiplicity)."""
        if not self.graph.adj[v]:
            return [0] if self.graph.n == 1 else []
        return [f for _, _, f in self.corners(v)]

    def faces_containing(self, vertices) -> list[int]:
        want = set(vertices)
        return [f.id for f in self.faces if want <= f.vertex_set]


@dataclass
class EmbeddingReport:
    ok: bool
    failures: list[str]
    vertices: int
    edges: int
    faces: int


def check_planar_embedding(e: PlanarEmbedding) -> EmbeddingReport:
    g = e.graph
    failures = check_rotation(g, e.rotation)
    nf = len(e.faces)
    if not g.is_connected():
        failures.append("graph is not connected")
    euler = g.n - g.m + nf
    if euler != 2:
        failures.append(f"Euler check failed: {g.n} - {g.m} + {nf} = {euler} != 2")
    if sum(f.length for f in e.faces) != 2 * g.m:
        failures.append("face lengths do not sum to 2|E|")
    return EmbeddingReport(not failures, failures, g.n, g.m, nf)


def embedding_from_rotation(g: Graph, rotation) -> PlanarEmbedding:
    """Wrap and validate an externally supplied rotation system."""
    e = PlanarEmbedding(g, tuple(tuple(r) for r in rotation))
    report = check_planar_embedding(e)
    if not report.ok:
        raise InconsistentRotation("; ".join(report.failures))
    return e


def to_networkx(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges)
    return G


def is_planar(g: Graph) -> bool:
    return nx.check_planarity(to_networkx(g))[0]


def compute_embedding(g: Graph) -> PlanarEmbedding:
    """Planar rotation system for a connected graph, or ``NonPlanarError``."""
    if not g.is_connected():
        raise DisconnectedError("compute_embedding needs a connected graph")
    planar, emb = nx.check_planarity(to_networkx(g))
    if not planar:
        raise NonPlanarError("graph is not planar")
    data = emb.get_data()
    rotation = tuple(tuple(data.get(v, ())) for v in range(g.n))
    e = PlanarEmbedding(g, rotation)
    report = check_planar_embedding(e)
    if not report.ok:  # pragma: no cover - networkx guarantees this
        raise InconsistentRotation("; ".join(report.failures))
    return e
