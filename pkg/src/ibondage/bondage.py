"""Independent bondage number: exact bounded search and closed-form bounds."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Sequence

from .domination import gamma_i, gamma_i_value
from .embedding import is_planar
from .errors import EmptyGraphError
from .graph import Edge, Graph, girth


@dataclass(frozen=True)
class GraphClass:
    tag: str
    min_degree: int
    min_girth: int
    bound: int


# the four girth / minimum-degree classes and their b_i bounds
PAPER_CLASSES: dict[str, GraphClass] = {
    "g4d3": GraphClass("g4d3", 3, 4, 6),
    "g5d2": GraphClass("g5d2", 2, 5, 5),
    "g7d2": GraphClass("g7d2", 2, 7, 4),
    "g10d2": GraphClass("g10d2", 2, 10, 3),
}


@dataclass(frozen=True)
class BondageResult:
    b_i: int | None  # None: not found within cap
    witness_edges: tuple[Edge, ...]
    cap: int
    gamma_before: int
    gamma_after: int | None


@dataclass(frozen=True)
class BoundReport:
    priddy_wei: int
    priddy_wei_edge: Edge
    delta_plus_2: int
    min9_delta_plus_2: int
    min9_applicable: bool
    girth_bound: int | None


def edge_bound(g: Graph, u: int, v: int) -> int:
    """``d(u) + d(v) - |N(u) & N(v)| - 1`` for the edge ``uv``."""
    common = len(g.nbr_sets[u] & g.nbr_sets[v])
    return g.degree(u) + g.degree(v) - common - 1


def priddy_wei_bound(g: Graph) -> tuple[int, Edge]:
    if g.m == 0:
        raise EmptyGraphError("the edge bound needs at least one edge")
    return min((edge_bound(g, u, v), (u, v)) for u, v in g.edges)


def delta_bounds(g: Graph) -> tuple[int, int, bool]:
    """``(Delta+2, min(9, Delta+2), applicable)``; the latter needs min degree 3."""
    d2 = g.max_degree() + 2
    return d2, min(9, d2), g.min_degree() >= 3


def classes_of(g: Graph) -> list[GraphClass]:
    """Every class the graph belongs to (connected and planar required)."""
    if not g.is_connected() or not is_planar(g):
        return []
    gg, dd = girth(g), g.min_degree()
    return [c for c in PAPER_CLASSES.values() if gg >= c.min_girth and dd >= c.min_degree]


def girth_bound(g: Graph) -> int | None:
    """Least applicable bound from the girth table, None when no row applies."""
    rows = classes_of(g)
    return min(c.bound for c in rows) if rows else None


def bound_report(g: Graph) -> BoundReport:
    pw, edge = priddy_wei_bound(g)
    d2, m9, ok = delta_bounds(g)
    return BoundReport(pw, edge, d2, m9, ok, girth_bound(g))


def colex_combinations(m: int, k: int) -> Iterator[tuple[int, ...]]:
    """k-subsets of ``range(m)`` in colexicographic order."""
    if k == 0:
        yield ()
        return
    for top in range(k - 1, m):
        for rest in colex_combinations(top, k - 1):
            yield rest + (top,)


def default_cap(g: Graph) -> int:
    gb = girth_bound(g)
    if gb is not None:
        return gb
    if g.m:
        return priddy_wei_bound(g)[0]
    return g.m


def _can_succeed(g: Graph, dom: frozenset[int], removed: Sequence[Edge]) -> bool:
    """False when ``dom`` stays an independent dominating set after removal.

    ``dom`` is a minimum independent dominating set of ``g``. Deleting edges
    keeps it independent, so it stays dominating (and the deletion fails)
    unless some vertex outside it loses every edge into it.
    """
    lost: dict[int, int] = {}
    for u, v in removed:
        if (u in dom) != (v in dom):
            x = v if u in dom else u
            lost[x] = lost.get(x, 0) + 1
    for x, k in lost.items():
        if k == sum(1 for w in g.adj[x] if w in dom):
            return True
    return False


def _scan(
    g: Graph, target: int, subsets: Sequence[tuple[int, ...]], dom: frozenset[int] | None
) -> tuple[int, ...] | None:
    edges = g.edges
    for subset in subsets:
        removed = [edges[i] for i in subset]
        if dom is not None and not _can_succeed(g, dom, removed):
            continue
        if gamma_i_value(g.remove_edges(removed)) > target:
            return subset
    return None


def b_i_exact(g: Graph, cap: int | None = None, *, prune: bool = False, jobs: int = 1) -> BondageResult:
    """Smallest ``B`` with ``gamma_i(G - B) > gamma_i(G)``, searching ``|B| <= cap``.

    Subsets of each size are tried in colex order of edge ids, so the
    witness is the colex-first one. ``prune`` skips subsets that provably
    leave a fixed minimum independent dominating set intact; it never
    changes the answer. With ``jobs > 1`` each size is split into chunks and
    the earliest success across chunks is taken.
    """
    if g.m == 0:
        raise EmptyGraphError("bondage needs at least one edge")
    if cap is None:
        cap = default_cap(g)
    base = gamma_i(g)
    dom = frozenset(base.witness) if prune else None
    for k in range(1, min(cap, g.m) + 1):
        if jobs > 1:
            found = _parallel_scan(g, base.gamma_i, k, dom, jobs)
        else:
            found = _scan(g, base.gamma_i, colex_combinations(g.m, k), dom)
        if found is not None:
            witness = tuple(g.edges[i] for i in found)
            after = gamma_i_value(g.remove_edges(witness))
            return BondageResult(k, witness, cap, base.gamma_i, after)
    return BondageResult(None, (), cap, base.gamma_i, None)


def _parallel_scan(g: Graph, target: int, k: int, dom, jobs: int):
    subsets = list(colex_combinations(g.m, k))
    size = max(1, -(-len(subsets) // jobs))
    chunks = [subsets[i : i + size] for i in range(0, len(subsets), size)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        results = list(pool.map(_scan, [g] * len(chunks), [target] * len(chunks), chunks, [dom] * len(chunks)))
    # chunks are consecutive in colex order, so the first hit wins
    for r in results:
        if r is not None:
            return r
    return None
