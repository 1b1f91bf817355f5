"""Bondage certificates: explicit edge sets whose removal raises gamma_i.

The route for a graph in one of the four classes is

1. detect configurations;
2. try the constructive edge set of each witness, in family order, whose
   size does not exceed the cap (the minimum Priddy-Wei edge bound when an
   edge-type configuration is present, else the class bound);
3. if an edge-type configuration is present, search for ``B`` within that cap;
4. try the remaining constructive sets;
5. failing that, search with the class bound as cap.

Every candidate is checked by recomputing gamma_i on ``G`` and ``G - B``;
nothing unverified leaves this module.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .bondage import PAPER_CLASSES, b_i_exact, priddy_wei_bound
from .configs import ConfigWitness, detect_for_class
from .domination import gamma_i, gamma_i_value, is_independent_dominating
from .embedding import PlanarEmbedding
from .errors import RoleEdgeMissing, TheoremViolation
from .graph import Edge, Graph, norm_edge

log = logging.getLogger(__name__)

EDGE_FAMILIES = ("T7a", "T9a", "L11", "T13a", "T14a")
# no edge set is given for these; they are handled by search
NO_CONSTRUCTION = frozenset(EDGE_FAMILIES) | {"T13b"}

PRIDDY_WEI_EDGE = "PRIDDY_WEI_EDGE"
FALLBACK_SEARCH = "FALLBACK_SEARCH"


@dataclass(frozen=True)
class BondageCertificate:
    class_tag: str
    edge_set: tuple[Edge, ...]
    bound: int
    provenance: str
    gamma_before: int
    gamma_after: int
    verified: bool
    attempts: tuple[tuple[str, bool], ...] = field(default=(), compare=False)

    def to_text(self) -> str:
        edges = " ".join(f"{u}-{v}" for u, v in self.edge_set)
        return (
            f"class = {self.class_tag}\n"
            f"|B| = {len(self.edge_set)}\n"
            f"bound = {self.bound}\n"
            f"edges = {edges}\n"
            f"provenance = {self.provenance}\n"
            f"gamma_i before = {self.gamma_before}\n"
            f"gamma_i after = {self.gamma_after}\n"
            f"verified = {'yes' if self.verified else 'no'}\n"
        )


def _at(g: Graph, x: int, skip: int | None = None) -> list[Edge]:
    return [(x, y) for y in g.adj[x] if y != skip]


def build_bondage_set(g: Graph, e: PlanarEmbedding | None, w: ConfigWitness) -> tuple[Edge, ...]:
    """The edge set attached to a constructive configuration, through its roles."""
    r = w.get
    fam = w.family
    if fam in NO_CONSTRUCTION:
        raise ValueError(f"family {fam} has no constructive edge set")
    if fam == "T7b":
        if r("u1") is not None:
            raw = _at(g, r("u1")) + _at(g, r("v1")) + [(r("v2"), r("v2p"))]
        else:
            raw = _at(g, r("u"), skip=r("v")) + _at(g, r("v1"))
    elif fam == "T7c":
        raw = _at(g, r("v"))
    elif fam == "T7d":
        raw = _at(g, r("u"))
    elif fam == "T7e":
        raw = _at(g, r("u")) + _at(g, r("w"), skip=r("v"))
    elif fam == "T7f":
        raw = _at(g, r("u")) + _at(g, r("w1"))
    elif fam == "T7g":
        raw = _at(g, r("v1")) + _at(g, r("w1")) + [(r("u"), r("u2"))]
    elif fam == "T7h":
        raw = _at(g, r("u1")) + _at(g, r("w1")) + [(r("v"), r("v1"))]
    elif fam == "T7i":
        raw = _at(g, r("v2")) + [(r("w"), r("w1")), (r("u"), r("u2")), (r("u"), r("u3"))]
    elif fam == "T7j":
        raw = _at(g, r("w1")) + _at(g, r("u1")) + [(r("v"), r("v1"))]
    elif fam == "T9b":
        raw = _at(g, r("u1")) + [(r("u3"), r("z2")), (r("u3"), r("z3"))]
        if r("x") is not None:
            raw.append((r("u5"), r("x")))
    elif fam == "T9c":
        raw = _at(g, r("u1")) + [(r("u2"), r("z2")), (r("u3"), r("z3")), (r("u4"), r("z4"))]
    elif fam == "T14b":
        raw = _at(g, r("u1")) + [(r("u2"), r("u2p"))]
    else:
        raise ValueError(f"unknown family {fam}")
    for a, b in raw:
        if a is None or b is None or not g.has_edge(a, b):
            raise RoleEdgeMissing(f"{fam}: edge {a}-{b} is not in the graph ({w.to_line()})")
    return tuple(sorted({norm_edge(a, b) for a, b in raw}))


def verify_certificate(g: Graph, B) -> tuple[int, int, bool]:
    """Exact ``(gamma_i(G), gamma_i(G - B), increased)``."""
    before = gamma_i_value(g)
    after = gamma_i_value(g.remove_edges(B))
    return before, after, after > before


def claims_hold(g: Graph, B) -> bool:
    """Minimality check behind the isolated-vertex claims of the constructive proofs.

    For the solver's minimum set ``I'`` of ``G - B``: whenever a vertex
    ``x`` of ``I'`` has a ``G``-neighbour in ``I'`` and ``I' - {x}`` is an
    independent dominating set of ``G``, its size cannot beat gamma_i(G).
    """
    h = g.remove_edges(B)
    sol = set(gamma_i(h).witness)
    base = gamma_i_value(g)
    for x in sol:
        if any(y in sol for y in g.adj[x]):
            rest = sol - {x}
            if is_independent_dominating(g, rest) and len(rest) < base:
                return False
    return True


def certify_witness(
    g: Graph, e: PlanarEmbedding | None, w: ConfigWitness, class_tag: str | None = None
) -> BondageCertificate | None:
    """Certificate from one constructive witness alone, or None if its set does not verify."""
    tag = class_tag or w.class_tag
    B = build_bondage_set(g, e, w)
    before, after, ok = verify_certificate(g, B)
    if not ok or len(B) > PAPER_CLASSES[tag].bound:
        return None
    return BondageCertificate(tag, B, PAPER_CLASSES[tag].bound, w.to_line(), before, after, True)


def certify_graph(
    g: Graph, e: PlanarEmbedding | None, class_tag: str, *, jobs: int = 1
) -> BondageCertificate:
    cls = PAPER_CLASSES[class_tag]
    witnesses = detect_for_class(g, e, class_tag)
    before = gamma_i_value(g)
    attempts: list[tuple[str, bool]] = []

    def accept(B, provenance: str) -> BondageCertificate | None:
        if not B or len(B) > cls.bound:
            attempts.append((provenance, False))
            return None
        after = gamma_i_value(g.remove_edges(B))
        ok = after > before
        attempts.append((provenance, ok))
        if not ok:
            return None
        return BondageCertificate(class_tag, tuple(B), cls.bound, provenance, before, after, True, tuple(attempts))

    constructive = []
    for w in witnesses:
        if w.family not in NO_CONSTRUCTION:
            constructive.append((w, build_bondage_set(g, e, w)))
    edge_hits = [w for w in witnesses if w.family in EDGE_FAMILIES]
    cap = cls.bound
    if edge_hits:
        pw, pw_edge = priddy_wei_bound(g)
        cap = min(pw, cls.bound)

    tried: set[tuple[Edge, ...]] = set()

    def try_sets(pool) -> BondageCertificate | None:
        for w, B in pool:
            if B in tried:
                continue
            tried.add(B)
            cert = accept(B, w.to_line())
            if cert is not None:
                return cert
            log.info("constructive set for %s did not verify; its side assumptions fail here", w.to_line())
        return None

    # a proof's own set goes first when it is no larger than the edge bound
    cheap = [(w, B) for w, B in constructive if len(B) <= cap]
    cert = try_sets(cheap)
    if cert is not None:
        return cert
    if edge_hits:
        res = b_i_exact(g, cap=cap, prune=True, jobs=jobs)
        if res.b_i is not None:
            cert = accept(res.witness_edges, f"{PRIDDY_WEI_EDGE} {pw_edge[0]}-{pw_edge[1]} cap={pw} via {edge_hits[0].to_line()}")
            if cert is not None:
                return cert
        log.info("edge-bound search failed (cap %d); trying constructive sets", cap)
    cert = try_sets([(w, B) for w, B in constructive if len(B) > cap])
    if cert is not None:
        return cert

    res = b_i_exact(g, cap=cls.bound, prune=True, jobs=jobs)
    if res.b_i is not None:
        cert = accept(res.witness_edges, FALLBACK_SEARCH)
        if cert is not None:
            return cert
    raise TheoremViolation(
        f"no edge set of size <= {cls.bound} raises gamma_i for a {class_tag} graph",
        {"n": g.n, "edges": list(g.edges), "class": class_tag, "attempts": attempts},
    )
