"""Detection and validation of the unavoidable configurations.

Families and the roles they bind (``p`` suffix marks the other neighbour of
a 2-vertex, e.g. ``v1p`` is the neighbour of ``v1`` that is not ``v``):

=======  =============================================================
T7a      x, y: a (2,4-)- or (3,3-)-edge, ``d(x) <= d(y)``
T7b      v with exactly d(v)-1 2-neighbours, u the remaining one, and either
         u a 4- vertex with v1, or u in S(5+,1+) with u1, v1, v2, v2p
T7c      v (5-vertex), v1, v2, v1p, v2p on one 5-face ``f``
T7d      v in S(6+, d(v)-1), u (5- neighbour), v1, v2, v1p, v2p, face f
T7e      v in S(5+, [d(v)-2]+) with u, w its two remaining 3- neighbours
T7f      v in S(5,3), u (3-neighbour), 5-face f = v v1 v1p w1 w
T7g      v in S(5,3), 5-face f = v u u1 w1 w, u2 the third neighbour of u, v1
T7h      v in S(5,3), 5-faces f1 = v u u1 v1p v1 and f2 = v w w1 v2p v2
T7i      v in S(5,3), u a 4-neighbour, f1 = v u u1 v1p v1, f2 = v w w1 v2p v2,
         u2, u3 the remaining neighbours of u
T7j      v in S(5,3), f1 = v u u1 v1p v1, f2 = v u u2 v2p v2, 6-face
         f6 = v v1 v1p p v3p v3, w1 a 2-neighbour of w, u and w share no face
T9a      x, y: d(x) = 3, 3 <= d(y) <= 4
T9b      v, u1..u5, z1..z5 (4-faces v u_i z_i u_i+1), optional x, y
T9c      v, u1..u5, z1..z4, x, y, 5+-face f5 through x u1 v u5 y
L11      v (2-vertex), u (3- neighbour)
T13a     x, y: a (2,3-)-edge
T13b     v with d(v)-1 2-neighbours and u its 3- neighbour
T14a     x, y: a (2,2)-edge
T14b     v in S(3+, d(v)); u1, u2 with u1p, u2p
=======  =============================================================

Face-based families are relative to the supplied embedding; witnesses
carry its fingerprint.
"""

from __future__ import annotations

from dataclasses import dataclass

from .embedding import PlanarEmbedding, check_planar_embedding, is_planar
from .errors import ClassMismatch, TheoremViolation
from .graph import Graph, girth

FAMILY_ORDER = (
    "T7a", "T7b", "T7c", "T7d", "T7e", "T7f", "T7g", "T7h", "T7i", "T7j",
    "T9a", "T9b", "T9c",
    "L11", "T13a", "T13b",
    "T14a", "T14b",
)

CLASS_OF_FAMILY = {
    **{f: "g5d2" for f in FAMILY_ORDER if f.startswith("T7")},
    **{f: "g4d3" for f in FAMILY_ORDER if f.startswith("T9")},
    "L11": "g7d2", "T13a": "g7d2", "T13b": "g7d2",
    "T14a": "g10d2", "T14b": "g10d2",
}

FACE_FREE = {"T7a", "T7b", "T7e", "T9a", "L11", "T13a", "T13b", "T14a", "T14b"}


@dataclass(frozen=True)
class ConfigWitness:
    family: str
    roles: tuple[tuple[str, int], ...]
    faces: tuple[tuple[str, int], ...] = ()
    class_tag: str = ""
    embedding: str | None = None

    def __getitem__(self, name: str) -> int:
        for k, v in self.roles:
            if k == name:
                return v
        for k, v in self.faces:
            if k == name:
                return v
        raise KeyError(name)

    def get(self, name: str, default=None):
        try:
            return self[name]
        except KeyError:
            return default

    def sort_key(self):
        return (FAMILY_ORDER.index(self.family), tuple(v for _, v in self.roles), tuple(v for _, v in self.faces))

    def to_line(self) -> str:
        parts = [f"family={self.family}"]
        parts += [f"{k}={v}" for k, v in self.roles]
        parts += [f"{k}=f{v}" for k, v in self.faces]
        return " ".join(parts)


def parse_witness_line(line: str, class_tag: str = "", embedding: str | None = None) -> ConfigWitness:
    fields = dict(tok.split("=", 1) for tok in line.split())
    family = fields.pop("family")
    roles, faces = [], []
    for k, v in fields.items():
        if v.startswith("f"):
            faces.append((k, int(v[1:])))
        else:
            roles.append((k, int(v)))
    return ConfigWitness(family, tuple(roles), tuple(faces), class_tag or CLASS_OF_FAMILY[family], embedding)


def _w(family: str, roles: dict[str, int], faces: dict[str, int] | None = None, e: PlanarEmbedding | None = None) -> ConfigWitness:
    return ConfigWitness(
        family,
        tuple(roles.items()),
        tuple((faces or {}).items()),
        CLASS_OF_FAMILY[family],
        e.fingerprint if (e is not None and faces) else None,
    )


# -- shared helpers -----------------------------------------------------------


def other(g: Graph, x: int, not_this: int) -> int:
    """The neighbour of the 2-vertex ``x`` that is not ``not_this``."""
    a, b = g.adj[x]
    return b if a == not_this else a


def two_nbrs(g: Graph, v: int) -> list[int]:
    return [w for w in g.adj[v] if g.degree(w) == 2]


def walk_from(e: PlanarEmbedding, fid: int, v: int, b: int) -> list[int]:
    """Boundary walk of face ``fid`` starting with the dart ``v -> b``."""
    darts = e.faces[fid].darts
    i = darts.index((v, b))
    return [x for x, _ in darts[i:] + darts[:i]]


def _corner_walks(e: PlanarEmbedding, v: int, length: int | None = None):
    """Yield ``(a, b, fid, walk)`` per corner at ``v``; walk starts ``v, b`` and ends ``a``."""
    for a, b, fid in e.corners(v):
        if length is not None and e.faces[fid].length != length:
            continue
        yield a, b, fid, walk_from(e, fid, v, b)


def _oriented(walk: list[int], first: int) -> list[int]:
    """Re-read a walk starting ``v, ...`` so that ``first`` comes right after ``v``."""
    if walk[1] == first:
        return walk
    return [walk[0]] + walk[:0:-1]


# -- girth >= 5, min degree >= 2 -------------------------------------------------


def _edge_family(g: Graph, family: str, ok) -> list[ConfigWitness]:
    out = []
    for a, b in g.edges:
        x, y = sorted((a, b), key=lambda t: (g.degree(t), t))
        if ok(g.degree(x), g.degree(y)):
            out.append(_w(family, {"x": x, "y": y}))
    return out


def _t7a(g, e):
    return _edge_family(g, "T7a", lambda dx, dy: (dx == 2 and dy <= 4) or (dx == 3 and dy <= 3))


def _t7b(g, e):
    out = []
    for v in range(g.n):
        d = g.degree(v)
        twos = two_nbrs(g, v)
        if d < 5 or len(twos) != d - 1:
            continue  # S(d, d) has no remaining neighbour; family (e) covers it
        (u,) = [x for x in g.adj[v] if g.degree(x) != 2]
        if g.degree(u) <= 4:
            out += [_w("T7b", {"v": v, "u": u, "v1": v1}) for v1 in twos]
            continue
        for u1 in two_nbrs(g, u):
            for v1 in twos:
                for v2 in twos:
                    if v2 != v1:
                        roles = {"v": v, "u": u, "u1": u1, "v1": v1, "v2": v2, "v2p": other(g, v2, v)}
                        out.append(_w("T7b", roles))
    return out


def _five_face_pairs(g, e, v):
    """Corners of ``v`` on 5-faces whose two sides are both 2-vertices."""
    for a, b, fid, walk in _corner_walks(e, v, 5):
        if g.degree(a) == 2 and g.degree(b) == 2:
            v1, v2 = min(a, b), max(a, b)
            yield v1, v2, fid


def _t7c(g, e):
    out = []
    for v in range(g.n):
        if g.degree(v) != 5:
            continue
        for v1, v2, fid in _five_face_pairs(g, e, v):
            out.append(_w("T7c", {"v": v, "v1": v1, "v2": v2, "v1p": other(g, v1, v), "v2p": other(g, v2, v)}, {"f": fid}, e))
    return out


def _t7d(g, e):
    out = []
    for v in range(g.n):
        d = g.degree(v)
        if d < 6 or g.two_count(v) != d - 1:
            continue
        (u,) = [x for x in g.adj[v] if g.degree(x) != 2]
        if g.degree(u) > 5:
            continue
        for v1, v2, fid in _five_face_pairs(g, e, v):
            roles = {"v": v, "u": u, "v1": v1, "v2": v2, "v1p": other(g, v1, v), "v2p": other(g, v2, v)}
            out.append(_w("T7d", roles, {"f": fid}, e))
    return out


def _t7e(g, e):
    out = []
    for v in range(g.n):
        d = g.degree(v)
        if d < 5 or g.two_count(v) < d - 2 or any(g.degree(x) > 3 for x in g.adj[v]):
            continue
        u, w = sorted(g.adj[v], key=lambda x: (-g.degree(x), x))[:2]
        out.append(_w("T7e", {"v": v, "u": u, "w": w}))
    return out


def _s53_split(g: Graph, v: int):
    """For ``v`` in S(5,3): its 2-neighbours and its two other neighbours."""
    if g.degree(v) != 5:
        return None
    twos = two_nbrs(g, v)
    if len(twos) != 3:
        return None
    rest = [x for x in g.adj[v] if g.degree(x) != 2]
    return twos, rest


def _t7f(g, e):
    out = []
    for v in range(g.n):
        split = _s53_split(g, v)
        if split is None:
            continue
        _, rest = split
        for u, w in (rest, rest[::-1]):
            if g.degree(u) != 3 or g.degree(w) < 5:
                continue
            for a, b, fid, walk in _corner_walks(e, v, 5):
                if w not in (a, b):
                    continue
                v1 = b if a == w else a
                if g.degree(v1) != 2:
                    continue
                walk = _oriented(walk, w)  # v, w, w1, v1p, v1
                w1 = walk[2]
                if g.degree(w1) != 2:
                    continue
                roles = {"v": v, "u": u, "v1": v1, "v1p": walk[3], "w": w, "w1": w1}
                out.append(_w("T7f", roles, {"f": fid}, e))
    return out


def _t7g(g, e):
    out = []
    for v in range(g.n):
        split = _s53_split(g, v)
        if split is None:
            continue
        twos, rest = split
        for u, w in (rest, rest[::-1]):
            if g.degree(u) != 3 or g.degree(w) < 5:
                continue
            for a, b, fid, walk in _corner_walks(e, v, 5):
                if {a, b} != {u, w}:
                    continue
                walk = _oriented(walk, u)  # v, u, u1, w1, w
                u1, w1 = walk[2], walk[3]
                if g.degree(w1) != 2:
                    continue
                (u2,) = [x for x in g.adj[u] if x not in (v, u1)]
                for v1 in twos:
                    roles = {"v": v, "u": u, "u1": u1, "u2": u2, "w": w, "w1": w1, "v1": v1}
                    out.append(_w("T7g", roles, {"f": fid}, e))
    return out


def _petals(g, e, v, u, need_two: bool):
    """5-faces ``v u u1 x v1`` at the corner between ``u`` and a 2-neighbour ``v1``.

    Yields ``(v1, x, u1, fid)``; ``need_two`` demands ``u1`` be a 2-vertex.
    """
    for a, b, fid, walk in _corner_walks(e, v, 5):
        if u not in (a, b):
            continue
        v1 = b if a == u else a
        if v1 == u or g.degree(v1) != 2:
            continue
        walk = _oriented(walk, u)
        u1 = walk[2]
        if need_two and g.degree(u1) != 2:
            continue
        yield v1, walk[3], u1, fid


def _t7h(g, e):
    out = []
    for v in range(g.n):
        split = _s53_split(g, v)
        if split is None:
            continue
        _, rest = split
        if any(g.degree(x) < 5 for x in rest):
            continue
        for u, w in (rest, rest[::-1]):
            for v1, v1p, u1, f1 in _petals(g, e, v, u, True):
                for v2, v2p, w1, f2 in _petals(g, e, v, w, True):
                    if v1 == v2:
                        continue
                    roles = {"v": v, "u": u, "w": w, "u1": u1, "w1": w1, "v1": v1, "v1p": v1p, "v2": v2, "v2p": v2p}
                    out.append(_w("T7h", roles, {"f1": f1, "f2": f2}, e))
    return out


def _t7i(g, e):
    out = []
    for v in range(g.n):
        split = _s53_split(g, v)
        if split is None:
            continue
        _, rest = split
        for u, w in (rest, rest[::-1]):
            if g.degree(u) != 4 or g.degree(w) < 5:
                continue
            for v1, v1p, u1, f1 in _petals(g, e, v, u, False):
                for v2, v2p, w1, f2 in _petals(g, e, v, w, True):
                    if v1 == v2:
                        continue
                    u2, u3 = [x for x in g.adj[u] if x not in (v, u1)]
                    roles = {
                        "v": v, "u": u, "u1": u1, "u2": u2, "u3": u3, "w": w, "w1": w1,
                        "v1": v1, "v1p": v1p, "v2": v2, "v2p": v2p,
                    }
                    out.append(_w("T7i", roles, {"f1": f1, "f2": f2}, e))
    return out


def _t7j(g, e):
    out = []
    for v in range(g.n):
        split = _s53_split(g, v)
        if split is None:
            continue
        twos, rest = split
        if any(g.degree(x) < 5 for x in rest):
            continue
        for u, w in (rest, rest[::-1]):
            w_twos = two_nbrs(g, w)
            if not w_twos or e.faces_containing((u, w)):
                continue
            # the unique corner at v flanked by two 2-neighbours
            pair = [(a, b, fid) for a, b, fid in e.corners(v) if a in twos and b in twos]
            if len(pair) != 1:
                continue
            a6, b6, f6 = pair[0]
            face6 = e.faces[f6]
            if face6.length != 6 or face6.count(lambda x: g.degree(x) == 2) != 3:
                continue
            p = walk_from(e, f6, v, b6)[3]  # v, b6, b6', p, a6', a6
            if g.degree(p) != 2:
                continue
            petals = list(_petals(g, e, v, u, True))
            if len(petals) != 2:
                continue
            for (v1, v1p, u1, f1), (v2, v2p, u2, f2) in (petals, petals[::-1]):
                if v1 not in (a6, b6):
                    continue
                v3 = b6 if a6 == v1 else a6
                for w1 in w_twos:
                    roles = {
                    "v": v, "u": u, "w": w, "u1": u1, "u2": u2, "w1": w1, "v1": v1, "v2": v2, "v3": v3,
                    "v1p": other(g, v1, v), "v3p": other(g, v3, v), "p": p,
                }
                    out.append(_w("T7j", roles, {"f1": f1, "f2": f2, "f6": f6}, e))
    return out


# -- girth >= 4, min degree >= 3 ----------------------------------------------


def _t9a(g, e):
    return _edge_family(g, "T9a", lambda dx, dy: dx == 3 and 3 <= dy <= 4)


def _labelled_rings(e: PlanarEmbedding, v: int, last: int):
    """Both orientations of the rotation at ``v`` ending with ``last``."""
    rot = list(e.rotation[v])
    i = rot.index(last)
    fwd = rot[i + 1 :] + rot[: i + 1]
    bwd = fwd[-2::-1] + [last]
    return fwd, bwd


def _opposite(e: PlanarEmbedding, v: int, a: int, b: int) -> tuple[int, int] | None:
    """Vertex opposite ``v`` on the face at corner ``(a, b)`` or ``(b, a)``, and the face id."""
    for x, y, fid in e.corners(v):
        if {x, y} == {a, b}:
            face = e.faces[fid]
            if face.length != 4:
                return None
            walk = walk_from(e, fid, v, y)
            return walk[2], fid
    return None


def _t9b(g, e):
    out = []
    for v in range(g.n):
        if g.degree(v) != 5:
            continue
        threes = [x for x in g.adj[v] if g.degree(x) == 3]
        if len(threes) != 4:
            continue
        (u5,) = [x for x in g.adj[v] if g.degree(x) != 3]
        if g.degree(u5) > 5 or any(e.faces[f].length != 4 for f in e.incidences(v)):
            continue
        for ring in _labelled_rings(e, v, u5):
            us = ring  # u1..u5
            zs = []
            for i in range(5):
                zs.append(_opposite(e, v, us[i], us[(i + 1) % 5])[0])
            roles = {"v": v}
            roles.update({f"u{i + 1}": us[i] for i in range(5)})
            roles.update({f"z{i + 1}": zs[i] for i in range(5)})
            extra = sorted(x for x in g.adj[u5] if x not in (v, zs[3], zs[4]))
            for name, x in zip(("x", "y"), extra):
                roles[name] = x
            out.append(_w("T9b", roles, {}, e))
    return out


def _t9c(g, e):
    out = []
    for v in range(g.n):
        if g.degree(v) != 5 or any(g.degree(x) != 3 for x in g.adj[v]):
            continue
        corners = e.corners(v)
        long = [(a, b, fid) for a, b, fid in corners if e.faces[fid].length >= 5]
        if len(long) != 1 or sum(1 for *_, f in corners if e.faces[f].length == 4) != 4:
            continue
        a, b, f5 = long[0]
        for u5, u1 in ((a, b), (b, a)):
            ring = _labelled_rings(e, v, u5)
            us = ring[0] if ring[0][0] == u1 else ring[1]
            zs = [_opposite(e, v, us[i], us[i + 1])[0] for i in range(4)]
            walk = _oriented(walk_from(e, f5, v, b), u1)  # v, u1, x, ..., y, u5
            roles = {"v": v}
            roles.update({f"u{i + 1}": us[i] for i in range(5)})
            roles.update({f"z{i + 1}": zs[i] for i in range(4)})
            roles["x"], roles["y"] = walk[2], walk[-2]
            out.append(_w("T9c", roles, {"f5": f5}, e))
    return out


# -- girth >= 7 and girth >= 10, min degree >= 2 ------------------------------------


def _l11(g, e=None):
    out = []
    for x, y in g.edges:
        for v, u in ((x, y), (y, x)):
            if g.degree(v) == 2 and g.degree(u) <= 3:
                out.append(_w("L11", {"v": v, "u": u}))
                break
    return out


def _t13a(g, e=None):
    return _edge_family(g, "T13a", lambda dx, dy: dx == 2 and dy <= 3)


def _t13b(g, e=None):
    out = []
    for v in range(g.n):
        d = g.degree(v)
        if d < 4 or g.two_count(v) != d - 1:
            continue
        (u,) = [x for x in g.adj[v] if g.degree(x) != 2]
        if g.degree(u) <= 3:
            out.append(_w("T13b", {"v": v, "u": u}))
    return out


def _t14a(g, e=None):
    return _edge_family(g, "T14a", lambda dx, dy: dx == 2 and dy == 2)


def _t14b(g, e=None):
    out = []
    for v in range(g.n):
        if g.degree(v) >= 3 and g.two_count(v) == g.degree(v):
            for u1 in g.adj[v]:
                for u2 in g.adj[v]:
                    if u1 != u2:
                        roles = {"v": v, "u1": u1, "u1p": other(g, u1, v), "u2": u2, "u2p": other(g, u2, v)}
                        out.append(_w("T14b", roles))
    return out


DETECTORS = {
    "T7a": _t7a, "T7b": _t7b, "T7c": _t7c, "T7d": _t7d, "T7e": _t7e,
    "T7f": _t7f, "T7g": _t7g, "T7h": _t7h, "T7i": _t7i, "T7j": _t7j,
    "T9a": _t9a, "T9b": _t9b, "T9c": _t9c,
    "L11": _l11, "T13a": _t13a, "T13b": _t13b,
    "T14a": _t14a, "T14b": _t14b,
}


def detect_families(g: Graph, e: PlanarEmbedding | None, families) -> list[ConfigWitness]:
    """Run the named detectors with no class checks, in canonical order."""
    found = []
    for fam in families:
        found.extend(DETECTORS[fam](g, e))
    return sorted(found, key=ConfigWitness.sort_key)


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ClassMismatch(msg)


def _check_class(g: Graph, e: PlanarEmbedding | None, min_degree: int, min_girth: int) -> None:
    _require(g.is_connected(), "graph is not connected")
    _require(g.min_degree() >= min_degree, f"minimum degree {g.min_degree()} < {min_degree}")
    gg = girth(g)
    _require(gg >= min_girth, f"girth {gg} < {min_girth}")
    if e is None:
        _require(is_planar(g), "graph is not planar")
    else:
        _require(e.graph == g, "embedding belongs to a different graph")
        report = check_planar_embedding(e)
        _require(report.ok, "; ".join(report.failures))


def _nonempty(found: list[ConfigWitness], what: str, g: Graph) -> list[ConfigWitness]:
    if not found:
        raise TheoremViolation(f"no {what} configuration found", {"n": g.n, "edges": list(g.edges)})
    return found


def detect_girth5(g: Graph, e: PlanarEmbedding) -> list[ConfigWitness]:
    _check_class(g, e, 2, 5)
    fams = [f for f in FAMILY_ORDER if f.startswith("T7")]
    return _nonempty(detect_families(g, e, fams), "girth-5 (T7a-T7j)", g)


def detect_girth4_mindeg3(g: Graph, e: PlanarEmbedding) -> list[ConfigWitness]:
    _check_class(g, e, 3, 4)
    return _nonempty(detect_families(g, e, ["T9a", "T9b", "T9c"]), "girth-4 (T9a-T9c)", g)


def detect_girth7(g: Graph) -> list[ConfigWitness]:
    _check_class(g, None, 2, 7)
    found = detect_families(g, None, ["L11", "T13a", "T13b"])
    _nonempty([w for w in found if w.family == "L11"], "L11 (2-vertex with a 3- neighbour)", g)
    _nonempty([w for w in found if w.family != "L11"], "girth-7 (T13a/T13b)", g)
    return found


def detect_girth10(g: Graph) -> list[ConfigWitness]:
    _check_class(g, None, 2, 10)
    return _nonempty(detect_families(g, None, ["T14a", "T14b"]), "girth-10 (T14a/T14b)", g)


def detect_for_class(g: Graph, e: PlanarEmbedding | None, class_tag: str) -> list[ConfigWitness]:
    if class_tag == "g5d2":
        return detect_girth5(g, e)
    if class_tag == "g4d3":
        return detect_girth4_mindeg3(g, e)
    if class_tag == "g7d2":
        return detect_girth7(g)
    if class_tag == "g10d2":
        return detect_girth10(g)
    raise ValueError(f"unknown class {class_tag!r}")


# -- validation ---------------------------------------------------------------------


class _Checker:
    """Evaluates witness clauses; any missing role or face fails the check."""

    def __init__(self, g: Graph, e: PlanarEmbedding | None, w: ConfigWitness) -> None:
        self.g, self.e, self.w = g, e, w

    def r(self, name: str) -> int:
        v = self.w[name]
        if not 0 <= v < self.g.n:
            raise KeyError(name)
        return v

    def d(self, name: str) -> int:
        return self.g.degree(self.r(name))

    def t2(self, name: str) -> int:
        return self.g.two_count(self.r(name))

    def adj(self, a: str, b: str) -> bool:
        return self.g.has_edge(self.r(a), self.r(b))

    def distinct(self, *names: str) -> bool:
        return len({self.r(n) for n in names}) == len(names)

    def face(self, name: str):
        if self.e is None:
            raise KeyError(name)
        fid = self.w[name]
        if not 0 <= fid < len(self.e.faces):
            raise KeyError(name)
        return self.e.faces[fid]

    def on_face(self, fname: str, *names: str, length: int | None = None) -> bool:
        f = self.face(fname)
        if length is not None and f.length != length:
            return False
        return all(self.r(n) in f.vertex_set for n in names)

    def cycle_face(self, fname: str, names: list[str]) -> bool:
        """Face boundary is exactly the closed walk ``names`` (either direction)."""
        f = self.face(fname)
        seq = [self.r(n) for n in names]
        walk = list(f.walk)
        if len(walk) != len(seq):
            return False
        for cand in (seq, seq[:1] + seq[:0:-1]):
            for s in range(len(walk)):
                if walk[s:] + walk[:s] == cand:
                    return True
        return False


def _valid_edge(c: _Checker, ok) -> bool:
    return c.adj("x", "y") and ok(c.d("x"), c.d("y"))


def _valid_t7b(c: _Checker) -> bool:
    d = c.d("v")
    base = d >= 5 and c.t2("v") == d - 1 and c.d("v1") == 2 and c.adj("v", "v1")
    if not (base and c.adj("v", "u") and c.d("u") != 2):
        return False
    if c.w.get("u1") is None:
        return c.d("u") <= 4
    return (
        c.d("u") >= 5 and c.t2("u") >= 1 and c.d("u1") == 2 and c.adj("u", "u1")
        and c.d("v2") == 2 and c.adj("v", "v2") and c.distinct("v1", "v2")
        and c.adj("v2", "v2p") and c.r("v2p") != c.r("v")
    )


def _valid_petal(c: _Checker, fname, v, x, x1, y, yp) -> bool:
    return c.cycle_face(fname, [v, x, x1, yp, y]) and c.d(y) == 2 and c.adj(v, x) and c.adj(v, y)


def _valid_t7cd(c: _Checker, family: str) -> bool:
    if family == "T7c":
        head = c.d("v") == 5
    else:
        d = c.d("v")
        head = d >= 6 and c.t2("v") == d - 1 and c.adj("v", "u") and c.d("u") != 2 and c.d("u") <= 5
    return (
        head and c.d("v1") == 2 and c.d("v2") == 2 and c.distinct("v1", "v2")
        and c.cycle_face("f", ["v", "v1", "v1p", "v2p", "v2"])
    )


def _valid_t7e(c: _Checker) -> bool:
    d = c.d("v")
    nbrs = c.g.adj[c.r("v")]
    return (
        d >= 5 and c.t2("v") >= d - 2 and c.distinct("u", "w") and c.adj("v", "u") and c.adj("v", "w")
        and all(c.g.degree(x) == 2 for x in nbrs if x not in (c.r("u"), c.r("w")))
        and c.d("u") <= 3 and c.d("w") <= 3
    )


def _s53(c: _Checker) -> bool:
    return c.d("v") == 5 and c.t2("v") == 3


def _valid_t7f(c: _Checker) -> bool:
    return (
        _s53(c) and c.adj("v", "u") and c.d("u") == 3 and c.adj("v", "w") and c.d("w") >= 5
        and c.d("v1") == 2 and c.d("w1") == 2
        and c.cycle_face("f", ["v", "v1", "v1p", "w1", "w"])
    )


def _valid_t7g(c: _Checker) -> bool:
    return (
        _s53(c) and c.adj("v", "u") and c.d("u") == 3 and c.adj("v", "w") and c.d("w") >= 5
        and c.d("w1") == 2 and c.cycle_face("f", ["v", "u", "u1", "w1", "w"])
        and c.adj("u", "u2") and c.distinct("v", "u1", "u2")
        and c.adj("v", "v1") and c.d("v1") == 2
    )


def _valid_t7h(c: _Checker) -> bool:
    return (
        _s53(c) and c.d("u") >= 5 and c.d("w") >= 5 and c.distinct("u", "w", "v1", "v2")
        and c.d("u1") == 2 and c.d("w1") == 2
        and _valid_petal(c, "f1", "v", "u", "u1", "v1", "v1p")
        and _valid_petal(c, "f2", "v", "w", "w1", "v2", "v2p")
    )


def _valid_t7i(c: _Checker) -> bool:
    return (
        _s53(c) and c.d("u") == 4 and c.d("w") >= 5 and c.distinct("u", "w", "v1", "v2")
        and c.d("w1") == 2
        and _valid_petal(c, "f1", "v", "u", "u1", "v1", "v1p")
        and _valid_petal(c, "f2", "v", "w", "w1", "v2", "v2p")
        and c.distinct("v", "u1", "u2", "u3") and c.adj("u", "u2") and c.adj("u", "u3")
    )


def _valid_t7j(c: _Checker) -> bool:
    g, e = c.g, c.e
    u, w = c.r("u"), c.r("w")
    if not (_s53(c) and c.d("u") >= 5 and c.d("w") >= 5 and c.distinct("u", "w", "v1", "v2", "v3")):
        return False
    if any({u, w} <= f.vertex_set for f in e.faces):
        return False
    f6 = c.face("f6")
    return (
        c.adj("w", "w1") and c.d("w1") == 2
        and c.d("u1") == 2 and c.d("u2") == 2 and c.distinct("u1", "u2")
        and c.adj("u", "u1") and c.adj("u", "u2")
        and c.d("v1") == 2 and c.d("v2") == 2 and c.d("v3") == 2
        and c.adj("v", "v1") and c.adj("v", "v2") and c.adj("v", "v3")
        and c.adj("v1", "v1p") and c.adj("v3", "v3p")
        and c.on_face("f1", "v", "u", "u1", "v1", length=5)
        and c.on_face("f2", "v", "u", "u2", "v2", length=5)
        and c.cycle_face("f6", ["v", "v1", "v1p", "p", "v3p", "v3"])
        and c.d("p") == 2 and f6.count(lambda x: g.degree(x) == 2) == 3
    )


def _ring_ok(c: _Checker, count: int) -> bool:
    """``v u_i z_i u_i+1`` is a 4-face for the first ``count`` ring positions."""
    for i in range(1, count + 1):
        j = i % 5 + 1
        vs = [c.r("v"), c.r(f"u{i}"), c.r(f"z{i}"), c.r(f"u{j}")]
        if not any(f.length == 4 and sorted(f.walk) == sorted(vs) and len(set(f.walk)) == 4 for f in c.e.faces):
            return False
        if not (c.adj("v", f"u{i}") and c.adj(f"u{i}", f"z{i}") and c.adj(f"z{i}", f"u{j}")):
            return False
    return True


def _valid_t9b(c: _Checker) -> bool:
    us = [f"u{i}" for i in range(1, 6)]
    v = c.r("v")
    if not (c.d("v") == 5 and c.distinct(*us) and all(c.adj("v", x) for x in us)):
        return False
    if not (all(c.d(x) == 3 for x in us[:4]) and c.d("u5") != 3 and c.d("u5") <= 5):
        return False
    if any(c.e.faces[f].length != 4 for f in c.e.incidences(v)):
        return False
    for name in ("x", "y"):
        if c.w.get(name) is not None:
            if not c.adj("u5", name) or c.r(name) in (v, c.r("z4"), c.r("z5")):
                return False
    return _ring_ok(c, 5)


def _valid_t9c(c: _Checker) -> bool:
    us = [f"u{i}" for i in range(1, 6)]
    v = c.r("v")
    if not (c.d("v") == 5 and c.distinct(*us) and all(c.adj("v", x) and c.d(x) == 3 for x in us)):
        return False
    lengths = sorted(c.e.faces[f].length for f in c.e.incidences(v))
    if lengths[:4] != [4, 4, 4, 4] or lengths[4] < 5:
        return False
    f5 = c.face("f5")
    return (
        f5.length >= 5 and c.on_face("f5", "v", "u1", "u5", "x", "y")
        and c.adj("u1", "x") and c.adj("u5", "y") and c.r("x") != v and c.r("y") != v
        and _ring_ok(c, 4)
    )


def _valid_t13b(c: _Checker) -> bool:
    d = c.d("v")
    return d >= 4 and c.t2("v") == d - 1 and c.adj("v", "u") and c.d("u") != 2 and c.d("u") <= 3


def _valid_t14b(c: _Checker) -> bool:
    return (
        c.d("v") >= 3 and c.t2("v") == c.d("v") and c.distinct("u1", "u2")
        and c.adj("v", "u1") and c.adj("v", "u2")
        and c.adj("u1", "u1p") and c.adj("u2", "u2p") and c.r("u1p") != c.r("v") and c.r("u2p") != c.r("v")
    )


def validate_witness(g: Graph, e: PlanarEmbedding | None, w: ConfigWitness) -> bool:
    """True iff every clause of the witness's family holds for its roles."""
    if w.family not in DETECTORS:
        return False
    if w.faces:
        if e is None or (w.embedding is not None and w.embedding != e.fingerprint):
            return False
    c = _Checker(g, e, w)
    fam = w.family
    try:
        if fam == "T7a":
            return _valid_edge(c, lambda dx, dy: (dx == 2 and dy <= 4) or (dx == 3 and dy <= 3))
        if fam == "T9a":
            return _valid_edge(c, lambda dx, dy: dx == 3 and 3 <= dy <= 4)
        if fam == "T13a":
            return _valid_edge(c, lambda dx, dy: dx == 2 and dy <= 3)
        if fam == "T14a":
            return _valid_edge(c, lambda dx, dy: dx == 2 and dy == 2)
        if fam == "L11":
            return c.adj("v", "u") and c.d("v") == 2 and c.d("u") <= 3
        if fam == "T7b":
            return _valid_t7b(c)
        if fam in ("T7c", "T7d"):
            return _valid_t7cd(c, fam)
        if fam == "T7e":
            return _valid_t7e(c)
        if fam in ("T9b", "T9c") and e is None:
            return False
        validator = {
            "T7f": _valid_t7f, "T7g": _valid_t7g, "T7h": _valid_t7h, "T7i": _valid_t7i,
            "T7j": _valid_t7j, "T9b": _valid_t9b, "T9c": _valid_t9c,
            "T13b": _valid_t13b, "T14b": _valid_t14b,
        }[fam]
        return validator(c)
    except (KeyError, ValueError):
        return False
