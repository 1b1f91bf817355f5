"""Exact-rational discharging: charging schemes, rule systems and final-charge checks.

Rules fire in a single simultaneous round. Every amount is computed from
the graph and embedding alone (degrees, 2-neighbour counts, face lengths),
never from intermediate charges, so the order in which transfers are
listed cannot change the outcome.

Face incidences are counted with multiplicity: a vertex that occurs twice
on a boundary walk takes (or gives) twice, and the ``|V(f) & S_i|``
counts used inside rule amounts count walk positions.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .embedding import PlanarEmbedding
from .errors import ClassMismatch, DisconnectedError, SchemeMismatch, TheoremViolation
from .graph import Graph, girth

Element = tuple[str, int]  # ("v", vertex) or ("f", face)


class Scheme(enum.Enum):
    VERTEX = "vertex"
    FACE = "face"
    BALANCED = "balanced"


SCHEME_TOTAL = {Scheme.VERTEX: -12, Scheme.FACE: -12, Scheme.BALANCED: -8}


def vertex_charge(scheme: Scheme, d: int) -> Fraction:
    if scheme is Scheme.VERTEX:
        return Fraction(d - 6)
    if scheme is Scheme.FACE:
        return Fraction(2 * d - 6)
    return Fraction(d - 4)


def face_charge(scheme: Scheme, length: int) -> Fraction:
    if scheme is Scheme.VERTEX:
        return Fraction(2 * length - 6)
    if scheme is Scheme.FACE:
        return Fraction(length - 6)
    return Fraction(length - 4)


@dataclass(frozen=True)
class Transfer:
    src: Element
    dst: Element
    amount: Fraction
    rule: str


@dataclass(frozen=True)
class ChargeState:
    scheme: Scheme
    vertex_charge: tuple[Fraction, ...]
    face_charge: tuple[Fraction, ...]
    ruleset_applied: str | None = None
    transfers: tuple[Transfer, ...] = ()

    def total(self) -> Fraction:
        return sum(self.vertex_charge, Fraction(0)) + sum(self.face_charge, Fraction(0))

    def charge(self, el: Element) -> Fraction:
        kind, i = el
        return self.vertex_charge[i] if kind == "v" else self.face_charge[i]


def initial_charges(e: PlanarEmbedding, scheme: Scheme) -> ChargeState:
    g = e.graph
    if not g.is_connected():
        raise DisconnectedError("charging needs a connected embedded graph")
    return ChargeState(
        scheme,
        tuple(vertex_charge(scheme, g.degree(v)) for v in range(g.n)),
        tuple(face_charge(scheme, f.length) for f in e.faces),
    )


# -- rule systems -------------------------------------------------------------------------


class _View:
    """Degree and face statistics shared by the rule functions."""

    def __init__(self, g: Graph, e: PlanarEmbedding) -> None:
        self.g, self.e = g, e
        self.deg = [g.degree(v) for v in range(g.n)]
        self.t2 = [g.two_count(v) for v in range(g.n)]
        self.t3 = [sum(1 for w in g.adj[v] if self.deg[w] == 3) for v in range(g.n)]

    def in_s(self, v: int, i: int, j: int, at_least: bool = False) -> bool:
        return self.deg[v] == i and (self.t2[v] >= j if at_least else self.t2[v] == j)

    def face_count(self, fid: int, pred: Callable[[int], bool]) -> int:
        return sum(1 for x in self.e.faces[fid].walk if pred(x))


def _vv(src: int, dst: int, amount: Fraction, rule: str) -> Transfer:
    return Transfer(("v", src), ("v", dst), amount, rule)


def _fv(fid: int, dst: int, amount: Fraction, rule: str) -> Transfer:
    return Transfer(("f", fid), ("v", dst), amount, rule)


def _t7_rules(s: _View) -> list[Transfer]:
    g, e = s.g, s.e
    out: list[Transfer] = []
    half, third, twelfth = Fraction(1, 2), Fraction(1, 3), Fraction(1, 12)
    s65 = [s.in_s(v, 6, 5) for v in range(g.n)]
    s53 = [s.in_s(v, 5, 3, at_least=True) for v in range(g.n)]
    recipient = [a or b for a, b in zip(s65, s53)]
    for v in range(g.n):
        if s.deg[v] == 2:
            out += [_vv(u, v, half, "R1") for u in g.adj[v]]
    for f in e.faces:
        walk = f.walk
        n2 = s.face_count(f.id, lambda x: s.deg[x] == 2)
        n3 = s.face_count(f.id, lambda x: s.deg[x] == 3)
        n65 = s.face_count(f.id, lambda x: s65[x])
        n53 = s.face_count(f.id, lambda x: s53[x])
        gives = f.length >= 6 or (f.length == 5 and n2 <= 1)
        share = None
        if gives and n53:
            share = (f.length - 4 - Fraction(n2, 2) - Fraction(n3, 3) - Fraction(n65, 12)) / n53
        for x in walk:
            if s.deg[x] == 2:
                out.append(_fv(f.id, x, half, "R1"))
            elif s.deg[x] == 3:
                out.append(_fv(f.id, x, third, "R2"))
            elif gives and s65[x]:
                out.append(_fv(f.id, x, twelfth, "R3"))
            elif share is not None and s53[x]:
                out.append(_fv(f.id, x, share, "R4"))
    for x in range(g.n):
        if s.deg[x] < 5 or s.t2[x] != 0:
            continue
        takers = [r for r in g.adj[x] if recipient[r]]
        if not takers:
            continue
        amount = Fraction(s.deg[x] - 4, len(takers))
        out += [_vv(x, r, amount, "R3" if s65[r] else "R4") for r in takers]
    return out


def _t9_qualifies_r2(s: _View, v: int) -> bool:
    return s.deg[v] == 5 and s.t3[v] >= 4


def _t9_qualifies_r3(s: _View, v: int) -> bool:
    return (
        s.deg[v] == 5 and s.t3[v] == 4
        and all(s.e.faces[f].length == 4 for f in s.e.incidences(v))
    )


def _t9_rules(s: _View) -> list[Transfer]:
    g, e = s.g, s.e
    out: list[Transfer] = []
    for v in range(g.n):
        if s.deg[v] == 3:
            out += [_vv(u, v, Fraction(1, 3), "R1") for u in g.adj[v]]
    for f in e.faces:
        if f.length < 5:
            continue
        takers = [x for x in f.walk if _t9_qualifies_r2(s, x)]
        if takers:
            amount = Fraction(f.length - 4, len(takers))
            out += [_fv(f.id, x, amount, "R2") for x in takers]
    for x in range(g.n):
        if s.deg[x] < 6:
            continue
        takers = [r for r in g.adj[x] if _t9_qualifies_r3(s, r)]
        if takers:
            amount = (s.deg[x] - 4 - Fraction(s.t3[x], 3)) / len(takers)
            out += [_vv(x, r, amount, "R3") for r in takers]
    return out


def _t13_rules(s: _View) -> list[Transfer]:
    g, e = s.g, s.e
    out: list[Transfer] = []
    for v in range(g.n):
        if s.deg[v] != 2:
            continue
        for u in g.adj[v]:
            if s.deg[u] > 1:
                out.append(_vv(u, v, Fraction(2 * s.deg[u] - 6, s.deg[u] - 1), "R1"))
    for f in e.faces:
        half = f.length // 2
        if not half:
            continue
        for x in f.walk:
            if s.deg[x] == 2:
                out.append(_fv(f.id, x, Fraction(f.length - 6, half), "R1"))
    return out


def _t14_rules(s: _View) -> list[Transfer]:
    g, e = s.g, s.e
    out: list[Transfer] = []
    for v in range(g.n):
        if s.deg[v] == 2:
            out += [_vv(u, v, Fraction(1, 5), "R1") for u in g.adj[v]]
            faces = sorted(set(e.incidences(v)))
            out += [_fv(f, v, Fraction(8, 5 * len(faces)), "R1") for f in faces]
        elif s.deg[v] == 3 and 0 < s.t2[v] <= 2:
            big = {w for w in g.adj[v] if s.deg[w] >= 3}
            faces = [f for f in sorted(set(e.incidences(v))) if big & e.faces[f].vertex_set]
            if faces:
                amount = Fraction(s.t2[v], 5 * len(faces))
                out += [_fv(f, v, amount, "R2") for f in faces]
    return out


@dataclass(frozen=True)
class RuleSet:
    id: str
    scheme: Scheme
    min_degree: int
    min_girth: int
    rules: Callable[[_View], list[Transfer]]


RULESETS: dict[str, RuleSet] = {
    "T7": RuleSet("T7", Scheme.BALANCED, 2, 5, _t7_rules),
    "T9": RuleSet("T9", Scheme.BALANCED, 3, 4, _t9_rules),
    "T13": RuleSet("T13", Scheme.FACE, 2, 7, _t13_rules),
    "T14": RuleSet("T14", Scheme.FACE, 2, 10, _t14_rules),
}


def transfers_for(rs: RuleSet | str, g: Graph, e: PlanarEmbedding) -> list[Transfer]:
    rs = RULESETS[rs] if isinstance(rs, str) else rs
    return rs.rules(_View(g, e))


def apply_rules(
    state: ChargeState, rs: RuleSet | str, g: Graph, e: PlanarEmbedding, *, check_class: bool = True
) -> ChargeState:
    """One simultaneous round of ``rs``; the returned state lists every transfer."""
    rs = RULESETS[rs] if isinstance(rs, str) else rs
    if state.scheme is not rs.scheme:
        raise SchemeMismatch(f"{rs.id} runs on {rs.scheme.value} charging, got {state.scheme.value}")
    if check_class:
        if g.min_degree() < rs.min_degree or girth(g) < rs.min_girth:
            raise ClassMismatch(f"{rs.id} needs minimum degree >= {rs.min_degree} and girth >= {rs.min_girth}")
    moves = transfers_for(rs, g, e)
    vc = list(state.vertex_charge)
    fc = list(state.face_charge)
    for t in moves:
        for (kind, i), sign in ((t.src, -1), (t.dst, 1)):
            if kind == "v":
                vc[i] += sign * t.amount
            else:
                fc[i] += sign * t.amount
    return ChargeState(state.scheme, tuple(vc), tuple(fc), rs.id, state.transfers + tuple(moves))


def discharge(g: Graph, e: PlanarEmbedding, rs: RuleSet | str, **kw) -> tuple[ChargeState, ChargeState]:
    """Initial and final states for ``rs`` under its own scheme."""
    rs = RULESETS[rs] if isinstance(rs, str) else rs
    start = initial_charges(e, rs.scheme)
    return start, apply_rules(start, rs, g, e, **kw)


# -- reports --------------------------------------------------------------------------------


@dataclass(frozen=True)
class NonnegReport:
    negatives: tuple[tuple[Element, Fraction], ...]

    @property
    def ok(self) -> bool:
        return not self.negatives


def verify_nonnegative(state: ChargeState) -> NonnegReport:
    neg = [(("v", i), c) for i, c in enumerate(state.vertex_charge) if c < 0]
    neg += [(("f", i), c) for i, c in enumerate(state.face_charge) if c < 0]
    return NonnegReport(tuple(neg))


def contrapositive_check(state: ChargeState, witness_count: int) -> NonnegReport:
    """Tie the final charges to the configuration count.

    With no configuration present the rules were designed to leave every
    element non-negative; yet the total is negative, so one of the two
    outcomes must contradict the structural theorem. Either is reported as
    a :class:`TheoremViolation`.
    """
    report = verify_nonnegative(state)
    if report.ok:
        raise TheoremViolation(
            "all final charges are non-negative although the total is negative",
            {"total": str(state.total()), "ruleset": state.ruleset_applied},
        )
    if witness_count == 0:
        raise TheoremViolation(
            "configuration-free input ends with negative charge",
            {"negatives": [(el, str(c)) for el, c in report.negatives], "ruleset": state.ruleset_applied},
        )
    return report


def fact4_violations(g: Graph, e: PlanarEmbedding) -> list[int]:
    """Faces with more than floor(l/2) incidences of 3- vertices."""
    return [f.id for f in e.faces if f.count(lambda x: g.degree(x) <= 3) > f.length // 2]


def t9_fact_violations(state: ChargeState) -> list[Transfer]:
    """R2/R3 transfers of the T9 system that fall below 1/3."""
    return [t for t in state.transfers if t.rule in ("R2", "R3") and t.amount < Fraction(1, 3)]


def fmt_q(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def charge_table(start: ChargeState, end: ChargeState) -> str:
    lines = ["id kind initial final"]
    for i, (a, b) in enumerate(zip(start.vertex_charge, end.vertex_charge)):
        lines.append(f"v{i} vertex {fmt_q(a)} {fmt_q(b)}")
    for i, (a, b) in enumerate(zip(start.face_charge, end.face_charge)):
        lines.append(f"f{i} face {fmt_q(a)} {fmt_q(b)}")
    lines.append(f"total = {fmt_q(end.total())}")
    return "\n".join(lines) + "\n"
