"""Exact independent domination number with a reproducible witness."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import Graph


@dataclass(frozen=True)
class DominationResult:
    gamma_i: int
    witness: tuple[int, ...]


def is_independent_dominating(g: Graph, s: Iterable[int]) -> bool:
    chosen = set(s)
    covered = set(chosen)
    for v in chosen:
        if any(w in chosen for w in g.adj[v]):
            return False
        covered.update(g.adj[v])
    return len(covered) == g.n


def _popcount(x: int) -> int:
    return x.bit_count()


def _low_bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _min_extension(closed: tuple[int, ...], undom: int, avail: int, limit: int) -> int | None:
    """Fewest further picks that dominate ``undom``, or None if more than ``limit``.

    Picks come from ``avail``; picking ``w`` removes ``N[w]`` from both masks,
    which keeps the chosen set independent. Branching is on the undominated
    vertex with the fewest candidates; the i-th child excludes the first
    i-1 candidates so that no set is visited twice.
    """
    best = limit + 1

    def rec(undom: int, avail: int, size: int) -> None:
        nonlocal best
        if not undom:
            if size < best:
                best = size
            return
        if size + 1 >= best:
            return
        pick = 0
        pick_count = 1 << 30
        max_cover = 0
        for v in _low_bits(undom):
            cand = closed[v] & avail
            cnt = _popcount(cand)
            if cnt == 0:
                return
            if cnt < pick_count:
                pick, pick_count = cand, cnt
        for w in _low_bits(avail):
            cover = _popcount(closed[w] & undom)
            if cover > max_cover:
                max_cover = cover
        need = -(-_popcount(undom) // max_cover)
        if size + need >= best:
            return
        for w in _low_bits(pick):
            rec(undom & ~closed[w], avail & ~closed[w], size + 1)
            avail &= ~(1 << w)
            if size + 1 >= best:
                return

    rec(undom, avail, 0)
    return best if best <= limit else None


def _greedy_size(closed: tuple[int, ...], full: int) -> int:
    undom, avail, size = full, full, 0
    while undom:
        v = min(_low_bits(avail), key=lambda w: (-_popcount(closed[w] & undom), w))
        undom &= ~closed[v]
        avail &= ~closed[v]
        size += 1
    return size


def _component_value(g: Graph) -> int:
    if g.n == 1:
        return 1
    full = (1 << g.n) - 1
    upper = _greedy_size(g.closed_masks, full)
    found = _min_extension(g.closed_masks, full, full, upper - 1)
    return upper if found is None else found


def _component_witness(g: Graph, k: int) -> list[int]:
    """Lexicographically least independent dominating set of size ``k``.

    Vertices are decided in increasing id order: keep ``x`` whenever some
    optimum still extends the current choice with ``x`` in it.
    """
    closed = g.closed_masks
    full = (1 << g.n) - 1
    chosen: list[int] = []
    blocked = 0  # N[chosen] plus rejected vertices
    undom = full
    for x in range(g.n):
        if not undom:
            break
        if blocked >> x & 1:
            continue
        trial_undom = undom & ~closed[x]
        trial_avail = full & ~blocked & ~closed[x]
        rest = _min_extension(closed, trial_undom, trial_avail, k - len(chosen) - 1)
        if rest is not None:
            chosen.append(x)
            undom = trial_undom
            blocked |= closed[x]
        else:
            blocked |= 1 << x
    return chosen


def gamma_i_value(g: Graph) -> int:
    """Independent domination number, summed over connected components."""
    total = 0
    for comp in g.components():
        if len(comp) == 1:
            total += 1
            continue
        sub, _ = g.induced(comp)
        total += _component_value(sub)
    return total


def gamma_i(g: Graph) -> DominationResult:
    """Exact minimum independent dominating set, lexicographically least."""
    witness: list[int] = []
    for comp in g.components():
        if len(comp) == 1:
            witness.extend(comp)  # isolated vertices are forced
            continue
        sub, old = g.induced(comp)
        k = _component_value(sub)
        witness.extend(old[i] for i in _component_witness(sub, k))
    witness.sort()
    return DominationResult(len(witness), tuple(witness))
