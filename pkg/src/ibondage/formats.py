"""Text formats: edge lists (``.el``), graph6 (``.g6``) and rotation systems (``.rot``).

Serializers are byte-stable: sorted content and ``\\n`` line endings.
"""

from __future__ import annotations

from pathlib import Path

from .embedding import PlanarEmbedding, Rotation, check_rotation, embedding_from_rotation
from .errors import InconsistentRotation, InputError, ParseError, SelfLoopError
from .graph import Graph, build_graph

GRAPH6_HEADER = ">>graph6<<"


def _content_lines(text: str):
    """Yield ``(line_number, stripped_line)`` skipping blanks and ``#`` comments."""
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line


# -- edge lists ---------------------------------------------------------------------


def parse_edgelist_labeled(text: str) -> tuple[Graph, list[str]]:
    """Parse ``u v`` lines; returns the graph and the label of each dense id.

    Labels get ids by first appearance. When the labels are exactly the
    integers ``0..n-1`` they are kept as ids, so files written by
    :func:`serialize_edgelist` read back unchanged.
    """
    pairs: list[tuple[str, str]] = []
    for no, line in _content_lines(text):
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", no)
        if parts[0] == parts[1]:
            raise SelfLoopError(f"self-loop at {parts[0]!r}", no)
        pairs.append((parts[0], parts[1]))
    order: dict[str, int] = {}
    for a, b in pairs:
        for x in (a, b):
            order.setdefault(x, len(order))
    labels = list(order)
    if all(x.isdigit() for x in labels) and sorted(int(x) for x in labels) == list(range(len(labels))):
        if len({int(x) for x in labels}) == len(labels):
            order = {x: int(x) for x in labels}
            labels = sorted(labels, key=int)
    g = build_graph(len(labels), [(order[a], order[b]) for a, b in pairs])
    return g, labels


def parse_edgelist(text: str) -> Graph:
    return parse_edgelist_labeled(text)[0]


def serialize_edgelist(g: Graph) -> str:
    return "".join(f"{u} {v}\n" for u, v in g.edges)


# -- graph6 -----------------------------------------------------------------------------


def _encode_n(n: int) -> list[int]:
    if n <= 62:
        return [n]
    if n <= 258047:
        return [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    return [63, 63] + [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]


def serialize_graph6(g: Graph) -> str:
    """graph6 string (no header) followed by a newline."""
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    data = [int("".join(map(str, bits[k : k + 6])), 2) for k in range(0, len(bits), 6)]
    return "".join(chr(63 + x) for x in _encode_n(g.n) + data) + "\n"


def _decode_graph6_line(line: str, no: int) -> Graph:
    if line.startswith(GRAPH6_HEADER):
        line = line[len(GRAPH6_HEADER) :]
    vals = []
    for ch in line:
        x = ord(ch) - 63
        if not 0 <= x <= 63:
            raise ParseError(f"character {ch!r} outside the graph6 range", no)
        vals.append(x)
    if not vals:
        raise ParseError("empty graph6 record", no)
    if vals[0] < 63:
        n, body = vals[0], vals[1:]
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise ParseError("truncated graph6 size field", no)
        n = 0
        for x in vals[2:8]:
            n = (n << 6) | x
        body = vals[8:]
    else:
        if len(vals) < 4:
            raise ParseError("truncated graph6 size field", no)
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body = vals[4:]
    nbits = n * (n - 1) // 2
    if len(body) != -(-nbits // 6):
        raise ParseError(f"bad graph6 length for n={n}", no)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return build_graph(n, edges)


def parse_graph6_all(text: str) -> list[Graph]:
    return [_decode_graph6_line(line, no) for no, line in enumerate(text.splitlines(), 1) if line.strip()]


def parse_graph6(text: str) -> Graph:
    graphs = parse_graph6_all(text)
    if len(graphs) != 1:
        raise ParseError(f"expected one graph6 record, found {len(graphs)}")
    return graphs[0]


# -- rotation systems -----------------------------------------------------------------


def parse_rotation(text: str, g: Graph | None = None) -> Rotation:
    """Parse ``v: n1 n2 ...`` lines into a rotation system.

    Vertices missing from the file get an empty rotation. With ``g`` given
    the result is checked to be a permutation of each adjacency list.
    """
    rows: dict[int, tuple[int, ...]] = {}
    for no, line in _content_lines(text):
        head, sep, tail = line.partition(":")
        if not sep:
            raise ParseError(f"expected 'v: n1 n2 ...', got {line!r}", no)
        try:
            v = int(head)
            nbrs = tuple(int(t) for t in tail.split())
        except ValueError:
            raise ParseError(f"non-integer vertex in {line!r}", no) from None
        if v < 0 or any(x < 0 for x in nbrs):
            raise ParseError("negative vertex id", no)
        if v in rows:
            raise ParseError(f"vertex {v} listed twice", no)
        rows[v] = nbrs
    n = g.n if g is not None else 1 + max([*rows, *(x for r in rows.values() for x in r)], default=-1)
    if any(v >= n for v in rows):
        raise InconsistentRotation(f"rotation names vertex {max(rows)} but the graph has {n}")
    rotation = tuple(rows.get(v, ()) for v in range(n))
    if g is not None:
        problems = check_rotation(g, rotation)
        if problems:
            raise InconsistentRotation("; ".join(problems))
    return rotation


def graph_from_rotation(rotation: Rotation) -> Graph:
    edges = [(v, w) for v, row in enumerate(rotation) for w in row]
    for v, w in edges:
        if w >= len(rotation) or v not in rotation[w]:
            raise InconsistentRotation(f"{w} is in the rotation at {v} but not vice versa")
    return build_graph(len(rotation), edges)


def serialize_rotation(rotation: Rotation) -> str:
    return "".join(f"{v}:" + "".join(f" {w}" for w in row) + "\n" for v, row in enumerate(rotation))


# -- files ------------------------------------------------------------------------------


def read_text(path: str | Path) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc


def load_graph(path: str | Path) -> Graph:
    """Read a graph, choosing the format by extension."""
    suffix = Path(path).suffix
    text = read_text(path)
    if suffix == ".g6":
        return parse_graph6(text)
    if suffix == ".rot":
        return graph_from_rotation(parse_rotation(text))
    if suffix in (".el", ".txt", ""):
        return parse_edgelist(text)
    raise InputError(f"unknown graph format {suffix!r} (use .el, .g6 or .rot)")


def load_embedding(path: str | Path, g: Graph) -> PlanarEmbedding:
    return embedding_from_rotation(g, parse_rotation(read_text(path), g))


def write_text(path: str | Path, text: str) -> None:
    try:
        with open(path, "w", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc.strerror}") from exc
