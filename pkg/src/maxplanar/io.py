"""File formats: binary planar code and a plain adjacency-list text format.

Planar code: an optional ``>>planar_code<<`` header, then per graph one byte
``n`` followed by, for each vertex, its neighbors as 1-based bytes in rotation
order, each list terminated by ``0``.

Adjacency list: a line ``n m``, then ``m`` lines ``u v`` with 0-based ids.
Several graphs may follow each other; blank lines and ``#`` comments are
skipped.
"""

from __future__ import annotations

from .graph import Graph, GraphError
from .triangulation import EmbeddingError, Triangulation, from_graph

HEADER = b">>planar_code<<"


class FormatError(GraphError):
    pass


def read_planar_code(data: bytes, strict: bool = True) -> list[Triangulation]:
    """Parse a planar-code stream.

    Neighbor lists must be symmetric and in range.  With ``strict`` the rotation
    must itself be a spherical triangulation; otherwise a graph whose rotation
    is not is re-embedded from its edges.
    """
    pos = 0
    if data.startswith(b">>planar_code"):
        end = data.find(b"<<", 2)
        if end < 0:
            raise FormatError("unterminated planar_code header")
        pos = end + 2
    out = []
    while pos < len(data):
        n = data[pos]
        pos += 1
        if n == 0:
            raise FormatError(f"graph of order 0 at byte {pos - 1}")
        rot = []
        for v in range(n):
            nbrs = []
            while True:
                if pos >= len(data):
                    raise FormatError(f"truncated stream in graph {len(out)}, vertex {v + 1}")
                b = data[pos]
                pos += 1
                if b == 0:
                    break
                if b > n:
                    raise FormatError(f"neighbor {b} out of range for order {n}")
                nbrs.append(b - 1)
            rot.append(tuple(nbrs))
        for v, r in enumerate(rot):
            for w in r:
                if v not in rot[w]:
                    raise FormatError(f"vertex {w + 1} lists no {v + 1}, but {v + 1} lists {w + 1}")
        try:
            out.append(Triangulation.from_rotation(rot))
        except EmbeddingError:
            if strict:
                raise
            edges = {(min(v, w), max(v, w)) for v, r in enumerate(rot) for w in r}
            out.append(from_graph(Graph.build(n, edges)))
    return out


def write_planar_code(graphs: list[Triangulation], header: bool = True) -> bytes:
    buf = bytearray(HEADER if header else b"")
    for t in graphs:
        n = t.order
        if n > 255:
            raise FormatError("planar code bytes hold at most 255 vertices")
        buf.append(n)
        for r in t.rotation:
            buf.extend(w + 1 for w in r)
            buf.append(0)
    return bytes(buf)


def read_adjlist(text: str) -> list[Graph]:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    graphs = []
    i = 0
    while i < len(lines):
        head = lines[i].split()
        if len(head) != 2:
            raise FormatError(f"expected 'n m' header, got {lines[i]!r}")
        try:
            n, m = int(head[0]), int(head[1])
        except ValueError as exc:
            raise FormatError(f"bad header {lines[i]!r}") from exc
        if i + 1 + m > len(lines):
            raise FormatError(f"header promises {m} edges, file ends early")
        edges = []
        for ln in lines[i + 1 : i + 1 + m]:
            parts = ln.split()
            if len(parts) != 2:
                raise FormatError(f"bad edge line {ln!r}")
            try:
                edges.append((int(parts[0]), int(parts[1])))
            except ValueError as exc:
                raise FormatError(f"bad edge line {ln!r}") from exc
        graphs.append(Graph.build(n, edges))
        i += 1 + m
    return graphs


def write_adjlist(graphs: list[Graph]) -> str:
    out = []
    for g in graphs:
        edges = g.edges()
        out.append(f"{g.order} {len(edges)}")
        out.extend(f"{u} {w}" for u, w in edges)
    return "\n".join(out) + "\n"
