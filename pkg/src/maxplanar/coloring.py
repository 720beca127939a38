"""4-coloring partitions and the classification built on them.

A partition is an unordered family of at most four independent sets covering
the vertices.  Each partition with three or four classes accounts for exactly
``4 * 3 * 2 = 24`` labeled 4-colorings, so for a graph containing a triangle
the number of partitions is ``f(G, 4) / 24``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Literal

from .graph import Graph, GraphError, find_clique
from .triangulation import Funnel

MAX_ORDER = 40

Verdict = Literal["not-4-colorable", "non-coordinated", "uniquely", "quasi-uniquely", "pseudo-uniquely"]


@dataclass(frozen=True)
class ColorPartition:
    """Color classes as sorted id tuples, ordered by smallest member."""

    classes: tuple[tuple[int, ...], ...]

    @classmethod
    def from_coloring(cls, colors: list[int]) -> "ColorPartition":
        groups: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            groups.setdefault(c, []).append(v)
        return cls(tuple(sorted(tuple(g) for g in groups.values())))

    def __len__(self) -> int:
        return len(self.classes)

    def class_index(self) -> dict[int, int]:
        return {v: i for i, cls in enumerate(self.classes) for v in cls}

    def coloring(self) -> list[int]:
        """Colors ``1..k`` by class order."""
        idx = self.class_index()
        return [idx[v] + 1 for v in range(len(idx))]

    def to_json(self) -> list[list[int]]:
        return [list(c) for c in self.classes]


def _order(g: Graph, first: list[int]) -> list[int]:
    """``first``, then the rest greedily by most already-placed neighbors."""
    placed = 0
    out = []
    for v in first:
        out.append(v)
        placed |= 1 << v
    rest = [v for v in range(g.order) if not placed >> v & 1]
    while rest:
        best = max(rest, key=lambda v: ((g.adj[v] & placed).bit_count(), -v))
        rest.remove(best)
        out.append(best)
        placed |= 1 << best
    return out


def iter_partitions(g: Graph, anchor: bool = True, k: int = 4) -> Iterator[ColorPartition]:
    """Every partition of ``g`` into at most ``k`` independent classes, once each.

    With ``anchor`` the first triangle found is pinned to classes 0, 1, 2, which
    removes the color permutations; without one, each vertex may only open the
    next unused color.
    """
    n = g.order
    if n > MAX_ORDER:
        raise GraphError(f"order {n} is past the partition enumeration guard")
    if n == 0:
        yield ColorPartition(())
        return
    tri = find_clique(g, 3) if anchor and k >= 3 else None
    order = _order(g, tri or [])
    adj = g.adj
    colors = [-1] * n
    masks = [0] * k
    pinned = len(tri) if tri else 0

    def rec(i: int, used: int) -> Iterator[ColorPartition]:
        if i == n:
            yield ColorPartition.from_coloring(colors)
            return
        v = order[i]
        if i < pinned:
            choices = [i]
        elif tri:
            choices = range(k)
        else:
            choices = range(min(used + 1, k))
        for c in choices:
            if adj[v] & masks[c]:
                continue
            colors[v] = c
            masks[c] |= 1 << v
            yield from rec(i + 1, max(used, c + 1))
            masks[c] &= ~(1 << v)
        colors[v] = -1

    yield from rec(0, 0)


def enumerate_partitions(g: Graph, anchor: bool = True) -> list[ColorPartition]:
    return sorted(iter_partitions(g, anchor), key=lambda p: p.classes)


def find_coloring(g: Graph, k: int = 4) -> list[int] | None:
    """First proper coloring with colors ``1..k`` found by backtracking."""
    for p in iter_partitions(g, anchor=True, k=k):
        return p.coloring()
    return None


def partition_count_identity(g: Graph, f4: int | None = None) -> bool:
    """``|C4(G)| * 24 == f(G, 4)`` for a graph containing a triangle."""
    if find_clique(g, 3) is None:
        raise GraphError("the identity needs a triangle (every class count gives 24 colorings)")
    if f4 is None:
        from .chromatic import chromatic_polynomial

        f4 = chromatic_polynomial(g)(4)
    return 24 * sum(1 for _ in iter_partitions(g)) == f4


def is_coordinated(g: Graph, partitions: list[ColorPartition] | None = None) -> tuple[int, int, int, int] | None:
    """First 4 vertices (lexicographically) lying in distinct classes of every partition."""
    if partitions is None:
        partitions = enumerate_partitions(g)
    if not partitions or any(len(p) < 4 for p in partitions):
        return None
    together = [0] * g.order
    for p in partitions:
        for cls in p.classes:
            m = 0
            for v in cls:
                m |= 1 << v
            for v in cls:
                together[v] |= m
    for quad in combinations(range(g.order), 4):
        if all(not together[a] >> b & 1 for a, b in combinations(quad, 2)):
            return quad  # type: ignore[return-value]
    return None


def is_rainbow(p: ColorPartition, f: Funnel) -> bool:
    idx = p.class_index()
    return len({idx[x] for x in f.vertices()}) == 4


def is_4chromatic_funnel(g: Graph, f: Funnel, partitions: list[ColorPartition] | None = None) -> bool:
    """True iff the funnel's four vertices are in four classes of every partition."""
    if not f.is_valid_in(g):
        raise GraphError(f"{f} is not a funnel of this graph")
    parts = partitions if partitions is not None else iter_partitions(g)
    return all(is_rainbow(p, f) for p in parts)


def is_uniquely_4colorable(g: Graph) -> bool:
    """Exactly one partition, and it uses four classes."""
    found = None
    for p in iter_partitions(g):
        if found is not None:
            return False
        found = p
    return found is not None and len(found) == 4


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    witness: object = None
    cap: int | None = None
    partitions: int = 0

    def to_json(self) -> dict:
        w = self.witness
        if isinstance(w, ColorPartition):
            w = w.to_json()
        elif isinstance(w, tuple):
            w = list(w)
        return {"verdict": self.verdict, "witness": w, "cap": self.cap, "partitions": self.partitions}


def find_unique_subgraph(g: Graph, cap: int) -> tuple[int, ...] | None:
    """Smallest proper induced subgraph (order 4..cap) that is uniquely 4-colorable."""
    for size in range(4, min(cap, g.order - 1) + 1):
        for subset in combinations(range(g.order), size):
            if is_uniquely_4colorable(g.induced(subset)):
                return subset
    return None


def classify(g: Graph, cap: int | None = None) -> Classification:
    """Place ``g`` in the uniquely / quasi / pseudo / non-coordinated taxonomy.

    Quasi-uniqueness is searched over induced subgraphs of order at most
    ``cap`` (default: all proper ones), so "pseudo-uniquely" means
    "no uniquely 4-colorable induced subgraph up to ``cap``".
    """
    cap = g.order if cap is None else cap
    parts = enumerate_partitions(g)
    if not parts:
        return Classification("not-4-colorable", None, cap, 0)
    if len(parts) == 1 and len(parts[0]) == 4:
        return Classification("uniquely", parts[0], cap, 1)
    quad = is_coordinated(g, parts)
    if quad is None:
        return Classification("non-coordinated", None, cap, len(parts))
    sub = find_unique_subgraph(g, cap)
    if sub is not None:
        return Classification("quasi-uniquely", sub, cap, len(parts))
    return Classification("pseudo-uniquely", quad, cap, len(parts))
