"""Simple undirected labeled graphs.

Graphs are immutable.  Vertices are dense ids ``0..n-1``; adjacency is kept as
one integer bitmask per vertex.  Every vertex also carries a *provenance*: the
set of original labels that were merged into it by contractions, so callers can
follow a vertex of the root graph through any sequence of deletions and
contractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator


class GraphError(ValueError):
    """Raised for malformed graph input or an illegal graph operation."""


@dataclass(frozen=True)
class AdjacentPair:
    """Marker returned when a contraction is requested on adjacent vertices.

    No proper coloring gives adjacent vertices one color, so every counting
    routine treats this marker as the zero polynomial.
    """

    u: int
    w: int


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    adj: tuple[int, ...]
    provenance: tuple[frozenset[int], ...]

    # -- construction -------------------------------------------------------

    @classmethod
    def build(cls, order: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph on ids ``0..order-1``; duplicate edges collapse."""
        if order < 0:
            raise GraphError(f"negative order {order}")
        adj = [0] * order
        for u, w in edges:
            if not (0 <= u < order and 0 <= w < order):
                raise GraphError(f"edge ({u}, {w}) out of range for order {order}")
            if u == w:
                raise GraphError(f"loop at vertex {u}")
            adj[u] |= 1 << w
            adj[w] |= 1 << u
        return cls(tuple(adj), tuple(frozenset((i,)) for i in range(order)))

    @classmethod
    def from_masks(cls, adj: Iterable[int]) -> "Graph":
        adj = tuple(adj)
        return cls(adj, tuple(frozenset((i,)) for i in range(len(adj))))

    # -- queries ------------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.adj)

    def __len__(self) -> int:
        return len(self.adj)

    def size(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [m.bit_count() for m in self.adj]

    def min_degree(self) -> int:
        return min(self.degrees()) if self.adj else 0

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def has_edge(self, u: int, w: int) -> bool:
        return bool(self.adj[u] >> w & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, w) for u, m in enumerate(self.adj) for w in _bits(m >> (u + 1) << (u + 1))]

    def locate(self, label: int) -> int:
        """Return the id whose provenance contains ``label``."""
        for i, prov in enumerate(self.provenance):
            if label in prov:
                return i
        raise GraphError(f"label {label} not present")

    def label(self, v: int) -> int:
        """Smallest original label merged into ``v``; a stable name for it."""
        return min(self.provenance[v])

    def _check(self, *vs: int) -> None:
        for v in vs:
            if not 0 <= v < len(self.adj):
                raise GraphError(f"vertex {v} does not exist (order {len(self.adj)})")

    # -- operations ---------------------------------------------------------

    def delete_vertex(self, v: int) -> "Graph":
        """Remove ``v``; ids above ``v`` shift down by one."""
        self._check(v)
        low = (1 << v) - 1
        adj = []
        for i, m in enumerate(self.adj):
            if i != v:
                adj.append((m & low) | (m >> (v + 1) << v))
        prov = self.provenance[:v] + self.provenance[v + 1:]
        return Graph(tuple(adj), prov)

    def delete_edge(self, u: int, w: int) -> "Graph":
        self._check(u, w)
        if not self.has_edge(u, w):
            raise GraphError(f"({u}, {w}) is not an edge")
        adj = list(self.adj)
        adj[u] &= ~(1 << w)
        adj[w] &= ~(1 << u)
        return Graph(tuple(adj), self.provenance)

    def add_edge(self, u: int, w: int) -> "Graph":
        """Add edge ``uw``; adding an existing edge returns an equal graph."""
        self._check(u, w)
        if u == w:
            raise GraphError(f"loop at vertex {u}")
        if self.has_edge(u, w):
            return self
        adj = list(self.adj)
        adj[u] |= 1 << w
        adj[w] |= 1 << u
        return Graph(tuple(adj), self.provenance)

    def contract_pair(self, u: int, w: int) -> "Graph | AdjacentPair":
        """Identify ``u`` and ``w``.

        The merged vertex takes id ``min(u, w)``; ids above ``max(u, w)`` shift
        down by one.  Adjacent pairs give an :class:`AdjacentPair` marker.
        """
        self._check(u, w)
        if u == w:
            raise GraphError("cannot contract a vertex with itself")
        if self.has_edge(u, w):
            return AdjacentPair(u, w)
        return self._merge(min(u, w), max(u, w))

    def contract_edge(self, u: int, w: int) -> "Graph":
        """Contract the edge ``uw``, discarding it and any parallel edges."""
        self._check(u, w)
        if not self.has_edge(u, w):
            raise GraphError(f"({u}, {w}) is not an edge")
        return self.delete_edge(u, w)._merge(min(u, w), max(u, w))

    def _merge(self, a: int, b: int) -> "Graph":
        adj = list(self.adj)
        nb = adj[b]
        adj[a] |= nb
        for x in _bits(nb):
            adj[x] |= 1 << a
        prov = list(self.provenance)
        prov[a] = prov[a] | prov[b]
        merged = Graph(tuple(adj), tuple(prov))
        return merged.delete_vertex(b)

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph on ``vertices``, renumbered in increasing order."""
        keep = sorted(set(vertices))
        self._check(*keep)
        pos = {v: i for i, v in enumerate(keep)}
        adj = []
        for v in keep:
            m = 0
            for x in _bits(self.adj[v]):
                if x in pos:
                    m |= 1 << pos[x]
            adj.append(m)
        return Graph(tuple(adj), tuple(self.provenance[v] for v in keep))

    def relabel(self, perm: list[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed ``perm[v]``.

        Provenance travels with the vertex.
        """
        n = len(self.adj)
        if sorted(perm) != list(range(n)):
            raise GraphError("relabel needs a permutation of the vertex ids")
        adj = [0] * n
        prov: list[frozenset[int]] = [frozenset()] * n
        for v, m in enumerate(self.adj):
            nm = 0
            for x in _bits(m):
                nm |= 1 << perm[x]
            adj[perm[v]] = nm
            prov[perm[v]] = self.provenance[v]
        return Graph(tuple(adj), tuple(prov))

    def components(self) -> list[int]:
        """Vertex masks of the connected components, by smallest member."""
        return components_of(self.adj, (1 << len(self.adj)) - 1)

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={self.edges()})"


def components_of(adj: tuple[int, ...], alive: int) -> list[int]:
    """Connected components of the subgraph induced by the vertex mask ``alive``."""
    comps = []
    rest = alive
    while rest:
        seed = rest & -rest
        comp = seed
        frontier = seed
        while frontier:
            reach = 0
            for x in _bits(frontier):
                reach |= adj[x]
            reach &= alive & ~comp
            comp |= reach
            frontier = reach
        comps.append(comp)
        rest &= ~comp
    return comps


# -- cliques ---------------------------------------------------------------


def _find_clique(adj: tuple[int, ...], cand: int, k: int, chosen: int) -> int | None:
    if k == 0:
        return chosen
    if cand.bit_count() < k:
        return None
    while cand:
        low = cand & -cand
        v = low.bit_length() - 1
        cand ^= low
        found = _find_clique(adj, cand & adj[v], k - 1, chosen | low)
        if found is not None:
            return found
        if cand.bit_count() < k:
            return None
    return None


def find_clique(g: Graph, k: int) -> list[int] | None:
    """Lexicographically first ``k``-clique of ``g``, or ``None``."""
    if k < 1:
        raise GraphError("clique size must be at least 1")
    found = _find_clique(g.adj, (1 << g.order) - 1, k, 0)
    return None if found is None else list(_bits(found))


def contains_clique(g: Graph, k: int) -> bool:
    return find_clique(g, k) is not None


def iter_cliques(adj: tuple[int, ...], k: int) -> Iterator[int]:
    """All ``k``-cliques as vertex masks, in lexicographic order."""

    def rec(cand: int, k: int, chosen: int) -> Iterator[int]:
        if k == 0:
            yield chosen
            return
        while cand.bit_count() >= k:
            low = cand & -cand
            cand ^= low
            yield from rec(cand & adj[low.bit_length() - 1], k - 1, chosen | low)

    yield from rec((1 << len(adj)) - 1, k, 0)


# -- canonical labeling ----------------------------------------------------


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement of an ordered partition.

    Cells split by each vertex's neighbor counts into every cell; the split
    parts are ordered by that signature, so the result commutes with
    relabeling.
    """
    while True:
        masks = []
        for c in cells:
            m = 0
            for v in c:
                m |= 1 << v
            masks.append(m)
        out = []
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            sig = {v: tuple((adj[v] & m).bit_count() for m in masks) for v in c}
            keys = sorted(set(sig.values()))
            if len(keys) == 1:
                out.append(c)
            else:
                out.extend([v for v in c if sig[v] == k] for k in keys)
        if len(out) == len(cells):
            return out
        cells = out


def _leaf_code(adj: tuple[int, ...], order: list[int]) -> tuple[int, ...]:
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    code = []
    for v in order:
        m = 0
        for x in _bits(adj[v]):
            m |= 1 << pos[x]
        code.append(m)
    return tuple(code)


class _Search:
    """Individualization-refinement search for the least leaf code."""

    def __init__(self, adj: tuple[int, ...]):
        self.adj = adj
        self.best: tuple[int, ...] | None = None
        self.best_order: list[int] = []
        self.autos: list[list[int]] = []

    def run(self) -> tuple[tuple[int, ...], list[int]]:
        n = len(self.adj)
        if n == 0:
            return (), []
        self._visit(_refine(self.adj, [list(range(n))]), [])
        assert self.best is not None
        return self.best, self.best_order

    def _orbit_rep(self, fixed: list[int]) -> list[int]:
        """Union-find parent array for orbits of automorphisms fixing ``fixed``."""
        n = len(self.adj)
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.autos:
            if any(g[x] != x for x in fixed):
                continue
            for x in range(n):
                a, b = find(x), find(g[x])
                if a != b:
                    parent[max(a, b)] = min(a, b)
        return [find(x) for x in range(n)]

    def _visit(self, cells: list[list[int]], path: list[int]) -> None:
        if len(cells) == len(self.adj):
            order = [c[0] for c in cells]
            code = _leaf_code(self.adj, order)
            if self.best is None or code < self.best:
                self.best, self.best_order = code, order
            elif code == self.best:
                g = [0] * len(order)
                for a, b in zip(self.best_order, order):
                    g[a] = b
                self.autos.append(g)
            return
        idx = min((i for i, c in enumerate(cells) if len(c) > 1), key=lambda i: len(cells[i]))
        cell = cells[idx]
        tried: list[int] = []
        seen_orbits: set[int] = set()
        for v in cell:
            if any(self._twins(v, u) for u in tried):
                continue
            if self.autos:
                orbit = self._orbit_rep(path)[v]
                if orbit in seen_orbits:
                    continue
                seen_orbits.add(orbit)
            tried.append(v)
            split = cells[:idx] + [[v], [u for u in cell if u != v]] + cells[idx + 1:]
            self._visit(_refine(self.adj, split), path + [v])

    def _twins(self, a: int, b: int) -> bool:
        ma = self.adj[a] & ~(1 << b)
        mb = self.adj[b] & ~(1 << a)
        return ma == mb


def canonical_labeling(adj: tuple[int, ...]) -> list[int]:
    """Vertex order giving the canonical adjacency code."""
    return _Search(adj).run()[1]


def canonical_code(adj: tuple[int, ...]) -> bytes:
    """Canonical form of a bitmask adjacency tuple.

    Equal for two graphs exactly when they are isomorphic.  Layout: two bytes of
    order, then the strict upper triangle of the canonically ordered adjacency
    matrix packed into bits.
    """
    n = len(adj)
    code, _ = _Search(adj).run()
    bits = 0
    k = 0
    for i, row in enumerate(code):
        for j in range(i + 1, n):
            if row >> j & 1:
                bits |= 1 << k
            k += 1
    return n.to_bytes(2, "big") + bits.to_bytes((k + 7) // 8, "big")


def canonical_form(g: Graph) -> bytes:
    return canonical_code(g.adj)


def is_isomorphic(a: Graph, b: Graph) -> bool:
    return a.order == b.order and a.size() == b.size() and canonical_form(a) == canonical_form(b)


def complete_graph(n: int) -> Graph:
    return Graph.build(n, combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    return Graph.build(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.build(n, [(i, i + 1) for i in range(n - 1)])
