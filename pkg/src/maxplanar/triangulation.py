"""Maximal planar graphs with an explicit rotation system.

Rotation convention: ``rotation[v]`` lists the neighbors of ``v`` in one cyclic
orientation, the same orientation at every vertex.  Faces are traced with
``next(u -> v) = (v, pred_v(u))`` where ``pred_v`` is the cyclic predecessor in
``rotation[v]``.  A valid triangulation traces ``2n - 4`` faces, all of
length three.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import networkx as nx
from networkx.algorithms.planar_drawing import triangulate_embedding

from .graph import AdjacentPair, Graph, GraphError

Rotation = tuple[tuple[int, ...], ...]


class NotPlanarError(GraphError):
    pass


class NotMaximalError(GraphError):
    pass


class EmbeddingError(GraphError):
    """A rotation system that does not describe a spherical triangulation."""


class WrongDegreeError(GraphError):
    pass


@dataclass(frozen=True)
class Funnel:
    """A vertex ``u`` joined to the apex ``x`` of the triangle ``x, y, z``."""

    u: int
    x: int
    y: int
    z: int

    def vertices(self) -> tuple[int, int, int, int]:
        return (self.u, self.x, self.y, self.z)

    def is_valid_in(self, g: Graph) -> bool:
        if len(set(self.vertices())) != 4:
            return False
        pairs = ((self.u, self.x), (self.x, self.y), (self.x, self.z), (self.y, self.z))
        return all(g.has_edge(a, b) for a, b in pairs)


@dataclass(frozen=True)
class Wheel:
    center: int
    rim: tuple[int, ...]

    def labelings(self) -> list[tuple[int, ...]]:
        """All rotations and reflections of the rim, the canonical one first."""
        k = len(self.rim)
        out = []
        for seq in (self.rim, tuple(reversed(self.rim))):
            for s in range(k):
                lab = seq[s:] + seq[:s]
                if lab not in out:
                    out.append(lab)
        return out


class Wheel4Contraction(NamedTuple):
    g1: Graph | AdjacentPair
    g2: Graph | AdjacentPair


class Wheel5Contraction(NamedTuple):
    g1: Graph | AdjacentPair
    g1a: Graph | AdjacentPair
    g2: Graph | AdjacentPair
    g2a: Graph | AdjacentPair
    g3: Graph | AdjacentPair
    g3a: Graph | AdjacentPair


def trace_faces(rotation: Rotation) -> list[tuple[int, ...]]:
    pos = [{w: i for i, w in enumerate(r)} for r in rotation]
    seen: set[tuple[int, int]] = set()
    faces = []
    for u, r in enumerate(rotation):
        for v in r:
            if (u, v) in seen:
                continue
            face = []
            a, b = u, v
            while (a, b) not in seen:
                seen.add((a, b))
                face.append(a)
                rb = rotation[b]
                a, b = b, rb[(pos[b][a] - 1) % len(rb)]
            faces.append(tuple(face))
    return faces


def _graph_from_rotation(rotation: Rotation, provenance=None) -> Graph:
    adj = []
    for v, r in enumerate(rotation):
        m = 0
        for w in r:
            if w == v:
                raise EmbeddingError(f"loop at {v}")
            m |= 1 << w
        if m.bit_count() != len(r):
            raise EmbeddingError(f"repeated neighbor in rotation of {v}")
        adj.append(m)
    for v, m in enumerate(adj):
        for w in rotation[v]:
            if not adj[w] >> v & 1:
                raise EmbeddingError(f"rotation lists {w} at {v} but not {v} at {w}")
    g = Graph.from_masks(adj)
    if provenance is not None:
        g = Graph(g.adj, tuple(provenance))
    return g


@dataclass(frozen=True)
class Triangulation:
    graph: Graph
    rotation: Rotation

    # -- construction -------------------------------------------------------

    @classmethod
    def from_rotation(cls, rotation, provenance=None) -> "Triangulation":
        rotation = tuple(tuple(r) for r in rotation)
        t = cls(_graph_from_rotation(rotation, provenance), rotation)
        t.validate()
        return t

    def validate(self) -> None:
        g, rot = self.graph, self.rotation
        n = g.order
        if len(rot) != n:
            raise EmbeddingError("rotation and graph disagree on order")
        for v in range(n):
            if sorted(rot[v]) != g.neighbors(v):
                raise EmbeddingError(f"rotation at {v} is not its neighborhood")
        if n < 3:
            raise NotMaximalError(f"order {n} is below 3")
        if g.size() != 3 * n - 6:
            raise NotMaximalError(f"{g.size()} edges, a triangulation of order {n} has {3 * n - 6}")
        faces = trace_faces(rot)
        if len(faces) != 2 * n - 4 or any(len(f) != 3 for f in faces):
            raise EmbeddingError("rotation system has a non-triangular face or wrong genus")
        if n >= 4 and g.min_degree() < 3:
            raise EmbeddingError("vertex of degree below 3")

    # -- queries ------------------------------------------------------------

    @property
    def order(self) -> int:
        return self.graph.order

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    def min_degree(self) -> int:
        return min(len(r) for r in self.rotation)

    def faces(self) -> list[tuple[int, ...]]:
        return trace_faces(self.rotation)

    def is_face(self, a: int, b: int, c: int) -> bool:
        return self._face_orientation(a, b, c) is not None

    def _face_orientation(self, a: int, b: int, c: int) -> tuple[int, int, int] | None:
        """The triple as traced (``next(a->b) = (b, c)``), if it is a face."""
        for x, y, z in ((a, b, c), (a, c, b)):
            for s in range(3):
                p, q, r = (x, y, z)[s:] + (x, y, z)[:s]
                rq = self.rotation[q] if q < self.order else ()
                if p in rq and r in rq and rq[rq.index(p) - 1] == r:
                    rr = self.rotation[r]
                    if rr[rr.index(q) - 1] == p:
                        return p, q, r
        return None

    def _next_label(self) -> int:
        return max(max(p) for p in self.graph.provenance) + 1


def from_graph(g: Graph) -> Triangulation:
    """Embed ``g`` and check that it is a triangulation."""
    n = g.order
    if n < 3:
        raise NotMaximalError(f"order {n} is below 3")
    nxg = nx.Graph()
    nxg.add_nodes_from(range(n))
    nxg.add_edges_from(g.edges())
    planar, emb = nx.check_planarity(nxg)
    if not planar:
        raise NotPlanarError("graph is not planar")
    if g.size() != 3 * n - 6:
        raise NotMaximalError(f"planar but {g.size()} edges, maximal needs {3 * n - 6}")
    rotation = tuple(tuple(emb.neighbors_cw_order(v)) for v in range(n))
    t = Triangulation(g, rotation)
    t.validate()
    return t


def is_maximal_planar(g: Graph) -> bool:
    try:
        from_graph(g)
    except GraphError:
        return False
    return True


def complete_to_triangulation(g: Graph) -> Triangulation:
    """Add edges to a planar graph until it is maximal planar.

    Provenance is kept; any coloring of the result is a coloring of ``g``.
    """
    n = g.order
    if n < 3:
        raise NotMaximalError(f"order {n} is below 3")
    nxg = nx.Graph()
    nxg.add_nodes_from(range(n))
    nxg.add_edges_from(g.edges())
    planar, emb = nx.check_planarity(nxg)
    if not planar:
        raise NotPlanarError("graph is not planar")
    if g.size() == 3 * n - 6:
        full = emb
    else:
        full, _ = triangulate_embedding(emb, True)
    rotation = tuple(tuple(full.neighbors_cw_order(v)) for v in range(n))
    return Triangulation.from_rotation(rotation, g.provenance)


# -- wheels ----------------------------------------------------------------


def link_cycle(t: Triangulation, v: int) -> Wheel:
    """The rim of ``v``, starting at its lowest id, in the direction whose
    second entry is smaller."""
    if t.order <= 3:
        raise GraphError("link cycles need order at least 4")
    t.graph._check(v)
    rim = t.rotation[v]
    s = rim.index(min(rim))
    rim = rim[s:] + rim[:s]
    if len(rim) > 2 and rim[-1] < rim[1]:
        rim = (rim[0],) + tuple(reversed(rim[1:]))
    return Wheel(v, rim)


def _check_rim(t: Triangulation, v: int, degree: int, rim: tuple[int, ...] | None) -> tuple[int, ...]:
    if t.degree(v) != degree:
        raise WrongDegreeError(f"vertex {v} has degree {t.degree(v)}, expected {degree}")
    wheel = link_cycle(t, v)
    if rim is None:
        return wheel.rim
    rim = tuple(rim)
    if rim not in wheel.labelings():
        raise GraphError(f"{rim} is not a labeling of the rim of {v}")
    return rim


def _contract_after_delete(t: Triangulation, v: int, a: int, b: int) -> Graph | AdjacentPair:
    h = t.graph.delete_vertex(v)
    return h.contract_pair(a - (a > v), b - (b > v))


def _add_by_label(g: Graph | AdjacentPair, t: Triangulation, pairs) -> Graph | AdjacentPair:
    if isinstance(g, AdjacentPair):
        return g
    for a, b in pairs:
        g = g.add_edge(g.locate(t.graph.label(a)), g.locate(t.graph.label(b)))
    return g


def contract_wheel4(t: Triangulation, v: int, rim: tuple[int, ...] | None = None) -> Wheel4Contraction:
    """``G1 = (G - v) o {v1, v3}`` and ``G2 = (G - v) o {v2, v4}``."""
    v1, v2, v3, v4 = _check_rim(t, v, 4, rim)
    return Wheel4Contraction(
        _contract_after_delete(t, v, v1, v3),
        _contract_after_delete(t, v, v2, v4),
    )


def contract_wheel5(t: Triangulation, v: int, rim: tuple[int, ...] | None = None) -> Wheel5Contraction:
    """The three contractions of a 5-wheel and their chord-augmented versions.

    ``G1 = (G - v) o {v2, v5}`` plus ``v1v3, v1v4``; ``G2 = (G - v) o {v2, v4}``
    plus ``v3v1, v3v5``; ``G3 = (G - v) o {v3, v5}`` plus ``v1v4``.
    """
    v1, v2, v3, v4, v5 = _check_rim(t, v, 5, rim)
    g1 = _contract_after_delete(t, v, v2, v5)
    g2 = _contract_after_delete(t, v, v2, v4)
    g3 = _contract_after_delete(t, v, v3, v5)
    return Wheel5Contraction(
        g1,
        _add_by_label(g1, t, [(v1, v3), (v1, v4)]),
        g2,
        _add_by_label(g2, t, [(v3, v1), (v3, v5)]),
        g3,
        _add_by_label(g3, t, [(v1, v4)]),
    )


def funnel_in(t: Triangulation, g: Graph | AdjacentPair, rim: tuple[int, ...], which: int) -> Funnel | None:
    """Funnel ``L_which`` inside the contracted graph, or ``None`` for a marker."""
    if isinstance(g, AdjacentPair):
        return None
    v1, v2, v3, v4, v5 = rim
    roles = {
        1: (v1, v2, v3, v4),
        2: (v3, v2, v1, v5),
        3: (v4, v3, v1, v2),
    }[which]
    u, x, y, z = (g.locate(t.graph.label(a)) for a in roles)
    return Funnel(u, x, y, z)


def funnels_of_contraction(t: Triangulation, v: int, rim: tuple[int, ...] | None = None) -> tuple[Funnel, Funnel, Funnel]:
    """Funnels ``L1, L2, L3`` left in ``G1, G2, G3`` by contracting the 5-wheel at ``v``."""
    rim = _check_rim(t, v, 5, rim)
    res = contract_wheel5(t, v, rim)
    out = []
    for i, g in enumerate((res.g1, res.g2, res.g3), start=1):
        f = funnel_in(t, g, rim, i)
        if f is None:
            raise GraphError(f"G{i} is an adjacent-pair marker; it has no funnel")
        out.append(f)
    return out[0], out[1], out[2]


# -- reduction and extension operators ------------------------------------


def _replace(seq: tuple[int, ...], old: int, new: tuple[int, ...]) -> tuple[int, ...]:
    i = seq.index(old)
    return seq[:i] + new + seq[i + 1:]


def delete_degree3(t: Triangulation, v: int) -> Triangulation:
    """Remove a degree-3 vertex; its three neighbors become a face."""
    if t.degree(v) != 3:
        raise WrongDegreeError(f"vertex {v} has degree {t.degree(v)}, expected 3")
    rot = []
    for x, r in enumerate(t.rotation):
        if x != v:
            rot.append(tuple(w - (w > v) for w in r if w != v))
    return Triangulation(t.graph.delete_vertex(v), tuple(rot))


def extend_wheel3(t: Triangulation, face: tuple[int, int, int]) -> Triangulation:
    """Insert a new degree-3 vertex into a face."""
    oriented = t._face_orientation(*face)
    if oriented is None:
        raise GraphError(f"{face} is not a face")
    a, b, c = oriented
    x = t.order
    rot = list(t.rotation)
    rot[b] = _replace(rot[b], a, (x, a))
    rot[c] = _replace(rot[c], b, (x, b))
    rot[a] = _replace(rot[a], c, (x, c))
    rot.append((a, b, c))
    prov = t.graph.provenance + (frozenset((t._next_label(),)),)
    return Triangulation.from_rotation(rot, prov)


def split_rotation(rot: Rotation, w: int, p: int, q: int) -> Rotation:
    """Split ``w`` into ``w`` (arc ``p..q``) and a new vertex (arc ``q..p``).

    Both halves keep ``p`` and ``q`` and become adjacent.  This inverts the
    contraction of the new edge.
    """
    n = len(rot)
    r = rot[w]
    d = len(r)
    i, j = r.index(p), r.index(q)
    arc1 = tuple(r[(i + k) % d] for k in range((j - i) % d + 1))
    arc2 = tuple(r[(j + k) % d] for k in range((i - j) % d + 1))
    new = list(rot)
    new[w] = arc1 + (n,)
    new.append(arc2 + (w,))
    for b in arc2[1:-1]:
        new[b] = tuple(n if x == w else x for x in rot[b])
    new[p] = _replace(rot[p], w, (w, n))
    new[q] = _replace(rot[q], w, (n, w))
    return tuple(new)


def extend_wheel4(t: Triangulation, w: int, p: int, q: int) -> Triangulation:
    """Split ``w`` along the non-consecutive neighbors ``p, q`` and put a new
    degree-4 vertex between the halves.

    The halves are ``w`` (keeping the arc from ``p`` to ``q``) and a new vertex
    ``n`` (the other arc); the new center is ``n + 1`` with rim
    ``(w, p, n, q)``.  Contracting ``{w, n}`` in that wheel gives back ``t``.
    """
    r = t.rotation[w]
    if p not in r or q not in r or p == q:
        raise GraphError(f"{p} and {q} must be distinct neighbors of {w}")
    i, j = r.index(p), r.index(q)
    if (j - i) % len(r) in (1, len(r) - 1):
        raise GraphError(f"{p} and {q} are consecutive around {w}")
    n = t.order
    v = n + 1
    rot = list(split_rotation(t.rotation, w, p, q))
    rot[w] = _replace(rot[w], n, (v,))
    rot[n] = _replace(rot[n], w, (v,))
    rot[p] = _replace(rot[p], w, (w, v))
    rot[q] = _replace(rot[q], n, (n, v))
    rot.append((p, w, q, n))
    label = t._next_label()
    prov = t.graph.provenance + (frozenset((label,)), frozenset((label + 1,)))
    return Triangulation.from_rotation(rot, prov)


def extend_wheel5(t: Triangulation, u: int, a1: int, a2: int) -> Triangulation:
    """Split ``u`` and put a new degree-5 vertex between the halves.

    Reading ``u``'s rotation from ``a1``: ``a1, X.., a2, y1, Y..``.  The half
    ``u`` keeps ``a1, X, a2``; a new vertex ``n`` keeps ``y1, Y, a1``.  Both arcs
    strictly between ``a1`` and ``a2`` must be non-empty.  The new center
    ``n + 1`` has rim ``(a1, u, a2, y1, n)``, and contracting ``{u, n}`` in it
    (the ``G1`` pair of that labeling) gives back ``t``.
    """
    r = t.rotation[u]
    if a1 not in r or a2 not in r or a1 == a2:
        raise GraphError(f"{a1} and {a2} must be distinct neighbors of {u}")
    d = len(r)
    i = r.index(a1)
    seq = r[i:] + r[:i]
    j = seq.index(a2)
    if j == 1 or j == d - 1:
        raise GraphError(f"an arc between {a1} and {a2} around {u} is empty")
    keep = seq[: j + 1]
    moved = seq[j + 1:]
    n = t.order
    v = n + 1
    y1 = moved[0]
    rot = list(t.rotation)
    rot[u] = keep + (v,)
    for y in moved[1:]:
        rot[y] = tuple(n if x == u else x for x in rot[y])
    rot[a1] = _replace(rot[a1], u, (u, v, n))
    rot[a2] = _replace(rot[a2], u, (v, u))
    rot[y1] = _replace(rot[y1], u, (n, v))
    rot.append(moved + (a1, v))
    rot.append((a1, u, a2, y1, n))
    label = t._next_label()
    prov = t.graph.provenance + (frozenset((label,)), frozenset((label + 1,)))
    return Triangulation.from_rotation(rot, prov)


# -- named small triangulations ------------------------------------------


def tetrahedron() -> Triangulation:
    return from_graph(Graph.build(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]))


def bipyramid() -> Triangulation:
    """Triangular bipyramid: apexes 0, 1 over the equator 2, 3, 4."""
    edges = [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (3, 4), (2, 4)]
    return from_graph(Graph.build(5, edges))


def octahedron() -> Triangulation:
    """Octahedron with antipodal pairs ``(i, i + 3)``."""
    return from_graph(Graph.build(6, [(i, j) for i in range(6) for j in range(i + 1, 6) if j - i != 3]))


def icosahedron() -> Triangulation:
    """Icosahedron: poles 0 and 11, upper ring 1..5, lower ring 6..10."""
    edges = []
    for i in range(5):
        up, up_next = 1 + i, 1 + (i + 1) % 5
        lo, lo_next = 6 + i, 6 + (i + 1) % 5
        edges += [(0, up), (up, up_next), (11, lo), (lo, lo_next), (up, lo), (up_next, lo)]
    return from_graph(Graph.build(12, edges))
