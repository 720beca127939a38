"""Chromatic polynomials and coloring counts.

The engine resolves a graph by, in order: closed forms (edgeless, complete,
forest), the product rule over a separating clique of at most four vertices
(components and simplicial vertices are the ``k = 0`` and ``k = d`` cases),
and otherwise deletion-contraction on the edge with the largest endpoint
degree sum.  Intermediate results are memoized by canonical form.

A separate backtracking counter serves as an oracle for all of this.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Literal

from .graph import AdjacentPair, Graph, _bits, canonical_code, components_of, iter_cliques
from .polynomial import InexactDivision, Polynomial

log = logging.getLogger(__name__)

Method = Literal["oracle", "recursion", "product-rule"]

#: ``t ** n`` above this many bits is refused by the brute-force counter.
BRUTE_FORCE_BITS = 64

_T = Polynomial([0, 1])


class SizeGuardError(ValueError):
    pass


@dataclass(frozen=True)
class CountReport:
    form: str
    t: int
    value: int
    method: Method

    def to_json(self) -> dict:
        return {"form": self.form, "t": self.t, "value": self.value, "method": self.method}


# -- oracle -----------------------------------------------------------------


def brute_force_count(g: Graph | AdjacentPair, t: int) -> int:
    """Count proper colorings ``V -> {1..t}`` by backtracking.

    Vertices are assigned in id order; the last vertex is counted rather than
    enumerated.
    """
    if isinstance(g, AdjacentPair):
        return 0
    n = g.order
    if n == 0:
        return 1
    if t <= 0:
        return 0
    if n * max(t - 1, 1).bit_length() > BRUTE_FORCE_BITS:
        raise SizeGuardError(f"{t}^{n} colorings is past the brute-force guard")
    earlier = [[w for w in g.neighbors(v) if w < v] for v in range(n)]
    color = [0] * n

    def rec(v: int) -> int:
        used = {color[w] for w in earlier[v]}
        if v == n - 1:
            return t - len(used)
        total = 0
        for c in range(t):
            if c not in used:
                color[v] = c
                total += rec(v + 1)
        return total

    return rec(0)


# -- polynomial engine --------------------------------------------------------


def _falling(k: int) -> Polynomial:
    return Polynomial.falling_factorial(k)


def _edge_count(adj: tuple[int, ...]) -> int:
    return sum(m.bit_count() for m in adj) // 2


def _induced(adj: tuple[int, ...], keep: int) -> tuple[int, ...]:
    verts = list(_bits(keep))
    pos = {v: i for i, v in enumerate(verts)}
    out = []
    for v in verts:
        m = 0
        for x in _bits(adj[v] & keep):
            m |= 1 << pos[x]
        out.append(m)
    return tuple(out)


def _separator(adj: tuple[int, ...], max_k: int = 4) -> tuple[int, int, int] | None:
    """Find a clique ``S`` whose removal disconnects the graph.

    Returns ``(S, C1, k)`` as masks: ``C1`` is one component of ``G - S``.
    """
    full = (1 << len(adj)) - 1
    for k in range(1, max_k + 1):
        if len(adj) <= k + 1:
            return None
        for s in iter_cliques(adj, k):
            comps = components_of(adj, full & ~s)
            if len(comps) > 1:
                return s, comps[0], k
    return None


class ChromaticEngine:
    """Deletion-contraction with a canonical-form memo.

    ``memo=False`` disables the cache entirely (used to check memo soundness).
    ``product_rule=False`` skips simplicial vertices and clique separators, so
    only deletion-contraction and disjoint unions remain; it is a slower but
    independent route for checking the product rule.
    """

    def __init__(self, memo: bool = True, product_rule: bool = True):
        self.use_memo = memo
        self.use_product_rule = product_rule
        self.memo: dict[bytes, Polynomial] = {}
        self._raw: dict[tuple[int, ...], Polynomial] = {}
        self.stats = {"nodes": 0, "memo_hits": 0, "product_rule": 0, "deletion_contraction": 0}

    # public ---------------------------------------------------------------

    def polynomial(self, g: Graph | AdjacentPair) -> Polynomial:
        if isinstance(g, AdjacentPair):
            return Polynomial()
        return self._poly(g.adj)

    def top_method(self, g: Graph | AdjacentPair) -> Method:
        """How the top-level node of ``g`` is resolved (for reports)."""
        if isinstance(g, AdjacentPair):
            return "recursion"
        adj = g.adj
        if len(components_of(adj, (1 << len(adj)) - 1)) > 1 or _separator(adj):
            return "product-rule"
        return "recursion"

    # internals ------------------------------------------------------------

    def _poly(self, adj: tuple[int, ...]) -> Polynomial:
        self.stats["nodes"] += 1
        n = len(adj)
        m = _edge_count(adj)
        if m == 0:
            return Polynomial.monomial(n)
        if 2 * m == n * (n - 1):
            return _falling(n)
        full = (1 << n) - 1
        comps = components_of(adj, full)
        if m == n - len(comps):
            c = len(comps)
            return Polynomial.monomial(c) * _power(Polynomial([-1, 1]), n - c)
        if len(comps) > 1:
            self.stats["product_rule"] += 1
            p = Polynomial([1])
            for comp in comps:
                p = p * self._poly(_induced(adj, comp))
            return p
        # simplicial vertex: its closed neighborhood is a clique separator
        for v in range(n if self.use_product_rule else 0):
            nb = adj[v]
            if all(nb & ~adj[x] & ~(1 << x) == 0 for x in _bits(nb)):
                self.stats["product_rule"] += 1
                d = nb.bit_count()
                return Polynomial([-d, 1]) * self._poly(_induced(adj, full & ~(1 << v)))
        if self.use_memo:
            hit = self._raw.get(adj)
            if hit is not None:
                self.stats["memo_hits"] += 1
                return hit
            key = canonical_code(adj)
            hit = self.memo.get(key)
            if hit is not None:
                self.stats["memo_hits"] += 1
                self._raw[adj] = hit
                return hit
        result = self._split_or_recurse(adj)
        if self.use_memo:
            self.memo[key] = result
            self._raw[adj] = result
        return result

    def _split_or_recurse(self, adj: tuple[int, ...]) -> Polynomial:
        n = len(adj)
        full = (1 << n) - 1
        sep = _separator(adj) if self.use_product_rule else None
        if sep is not None:
            s, c1, k = sep
            self.stats["product_rule"] += 1
            p1 = self._poly(_induced(adj, s | c1))
            p2 = self._poly(_induced(adj, full & ~c1))
            try:
                return (p1 * p2).exact_div(_falling(k))
            except InexactDivision as exc:
                raise AssertionError("clique separator product left a remainder") from exc
        self.stats["deletion_contraction"] += 1
        u, w = _pick_edge(adj)
        g = Graph.from_masks(adj)
        deleted = g.delete_edge(u, w)
        contracted = g.contract_edge(u, w)
        return self._poly(deleted.adj) - self._poly(contracted.adj)

    # on-disk cache --------------------------------------------------------

    def load(self, path: str | Path) -> int:
        """Merge memo records from a cache file; returns how many were read."""
        path = Path(path)
        if not path.exists():
            return 0
        count = 0
        with path.open() as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                form, _, coeffs = line.partition("\t")
                self.memo[bytes.fromhex(form)] = Polynomial(int(c) for c in coeffs.split())
                count += 1
        return count

    def save(self, path: str | Path) -> int:
        """Write the memo as ``<form hex>\\t<c0> <c1> ...`` lines, sorted by form."""
        path = Path(path)
        with path.open("w") as fh:
            for form in sorted(self.memo):
                coeffs = " ".join(str(c) for c in self.memo[form].coeffs)
                fh.write(f"{form.hex()}\t{coeffs}\n")
        return len(self.memo)


def _power(p: Polynomial, k: int) -> Polynomial:
    out = Polynomial([1])
    for _ in range(k):
        out = out * p
    return out


def _pick_edge(adj: tuple[int, ...]) -> tuple[int, int]:
    best = None
    best_key = None
    for u, m in enumerate(adj):
        for w in _bits(m >> (u + 1) << (u + 1)):
            key = (-(adj[u].bit_count() + adj[w].bit_count()), u, w)
            if best_key is None or key < best_key:
                best_key, best = key, (u, w)
    assert best is not None
    return best


def clique_separator_split(g: Graph) -> tuple[Graph, Graph, int] | None:
    """Split ``g`` along a separating clique of order at most four.

    The two parts overlap exactly in the clique, so
    ``f(G) = f(G1) f(G2) / (t (t-1) ... (t-k+1))``.
    """
    adj = g.adj
    full = (1 << len(adj)) - 1
    comps = components_of(adj, full)
    if len(comps) > 1:
        return g.induced(_bits(comps[0])), g.induced(_bits(full & ~comps[0])), 0
    sep = _separator(adj)
    if sep is None:
        return None
    s, c1, k = sep
    return g.induced(_bits(s | c1)), g.induced(_bits(full & ~c1)), k


# -- module-level conveniences ---------------------------------------------

default_engine = ChromaticEngine()


def chromatic_polynomial(g: Graph | AdjacentPair, engine: ChromaticEngine | None = None) -> Polynomial:
    return (engine or default_engine).polynomial(g)


def count_colorings(
    g: Graph | AdjacentPair,
    t: int,
    cross_check: bool = False,
    engine: ChromaticEngine | None = None,
) -> CountReport:
    """Count ``t``-colorings, by the oracle for tiny graphs or the polynomial otherwise.

    With ``cross_check`` both routes run and must agree.
    """
    engine = engine or default_engine
    if isinstance(g, AdjacentPair):
        return CountReport("", t, 0, "recursion")
    form = canonical_code(g.adj).hex()
    if g.order <= 5 and not cross_check:
        return CountReport(form, t, brute_force_count(g, t), "oracle")
    value = engine.polynomial(g)(t)
    if cross_check:
        oracle = brute_force_count(g, t)
        if oracle != value:
            raise AssertionError(f"polynomial gives {value}, oracle gives {oracle} for {g!r}")
    return CountReport(form, t, value, engine.top_method(g))
