"""Exhaustive generation of triangulations by vertex splitting.

Every triangulation of order ``n >= 5`` has an edge whose contraction leaves a
simple triangulation (an edge in no separating triangle), so splitting every
vertex of every order ``n - 1`` triangulation in every way reaches all of
order ``n``.  A child is kept only when its new edge has the largest
degree key among its contractible edges, which prunes most repeats without
losing any class; the rest are removed by an embedding-based canonical code.
Triangulations are 3-connected, so by Whitney's theorem the code (minimized
over both orientations) is a complete isomorphism invariant.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache

from .graph import GraphError
from .triangulation import Rotation, Triangulation, split_rotation

MIN_ORDER = 4
MAX_ORDER = 13


@dataclass
class GenerationReport:
    order: int
    graphs: list[Triangulation]
    counts_by_min_degree: dict[int, int] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "count": len(self.graphs),
            "counts_by_min_degree": {str(k): v for k, v in sorted(self.counts_by_min_degree.items())},
        }


def embedding_code(rot: Rotation) -> tuple[int, ...]:
    """Canonical code of a rotation system, invariant under relabeling and mirroring.

    Starts are restricted to directed edges ``(v, w)`` with the smallest
    ``(deg v, deg w)``; that set is itself invariant.
    """
    n = len(rot)
    degs = [len(r) for r in rot]
    dmin = min(degs)
    starts = []
    best_w = None
    for v in range(n):
        if degs[v] != dmin:
            continue
        for w in rot[v]:
            dw = degs[w]
            if best_w is None or dw < best_w:
                best_w, starts = dw, [(v, w)]
            elif dw == best_w:
                starts.append((v, w))
    pos = [{w: i for i, w in enumerate(r)} for r in rot]
    best: list[int] | None = None
    for v, w in starts:
        for step in (1, -1):
            code = _code_from(rot, pos, v, w, step, best)
            if code is not None:
                best = code
    assert best is not None
    return tuple(best)


def _code_from(rot, pos, v, w, step, best):
    """BFS code from the directed edge ``v -> w``; ``None`` once it exceeds ``best``."""
    label = {v: 1}
    order = [v]
    first = {v: w}
    code: list[int] = []
    k = 0
    smaller = best is None
    i = 0
    while i < len(order):
        x = order[i]
        r = rot[x]
        d = len(r)
        s = pos[x][first[x]]
        for j in range(d):
            y = r[(s + step * j) % d]
            lab = label.get(y)
            if lab is None:
                lab = len(order) + 1
                label[y] = lab
                order.append(y)
                first[y] = x
            if not smaller:
                b = best[k]
                if lab > b:
                    return None
                if lab < b:
                    smaller = True
            code.append(lab)
            k += 1
        if not smaller and best[k] != 0:
            smaller = True
        code.append(0)
        k += 1
        i += 1
    return code if smaller else None


def _masks(rot: Rotation) -> list[int]:
    out = []
    for r in rot:
        m = 0
        for w in r:
            m |= 1 << w
        out.append(m)
    return out


def _children(rot: Rotation, rng: random.Random | None):
    """Splits of ``rot`` whose new edge carries the largest contractible-edge key."""
    n = len(rot)
    adj = _masks(rot)
    degs = [len(r) for r in rot]
    verts = list(range(n))
    if rng is not None:
        rng.shuffle(verts)
    new = n
    for w in verts:
        r = rot[w]
        d = len(r)
        pairs = [(i, j) for i in range(d) for j in range(i + 1, d)]
        if rng is not None:
            rng.shuffle(pairs)
        for i, j in pairs:
            p, q = r[i], r[j]
            da = j - i + 2  # p..q plus the new vertex
            db = d - (j - i) + 1 + 1
            cdeg = degs[:] + [db]
            cdeg[w] = da
            cdeg[p] += 1
            cdeg[q] += 1
            key = (da + db, max(da, db))
            # child adjacency
            cadj = adj[:] + [0]
            ma = 1 << new
            for k in range(i, j + 1):
                ma |= 1 << r[k]
            mb = 1 << w
            for k in range(j, i + d + 1):
                mb |= 1 << r[k % d]
            cadj[w] = ma
            cadj[new] = mb
            bw, bn = 1 << w, 1 << new
            for k in range(j + 1, i + d):
                x = r[k % d]
                cadj[x] = (cadj[x] & ~bw) | bn
            cadj[p] |= bn
            cadj[q] |= bn
            if _dominated(cadj, cdeg, key):
                continue
            yield split_rotation(rot, w, p, q)


def _dominated(cadj: list[int], cdeg: list[int], key: tuple[int, int]) -> bool:
    s0, m0 = key
    for a, ma in enumerate(cadj):
        da = cdeg[a]
        rest = ma >> (a + 1)
        b = a + 1
        while rest:
            if rest & 1:
                db = cdeg[b]
                s = da + db
                if (s > s0 or (s == s0 and max(da, db) > m0)) and (ma & cadj[b]).bit_count() == 2:
                    return True
            rest >>= 1
            b += 1
    return False


K4_ROTATION: Rotation = ((1, 3, 2), (0, 2, 3), (1, 0, 3), (2, 0, 1))


def _relabel_by_code(rot: Rotation) -> Rotation:
    """Relabel a rotation system into the BFS order realizing its canonical code."""
    code = embedding_code(rot)
    out: list[tuple[int, ...]] = []
    cur: list[int] = []
    for x in code:
        if x == 0:
            out.append(tuple(y - 1 for y in cur))
            cur = []
        else:
            cur.append(x)
    return tuple(out)


def extend_level(parents, rng: random.Random | None = None) -> list[Rotation]:
    """All triangulations one order up from the given complete set, in code order."""
    seen: dict[tuple[int, ...], Rotation] = {}
    parents = list(parents)
    if rng is not None:
        rng.shuffle(parents)
    for rot in parents:
        for child in _children(rot, rng):
            code = embedding_code(child)
            if code not in seen:
                seen[code] = child
    return [_relabel_by_code(seen[c]) for c in sorted(seen)]


@lru_cache(maxsize=None)
def _level(n: int) -> tuple[Rotation, ...]:
    if n == MIN_ORDER:
        return (_relabel_by_code(K4_ROTATION),)
    return tuple(extend_level(_level(n - 1)))


def all_rotations(n: int, seed: int | None = None) -> list[Rotation]:
    """Rotation systems of every triangulation of order ``n``, canonically ordered.

    A ``seed`` shuffles the splitting order at every level (bypassing the
    cache); the output must not depend on it.
    """
    _check_order(n)
    if seed is None:
        return list(_level(n))
    rng = random.Random(seed)
    level = [_relabel_by_code(K4_ROTATION)]
    for _ in range(MIN_ORDER, n):
        level = extend_level(level, rng)
    return level


def _check_order(n: int) -> None:
    if not MIN_ORDER <= n <= MAX_ORDER:
        raise GraphError(f"order {n} outside the supported range {MIN_ORDER}..{MAX_ORDER}")


def generate_all(n: int, min_degree_filter: int | None = None, seed: int | None = None) -> GenerationReport:
    """All isomorphism classes of ``n``-vertex triangulations.

    ``min_degree_filter`` keeps only graphs whose minimum degree equals it.
    """
    rots = all_rotations(n, seed)
    counts = Counter(min(len(r) for r in rot) for rot in rots)
    if min_degree_filter is not None:
        rots = [r for r in rots if min(len(x) for x in r) == min_degree_filter]
    graphs = [Triangulation.from_rotation(r) for r in rots]
    return GenerationReport(n, graphs, dict(counts))


def corpus(max_order: int, min_order: int = MIN_ORDER) -> list[Triangulation]:
    """Every triangulation with ``min_order <= n <= max_order``."""
    out = []
    for n in range(min_order, max_order + 1):
        out.extend(generate_all(n).graphs)
    return out
