"""Wheel-contraction recursions for f(G, 4) and a constructive 4-coloring.

For a degree-4 vertex ``v`` with rim ``v1 v2 v3 v4``::

    f(G, 4) = f((G - v) o {v1, v3}, 4) + f((G - v) o {v2, v4}, 4)

For a degree-5 vertex with rim ``v1 .. v5``::

    f(G, 4) = [f(G1) - f(G1 + v1v3 + v1v4)]
            + [f(G2) - f(G2 + v3v1 + v3v5)]
            + [f(G3) - f(G3 + v1v4)]

with ``G1, G2, G3`` the contractions of ``{v2, v5}, {v2, v4}, {v3, v5}`` in
``G - v``.  Each bracket counts colorings of ``G - v`` whose rim uses three
colors in a given pair pattern, hence is never negative.
"""

from __future__ import annotations

import json
import logging
from dataclasses import asdict, dataclass, field
from pathlib import Path

from .chromatic import ChromaticEngine, brute_force_count, count_colorings, default_engine
from .coloring import find_coloring, is_4chromatic_funnel, is_rainbow, iter_partitions
from .graph import AdjacentPair, Graph, canonical_form
from .triangulation import (
    Triangulation,
    WrongDegreeError,
    complete_to_triangulation,
    contract_wheel4,
    contract_wheel5,
    delete_degree3,
    from_graph,
    funnel_in,
    link_cycle,
)

log = logging.getLogger(__name__)

#: Rim pair patterns of a 3-colored 5-cycle, 1-based rim positions.
PATTERNS: tuple[tuple[tuple[int, int], tuple[int, int]], ...] = (
    ((2, 5), (1, 3)),
    ((2, 5), (1, 4)),
    ((2, 4), (1, 3)),
    ((2, 4), (3, 5)),
    ((3, 5), (1, 4)),
)


def pattern_name(pattern) -> str:
    (a, b), (c, d) = pattern
    return f"{a}{b}|{c}{d}"


def _count(g: Graph | AdjacentPair, engine: ChromaticEngine | None, oracle: bool) -> int:
    return count_colorings(g, 4, cross_check=oracle, engine=engine).value


def _total(t: Triangulation, engine: ChromaticEngine | None, oracle: bool) -> int:
    value = (engine or default_engine).polynomial(t.graph)(4)
    if oracle and value != brute_force_count(t.graph, 4):
        raise AssertionError("f(G, 4) disagrees with the brute-force count")
    return value


# -- reports ----------------------------------------------------------------


@dataclass
class Theorem1Report:
    host: str
    vertex: int
    rim: list[int]
    term1: int
    term2: int
    total: int
    holds: bool

    def to_json(self) -> dict:
        return asdict(self)


@dataclass
class Bracket:
    value: int
    g: int
    ga: int


@dataclass
class Theorem2Report:
    host: str
    vertex: int
    rim: list[int]
    brackets: list[Bracket]
    total: int
    holds: bool
    nonnegative: bool

    @property
    def b1(self) -> int:
        return self.brackets[0].value

    @property
    def b2(self) -> int:
        return self.brackets[1].value

    @property
    def b3(self) -> int:
        return self.brackets[2].value

    def to_json(self) -> dict:
        return asdict(self)


def theorem1_check(
    t: Triangulation,
    v: int,
    rim: tuple[int, ...] | None = None,
    engine: ChromaticEngine | None = None,
    oracle: bool = False,
) -> Theorem1Report:
    if t.degree(v) != 4:
        raise WrongDegreeError(f"vertex {v} has degree {t.degree(v)}, expected 4")
    rim = rim or link_cycle(t, v).rim
    g1, g2 = contract_wheel4(t, v, rim)
    term1, term2 = _count(g1, engine, oracle), _count(g2, engine, oracle)
    total = _total(t, engine, oracle)
    return Theorem1Report(canonical_form(t.graph).hex(), v, list(rim), term1, term2, total, term1 + term2 == total)


def theorem2_check(
    t: Triangulation,
    v: int,
    rim: tuple[int, ...] | None = None,
    engine: ChromaticEngine | None = None,
    oracle: bool = False,
) -> Theorem2Report:
    if t.degree(v) != 5:
        raise WrongDegreeError(f"vertex {v} has degree {t.degree(v)}, expected 5")
    rim = rim or link_cycle(t, v).rim
    res = contract_wheel5(t, v, rim)
    brackets = []
    for g, ga in ((res.g1, res.g1a), (res.g2, res.g2a), (res.g3, res.g3a)):
        a, b = _count(g, engine, oracle), _count(ga, engine, oracle)
        brackets.append(Bracket(a - b, a, b))
    total = _total(t, engine, oracle)
    return Theorem2Report(
        canonical_form(t.graph).hex(),
        v,
        list(rim),
        brackets,
        total,
        sum(b.value for b in brackets) == total,
        all(b.value >= 0 for b in brackets),
    )


# -- oracle counts over rim colorings -----------------------------------------


def _count_with_fixed(g: Graph, fixed: dict[int, int], k: int = 4) -> int:
    """Brute-force count of ``k``-colorings of ``g`` extending ``fixed``."""
    for a, ca in fixed.items():
        for b, cb in fixed.items():
            if a < b and ca == cb and g.has_edge(a, b):
                return 0
    free = [v for v in range(g.order) if v not in fixed]
    colors = dict(fixed)
    nbrs = [g.neighbors(v) for v in range(g.order)]

    def rec(i: int) -> int:
        if i == len(free):
            return 1
        v = free[i]
        used = {colors[w] for w in nbrs[v] if w in colors}
        if i == len(free) - 1:
            return k - len(used)
        total = 0
        for c in range(k):
            if c not in used:
                colors[v] = c
                total += rec(i + 1)
                del colors[v]
        return total

    return rec(0)


def _rim_in_g_minus_v(t: Triangulation, v: int, rim) -> tuple[Graph, list[int]]:
    h = t.graph.delete_vertex(v)
    return h, [x - (x > v) for x in rim]


def _rim_colorings(k: int, size: int):
    def rec(prefix):
        if len(prefix) == size:
            yield tuple(prefix)
            return
        for c in range(k):
            yield from rec(prefix + [c])

    yield from rec([])


def equality_pattern_counts(t: Triangulation, v: int, rim: tuple[int, ...] | None = None) -> dict[str, int]:
    """4-colorings of ``G - v`` tallied by which 3-color rim pattern they realize.

    Every rim coloring with exactly three colors matches exactly one pattern
    and extends to ``v`` in exactly one way, so the tallies sum to ``f(G, 4)``.
    """
    if t.degree(v) != 5:
        raise WrongDegreeError(f"vertex {v} has degree {t.degree(v)}, expected 5")
    rim = rim or link_cycle(t, v).rim
    h, r = _rim_in_g_minus_v(t, v, rim)
    out = {pattern_name(p): 0 for p in PATTERNS}
    for cols in _rim_colorings(4, 5):
        if len(set(cols)) != 3:
            continue
        if any(cols[i] == cols[(i + 1) % 5] for i in range(5)):
            continue
        matched = [
            p for p in PATTERNS
            if cols[p[0][0] - 1] == cols[p[0][1] - 1] and cols[p[1][0] - 1] == cols[p[1][1] - 1]
        ]
        assert len(matched) == 1
        out[pattern_name(matched[0])] += _count_with_fixed(h, dict(zip(r, cols)))
    return out


def theorem1_reconciliation(t: Triangulation, v: int) -> dict[str, int]:
    """Split colorings of ``G - v`` by which opposite rim pairs share a color."""
    if t.degree(v) != 4:
        raise WrongDegreeError(f"vertex {v} has degree {t.degree(v)}, expected 4")
    rim = link_cycle(t, v).rim
    h, r = _rim_in_g_minus_v(t, v, rim)
    tally = {"both": 0, "only13": 0, "only24": 0, "neither": 0}
    for cols in _rim_colorings(4, 4):
        if any(cols[i] == cols[(i + 1) % 4] for i in range(4)):
            continue
        e13, e24 = cols[0] == cols[2], cols[1] == cols[3]
        key = "both" if e13 and e24 else "only13" if e13 else "only24" if e24 else "neither"
        tally[key] += _count_with_fixed(h, dict(zip(r, cols)))
    tally["n13"] = tally["both"] + tally["only13"]
    tally["n24"] = tally["both"] + tally["only24"]
    tally["extensions"] = 2 * tally["both"] + tally["only13"] + tally["only24"]
    return tally


# -- funnel obstructions -------------------------------------------------------


@dataclass
class FunnelFlags:
    """Per contraction: ``True`` if every partition is rainbow on its funnel,
    ``False`` if some partition is not, ``None`` for an adjacent-pair marker."""

    vertex: int
    rim: list[int]
    flags: list[bool | None]
    obstruction: bool

    def to_json(self) -> dict:
        return asdict(self)


def funnel_flags(t: Triangulation, v: int, rim: tuple[int, ...] | None = None) -> FunnelFlags:
    rim = rim or link_cycle(t, v).rim
    res = contract_wheel5(t, v, rim)
    flags: list[bool | None] = []
    for i, g in enumerate((res.g1, res.g2, res.g3), start=1):
        f = funnel_in(t, g, rim, i)
        flags.append(None if f is None else is_4chromatic_funnel(g, f))  # type: ignore[arg-type]
    return FunnelFlags(v, list(rim), flags, all(x is not False for x in flags))


def find_funnel_obstructions(t: Triangulation) -> list[FunnelFlags]:
    """Funnel flags for every degree-5 vertex of a minimum-degree-5 triangulation."""
    if t.min_degree() != 5:
        raise WrongDegreeError(f"minimum degree is {t.min_degree()}, expected 5")
    return [funnel_flags(t, v) for v in range(t.order) if t.degree(v) == 5]


# -- constructive coloring -----------------------------------------------------


@dataclass
class Step:
    kind: str
    labels: list[int]
    color: int | None = None
    merged: list[int] = field(default_factory=list)
    branch: int | None = None
    coloring: dict[int, int] | None = None

    def to_json(self) -> dict:
        d = asdict(self)
        if self.coloring is not None:
            d["coloring"] = {str(k): c for k, c in sorted(self.coloring.items())}
        return d


@dataclass
class ColoringCertificate:
    coloring: dict[int, int]
    trace: list[Step]
    fallback: bool = False
    obstructions: list[dict] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "coloring": {str(k): c for k, c in sorted(self.coloring.items())},
            "trace": [s.to_json() for s in self.trace],
            "fallback": self.fallback,
            "obstructions": self.obstructions,
        }


def is_proper(g: Graph, coloring: dict[int, int]) -> bool:
    """``coloring`` maps original labels to colors 1..4."""
    cols = []
    for prov in g.provenance:
        cs = {coloring.get(lab) for lab in prov}
        if len(cs) != 1 or None in cs:
            return False
        cols.append(cs.pop())
    if any(c not in (1, 2, 3, 4) for c in cols):
        return False
    return all(cols[u] != cols[w] for u, w in g.edges())


def replay(cert: ColoringCertificate) -> dict[int, int]:
    """Rebuild the coloring from the trace, bottom-up."""
    base = cert.trace[-1]
    if base.coloring is None:
        raise ValueError("trace does not end in a base or fallback step")
    coloring = dict(base.coloring)
    for step in reversed(cert.trace[:-1]):
        for lab in step.labels:
            coloring[lab] = step.color  # type: ignore[assignment]
    return coloring


class _Coloring:
    def __init__(self, obstruction_log: Path | None):
        self.trace: list[Step] = []
        self.fallback = False
        self.obstructions: list[dict] = []
        self.log_path = obstruction_log

    def _labels_coloring(self, g: Graph, cols: list[int]) -> dict[int, int]:
        return {lab: cols[v] for v, prov in enumerate(g.provenance) for lab in prov}

    def _free(self, t: Triangulation, coloring: dict[int, int], v: int) -> int:
        used = {coloring[t.graph.label(w)] for w in t.rotation[v]}
        return min(c for c in (1, 2, 3, 4) if c not in used)

    def run(self, t: Triangulation) -> dict[int, int]:
        n = t.order
        if n <= 4:
            cols = find_coloring(t.graph)
            assert cols is not None
            coloring = self._labels_coloring(t.graph, cols)
            self.trace.append(Step("base-case", [], coloring=dict(coloring)))
            return coloring
        delta = t.min_degree()
        if delta == 3:
            v = next(x for x in range(n) if t.degree(x) == 3)
            self.trace.append(Step("degree3-delete", sorted(t.graph.provenance[v])))
            idx = len(self.trace) - 1
            coloring = self.run(delete_degree3(t, v))
            c = self._free(t, coloring, v)
            for lab in t.graph.provenance[v]:
                coloring[lab] = c
            self.trace[idx].color = c
            return coloring
        if delta == 4:
            return self._wheel4(t, next(x for x in range(n) if t.degree(x) == 4))
        for v in range(n):
            if t.degree(v) == 5:
                done = self._wheel5(t, v)
                if done is not None:
                    return done
        return self._fallback(t)

    def _as_triangulation(self, g: Graph) -> Triangulation:
        if g.size() == 3 * g.order - 6:
            return from_graph(g)
        return complete_to_triangulation(g)

    def _wheel4(self, t: Triangulation, v: int) -> dict[int, int]:
        rim = link_cycle(t, v).rim
        res = contract_wheel4(t, v, rim)
        options = [(i, g) for i, g in ((1, res.g1), (2, res.g2)) if isinstance(g, Graph)]
        # a branch that is already maximal planar needs no completion
        options.sort(key=lambda ig: (ig[1].size() != 3 * ig[1].order - 6, ig[0]))
        branch, g = options[0]
        pair = (rim[0], rim[2]) if branch == 1 else (rim[1], rim[3])
        merged = [lab for x in pair for lab in t.graph.provenance[x]]
        self.trace.append(Step("theorem1-lift", sorted(t.graph.provenance[v]), None, sorted(merged), branch))
        idx = len(self.trace) - 1
        coloring = self.run(self._as_triangulation(g))
        self.trace[idx].color = self._free(t, coloring, v)
        for lab in t.graph.provenance[v]:
            coloring[lab] = self.trace[idx].color
        return coloring

    def _wheel5(self, t: Triangulation, v: int) -> dict[int, int] | None:
        rim = link_cycle(t, v).rim
        res = contract_wheel5(t, v, rim)
        pairs = {1: (rim[1], rim[4]), 2: (rim[1], rim[3]), 3: (rim[2], rim[4])}
        for i, g in ((1, res.g1), (2, res.g2), (3, res.g3)):
            f = funnel_in(t, g, rim, i)
            if f is None:
                continue
            for p in iter_partitions(g):  # type: ignore[arg-type]
                if is_rainbow(p, f):
                    continue
                coloring = self._labels_coloring(g, p.coloring())  # type: ignore[arg-type]
                base = dict(coloring)
                merged = [lab for x in pairs[i] for lab in t.graph.provenance[x]]
                c = self._free(t, coloring, v)
                labels = sorted(t.graph.provenance[v])
                for lab in labels:
                    coloring[lab] = c
                self.trace.append(Step("theorem2-lift", labels, c, sorted(merged), i))
                self.trace.append(Step("base-case", [], coloring=base))
                return coloring
        record = {"host": canonical_form(t.graph).hex(), "vertex": v, "rim": list(rim)}
        self.obstructions.append(record)
        if self.log_path is not None:
            with self.log_path.open("a") as fh:
                fh.write(json.dumps(record) + "\n")
        return None

    def _fallback(self, t: Triangulation) -> dict[int, int]:
        self.fallback = True
        log.warning("every degree-5 wheel is funnel-obstructed; falling back to exhaustive search")
        cols = find_coloring(t.graph)
        if cols is None:
            raise AssertionError("triangulation with no 4-coloring")
        coloring = self._labels_coloring(t.graph, cols)
        self.trace.append(Step("fallback-exhaustive", [], coloring=dict(coloring)))
        return coloring


def four_color(t: Triangulation, obstruction_log: str | Path | None = None) -> ColoringCertificate:
    """4-color ``t`` by minimum-degree reduction; the result is validated.

    The trace lists reduction steps top-down and ends with the step that
    colored the smallest graph directly.  Obstructions are appended to
    ``obstruction_log`` as JSON lines when given.
    """
    runner = _Coloring(Path(obstruction_log) if obstruction_log else None)
    coloring = runner.run(t)
    cert = ColoringCertificate(coloring, runner.trace, runner.fallback, runner.obstructions)
    if not is_proper(t.graph, coloring):
        raise AssertionError("four_color produced an improper coloring")
    if replay(cert) != coloring:
        raise AssertionError("trace replay does not reproduce the coloring")
    return cert
