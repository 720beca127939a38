"""Command-line front end.

Every command prints one JSON object per graph (or per check) on stdout and
finishes with a run report line ``{"run_report": {...}}``.  The exit status is
0 exactly when the report's ``failures`` list is empty.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Callable, Iterable

from . import chromatic
from .chromatic import brute_force_count, count_colorings
from .coloring import classify
from .generate import MAX_ORDER, MIN_ORDER, generate_all
from .graph import Graph, GraphError, canonical_form, find_clique
from .io import read_adjlist, read_planar_code, write_planar_code
from .triangulation import Triangulation, from_graph, link_cycle
from .wheels import find_funnel_obstructions, four_color, is_proper, theorem1_check, theorem2_check

DEFAULT_SEED = 20160101


class RunReport:
    def __init__(self, command: str, inputs: dict):
        self.command = command
        self.inputs = inputs
        self.results: dict = {}
        self.failures: list[dict] = []
        self._start = time.perf_counter()

    def fail(self, form: str | None, reason: str) -> None:
        self.failures.append({"form": form, "reason": reason})

    def to_json(self) -> dict:
        return {
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "timing": round(time.perf_counter() - self._start, 3),
            "failures": self.failures,
        }


def _emit(obj: dict, out=None) -> None:
    out = out or sys.stdout
    out.write(json.dumps(obj, sort_keys=True) + "\n")
    out.flush()


def _map(fn: Callable, items: Iterable, jobs: int, initargs=()) -> Iterable:
    """Order-preserving map over a process pool when ``jobs > 1``."""
    if jobs <= 1:
        yield from map(fn, items)
        return
    with ProcessPoolExecutor(max_workers=jobs, initializer=_init_worker, initargs=initargs) as pool:
        yield from pool.map(fn, items, chunksize=4)


def _init_worker(cache: str | None = None) -> None:
    if cache:
        chromatic.default_engine.load(cache)


# -- input ------------------------------------------------------------------


def _detect(data: bytes) -> str:
    if data.startswith(b">>planar_code"):
        return "planar-code"
    try:
        text = data.decode("ascii")
    except UnicodeDecodeError:
        return "planar-code"
    return "adjlist" if all(ch.isdigit() or ch.isspace() or ch == "#" for ch in text[:64]) else "planar-code"


def _read_graphs(path: str, fmt: str | None) -> list[Graph | Triangulation]:
    data = Path(path).read_bytes()
    fmt = fmt or _detect(data)
    if fmt == "planar-code":
        return list(read_planar_code(data))
    return list(read_adjlist(data.decode()))


def _as_graph(x: Graph | Triangulation) -> Graph:
    return x.graph if isinstance(x, Triangulation) else x


def _random_relabel(g: Graph, rng: random.Random) -> Graph:
    perm = list(range(g.order))
    rng.shuffle(perm)
    return g.relabel(perm)


# -- workers (module level so they pickle) ----------------------------------


def _poly_work(args) -> dict:
    index, g, at, oracle, seed = args
    rec: dict = {"index": index, "form": canonical_form(g).hex(), "order": g.order, "edges": g.size()}
    p = chromatic.chromatic_polynomial(g)
    rec["coefficients"] = list(p.coeffs)
    errors = []
    if at is not None:
        rec["t"] = at
        rec["value"] = p(at)
    if oracle:
        for t in range(1, 7):
            if p(t) != brute_force_count(g, t):
                errors.append(f"polynomial and oracle disagree at t={t}")
        q = chromatic.chromatic_polynomial(_random_relabel(g, random.Random(seed + index)))
        if q != p:
            errors.append("polynomial changed under relabeling")
    rec["errors"] = errors
    return rec


def _color_work(args) -> dict:
    index, t = args
    rec: dict = {"index": index, "form": canonical_form(t.graph).hex(), "order": t.order}
    cert = four_color(t)
    if not is_proper(t.graph, cert.coloring):
        raise AssertionError("certificate failed validation")
    rec.update(cert.to_json())
    return rec


def _classify_work(args) -> dict:
    index, g, cap, oracle, seed = args
    rec: dict = {"index": index, "form": canonical_form(g).hex(), "order": g.order}
    c = classify(g, cap)
    rec["classification"] = c.to_json()
    errors = []
    if oracle:
        other = classify(_random_relabel(g, random.Random(seed + index)), cap)
        if other.verdict != c.verdict:
            errors.append(f"verdict {c.verdict} became {other.verdict} under relabeling")
        if find_clique(g, 3) is not None:
            f4 = count_colorings(g, 4, cross_check=True).value
            if f4 != 24 * c.partitions:
                errors.append(f"f(G, 4) = {f4} but {c.partitions} partitions were enumerated")
    rec["errors"] = errors
    try:
        t = from_graph(g)
    except GraphError:
        t = None
    if t is not None and t.min_degree() == 5:
        flags = find_funnel_obstructions(t)
        rec["funnel_flags"] = [f.to_json() for f in flags]
        rec["obstructions"] = [f.vertex for f in flags if f.obstruction]
    return rec


def _verify_work(args) -> list[dict]:
    theorem, t, oracle = args
    out = []
    check = theorem1_check if theorem == 1 else theorem2_check
    degree = 4 if theorem == 1 else 5
    for v in range(t.order):
        if t.degree(v) != degree:
            continue
        for rim in link_cycle(t, v).labelings():
            rep = check(t, v, rim, oracle=oracle)
            d = rep.to_json()
            d["order"] = t.order
            out.append(d)
    return out


# -- commands ----------------------------------------------------------------


def cmd_poly(args) -> RunReport:
    report = RunReport("poly", {"input": args.input, "format": args.format, "eval": args.eval})
    try:
        graphs = [_as_graph(x) for x in _read_graphs(args.input, args.format)]
    except (OSError, GraphError, UnicodeDecodeError) as exc:
        report.fail(None, f"cannot read input: {exc}")
        return report
    items = [(i, g, args.eval, args.oracle, args.seed) for i, g in enumerate(graphs)]
    for rec in _map(_poly_work, items, args.jobs, (args.cache,)):
        for e in rec["errors"]:
            report.fail(rec["form"], e)
        _emit(rec)
    report.results = {"graphs": len(graphs)}
    return report


def cmd_verify(args) -> RunReport:
    theorem = args.theorem
    report = RunReport("verify", {"theorem": theorem, "order_max": args.order_max, "oracle": args.oracle})
    if not MIN_ORDER <= args.order_max <= MAX_ORDER:
        report.fail(None, f"order_max {args.order_max} outside {MIN_ORDER}..{MAX_ORDER}")
        return report
    hosts = []
    for n in range(MIN_ORDER, args.order_max + 1):
        hosts.extend(generate_all(n).graphs)
    checks = violations = negatives = 0
    items = [(theorem, t, args.oracle) for t in hosts]
    for recs in _map(_verify_work, items, args.jobs, (args.cache,)):
        for rec in recs:
            checks += 1
            if not rec["holds"]:
                violations += 1
                report.fail(rec["host"], f"identity fails at vertex {rec['vertex']} rim {rec['rim']}")
            if theorem == 2 and not rec["nonnegative"]:
                negatives += 1
                report.fail(rec["host"], f"negative bracket at vertex {rec['vertex']} rim {rec['rim']}")
            _emit(rec)
    report.results = {"graphs": len(hosts), "checks": checks, "violations": violations}
    if theorem == 2:
        report.results["negative_brackets"] = negatives
    return report


def cmd_color(args) -> RunReport:
    report = RunReport("color", {"input": args.input, "format": args.format})
    try:
        raw = _read_graphs(args.input, args.format)
    except (OSError, GraphError, UnicodeDecodeError) as exc:
        report.fail(None, f"cannot read input: {exc}")
        return report
    items = []
    for i, x in enumerate(raw):
        if isinstance(x, Triangulation):
            items.append((i, x))
            continue
        try:
            items.append((i, from_graph(x)))
        except GraphError as exc:
            report.fail(canonical_form(x).hex(), f"graph {i} rejected: {exc}")
    fallbacks = 0
    for rec in _map(_color_work, items, args.jobs):
        fallbacks += rec["fallback"]
        _emit(rec)
    report.results = {"graphs": len(raw), "colored": len(items), "fallbacks": fallbacks}
    return report


def cmd_generate(args) -> RunReport:
    report = RunReport("generate", {"n": args.n, "min_degree": args.min_degree, "out": args.out})
    try:
        gen = generate_all(args.n, args.min_degree)
    except GraphError as exc:
        report.fail(None, str(exc))
        return report
    if args.out:
        Path(args.out).write_bytes(write_planar_code(gen.graphs))
    report.results = gen.to_json()
    report.results["written"] = len(gen.graphs)
    return report


def cmd_classify(args) -> RunReport:
    report = RunReport("classify", {"input": args.input, "format": args.format, "cap": args.cap})
    try:
        graphs = [_as_graph(x) for x in _read_graphs(args.input, args.format)]
    except (OSError, GraphError, UnicodeDecodeError) as exc:
        report.fail(None, f"cannot read input: {exc}")
        return report
    verdicts: dict[str, int] = {}
    obstructed = []
    items = [(i, g, args.cap, args.oracle, args.seed) for i, g in enumerate(graphs)]
    for rec in _map(_classify_work, items, args.jobs):
        v = rec["classification"]["verdict"]
        verdicts[v] = verdicts.get(v, 0) + 1
        for e in rec["errors"]:
            report.fail(rec["form"], e)
        if rec.get("obstructions"):
            obstructed.append(rec["form"])
        _emit(rec)
    report.results = {"graphs": len(graphs), "verdicts": verdicts, "fully_obstructed": obstructed}
    return report


# -- entry point -------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--jobs", type=int, default=1, help="worker processes")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for relabeling cross-checks")
    common.add_argument("--oracle", action="store_true", help="cross-check every count by brute force")
    common.add_argument("--cache", help="on-disk chromatic polynomial cache")

    inp = argparse.ArgumentParser(add_help=False)
    inp.add_argument("--input", required=True)
    inp.add_argument("--format", choices=["planar-code", "adjlist"], help="default: detect")

    parser = argparse.ArgumentParser(prog="maxplanar", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", parents=[common, inp], help="chromatic polynomials")
    p.add_argument("--eval", type=int, help="also evaluate at this t")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("verify", parents=[common], help="sweep the wheel identities")
    p.add_argument("--theorem", type=int, choices=[1, 2], required=True)
    p.add_argument("--order-max", type=int, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("color", parents=[common, inp], help="constructive 4-coloring")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("generate", parents=[common], help="all triangulations of one order")
    p.add_argument("-n", "--order", dest="n", type=int, required=True)
    p.add_argument("--min-degree", type=int)
    p.add_argument("--out", help="planar-code output file")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("classify", parents=[common, inp], help="uniquely/quasi/pseudo classification")
    p.add_argument("--cap", type=int, help="largest induced subgraph searched for quasi-uniqueness")
    p.set_defaults(func=cmd_classify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.cache:
        chromatic.default_engine.load(args.cache)
    report = args.func(args)
    if args.cache and args.jobs <= 1:
        chromatic.default_engine.save(args.cache)
    _emit({"run_report": report.to_json()})
    return 0 if not report.failures else 1


if __name__ == "__main__":
    sys.exit(main())
