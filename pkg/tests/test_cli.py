import json
import subprocess
import sys

import pytest

from maxplanar.cli import main
from maxplanar.graph import complete_graph
from maxplanar.io import write_adjlist, write_planar_code
from maxplanar.triangulation import icosahedron, octahedron


def _run(capsys, argv):
    code = main(argv)
    lines = [json.loads(x) for x in capsys.readouterr().out.splitlines()]
    return code, lines[:-1], lines[-1]["run_report"]


@pytest.fixture
def k4_adj(tmp_path):
    p = tmp_path / "k4.txt"
    p.write_text(write_adjlist([complete_graph(4)]))
    return str(p)


@pytest.fixture
def ico_pc(tmp_path):
    p = tmp_path / "ico.pc"
    p.write_bytes(write_planar_code([icosahedron()]))
    return str(p)


def test_poly_k4(capsys, k4_adj):
    code, recs, report = _run(capsys, ["poly", "--input", k4_adj, "--eval", "4"])
    assert code == 0 and report["failures"] == []
    assert recs[0]["coefficients"] == [0, -6, 11, -6, 1] and recs[0]["value"] == 24


def test_poly_icosahedron_with_oracle(capsys, ico_pc):
    code, recs, _ = _run(capsys, ["poly", "--input", ico_pc, "--format", "planar-code", "--eval", "4", "--oracle"])
    assert code == 0 and recs[0]["value"] > 0


def test_poly_malformed_input(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("4 2\n0 1\n")
    code, recs, report = _run(capsys, ["poly", "--input", str(bad)])
    assert code == 1 and recs == [] and report["failures"]
    code, _, _ = _run(capsys, ["poly", "--input", str(tmp_path / "missing.txt")])
    assert code == 1


@pytest.mark.parametrize("theorem", ["1", "2"])
def test_verify_small(capsys, theorem):
    code, recs, report = _run(capsys, ["verify", "--theorem", theorem, "--order-max", "8"])
    assert code == 0
    assert report["results"]["graphs"] == 23 and report["results"]["violations"] == 0
    assert report["results"]["checks"] == len(recs) > 0


def test_verify_range_error(capsys):
    code, recs, report = _run(capsys, ["verify", "--theorem", "2", "--order-max", "20"])
    assert code == 1 and recs == [] and "outside" in report["failures"][0]["reason"]


def test_color(capsys, ico_pc):
    code, recs, report = _run(capsys, ["color", "--input", ico_pc])
    assert code == 0 and report["results"]["colored"] == 1
    cols = {int(k): c for k, c in recs[0]["coloring"].items()}
    assert all(cols[u] != cols[w] for u, w in icosahedron().graph.edges())


def test_color_rejects_k5(capsys, tmp_path):
    p = tmp_path / "k5.txt"
    p.write_text(write_adjlist([complete_graph(5)]))
    code, recs, report = _run(capsys, ["color", "--input", str(p)])
    assert code == 1 and recs == [] and "not planar" in report["failures"][0]["reason"]


def test_generate(capsys, tmp_path):
    out = tmp_path / "six.pc"
    code, _, report = _run(capsys, ["generate", "-n", "6", "--out", str(out)])
    assert code == 0 and report["results"]["count"] == 2
    assert out.read_bytes().startswith(b">>planar_code<<")
    code, _, report = _run(capsys, ["generate", "--order", "12", "--min-degree", "5"])
    assert report["results"]["written"] == 1
    code, _, report = _run(capsys, ["generate", "-n", "14"])
    assert code == 1


def test_classify(capsys, tmp_path):
    p = tmp_path / "two.txt"
    p.write_text(write_adjlist([complete_graph(4), octahedron().graph]))
    code, recs, report = _run(capsys, ["classify", "--input", str(p), "--oracle"])
    assert code == 0
    assert [r["classification"]["verdict"] for r in recs] == ["uniquely", "non-coordinated"]


def test_classify_reports_funnel_flags(capsys, ico_pc):
    code, recs, report = _run(capsys, ["classify", "--input", ico_pc])
    assert code == 0 and len(recs[0]["funnel_flags"]) == 12
    assert report["results"]["fully_obstructed"] == []


def test_jobs_do_not_change_results(capsys):
    _, serial, _ = _run(capsys, ["verify", "--theorem", "1", "--order-max", "8"])
    _, parallel, _ = _run(capsys, ["verify", "--theorem", "1", "--order-max", "8", "--jobs", "2"])
    assert serial == parallel


def test_cache_file(capsys, tmp_path, ico_pc):
    cache = tmp_path / "memo.tsv"
    _run(capsys, ["poly", "--input", ico_pc, "--cache", str(cache)])
    assert cache.stat().st_size > 0
    code, recs, _ = _run(capsys, ["poly", "--input", ico_pc, "--cache", str(cache), "--eval", "4"])
    assert code == 0 and recs[0]["value"] == 240


def test_module_entry_point(k4_adj):
    out = subprocess.run(
        [sys.executable, "-m", "maxplanar", "poly", "--input", k4_adj, "--eval", "5"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert json.loads(out.stdout.splitlines()[0])["value"] == 120
