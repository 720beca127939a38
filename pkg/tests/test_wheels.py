import pytest

from conftest import E1, corpus, g7, stacked
from maxplanar.chromatic import chromatic_polynomial
from maxplanar.generate import generate_all
from maxplanar.triangulation import (
    WrongDegreeError,
    bipyramid,
    icosahedron,
    link_cycle,
    octahedron,
)
from maxplanar.wheels import (
    PATTERNS,
    equality_pattern_counts,
    find_funnel_obstructions,
    four_color,
    funnel_flags,
    is_proper,
    pattern_name,
    replay,
    theorem1_check,
    theorem1_reconciliation,
    theorem2_check,
)


def test_theorem1_b5():
    rep = theorem1_check(bipyramid(), E1, oracle=True)
    assert (rep.term1, rep.term2, rep.total, rep.holds) == (24, 0, 24, True)


def test_theorem1_octahedron():
    t = octahedron()
    for v in range(6):
        rep = theorem1_check(t, v, oracle=True)
        assert (rep.term1, rep.term2, rep.total, rep.holds) == (48, 48, 96, True)


def test_theorem1_stacked6():
    t = stacked(6)
    v = next(x for x in range(6) if t.degree(x) == 4)
    rep = theorem1_check(t, v, oracle=True)
    assert rep.holds and rep.total == 24


def test_theorem1_every_labeling():
    t = generate_all(8).graphs[5]
    for v in range(t.order):
        if t.degree(v) == 4:
            for rim in link_cycle(t, v).labelings():
                assert theorem1_check(t, v, rim).holds


def test_theorem1_reconciliation():
    for t in corpus(8, 6):
        for v in range(t.order):
            if t.degree(v) != 4:
                continue
            rep = theorem1_check(t, v)
            tally = theorem1_reconciliation(t, v)
            assert (tally["n13"], tally["n24"], tally["extensions"]) == (rep.term1, rep.term2, rep.total)


def test_wrong_degree_is_rejected():
    with pytest.raises(WrongDegreeError):
        theorem1_check(icosahedron(), 0)
    with pytest.raises(WrongDegreeError):
        theorem2_check(octahedron(), 0)
    with pytest.raises(WrongDegreeError):
        equality_pattern_counts(octahedron(), 0)


def test_theorem2_icosahedron(ico):
    f4 = chromatic_polynomial(ico.graph)(4)
    for v in (0, 5, 11):
        rep = theorem2_check(ico, v)
        assert rep.holds and rep.nonnegative and rep.total == f4 == 240
        assert sorted((rep.b1, rep.b2, rep.b3)) == [48, 96, 96]


def test_theorem2_g7():
    t = g7()
    for v in range(t.order):
        if t.degree(v) == 5:
            rep = theorem2_check(t, v, oracle=True)
            assert rep.holds and rep.nonnegative


def test_theorem2_chorded_rim():
    t = g7()
    rep = theorem2_check(t, 0, (6, 1, 5, 4, 2), oracle=True)
    assert rep.brackets[0].g == rep.brackets[0].ga == 0 and rep.b1 == 0
    assert rep.holds


def test_theorem2_report_fields():
    rep = theorem2_check(icosahedron(), 0)
    d = rep.to_json()
    assert set(d) == {"host", "vertex", "rim", "brackets", "total", "holds", "nonnegative"}
    assert set(d["brackets"][0]) == {"value", "g", "ga"}


def test_pattern_counts_icosahedron(ico):
    rep = theorem2_check(ico, 0)
    counts = equality_pattern_counts(ico, 0)
    assert sum(counts.values()) == 240
    assert counts["25|13"] + counts["25|14"] == rep.b1
    assert counts["24|13"] + counts["24|35"] == rep.b2
    assert counts["35|14"] == rep.b3


def test_pattern_counts_chorded_rim():
    counts = equality_pattern_counts(g7(), 0, (6, 1, 5, 4, 2))
    assert counts["25|13"] == counts["25|14"] == 0


def test_patterns_are_the_five_three_color_classes():
    assert [pattern_name(p) for p in PATTERNS] == ["25|13", "25|14", "24|13", "24|35", "35|14"]


def test_funnel_flags_icosahedron(ico):
    flags = find_funnel_obstructions(ico)
    assert len(flags) == 12
    assert any(not f.obstruction for f in flags)
    assert all(len(f.flags) == 3 for f in flags)


def test_funnel_flags_need_min_degree_5():
    with pytest.raises(WrongDegreeError):
        find_funnel_obstructions(octahedron())


def test_funnel_flags_marker_is_none():
    f = funnel_flags(g7(), 0, (6, 1, 5, 4, 2))
    assert f.flags[0] is None


def _kinds(cert):
    return [s.kind for s in cert.trace]


def test_four_color_stacked():
    cert = four_color(stacked(10))
    assert _kinds(cert) == ["degree3-delete"] * 6 + ["base-case"]
    assert not cert.fallback


def test_four_color_octahedron():
    cert = four_color(octahedron())
    assert "theorem1-lift" in _kinds(cert)
    assert is_proper(octahedron().graph, cert.coloring)


def test_four_color_icosahedron(ico):
    cert = four_color(ico)
    assert is_proper(ico.graph, cert.coloring)
    assert _kinds(cert)[0] in ("theorem2-lift", "fallback-exhaustive")
    assert replay(cert) == cert.coloring


def test_four_color_certificates_replay():
    for t in corpus(9):
        cert = four_color(t)
        assert is_proper(t.graph, cert.coloring)
        assert replay(cert) == cert.coloring
        assert set(cert.coloring) == set(range(t.order))


def test_is_proper_rejects_bad_colorings():
    g = octahedron().graph
    good = four_color(octahedron()).coloring
    assert is_proper(g, good)
    bad = dict(good)
    bad[0] = bad[1]
    assert not is_proper(g, bad)
    assert not is_proper(g, {k: 5 for k in good})
    missing = dict(good)
    del missing[0]
    assert not is_proper(g, missing)
