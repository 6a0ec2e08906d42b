import json
from pathlib import Path

import pytest

from invchev.qbg import BRUHAT, QUANTUM, build_qbg, classify_edge, edges, edges_to_json, export_dot
from invchev.rootsystem import RootSystemError, build_root_system
from invchev.weyl import elements, from_word, identity, simple_reflection

GOLDEN = Path(__file__).parent / "golden"


def test_classify_a1(a1):
    a = a1.simple[0]
    assert classify_edge(identity(a1), a) == BRUHAT
    assert classify_edge(simple_reflection(a1, 1), a) == QUANTUM


def test_classify_theta(a2):
    assert classify_edge(simple_reflection(a2, 1), a2.theta) == BRUHAT
    with pytest.raises(RootSystemError):
        classify_edge(identity(a2), tuple(-x for x in a2.theta.fund))


def test_a1_edges(a1):
    es = edges(a1)
    assert sorted(e.kind for e in es) == [BRUHAT, QUANTUM]


def _scan(rs):
    # lengths counted as negated positive roots, independently of classify_edge
    def length(w):
        return sum(1 for r in rs.positive if rs.root(w.apply(r.fund)).height < 0)
    n = 0
    for x in elements(rs):
        lx = length(x)
        for a in rs.positive:
            ly = length(x.right_reflect(a))
            if ly == lx + 1 or ly == lx + 1 - 2 * a.height:
                n += 1
    return n


def test_a2_count_matches_scan(a2):
    assert len(edges(a2)) == _scan(a2)


@pytest.mark.parametrize("name", ["A3", "D4"])
def test_edge_count_golden(name):
    es = edges(build_root_system(name))
    nb = sum(1 for e in es if e.kind == BRUHAT)
    line = f"{name}: {len(es)} edges ({nb} Bruhat, {len(es) - nb} quantum)\n"
    assert line == (GOLDEN / f"qbg_{name}.txt").read_text()


def test_every_edge_satisfies_one_equation():
    rs = build_root_system("A3")
    for e in edges(rs):
        d = e.target.length - e.source.length
        assert (d == 1) != (d == 1 - 2 * e.label.height)
        assert e.target == e.source.right_reflect(e.label)


def test_label_index():
    rs = build_root_system("A2")
    g = build_qbg(rs)
    assert sum(len(v) for v in g.by_label.values()) == len(g.edges)
    for lab, es in g.by_label.items():
        assert all(e.label.index == lab for e in es)


def test_dot_a1(a1):
    dot = export_dot(edges(a1), name="A1")
    assert dot == (GOLDEN / "qbg_A1.dot").read_text()
    assert "style=dashed" in dot and "style=solid" in dot


def test_dot_a2_nodes(a2):
    dot = export_dot(edges(a2), name="A2")
    assert sum(1 for line in dot.splitlines() if line.strip().endswith('";')) == 6


def test_dot_label_filter(a2):
    dot = export_dot(edges(a2), label=(5, 5))
    assert "->" not in dot


def test_json_golden(a2):
    assert edges_to_json(edges(a2)) == json.loads((GOLDEN / "qbg_A2.json").read_text())
