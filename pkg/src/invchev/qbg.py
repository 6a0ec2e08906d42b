"""
The quantum Bruhat graph on W.

An edge ``x -> x s_alpha`` (``alpha`` positive) is a Bruhat edge when the
length goes up by one and a quantum edge when it drops by
``2 ht(alpha) - 1``.

>>> from invchev.rootsystem import build_root_system
>>> rs = build_root_system("A1")
>>> [e.kind for e in edges(rs)]
['Q', 'B']
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache

from .rootsystem import Root, RootSystem, RootSystemError
from .weyl import WeylElt, elements, format_word, weyl_order

__all__ = ["BRUHAT", "QUANTUM", "QBGEdge", "QBG", "classify_edge", "edges",
           "build_qbg", "export_dot", "edges_to_json"]

BRUHAT = "B"
QUANTUM = "Q"

MAX_VERTICES = 60_000


@dataclass(frozen=True)
class QBGEdge:
    source: WeylElt
    target: WeylElt
    label: Root
    kind: str

    def to_json(self) -> dict:
        return {"source_word": list(self.source.word),
                "target_word": list(self.target.word),
                "root_coords": list(self.label.coords),
                "kind": "Bruhat" if self.kind == BRUHAT else "Quantum"}


def classify_edge(x: WeylElt, alpha) -> str | None:
    """Kind of the candidate edge ``x -> x s_alpha``, or None."""
    rs = x.rs
    if not isinstance(alpha, Root):
        alpha = rs.root(alpha)
    if not alpha.positive:
        raise RootSystemError(f"edge label {alpha.coords} is not a positive root")
    y = x.right_reflect(alpha)
    d = y.length - x.length
    if d == 1:
        return BRUHAT
    if d == 1 - 2 * alpha.height:
        return QUANTUM
    return None


@dataclass
class QBG:
    """All edges of QBG(W), also indexed by label for walk queries."""
    rs: RootSystem
    edges: list[QBGEdge]
    by_label: dict[int, list[QBGEdge]]

    def out_edges(self, x: WeylElt) -> list[QBGEdge]:
        return [e for e in self.edges if e.source == x]


def _edges(rs: RootSystem) -> list[QBGEdge]:
    if weyl_order(rs) > MAX_VERTICES:
        raise RootSystemError(f"{rs}: |W| = {weyl_order(rs)} is too large for full enumeration")
    ws = elements(rs)
    out = []
    for x in sorted(ws, key=lambda w: w.key):
        for a in rs.positive:
            k = classify_edge(x, a)
            if k is not None:
                out.append(QBGEdge(x, x.right_reflect(a), a, k))
    return out


@lru_cache(maxsize=None)
def build_qbg(rs: RootSystem) -> QBG:
    es = _edges(rs)
    by_label = defaultdict(list)
    for e in es:
        by_label[e.label.index].append(e)
    return QBG(rs, es, dict(by_label))


def edges(rs: RootSystem) -> list[QBGEdge]:
    """All edges, ordered by (source key, root index)."""
    return list(build_qbg(rs).edges)


def export_dot(es, name: str = "QBG", label=None) -> str:
    """DOT digraph; Bruhat edges solid, quantum edges dashed.

    ``label`` optionally restricts to edges with that root (coords tuple).
    """
    es = list(es)
    if label is not None:
        es = [e for e in es if e.label.coords == tuple(label)]
    nodes = set()
    for e in es:
        nodes.add(e.source)
        nodes.add(e.target)
    lines = [f"digraph {name} {{"]
    for v in sorted(nodes, key=lambda w: (w.length, w.word)):
        lines.append(f'  "{format_word(v.word)}";')
    for e in es:
        style = "solid" if e.kind == BRUHAT else "dashed"
        lab = ",".join(map(str, e.label.coords))
        lines.append(f'  "{format_word(e.source.word)}" -> "{format_word(e.target.word)}"'
                     f' [label="{lab}", style={style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def edges_to_json(es) -> list[dict]:
    return [e.to_json() for e in es]
