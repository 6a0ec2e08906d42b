"""
Walks along the step sequence ``eta`` of a minuscule datum, quantum walks
(moving steps are QBG edges) and their {0,1}-decorations.

A walk from ``w`` is a choice, at each step ``t``, to stay at ``w_{t-1}`` or
cross to ``s_{eta_t} w_{t-1}``.

>>> from invchev.rootsystem import build_root_system
>>> from invchev.weyl import minuscule_datum, from_word
>>> rs = build_root_system("A1")
>>> d = minuscule_datum(rs, (1,))
>>> [w.step_string for w in enumerate_quantum_walks(d, from_word(rs, [1]))]
['S', 'C']
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .qbg import classify_edge
from .rootsystem import Weight
from .weyl import MinusculeDatum, WeylElt, longest

__all__ = ["Walk", "DecoratedWalk", "STAY", "UP", "DOWN",
           "enumerate_walks", "enumerate_quantum_walks", "stationary_sets",
           "enumerate_decorations", "walk_to_json"]

STAY, UP, DOWN = "stay", "up", "down"


class NotQuantumError(ValueError):
    """A decoration was requested for a walk that is not quantum."""


@dataclass(frozen=True)
class Walk:
    datum: MinusculeDatum
    steps: tuple[bool, ...]          # True = cross
    vertices: tuple[WeylElt, ...]    # w_0 .. w_n

    @property
    def start(self) -> WeylElt:
        return self.vertices[0]

    @property
    def end(self) -> WeylElt:
        return self.vertices[-1]

    @property
    def w_l(self) -> WeylElt:
        return self.vertices[self.datum.l]

    @property
    def step_string(self) -> str:
        return "".join("C" if s else "S" for s in self.steps)

    def kind(self, t: int) -> str:
        """Kind of step ``t`` (1-based): stay, up or down in Bruhat order."""
        a, b = self.vertices[t - 1], self.vertices[t]
        if a == b:
            return STAY
        return UP if b.length > a.length else DOWN

    def pulled_root(self, t: int) -> Weight:
        """``w_{t-1}^{-1} eta_t`` in fundamental coordinates."""
        return self.vertices[t - 1].apply_inverse(self.datum.eta[t - 1].fund)

    def is_quantum(self) -> bool:
        for t in range(1, len(self.steps) + 1):
            if self.steps[t - 1]:
                rs = self.datum.rs
                b = rs.root(self.pulled_root(t))
                a = b if b.positive else rs.roots[rs.neg(b.index)]
                if classify_edge(self.vertices[t - 1], a) is None:
                    return False
        return True


def _walks(d: MinusculeDatum, w: WeylElt, quantum: bool) -> list[Walk]:
    rs = d.rs
    eta = d.eta
    n = len(eta)
    out = []

    def rec(t, v, steps, verts):
        if t == n:
            out.append(Walk(d, tuple(steps), tuple(verts)))
            return
        # stay first, so results come out in bit-vector order
        rec(t + 1, v, steps + [False], verts + [v])
        u = v.left_reflect(eta[t].fund)
        if quantum:
            b = rs.root(v.apply_inverse(eta[t].fund))
            a = b if b.positive else rs.roots[rs.neg(b.index)]
            if classify_edge(v, a) is None:
                return
        rec(t + 1, u, steps + [True], verts + [u])

    rec(0, w, [], [w])
    return out


def enumerate_walks(d: MinusculeDatum, w: WeylElt) -> list[Walk]:
    """All ``2^n`` walks from ``w``, in step bit-vector order."""
    return _walks(d, w, quantum=False)


def enumerate_quantum_walks(d: MinusculeDatum, w: WeylElt) -> list[Walk]:
    """Quantum walks from ``w``; crossing steps are pruned by `classify_edge`."""
    return _walks(d, w, quantum=True)


def stationary_sets(walk: Walk) -> tuple[frozenset[int], frozenset[int]]:
    """``(S-, S+)``: stationary steps where ``(rho, w_{t-1}^{-1} eta_t)`` is +1 (t<=l) or -1 (t>l)."""
    if not walk.is_quantum():
        raise NotQuantumError("stationary sets are defined for quantum walks only")
    rs = walk.datum.rs
    l = walk.datum.l
    sm, sp = set(), set()
    for t in range(1, len(walk.steps) + 1):
        if walk.steps[t - 1]:
            continue
        h = rs.root(walk.pulled_root(t)).height
        if t <= l and h == 1:
            sm.add(t)
        elif t > l and h == -1:
            sp.add(t)
    return frozenset(sm), frozenset(sp)


@dataclass(frozen=True)
class DecoratedWalk:
    """A quantum walk with decoration ``b`` and the derived statistics."""
    walk: Walk
    b: tuple[tuple[int, int], ...]       # sorted (t, b(t)) over S(w)
    sign: int
    deltas: tuple[Weight, ...]           # d_1 .. d_n
    partial_weights: tuple[Weight, ...]  # wt_0 .. wt_n
    partial_degrees: tuple[int, ...]     # deg_0^- .. deg_l^-, deg_l^+ .. deg_n^+
    wt: Weight
    deg: int

    @property
    def bundle(self) -> Weight:
        """``-w0 w_l^{-1} lam + wt``."""
        d = self.walk.datum
        w0 = longest(d.rs)
        base = w0.apply(self.walk.w_l.apply_inverse(d.lam))
        return tuple(-x + y for x, y in zip(base, self.wt))

    @property
    def translation(self) -> Weight:
        """``-w0 wt``."""
        return tuple(-x for x in longest(self.walk.datum.rs).apply(self.wt))

    def to_json(self) -> dict:
        rs = self.walk.datum.rs
        return {"b": {str(t): v for t, v in self.b}, "sign": self.sign,
                "wt": list(rs.root_lattice_coords(self.wt)), "deg": self.deg}


class DegreeIntegralityError(ArithmeticError):
    """A decorated walk produced a non-integral degree."""


def enumerate_decorations(walk: Walk) -> list[DecoratedWalk]:
    """All ``2^|S(w)|`` decorations, with sign, weights and degrees."""
    d = walk.datum
    rs = d.rs
    w0 = longest(rs)
    l, n = d.l, d.n
    sm, sp = stationary_sets(walk)
    S = sorted(sm | sp)
    zero = rs.zero()
    kinds = [walk.kind(t) for t in range(1, n + 1)]
    z = [w0.apply(walk.pulled_root(t)) for t in range(1, n + 1)]
    pivot = tuple(-x for x in w0.apply(walk.w_l.apply_inverse(d.lam)))
    base_sign = 1
    for t in range(1, n + 1):
        if (t <= l and kinds[t - 1] == DOWN) or (t > l and kinds[t - 1] == UP):
            base_sign = -base_sign

    out = []
    for bits in product((0, 1), repeat=len(S)):
        b = dict(zip(S, bits))
        sign = base_sign * (-1) ** sum(bits)
        wts = [zero]
        deltas = []
        for t in range(1, n + 1):
            if t in b:
                c = -b[t] if t <= l else b[t]
                dt = tuple(c * x for x in z[t - 1])
            elif kinds[t - 1] == DOWN:
                dt = z[t - 1]
            else:
                dt = zero
            deltas.append(dt)
            wts.append(tuple(x + y for x, y in zip(wts[-1], dt)))
        deg = Fraction(0)
        degs = [deg]
        for t in range(1, n + 1):
            dt = deltas[t - 1]
            deg += rs.pairing(dt, dt) / 2 + rs.pairing(dt, wts[t - 1])
            degs.append(deg)
        # pivot term between the two halves
        pv = rs.pairing(pivot, wts[l])
        degs = degs[:l + 1] + [degs[l] + pv] + [x + pv for x in degs[l + 1:]]
        deg = degs[-1]
        if deg.denominator != 1 or any(x.denominator != 1 for x in degs):
            raise DegreeIntegralityError(f"non-integral degree {deg} on walk {walk.step_string}")
        out.append(DecoratedWalk(walk, tuple(sorted(b.items())), sign, tuple(deltas),
                                 tuple(wts), tuple(int(x) for x in degs),
                                 wts[-1], int(deg)))
    return out


def walk_to_json(walk: Walk, decorations=None) -> dict:
    out = {
        "start_word": list(walk.start.word),
        "eta": [list(r.coords) for r in walk.datum.eta],
        "steps": walk.step_string,
        "vertices": [list(v.word) for v in walk.vertices[1:]],
    }
    if decorations is not None:
        out["decorations"] = [dw.to_json() for dw in decorations]
    return out

