"""
Inverse Chevalley expansions ``e^lam * [O(w)]`` for minuscule ``lam``.

Two independent evaluations are provided: `inverse_chevalley_algebraic`
builds the Heisenberg-valued row from quantum walks with the ``X~`` factors,
and `inverse_chevalley` sums decorated walks directly into Schubert classes.
Everything else (arbitrary weights, affine start classes, Demazure
operators, truncation, symmetrization) is layered on top.

>>> from invchev.rootsystem import build_root_system
>>> from invchev.weyl import from_word
>>> rs = build_root_system("A1")
>>> print(row(rs, (1,), from_word(rs, [1])).to_text())
(q) [O(e t(1))(1)]
(1) [O(1)(-1)]
(-q) [O(1 t(1))(1)]
"""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache

from .heisenberg import (HeisElt, KClass, LaurentQ, ModuleClass, h_mul, kclass_act,
                         tilde_x, to_basis_form, to_module_form)
from .rootsystem import RootSystem, RootSystemError, Weight
from .walks import DOWN, UP, enumerate_decorations, enumerate_quantum_walks, stationary_sets
from .weyl import (UnsupportedWeightError, WeylElt, identity, longest,
                   minuscule_datum, simple_reflection)

__all__ = [
    "inverse_chevalley_algebraic", "inverse_chevalley", "row",
    "scalar_multiply_general", "minuscule_decomposition", "demazure",
    "truncate_classical", "classical_row", "spherical_symmetrization",
]


def _neg(v: Weight) -> Weight:
    return tuple(-x for x in v)


def _walk_factors(walk, tilde: bool):
    """Per-step factors of the algebraic row as HeisElts, split at ``l``."""
    d = walk.datum
    rs = d.rs
    w0 = longest(rs)
    one = HeisElt.one(rs)
    sm, sp = stationary_sets(walk)
    if tilde:
        def mono(beta):
            return tilde_x(rs, w0.apply(beta))
    else:
        def mono(beta):
            return HeisElt.x(rs, beta)
    minus, plus = [], []
    for t in range(1, d.n + 1):
        beta = walk.pulled_root(t)
        kind = walk.kind(t)
        if t <= d.l:
            if t in sm:
                minus.append(one - mono(_neg(beta)))
            elif kind == DOWN:
                minus.append(-mono(beta))
        else:
            if t in sp:
                plus.append(one - mono(beta))
            elif kind == DOWN:
                plus.append(mono(beta))
            elif kind == UP:
                plus.append(-one)
    return minus, plus


def _prod(rs, factors) -> HeisElt:
    out = HeisElt.one(rs)
    for f in factors:
        out = h_mul(out, f)
    return out


def _check_lam(rs: RootSystem, lam) -> Weight:
    lam = rs.check(lam)
    if rs.cartan.family == "E" and rs.rank == 8:
        raise UnsupportedWeightError("E8 has no nonzero minuscule weights")
    if lam == rs.zero() or not rs.is_minuscule(lam):
        raise UnsupportedWeightError(f"{lam} is not a nonzero minuscule weight of {rs}")
    return lam


@lru_cache(maxsize=4096)
def _algebraic(rs, lam, w, x_word, y_word) -> ModuleClass:
    d = minuscule_datum(rs, lam, x_word, y_word)
    w0 = longest(rs)
    rows = {}
    for walk in enumerate_quantum_walks(d, w):
        minus, plus = _walk_factors(walk, tilde=True)
        pivot = _neg(w0.apply(walk.w_l.apply_inverse(lam)))
        h = h_mul(h_mul(_prod(rs, plus), HeisElt.x(rs, pivot)), _prod(rs, minus))
        rows[walk.end] = rows[walk.end] + h if walk.end in rows else h
    return ModuleClass(rs, rows)


def inverse_chevalley_algebraic(rs: RootSystem, lam, w: WeylElt,
                                x_word=None, y_word=None) -> ModuleClass:
    """``e^lam [O(w)]`` as ``sum_w' [O(w')] * h_w'`` from quantum walks."""
    lam = _check_lam(rs, lam)
    return _algebraic(rs, lam, w,
                      None if x_word is None else tuple(x_word),
                      None if y_word is None else tuple(y_word))


@lru_cache(maxsize=8192)
def _row(rs, lam, w, x_word, y_word) -> KClass:
    d = minuscule_datum(rs, lam, x_word, y_word)
    terms = {}
    for walk in enumerate_quantum_walks(d, w):
        for dw in enumerate_decorations(walk):
            key = (walk.end, dw.translation, dw.bundle)
            c = LaurentQ.mono(dw.deg, dw.sign)
            terms[key] = terms[key] + c if key in terms else c
    return KClass(rs, terms)


def row(rs: RootSystem, lam, w: WeylElt, x_word=None, y_word=None) -> KClass:
    """``e^lam [O(w)]`` in basis form, summed over decorated quantum walks."""
    lam = _check_lam(rs, lam)
    return _row(rs, lam, w,
                None if x_word is None else tuple(x_word),
                None if y_word is None else tuple(y_word))


def inverse_chevalley(rs: RootSystem, lam, c: KClass, algebraic: bool = False) -> KClass:
    """
    ``e^lam * c`` for a finite class ``c``. Each basis class
    ``[O(w t_xi)(mu)] = [O(w)] t_{-w0 xi} X^mu`` is handled by applying the
    ``w``-row and acting back on the right.
    """
    lam = _check_lam(rs, lam)
    w0 = longest(rs)
    out = KClass(rs)
    for (w, xi, mu), coef in c.terms.items():
        base = (to_basis_form(inverse_chevalley_algebraic(rs, lam, w)) if algebraic
                else row(rs, lam, w))
        h = HeisElt.mono(rs, mu=_neg(w0.apply(xi)), nu=mu)
        out = out + kclass_act(base, h).scale(coef)
    return out


# -- arbitrary weights ----------------------------------------------------------

MAX_PARTS = 10_000


def minuscule_decomposition(rs: RootSystem, lam) -> list[Weight]:
    """
    Write ``lam`` as a sum of nonzero minuscule weights: repeatedly subtract the
    minuscule weight with the largest pairing against the remainder (ties go to
    the lexicographically smallest).
    """
    lam = rs.check(lam)
    ms = rs.minuscule_weights()
    if not ms:
        raise UnsupportedWeightError(f"{rs} has no nonzero minuscule weights")
    parts = []
    r = lam
    while r != rs.zero():
        if len(parts) >= MAX_PARTS:
            raise RuntimeError(f"minuscule decomposition of {lam} did not terminate")
        mu = max(ms, key=lambda m: (rs.pairing(m, r), tuple(-x for x in m)))
        parts.append(mu)
        r = tuple(a - b for a, b in zip(r, mu))
    return parts


def scalar_multiply_general(rs: RootSystem, lam, c: KClass, order=None) -> KClass:
    """``e^lam * c`` for any ``lam`` in P, as a composition of minuscule steps."""
    lam = rs.check(lam)
    if lam == rs.zero():
        return c
    parts = minuscule_decomposition(rs, lam) if order is None else list(order)
    if tuple(map(sum, zip(*parts))) != lam:
        raise ValueError("the given parts do not sum to lambda")
    for mu in parts:
        c = inverse_chevalley(rs, mu, c)
    return c


# -- Demazure operators ---------------------------------------------------------

def demazure(i: int, c):
    """``D_i`` on a class in either form; acts on the finite Weyl index only."""
    rs = c.rs
    if not 1 <= i <= rs.rank:
        raise RootSystemError(f"simple index {i} out of range for {rs}")
    s = simple_reflection(rs, i)

    def move(w):
        return s * w if w.has_left_descent(i) else w

    if isinstance(c, ModuleClass):
        rows = {}
        for w, h in c.rows.items():
            v = move(w)
            rows[v] = rows[v] + h if v in rows else h
        return ModuleClass(rs, rows)
    terms = {}
    for (w, xi, lam), coef in c.terms.items():
        k = (move(w), xi, lam)
        terms[k] = terms[k] + coef if k in terms else coef
    return KClass(rs, terms)


# -- classical truncation -------------------------------------------------------

def truncate_classical(c) -> KClass:
    """Keep only the classes ``[O(w)(mu)]`` with trivial translation part."""
    c = to_basis_form(c)
    z = c.rs.zero()
    return KClass(c.rs, {k: v for k, v in c.terms.items() if k[1] == z})


def classical_row(rs: RootSystem, lam, w: WeylElt) -> ModuleClass:
    """The algebraic row recomputed with every ``X~`` set to zero."""
    lam = _check_lam(rs, lam)
    d = minuscule_datum(rs, lam)
    w0 = longest(rs)
    rows = defaultdict(lambda: HeisElt.zero(rs))
    for walk in enumerate_quantum_walks(d, w):
        kinds = [walk.kind(t) for t in range(1, d.n + 1)]
        if DOWN in kinds:
            continue
        sign = (-1) ** sum(1 for t in range(d.l + 1, d.n + 1) if kinds[t - 1] == UP)
        pivot = _neg(w0.apply(walk.w_l.apply_inverse(lam)))
        rows[walk.end] = rows[walk.end] + HeisElt.mono(rs, nu=pivot, coeff=sign)
    return ModuleClass(rs, dict(rows))


# -- symmetrization -------------------------------------------------------------

def spherical_symmetrization(rs: RootSystem, k: int) -> tuple[HeisElt, list[WeylElt]]:
    """
    ``sum_{lam in W varpi_k} e^lam [O(e)]`` in module form. Returns the
    coefficient of ``[O(e)]`` and the full support (which should be ``[e]``).
    """
    if k not in rs.minuscule_nodes():
        raise UnsupportedWeightError(f"varpi_{k} is not minuscule in {rs}")
    e = identity(rs)
    total = KClass(rs)
    for lam in rs.orbit(rs.fundamental(k)):
        total = total + row(rs, lam, e)
    m = to_module_form(total)
    return m.rows.get(e, HeisElt.zero(rs)), m.support()


def basis_class(rs: RootSystem, w: WeylElt | None = None, xi=None, lam=None, coeff=1) -> KClass:
    w = identity(rs) if w is None else w
    xi = rs.zero() if xi is None else rs.check(xi)
    lam = rs.zero() if lam is None else rs.check(lam)
    return KClass(rs, {(w, xi, lam): coeff})

