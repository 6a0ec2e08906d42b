"""
Independent oracle for the ``v -> 0`` limit of the row

    kappa(G-_{beta_l}) ... kappa(G-_{beta_1}) t^{-(rho,lam)} kappa(t_lam)
        kappa(G+_{gamma_1}) ... kappa(G+_{gamma_m})

computed path by path over all ``2^n`` walks, with no knowledge of the
quantum Bruhat graph. Every matrix entry is an exact ratio of binomials in
``t = v^2`` and ``X``; each binomial is split into a monomial times either a
unit ``(1 - t^a X^g)`` with ``a > 0`` or a ``t``-free factor ``(1 - X^g)``, so a
path's ``v``-order is read off exactly and its limit is the product of the
monomials and ``t``-free factors.

>>> from invchev.rootsystem import build_root_system
>>> from invchev.weyl import identity
>>> rs = build_root_system("A1")
>>> rows = rho0_row(rs, (1,), identity(rs)).rows
>>> sorted((w.word, h) for w, h in rows.items())
[((), HeisElt(t(1))), ((1,), HeisElt(-t(1)))]
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache

from .heisenberg import HeisElt, h_mul
from .rootsystem import RootSystem, Weight
from .walks import enumerate_quantum_walks, stationary_sets
from .weyl import WeylElt, element, minuscule_datum

__all__ = ["FactoredTerm", "NegativeOrderError", "kappa_g_entry", "rho0_row",
           "theorem_row", "verify_row", "RowReport", "RowResult"]


class NegativeOrderError(ArithmeticError):
    """A path had negative v-order; the limit would not exist termwise."""


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


@dataclass(frozen=True)
class FactoredTerm:
    """
    ``coeff * t^t_exp * X^x * prod(1 - X^g for g in free)
    * prod(1 - t^a X^g for num) / prod(1 - t^a X^g for den)``.

    The ``num``/``den`` factors have ``a > 0`` and are 1 at ``v = 0``; the
    ``v``-order is ``2 * t_exp``.
    """
    coeff: int
    t_exp: int
    x: Weight
    free: tuple[Weight, ...] = ()
    num: tuple[tuple[int, Weight], ...] = ()
    den: tuple[tuple[int, Weight], ...] = ()

    @property
    def v_order(self) -> int:
        return 2 * self.t_exp

    def __mul__(self, other: FactoredTerm) -> FactoredTerm:
        return FactoredTerm(self.coeff * other.coeff, self.t_exp + other.t_exp,
                            _add(self.x, other.x), self.free + other.free,
                            self.num + other.num, self.den + other.den)

    def lowest(self, rs: RootSystem) -> HeisElt:
        """Value at ``v = 0`` after dropping ``t^t_exp`` (units become 1)."""
        out = HeisElt.mono(rs, nu=self.x, coeff=self.coeff)
        one = HeisElt.one(rs)
        for g in self.free:
            out = h_mul(out, one - HeisElt.x(rs, g))
        return out


def _binomial(a1: int, g1: Weight, a2: int, g2: Weight) -> FactoredTerm:
    """``t^a1 X^g1 - t^a2 X^g2`` in factored form."""
    if a1 < a2:
        return FactoredTerm(1, a1, g1, num=((a2 - a1, _sub(g2, g1)),))
    if a1 > a2:
        return FactoredTerm(-1, a2, g2, num=((a1 - a2, _sub(g1, g2)),))
    return FactoredTerm(1, a1, g1, free=(_sub(g2, g1),))


def _ratio(n: FactoredTerm, d: FactoredTerm) -> FactoredTerm:
    # d is always a monomial times units, since (rho, beta) != 0 for roots
    assert not d.free, "t-free denominator"
    return FactoredTerm(n.coeff * d.coeff, n.t_exp - d.t_exp, _sub(n.x, d.x),
                        n.free, n.num + d.den, n.den + d.num)


@lru_cache(maxsize=None)
def _entry(rs: RootSystem, beta_index: int, sign: str, diagonal: bool) -> FactoredTerm:
    """Entry of kappa(G^sign_eta) at row w, where ``beta = w^{-1} eta``."""
    beta = rs.roots[beta_index]
    h = beta.height
    z = rs.zero()
    b = beta.fund
    nb = tuple(-x for x in b)
    s = 1 if sign == "+" else -1
    if diagonal:
        num = _binomial(s, z, -h, b)           # t^{+-1} - t^{-h} X^b
        den = _binomial(0, z, -h, b)           # 1 - t^{-h} X^b
    else:
        num = _binomial(s, z, 0, z)            # t^{+-1} - 1
        den = _binomial(0, z, h, nb)           # 1 - t^{h} X^{-b}
    return _ratio(num, den)


def kappa_g_entry(rs: RootSystem, eta, sign: str, w: WeylElt, u: WeylElt) -> FactoredTerm | None:
    """
    The ``(w, u)`` entry of ``kappa(G^sign_eta)`` for a positive root ``eta``;
    None when ``u`` is neither ``w`` nor ``s_eta w``.
    """
    eta = rs.root(eta if not hasattr(eta, "fund") else eta.fund)
    if not eta.positive:
        raise ValueError("eta must be a positive root")
    if sign not in "+-" or len(sign) != 1:
        raise ValueError(f"sign must be '+' or '-', got {sign!r}")
    beta = rs.root_index[w.apply_inverse(eta.fund)]
    if u == w:
        return _entry(rs, beta, sign, True)
    if u == w.left_reflect(eta):
        return _entry(rs, beta, sign, False)
    return None


@lru_cache(maxsize=None)
def _reflection_tables(rs: RootSystem):
    """``tab[e][r]`` is the index of ``s_{root e}(root r)``."""
    tab = []
    for e in rs.roots:
        tab.append(tuple(rs.root_index[rs.reflect(e.fund, r.fund)] for r in rs.roots))
    return tab


@dataclass
class OracleRow:
    rs: RootSystem
    lam: Weight
    w: WeylElt
    rows: dict[WeylElt, HeisElt]
    survivors: list[str] = field(default_factory=list)   # step strings of order-0 paths
    paths: int = 0
    min_order: int = 0


def rho0_row(rs: RootSystem, lam, w: WeylElt) -> OracleRow:
    """
    Limit row indexed by ``w``, by exact per-path evaluation of all ``2^n``
    walks. Raises `NegativeOrderError` if any path has negative order.
    """
    lam = rs.check(lam)
    d = minuscule_datum(rs, lam)
    tab = _reflection_tables(rs)
    eta = [r.index for r in d.eta]
    l, n = d.l, d.n
    winv = w.inverse
    perm0 = tuple(rs.root_index[winv.apply(r.fund)] for r in rs.roots)
    fund_of = [r.fund for r in rs.roots]
    stats = {"paths": 0, "min": None}
    acc = defaultdict(lambda: defaultdict(int))
    survivors = []

    def leaf(key, steps, left, mid_mu, mid_t, right):
        total = left.t_exp + mid_t + right.t_exp
        stats["paths"] += 1
        if stats["min"] is None or total < stats["min"]:
            stats["min"] = total
        if total < 0:
            raise NegativeOrderError(
                f"path {''.join(steps)} from {w} has v-order {2 * total}")
        if total > 0:
            return
        survivors.append("".join(steps))
        val = h_mul(h_mul(left.lowest(rs), HeisElt.t(rs, mid_mu)), right.lowest(rs))
        for k, c in val.terms.items():
            acc[key][k] += c

    one = FactoredTerm(1, 0, rs.zero())

    def rec(t, perm, key, mu, steps, left, mid, right):
        if t == l and mid is None:
            diff = _sub(mu, lam)
            mid = (mu, rs.height(diff))
        if t == n:
            leaf(key, steps, left, mid[0], mid[1], right)
            return
        e = eta[t]
        beta = perm[e]
        sign = "-" if t < l else "+"
        for cross in (False, True):
            f = _entry(rs, beta, sign, not cross)
            if cross:
                refl = tab[e]
                nperm = tuple(perm[refl[r]] for r in range(len(perm)))
                nkey = rs.reflect(fund_of[e], key)
                nmu = mu
                if t < l:
                    p = rs.pair_root(rs.roots[e], lam)
                    nmu = tuple(x - p * y for x, y in zip(mu, fund_of[beta]))
            else:
                nperm, nkey, nmu = perm, key, mu
            if t < l:
                rec(t + 1, nperm, nkey, nmu, steps + ["C" if cross else "S"], left * f, mid, right)
            else:
                rec(t + 1, nperm, nkey, nmu, steps + ["C" if cross else "S"], left, mid, right * f)

    rec(0, perm0, w.key, winv.apply(lam), [], one, None, one)
    rows = {element(rs, k): HeisElt(rs, v) for k, v in acc.items()}
    rows = {k: v for k, v in rows.items() if v}
    return OracleRow(rs, lam, w, rows, survivors, stats["paths"], stats["min"] or 0)


def theorem_row(rs: RootSystem, lam, w: WeylElt) -> dict[WeylElt, HeisElt]:
    """Right-hand side of the limit theorem: ``sum g- t_{w_l^{-1} lam} g+ e_{w_n}``."""
    from .chevalley import _prod, _walk_factors
    lam = rs.check(lam)
    d = minuscule_datum(rs, lam)
    rows = {}
    for walk in enumerate_quantum_walks(d, w):
        stationary_sets(walk)
        minus, plus = _walk_factors(walk, tilde=False)
        mu = walk.w_l.apply_inverse(lam)
        h = h_mul(h_mul(_prod(rs, minus), HeisElt.t(rs, mu)), _prod(rs, plus))
        rows[walk.end] = rows[walk.end] + h if walk.end in rows else h
    return {k: v for k, v in rows.items() if v}


@dataclass
class RowResult:
    u: WeylElt
    match: bool
    lhs: HeisElt
    rhs: HeisElt

    def to_json(self) -> dict:
        return {"u": list(self.u.word), "match": self.match,
                "lhs": self.lhs.to_json(), "rhs": self.rhs.to_json()}


@dataclass
class RowReport:
    rs: RootSystem
    lam: Weight
    w: WeylElt
    rows: list[RowResult]
    oracle: OracleRow

    @property
    def ok(self) -> bool:
        return all(r.match for r in self.rows)

    def to_json(self) -> dict:
        return {"type": str(self.rs), "lambda": list(self.lam), "w": list(self.w.word),
                "rows": [r.to_json() for r in self.rows]}


def verify_row(rs: RootSystem, lam, w: WeylElt) -> RowReport:
    """Compare the oracle limit row with the theorem's walk sum, entry by entry."""
    lam = rs.check(lam)
    orc = rho0_row(rs, lam, w)
    rhs = theorem_row(rs, lam, w)
    zero = HeisElt.zero(rs)
    keys = sorted(set(orc.rows) | set(rhs), key=lambda u: (u.length, u.word))
    results = [RowResult(u, orc.rows.get(u, zero) == rhs.get(u, zero),
                         orc.rows.get(u, zero), rhs.get(u, zero)) for u in keys]
    return RowReport(rs, lam, w, results, orc)
