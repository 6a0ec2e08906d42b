"""
Exact arithmetic in the q-Heisenberg algebra and its right action on
K-classes.

Monomials are kept in the normal form ``t_mu X^nu``; moving ``X`` past ``t``
costs ``X^nu t_mu = q^{(mu,nu)} t_mu X^nu``. Coefficients live in
``Z[q^{1/e}, q^{-1/e}]``, with exponents held as ints or Fractions.

>>> from invchev.rootsystem import build_root_system
>>> rs = build_root_system("A1")
>>> a1 = (2,)
>>> h_mul(HeisElt.x(rs, a1), HeisElt.t(rs, a1))
HeisElt(q^2 t(2) X(2))

K-classes come in two shapes. `KClass` is the basis form
``sum c * [O(w t_xi)(lam)]``; `ModuleClass` is the free-module form
``sum_w [O(w)] * h_w``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction

from .rootsystem import RootSystem, RootSystemError, Weight
from .weyl import AffineWeylElt, WeylElt, element, longest

__all__ = [
    "LaurentQ", "HeisElt", "KClass", "ModuleClass", "IntegralityError",
    "h_mul", "tilde_x", "kclass_act", "to_basis_form", "to_module_form",
]


class IntegralityError(ArithmeticError):
    """A public result carried a fractional power of q."""


def _norm_exp(a):
    a = Fraction(a)
    return a.numerator if a.denominator == 1 else a


def _fmt_exp(a) -> str:
    return str(a)


class LaurentQ:
    """A Laurent polynomial in ``q^{1/e}``; immutable, no zero coefficients."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for k, v in dict(coeffs).items():
                if v:
                    k = _norm_exp(k)
                    c[k] = c.get(k, 0) + v
        self._c = {k: v for k, v in c.items() if v}

    @classmethod
    def mono(cls, exp=0, coeff=1) -> LaurentQ:
        return cls({exp: coeff})

    @property
    def coeffs(self) -> dict:
        return dict(self._c)

    def items(self):
        return sorted(self._c.items())

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentQ.mono(0, other)
        return isinstance(other, LaurentQ) and self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __add__(self, other: LaurentQ) -> LaurentQ:
        c = dict(self._c)
        for k, v in other._c.items():
            c[k] = c.get(k, 0) + v
        return LaurentQ(c)

    def __neg__(self) -> LaurentQ:
        return LaurentQ({k: -v for k, v in self._c.items()})

    def __sub__(self, other: LaurentQ) -> LaurentQ:
        return self + (-other)

    def __mul__(self, other) -> LaurentQ:
        if isinstance(other, int):
            return LaurentQ({k: v * other for k, v in self._c.items()})
        c = defaultdict(int)
        for a, x in self._c.items():
            for b, y in other._c.items():
                c[_norm_exp(a + b)] += x * y
        return LaurentQ(c)

    __rmul__ = __mul__

    def shift(self, a) -> LaurentQ:
        """Multiply by ``q^a``."""
        if not a:
            return self
        return LaurentQ({_norm_exp(k + a): v for k, v in self._c.items()})

    def is_integral(self) -> bool:
        return all(isinstance(k, int) for k in self._c)

    def to_json(self) -> dict:
        return {_fmt_exp(k): v for k, v in self.items()}

    @classmethod
    def from_json(cls, d: dict) -> LaurentQ:
        return cls({Fraction(k): v for k, v in d.items()})

    def __repr__(self):
        if not self._c:
            return "0"
        parts = []
        for k, v in self.items():
            if k == 0:
                parts.append(str(v))
            else:
                base = "q" if k == 1 else f"q^{k}" if isinstance(k, int) else f"q^({k})"
                parts.append(base if v == 1 else f"-{base}" if v == -1 else f"{v}*{base}")
        return " + ".join(parts).replace("+ -", "- ")


# -- Heisenberg elements --------------------------------------------------------

class HeisElt:
    """
    A finite sum of ``c * q^a * t_mu X^nu``; ``terms`` maps ``(mu, nu, a)`` to
    a nonzero integer ``c``. Weights are fundamental coordinates.
    """

    __slots__ = ("rs", "terms")

    def __init__(self, rs: RootSystem, terms=None):
        self.rs = rs
        t = {}
        if terms:
            for (mu, nu, a), c in dict(terms).items():
                if c:
                    k = (tuple(mu), tuple(nu), _norm_exp(a))
                    t[k] = t.get(k, 0) + c
        self.terms = {k: v for k, v in t.items() if v}

    # constructors
    @classmethod
    def one(cls, rs) -> HeisElt:
        return cls(rs, {(rs.zero(), rs.zero(), 0): 1})

    @classmethod
    def zero(cls, rs) -> HeisElt:
        return cls(rs)

    @classmethod
    def mono(cls, rs, mu=None, nu=None, q=0, coeff=1) -> HeisElt:
        mu = rs.zero() if mu is None else rs.check(mu)
        nu = rs.zero() if nu is None else rs.check(nu)
        return cls(rs, {(mu, nu, q): coeff})

    @classmethod
    def x(cls, rs, nu) -> HeisElt:
        return cls.mono(rs, nu=nu)

    @classmethod
    def t(cls, rs, mu) -> HeisElt:
        return cls.mono(rs, mu=mu)

    # arithmetic
    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, HeisElt) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: HeisElt) -> HeisElt:
        t = dict(self.terms)
        for k, v in other.terms.items():
            t[k] = t.get(k, 0) + v
        return HeisElt(self.rs, t)

    def __neg__(self) -> HeisElt:
        return HeisElt(self.rs, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: HeisElt) -> HeisElt:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return HeisElt(self.rs, {k: v * other for k, v in self.terms.items()})
        return h_mul(self, other)

    def __rmul__(self, other: int) -> HeisElt:
        return self * other

    def is_integral(self) -> bool:
        return all(isinstance(a, int) for (_, _, a) in self.terms)

    def grouped(self) -> dict[tuple[Weight, Weight], LaurentQ]:
        """Coefficients collected per monomial ``t_mu X^nu``."""
        g = defaultdict(dict)
        for (mu, nu, a), c in self.terms.items():
            g[(mu, nu)][a] = c
        return {k: LaurentQ(v) for k, v in sorted(g.items())}

    def to_json(self) -> list[dict]:
        return [{"t": list(mu), "x": list(nu), "coeff": c.to_json()}
                for (mu, nu), c in self.grouped().items()]

    @classmethod
    def from_json(cls, rs, data) -> HeisElt:
        terms = {}
        for item in data:
            for a, c in item["coeff"].items():
                terms[(tuple(item["t"]), tuple(item["x"]), Fraction(a))] = c
        return cls(rs, terms)

    def __repr__(self):
        if not self.terms:
            return "HeisElt(0)"
        parts = []
        for (mu, nu), c in self.grouped().items():
            mono = []
            if any(mu):
                mono.append("t(" + ",".join(map(str, mu)) + ")")
            if any(nu):
                mono.append("X(" + ",".join(map(str, nu)) + ")")
            cs = repr(c)
            if mono:
                if cs == "1":
                    cs = ""
                elif cs == "-1":
                    cs = "-"
                elif " " in cs:
                    cs = f"({cs}) "
                else:
                    cs += " "
            parts.append(cs + " ".join(mono))
        return "HeisElt(" + " + ".join(parts) + ")"


def _pair_int(rs: RootSystem, a: Weight, b: Weight):
    g = rs._gram
    s = 0
    for i, x in enumerate(a):
        if x:
            row = g[i]
            for j, y in enumerate(b):
                if y:
                    s += x * row[j] * y
    if s % rs.e == 0:
        return s // rs.e
    return Fraction(s, rs.e)


def h_mul(a: HeisElt, b: HeisElt) -> HeisElt:
    """Normal-form product: ``(t_m1 X^n1)(t_m2 X^n2) = q^{(m2,n1)} t_{m1+m2} X^{n1+n2}``."""
    if a.rs is not b.rs:
        raise RootSystemError("Heisenberg elements from different root systems")
    rs = a.rs
    out = defaultdict(int)
    for (m1, n1, e1), c1 in a.terms.items():
        for (m2, n2, e2), c2 in b.terms.items():
            q = e1 + e2 + _pair_int(rs, m2, n1)
            mu = tuple(x + y for x, y in zip(m1, m2))
            nu = tuple(x + y for x, y in zip(n1, n2))
            out[(mu, nu, q)] += c1 * c2
    return HeisElt(rs, out)


def tilde_x(rs: RootSystem, beta) -> HeisElt:
    """``X~^beta = q t_beta X^beta`` for a root ``beta``."""
    beta = rs.root(beta if not hasattr(beta, "fund") else beta.fund).fund
    return HeisElt.mono(rs, mu=beta, nu=beta, q=1)


# -- K-classes ------------------------------------------------------------------

@dataclass
class KClass:
    """
    Basis form: ``terms[(w, xi, lam)]`` is the Laurent coefficient of
    ``[O(w t_xi)(lam)]`` (``xi`` and ``lam`` in fundamental coordinates).
    """
    rs: RootSystem
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        t = {}
        for (w, xi, lam), c in self.terms.items():
            if not isinstance(c, LaurentQ):
                c = LaurentQ.mono(0, c)
            k = (w, tuple(xi), tuple(lam))
            t[k] = t[k] + c if k in t else c
        self.terms = {k: v for k, v in t.items() if v}

    @classmethod
    def basis(cls, w: WeylElt | AffineWeylElt, lam=None, coeff=1) -> KClass:
        """The single class ``coeff * [O(x)(lam)]``."""
        if isinstance(w, AffineWeylElt):
            w, xi = w.w, w.xi
        else:
            xi = w.rs.zero()
        lam = w.rs.zero() if lam is None else w.rs.check(lam)
        return cls(w.rs, {(w, xi, lam): coeff})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, KClass) and self.terms == other.terms

    def __add__(self, other: KClass) -> KClass:
        t = dict(self.terms)
        for k, v in other.terms.items():
            t[k] = t[k] + v if k in t else v
        return KClass(self.rs, t)

    def __neg__(self) -> KClass:
        return KClass(self.rs, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: KClass) -> KClass:
        return self + (-other)

    def scale(self, c: LaurentQ) -> KClass:
        return KClass(self.rs, {k: v * c for k, v in self.terms.items()})

    def is_integral(self) -> bool:
        return all(c.is_integral() for c in self.terms.values())

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (kv[0][0].word, kv[0][1], kv[0][2]))

    def to_json(self) -> list[dict]:
        rs = self.rs
        return [{"w": list(w.word), "t": list(rs.root_lattice_coords(xi)),
                 "x": list(lam), "coeff": c.to_json()}
                for (w, xi, lam), c in self.sorted_terms()]

    @classmethod
    def from_json(cls, rs, data) -> KClass:
        from .weyl import from_word
        terms = {}
        for item in data:
            k = (from_word(rs, item["w"]), rs.from_root_coords(item["t"]), tuple(item["x"]))
            terms[k] = LaurentQ.from_json(item["coeff"])
        return cls(rs, terms)

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        lines = []
        for (w, xi, lam), c in self.sorted_terms():
            x = " ".join(map(str, w.word)) or "e"
            if any(xi):
                x += " t(" + ",".join(map(str, self.rs.root_lattice_coords(xi))) + ")"
            lines.append(f"({c!r}) [O({x})({','.join(map(str, lam))})]")
        return "\n".join(lines)


@dataclass
class ModuleClass:
    """Module form: ``rows[w]`` is the Heisenberg coefficient of ``[O(w)]``."""
    rs: RootSystem
    rows: dict = field(default_factory=dict)

    def __post_init__(self):
        self.rows = {w: h for w, h in self.rows.items() if h}

    def __eq__(self, other):
        return isinstance(other, ModuleClass) and self.rows == other.rows

    def __add__(self, other: ModuleClass) -> ModuleClass:
        r = dict(self.rows)
        for w, h in other.rows.items():
            r[w] = r[w] + h if w in r else h
        return ModuleClass(self.rs, r)

    def support(self) -> list[WeylElt]:
        return sorted(self.rows, key=lambda w: (w.length, w.word))

    def to_json(self) -> list[dict]:
        return [{"w": list(w.word), "coeff": self.rows[w].to_json()} for w in self.support()]


def _act_basis(c: KClass, h: HeisElt) -> KClass:
    rs = c.rs
    w0 = longest(rs)
    out = {}
    for (w, xi, lam), coef in c.terms.items():
        for (mu, nu, a), k in h.terms.items():
            if not rs.in_root_lattice(mu):
                raise RootSystemError(f"translation {mu} is not in the root lattice")
            # [O(w t_xi)(lam)] . t_mu X^nu = q^{(mu,lam)} [O(w t_{xi - w0 mu})(lam + nu)]
            q = a + _pair_int(rs, mu, lam)
            w0mu = w0.apply(mu)
            key = (w, tuple(x - y for x, y in zip(xi, w0mu)),
                   tuple(x + y for x, y in zip(lam, nu)))
            add = coef.shift(q) * k
            out[key] = out[key] + add if key in out else add
    return KClass(rs, out)


def kclass_act(c, h: HeisElt):
    """Right action of ``h`` on a class in either form."""
    if c.rs is not h.rs:
        raise RootSystemError("class and Heisenberg element from different root systems")
    if isinstance(c, ModuleClass):
        return ModuleClass(c.rs, {w: h_mul(g, h) for w, g in c.rows.items()})
    return _act_basis(c, h)


def to_basis_form(c) -> KClass:
    """Expand ``sum_w [O(w)] h_w`` into Schubert classes."""
    if isinstance(c, KClass):
        return c
    out = KClass(c.rs)
    for w, h in c.rows.items():
        out = out + _act_basis(KClass.basis(w), h)
    return out


def to_module_form(c) -> ModuleClass:
    """Inverse of `to_basis_form`: ``[O(w t_xi)(lam)] = [O(w)] t_{-w0 xi} X^lam``."""
    if isinstance(c, ModuleClass):
        return c
    rs = c.rs
    w0 = longest(rs)
    rows = defaultdict(dict)
    for (w, xi, lam), coef in c.terms.items():
        if not rs.in_root_lattice(xi):
            raise RootSystemError(f"translation {xi} is not in the root lattice")
        mu = tuple(-x for x in w0.apply(xi))
        for a, k in coef.coeffs.items():
            key = (mu, lam, a)
            rows[w][key] = rows[w].get(key, 0) + k
    return ModuleClass(rs, {w: HeisElt(rs, t) for w, t in rows.items()})


def identity_class(rs: RootSystem, w: WeylElt | None = None) -> KClass:
    return KClass.basis(w if w is not None else element(rs, rs.rho))
