"""
Weyl group elements, reduced words, inversion sets, parabolic coset
representatives, and the data attached to a minuscule weight.

An element ``w`` is identified by its image ``w(rho)`` in fundamental-weight
coordinates (regular dominant ``rho`` has trivial stabilizer). Simple
reflections are 1-based node labels, as in the words ``"1 2 1"``.

>>> from invchev.rootsystem import build_root_system
>>> rs = build_root_system("A2")
>>> w0 = longest(rs)
>>> w0.word, w0.length
((1, 2, 1), 3)
>>> w0.apply((1, 0))
(0, -1)
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import factorial

from .rootsystem import Root, RootSystem, RootSystemError, Weight

__all__ = [
    "WeylElt", "AffineWeylElt", "MinusculeDatum", "UnsupportedWeightError",
    "element", "identity", "from_word", "simple_reflection", "longest",
    "elements", "weyl_order", "inversion_set", "reduced_word", "reduced_words", "min_coset_rep", "bruhat_le",
    "minuscule_datum", "ell_lambda", "ell_lambda_partial",
    "parse_elt", "parse_affine", "format_word", "datum_failures", "element_failures",
]


class UnsupportedWeightError(ValueError):
    """Weight is zero, not minuscule, or the type has no minuscule weights."""


def _s(rs: RootSystem, i: int, lam: Weight) -> Weight:
    # simple reflection s_i (0-based) on fundamental coordinates
    c = lam[i]
    if c == 0:
        return lam
    a = rs.cartan_matrix[i]
    return tuple(x - c * y for x, y in zip(lam, a))


class WeylElt:
    """An element of the finite Weyl group; use `element` to construct."""

    def __init__(self, rs: RootSystem, key: Weight):
        self.rs = rs
        self.key = key

    def __eq__(self, other):
        return isinstance(other, WeylElt) and self.rs is other.rs and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"WeylElt({format_word(self.word)})"

    def __mul__(self, other: WeylElt) -> WeylElt:
        return element(self.rs, self.apply(other.key))

    @cached_property
    def length(self) -> int:
        k = self.key
        return sum(1 for r in self.rs.positive
                   if sum(c * x for c, x in zip(r.coords, k)) < 0)

    @cached_property
    def word(self) -> tuple[int, ...]:
        """Lexicographically smallest reduced word (1-based letters)."""
        mu = self.key
        out = []
        while True:
            i = next((i for i, c in enumerate(mu) if c < 0), None)
            if i is None:
                return tuple(out)
            out.append(i + 1)
            mu = _s(self.rs, i, mu)

    @cached_property
    def _columns(self) -> tuple[Weight, ...]:
        rs = self.rs
        cols = []
        for j in range(rs.rank):
            lam = rs.fundamental(j + 1)
            for a in reversed(self.word):
                lam = _s(rs, a - 1, lam)
            cols.append(lam)
        return tuple(cols)

    def apply(self, lam) -> Weight:
        """The linear action ``w(lam)``."""
        lam = self.rs.check(lam)
        out = [0] * self.rs.rank
        for c, col in zip(lam, self._columns):
            if c:
                for i, x in enumerate(col):
                    out[i] += c * x
        return tuple(out)

    def apply_root(self, r: Root) -> Root:
        return self.rs.roots[self.rs.root_index[self.apply(r.fund)]]

    @cached_property
    def inverse(self) -> WeylElt:
        return from_word(self.rs, reversed(self.word))

    def apply_inverse(self, lam) -> Weight:
        return self.inverse.apply(lam)

    def left_reflect(self, alpha) -> WeylElt:
        """``s_alpha * w`` for a root ``alpha``."""
        return element(self.rs, self.rs.reflect(alpha, self.key))

    def right_reflect(self, alpha) -> WeylElt:
        """``w * s_alpha``, computed as ``s_{w(alpha)} * w``."""
        if isinstance(alpha, Root):
            alpha = alpha.fund
        return self.left_reflect(self.apply(alpha))

    def is_identity(self) -> bool:
        return self.key == self.rs.rho

    def has_left_descent(self, i: int) -> bool:
        return self.key[i - 1] < 0

    def has_right_descent(self, i: int) -> bool:
        return self.apply(self.rs.simple[i - 1].fund) not in self._positive_funds

    @property
    def _positive_funds(self):
        return _positive_funds(self.rs)


@lru_cache(maxsize=None)
def _positive_funds(rs: RootSystem) -> frozenset:
    return frozenset(r.fund for r in rs.positive)


@lru_cache(maxsize=400_000)
def _intern(rs: RootSystem, key: Weight) -> WeylElt:
    return WeylElt(rs, key)


def element(rs: RootSystem, key) -> WeylElt:
    """The element ``w`` with ``w(rho) == key``."""
    return _intern(rs, tuple(key))


def identity(rs: RootSystem) -> WeylElt:
    return element(rs, rs.rho)


def from_word(rs: RootSystem, word) -> WeylElt:
    """``s_{a_1} s_{a_2} ... s_{a_k}`` for ``word = (a_1, ..., a_k)``."""
    word = list(word)
    mu = rs.rho
    for a in reversed(word):
        if not 1 <= a <= rs.rank:
            raise RootSystemError(f"simple reflection {a} out of range for {rs}")
        mu = _s(rs, a - 1, mu)
    return element(rs, mu)


def simple_reflection(rs: RootSystem, i: int) -> WeylElt:
    return from_word(rs, [i])


def longest(rs: RootSystem) -> WeylElt:
    return element(rs, tuple(-c for c in rs.rho))


def elements(rs: RootSystem) -> list[WeylElt]:
    """All of W, sorted by (length, word). Exponential in rank."""
    seen = {rs.rho}
    layer = [rs.rho]
    while layer:
        nxt = []
        for mu in layer:
            for i in range(rs.rank):
                if mu[i] > 0:
                    nu = _s(rs, i, mu)
                    if nu not in seen:
                        seen.add(nu)
                        nxt.append(nu)
        layer = nxt
    return sorted((element(rs, k) for k in seen), key=lambda w: (w.length, w.word))


def weyl_order(rs: RootSystem) -> int:
    """``|W|`` from the classical formulas."""
    n, f = rs.rank, rs.cartan.family
    if f == "A":
        return factorial(n + 1)
    if f == "D":
        return 2 ** (n - 1) * factorial(n)
    return {6: 51_840, 7: 2_903_040, 8: 696_729_600}[n]


def reduced_word(w: WeylElt) -> list[int]:
    return list(w.word)


def reduced_words(w: WeylElt, limit: int = 10_000) -> list[tuple[int, ...]]:
    """All reduced words of ``w`` in lexicographic order (at most ``limit``)."""
    if w.length == 0:
        return [()]
    out = []
    for i in range(1, w.rs.rank + 1):
        if w.has_left_descent(i):
            for rest in reduced_words(simple_reflection(w.rs, i) * w, limit):
                out.append((i,) + rest)
                if len(out) >= limit:
                    return out
    return out


def inversion_set(w: WeylElt) -> list[Root]:
    """``Inv(w) = Delta+ intersected with w(-Delta+)``, sorted by root index."""
    k = w.key
    return [r for r in w.rs.positive if sum(c * x for c, x in zip(r.coords, k)) < 0]


def min_coset_rep(w: WeylElt, J) -> WeylElt:
    """Minimal length representative of ``w W_J`` (``J`` a set of nodes)."""
    J = sorted(set(J))
    while True:
        j = next((j for j in J if w.has_right_descent(j)), None)
        if j is None:
            return w
        w = w * simple_reflection(w.rs, j)


def bruhat_le(u: WeylElt, v: WeylElt) -> bool:
    """Bruhat order via the subword property on the lex-min word of ``v``."""
    if u.length > v.length:
        return False
    if v.length == 0:
        return u.length == 0
    s = v.word[0]
    sv = simple_reflection(v.rs, s) * v
    if u.has_left_descent(s):
        return bruhat_le(simple_reflection(u.rs, s) * u, sv)
    return bruhat_le(u, sv)


# -- affine elements --------------------------------------------------------

@dataclass(frozen=True)
class AffineWeylElt:
    """``w t_xi`` with ``xi`` in the root lattice (fundamental coordinates)."""
    w: WeylElt
    xi: Weight

    def __post_init__(self):
        if not self.w.rs.in_root_lattice(self.xi):
            raise RootSystemError(f"translation {self.xi} is not in the root lattice")

    @property
    def xi_root_coords(self) -> tuple[int, ...]:
        return self.w.rs.root_lattice_coords(self.xi)

    def __str__(self):
        t = ",".join(map(str, self.xi_root_coords))
        return f"{format_word(self.w.word)} | t: {t}"


# -- minuscule data ----------------------------------------------------------

@dataclass(frozen=True)
class MinusculeDatum:
    """
    The package ``(x, y, beta, gamma)`` attached to a minuscule weight
    ``lam = x varpi_k`` with ``x`` minimal in its coset and the minimal
    representative of the longest element factored as ``y x``.

    ``beta[r-1]`` is ``beta_r`` and ``gamma[s-1]`` is ``gamma_s``; ``eta`` is the
    step sequence ``(beta_l, ..., beta_1, gamma_1, ..., gamma_m)``.
    """
    rs: RootSystem
    lam: Weight
    k: int
    x: WeylElt
    y: WeylElt
    x_word: tuple[int, ...]
    y_word: tuple[int, ...]
    beta: tuple[Root, ...]
    gamma: tuple[Root, ...]

    @property
    def J(self) -> frozenset[int]:
        return frozenset(range(1, self.rs.rank + 1)) - {self.k}

    @property
    def l(self) -> int:  # noqa: E743
        return len(self.beta)

    @property
    def m(self) -> int:
        return len(self.gamma)

    @property
    def n(self) -> int:
        return self.l + self.m

    @property
    def eta(self) -> tuple[Root, ...]:
        return tuple(reversed(self.beta)) + self.gamma

    def metadata(self) -> dict:
        return {
            "lambda": list(self.lam),
            "k": self.k,
            "x_word": list(self.x_word),
            "y_word": list(self.y_word),
        }


def _check_word(w: WeylElt, word, what: str) -> tuple[int, ...]:
    word = tuple(word)
    if len(word) != w.length or from_word(w.rs, word) != w:
        raise ValueError(f"{format_word(word)} is not a reduced word for {what}")
    return word


@lru_cache(maxsize=4096)
def _datum(rs, lam, x_word, y_word) -> MinusculeDatum:
    if lam == rs.zero():
        raise UnsupportedWeightError("the zero weight has no minuscule datum")
    if not rs.is_minuscule(lam):
        raise UnsupportedWeightError(f"{lam} is not minuscule in {rs}")
    # dominant conjugate: lam = s_{a1} ... s_{ap} varpi_k
    mu, word = lam, []
    while True:
        i = next((i for i, c in enumerate(mu) if c < 0), None)
        if i is None:
            break
        word.append(i + 1)
        mu = _s(rs, i, mu)
    k = mu.index(1) + 1
    J = set(range(1, rs.rank + 1)) - {k}
    x = min_coset_rep(from_word(rs, word), J)
    assert x.apply(rs.fundamental(k)) == lam
    lng = min_coset_rep(longest(rs), J)
    y = lng * x.inverse
    assert y.length + x.length == lng.length

    x_word = x.word if x_word is None else _check_word(x, x_word, "x")
    y_word = y.word if y_word is None else _check_word(y, y_word, "y")

    # beta_{l-p} = s_{a_1} ... s_{a_p} (alpha_{a_{p+1}})
    betas = []
    for p in range(len(x_word)):
        prefix = from_word(rs, x_word[:p])
        betas.append(prefix.apply_root(rs.simple[x_word[p] - 1]))
    beta = tuple(reversed(betas))
    # gamma_s = s_{i_m} ... s_{i_{s+1}} (alpha_{i_s})
    m = len(y_word)
    gamma = []
    for s in range(1, m + 1):
        suffix = from_word(rs, reversed(y_word[s:]))
        gamma.append(suffix.apply_root(rs.simple[y_word[s - 1] - 1]))
    return MinusculeDatum(rs, lam, k, x, y, x_word, y_word, beta, tuple(gamma))


def minuscule_datum(rs: RootSystem, lam, x_word=None, y_word=None) -> MinusculeDatum:
    """
    Build the datum for a nonzero minuscule ``lam``. Reduced words for ``x``
    and ``y`` default to the lexicographically smallest ones.
    """
    lam = rs.check(lam)
    return _datum(rs, lam,
                  None if x_word is None else tuple(x_word),
                  None if y_word is None else tuple(y_word))


def ell_lambda(w: WeylElt, lam, sign: str) -> int:
    """Number of inversions of ``w`` pairing to ``+1`` (``sign='+'``) or ``-1`` with ``lam``."""
    rs = w.rs
    lam = rs.check(lam)
    if not rs.is_minuscule(lam):
        raise UnsupportedWeightError(f"{lam} is not minuscule")
    target = {"+": 1, "-": -1}[sign]
    return sum(1 for r in inversion_set(w) if rs.pair_root(r, lam) == target)


def ell_lambda_partial(w: WeylElt, d: MinusculeDatum, index: int, sign: str) -> int:
    """``#(Inv(w) & {beta_r..beta_l})`` for ``'-'``, ``#(Inv(w) & {gamma_s..gamma_m})`` for ``'+'``."""
    if sign == "-":
        if not 1 <= index <= d.l:
            raise IndexError(f"r={index} out of range 1..{d.l}")
        tail = d.beta[index - 1:]
    elif sign == "+":
        if not 1 <= index <= d.m:
            raise IndexError(f"s={index} out of range 1..{d.m}")
        tail = d.gamma[index - 1:]
    else:
        raise ValueError(f"sign must be '+' or '-', got {sign!r}")
    inv = {r.index for r in inversion_set(w)}
    return sum(1 for r in tail if r.index in inv)


# -- text formats ---------------------------------------------------------------

def format_word(word) -> str:
    word = list(word)
    return " ".join(map(str, word)) if word else "e"


def parse_elt(rs: RootSystem, text: str) -> WeylElt:
    """Parse ``"1 2 1"``, ``"1,2,1"``, ``"w0"`` or ``"e"``/``""`` (identity)."""
    text = text.strip()
    if text in ("w0", "w_0"):
        return longest(rs)
    if text in ("", "e", "id", "1d"):
        return identity(rs)
    parts = re.split(r"[\s,]+", text)
    try:
        word = [int(p) for p in parts if p]
    except ValueError:
        raise RootSystemError(f"cannot parse Weyl element {text!r}") from None
    return from_word(rs, word)


def parse_affine(rs: RootSystem, text: str) -> AffineWeylElt:
    """Parse ``"WORD | t: c1,...,cn"`` (root-lattice coordinates of the translation)."""
    if "|" not in text:
        return AffineWeylElt(parse_elt(rs, text), rs.zero())
    left, right = text.split("|", 1)
    right = right.strip()
    if right.startswith("t:"):
        right = right[2:]
    coords = [int(c) for c in re.split(r"[\s,]+", right.strip()) if c]
    return AffineWeylElt(parse_elt(rs, left), rs.from_root_coords(coords))


# -- statistics checks ----------------------------------------------------------

def datum_failures(d: MinusculeDatum) -> list[str]:
    """Violations of the identities that involve only the datum (empty if none)."""
    rs = d.rs
    bad = []
    lng = min_coset_rep(longest(rs), d.J)
    if 2 * d.x.length - lng.length != -2 * rs.pairing(rs.rho, d.lam):
        bad.append("2 l(x) - l(lng) != -2 (rho, lam)")
    if lng.length != 2 * rs.pairing(rs.rho, rs.fundamental(d.k)):
        bad.append("l(lng) != 2 (rho, varpi_k)")
    if {r.index for r in inversion_set(d.x)} != {b.index for b in d.beta}:
        bad.append("Inv(x) != {beta_r}")
    if {r.index for r in inversion_set(d.y.inverse)} != {g.index for g in d.gamma}:
        bad.append("Inv(y^-1) != {gamma_s}")
    beta = d.beta
    for r, b in enumerate(beta, start=1):
        if rs.pair_root(b, d.lam) != -1:
            bad.append(f"(lam, beta_{r}) != -1")
        for t, c in enumerate(beta, start=1):
            if t != r and rs.pairing(b.fund, c.fund) not in (0, 1):
                bad.append(f"(beta_{r}, beta_{t}) not in {{0, 1}}")
            if r < t and rs.pairing(b.fund, c.fund) == 1 and not b.height > c.height:
                bad.append(f"ht(beta_{r}) <= ht(beta_{t}) although they pair to 1")
        h = b.height
        B = [beta[t - 1] for t in range(r + 1, d.l + 1)
             if rs.pairing(beta[t - 1].fund, b.fund) == 1]
        R = [a for a in rs.positive if a.height < h and rs.pairing(a.fund, b.fund) == 1]
        if len(B) != h - 1:
            bad.append(f"#B_{r} != ht(beta_{r}) - 1")
        if len(R) != 2 * (h - 1):
            bad.append(f"#R_{r} != 2 (ht(beta_{r}) - 1)")
        Rset = {a.index for a in R}
        sigma = {}
        for a in R:
            diff = tuple(x - y for x, y in zip(b.fund, a.fund))
            idx = rs.root_index.get(diff)
            if idx is None or idx not in Rset or idx == a.index:
                bad.append(f"sigma is not a fixed-point-free involution on R_{r}")
                break
            sigma[a.index] = idx
        else:
            Bset = {c.index for c in B}
            sB = {sigma[i] for i in Bset if i in sigma}
            if sB & Bset or sB | Bset != Rset:
                bad.append(f"sigma(B_{r}) and B_{r} do not partition R_{r}")
    return bad


def element_failures(d: MinusculeDatum, w: WeylElt) -> list[str]:
    """Violations of the per-element length identities for ``w``."""
    rs = d.rs
    bad = []
    lam = d.lam
    diff = tuple(a - b for a, b in zip(rs.rho, w.key))
    if rs.pairing(diff, lam) != ell_lambda(w, lam, "+") - ell_lambda(w, lam, "-"):
        bad.append("(rho - w rho, lam) != l+ - l-")
    inv = {r.index for r in inversion_set(w)}
    minus = {r.index for r in inversion_set(w) if rs.pair_root(r, lam) == -1}
    plus = {r.index for r in inversion_set(w) if rs.pair_root(r, lam) == 1}
    if minus != inv & {r.index for r in inversion_set(d.x)}:
        bad.append("Inv(w)- != Inv(w) & Inv(x)")
    if plus != inv & {r.index for r in inversion_set(d.y.inverse)}:
        bad.append("Inv(w)+ != Inv(w) & Inv(y^-1)")
    for r, b in enumerate(d.beta, start=1):
        v = w.left_reflect(b)
        if v.length < w.length:
            lhs = w.length - v.length
            rhs = 2 * (ell_lambda_partial(w, d, r, "-") - ell_lambda_partial(v, d, r, "-")) - 1
            if lhs != rhs:
                bad.append(f"length drop along beta_{r}")
    for s, g in enumerate(d.gamma, start=1):
        v = w.left_reflect(g)
        if v.length < w.length:
            lhs = w.length - v.length
            rhs = 2 * (ell_lambda_partial(w, d, s, "+") - ell_lambda_partial(v, d, s, "+")) - 1
            if lhs != rhs:
                bad.append(f"length drop along gamma_{s}")
    return bad
