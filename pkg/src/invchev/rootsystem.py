"""
Simply-laced root systems in fundamental-weight coordinates.

A weight is a tuple of integers `(c_1, ..., c_r)` meaning `sum c_i * varpi_i`;
the `i`-th coordinate is the pairing with the simple coroot `alpha_i`. Under the
usual simply-laced identification roots are coroots, so every pairing is the
normalized form with `(alpha, alpha) == 2`.

>>> rs = build_root_system("A2")
>>> len(rs.positive), rs.theta.coords
(3, (1, 1))
>>> rs.pairing((1, 0), (1, 0))
Fraction(2, 3)
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import lcm

__all__ = [
    "CartanType", "Root", "RootSystem", "RootSystemError",
    "parse_cartan", "build_root_system", "cartan_matrix",
]

Weight = tuple[int, ...]


class RootSystemError(ValueError):
    """Invalid Cartan datum, rank mismatch or non-root argument."""


@dataclass(frozen=True)
class CartanType:
    family: str
    rank: int

    def __post_init__(self):
        ok = (
            (self.family == "A" and self.rank >= 1)
            or (self.family == "D" and self.rank >= 4)
            or (self.family == "E" and self.rank in (6, 7, 8))
        )
        if not ok:
            raise RootSystemError(
                f"unsupported Cartan type {self.family}{self.rank} "
                "(simply-laced A_n n>=1, D_n n>=4, E6/E7/E8 only)")

    def __str__(self):
        return f"{self.family}{self.rank}"


_CARTAN_RE = re.compile(r"^\s*([A-Za-z])\s*_?\s*(\d+)\s*$")


def parse_cartan(text: str | CartanType) -> CartanType:
    """Parse strings like ``"A3"``, ``"D4"``, ``"E6"``."""
    if isinstance(text, CartanType):
        return text
    m = _CARTAN_RE.match(text)
    if not m:
        raise RootSystemError(f"cannot parse Cartan type {text!r}")
    return CartanType(m.group(1).upper(), int(m.group(2)))


def _edges(ct: CartanType) -> list[tuple[int, int]]:
    # Bourbaki labelling, 1-based
    n = ct.rank
    if ct.family == "A":
        return [(i, i + 1) for i in range(1, n)]
    if ct.family == "D":
        return [(i, i + 1) for i in range(1, n - 1)] + [(n - 2, n)]
    return [(1, 3), (3, 4), (4, 5), (2, 4)] + [(i, i + 1) for i in range(5, n)]


def cartan_matrix(ct: CartanType) -> tuple[tuple[int, ...], ...]:
    n = ct.rank
    mat = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for a, b in _edges(ct):
        mat[a - 1][b - 1] = mat[b - 1][a - 1] = -1
    return tuple(tuple(row) for row in mat)


def _invert(mat) -> list[list[Fraction]]:
    n = len(mat)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(mat)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


@dataclass(frozen=True)
class Root:
    index: int
    coords: tuple[int, ...]   # over the simple roots
    fund: Weight              # fundamental-weight coordinates
    height: int

    @property
    def positive(self) -> bool:
        return self.height > 0


@dataclass(eq=False, repr=False)
class RootSystem:
    """
    Immutable root-system data. Positive roots have indices ``0..N-1`` (simple
    roots first, in node order), negative roots ``N..2N-1`` with ``-roots[i]``
    at index ``i + N``.
    """
    cartan: CartanType
    cartan_matrix: tuple[tuple[int, ...], ...]
    cartan_inverse: tuple[tuple[Fraction, ...], ...]
    lattice_constant: int
    roots: list[Root]
    root_index: dict[Weight, int] = field(repr=False)
    _gram: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def rank(self) -> int:
        return self.cartan.rank

    @property
    def e(self) -> int:
        return self.lattice_constant

    @property
    def npos(self) -> int:
        return len(self.roots) // 2

    @property
    def positive(self) -> list[Root]:
        return self.roots[:self.npos]

    @property
    def simple(self) -> list[Root]:
        return self.roots[:self.rank]

    @property
    def theta(self) -> Root:
        return max(self.positive, key=lambda r: r.height)

    @property
    def rho(self) -> Weight:
        return (1,) * self.rank

    def __str__(self):
        return str(self.cartan)

    def __repr__(self):
        return f"RootSystem({self.cartan})"

    # -- weights ---------------------------------------------------------

    def zero(self) -> Weight:
        return (0,) * self.rank

    def fundamental(self, k: int) -> Weight:
        """The fundamental weight ``varpi_k`` (1-based node)."""
        if not 1 <= k <= self.rank:
            raise RootSystemError(f"node {k} out of range for {self}")
        return tuple(int(i == k - 1) for i in range(self.rank))

    def check(self, lam) -> Weight:
        lam = tuple(int(c) for c in lam)
        if len(lam) != self.rank:
            raise RootSystemError(
                f"weight {lam} has rank {len(lam)}, expected {self.rank}")
        return lam

    def pairing(self, a, b) -> Fraction:
        """The normalized invariant form on fundamental-weight coordinates."""
        a, b = self.check(a), self.check(b)
        g = self._gram
        s = sum(a[i] * g[i][j] * b[j]
                for i in range(self.rank) if a[i] for j in range(self.rank))
        return Fraction(s, self.e)

    def norm2(self, a) -> Fraction:
        return self.pairing(a, a)

    def to_root_coords(self, lam) -> tuple[Fraction, ...]:
        lam = self.check(lam)
        return tuple(sum(self.cartan_inverse[i][j] * lam[j] for j in range(self.rank))
                     for i in range(self.rank))

    def from_root_coords(self, c) -> Weight:
        if len(c) != self.rank:
            raise RootSystemError(f"root-lattice vector {c} has wrong rank")
        C = self.cartan_matrix
        return tuple(sum(C[i][j] * int(c[j]) for j in range(self.rank))
                     for i in range(self.rank))

    def in_root_lattice(self, lam) -> bool:
        return all(x.denominator == 1 for x in self.to_root_coords(lam))

    def root_lattice_coords(self, lam) -> tuple[int, ...]:
        c = self.to_root_coords(lam)
        if any(x.denominator != 1 for x in c):
            raise RootSystemError(f"{lam} is not in the root lattice")
        return tuple(int(x) for x in c)

    def height(self, lam) -> int:
        """``(rho, lam)`` for ``lam`` in the root lattice, i.e. its height."""
        return sum(self.root_lattice_coords(lam))

    # -- roots -----------------------------------------------------------

    def root(self, lam) -> Root:
        idx = self.root_index.get(tuple(lam))
        if idx is None:
            raise RootSystemError(f"{tuple(lam)} is not a root of {self}")
        return self.roots[idx]

    def is_root(self, lam) -> bool:
        return tuple(lam) in self.root_index

    def neg(self, idx: int) -> int:
        n = self.npos
        return idx + n if idx < n else idx - n

    def reflect(self, alpha, lam) -> Weight:
        """``s_alpha(lam) = lam - (lam, alpha) alpha`` for a root ``alpha``."""
        if isinstance(alpha, Root):
            alpha = alpha.fund
        r = self.root(alpha)
        lam = self.check(lam)
        p = sum(c * x for c, x in zip(r.coords, lam))
        if p == 0:
            return lam
        return tuple(x - p * a for x, a in zip(lam, r.fund))

    def pair_root(self, r: Root, lam) -> int:
        """Integer pairing of a root with a weight."""
        return sum(c * x for c, x in zip(r.coords, lam) if c)

    def is_minuscule(self, lam) -> bool:
        lam = self.check(lam)
        return all(abs(self.pair_root(r, lam)) <= 1 for r in self.positive)

    def minuscule_nodes(self) -> list[int]:
        """1-based nodes ``k`` with ``varpi_k`` minuscule."""
        return [k for k in range(1, self.rank + 1)
                if self.is_minuscule(self.fundamental(k))]

    def orbit(self, lam) -> list[Weight]:
        """The W-orbit of ``lam``, sorted."""
        lam = self.check(lam)
        seen = {lam}
        todo = [lam]
        while todo:
            mu = todo.pop()
            for r in self.simple:
                nu = self.reflect(r.fund, mu)
                if nu not in seen:
                    seen.add(nu)
                    todo.append(nu)
        return sorted(seen)

    def minuscule_weights(self) -> list[Weight]:
        """All nonzero minuscule weights, sorted."""
        out = set()
        for k in self.minuscule_nodes():
            out.update(self.orbit(self.fundamental(k)))
        return sorted(out)


_CLASSICAL_COUNT = {"A": lambda n: n * (n + 1) // 2, "D": lambda n: n * (n - 1)}
_E_COUNT = {6: 36, 7: 63, 8: 120}


@lru_cache(maxsize=None)
def _build(ct: CartanType) -> RootSystem:
    n = ct.rank
    C = cartan_matrix(ct)
    Cinv = _invert(C)
    e = lcm(*(x.denominator for row in Cinv for x in row))
    gram = tuple(tuple(int(x * e) for x in row) for row in Cinv)

    # closure of the simple roots under simple reflections, in root coordinates
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    todo = list(simple)
    while todo:
        c = todo.pop()
        fund = [sum(C[i][j] * c[j] for j in range(n)) for i in range(n)]
        for i in range(n):
            if fund[i]:
                d = list(c)
                d[i] -= fund[i]
                d = tuple(d)
                if d not in seen:
                    seen.add(d)
                    todo.append(d)
    pos = sorted((c for c in seen if sum(c) > 0),
                 key=lambda c: (sum(c), tuple(-x for x in c)))
    expected = _CLASSICAL_COUNT[ct.family](n) if ct.family in _CLASSICAL_COUNT else _E_COUNT[n]
    assert len(pos) == expected, (ct, len(pos))

    roots = []
    for sign in (1, -1):
        for c in pos:
            cc = tuple(sign * x for x in c)
            fund = tuple(sum(C[i][j] * cc[j] for j in range(n)) for i in range(n))
            roots.append(Root(len(roots), cc, fund, sum(cc)))
    index = {r.fund: r.index for r in roots}
    return RootSystem(ct, C, tuple(tuple(r) for r in Cinv), e, roots, index, gram)


def build_root_system(cartan: str | CartanType) -> RootSystem:
    """Build (and memoize) the root system of a simply-laced Cartan type."""
    return _build(parse_cartan(cartan))
