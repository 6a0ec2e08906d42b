"""
Type A in epsilon coordinates: ``P = Z^{n+1} / Z(1,...,1)``, ``varpi_k =
eps_1 + ... + eps_k`` and permutations acting by ``w eps_i = eps_{w(i)}``.

>>> epsilon_weight(2, 3)
(0, -1)
>>> from invchev.rootsystem import build_root_system
>>> rs = build_root_system("A2")
>>> to_permutation(element_from_permutation(rs, (3, 2, 1)))
(3, 2, 1)
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .chevalley import inverse_chevalley, spherical_symmetrization
from .heisenberg import HeisElt, KClass, LaurentQ
from .rootsystem import RootSystem, RootSystemError, Weight, build_root_system
from .weyl import WeylElt, element, longest

__all__ = ["epsilon_weight", "eps_vector_to_weight", "to_permutation",
           "element_from_permutation", "cycle", "closed_form_w0", "q_toda_operator",
           "q_toda_check", "apply_diagram_automorphism", "TodaReport", "engine_w0"]


def _require_a(rs: RootSystem):
    if rs.cartan.family != "A":
        raise RootSystemError(f"{rs} is not of type A")


def epsilon_weight(n: int, i: int) -> Weight:
    """``eps_i = varpi_i - varpi_{i-1}`` in A_n, for ``1 <= i <= n+1``."""
    if not 1 <= i <= n + 1:
        raise ValueError(f"epsilon index {i} out of range 1..{n + 1}")
    v = [0] * n
    if i <= n:
        v[i - 1] += 1
    if i >= 2:
        v[i - 2] -= 1
    return tuple(v)


def eps_vector_to_weight(v) -> Weight:
    """``sum v_i eps_i`` (length ``n+1``) in fundamental coordinates."""
    return tuple(v[k] - v[k + 1] for k in range(len(v) - 1))


def to_permutation(w: WeylElt) -> tuple[int, ...]:
    """One-line notation ``(w(1), ..., w(n+1))``."""
    _require_a(w.rs)
    n = w.rs.rank
    eps = {epsilon_weight(n, j): j for j in range(1, n + 2)}
    return tuple(eps[w.apply(epsilon_weight(n, i))] for i in range(1, n + 2))


def element_from_permutation(rs: RootSystem, perm) -> WeylElt:
    """The Weyl element with ``w eps_i = eps_{perm[i-1]}``."""
    _require_a(rs)
    n = rs.rank
    perm = tuple(perm)
    if sorted(perm) != list(range(1, n + 2)):
        raise ValueError(f"{perm} is not a permutation of 1..{n + 1}")
    # rho = sum_i (n+1-i) eps_i, so w(rho) has entry n+1-i in slot w(i)
    v = [0] * (n + 1)
    for i, j in enumerate(perm, start=1):
        v[j - 1] = n + 1 - i
    return element(rs, eps_vector_to_weight(v))


def cycle(n: int, *points: int) -> tuple[int, ...]:
    """The cycle ``(p_1 p_2 ... p_k)`` sending ``p_1 -> p_2 -> ... -> p_k -> p_1``."""
    perm = list(range(1, n + 2))
    for a, b in zip(points, points[1:] + points[:1]):
        perm[a - 1] = b
    return tuple(perm)


def _compose(p, r) -> tuple[int, ...]:
    # (p o r)(k) = p(r(k))
    return tuple(p[r[k] - 1] for k in range(len(r)))


def _inverse(p) -> tuple[int, ...]:
    out = [0] * len(p)
    for i, j in enumerate(p, start=1):
        out[j - 1] = i
    return tuple(out)


def closed_form_w0(n: int, i: int) -> KClass:
    """
    The closed expansion of ``e^{eps_i} [O(w0)]`` in A_n, built term by term
    from the cycle description (not from walks).
    """
    if not 1 <= i <= n + 1:
        raise ValueError(f"epsilon index {i} out of range 1..{n + 1}")
    rs = build_root_system(f"A{n}")
    w0 = longest(rs)
    w0p = to_permutation(w0)

    def eps(j):
        return epsilon_weight(n, j)

    def neg(v):
        return tuple(-x for x in v)

    def alpha(a, b):
        # alpha_{a,b} = eps_a - eps_{b+1}
        return tuple(x - y for x, y in zip(eps(a), eps(b + 1)))

    def trans(a, b):
        return neg(w0.apply(alpha(a, b)))

    terms = {}

    def add(w, xi, lam, c):
        k = (w, xi, lam)
        terms[k] = terms[k] + c if k in terms else c

    add(w0, rs.zero(), neg(eps(i)), LaurentQ.mono(0, 1))
    if i < n + 1:
        add(w0, trans(i, i), neg(eps(i + 1)), LaurentQ.mono(1, -1))
    for a in range(1, i):
        for sub in combinations(range(1, i), a):
            c = cycle(n, *sub, i)
            w = element_from_permutation(rs, _compose(_inverse(c), w0p))
            add(w, trans(sub[0], i - 1), neg(eps(i)), LaurentQ.mono(0, (-1) ** a))
    for b in range(1, n + 2 - i):
        for sub in combinations(range(i + 1, n + 2), b):
            c = cycle(n, i, *sub)
            w = element_from_permutation(rs, _compose(_inverse(c), w0p))
            add(w, trans(i, sub[-1] - 1), neg(eps(sub[-1])), LaurentQ.mono(1, (-1) ** (b - 1)))
    return KClass(rs, terms)


def q_toda_operator(n: int) -> HeisElt:
    """``X^{-w0 eps_1} + sum_{i>=2} X^{-w0 eps_i} (1 - q t_{-w0 alpha_{i-1}} X^{-w0 alpha_{i-1}})``."""
    rs = build_root_system(f"A{n}")
    w0 = longest(rs)

    def nw0(v):
        return tuple(-x for x in w0.apply(v))

    one = HeisElt.one(rs)
    out = HeisElt.x(rs, nw0(epsilon_weight(n, 1)))
    for i in range(2, n + 2):
        a = nw0(rs.simple[i - 2].fund)
        corr = one - HeisElt.mono(rs, mu=a, q=1) * HeisElt.x(rs, a)
        out = out + HeisElt.x(rs, nw0(epsilon_weight(n, i))) * corr
    return out


@dataclass
class TodaReport:
    n: int
    expected: HeisElt
    computed: HeisElt
    support: list[WeylElt]

    @property
    def support_ok(self) -> bool:
        return len(self.support) == 1 and self.support[0].is_identity()

    @property
    def ok(self) -> bool:
        return self.support_ok and self.expected == self.computed

    def to_json(self) -> dict:
        return {"n": self.n, "match": self.expected == self.computed,
                "support": [list(w.word) for w in self.support],
                "expected": self.expected.to_json(), "computed": self.computed.to_json()}


def q_toda_check(n: int) -> TodaReport:
    """Symmetrize ``e^{eps_i}`` over ``i`` and compare with the q-Toda operator."""
    rs = build_root_system(f"A{n}")
    h, support = spherical_symmetrization(rs, 1)
    return TodaReport(n, q_toda_operator(n), h, support)


def apply_diagram_automorphism(c: KClass) -> KClass:
    """``[O(w t_b)(mu)] -> [O(w0 w w0 t_{-w0 b})(-w0 mu)]`` termwise (type A)."""
    rs = c.rs
    _require_a(rs)
    w0 = longest(rs)
    terms = {}
    for (w, xi, lam), coef in c.terms.items():
        k = (w0 * w * w0, tuple(-x for x in w0.apply(xi)), tuple(-x for x in w0.apply(lam)))
        terms[k] = terms[k] + coef if k in terms else coef
    return KClass(rs, terms)


def engine_w0(n: int, i: int) -> KClass:
    """``e^{eps_i} [O(w0)]`` from the decorated-walk engine."""
    rs = build_root_system(f"A{n}")
    return inverse_chevalley(rs, epsilon_weight(n, i), KClass.basis(longest(rs)))
