import pytest

from invchev.rootsystem import build_root_system
from invchev.weyl import (AffineWeylElt, UnsupportedWeightError, bruhat_le, datum_failures, element_failures,
                          elements, ell_lambda, ell_lambda_partial, from_word, identity, inversion_set,
                          longest, min_coset_rep, minuscule_datum, parse_affine, parse_elt, reduced_words,
                          simple_reflection, weyl_order)


def coords(roots):
    return sorted(r.coords for r in roots)


def test_group_basics(a2):
    s1 = simple_reflection(a2, 1)
    assert (s1 * s1).is_identity()
    assert longest(a2).apply((1, 0)) == (0, -1)
    alpha1, alpha2 = a2.simple[0].fund, a2.simple[1].fund
    # words compose as maps: s1 s2 applies s2 first
    assert from_word(a2, [2, 1]).apply(alpha2) == alpha1
    assert from_word(a2, [1, 2]).apply(alpha2) == tuple(-x for x in a2.theta.fund)


def test_inversion_sets(a2):
    assert inversion_set(identity(a2)) == []
    assert coords(inversion_set(longest(a2))) == [(0, 1), (1, 0), (1, 1)]
    assert coords(inversion_set(from_word(a2, [1, 2]))) == [(1, 0), (1, 1)]


def test_reduced_words(a2):
    assert identity(a2).word == ()
    assert longest(a2).word == (1, 2, 1)
    assert simple_reflection(build_root_system("A3"), 2).word == (2,)
    assert sorted(reduced_words(longest(a2))) == [(1, 2, 1), (2, 1, 2)]


def test_min_coset_rep(a2):
    w0 = longest(a2)
    assert min_coset_rep(w0, {2}) == from_word(a2, [2, 1])
    assert min_coset_rep(simple_reflection(a2, 2), {2}).is_identity()
    assert min_coset_rep(w0, set()) == w0


@pytest.mark.parametrize("name,order", [("A1", 2), ("A3", 24), ("D4", 192), ("E6", 51840), ("E8", 696729600)])
def test_weyl_order(name, order):
    assert weyl_order(build_root_system(name)) == order


def test_elements_enumeration():
    rs = build_root_system("A3")
    ws = elements(rs)
    assert len(ws) == 24 and len(set(ws)) == 24
    assert sum(1 for w in ws if w.length == 3) == 6


def test_bruhat(a2):
    assert bruhat_le(identity(a2), longest(a2))
    assert bruhat_le(from_word(a2, [1]), from_word(a2, [2, 1]))
    assert not bruhat_le(from_word(a2, [1, 2]), from_word(a2, [2, 1]))


def test_datum_a2_varpi1(a2):
    d = minuscule_datum(a2, (1, 0))
    assert d.x.is_identity() and d.l == 0
    assert d.y == from_word(a2, [2, 1]) and d.m == 2
    assert [g.coords for g in d.gamma] == [(1, 1), (1, 0)]


def test_datum_a2_eps2(a2):
    d = minuscule_datum(a2, (-1, 1))  # eps_2
    assert d.x == from_word(a2, [1])
    assert [b.coords for b in d.beta] == [(1, 0)]
    assert d.y == from_word(a2, [2])
    assert [g.coords for g in d.gamma] == [(0, 1)]


def test_datum_a1(a1):
    d = minuscule_datum(a1, (1,))
    assert d.x.is_identity() and d.y == from_word(a1, [1])
    assert d.beta == () and [g.coords for g in d.gamma] == [(1,)]
    assert d.metadata()["y_word"] == [1]


@pytest.mark.parametrize("name,lam", [("A2", (0, 0)), ("A2", (1, 1)), ("E8", (1, 0, 0, 0, 0, 0, 0, 0))])
def test_datum_rejects(name, lam):
    with pytest.raises(UnsupportedWeightError):
        minuscule_datum(build_root_system(name), lam)


def test_datum_custom_words(a2):
    d = minuscule_datum(a2, (0, 1), y_word=[1, 2])
    assert d.y_word == (1, 2)
    with pytest.raises(ValueError):
        minuscule_datum(a2, (0, 1), y_word=[2, 1])


def test_ell_lambda(a2):
    assert ell_lambda(identity(a2), (1, 0), "+") == 0
    assert ell_lambda(longest(a2), (1, 0), "-") == 0
    assert ell_lambda(longest(a2), (1, 0), "+") == 2


def test_ell_lambda_partial(a2):
    d = minuscule_datum(a2, (-1, 1))
    assert ell_lambda_partial(identity(a2), d, 1, "-") == 0
    assert ell_lambda_partial(longest(a2), d, 1, "-") == 1
    d1 = minuscule_datum(a2, (1, 0))
    assert ell_lambda_partial(simple_reflection(a2, 2), d1, 2, "+") == 0


def test_parse_elt(a2):
    assert parse_elt(a2, "w0") == longest(a2)
    assert parse_elt(a2, "e").is_identity()
    assert parse_elt(a2, "1,2") == parse_elt(a2, "1 2") == from_word(a2, [1, 2])
    with pytest.raises(ValueError):
        parse_elt(a2, "1 7")


def test_affine(a2):
    x = parse_affine(a2, "1 2 | t: 1,1")
    assert isinstance(x, AffineWeylElt)
    assert x.xi_root_coords == (1, 1)
    with pytest.raises(ValueError):
        AffineWeylElt(identity(a2), (1, 0))


@pytest.mark.parametrize("name", ["A1", "A2", "A3"])
def test_prop_l_exhaustive(name):
    rs = build_root_system(name)
    for lam in rs.minuscule_weights():
        d = minuscule_datum(rs, lam)
        assert datum_failures(d) == []
        for w in elements(rs):
            assert element_failures(d, w) == []
