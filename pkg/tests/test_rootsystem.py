from fractions import Fraction

import pytest

from invchev.rootsystem import RootSystemError, build_root_system, cartan_matrix, parse_cartan


def test_a1_basics(a1):
    assert [r.coords for r in a1.positive] == [(1,)]
    assert a1.e == 2


def test_a2_theta(a2):
    assert a2.npos == 3
    assert a2.theta.coords == (1, 1)


def test_d4_count():
    assert build_root_system("D4").npos == 12


@pytest.mark.parametrize("name,count", [("A5", 15), ("D6", 30), ("E6", 36), ("E7", 63), ("E8", 120)])
def test_positive_root_counts(name, count):
    assert build_root_system(name).npos == count


@pytest.mark.parametrize("bad", ["B3", "C2", "A0", "D3", "E9", "G2", "xyz"])
def test_rejects_unsupported(bad):
    with pytest.raises(RootSystemError):
        build_root_system(bad)


def test_parse_cartan_forms():
    assert str(parse_cartan("a_3")) == "A3"
    assert cartan_matrix(parse_cartan("A2")) == ((2, -1), (-1, 2))


def test_pairings(a1, a2):
    a1_, a2_ = a2.simple[0].fund, a2.simple[1].fund
    assert a2.pairing(a1_, a1_) == 2
    assert a2.pairing(a1_, a2_) == -1
    assert a1.pairing((1,), (1,)) == Fraction(1, 2)


def test_reflections(a1, a2):
    alpha = a1.simple[0].fund
    assert a1.reflect(alpha, (1,)) == tuple(x - y for x, y in zip((1,), alpha))
    assert a2.reflect(a2.simple[0].fund, (0, 1)) == (0, 1)
    rho = a2.rho
    theta = a2.theta.fund
    assert a2.reflect(theta, rho) == tuple(r - 2 * t for r, t in zip(rho, theta))


def test_minuscule(a2):
    a3 = build_root_system("A3")
    assert a3.is_minuscule(a3.fundamental(1))
    assert not a2.is_minuscule(a2.rho)
    assert a2.is_minuscule(a2.zero())


@pytest.mark.parametrize("name,nodes", [("A3", [1, 2, 3]), ("D5", [1, 4, 5]), ("E6", [1, 6]), ("E7", [7]), ("E8", [])])
def test_minuscule_nodes(name, nodes):
    assert build_root_system(name).minuscule_nodes() == nodes


@pytest.mark.parametrize("name", ["A1", "A3", "D4", "D5", "E6", "E7"])
def test_root_invariants(name):
    rs = build_root_system(name)
    for a in rs.roots:
        for b in rs.roots:
            p = rs.pairing(a.fund, b.fund)
            assert p in (0, 1, -1, 2, -2)
            assert (abs(p) == 2) == (a.index == b.index or a.index == rs.neg(b.index))
    assert rs.height(rs.theta.fund) == rs.pairing(rs.rho, rs.theta.fund)
    for k in rs.minuscule_nodes():
        assert all(rs.is_minuscule(v) for v in rs.orbit(rs.fundamental(k)))


def test_root_lattice_roundtrip(a2):
    for c in [(1, 0), (0, 1), (2, -3)]:
        assert a2.root_lattice_coords(a2.from_root_coords(c)) == c
    assert not a2.in_root_lattice((1, 0))
