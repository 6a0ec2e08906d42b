import pytest

from invchev.rootsystem import build_root_system
from invchev.walks import (DOWN, STAY, UP, NotQuantumError, enumerate_decorations, enumerate_quantum_walks,
                           enumerate_walks, stationary_sets, walk_to_json)
from invchev.weyl import elements, identity, longest, minuscule_datum, simple_reflection


def test_a1_walks_from_e(a1):
    d = minuscule_datum(a1, (1,))
    ws = enumerate_quantum_walks(d, identity(a1))
    assert [w.end for w in ws] == [identity(a1), simple_reflection(a1, 1)]
    assert ws[1].kind(1) == UP


def test_a1_walks_from_s1(a1):
    d = minuscule_datum(a1, (1,))
    s1 = simple_reflection(a1, 1)
    ws = enumerate_quantum_walks(d, s1)
    assert [w.end for w in ws] == [s1, identity(a1)]
    assert ws[0].kind(1) == STAY and ws[1].kind(1) == DOWN


def test_stationary_sets(a1):
    d = minuscule_datum(a1, (1,))
    stay_e = enumerate_quantum_walks(d, identity(a1))[0]
    assert stationary_sets(stay_e) == (frozenset(), frozenset())
    stay_s1 = enumerate_quantum_walks(d, simple_reflection(a1, 1))[0]
    assert stationary_sets(stay_s1) == (frozenset(), frozenset({1}))


def test_l_zero_has_empty_s_minus():
    rs = build_root_system("A3")
    d = minuscule_datum(rs, (1, 0, 0))
    assert d.l == 0
    for w in elements(rs):
        for wk in enumerate_quantum_walks(d, w):
            assert stationary_sets(wk)[0] == frozenset()


def test_decorations_a1(a1):
    d = minuscule_datum(a1, (1,))
    stay = enumerate_quantum_walks(d, simple_reflection(a1, 1))[0]
    d0, d1 = enumerate_decorations(stay)
    assert (d0.b, d0.sign, d0.wt, d0.deg) == (((1, 0),), 1, (0,), 0)
    assert (d1.b, d1.sign, d1.wt, d1.deg) == (((1, 1),), -1, a1.simple[0].fund, 1)


def test_decorations_without_stationary(a1):
    d = minuscule_datum(a1, (1,))
    up = enumerate_quantum_walks(d, identity(a1))[1]
    (only,) = enumerate_decorations(up)
    assert only.b == () and only.sign == -1


def test_not_quantum_rejected(a2):
    d = minuscule_datum(a2, (0, 1))
    quantum = {w.steps for w in enumerate_quantum_walks(d, identity(a2))}
    bad = [w for w in enumerate_walks(d, identity(a2)) if w.steps not in quantum]
    assert bad
    with pytest.raises(NotQuantumError):
        stationary_sets(bad[0])


@pytest.mark.parametrize("name", ["A2", "A3", "D4"])
def test_decoration_invariants(name):
    rs = build_root_system(name)
    for lam in rs.minuscule_weights()[:4]:
        d = minuscule_datum(rs, lam)
        for w in elements(rs)[::7]:
            qw = enumerate_quantum_walks(d, w)
            assert {x.steps for x in qw} == {x.steps for x in enumerate_walks(d, w) if x.is_quantum()}
            for wk in qw:
                sm, sp = stationary_sets(wk)
                decs = enumerate_decorations(wk)
                assert len(decs) == 2 ** (len(sm) + len(sp))
                for dw in decs:
                    assert rs.in_root_lattice(dw.wt)
                    assert isinstance(dw.deg, int)
                    assert len(dw.partial_degrees) == d.n + 2


def test_walk_json(a1):
    d = minuscule_datum(a1, (1,))
    wk = enumerate_quantum_walks(d, simple_reflection(a1, 1))[0]
    js = walk_to_json(wk, enumerate_decorations(wk))
    assert set(js) == {"start_word", "eta", "steps", "vertices", "decorations"}
    assert js["steps"] == "S" and js["eta"] == [[1]]
    assert js["decorations"][1] == {"b": {"1": 1}, "sign": -1, "wt": [1], "deg": 1}
