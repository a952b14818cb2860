import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sextor import (
    build_chain,
    build_pointed_sets,
    chain_characterization,
    check_pretorsion,
    enumerate_pretorsion,
    is_bihereditary,
    is_rectangular,
    torsion_assignment,
)
from sextor.pretorsion import (
    assignment_functoriality_failures,
    is_cohereditary,
    is_hereditary,
    labelled,
)


def fs(*xs):
    return frozenset(xs)


def test_check_examples(ps2, ch3):
    assert check_pretorsion(ps2, ["P1", "P2"], ["P1"]).ok
    bad = check_pretorsion(ps2, ["P2"], ["P1", "P2"])
    assert not bad.ok and bad.t1
    assert bad.t2_failures == [ps2.ob("P1")]
    assert check_pretorsion(ch3, ["1", "2"], ["2", "3"]).ok


def test_ps2_theories(ps2):
    got = labelled(ps2, enumerate_pretorsion(ps2))
    assert got == {
        (fs("P1", "P2"), fs("P1")),
        (fs("P1"), fs("P1", "P2")),
        (fs("P1", "P2"), fs("P1", "P2")),
    }


def test_ps3_has_three_theories(ps3):
    assert len(enumerate_pretorsion(ps3)) == 3


def test_enumeration_is_deterministic(ps3):
    assert enumerate_pretorsion(ps3) == enumerate_pretorsion(build_pointed_sets(3))


@pytest.mark.parametrize("n,count", [(1, 1), (2, 3), (3, 8)])
def test_chain_characterization_counts(n, count):
    assert len(chain_characterization(n)) == count


def test_chain_characterization_n2():
    assert set(chain_characterization(2)) == {
        (fs(1), fs(1, 2)),
        (fs(1, 2), fs(2)),
        (fs(1, 2), fs(1, 2)),
    }
    assert chain_characterization(1) == [(fs(1), fs(1))]


def _count_by_transfer(n):
    # independent count: each element is T-only, F-only or both; scan left to right
    states = ("T", "F", "TF")

    def ok(a, b):
        # a = state of i, b = state of i+1
        return not ("T" in a and "F" in b) or ("F" in a or "T" in b)

    ways = {s: int("T" in s) for s in states}
    for _ in range(n - 1):
        ways = {b: sum(w for a, w in ways.items() if ok(a, b)) for b in states}
    return sum(w for s, w in ways.items() if "F" in s)


@pytest.mark.parametrize("n", range(1, 9))
def test_characterization_matches_transfer_count(n):
    assert len(chain_characterization(n)) == _count_by_transfer(n)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_chain_oracle(n):
    C = build_chain(n)
    got = {(fs(*(int(C.oname(a)) for a in T)), fs(*(int(C.oname(a)) for a in F))) for T, F in enumerate_pretorsion(C)}
    assert got == set(chain_characterization(n))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_chain_theories_bihereditary(n):
    C = build_chain(n)
    assert all(is_bihereditary(C, T, F) for T, F in enumerate_pretorsion(C))


def test_assignment_ps2(ps2):
    A = torsion_assignment(ps2, ["P1", "P2"], ["P1"])
    assert [ps2.mname(m) for m in A.ell] == ["id1", "id2"]
    assert [ps2.mname(m) for m in A.r] == ["id1", "r"]


def test_assignment_ch3(ch3):
    A = torsion_assignment(ch3, ["1", "2"], ["2", "3"])
    assert [(ch3.mname(a), ch3.mname(b)) for a, b in zip(A.ell, A.r)] == [
        ("id1", "1<2"),
        ("id2", "id2"),
        ("2<3", "id3"),
    ]


def test_assignment_z1(z1):
    A = torsion_assignment(z1, ["P1"], ["P1"])
    assert A.ell == A.r == [0]


def test_hereditary_goldens(ps2):
    assert is_hereditary(ps2, ["P1", "P2"], ["P1"])
    assert is_cohereditary(ps2, ["P1", "P2"], ["P1"])


def test_rectangular_goldens(ps2, z1):
    assert is_rectangular(z1, ["P1"], ["P1"])
    assert is_rectangular(ps2, ["P1", "P2"], ["P1"])
    assert not is_rectangular(ps2, ["P1", "P2"], ["P1", "P2"])
    C = build_chain(2)
    assert not is_rectangular(C, ["1", "2"], ["1", "2"])


def _theories():
    out = []
    for C in (build_pointed_sets(2), build_pointed_sets(3), build_chain(3), build_chain(4)):
        out += [(C, T, F) for T, F in enumerate_pretorsion(C)]
    return out


THEORIES = _theories()


@pytest.mark.parametrize("C,T,F", THEORIES, ids=lambda x: getattr(x, "name", None))
def test_assignment_laws(C, T, F):
    A = torsion_assignment(C, T, F)
    assert assignment_functoriality_failures(A) == []
    N = A.ideal
    for x in range(C.n_objects):
        assert A.t_obj(x) in T and A.f_obj(x) in F
        if x in T:
            assert C.is_iso(A.ell[x])
        if x in F:
            assert C.is_iso(A.r[x])
    # T1 with an explicit factorization through a null object
    Z = T & F
    for a, b in itertools.product(T, F):
        for h in C.hom(a, b):
            assert h in N
            assert any(C.compose(g, f) == h for z in Z for f in C.hom(a, z) for g in C.hom(z, b))


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 4), st.data())
def test_enumeration_is_complete(n, data):
    C = build_chain(n)
    objs = list(range(n))
    T = frozenset(data.draw(st.sets(st.sampled_from(objs))))
    F = frozenset(data.draw(st.sets(st.sampled_from(objs))))
    assert check_pretorsion(C, T, F).ok == ((T, F) in enumerate_pretorsion(C))
