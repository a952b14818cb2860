import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sextor import Ideal, build_chain, ideal_from_objects, is_closed, is_ideal, null_objects
from sextor.exactness import NoKernel
from sextor.ideal import (
    coreflects_null,
    coreflects_null_via_cokernel,
    reflects_null,
    reflects_null_via_kernel,
)


def names(C, ms):
    return sorted(C.mname(m) for m in ms)


def test_ideal_through_p1(ps2, n2):
    assert names(ps2, n2.members) == ["c", "i", "id1", "r"]
    assert is_ideal(ps2, n2) == (True, None)
    assert null_objects(ps2, n2) == [ps2.ob("P1")]


def test_single_i_is_not_an_ideal(ps2):
    ok, (a, b, h) = is_ideal(ps2, ["i"])
    assert not ok
    assert (ps2.mname(a), ps2.mname(b), ps2.mname(h)) == ("i", "r", "id1")


def test_everything_is_an_ideal(ps3):
    assert is_ideal(ps3, Ideal.everything(ps3))[0]


def test_null_objects_trivial(z1, ch3):
    assert null_objects(z1, Ideal.everything(z1)) == [0]
    assert null_objects(ch3, Ideal.empty(ch3)) == []


def test_closed_witnesses(ps2, n2):
    ok, wit = is_closed(ps2, n2)
    assert ok
    for m, (f, g) in wit.items():
        assert ps2.compose(g, f) == m
        assert ps2.cod[f] == ps2.ob("P1")
    f, g = wit[ps2.mor("c")]
    assert (ps2.mname(f), ps2.mname(g)) == ("r", "i")


def test_ideal_without_null_objects_is_not_closed():
    C = build_chain(2)
    N = Ideal.of(C, ["1<2"])
    assert is_ideal(C, N)[0]
    assert null_objects(C, N) == []
    assert not is_closed(C, N)[0]


def test_empty_ideal_closed(ch3):
    assert is_closed(ch3, Ideal.empty(ch3))[0]
    assert ideal_from_objects(ch3, []).members == frozenset()


def test_ideal_from_p2_is_everything(ps2):
    assert len(ideal_from_objects(ps2, ["P2"])) == 5


def test_reflect_examples(ps2, n2, z1, nz):
    r, i = ps2.mor("r"), ps2.mor("i")
    assert not reflects_null(ps2, n2, r)
    assert reflects_null(ps2, n2, i)
    assert reflects_null(ps2, n2, ps2.mor("id2"))
    assert reflects_null_via_kernel(ps2, n2, i)
    assert not reflects_null_via_kernel(ps2, n2, r)
    assert reflects_null_via_kernel(z1, nz, 0)


@pytest.mark.parametrize("k", [2, 3])
def test_reflect_characterization(k, ps2, n2, ps3, n3):
    C, N = (ps2, n2) if k == 2 else (ps3, n3)
    for m in range(C.n_morphisms):
        assert reflects_null(C, N, m) == reflects_null_via_kernel(C, N, m)
        assert coreflects_null(C, N, m) == coreflects_null_via_cokernel(C, N, m)


def test_via_kernel_needs_a_kernel():
    C = build_chain(2)
    N = ideal_from_objects(C, ["2"])
    with pytest.raises(NoKernel):
        reflects_null_via_kernel(C, N, C.mor("id1"))


@settings(max_examples=40, deadline=None)
@given(st.sets(st.sampled_from(["P1", "P2", "P3"]), min_size=0))
def test_object_ideals_are_closed_ideals(ps3, zs):
    N = ideal_from_objects(ps3, zs)
    assert is_ideal(ps3, N)[0]
    assert is_closed(ps3, N)[0]
    # every declared object is null
    assert set(ps3.obs(zs)) <= set(null_objects(ps3, N))


@settings(max_examples=60, deadline=None)
@given(st.sets(st.integers(0, 22)))
def test_is_ideal_agrees_with_absorption(ps3, ms):
    ok, _ = is_ideal(ps3, ms)
    brute = all(
        ps3.compose(g, ps3.compose(n, f)) in ms
        for n in ms
        for f in ps3.into(ps3.dom[n])
        for g in ps3.outof(ps3.cod[n])
    )
    assert ok == brute
