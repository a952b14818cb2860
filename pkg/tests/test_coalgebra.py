import pytest

from sextor import (
    EXACT,
    STRICT,
    Ideal,
    NotBihereditary,
    all_functors,
    all_nat_trans,
    build_chain,
    build_coalgebra,
    build_pointed_sets,
    build_ses,
    canonical_pretorsion,
    check_adjoint_quintuple,
    check_coalgebra,
    check_coalgebra_2cell,
    check_coalgebra_morphism,
    classify_coalgebra,
    classify_morphism,
    enumerate_pretorsion,
    extract_pretorsion,
    ideal_from_objects,
    identity_functor,
    is_bihereditary,
    search_generalized,
)
from sextor import comonad as cm


def _theories():
    out = []
    for C in (build_pointed_sets(2), build_pointed_sets(3), build_chain(2), build_chain(3)):
        out += [(C, T, F) for T, F in enumerate_pretorsion(C)]
    return out


@pytest.mark.parametrize("C,T,F", _theories(), ids=lambda x: getattr(x, "name", None))
def test_round_trip(C, T, F):
    for mode in (EXACT, STRICT):
        if mode is STRICT and not is_bihereditary(C, T, F):
            continue
        cs = build_coalgebra(C, T, F, mode)
        rep = check_coalgebra(cs)
        assert rep.ok, rep.failures[:3]
        assert check_coalgebra(cs, EXACT).ok
        assert extract_pretorsion(cs) == (T, F)
        again = build_coalgebra(C, *extract_pretorsion(cs), mode)
        assert cm.same_coalgebra_data(cs, again)
        k = classify_coalgebra(cs)
        assert k.verdict == "PRETORSION" and k.asserted_null_parts


def test_coalgebra_recovers_t1(ps3):
    for T, F in enumerate_pretorsion(ps3):
        cs = build_coalgebra(ps3, T, F, EXACT)
        Tc, Fc = extract_pretorsion(cs)
        assert all(h in cs.ideal for a in Tc for b in Fc for h in ps3.hom(a, b))


def test_z1_trivial(z1):
    cs = build_coalgebra(z1, [0], [0])
    assert check_coalgebra(cs).ok
    assert extract_pretorsion(cs) == ({0}, {0})
    assert classify_coalgebra(cs).verdict == "PRETORSION"
    assert cs.ell == cs.r == [0]


def test_cofree_coalgebra(ps2, n2):
    S = build_ses(ps2, n2)
    P = canonical_pretorsion(S)
    cs = build_coalgebra(S.category, P.torsion, P.free, STRICT)
    assert check_coalgebra(cs).ok
    T, F = extract_pretorsion(cs)
    assert sorted(S.category.oname(x) for x in T) == ["<id1|id1>", "<id2|r>"]
    assert sorted(S.category.oname(x) for x in F) == ["<id1|id1>", "<i|id2>"]


def test_corrupted_lambda_delta_fails(ps2):
    cs = build_coalgebra(ps2, ["P1", "P2"], ["P1"], STRICT)
    bad, x = cm.perturbed(cs)
    rep = check_coalgebra(bad)
    assert not rep.ok
    assert "lambda_delta-iso" in rep.failed_laws()
    assert "counit-outer" in rep.failed_laws()
    assert all(f["where"] is not None for f in rep.failures)


def test_strict_needs_bihereditary(ps2, monkeypatch):
    monkeypatch.setattr(cm, "hereditary_failures", lambda A: [0])
    with pytest.raises(NotBihereditary):
        build_coalgebra(ps2, ["P1", "P2"], ["P1"], STRICT)
    assert build_coalgebra(ps2, ["P1", "P2"], ["P1"], EXACT) is not None


def test_not_a_theory(ps2):
    with pytest.raises(ValueError):
        build_coalgebra(ps2, ["P2"], ["P1", "P2"])


@pytest.mark.parametrize("k", [2, 3])
def test_generalized_search_finds_only_pretorsion(k):
    C = build_pointed_sets(k)
    res = search_generalized(C, ideal_from_objects(C, ["P1"]))
    assert res["generalized"] == 0 and res["witness"] is None
    assert res["coalgebras"] == res["pretorsion"] > 0


def test_coalgebra_morphisms_ps2(ps2):
    checked = 0
    for T, F in enumerate_pretorsion(ps2):
        cs = build_coalgebra(ps2, T, F)
        Gs = [
            G
            for G in all_functors(ps2, ps2)
            if classify_morphism(G, cs.ideal, cs.ideal).strict and cm.preserves_theory(G, cs, cs)
        ]
        for G in Gs:
            rep = check_coalgebra_morphism(cs, cs, G)
            assert rep.ok, rep.failures[:2]
            Gbar = cm.induced_gbar(cs, cs, G)
            checked += 1
            assert len(Gbar) == ps2.n_objects
        for G in Gs:
            for H in Gs:
                for a in all_nat_trans(G, H):
                    assert check_coalgebra_2cell(cs, cs, a).ok
    assert checked


def test_identity_morphism(ps3):
    T, F = enumerate_pretorsion(ps3)[0]
    cs = build_coalgebra(ps3, T, F)
    assert check_coalgebra_morphism(cs, cs, identity_functor(ps3)).ok


@pytest.mark.parametrize("k", [1, 2])
def test_adjoint_quintuple(k):
    C = build_pointed_sets(k)
    N = Ideal.everything(C) if k == 1 else ideal_from_objects(C, ["P1"])
    rep = check_adjoint_quintuple(C, N)
    assert rep.ok, rep.failures[:2]


def test_adjoints_need_semiexact(ps3):
    rep = check_adjoint_quintuple(ps3, ideal_from_objects(ps3, ["P1", "P2"]))
    assert rep.failed_laws() == ["semiexact"]
