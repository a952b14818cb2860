import itertools

import pytest

from sextor import (
    EXACT,
    STRICT,
    Ideal,
    ModeViolation,
    all_functors,
    all_nat_trans,
    build_pointed_sets,
    build_ses,
    check_coassociator,
    check_comonad,
    check_compositor,
    check_counit_triangles,
    check_delta_structure,
    classify_morphism,
    comultiplication_functor,
    constant_functor,
    counit_functor,
    identity_functor,
    identity_nat,
    ideal_from_objects,
    is_short_exact,
    omega_on_functor,
    omega_on_nat,
    validate_functor,
    validate_nat,
)
from sextor.comonad import eager_ses


@pytest.fixture(scope="module")
def endos(ps2):
    return list(all_functors(ps2, ps2))


@pytest.fixture(scope="module")
def strict_endos(endos, n2):
    return [G for G in endos if classify_morphism(G, n2, n2).strict]


def test_identity_both_modes(ps2, n2):
    assert classify_morphism(identity_functor(ps2), n2, n2).modes == {STRICT, EXACT}


def test_constant_functor_goldens(ps2, n2):
    at_null = classify_morphism(constant_functor(ps2, ps2, ps2.ob("P1")), n2, n2)
    assert at_null.modes == {STRICT, EXACT}
    at_p2 = classify_morphism(constant_functor(ps2, ps2, ps2.ob("P2")), n2, n2)
    assert at_p2.modes == set()
    assert not at_p2.inconsistencies


def test_counit_is_strict(ps2, n2):
    S = build_ses(ps2, n2)
    eps = counit_functor(ps2, n2)
    assert validate_functor(eps).ok
    assert classify_morphism(eps, S.ideal, n2).modes == {STRICT, EXACT}
    assert eps.obj_map[S.obj(ps2.mor("id2"), ps2.mor("r"))] == ps2.ob("P2")


def test_comultiplication(ps2, n2):
    S = build_ses(ps2, n2)
    delta = comultiplication_functor(ps2, n2)
    assert validate_functor(delta).ok
    SS = delta.target
    EF = S.obj(ps2.mor("i"), ps2.mor("id2"))
    assert SS.oname(delta.obj_map[EF]) == "<<id1|i|i>|<id1|id2|id2>>"
    assert classify_morphism(delta, S.ideal, eager_ses(S.category, S.ideal).ideal).strict


def test_strict_implies_consequences(endos, n2, ps2):
    # a strict endofunctor preserves null objects and every short exact pair
    seqs = [(f, g) for f, g in ps2.composable_pairs() if is_short_exact(ps2, n2, f, g)]
    for G in endos:
        c = classify_morphism(G, n2, n2)
        assert not c.inconsistencies
        if c.strict:
            assert c.exact
            assert all(ps2.id(G.obj_map[x]) in n2 for x in range(ps2.n_objects) if ps2.id(x) in n2)
            assert all(is_short_exact(ps2, n2, G(f), G(g)) for f, g in seqs)


def test_omega_identity(ps2, n2):
    S = build_ses(ps2, n2)
    for mode in (STRICT, EXACT):
        W = omega_on_functor(identity_functor(ps2), n2, n2, mode)
        assert W.obj_map == tuple(range(S.n_objects))
        assert W.mor_map == tuple(range(S.n_morphisms))


def test_omega_strict_is_pointwise_and_agrees_with_exact(strict_endos, ps2, n2):
    S = build_ses(ps2, n2)
    for G in strict_endos:
        W = omega_on_functor(G, n2, n2, STRICT)
        assert validate_functor(W).ok
        for e, (f, g) in enumerate(S.legs):
            assert S.legs[W.obj_map[e]] == (G(f), G(g))
        We = omega_on_functor(G, n2, n2, EXACT)
        assert We.obj_map == W.obj_map and We.mor_map == W.mor_map


def test_omega_rejects_wrong_mode(ps2, n2):
    K = constant_functor(ps2, ps2, ps2.ob("P2"))
    with pytest.raises(ModeViolation):
        omega_on_functor(K, n2, n2, EXACT)


def test_omega_on_nat(strict_endos, ps2, n2):
    S = build_ses(ps2, n2)
    seen = 0
    for G, H in itertools.product(strict_endos, repeat=2):
        for a in all_nat_trans(G, H):
            w = omega_on_nat(a, n2, n2, STRICT)
            assert validate_nat(w).ok
            for e in range(S.n_objects):
                X, Y, Z = S.rows(e)
                assert S.triples[w[e]] == (a[X], a[Y], a[Z])
            assert omega_on_nat(a, n2, n2, EXACT).components == w.components
            seen += 1
    assert seen
    idn = omega_on_nat(identity_nat(identity_functor(ps2)), n2, n2)
    assert all(S.category.is_identity(m) for m in idn.components)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_counit_triangles(k):
    C = build_pointed_sets(k)
    rep = check_counit_triangles(C, ideal_from_objects(C, ["P1"]))
    assert rep.verdict == "pass"


def test_coassociator_ps2(ps2, n2):
    rep = check_coassociator(ps2, n2)
    assert rep.verdict == "pass"
    assert set(rep.laws) >= {"iso", "naturality", "pentagon"}
    assert rep.laws["naturality"][0] == 12


def test_comonad_z1(z1):
    assert check_comonad(z1, Ideal.everything(z1)).ok


def test_delta_structure(strict_endos, n2, ps2):
    for G in strict_endos:
        assert check_delta_structure(G, n2, n2).ok
    S = build_ses(ps2, n2)
    assert check_delta_structure(counit_functor(ps2, n2), S.ideal, n2).ok


def test_compositor_strict_pairs(strict_endos, n2, ps2):
    I = identity_functor(ps2)
    for G in strict_endos:
        for H in strict_endos:
            assert check_compositor(G, H, n2, n2, n2).ok
        rep = check_compositor(G, I, n2, n2, n2)
        assert rep.laws["normal"][1] == 0


def test_compositor_exact_only_on_ps3(ps3):
    Na, Nb, Nc = (ideal_from_objects(ps3, Z) for Z in (["P1"], ["P1", "P2"], ["P1", "P2", "P3"]))
    Gs = []
    for G in all_functors(ps3, ps3):
        c = classify_morphism(G, Na, Nb)
        if c.exact and not c.strict:
            Gs.append(G)
    assert len(Gs) == 1
    H = identity_functor(ps3)
    rep = check_compositor(Gs[0], H, Na, Nb, Nb)
    assert rep.ok


def test_compositor_has_nontrivial_components(ps3):
    Na, Nb, Nc = (ideal_from_objects(ps3, Z) for Z in (["P1"], ["P1", "P2"], ["P1", "P2", "P3"]))
    functors = list(all_functors(ps3, ps3))
    G = next(G for G in functors if (c := classify_morphism(G, Na, Nb)).exact and not c.strict)
    Hs = [H for H in functors if classify_morphism(H, Nb, Nc).exact]
    nontrivial = 0
    for H in Hs:
        rep = check_compositor(G, H, Na, Nb, Nc)
        assert rep.ok, rep.failures[:2]
        nontrivial += rep.info["components"] - rep.info["identity_components"]
    assert nontrivial > 0
