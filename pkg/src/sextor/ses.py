"""The category of short exact sequences Ses(C) with its ideal [N].

Objects of Ses(C) are short exact pairs ``(f, g)`` of base morphisms; morphisms
are commuting triples ``(u, v, w)``.  The construction is itself a
``FinCategory`` (with lazy composition), so every generic search in the
package runs inside Ses(C) unchanged, and Ses(Ses(C)) is just ``build_ses``
applied again.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .category import FinCategory
from .exactness import (
    NoCokernel,
    NoKernel,
    coker,
    cokernel,
    extend,
    is_cokernel_of,
    is_kernel_of,
    is_semiexact,
    ker,
    kernel,
    lift,
    short_exact_sequences,
)
from .ideal import Ideal, ideal_from_objects


class NotSemiexact(ValueError):
    pass


@dataclass(eq=False)
class SesCategory:
    base: FinCategory
    base_ideal: Ideal
    category: FinCategory
    ideal: Ideal
    legs: list[tuple[int, int]]
    triples: list[tuple[int, int, int]]
    _obj_lookup: dict[tuple[int, int], int] = field(repr=False)
    _mor_lookup: dict[tuple[int, int, int, int, int], int] = field(repr=False)

    # -- provenance -----------------------------------------------------

    def obj(self, f: int, g: int) -> int:
        """The object ``(f, g)``; ``KeyError`` if the pair is not short exact."""
        return self._obj_lookup[(f, g)]

    def has_obj(self, f: int, g: int) -> bool:
        return (f, g) in self._obj_lookup

    def mor(self, src: int, tgt: int, u: int, v: int, w: int) -> int:
        return self._mor_lookup[(src, tgt, u, v, w)]

    def find_mor(self, src: int, tgt: int, u: int, v: int, w: int) -> int | None:
        return self._mor_lookup.get((src, tgt, u, v, w))

    def rows(self, e: int) -> tuple[int, int, int]:
        """Base objects ``(X, Y, Z)`` of the sequence ``e``."""
        f, g = self.legs[e]
        C = self.base
        return C.dom[f], C.cod[f], C.cod[g]

    def middle(self, e: int) -> int:
        return self.base.cod[self.legs[e][0]]

    @property
    def n_objects(self) -> int:
        return self.category.n_objects

    @property
    def n_morphisms(self) -> int:
        return self.category.n_morphisms

    def describe_obj(self, e: int) -> str:
        f, g = self.legs[e]
        return f"{self.base.mname(f)} ; {self.base.mname(g)}"

    def describe_mor(self, m: int) -> str:
        return "(" + ", ".join(self.base.mname(x) for x in self.triples[m]) + ")"


def _seq_name(C: FinCategory, parts) -> str:
    return "<" + "|".join(C.mname(p) for p in parts) + ">"


def build_ses(C: FinCategory, N: Ideal, *, require_semiexact: bool = True) -> SesCategory:
    """Ses(C) with the ideal generated by the iso-iso sequences.  Memoized on ``N``."""
    key = ("Ses",)
    if key in N.cache:
        return N.cache[key]
    if require_semiexact:
        ok, missing = is_semiexact(C, N)
        if not ok:
            kind, m = missing[0]
            raise NotSemiexact(f"{C.name}: {kind} of {C.mname(m)} missing ({len(missing)} failures)")
    legs = short_exact_sequences(C, N)
    obj_lookup = {p: i for i, p in enumerate(legs)}
    triples: list[tuple[int, int, int]] = []
    ends: list[tuple[int, int]] = []
    for s, (f, g) in enumerate(legs):
        X, Y, Z = C.dom[f], C.cod[f], C.cod[g]
        for t, (f2, g2) in enumerate(legs):
            X2, Y2, Z2 = C.dom[f2], C.cod[f2], C.cod[g2]
            for v in C.hom(Y, Y2):
                vf = C.compose(v, f)
                g2v = C.compose(g2, v)
                us = [u for u in C.hom(X, X2) if C.compose(f2, u) == vf]
                if not us:
                    continue
                ws = [w for w in C.hom(Z, Z2) if C.compose(w, g) == g2v]
                for u, w in itertools.product(us, ws):
                    triples.append((u, v, w))
                    ends.append((s, t))
    mor_lookup = {(s, t, *tr): i for i, ((s, t), tr) in enumerate(zip(ends, triples))}
    identity = []
    for s, (f, g) in enumerate(legs):
        X, Y, Z = C.dom[f], C.cod[f], C.cod[g]
        identity.append(mor_lookup[(s, s, C.id(X), C.id(Y), C.id(Z))])

    def composer(m2: int, m1: int) -> int:
        u1, v1, w1 = triples[m1]
        u2, v2, w2 = triples[m2]
        return mor_lookup[
            (ends[m1][0], ends[m2][1], C.compose(u2, u1), C.compose(v2, v1), C.compose(w2, w1))
        ]

    obj_names = [_seq_name(C, p) for p in legs]
    mor_names = []
    seen: set[str] = set()
    for (s, t), tr in zip(ends, triples):
        nm = _seq_name(C, tr)
        if nm in seen:
            nm = f"{nm}@{s}>{t}"
        seen.add(nm)
        mor_names.append(nm)

    cat = FinCategory(
        f"Ses({C.name})",
        obj_names,
        mor_names,
        [s for s, _ in ends],
        [t for _, t in ends],
        identity,
        composer=composer,
    )
    S = SesCategory(C, N, cat, Ideal.empty(cat), legs, triples, obj_lookup, mor_lookup)
    S.ideal = ideal_from_objects(cat, iso_iso_objects(S))
    N.cache[key] = S
    cat.cache["ses-structure"] = S
    return S


def iso_iso_objects(S: SesCategory) -> list[int]:
    C = S.base
    return [e for e, (f, g) in enumerate(S.legs) if C.is_iso(f) and C.is_iso(g)]


def null_triple_objects(S: SesCategory) -> list[int]:
    """Sequences whose three base objects are all null."""
    C, N = S.base, S.base_ideal
    return [e for e in range(S.n_objects) if all(C.id(x) in N for x in S.rows(e))]


def ses_of(S: SesCategory) -> SesCategory:
    """Ses(Ses(C)), memoized."""
    return build_ses(S.category, S.ideal)


# -- structural kernels and cokernels ------------------------------------


def ses_kernel_fast(S: SesCategory, m: int) -> int:
    """Kernel of ``(u', v', w')`` assembled from base kernels.

    The kernel object is ``K(u') -> K(v') -> C(f)`` where the first leg is
    induced into ``K(v')`` and the second leg is its cokernel.
    """
    C, N = S.base, S.base_ideal
    u1, v1, _ = S.triples[m]
    f1, _g1 = S.legs[S.category.dom[m]]
    g1 = _g1
    ku = ker(C, N, u1)
    kv = ker(C, N, v1)
    f = lift(C, kv, C.compose(f1, ku))
    cf = coker(C, N, f)
    w = extend(C, cf, C.chain(g1, kv))
    src = S.obj(f, cf)
    return S.mor(src, S.category.dom[m], ku, kv, w)


def ses_cokernel_fast(S: SesCategory, m: int) -> int:
    C, N = S.base, S.base_ideal
    _, v, w = S.triples[m]
    f2, g2 = S.legs[S.category.cod[m]]
    cv = coker(C, N, v)
    cw = coker(C, N, w)
    g = extend(C, cv, C.compose(cw, g2))
    kg = ker(C, N, g)
    u = lift(C, kg, C.compose(cv, f2))
    tgt = S.obj(kg, g)
    return S.mor(S.category.cod[m], tgt, u, cv, cw)


def is_ses_kernel_componentwise(S: SesCategory, k: int, m: int) -> bool:
    """``u`` is a kernel of ``u'`` and ``v`` a kernel of ``v'`` in the base."""
    C, N = S.base, S.base_ideal
    if S.category.cod[k] != S.category.dom[m]:
        return False
    u, v, _ = S.triples[k]
    u1, v1, _ = S.triples[m]
    return is_kernel_of(C, N, u, u1) and is_kernel_of(C, N, v, v1)


def is_ses_cokernel_componentwise(S: SesCategory, c: int, m: int) -> bool:
    """``v'`` is a cokernel of ``v`` and ``w'`` a cokernel of ``w`` in the base."""
    C, N = S.base, S.base_ideal
    if S.category.dom[c] != S.category.cod[m]:
        return False
    _, v, w = S.triples[m]
    _, v1, w1 = S.triples[c]
    return is_cokernel_of(C, N, v1, v) and is_cokernel_of(C, N, w1, w)


def mediating_iso(C: FinCategory, a: int, b: int) -> int | None:
    """An iso ``t`` with ``b . t == a`` (two monos with the same codomain)."""
    for t in C.hom(C.dom[a], C.dom[b]):
        if C.compose(b, t) == a and C.is_iso(t):
            return t
    return None


def comediating_iso(C: FinCategory, a: int, b: int) -> int | None:
    """An iso ``t`` with ``t . a == b``."""
    for t in C.hom(C.cod[a], C.cod[b]):
        if C.compose(t, a) == b and C.is_iso(t):
            return t
    return None


# -- canonical pretorsion theory on Ses(C) --------------------------------


@dataclass
class SesPretorsion:
    torsion: frozenset[int]
    free: frozenset[int]
    # per object: (alpha1, alpha2) as morphisms of Ses(C)
    chosen: dict[int, tuple[int, int]]


def grid_legs(S: SesCategory, e: int) -> tuple[int, int]:
    """The 3-row sequence ``R1 -> E -> R3`` with ``R1 = (id_X, coker id_X)`` and
    ``R3 = (ker id_Z, id_Z)``, returned as two morphisms of Ses(C)."""
    C, N = S.base, S.base_ideal
    f, g = S.legs[e]
    X, _, Z = S.rows(e)
    gf = C.compose(g, f)
    cx = coker(C, N, C.id(X))
    kz = ker(C, N, C.id(Z))
    w = extend(C, cx, gf)
    u = lift(C, kz, gf)
    top = S.obj(C.id(X), cx)
    bottom = S.obj(kz, C.id(Z))
    a1 = S.mor(top, e, C.id(X), f, w)
    a2 = S.mor(e, bottom, u, g, C.id(Z))
    return a1, a2


def canonical_pretorsion(S: SesCategory) -> SesPretorsion:
    C = S.base
    T = frozenset(e for e, (f, _) in enumerate(S.legs) if C.is_iso(f))
    F = frozenset(e for e, (_, g) in enumerate(S.legs) if C.is_iso(g))
    chosen = {e: grid_legs(S, e) for e in range(S.n_objects)}
    return SesPretorsion(T, F, chosen)


def generic_kernel_or_none(S: SesCategory, m: int) -> int | None:
    try:
        return kernel(S.category, S.ideal, m).kernel
    except NoKernel:
        return None


def generic_cokernel_or_none(S: SesCategory, m: int) -> int | None:
    try:
        return cokernel(S.category, S.ideal, m).cokernel
    except NoCokernel:
        return None


def check_ses(C: FinCategory, N: Ideal) -> "Report":
    """The Ses(C) invariant suite: semiexactness, [N] is componentwise null,
    fast kernels/cokernels are kernels/cokernels isomorphic to the generic
    ones, the componentwise characterization on every candidate pair, and the
    canonical pretorsion theory."""
    from .pretorsion import check_pretorsion, is_bihereditary
    from .report import Report

    rep = Report(f"Ses invariants on {C.name}")
    S = build_ses(C, N)
    SC, SN = S.category, S.ideal
    ok, missing = is_semiexact(SC, SN)
    rep.check("semiexact", ok, None, [f"{k} of {SC.mname(m)}" for k, m in missing] or None)
    for m in range(SC.n_morphisms):
        comp_null = all(x in N for x in S.triples[m])
        rep.check("componentwise-null", (m in SN) == comp_null, SC.mname(m))
    for m in range(SC.n_morphisms):
        k = ses_kernel_fast(S, m)
        g = generic_kernel_or_none(S, m)
        rep.check("fast-kernel", is_kernel_of(SC, SN, k, m), SC.mname(m), SC.mname(k))
        rep.check("fast-kernel-iso", g is not None and mediating_iso(SC, k, g) is not None, SC.mname(m))
        c = ses_cokernel_fast(S, m)
        g = generic_cokernel_or_none(S, m)
        rep.check("fast-cokernel", is_cokernel_of(SC, SN, c, m), SC.mname(m), SC.mname(c))
        rep.check("fast-cokernel-iso", g is not None and comediating_iso(SC, c, g) is not None, SC.mname(m))
    for m in range(SC.n_morphisms):
        for k in SC.into(SC.dom[m]):
            same = is_kernel_of(SC, SN, k, m) == is_ses_kernel_componentwise(S, k, m)
            rep.check("kernel-characterization", same, f"{SC.mname(k)} / {SC.mname(m)}")
        for c in SC.outof(SC.cod[m]):
            same = is_cokernel_of(SC, SN, c, m) == is_ses_cokernel_componentwise(S, c, m)
            rep.check("cokernel-characterization", same, f"{SC.mname(c)} / {SC.mname(m)}")
    P = canonical_pretorsion(S)
    prep = check_pretorsion(SC, P.torsion, P.free)
    rep.check("canonical-pretorsion", prep.ok, None, None if prep.ok else prep.as_dict(SC))
    rep.check("canonical-bihereditary", prep.ok and is_bihereditary(SC, P.torsion, P.free))
    rep.info.update(objects=S.n_objects, morphisms=S.n_morphisms, null_morphisms=len(SN))
    return rep
