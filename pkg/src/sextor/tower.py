"""Lazy towers Ses(C), Ses(Ses(C)), ... built on demand.

Eager construction of Ses^k(C) is only feasible for small k (Ses^3 of PS3
would have millions of morphisms).  The comonad checks only ever touch a
handful of objects per level, so here each level interns objects and
morphisms as they are produced.  Everything a level needs from the level
below (kernels, cokernels, factorizations, short exactness) is computed
componentwise:

* a triple ``(u, v, w)`` is the kernel of ``(u', v', w')`` iff ``u`` and ``v``
  are kernels of ``u'`` and ``v'`` (cokernels dually, on ``v`` and ``w``);
* the canonical kernel of ``(u', v', w')`` is ``(ker u', ker v', w)`` sitting
  over ``K(u') -> K(v') -> C(f)``;
* a triple is null iff all three components are null.

Level 0 wraps a ``FinCategory`` with its ideal and defers to the exhaustive
searches in :mod:`sextor.exactness`.
"""
from __future__ import annotations

from typing import Callable

from . import exactness as ex
from .category import FinCategory
from .ideal import Ideal


class NotShortExact(ValueError):
    pass


class NotAMorphism(ValueError):
    pass


class Level0:
    """A base category with its ideal, behind the level interface."""

    depth = 0

    def __init__(self, C: FinCategory, N: Ideal):
        self.C = C
        self.N = N
        self._ses: "LazySes | None" = None
        self.memo: dict = {}

    def __repr__(self) -> str:
        return f"Level0({self.C.name})"

    @property
    def name(self) -> str:
        return self.C.name

    def dom(self, m: int) -> int:
        return self.C.dom[m]

    def cod(self, m: int) -> int:
        return self.C.cod[m]

    def id(self, x: int) -> int:
        return self.C.id(x)

    def compose(self, g: int, f: int) -> int:
        return self.C.compose(g, f)

    def chain(self, *ms: int) -> int:
        return self.C.chain(*ms)

    def is_iso(self, m: int) -> bool:
        return self.C.is_iso(m)

    def inverse(self, m: int) -> int:
        inv = self.C.inverse(m)
        if inv is None:
            raise NotAMorphism(f"{self.C.mname(m)} is not invertible")
        return inv

    def is_null(self, m: int) -> bool:
        return m in self.N

    def is_identity(self, m: int) -> bool:
        return self.C.is_identity(m)

    def ker(self, m: int) -> int:
        return ex.ker(self.C, self.N, m)

    def coker(self, m: int) -> int:
        return ex.coker(self.C, self.N, m)

    def lift(self, k: int, q: int) -> int:
        return ex.lift(self.C, k, q)

    def extend(self, c: int, q: int) -> int:
        return ex.extend(self.C, c, q)

    def is_kernel_of(self, k: int, m: int) -> bool:
        return ex.is_kernel_of(self.C, self.N, k, m)

    def is_cokernel_of(self, c: int, m: int) -> bool:
        return ex.is_cokernel_of(self.C, self.N, c, m)

    def is_short_exact(self, f: int, g: int) -> bool:
        return ex.is_short_exact(self.C, self.N, f, g)

    def exact_replacement(self, f: int, g: int) -> tuple[int, int]:
        rep = ex.exact_data(self.C, self.N, f, g).replacement
        return rep.f, rep.g

    def oname(self, x: int) -> str:
        return self.C.oname(x)

    def mname(self, m: int) -> str:
        return self.C.mname(m)

    def leaves(self, m: int):
        return m

    def ses(self) -> "LazySes":
        if self._ses is None:
            self._ses = LazySes(self)
        return self._ses


class LazySes:
    """Ses of ``base`` with interned objects ``(f, g)`` and morphisms
    ``(src, tgt, u, v, w)``.  Ids are ints in creation order."""

    def __init__(self, base):
        self.base = base
        self.depth = base.depth + 1
        self._legs: list[tuple[int, int]] = []
        self._oidx: dict[tuple[int, int], int] = {}
        self._mors: list[tuple[int, int, int, int, int]] = []
        self._midx: dict[tuple[int, int, int, int, int], int] = {}
        self._comp: dict[tuple[int, int], int] = {}
        self._ker: dict[int, int] = {}
        self._coker: dict[int, int] = {}
        self._ses: "LazySes | None" = None
        self.memo: dict = {}

    def __repr__(self) -> str:
        return f"LazySes({self.base!r})"

    @property
    def name(self) -> str:
        return f"Ses({self.base.name})"

    def ses(self) -> "LazySes":
        if self._ses is None:
            self._ses = LazySes(self)
        return self._ses

    # -- interning ------------------------------------------------------

    def obj(self, f: int, g: int, *, check: bool = True) -> int:
        key = (f, g)
        hit = self._oidx.get(key)
        if hit is not None:
            return hit
        if check and not self.base.is_short_exact(f, g):
            raise NotShortExact(f"{self.base.mname(f)} ; {self.base.mname(g)} is not short exact")
        self._legs.append(key)
        self._oidx[key] = len(self._legs) - 1
        return len(self._legs) - 1

    def mor(self, s: int, t: int, u: int, v: int, w: int) -> int:
        key = (s, t, u, v, w)
        hit = self._midx.get(key)
        if hit is not None:
            return hit
        B = self.base
        f, g = self._legs[s]
        f2, g2 = self._legs[t]
        if (B.dom(u), B.cod(u)) != (B.dom(f), B.dom(f2)) or (B.dom(v), B.cod(v)) != (B.cod(f), B.cod(f2)) or (
            B.dom(w),
            B.cod(w),
        ) != (B.cod(g), B.cod(g2)):
            raise NotAMorphism("triple has the wrong type")
        if B.compose(f2, u) != B.compose(v, f) or B.compose(g2, v) != B.compose(w, g):
            raise NotAMorphism(f"triple ({B.mname(u)}, {B.mname(v)}, {B.mname(w)}) does not commute")
        self._mors.append(key)
        self._midx[key] = len(self._mors) - 1
        return len(self._mors) - 1

    def has_obj(self, f: int, g: int) -> bool:
        return (f, g) in self._oidx or self.base.is_short_exact(f, g)

    # -- structure ------------------------------------------------------

    def legs(self, x: int) -> tuple[int, int]:
        return self._legs[x]

    def triple(self, m: int) -> tuple[int, int, int]:
        return self._mors[m][2:]

    def rows(self, x: int) -> tuple[int, int, int]:
        f, g = self._legs[x]
        return self.base.dom(f), self.base.cod(f), self.base.cod(g)

    def middle(self, x: int) -> int:
        return self.base.cod(self._legs[x][0])

    def dom(self, m: int) -> int:
        return self._mors[m][0]

    def cod(self, m: int) -> int:
        return self._mors[m][1]

    def id(self, x: int) -> int:
        B = self.base
        X, Y, Z = self.rows(x)
        return self.mor(x, x, B.id(X), B.id(Y), B.id(Z))

    def is_identity(self, m: int) -> bool:
        s, t, *_ = self._mors[m]
        return s == t and m == self.id(s)

    def compose(self, g: int, f: int) -> int:
        key = (g, f)
        hit = self._comp.get(key)
        if hit is not None:
            return hit
        s1, t1, u1, v1, w1 = self._mors[f]
        s2, t2, u2, v2, w2 = self._mors[g]
        if t1 != s2:
            raise NotAMorphism("not composable")
        B = self.base
        h = self.mor(s1, t2, B.compose(u2, u1), B.compose(v2, v1), B.compose(w2, w1))
        self._comp[key] = h
        return h

    def chain(self, *ms: int) -> int:
        out = ms[-1]
        for m in reversed(ms[:-1]):
            out = self.compose(m, out)
        return out

    def is_iso(self, m: int) -> bool:
        return all(self.base.is_iso(c) for c in self.triple(m))

    def inverse(self, m: int) -> int:
        s, t, u, v, w = self._mors[m]
        B = self.base
        return self.mor(t, s, B.inverse(u), B.inverse(v), B.inverse(w))

    def is_null(self, m: int) -> bool:
        return all(self.base.is_null(c) for c in self.triple(m))

    # -- kernels and factorizations ---------------------------------------

    def ker(self, m: int) -> int:
        if m in self._ker:
            return self._ker[m]
        B = self.base
        u1, v1, _ = self.triple(m)
        f1, g1 = self._legs[self.dom(m)]
        ku = B.ker(u1)
        kv = B.ker(v1)
        f = B.lift(kv, B.compose(f1, ku))
        cf = B.coker(f)
        w = B.extend(cf, B.compose(g1, kv))
        k = self.mor(self.obj(f, cf), self.dom(m), ku, kv, w)
        self._ker[m] = k
        return k

    def coker(self, m: int) -> int:
        if m in self._coker:
            return self._coker[m]
        B = self.base
        _, v, w = self.triple(m)
        f2, g2 = self._legs[self.cod(m)]
        cv = B.coker(v)
        cw = B.coker(w)
        g = B.extend(cv, B.compose(cw, g2))
        kg = B.ker(g)
        u = B.lift(kg, B.compose(cv, f2))
        c = self.mor(self.cod(m), self.obj(kg, g), u, cv, cw)
        self._coker[m] = c
        return c

    def lift(self, k: int, q: int) -> int:
        """The ``x`` with ``k . x == q``, assembled from base factorizations."""
        B = self.base
        ku, kv, _ = self.triple(k)
        qu, qv, _ = self.triple(q)
        W, E = self.dom(q), self.dom(k)
        x1 = B.lift(ku, qu)
        x2 = B.lift(kv, qv)
        x3 = B.extend(self._legs[W][1], B.compose(self._legs[E][1], x2))
        try:
            x = self.mor(W, E, x1, x2, x3)
        except NotAMorphism as err:
            raise ex.NotExact(str(err)) from None
        if self.compose(k, x) != q:
            raise ex.NotExact("factorization does not reproduce the morphism")
        return x

    def extend(self, c: int, q: int) -> int:
        B = self.base
        _, cv, cw = self.triple(c)
        _, qv, qw = self.triple(q)
        E2, V = self.cod(c), self.cod(q)
        y2 = B.extend(cv, qv)
        y3 = B.extend(cw, qw)
        y1 = B.lift(self._legs[V][0], B.compose(y2, self._legs[E2][0]))
        try:
            y = self.mor(E2, V, y1, y2, y3)
        except NotAMorphism as err:
            raise ex.NotExact(str(err)) from None
        if self.compose(y, c) != q:
            raise ex.NotExact("extension does not reproduce the morphism")
        return y

    def is_kernel_of(self, k: int, m: int) -> bool:
        if self.cod(k) != self.dom(m):
            return False
        (ku, kv, _), (u, v, _) = self.triple(k), self.triple(m)
        return self.base.is_kernel_of(ku, u) and self.base.is_kernel_of(kv, v)

    def is_cokernel_of(self, c: int, m: int) -> bool:
        if self.dom(c) != self.cod(m):
            return False
        (_, cv, cw), (_, v, w) = self.triple(c), self.triple(m)
        return self.base.is_cokernel_of(cv, v) and self.base.is_cokernel_of(cw, w)

    def is_short_exact(self, a: int, b: int) -> bool:
        if self.cod(a) != self.dom(b):
            return False
        (au, av, aw), (bu, bv, bw) = self.triple(a), self.triple(b)
        B = self.base
        return B.is_short_exact(av, bv) and B.is_kernel_of(au, bu) and B.is_cokernel_of(bw, aw)

    def exact_replacement(self, f: int, g: int) -> tuple[int, int]:
        """Short exact replacement; a short exact pair is its own replacement.

        Reflection of null morphisms is tested through kernel nullity, which
        is equivalent in a semiexact setting."""
        if self.cod(f) != self.dom(g):
            raise ValueError("pair is not composable")
        if not self.is_null(self.compose(g, f)):
            raise ex.NotNullComposite("composite is not null")
        if self.is_short_exact(f, g):
            return f, g
        kg, cf = self.ker(g), self.coker(f)
        if not self.is_short_exact(kg, cf):
            raise ex.NotExact("kernel/cokernel pair is not short exact")
        xi1, xi2 = self.lift(kg, f), self.extend(cf, g)
        if not self.is_null(self.id(self.cod(self.coker(xi1)))):
            raise ex.NotExact("first comparison does not coreflect null morphisms")
        if not self.is_null(self.id(self.dom(self.ker(xi2)))):
            raise ex.NotExact("second comparison does not reflect null morphisms")
        return kg, cf

    # -- names and flattening ---------------------------------------------

    def oname(self, x: int) -> str:
        f, g = self._legs[x]
        return f"<{self.base.mname(f)}|{self.base.mname(g)}>"

    def mname(self, m: int) -> str:
        return "<" + "|".join(self.base.mname(c) for c in self.triple(m)) + ">"

    def leaves(self, m: int):
        """Nested component tuple down to base morphism ids."""
        return tuple(self.base.leaves(c) for c in self.triple(m))


def level_chain(top) -> list:
    out = [top]
    while out[-1].depth > 0:
        out.append(out[-1].base)
    return out


def base_of(L) -> Level0:
    return level_chain(L)[-1]


def mediating(L: LazySes, s: int, t: int, v: int) -> int:
    """The morphism ``s -> t`` with middle component ``v``, outer components
    induced through the kernel leg of ``t`` and the cokernel leg of ``s``."""
    B = L.base
    f, g = L.legs(s)
    f2, g2 = L.legs(t)
    u = B.lift(f2, B.compose(v, f))
    w = B.extend(g, B.compose(g2, v))
    return L.mor(s, t, u, v, w)


def grid_legs(L: LazySes, e: int) -> tuple[int, int]:
    """``(id_X, coker id_X) -> e -> (ker id_Z, id_Z)`` as two morphisms of ``L``."""
    B = L.base
    f, g = L.legs(e)
    X, _, Z = L.rows(e)
    gf = B.compose(g, f)
    cx = B.coker(B.id(X))
    kz = B.ker(B.id(Z))
    w = B.extend(cx, gf)
    u = B.lift(kz, gf)
    top = L.obj(B.id(X), cx)
    bottom = L.obj(kz, B.id(Z))
    return L.mor(top, e, B.id(X), f, w), L.mor(e, bottom, u, g, B.id(Z))


# -- bridging eager Ses categories -----------------------------------------


def embed_obj(L, cat: FinCategory, x: int) -> int:
    """Map an object of an eagerly built tower category into the lazy level."""
    if L.depth == 0:
        return x
    S = cat.cache["ses-structure"]
    f, g = S.legs[x]
    return L.obj(embed_mor(L.base, S.base, f), embed_mor(L.base, S.base, g), check=False)


def embed_mor(L, cat: FinCategory, m: int) -> int:
    if L.depth == 0:
        return m
    S = cat.cache["ses-structure"]
    u, v, w = S.triples[m]
    s, t = cat.dom[m], cat.cod[m]
    return L.mor(
        embed_obj(L, cat, s),
        embed_obj(L, cat, t),
        embed_mor(L.base, S.base, u),
        embed_mor(L.base, S.base, v),
        embed_mor(L.base, S.base, w),
    )


def extract_obj(L, cat: FinCategory, x: int) -> int:
    """Inverse of :func:`embed_obj`; ``KeyError`` if absent from the eager build."""
    if L.depth == 0:
        return x
    S = cat.cache["ses-structure"]
    f, g = L.legs(x)
    return S.obj(extract_mor(L.base, S.base, f), extract_mor(L.base, S.base, g))


def extract_mor(L, cat: FinCategory, m: int) -> int:
    if L.depth == 0:
        return m
    S = cat.cache["ses-structure"]
    u, v, w = L.triple(m)
    return S.mor(
        extract_obj(L, cat, L.dom(m)),
        extract_obj(L, cat, L.cod(m)),
        extract_mor(L.base, S.base, u),
        extract_mor(L.base, S.base, v),
        extract_mor(L.base, S.base, w),
    )


class LFunctor:
    """A functor between levels given by memoized object/morphism rules."""

    def __init__(self, src, tgt, on_obj: Callable[[int], int], on_mor: Callable[[int], int], name: str = "F"):
        self.src = src
        self.tgt = tgt
        self._on_obj = on_obj
        self._on_mor = on_mor
        self.name = name
        self._om: dict[int, int] = {}
        self._mm: dict[int, int] = {}
        self.memo: dict = {}

    def ob(self, x: int) -> int:
        if x not in self._om:
            self._om[x] = self._on_obj(x)
        return self._om[x]

    def __call__(self, m: int) -> int:
        if m not in self._mm:
            self._mm[m] = self._on_mor(m)
        return self._mm[m]

    def __repr__(self) -> str:
        return f"LFunctor({self.name})"


def lcompose(H: LFunctor, G: LFunctor) -> LFunctor:
    return LFunctor(G.src, H.tgt, lambda x: H.ob(G.ob(x)), lambda m: H(G(m)), name=f"{H.name}.{G.name}")


def lidentity(L) -> LFunctor:
    return LFunctor(L, L, lambda x: x, lambda m: m, name="Id")


def from_fin_functor(G, src: Level0, tgt: Level0) -> LFunctor:
    return LFunctor(src, tgt, G.on_object, G.__call__, name=G.name)


def level0(C: FinCategory, N: Ideal) -> Level0:
    """The shared level-0 wrapper for ``(C, N)``, so lazy towers are reused."""
    hit = N.cache.get("level0")
    if hit is None:
        hit = N.cache["level0"] = Level0(C, N)
    return hit


def positions(L, m: int, prefix: tuple = ()):
    """``(position, base morphism)`` pairs of a nested morphism, positions 1-based
    and outermost first."""
    if L.depth == 0:
        yield prefix, m
        return
    for i, c in enumerate(L.triple(m), 1):
        yield from positions(L.base, c, prefix + (i,))
