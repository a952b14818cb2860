"""Finite categories, functors and natural transformations as explicit tables.

Objects and morphisms are addressed by integer index; the index order is the
declaration order and is the canonical order used by every "minimal choice"
elsewhere in the package.  Names are kept for I/O and reports.
"""
from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Mapping, Sequence


class CategoryError(ValueError):
    """Raised when a table does not describe a category at all."""


@dataclass
class Violation:
    law: str
    witness: tuple
    detail: str = ""

    def as_dict(self) -> dict:
        return {"law": self.law, "witness": list(self.witness), "detail": self.detail}


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, law: str, *witness, detail: str = "") -> None:
        self.violations.append(Violation(law, tuple(witness), detail))

    def laws(self) -> set[str]:
        return {v.law for v in self.violations}

    def as_dict(self) -> dict:
        return {"ok": self.ok, "violations": [v.as_dict() for v in self.violations]}


class FinCategory:
    """A finite category with a total composition table.

    ``comp`` maps ``(g, f)`` to ``g . f`` for every composable pair.  Instead
    of a table, a ``composer`` callable may be supplied; results are memoized.
    Constructed categories (``Ses`` towers) use the lazy form since their
    tables would be large and are mostly never consulted.
    """

    def __init__(
        self,
        name: str,
        objects: Sequence[str],
        morphisms: Sequence[str],
        dom: Sequence[int],
        cod: Sequence[int],
        identity: Sequence[int],
        comp: Mapping[tuple[int, int], int] | None = None,
        composer: Callable[[int, int], int] | None = None,
    ):
        if (comp is None) == (composer is None):
            raise CategoryError("exactly one of comp / composer must be given")
        self.name = name
        self.objects = tuple(objects)
        self.morphisms = tuple(morphisms)
        self.dom = tuple(dom)
        self.cod = tuple(cod)
        self.identity = tuple(identity)
        if len(self.dom) != len(self.morphisms) or len(self.cod) != len(self.morphisms):
            raise CategoryError("dom/cod length mismatch")
        if len(self.identity) != len(self.objects):
            raise CategoryError("identity must be total on objects")
        self._obj_index = _index(self.objects, "object")
        self._mor_index = _index(self.morphisms, "morphism")
        self._comp = dict(comp) if comp is not None else {}
        self._composer = composer
        self._hom: dict[tuple[int, int], list[int]] = {}
        self._into: list[list[int]] = [[] for _ in self.objects]
        self._outof: list[list[int]] = [[] for _ in self.objects]
        for m, (a, b) in enumerate(zip(self.dom, self.cod)):
            self._hom.setdefault((a, b), []).append(m)
            self._into[b].append(m)
            self._outof[a].append(m)
        self._is_identity = [False] * len(self.morphisms)
        for x in self.identity:
            self._is_identity[x] = True
        self._inverse: dict[int, int | None] = {}
        # memo for derived data (pretorsion ideals, enumerations); never part of equality
        self.cache: dict = {}

    # -- lookup ---------------------------------------------------------

    def ob(self, x: int | str) -> int:
        if isinstance(x, str):
            try:
                return self._obj_index[x]
            except KeyError:
                raise KeyError(f"unknown object {x!r} in {self.name}") from None
        return x

    def mor(self, x: int | str) -> int:
        if isinstance(x, str):
            try:
                return self._mor_index[x]
            except KeyError:
                raise KeyError(f"unknown morphism {x!r} in {self.name}") from None
        return x

    def obs(self, xs: Iterable[int | str]) -> frozenset[int]:
        return frozenset(self.ob(x) for x in xs)

    def mors(self, xs: Iterable[int | str]) -> frozenset[int]:
        return frozenset(self.mor(x) for x in xs)

    def has_object(self, name: str) -> bool:
        return name in self._obj_index

    def has_morphism(self, name: str) -> bool:
        return name in self._mor_index

    def oname(self, a: int) -> str:
        return self.objects[a]

    def mname(self, m: int) -> str:
        return self.morphisms[m]

    @property
    def n_objects(self) -> int:
        return len(self.objects)

    @property
    def n_morphisms(self) -> int:
        return len(self.morphisms)

    def hom(self, a: int, b: int) -> list[int]:
        return self._hom.get((a, b), [])

    def into(self, b: int) -> list[int]:
        return self._into[b]

    def outof(self, a: int) -> list[int]:
        return self._outof[a]

    def id(self, a: int) -> int:
        return self.identity[a]

    def is_identity(self, m: int) -> bool:
        return self._is_identity[m]

    # -- composition ----------------------------------------------------

    def compose(self, g: int, f: int) -> int:
        """``g . f``; raises if the pair is not composable."""
        key = (g, f)
        try:
            return self._comp[key]
        except KeyError:
            pass
        if self.cod[f] != self.dom[g]:
            raise CategoryError(
                f"{self.mname(g)} . {self.mname(f)} is not composable in {self.name}"
            )
        if self._composer is None:
            raise CategoryError(f"composition {self.mname(g)} . {self.mname(f)} undefined")
        h = self._composer(g, f)
        self._comp[key] = h
        return h

    def chain(self, *ms: int) -> int:
        """Compose right-to-left: ``chain(h, g, f) == h . g . f``."""
        out = ms[-1]
        for m in reversed(ms[:-1]):
            out = self.compose(m, out)
        return out

    def composable_pairs(self) -> Iterator[tuple[int, int]]:
        """All ``(f, g)`` with ``cod f == dom g``, ordered by middle object."""
        for y in range(self.n_objects):
            for f in self._into[y]:
                for g in self._outof[y]:
                    yield f, g

    # -- derived notions ------------------------------------------------

    def inverse(self, m: int) -> int | None:
        if m not in self._inverse:
            a, b = self.dom[m], self.cod[m]
            inv = None
            for x in self.hom(b, a):
                if self.compose(x, m) == self.identity[a] and self.compose(m, x) == self.identity[b]:
                    inv = x
                    break
            self._inverse[m] = inv
        return self._inverse[m]

    def is_iso(self, m: int) -> bool:
        return self.inverse(m) is not None

    def isomorphic(self, a: int, b: int) -> bool:
        return any(self.is_iso(m) for m in self.hom(a, b))

    def iso_classes(self) -> list[frozenset[int]]:
        seen: set[int] = set()
        classes = []
        for a in range(self.n_objects):
            if a in seen:
                continue
            cls = frozenset(b for b in range(self.n_objects) if b == a or self.isomorphic(a, b))
            seen |= cls
            classes.append(cls)
        return classes

    def is_mono(self, m: int) -> bool:
        a = self.dom[m]
        for x in range(self.n_objects):
            images = [self.compose(m, h) for h in self.hom(x, a)]
            if len(set(images)) != len(images):
                return False
        return True

    def is_epi(self, m: int) -> bool:
        b = self.cod[m]
        for x in range(self.n_objects):
            images = [self.compose(h, m) for h in self.hom(b, x)]
            if len(set(images)) != len(images):
                return False
        return True

    def full_table(self) -> dict[tuple[int, int], int]:
        """Force and return the whole composition table."""
        for f, g in self.composable_pairs():
            self.compose(g, f)
        return {k: v for k, v in self._comp.items()}

    def fingerprint(self) -> str:
        h = hashlib.sha256()
        h.update(repr((self.objects, self.morphisms, self.dom, self.cod, self.identity)).encode())
        for f, g in self.composable_pairs():
            h.update(b"%d,%d,%d;" % (g, f, self.compose(g, f)))
        return h.hexdigest()

    def full_subcategory(self, objs: Iterable[int], name: str | None = None) -> tuple["FinCategory", list[int], list[int]]:
        """Full subcategory on ``objs``; also returns object and morphism embeddings."""
        keep = sorted(set(objs))
        omap = {a: i for i, a in enumerate(keep)}
        mors = [m for m in range(self.n_morphisms) if self.dom[m] in omap and self.cod[m] in omap]
        mmap = {m: i for i, m in enumerate(mors)}
        comp = {}
        for f in mors:
            for g in mors:
                if self.cod[f] == self.dom[g]:
                    comp[(mmap[g], mmap[f])] = mmap[self.compose(g, f)]
        sub = FinCategory(
            name or f"{self.name}|sub",
            [self.objects[a] for a in keep],
            [self.morphisms[m] for m in mors],
            [omap[self.dom[m]] for m in mors],
            [omap[self.cod[m]] for m in mors],
            [mmap[self.identity[a]] for a in keep],
            comp=comp,
        )
        return sub, keep, mors

    def __repr__(self) -> str:
        return f"FinCategory({self.name!r}, {self.n_objects} objects, {self.n_morphisms} morphisms)"


def _index(names: Sequence[str], kind: str) -> dict[str, int]:
    out: dict[str, int] = {}
    for i, n in enumerate(names):
        if n in out:
            raise CategoryError(f"duplicate {kind} identifier {n!r}")
        out[n] = i
    return out


def validate_category(C: FinCategory) -> ValidationReport:
    """Check identities, unit laws, totality and associativity exhaustively."""
    rep = ValidationReport()
    n = C.n_morphisms
    for a, e in enumerate(C.identity):
        if not 0 <= e < n:
            rep.add("identity-range", C.oname(a))
            continue
        if C.dom[e] != a or C.cod[e] != a:
            rep.add("identity-type", C.oname(a), C.mname(e))
    for m in range(n):
        if not (0 <= C.dom[m] < C.n_objects and 0 <= C.cod[m] < C.n_objects):
            rep.add("dom-cod-range", C.mname(m))
    if not rep.ok:
        return rep

    table: dict[tuple[int, int], int] = {}
    for f, g in C.composable_pairs():
        try:
            h = C.compose(g, f)
        except CategoryError:
            rep.add("totality", C.mname(g), C.mname(f), detail="missing composite")
            continue
        if not 0 <= h < n:
            rep.add("totality", C.mname(g), C.mname(f), detail="composite out of range")
            continue
        if C.dom[h] != C.dom[f] or C.cod[h] != C.cod[g]:
            rep.add("composite-type", C.mname(g), C.mname(f), C.mname(h))
        table[(g, f)] = h
    if C._composer is None:
        for (g, f) in C._comp:
            if not (0 <= f < n and 0 <= g < n) or C.cod[f] != C.dom[g]:
                rep.add("spurious-composite", _safe(C, g), _safe(C, f))
    for f in range(n):
        left = table.get((C.identity[C.cod[f]], f))
        right = table.get((f, C.identity[C.dom[f]]))
        if left is not None and left != f:
            rep.add("left-unit", C.mname(C.identity[C.cod[f]]), C.mname(f), detail=f"gives {C.mname(left)}")
        if right is not None and right != f:
            rep.add("right-unit", C.mname(f), C.mname(C.identity[C.dom[f]]), detail=f"gives {C.mname(right)}")
    for (g, f), gf in table.items():
        for h in C.outof(C.cod[g]):
            hg = table.get((h, g))
            if hg is None:
                continue
            lhs = table.get((h, gf))
            rhs = table.get((hg, f))
            if lhs is not None and rhs is not None and lhs != rhs:
                rep.add("associativity", C.mname(h), C.mname(g), C.mname(f))
    return rep


def _safe(C: FinCategory, m: int) -> str:
    return C.mname(m) if 0 <= m < C.n_morphisms else str(m)


# -- functors and natural transformations --------------------------------


@dataclass(frozen=True)
class FinFunctor:
    source: FinCategory
    target: FinCategory
    obj_map: tuple[int, ...]
    mor_map: tuple[int, ...]
    name: str = "F"

    def __call__(self, m: int) -> int:
        return self.mor_map[m]

    def on_object(self, a: int) -> int:
        return self.obj_map[a]

    def same_as(self, other: "FinFunctor") -> bool:
        """On-the-nose equality of object and morphism tables."""
        return (
            self.source is other.source
            and self.target is other.target
            and self.obj_map == other.obj_map
            and self.mor_map == other.mor_map
        )


def identity_functor(C: FinCategory) -> FinFunctor:
    return FinFunctor(C, C, tuple(range(C.n_objects)), tuple(range(C.n_morphisms)), name=f"Id[{C.name}]")


def constant_functor(C: FinCategory, D: FinCategory, obj: int) -> FinFunctor:
    e = D.id(obj)
    return FinFunctor(C, D, (obj,) * C.n_objects, (e,) * C.n_morphisms, name=f"Const[{D.oname(obj)}]")


def compose_functors(H: FinFunctor, G: FinFunctor) -> FinFunctor:
    if G.target is not H.source:
        raise CategoryError("functors are not composable")
    return FinFunctor(
        G.source,
        H.target,
        tuple(H.obj_map[a] for a in G.obj_map),
        tuple(H.mor_map[m] for m in G.mor_map),
        name=f"{H.name}.{G.name}",
    )


def validate_functor(F: FinFunctor) -> ValidationReport:
    rep = ValidationReport()
    C, D = F.source, F.target
    if len(F.obj_map) != C.n_objects or len(F.mor_map) != C.n_morphisms:
        rep.add("totality", F.name, detail="maps are not total")
        return rep
    for m in range(C.n_morphisms):
        fm = F.mor_map[m]
        if D.dom[fm] != F.obj_map[C.dom[m]] or D.cod[fm] != F.obj_map[C.cod[m]]:
            rep.add("dom-cod", C.mname(m), D.mname(fm))
    if not rep.ok:
        return rep
    for a in range(C.n_objects):
        if F.mor_map[C.id(a)] != D.id(F.obj_map[a]):
            rep.add("identity", C.oname(a))
    for f, g in C.composable_pairs():
        if F.mor_map[C.compose(g, f)] != D.compose(F.mor_map[g], F.mor_map[f]):
            rep.add("composition", C.mname(g), C.mname(f))
    return rep


def all_functors(C: FinCategory, D: FinCategory) -> Iterator[FinFunctor]:
    """Enumerate every functor ``C -> D`` by backtracking over morphism images."""
    nC = C.n_morphisms
    order = sorted(range(nC), key=lambda m: (not C.is_identity(m), m))
    obj_map: list[int | None] = [None] * C.n_objects
    mor_map: list[int | None] = [None] * nC

    def consistent(m: int) -> bool:
        # check all composites among already-assigned morphisms involving m
        for f in C.into(C.dom[m]):
            if mor_map[f] is None:
                continue
            gf = C.compose(m, f)
            if mor_map[gf] is not None and mor_map[gf] != D.compose(mor_map[m], mor_map[f]):
                return False
        for g in C.outof(C.cod[m]):
            if mor_map[g] is None:
                continue
            gf = C.compose(g, m)
            if mor_map[gf] is not None and mor_map[gf] != D.compose(mor_map[g], mor_map[m]):
                return False
        for f in C.into(C.dom[m]):
            # m might itself be a composite of assigned morphisms
            for g in C.outof(C.cod[f]):
                if C.cod[g] != C.cod[m] or mor_map[f] is None or mor_map[g] is None:
                    continue
                if C.compose(g, f) == m and mor_map[m] != D.compose(mor_map[g], mor_map[f]):
                    return False
        return True

    def rec(k: int) -> Iterator[FinFunctor]:
        if k == nC:
            yield FinFunctor(C, D, tuple(obj_map), tuple(mor_map))  # type: ignore[arg-type]
            return
        m = order[k]
        if C.is_identity(m):
            a = C.dom[m]
            for b in range(D.n_objects):
                obj_map[a] = b
                mor_map[m] = D.id(b)
                yield from rec(k + 1)
            obj_map[a] = None
            mor_map[m] = None
            return
        for x in D.hom(obj_map[C.dom[m]], obj_map[C.cod[m]]):
            mor_map[m] = x
            if consistent(m):
                yield from rec(k + 1)
        mor_map[m] = None

    for F in rec(0):
        if validate_functor(F).ok:
            yield F


@dataclass(frozen=True)
class NatTrans:
    source: FinFunctor
    target: FinFunctor
    components: tuple[int, ...]
    name: str = "alpha"

    def __getitem__(self, a: int) -> int:
        return self.components[a]


def identity_nat(F: FinFunctor) -> NatTrans:
    D = F.target
    return NatTrans(F, F, tuple(D.id(b) for b in F.obj_map), name=f"id[{F.name}]")


def validate_nat(a: NatTrans) -> ValidationReport:
    rep = ValidationReport()
    G, H = a.source, a.target
    C, D = G.source, G.target
    if H.source is not C or H.target is not D:
        rep.add("parallel", G.name, H.name)
        return rep
    if len(a.components) != C.n_objects:
        rep.add("totality", a.name)
        return rep
    for x in range(C.n_objects):
        c = a.components[x]
        if D.dom[c] != G.obj_map[x] or D.cod[c] != H.obj_map[x]:
            rep.add("component-type", C.oname(x), D.mname(c))
    if not rep.ok:
        return rep
    for m in range(C.n_morphisms):
        x, y = C.dom[m], C.cod[m]
        lhs = D.compose(a.components[y], G.mor_map[m])
        rhs = D.compose(H.mor_map[m], a.components[x])
        if lhs != rhs:
            rep.add("naturality", C.mname(m), detail=f"{D.mname(lhs)} != {D.mname(rhs)}")
    return rep


def all_nat_trans(G: FinFunctor, H: FinFunctor) -> Iterator[NatTrans]:
    C, D = G.source, G.target
    choices = [D.hom(G.obj_map[x], H.obj_map[x]) for x in range(C.n_objects)]
    for comps in itertools.product(*choices):
        a = NatTrans(G, H, tuple(comps))
        if validate_nat(a).ok:
            yield a


# -- fixtures -------------------------------------------------------------


def build_chain(n: int) -> FinCategory:
    """The chain ``1 <= 2 <= ... <= n`` as a thin category."""
    if n < 1:
        raise ValueError("chain length must be positive")
    objects = [str(i) for i in range(1, n + 1)]
    pairs = [(i, i) for i in range(n)] + [(i, j) for i in range(n) for j in range(i + 1, n)]
    names = [f"id{i + 1}" if i == j else f"{i + 1}<{j + 1}" for i, j in pairs]
    index = {p: k for k, p in enumerate(pairs)}
    comp = {}
    for (i, j), f in index.items():
        for (j2, k), g in index.items():
            if j == j2:
                comp[(g, f)] = index[(i, k)]
    return FinCategory(
        f"CH({n})",
        objects,
        names,
        [i for i, _ in pairs],
        [j for _, j in pairs],
        [index[(i, i)] for i in range(n)],
        comp=comp,
    )


_SPECIAL_POINTED = {(1, 2, ()): "i", (2, 1, (0,)): "r", (2, 2, (0,)): "c"}


def build_pointed_sets(max_size: int) -> FinCategory:
    """Skeleton of pointed sets ``P1..Pk`` (``Pa = {0..a-1}``, basepoint 0).

    A morphism ``Pa -> Pb`` is recorded by the images of ``1..a-1``.
    """
    if not 1 <= max_size <= 4:
        raise ValueError("max_size must be between 1 and 4")
    sizes = range(1, max_size + 1)
    maps: list[tuple[int, int, tuple[int, ...]]] = []
    for a in sizes:
        maps.append((a, a, tuple(range(1, a))))
    others = []
    for a in sizes:
        for b in sizes:
            for img in itertools.product(range(b), repeat=a - 1):
                if a == b and img == tuple(range(1, a)):
                    continue
                others.append((a, b, img))
    maps.extend(others)

    def name(a, b, img):
        if a == b and img == tuple(range(1, a)):
            return f"id{a}"
        if (a, b, img) in _SPECIAL_POINTED:
            return _SPECIAL_POINTED[(a, b, img)]
        return f"m{a}{b}" + ("_" + "".join(map(str, img)) if img else "")

    index = {m: k for k, m in enumerate(maps)}
    comp = {}
    for f in maps:
        for g in maps:
            if f[1] != g[0]:
                continue
            a, _, fi = f
            _, c, gi = g
            full_g = (0,) + gi
            img = tuple(full_g[x] for x in fi)
            comp[(index[g], index[f])] = index[(a, c, img)]
    return FinCategory(
        f"PS{max_size}",
        [f"P{a}" for a in sizes],
        [name(*m) for m in maps],
        [a - 1 for a, _, _ in maps],
        [b - 1 for _, b, _ in maps],
        list(range(max_size)),
        comp=comp,
    )
