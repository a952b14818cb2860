"""Pretorsion theories: axiom checks, torsion assignments, hereditarity,
rectangularity and exhaustive enumeration."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable

from .category import FinCategory
from .exactness import NoCokernel, NoKernel, cokernel, is_cokernel_of, is_kernel_of, is_semiexact, kernel, lift, extend, short_exact_sequences
from .ideal import Ideal, ideal_from_objects, is_closed, is_ideal


def theory_ideal(C: FinCategory, Z: Iterable[int]) -> Ideal:
    """Ideal of morphisms factoring through ``Z``; one instance per ``(C, Z)``."""
    Z = frozenset(Z)
    key = ("theory-ideal", Z)
    if key not in C.cache:
        C.cache[key] = ideal_from_objects(C, Z)
    return C.cache[key]


def _ses_by_middle(C: FinCategory, N: Ideal) -> dict[int, list[tuple[int, int]]]:
    key = ("ses-by-middle",)
    if key not in N.cache:
        out: dict[int, list[tuple[int, int]]] = {}
        for f, g in short_exact_sequences(C, N):
            out.setdefault(C.cod[f], []).append((f, g))
        N.cache[key] = out
    return N.cache[key]


def is_iso_closed(C: FinCategory, objs: frozenset[int]) -> bool:
    return all(b in objs for a in objs for b in range(C.n_objects) if C.isomorphic(a, b))


@dataclass
class PretorsionReport:
    torsion: frozenset[int]
    free: frozenset[int]
    iso_closed: bool = True
    closed: bool = True
    t1_failures: list[int] = field(default_factory=list)
    t2_failures: list[int] = field(default_factory=list)
    semiexact: bool = True

    @property
    def t1(self) -> bool:
        return not self.t1_failures

    @property
    def t2(self) -> bool:
        return not self.t2_failures

    @property
    def ok(self) -> bool:
        return self.iso_closed and self.closed and self.t1 and self.t2

    def as_dict(self, C: FinCategory) -> dict:
        return {
            "T": [C.oname(a) for a in sorted(self.torsion)],
            "F": [C.oname(a) for a in sorted(self.free)],
            "iso_closed": self.iso_closed,
            "closed": self.closed,
            "t1": self.t1,
            "t1_failures": [C.mname(m) for m in self.t1_failures],
            "t2": self.t2,
            "t2_failures": [C.oname(a) for a in self.t2_failures],
            "semiexact": self.semiexact,
        }


def check_pretorsion(C: FinCategory, T: Iterable[int | str], F: Iterable[int | str], *, stop_early: bool = False) -> PretorsionReport:
    T, F = C.obs(T), C.obs(F)
    rep = PretorsionReport(T, F)
    rep.iso_closed = is_iso_closed(C, T) and is_iso_closed(C, F)
    N = theory_ideal(C, T & F)
    rep.closed = is_ideal(C, N)[0] and is_closed(C, N)[0]
    for a in sorted(T):
        for b in sorted(F):
            rep.t1_failures.extend(h for h in C.hom(a, b) if h not in N)
    if stop_early and rep.t1_failures:
        return rep
    by_middle = _ses_by_middle(C, N)
    for x in range(C.n_objects):
        if not any(C.dom[f] in T and C.cod[g] in F for f, g in by_middle.get(x, [])):
            rep.t2_failures.append(x)
            if stop_early:
                return rep
    rep.semiexact = is_semiexact(C, N)[0]
    return rep


@dataclass
class TorsionAssignment:
    """Chosen decomposition ``T_X --ell--> X --r--> F_X`` per object and the
    induced parts ``(h_T, h_F)`` per morphism."""

    category: FinCategory
    ideal: Ideal
    torsion: frozenset[int]
    free: frozenset[int]
    ell: list[int]
    r: list[int]
    h_t: list[int]
    h_f: list[int]

    def t_obj(self, x: int) -> int:
        return self.category.dom[self.ell[x]]

    def f_obj(self, x: int) -> int:
        return self.category.cod[self.r[x]]


def choose_sequences(C: FinCategory, T: frozenset[int], F: frozenset[int]) -> dict[int, tuple[int, int]]:
    """Minimal (in ``(ell, r)`` order) short exact T-F sequence per object."""
    N = theory_ideal(C, T & F)
    by_middle = _ses_by_middle(C, N)
    chosen = {}
    for x in range(C.n_objects):
        cands = [(f, g) for f, g in by_middle.get(x, []) if C.dom[f] in T and C.cod[g] in F]
        if not cands:
            raise ValueError(f"object {C.oname(x)} has no decomposition")
        chosen[x] = min(cands)
    return chosen


def torsion_assignment(
    C: FinCategory,
    T: Iterable[int | str],
    F: Iterable[int | str],
    chosen: dict[int, tuple[int, int]] | None = None,
) -> TorsionAssignment:
    T, F = C.obs(T), C.obs(F)
    N = theory_ideal(C, T & F)
    if chosen is None:
        chosen = choose_sequences(C, T, F)
    ell = [chosen[x][0] for x in range(C.n_objects)]
    r = [chosen[x][1] for x in range(C.n_objects)]
    h_t, h_f = [], []
    for h in range(C.n_morphisms):
        x, y = C.dom[h], C.cod[h]
        h_t.append(lift(C, ell[y], C.compose(h, ell[x])))
        h_f.append(extend(C, r[x], C.compose(r[y], h)))
    return TorsionAssignment(C, N, T, F, ell, r, h_t, h_f)


def assignment_functoriality_failures(A: TorsionAssignment) -> list[tuple[str, int, int]]:
    C = A.category
    bad = []
    for x in range(C.n_objects):
        e = C.id(x)
        if A.h_t[e] != C.id(A.t_obj(x)):
            bad.append(("identity-T", e, e))
        if A.h_f[e] != C.id(A.f_obj(x)):
            bad.append(("identity-F", e, e))
    for f, g in C.composable_pairs():
        gf = C.compose(g, f)
        if A.h_t[gf] != C.compose(A.h_t[g], A.h_t[f]):
            bad.append(("composite-T", g, f))
        if A.h_f[gf] != C.compose(A.h_f[g], A.h_f[f]):
            bad.append(("composite-F", g, f))
    return bad


def hereditary_failures(A: TorsionAssignment) -> list[int]:
    """Morphisms ``g`` whose canonical kernel has a torsion part that is not
    a kernel of ``g_T``."""
    C, N = A.category, A.ideal
    bad = []
    for g in range(C.n_morphisms):
        try:
            k = kernel(C, N, g).kernel
        except NoKernel:
            continue
        if not is_kernel_of(C, N, A.h_t[k], A.h_t[g]):
            bad.append(g)
    return bad


def cohereditary_failures(A: TorsionAssignment) -> list[int]:
    C, N = A.category, A.ideal
    bad = []
    for f in range(C.n_morphisms):
        try:
            c = cokernel(C, N, f).cokernel
        except NoCokernel:
            continue
        if not is_cokernel_of(C, N, A.h_f[c], A.h_f[f]):
            bad.append(f)
    return bad


def is_hereditary(C: FinCategory, T, F) -> bool:
    return not hereditary_failures(torsion_assignment(C, T, F))


def is_cohereditary(C: FinCategory, T, F) -> bool:
    return not cohereditary_failures(torsion_assignment(C, T, F))


def is_bihereditary(C: FinCategory, T, F) -> bool:
    A = torsion_assignment(C, T, F)
    return not hereditary_failures(A) and not cohereditary_failures(A)


def is_rectangular(C: FinCategory, T, F) -> bool:
    """Whether ``X -> (T_X, F_X)`` is an equivalence ``C -> T x F``."""
    A = torsion_assignment(C, T, F)
    T, F = A.torsion, A.free
    for a in T:
        for b in F:
            if not any(C.isomorphic(A.t_obj(x), a) and C.isomorphic(A.f_obj(x), b) for x in range(C.n_objects)):
                return False
    for x in range(C.n_objects):
        for y in range(C.n_objects):
            images = {(A.h_t[h], A.h_f[h]) for h in C.hom(x, y)}
            if len(images) != len(C.hom(x, y)):
                return False
            if len(images) != len(C.hom(A.t_obj(x), A.t_obj(y))) * len(C.hom(A.f_obj(x), A.f_obj(y))):
                return False
    return True


def _unions(classes: list[frozenset[int]]) -> list[frozenset[int]]:
    out = []
    for mask in range(1 << len(classes)):
        s: frozenset[int] = frozenset()
        for i, cls in enumerate(classes):
            if mask >> i & 1:
                s |= cls
        out.append(s)
    return out


def enumerate_pretorsion(C: FinCategory) -> list[tuple[frozenset[int], frozenset[int]]]:
    """Every pretorsion theory on ``C``, over iso-closed object sets.

    Candidates failing (T1) are discarded before the decomposition search.
    """
    key = ("pretorsion-theories",)
    if key in C.cache:
        return list(C.cache[key])
    subsets = _unions(C.iso_classes())
    found = []
    for T in subsets:
        for F in subsets:
            N = theory_ideal(C, T & F)
            if any(h not in N for a in T for b in F for h in C.hom(a, b)):
                continue
            by_middle = _ses_by_middle(C, N)
            if all(any(C.dom[f] in T and C.cod[g] in F for f, g in by_middle.get(x, [])) for x in range(C.n_objects)):
                found.append((T, F))
    found.sort(key=lambda p: (sorted(p[0]), sorted(p[1])))
    C.cache[key] = found
    return list(found)


def chain_characterization(n: int) -> list[tuple[frozenset[int], frozenset[int]]]:
    """Subset pairs of ``{1..n}`` satisfying the combinatorial description of
    pretorsion theories on a chain:

    * ``T | F`` is everything,
    * ``1 in T`` and ``n in F``,
    * ``i in T and i+1 in F`` forces ``i in F or i+1 in T``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    X = range(1, n + 1)
    out = []
    for tbits in itertools.product((False, True), repeat=n):
        T = frozenset(i for i, b in zip(X, tbits) if b)
        for fbits in itertools.product((False, True), repeat=n):
            F = frozenset(i for i, b in zip(X, fbits) if b)
            if T | F != frozenset(X) or 1 not in T or n not in F:
                continue
            if all(not (i in T and i + 1 in F) or (i in F or i + 1 in T) for i in range(1, n)):
                out.append((T, F))
    out.sort(key=lambda p: (sorted(p[0]), sorted(p[1])))
    return out


def labelled(C: FinCategory, theories) -> set[tuple[frozenset[str], frozenset[str]]]:
    return {(frozenset(C.oname(a) for a in T), frozenset(C.oname(a) for a in F)) for T, F in theories}
