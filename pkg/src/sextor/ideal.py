"""Ideals of null morphisms and the reflect/coreflect predicates."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .category import FinCategory


class IdealError(ValueError):
    pass


@dataclass(eq=False)
class Ideal:
    """A set of morphisms of ``category`` treated as null.

    ``witness`` records, for closed ideals, a factorization ``m = g . f``
    through a null object as the pair ``(f, g)``.
    """

    category: FinCategory
    members: frozenset[int]
    witness: dict[int, tuple[int, int]] = field(default_factory=dict)
    # memo for kernel/cokernel searches relative to this ideal
    cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        n = self.category.n_morphisms
        bad = [m for m in self.members if not 0 <= m < n]
        if bad:
            raise IdealError(f"unknown morphism ids {bad}")
        self._mask = [False] * n
        for m in self.members:
            self._mask[m] = True

    def __contains__(self, m: int) -> bool:
        return self._mask[m]

    def __len__(self) -> int:
        return len(self.members)

    def names(self) -> list[str]:
        return [self.category.mname(m) for m in sorted(self.members)]

    @classmethod
    def of(cls, C: FinCategory, members: Iterable[int | str]) -> "Ideal":
        return cls(C, C.mors(members))

    @classmethod
    def everything(cls, C: FinCategory) -> "Ideal":
        return cls(C, frozenset(range(C.n_morphisms)))

    @classmethod
    def empty(cls, C: FinCategory) -> "Ideal":
        return cls(C, frozenset())


def is_ideal(C: FinCategory, N: Ideal | Iterable[int | str]) -> tuple[bool, tuple[int, int, int] | None]:
    """Two-sided absorption.  On failure the witness is ``(a, b, b . a)`` with
    one of ``a``, ``b`` in the set and the composite outside it."""
    members = N.members if isinstance(N, Ideal) else C.mors(N)
    for m in sorted(members):
        if not 0 <= m < C.n_morphisms:
            raise IdealError(f"unknown morphism id {m}")
    for n in sorted(members):
        for g in C.outof(C.cod[n]):
            h = C.compose(g, n)
            if h not in members:
                return False, (n, g, h)
        for f in C.into(C.dom[n]):
            h = C.compose(n, f)
            if h not in members:
                return False, (f, n, h)
    return True, None


def null_objects(C: FinCategory, N: Ideal) -> list[int]:
    return [a for a in range(C.n_objects) if C.id(a) in N]


def is_closed(C: FinCategory, N: Ideal) -> tuple[bool, dict[int, tuple[int, int]]]:
    """Every member factors through a null object; returns one witness per member."""
    zs = null_objects(C, N)
    witnesses: dict[int, tuple[int, int]] = {}
    for m in sorted(N.members):
        a, b = C.dom[m], C.cod[m]
        found = None
        for z in zs:
            for f in C.hom(a, z):
                for g in C.hom(z, b):
                    if C.compose(g, f) == m:
                        found = (f, g)
                        break
                if found:
                    break
            if found:
                break
        if found is None:
            return False, witnesses
        witnesses[m] = found
    return True, witnesses


def ideal_from_objects(C: FinCategory, Z: Iterable[int | str]) -> Ideal:
    """Morphisms factoring through an object of ``Z``."""
    zs = sorted(C.obs(Z))
    witness: dict[int, tuple[int, int]] = {}
    for z in zs:
        for f in C.into(z):
            for g in C.outof(z):
                h = C.compose(g, f)
                if h not in witness:
                    witness[h] = (f, g)
    return Ideal(C, frozenset(witness), witness)


def reflects_null(C: FinCategory, N: Ideal, xi: int) -> bool:
    """``xi . a`` null implies ``a`` null, for every ``a`` into ``dom xi``."""
    return all(a in N for a in C.into(C.dom[xi]) if C.compose(xi, a) in N)


def coreflects_null(C: FinCategory, N: Ideal, xi: int) -> bool:
    """``a . xi`` null implies ``a`` null, for every ``a`` out of ``cod xi``."""
    return all(a in N for a in C.outof(C.cod[xi]) if C.compose(a, xi) in N)


def reflects_null_via_kernel(C: FinCategory, N: Ideal, xi: int) -> bool:
    """Same predicate computed from the kernel: ``xi`` reflects null morphisms
    iff its kernel has a null domain.  Raises ``NoKernel`` if there is none."""
    from .exactness import kernel

    k = kernel(C, N, xi).kernel
    return C.id(C.dom[k]) in N


def coreflects_null_via_cokernel(C: FinCategory, N: Ideal, xi: int) -> bool:
    from .exactness import cokernel

    q = cokernel(C, N, xi).cokernel
    return C.id(C.cod[q]) in N
