"""Relative kernels and cokernels by exhaustive search, short exact and exact
sequences, and the short exact replacement of an exact sequence."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .category import FinCategory
from .ideal import Ideal, coreflects_null, reflects_null


class NoKernel(LookupError):
    pass


class NoCokernel(LookupError):
    pass


class NotNullComposite(ValueError):
    pass


class NotExact(ValueError):
    pass


@dataclass
class KernelResult:
    kernel: int
    mediators: dict[int, int] = field(default_factory=dict)


@dataclass
class CokernelResult:
    cokernel: int
    mediators: dict[int, int] = field(default_factory=dict)


@dataclass(frozen=True)
class ShortExactSeq:
    f: int
    g: int


@dataclass(frozen=True)
class ExactSeq:
    f: int
    g: int
    xi1: int
    xi2: int
    replacement: ShortExactSeq


def _null_into(C: FinCategory, N: Ideal, f: int) -> list[int]:
    return [k for k in C.into(C.dom[f]) if C.compose(f, k) in N]


def _null_out(C: FinCategory, N: Ideal, f: int) -> list[int]:
    return [c for c in C.outof(C.cod[f]) if C.compose(c, f) in N]


def _kernel_mediators(C: FinCategory, k: int, tests: list[int]) -> dict[int, int] | None:
    counts: Counter[int] = Counter()
    first: dict[int, int] = {}
    for x in C.into(C.dom[k]):
        q = C.compose(k, x)
        counts[q] += 1
        first.setdefault(q, x)
    if all(counts[q] == 1 for q in tests):
        return {q: first[q] for q in tests}
    return None


def _cokernel_mediators(C: FinCategory, c: int, tests: list[int]) -> dict[int, int] | None:
    counts: Counter[int] = Counter()
    first: dict[int, int] = {}
    for x in C.outof(C.cod[c]):
        q = C.compose(x, c)
        counts[q] += 1
        first.setdefault(q, x)
    if all(counts[q] == 1 for q in tests):
        return {q: first[q] for q in tests}
    return None


def is_kernel_of(C: FinCategory, N: Ideal, k: int, f: int) -> bool:
    """Full universal property, not comparison with the canonical choice."""
    if C.cod[k] != C.dom[f] or C.compose(f, k) not in N:
        return False
    return _kernel_mediators(C, k, _null_into(C, N, f)) is not None


def is_cokernel_of(C: FinCategory, N: Ideal, c: int, f: int) -> bool:
    if C.dom[c] != C.cod[f] or C.compose(c, f) not in N:
        return False
    return _cokernel_mediators(C, c, _null_out(C, N, f)) is not None


def kernel(C: FinCategory, N: Ideal, f: int) -> KernelResult:
    """Canonical kernel: the universal candidate minimal by (domain, id)."""
    key = ("ker", f)
    hit = N.cache.get(key)
    if hit is not None:
        if isinstance(hit, NoKernel):
            raise hit
        return hit
    tests = _null_into(C, N, f)
    for k in sorted(tests, key=lambda m: (C.dom[m], m)):
        med = _kernel_mediators(C, k, tests)
        if med is not None:
            res = KernelResult(k, med)
            N.cache[key] = res
            return res
    err = NoKernel(f"{C.mname(f)} has no kernel in {C.name}")
    N.cache[key] = err
    raise err


def cokernel(C: FinCategory, N: Ideal, f: int) -> CokernelResult:
    key = ("coker", f)
    hit = N.cache.get(key)
    if hit is not None:
        if isinstance(hit, NoCokernel):
            raise hit
        return hit
    tests = _null_out(C, N, f)
    for c in sorted(tests, key=lambda m: (C.cod[m], m)):
        med = _cokernel_mediators(C, c, tests)
        if med is not None:
            res = CokernelResult(c, med)
            N.cache[key] = res
            return res
    err = NoCokernel(f"{C.mname(f)} has no cokernel in {C.name}")
    N.cache[key] = err
    raise err


def ker(C: FinCategory, N: Ideal, f: int) -> int:
    return kernel(C, N, f).kernel


def coker(C: FinCategory, N: Ideal, f: int) -> int:
    return cokernel(C, N, f).cokernel


def lift(C: FinCategory, k: int, q: int) -> int:
    """The unique ``x`` with ``k . x == q``."""
    xs = [x for x in C.hom(C.dom[q], C.dom[k]) if C.compose(k, x) == q]
    if len(xs) != 1:
        raise NotExact(f"{C.mname(q)} does not factor uniquely through {C.mname(k)} ({len(xs)} ways)")
    return xs[0]


def extend(C: FinCategory, c: int, q: int) -> int:
    """The unique ``y`` with ``y . c == q``."""
    ys = [y for y in C.hom(C.cod[c], C.cod[q]) if C.compose(y, c) == q]
    if len(ys) != 1:
        raise NotExact(f"{C.mname(q)} does not extend uniquely along {C.mname(c)} ({len(ys)} ways)")
    return ys[0]


def is_short_exact(C: FinCategory, N: Ideal, f: int, g: int) -> bool:
    if C.cod[f] != C.dom[g]:
        return False
    return is_kernel_of(C, N, f, g) and is_cokernel_of(C, N, g, f)


def short_exact_sequences(C: FinCategory, N: Ideal) -> list[tuple[int, int]]:
    """Every short exact pair, ordered lexicographically by ``(f, g)``."""
    key = ("ses",)
    if key not in N.cache:
        out = [(f, g) for f, g in C.composable_pairs() if C.compose(g, f) in N and is_short_exact(C, N, f, g)]
        N.cache[key] = sorted(out)
    return list(N.cache[key])


def is_semiexact(C: FinCategory, N: Ideal) -> tuple[bool, list[tuple[str, int]]]:
    missing: list[tuple[str, int]] = []
    for m in range(C.n_morphisms):
        try:
            kernel(C, N, m)
        except NoKernel:
            missing.append(("kernel", m))
        try:
            cokernel(C, N, m)
        except NoCokernel:
            missing.append(("cokernel", m))
    return not missing, missing


def exact_data(C: FinCategory, N: Ideal, f: int, g: int) -> ExactSeq:
    """Comparison maps and short exact replacement; raises if not exact.

    A pair that is already short exact is its own replacement.
    """
    if C.cod[f] != C.dom[g]:
        raise ValueError("pair is not composable")
    if C.compose(g, f) not in N:
        raise NotNullComposite(f"{C.mname(g)} . {C.mname(f)} is not null")
    kg = ker(C, N, g)
    cf = coker(C, N, f)
    xi1 = lift(C, kg, f)
    xi2 = extend(C, cf, g)
    if is_short_exact(C, N, f, g):
        return ExactSeq(f, g, xi1, xi2, ShortExactSeq(f, g))
    if not is_short_exact(C, N, kg, cf):
        raise NotExact(f"({C.mname(kg)}, {C.mname(cf)}) is not short exact")
    if not coreflects_null(C, N, xi1):
        raise NotExact(f"comparison {C.mname(xi1)} does not coreflect null morphisms")
    if not reflects_null(C, N, xi2):
        raise NotExact(f"comparison {C.mname(xi2)} does not reflect null morphisms")
    return ExactSeq(f, g, xi1, xi2, ShortExactSeq(kg, cf))


def is_exact(C: FinCategory, N: Ideal, f: int, g: int) -> bool:
    try:
        exact_data(C, N, f, g)
    except (NotExact, NotNullComposite, NoKernel, NoCokernel):
        return False
    return True


def replacement(C: FinCategory, N: Ideal, f: int, g: int) -> ExactSeq:
    return exact_data(C, N, f, g)


def exact_pairs(C: FinCategory, N: Ideal) -> list[tuple[int, int]]:
    key = ("exact",)
    if key not in N.cache:
        N.cache[key] = [(f, g) for f, g in C.composable_pairs() if C.compose(g, f) in N and is_exact(C, N, f, g)]
    return list(N.cache[key])
