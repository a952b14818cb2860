"""Command-line front end.

Exit codes: 0 pass or info, 1 fail, 2 usage or parse error.  ``--json``
prints exactly one JSON document; SEXTOR_STABLE=1 drops timings so equal
invocations give byte-identical output.
"""
from __future__ import annotations

import json
import os
import sys
import time
from functools import wraps

import click

from . import comonad as cm
from . import fileformat as ff
from .category import build_chain, validate_category
from .exactness import NoCokernel, NoKernel, coker, ker
from .ideal import is_closed, is_ideal
from .pretorsion import (
    check_pretorsion,
    enumerate_pretorsion,
    is_bihereditary,
    is_cohereditary,
    is_hereditary,
    is_rectangular,
    theory_ideal,
)
from .report import Report
from .ses import build_ses, check_ses


def _stable() -> bool:
    return os.environ.get("SEXTOR_STABLE", "") not in ("", "0")


class Outcome:
    def __init__(self, verdict: str, doc: dict, text: str):
        self.verdict = verdict
        self.doc = doc
        self.text = text


def _load(path: str) -> ff.CategoryFile:
    try:
        if path == "-":
            return ff.parse(sys.stdin.read())
        return ff.read(path)
    except ff.ParseError as err:
        raise click.UsageError(f"{path}: {err}") from None
    except OSError as err:
        raise click.UsageError(f"{path}: {err.strerror}") from None


def _need_ideal(cf: ff.CategoryFile, path: str):
    if cf.ideal is None:
        raise click.UsageError(f"{path}: this command needs a null block")
    return cf.ideal


def _objects(C, spec: str | None, flag: str):
    if spec is None:
        return None
    names = [s for s in (x.strip() for x in spec.split(",")) if s]
    unknown = [n for n in names if not C.has_object(n)]
    if unknown:
        raise click.UsageError(f"{flag}: unknown object {unknown[0]}")
    return C.obs(names)


def command(fn):
    """Run ``fn`` (returning an Outcome), print it, and exit with its verdict."""

    @click.option("--json", "as_json", is_flag=True, help="Emit one JSON document.")
    @click.pass_context
    @wraps(fn)
    def run(ctx, as_json, **kw):
        as_json = as_json or ctx.obj.get("json", False)
        t0 = time.perf_counter()
        out = fn(**kw)
        elapsed = time.perf_counter() - t0
        if as_json:
            doc = {"verdict": out.verdict, **out.doc}
            if not _stable():
                doc["timing_s"] = round(elapsed, 4)
            click.echo(json.dumps(doc, indent=2, ensure_ascii=False))
        else:
            click.echo(out.text, nl=not out.text.endswith("\n"))
            if not _stable() and out.verdict != "info":
                click.echo(f"# {elapsed:.3f}s", err=True)
        ctx.exit(1 if out.verdict == "fail" else 0)

    return run


def _report_outcome(rep: Report, extra: dict | None = None) -> Outcome:
    doc = rep.as_dict()
    if extra:
        doc.update(extra)
    return Outcome(rep.verdict, doc, _report_text(rep))


def _report_text(rep: Report) -> str:
    lines = [f"{rep.title}: {rep.verdict.upper()}"]
    for law, (n, bad) in rep.laws.items():
        lines.append(f"  {'FAIL' if bad else 'ok  '} {law}: {n - bad}/{n}")
    for f in rep.failures:
        where = f" at {f['where']}" if f["where"] is not None else ""
        detail = f" ({f['detail']})" if f["detail"] is not None else ""
        lines.append(f"  ! {f['law']}{where}{detail}")
    for k, v in rep.info.items():
        lines.append(f"  {k}: {json.dumps(v, ensure_ascii=False)}")
    return "\n".join(lines)


@click.group()
@click.option("--json", "as_json", is_flag=True, help="Emit JSON for every command.")
@click.version_option(package_name="sextor")
@click.pass_context
def main(ctx, as_json):
    """Finite categories with null ideals: kernels, Ses, pretorsion theories
    and the comonad laws."""
    ctx.ensure_object(dict)
    ctx.obj["json"] = as_json


@main.command()
@click.argument("path")
@command
def validate(path):
    """Check category laws, and ideal closure if a null block is present."""
    cf = _load(path)
    C = cf.category
    rep = Report(f"validate {C.name}")
    cat = validate_category(C)
    rep.check("category", cat.ok, None, [v.as_dict() for v in cat.violations] or None)
    if cf.ideal is not None and cat.ok:
        ok, bad = is_ideal(C, cf.ideal)
        rep.check("ideal", ok, None, None if ok else [C.mname(m) for m in bad])
        if ok:
            closed, _ = is_closed(C, cf.ideal)
            rep.check("closed", closed)
    rep.info.update(objects=C.n_objects, morphisms=C.n_morphisms)
    return _report_outcome(rep)


@main.command()
@click.argument("path")
@command
def kernels(path):
    """Kernel and cokernel of every morphism (or MISSING)."""
    cf = _load(path)
    C, N = cf.category, _need_ideal(cf, path)
    rows = []
    for m in range(C.n_morphisms):
        try:
            k = C.mname(ker(C, N, m))
        except NoKernel:
            k = "MISSING"
        try:
            c = C.mname(coker(C, N, m))
        except NoCokernel:
            c = "MISSING"
        rows.append({"morphism": C.mname(m), "kernel": k, "cokernel": c})
    width = max(len(r["morphism"]) for r in rows)
    text = "\n".join(f"{r['morphism']:<{width}}  ker {r['kernel']}  coker {r['cokernel']}" for r in rows)
    return Outcome("info", {"kernels": rows}, text)


@main.group()
def ses():
    """Build or check the category of short exact sequences."""


@ses.command("build")
@click.argument("path")
@command
def ses_build(path):
    """Print Ses(C) with its ideal in the category file format."""
    cf = _load(path)
    C, N = cf.category, _need_ideal(cf, path)
    S = build_ses(C, N, require_semiexact=False)
    notes = [f"short exact sequences of {C.name}; objects are f|g, morphisms u|v|w"]
    return Outcome("info", ff.to_json_doc(S.category, S.ideal), ff.to_text(S.category, S.ideal, comments=notes))


@ses.command("check")
@click.argument("path")
@command
def ses_check(path):
    """Run the Ses(C) invariant suite."""
    cf = _load(path)
    C, N = cf.category, _need_ideal(cf, path)
    try:
        return _report_outcome(check_ses(C, N))
    except Exception as err:  # base not semiexact
        rep = Report(f"Ses invariants on {C.name}")
        rep.fail("semiexact", None, str(err))
        return _report_outcome(rep)


@main.group()
def pretorsion():
    """Enumerate or check pretorsion theories."""


def _theory_doc(C, T, F) -> dict:
    rep = check_pretorsion(C, T, F)
    doc = rep.as_dict(C)
    if rep.ok:
        doc.update(
            hereditary=is_hereditary(C, T, F),
            cohereditary=is_cohereditary(C, T, F),
            rectangular=is_rectangular(C, T, F),
        )
    else:
        doc.update(hereditary=None, cohereditary=None, rectangular=None)
    return doc


def _theory_line(d: dict) -> str:
    flags = [k for k in ("hereditary", "cohereditary", "rectangular") if d.get(k)]
    return f"T={{{','.join(d['T'])}}} F={{{','.join(d['F'])}}}" + (f"  [{' '.join(flags)}]" if flags else "")


@pretorsion.command("enumerate")
@click.argument("path")
@command
def pretorsion_enumerate(path):
    """All pretorsion theories over iso-closed object pairs."""
    C = _load(path).category
    docs = [_theory_doc(C, T, F) for T, F in enumerate_pretorsion(C)]
    text = "\n".join([f"{len(docs)} pretorsion theories on {C.name}"] + [_theory_line(d) for d in docs])
    return Outcome("info", {"category": C.name, "count": len(docs), "theories": docs}, text)


@pretorsion.command("check")
@click.argument("path")
@click.option("--torsion", required=True, help="Comma-separated torsion objects.")
@click.option("--free", required=True, help="Comma-separated torsion-free objects.")
@command
def pretorsion_check(path, torsion, free):
    """Check one candidate (T, F)."""
    C = _load(path).category
    T, F = _objects(C, torsion, "--torsion"), _objects(C, free, "--free")
    d = _theory_doc(C, T, F)
    ok = d["iso_closed"] and d["closed"] and d["t1"] and d["t2"]
    lines = [_theory_line(d) + f": {'PASS' if ok else 'FAIL'}"]
    for key in ("iso_closed", "closed", "t1", "t2", "semiexact"):
        lines.append(f"  {key}: {d[key]}")
    if d["t1_failures"]:
        lines.append("  non-null T->F morphisms: " + ", ".join(d["t1_failures"]))
    if d["t2_failures"]:
        lines.append("  objects without decomposition: " + ", ".join(d["t2_failures"]))
    return Outcome("pass" if ok else "fail", d, "\n".join(lines))


@main.command()
@click.option("--n", "n", type=click.IntRange(min=1), required=True, help="Chain length.")
@command
def chain(n):
    """Print the chain category 1 <= ... <= n."""
    C = build_chain(n)
    return Outcome("info", ff.to_json_doc(C), ff.to_text(C))


@main.group()
def comonad():
    """Comonad laws for Ses."""


@comonad.command("check")
@click.argument("path")
@click.option("--coassociator/--no-coassociator", default=True, help="Also check Ξ and its coherence.")
@command
def comonad_check(path, coassociator):
    """Counit triangles, the coassociator and the 1-cell status of ε and δ."""
    cf = _load(path)
    C, N = cf.category, _need_ideal(cf, path)
    rep = cm.check_comonad(C, N, coassociator=coassociator)
    S = cm.eager_ses(C, N)
    eps = cm.classify_morphism(cm.counit_functor(C, N), S.ideal, N)
    rep.check("eps-strict", eps.strict, None, eps.as_dict(S.category))
    return _report_outcome(rep)


@main.group()
def coalgebra():
    """Coalgebras for the (extended) comonad."""


def _theories(C, torsion, free):
    if (torsion is None) != (free is None):
        raise click.UsageError("give both --torsion and --free, or neither")
    if torsion is None:
        return enumerate_pretorsion(C)
    return [(_objects(C, torsion, "--torsion"), _objects(C, free, "--free"))]


def _names(C, xs) -> list[str]:
    return [C.oname(x) for x in sorted(xs)]


@coalgebra.command("build")
@click.argument("path")
@click.option("--torsion", required=True)
@click.option("--free", required=True)
@click.option("--mode", type=click.Choice(["strict", "exact"]), default="exact", show_default=True)
@command
def coalgebra_build(path, torsion, free, mode):
    """Build the coalgebra of one theory and check it."""
    C = _load(path).category
    T, F = _objects(C, torsion, "--torsion"), _objects(C, free, "--free")
    try:
        cs = cm.build_coalgebra(C, T, F, mode)
    except (ValueError, cm.ModeViolation) as err:
        rep = Report(f"coalgebra on {C.name} ({mode})")
        rep.fail("build", None, str(err))
        return _report_outcome(rep)
    rep = cm.check_coalgebra(cs)
    return _report_outcome(rep, {"structure": cs.as_dict()})


@coalgebra.command("check")
@click.argument("path")
@click.option("--torsion")
@click.option("--free")
@click.option("--mode", type=click.Choice(["strict", "exact", "auto"]), default="auto", show_default=True,
              help="auto: exact always, strict too when bihereditary.")
@command
def coalgebra_check(path, torsion, free, mode):
    """Γ then the full coalgebra check and Θ, for one theory or all of them."""
    C = _load(path).category
    rep = Report(f"coalgebras on {C.name}")
    for T, F in _theories(C, torsion, free):
        tag = f"T={{{','.join(_names(C, T))}}} F={{{','.join(_names(C, F))}}}"
        modes = [mode] if mode != "auto" else ["exact"] + (["strict"] if is_bihereditary(C, T, F) else [])
        for md in modes:
            try:
                cs = cm.build_coalgebra(C, T, F, md)
            except (ValueError, cm.ModeViolation) as err:
                rep.fail(f"{md}:build", tag, str(err))
                continue
            rep.merge(cm.check_coalgebra(cs), f"{md}:")
            rep.check(f"{md}:round-trip", cm.extract_pretorsion(cs) == (T, F), tag)
    return _report_outcome(rep)


@coalgebra.command("classify")
@click.argument("path")
@click.option("--torsion")
@click.option("--free")
@click.option("--search/--no-search", default=True, help="Search all sections of ε for generalized coalgebras.")
@command
def coalgebra_classify(path, torsion, free, search):
    """PRETORSION / GENERALIZED verdicts, plus the exhaustive section search."""
    cf = _load(path)
    C = cf.category
    rows = []
    for T, F in _theories(C, torsion, free):
        cs = cm.build_coalgebra(C, T, F, "exact")
        k = cm.classify_coalgebra(cs)
        rows.append({"T": _names(C, T), "F": _names(C, F), **k.as_dict()})
    doc: dict = {"theories": rows}
    lines = [f"{len(rows)} coalgebras from pretorsion theories on {C.name}"]
    lines += [f"T={{{','.join(r['T'])}}} F={{{','.join(r['F'])}}}: {r['class']}" for r in rows]
    if search and cf.ideal is not None:
        res = cm.search_generalized(C, cf.ideal)
        doc["search"] = res
        lines.append(
            f"section search: {res['sections']} sections, {res['coalgebras']} coalgebras, "
            f"{res['generalized']} generalized"
        )
        if res["witness"] is not None:
            lines.append("witness: " + json.dumps(res["witness"], ensure_ascii=False))
    return Outcome("info", doc, "\n".join(lines))


@main.group()
def adjoints():
    """The adjoint string between C and Ses(C)."""


@adjoints.command("check")
@click.argument("path")
@command
def adjoints_check(path):
    """Verify π3 ⊣ L ⊣ ε ⊣ R ⊣ π1 by hom-set bijections and naturality."""
    cf = _load(path)
    C, N = cf.category, _need_ideal(cf, path)
    return _report_outcome(cm.check_adjoint_quintuple(C, N))


if __name__ == "__main__":  # pragma: no cover
    main()
