"""Reading and writing category files.

Text form, one directive per line (``#`` starts a comment)::

    category PS2
    object P1
    morphism i : P1 -> P2
    identity P1 = id1
    compose i . r = c
    null { id1 r i c }          # or: null objects { P1 }

Composites with an identity may be omitted; they default to the unit law.
Every other composable pair must have a ``compose`` line.  A JSON document
with the same content is accepted too (see :func:`to_json`).
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass

from .category import FinCategory
from .ideal import Ideal, ideal_from_objects


class ParseError(ValueError):
    def __init__(self, msg: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {msg}" if line is not None else msg)


@dataclass
class CategoryFile:
    category: FinCategory
    ideal: Ideal | None = None
    null_objects: tuple[str, ...] | None = None


_NAME = r"[^\s{}]+"
_PATTERNS = {
    "category": re.compile(rf"category\s+({_NAME})$"),
    "object": re.compile(rf"object\s+({_NAME})$"),
    "morphism": re.compile(rf"morphism\s+({_NAME})\s*:\s*({_NAME})\s*->\s*({_NAME})$"),
    "identity": re.compile(rf"identity\s+({_NAME})\s*=\s*({_NAME})$"),
    "compose": re.compile(rf"compose\s+({_NAME})\s+\.\s+({_NAME})\s*=\s*({_NAME})$"),
}
_BLOCK = re.compile(r"null(\s+objects)?\s*\{([^}]*)(\})?\s*$")


class _Builder:
    def __init__(self):
        self.name: str | None = None
        self.objects: list[str] = []
        self.mors: list[tuple[str, str, str]] = []
        self.identity: dict[str, tuple[str, int | None]] = {}
        self.comp: dict[tuple[str, str], tuple[str, int | None]] = {}
        self.null: list[str] | None = None
        self.null_objects: list[str] | None = None
        self._mor_names: set[str] = set()

    def category(self, name, line=None):
        if self.name is not None:
            raise ParseError("category declared twice", line)
        self.name = name

    def object(self, name, line=None):
        self._need(line)
        if name in self.objects:
            raise ParseError(f"duplicate object {name}", line)
        self.objects.append(name)

    def morphism(self, name, a, b, line=None):
        self._need(line)
        if name in self._mor_names:
            raise ParseError(f"duplicate morphism {name}", line)
        for x in (a, b):
            if x not in self.objects:
                raise ParseError(f"unknown object {x}", line)
        self._mor_names.add(name)
        self.mors.append((name, a, b))

    def set_identity(self, obj, mor, line=None):
        self._need(line)
        if obj in self.identity:
            raise ParseError(f"duplicate identity for {obj}", line)
        self.identity[obj] = (mor, line)

    def compose(self, g, f, h, line=None):
        self._need(line)
        if (g, f) in self.comp:
            raise ParseError(f"duplicate compose {g} . {f}", line)
        self.comp[(g, f)] = (h, line)

    def block(self, kind, names, line=None):
        self._need(line)
        attr = "null_objects" if kind == "objects" else "null"
        if getattr(self, attr) is not None:
            raise ParseError(f"duplicate null{' objects' if kind == 'objects' else ''} block", line)
        setattr(self, attr, list(names))

    def _need(self, line):
        if self.name is None:
            raise ParseError("no category declared", line)

    def finish(self) -> CategoryFile:
        if self.name is None:
            raise ParseError("no category declared")
        mi = {m: k for k, (m, _, _) in enumerate(self.mors)}
        oi = {o: k for k, o in enumerate(self.objects)}
        dom = [oi[a] for _, a, _ in self.mors]
        cod = [oi[b] for _, _, b in self.mors]
        ident = []
        for o in self.objects:
            if o not in self.identity:
                raise ParseError(f"missing identity for object {o}")
            m, line = self.identity[o]
            if m not in mi:
                raise ParseError(f"unknown morphism {m}", line)
            if dom[mi[m]] != oi[o] or cod[mi[m]] != oi[o]:
                raise ParseError(f"identity {m} is not an endomorphism of {o}", line)
            ident.append(mi[m])
        id_set = set(ident)
        comp: dict[tuple[int, int], int] = {}
        for (g, f), (h, line) in self.comp.items():
            for x in (g, f, h):
                if x not in mi:
                    raise ParseError(f"unknown morphism {x}", line)
            gi, fi, hi = mi[g], mi[f], mi[h]
            if cod[fi] != dom[gi]:
                raise ParseError(f"{g} . {f} is not composable", line)
            if dom[hi] != dom[fi] or cod[hi] != cod[gi]:
                raise ParseError(f"{h} has the wrong type for {g} . {f}", line)
            comp[(gi, fi)] = hi
        for fi in range(len(self.mors)):
            for gi in range(len(self.mors)):
                if cod[fi] != dom[gi] or (gi, fi) in comp:
                    continue
                if gi in id_set:
                    comp[(gi, fi)] = fi
                elif fi in id_set:
                    comp[(gi, fi)] = gi
                else:
                    raise ParseError(f"missing compose for {self.mors[gi][0]} . {self.mors[fi][0]}")
        C = FinCategory(self.name, self.objects, [m for m, _, _ in self.mors], dom, cod, ident, comp=comp)
        ideal, nobj = None, None
        if self.null is not None and self.null_objects is not None:
            raise ParseError("give either a null block or a null objects block, not both")
        if self.null is not None:
            unknown = [m for m in self.null if m not in mi]
            if unknown:
                raise ParseError(f"unknown morphism {unknown[0]} in null block")
            ideal = Ideal.of(C, self.null)
        if self.null_objects is not None:
            unknown = [o for o in self.null_objects if o not in oi]
            if unknown:
                raise ParseError(f"unknown object {unknown[0]} in null objects block")
            ideal = ideal_from_objects(C, self.null_objects)
            nobj = tuple(self.null_objects)
        return CategoryFile(C, ideal, nobj)


def parse_text(text: str) -> CategoryFile:
    b = _Builder()
    lines = text.splitlines()
    k = 0
    while k < len(lines):
        lineno = k + 1
        line = lines[k].split("#", 1)[0].strip()
        k += 1
        if not line:
            continue
        m = _BLOCK.match(line)
        if m:
            body = m.group(2)
            while m.group(3) is None:
                if k >= len(lines):
                    raise ParseError("unterminated null block", lineno)
                more = lines[k].split("#", 1)[0].strip()
                k += 1
                m2 = re.match(r"([^}]*)(\})?\s*$", more)
                body += " " + m2.group(1)
                if m2.group(2):
                    break
            b.block("objects" if m.group(1) else "morphisms", body.split(), lineno)
            continue
        word = line.split()[0]
        pat = _PATTERNS.get(word)
        if pat is None:
            raise ParseError(f"unknown directive {word!r}", lineno)
        mm = pat.match(line)
        if mm is None:
            raise ParseError(f"malformed {word} directive", lineno)
        if word == "identity":
            b.set_identity(*mm.groups(), line=lineno)
        else:
            getattr(b, word)(*mm.groups(), line=lineno)
    return b.finish()


def parse_json(text: str) -> CategoryFile:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise ParseError(f"invalid JSON: {err.msg}", err.lineno) from None
    if not isinstance(doc, dict) or "category" not in doc:
        raise ParseError("no category declared")
    b = _Builder()
    try:
        b.category(str(doc["category"]))
        for o in doc.get("objects", []):
            b.object(str(o))
        for m in doc.get("morphisms", []):
            b.morphism(str(m["name"]), str(m["dom"]), str(m["cod"]))
        for o, m in doc.get("identities", {}).items():
            b.set_identity(o, m)
        for g, f, h in doc.get("compose", []):
            b.compose(g, f, h)
    except (KeyError, TypeError, ValueError) as err:
        if isinstance(err, ParseError):
            raise
        raise ParseError(f"malformed JSON category: {err}") from None
    if "null" in doc:
        b.block("morphisms", doc["null"])
    if "null_objects" in doc:
        b.block("objects", doc["null_objects"])
    return b.finish()


def parse(text: str) -> CategoryFile:
    """Text or JSON, decided by the first non-blank character."""
    if text.lstrip().startswith("{"):
        return parse_json(text)
    return parse_text(text)


def read(path: str) -> CategoryFile:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def _non_unit_pairs(C: FinCategory):
    """Composable pairs whose composite is not given by the unit law."""
    for f in range(C.n_morphisms):
        for g in C.outof(C.cod[f]):
            h = C.compose(g, f)
            if C.is_identity(g) and h == f or C.is_identity(f) and h == g:
                continue
            yield g, f, h


def to_text(C: FinCategory, ideal: Ideal | None = None, null_objects=None, comments: list[str] | None = None) -> str:
    out = [f"# {c}" for c in comments or []]
    out.append(f"category {C.name}")
    out += [f"object {o}" for o in C.objects]
    out += [f"morphism {C.mname(m)} : {C.oname(C.dom[m])} -> {C.oname(C.cod[m])}" for m in range(C.n_morphisms)]
    out += [f"identity {C.oname(x)} = {C.mname(C.id(x))}" for x in range(C.n_objects)]
    out += [f"compose {C.mname(g)} . {C.mname(f)} = {C.mname(h)}" for g, f, h in _non_unit_pairs(C)]
    if null_objects is not None:
        out.append("null objects { " + " ".join(null_objects) + " }")
    elif ideal is not None:
        out.append("null { " + " ".join(C.mname(m) for m in sorted(ideal.members)) + " }")
    return "\n".join(out) + "\n"


def to_json_doc(C: FinCategory, ideal: Ideal | None = None, null_objects=None) -> dict:
    doc = {
        "category": C.name,
        "objects": list(C.objects),
        "morphisms": [
            {"name": C.mname(m), "dom": C.oname(C.dom[m]), "cod": C.oname(C.cod[m])} for m in range(C.n_morphisms)
        ],
        "identities": {C.oname(x): C.mname(C.id(x)) for x in range(C.n_objects)},
        "compose": [[C.mname(g), C.mname(f), C.mname(h)] for g, f, h in _non_unit_pairs(C)],
    }
    if null_objects is not None:
        doc["null_objects"] = list(null_objects)
    elif ideal is not None:
        doc["null"] = [C.mname(m) for m in sorted(ideal.members)]
    return doc


def to_json(C: FinCategory, ideal: Ideal | None = None, null_objects=None) -> str:
    return json.dumps(to_json_doc(C, ideal, null_objects), indent=2) + "\n"


def same_category(C: FinCategory, D: FinCategory) -> bool:
    """Equal names, declaration order, types, identities and composition."""
    return (
        C.name == D.name
        and C.objects == D.objects
        and C.morphisms == D.morphisms
        and C.dom == D.dom
        and C.cod == D.cod
        and C.identity == D.identity
        and C.full_table() == D.full_table()
    )
