"""Law-check reports shared by the comonad checks and the CLI."""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Report:
    """Per-law tallies plus every failure witness (never truncated)."""

    title: str
    laws: dict[str, list[int]] = field(default_factory=dict)
    failures: list[dict] = field(default_factory=list)
    info: dict = field(default_factory=dict)
    kind: str = "check"

    def check(self, law: str, ok: bool, where=None, detail=None) -> bool:
        tally = self.laws.setdefault(law, [0, 0])
        tally[0] += 1
        if not ok:
            tally[1] += 1
            self.failures.append({"law": law, "where": where, "detail": detail})
        return ok

    def fail(self, law: str, where=None, detail=None) -> None:
        self.check(law, False, where, detail)

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def verdict(self) -> str:
        if self.kind == "info":
            return "info"
        return "pass" if self.ok else "fail"

    def failed_laws(self) -> list[str]:
        return [law for law, (_, bad) in self.laws.items() if bad]

    def merge(self, other: "Report", prefix: str = "") -> None:
        for law, (n, bad) in other.laws.items():
            tally = self.laws.setdefault(prefix + law, [0, 0])
            tally[0] += n
            tally[1] += bad
        for f in other.failures:
            self.failures.append({**f, "law": prefix + f["law"]})

    def as_dict(self) -> dict:
        return {
            "title": self.title,
            "verdict": self.verdict,
            "laws": [{"law": k, "checked": n, "failed": bad} for k, (n, bad) in self.laws.items()],
            "failures": self.failures,
            "info": self.info,
        }
