"""Verification reports returned by the axiom checkers."""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Failure:
    axiom: str
    witness: tuple[int, ...]
    detail: str = ""

    def __str__(self) -> str:
        text = f"{self.axiom} fails at {self.witness}"
        return f"{text}: {self.detail}" if self.detail else text


@dataclass(frozen=True)
class Report:
    """Outcome of an exhaustive axiom check.

    ``checked`` names every axiom that was examined; ``failures`` holds the
    first counterexample (in the checker's documented order) for each axiom
    that does not hold.
    """

    subject: str
    checked: tuple[str, ...]
    failures: tuple[Failure, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.ok

    def failed(self, axiom: str) -> Failure | None:
        for f in self.failures:
            if f.axiom == axiom:
                return f
        return None

    def render(self) -> str:
        lines = [f"{self.subject}: {'PASS' if self.ok else 'FAIL'}"]
        bad = {f.axiom: f for f in self.failures}
        for axiom in self.checked:
            if axiom in bad:
                lines.append(f"  {axiom}: FAIL  {bad[axiom]}")
            else:
                lines.append(f"  {axiom}: ok")
        return "\n".join(lines)


class ReportBuilder:
    def __init__(self, subject: str):
        self.subject = subject
        self._checked: list[str] = []
        self._failures: list[Failure] = []

    def record(self, axiom: str, witness=None, detail: str = "") -> None:
        if axiom not in self._checked:
            self._checked.append(axiom)
        if witness is not None:
            self._failures.append(Failure(axiom, tuple(int(w) for w in witness), detail))

    def build(self) -> Report:
        return Report(self.subject, tuple(self._checked), tuple(self._failures))
