"""Result records returned by the checkers."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class AxiomResult:
    name: str
    passed: bool
    counterexample: tuple[str, ...] | None = None
    detail: str = ""

    def to_dict(self) -> dict[str, Any]:
        return {
            "passed": self.passed,
            "counterexample": None if self.counterexample is None else list(self.counterexample),
            "detail": self.detail,
        }


@dataclass(frozen=True)
class AxiomReport:
    results: tuple[AxiomResult, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def __getitem__(self, name: str) -> AxiomResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def failures(self) -> list[AxiomResult]:
        return [r for r in self.results if not r.passed]

    def to_dict(self) -> dict[str, Any]:
        return {r.name: r.to_dict() for r in self.results}


@dataclass(frozen=True)
class ContinuityReport:
    """The four strength levels plus supporting data.

    ``failures`` lists ``(property, counterexample)`` pairs in the order
    they were found; ``per_domain`` is filled in by the labeled checker.
    """

    continuous: bool
    s_continuous: bool
    compact: bool
    s_compact: bool
    finite_elements: tuple[str, ...] = ()
    failures: tuple[tuple[str, tuple[str, ...]], ...] = ()
    per_domain: dict[str, dict[str, bool]] | None = field(default=None, compare=False)
    mode: str = "table"

    @property
    def implications_hold(self) -> bool:
        return (
            (not self.s_compact or (self.compact and self.s_continuous))
            and (not self.compact or self.continuous)
            and (not self.s_continuous or self.continuous)
        )

    def flags(self) -> dict[str, bool]:
        return {
            "continuous": self.continuous,
            "s_continuous": self.s_continuous,
            "compact": self.compact,
            "s_compact": self.s_compact,
        }

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = dict(self.flags())
        out["mode"] = self.mode
        out["finite_elements"] = list(self.finite_elements)
        out["failures"] = [[prop, list(cx)] for prop, cx in self.failures]
        if self.per_domain is not None:
            out["per_domain"] = {x: dict(v) for x, v in self.per_domain.items()}
        return out


@dataclass(frozen=True)
class TheoremReport:
    """Outcome of an implication check; ``None`` marks a vacuous premise."""

    name: str
    checks: dict[str, bool | None]
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(v is not False for v in self.checks.values())

    def to_dict(self) -> dict[str, Any]:
        return {"name": self.name, "passed": self.passed, "checks": dict(self.checks), "details": self.details}
