"""Three-valued verdicts, chain results and suite reports."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Iterable


@dataclass(frozen=True)
class Verdict:
    kind: str  # "yes" | "no" | "unknown"
    bound: int | None = None
    reason: str = ""

    @classmethod
    def of(cls, flag: bool) -> Verdict:
        return YES if flag else NO

    @classmethod
    def unknown(cls, bound: int | None = None, reason: str = "chain bound exceeded") -> Verdict:
        return cls("unknown", bound, reason)

    @property
    def is_yes(self) -> bool:
        return self.kind == "yes"

    @property
    def is_no(self) -> bool:
        return self.kind == "no"

    @property
    def is_unknown(self) -> bool:
        return self.kind == "unknown"

    def __and__(self, other: Verdict) -> Verdict:
        return all_of([self, other])

    def __or__(self, other: Verdict) -> Verdict:
        return any_of([self, other])

    def __invert__(self) -> Verdict:
        if self.is_unknown:
            return self
        return NO if self.is_yes else YES

    def to_json(self) -> Any:
        if self.is_unknown:
            return {"unknown": self.bound, "reason": self.reason}
        return self.kind

    def __str__(self) -> str:
        return f"Unknown({self.bound})" if self.is_unknown else self.kind.capitalize()


YES = Verdict("yes")
NO = Verdict("no")


def all_of(verdicts: Iterable[Verdict]) -> Verdict:
    """Yes iff all Yes; No if any No; otherwise the first Unknown."""
    first_unknown = None
    for v in verdicts:
        if v.is_no:
            return NO
        if v.is_unknown and first_unknown is None:
            first_unknown = v
    return first_unknown or YES


def any_of(verdicts: Iterable[Verdict]) -> Verdict:
    first_unknown = None
    for v in verdicts:
        if v.is_yes:
            return YES
        if v.is_unknown and first_unknown is None:
            first_unknown = v
    return first_unknown or NO


@dataclass(frozen=True)
class ChainResult:
    """Outcome of a stabilization search.

    ``finite`` carries a proven value, ``exceeds`` means no stabilization was
    certified up to the bound (never a claim of infinity), ``infinite`` is a
    structural proof that the chain never stabilizes.
    """

    kind: str  # "finite" | "exceeds" | "infinite"
    n: int | None = None

    @classmethod
    def finite(cls, n: int) -> ChainResult:
        return cls("finite", n)

    @classmethod
    def exceeds(cls, n_max: int) -> ChainResult:
        return cls("exceeds", n_max)

    @classmethod
    def infinite(cls) -> ChainResult:
        return cls("infinite", None)

    @property
    def is_finite(self) -> bool:
        return self.kind == "finite"

    def verdict(self) -> Verdict:
        """Is the chain quantity finite?"""
        if self.kind == "finite":
            return YES
        if self.kind == "infinite":
            return NO
        return Verdict.unknown(self.n)

    def to_json(self) -> Any:
        if self.kind == "finite":
            return self.n
        if self.kind == "infinite":
            return "infinite"
        return f"exceeds({self.n})"

    def __str__(self) -> str:
        return {"finite": f"Finite({self.n})", "exceeds": f"ExceedsBound({self.n})",
                "infinite": "Infinite"}[self.kind]


def combine_max(results: Iterable[ChainResult]) -> ChainResult:
    """Chain value of a direct sum: the maximum over the summands."""
    results = list(results)
    if any(r.kind == "infinite" for r in results):
        return ChainResult.infinite()
    exceeded = [r for r in results if r.kind == "exceeds"]
    if exceeded:
        return ChainResult.exceeds(max(r.n for r in exceeded))
    return ChainResult.finite(max((r.n for r in results), default=0))


@dataclass
class Report:
    suite: str
    trials: int = 0
    passes: int = 0
    failures: list[dict[str, Any]] = field(default_factory=list)
    unknowns: list[dict[str, Any]] = field(default_factory=list)
    details: dict[str, Any] = field(default_factory=dict)

    def record(self, case: Any, verdict: str, expected: Any = None, got: Any = None) -> None:
        """``verdict`` is "pass", "fail" or "unknown"."""
        if verdict == "pass":
            self.passes += 1
        elif verdict == "fail":
            self.failures.append({"case": case, "expected": expected, "got": got})
        else:
            self.unknowns.append({"case": case, "expected": expected, "got": got})

    def check(self, case: Any, condition: bool, expected: Any = True, got: Any = None) -> bool:
        self.record(case, "pass" if condition else "fail", expected,
                    got if got is not None else condition)
        return condition

    def merge(self, other: Report, prefix: str = "") -> None:
        self.passes += other.passes
        self.failures.extend({**f, "case": f"{prefix}{f['case']}"} for f in other.failures)
        self.unknowns.extend({**u, "case": f"{prefix}{u['case']}"} for u in other.unknowns)

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def exit_code(self) -> int:
        if self.failures:
            return 2
        if self.unknowns:
            return 3
        return 0

    def to_json(self) -> dict[str, Any]:
        out = {
            "suite": self.suite,
            "trials": self.trials,
            "passes": self.passes,
            "failures": self.failures,
            "unknowns": self.unknowns,
        }
        if self.details:
            out["details"] = self.details
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2, default=str)

    def summary(self) -> str:
        return (f"{self.suite}: {self.passes} passes, {len(self.failures)} failures, "
                f"{len(self.unknowns)} unknowns")
