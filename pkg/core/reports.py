import hashlib
import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

from core.exact_algebra import Rational, format_rational


@dataclass(frozen=True)
class EntryResult:
    """Outcome of checking one table entry or one identity."""

    label: str
    passed: bool
    detail: str = ""

    def to_dict(self) -> Dict[str, Any]:
        result = {"label": self.label, "passed": self.passed}
        if self.detail:
            result["detail"] = self.detail
        return result


@dataclass(frozen=True)
class VerificationReport:
    """Per-entry pass/fail data of a verification suite."""

    name: str
    entries: Sequence[EntryResult]
    notes: Dict[str, Any] = field(default_factory=dict)

    @property
    def all_passed(self) -> bool:
        return all(entry.passed for entry in self.entries)

    @property
    def failures(self) -> List[str]:
        return [entry.label for entry in self.entries if not entry.passed]

    def entry(self, label: str) -> EntryResult:
        for candidate in self.entries:
            if candidate.label == label:
                return candidate
        raise KeyError(label)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "passed": self.all_passed,
            "checked": len(self.entries),
            "failures": self.failures,
            "notes": self.notes,
        }


@dataclass(frozen=True)
class CohomologyReport:
    """Ranks of the differentials and the four Poisson cohomology dimensions."""

    target: str
    ranks: Dict[str, int]
    dims: Sequence[int]
    kernel_basis: Sequence[Sequence[Rational]] = ()
    kernel_labels: Sequence[str] = ()
    checks: Dict[str, bool] = field(default_factory=dict)

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** i * d for i, d in enumerate(self.dims))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "target": self.target,
            "ranks": dict(self.ranks),
            "dims": list(self.dims),
            "euler_characteristic": self.euler_characteristic,
            "checks": dict(self.checks),
            "kernel_basis": [
                {label: format_rational(x) for label, x in zip(self.kernel_labels, vector) if x}
                for vector in self.kernel_basis
            ],
        }


@dataclass
class RunReport:
    """Machine-readable outcome of one CLI command."""

    command: str
    input_digest: str
    ok: bool = True
    checks: Dict[str, bool] = field(default_factory=dict)
    residuals: Dict[str, str] = field(default_factory=dict)
    ranks: Dict[str, int] = field(default_factory=dict)
    dims: Optional[List[int]] = None
    details: Dict[str, Any] = field(default_factory=dict)
    error: Optional[str] = None
    duration: Optional[float] = None

    def record(self, name: str, passed: bool) -> None:
        self.checks[name] = bool(passed)
        if not passed:
            self.ok = False

    def fail(self, message: str) -> None:
        self.ok = False
        self.error = message

    def to_dict(self) -> Dict[str, Any]:
        result: Dict[str, Any] = {
            "command": self.command,
            "input_digest": self.input_digest,
            "ok": self.ok,
            "checks": self.checks,
            "residuals": self.residuals,
            "ranks": self.ranks,
            "dims": self.dims,
            "details": self.details,
        }
        if self.error is not None:
            result["error"] = self.error
        if self.duration is not None:
            result["duration_seconds"] = round(self.duration, 3)
        return result

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    def summary_lines(self) -> List[str]:
        lines = [f"command: {self.command}", f"ok: {str(self.ok).lower()}"]
        lines += [f"check {name}: {'pass' if passed else 'FAIL'}" for name, passed in self.checks.items()]
        if self.ranks:
            lines.append("ranks: " + ", ".join(f"{k}={v}" for k, v in self.ranks.items()))
        if self.dims is not None:
            lines.append(f"dims: {self.dims}")
        lines += [f"residual {name} = {value}" for name, value in self.residuals.items()]
        if self.error:
            lines.append(f"error: {self.error}")
        return lines


def input_digest(payload: Any) -> str:
    """sha256 of the canonical JSON form of a parsed input."""
    canonical = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def residuals_to_json(residuals: Dict[str, Rational]) -> Dict[str, str]:
    return {name: format_rational(value) for name, value in residuals.items()}
