"""Machine-readable run reports."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from typing import Any, Optional

STATUSES = ("pass", "fail", "conjectural", "error")


@dataclass
class Check:
    name: str
    status: str
    details: Any = None

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")

    def to_dict(self) -> dict:
        return {"name": self.name, "status": self.status, "details": self.details}


@dataclass
class Report:
    command: str
    config: dict
    checks: list = field(default_factory=list)
    timing_ms: Optional[float] = None
    version: str = ""

    def add(self, name: str, status: str, details: Any = None) -> Check:
        check = Check(name, status, details)
        self.checks.append(check)
        return check

    def sorted_checks(self) -> list:
        return sorted(self.checks, key=lambda c: c.name)

    @property
    def ok(self) -> bool:
        """No check failed or errored; conjectural entries do not count as failures."""
        return all(c.status in ("pass", "conjectural") for c in self.checks)

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "config": self.config,
            "checks": [c.to_dict() for c in self.sorted_checks()],
            "timing_ms": self.timing_ms,
            "version": self.version,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> "Report":
        validate_report(data)
        checks = [Check(c["name"], c["status"], c["details"]) for c in data["checks"]]
        return cls(data["command"], data["config"], checks, data["timing_ms"], data["version"])

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))


@lru_cache(maxsize=1)
def report_schema() -> dict:
    text = resources.files("helixforge").joinpath("report.schema.json").read_text()
    return json.loads(text)


def validate_report(data: dict) -> None:
    """Raise ``jsonschema.ValidationError`` if ``data`` does not match the report schema."""
    import jsonschema

    jsonschema.validate(data, report_schema())
