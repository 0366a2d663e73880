"""Verification reports shared by the ehrhart and identities modules."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


def _jsonable(value: Any) -> Any:
    # big integers travel as decimal strings
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    return str(value)


@dataclass
class Report:
    identity: str
    params: dict
    lhs: Any
    rhs: Any
    witness_count: int | None = None
    passed: bool = False
    details: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.passed

    def to_dict(self) -> dict:
        out = {
            "identity": self.identity,
            "params": {k: v for k, v in self.params.items()},
            "lhs": _jsonable(self.lhs),
            "rhs": _jsonable(self.rhs),
            "witness_count": self.witness_count,
            "pass": self.passed,
        }
        if self.details:
            out["details"] = list(self.details)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        params = " ".join(f"{k}={v}" for k, v in self.params.items())
        return f"{status} {self.identity} {params}"
