from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class Report:
    """Itemized pass/fail outcome of a verification routine."""

    name: str
    items: list[tuple[str, bool]] = field(default_factory=list)
    info: dict[str, Any] = field(default_factory=dict)

    def add(self, label: str, ok: bool) -> bool:
        self.items.append((label, bool(ok)))
        return bool(ok)

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.items)

    @property
    def failures(self) -> list[str]:
        return [label for label, ok in self.items if not ok]

    def summary(self) -> str:
        n_ok = sum(ok for _, ok in self.items)
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}: {n_ok}/{len(self.items)}"

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "items": [{"label": label, "ok": ok} for label, ok in self.items],
            "info": {k: _jsonable(v) for k, v in self.info.items()},
        }


def _jsonable(v):
    if isinstance(v, (str, int, bool)) or v is None:
        return v
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    return str(v)
