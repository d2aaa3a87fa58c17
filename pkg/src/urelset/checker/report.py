from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional


@dataclass
class Obligation:
    id: str
    description: str
    anchor: str
    instances: int
    status: str
    counterexample: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "description": self.description,
            "anchor": self.anchor,
            "instances": self.instances,
            "status": self.status,
            "counterexample": self.counterexample,
        }


@dataclass
class Report:
    suite: str
    bounds: dict
    obligations: list[Obligation] = field(default_factory=list)
    elapsed_ms: int = 0

    @property
    def passed(self) -> bool:
        return all(o.passed for o in self.obligations)

    @property
    def instances(self) -> int:
        return sum(o.instances for o in self.obligations)

    def summary(self) -> str:
        ok = sum(o.passed for o in self.obligations)
        return (
            f"{self.suite}: {ok}/{len(self.obligations)} obligations passed "
            f"({self.instances} instances)"
        )

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "bounds": dict(self.bounds),
            "obligations": [o.to_dict() for o in self.obligations],
            "elapsed_ms": self.elapsed_ms,
        }

    def to_json(self, indent: Optional[int] = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, ensure_ascii=False)

    def format_text(self) -> str:
        b = self.bounds
        lines = [
            f"suite {self.suite}  atoms={','.join(b['atoms'])} max_rank={b['max_rank']} "
            f"max_width={b['max_width']} max_n={b['max_n']}"
        ]
        for o in self.obligations:
            mark = "PASS" if o.passed else "FAIL"
            lines.append(f"  {mark} {o.id:<34} {o.instances:>8}  {o.description}")
            if o.counterexample is not None:
                lines.append(f"       counterexample: {o.counterexample}")
        lines.append(self.summary() + f" in {self.elapsed_ms} ms")
        return "\n".join(lines)
