"""ResultDocument: what every command prints, as text or as JSON."""
import json
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional

from services.errors import UsageError
from services.schur.expansion import SchurExpansion

FORMATS = ("text", "json")


@dataclass
class ResultDocument:
    command: str
    algebra: Optional[str] = None
    n: Optional[int] = None
    p: Optional[int] = None
    l: Optional[int] = None
    codim: Optional[int] = None
    basis: Optional[str] = None
    terms: List[Dict[str, str]] = field(default_factory=list)
    value: Optional[str] = None
    rows: List[Dict[str, str]] = field(default_factory=list)
    report: List[Dict[str, str]] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    def set_expansion(self, expansion: SchurExpansion) -> None:
        self.terms = expansion.to_records()
        self.value = str(expansion)

    def add_check(self, check: str, status: str, detail: str = "") -> None:
        self.report.append({"check": check, "status": status, "detail": detail})

    def failed(self) -> bool:
        return any(entry["status"] != "pass" and entry["status"] != "completed" for entry in self.report)

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, ensure_ascii=False)

    @classmethod
    def from_json(cls, text: str) -> "ResultDocument":
        return cls(**json.loads(text))

    def to_text(self) -> str:
        lines = []
        if self.value is not None:
            lines.append(self.value)
        for row in self.rows:
            lines.append(" | ".join(row.values()))
        for entry in self.report:
            detail = f": {entry['detail']}" if entry.get("detail") else ""
            lines.append(f"[{entry['status'].upper()}] {entry['check']}{detail}")
        for note in self.notes:
            lines.append(f"# {note}")
        return "\n".join(lines)


def emit(doc: ResultDocument, fmt: str = "text") -> str:
    if fmt not in FORMATS:
        raise UsageError(f"unknown output format {fmt!r}, expected one of {', '.join(FORMATS)}")
    return doc.to_json() if fmt == "json" else doc.to_text()


def parse(text: str) -> ResultDocument:
    return ResultDocument.from_json(text)
