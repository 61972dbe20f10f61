"""Verification records and their deterministic serialization."""
import json
from dataclasses import dataclass, field
from fractions import Fraction

from . import __version__

SCHEMA = "cyquot-report/1"

PASS = "pass"
FAIL = "fail"
EXPECTED_FAIL = "expected-fail"
ERROR = "error"

OK_STATUSES = (PASS, EXPECTED_FAIL)


@dataclass
class CheckRecord:
    check_id: str
    anchor: str
    status: str
    computed: object
    oracle: object
    budget_s: float = None
    elapsed_s: float = None
    note: str = ""

    @property
    def ok(self):
        return self.status in OK_STATUSES

    def to_json(self, timings=False):
        out = {"id": self.check_id, "anchor": self.anchor, "status": self.status,
               "computed": self.computed, "oracle": self.oracle}
        if self.budget_s is not None:
            out["budget_s"] = self.budget_s
        if timings and self.elapsed_s is not None:
            out["elapsed_s"] = round(self.elapsed_s, 3)
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class VerificationReport:
    config: dict
    records: list = field(default_factory=list)

    @property
    def ok(self):
        return all(r.ok for r in self.records)

    def summary(self):
        counts = {PASS: 0, EXPECTED_FAIL: 0, FAIL: 0, ERROR: 0}
        for r in self.records:
            counts[r.status] = counts.get(r.status, 0) + 1
        counts["total"] = len(self.records)
        return counts

    def to_json(self, timings=False):
        return {"schema": SCHEMA, "tool_version": __version__, "config": self.config,
                "checks": [r.to_json(timings) for r in self.records], "summary": self.summary(),
                "ok": self.ok}

    def dumps(self, timings=False):
        return json.dumps(to_plain(self.to_json(timings)), indent=2) + "\n"

    def text(self):
        lines = []
        for r in self.records:
            t = "" if r.elapsed_s is None else "  (%.2fs)" % r.elapsed_s
            lines.append("%-17s %s%s" % ("[" + r.status + "]", r.check_id, t))
            if r.note:
                lines.append("                  %s" % r.note)
        s = self.summary()
        lines.append("%d checks: %d pass, %d expected-fail, %d fail, %d error" % (
            s["total"], s[PASS], s[EXPECTED_FAIL], s[FAIL], s[ERROR]))
        return "\n".join(lines) + "\n"


def to_plain(obj):
    """Recursively convert to JSON-safe values (Fractions and tuples included)."""
    if isinstance(obj, dict):
        return {str(k): to_plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_plain(v) for v in obj]
    if isinstance(obj, Fraction):
        return str(obj) if obj.denominator != 1 else obj.numerator
    if isinstance(obj, (bool, int, float, str)) or obj is None:
        return obj
    if hasattr(obj, "to_json"):
        return to_plain(obj.to_json())
    return str(obj)
