"""Certificates: reproducible per-instance records of exact checks."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field


@dataclass(frozen=True)
class Row:
    """One checked instance.  ``holds`` is None when undecided."""

    n: int
    lhs: str
    rhs: str
    holds: bool | None
    m: int | None = None
    label: str | None = None
    power: int = 1

    def to_dict(self) -> dict:
        d = {"n": self.n}
        if self.m is not None:
            d["m"] = self.m
        if self.label is not None:
            d["label"] = self.label
        d.update(lhs=self.lhs, rhs=self.rhs, holds=self.holds)
        if self.power != 1:
            d["power"] = self.power
        return d

    @classmethod
    def from_dict(cls, d: dict) -> Row:
        return cls(
            n=d["n"],
            lhs=d["lhs"],
            rhs=d["rhs"],
            holds=d["holds"],
            m=d.get("m"),
            label=d.get("label"),
            power=d.get("power", 1),
        )


@dataclass
class Certificate:
    claim_id: str
    params: dict[str, str] = field(default_factory=dict)
    rows: list[Row] = field(default_factory=list)

    def add(self, row: Row) -> None:
        self.rows.append(row)

    @property
    def verdict(self) -> str:
        """``AllHold``, ``ViolatedAt(n)`` or ``Undecided(n)`` for the first offending row."""
        for row in self.rows:
            if row.holds is False:
                return f"ViolatedAt({row.n})"
        for row in self.rows:
            if row.holds is None:
                return f"Undecided({row.n})"
        return "AllHold"

    @property
    def all_hold(self) -> bool:
        return all(row.holds is True for row in self.rows)

    @property
    def violated(self) -> bool:
        return any(row.holds is False for row in self.rows)

    @property
    def undecided(self) -> list[Row]:
        return [row for row in self.rows if row.holds is None]

    def first_violation(self) -> Row | None:
        return next((row for row in self.rows if row.holds is False), None)

    def to_dict(self) -> dict:
        return {
            "claim_id": self.claim_id,
            "params": dict(self.params),
            "rows": [row.to_dict() for row in self.rows],
            "verdict": self.verdict,
        }

    @classmethod
    def from_dict(cls, d: dict) -> Certificate:
        cert = cls(d["claim_id"], dict(d["params"]), [Row.from_dict(r) for r in d["rows"]])
        if cert.verdict != d.get("verdict", cert.verdict):
            raise ValueError(f"stored verdict {d['verdict']!r} disagrees with rows ({cert.verdict})")
        return cert

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    def summary(self) -> str:
        return f"{self.claim_id}: {self.verdict} ({len(self.rows)} rows)"


CSV_FIELDS = ("claim_id", "n", "m", "label", "lhs", "rhs", "holds", "power")


def _holds_text(h: bool | None) -> str:
    return "undecided" if h is None else str(h).lower()


def write_csv(certs, stream) -> None:
    """Flatten the rows of ``certs`` into one CSV table."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for cert in certs:
        for row in cert.rows:
            writer.writerow(
                [
                    cert.claim_id,
                    row.n,
                    "" if row.m is None else row.m,
                    row.label or "",
                    row.lhs,
                    row.rhs,
                    _holds_text(row.holds),
                    row.power,
                ]
            )


def to_csv(certs) -> str:
    buf = io.StringIO()
    write_csv(certs, buf)
    return buf.getvalue()
