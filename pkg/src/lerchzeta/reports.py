"""Report records and CSV/JSON emission.

Numbers travel as decimal strings carrying the full working precision
(never binary floats), so a report re-parses to exactly the in-memory
values.  CSV follows RFC-4180 quoting with one fixed header row per
theorem id; JSON is a single object {"meta", "rows", "summary"}.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field, asdict
from typing import Any

import mpmath as mp

from .approx import ComplexApprox
from .precision import mpc_to_str, mpf_to_str, str_to_mpc


@dataclass(frozen=True)
class RunConfig:
    """One CLI invocation's full configuration (determinism contract)."""

    command: str
    dps: int = 40
    theorem: str | None = None
    ranges: dict = field(default_factory=dict)
    twists: tuple[str, ...] = ()
    out: str | None = None
    format: str = "json"
    seed: int = 20260810
    workers: int = 1

    def __post_init__(self):
        if self.dps < 20:
            raise ValueError("precision must be >= 20")
        if self.format not in ("csv", "json"):
            raise ValueError(f"format must be csv or json, got {self.format}")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")


@dataclass
class MomentReport:
    """One computed moment against its prediction."""

    theorem: str
    params: dict
    computed: ComplexApprox
    predicted: ComplexApprox | None
    envelope: mp.mpf | None
    secondary: dict = field(default_factory=dict)
    runtime_s: float = 0.0
    eval_count: int = 0
    dps: int = 40

    @property
    def residual(self) -> mp.mpf:
        if self.predicted is None:
            return mp.mpf(0)
        return abs(self.computed.value - self.predicted.value)

    def to_row(self) -> dict:
        row = {
            "theorem": self.theorem,
            **{k: str(v) for k, v in self.params.items()},
            "computed": mpc_to_str(self.computed.value, self.dps),
            "computed_err": mpf_to_str(self.computed.err, self.dps),
            "residual": mpf_to_str(self.residual, self.dps),
        }
        if self.predicted is not None:
            row["predicted"] = mpc_to_str(self.predicted.value, self.dps)
            row["predicted_err"] = mpf_to_str(self.predicted.err, self.dps)
        if self.envelope is not None:
            row["envelope"] = mpf_to_str(self.envelope, self.dps)
        for k, v in self.secondary.items():
            row[k] = v if isinstance(v, str) else str(v)
        row["runtime_s"] = f"{self.runtime_s:.3f}"
        row["eval_count"] = str(self.eval_count)
        return row

    @classmethod
    def from_row(cls, row: dict, dps: int = 40) -> "MomentReport":
        with mp.workdps(dps + 12):
            computed = ComplexApprox(str_to_mpc(row["computed"], dps), mp.mpf(row["computed_err"]))
            predicted = None
            if "predicted" in row:
                predicted = ComplexApprox(str_to_mpc(row["predicted"], dps), mp.mpf(row.get("predicted_err", "0")))
            envelope = mp.mpf(row["envelope"]) if "envelope" in row else None
        known = {"theorem", "computed", "computed_err", "residual", "predicted", "predicted_err", "envelope", "runtime_s", "eval_count"}
        params = {k: v for k, v in row.items() if k not in known}
        return cls(
            theorem=row["theorem"],
            params=params,
            computed=computed,
            predicted=predicted,
            envelope=envelope,
            runtime_s=float(row.get("runtime_s", 0.0)),
            eval_count=int(row.get("eval_count", 0)),
        )


def format_value(v, dps: int) -> str:
    if isinstance(v, ComplexApprox):
        return mpc_to_str(v.value, dps)
    if isinstance(v, mp.mpc):
        return mpc_to_str(v, dps)
    if isinstance(v, mp.mpf):
        return mpf_to_str(v, dps)
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def rows_to_strings(rows: list[dict], dps: int) -> list[dict]:
    return [{k: format_value(v, dps) for k, v in row.items()} for row in rows]


def write_json(path: str, meta: dict, rows: list[dict], summary: dict, dps: int) -> None:
    payload = {
        "meta": {k: format_value(v, dps) if not isinstance(v, (str, int, dict, list)) else v for k, v in meta.items()},
        "rows": rows_to_strings(rows, dps),
        "summary": {k: format_value(v, dps) for k, v in summary.items()},
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=1, sort_keys=True)
        fh.write("\n")


def write_csv(path: str, rows: list[dict], dps: int) -> None:
    srows = rows_to_strings(rows, dps)
    columns: list[str] = []
    for row in srows:
        for k in row:
            if k not in columns:
                columns.append(k)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=columns, restval="", quoting=csv.QUOTE_MINIMAL)
        writer.writeheader()
        writer.writerows(srows)


def read_json(path: str) -> dict:
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def json_report_string(meta: dict, rows: list[dict], summary: dict, dps: int) -> str:
    buf = io.StringIO()
    json.dump(
        {
            "meta": {k: format_value(v, dps) if not isinstance(v, (str, int, dict, list)) else v for k, v in meta.items()},
            "rows": rows_to_strings(rows, dps),
            "summary": {k: format_value(v, dps) for k, v in summary.items()},
        },
        buf,
        indent=1,
        sort_keys=True,
    )
    return buf.getvalue()
