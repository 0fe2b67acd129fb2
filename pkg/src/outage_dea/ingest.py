"""CSV ingestion and report serialization.

Files are UTF-8 CSV with a fixed header. Only ``.`` is accepted as the
decimal separator. Errors carry the 1-based line number of the offending row.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
import math
from dataclasses import dataclass, field

from .cost import EnergyDistribution, InterruptionCostEstimate, OutageRecord
from .dea import Dataset, EfficiencyResult, Producer

PRODUCERS_HEADER = ("id", "electricity_mwh", "raw_materials_e10_rial", "labor_hours_e6", "sales_e10_rial")
OUTAGES_HEADER = ("producer_id", "duration_h", "demand_mw")
DISTRIBUTIONS_HEADER = ("producer_id", "mean_mwh", "std_mwh")
SAMPLES_HEADER = ("producer_id", "sample_index", "e0_mwh", "beta", "ic_rial_per_kwh")


class ParseError(ValueError):
    def __init__(self, message, line=None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _rows(text, header):
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    text = text.lstrip("﻿")
    reader = csv.reader(io.StringIO(text, newline=""))
    lines = [(reader.line_num, row) for row in reader]
    lines = [(n, [c.strip() for c in row]) for n, row in lines if any(c.strip() for c in row)]
    if not lines:
        raise ParseError("missing header")
    n0, got = lines[0]
    if tuple(got) != header:
        raise ParseError(f"expected header {','.join(header)!r}, got {','.join(got)!r}", n0)
    for n, row in lines[1:]:
        if tuple(row) == header:
            raise ParseError("duplicate header", n)
        if len(row) != len(header):
            raise ParseError(f"expected {len(header)} fields, got {len(row)}", n)
        yield n, row


def _number(cell, name, line):
    try:
        v = float(cell)
    except ValueError:
        raise ParseError(f"{name} is not a number: {cell!r}", line) from None
    if not math.isfinite(v) or cell.lower().lstrip("+-") in ("inf", "infinity", "nan"):
        raise ParseError(f"{name} must be finite: {cell!r}", line)
    return v


def parse_producers(text) -> Dataset:
    producers, seen = [], {}
    for n, row in _rows(text, PRODUCERS_HEADER):
        pid = row[0]
        if not pid:
            raise ParseError("empty producer id", n)
        if pid in seen:
            raise ParseError(f"duplicate producer id {pid!r} (first seen on line {seen[pid]})", n)
        seen[pid] = n
        e, r, l, s = (_number(c, h, n) for c, h in zip(row[1:], PRODUCERS_HEADER[1:]))
        try:
            producers.append(Producer(pid, e, r, l, s))
        except ValueError as exc:
            raise ParseError(str(exc), n) from None
    if not producers:
        raise ParseError("no producers")
    return Dataset(producers)


def format_producers(dataset: Dataset) -> str:
    """Inverse of :func:`parse_producers` (floats written losslessly)."""
    out = [",".join(PRODUCERS_HEADER)]
    for p in dataset:
        vals = (p.electricity_mwh, p.raw_materials, p.labor_hours, p.sales_value)
        out.append(",".join([p.id, *(_fmt(v) for v in vals)]))
    return "\n".join(out) + "\n"


def parse_outages(text) -> list[OutageRecord]:
    records = []
    for n, row in _rows(text, OUTAGES_HEADER):
        if not row[0]:
            raise ParseError("empty producer id", n)
        duration = _number(row[1], "duration_h", n)
        demand = _number(row[2], "demand_mw", n) if row[2] else None
        try:
            records.append(OutageRecord(row[0], duration, demand))
        except ValueError as exc:
            raise ParseError(str(exc), n) from None
    return records


def parse_distributions(text, dataset: Dataset) -> list[EnergyDistribution]:
    """Parse ``(mean, std)`` rows; base consumption is looked up in ``dataset``."""
    dists, seen = [], set()
    for n, row in _rows(text, DISTRIBUTIONS_HEADER):
        pid = row[0]
        if pid in seen:
            raise ParseError(f"duplicate producer id {pid!r}", n)
        seen.add(pid)
        try:
            base = dataset[dataset.index_of(pid)].electricity_mwh
        except KeyError:
            raise ParseError(f"unknown producer id {pid!r}", n) from None
        mean = _number(row[1], "mean_mwh", n)
        std = _number(row[2], "std_mwh", n)
        try:
            dists.append(EnergyDistribution(pid, mean, std, base))
        except ValueError as exc:
            raise ParseError(str(exc), n) from None
    return dists


def file_digest(data) -> str:
    if isinstance(data, str):
        data = data.encode("utf-8")
    return "sha256:" + hashlib.sha256(data).hexdigest()


@dataclass
class ProducerReport:
    producer_id: str
    electricity_mwh: float
    efficiency_index: float
    z: float
    distribution: EnergyDistribution
    estimate: InterruptionCostEstimate


@dataclass
class Report:
    producers: list[ProducerReport]
    seed: int
    n_samples: int
    version: str
    input_digests: dict[str, str] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)


def _fmt(v):
    # repr is the shortest string that round-trips the double
    if v is None:
        return ""
    return repr(float(v))


def _json_num(v):
    return None if v is None or not math.isfinite(v) else float(v)


def report_to_dict(report: Report) -> dict:
    producers = []
    for pr in report.producers:
        est, d = pr.estimate, pr.distribution
        producers.append({
            "producer_id": pr.producer_id,
            "electricity_mwh": pr.electricity_mwh,
            "efficiency_index": pr.efficiency_index,
            "z": pr.z,
            "distribution": {"mean_mwh": d.mean_mwh, "std_mwh": d.std_mwh, "base_mwh": d.base_mwh},
            "mean_ic": _json_num(est.mean_ic),
            "std_ic": _json_num(est.std_ic),
            "mean_point_ic": _json_num(est.mean_point_ic),
            "n_requested": est.n_requested,
            "n_used": est.n_used,
            "skipped_samples": list(est.skipped),
            "samples": [
                {"sample_index": i, "e0_mwh": e0, "beta": beta, "ic_rial_per_kwh": ic}
                for i, (e0, beta, ic) in _indexed(est)
            ],
        })
    return {
        "meta": {
            "tool": "outage-dea",
            "version": report.version,
            "seed": report.seed,
            "n_samples": report.n_samples,
            "input_digests": dict(report.input_digests),
        },
        "producers": producers,
        "notes": list(report.notes),
    }


def _indexed(est: InterruptionCostEstimate):
    skipped = set(est.skipped)
    used = (i for i in range(est.n_requested) if i not in skipped)
    return zip(used, est.samples)


def write_report(report: Report, format: str = "json") -> str:
    """Serialize deterministically; ``csv`` writes only the per-sample series."""
    if format == "json":
        return json.dumps(report_to_dict(report), indent=2, sort_keys=True, allow_nan=False) + "\n"
    if format == "csv":
        lines = [",".join(SAMPLES_HEADER)]
        for pr in report.producers:
            for i, (e0, beta, ic) in _indexed(pr.estimate):
                lines.append(",".join([pr.producer_id, str(i), _fmt(e0), _fmt(beta), _fmt(ic)]))
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown report format {format!r}")


def efficiency_to_dict(results: list[EfficiencyResult]) -> dict:
    return {
        "producers": [
            {"producer_id": r.producer_id, "z": r.z, "efficiency_index": r.efficiency_index,
             "lambda": [float(v) for v in r.lam]}
            for r in results
        ]
    }


def write_efficiency(results: list[EfficiencyResult], format: str = "json") -> str:
    if format == "json":
        return json.dumps(efficiency_to_dict(results), indent=2, sort_keys=True) + "\n"
    if format == "csv":
        lines = ["producer_id,z,efficiency_index"]
        lines += [f"{r.producer_id},{_fmt(r.z)},{_fmt(r.efficiency_index)}" for r in results]
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {format!r}")
