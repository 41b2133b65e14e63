"""Grid sweeps of qdepth(m^t) over (n, t) with CSV/JSON reports.

Cells are computed independently, possibly in worker processes, and always
written in (t, n) order, so reports do not depend on the worker count. The
CSV is appended while the sweep runs; a restarted sweep skips the cells it
already holds.
"""

from __future__ import annotations

import csv
import json
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass
from pathlib import Path

from qdepth import __version__
from qdepth.power import expected_m, qdepth_power_fast
from qdepth.theorems import proven_region

CSV_HEADER = ["n", "t", "m", "qdepth", "status", "witness_d", "witness_k", "witness_beta"]

PROVEN_MATCH = "proven-match"
CONJECTURAL_MATCH = "conjectural-match"
COUNTEREXAMPLE = "COUNTEREXAMPLE"
BOUND_VIOLATION = "bound-violation"
PROVEN_MISMATCH = "proven-mismatch"
STATUSES = (PROVEN_MATCH, CONJECTURAL_MATCH, COUNTEREXAMPLE, BOUND_VIOLATION, PROVEN_MISMATCH)


@dataclass(frozen=True)
class ScanCell:
    n: int
    t: int
    m_expected: int
    qdepth_computed: int
    status: str
    witness: tuple[int, int, int] | None = None

    @property
    def key(self) -> tuple[int, int]:
        return (self.t, self.n)

    def to_row(self) -> list[str]:
        w = self.witness or ("", "", "")
        return [str(v) for v in (self.n, self.t, self.m_expected, self.qdepth_computed, self.status, *w)]

    @classmethod
    def from_row(cls, row: dict[str, str]) -> ScanCell:
        witness = None
        if row["witness_d"] != "":
            witness = (int(row["witness_d"]), int(row["witness_k"]), int(row["witness_beta"]))
        return cls(int(row["n"]), int(row["t"]), int(row["m"]), int(row["qdepth"]), row["status"], witness)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "t": self.t,
            "m_expected": self.m_expected,
            "qdepth_computed": self.qdepth_computed,
            "status": self.status,
            "witness": (
                None
                if self.witness is None
                else dict(zip(("d", "k", "beta"), self.witness))
            ),
        }

    @classmethod
    def from_dict(cls, data: dict) -> ScanCell:
        w = data["witness"]
        witness = None if w is None else (w["d"], w["k"], w["beta"])
        return cls(data["n"], data["t"], data["m_expected"], data["qdepth_computed"], data["status"], witness)


def classify(n: int, t: int, qdepth: int) -> str:
    m = expected_m(n, t)
    if qdepth > m:
        return BOUND_VIOLATION
    if qdepth == m:
        return PROVEN_MATCH if proven_region(n, t) else CONJECTURAL_MATCH
    return PROVEN_MISMATCH if proven_region(n, t) else COUNTEREXAMPLE


def compute_cell(n: int, t: int) -> tuple[ScanCell, bool]:
    """The scan cell plus whether the feasible d values formed an interval."""
    res = qdepth_power_fast(n, t)
    cell = ScanCell(n, t, expected_m(n, t), res.qdepth, classify(n, t, res.qdepth), res.witness)
    return cell, res.feasible_interval


def _compute_cell_args(args):
    return compute_cell(*args)


def grid_keys(n_max: int, t_max: int) -> list[tuple[int, int]]:
    return [(t, n) for t in range(1, t_max + 1) for n in range(2, n_max + 1)]


def read_csv(path: Path) -> dict[tuple[int, int], ScanCell]:
    cells: dict[tuple[int, int], ScanCell] = {}
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames != CSV_HEADER:
            raise ValueError(f"{path}: unexpected CSV header {reader.fieldnames}")
        for row in reader:
            cell = ScanCell.from_row(row)
            cells[cell.key] = cell
    return cells


def write_csv(path: Path, cells: list[ScanCell]) -> None:
    tmp = path.with_suffix(path.suffix + ".tmp")
    with open(tmp, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        writer.writerows(c.to_row() for c in cells)
    os.replace(tmp, path)


def build_report(n_max: int, t_max: int, cells: list[ScanCell], non_interval: list[tuple[int, int]], timing: float | None = None) -> dict:
    counts = Counter(c.status for c in cells)
    report = {
        "tool": "qdepth",
        "version": __version__,
        "grid": {"n_min": 2, "n_max": n_max, "t_min": 1, "t_max": t_max},
        "cells": [c.to_dict() for c in cells],
        "summary": {
            "cells": len(cells),
            "status_counts": {s: counts.get(s, 0) for s in STATUSES},
            "non_interval_cells": [list(x) for x in non_interval],
        },
    }
    if timing is not None:
        report["timing"] = {"seconds": round(timing, 3)}
    return report


def report_paths(out: str | Path) -> tuple[Path, Path]:
    out = Path(out)
    if out.suffix in (".csv", ".json"):
        out = out.with_suffix("")
    return out.with_name(out.name + ".csv"), out.with_name(out.name + ".json")


def run_scan(n_max: int, t_max: int, out: str | Path, jobs: int = 1, progress=None) -> tuple[dict, list[ScanCell]]:
    """Fill the grid 2 <= n <= n_max, 1 <= t <= t_max and write both reports.

    Returns the report dict (without timing) and the cells in (t, n) order.
    """
    if n_max < 2 or t_max < 1:
        raise ValueError(f"need n_max >= 2 and t_max >= 1, got {n_max}, {t_max}")
    csv_path, json_path = report_paths(out)
    keys = grid_keys(n_max, t_max)
    wanted = set(keys)

    done: dict[tuple[int, int], ScanCell] = {}
    if csv_path.exists():
        done = {k: c for k, c in read_csv(csv_path).items() if k in wanted}
    write_csv(csv_path, [done[k] for k in keys if k in done])

    todo = [k for k in keys if k not in done]
    non_interval: list[tuple[int, int]] = []
    pending: dict[tuple[int, int], ScanCell] = {}
    order = iter(todo)
    next_key = next(order, None)

    with open(csv_path, "a", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")

        def accept(cell: ScanCell, interval: bool) -> None:
            nonlocal next_key
            if not interval:
                non_interval.append((cell.n, cell.t))
            pending[cell.key] = cell
            while next_key is not None and next_key in pending:
                c = pending.pop(next_key)
                done[next_key] = c
                writer.writerow(c.to_row())
                fh.flush()
                if progress:
                    progress(c)
                next_key = next(order, None)

        if jobs <= 1:
            for t, n in todo:
                accept(*compute_cell(n, t))
        else:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                # biggest cells first keeps the pool busy at the end
                ordered = sorted(todo, key=lambda k: -(k[0] * k[1]))
                futures = [pool.submit(_compute_cell_args, (n, t)) for t, n in ordered]
                for fut in as_completed(futures):
                    accept(*fut.result())

    cells = [done[k] for k in keys]
    write_csv(csv_path, cells)
    non_interval.sort(key=lambda x: (x[1], x[0]))
    report = build_report(n_max, t_max, cells, non_interval)
    return report, cells


def write_json(path: Path, report: dict) -> None:
    tmp = path.with_suffix(path.suffix + ".tmp")
    tmp.write_text(json.dumps(report, indent=2, sort_keys=True) + "\n")
    os.replace(tmp, path)
