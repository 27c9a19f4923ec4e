"""Benchmark driver: solve instances with and without symmetry breaking.

Each instance yields one record comparing the plain solve against the full
pipeline (symmetry detection + SBP generation + solve); the pipeline side
charges detection and generation time to its total, and aborted runs
report the time limit itself as their time.
"""

from __future__ import annotations

import concurrent.futures
import csv
import time
from dataclasses import dataclass

from .automorphism import detect_symmetries
from .formula import Formula, parse_dimacs
from .graph import EncodeMode
from .sbp import generate_sbps
from .solver import Status, solve_bnb

CSV_COLUMNS = ["name", "variant", "cls_sbp", "orig_time", "sbp_time", "orig_nodes", "sbp_nodes"]


@dataclass
class BenchRecord:
    name: str
    variant: str
    cls_sbp: int
    orig_time: float
    sbp_time: float
    orig_nodes: int
    sbp_nodes: int
    orig_status: str = "OPTIMUM"
    sbp_status: str = "OPTIMUM"
    orig_cost: int | None = None
    sbp_cost: int | None = None
    error: str | None = None

    def row(self) -> list[str]:
        return [
            self.name,
            self.variant,
            str(self.cls_sbp),
            f"{self.orig_time:.2f}",
            f"{self.sbp_time:.2f}",
            str(self.orig_nodes),
            str(self.sbp_nodes),
        ]


def run_instance(
    name: str,
    formula: Formula,
    time_limit: float = 1000.0,
    max_generators: int | None = None,
    mode: EncodeMode = EncodeMode.CLAUSE_VERTEX,
) -> BenchRecord:
    """Benchmark one instance; timeouts are recorded as the limit value."""
    orig = solve_bnb(formula, time_limit=time_limit)
    orig_time = time_limit if orig.status is Status.UNKNOWN else orig.elapsed

    pipeline_start = time.monotonic()
    generators = detect_symmetries(formula, mode).generators
    if max_generators is not None:
        generators = generators[:max_generators]
    augmented, sbp_info = generate_sbps(formula, generators)
    overhead = time.monotonic() - pipeline_start
    sbp = solve_bnb(augmented, time_limit=time_limit)
    sbp_time = time_limit if sbp.status is Status.UNKNOWN else overhead + sbp.elapsed

    return BenchRecord(
        name=name,
        variant=formula.variant.value,
        cls_sbp=sbp_info.num_clauses,
        orig_time=orig_time,
        sbp_time=sbp_time,
        orig_nodes=orig.nodes,
        sbp_nodes=sbp.nodes,
        orig_status=orig.status.value,
        sbp_status=sbp.status.value,
        orig_cost=orig.cost,
        sbp_cost=sbp.cost,
    )


def _run_path(args) -> BenchRecord:
    path, time_limit, max_generators = args
    name = path.rsplit("/", 1)[-1]
    try:
        with open(path, "r", encoding="utf-8") as fh:
            formula = parse_dimacs(fh.read())
    except (OSError, ValueError) as exc:
        return BenchRecord(name, "-", 0, 0.0, 0.0, 0, 0, error=str(exc))
    return run_instance(name, formula, time_limit=time_limit, max_generators=max_generators)


def run_bench(
    paths: list[str],
    time_limit: float = 1000.0,
    max_generators: int | None = None,
    jobs: int = 1,
) -> list[BenchRecord]:
    """Benchmark a list of instance files; per-instance failures become
    error records and the run continues.  Records keep input order."""
    work = [(p, time_limit, max_generators) for p in paths]
    if jobs <= 1:
        return [_run_path(w) for w in work]
    with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_path, work))


def format_table(records: list[BenchRecord]) -> str:
    """Aligned text table over the CSV columns."""
    rows = [CSV_COLUMNS] + [r.row() for r in records]
    widths = [max(len(row[i]) for row in rows) for i in range(len(CSV_COLUMNS))]
    lines = []
    for row in rows:
        lines.append("  ".join(cell.rjust(w) for cell, w in zip(row, widths)))
    for r in records:
        if r.error:
            lines.append(f"c {r.name}: error: {r.error}")
    return "\n".join(lines) + "\n"


def write_csv(records: list[BenchRecord], path: str) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_COLUMNS)
        for r in records:
            writer.writerow(r.row())
