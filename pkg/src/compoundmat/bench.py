"""Determinant benchmark: wall time plus machine-independent operation counts."""

from __future__ import annotations

import csv
import io
import random
import time
from dataclasses import dataclass

from .exact_core import PERMUTATION_ORACLE_MAX, counting_ops, format_rational
from .laplace import DetStrategy, determinant
from .sampling import random_matrix

SIZE_LIMITS = {"permutation": PERMUTATION_ORACLE_MAX, "cofactor": 10}

CSV_FIELDS = ("strategy", "n", "trial", "status", "det", "scalar_ops", "minor_evals", "wall_time")


@dataclass(frozen=True)
class BenchRecord:
    strategy: str
    n: int
    trial: int
    status: str
    det: str = ""
    scalar_ops: int | None = None
    minor_evals: int | None = None
    wall_time: float | None = None


def bench_matrix(seed: int, n: int, trial: int):
    """The input shared by every strategy for one ``(n, trial)`` cell."""
    return random_matrix(random.Random(f"bench:{seed}:{n}:{trial}"), n)


def run_bench(sizes, strategies, seed: int = 0, trials: int = 1) -> list[BenchRecord]:
    parsed = [s if isinstance(s, DetStrategy) else DetStrategy.parse(s) for s in strategies]
    records = []
    for n in sizes:
        for trial in range(trials):
            a = bench_matrix(seed, n, trial)
            for strat in parsed:
                limit = SIZE_LIMITS.get(strat.kind)
                rows = strat.resolve_rows(n)
                too_big = limit is not None and n > limit
                bad_rows = n > 1 and any(r > n for r in rows)
                if too_big or bad_rows:
                    records.append(BenchRecord(str(strat), n, trial, "skipped"))
                    continue
                with counting_ops() as ops:
                    t0 = time.perf_counter()
                    d = determinant(a, strat)
                    elapsed = time.perf_counter() - t0
                records.append(
                    BenchRecord(
                        str(strat), n, trial, "ok", format_rational(d),
                        ops.scalar_ops, ops.minor_evals, elapsed,
                    )
                )
    return records


def records_to_csv(records: list[BenchRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    for r in records:
        w.writerow(
            [
                r.strategy, r.n, r.trial, r.status, r.det,
                "" if r.scalar_ops is None else r.scalar_ops,
                "" if r.minor_evals is None else r.minor_evals,
                "" if r.wall_time is None else f"{r.wall_time:.6f}",
            ]
        )
    return buf.getvalue()
