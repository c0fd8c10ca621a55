"""Signature sweeps: the closed-form classification against exhaustive search."""

from __future__ import annotations

import csv
import itertools
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import prod
from typing import TextIO

from .aggraph import build
from .factoring import Signature
from .holes import BudgetExceeded, HoleWitness, is_berge
from .invariants import compute_invariants
from .theorem import is_perfect_theorem

log = logging.getLogger(__name__)

CSV_COLUMNS = (
    "signature",
    "vertex_count",
    "theorem_perfect",
    "spgt_perfect",
    "agree",
    "witness",
    "omega",
    "chi",
    "elapsed_ms",
)


@dataclass(frozen=True)
class SweepConfig:
    max_primes: int
    max_exponent: int
    max_vertices: int
    check_invariants: bool = False
    budget_s: float = 60.0
    jobs: int = 1

    def __post_init__(self):
        for name in ("max_primes", "max_exponent", "max_vertices"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be >= 1")
        if self.budget_s <= 0:
            raise ValueError("budget_s must be positive")


@dataclass(frozen=True)
class SweepRow:
    signature: Signature
    vertex_count: int
    theorem_perfect: bool
    spgt_perfect: bool | None
    witness: HoleWitness | None = None
    witness_text: str = ""
    omega: int | None = None
    chi: int | None = None
    elapsed_ms: float = 0.0
    skipped: bool = False

    @property
    def agree(self) -> bool | None:
        if self.skipped:
            return None
        return self.theorem_perfect == self.spgt_perfect

    def csv_fields(self, timing: bool = True) -> list[str]:
        def fmt(x):
            return "" if x is None else str(x).lower() if isinstance(x, bool) else str(x)

        return [
            str(self.signature),
            str(self.vertex_count),
            fmt(self.theorem_perfect),
            "skipped" if self.skipped else fmt(self.spgt_perfect),
            "skipped" if self.skipped else fmt(self.agree),
            self.witness_text,
            fmt(self.omega),
            fmt(self.chi),
            f"{self.elapsed_ms:.1f}" if timing else "",
        ]


def enumerate_signatures(c: SweepConfig) -> list[Signature]:
    """Non-increasing exponent tuples within the config bounds, by length then lexicographically."""
    out = []
    for k in range(1, c.max_primes + 1):
        found = False
        for exps in itertools.combinations_with_replacement(range(1, c.max_exponent + 1), k):
            exps = exps[::-1]
            if prod(e + 1 for e in exps) - 2 <= c.max_vertices:
                out.append(exps)
                found = True
        if not found:
            # every longer tuple has even more vertices
            break
    return [Signature(e) for e in sorted(out, key=lambda e: (len(e), e))]


def sweep_row(s: Signature, check_invariants: bool = False, budget_s: float = 60.0) -> SweepRow:
    start = time.monotonic()
    deadline = start + budget_s
    g = build(s)
    theorem = is_perfect_theorem(s)
    try:
        if time.monotonic() > deadline:
            raise BudgetExceeded("graph construction used up the budget")
        verdict = is_berge(g, deadline=deadline)
        omega = chi = None
        if check_invariants:
            report = compute_invariants(g, deadline=deadline)
            omega, chi = report.omega, report.chi
    except BudgetExceeded:
        log.warning("signature %s skipped: exceeded %.0f s budget", s, budget_s)
        return SweepRow(
            s, g.vertex_count, theorem, None,
            elapsed_ms=(time.monotonic() - start) * 1e3, skipped=True,
        )
    w = verdict.witness
    return SweepRow(
        signature=s,
        vertex_count=g.vertex_count,
        theorem_perfect=theorem,
        spgt_perfect=verdict.is_berge,
        witness=w,
        witness_text=w.describe(g) if w is not None else "",
        omega=omega,
        chi=chi,
        elapsed_ms=(time.monotonic() - start) * 1e3,
    )


def _row_job(args):
    return sweep_row(*args)


def run_sweep(c: SweepConfig) -> list[SweepRow]:
    """One row per signature, in enumeration order."""
    jobs = [(s, c.check_invariants, c.budget_s) for s in enumerate_signatures(c)]
    if c.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=c.jobs) as pool:
            rows = list(pool.map(_row_job, jobs))
    else:
        rows = [_row_job(j) for j in jobs]
    for r in rows:
        if r.agree is False:
            log.error("counterexample row: %s theorem=%s spgt=%s", r.signature, r.theorem_perfect, r.spgt_perfect)
    return rows


def write_csv(rows: list[SweepRow], out: TextIO, timing: bool = True) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in rows:
        writer.writerow(r.csv_fields(timing))
