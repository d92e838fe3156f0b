"""Method dispatch, cross-checking sweeps and timing runs."""

from __future__ import annotations

import os
import time
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from statistics import mean
from typing import Iterable, Iterator

import numpy as np

from .boolean import BooleanFunction, DomainError
from .f2solver import F2Run, simonetti_nonlinearity
from .nlpoly import build_nl_poly, nonlinearity_nnf, nonlinearity_q_loop
from .transforms import OpCounter, nonlinearity_fwt

METHODS = ("fwt", "nnf", "f2", "q-loop")


@dataclass
class RunReport:
    method: str
    n: int
    nonlinearity: int
    micros: float
    counters: dict[str, int] = field(default_factory=dict)
    f2_runs: list[F2Run] = field(default_factory=list)


def run_method(f: BooleanFunction, method: str) -> RunReport:
    if method not in METHODS:
        raise DomainError(f"unknown method {method!r}; choose from {', '.join(METHODS)}")
    counters: dict[str, int] = {}
    runs: list[F2Run] = []
    start = time.perf_counter()
    if method == "fwt":
        nl = nonlinearity_fwt(f)
    elif method == "nnf":
        nl = nonlinearity_nnf(f)
    elif method == "q-loop":
        nl = nonlinearity_q_loop(f)
    else:
        nl = simonetti_nonlinearity(f, runs=runs)
    micros = (time.perf_counter() - start) * 1e6
    if method in ("nnf", "q-loop") and f.n >= 1:
        ops = OpCounter()
        build_nl_poly(f, ops)
        counters["additions"] = ops.additions
    if runs:
        counters["generators_checked"] = sum(r.generators_checked for r in runs)
        counters["generators_sufficient"] = sum(r.generators_sufficient for r in runs)
    return RunReport(method, f.n, nl, micros, counters, runs)


def function_set(n: int, exhaustive: bool, sample: int = 0, seed: int = 0) -> Iterator[tuple[int, BooleanFunction]]:
    """(index, function) pairs; sampled function i uses the seed pair (seed, i)."""
    if exhaustive:
        if n > 4:
            raise DomainError("exhaustive sweeps are limited to n <= 4")
        for value in range(1 << (1 << n)):
            yield value, BooleanFunction.from_int(n, value)
    else:
        for i in range(sample):
            yield i, BooleanFunction.random(n, np.random.default_rng([seed, i]))


@dataclass
class SweepItem:
    index: int
    tt: int
    reports: dict[str, RunReport]

    @property
    def agree(self) -> bool:
        return len({r.nonlinearity for r in self.reports.values()}) <= 1


def _work(args: tuple[int, int, int, tuple[str, ...]]) -> SweepItem:
    index, n, value, methods = args
    f = BooleanFunction.from_int(n, value)
    return SweepItem(index, value, {m: run_method(f, m) for m in methods})


def thread_cap() -> int:
    try:
        return max(1, int(os.environ.get("NLTOOL_THREADS", "1")))
    except ValueError:
        return 1


def run_sweep(functions: Iterable[tuple[int, BooleanFunction]], methods: Iterable[str],
              workers: int | None = None) -> list[SweepItem]:
    methods = tuple(methods)
    for m in methods:
        if m not in METHODS:
            raise DomainError(f"unknown method {m!r}")
    jobs = [(i, f.n, f.to_int(), methods) for i, f in functions]
    workers = thread_cap() if workers is None else workers
    if workers <= 1 or len(jobs) < 64:
        items = [_work(job) for job in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            items = list(pool.map(_work, jobs, chunksize=max(1, len(jobs) // (8 * workers))))
    items.sort(key=lambda it: it.index)
    return items


@dataclass
class ClassStats:
    """Per-nonlinearity-class summary of a sweep."""

    nl: int
    count: int = 0
    # t -> list of (checked, sufficient) over functions of this class
    f2: dict[int, list[tuple[int, int]]] = field(default_factory=lambda: defaultdict(list))

    def f2_table(self) -> dict[int, dict[str, float]]:
        out = {}
        for t, pairs in sorted(self.f2.items()):
            suff = [s for _, s in pairs]
            out[t] = {
                "S": mean(suff),
                "m": min(suff),
                "M": max(suff),
                "C": mean(c for c, _ in pairs),
            }
        return out


def summarize(items: list[SweepItem], reference: str) -> dict[int, ClassStats]:
    classes: dict[int, ClassStats] = {}
    for it in items:
        nl = it.reports[reference].nonlinearity
        stats = classes.setdefault(nl, ClassStats(nl))
        stats.count += 1
        f2 = it.reports.get("f2")
        if f2 is not None:
            for run in f2.f2_runs:
                stats.f2[run.t].append((run.generators_checked, run.generators_sufficient))
    return dict(sorted(classes.items()))


def report_json(item: SweepItem, method: str, n: int) -> dict:
    from .formats import format_tt_hex

    r = item.reports[method]
    return {
        "n": n,
        "tt": format_tt_hex(BooleanFunction.from_int(n, item.tt)),
        "nl": r.nonlinearity,
        "method": method,
        "counters": dict(sorted(r.counters.items())),
        "micros": round(r.micros, 1),
    }


def bench(n: int, reps: int, methods: Iterable[str], seed: int = 0) -> dict[str, dict[str, float]]:
    """Time each method on ``reps`` seeded random functions."""
    funcs = [f for _, f in function_set(n, False, reps, seed)]
    table = {}
    for m in methods:
        times = [run_method(f, m).micros for f in funcs]
        table[m] = {"mean_us": mean(times), "min_us": min(times), "max_us": max(times)}
    return table
