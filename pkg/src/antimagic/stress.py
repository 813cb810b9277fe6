"""Randomised end-to-end runs: generate, label, verify."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import AntimagicError
from .generators import GenConfig, gen_connected, gen_multi
from .graph import BiregularGraph
from .labeller_odd import LabelTrace
from .multi import MultiTrace
from .pipeline import label_graph
from .verify import check_antimagic, check_structural_invariants


@dataclass
class TrialResult:
    trial: int
    seed: int
    ok: bool
    detail: str = ""
    repairs: int = 0


@dataclass
class StressSummary:
    k: int
    pipeline: str
    results: list[TrialResult] = field(default_factory=list)
    gen_errors: int = 0

    @property
    def passed(self) -> int:
        return sum(r.ok for r in self.results)

    @property
    def failed(self) -> int:
        return len(self.results) - self.passed

    @property
    def first_failure(self) -> TrialResult | None:
        return next((r for r in self.results if not r.ok), None)

    def render(self) -> str:
        lines = [f"k={self.k} pipeline={self.pipeline} trials={len(self.results) + self.gen_errors}",
                 f"passed={self.passed} failed={self.failed} generator_errors={self.gen_errors}",
                 f"repairs={sum(r.repairs for r in self.results)}"]
        bad = self.first_failure
        if bad is not None:
            lines.append(f"first_failure trial={bad.trial} seed={bad.seed} {bad.detail}")
        return "\n".join(lines) + "\n"


def _even_nx(k: int, nx: int, lo: int, hi: int) -> int:
    if (k * nx) % 2 == 0:
        return nx
    return nx + 1 if nx + 1 <= hi else nx - 1


def make_instance(k: int, pipeline: str, rng: np.random.Generator, nx_min: int, nx_max: int
                  ) -> tuple[BiregularGraph, int]:
    seed = int(rng.integers(2**63))
    if pipeline == "multi":
        count = int(rng.integers(2, 6))
        configs = [GenConfig(k, _even_nx(k, int(rng.integers(nx_min, nx_max + 1)), nx_min, nx_max),
                             seed=seed + j) for j in range(count)]
        return gen_multi(configs, k), seed
    nx = _even_nx(k, int(rng.integers(nx_min, nx_max + 1)), nx_min, nx_max)
    return gen_connected(GenConfig(k, nx, seed=seed)), seed


def run_trial(g: BiregularGraph, pipeline: str) -> tuple[bool, str, int]:
    trace = MultiTrace() if pipeline == "multi" else LabelTrace()
    lab = label_graph(g, pipeline=pipeline, trace=trace)
    result = check_antimagic(g, lab)
    if not result.ok:
        return False, f"collisions {result.collisions[:3]}", 0
    report = check_structural_invariants(
        g, lab, profile=pipeline,
        trace=trace if isinstance(trace, LabelTrace) else None,
        roots=trace.plan.roots if isinstance(trace, MultiTrace) and trace.plan else None)
    repairs = len(trace.rounds) if isinstance(trace, MultiTrace) else 0
    if not report.ok:
        return False, "; ".join(f"{c.code} {c.detail}" for c in report.failures()), repairs
    return True, "", repairs


def stress(k: int, trials: int, nx_min: int = 3, nx_max: int = 20, seed: int = 0,
           pipeline: str = "auto") -> StressSummary:
    if k < 3:
        raise AntimagicError("K_TOO_SMALL", f"k={k}")
    if trials < 1:
        raise AntimagicError("BAD_TRIALS", "trials must be at least 1")
    if not 2 <= nx_min <= nx_max:
        raise AntimagicError("BAD_RANGE", f"need 2 <= nx-min <= nx-max, got {nx_min}..{nx_max}")
    if pipeline == "auto":
        pipeline = "odd" if k % 2 else "even"
    if pipeline in ("odd", "multi") and k % 2 == 0 or pipeline == "even" and k % 2:
        raise AntimagicError("BAD_PIPELINE", f"pipeline {pipeline} does not fit k={k}")
    summary = StressSummary(k, pipeline)
    for t in range(trials):
        rng = np.random.default_rng([seed, t])
        try:
            g, inst_seed = make_instance(k, pipeline, rng, nx_min, nx_max)
        except AntimagicError:
            summary.gen_errors += 1
            continue
        try:
            ok, detail, repairs = run_trial(g, pipeline)
        except AntimagicError as exc:
            ok, detail, repairs = False, f"{exc.code}: {exc}", 0
        summary.results.append(TrialResult(t, inst_seed, ok, detail, repairs))
    return summary
