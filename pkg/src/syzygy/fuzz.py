"""Randomized property campaigns with per-trial seeds.

Trial ``i`` of a campaign with master seed ``s`` draws everything from
``SeedSequence([s, i])`` and works over ``algebras[i % len(algebras)]``, so the
outcome does not depend on how trials are spread over worker processes.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .conditions import check_resolving, in_rn, syzygy_membership, verify_lemma21
from .corpus import CORPUS, builtin, random_module, random_ses
from .formats import format_module
from .homological import Verdict, is_n_torsionfree
from .resolutions import syzygy

KINDS = ("lemma21", "prop22", "resolving")
DEFAULT_BUDGET = 4


@dataclass
class TrialResult:
    index: int
    algebra: str
    ok: bool
    max_dim: int
    detail: str = ""
    size: int = 0


@dataclass
class Summary:
    kind: str
    trials: int
    seed: int
    algebras: list[str]
    results: list[TrialResult] = field(default_factory=list)

    @property
    def violations(self) -> list[TrialResult]:
        return [r for r in self.results if not r.ok]

    @property
    def max_dim(self) -> int:
        return max((r.max_dim for r in self.results), default=0)

    def counterexample(self) -> TrialResult | None:
        """The smallest violating trial."""
        bad = self.violations
        return min(bad, key=lambda r: (r.size, r.index)) if bad else None

    def format(self) -> str:
        lines = [f"fuzz {self.kind}", f"seed\t{self.seed}", f"trials\t{self.trials}",
                 f"algebras\t{','.join(self.algebras)}", f"violations\t{len(self.violations)}",
                 f"max_dim\t{self.max_dim}"]
        return "\n".join(lines) + "\n"


def default_seed() -> int:
    return int(os.environ.get("SYZYGY_SEED", "0"))


def trial_rng(seed: int, index: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([seed, index]))


def run_trial(kind: str, name: str, p: int, seed: int, index: int,
              budget: int = DEFAULT_BUDGET, depth: int = 3) -> TrialResult:
    alg = builtin(name, p).algebra
    rng = trial_rng(seed, index)
    if kind == "lemma21":
        s = random_ses(alg, budget, rng)
        report = verify_lemma21(s, depth)
        size = s.B.dim
        detail = "" if report else _ses_text(s, name, report)
        return TrialResult(index, name, bool(report), size, detail, size)
    if kind == "prop22":
        M = random_module(alg, budget, rng)
        n = int(rng.integers(1, 4))
        omega = syzygy(M, n)
        problems = []
        if not in_rn(omega, n):
            problems.append(f"syzygy of order {n} is outside R_{n}")
        if is_n_torsionfree(M, n) and syzygy_membership(M, n).verdict is Verdict.NO:
            problems.append(f"{n}-torsionfree module reported as not an {n}-syzygy")
        detail = ""
        if problems:
            detail = "\n".join(problems) + "\n" + format_module(M, name)
        return TrialResult(index, name, not problems, max(M.dim, omega.dim), detail, M.dim)
    if kind == "resolving":
        s = random_ses(alg, budget, rng)
        n = int(rng.integers(1, 4))
        report = check_resolving(s, n)
        detail = "" if report else _ses_text(s, name, report)
        return TrialResult(index, name, bool(report), s.B.dim, detail, s.B.dim)
    raise ValueError(f"unknown fuzz kind {kind!r}")


def _ses_text(s, name, report) -> str:
    return "\n".join([report.format(), "# A", format_module(s.A, name), "# B",
                      format_module(s.B, name), "# C", format_module(s.C, name)])


def _run_chunk(args) -> list[TrialResult]:
    kind, plan, p, seed, budget, depth = args
    return [run_trial(kind, name, p, seed, i, budget, depth) for i, name in plan]


def run_campaign(kind: str, trials: int, seed: int | None = None,
                 algebras: list[str] | None = None, jobs: int = 1, p: int = 2,
                 budget: int = DEFAULT_BUDGET, depth: int = 3) -> Summary:
    if kind not in KINDS:
        raise ValueError(f"unknown fuzz kind {kind!r}")
    if trials < 1:
        raise ValueError("trials must be at least 1")
    seed = default_seed() if seed is None else seed
    algebras = list(algebras or CORPUS)
    plan = [(i, algebras[i % len(algebras)]) for i in range(trials)]
    summary = Summary(kind, trials, seed, algebras)
    if jobs <= 1:
        summary.results = _run_chunk((kind, plan, p, seed, budget, depth))
        return summary
    chunks = [plan[j::jobs] for j in range(jobs)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = pool.map(_run_chunk, [(kind, c, p, seed, budget, depth) for c in chunks if c])
        results = [r for part in parts for r in part]
    summary.results = sorted(results, key=lambda r: r.index)
    return summary
