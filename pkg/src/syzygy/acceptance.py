"""The acceptance checklist, shared by ``syzygy verify-paper`` and the test suite.

Each criterion returns ``(ok, detail)``; ``run_all`` prints one line per
criterion and returns True iff everything passed.
"""

from __future__ import annotations

import itertools
import sys
import time
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from . import linalg as la
from .conditions import (
    cogenerator_check,
    gorenstein_summary,
    in_rn,
    is_n_gorenstein,
    rn_property,
    syzygy_membership,
)
from .corpus import CORPUS, CorpusEntry, builtin, corpus_entries, random_module
from .fuzz import run_campaign
from .homological import Verdict, ext_dim, is_torsionless, transpose
from .rep import Rep, is_isomorphic, k_dual, regular, simple, strip_projective_summands
from .resolutions import inj_dim, proj_dim, regular_injective_resolution


@dataclass
class Criterion:
    number: str
    title: str
    run: Callable[[], tuple[bool, str]]
    time_limit: float | None = None


def _lambda():
    return builtin("paper_lambda").algebra


def crit_worked_example() -> tuple[bool, str]:
    L = _lambda()
    I0 = regular_injective_resolution(L, 1).terms[0]
    pd = proj_dim(I0)
    rn = bool(rn_property(I0, 1))
    mem = syzygy_membership(I0, 1)
    failing = mem.certificate.get("failing_socle_types", {})
    ok = pd == 1 and rn and mem.verdict is Verdict.NO and 3 in failing
    return ok, f"pd I_0 = {pd}; I_0 in R_1: {rn}; 1-syzygy: {mem} (obstruction socle {failing})"


def crit_lambda_resolution() -> tuple[bool, str]:
    L = _lambda()
    res = regular_injective_resolution(L, 4)
    types = [dict(sorted(t.items())) for t in res.types]
    expected = [{2: 1, 3: 2, 4: 2}, {2: 3}, {1: 3}]
    left, right = inj_dim(regular(L)), inj_dim(regular(L.opposite()))
    ok = types == expected and res.terminated and left == 2 and right == 2
    return ok, f"types {types}, terminated {res.terminated}, id left {left}, id right {right}"


def _campaign(kind: str, trials: int, seed: int) -> tuple[bool, str]:
    s = run_campaign(kind, trials, seed)
    algs = len(set(r.algebra for r in s.results))
    ok = not s.violations and len(s.results) == trials and algs >= 4
    return ok, f"{trials} trials over {algs} algebras, {len(s.violations)} violations, max dim {s.max_dim}"


def crit_ses_fuzz(seed: int = 0) -> tuple[bool, str]:
    return _campaign("lemma21", 500, seed)


def crit_syzygy_fuzz(seed: int = 0) -> tuple[bool, str]:
    return _campaign("prop22", 200, seed)


def all_representations(alg, dims: Sequence[int]):
    """Every representation of a quiver without relations with the given dimension vector."""
    p = alg.p
    shapes = [(dims[a.target - 1], dims[a.source - 1]) for a in alg.arrows]
    sizes = [r * c for r, c in shapes]
    for entries in itertools.product(range(p), repeat=sum(sizes)):
        action, pos = [], 0
        for (r, c), k in zip(shapes, sizes):
            action.append(np.array(entries[pos:pos + k], dtype=np.int64).reshape(r, c))
            pos += k
        yield Rep(alg, dims, action)


def crit_exhaustive_a2() -> tuple[bool, str]:
    alg = builtin("linear_An(2)").algebra
    count, bad = 0, []
    for d1, d2 in itertools.product(range(3), repeat=2):
        for M in all_representations(alg, (d1, d2)):
            count += 1
            if in_rn(M, 1) != is_torsionless(M):
                bad.append((M.dims, [m.tolist() for m in M.action]))
    gnk = is_n_gorenstein(alg, 2)
    ok = not bad and gnk.verdict is True and gnk.evidence["pd_left"] == ["0", "1"]
    return ok, f"{count} representations, {len(bad)} disagreements, pd table {gnk.evidence['pd_left']}"


def crit_cogenerator_lambda(seed: int = 0) -> tuple[bool, str]:
    L = _lambda()
    c1, c2 = cogenerator_check(L, 1), cogenerator_check(L, 2)
    S2 = simple(L, 2)
    gap = in_rn(S2, 1) and not in_rn(S2, 2)
    found = []
    for i in range(200):
        M = random_module(L, 4, np.random.default_rng([seed, i]))
        if in_rn(M, 2) and not in_rn(M, 3):
            found.append(i)
    ok = (not c1 and c1.evidence.get("witness_vertex") == 1 and gap and bool(c2) and not found)
    return ok, (f"n=1: {bool(c1)} (missing vertex {c1.evidence.get('witness_vertex')}); "
                f"S(2) in R_1 minus R_2: {gap}; n=2: {bool(c2)}; "
                f"sampled members of R_2 minus R_3: {len(found)}/200")


def crit_gorenstein_corpus() -> tuple[bool, str]:
    notes = []
    ok = True
    for name, expected in (("loop(3)", 0), ("linear_An(2)", 1)):
        s = gorenstein_summary(builtin(name).algebra)
        ev = s.evidence
        good = (s.verdict is True and ev["id_left"] == str(expected)
                and ev["id_right"] == str(expected) and ev.get("gorenstein_dimension") == expected)
        if expected == 0:
            good = good and all(x == "0" for x in ev["pd_I_left"] + ev["pd_I_right"])
        ok &= good
        notes.append(f"{name}: id {ev['id_left']}/{ev['id_right']}")
    for entry in corpus_entries():
        for n in (1, 2, 3):
            g = is_n_gorenstein(entry.algebra, n)
            if not g.evidence["symmetric"]:
                ok = False
                notes.append(f"asymmetric {entry.name} n={n}")
    if ok:
        notes.append("left and right n-Gorenstein verdicts agree")
    return ok, "; ".join(notes)


def crit_transpose(seed: int = 0) -> tuple[bool, str]:
    names = CORPUS
    bad = 0
    for i in range(100):
        alg = builtin(names[i % len(names)]).algebra
        M = random_module(alg, 4, np.random.default_rng([seed, i]))
        core, _ = strip_projective_summands(M)
        if not is_isomorphic(transpose(transpose(core)), core, seed=i):
            bad += 1
    return bad == 0, f"100 modules, {bad} failures of Tr Tr M = M"


def crit_ext_simples() -> tuple[bool, str]:
    bad = []
    for entry in corpus_entries():
        alg = entry.algebra
        rels = alg.minimal_relations()
        for i in alg.vertices:
            for j in alg.vertices:
                arrows = sum(1 for a in alg.arrows if a.source == i and a.target == j)
                nrel = sum(1 for r in rels if r.start == i and r.end == j)
                e1 = ext_dim(simple(alg, i), simple(alg, j), 1)
                e2 = ext_dim(simple(alg, i), simple(alg, j), 2)
                if (e1, e2) != (arrows, nrel):
                    bad.append(f"{entry.name} ({i},{j}): {(e1, e2)} != {(arrows, nrel)}")
    return not bad, f"{len(CORPUS)} algebras; mismatches: {bad or 'none'}"


def crit_duality_numerics(seed: int = 0) -> tuple[bool, str]:
    bad = 0
    for i in range(100):
        alg = builtin(CORPUS[i % len(CORPUS)]).algebra
        M = random_module(alg, 4, np.random.default_rng([seed, i, 1]))
        DD = k_dual(k_dual(M))
        if DD.algebra is not alg or not is_isomorphic(DD, M, seed=i):
            bad += 1
    rng = np.random.default_rng([seed, 2])
    rn_bad = 0
    for _ in range(1000):
        p = int(rng.choice([2, 3, 5, 7]))
        r, c = (int(x) for x in rng.integers(0, 9, size=2))
        m = rng.integers(0, p, size=(r, c))
        if la.rank(m, p) + la.kernel_basis(m, p).shape[1] != c:
            rn_bad += 1
    return bad == 0 and rn_bad == 0, f"D D M = M failures {bad}/100; rank-nullity failures {rn_bad}/1000"


def crit_corpus(entries: Sequence[CorpusEntry] | None = None) -> tuple[bool, str]:
    entries = corpus_entries() if entries is None else entries
    failed = [f"{e.name}.{k}" for e in entries for k in e.validate()]
    return not failed, f"{len(entries)} entries; failed facts: {', '.join(failed) or 'none'}"


def criteria(entries: Sequence[CorpusEntry] | None = None) -> list[Criterion]:
    return [
        Criterion("0", "corpus facts recompute", lambda: crit_corpus(entries)),
        Criterion("1", "worked example: pd I_0, R_1, not a 1-syzygy", crit_worked_example, 1.0),
        Criterion("2", "injective resolution of Lambda, id on both sides", crit_lambda_resolution),
        Criterion("3", "SES type inclusions, 500 random sequences", crit_ses_fuzz, 60.0),
        Criterion("4", "syzygies satisfy R_n, 200 random modules", crit_syzygy_fuzz),
        Criterion("5", "R_1 iff torsionless over A2, exhaustive", crit_exhaustive_a2),
        Criterion("6", "cogenerator verdicts and R_n gaps on Lambda", crit_cogenerator_lambda),
        Criterion("7", "Gorenstein summaries and left/right symmetry", crit_gorenstein_corpus),
        Criterion("8", "transpose is an involution on stable modules", crit_transpose),
        Criterion("9", "Ext^1 and Ext^2 between simples", crit_ext_simples),
        Criterion("10", "vector space duality and rank-nullity", crit_duality_numerics),
    ]


def run_criterion(c: Criterion) -> tuple[bool, str, float]:
    start = time.perf_counter()
    try:
        ok, detail = c.run()
    except Exception as e:  # a crash is a failure, reported with its message
        ok, detail = False, f"error: {type(e).__name__}: {e}"
    elapsed = time.perf_counter() - start
    if ok and c.time_limit is not None and elapsed > c.time_limit:
        ok, detail = False, f"{detail}; took {elapsed:.2f}s, limit {c.time_limit}s"
    return ok, detail, elapsed


def format_line(c: Criterion, ok: bool, detail: str) -> str:
    return f"[{'PASS' if ok else 'FAIL'}] {c.number:>2} {c.title}: {detail}"


def run_all(out=None, err=None, entries: Sequence[CorpusEntry] | None = None,
            total_limit: float = 300.0) -> bool:
    """Print one line per criterion (timings go to ``err``); True iff all pass."""
    out = out or sys.stdout
    err = err or sys.stderr
    start = time.perf_counter()
    all_ok = True
    for c in criteria(entries):
        ok, detail, elapsed = run_criterion(c)
        all_ok &= ok
        print(format_line(c, ok, detail), file=out)
        print(f"criterion {c.number}: {elapsed:.2f}s", file=err)
    total = time.perf_counter() - start
    if total > total_limit:
        print(f"[FAIL] whole suite took {total:.1f}s, limit {total_limit}s", file=out)
        all_ok = False
    print(f"total {total:.2f}s", file=err)
    return all_ok
