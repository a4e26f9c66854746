"""Decision procedures and verifiers for syzygy-type and Gorenstein-type conditions.

Membership of a module in R_n compares the indecomposable injective types of
its minimal injective resolution with those of the regular module.  Because
a direct summand of an arbitrary coproduct only constrains which types occur,
that comparison uses type sets; the finite direct sums in the short exact
sequence inequalities use type multisets.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Sequence

from .homological import (
    ThreeValued,
    Verdict,
    ext_dim,
    ext_module,
    is_n_torsionfree,
    torsionless_obstruction,
)
from .path_algebra import MonomialAlgebra
from .rep import (
    Rep,
    RepMap,
    format_types,
    is_isomorphic,
    regular,
    socle_types,
    strip_projective_summands,
    type_set,
)
from .resolutions import (
    INJECTIVE,
    ExceedsCap,
    inj_dim,
    min_resolution,
    proj_dim,
    regular_injective_resolution,
    side_algebra,
    syzygy,
)


@dataclass
class ConditionReport:
    """Outcome of one check.  ``verdict`` is a bool, a Verdict, or None when skipped."""

    name: str
    params: dict[str, Any]
    verdict: Any
    evidence: dict[str, Any] = field(default_factory=dict)

    def __bool__(self):
        v = self.verdict
        if isinstance(v, ThreeValued):
            v = v.verdict
        return v is True or v is Verdict.YES or v is Verdict.SAMPLED_PASS

    @property
    def skipped(self) -> bool:
        return self.verdict is None

    def format(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in self.params.items())
        lines = [f"{self.name} [{params}]: {_fmt_verdict(self.verdict)}"]
        for k, v in self.evidence.items():
            lines.append(f"  {k}: {v}")
        return "\n".join(lines)


def _fmt_verdict(v) -> str:
    if v is None:
        return "skipped"
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


@dataclass
class SES:
    """0 -> A -f-> B -g-> C -> 0."""

    A: Rep
    B: Rep
    C: Rep
    f: RepMap
    g: RepMap

    def validate(self) -> None:
        if not (self.f.source is self.A and self.f.target is self.B
                and self.g.source is self.B and self.g.target is self.C):
            raise ValueError("malformed SES: maps do not match the modules")
        if not self.f.is_injective():
            raise ValueError("malformed SES: A -> B is not injective")
        if not self.g.is_surjective():
            raise ValueError("malformed SES: B -> C is not surjective")
        if not self.g.compose(self.f).is_zero():
            raise ValueError("malformed SES: composite is not zero")
        if any(a + c != b for a, b, c in zip(self.A.dims, self.B.dims, self.C.dims)):
            raise ValueError("malformed SES: dimensions are not additive")


# ---------------------------------------------------------------- R_n


def _regular_types(alg: MonomialAlgebra, depth: int) -> list[Counter]:
    res = regular_injective_resolution(alg, depth)
    return [res.type_at(i) for i in range(depth)]


def rn_property(M: Rep, n: int) -> ConditionReport:
    """Does I_i(M) only use types occurring in I_0(R), ..., I_i(R), for all i < n?"""
    if n < 0:
        raise ValueError("n must be nonnegative")
    params = {"n": n}
    if n == 0:
        return ConditionReport("rn", params, True, {"reason": "vacuous"})
    res = min_resolution(M, INJECTIVE, n)
    reg = _regular_types(M.algebra, n)
    allowed: set[int] = set()
    degrees = []
    for i in range(n):
        allowed |= type_set(reg[i])
        t = type_set(res.type_at(i))
        degrees.append(format_types(res.type_at(i)))
        if not t <= allowed:
            return ConditionReport("rn", params, False, {
                "degree": i, "types": degrees, "extra_types": sorted(t - allowed),
                "allowed": sorted(allowed)})
    return ConditionReport("rn", params, True, {"types": degrees})


def in_rn(M: Rep, n: int) -> bool:
    return bool(rn_property(M, n))


# ---------------------------------------------------------------- G_n(k), n-Gorenstein


def check_Gnk(alg: MonomialAlgebra, side: str, n: int, k: int,
              cap: int | None = None) -> ConditionReport:
    """pd I_i <= i + k for 0 <= i < n, I_. the minimal injective resolution of the
    regular module on ``side``.  The strict reading pd I_i < i + k is reported too."""
    if n < 1 or k < 0:
        raise ValueError("need n >= 1 and k >= 0")
    if cap is None:
        cap = n + k
    B = side_algebra(alg, side)
    res = regular_injective_resolution(B, n)
    table: list[int | ExceedsCap] = []
    verdict: bool | Verdict = True
    strict = True
    for i in range(n):
        term = res.term(i)
        pd = 0 if term is None else proj_dim(term, cap)
        table.append(pd)
        if isinstance(pd, ExceedsCap):
            if pd.cap >= i + k:
                verdict = False
            elif verdict is True:
                verdict = Verdict.UNKNOWN
            strict = False
        else:
            if pd > i + k:
                verdict = False
            if term is not None and pd >= i + k:
                strict = False
    evidence = {"pd_table": [str(x) for x in table],
                "types": [format_types(res.type_at(i)) for i in range(n)]}
    if strict != (verdict is True):
        evidence["strict_reading"] = strict
    return ConditionReport("gnk", {"side": side, "n": n, "k": k}, verdict, evidence)


def is_n_gorenstein(alg: MonomialAlgebra, n: int, cap: int | None = None) -> ConditionReport:
    """G_n(0), evaluated on both sides; the two verdicts must agree."""
    left = check_Gnk(alg, "left", n, 0, cap)
    right = check_Gnk(alg, "right", n, 0, cap)
    evidence = {"left": _fmt_verdict(left.verdict), "right": _fmt_verdict(right.verdict),
                "pd_left": left.evidence["pd_table"], "pd_right": right.evidence["pd_table"],
                "symmetric": left.verdict == right.verdict}
    return ConditionReport("gorenstein", {"n": n}, left.verdict, evidence)


def check_gnk_sample(alg: MonomialAlgebra, n: int, k: int,
                     sample: Sequence[Rep]) -> ConditionReport:
    """Necessary-condition test of g_n(k) on a finite sample of modules.

    Checks Ext^j_{A^op}(Ext^{i+k}_A(M, A), A) = 0 for 1 <= i <= n, 0 <= j < i.
    A violation certifies NO; otherwise the verdict is SAMPLED-PASS.
    """
    op_regular = regular(alg.opposite())
    for index, M in enumerate(sample):
        if M.algebra != alg:
            raise ValueError("sample module over a different algebra")
        for i in range(1, n + 1):
            E = ext_module(M, i + k)
            if E.dim == 0:
                continue
            for j in range(i):
                d = ext_dim(E, op_regular, j)
                if d:
                    return ConditionReport("gnk_sample", {"n": n, "k": k}, Verdict.NO, {
                        "module": index, "i": i, "j": j, "ext_dim": d,
                        "inner_ext_dims": E.dims})
    return ConditionReport("gnk_sample", {"n": n, "k": k}, Verdict.SAMPLED_PASS,
                           {"sample_size": len(sample)})


# ---------------------------------------------------------------- syzygies


def is_syzygy_witness(M: Rep, A: Rep, n: int) -> bool:
    """M ≅ Ω^n(A) ⊕ (projective), checked after stripping projective summands."""
    omega = syzygy(A, n)
    core_m, proj_m = strip_projective_summands(M)
    core_o, proj_o = strip_projective_summands(omega)
    return proj_o <= proj_m and is_isomorphic(core_m, core_o)


def syzygy_membership(M: Rep, n: int, witness: Rep | None = None,
                      cap: int | None = None) -> ThreeValued:
    """Is M an n-syzygy?  YES / NO with certificates, UNKNOWN otherwise.

    YES: n-torsionfree (T_n ⊆ Ω_n); a witness A with M ≅ Ω^n A ⊕ P; for n = 1,
    torsionless; in R_n over an n-Gorenstein algebra.
    NO: outside R_n (Ω_n ⊆ R_n); for n = 1, not torsionless.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if witness is not None and is_syzygy_witness(M, witness, n):
        return ThreeValued(Verdict.YES, {"reason": "explicit syzygy witness"})
    if is_n_torsionfree(M, n):
        return ThreeValued(Verdict.YES, {"reason": f"{n}-torsionfree"})
    rn = rn_property(M, n)
    if not rn:
        return ThreeValued(Verdict.NO, {"reason": f"R_{n} fails", **rn.evidence})
    if n == 1:
        K = torsionless_obstruction(M)
        if K.dim == 0:
            return ThreeValued(Verdict.YES, {"reason": "torsionless"})
        return ThreeValued(Verdict.NO, {
            "reason": "not torsionless", "obstruction_dims": K.dims,
            "failing_socle_types": dict(sorted(socle_types(K).items()))})
    gor = is_n_gorenstein(M.algebra, n, cap)
    if gor.verdict is True:
        return ThreeValued(Verdict.YES, {"reason": f"in R_{n} over an {n}-Gorenstein algebra"})
    return ThreeValued(Verdict.UNKNOWN, {"reason": f"in R_{n}, not {n}-torsionfree, "
                                                   f"algebra not certified {n}-Gorenstein"})


# ---------------------------------------------------------------- cogenerators


def cogenerator_check(alg: MonomialAlgebra, n: int) -> ConditionReport:
    """Does I_0(R) ⊕ ... ⊕ I_n(R) contain every indecomposable injective?"""
    if n < 0:
        raise ValueError("n must be nonnegative")
    reg = _regular_types(alg, n + 1)
    covered = set().union(*(type_set(t) for t in reg))
    missing = [v for v in alg.vertices if v not in covered]
    evidence = {"types": [format_types(t) for t in reg], "covered": sorted(covered)}
    if missing:
        evidence["witness_vertex"] = missing[0]
        evidence["missing"] = missing
    return ConditionReport("cogenerator", {"n": n}, not missing, evidence)


def verify_prop27(M: Rep, n: int) -> ConditionReport:
    """If pd M <= n, the types of I_0(M) occur among those of I_0(R), ..., I_n(R)."""
    pd = proj_dim(M, n)
    params = {"n": n}
    if isinstance(pd, ExceedsCap):
        return ConditionReport("injective_embedding", params, None, {"pd": str(pd)})
    reg = _regular_types(M.algebra, n + 1)
    allowed = set().union(*(type_set(t) for t in reg))
    soc = type_set(socle_types(M))
    return ConditionReport("injective_embedding", params, soc <= allowed, {
        "pd": pd, "I0_types": sorted(soc), "allowed": sorted(allowed)})


def find_rn_gap(modules: Sequence[Rep], n: int) -> Rep | None:
    """First module in R_n but not in R_{n+1}, if any."""
    for M in modules:
        if in_rn(M, n) and not in_rn(M, n + 1):
            return M
    return None


# ---------------------------------------------------------------- short exact sequences


def _resolve(M: Rep, depth: int) -> list[Counter]:
    res = min_resolution(M, INJECTIVE, depth)
    return [res.type_at(i) for i in range(depth)]


def verify_lemma21(s: SES, depth: int = 3) -> ConditionReport:
    """For 0 <= i <= depth, with I_{-1} = 0:

    (1) I_i(B) ≤ I_i(A) ⊕ I_i(C)
    (2) I_i(C) ≤ I_i(B) ⊕ I_{i+1}(A) ⊕ I_{i-1}(A) ⊕ I_{i-1}(C)
    (3) I_i(A) ≤ I_i(B) ⊕ I_{i-1}(A) ⊕ I_{i-1}(C)
    as multisets of indecomposable injective types.
    """
    s.validate()
    ta = _resolve(s.A, depth + 2)
    tb = _resolve(s.B, depth + 2)
    tc = _resolve(s.C, depth + 2)

    def at(ts, i):
        return ts[i] if i >= 0 else Counter()

    checks = []
    for i in range(depth + 1):
        checks.append((1, i, at(tb, i), at(ta, i) + at(tc, i)))
        checks.append((2, i, at(tc, i), at(tb, i) + at(ta, i + 1) + at(ta, i - 1) + at(tc, i - 1)))
        checks.append((3, i, at(ta, i), at(tb, i) + at(ta, i - 1) + at(tc, i - 1)))
    params = {"depth": depth}
    for part, i, lhs, rhs in checks:
        if not lhs <= rhs:
            return ConditionReport("ses_types", params, False, {
                "part": part, "degree": i, "lhs": format_types(lhs), "rhs": format_types(rhs),
                "I(A)": [format_types(t) for t in ta], "I(B)": [format_types(t) for t in tb],
                "I(C)": [format_types(t) for t in tc]})
    return ConditionReport("ses_types", params, True, {"checked": len(checks)})


def check_resolving(s: SES, n: int) -> ConditionReport:
    """Extension closure and closure under kernels of epimorphisms for R_n."""
    a, b, c = in_rn(s.A, n), in_rn(s.B, n), in_rn(s.C, n)
    c_prev = in_rn(s.C, n - 1) if n >= 1 else True
    failures = []
    if a and c and not b:
        failures.append("extension-closure")
    if b and c_prev and not a:
        failures.append("kernel-closure")
    if not in_rn(regular(s.A.algebra), n):
        failures.append("projectives")
    return ConditionReport("resolving", {"n": n}, not failures, {
        "A": a, "B": b, "C": c, "C_prev": c_prev, "failures": failures})


# ---------------------------------------------------------------- Gorenstein summary


def gorenstein_summary(alg: MonomialAlgebra, cap: int = 6) -> ConditionReport:
    """Self-injective dimensions on both sides, pd of each I_i, and the verdict
    "Gorenstein with self-injective dimension at most n" from id R <= n plus
    finite flat dimension of I_0(R) ⊕ ... ⊕ I_n(R)."""
    id_left = inj_dim(regular(alg), cap)
    id_right = inj_dim(regular(alg.opposite()), cap)
    evidence: dict[str, Any] = {"id_left": str(id_left), "id_right": str(id_right)}
    for side, idv in (("left", id_left), ("right", id_right)):
        B = side_algebra(alg, side)
        span = idv + 1 if isinstance(idv, int) else cap + 1
        res = regular_injective_resolution(B, span)
        evidence[f"pd_I_{side}"] = [str(proj_dim(res.terms[i], cap)) for i in range(len(res.terms))]
    verdict: bool | Verdict
    if isinstance(id_left, int):
        n = id_left
        pds = evidence["pd_I_left"][: n + 1]
        if all(not x.startswith(">") for x in pds):
            verdict = True
            evidence["gorenstein_dimension"] = n
        else:
            verdict = Verdict.UNKNOWN
        gor = is_n_gorenstein(alg, max(n, 1))
        evidence["n_gorenstein"] = _fmt_verdict(gor.verdict)
        if gor.verdict is True:
            # an n-Gorenstein algebra with id R <= n is Gorenstein
            evidence["corollary_gorenstein"] = verdict is True
    else:
        verdict = Verdict.UNKNOWN
    both = isinstance(id_left, int) and isinstance(id_right, int)
    evidence["symmetric"] = (id_left == id_right) if both else "undetermined"
    return ConditionReport("gorenstein_summary", {"cap": cap}, verdict, evidence)


# ---------------------------------------------------------------- infinity-syzygy certificates


def verify_syzygy_resolution(M: Rep, terms: Sequence[Rep], maps: Sequence[RepMap],
                             augmentation: RepMap, depth: int = 3) -> ConditionReport:
    """Check a claimed resolution 0 -> X_n -> ... -> X_0 -> M -> 0 by modules that are
    torsionfree up to ``depth``.  ``maps[i]`` is X_{i+1} -> X_i."""
    from .resolutions import is_exact_at

    problems = []
    if not augmentation.is_surjective() or augmentation.target is not M:
        problems.append("augmentation is not onto M")
    chain = [augmentation] + list(maps)
    for i, (lower, upper) in enumerate(zip(chain, chain[1:])):
        if not is_exact_at(upper, lower):
            problems.append(f"not exact at X_{i}")
    if not chain[-1].is_injective():
        problems.append("leftmost map is not injective")
    for i, X in enumerate(terms):
        if X.dim and not is_n_torsionfree(X, depth):
            problems.append(f"X_{i} is not {depth}-torsionfree")
    return ConditionReport("syzygy_resolution", {"length": len(terms) - 1, "depth": depth},
                           not problems, {"problems": problems})
