"""Built-in example algebras and seeded random generators for modules and SESs."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Any, Callable

import numpy as np

from .conditions import SES, is_n_gorenstein
from .path_algebra import MonomialAlgebra, Quiver, from_names
from .rep import (
    Rep,
    cokernel,
    generated_submodule,
    generator_offset,
    map_from_generators,
    projective_sum,
    quotient,
    regular,
)
from .resolutions import ExceedsCap, inj_dim, proj_dim, regular_injective_resolution


@dataclass
class CorpusEntry:
    """An algebra together with facts about it that the library can recompute.

    ``facts`` maps a fact name to ``(value, provenance)``.
    """

    name: str
    algebra: MonomialAlgebra
    facts: dict[str, tuple[Any, str]] = field(default_factory=dict)

    def fact(self, key: str):
        return self.facts[key][0]

    def recompute(self, key: str):
        return FACT_CHECKERS[key](self.algebra)

    def validate(self) -> list[str]:
        """Names of facts whose recomputed value differs from the recorded one."""
        return [k for k, (v, _) in self.facts.items() if self.recompute(k) != v]


def _gorenstein(alg: MonomialAlgebra, cap: int = 6) -> bool:
    left, right = inj_dim(regular(alg), cap), inj_dim(regular(alg.opposite()), cap)
    return isinstance(left, int) and isinstance(right, int)


def _id(alg: MonomialAlgebra, cap: int = 6):
    d = inj_dim(regular(alg), cap)
    return str(d) if isinstance(d, ExceedsCap) else d


FACT_CHECKERS: dict[str, Callable[[MonomialAlgebra], Any]] = {
    "dim": lambda a: a.dim,
    "vertices": lambda a: a.n,
    "arrows": lambda a: len(a.arrows),
    "relations": lambda a: len(a.minimal_relations()),
    "id_left": _id,
    "id_right": lambda a: _id(a.opposite()),
    "gorenstein": _gorenstein,
    "one_gorenstein": lambda a: is_n_gorenstein(a, 1).verdict is True,
    "pd_I0": lambda a: proj_dim(regular_injective_resolution(a, 1).terms[0]),
}

HAND = "hand computation"
EXAMPLE = "published worked example"


def lambda_algebra(p: int = 2) -> MonomialAlgebra:
    """Quiver 1 -a1-> 2, 2 -a2-> 3, 2 -a3-> 4 with a2 a1 = 0 = a3 a1."""
    return from_names(4, [("a1", 1, 2), ("a2", 2, 3), ("a3", 2, 4)],
                      [("a2", "a1"), ("a3", "a1")], p)


def linear_an(n: int, p: int = 2) -> MonomialAlgebra:
    """Equioriented 1 -> 2 -> ... -> n, no relations."""
    if n < 1:
        raise ValueError("linear_An needs n >= 1")
    return from_names(n, [(f"a{i}", i, i + 1) for i in range(1, n)], (), p)


def loop(m: int, p: int = 2) -> MonomialAlgebra:
    """k[x]/(x^m)."""
    if m < 2:
        raise ValueError("loop(m) needs m >= 2")
    return from_names(1, [("x", 1, 1)], [("x",) * m], p)


def cyclic_nakayama(n: int, t: int, p: int = 2) -> MonomialAlgebra:
    """Cyclic quiver 1 -> 2 -> ... -> n -> 1 with every path of length t killed."""
    if n < 1 or t < 2:
        raise ValueError("cyclic_nakayama(n, t) needs n >= 1 and t >= 2")
    q = Quiver(n, [(f"c{i}", i, i % n + 1) for i in range(1, n + 1)])
    rels = []
    for start in range(1, n + 1):
        # arrow indices along the cycle from ``start``, written right-to-left
        walk = [(start - 1 + j) % n for j in range(t)]
        rels.append(list(reversed(walk)))
    return MonomialAlgebra(q, rels, p)


def _entry_lambda(p: int) -> CorpusEntry:
    return CorpusEntry("paper_lambda", lambda_algebra(p), {
        "dim": (7, HAND), "vertices": (4, HAND), "arrows": (3, HAND), "relations": (2, HAND),
        "pd_I0": (1, EXAMPLE), "id_left": (2, HAND), "id_right": (2, HAND),
        "gorenstein": (True, HAND), "one_gorenstein": (False, HAND)})


def _entry_an(n: int, p: int) -> CorpusEntry:
    idv = 1 if n >= 2 else 0
    return CorpusEntry(f"linear_An({n})", linear_an(n, p), {
        "dim": (n * (n + 1) // 2, HAND), "id_left": (idv, HAND), "id_right": (idv, HAND),
        "gorenstein": (True, HAND), "one_gorenstein": (True, HAND), "pd_I0": (0, HAND)})


def _entry_loop(m: int, p: int) -> CorpusEntry:
    return CorpusEntry(f"loop({m})", loop(m, p), {
        "dim": (m, HAND), "id_left": (0, HAND), "id_right": (0, HAND),
        "gorenstein": (True, HAND), "one_gorenstein": (True, HAND), "pd_I0": (0, HAND)})


def _entry_nakayama(n: int, t: int, p: int) -> CorpusEntry:
    return CorpusEntry(f"cyclic_nakayama({n},{t})", cyclic_nakayama(n, t, p), {
        "dim": (n * t, HAND), "id_left": (0, HAND), "id_right": (0, HAND),
        "gorenstein": (True, HAND), "pd_I0": (0, HAND)})


_NAME = re.compile(r"^\s*([A-Za-z_]+)\s*(?:\(([^)]*)\))?\s*$")


def builtin(name: str, p: int = 2) -> CorpusEntry:
    """Look up ``paper_lambda`` (alias ``lambda``), ``linear_An(n)``, ``loop(m)`` or
    ``cyclic_nakayama(n,t)``."""
    m = _NAME.match(name)
    if not m:
        raise ValueError(f"unknown corpus algebra {name!r}")
    base, raw = m.group(1), m.group(2)
    try:
        args = [int(x) for x in raw.split(",")] if raw else []
    except ValueError:
        raise ValueError(f"non-integer parameters in {name!r}") from None

    def need(k):
        if len(args) != k:
            raise ValueError(f"{base} takes {k} parameter(s), got {len(args)}")

    if base in ("paper_lambda", "lambda"):
        need(0)
        return _entry_lambda(p)
    if base == "linear_An":
        need(1)
        return _entry_an(args[0], p)
    if base == "loop":
        need(1)
        return _entry_loop(args[0], p)
    if base == "cyclic_nakayama":
        need(2)
        return _entry_nakayama(args[0], args[1], p)
    raise ValueError(f"unknown corpus algebra {name!r}")


CORPUS = ["paper_lambda", "linear_An(2)", "linear_An(3)", "loop(2)", "loop(3)",
          "cyclic_nakayama(3,2)", "cyclic_nakayama(2,3)"]


def corpus_entries(p: int = 2) -> list[CorpusEntry]:
    return [builtin(name, p) for name in CORPUS]


# ---------------------------------------------------------------- random generators


def _rng(seed) -> np.random.Generator:
    return seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)


def random_module(alg: MonomialAlgebra, size_budget: int, seed=0,
                  relations: int | None = None) -> Rep:
    """Cokernel of a random map ⊕P(w_j) -> ⊕P(v_i), at most ``size_budget`` summands each.

    Relations are drawn from the radical of ⊕P(v_i), as in a minimal
    presentation, so every module can occur.  ``relations=0`` gives the
    projective sum itself.  Deterministic per seed.
    """
    if size_budget < 1:
        raise ValueError("size_budget must be at least 1")
    rng = _rng(seed)
    verts = list(alg.vertices)
    gens = [int(v) for v in rng.choice(verts, size=int(rng.integers(1, size_budget + 1)))]
    P = projective_sum(alg, gens)
    if relations is None:
        relations = int(rng.integers(0, size_budget + 1))
    src = [int(v) for v in rng.choice(verts, size=relations)] if relations else []
    Q = projective_sum(alg, src)
    images = []
    for w in src:
        x = rng.integers(0, alg.p, size=P.dim_at(w))
        for i, v in enumerate(gens):
            if v == w:
                x[generator_offset(alg, gens, i)] = 0
        images.append(x)
    if not src:
        return P
    return cokernel(map_from_generators(Q, P, images))[0]


def random_ses(alg: MonomialAlgebra, size_budget: int, seed=0,
               elements: int | None = None) -> SES:
    """B random, A the submodule generated by random elements, C = B/A."""
    rng = _rng(seed)
    B = random_module(alg, size_budget, rng)
    if elements is None:
        elements = int(rng.integers(0, size_budget + 1))
    support = [v for v in alg.vertices if B.dim_at(v)]
    chosen = []
    for _ in range(elements if support else 0):
        v = int(rng.choice(support))
        chosen.append((v, rng.integers(0, alg.p, size=B.dim_at(v))))
    A, f = generated_submodule(B, chosen)
    C, g = quotient(B, [f.at(v) for v in alg.vertices])
    s = SES(A, B, C, f, g)
    s.validate()
    return s
