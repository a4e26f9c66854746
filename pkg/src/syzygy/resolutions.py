"""Minimal projective and injective resolutions, syzygies and dimensions."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache

from . import linalg as la
from .path_algebra import MonomialAlgebra
from .rep import (
    Rep,
    RepMap,
    cokernel,
    dual_map,
    k_dual,
    kernel,
    map_from_generators,
    projective_sum,
    regular,
    top,
)

PROJECTIVE = "projective"
INJECTIVE = "injective"


@dataclass(frozen=True)
class ExceedsCap:
    """The dimension is larger than ``cap`` (possibly infinite; we did not look further)."""

    cap: int

    def __str__(self):
        return f">{self.cap}"


def projective_cover(M: Rep) -> tuple[Rep, RepMap]:
    """Minimal epimorphism ⊕ P(v)^{t_v} -> M, t the top multiset of M.

    Generators are sent to lifts of the standard basis of top M, so the kernel
    lies in the radical of the cover.
    """
    alg = M.algebra
    p = M.p
    T, proj, types = top(M)
    gens, images = [], []
    for v in alg.vertices:
        pv = proj.at(v)
        if pv.shape[0] == 0:
            continue
        lifts = la.solve(pv, la.identity(pv.shape[0]), p)
        for k in range(pv.shape[0]):
            gens.append(v)
            images.append(lifts[:, k])
    P = projective_sum(alg, gens)
    return P, map_from_generators(P, M, images)


def injective_envelope(M: Rep) -> tuple[Rep, RepMap]:
    """Minimal monomorphism M -> ⊕ I(v)^{s_v}, computed as D(cover(D M))."""
    P, epi = projective_cover(k_dual(M))
    E = k_dual(P)
    mono = dual_map(epi)
    # D(D(M)) is M on the nose; re-anchor so the source object is M itself
    return E, RepMap(M, E, mono.maps, check=False)


@dataclass
class Resolution:
    """An initial segment of a minimal resolution.

    Projective direction: ``augmentation`` is P_0 -> M and ``maps[i]`` is
    P_{i+1} -> P_i.  Injective direction: ``augmentation`` is M -> I_0 and
    ``maps[i]`` is I_i -> I_{i+1}.  ``syzygies[i]`` is the i-th (co)syzygy,
    with ``syzygies[0] = M``.
    """

    direction: str
    module: Rep
    terms: list[Rep] = field(default_factory=list)
    types: list[Counter] = field(default_factory=list)
    maps: list[RepMap] = field(default_factory=list)
    augmentation: RepMap | None = None
    syzygies: list[Rep] = field(default_factory=list)
    depth: int = 0
    terminated: bool = False

    def __len__(self):
        return len(self.terms)

    def term(self, i: int) -> Rep | None:
        return self.terms[i] if 0 <= i < len(self.terms) else None

    def type_at(self, i: int) -> Counter:
        """Type multiset of term i; empty outside the computed range or past termination."""
        if 0 <= i < len(self.types):
            return self.types[i]
        if i >= len(self.types) and not self.terminated and i >= 0:
            raise IndexError(f"degree {i} beyond computed depth {self.depth}")
        return Counter()

    @property
    def length(self) -> int | None:
        """Projective/injective dimension if the resolution terminated, else None."""
        if not self.terminated:
            return None
        return len(self.terms) - 1 if self.terms else -1


def min_resolution(M: Rep, direction: str = INJECTIVE, depth: int = 3) -> Resolution:
    """The first ``depth`` terms of a minimal resolution of M."""
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    if direction not in (PROJECTIVE, INJECTIVE):
        raise ValueError(f"unknown direction {direction!r}")
    res = Resolution(direction, M, depth=depth, syzygies=[M])
    current = M
    prev_quot: RepMap | None = None
    for i in range(depth):
        if current.dim == 0:
            break
        if direction == PROJECTIVE:
            P, epi = projective_cover(current)
            K, inc = kernel(epi)
            res.terms.append(P)
            res.types.append(Counter(P.generators))
            if i == 0:
                res.augmentation = epi
            else:
                res.maps.append(prev_quot.compose(epi))
            prev_quot = inc
            current = K
        else:
            E, mono = injective_envelope(current)
            C, proj = cokernel(mono)
            res.terms.append(E)
            res.types.append(Counter(E.cogenerators))
            if i == 0:
                res.augmentation = mono
            else:
                res.maps.append(mono.compose(prev_quot))
            prev_quot = proj
            current = C
        res.syzygies.append(current)
    res.terminated = current.dim == 0
    return res


def syzygy(M: Rep, n: int) -> Rep:
    """Ω^n M via minimal projective covers; Ω^0 M = M."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    for _ in range(n):
        if M.dim == 0:
            return M
        _, epi = projective_cover(M)
        M = kernel(epi)[0]
    return M


def cosyzygy(M: Rep, n: int) -> Rep:
    """Ω^{-n} M via minimal injective envelopes."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    for _ in range(n):
        if M.dim == 0:
            return M
        _, mono = injective_envelope(M)
        M = cokernel(mono)[0]
    return M


def proj_dim(M: Rep, cap: int = 8) -> int | ExceedsCap:
    """Exact projective dimension, or ExceedsCap when it is larger than ``cap``.

    Ω^n M is projective iff Ω^{n+1} M = 0 for minimal syzygies.  Over an
    artin algebra flat and projective dimension agree on finitely generated
    modules, so this is also the flat dimension.
    """
    if cap < 0:
        raise ValueError("cap must be nonnegative")
    if M.dim == 0:
        return 0
    res = min_resolution(M, PROJECTIVE, cap + 1)
    return res.length if res.terminated else ExceedsCap(cap)


def inj_dim(M: Rep, cap: int = 8) -> int | ExceedsCap:
    if cap < 0:
        raise ValueError("cap must be nonnegative")
    if M.dim == 0:
        return 0
    res = min_resolution(M, INJECTIVE, cap + 1)
    return res.length if res.terminated else ExceedsCap(cap)


flat_dim = proj_dim


@lru_cache(maxsize=256)
def regular_injective_resolution(alg: MonomialAlgebra, depth: int) -> Resolution:
    """Minimal injective resolution of the left regular module (cached per algebra)."""
    return min_resolution(regular(alg), INJECTIVE, depth)


def side_algebra(alg: MonomialAlgebra, side: str) -> MonomialAlgebra:
    """Left modules of the returned algebra are the ``side`` modules of ``alg``."""
    if side == "left":
        return alg
    if side == "right":
        return alg.opposite()
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def ext_dim_via_simples(M: Rep, v: int, i: int) -> int:
    """dim Ext^i(M, S(v)) = multiplicity of P(v) in the i-th minimal projective term."""
    res = min_resolution(M, PROJECTIVE, i + 1)
    return res.types[i][v] if i < len(res.types) else 0


def is_exact_at(f: RepMap, g: RepMap) -> bool:
    """Exactness of X -f-> Y -g-> Z at Y: g∘f = 0 and rank f + rank g = dim Y."""
    p = f.source.p
    if not g.compose(f).is_zero():
        return False
    return all(la.rank(a, p) + la.rank(b, p) == f.target.dim_at(v)
               for v, a, b in zip(f.algebra.vertices, f.maps, g.maps))


def check_resolution(res: Resolution) -> bool:
    """Complex, exactness and minimality checks for a computed resolution."""
    from .rep import socle_types, top_types

    if not res.terms:
        return res.module.dim == 0 or not res.terminated
    chain = [res.augmentation] + res.maps
    if res.direction == PROJECTIVE:
        # chain: P_0 -> M, P_1 -> P_0, ...
        if not res.augmentation.is_surjective():
            return False
        if not all(is_exact_at(upper, lower) for lower, upper in zip(chain, chain[1:])):
            return False
        if any(top_types(P) != top_types(S) for P, S in zip(res.terms, res.syzygies)):
            return False
        return not res.terminated or chain[-1].is_injective()
    # chain: M -> I_0, I_0 -> I_1, ...
    if not res.augmentation.is_injective():
        return False
    if not all(is_exact_at(first, second) for first, second in zip(chain, chain[1:])):
        return False
    if any(socle_types(E) != socle_types(S) for E, S in zip(res.terms, res.syzygies)):
        return False
    return not res.terminated or chain[-1].is_surjective()


__all__ = [
    "ExceedsCap", "Resolution", "projective_cover", "injective_envelope", "min_resolution",
    "syzygy", "cosyzygy", "proj_dim", "inj_dim", "flat_dim", "regular_injective_resolution",
    "side_algebra", "ext_dim_via_simples", "check_resolution", "PROJECTIVE", "INJECTIVE",
]
