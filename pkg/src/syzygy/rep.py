"""Finite-dimensional left modules as representations of a bound quiver.

A ``Rep`` assigns a vector space F_p^{d_v} to each vertex and a matrix of
shape ``(d_target, d_source)`` to each arrow.  Right modules are always
handled as left modules over ``algebra.opposite()``.
"""

from __future__ import annotations

from collections import Counter
from itertools import product
from typing import Iterable, Sequence

import numpy as np

from . import linalg as la
from .fields import Field
from .path_algebra import MonomialAlgebra, Path

SimpleMultiset = Counter  # vertex -> multiplicity

ISO_FAILURE_BITS = 40
EXHAUSTIVE_LIMIT = 2 ** 16


def format_types(types: Counter) -> str:
    return ",".join(f"{v}:{m}" for v, m in sorted(types.items()) if m)


def type_set(types: Counter) -> set[int]:
    return {v for v, m in types.items() if m}


class Rep:
    """A representation of ``algebra``.

    ``generators`` is set only on direct sums of standard projectives built by
    this library; it lists the vertex of each indecomposable summand in order.
    ``cogenerators`` does the same for standard injective sums (socle vertices).
    """

    def __init__(self, algebra: MonomialAlgebra, dims, action: Sequence | None = None,
                 generators: Sequence[int] | None = None,
                 cogenerators: Sequence[int] | None = None, check: bool = True):
        self.algebra = algebra
        p = algebra.p
        if isinstance(dims, dict):
            dims = [dims.get(v, 0) for v in algebra.vertices]
        self.dims = tuple(int(d) for d in dims)
        if len(self.dims) != algebra.n or any(d < 0 for d in self.dims):
            raise ValueError(f"bad dimension vector {self.dims} for {algebra.n} vertices")
        mats = []
        for i, a in enumerate(algebra.arrows):
            shape = (self.dims[a.target - 1], self.dims[a.source - 1])
            m = la.zeros(*shape) if action is None or action[i] is None else la.as_mat(action[i], p)
            if m.shape != shape:
                if m.size == 0 and shape[0] * shape[1] == 0:
                    m = la.zeros(*shape)
                else:
                    raise ValueError(f"arrow {a.name}: matrix shape {m.shape}, expected {shape}")
            m.setflags(write=False)
            mats.append(m)
        self.action = tuple(mats)
        self.generators = tuple(generators) if generators is not None else None
        self.cogenerators = tuple(cogenerators) if cogenerators is not None else None
        self._path_cache: dict[Path, np.ndarray] = {}
        if check:
            for r in algebra.relations:
                if self.path_matrix(r).any():
                    raise ValueError(f"relation {algebra.path_name(r)} does not act as zero")

    @property
    def p(self) -> int:
        return self.algebra.p

    def dim_at(self, v: int) -> int:
        return self.dims[v - 1]

    @property
    def dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return self.dim == 0

    def arrow(self, i: int) -> np.ndarray:
        return self.action[i]

    def path_matrix(self, path: Path) -> np.ndarray:
        """Matrix of the action of ``path`` (arrows applied right-to-left)."""
        m = self._path_cache.get(path)
        if m is None:
            m = la.identity(self.dim_at(path.start))
            for i in reversed(path.arrows):
                m = la.matmul(self.action[i], m, self.p)
            self._path_cache[path] = m
        return m

    def key(self) -> tuple:
        """Exact bitwise identity: dimension vector plus every matrix."""
        return (self.dims, tuple(m.tobytes() for m in self.action))

    def __repr__(self):
        return f"Rep(dims={self.dims})"


class RepMap:
    """A module homomorphism, one matrix ``(target_v, source_v)`` per vertex."""

    def __init__(self, source: Rep, target: Rep, maps, check: bool = True):
        if source.algebra != target.algebra:
            raise ValueError("maps must stay over one algebra")
        self.source = source
        self.target = target
        p = source.p
        if isinstance(maps, dict):
            maps = [maps[v] for v in source.algebra.vertices]
        mats = []
        for v, m in zip(source.algebra.vertices, maps):
            shape = (target.dim_at(v), source.dim_at(v))
            m = la.as_mat(m, p) if np.size(m) else la.zeros(*shape)
            if m.shape != shape:
                raise ValueError(f"vertex {v}: matrix shape {m.shape}, expected {shape}")
            m.setflags(write=False)
            mats.append(m)
        self.maps = tuple(mats)
        if check and not self.commutes():
            raise ValueError("maps do not commute with the arrow actions")

    @property
    def algebra(self) -> MonomialAlgebra:
        return self.source.algebra

    def at(self, v: int) -> np.ndarray:
        return self.maps[v - 1]

    def commutes(self) -> bool:
        p = self.source.p
        for i, a in enumerate(self.algebra.arrows):
            lhs = la.matmul(self.target.action[i], self.at(a.source), p)
            rhs = la.matmul(self.at(a.target), self.source.action[i], p)
            if not np.array_equal(lhs, rhs):
                return False
        return True

    def compose(self, other: "RepMap") -> "RepMap":
        """``self ∘ other``."""
        if other.target is not self.source and other.target.dims != self.source.dims:
            raise ValueError("maps are not composable")
        p = self.source.p
        return RepMap(other.source, self.target,
                      [la.matmul(f, g, p) for f, g in zip(self.maps, other.maps)], check=False)

    def __matmul__(self, other: "RepMap") -> "RepMap":
        return self.compose(other)

    def __add__(self, other: "RepMap") -> "RepMap":
        p = self.source.p
        return RepMap(self.source, self.target,
                      [(f + g) % p for f, g in zip(self.maps, other.maps)], check=False)

    def scale(self, c: int) -> "RepMap":
        p = self.source.p
        return RepMap(self.source, self.target, [(c * f) % p for f in self.maps], check=False)

    def rank_vector(self) -> tuple[int, ...]:
        return tuple(la.rank(m, self.source.p) for m in self.maps)

    def is_zero(self) -> bool:
        return not any(m.any() for m in self.maps)

    def is_injective(self) -> bool:
        return self.rank_vector() == self.source.dims

    def is_surjective(self) -> bool:
        return self.rank_vector() == self.target.dims

    def is_iso(self) -> bool:
        return self.source.dims == self.target.dims and self.is_injective()

    def __repr__(self):
        return f"RepMap({self.source.dims} -> {self.target.dims})"


# ---------------------------------------------------------------- constructors


def zero_rep(alg: MonomialAlgebra) -> Rep:
    return Rep(alg, [0] * alg.n)


def identity_map(M: Rep) -> RepMap:
    return RepMap(M, M, [la.identity(d) for d in M.dims], check=False)


def zero_map(M: Rep, N: Rep) -> RepMap:
    return RepMap(M, N, [la.zeros(N.dim_at(v), M.dim_at(v)) for v in M.algebra.vertices],
                  check=False)


def simple(alg: MonomialAlgebra, v: int) -> Rep:
    _check_vertex(alg, v)
    return Rep(alg, [1 if w == v else 0 for w in alg.vertices])


def _check_vertex(alg: MonomialAlgebra, v: int) -> None:
    if v not in alg.vertices:
        raise ValueError(f"vertex {v} not in 1..{alg.n}")


def projective_sum(alg: MonomialAlgebra, gens: Sequence[int]) -> Rep:
    """⊕ P(v) over ``gens``, in the standard path basis.

    At vertex ``u`` the coordinates are the basis paths ``v -> u`` of each
    summand in turn; the generator ``e_v`` of a summand is its first path at ``v``.
    """
    gens = tuple(gens)
    for v in gens:
        _check_vertex(alg, v)
    dims = [sum(len(alg.paths(v, u)) for v in gens) for u in alg.vertices]
    action = []
    for i, a in enumerate(alg.arrows):
        m = la.zeros(dims[a.target - 1], dims[a.source - 1])
        row0 = col0 = 0
        for v in gens:
            src = alg.paths(v, a.source)
            tgt = alg.paths(v, a.target)
            tgt_index = {q: k for k, q in enumerate(tgt)}
            for c, q in enumerate(src):
                r = tgt_index.get(Path(v, a.target, (i,) + q.arrows))
                if r is not None:
                    m[row0 + r, col0 + c] = 1
            row0 += len(tgt)
            col0 += len(src)
        action.append(m)
    return Rep(alg, dims, action, generators=gens, check=False)


def projective(alg: MonomialAlgebra, v: int) -> Rep:
    return projective_sum(alg, [v])


def regular(alg: MonomialAlgebra) -> Rep:
    """The algebra as a left module over itself."""
    return projective_sum(alg, list(alg.vertices))


def k_dual(M: Rep) -> Rep:
    """Hom_k(M, k), a left module over the opposite algebra."""
    return Rep(M.algebra.opposite(), M.dims, [m.T for m in M.action],
               generators=M.cogenerators, cogenerators=M.generators, check=False)


def dual_map(f: RepMap) -> RepMap:
    """D(f): D(target) -> D(source)."""
    return RepMap(k_dual(f.target), k_dual(f.source), [m.T for m in f.maps], check=False)


def injective_sum(alg: MonomialAlgebra, socle: Sequence[int]) -> Rep:
    """⊕ I(v) over ``socle``, built as D of the opposite-side projectives."""
    return k_dual(projective_sum(alg.opposite(), socle))


def injective(alg: MonomialAlgebra, v: int) -> Rep:
    return injective_sum(alg, [v])


def standard_module(alg: MonomialAlgebra, kind: str, v: int) -> Rep:
    kind = kind.lower()
    if kind in ("s", "simple"):
        return simple(alg, v)
    if kind in ("p", "projective"):
        return projective(alg, v)
    if kind in ("i", "injective"):
        return injective(alg, v)
    raise ValueError(f"unknown module kind {kind!r}")


def generator_offset(alg: MonomialAlgebra, gens: Sequence[int], i: int) -> int:
    """Coordinate of the i-th summand's generator inside (⊕P)_{gens[i]}."""
    v = gens[i]
    return sum(len(alg.paths(w, v)) for w in gens[:i])


def map_from_generators(P: Rep, target: Rep, images: Sequence[np.ndarray]) -> RepMap:
    """The map ⊕P(v_i) -> target sending the i-th generator to ``images[i]``."""
    alg = P.algebra
    gens = P.generators
    if gens is None:
        raise ValueError("source must be a standard projective sum")
    p = alg.p
    maps = []
    for u in alg.vertices:
        cols = []
        for v, x in zip(gens, images):
            x = la.as_mat(np.reshape(x, (-1, 1)), p)
            for q in alg.paths(v, u):
                cols.append(la.matmul(target.path_matrix(q), x, p))
        maps.append(np.concatenate(cols, axis=1) if cols else la.zeros(target.dim_at(u), 0))
    return RepMap(P, target, maps, check=False)


def generator_images(f: RepMap) -> list[np.ndarray]:
    """Images of the generators of a standard projective sum."""
    gens = f.source.generators
    alg = f.algebra
    return [f.at(v)[:, generator_offset(alg, gens, i)].copy() for i, v in enumerate(gens)]


# ---------------------------------------------------------------- sums


def direct_sum(modules: Sequence[Rep]) -> tuple[Rep, list[RepMap], list[RepMap]]:
    """⊕ modules with the canonical injections and projections."""
    if not modules:
        raise ValueError("direct sum of no modules; use zero_rep")
    alg = modules[0].algebra
    dims = [sum(M.dim_at(v) for M in modules) for v in alg.vertices]
    action = [la.block_diag([M.action[i] for M in modules]) for i in range(len(alg.arrows))]
    # block layout of standard (co)projective sums is again standard
    gens = cogens = None
    if all(M.generators is not None for M in modules):
        gens = tuple(g for M in modules for g in M.generators)
    if all(M.cogenerators is not None for M in modules):
        cogens = tuple(g for M in modules for g in M.cogenerators)
    S = Rep(alg, dims, action, generators=gens, cogenerators=cogens, check=False)
    inj, proj = [], []
    offsets = [0] * alg.n
    for M in modules:
        i_maps, p_maps = [], []
        for v in alg.vertices:
            d, o = M.dim_at(v), offsets[v - 1]
            m = la.zeros(S.dim_at(v), d)
            m[o:o + d] = la.identity(d)
            i_maps.append(m)
            p_maps.append(m.T.copy())
            offsets[v - 1] += d
        inj.append(RepMap(M, S, i_maps, check=False))
        proj.append(RepMap(S, M, p_maps, check=False))
    return S, inj, proj


def direct_sum_maps(maps: Sequence[RepMap]) -> RepMap:
    src, _, _ = direct_sum([f.source for f in maps])
    tgt, _, _ = direct_sum([f.target for f in maps])
    return RepMap(src, tgt, [la.block_diag([f.at(v) for f in maps]) for v in src.algebra.vertices],
                  check=False)


def power(M: Rep, k: int) -> Rep:
    return direct_sum([M] * k)[0] if k else zero_rep(M.algebra)


# ---------------------------------------------------------------- sub / quotient


def subrep(M: Rep, bases: Sequence[np.ndarray]) -> tuple[Rep, RepMap]:
    """Submodule with the given per-vertex column bases (assumed arrow-stable)."""
    p = M.p
    alg = M.algebra
    action = []
    for i, a in enumerate(alg.arrows):
        src, tgt = bases[a.source - 1], bases[a.target - 1]
        moved = la.matmul(M.action[i], src, p)
        x = la.solve(tgt, moved, p) if tgt.shape[1] else la.zeros(0, src.shape[1])
        if x is None:
            raise ValueError(f"subspace is not stable under arrow {a.name}")
        action.append(x)
    K = Rep(alg, [b.shape[1] for b in bases], action, check=False)
    return K, RepMap(K, M, list(bases), check=False)


def quotient(M: Rep, bases: Sequence[np.ndarray]) -> tuple[Rep, RepMap]:
    """M / N for the arrow-stable subspaces N given by column bases."""
    p = M.p
    alg = M.algebra
    proj = []
    sections = []
    for v in alg.vertices:
        b = bases[v - 1]
        q = la.left_kernel_basis(b, p) if b.shape[1] else la.identity(M.dim_at(v))
        proj.append(q)
        # right inverse of q: solve q s = I
        sections.append(la.solve(q, la.identity(q.shape[0]), p))
    action = []
    for i, a in enumerate(alg.arrows):
        m = la.matmul(proj[a.target - 1], la.matmul(M.action[i], sections[a.source - 1], p), p)
        action.append(m)
    C = Rep(alg, [q.shape[0] for q in proj], action, check=False)
    return C, RepMap(M, C, proj, check=False)


def kernel(f: RepMap) -> tuple[Rep, RepMap]:
    return subrep(f.source, [la.kernel_basis(m, f.source.p) for m in f.maps])


def image(f: RepMap) -> tuple[Rep, RepMap]:
    return subrep(f.target, [la.image_basis(m, f.source.p) for m in f.maps])


def cokernel(f: RepMap) -> tuple[Rep, RepMap]:
    return quotient(f.target, [la.image_basis(m, f.source.p) for m in f.maps])


def generated_submodule(M: Rep, elements: Iterable[tuple[int, np.ndarray]]) -> tuple[Rep, RepMap]:
    """Smallest submodule containing the given ``(vertex, vector)`` elements."""
    p = M.p
    alg = M.algebra
    spans = [la.zeros(d, 0) for d in M.dims]
    for v, x in elements:
        x = la.as_mat(np.reshape(x, (-1, 1)), p)
        if x.shape[0] != M.dim_at(v):
            raise ValueError(f"element at vertex {v} has length {x.shape[0]}, expected {M.dim_at(v)}")
        spans[v - 1] = np.concatenate([spans[v - 1], x], axis=1)
    spans = [la.image_basis(s, p) for s in spans]
    changed = True
    while changed:
        changed = False
        for i, a in enumerate(alg.arrows):
            moved = la.matmul(M.action[i], spans[a.source - 1], p)
            t = a.target - 1
            grown = la.image_basis(np.concatenate([spans[t], moved], axis=1), p)
            if grown.shape[1] > spans[t].shape[1]:
                spans[t] = grown
                changed = True
    return subrep(M, spans)


def socle(M: Rep) -> tuple[Rep, RepMap, Counter]:
    """soc M: at each vertex, the common kernel of the outgoing arrows."""
    p = M.p
    alg = M.algebra
    bases = []
    for v in alg.vertices:
        outs = [M.action[i] for i in alg.quiver.arrows_out(v)]
        if outs:
            bases.append(la.kernel_basis(np.concatenate(outs, axis=0), p))
        else:
            bases.append(la.identity(M.dim_at(v)))
    S, inc = subrep(M, bases)
    return S, inc, Counter({v: S.dim_at(v) for v in alg.vertices if S.dim_at(v)})


def radical(M: Rep) -> tuple[Rep, RepMap]:
    """rad M: at each vertex, the sum of images of the incoming arrows."""
    p = M.p
    alg = M.algebra
    bases = []
    for v in alg.vertices:
        ins = [M.action[i] for i in alg.quiver.arrows_in(v)]
        if ins:
            bases.append(la.image_basis(np.concatenate(ins, axis=1), p))
        else:
            bases.append(la.zeros(M.dim_at(v), 0))
    return subrep(M, bases)


def top(M: Rep) -> tuple[Rep, RepMap, Counter]:
    """top M = M / rad M with its projection."""
    _, inc = radical(M)
    T, proj = quotient(M, list(inc.maps))
    return T, proj, Counter({v: T.dim_at(v) for v in M.algebra.vertices if T.dim_at(v)})


def socle_types(M: Rep) -> Counter:
    return socle(M)[2]


def top_types(M: Rep) -> Counter:
    return top(M)[2]


# ---------------------------------------------------------------- Hom


def hom_basis(M: Rep, N: Rep) -> list[RepMap]:
    """A basis of Hom(M, N), solving all commuting squares at once."""
    if M.algebra != N.algebra:
        raise ValueError("modules over different algebras")
    p = M.p
    alg = M.algebra
    offsets, total = [], 0
    for v in alg.vertices:
        offsets.append(total)
        total += N.dim_at(v) * M.dim_at(v)
    if total == 0:
        return []
    blocks = []
    for i, a in enumerate(alg.arrows):
        s, t = a.source, a.target
        ms, nt = M.dim_at(s), N.dim_at(t)
        if ms * nt == 0:
            continue
        # row-major vec: N(a) f_s - f_t M(a) = 0
        c = la.zeros(nt * ms, total)
        o = offsets[s - 1]
        c[:, o:o + N.dim_at(s) * ms] += np.kron(N.action[i], la.identity(ms))
        o = offsets[t - 1]
        c[:, o:o + nt * M.dim_at(t)] -= np.kron(la.identity(nt), M.action[i].T)
        blocks.append(c % p)
    if blocks:
        ker = la.kernel_basis(np.concatenate(blocks, axis=0), p)
    else:
        ker = la.identity(total)
    out = []
    for k in range(ker.shape[1]):
        col = ker[:, k]
        maps = []
        for v in alg.vertices:
            o = offsets[v - 1]
            n, m = N.dim_at(v), M.dim_at(v)
            maps.append(col[o:o + n * m].reshape(n, m))
        out.append(RepMap(M, N, maps, check=False))
    return out


def hom_dim(M: Rep, N: Rep) -> int:
    return len(hom_basis(M, N))


def combine(basis: Sequence[RepMap], coeffs: Sequence[int]) -> RepMap:
    p = basis[0].source.p
    maps = [sum(int(c) * f.maps[k] for c, f in zip(coeffs, basis)) % p
            for k in range(len(basis[0].maps))]
    return RepMap(basis[0].source, basis[0].target, maps, check=False)


# ---------------------------------------------------------------- isomorphism


def is_isomorphic(M: Rep, N: Rep, seed: int = 0) -> bool:
    """Decide M ≅ N by looking for an invertible element of Hom(M, N).

    Cheap invariants first; then random F_p combinations of a Hom basis; then
    exhaustive search when |Hom| <= 2^16; otherwise Schwartz-Zippel trials over
    an extension field until the miss probability is at most 2^-40.
    """
    return _iso_search(M, N, seed)[0]


def find_isomorphism(M: Rep, N: Rep, seed: int = 0) -> RepMap | None:
    """An explicit isomorphism M -> N over F_p, or None.

    May return None for isomorphic modules only in the extension-field regime,
    where existence is certified but no F_p witness turned up.
    """
    return _iso_search(M, N, seed)[1]


def _iso_search(M: Rep, N: Rep, seed: int) -> tuple[bool, RepMap | None]:
    if M.algebra != N.algebra:
        raise ValueError("modules over different algebras")
    if M.dims != N.dims:
        return False, None
    if M.dim == 0 or M.key() == N.key():
        return True, RepMap(M, N, [la.identity(d) for d in M.dims], check=False)
    if socle_types(M) != socle_types(N) or top_types(M) != top_types(N):
        return False, None
    basis = hom_basis(M, N)
    d = len(basis)
    if d == 0 or d != hom_dim(N, M) or d != hom_dim(M, M):
        return False, None
    p = M.p
    rng = np.random.default_rng(seed)
    verts = [v for v in M.algebra.vertices if M.dim_at(v)]
    stacks = {v: np.stack([f.at(v) for f in basis]) for v in verts}

    def first_invertible(coeffs: np.ndarray) -> RepMap | None:
        ok = np.ones(len(coeffs), dtype=bool)
        for v in verts:
            mats = np.einsum("bk,kij->bij", coeffs, stacks[v]) % p
            ok &= la.batch_invertible(mats, p)
        hit = np.flatnonzero(ok)
        return combine(basis, coeffs[hit[0]]) if hit.size else None

    f = first_invertible(rng.integers(0, p, size=(64, d)))
    if f is not None:
        return True, f
    if p ** d <= EXHAUSTIVE_LIMIT:
        all_coeffs = np.array(list(product(range(p), repeat=d)), dtype=np.int64)
        for start in range(0, len(all_coeffs), 4096):
            f = first_invertible(all_coeffs[start:start + 4096])
            if f is not None:
                return True, f
        return False, None
    if not _extension_field_test(M, basis, verts, rng):
        return False, None
    for _ in range(16):
        f = first_invertible(rng.integers(0, p, size=(256, d)))
        if f is not None:
            return True, f
    return True, None


def _extension_field_test(M, basis, verts, rng) -> bool:
    """Polynomial identity test of prod_v det(sum_k c_k f_k,v) over F_{p^e}.

    The product has degree dim M in the c_k, so one random point misses a
    nonzero polynomial with probability <= dim M / p^e.  A matrix over F_{p^e}
    is invertible iff its realisation over F_p (each scalar replaced by its
    e x e multiplication matrix) is.
    """
    p = M.p
    degree = M.dim
    e = 1
    while e < 8 and p ** e < 16 * degree:
        e += 1
    q = p ** e
    if q <= degree:
        raise ValueError("module too large for the extension-field isomorphism test")
    F = Field(p, e)
    n_trials = int(np.ceil(ISO_FAILURE_BITS / np.log2(q / degree)))
    for _ in range(n_trials):
        blocks = [F.mult_matrix(F.random(rng)) for _ in basis]
        if all(la.rank(sum(np.kron(f.at(v), b) for f, b in zip(basis, blocks)) % p, p)
               == e * M.dim_at(v) for v in verts):
            return True
    return False


# ---------------------------------------------------------------- projective summands


def strip_projective_summands(M: Rep) -> tuple[Rep, Counter]:
    """Split off every projective summand of M.

    P(v) is a summand iff some g: M -> P(v) and f: P(v) -> M have g∘f a unit
    of End P(v), i.e. g∘f(e_v) has a nonzero e_v coefficient.  Then
    M = im f ⊕ ker g, so we continue with ker g.
    """
    alg = M.algebra
    p = M.p
    stripped: Counter = Counter()
    core = M
    progress = True
    while progress and core.dim:
        progress = False
        for v in alg.vertices:
            if core.dim_at(v) == 0:
                continue
            Pv = projective(alg, v)
            for g in hom_basis(core, Pv):
                # row of g_v giving the e_v coordinate; m with row·m != 0 exists iff row != 0
                if g.at(v)[0].any():
                    core = kernel(g)[0]
                    stripped[v] += 1
                    progress = True
                    break
            if progress:
                break
    return core, stripped


def is_projective(M: Rep) -> bool:
    """M is projective iff it has the dimension of its projective cover."""
    t = top_types(M)
    return M.dim == sum(m * projective(M.algebra, v).dim for v, m in t.items())


def is_injective(M: Rep) -> bool:
    s = socle_types(M)
    return M.dim == sum(m * injective(M.algebra, v).dim for v, m in s.items())


class NotInjective(ValueError):
    pass


def injective_type(E: Rep, verify: bool = True) -> Counter:
    """Multiplicities m_v with E ≅ ⊕ I(v)^{m_v}; raises NotInjective otherwise."""
    s = socle_types(E)
    target = sum(m * injective(E.algebra, v).dim for v, m in s.items())
    if E.dim != target:
        raise NotInjective(f"dim {E.dim} but socle {format_types(s)} needs an injective of dim {target}")
    if verify and E.dim:
        model = injective_sum(E.algebra, [v for v in sorted(s) for _ in range(s[v])])
        if not is_isomorphic(E, model):
            raise NotInjective("dimension matches but no isomorphism to the injective model")
    return s
