import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from syzygy import linalg as la
from syzygy.corpus import CORPUS, builtin, random_module
from syzygy.path_algebra import from_names
from syzygy.rep import (
    NotInjective,
    Rep,
    RepMap,
    cokernel,
    direct_sum,
    find_isomorphism,
    generated_submodule,
    hom_basis,
    hom_dim,
    identity_map,
    image,
    injective,
    injective_sum,
    injective_type,
    is_injective,
    is_isomorphic,
    is_projective,
    k_dual,
    kernel,
    map_from_generators,
    power,
    projective,
    projective_sum,
    radical,
    regular,
    simple,
    socle,
    socle_types,
    strip_projective_summands,
    top,
    top_types,
    zero_rep,
)

modules = st.builds(
    lambda name, seed, budget: random_module(builtin(name).algebra, budget, seed),
    st.sampled_from(CORPUS), st.integers(0, 10 ** 6), st.integers(1, 4))


def types(c):
    return dict(sorted(c.items()))


def test_standard_modules(lam):
    assert projective(lam, 1).dims == (1, 1, 0, 0)
    assert injective(lam, 2).dims == (1, 1, 0, 0)
    assert is_isomorphic(injective(lam, 2), projective(lam, 1))
    assert is_isomorphic(injective(lam, 1), simple(lam, 1))
    assert injective(lam, 3).dims == (0, 1, 1, 0)
    assert regular(lam).dim == lam.dim


def test_hom_examples(lam):
    assert hom_dim(projective(lam, 2), injective(lam, 3)) == 1
    assert hom_dim(simple(lam, 1), simple(lam, 2)) == 0
    for v in lam.vertices:
        assert hom_dim(simple(lam, v), simple(lam, v)) == 1


def test_socle_and_top(lam):
    assert types(socle(projective(lam, 1))[2]) == {2: 1}
    I0 = injective_sum(lam, [2, 3, 3, 4, 4])
    assert types(socle_types(I0)) == {2: 1, 3: 2, 4: 2}
    for v in lam.vertices:
        assert types(top(projective(lam, v))[2]) == {v: 1}
    assert radical(projective(lam, 1))[0].dims == (0, 1, 0, 0)


def test_kernel_and_cokernel_examples(lam):
    P1 = projective(lam, 1)
    S1 = simple(lam, 1)
    epi = map_from_generators(P1, S1, [np.array([1])])
    K, inc = kernel(epi)
    assert is_isomorphic(K, simple(lam, 2))
    assert kernel(identity_map(P1))[0].dim == 0
    E, _, _ = direct_sum([injective(lam, 3), injective(lam, 4)])
    f = map_from_generators(projective(lam, 2), E, [np.array([1, 1])])
    assert f.is_injective()
    C, _ = cokernel(f)
    assert C.dims == (0, 1, 0, 0) and is_isomorphic(C, simple(lam, 2))


def test_isomorphism_examples(lam):
    assert not is_isomorphic(simple(lam, 1), simple(lam, 2))
    M = regular(lam)
    assert is_isomorphic(M, M)
    f = find_isomorphism(injective(lam, 2), projective(lam, 1))
    assert f is not None and f.is_iso()


def test_injective_type(lam):
    I0 = injective_sum(lam, [2, 3, 3, 4, 4])
    assert types(injective_type(I0)) == {2: 1, 3: 2, 4: 2}
    for v in lam.vertices:
        assert types(injective_type(injective(lam, v))) == {v: 1}
    with pytest.raises(NotInjective):
        injective_type(simple(lam, 2))


def test_strip_examples(lam):
    M, _, _ = direct_sum([projective(lam, 1), simple(lam, 1)])
    core, stripped = strip_projective_summands(M)
    assert is_isomorphic(core, simple(lam, 1)) and types(stripped) == {1: 1}
    core, stripped = strip_projective_summands(regular(lam))
    assert core.dim == 0 and types(stripped) == {1: 1, 2: 1, 3: 1, 4: 1}
    core, stripped = strip_projective_summands(simple(lam, 2))
    assert core.dims == (0, 1, 0, 0) and not stripped


def test_validation_rejects_bad_data(lam, loop2):
    with pytest.raises(ValueError):
        Rep(loop2, [1], [np.array([[1, 0]])])
    # x acting invertibly on k violates x^2 = 0
    with pytest.raises(ValueError):
        Rep(loop2, [1], [np.array([[1]])])
    P1, S2 = projective(lam, 1), simple(lam, 2)
    with pytest.raises(ValueError):
        RepMap(P1, S2, [la.zeros(0, 1), np.array([[1]]), la.zeros(0, 0), la.zeros(0, 0)])
    # the socle inclusion S(2) -> P(1) is a genuine map
    assert RepMap(S2, P1, [la.zeros(1, 0), np.array([[1]]), la.zeros(0, 0), la.zeros(0, 0)]).is_injective()


def kronecker():
    return from_names(2, [("a", 1, 2), ("b", 1, 2)])


def band(alg, lam_value):
    return Rep(alg, [1, 1], [np.array([[1]]), np.array([[lam_value]])])


def conjugate(M, seed):
    """A copy of M in a random basis."""
    rng = np.random.default_rng(seed)
    p = M.p
    changes = []
    for d in M.dims:
        while True:
            t = rng.integers(0, p, size=(d, d))
            if la.rank(t, p) == d:
                break
        changes.append(t)
    action = [la.matmul(la.matmul(changes[a.target - 1], m, p), la.inverse(changes[a.source - 1], p), p)
              for a, m in zip(M.algebra.arrows, M.action)]
    return Rep(M.algebra, M.dims, action)


def test_isomorphism_large_hom_spaces():
    """Hom spaces of dimension 18 over F_2 go past exhaustive search."""
    K = kronecker()
    r0, r1 = band(K, 0), band(K, 1)
    M, _, _ = direct_sum([r0] * 3 + [r1] * 3)
    N, _, _ = direct_sum([r0] * 2 + [r1] * 4)
    assert hom_dim(M, N) == hom_dim(M, M) == hom_dim(N, M) == 18
    assert socle_types(M) == socle_types(N) and top_types(M) == top_types(N)
    assert not is_isomorphic(M, N)
    C = conjugate(M, 7)
    assert is_isomorphic(M, C)
    f = find_isomorphism(M, C)
    assert f is None or f.is_iso()


@given(modules)
@settings(max_examples=40, deadline=None)
def test_hom_from_projective_is_evaluation(M):
    for v in M.algebra.vertices:
        assert hom_dim(projective(M.algebra, v), M) == M.dim_at(v)


@given(modules)
@settings(max_examples=40, deadline=None)
def test_socle_and_top_detect_zero(M):
    assert (socle(M)[0].dim == 0) == (M.dim == 0)
    assert (top(M)[0].dim == 0) == (M.dim == 0)


@given(modules, st.integers(0, 1000))
@settings(max_examples=40, deadline=None)
def test_kernel_image_cokernel_dimensions(M, seed):
    basis = hom_basis(M, M)
    rng = np.random.default_rng(seed)
    f = basis[0]
    for g in basis[1:]:
        f = f + g.scale(int(rng.integers(0, M.p)))
    K = kernel(f)[0]
    I = image(f)[0]
    C = cokernel(f)[0]
    for v in M.algebra.vertices:
        r = la.rank(f.at(v), M.p)
        assert I.dim_at(v) == r == M.dim_at(v) - K.dim_at(v)
        assert C.dim_at(v) == M.dim_at(v) - r


@given(modules, st.integers(0, 100))
@settings(max_examples=30, deadline=None)
def test_isomorphism_equivalence(M, seed):
    C = conjugate(M, seed)
    assert is_isomorphic(M, C) and is_isomorphic(C, M)
    D = conjugate(C, seed + 1)
    assert is_isomorphic(M, D)
    f = find_isomorphism(M, C)
    assert f is not None and f.is_iso()


@given(modules)
@settings(max_examples=40, deadline=None)
def test_strip_recombines(M):
    core, stripped = strip_projective_summands(M)
    gens = [v for v in sorted(stripped) for _ in range(stripped[v])]
    S, _, _ = direct_sum([core, projective_sum(M.algebra, gens)])
    assert is_isomorphic(S, M)
    assert strip_projective_summands(core)[1] == {} or not strip_projective_summands(core)[1]


@given(modules)
@settings(max_examples=30, deadline=None)
def test_duality_is_involutive(M):
    D = k_dual(M)
    assert D.algebra is M.algebra.opposite()
    assert is_isomorphic(k_dual(D), M)
    assert is_projective(M) == is_injective(D)


def test_power_and_generated_submodule(lam):
    P = power(projective(lam, 2), 2)
    assert P.dims == (0, 2, 2, 2)
    A, inc = generated_submodule(regular(lam), [(1, np.array([1]))])
    assert A.dims == (1, 1, 0, 0) and inc.is_injective()
    with pytest.raises(ValueError):
        generated_submodule(regular(lam), [(1, np.array([1, 0]))])
    assert zero_rep(lam).dim == 0
