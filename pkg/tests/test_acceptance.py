"""Exit criteria.  Every comparison is exact equality of rationals."""

import time
from fractions import Fraction

import pytest

from wronskian_combinants import suite
from wronskian_combinants.binform import multiply
from wronskian_combinants.combinant import (express_in_basis, kernel, psi_apply, psi_matrix,
                                            recover_subspace, verify_keyprop,
                                            wronskian_combinants)
from wronskian_combinants.grassmann import canonicalize, pluecker_point
from wronskian_combinants.sampling import (random_form, random_independent_forms,
                                           random_rational, random_subspace, rng_for)
from wronskian_combinants.transvect import transvectant
from wronskian_combinants.wronskian import wronskian

SEED = 2024


def _residual_cases():
    rng = rng_for(SEED, "residual-shapes")
    cases = []
    for i in range(20):
        r = rng.randint(2, 4)
        d = rng.randint(r + 1, 8)
        cases.append((i, r, d))
    return cases


@pytest.mark.criterion(1, "r=2 closed forms C_0=(A1,A2)_1, C_2=(2-d)/(4d-6)(A1,A2)_3, d=3..8 x 25 pairs, < 5 s")
def test_closed_forms():
    t0 = time.perf_counter()
    for d in range(3, 9):
        for i in range(25):
            A1, A2 = random_independent_forms(rng_for(SEED, "closed", d, i), 2, d)
            C = wronskian_combinants([A1, A2])
            assert C[0] == transvectant(A1, A2, 1)
            assert C[2] == transvectant(A1, A2, 3).scale(Fraction(2 - d, 4 * d - 6))
    assert time.perf_counter() - t0 < 5.0


@pytest.mark.criterion(2, "defining residual W(A,F) - sum_q (C_q,F)_{r-q} = 0, 20 shapes x 20 F")
def test_defining_residual():
    for i, r, d in _residual_cases():
        rng = rng_for(SEED, "residual", i)
        A = random_independent_forms(rng, r, d)
        C = wronskian_combinants(A)
        for _ in range(20):
            F = random_form(rng, d)
            residual = wronskian(A + [F]) - psi_apply(C, F)
            assert residual.is_zero()


@pytest.mark.criterion(3, "kernel of psi_C has dim r, equals the canonical subspace; rank psi_C = d-r+1")
def test_kernel_recovery():
    for i, r, d in _residual_cases():
        rng = rng_for(SEED, "residual", i)
        A = random_independent_forms(rng, r, d)
        sub = canonicalize(A)
        M = psi_matrix(wronskian_combinants(A))
        ker = kernel(M)
        assert len(ker) == r
        assert tuple(map(tuple, ker)) == sub.canonical
        assert M.rank() == d - r + 1


@pytest.mark.criterion(4, "recover_subspace(k C) returns the subspace and exact k, 10 subspaces")
def test_scaled_recovery():
    for i in range(10):
        rng = rng_for(SEED, "scaled", i)
        r = rng.randint(1, 4)
        d = rng.randint(r + 1, 8)
        sub = random_subspace(rng, r, d)
        k = random_rational(rng, nonzero=True)
        got, kk = recover_subspace(wronskian_combinants(sub).scale(k))
        assert got == sub and kk == k


@pytest.mark.criterion(5, "Gamma_p identities for r=2,3,4, d<=8, n in {d, d+2}, 10 cases each")
def test_gamma_identities():
    for r in (2, 3, 4):
        for d in range(r, 9):
            for extra in (0, 2):
                for i in range(10):
                    rng = rng_for(SEED, "gamma", r, d, extra, i)
                    B = random_form(rng, d + extra)
                    A = [random_form(rng, d) for _ in range(r)]
                    assert verify_keyprop(B, A) == (True, True, True)


@pytest.mark.criterion(6, "quintic: C_0 (A1,A2)_5 = 50 C_2^2 - 15 (C_0,C_0)_4 - 40 (C_0,C_2)_2, 10 pairs")
def test_quintic_identity():
    for i in range(10):
        A1, A2 = random_independent_forms(rng_for(SEED, "quintic", i), 2, 5)
        C = wronskian_combinants([A1, A2])
        C0, C2 = C[0], C[2]
        res = express_in_basis(multiply(C0, transvectant(A1, A2, 5)),
                               [multiply(C2, C2), transvectant(C0, C0, 4), transvectant(C0, C2, 2)])
        assert res.coefficients == (50, -15, -40)


@pytest.mark.criterion(7, "50 distinct subspaces -> 50 distinct points, (r,d) in {(2,5),(3,6)}")
@pytest.mark.parametrize("r,d", [(2, 5), (3, 6)])
def test_injectivity(r, d):
    rng = rng_for(SEED, "injective", r, d)
    subs = []
    while len(subs) < 50:
        s = random_subspace(rng, r, d)
        if s not in subs:
            subs.append(s)
    points = [pluecker_point(s).vector for s in subs]
    assert len(set(points)) == 50


CRITERION_8 = [
    "transvectant_symmetry",
    "transvectant_equivariant",
    "wronskian_covariant",
    "point_equivariant",
    "basis_change_scales_by_det",
    "first_transvectant_is_wronskian",
    "no_q1_component",
    "wronskian_detects_dependence",
]


@pytest.mark.criterion(8, "invariance suites, 100 exact cases per check; full verify-suite < 120 s")
def test_invariance_suites():
    t0 = time.perf_counter()
    results = {res.name: res for res in suite.run_suite(seed=SEED, cases=100, rmax=4, dmax=8)}
    elapsed = time.perf_counter() - t0
    for name in CRITERION_8:
        assert results[name].cases == 100
    failed = {n: r.failures[:3] for n, r in results.items() if not r.passed}
    assert not failed
    assert elapsed < 120.0
