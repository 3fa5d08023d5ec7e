"""Randomized exact checks of every invariant the library promises.

Each check draws its inputs from a private seeded stream and returns True iff
the identity holds exactly.  ``run_suite`` runs all of them ``cases`` times.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import linalg
from .binform import (add, from_binomial, linear_combination, multiply,
                      partial_derivative, polarize, sl2_substitute,
                      to_binomial)
from .combinant import (CombinantVector, extract_components, index_set, kernel,
                        psi_apply, psi_matrix, recover_subspace, slot_order,
                        verify_keyprop, wronskian_combinants)
from .grassmann import (ProjectivePoint, canonicalize, equal_points,
                        image_membership, pluecker_point)
from .sampling import (random_form, random_independent_forms, random_invertible,
                       random_mat2, random_rational, random_subspace,
                       random_unimodular, rng_for)
from .transvect import transvectant
from .wronskian import is_dependent, wronskian


def _shape(rng, rmax, dmax, rmin=1):
    r = rng.randint(rmin, rmax)
    d = rng.randint(max(r + 1, 2), max(dmax, r + 1))
    return r, d


def _apply_matrix(M, forms):
    return [linear_combination(row, forms) for row in M]


# binform -----------------------------------------------------------------

def check_substitution_composes(rng, rmax, dmax):
    f = random_form(rng, rng.randint(0, dmax))
    g, h = random_mat2(rng), random_mat2(rng)
    return sl2_substitute(sl2_substitute(f, g), h) == sl2_substitute(f, g @ h)


def check_derivatives_commute(rng, rmax, dmax):
    f = random_form(rng, rng.randint(2, dmax))
    a = partial_derivative(partial_derivative(f, 1, 0), 0, 1)
    b = partial_derivative(partial_derivative(f, 0, 1), 1, 0)
    return a == b == partial_derivative(f, 1, 1)


def check_product_ring_laws(rng, rmax, dmax):
    f, g, h = (random_form(rng, rng.randint(0, dmax)) for _ in range(3))
    h2 = random_form(rng, h.order)
    return (multiply(f, g) == multiply(g, f)
            and multiply(multiply(f, g), h) == multiply(f, multiply(g, h))
            and multiply(f, add(h, h2)) == add(multiply(f, h), multiply(f, h2)))


def check_polarization_restitutes(rng, rmax, dmax):
    f = random_form(rng, rng.randint(0, dmax))
    return all(polarize(f, k).restitute() == f for k in range(f.order + 1))


def check_binomial_round_trip(rng, rmax, dmax):
    f = random_form(rng, rng.randint(0, dmax))
    return from_binomial(to_binomial(f)) == f


def check_rank_routes_agree(rng, rmax, dmax):
    rows = [[random_rational(rng, -2, 2) for _ in range(rng.randint(1, 7))]]
    rows += [[random_rational(rng, -2, 2) for _ in rows[0]] for _ in range(rng.randint(0, 6))]
    # make some rows dependent
    if len(rows) > 2:
        rows[-1] = [a + 2 * b for a, b in zip(rows[0], rows[1])]
    return linalg.rank(rows) == len(linalg.rref(rows)[0])


# transvect ---------------------------------------------------------------

def check_transvectant_symmetry(rng, rmax, dmax):
    E = random_form(rng, rng.randint(0, dmax))
    F = random_form(rng, rng.randint(0, dmax))
    ok = True
    for k in range(min(E.order, F.order) + 1):
        sign = -1 if k % 2 else 1
        t = transvectant(E, F, k)
        ok &= t == transvectant(F, E, k).scale(sign)
        ok &= t.order == E.order + F.order - 2 * k
    return ok


def check_transvectant_bilinear(rng, rmax, dmax):
    e, f = rng.randint(0, dmax), rng.randint(0, dmax)
    E1, E2, F = random_form(rng, e), random_form(rng, e), random_form(rng, f)
    a, b = random_rational(rng), random_rational(rng)
    k = rng.randint(0, min(e, f))
    lhs = transvectant(E1.scale(a) + E2.scale(b), F, k)
    rhs = transvectant(E1, F, k).scale(a) + transvectant(E2, F, k).scale(b)
    return lhs == rhs


def check_transvectant_equivariant(rng, rmax, dmax):
    E = random_form(rng, rng.randint(0, dmax))
    F = random_form(rng, rng.randint(0, dmax))
    g = random_unimodular(rng)
    k = rng.randint(0, min(E.order, F.order))
    return (transvectant(sl2_substitute(E, g), sl2_substitute(F, g), k)
            == sl2_substitute(transvectant(E, F, k), g))


def check_first_transvectant_is_wronskian(rng, rmax, dmax):
    n = rng.randint(1, dmax)
    M, N = random_form(rng, n), random_form(rng, n)
    return transvectant(M, N, 1) == wronskian([M, N])


# wronskian ---------------------------------------------------------------

def check_wronskian_alternating(rng, rmax, dmax):
    n = rng.randint(2, dmax)
    s = rng.randint(2, min(n + 1, rmax + 1))
    forms = [random_form(rng, n) for _ in range(s)]
    i, j = rng.sample(range(s), 2)
    swapped = list(forms)
    swapped[i], swapped[j] = swapped[j], swapped[i]
    repeated = list(forms)
    repeated[j] = forms[i]
    return wronskian(swapped) == -wronskian(forms) and wronskian(repeated).is_zero()


def check_wronskian_multilinear(rng, rmax, dmax):
    n = rng.randint(1, dmax)
    s = rng.randint(1, min(n + 1, rmax + 1))
    forms = [random_form(rng, n) for _ in range(s)]
    G = random_form(rng, n)
    a, b = random_rational(rng), random_rational(rng)
    i = rng.randrange(s)
    mixed = list(forms)
    mixed[i] = forms[i].scale(a) + G.scale(b)
    other = list(forms)
    other[i] = G
    return wronskian(mixed) == wronskian(forms).scale(a) + wronskian(other).scale(b)


def check_wronskian_detects_dependence(rng, rmax, dmax):
    n = rng.randint(1, dmax)
    s = rng.randint(1, min(n + 1, rmax + 1))
    forms = [random_form(rng, n, -2, 2) for _ in range(s)]
    if s > 1 and rng.random() < 0.5:
        # engineered dependence: last form is a combination of the others
        coeffs = [random_rational(rng) for _ in range(s - 1)]
        forms[-1] = linear_combination(coeffs, forms[:-1])
    return is_dependent(forms) == wronskian(forms).is_zero()


def check_wronskian_covariant(rng, rmax, dmax):
    n = rng.randint(1, dmax)
    s = rng.randint(1, min(n + 1, rmax + 1))
    forms = [random_form(rng, n) for _ in range(s)]
    g = random_unimodular(rng)
    return wronskian([sl2_substitute(f, g) for f in forms]) == sl2_substitute(wronskian(forms), g)


# combinant ---------------------------------------------------------------

def check_defining_residual(rng, rmax, dmax):
    r, d = _shape(rng, rmax, dmax)
    A = random_independent_forms(rng, r, d)
    C = wronskian_combinants(A)
    for _ in range(5):
        F = random_form(rng, d)
        if wronskian(A + [F]) != psi_apply(C, F):
            return False
    return True


def check_no_q1_component(rng, rmax, dmax):
    r, d = _shape(rng, rmax, dmax, rmin=2)
    A = random_independent_forms(rng, r, d)
    ext = extract_components(A, extra_q1=True)
    plain = extract_components(A)
    return ext[1].is_zero() and all(ext[q] == plain[q] for q in plain)


def check_basis_change_scales_by_det(rng, rmax, dmax):
    r, d = _shape(rng, rmax, dmax)
    A = random_independent_forms(rng, r, d)
    M = random_invertible(rng, r)
    return wronskian_combinants(_apply_matrix(M, A)) == wronskian_combinants(A).scale(linalg.det(M))


def check_combinants_equivariant(rng, rmax, dmax):
    r, d = _shape(rng, rmax, dmax)
    A = random_independent_forms(rng, r, d)
    g = random_unimodular(rng)
    C = wronskian_combinants(A)
    Cg = wronskian_combinants([sl2_substitute(f, g) for f in A])
    return all(Cg[q] == sl2_substitute(C[q], g) for q in C.components)


def check_kernel_recovers_subspace(rng, rmax, dmax):
    r, d = _shape(rng, rmax, dmax)
    sub = random_subspace(rng, r, d)
    M = psi_matrix(wronskian_combinants(sub))
    ker = kernel(M)
    return (len(ker) == r and tuple(map(tuple, ker)) == sub.canonical
            and M.rank() == d - r + 1)


def check_psi_matrix_matches_apply(rng, rmax, dmax):
    r, d = _shape(rng, rmax, dmax)
    C = wronskian_combinants(random_independent_forms(rng, r, d))
    F = random_form(rng, d)
    return psi_matrix(C)(F) == psi_apply(C, F)


def check_gamma_identities(rng, rmax, dmax):
    r = rng.randint(1, rmax)
    d = rng.randint(r, max(r, dmax))
    n = rng.choice([d, d + 2])
    B = random_form(rng, n)
    A = [random_form(rng, d) for _ in range(r)]
    return verify_keyprop(B, A).all()


def check_scaled_recovery(rng, rmax, dmax):
    r, d = _shape(rng, rmax, dmax)
    sub = random_subspace(rng, r, d)
    k = random_rational(rng, nonzero=True)
    got, kk = recover_subspace(wronskian_combinants(sub).scale(k))
    return got == sub and kk == k


# grassmann ---------------------------------------------------------------

def check_point_basis_independent(rng, rmax, dmax):
    r, d = _shape(rng, rmax, dmax)
    A = random_independent_forms(rng, r, d)
    B = _apply_matrix(random_invertible(rng, r), A)
    return (canonicalize(A) == canonicalize(B)
            and equal_points(pluecker_point(canonicalize(A)), pluecker_point(canonicalize(B))))


def check_distinct_subspaces_distinct_points(rng, rmax, dmax):
    r, d = _shape(rng, rmax, dmax)
    s1, s2 = random_subspace(rng, r, d), random_subspace(rng, r, d)
    return (s1 == s2) == equal_points(pluecker_point(s1), pluecker_point(s2))


def check_membership_round_trip(rng, rmax, dmax):
    r, d = _shape(rng, rmax, dmax)
    sub = random_subspace(rng, r, d)
    P = pluecker_point(sub)
    m = image_membership(P.components())
    return (m.in_image and m.subspace == sub and m.rank == d - r + 1
            and wronskian_combinants(sub).scale(m.scale) == P.components())


def check_random_family_not_in_image(rng, rmax, dmax):
    r, d = _shape(rng, rmax, dmax, rmin=2)
    E = CombinantVector(r, d, {q: random_form(rng, slot_order(r, d, q)) for q in index_set(r, d)})
    return not image_membership(E).in_image


def check_point_equivariant(rng, rmax, dmax):
    r, d = _shape(rng, rmax, dmax)
    A = random_independent_forms(rng, r, d)
    g = random_unimodular(rng)
    moved = pluecker_point(canonicalize([sl2_substitute(f, g) for f in A]))
    C = wronskian_combinants(A)
    acted = CombinantVector(r, d, {q: sl2_substitute(f, g) for q, f in C.components.items()})
    return equal_points(moved, ProjectivePoint.from_combinants(acted))


CHECKS = {
    "substitution_composes": check_substitution_composes,
    "derivatives_commute": check_derivatives_commute,
    "product_ring_laws": check_product_ring_laws,
    "polarization_restitutes": check_polarization_restitutes,
    "binomial_round_trip": check_binomial_round_trip,
    "rank_routes_agree": check_rank_routes_agree,
    "transvectant_symmetry": check_transvectant_symmetry,
    "transvectant_bilinear": check_transvectant_bilinear,
    "transvectant_equivariant": check_transvectant_equivariant,
    "first_transvectant_is_wronskian": check_first_transvectant_is_wronskian,
    "wronskian_alternating": check_wronskian_alternating,
    "wronskian_multilinear": check_wronskian_multilinear,
    "wronskian_detects_dependence": check_wronskian_detects_dependence,
    "wronskian_covariant": check_wronskian_covariant,
    "defining_residual": check_defining_residual,
    "no_q1_component": check_no_q1_component,
    "basis_change_scales_by_det": check_basis_change_scales_by_det,
    "combinants_equivariant": check_combinants_equivariant,
    "kernel_recovers_subspace": check_kernel_recovers_subspace,
    "psi_matrix_matches_apply": check_psi_matrix_matches_apply,
    "gamma_identities": check_gamma_identities,
    "scaled_recovery": check_scaled_recovery,
    "point_basis_independent": check_point_basis_independent,
    "distinct_subspaces_distinct_points": check_distinct_subspaces_distinct_points,
    "membership_round_trip": check_membership_round_trip,
    "random_family_not_in_image": check_random_family_not_in_image,
    "point_equivariant": check_point_equivariant,
}


@dataclass
class CheckResult:
    name: str
    cases: int
    failures: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures


def run_check(name, seed, cases, rmax=3, dmax=6) -> CheckResult:
    fn = CHECKS[name]
    res = CheckResult(name, cases)
    t0 = time.perf_counter()
    for i in range(cases):
        rng = rng_for(seed, name, i)
        try:
            ok = fn(rng, rmax, dmax)
        except Exception as exc:  # a crash counts as a failed case
            res.failures.append({"case": i, "error": f"{type(exc).__name__}: {exc}"})
            continue
        if not ok:
            res.failures.append({"case": i})
    res.seconds = time.perf_counter() - t0
    return res


def _run_one(args):
    return run_check(*args)


def run_suite(seed=0, cases=100, rmax=3, dmax=6, names=None, jobs=1) -> list[CheckResult]:
    names = list(names or CHECKS)
    args = [(n, seed, cases, rmax, dmax) for n in names]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            return list(pool.map(_run_one, args))
    return [run_check(*a) for a in args]
