from fractions import Fraction

import pytest

from wronskian_combinants.binform import BinaryForm, linear_combination, sl2_substitute
from wronskian_combinants.combinant import (CombinantVector, index_set, slot_order,
                                            wronskian_combinants)
from wronskian_combinants.grassmann import (ProjectivePoint, Subspace, canonicalize,
                                            equal_points, image_membership, pluecker_point)
from wronskian_combinants.sampling import (random_form, random_independent_forms,
                                           random_invertible, random_subspace,
                                           random_unimodular)
from wronskian_combinants.transvect import transvectant
from wronskian_combinants.wronskian import wronskian


def test_canonicalize_orders_rows():
    d = 4
    sub = canonicalize([BinaryForm.monomial(d, d), BinaryForm.monomial(d, 0)])
    assert sub.basis == [BinaryForm.monomial(d, 0), BinaryForm.monomial(d, d)]


def test_canonicalize_basis_free(rng):
    A1, A2 = random_independent_forms(rng, 2, 5)
    assert canonicalize([A1, A1 + A2]) == canonicalize([A1, A2])
    A = random_independent_forms(rng, 3, 6)
    M = random_invertible(rng, 3)
    assert canonicalize([linear_combination(row, A) for row in M]) == canonicalize(A)


def test_canonicalize_rejects_dependent():
    f = BinaryForm([1, 2, 3])
    with pytest.raises(ValueError):
        canonicalize([f, f.scale(2)])


def test_subspace_validates_rref():
    with pytest.raises(ValueError):
        Subspace(2, 2, ((1, 0, 0), (1, 1, 0)))
    assert Subspace(1, 2, ((1, 0, 3),)).contains(BinaryForm([2, 0, 6]))


def test_point_of_monomial_pair():
    d = 5
    sub = canonicalize([BinaryForm.monomial(d, 0), BinaryForm.monomial(d, d)])
    A1, A2 = sub.basis
    expected = CombinantVector(2, d, {
        0: transvectant(A1, A2, 1),
        2: transvectant(A1, A2, 3).scale(Fraction(2 - d, 4 * d - 6)),
    })
    assert equal_points(pluecker_point(sub), ProjectivePoint.from_combinants(expected))


def test_point_normalization(rng):
    C = wronskian_combinants(random_subspace(rng, 2, 5))
    p = ProjectivePoint.from_combinants(C)
    assert equal_points(p, ProjectivePoint.from_combinants(C.scale(3)))
    assert equal_points(p, ProjectivePoint.from_combinants(C.scale(Fraction(-5, 7))))
    assert equal_points(p, p)
    assert next(v for v in p.vector if v) > 0
    assert ProjectivePoint.from_combinants(p.components()) == p


def test_point_shape_mismatch(rng):
    p = pluecker_point(random_subspace(rng, 2, 5))
    q = pluecker_point(random_subspace(rng, 2, 6))
    with pytest.raises(ValueError):
        equal_points(p, q)


def test_distinct_subspaces_distinct_points(rng):
    subs = {}
    while len(subs) < 20:
        s = random_subspace(rng, 2, 5)
        subs[s] = pluecker_point(s)
    assert len({p.vector for p in subs.values()}) == 20


def test_point_sl2_equivariant(rng):
    A = random_independent_forms(rng, 3, 5)
    g = random_unimodular(rng)
    C = wronskian_combinants(A)
    acted = CombinantVector(3, 5, {q: sl2_substitute(f, g) for q, f in C.components.items()})
    moved = pluecker_point(canonicalize([sl2_substitute(f, g) for f in A]))
    assert equal_points(moved, ProjectivePoint.from_combinants(acted))


def test_membership_of_genuine_point(rng):
    for r, d in [(2, 5), (3, 6), (4, 7)]:
        sub = random_subspace(rng, r, d)
        E = pluecker_point(sub).components()
        m = image_membership(E)
        assert m.in_image and m.rank == d - r + 1 and m.kernel_dim == r
        assert m.subspace == sub
        assert wronskian_combinants(sub).scale(m.scale) == E


def test_membership_of_random_family(rng):
    r, d = 3, 6
    E = CombinantVector(r, d, {q: random_form(rng, slot_order(r, d, q)) for q in index_set(r, d)})
    m = image_membership(E)
    assert not m.in_image and m.rank > d - r + 1


def test_membership_of_truncated_family(rng):
    r, d = 3, 6
    A = random_independent_forms(rng, r, d)
    E = CombinantVector(r, d, {q: (wronskian(A) if q == 0 else BinaryForm.zero(slot_order(r, d, q)))
                               for q in index_set(r, d)})
    assert not image_membership(E).in_image


def test_membership_of_zero_is_an_error():
    with pytest.raises(ValueError):
        image_membership(CombinantVector.zero(2, 4))
