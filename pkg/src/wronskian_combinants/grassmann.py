"""Subspaces of binary d-ics and their images under the combinant map.

A subspace is identified by the reduced row echelon form of its coefficient
matrix.  The map sending a subspace to the projective class of its Wronskian
combinants is injective; the image is cut out by a rank condition on psi_E.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Optional

from . import linalg
from .binform import BinaryForm
from .combinant import (CombinantVector, psi_matrix, recover_subspace,
                        wronskian_combinants)
from .errors import NotInImageError


@dataclass(frozen=True)
class Subspace:
    r: int
    d: int
    canonical: tuple

    def __post_init__(self):
        rows = tuple(tuple(Fraction(x) for x in row) for row in self.canonical)
        if len(rows) != self.r or any(len(row) != self.d + 1 for row in rows):
            raise ValueError("canonical matrix must be r x (d+1)")
        reduced, _ = linalg.rref(rows, self.d + 1)
        if tuple(tuple(row) for row in reduced) != rows:
            raise ValueError("matrix is not a full-rank reduced row echelon form")
        object.__setattr__(self, "canonical", rows)

    @property
    def basis(self) -> list[BinaryForm]:
        return [BinaryForm(row, self.d) for row in self.canonical]

    def contains(self, f: BinaryForm) -> bool:
        return linalg.rank(list(self.canonical) + [list(f.coeffs)]) == self.r


def canonicalize(forms) -> Subspace:
    forms = list(forms)
    if not forms:
        raise ValueError("need at least one form")
    d = forms[0].order
    if any(f.order != d for f in forms):
        raise ValueError("all forms must have the same order")
    reduced, _ = linalg.rref([list(f.coeffs) for f in forms], d + 1)
    if len(reduced) != len(forms):
        raise ValueError("forms are linearly dependent")
    return Subspace(len(forms), d, tuple(tuple(row) for row in reduced))


def _normalize(values) -> tuple[int, ...]:
    values = [Fraction(v) for v in values]
    if not any(values):
        raise ValueError("the zero vector has no projective class")
    den = lcm(1, *(v.denominator for v in values))
    ints = [int(v * den) for v in values]
    g = gcd(*ints)
    ints = [v // g for v in ints]
    if next(v for v in ints if v) < 0:
        ints = [-v for v in ints]
    return tuple(ints)


@dataclass(frozen=True)
class ProjectivePoint:
    """Primitive integer representative of a point of P(U).

    ``orders`` records (q, order) per component so the point can be split
    back into forms.
    """

    r: int
    d: int
    orders: tuple
    vector: tuple

    @classmethod
    def from_combinants(cls, E: CombinantVector) -> ProjectivePoint:
        return cls(E.r, E.d, tuple(E.orders().items()), _normalize(E.vector()))

    def components(self) -> CombinantVector:
        comps, pos = {}, 0
        for q, n in self.orders:
            comps[q] = BinaryForm(self.vector[pos:pos + n + 1], n)
            pos += n + 1
        return CombinantVector(self.r, self.d, comps)


def pluecker_point(subspace: Subspace) -> ProjectivePoint:
    return ProjectivePoint.from_combinants(wronskian_combinants(subspace))


def equal_points(p: ProjectivePoint, q: ProjectivePoint) -> bool:
    if (p.r, p.d, p.orders) != (q.r, q.d, q.orders):
        raise ValueError("points live in different projective spaces")
    return p.vector == q.vector


@dataclass(frozen=True)
class Membership:
    in_image: bool
    rank: int
    kernel_dim: int
    subspace: Optional[Subspace] = None
    scale: Optional[Fraction] = None
    reason: str = ""


def image_membership(E: CombinantVector) -> Membership:
    """Decide whether ``E`` is (a multiple of) the combinants of a subspace.

    In the image exactly when rank psi_E <= d - r + 1.
    """
    if E.is_zero():
        raise ValueError("the zero family is not a projective point")
    M = psi_matrix(E)
    rk = M.rank()
    kdim = M.cols - rk
    if rk > E.d - E.r + 1:
        return Membership(False, rk, kdim, reason=f"rank {rk} exceeds d-r+1 = {E.d - E.r + 1}")
    try:
        sub, k = recover_subspace(E)
    except NotInImageError as exc:
        return Membership(False, rk, kdim, reason=str(exc))
    return Membership(True, rk, kdim, sub, k)
