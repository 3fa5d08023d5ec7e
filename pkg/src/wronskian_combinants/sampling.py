"""Seeded random inputs for the randomized identity checks."""

from __future__ import annotations

import random
from fractions import Fraction

from .binform import BinaryForm, Mat2
from .grassmann import Subspace, canonicalize
from . import linalg

LO, HI = -9, 9


def rng_for(seed, *tags) -> random.Random:
    """Independent deterministic stream per (seed, tags)."""
    return random.Random(":".join(map(str, (seed,) + tags)))


def random_form(rng, d, lo=LO, hi=HI) -> BinaryForm:
    return BinaryForm([rng.randint(lo, hi) for _ in range(d + 1)], d)


def random_nonzero_form(rng, d) -> BinaryForm:
    while True:
        f = random_form(rng, d)
        if not f.is_zero():
            return f


def random_rational(rng, lo=LO, hi=HI, nonzero=False) -> Fraction:
    while True:
        x = Fraction(rng.randint(lo, hi), rng.randint(1, hi))
        if x or not nonzero:
            return x


def random_independent_forms(rng, r, d) -> list[BinaryForm]:
    """r integer d-ics with entries in [-9, 9], rank-deficient draws rejected."""
    while True:
        forms = [random_form(rng, d) for _ in range(r)]
        if linalg.rank([f.coeffs for f in forms]) == r:
            return forms


def random_subspace(rng, r, d) -> Subspace:
    return canonicalize(random_independent_forms(rng, r, d))


def random_invertible(rng, r) -> list[list[Fraction]]:
    while True:
        M = [[random_rational(rng) for _ in range(r)] for _ in range(r)]
        if linalg.det(M):
            return M


def random_unimodular(rng) -> Mat2:
    """Product of elementary shears, so the determinant is exactly 1."""
    g = Mat2(1, 0, 0, 1)
    for _ in range(3):
        a, b = random_rational(rng, -3, 3), random_rational(rng, -3, 3)
        g = g @ Mat2(1, a, 0, 1) @ Mat2(1, 0, b, 1)
    return g


def random_mat2(rng) -> Mat2:
    while True:
        try:
            return Mat2(*(rng.randint(-5, 5) for _ in range(4)))
        except ValueError:
            continue
