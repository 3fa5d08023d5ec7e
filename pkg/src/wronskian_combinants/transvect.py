"""Transvectants of binary forms."""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from .binform import BinaryForm, partial_derivative


def transvectant(E: BinaryForm, F: BinaryForm, k: int) -> BinaryForm:
    """The k-th transvectant ``(E, F)_k``.

    Outside ``0 <= k <= min(e, f)`` the result is the zero form of order 0.
    """
    if k < 0:
        raise ValueError("transvectant index must be nonnegative")
    e, f = E.order, F.order
    if k > min(e, f):
        return BinaryForm.zero(0)
    n = e + f - 2 * k
    out = [Fraction(0)] * (n + 1)
    for i in range(k + 1):
        dE = partial_derivative(E, k - i, i)
        dF = partial_derivative(F, i, k - i)
        w = comb(k, i) if i % 2 == 0 else -comb(k, i)
        for a, ca in enumerate(dE.coeffs):
            if not ca:
                continue
            ca = w * ca
            for b, cb in enumerate(dF.coeffs):
                if cb:
                    out[a + b] += ca * cb
    pref = Fraction(factorial(e - k) * factorial(f - k), factorial(e) * factorial(f))
    return BinaryForm([pref * c for c in out], n)
