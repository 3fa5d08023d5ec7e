"""Wronskians of binary forms and linear dependence."""

from __future__ import annotations

from fractions import Fraction
from math import factorial, lcm

from . import linalg
from .binform import BinaryForm, partial_derivative


def _check_family(forms) -> int:
    forms = list(forms)
    if not forms:
        raise ValueError("need at least one form")
    n = forms[0].order
    if any(f.order != n for f in forms):
        raise ValueError("all forms must have the same order")
    return n


def _pmul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _integral(forms):
    """Integer coefficient lists and the common scale: f_i = ints_i / den_i."""
    ints, scale = [], Fraction(1)
    for f in forms:
        den = lcm(1, *(c.denominator for c in f.coeffs))
        ints.append(BinaryForm([c * den for c in f.coeffs], f.order))
        scale /= den
    return ints, scale


def _derivative_rows(forms, s):
    # row i, column j: d^(s-1) F_i / dx1^(s-1-j) dx2^j, as int lists
    return [[[int(c) for c in partial_derivative(f, s - 1 - j, j).coeffs]
             for j in range(s)] for f in forms]


def _minors(rows, ncols):
    """Laplace expansion down the rows, memoized on the remaining columns.

    Returns a function ``minor(first_row, colmask)`` giving the determinant of
    rows ``first_row..`` restricted to the columns in ``colmask``.
    """
    nrows = len(rows)
    memo = {}

    def minor(row, cols):
        if row == nrows:
            return [1]
        key = (row, cols)
        if key in memo:
            return memo[key]
        acc = None
        sign = 1
        for c in range(ncols):
            if not cols >> c & 1:
                continue
            entry = rows[row][c]
            if any(entry):
                term = _pmul(entry, minor(row + 1, cols & ~(1 << c)))
                if acc is None:
                    acc = term if sign > 0 else [-x for x in term]
                else:
                    for t, x in enumerate(term):
                        acc[t] += x if sign > 0 else -x
            sign = -sign
        if acc is None:
            width = sum(len(rows[i][0]) - 1 for i in range(row, nrows)) + 1
            acc = [0] * width
        memo[key] = acc
        return acc

    return minor


def _prefactor(n, s):
    return Fraction(factorial(n - s + 1), factorial(n)) ** s


def wronskian(forms) -> BinaryForm:
    """Normalized Wronskian of ``s`` forms of common order ``n``.

    The result has order ``s (n - s + 1)`` and vanishes exactly when the
    forms are linearly dependent.
    """
    forms = list(forms)
    n = _check_family(forms)
    s = len(forms)
    if s > n + 1:
        raise ValueError(f"{s} forms of order {n} are always dependent; Wronskian undefined")
    ints, scale = _integral(forms)
    det = _minors(_derivative_rows(ints, s), s)(0, (1 << s) - 1)
    c = _prefactor(n, s) * scale
    return BinaryForm([c * x for x in det], s * (n - s + 1))


def bordered_wronskians(forms, tails) -> list[BinaryForm]:
    """``W(A_1, .., A_r, F)`` for every F in ``tails``.

    Expands along the last row so the r x r minors of the A rows are computed
    once and shared by all F.
    """
    forms, tails = list(forms), list(tails)
    n = _check_family(forms + tails)
    s = len(forms) + 1
    if s > n + 1:
        raise ValueError(f"{s} forms of order {n} are always dependent; Wronskian undefined")
    ints, scale = _integral(forms)
    minor = _minors(_derivative_rows(ints, s), s)
    full = (1 << s) - 1
    cof = [minor(0, full & ~(1 << c)) for c in range(s)]
    out = []
    for F in tails:
        Fi, fscale = _integral([F])
        row = _derivative_rows(Fi, s)[0]
        acc = [0] * (s * (n - s + 1) + 1)
        for c in range(s):
            if not any(row[c]):
                continue
            sign = 1 if (s - 1 + c) % 2 == 0 else -1
            for t, x in enumerate(_pmul(cof[c], row[c])):
                acc[t] += sign * x
        k = _prefactor(n, s) * scale * fscale
        out.append(BinaryForm([k * x for x in acc], s * (n - s + 1)))
    return out


def coefficient_matrix(forms):
    return [list(f.coeffs) for f in forms]


def is_dependent(forms) -> bool:
    """Rank test on the coefficient matrix (independent of the Wronskian)."""
    forms = list(forms)
    _check_family(forms)
    return linalg.rank(coefficient_matrix(forms)) < len(forms)
