"""Exact linear algebra over the rationals.

Matrices are plain lists of rows of :class:`fractions.Fraction`.  Two
independent elimination routes are provided: Gauss-Jordan over fractions
(``rref``, ``nullspace``, ``solve``) and fraction-free Bareiss elimination
over the integers (``rank``, ``det``).  Tests play them against each other.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm


def as_matrix(rows):
    return [[Fraction(x) for x in row] for row in rows]


def identity(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def transpose(rows, ncols=None):
    if not rows:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*rows)]


def matvec(rows, vec):
    out = []
    for row in rows:
        s = Fraction(0)
        for a, x in zip(row, vec):
            if a and x:
                s += a * x
        out.append(s)
    return out


def matmul(a, b):
    bt = transpose(b)
    return [[sum((x * y for x, y in zip(row, col) if x and y), Fraction(0))
             for col in bt] for row in a]


def rref(rows, ncols=None):
    """Reduced row echelon form by Gauss-Jordan elimination.

    Returns ``(R, pivots)`` where ``R`` holds only the nonzero rows, each with
    a leading 1, and ``pivots`` lists their leading columns.
    """
    m = as_matrix(rows)
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        if piv != 1:
            m[r] = [x / piv for x in m[r]]
        prow = m[r]
        nz = [j for j in range(c, ncols) if prow[j]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                row = m[i]
                for j in nz:
                    row[j] -= f * prow[j]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def _integer_rows(rows):
    out = []
    for row in rows:
        row = [Fraction(x) for x in row]
        den = lcm(1, *(x.denominator for x in row))
        out.append([int(x * den) for x in row])
    return out


def _bareiss(m, ncols):
    """In-place fraction-free elimination on an integer matrix; returns rank
    and the last pivot (which equals the determinant up to sign when square
    and nonsingular)."""
    nrows = len(m)
    prev = 1
    r = 0
    sign = 1
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if m[i][c]), None)
        if p is None:
            continue
        if p != r:
            m[r], m[p] = m[p], m[r]
            sign = -sign
        piv = m[r][c]
        for i in range(r + 1, nrows):
            mi = m[i]
            a = mi[c]
            for j in range(c + 1, ncols):
                # exact by Sylvester's identity
                mi[j] = (piv * mi[j] - a * m[r][j]) // prev
            mi[c] = 0
        prev = piv
        r += 1
    return r, sign * prev


def rank(rows, ncols=None):
    """Rank via fraction-free integer elimination (independent of ``rref``)."""
    if not rows:
        return 0
    m = _integer_rows(rows)
    if ncols is None:
        ncols = len(m[0])
    return _bareiss(m, ncols)[0]


def det(rows):
    """Determinant of a square rational matrix via Bareiss elimination."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    m = []
    for row in rows:
        row = [Fraction(x) for x in row]
        den = lcm(1, *(x.denominator for x in row))
        scale /= den
        m.append([int(x * den) for x in row])
    rk, last = _bareiss(m, n)
    if rk < n:
        return Fraction(0)
    return last * scale


def nullspace(rows, ncols):
    """Basis of ``{x : A x = 0}`` in reduced row echelon form."""
    if not rows:
        return [v for v in identity(ncols)]
    r, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(r, pivots):
            v[p] = -row[f]
        basis.append(v)
    if not basis:
        return []
    return rref(basis, ncols)[0]


def solve(rows, rhs, ncols=None):
    """One solution of ``A x = b`` with free coordinates set to zero.

    Returns ``None`` when the system is inconsistent.
    """
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    aug = [list(row) + [b] for row, b in zip(rows, rhs)]
    r, pivots = rref(aug, ncols + 1)
    if pivots and pivots[-1] == ncols:
        return None
    x = [Fraction(0)] * ncols
    for row, p in zip(r, pivots):
        x[p] = row[ncols]
    return x


def inverse(rows):
    n = len(rows)
    aug = [list(row) + e for row, e in zip(as_matrix(rows), identity(n))]
    r, pivots = rref(aug, 2 * n)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in r]
