"""Binary forms with exact rational coefficients.

A form of order ``d`` is stored densely as ``d + 1`` coefficients in the raw
monomial basis: ``coeffs[j]`` multiplies ``x1**(d-j) * x2**j``.  The order is
part of the value, so the zero form of order 5 and the zero form of order 0
are different objects.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from numbers import Rational
from typing import Sequence

Scalar = Fraction


def _scalar(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"not an exact rational: {x!r}")


class BinaryForm:
    """Homogeneous polynomial in ``x1, x2`` of a fixed order."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence, order: int | None = None):
        cs = tuple(_scalar(c) for c in coeffs)
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("a binary form needs at least one coefficient")
        if len(cs) != order + 1:
            raise ValueError(f"order {order} needs {order + 1} coefficients, got {len(cs)}")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", cs)

    def __setattr__(self, name, value):
        raise AttributeError("BinaryForm is immutable")

    @classmethod
    def zero(cls, order: int = 0) -> BinaryForm:
        return cls([0] * (order + 1), order)

    @classmethod
    def one(cls) -> BinaryForm:
        return cls([1])

    @classmethod
    def monomial(cls, order: int, j: int, c=1) -> BinaryForm:
        """``c * x1**(order-j) * x2**j``."""
        cs = [0] * (order + 1)
        cs[j] = c
        return cls(cs, order)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if not isinstance(other, BinaryForm):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __add__(self, other):
        if not isinstance(other, BinaryForm):
            return NotImplemented
        return add(self, other)

    def __sub__(self, other):
        if not isinstance(other, BinaryForm):
            return NotImplemented
        return add(self, -other)

    def __neg__(self):
        return BinaryForm([-c for c in self.coeffs], self.order)

    def __mul__(self, other):
        if isinstance(other, BinaryForm):
            return multiply(self, other)
        try:
            s = _scalar(other)
        except TypeError:
            return NotImplemented
        return self.scale(s)

    def __rmul__(self, other):
        try:
            s = _scalar(other)
        except TypeError:
            return NotImplemented
        return self.scale(s)

    def scale(self, s) -> BinaryForm:
        s = _scalar(s)
        return BinaryForm([s * c for c in self.coeffs], self.order)

    def __call__(self, x1, x2):
        d = self.order
        return sum((c * x1 ** (d - j) * x2 ** j for j, c in enumerate(self.coeffs)),
                   Fraction(0))

    def __repr__(self):
        return f"BinaryForm({[str(c) for c in self.coeffs]}, order={self.order})"

    def __str__(self):
        d = self.order
        terms = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "*".join(
                v if e == 1 else f"{v}^{e}"
                for v, e in (("x1", d - j), ("x2", j)) if e
            )
            mag = abs(c)
            if mono:
                body = mono if mag == 1 else f"{mag}*{mono}"
            else:
                body = str(mag)
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            return "0"
        s = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            s += f" {sign} {body}"
        return s


def add(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    if f.order != g.order:
        raise ValueError(f"cannot add forms of orders {f.order} and {g.order}")
    return BinaryForm([a + b for a, b in zip(f.coeffs, g.coeffs)], f.order)


def multiply(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    out = [Fraction(0)] * (f.order + g.order + 1)
    for i, a in enumerate(f.coeffs):
        if not a:
            continue
        for j, b in enumerate(g.coeffs):
            if b:
                out[i + j] += a * b
    return BinaryForm(out, f.order + g.order)


def linear_combination(scalars, forms) -> BinaryForm:
    forms = list(forms)
    if not forms:
        raise ValueError("empty linear combination")
    order = forms[0].order
    out = [Fraction(0)] * (order + 1)
    for s, f in zip(scalars, forms):
        if f.order != order:
            raise ValueError("order mismatch in linear combination")
        s = _scalar(s)
        if not s:
            continue
        for j, c in enumerate(f.coeffs):
            if c:
                out[j] += s * c
    return BinaryForm(out, order)


@lru_cache(maxsize=None)
def _falling(n: int, k: int) -> int:
    # n (n-1) ... (n-k+1)
    p = 1
    for t in range(k):
        p *= n - t
    return p


def partial_derivative(f: BinaryForm, k1: int, k2: int) -> BinaryForm:
    """``d^(k1+k2) f / dx1^k1 dx2^k2``.

    Over-differentiation yields the zero form of order 0.
    """
    if k1 < 0 or k2 < 0:
        raise ValueError("derivative orders must be nonnegative")
    d = f.order
    if k1 + k2 > d:
        return BinaryForm.zero(0)
    n = d - k1 - k2
    # coefficient j of the result comes from monomial x1^(d-j') x2^j' with j' = j + k2
    out = []
    for j in range(n + 1):
        jj = j + k2
        c = f.coeffs[jj]
        out.append(c * _falling(d - jj, k1) * _falling(jj, k2) if c else Fraction(0))
    return BinaryForm(out, n)


@dataclass(frozen=True)
class Mat2:
    """The substitution ``x1 -> alpha x1 + beta x2, x2 -> gamma x1 + delta x2``."""

    alpha: Fraction
    beta: Fraction
    gamma: Fraction
    delta: Fraction

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma", "delta"):
            object.__setattr__(self, name, _scalar(getattr(self, name)))
        if not self.det:
            raise ValueError("substitution matrix must be invertible")

    @classmethod
    def from_rows(cls, rows) -> Mat2:
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    @property
    def det(self) -> Fraction:
        return self.alpha * self.delta - self.beta * self.gamma

    @property
    def unimodular(self) -> bool:
        return self.det == 1

    def __matmul__(self, other: Mat2) -> Mat2:
        return Mat2(
            self.alpha * other.alpha + self.beta * other.gamma,
            self.alpha * other.beta + self.beta * other.delta,
            self.gamma * other.alpha + self.delta * other.gamma,
            self.gamma * other.beta + self.delta * other.delta,
        )


def _linear_powers(a, b, n):
    """Coefficient lists of (a x1 + b x2)^e for e = 0..n."""
    pows = [BinaryForm([1])]
    lin = BinaryForm([a, b])
    for _ in range(n):
        pows.append(multiply(pows[-1], lin))
    return pows


def sl2_substitute(f: BinaryForm, g: Mat2) -> BinaryForm:
    """The form ``f(alpha x1 + beta x2, gamma x1 + delta x2)``.

    Substituting ``g`` and then ``h`` equals substituting ``g @ h``.
    """
    d = f.order
    p1 = _linear_powers(g.alpha, g.beta, d)
    p2 = _linear_powers(g.gamma, g.delta, d)
    out = [Fraction(0)] * (d + 1)
    for j, c in enumerate(f.coeffs):
        if not c:
            continue
        term = multiply(p1[d - j], p2[j])
        for t, x in enumerate(term.coeffs):
            out[t] += c * x
    return BinaryForm(out, d)


class BiForm:
    """Bihomogeneous form in ``x`` and ``y``.

    ``coeffs[i][j]`` multiplies ``x1^(xorder-i) x2^i y1^(yorder-j) y2^j``.
    """

    __slots__ = ("xorder", "yorder", "coeffs")

    def __init__(self, coeffs, xorder: int, yorder: int):
        rows = tuple(tuple(_scalar(c) for c in row) for row in coeffs)
        if len(rows) != xorder + 1 or any(len(row) != yorder + 1 for row in rows):
            raise ValueError("coefficient matrix does not match the bidegree")
        self.xorder = xorder
        self.yorder = yorder
        self.coeffs = rows

    def __eq__(self, other):
        if not isinstance(other, BiForm):
            return NotImplemented
        return (self.xorder, self.yorder, self.coeffs) == (other.xorder, other.yorder, other.coeffs)

    def __hash__(self):
        return hash((self.xorder, self.yorder, self.coeffs))

    def __repr__(self):
        return f"BiForm(xorder={self.xorder}, yorder={self.yorder}, coeffs={self.coeffs})"

    def restitute(self) -> BinaryForm:
        """Set ``y := x``."""
        out = [Fraction(0)] * (self.xorder + self.yorder + 1)
        for i, row in enumerate(self.coeffs):
            for j, c in enumerate(row):
                out[i + j] += c
        return BinaryForm(out, self.xorder + self.yorder)


def polarize(f: BinaryForm, k: int) -> BiForm:
    """k-th polarization, normalized so that restitution gives back ``f``."""
    n = f.order
    if not 0 <= k <= n:
        raise ValueError(f"polarization index {k} outside 0..{n}")
    pref = Fraction(factorial(n - k), factorial(n))
    cols = []
    for j in range(k + 1):
        # y1^(k-j) y2^j picks the derivative d^k / dx1^(k-j) dx2^j
        der = partial_derivative(f, k - j, j)
        cols.append([pref * comb(k, j) * c for c in der.coeffs])
    rows = [[cols[j][i] for j in range(k + 1)] for i in range(n - k + 1)]
    return BiForm(rows, n - k, k)


def to_binomial(f: BinaryForm) -> list[Fraction]:
    """Raw coefficients to the binomially weighted convention ``a_j = c_j / C(d, j)``."""
    d = f.order
    return [c / comb(d, j) for j, c in enumerate(f.coeffs)]


def from_binomial(a: Sequence) -> BinaryForm:
    d = len(a) - 1
    return BinaryForm([_scalar(x) * comb(d, j) for j, x in enumerate(a)], d)
