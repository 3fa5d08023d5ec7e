"""Wronskian combinants and the differential operator they parameterize.

For ``r`` independent ``d``-ics ``A_1..A_r`` the combinants ``C_q``
(``q in {0, 2, 3, ..., r}``, ``C_q`` of order ``r(d-r+1) - 2q``) are the
unique forms with

    W(A_1, ..., A_r, F) = sum_q (C_q, F)_{r-q}     for every d-ic F.

They are computed here by solving that linear system.  The system matrix
depends only on ``(r, d)`` and is factored once per shape.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from . import linalg
from .binform import BinaryForm, linear_combination, multiply
from .errors import IdentityViolation, NotInImageError, NotInSpanError
from .transvect import transvectant
from .wronskian import bordered_wronskians, wronskian


def slot_order(r: int, d: int, q: int) -> int:
    return r * (d - r + 1) - 2 * q


def index_set(r: int, d: int) -> list[int]:
    """Indices q in {0, 2..r} whose component has nonnegative order."""
    return [q for q in range(r + 1) if q != 1 and slot_order(r, d, q) >= 0]


def psi_order(r: int, d: int) -> int:
    """Order of the forms psi_E(F), i.e. of W(A_1..A_r, F)."""
    return (r + 1) * (d - r)


def _active(r, d, q):
    # (E_q, F)_{r-q} is identically zero unless r - q <= min(order E_q, d)
    return r - q <= min(slot_order(r, d, q), d)


class CombinantVector:
    """A family ``{E_q}`` of forms of the orders a Wronskian combinant has.

    Components are keyed by ``q``; a slot whose prescribed order is negative
    is absent.  Index 1 never appears.
    """

    __slots__ = ("r", "d", "components")

    def __init__(self, r: int, d: int, components):
        if not 1 <= r <= d:
            raise ValueError(f"need 1 <= r <= d, got r={r}, d={d}")
        comps = dict(components)
        expected = index_set(r, d)
        if sorted(comps) != expected:
            raise ValueError(f"components must be indexed by {expected}, got {sorted(comps)}")
        for q, f in comps.items():
            if f.order != slot_order(r, d, q):
                raise ValueError(
                    f"component {q} must have order {slot_order(r, d, q)}, got {f.order}")
        self.r = r
        self.d = d
        self.components = {q: comps[q] for q in expected}

    @classmethod
    def zero(cls, r, d):
        return cls(r, d, {q: BinaryForm.zero(slot_order(r, d, q)) for q in index_set(r, d)})

    def __getitem__(self, q) -> BinaryForm:
        return self.components[q]

    def orders(self) -> dict[int, int]:
        return {q: f.order for q, f in self.components.items()}

    def is_zero(self) -> bool:
        return all(f.is_zero() for f in self.components.values())

    def scale(self, k) -> CombinantVector:
        return CombinantVector(self.r, self.d, {q: f.scale(k) for q, f in self.components.items()})

    def __mul__(self, k):
        return self.scale(k)

    __rmul__ = __mul__

    def vector(self) -> list[Fraction]:
        """All coefficients, components concatenated in increasing q."""
        return [c for f in self.components.values() for c in f.coeffs]

    def __eq__(self, other):
        if not isinstance(other, CombinantVector):
            return NotImplemented
        return (self.r, self.d, self.components) == (other.r, other.d, other.components)

    def __hash__(self):
        return hash((self.r, self.d, tuple(self.components.items())))

    def __repr__(self):
        body = ", ".join(f"{q}: {f}" for q, f in self.components.items())
        return f"CombinantVector(r={self.r}, d={self.d}, {{{body}}})"


@dataclass(frozen=True)
class LinearMap:
    """Exact matrix of a linear map between coefficient spaces of forms."""

    entries: tuple
    domain_order: int
    codomain_order: int

    def __post_init__(self):
        rows = tuple(tuple(Fraction(x) for x in row) for row in self.entries)
        if len(rows) != self.codomain_order + 1 or any(
                len(row) != self.domain_order + 1 for row in rows):
            raise ValueError("matrix shape does not match the form orders")
        object.__setattr__(self, "entries", rows)

    @property
    def rows(self) -> int:
        return self.codomain_order + 1

    @property
    def cols(self) -> int:
        return self.domain_order + 1

    def apply(self, vec) -> list[Fraction]:
        return linalg.matvec(self.entries, vec)

    def __call__(self, f: BinaryForm) -> BinaryForm:
        if f.order != self.domain_order:
            raise ValueError(f"expected a form of order {self.domain_order}")
        return BinaryForm(self.apply(f.coeffs), self.codomain_order)

    def rank(self) -> int:
        return linalg.rank(self.entries, self.cols)

    def is_zero(self) -> bool:
        return not any(any(row) for row in self.entries)


def kernel(M: LinearMap) -> list[list[Fraction]]:
    """Nullspace basis in reduced row echelon form."""
    return linalg.nullspace([list(row) for row in M.entries], M.cols)


def _forms_of(subspace_or_forms):
    basis = getattr(subspace_or_forms, "basis", subspace_or_forms)
    return list(basis)


@lru_cache(maxsize=None)
def _extraction_system(r: int, d: int, slots: tuple[int, ...]):
    """Factor the map (E_q)_q -> [psi_E(x1^(d-j) x2^j)]_j for the given slots.

    Returns the full system matrix, the unknown layout, a set of independent
    rows and the inverse of the square block on them.
    """
    N = psi_order(r, d)
    unknowns = [(q, t) for q in slots for t in range(slot_order(r, d, q) + 1)]
    nrows = (d + 1) * (N + 1)
    cols = []
    for q, t in unknowns:
        mono = BinaryForm.monomial(slot_order(r, d, q), t)
        col = [Fraction(0)] * nrows
        for j in range(d + 1):
            tv = transvectant(mono, BinaryForm.monomial(d, j), r - q)
            if tv.order != N:
                continue
            for u, c in enumerate(tv.coeffs):
                if c:
                    col[j * (N + 1) + u] = c
        cols.append(col)
    T = linalg.transpose(cols)
    _, rows_used = linalg.rref(cols, nrows)
    if len(rows_used) != len(unknowns):
        raise IdentityViolation(
            f"extraction system for r={r}, d={d} is not of full column rank")
    block = [T[i] for i in rows_used]
    return T, unknowns, rows_used, linalg.inverse(block)


def extract_components(forms, extra_q1: bool = False) -> dict[int, BinaryForm]:
    """Solve ``W(A, F) = sum_q (E_q, F)_{r-q}`` for the ``E_q``.

    With ``extra_q1`` an additional unknown slot q = 1 (order r(d-r+1) - 2)
    takes part in the solve; its solution is expected to vanish.  Slots whose
    transvectant with a d-ic is identically zero (only when r = d) carry no
    information and are returned as zero forms.
    """
    forms = list(forms)
    r = len(forms)
    if r == 0:
        raise ValueError("need at least one form")
    d = forms[0].order
    if any(f.order != d for f in forms):
        raise ValueError("all forms must have the same order")
    if r > d:
        raise ValueError(f"need r <= d, got r={r}, d={d}")
    slots = index_set(r, d)
    if extra_q1 and slot_order(r, d, 1) >= 0:
        slots = sorted(slots + [1])
    active = tuple(q for q in slots if _active(r, d, q))
    T, unknowns, rows_used, inv = _extraction_system(r, d, active)

    rhs = []
    for W in bordered_wronskians(forms, [BinaryForm.monomial(d, j) for j in range(d + 1)]):
        rhs.extend(W.coeffs)
    sol = linalg.matvec(inv, [rhs[i] for i in rows_used])
    if linalg.matvec(T, sol) != rhs:
        raise IdentityViolation("W(A, F) is not of the form sum_q (E_q, F)_{r-q}")

    coeffs = {q: [Fraction(0)] * (slot_order(r, d, q) + 1) for q in slots}
    for (q, t), c in zip(unknowns, sol):
        coeffs[q][t] = c
    return {q: BinaryForm(cs, slot_order(r, d, q)) for q, cs in coeffs.items()}


def wronskian_combinants(subspace) -> CombinantVector:
    """Wronskian combinants of a Subspace (its canonical basis) or of a list
    of forms (as given).  Dependent forms give the zero vector."""
    forms = _forms_of(subspace)
    comps = extract_components(forms)
    return CombinantVector(len(forms), forms[0].order, comps)


def psi_apply(E: CombinantVector, F: BinaryForm) -> BinaryForm:
    """``psi_E(F) = sum_q (E_q, F)_{r-q}``."""
    r, d = E.r, E.d
    if F.order != d:
        raise ValueError(f"psi_E acts on forms of order {d}, got {F.order}")
    out = BinaryForm.zero(psi_order(r, d))
    for q, Eq in E.components.items():
        if _active(r, d, q):
            out = out + transvectant(Eq, F, r - q)
    return out


def psi_matrix(E: CombinantVector) -> LinearMap:
    """Matrix of psi_E; column j is psi_E(x1^(d-j) x2^j)."""
    d = E.d
    cols = [psi_apply(E, BinaryForm.monomial(d, j)).coeffs for j in range(d + 1)]
    return LinearMap(linalg.transpose(cols), d, psi_order(E.r, d))


def _deleted_wronskian(forms, i):
    rest = forms[:i] + forms[i + 1:]
    return wronskian(rest) if rest else BinaryForm.one()


def gamma(B: BinaryForm, forms, p: int) -> BinaryForm:
    """``sum_i (-1)^(i+1) (B, A_i)_p W(A_1, .., A_i omitted, .., A_r)``."""
    forms = list(forms)
    if not forms:
        raise ValueError("need at least one form")
    d = forms[0].order
    if any(f.order != d for f in forms):
        raise ValueError("all forms must have the same order")
    if not 0 <= p <= min(d, B.order):
        raise ValueError(f"p={p} outside 0..min({d}, {B.order})")
    total = None
    for i, A in enumerate(forms):
        term = multiply(transvectant(B, A, p), _deleted_wronskian(forms, i))
        if i % 2:
            term = -term
        total = term if total is None else total + term
    return total


class KeypropReport(NamedTuple):
    low_vanish: bool      # Gamma_p = 0 for p <= r - 2
    at_r_minus_1: bool    # Gamma_{r-1} = (-1)^(r-1) B W
    at_r: bool            # Gamma_r = (-1)^(r-1) r (B, W)_1

    def all(self) -> bool:
        return self.low_vanish and self.at_r_minus_1 and self.at_r


def verify_keyprop(B: BinaryForm, forms) -> KeypropReport:
    forms = list(forms)
    r = len(forms)
    if not forms:
        raise ValueError("need at least one form")
    d = forms[0].order
    if min(d, B.order) < r:
        raise ValueError(f"need min(d, order B) >= r, got d={d}, order B={B.order}, r={r}")
    sign = -1 if (r - 1) % 2 else 1
    W = wronskian(forms)
    low = all(gamma(B, forms, p).is_zero() for p in range(r - 1))
    mid = gamma(B, forms, r - 1) == multiply(B, W).scale(sign)
    top = gamma(B, forms, r) == transvectant(B, W, 1).scale(sign * r)
    return KeypropReport(low, mid, top)


def recover_subspace(E: CombinantVector):
    """Recover ``(subspace, k)`` with ``E = k * wronskian_combinants(subspace)``.

    The subspace is the polynomial solution space of psi_E(F) = 0 and must
    have dimension exactly r; otherwise NotInImageError is raised.
    """
    from .grassmann import Subspace

    if E.is_zero():
        raise ValueError("the zero family has no well-defined subspace")
    ker = kernel(psi_matrix(E))
    if len(ker) != E.r:
        raise NotInImageError(
            f"psi_E has a {len(ker)}-dimensional kernel, expected {E.r}")
    sub = Subspace(E.r, E.d, tuple(tuple(v) for v in ker))
    C = wronskian_combinants(sub)
    c0, e0 = C[0].coeffs, E[0].coeffs
    j = next((j for j, c in enumerate(c0) if c), None)
    if j is None:
        raise IdentityViolation("C_0 of an independent family vanished")
    k = e0[j] / c0[j]
    if C.scale(k) != E:
        # d = r leaves some slots outside the reach of psi_E
        raise NotInImageError("E is not proportional to the combinants of its solution space")
    return sub, k


class BasisExpression(NamedTuple):
    coefficients: tuple
    independent: bool


def express_in_basis(target: BinaryForm, candidates) -> BasisExpression:
    """Exact coefficients ``l_i`` with ``target = sum_i l_i candidates[i]``.

    For dependent candidates the trailing free coordinates are set to zero.
    Raises NotInSpanError when no solution exists.
    """
    candidates = list(candidates)
    if not candidates:
        raise ValueError("need at least one candidate")
    if any(c.order != target.order for c in candidates):
        raise ValueError("target and candidates must have equal orders")
    A = linalg.transpose([list(c.coeffs) for c in candidates])
    sol = linalg.solve(A, list(target.coeffs), len(candidates))
    if sol is None:
        raise NotInSpanError("target lies outside the span of the candidates")
    if linear_combination(sol, candidates) != target:
        raise IdentityViolation("basis expression does not reproduce the target")
    indep = linalg.rank(A, len(candidates)) == len(candidates)
    return BasisExpression(tuple(sol), indep)
