"""
Wronskian combinants and the subspace they determine
====================================================

For r independent d-ics A_1..A_r the combinants C_q are defined by

    W(A_1, ..., A_r, F) = sum_q (C_q, F)_{r-q}     for every d-ic F.

The operator psi_C(F) = sum_q (C_q, F)_{r-q} then has the span of the A_i as
its polynomial solution space.
"""

from fractions import Fraction

from wronskian_combinants import (canonicalize, kernel, parse_form, psi_apply,
                                  psi_matrix, transvectant, wronskian,
                                  wronskian_combinants)

A = [parse_form("x1^4 - x2^4"), parse_form("x1^3*x2 + 2*x1*x2^3"), parse_form("x1^2*x2^2 - x2^4")]
C = wronskian_combinants(A)
print(C)
print("orders:", C.orders())

# Check the defining identity on an arbitrary quartic.
F = parse_form("3*x1^4 - x1^3*x2 + 7*x2^4")
print("W(A, F) == psi_C(F):", wronskian(A + [F]) == psi_apply(C, F))

# Solve psi_C(F) = 0: the solution space is the span of the A_i.
M = psi_matrix(C)
print(f"psi_C is a {M.rows} x {M.cols} matrix of rank {M.rank()}")
print("kernel rows:")
for row in kernel(M):
    print("   ", [str(x) for x in row])
print("canonical subspace:")
for row in canonicalize(A).canonical:
    print("   ", [str(x) for x in row])

# For two forms there are closed expressions in transvectants.
A1, A2 = parse_form("x1^5 + x2^5"), parse_form("x1^4*x2 - 3*x1*x2^4")
d = 5
C = wronskian_combinants([A1, A2])
print("C_0 == (A1, A2)_1:", C[0] == transvectant(A1, A2, 1))
print("C_2 == (2-d)/(4d-6) (A1, A2)_3:",
      C[2] == transvectant(A1, A2, 3).scale(Fraction(2 - d, 4 * d - 6)))
