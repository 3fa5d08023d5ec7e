"""
Transvectants and Wronskians
============================

Binary forms are homogeneous polynomials in x1, x2.  This walk-through builds
a few, takes transvectants and Wronskians, and checks the identities that tie
them together.  All arithmetic is exact.
"""

from wronskian_combinants import (BinaryForm, Mat2, is_dependent, parse_form,
                                  sl2_substitute, transvectant, wronskian)

# Forms can be typed as expressions or as raw coefficient lists
# (coefficient j multiplies x1^(d-j) x2^j).
E = parse_form("x1^3 - 2*x1*x2^2 + 5*x2^3")
F = BinaryForm([1, 4, 0, -1])
print("E =", E)
print("F =", F)

# The k-th transvectant has order e + f - 2k.
for k in range(4):
    print(f"(E, F)_{k} =", transvectant(E, F, k))

# Odd transvectants of a form with itself vanish, even ones need not.
print("(F, F)_1 =", transvectant(F, F, 1))
print("(F, F)_2 =", transvectant(F, F, 2))

# The first transvectant of two forms of equal order is their Wronskian.
print("(E, F)_1 == W(E, F):", transvectant(E, F, 1) == wronskian([E, F]))

# Wronskians vanish exactly on dependent families.
G = E.scale(3) - F
print("W(E, F, G) =", wronskian([E, F, G]))
print("dependent:", is_dependent([E, F, G]))
print("W(E, F, G - 3E + F) =", wronskian([E, F, G - E.scale(3) + F]))

# Covariance: a unimodular substitution commutes with both constructions.
g = Mat2(2, 1, 3, 2)
assert g.unimodular
lhs = transvectant(sl2_substitute(E, g), sl2_substitute(F, g), 2)
print("covariant:", lhs == sl2_substitute(transvectant(E, F, 2), g))
