"""
Expressing a combinant through the Wronskian combinants
=======================================================

For two binary quintics write t_i = (A1, A2)_i.  The product C_0 t_5 lies in
the three dimensional space spanned by C_2^2, (C_0, C_0)_4 and (C_0, C_2)_2,
and the coefficients come out of a linear solve.
"""

import random

from wronskian_combinants import express_in_basis, multiply, transvectant, wronskian_combinants
from wronskian_combinants.sampling import random_independent_forms

rng = random.Random(0)
for trial in range(5):
    A1, A2 = random_independent_forms(rng, 2, 5)
    C = wronskian_combinants([A1, A2])
    C0, C2 = C[0], C[2]
    res = express_in_basis(multiply(C0, transvectant(A1, A2, 5)),
                           [multiply(C2, C2), transvectant(C0, C0, 4), transvectant(C0, C2, 2)])
    print(trial, [str(c) for c in res.coefficients], "independent basis:", res.independent)
