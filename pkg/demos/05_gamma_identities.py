"""
Alternating sums of transvectants times Wronskians
==================================================

Gamma_p(B; A_1..A_r) = sum_i (-1)^(i+1) (B, A_i)_p W(A_1, .., A_i omitted, .., A_r)
vanishes for p <= r - 2, equals (-1)^(r-1) B W(A) for p = r - 1 and
(-1)^(r-1) r (B, W(A))_1 for p = r.  The last lines show that p = r + 1
is not zero in general.
"""

import random

from wronskian_combinants import gamma, verify_keyprop
from wronskian_combinants.sampling import random_form

rng = random.Random(1)
for r, d, n in [(2, 5, 5), (3, 6, 8), (4, 7, 7)]:
    B = random_form(rng, n)
    A = [random_form(rng, d) for _ in range(r)]
    print(f"r={r} d={d} n={n}:", verify_keyprop(B, A))
    print("   orders of Gamma_0..Gamma_r:", [gamma(B, A, p).order for p in range(r + 1)])
    print("   Gamma_{r+1} is zero:", gamma(B, A, r + 1).is_zero())
