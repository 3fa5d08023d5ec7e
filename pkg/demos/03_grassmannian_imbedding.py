"""
The combinant map on the Grassmannian
=====================================

Sending a subspace to the projective class of its Wronskian combinants is
injective.  A family E of forms of the right orders lies in the image exactly
when psi_E has rank at most d - r + 1, and then the subspace (and the scale)
can be read back off.
"""

import random

from wronskian_combinants import (CombinantVector, image_membership, index_set,
                                  pluecker_point, recover_subspace, slot_order,
                                  wronskian_combinants)
from wronskian_combinants.sampling import random_form, random_subspace

rng = random.Random(3)
r, d = 3, 6

# Fifty distinct random subspaces give fifty distinct points.
subs = set()
while len(subs) < 50:
    subs.add(random_subspace(rng, r, d))
points = {pluecker_point(s).vector for s in subs}
print(f"{len(subs)} subspaces -> {len(points)} points")

# A genuine point: rank d - r + 1, and the subspace comes back.
sub = random_subspace(rng, r, d)
E = wronskian_combinants(sub).scale(-4)
m = image_membership(E)
print("in image:", m.in_image, "rank:", m.rank, "scale:", m.scale, "same subspace:", m.subspace == sub)
print("recovered scale:", recover_subspace(E)[1])

# A random family of the same shape is not in the image.
R = CombinantVector(r, d, {q: random_form(rng, slot_order(r, d, q)) for q in index_set(r, d)})
m = image_membership(R)
print("random family in image:", m.in_image, "rank:", m.rank, "-", m.reason)
