"""Graded nilpotents on a cyclic quiver: chain types, adapted bases, sl2 triples."""

import random

from spiralkit import (ChainType, GradedSpace, chain_type_by_ranks, chain_type_of, graded_jordan_basis,
                       iota_cocharacter, sl2_complete, standard_representative)
from spiralkit.graded import invert
from spiralkit.sampling import random_g0

# V = V_0 + V_1 + V_2 with dims 2, 2, 1; x has degree 1 (maps V_i into V_{i+1})
space = GradedSpace(3, (2, 2, 1))
t = ChainType.parse(3, "0:4,1:1")
x = standard_representative(t, space)
print("representative of", t.wire())
for j, blk in enumerate(x.blocks):
    print(f"  V_{j} -> V_{(j + 1) % 3}:", [list(map(int, r)) for r in blk])

# hide the structure by conjugating with a random element of G_0
rng = random.Random(0)
g = random_g0(space, rng)
y = x.conjugate(g, invert(g))
print("conjugated block V_0 -> V_1:", [[str(v) for v in r] for r in y.blocks[0]])

# the chain type comes back, once from a basis and once from ranks
print("chain type of conjugate:", chain_type_of(y).wire())
print("by the rank formula:    ", chain_type_by_ranks(y).wire())

basis = graded_jordan_basis(y)
for ch in basis.chains:
    print(f"  chain with head {ch.head}, length {ch.length}")

# h acts on a chain of length l by 2N - l + 1, f by N(l - N)
trip = sl2_complete(y)
print("sl2 relations hold:", trip.relations_hold())
iota = iota_cocharacter(trip)
print("h-weights per label:", [[int(w) for w in ws] for ws in iota.weights])
