"""Symplectic gradings: blocks (a', a''), witness gradings and self-dual chains."""

import random

from spiralkit import SymplecticDims, enumerate_blocks_sp, sp_spiral_chains, witness_grading
from spiralkit.exact import rat_str
from spiralkit.sampling import random_sp_cocharacter
from spiralkit.symplectic import block_demand, half_label

sd = SymplecticDims.from_half(4, [3, 2])
print("dims:", sd.to_json())
for b in enumerate_blocks_sp(sd):
    print(f"  (a', a'') = ({b.a_prime}, {b.a_dprime}) needs {block_demand(b, sd.m)}")

# counting each window point once admits more pairs
loose = set(enumerate_blocks_sp(sd, "window")) - set(enumerate_blocks_sp(sd))
print("only under the window count:", sorted((b.a_prime, b.a_dprime) for b in loose))

# the witness grading of the largest block and its self-dual chains
b = enumerate_blocks_sp(sd)[-1]
rep = sp_spiral_chains(witness_grading(b, sd))


def fmt(ch):
    return [(rat_str(half_label(v[0])), rat_str(v[1])) for v in ch]


print("block", (b.a_prime, b.a_dprime), "Q':", fmt(rep.q_prime or ()), "Q'':", fmt(rep.q_dprime or ()))

# random self-dual weights: at most two chains are fixed by the involution
rng = random.Random(5)
for _ in range(3):
    r = sp_spiral_chains(random_sp_cocharacter(sd.space(), rng))
    print(f"  {len(r.quiver.chains)} chains, {len(r.stable)} self-dual, {len(r.dual_pairs)} dual pairs")
