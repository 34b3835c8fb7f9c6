"""SL blocks (d, f, chi), the map psi on orbit pairs and the section omega."""

from collections import Counter

from spiralkit import (DimVector, Spiral, admissible_grading_for_block, enumerate_blocks_sl,
                       enumerate_pairs, omega, psi, spiral_quiver, verify_spiral_axioms)
from spiralkit.exact import rat_str

dv = DimVector(2, (2, 2))
blocks = enumerate_blocks_sl(dv)
print(f"blocks for m=2 dims={dv.dims}:")
for b in blocks:
    print("  ", b.to_json())

# every pair lands in some block; count the fibres
fibres = Counter(psi(p, dv) for p in enumerate_pairs(dv))
for b in blocks:
    print(f"  {b.to_json()} <- {fibres[b]} pairs; omega gives {omega(b).to_json()}")
print("psi(omega(b)) == b everywhere:", all(psi(omega(b), dv) == b for b in blocks))

# a grading that realises the block (2, [0, 0], 1) as the splitting of a spiral
b = blocks[1]
mu = admissible_grading_for_block(b, dv)
print("grading for", b.to_json(), [[rat_str(w) for w in ws] for ws in mu.weights])
q = spiral_quiver(mu)
print("chains:", [[(v[0], rat_str(v[1])) for v in ch] for ch in q.chains])
print("axioms hold:", verify_spiral_axioms(Spiral(mu)).ok)
