"""The finite list of graded nilpotent orbits and their local systems."""

from spiralkit import DimVector, component_group_order, enumerate_chain_types, enumerate_pairs
from spiralkit.census import dim_vectors

for dims in [(1, 1), (2, 1), (2, 2)]:
    dv = DimVector(2, dims)
    types = enumerate_chain_types(dv)
    print(f"m=2 dims={dims}: {len(types)} orbits, {len(enumerate_pairs(dv))} pairs")
    for t in types:
        print(f"   {t.wire():<14} d' = {component_group_order(t)}")

# totals grow quickly with n; a small table for m = 3
print("\n n  orbits(m=3, all dims)")
for n in range(1, 5):
    total = sum(len(enumerate_chain_types(dv)) for dv in dim_vectors(n, 3, n_min=n))
    print(f" {n}  {total}")
