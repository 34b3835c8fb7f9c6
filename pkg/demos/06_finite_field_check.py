"""Cross-checking the orbit census by scanning every degree-1 map over F_2 and F_3."""

from spiralkit import DimVector, count_nilpotents_fq, enumerate_chain_types, realized_chain_types_fq

for dims in [(1, 1), (2, 1), (1, 1, 1)]:
    dv = DimVector(len(dims), dims)
    census = set(enumerate_chain_types(dv))
    for q in (2, 3):
        seen = realized_chain_types_fq(dv, q)
        print(f"dims={dims} q={q}: {count_nilpotents_fq(dv, q):>4} nilpotents, "
              f"{len(seen)} types, matches census: {seen == census}")
