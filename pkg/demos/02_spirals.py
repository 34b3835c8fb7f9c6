"""Spirals of a rational cocharacter, the canonical spiral of a nilpotent, refinement."""

from spiralkit import (ChainType, GradedSpace, RationalCocharacter, Spiral, ad_surjectivity_check,
                       canonical_spiral, check_refinement, from_weights, refine_spiral, spiral_quiver,
                       standard_representative, verify_spiral_axioms)
from spiralkit.exact import rat_str


def show(s, lo=-3, hi=3):
    print("   N  p  u  l")
    for row in s.dims_table(lo, hi):
        print(f"  {row['N']:>2}  {row['dim_p']}  {row['dim_u']}  {row['dim_l']}")


# weights -1/2 on V_0 and +1/2 on V_1: the map V_0 -> V_1 has weight exactly 1
mu = from_weights(2, [["-1/2"], ["1/2"]])
s = Spiral(mu)
print("window B =", s.window)
show(s)
rep = verify_spiral_axioms(s)
print("axioms:", rep.summary())

# the same numbers come out of the canonical spiral of the single chain 0 -> 1
x = standard_representative(ChainType.parse(2, "0:2"))
c = canonical_spiral(x)
print("canonical weights:", [[rat_str(w) for w in ws] for ws in c.mu.weights])
print("same spiral:", c.same_spiral(s), " x in l_1:", c.l(1).contains(x))
print("ad(x): p_0 -> p_1 onto:", ad_surjectivity_check(x))

# a three-step chain on m = 3 and its quiver
y = standard_representative(ChainType.parse(3, "0:3"))
q = spiral_quiver(canonical_spiral(y).mu)
print("quiver chains:", [[(v[0], rat_str(v[1])) for v in ch] for ch in q.chains])

# refine the zero spiral on V_0 = Q^2 by the integer weights (1, 0): p_0 becomes a Borel
sp = GradedSpace(2, (2, 0))
base = Spiral(RationalCocharacter.zero(sp))
sec = RationalCocharacter(sp, [[1, 0], []])
fine = refine_spiral(base, sec)
print("refined weights:", [[rat_str(w) for w in ws] for ws in fine.mu.weights])
print("dim p_0 before/after:", base.p(0).dim, fine.p(0).dim)
print("refinement problems:", check_refinement(base, sec, fine))
