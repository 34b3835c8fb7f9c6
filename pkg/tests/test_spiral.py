import random

import pytest
from hypothesis import given, settings, strategies as st

from spiralkit import (ChainType, GradedElement, GradedSpace, NonIntegralWeights, RationalCocharacter,
                       Spiral, SubspaceBasis, ad_surjectivity_check, bracket, canonical_spiral,
                       check_refinement, from_weights, refine_spiral, spiral_p, spiral_quiver,
                       spiral_split, spiral_u, standard_representative, verify_spiral_axioms)
from spiralkit.exact import Rat
from spiralkit.graded import algebra_basis
from spiralkit.sampling import random_cocharacter, random_nilpotent
from spiralkit.spiral import alternate_canonical_spiral

S11 = GradedSpace(2, (1, 1))
HALF = from_weights(2, [["-1/2"], ["1/2"]])


def dims(s, N):
    return spiral_p(s, N).dim, spiral_u(s, N).dim, spiral_split(s, N).dim


def test_zero_cocharacter():
    s = Spiral(RationalCocharacter.zero(S11))
    assert spiral_p(s, 1).dim == 0
    assert spiral_p(s, -1).dim == 2
    assert spiral_split(s, 0).dim == len(algebra_basis(S11, 0))
    assert all(spiral_split(s, N).dim == 0 for N in (-3, -1, 1, 2))
    assert spiral_u(s, 1).dim == 0
    assert verify_spiral_axioms(s).ok


def test_half_weight_fixture():
    s = Spiral(HALF)
    assert dims(s, 1) == (1, 0, 1)
    assert dims(s, 0) == (1, 0, 1)
    assert dims(s, -1) == (2, 1, 1)
    assert spiral_split(s, 1).contains(GradedElement.elementary(S11, 1, 0, 0, 0))
    assert spiral_split(s, -1).contains(GradedElement.elementary(S11, 1, 1, 0, 0))
    assert s.window == 4


def test_canonical_spiral_examples():
    s = canonical_spiral(GradedElement.zero(S11, 1))
    assert all(w == 0 for w in s.mu.all_weights())
    assert all(s.p(N).dim == len(algebra_basis(S11, N)) for N in range(-4, 1))
    assert all(s.p(N).dim == 0 for N in range(1, 5))

    x = standard_representative(ChainType(2, ((0, 2),)), S11)
    s = canonical_spiral(x)
    assert s.mu.weight_multisets() == HALF.weight_multisets()
    assert s.same_spiral(Spiral(HALF))
    assert verify_spiral_axioms(s).ok

    sp3 = GradedSpace(3, (1, 1, 1))
    s = canonical_spiral(standard_representative(ChainType(3, ((0, 3),)), sp3))
    assert s.mu.weights == ((-1,), (0,), (1,))
    assert s.p(1).dim == 2 and s.p(0).dim == 2


def test_corrupted_p_fails_annihilator():
    s = Spiral(HALF)
    dropped = SubspaceBasis(S11, -1, s.p(-1).elements[1:])

    def p(N):
        return dropped if N == -1 else s.p(N)

    rep = verify_spiral_axioms(s, p=p)
    assert not rep.ok
    assert not rep.summary()["annihilator"]
    assert verify_spiral_axioms(s).ok


@pytest.mark.parametrize("chain, m, dims_", [("0:2", 2, (1, 1)), ("0:3", 2, (2, 1)), ("", 2, (1, 1))])
def test_ad_surjectivity_examples(chain, m, dims_):
    sp = GradedSpace(m, dims_)
    t = ChainType.parse(m, chain) if chain else ChainType(m, tuple((i, 1) for i, d in enumerate(dims_)
                                                                 for _ in range(d)))
    assert ad_surjectivity_check(standard_representative(t, sp))


def test_quiver_examples():
    q = spiral_quiver(RationalCocharacter.zero(S11))
    assert set(q.vertices) == {(0, 0), (1, 0)} and not q.edges and len(q.chains) == 2
    q = spiral_quiver(HALF)
    assert q.chains == (((0, Rat(-1, 2)), (1, Rat(1, 2))),)
    q = spiral_quiver(from_weights(2, [[-1, 1], [0]]))
    assert q.chains == (((0, -1), (1, 0), (0, 1)),)
    assert q.is_union_of_paths() and q.levi_factors() == [3]


def test_refine_examples():
    sp = GradedSpace(2, (2, 0))
    s = Spiral(RationalCocharacter.zero(sp))
    sec = RationalCocharacter(sp, [[1, 0], []])
    r = refine_spiral(s, sec)
    p0 = r.p(0)
    assert p0.dim == 2
    upper = GradedElement(sp, 0, [[[0, 1], [0, 0]], []])
    lower = GradedElement(sp, 0, [[[0, 0], [1, 0]], []])
    assert p0.contains(upper) and not p0.contains(lower)
    assert check_refinement(s, sec, r) == []

    s = canonical_spiral(standard_representative(ChainType(2, ((0, 2),)), S11))
    r = refine_spiral(s, RationalCocharacter.zero(S11))
    assert r.dims_table() == s.dims_table()
    with pytest.raises(NonIntegralWeights):
        refine_spiral(s, from_weights(2, [["1/2"], ["-1/2"]]))


@given(st.integers(0, 10 ** 6))
@settings(max_examples=15)
def test_refinement_random(seed):
    rng = random.Random(seed)
    sp = GradedSpace(2, (2, 1))
    s = Spiral(random_cocharacter(sp, rng), rng.choice((1, -1)))
    sec = RationalCocharacter(sp, [[rng.randint(-1, 1) for _ in range(d)] for d in sp.dims])
    r = refine_spiral(s, sec)
    assert check_refinement(s, sec, r) == []
    assert verify_spiral_axioms(r).ok


def random_spiral(seed):
    rng = random.Random(seed)
    m = rng.randint(2, 3)
    dims_ = tuple(rng.randint(0, 2) for _ in range(m))
    if not any(dims_):
        dims_ = (1,) * m
    return Spiral(random_cocharacter(GradedSpace(m, dims_), rng), rng.choice((1, -1)))


@given(st.integers(0, 10 ** 6))
@settings(max_examples=20)
def test_splitting_is_a_direct_complement(seed):
    s = random_spiral(seed)
    for N in range(-s.window, s.window + 1):
        p, u, l = s.p(N), s.u(N), s.l(N)
        assert p.dim == u.dim + l.dim
        assert u.meets_trivially(l)
        assert p.contains_space(u) and p.contains_space(l)


@given(st.integers(0, 10 ** 6))
@settings(max_examples=10)
def test_splitting_closed_under_bracket(seed):
    s = random_spiral(seed)
    B = s.window
    for N in range(-B, B + 1):
        for N2 in range(-B, B + 1):
            target = s.l(N + N2)
            assert all(target.contains(bracket(x, y))
                       for x in s.l(N).elements for y in s.l(N2).elements)


@given(st.integers(0, 10 ** 6))
@settings(max_examples=20)
def test_splitting_of_opposite_spiral(seed):
    s = random_spiral(seed)
    t = Spiral(s.mu.negated(), -s.epsilon)
    assert all(s.l(N).same_as(t.l(N)) for N in range(-s.window, s.window + 1))


@given(st.integers(0, 10 ** 6))
@settings(max_examples=15)
def test_canonical_spiral_contains_x(seed):
    rng = random.Random(seed)
    m = rng.randint(2, 4)
    dims_ = tuple(rng.randint(0, 2) for _ in range(m))
    if not any(dims_):
        dims_ = (2,) + (0,) * (m - 1)
    x, _ = random_nilpotent(GradedSpace(m, dims_), rng)
    s = canonical_spiral(x)
    assert s.l(1).contains(x)
    assert ad_surjectivity_check(x)
    assert s.same_spiral(alternate_canonical_spiral(x, seed))


@given(st.integers(0, 10 ** 6))
@settings(max_examples=15)
def test_quiver_consistency(seed):
    s = random_spiral(seed)
    q = spiral_quiver(s.mu)
    assert q.is_union_of_paths()
    per_label = [0] * s.m
    for (i, _), k in q.vertices.items():
        per_label[i] += k
    assert tuple(per_label) == s.space.dims


def test_random_axioms_small():
    rng = random.Random(7)
    for _ in range(5):
        s = Spiral(random_cocharacter(GradedSpace(3, (1, 2, 1)), rng), rng.choice((1, -1)))
        assert verify_spiral_axioms(s).ok


def test_degree_check_for_canonical_spiral():
    with pytest.raises(ValueError):
        canonical_spiral(GradedElement.zero(S11, 0))
