import random

import pytest
from hypothesis import given, strategies as st

from spiralkit import (ChainType, DimVector, GradedElement, GradedSpace, NotIntegralGrading,
                       NotNilpotent, Sl2Triple, chain_type_by_ranks, chain_type_of,
                       enumerate_chain_types, graded_jordan_basis, iota_cocharacter, is_nilpotent,
                       sl2_complete, standard_representative)
from spiralkit.exact import mat_rank
from spiralkit.sampling import random_g0, random_nilpotent
from spiralkit.graded import invert

S11 = GradedSpace(2, (1, 1))


def element(space, *blocks):
    return GradedElement(space, 1, list(blocks))


def test_is_nilpotent_examples():
    assert is_nilpotent(GradedElement.zero(S11, 1))
    assert not is_nilpotent(element(S11, [[1]], [[1]]))
    assert is_nilpotent(element(S11, [[1]], [[0]]))


def test_chain_type_examples():
    sp = GradedSpace(3, (2, 0, 1))
    assert chain_type_of(GradedElement.zero(sp, 1)) == ChainType(3, ((0, 1), (0, 1), (2, 1)))
    assert chain_type_of(element(S11, [[1]], [[0]])) == ChainType(2, ((0, 2),))
    t = ChainType(2, ((0, 4),))
    x = standard_representative(t, GradedSpace(2, (2, 2)))
    assert chain_type_of(x) == t


def test_non_nilpotent_rejected():
    x = element(S11, [[1]], [[1]])
    for fn in (chain_type_of, graded_jordan_basis, sl2_complete):
        with pytest.raises(NotNilpotent):
            fn(x)


def test_chain_type_wire_format():
    t = ChainType.parse(3, "1:1, 0:2,0:3")
    assert t.wire() == "0:3,0:2,1:1"
    assert t.dims == (2, 3, 1)
    assert ChainType.from_json(3, t.to_json()) == t
    with pytest.raises(ValueError):
        ChainType.parse(2, "0")


def test_adapted_basis_two_chain_direct_sum():
    t = ChainType(2, ((0, 2), (1, 1)))
    x = standard_representative(t)
    basis = graded_jordan_basis(x)
    assert basis.is_basis() and basis.chain_type() == t
    for ch in basis.chains:
        for N, w in enumerate(ch.vectors):
            label = (ch.head + N) % 2
            image = x.apply(w, label)
            if N + 1 < len(ch.vectors):
                assert image == list(ch.vectors[N + 1])
            else:
                assert not any(image)


def test_sl2_examples():
    trip = sl2_complete(element(S11, [[1]], [[0]]))
    assert trip.relations_hold()
    assert trip.h.blocks == (((-1,),), ((1,),))
    assert trip.f.blocks[1] == ((1,),)
    assert iota_cocharacter(trip).weights == ((-1,), (1,))

    sp = GradedSpace(3, (1, 1, 1))
    trip = sl2_complete(standard_representative(ChainType(3, ((0, 3),)), sp))
    assert trip.relations_hold()
    assert [b[0][0] for b in trip.h.blocks] == [-2, 0, 2]
    # f: V_1 -> V_0 and V_2 -> V_1 carry N(l - N) = 2
    assert trip.f.blocks[1] == ((2,),) and trip.f.blocks[2] == ((2,),)
    assert iota_cocharacter(trip).weights == ((-2,), (0,), (2,))


def test_sl2_of_zero():
    trip = sl2_complete(GradedElement.zero(S11, 1))
    assert trip.h.is_zero() and trip.f.is_zero()
    assert iota_cocharacter(trip).weights == ((0,), (0,))


def test_iota_rejects_bad_h():
    e = GradedElement.zero(S11, 1)
    bad = Sl2Triple(e, GradedElement(S11, 0, [[[1]], [["1/2"]]]), GradedElement.zero(S11, 1))
    with pytest.raises(NotIntegralGrading):
        iota_cocharacter(bad)


def rank_oracle(x):
    """Chain counts straight from the rank formula on full matrices."""
    sp, m = x.space, x.space.m
    full = x.full_matrix()
    powers = [None, full]
    for _ in range(sp.n + 1):
        prev = powers[-1]
        powers.append([[sum(a * b for a, b in zip(row, col)) for col in zip(*full)] for row in prev])

    def rank_from(k, i):
        if sp.dims[i % m] == 0:
            return 0
        if k == 0:
            return sp.dims[i % m]
        lo = sp.offsets[i % m]
        cols = [[row[lo + c] for c in range(sp.dims[i % m])] for row in powers[k]]
        return mat_rank(cols)

    out = {}
    for i in range(m):
        for l in range(1, sp.n + 1):
            at_least = rank_from(l - 1, i) - rank_from(l, i - 1)
            exact = at_least - (rank_from(l, i) - rank_from(l + 1, i - 1))
            if exact:
                out[(i, l)] = exact
    return out


@given(st.integers(0, 10 ** 6), st.integers(2, 4))
def test_jordan_basis_agrees_with_rank_formula(seed, m):
    rng = random.Random(seed)
    dims = tuple(rng.randint(0, 2) for _ in range(m))
    if not any(dims):
        dims = (1,) + dims[1:]
    x, t = random_nilpotent(GradedSpace(m, dims), rng)
    found = chain_type_of(x)
    assert found == t == chain_type_by_ranks(x)
    counts = {}
    for c in found.chains:
        counts[c] = counts.get(c, 0) + 1
    assert counts == rank_oracle(x)
    assert found.dims == dims


@given(st.integers(0, 10 ** 6))
def test_chain_type_g0_invariant(seed):
    rng = random.Random(seed)
    sp = GradedSpace(3, (2, 1, 2))
    t = rng.choice(enumerate_chain_types(DimVector(3, sp.dims)))
    x = standard_representative(t, sp)
    g = random_g0(sp, rng)
    assert chain_type_of(x.conjugate(g, invert(g))) == t


@given(st.integers(0, 10 ** 6), st.integers(2, 4))
def test_sl2_relations_random(seed, m):
    rng = random.Random(seed)
    dims = tuple(rng.randint(0, 2) for _ in range(m))
    if not any(dims):
        dims = (0,) * (m - 1) + (2,)
    x, _ = random_nilpotent(GradedSpace(m, dims), rng)
    trip = sl2_complete(x)
    assert trip.relations_hold()
    assert trip.h.degree == 0 and trip.f.degree == (-x.degree) % m
    iota = iota_cocharacter(trip)
    assert iota.all_weights() and all(w.denominator == 1 for w in iota.all_weights())
    # eigenvalues on each chain of length l are -(l-1), ..., l-1
    expect = sorted(2 * N - l + 1 for _, l in chain_type_of(x).chains for N in range(l))
    assert sorted(iota.all_weights()) == expect
