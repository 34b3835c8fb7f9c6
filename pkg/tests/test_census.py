import json

import pytest
from hypothesis import given, strategies as st

from spiralkit import (ChainType, DimVector, GradedSpace, OrbitPair, census_json, census_tsv,
                       chain_type_of, component_group_order, enumerate_chain_types, enumerate_pairs,
                       standard_representative)
from spiralkit.census import census_rows, dim_vectors

import oracles


def T(m, *chains):
    return ChainType(m, chains)


def test_census_examples():
    assert enumerate_chain_types(DimVector(2, (1, 0))) == [T(2, (0, 1))]
    assert enumerate_chain_types(DimVector(2, (1, 1))) == [T(2, (0, 2)), T(2, (1, 2)),
                                                           T(2, (0, 1), (1, 1))]
    assert enumerate_chain_types(DimVector(2, (2, 1))) == [
        T(2, (0, 3)), T(2, (0, 2), (0, 1)), T(2, (1, 2), (0, 1)), T(2, (0, 1), (0, 1), (1, 1))]


def test_component_groups():
    assert component_group_order(T(3, (0, 1), (1, 1))) == 1
    assert component_group_order(T(2, (0, 2))) == 2
    assert component_group_order(T(2, (0, 4), (1, 2))) == 2


@pytest.mark.parametrize("dims, count", [((1, 0), 1), ((1, 1), 5), ((2, 1), 6)])
def test_pair_counts(dims, count):
    pairs = enumerate_pairs(DimVector(2, dims))
    assert len(pairs) == count
    assert all(0 <= p.char_exponent < p.d_prime for p in pairs)


def test_pair_exponent_reduced():
    assert OrbitPair(T(2, (0, 2)), 5).char_exponent == 1


@given(st.integers(2, 3), st.lists(st.integers(0, 2), min_size=3, max_size=3))
def test_census_matches_multiset_search(m, raw):
    dims = tuple(raw[:m])
    if not any(dims):
        return
    dv = DimVector(m, dims)
    types = enumerate_chain_types(dv)
    assert len(types) == len(set(types))
    assert set(types) == oracles.chain_types(m, dims)
    assert types == sorted(types, key=ChainType.order_key)


@pytest.mark.parametrize("dv", list(dim_vectors(4, 3)), ids=str)
def test_round_trip_through_representative(dv):
    sp = GradedSpace(dv.m, dv.dims)
    for t in enumerate_chain_types(dv):
        assert t.dims == dv.dims
        assert chain_type_of(standard_representative(t, sp)) == t


def test_dim_vectors():
    got = list(dim_vectors(2, 2))
    assert [d.dims for d in got] == [(0, 1), (0, 2), (1, 0), (1, 1), (2, 0)]
    with pytest.raises(ValueError):
        DimVector(2, (0, 0))


def test_census_outputs():
    dv = DimVector(2, (1, 1))
    assert census_tsv(dv) == "chain\td_prime\tpairs\n0:2\t2\t2\n1:2\t2\t2\n0:1,1:1\t1\t1\n"
    doc = json.loads(census_json(dv))
    assert doc["orbits"] == census_rows(dv)
    assert (doc["total_orbits"], doc["total_pairs"]) == (3, 5)
    assert [ChainType.parse(2, r["chain"]) for r in doc["orbits"]] == enumerate_chain_types(dv)
