import json

import pytest
from hypothesis import given, strategies as st

from spiralkit import (BlockTriple, ChainType, ConstraintViolation, DimVector, OrbitPair, Spiral,
                       admissible_grading_for_block, block_representative, blocks_json, chain_type_of,
                       enumerate_blocks_sl, enumerate_pairs, omega, psi, spiral_quiver,
                       verify_spiral_axioms)
from spiralkit.census import dim_vectors
from spiralkit.exact import Rat

import oracles


def B(m, d, f, chi):
    return BlockTriple(m, d, tuple(f), chi)


def test_block_examples():
    assert enumerate_blocks_sl(DimVector(2, (1, 0))) == [B(2, 1, [0], 0)]
    assert enumerate_blocks_sl(DimVector(2, (1, 1))) == [B(2, 1, [0, 1], 0), B(2, 2, [0], 1),
                                                         B(2, 2, [1], 1)]
    assert enumerate_blocks_sl(DimVector(2, (2, 1))) == [B(2, 1, [0, 0, 1], 0), B(2, 3, [0], 1),
                                                         B(2, 3, [0], 2)]


def test_triple_validation():
    with pytest.raises(ValueError):
        B(2, 4, [0], 2)  # 2 is not primitive mod 4
    assert B(3, 2, [2, 0], 3).to_json() == {"d": 2, "f": [0, 2], "chi": 1}


def test_psi_examples():
    dv11, dv22 = DimVector(2, (1, 1)), DimVector(2, (2, 2))
    assert psi(OrbitPair(ChainType(2, ((0, 2),)), 1), dv11) == B(2, 2, [0], 1)
    assert psi(OrbitPair(ChainType(2, ((0, 4),)), 2), dv22) == B(2, 2, [0, 0], 1)
    for p in enumerate_pairs(DimVector(3, (2, 1, 1))):
        if p.char_exponent == 0:
            assert psi(p, DimVector(3, (2, 1, 1))) == B(3, 1, [0, 0, 1, 2], 0)


def test_omega_examples():
    assert omega(B(2, 1, [0, 1], 0)) == OrbitPair(ChainType(2, ((0, 1), (1, 1))), 0)
    assert omega(B(2, 2, [0], 1)) == OrbitPair(ChainType(2, ((0, 2),)), 1)
    assert omega(B(2, 3, [0], 2)) == OrbitPair(ChainType(2, ((0, 3),)), 2)
    with pytest.raises(ConstraintViolation):
        omega(B(2, 2, [0], 1), DimVector(2, (2, 1)))


def test_admissible_grading_examples():
    dv = DimVector(2, (1, 1))
    mu = admissible_grading_for_block(B(2, 2, [0], 1), dv)
    assert mu.weights == ((Rat(-1, 2),), (Rat(1, 2),))
    mu = admissible_grading_for_block(B(2, 1, [0, 1], 0), dv)
    q = spiral_quiver(mu)
    assert len(q.chains) == 2 and not q.edges
    assert mu.total == 0
    mu = admissible_grading_for_block(B(2, 3, [0], 1), DimVector(2, (2, 1)))
    assert spiral_quiver(mu).chains == (((0, -1), (1, 0), (0, 1)),)


@pytest.mark.parametrize("dv", list(dim_vectors(4, 3)), ids=str)
def test_blocks_against_search_and_psi(dv):
    blocks = enumerate_blocks_sl(dv)
    assert set(blocks) == oracles.sl_blocks(dv.m, dv.dims)
    assert all(b.satisfies(dv) for b in blocks)
    image = [psi(p, dv) for p in enumerate_pairs(dv)]
    assert set(image) == set(blocks)
    for b in blocks:
        assert psi(omega(b, dv), dv) == b
        assert omega(b).orbit.dims == dv.dims


@given(st.integers(2, 4), st.lists(st.integers(0, 2), min_size=4, max_size=4), st.data())
def test_psi_character_factorisation(m, raw, data):
    dims = tuple(raw[:m])
    if not any(dims):
        return
    dv = DimVector(m, dims)
    p = data.draw(st.sampled_from(enumerate_pairs(dv)))
    b = psi(p, dv)
    assert p.d_prime % b.d == 0
    # the character r of mu_{d'} factors as chi after z -> z^(d'/d)
    assert (b.chi * (p.d_prime // b.d) - p.char_exponent) % p.d_prime == 0


@pytest.mark.parametrize("dv", [DimVector(2, (2, 2)), DimVector(3, (1, 1, 1)), DimVector(2, (2, 1))],
                         ids=str)
def test_splitting_realisation(dv):
    for b in enumerate_blocks_sl(dv):
        mu = admissible_grading_for_block(b, dv)
        s = Spiral(mu)
        assert verify_spiral_axioms(s).ok
        q = spiral_quiver(mu)
        assert len(q.chains) == dv.n // b.d and all(len(c) == b.d for c in q.chains)
        assert tuple(q.heads()) == b.f and set(q.vertices.values()) == {1}
        x = block_representative(b, dv)
        assert s.l(1).contains(x) and chain_type_of(x) == omega(b).orbit


def test_blocks_json():
    doc = json.loads(blocks_json(DimVector(2, (2, 1))))
    assert [BlockTriple.from_json(2, b) for b in doc["blocks"]] == enumerate_blocks_sl(DimVector(2, (2, 1)))
