import pytest

from spiralkit import (ChainType, DimVector, OracleTooLarge, count_nilpotents_fq,
                       enumerate_chain_types, realized_chain_types_fq)
from spiralkit.census import dim_vectors


def test_examples():
    assert realized_chain_types_fq(DimVector(2, (1, 0)), 2) == {ChainType(2, ((0, 1),))}
    want = {ChainType(2, ((0, 2),)), ChainType(2, ((1, 2),)), ChainType(2, ((0, 1), (1, 1)))}
    assert realized_chain_types_fq(DimVector(2, (1, 1)), 2) == want
    assert realized_chain_types_fq(DimVector(2, (1, 1)), 3) == want
    assert count_nilpotents_fq(DimVector(2, (1, 0)), 2) == 1
    assert count_nilpotents_fq(DimVector(2, (1, 1)), 2) == 3
    assert count_nilpotents_fq(DimVector(2, (1, 1)), 3) == 5


def count_by_products(q):
    """Oracle for dims (1,1): pairs (a, b) over F_q with ab = 0."""
    return sum(1 for a in range(q) for b in range(q) if a * b % q == 0)


@pytest.mark.parametrize("q", [2, 3, 5])
def test_count_formula(q):
    assert count_nilpotents_fq(DimVector(2, (1, 1)), q) == count_by_products(q) == 2 * q - 1


def test_guards():
    with pytest.raises(OracleTooLarge):
        realized_chain_types_fq(DimVector(2, (3, 3)), 5)
    with pytest.raises(ValueError):
        count_nilpotents_fq(DimVector(2, (1, 1)), 4)


@pytest.mark.parametrize("dv", list(dim_vectors(2, 3)), ids=str)
def test_realised_types_match_census(dv):
    assert realized_chain_types_fq(dv, 2) == set(enumerate_chain_types(dv))


def test_count_is_deterministic():
    dv = DimVector(3, (1, 1, 1))
    assert count_nilpotents_fq(dv, 3) == count_nilpotents_fq(dv, 3)
