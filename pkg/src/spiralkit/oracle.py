"""Brute-force census over a prime field.

Every degree-1 element of g over F_q is scanned; nilpotent ones are typed by
the rank formula computed over F_q. Chain-type representatives are 0/1
matrices, so the realised types must agree with the exact census over Q.
"""

from __future__ import annotations

from itertools import product

from .census import DimVector
from .exact import mat_rank
from .nilpotent import ChainType

SIZE_GUARD = 10 ** 7
PRIMES = (2, 3, 5)


class OracleTooLarge(ValueError):
    pass


def _check(dv: DimVector, q: int) -> int:
    if q not in PRIMES:
        raise ValueError(f"q must be one of {PRIMES}")
    slots = sum(dv.dims[j] * dv.dims[(j + 1) % dv.m] for j in range(dv.m))
    if q ** slots > SIZE_GUARD:
        raise OracleTooLarge(f"{q}^{slots} points exceeds the size guard")
    return slots


def _matmul_mod(a, b, q):
    if not a or not b:
        cols = len(b[0]) if b else 0
        return [[0] * cols for _ in range(len(a))]
    return [[sum(x * y for x, y in zip(row, col)) % q for col in zip(*b)] for row in a]


def _elements(dv: DimVector, q: int):
    shapes = [(dv.dims[(j + 1) % dv.m], dv.dims[j]) for j in range(dv.m)]
    total = sum(r * c for r, c in shapes)
    for flat in product(range(q), repeat=total):
        blocks, pos = [], 0
        for r, c in shapes:
            blocks.append([list(flat[pos + i * c: pos + (i + 1) * c]) for i in range(r)])
            pos += r * c
        yield blocks


def _powers(blocks, dv: DimVector, q: int, upto: int):
    """``pw[k][i]`` is the block of phi^k from V_i to V_{i+k}."""
    m = dv.m
    ident = [[[int(r == c) for c in range(d)] for r in range(d)] for d in dv.dims]
    pw = [ident]
    for k in range(1, upto + 1):
        prev = pw[-1]
        # phi^k|V_i = phi|V_{i+k-1} o phi^{k-1}|V_i
        pw.append([_matmul_mod(blocks[(i + k - 1) % m], prev[i], q)
                   if dv.dims[(i + k) % m] else [] for i in range(m)])
    return pw


def _rank(mat, q) -> int:
    return mat_rank(mat, p=q) if mat and mat[0] else 0


def _type_of(blocks, dv: DimVector, q: int) -> ChainType | None:
    n, m = dv.n, dv.m
    pw = _powers(blocks, dv, q, n + 1)
    if any(any(any(row) for row in b) for b in pw[n]):
        return None
    ranks = [[_rank(pw[k][i], q) if dv.dims[i] else 0 for i in range(m)] for k in range(n + 2)]
    chains = []
    for i in range(m):
        for l in range(1, n + 1):
            ge_l = ranks[l - 1][i] - ranks[l][(i - 1) % m]
            ge_next = ranks[l][i] - ranks[l + 1][(i - 1) % m]
            chains += [(i, l)] * (ge_l - ge_next)
    return ChainType(m, tuple(chains))


def realized_chain_types_fq(dv: DimVector, q: int) -> set[ChainType]:
    _check(dv, q)
    found = set()
    for blocks in _elements(dv, q):
        t = _type_of(blocks, dv, q)
        if t is not None:
            found.add(t)
    return found


def count_nilpotents_fq(dv: DimVector, q: int) -> int:
    _check(dv, q)
    return sum(1 for blocks in _elements(dv, q) if _type_of(blocks, dv, q) is not None)
