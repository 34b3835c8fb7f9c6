"""Finite census of G_0-orbits on the nilpotent part of g_1, and their local systems."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import lru_cache

from .nilpotent import ChainType


@dataclass(frozen=True)
class DimVector:
    m: int
    dims: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(int(d) for d in self.dims))
        if len(self.dims) != self.m:
            raise ValueError(f"expected {self.m} dimensions, got {len(self.dims)}")
        if any(d < 0 for d in self.dims) or not any(self.dims):
            raise ValueError("dimensions must be nonnegative with at least one positive entry")

    @property
    def n(self) -> int:
        return sum(self.dims)

    @classmethod
    def parse(cls, m: int, text: str) -> "DimVector":
        return cls(m, tuple(int(x) for x in text.split(",") if x.strip()))


@dataclass(frozen=True)
class OrbitPair:
    """An orbit with the character ``z -> z^r`` of its component group mu_{d'}."""

    orbit: ChainType
    char_exponent: int

    def __post_init__(self):
        d1 = component_group_order(self.orbit)
        object.__setattr__(self, "char_exponent", self.char_exponent % d1)

    @property
    def d_prime(self) -> int:
        return component_group_order(self.orbit)

    def to_json(self) -> dict:
        return {"chain": self.orbit.wire(), "char": self.char_exponent}


def component_group_order(t: ChainType) -> int:
    """gcd of the chain lengths (1 for the empty type)."""
    return math.gcd(*(l for _, l in t.chains)) if t.chains else 1


def _candidates(m: int, n: int) -> list[tuple[int, int, tuple[int, ...]]]:
    """Every (head, length) chain with total length <= n, with its label counts."""
    out = []
    for h in range(m):
        for l in range(1, n + 1):
            counts = [0] * m
            for k in range(l):
                counts[(h + k) % m] += 1
            out.append((h, l, tuple(counts)))
    return out


@lru_cache(maxsize=None)
def _enumerate(m: int, dims: tuple[int, ...]) -> tuple[ChainType, ...]:
    cands = _candidates(m, sum(dims))
    found = []

    def descend(start: int, remaining: list[int], picked: list[tuple[int, int]]):
        if not any(remaining):
            found.append(ChainType(m, tuple(picked)))
            return
        for idx in range(start, len(cands)):
            h, l, counts = cands[idx]
            if all(c <= r for c, r in zip(counts, remaining)):
                for i in range(m):
                    remaining[i] -= counts[i]
                picked.append((h, l))
                descend(idx, remaining, picked)  # idx again: chains may repeat
                picked.pop()
                for i in range(m):
                    remaining[i] += counts[i]

    descend(0, list(dims), [])
    return tuple(sorted(found, key=ChainType.order_key))


def enumerate_chain_types(dv: DimVector) -> list[ChainType]:
    """All chain types with dimension vector ``dv``, longest chains first."""
    return list(_enumerate(dv.m, dv.dims))


def enumerate_pairs(dv: DimVector) -> list[OrbitPair]:
    return [OrbitPair(t, r) for t in enumerate_chain_types(dv)
            for r in range(component_group_order(t))]


def census_rows(dv: DimVector) -> list[dict]:
    rows = []
    for t in enumerate_chain_types(dv):
        d1 = component_group_order(t)
        rows.append({"chain": t.wire(), "d_prime": d1, "pairs": d1})
    return rows


def census_tsv(dv: DimVector) -> str:
    lines = ["chain\td_prime\tpairs"]
    lines += [f"{r['chain']}\t{r['d_prime']}\t{r['pairs']}" for r in census_rows(dv)]
    return "\n".join(lines) + "\n"


def census_json(dv: DimVector) -> str:
    doc = {"m": dv.m, "dims": list(dv.dims), "orbits": census_rows(dv),
           "total_orbits": len(enumerate_chain_types(dv)),
           "total_pairs": len(enumerate_pairs(dv))}
    return json.dumps(doc, sort_keys=True)


def dim_vectors(n_max: int, m: int, n_min: int = 1):
    """All dimension vectors of length m with total between n_min and n_max."""
    def rec(prefix, left):
        if len(prefix) == m:
            if sum(prefix) >= n_min:
                yield DimVector(m, tuple(prefix))
            return
        for d in range(left + 1):
            yield from rec(prefix + [d], left - d)
    yield from rec([], n_max)
