"""Symplectic quiver: gradings indexed by half-integers mod m, self-dual chains, blocks (a', a'').

Internally label ``k`` in ``0..m-1`` is the half-integer ``k + 1/2``; its dual
``-(k + 1/2)`` is label ``m - 1 - k``. Wire formats use ``"1/2"``, ``"3/2"``, ...
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .cocharacter import RationalCocharacter
from .exact import Rat, rat_str
from .graded import GradedSpace
from .spiral import ChainQuiver, spiral_quiver


def half_label(k: int) -> Rat:
    return Rat(2 * k + 1, 2)


def label_of(x: Rat, m: int) -> int:
    """Internal label k with ``k + 1/2 = x (mod m)``; x must be a half odd integer."""
    twice = 2 * Rat(x)
    if twice.denominator != 1 or twice.numerator % 2 == 0:
        raise ValueError(f"{x} is not a half odd integer")
    return ((twice.numerator - 1) // 2) % m


@dataclass(frozen=True)
class SymplecticDims:
    m: int
    dims: tuple[int, ...]  # dims[k] = dim V_{k+1/2}

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(int(d) for d in self.dims))
        if self.m < 2 or self.m % 2:
            raise ValueError("symplectic gradings need even m >= 2")
        if len(self.dims) != self.m:
            raise ValueError(f"expected {self.m} dimensions")
        if any(d < 0 for d in self.dims):
            raise ValueError("dimensions must be nonnegative")
        for k in range(self.m):
            if self.dims[k] != self.dims[self.m - 1 - k]:
                raise ValueError("dim V_j must equal dim V_-j")

    @classmethod
    def from_half(cls, m: int, first: list[int]) -> "SymplecticDims":
        """Dims for labels 1/2, ..., (m-1)/2; the rest follow by duality."""
        if len(first) != m // 2:
            raise ValueError(f"expected {m // 2} dimensions")
        return cls(m, tuple(first) + tuple(reversed(first)))

    @classmethod
    def parse(cls, m: int, text: str) -> "SymplecticDims":
        vals = [int(x) for x in text.split(",") if x.strip()]
        if len(vals) == m // 2:
            return cls.from_half(m, vals)
        return cls(m, tuple(vals))

    @property
    def n(self) -> int:
        return sum(self.dims)

    def space(self) -> GradedSpace:
        return GradedSpace(self.m, self.dims, "sp")

    def to_json(self) -> dict:
        return {rat_str(half_label(k)): d for k, d in enumerate(self.dims)}


@dataclass(frozen=True, order=True)
class SpBlock:
    a_prime: int
    a_dprime: int

    def to_json(self) -> list[int]:
        return [self.a_prime, self.a_dprime]


def _window(a: int) -> list[Rat]:
    return [Rat(2 * t + 1, 2) for t in range(-a, a)]


def block_demand(block: SpBlock, m: int) -> tuple[int, ...]:
    """Dimensions the witness grading needs at each label.

    On the first self-dual chain the weight-x line sits at label x with
    dimension a' + 1/2 - |x|; on the second it sits at label x - m/2 with
    dimension a'' + 1/2 - |x|.
    """
    out = [0] * m
    for x in _window(block.a_prime):
        out[label_of(x, m)] += int(block.a_prime + Rat(1, 2) - abs(x))
    for x in _window(block.a_dprime):
        out[label_of(x - Rat(m, 2), m)] += int(block.a_dprime + Rat(1, 2) - abs(x))
    return tuple(out)


def window_counts(block: SpBlock, m: int) -> tuple[int, ...]:
    """Number of window points per label, each counted once."""
    out = [0] * m
    for x in _window(block.a_prime):
        out[label_of(x, m)] += 1
    for x in _window(block.a_dprime):
        out[label_of(x - Rat(m, 2), m)] += 1
    return tuple(out)


def witness_grading(block: SpBlock, sd: SymplecticDims) -> RationalCocharacter:
    """A symplectic cocharacter realising the block: the two self-dual chains with their
    prescribed dimensions, all remaining lines on isolated, mutually far weights."""
    m = sd.m
    demand = block_demand(block, m)
    if any(dm > d for dm, d in zip(demand, sd.dims)):
        raise ValueError(f"block {block.to_json()} does not fit {sd.dims}")
    weights: list[list[Rat]] = [[] for _ in range(m)]
    for x in _window(block.a_prime):
        k = label_of(x, m)
        if k < m // 2:
            weights[k] += [x] * int(block.a_prime + Rat(1, 2) - abs(x))
    for x in _window(block.a_dprime):
        k = label_of(x - Rat(m, 2), m)
        if k < m // 2:
            weights[k] += [x] * int(block.a_dprime + Rat(1, 2) - abs(x))
    far = Rat(max(block.a_prime, block.a_dprime) + 3)
    for k in range(m // 2):
        while len(weights[k]) < sd.dims[k]:
            weights[k].append(far)
            far += 3
    for k in range(m // 2, m):
        weights[k] = [-x for x in weights[m - 1 - k]]
    return RationalCocharacter(sd.space(), weights)


def enumerate_blocks_sp(sd: SymplecticDims, count: str = "weighted") -> list[SpBlock]:
    """Blocks (a', a'') whose demand fits ``sd``, sorted.

    ``count="weighted"`` uses the witness allocation a + 1/2 - |x| per window
    point (so the chains have dimensions a'(a'+1) and a''(a''+1)).
    ``count="window"`` counts each window point once, a weaker condition.
    """
    if count == "weighted":
        demand = block_demand
    elif count == "window":
        demand = window_counts
    else:
        raise ValueError("count must be 'weighted' or 'window'")
    out = []
    size = (lambda a: a * (a + 1)) if count == "weighted" else (lambda a: 2 * a)
    a = 0
    while size(a) <= sd.n:
        b = 0
        while size(a) + size(b) <= sd.n:
            blk = SpBlock(a, b)
            if all(dm <= d for dm, d in zip(demand(blk, sd.m), sd.dims)):
                out.append(blk)
            b += 1
        a += 1
    return sorted(out)


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SpChainReport:
    quiver: ChainQuiver
    involution: dict
    j_prime: tuple
    j_dprime: tuple
    q_prime: tuple | None
    q_dprime: tuple | None
    stable: tuple
    dual_pairs: tuple

    @property
    def ok(self) -> bool:
        """At most two stable chains, and they are the ones through J' and J''."""
        named = [c for c in (self.q_prime, self.q_dprime) if c is not None]
        return len(self.stable) <= 2 and sorted(self.stable) == sorted(named)


def _involution(v, m):
    return (m - 1 - v[0], -v[1])


def in_j_prime(v, m) -> bool:
    x = v[1]
    twice = 2 * x
    return twice.denominator == 1 and twice.numerator % 2 == 1 and label_of(x, m) == v[0]


def in_j_dprime(v, m) -> bool:
    x = v[1]
    twice = 2 * x
    return (twice.denominator == 1 and twice.numerator % 2 == 1
            and label_of(x - Rat(m, 2), m) == v[0])


def sp_spiral_chains(mu: RationalCocharacter) -> SpChainReport:
    sp = mu.space
    if sp.form != "sp":
        raise ValueError("expected a cocharacter on a symplectic space")
    m = sp.m
    q = spiral_quiver(mu)
    inv = {v: _involution(v, m) for v in q.vertices}
    for v, w in inv.items():
        if q.vertices.get(w) != q.vertices[v]:
            raise ValueError("weights are not self-dual")
    chain_of = {}
    for ch in q.chains:
        for v in ch:
            chain_of[v] = ch
    stable, pairs, seen = [], [], set()
    for ch in q.chains:
        image = tuple(inv[v] for v in reversed(ch))
        if chain_of[image[0]] != image:
            raise AssertionError("involution does not map chains to chains")
        if image == ch:
            stable.append(ch)
        elif ch not in seen:
            pairs.append((ch, image))
            seen.update([ch, image])
    jp = tuple(v for v in q.vertices if in_j_prime(v, m))
    jpp = tuple(v for v in q.vertices if in_j_dprime(v, m))
    centre_p = (label_of(Rat(-1, 2), m), Rat(-1, 2))
    centre_pp = (label_of(Rat(-1, 2) - Rat(m, 2), m), Rat(-1, 2))
    qp = chain_of.get(centre_p) if centre_p in q.vertices and (
        (label_of(Rat(1, 2), m), Rat(1, 2)) in q.vertices) else None
    qpp = chain_of.get(centre_pp) if centre_pp in q.vertices and (
        (label_of(Rat(1, 2) - Rat(m, 2), m), Rat(1, 2)) in q.vertices) else None
    return SpChainReport(q, inv, jp, jpp, qp, qpp, tuple(stable), tuple(pairs))


def blocks_sp_json(sd: SymplecticDims, count: str = "weighted") -> str:
    return json.dumps({"m": sd.m, "dims": sd.to_json(),
                       "blocks": [b.to_json() for b in enumerate_blocks_sp(sd, count)]}, sort_keys=True)


def blocks_sp_tsv(sd: SymplecticDims, count: str = "weighted") -> str:
    lines = ["a_prime\ta_dprime"]
    lines += [f"{b.a_prime}\t{b.a_dprime}" for b in enumerate_blocks_sp(sd, count)]
    return "\n".join(lines) + "\n"
