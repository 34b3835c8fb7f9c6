"""Blocks for SL(V) on a cyclic quiver: triples (d, f, chi), the map psi and its section omega."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from itertools import combinations_with_replacement

from .census import DimVector, OrbitPair, component_group_order
from .cocharacter import RationalCocharacter
from .exact import Rat
from .graded import GradedElement, GradedSpace
from .nilpotent import ChainType


class ConstraintViolation(ValueError):
    pass


@dataclass(frozen=True)
class BlockTriple:
    """``d`` divides n, ``f`` is a sorted multiset of n/d labels, ``chi`` a primitive exponent mod d."""

    m: int
    d: int
    f: tuple[int, ...]
    chi: int

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("d must be positive")
        object.__setattr__(self, "f", tuple(sorted(int(x) % self.m for x in self.f)))
        chi = self.chi % self.d
        if math.gcd(chi, self.d) != 1:
            raise ValueError(f"character exponent {self.chi} is not primitive mod {self.d}")
        object.__setattr__(self, "chi", chi)

    @property
    def n(self) -> int:
        return self.d * len(self.f)

    def label_counts(self) -> tuple[int, ...]:
        """``#{(b, y) : 0 <= y < d, f(b) + y = i}`` for each label i."""
        out = [0] * self.m
        for h in self.f:
            for y in range(self.d):
                out[(h + y) % self.m] += 1
        return tuple(out)

    def satisfies(self, dv: DimVector) -> bool:
        return dv.m == self.m and self.label_counts() == dv.dims

    def sort_key(self):
        return (self.d, self.f, self.chi)

    def to_json(self) -> dict:
        return {"d": self.d, "f": list(self.f), "chi": self.chi}

    @classmethod
    def from_json(cls, m: int, data: dict) -> "BlockTriple":
        return cls(m, int(data["d"]), tuple(data["f"]), int(data["chi"]))


def primitive_exponents(d: int) -> list[int]:
    return [c for c in range(d) if math.gcd(c, d) == 1] if d > 1 else [0]


def enumerate_blocks_sl(dv: DimVector) -> list[BlockTriple]:
    n, m = dv.n, dv.m
    out = []
    for d in range(1, n + 1):
        if n % d:
            continue
        for f in combinations_with_replacement(range(m), n // d):
            probe = BlockTriple(m, d, f, 1 if d > 1 else 0)
            if probe.label_counts() != dv.dims:
                continue
            out.extend(BlockTriple(m, d, f, c) for c in primitive_exponents(d))
    return sorted(out, key=BlockTriple.sort_key)


def psi(p: OrbitPair, dv: DimVector) -> BlockTriple:
    """Factor the character through mu_d and cut every chain into length-d pieces."""
    t = p.orbit
    if t.dims != dv.dims or t.m != dv.m:
        raise ConstraintViolation(f"orbit {t} has dimension vector {t.dims}, not {dv.dims}")
    d1 = component_group_order(t)
    r = p.char_exponent % d1
    g = math.gcd(r, d1)  # gcd(0, d') = d', giving d = 1
    d = d1 // g
    chi = (r // g) % d if d > 1 else 0
    f = [(h + (j - 1) * d) % t.m for h, l in t.chains for j in range(1, l // d + 1)]
    out = BlockTriple(t.m, d, tuple(f), chi)
    if not out.satisfies(dv):  # pragma: no cover - counts transfer from the orbit
        raise ConstraintViolation("psi produced a block violating the label counts")
    return out


def omega(b: BlockTriple, dv: DimVector | None = None) -> OrbitPair:
    """Primitive pair: n/d chains of length d headed at f, with character chi."""
    if dv is not None and not b.satisfies(dv):
        raise ConstraintViolation(f"block {b.to_json()} does not fit dims {dv.dims}")
    t = ChainType(b.m, tuple((h, b.d) for h in b.f))
    return OrbitPair(t, b.chi)


def _layout(b: BlockTriple, dv: DimVector):
    """Place chain k of the block on rational weights starting at k*(d+1), recentred.

    Returns per label the list of weights, plus per chain the (label, slot) of each vertex.
    """
    if not b.satisfies(dv):
        raise ConstraintViolation(f"block {b.to_json()} does not fit dims {dv.dims}")
    weights: list[list[Rat]] = [[] for _ in range(b.m)]
    chains = []
    for k, h in enumerate(b.f):
        start = k * (b.d + 1)
        slots = []
        for u in range(b.d):
            lab = (h + u) % b.m
            slots.append((lab, len(weights[lab])))
            weights[lab].append(Rat(start + u))
        chains.append(slots)
    total = sum((x for ws in weights for x in ws), Rat(0))
    shift = total / dv.n
    weights = [[x - shift for x in ws] for ws in weights]
    return weights, chains


def admissible_grading_for_block(b: BlockTriple, dv: DimVector) -> RationalCocharacter:
    """Zero-sum cocharacter whose chain quiver is n/d chains of d lines, headed at f."""
    weights, _ = _layout(b, dv)
    return RationalCocharacter(GradedSpace(dv.m, dv.dims), weights)


def block_representative(b: BlockTriple, dv: DimVector) -> GradedElement:
    """Open-orbit element for the block: every arrow of every chain of the grading is 1."""
    _, chains = _layout(b, dv)
    space = GradedSpace(dv.m, dv.dims)
    blocks = [[[0] * space.dims[j] for _ in range(space.dims[(j + 1) % dv.m])] for j in range(dv.m)]
    for slots in chains:
        for (la, a), (lb, bb) in zip(slots, slots[1:]):
            blocks[la][bb][a] = 1
    return GradedElement(space, 1, blocks)


def blocks_json(dv: DimVector) -> str:
    return json.dumps({"m": dv.m, "dims": list(dv.dims),
                       "blocks": [b.to_json() for b in enumerate_blocks_sl(dv)]}, sort_keys=True)


def blocks_tsv(dv: DimVector) -> str:
    lines = ["d\tf\tchi"]
    lines += [f"{b.d}\t{','.join(map(str, b.f))}\t{b.chi}" for b in enumerate_blocks_sl(dv)]
    return "\n".join(lines) + "\n"
