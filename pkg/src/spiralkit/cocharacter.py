"""Rational cocharacters of G_0: a rational weight on each vector of a graded frame."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .exact import Matrix, Rat, identity, inverse, rat, rat_str
from .graded import GradedElement, GradedSpace


class DualityError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class RationalCocharacter:
    """Weights ``weights[i][a]`` on the a-th frame vector of ``V_i``.

    ``frame[i]`` is an invertible dims[i] x dims[i] matrix whose columns are the
    frame vectors in the standard basis; ``None`` means the standard basis.
    """

    space: GradedSpace
    weights: tuple
    frame: tuple | None = None

    def __post_init__(self):
        sp = self.space
        w = tuple(tuple(rat(x) for x in ws) for ws in self.weights)
        if len(w) != sp.m or any(len(ws) != d for ws, d in zip(w, sp.dims)):
            raise ValueError("weights must list one value per basis vector of each V_i")
        object.__setattr__(self, "weights", w)
        if self.frame is not None:
            fr = tuple(tuple(tuple(rat(x) for x in row) for row in f) for f in self.frame)
            if len(fr) != sp.m or any(len(f) != d or any(len(r) != d for r in f)
                                      for f, d in zip(fr, sp.dims)):
                raise ValueError("frame must hold a square matrix per label")
            object.__setattr__(self, "frame", fr)
            self._frame_inverse  # raises on singular frames
        if sp.form == "sp":
            if self.frame is not None:
                raise ValueError("symplectic cocharacters are taken in the standard frame")
            for k in range(sp.m):
                if w[sp.dual_label(k)] != tuple(-x for x in w[k]):
                    raise DualityError(f"weights at label {sp.dual_label(k)} must negate those at {k}")

    # constructors -----------------------------------------------------------
    @classmethod
    def zero(cls, space: GradedSpace) -> "RationalCocharacter":
        return cls(space, [[0] * d for d in space.dims])

    # frame access -----------------------------------------------------------
    def frame_matrix(self, i: int) -> Matrix:
        if self.frame is None:
            return identity(self.space.dims[i])
        return [list(r) for r in self.frame[i]]

    @cached_property
    def _frame_inverse(self) -> tuple:
        if self.frame is None:
            return None
        return tuple(inverse([list(r) for r in f]) if f else [] for f in self.frame)

    def frame_inverse(self, i: int) -> Matrix:
        if self.frame is None:
            return identity(self.space.dims[i])
        return self._frame_inverse[i]

    def hom_element(self, degree: int, j: int, a: int, b: int) -> GradedElement:
        """Map sending frame vector a of V_j to frame vector b of V_{j+degree}, killing the rest."""
        sp = self.space
        t = (j + degree) % sp.m
        if self.frame is None:
            return GradedElement.elementary(sp, degree, j, b, a)
        col = [row[b] for row in self.frame[t]]
        inv_row = self._frame_inverse[j][a]
        blocks = []
        for k in range(sp.m):
            rows, cols = sp.block_shape(degree, k)
            if k == j % sp.m:
                blocks.append([[col[r] * inv_row[c] for c in range(cols)] for r in range(rows)])
            else:
                blocks.append([[0] * cols for _ in range(rows)])
        return GradedElement(sp, degree, blocks)

    # weight bookkeeping ----------------------------------------------------------
    def all_weights(self) -> list[Rat]:
        return [x for ws in self.weights for x in ws]

    @property
    def total(self) -> Rat:
        return sum(self.all_weights(), Rat(0))

    @property
    def is_balanced(self) -> bool:
        """Zero total weight, the determinant-one condition for SL."""
        return self.total == 0

    @property
    def spread(self) -> Rat:
        ws = self.all_weights()
        return max(ws) - min(ws) if ws else Rat(0)

    @property
    def denominator(self) -> int:
        """Least r > 0 with r * weight integral for every weight."""
        return int(math.lcm(1, *(int(x.denominator) for x in self.all_weights())))

    def map_weights(self, fn) -> "RationalCocharacter":
        return RationalCocharacter(self.space, [[fn(x) for x in ws] for ws in self.weights],
                                   self.frame)

    def scaled(self, c) -> "RationalCocharacter":
        c = rat(c)
        return self.map_weights(lambda x: c * x)

    def negated(self) -> "RationalCocharacter":
        return self.scaled(-1)

    def recentered(self) -> "RationalCocharacter":
        n = self.space.n
        if n == 0 or self.space.form == "sp":
            return self
        shift = self.total / n
        return self.map_weights(lambda x: x - shift)

    def vertex_multiplicities(self) -> dict[tuple[int, Rat], int]:
        """``(label, x) -> dim of the weight-x part of V_label``."""
        out: dict[tuple[int, Rat], int] = {}
        for i, ws in enumerate(self.weights):
            for x in ws:
                out[(i, x)] = out.get((i, x), 0) + 1
        return out

    def weight_multisets(self) -> tuple[tuple[Rat, ...], ...]:
        return tuple(tuple(sorted(ws)) for ws in self.weights)

    def to_json(self) -> dict:
        out = {"m": self.space.m, "dims": list(self.space.dims),
               "weights": [[rat_str(x) for x in ws] for ws in self.weights]}
        if self.space.form == "sp":
            out["form"] = "sp"
        if self.frame is not None:
            out["frame"] = [[[rat_str(x) for x in row] for row in f] for f in self.frame]
        return out

    @classmethod
    def from_json(cls, data: dict) -> "RationalCocharacter":
        space = GradedSpace(int(data["m"]), tuple(data["dims"]), data.get("form", "sl"))
        return cls(space, data["weights"], data.get("frame"))

    def same_weights(self, other: "RationalCocharacter") -> bool:
        return self.space == other.space and self.weights == other.weights and self.frame == other.frame

    def __repr__(self):
        body = "; ".join(",".join(rat_str(x) for x in ws) for ws in self.weights)
        return f"RationalCocharacter(m={self.space.m}, weights=[{body}])"


def from_weights(m: int, weights: Sequence[Sequence], form: str = "sl") -> RationalCocharacter:
    """Cocharacter in the standard frame of the space with dims read off ``weights``."""
    space = GradedSpace(m, tuple(len(ws) for ws in weights), form)
    return RationalCocharacter(space, weights)
