"""Seeded random inputs for property checks."""

from __future__ import annotations

import random

from .census import DimVector, enumerate_chain_types
from .cocharacter import RationalCocharacter
from .exact import Rat
from .graded import GradedElement, GradedSpace, invert
from .nilpotent import standard_representative


def random_rational(rng: random.Random, max_den: int = 3, bound: int = 2) -> Rat:
    den = rng.randint(1, max_den)
    return Rat(rng.randint(-bound * den, bound * den), den)


def random_g0(space: GradedSpace, rng: random.Random) -> GradedElement:
    """Block-diagonal rational matrix of determinant one (unit lower times unit upper per block)."""
    blocks = []
    for d in space.dims:
        lower = [[Rat(1) if r == c else (random_rational(rng) if r > c else Rat(0))
                  for c in range(d)] for r in range(d)]
        upper = [[Rat(1) if r == c else (random_rational(rng) if r < c else Rat(0))
                  for c in range(d)] for r in range(d)]
        blk = [[sum((lower[r][k] * upper[k][c] for k in range(d)), Rat(0)) for c in range(d)]
               for r in range(d)]
        blocks.append(blk)
    return GradedElement(space, 0, blocks)


def random_element(space: GradedSpace, degree: int, rng: random.Random) -> GradedElement:
    blocks = [[[random_rational(rng) for _ in range(c)] for _ in range(r)]
              for r, c in (space.block_shape(degree, j) for j in range(space.m))]
    x = GradedElement(space, degree, blocks)
    if degree % space.m == 0 and space.form == "sl" and space.n:
        # push the trace into the first diagonal entry
        j = next(i for i, d in enumerate(space.dims) if d)
        fix = GradedElement.elementary(space, 0, j, 0, 0, x.trace)
        x = x - fix
    return x


def random_nilpotent(space: GradedSpace, rng: random.Random):
    """A G_0-conjugate of a random chain-type representative; returns (element, type)."""
    types = enumerate_chain_types(DimVector(space.m, space.dims))
    t = rng.choice(types)
    x = standard_representative(t, space)
    g = random_g0(space, rng)
    return x.conjugate(g, invert(g)), t


def random_cocharacter(space: GradedSpace, rng: random.Random, max_den: int = 3,
                       bound: int = 1) -> RationalCocharacter:
    """Zero-sum cocharacter with small rational weights in the standard frame."""
    w = [[random_rational(rng, max_den, bound) for _ in range(d)] for d in space.dims]
    return RationalCocharacter(space, w).recentered()


def random_sp_cocharacter(space: GradedSpace, rng: random.Random, max_den: int = 2,
                          bound: int = 2) -> RationalCocharacter:
    """Self-dual cocharacter on a symplectic space.

    Weights favour half odd integers so that self-dual chains actually occur.
    """
    m = space.m
    w: list[list[Rat]] = [[] for _ in range(m)]
    for k in range(m // 2):
        for _ in range(space.dims[k]):
            if rng.random() < 0.6:
                w[k].append(Rat(2 * rng.randint(-bound, bound) + 1, 2))
            else:
                w[k].append(random_rational(rng, max_den, bound))
    for k in range(m // 2, m):
        w[k] = [-x for x in w[m - 1 - k]]
    return RationalCocharacter(space, w)


def random_dims(rng: random.Random, m: int, n_max: int) -> tuple[int, ...]:
    while True:
        dims = tuple(rng.randint(0, n_max) for _ in range(m))
        if 0 < sum(dims) <= n_max:
            return dims
