"""Graded Jordan theory for degree-1 nilpotents on a cyclic quiver.

A nilpotent ``phi`` of degree one decomposes ``V`` into chains
``w_0 -> w_1 -> ... -> w_{l-1} -> 0`` with ``w_N`` in ``V_{head+N}``; the
multiset of (head, length) pairs is the chain type, which classifies the
G_0-orbit of ``phi``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .cocharacter import RationalCocharacter
from .exact import Matrix, Rat, RowSpace, inverse, mat_rank, matmul, nullspace, transpose
from .graded import GradedElement, GradedSpace, bracket, identity_element


class NotNilpotent(ValueError):
    pass


@dataclass(frozen=True)
class ChainType:
    """Multiset of chains ``(head, length)`` stored head ascending, then length descending."""

    m: int
    chains: tuple[tuple[int, int], ...]

    def __post_init__(self):
        chains = []
        for h, l in self.chains:
            if int(l) < 1:
                raise ValueError("chain lengths must be positive")
            chains.append((int(h) % self.m, int(l)))
        chains.sort(key=lambda c: (c[0], -c[1]))
        object.__setattr__(self, "chains", tuple(chains))

    @property
    def n(self) -> int:
        return sum(l for _, l in self.chains)

    @property
    def dims(self) -> tuple[int, ...]:
        out = [0] * self.m
        for h, l in self.chains:
            for k in range(l):
                out[(h + k) % self.m] += 1
        return tuple(out)

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(sorted((l for _, l in self.chains), reverse=True))

    def order_key(self):
        """Listing order: longest chains first, then by head."""
        return tuple(sorted((-l, h) for h, l in self.chains))

    def to_json(self) -> list[list[int]]:
        return [[h, l] for h, l in self.chains]

    def wire(self) -> str:
        return ",".join(f"{h}:{l}" for h, l in self.chains)

    @classmethod
    def parse(cls, m: int, text: str) -> "ChainType":
        chains = []
        for part in text.replace(" ", "").split(","):
            if not part:
                continue
            h, _, l = part.partition(":")
            if not l:
                raise ValueError(f"bad chain {part!r}, expected head:len")
            chains.append((int(h), int(l)))
        return cls(m, tuple(chains))

    @classmethod
    def from_json(cls, m: int, data: Iterable) -> "ChainType":
        return cls(m, tuple((int(h), int(l)) for h, l in data))

    def __str__(self):
        return "{" + ", ".join(f"({h},{l})" for h, l in self.chains) + "}"


@dataclass(frozen=True)
class Chain:
    head: int
    vectors: tuple  # vectors[N] are coordinates in V_{head+N}

    @property
    def length(self) -> int:
        return len(self.vectors)


@dataclass(frozen=True)
class AdaptedBasis:
    space: GradedSpace
    chains: tuple[Chain, ...]

    def chain_type(self) -> ChainType:
        return ChainType(self.space.m, tuple((c.head, c.length) for c in self.chains))

    @cached_property
    def columns(self) -> tuple:
        """Per label, the list of (chain index, position N, coordinates) in frame order."""
        cols = [[] for _ in range(self.space.m)]
        for ci, ch in enumerate(self.chains):
            for N, v in enumerate(ch.vectors):
                cols[(ch.head + N) % self.space.m].append((ci, N, v))
        return tuple(tuple(c) for c in cols)

    def frame(self) -> tuple:
        """Per label, the matrix whose columns are this basis' vectors."""
        return tuple(transpose([list(v) for _, _, v in col], d) if col else []
                     for col, d in zip(self.columns, self.space.dims))

    def is_basis(self) -> bool:
        return all(len(col) == d and mat_rank([list(v) for _, _, v in col]) == d
                   for col, d in zip(self.columns, self.space.dims))


def is_nilpotent(phi: GradedElement) -> bool:
    n = phi.space.n
    if n == 0:
        return True
    return phi.power(n).is_zero()


def _block(x: GradedElement, i: int) -> Matrix:
    return [list(r) for r in x.blocks[i % x.space.m]]


def chain_counts_by_rank(phi: GradedElement) -> dict[tuple[int, int], int]:
    """Number of chains with head ``i`` and length exactly ``l``, from ranks of powers.

    ``#{head i, len >= l} = rank(phi^{l-1}|V_i) - rank(phi^l|V_{i-1})``.
    """
    if not is_nilpotent(phi):
        raise NotNilpotent("rank formula needs a nilpotent element")
    sp = phi.space
    n = sp.n
    powers = [identity_element(sp)]
    for _ in range(n + 1):
        powers.append(powers[-1] @ phi)
    ranks = [[mat_rank(_block(powers[k], i)) for i in range(sp.m)] for k in range(n + 2)]
    at_least = {}
    for i in range(sp.m):
        for l in range(1, n + 2):
            at_least[(i, l)] = ranks[l - 1][i] - ranks[l][(i - 1) % sp.m]
    out = {}
    for i in range(sp.m):
        for l in range(1, n + 1):
            c = at_least[(i, l)] - at_least[(i, l + 1)]
            if c:
                out[(i, l)] = c
    return out


def chain_type_by_ranks(phi: GradedElement) -> ChainType:
    counts = chain_counts_by_rank(phi)
    chains = [(i, l) for (i, l), c in counts.items() for _ in range(c)]
    return ChainType(phi.space.m, tuple(chains))


def graded_jordan_basis(phi: GradedElement, rng: random.Random | None = None) -> AdaptedBasis:
    """Basis of chains for ``phi``.

    Heads of length-k chains at label i span a complement of
    ``ker phi^(k-1) + phi(ker phi^(k+1))`` inside ``ker phi^k`` (all taken at label i).
    With ``rng`` the complement is perturbed, chains are rescaled and shuffled,
    giving a different adapted basis of the same element.
    """
    if not is_nilpotent(phi):
        raise NotNilpotent("graded Jordan basis needs a nilpotent element")
    sp = phi.space
    n, m = sp.n, sp.m
    powers = [identity_element(sp)]
    for _ in range(n + 1):
        powers.append(powers[-1] @ phi)

    def kernel(k: int, i: int) -> list[list[Rat]]:
        d = sp.dims[i % m]
        if d == 0:
            return []
        blk = _block(powers[k], i)
        if not blk:  # target label is zero-dimensional
            return [[Rat(int(r == c)) for c in range(d)] for r in range(d)]
        return nullspace(blk, d)

    chains: list[Chain] = []
    for k in range(n, 0, -1):
        for i in range(m):
            d = sp.dims[i]
            if d == 0:
                continue
            inner = RowSpace(d, kernel(k - 1, i))
            for v in kernel(k + 1, i - 1):
                inner.add(phi.apply(v, i - 1))
            sub_basis = inner.basis()
            span = RowSpace(d, sub_basis)
            for v in kernel(k, i):
                if span.contains(v):
                    continue
                span.add(v)
                head = list(v)
                if rng is not None:
                    scale = Rat(rng.choice([1, 2, 3, -1, -2]), rng.choice([1, 2, 3]))
                    head = [scale * x for x in head]
                    for s in sub_basis:
                        c = rng.randint(-2, 2)
                        if c:
                            head = [x + c * y for x, y in zip(head, s)]
                vecs = [tuple(head)]
                for step in range(1, k):
                    vecs.append(tuple(phi.apply(vecs[-1], i + step - 1)))
                chains.append(Chain(i, tuple(vecs)))
    if rng is not None:
        rng.shuffle(chains)
    basis = AdaptedBasis(sp, tuple(chains))
    if not basis.is_basis():  # pragma: no cover - guarded by the theory
        raise RuntimeError("adapted basis construction failed")
    return basis


def chain_type_of(phi: GradedElement) -> ChainType:
    return graded_jordan_basis(phi).chain_type()


def standard_representative(t: ChainType, space: GradedSpace | None = None) -> GradedElement:
    """0/1 matrix of chain type ``t``: basis vectors of each V_i are handed out to
    chains in the stored order, and each chain maps ``w_N`` to ``w_{N+1}``."""
    if space is None:
        space = GradedSpace(t.m, t.dims)
    if space.dims != t.dims or space.m != t.m:
        raise ValueError(f"chain type {t} does not fit dims {space.dims}")
    used = [0] * t.m
    blocks = [[[0] * space.dims[j] for _ in range(space.dims[(j + 1) % t.m])] for j in range(t.m)]
    for h, l in t.chains:
        slots = []
        for k in range(l):
            lab = (h + k) % t.m
            slots.append((lab, used[lab]))
            used[lab] += 1
        for (a_lab, a), (b_lab, b) in zip(slots, slots[1:]):
            blocks[a_lab][b][a] = 1
    return GradedElement(space, 1, blocks)


@dataclass(frozen=True)
class Sl2Triple:
    e: GradedElement
    h: GradedElement
    f: GradedElement

    def relations_hold(self) -> bool:
        return (bracket(self.h, self.e) == self.e.scale(2)
                and bracket(self.h, self.f) == self.f.scale(-2)
                and bracket(self.e, self.f) == self.h)


def sl2_complete(x: GradedElement, basis: AdaptedBasis | None = None) -> Sl2Triple:
    """Graded sl2-triple ``(x, h, f)`` with h of degree 0 and f of degree -1.

    On a chain of length l: ``h w_N = (2N - l + 1) w_N`` and ``f w_N = N(l - N) w_{N-1}``.
    """
    if basis is None:
        basis = graded_jordan_basis(x)
    elif not is_nilpotent(x):
        raise NotNilpotent("sl2 completion needs a nilpotent element")
    sp = x.space
    m = sp.m
    cols = basis.columns
    frame = basis.frame()
    inv = [inverse(f) if f else [] for f in frame]
    pos = [{(ci, N): a for a, (ci, N, _) in enumerate(col)} for col in cols]
    lengths = [c.length for c in basis.chains]
    h_blocks, f_blocks = [], []
    for j in range(m):
        d = sp.dims[j]
        diag = [[Rat(0)] * d for _ in range(d)]
        for a, (ci, N, _) in enumerate(cols[j]):
            diag[a][a] = Rat(2 * N - lengths[ci] + 1)
        h_blocks.append(matmul(matmul(frame[j], diag), inv[j]) if d else [])
        t = (j - 1) % m
        dt = sp.dims[t]
        down = [[Rat(0)] * d for _ in range(dt)]
        for a, (ci, N, _) in enumerate(cols[j]):
            if N > 0:
                down[pos[t][(ci, N - 1)]][a] = Rat(N * (lengths[ci] - N))
        if d and dt:
            f_blocks.append(matmul(matmul(frame[t], down), inv[j]))
        else:
            f_blocks.append([[0] * d for _ in range(dt)])
    h = GradedElement(sp, 0, h_blocks)
    f = GradedElement(sp, -1, f_blocks)
    return Sl2Triple(x, h, f)


class NotIntegralGrading(ValueError):
    pass


def iota_cocharacter(t: Sl2Triple) -> RationalCocharacter:
    """Integer grading of V by the eigenvalues of h, as a cocharacter whose frame is an eigenbasis."""
    sp = t.h.space
    n = sp.n
    weights, frame = [], []
    for j in range(sp.m):
        d = sp.dims[j]
        blk = _block(t.h, j)
        ws, vecs = [], []
        for k in range(-(n - 1), n):
            shifted = [[x - (k if r == c else 0) for c, x in enumerate(row)] for r, row in enumerate(blk)]
            for v in nullspace(shifted, d) if d else []:
                ws.append(Rat(k))
                vecs.append(v)
        if len(vecs) != d:
            raise NotIntegralGrading(f"h is not diagonalizable with integer eigenvalues on V_{j}")
        weights.append(ws)
        frame.append(transpose(vecs, d) if d else [])
    return RationalCocharacter(sp, weights, frame)
