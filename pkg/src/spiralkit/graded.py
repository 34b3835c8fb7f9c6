"""Graded vector spaces and homogeneous endomorphisms.

A :class:`GradedSpace` is ``V = V_0 + ... + V_{m-1}`` with an explicit basis;
``g_i`` is the space of endomorphisms sending each ``V_j`` into ``V_{j+i}``,
cut down to sl(V) (traceless) or, for symplectic spaces, to sp(V).

Symplectic spaces use the same integer labels ``0..m-1``; label ``k`` stands
for the half-integer ``k + 1/2`` and is dual to label ``m - 1 - k``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Sequence

from .exact import Matrix, Rat, RowSpace, inverse, is_zero, matmul, rat, trace, zeros


class SpaceMismatch(ValueError):
    pass


@dataclass(frozen=True)
class GradedSpace:
    m: int
    dims: tuple[int, ...]
    form: str = "sl"  # "sl" or "sp"

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(int(d) for d in self.dims))
        if self.m < 1:
            raise ValueError("m must be positive")
        if len(self.dims) != self.m:
            raise ValueError(f"expected {self.m} dimensions, got {len(self.dims)}")
        if any(d < 0 for d in self.dims):
            raise ValueError("dimensions must be nonnegative")
        if self.form not in ("sl", "sp"):
            raise ValueError(f"unknown form {self.form!r}")
        if self.form == "sp":
            if self.m % 2:
                raise ValueError("symplectic gradings need even m")
            if any(self.dims[k] != self.dims[self.dual_label(k)] for k in range(self.m)):
                raise ValueError("symplectic dims must satisfy dim V_j = dim V_-j")

    @property
    def n(self) -> int:
        return sum(self.dims)

    def label(self, i: int) -> int:
        return i % self.m

    def dual_label(self, k: int) -> int:
        return self.m - 1 - (k % self.m)

    @cached_property
    def offsets(self) -> tuple[int, ...]:
        out, acc = [], 0
        for d in self.dims:
            out.append(acc)
            acc += d
        return tuple(out)

    @cached_property
    def basis(self) -> tuple[tuple[int, int], ...]:
        """Global basis as (label, index) pairs grouped by label."""
        return tuple((i, a) for i, d in enumerate(self.dims) for a in range(d))

    def block_shape(self, degree: int, j: int) -> tuple[int, int]:
        return self.dims[(j + degree) % self.m], self.dims[j]

    def hom_dim(self, degree: int) -> int:
        """Dimension of the full Hom space in the given degree (before sl/sp cuts)."""
        return sum(self.dims[(j + degree) % self.m] * self.dims[j] for j in range(self.m))

    @cached_property
    def form_matrix(self) -> Matrix:
        """Gram matrix of the symplectic form (only for ``form == "sp"``)."""
        if self.form != "sp":
            raise ValueError("no symplectic form on an sl space")
        omega = zeros(self.n, self.n)
        for k in range(self.m):
            k2 = self.dual_label(k)
            sign = 1 if k < k2 else -1
            for a in range(self.dims[k]):
                omega[self.offsets[k] + a][self.offsets[k2] + a] = Rat(sign)
        return omega

    @cached_property
    def _form_inverse(self) -> Matrix:
        return inverse(self.form_matrix)


def _freeze(mat) -> tuple[tuple[Rat, ...], ...]:
    return tuple(tuple(rat(x) for x in row) for row in mat)


@dataclass(frozen=True, eq=False)
class GradedElement:
    """Homogeneous element of degree ``degree``; ``blocks[j]`` is Hom(V_j, V_{j+degree})."""

    space: GradedSpace
    degree: int
    blocks: tuple = field(repr=False)

    def __post_init__(self):
        sp = self.space
        object.__setattr__(self, "degree", self.degree % sp.m)
        blocks = tuple(_freeze(b) for b in self.blocks)
        if len(blocks) != sp.m:
            raise ValueError("need one block per label")
        for j, b in enumerate(blocks):
            rows, cols = sp.block_shape(self.degree, j)
            if len(b) != rows or any(len(r) != cols for r in b):
                raise ValueError(f"block {j} has wrong shape, expected {rows}x{cols}")
        object.__setattr__(self, "blocks", blocks)

    # construction -------------------------------------------------------
    @classmethod
    def _raw(cls, space: GradedSpace, degree: int, blocks) -> "GradedElement":
        """Unchecked constructor for arithmetic results (blocks already rational and shaped)."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "space", space)
        object.__setattr__(obj, "degree", degree % space.m)
        object.__setattr__(obj, "blocks", tuple(tuple(tuple(r) for r in b) for b in blocks))
        return obj

    @classmethod
    def zero(cls, space: GradedSpace, degree: int) -> "GradedElement":
        blocks = [zeros(*space.block_shape(degree, j)) for j in range(space.m)]
        return cls(space, degree, blocks)

    @classmethod
    def from_vector(cls, space: GradedSpace, degree: int, vec: Sequence) -> "GradedElement":
        blocks, pos = [], 0
        for j in range(space.m):
            rows, cols = space.block_shape(degree, j)
            blocks.append([list(vec[pos + r * cols: pos + (r + 1) * cols]) for r in range(rows)])
            pos += rows * cols
        if pos != len(vec):
            raise ValueError("vector length does not match the Hom space")
        return cls(space, degree, blocks)

    @classmethod
    def from_matrix(cls, space: GradedSpace, degree: int, mat: Matrix) -> "GradedElement":
        """Extract blocks from a full n x n matrix, which must be homogeneous."""
        off, deg = space.offsets, degree % space.m
        blocks = []
        for j in range(space.m):
            t = (j + deg) % space.m
            blocks.append([[mat[off[t] + r][off[j] + c] for c in range(space.dims[j])]
                           for r in range(space.dims[t])])
        x = cls(space, deg, blocks)
        if any(rat(a) != b for ra, rb in zip(mat, x.full_matrix()) for a, b in zip(ra, rb)):
            raise ValueError(f"matrix is not homogeneous of degree {deg}")
        return x

    @classmethod
    def elementary(cls, space: GradedSpace, degree: int, j: int, row: int, col: int,
                   value=1) -> "GradedElement":
        """The map sending basis vector ``col`` of V_j to ``value`` times vector ``row`` of V_{j+degree}."""
        blocks = [zeros(*space.block_shape(degree, k)) for k in range(space.m)]
        blocks[j % space.m][row][col] = rat(value)
        return cls._raw(space, degree, blocks)

    # views ----------------------------------------------------------------
    def vector(self) -> list[Rat]:
        return [x for b in self.blocks for row in b for x in row]

    def full_matrix(self) -> Matrix:
        sp = self.space
        out = zeros(sp.n, sp.n)
        off = sp.offsets
        for j, b in enumerate(self.blocks):
            t = (j + self.degree) % sp.m
            for r, row in enumerate(b):
                for c, x in enumerate(row):
                    out[off[t] + r][off[j] + c] = x
        return out

    def is_zero(self) -> bool:
        return all(is_zero(b) for b in self.blocks)

    @property
    def trace(self) -> Rat:
        if self.degree != 0:
            return Rat(0)
        return sum((trace(b) for b in self.blocks), Rat(0))

    @property
    def traceless(self) -> bool:
        return self.trace == 0

    # arithmetic -------------------------------------------------------------
    def _check(self, other: "GradedElement"):
        if self.space != other.space:
            raise SpaceMismatch("elements live on different graded spaces")

    def __add__(self, other: "GradedElement") -> "GradedElement":
        self._check(other)
        if self.degree != other.degree:
            raise ValueError("cannot add elements of different degrees")
        return GradedElement._raw(self.space, self.degree,
                                  [[[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]
                                   for a, b in zip(self.blocks, other.blocks)])

    def __neg__(self) -> "GradedElement":
        return self.scale(-1)

    def __sub__(self, other: "GradedElement") -> "GradedElement":
        return self + (-other)

    def scale(self, c) -> "GradedElement":
        c = rat(c)
        return GradedElement._raw(self.space, self.degree,
                                  [[[c * x for x in row] for row in b] for b in self.blocks])

    def __matmul__(self, other: "GradedElement") -> "GradedElement":
        """Composition ``self o other``."""
        self._check(other)
        sp = self.space
        out_deg = (self.degree + other.degree) % sp.m
        blocks = []
        for j in range(sp.m):
            mid = (j + other.degree) % sp.m
            rows, cols = sp.block_shape(out_deg, j)
            if rows and cols and sp.dims[mid]:
                blocks.append(matmul(list(self.blocks[mid]), list(other.blocks[j])))
            else:
                blocks.append(zeros(rows, cols))
        return GradedElement._raw(sp, out_deg, blocks)

    def apply(self, v: Sequence, j: int) -> list[Rat]:
        """Image of a vector of V_j (coordinates) in V_{j+degree}."""
        b = self.blocks[j % self.space.m]
        return [sum((x * y for x, y in zip(row, v)), Rat(0)) for row in b]

    def power(self, k: int) -> "GradedElement":
        if k < 0:
            raise ValueError("negative power")
        sp = self.space
        if k == 0:
            return identity_element(sp)
        out = self
        for _ in range(k - 1):
            out = out @ self
        return out

    def __eq__(self, other):
        if not isinstance(other, GradedElement):
            return NotImplemented
        return (self.space == other.space and self.degree == other.degree
                and self.blocks == other.blocks)

    def __hash__(self):
        return hash((self.space, self.degree, self.blocks))

    def conjugate(self, g: "GradedElement", g_inv: "GradedElement | None" = None) -> "GradedElement":
        """``g x g^-1`` for a degree-0 invertible ``g``."""
        if g.degree != 0:
            raise ValueError("conjugating element must have degree 0")
        if g_inv is None:
            g_inv = invert(g)
        return g @ self @ g_inv


def identity_element(space: GradedSpace) -> GradedElement:
    return GradedElement(space, 0, [[[Rat(int(r == c)) for c in range(d)] for r in range(d)]
                                    for d in space.dims])


def invert(g: GradedElement) -> GradedElement:
    if g.degree != 0:
        raise ValueError("only degree-0 elements can be invertible")
    return GradedElement(g.space, 0, [inverse([list(r) for r in b]) for b in g.blocks])


def bracket(a: GradedElement, b: GradedElement) -> GradedElement:
    """Commutator ``ab - ba``, homogeneous of degree ``deg a + deg b``."""
    if a.space != b.space:
        raise SpaceMismatch("bracket of elements on different graded spaces")
    return (a @ b) - (b @ a)


def trace_pair(a: GradedElement, b: GradedElement) -> Rat:
    """Invariant pairing ``tr(ab)``; zero unless the degrees sum to 0."""
    if a.space != b.space:
        raise SpaceMismatch("pairing of elements on different graded spaces")
    sp = a.space
    if (a.degree + b.degree) % sp.m:
        return Rat(0)
    total = Rat(0)
    for j in range(sp.m):
        # tr(a_{j+deg b} b_j) on V_j
        ba, bb = a.blocks[(j + b.degree) % sp.m], b.blocks[j]
        for r, row in enumerate(ba):
            for c, x in enumerate(row):
                if x:
                    y = bb[c][r]
                    if y:
                        total += x * y
    return total


def sp_adjoint(x: GradedElement) -> GradedElement:
    """The involution ``x -> -Omega^-1 x^T Omega`` whose fixed points form sp(V)."""
    sp = x.space
    om, om_inv = sp.form_matrix, sp._form_inverse
    xt = [list(col) for col in zip(*x.full_matrix())] if sp.n else []
    mat = matmul(matmul(om_inv, xt), om) if sp.n else []
    mat = [[-v for v in row] for row in mat]
    return GradedElement.from_matrix(sp, x.degree, mat)


def project_to_algebra(x: GradedElement) -> GradedElement:
    """``(x + sigma x)/2`` on symplectic spaces; the identity otherwise."""
    if x.space.form == "sp":
        return (x + sp_adjoint(x)).scale(Rat(1, 2))
    return x


def in_algebra(x: GradedElement) -> bool:
    if x.space.form == "sp":
        return sp_adjoint(x) == x
    return x.traceless


def hom_basis(space: GradedSpace, degree: int) -> list[GradedElement]:
    """Elementary matrix basis of the full Hom space in ``degree``."""
    out = []
    for j in range(space.m):
        rows, cols = space.block_shape(degree, j)
        for r in range(rows):
            for c in range(cols):
                out.append(GradedElement.elementary(space, degree, j, r, c))
    return out


def restrict_to_algebra(space: GradedSpace, degree: int,
                        elements: Sequence[GradedElement]) -> list[GradedElement]:
    """Basis of ``span(elements) ∩ g_degree`` for spans that are stable under
    the relevant structure (diagonal-compatible for sl, sigma-stable for sp).

    For sl in degree 0 the trace functional is cut out exactly; for sp the
    sigma-stable span is mapped onto its fixed part by the projection.
    """
    if space.form == "sp":
        projected = [project_to_algebra(x) for x in elements]
        return independent(projected)
    if degree % space.m != 0:
        return independent(list(elements))
    traceful = [x for x in elements if x.trace != 0]
    clean = [x for x in elements if x.trace == 0]
    if traceful:
        first = traceful[0]
        t0 = first.trace
        for x in traceful[1:]:
            clean.append(x - first.scale(x.trace / t0))
    return independent(clean)


def algebra_basis(space: GradedSpace, degree: int) -> list[GradedElement]:
    """Basis of g_degree (sl or sp)."""
    return list(_algebra_basis(space, degree % space.m))


@lru_cache(maxsize=512)
def _algebra_basis(space: GradedSpace, degree: int) -> tuple[GradedElement, ...]:
    return tuple(restrict_to_algebra(space, degree, hom_basis(space, degree)))


def independent(elements: Sequence[GradedElement]) -> list[GradedElement]:
    """Greedy linearly independent subfamily, in order."""
    if not elements:
        return []
    rs = RowSpace(len(elements[0].vector()))
    return [x for x in elements if rs.add(x.vector())]
