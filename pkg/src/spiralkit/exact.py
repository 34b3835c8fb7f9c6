"""Exact linear algebra over Q (and small prime fields).

Matrices are plain lists of rows. Entries over Q are ``gmpy2.mpq`` (aliased ``Rat``);
entries over F_p are ints in ``range(p)``. All routines copy their input.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from gmpy2 import mpq

Rat = mpq
Matrix = list  # list[list[Rat]]


def rat(x) -> Rat:
    """Coerce ints, Fractions and strings like ``"-3/2"`` to a reduced Rat."""
    if isinstance(x, Rat):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted as exact rationals")
    return Rat(x)


def rat_str(x: Rat) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def zeros(rows: int, cols: int) -> Matrix:
    return [[Rat(0)] * cols for _ in range(rows)]


def identity(n: int) -> Matrix:
    out = zeros(n, n)
    for i in range(n):
        out[i][i] = Rat(1)
    return out


def to_matrix(rows: Iterable[Iterable]) -> Matrix:
    return [[rat(x) for x in row] for row in rows]


def matmul(a: Matrix, b: Matrix, inner: int | None = None) -> Matrix:
    """Product ``a @ b``; ``inner`` gives the shared dimension when a has no rows."""
    n_rows = len(a)
    n_inner = len(b) if inner is None else inner
    n_cols = len(b[0]) if b else 0
    out = [[Rat(0)] * n_cols for _ in range(n_rows)]
    for i in range(n_rows):
        row = a[i]
        acc = out[i]
        for k in range(n_inner):
            aik = row[k]
            if aik:
                bk = b[k]
                for j in range(n_cols):
                    bkj = bk[j]
                    if bkj:
                        acc[j] += aik * bkj
    return out


def mat_add(a: Matrix, b: Matrix, scale=1) -> Matrix:
    """Return ``a + scale * b``."""
    return [[x + scale * y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a: Matrix, c) -> Matrix:
    return [[c * x for x in row] for row in a]


def transpose(a: Matrix, n_cols: int | None = None) -> Matrix:
    if not a:
        return [[] for _ in range(n_cols or 0)]
    return [list(col) for col in zip(*a)]


def is_zero(a: Matrix) -> bool:
    return all(not x for row in a for x in row)


def trace(a: Matrix) -> Rat:
    return sum((a[i][i] for i in range(len(a))), Rat(0))


def rref(rows: Sequence[Sequence], p: int | None = None) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns.

    Over Q when ``p`` is None, else over F_p (entries reduced mod p).
    Zero rows are dropped from the result.
    """
    if p is None:
        m = [[rat(x) for x in r] for r in rows]

        def inv(x):
            return 1 / x

        def red(x):
            return x
    else:
        m = [[int(x) % p for x in r] for r in rows]

        def inv(x):
            return pow(x, -1, p)

        def red(x):
            return x % p

    if not m:
        return [], []
    n_cols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        f = inv(m[r][c])
        m[r] = [red(x * f) for x in m[r]]
        pr = m[r]
        for i in range(len(m)):
            if i != r and m[i][c]:
                g = m[i][c]
                m[i] = [red(x - g * y) for x, y in zip(m[i], pr)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def mat_rank(a: Sequence[Sequence], p: int | None = None) -> int:
    """Rank over Q (or F_p). Empty matrices have rank 0."""
    if not a or not len(a[0]):
        return 0
    return len(rref(a, p)[1])


def nullspace(a: Sequence[Sequence], n_cols: int | None = None) -> Matrix:
    """Basis (as rows) of ``{v : a v = 0}`` over Q."""
    if n_cols is None:
        n_cols = len(a[0]) if a else 0
    if not a:
        return identity(n_cols)
    red, pivots = rref(a)
    free = [c for c in range(n_cols) if c not in set(pivots)]
    basis = []
    for fc in free:
        v = [Rat(0)] * n_cols
        v[fc] = Rat(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[fc]
        basis.append(v)
    return basis


def inverse(a: Matrix) -> Matrix:
    """Inverse of a square matrix over Q; raises ValueError if singular."""
    n = len(a)
    if n == 0:
        return []
    aug = [list(map(rat, row)) + e for row, e in zip(a, identity(n))]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(red) < n:
        raise ValueError("matrix is singular")
    return [row[n:] for row in red]


def independent_rows(rows: Sequence[Sequence]) -> list[int]:
    """Indices of a greedy maximal independent subset, scanning in order."""
    chosen: list[int] = []
    echelon = RowSpace(len(rows[0]) if rows else 0)
    for i, r in enumerate(rows):
        if echelon.add(r):
            chosen.append(i)
    return chosen


class RowSpace:
    """Incrementally maintained echelon basis for membership tests over Q."""

    def __init__(self, n_cols: int, rows: Iterable[Sequence] = ()):
        self.n_cols = n_cols
        self._rows: list[tuple[int, list[Rat]]] = []  # (pivot, row normalised at pivot)
        for r in rows:
            self.add(r)

    @property
    def dim(self) -> int:
        return len(self._rows)

    def reduce(self, v: Sequence) -> list[Rat]:
        w = [rat(x) for x in v]
        for pc, row in self._rows:
            c = w[pc]
            if c:
                for j in range(pc, self.n_cols):
                    if row[j]:
                        w[j] -= c * row[j]
        return w

    def contains(self, v: Sequence) -> bool:
        return not any(self.reduce(v))

    def add(self, v: Sequence) -> bool:
        """Add ``v``; return False (and change nothing) if it is already in the span."""
        w = self.reduce(v)
        pc = next((j for j, x in enumerate(w) if x), None)
        if pc is None:
            return False
        f = 1 / w[pc]
        w = [x * f for x in w]
        for k, (qc, row) in enumerate(self._rows):
            c = row[pc]
            if c:
                self._rows[k] = (qc, [x - c * y for x, y in zip(row, w)])
        self._rows.append((pc, w))
        return True

    def contains_space(self, other: "RowSpace | Iterable[Sequence]") -> bool:
        rows = other.basis() if isinstance(other, RowSpace) else other
        return all(self.contains(r) for r in rows)

    def basis(self) -> list[list[Rat]]:
        return [list(r) for _, r in self._rows]
