"""Spirals cut out of g by a rational cocharacter.

For a cocharacter with weights x on a graded frame, the map taking a frame
vector of weight x in ``V_j`` to one of weight x' in ``V_{j+N}`` has weight
``x' - x``. Then

* ``p_N`` is spanned by the degree-N maps of weight ``>= N*eps``,
* ``u_N`` by those of weight ``> N*eps``,
* the splitting ``l_N`` by those of weight exactly ``N*eps``,

each intersected with sl(V) (or sp(V)).
"""

from __future__ import annotations

import math
import random
import threading
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .cocharacter import RationalCocharacter
from .exact import Rat, RowSpace, nullspace, rat_str
from .graded import (GradedElement, GradedSpace, algebra_basis, bracket, restrict_to_algebra,
                     trace_pair)
from .nilpotent import (AdaptedBasis, NotNilpotent, graded_jordan_basis, iota_cocharacter, is_nilpotent,
                        sl2_complete)


@dataclass(frozen=True, eq=False)
class SubspaceBasis:
    """A subspace of ``g_degree`` given by linearly independent members."""

    space: GradedSpace
    degree: int
    elements: tuple

    def __post_init__(self):
        object.__setattr__(self, "degree", self.degree % self.space.m)
        object.__setattr__(self, "elements", tuple(self.elements))
        self._rows  # raises on dependent members

    @property
    def _rows(self) -> RowSpace:
        rs = self.__dict__.get("_rowspace")
        if rs is None:
            rs = RowSpace(self.space.hom_dim(self.degree))
            for x in self.elements:
                if x.degree != self.degree:
                    raise ValueError("member of the wrong degree")
                if not rs.add(x.vector()):
                    raise ValueError("subspace members are linearly dependent")
            object.__setattr__(self, "_rowspace", rs)
        return rs

    @property
    def dim(self) -> int:
        return len(self.elements)

    def __len__(self):
        return self.dim

    def contains(self, x: GradedElement) -> bool:
        if x.degree != self.degree:
            return x.is_zero()
        return self._rows.contains(x.vector())

    def contains_space(self, other: "SubspaceBasis") -> bool:
        return all(self.contains(x) for x in other.elements)

    def same_as(self, other: "SubspaceBasis") -> bool:
        return self.dim == other.dim and self.contains_space(other)

    def meets_trivially(self, other: "SubspaceBasis") -> bool:
        rs = RowSpace(self.space.hom_dim(self.degree), [x.vector() for x in self.elements])
        return all(rs.add(x.vector()) for x in other.elements)

    @classmethod
    def spanned_by(cls, space: GradedSpace, degree: int, elements: Sequence[GradedElement]) -> "SubspaceBasis":
        rs = RowSpace(space.hom_dim(degree))
        return cls(space, degree, [x for x in elements if rs.add(x.vector())])


def _window(mu: RationalCocharacter) -> int:
    return mu.space.m * (1 + int(math.ceil(mu.spread)))


@dataclass(frozen=True, eq=False)
class Spiral:
    """The eps-spiral of ``mu``; subspaces are materialised on demand and cached."""

    mu: RationalCocharacter
    epsilon: int = 1
    _cache: dict = field(default_factory=dict, repr=False, compare=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False, compare=False)

    def __post_init__(self):
        if self.epsilon not in (1, -1):
            raise ValueError("epsilon must be +1 or -1")

    @property
    def space(self) -> GradedSpace:
        return self.mu.space

    @property
    def window(self) -> int:
        """B with p_N = g for N*eps <= -B and p_N = 0 for N*eps >= B."""
        return _window(self.mu)

    @property
    def m(self) -> int:
        return self.space.m

    def _member_keys(self, N: int, keep: Callable[[Rat, Rat], bool]) -> tuple:
        sp, mu = self.space, self.mu
        thr = N * self.epsilon
        out = []
        for j in range(sp.m):
            t = (j + N) % sp.m
            for a, x in enumerate(mu.weights[j]):
                for b, y in enumerate(mu.weights[t]):
                    if keep(y - x, thr):
                        out.append((j, a, b))
        return tuple(out)

    def _get(self, kind: str, N: int) -> SubspaceBasis:
        key = (kind, N)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        rule = {"p": lambda k, t: k >= t, "u": lambda k, t: k > t, "l": lambda k, t: k == t}[kind]
        keys = self._member_keys(N, rule)
        # subspaces spanned by the same frame maps coincide; share one object
        shared = ("span", N % self.m, keys)
        sub = self._cache.get(shared)
        if sub is None:
            members = [self.mu.hom_element(N, j, a, b) for j, a, b in keys]
            sub = SubspaceBasis(self.space, N, restrict_to_algebra(self.space, N, members))
        with self._lock:
            self._cache.setdefault(shared, sub)
            self._cache.setdefault(key, self._cache[shared])
        return self._cache[key]

    def p(self, N: int) -> SubspaceBasis:
        return self._get("p", N)

    def u(self, N: int) -> SubspaceBasis:
        return self._get("u", N)

    def l(self, N: int) -> SubspaceBasis:
        return self._get("l", N)

    def dims_table(self, lo: int | None = None, hi: int | None = None) -> list[dict]:
        B = self.window
        lo = -B if lo is None else lo
        hi = B if hi is None else hi
        return [{"N": N, "dim_p": self.p(N).dim, "dim_u": self.u(N).dim, "dim_l": self.l(N).dim}
                for N in range(lo, hi + 1)]

    def same_spiral(self, other: "Spiral") -> bool:
        """Extensional equality of the p_N over both windows."""
        if self.space != other.space:
            return False
        B = max(self.window, other.window)
        return all(self.p(N).same_as(other.p(N)) for N in range(-B, B + 1))


def spiral_p(s: Spiral, N: int) -> SubspaceBasis:
    return s.p(N)


def spiral_u(s: Spiral, N: int) -> SubspaceBasis:
    return s.u(N)


def spiral_split(s: Spiral, N: int) -> SubspaceBasis:
    sub = s.l(N)
    if s.p(N).dim != s.u(N).dim + sub.dim:
        raise AssertionError(f"p_{N} is not u_{N} + l_{N}")
    return sub


def canonical_spiral(x: GradedElement, basis: AdaptedBasis | None = None) -> Spiral:
    """Spiral of half the sl2-cocharacter of a completion of ``x`` (eps = +1)."""
    if x.degree != 1 % x.space.m:
        raise ValueError("canonical spirals are defined for degree-1 elements")
    if not is_nilpotent(x):
        raise NotNilpotent("canonical spiral needs a nilpotent element")
    triple = sl2_complete(x, basis)
    return Spiral(iota_cocharacter(triple).scaled(Rat(1, 2)), 1)


def ad_surjectivity_check(x: GradedElement) -> bool:
    """Whether ad(x) maps p_0 onto p_1 for the canonical spiral of x."""
    s = canonical_spiral(x)
    p0, p1 = s.p(0), s.p(1)
    images = [bracket(x, y) for y in p0.elements]
    if not all(p1.contains(z) for z in images):
        return False
    return SubspaceBasis.spanned_by(x.space, 1, images).dim == p1.dim


# ---------------------------------------------------------------------------
# axiom checker


@dataclass(frozen=True)
class CheckResult:
    check: str
    N: int
    N2: int | None
    ok: bool
    detail: str = ""


@dataclass
class Report:
    epsilon: int
    window: int
    entries: list = field(default_factory=list)

    CHECKS = ("nested", "bounds", "bracket_p", "annihilator", "bracket_u", "nilpotent")

    @property
    def ok(self) -> bool:
        return all(e.ok for e in self.entries)

    def failures(self) -> list[CheckResult]:
        return [e for e in self.entries if not e.ok]

    def summary(self) -> dict[str, bool]:
        out = {c: True for c in self.CHECKS}
        for e in self.entries:
            out[e.check] = out[e.check] and e.ok
        return out

    def add(self, check, N, N2, ok, detail=""):
        self.entries.append(CheckResult(check, N, N2, bool(ok), detail))


def annihilator(space: GradedSpace, degree: int, other: SubspaceBasis) -> SubspaceBasis:
    """``{x in g_degree : tr(x y) = 0 for all y in other}``."""
    amb = algebra_basis(space, degree)
    if not other.elements:
        return SubspaceBasis(space, degree, amb)
    gram = [[trace_pair(a, y) for a in amb] for y in other.elements]
    sols = nullspace(gram, len(amb))
    vecs = [a.vector() for a in amb]
    out = []
    for c in sols:
        acc = [Rat(0)] * space.hom_dim(degree)
        for coef, v in zip(c, vecs):
            if coef:
                acc = [x + coef * y for x, y in zip(acc, v)]
        out.append(GradedElement.from_vector(space, degree, acc))
    return SubspaceBasis.spanned_by(space, degree, out)


def _bracket_into(a: SubspaceBasis, b: SubspaceBasis, target: SubspaceBasis,
                  memo: dict | None = None) -> tuple[bool, str]:
    if memo is not None:
        key = (id(a), id(b), id(target))
        if key not in memo:
            # holding a, b, target keeps their ids from being reused
            memo[key] = (_bracket_into(a, b, target), a, b, target)
        return memo[key][0]
    for x in a.elements:
        for y in b.elements:
            z = bracket(x, y)
            if not target.contains(z):
                return False, "bracket of basis members escapes the target"
    return True, ""


def verify_spiral_axioms(s: Spiral,
                         p: Callable[[int], SubspaceBasis] | None = None,
                         u: Callable[[int], SubspaceBasis] | None = None) -> Report:
    """Check the spiral axioms over the window; ``p``/``u`` override the materialised subspaces."""
    p = p or s.p
    u = u or s.u
    sp, eps, m = s.space, s.epsilon, s.m
    B = s.window
    rep = Report(eps, B)
    full_dim = {i: len(algebra_basis(sp, i)) for i in range(m)}
    Ns = range(-B, B + 1)
    memo: dict = {}  # keyed by subspace identity; the spiral shares equal subspaces

    for N in Ns:
        rep.add("nested", N, N - eps * m, p(N - eps * m).contains_space(p(N)))
        if N * eps <= -B:
            rep.add("bounds", N, None, p(N).dim == full_dim[N % m], "p_N should be all of g")
        if N * eps >= B:
            rep.add("bounds", N, None, p(N).dim == 0, "p_N should vanish")
        ann = annihilator(sp, N, p(-N))
        rep.add("annihilator", N, -N, ann.same_as(u(N)))
        if N * eps > 0:
            rep.add("nilpotent", N, None, all(is_nilpotent(x) for x in p(N).elements))

    for N in Ns:
        pN = p(N)
        uN = u(N)
        for N2 in Ns:
            pN2 = p(N2)
            if not pN.dim or not pN2.dim:
                rep.add("bracket_p", N, N2, True)
            else:
                target = p(N + N2)
                if target.dim == full_dim[(N + N2) % m]:
                    rep.add("bracket_p", N, N2, True)
                else:
                    rep.add("bracket_p", N, N2, *_bracket_into(pN, pN2, target, memo))
            if not uN.dim or not pN2.dim:
                rep.add("bracket_u", N, N2, True)
            else:
                target = u(N + N2)
                if target.dim == full_dim[(N + N2) % m]:
                    rep.add("bracket_u", N, N2, True)
                else:
                    rep.add("bracket_u", N, N2, *_bracket_into(uN, pN2, target, memo))
    return rep


# ---------------------------------------------------------------------------
# chain quiver


@dataclass(frozen=True)
class ChainQuiver:
    m: int
    vertices: dict  # (label, x) -> multiplicity
    edges: tuple
    chains: tuple  # each a tuple of vertices from head to tail

    def chain_dims(self) -> list[list[int]]:
        """Splitting data: per chain, the multiplicities along it."""
        return [[self.vertices[v] for v in ch] for ch in self.chains]

    def levi_factors(self) -> list[int]:
        """Sizes of the GL-factors of M, one per chain."""
        return [sum(d) for d in self.chain_dims()]

    def heads(self) -> list[int]:
        return sorted(ch[0][0] for ch in self.chains)

    def is_union_of_paths(self) -> bool:
        outs, ins = {}, {}
        for a, b in self.edges:
            outs[a] = outs.get(a, 0) + 1
            ins[b] = ins.get(b, 0) + 1
        if any(v > 1 for v in outs.values()) or any(v > 1 for v in ins.values()):
            return False
        covered = [v for ch in self.chains for v in ch]
        return len(covered) == len(set(covered)) == len(self.vertices)

    def to_json(self) -> dict:
        def vj(v):
            return [v[0], rat_str(v[1])]
        return {"vertices": [[v[0], rat_str(v[1]), k] for v, k in sorted(self.vertices.items())],
                "edges": [[vj(a), vj(b)] for a, b in self.edges],
                "chains": [[vj(v) for v in ch] for ch in self.chains]}


def spiral_quiver(mu: RationalCocharacter) -> ChainQuiver:
    m = mu.space.m
    verts = mu.vertex_multiplicities()

    def succ(v):
        return ((v[0] + 1) % m, v[1] + 1)

    def pred(v):
        return ((v[0] - 1) % m, v[1] - 1)

    edges = tuple(sorted((v, succ(v)) for v in verts if succ(v) in verts))
    chains = []
    for v in sorted(verts):
        if pred(v) in verts:
            continue
        ch = [v]
        while succ(ch[-1]) in verts:
            ch.append(succ(ch[-1]))
        chains.append(tuple(ch))
    return ChainQuiver(m, dict(sorted(verts.items())), edges, tuple(chains))


# ---------------------------------------------------------------------------
# refinement by a parabolic of the splitting


class NonIntegralWeights(ValueError):
    pass


def refinement_factor(secondary: RationalCocharacter) -> int:
    """Least odd b exceeding twice the spread of the secondary weights."""
    a = int(secondary.spread)
    b = 2 * a + 1
    return b if b % 2 else b + 1


def refine_spiral(s: Spiral, secondary: RationalCocharacter) -> Spiral:
    """Spiral whose p_N is u_N plus the secondary-nonnegative part of l_N.

    ``secondary`` has integer weights on the same frame as ``s.mu``. The refined
    cocharacter is ``mu + secondary/(b r)`` where r clears the denominators of
    mu and b is odd with b > 2 * spread(secondary).
    """
    if any(x.denominator != 1 for x in secondary.all_weights()):
        raise NonIntegralWeights("secondary cocharacter must have integer weights")
    if secondary.space != s.space:
        raise ValueError("secondary cocharacter lives on another space")
    b = refinement_factor(secondary)
    r = s.mu.denominator
    scale = Rat(1, b * r)
    weights = [[x + scale * y for x, y in zip(wx, wy)]
               for wx, wy in zip(s.mu.weights, secondary.weights)]
    mu2 = RationalCocharacter(s.space, weights, s.mu.frame)
    return Spiral(mu2.recentered(), s.epsilon)


def secondary_part(s: Spiral, secondary: RationalCocharacter, N: int, rule) -> SubspaceBasis:
    """Members of l_N (frame maps of weight N*eps) whose secondary weight satisfies ``rule``."""
    mu, sp = s.mu, s.space
    thr = N * s.epsilon
    members = []
    for j in range(sp.m):
        t = (j + N) % sp.m
        for a, x in enumerate(mu.weights[j]):
            for b, y in enumerate(mu.weights[t]):
                if y - x == thr and rule(secondary.weights[t][b] - secondary.weights[j][a]):
                    members.append(mu.hom_element(N, j, a, b))
    return SubspaceBasis(sp, N, restrict_to_algebra(sp, N, members))


def check_refinement(s: Spiral, secondary: RationalCocharacter, refined: Spiral) -> list[str]:
    """Problems found comparing the refined spiral against u_N + (l_N with secondary >= 0)."""
    problems = []
    B = max(s.window, refined.window)
    for N in range(-B, B + 1):
        pr = refined.p(N)
        if not pr.contains_space(s.u(N)):
            problems.append(f"u_{N} not inside refined p_{N}")
        if not s.p(N).contains_space(pr):
            problems.append(f"refined p_{N} not inside p_{N}")
        q = secondary_part(s, secondary, N, lambda k: k >= 0)
        expect = SubspaceBasis.spanned_by(s.space, N, list(s.u(N).elements) + list(q.elements))
        if not expect.same_as(pr):
            problems.append(f"refined p_{N} differs from u_{N} + q_{N}")
        levi = secondary_part(s, secondary, N, lambda k: k == 0)
        if not levi.same_as(refined.l(N)):
            problems.append(f"refined splitting l_{N} differs from the secondary-weight-0 part")
    return problems


# ---------------------------------------------------------------------------
# reports


def spiral_report(s: Spiral) -> dict:
    return {"epsilon": s.epsilon, "window": s.window, "table": s.dims_table(),
            "quiver": spiral_quiver(s.mu).to_json()}


def alternate_canonical_spiral(x: GradedElement, seed: int) -> Spiral:
    """Canonical spiral computed through a randomly perturbed adapted basis."""
    return canonical_spiral(x, graded_jordan_basis(x, random.Random(seed)))
