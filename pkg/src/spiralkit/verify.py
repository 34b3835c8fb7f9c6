"""Verification sweeps shared by the test-suite and the ``verify`` command."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterable

from .blocks import (admissible_grading_for_block, block_representative, enumerate_blocks_sl, omega,
                     psi)
from .census import (DimVector, component_group_order, dim_vectors, enumerate_chain_types,
                     enumerate_pairs)
from .graded import GradedSpace
from .nilpotent import chain_type_by_ranks, chain_type_of, standard_representative
from .oracle import realized_chain_types_fq
from .sampling import random_cocharacter
from .spiral import Spiral, ad_surjectivity_check, canonical_spiral, spiral_quiver, verify_spiral_axioms


@dataclass(frozen=True)
class Outcome:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'} {self.name}" + (f"  ({self.detail})" if self.detail else "")


def sweep(n_max: int, m_max: int, m_min: int = 1) -> Iterable[DimVector]:
    for m in range(m_min, m_max + 1):
        yield from dim_vectors(n_max, m)


def orbit_representatives(n_max: int, m_max: int):
    for dv in sweep(n_max, m_max):
        space = GradedSpace(dv.m, dv.dims)
        for t in enumerate_chain_types(dv):
            yield dv, t, standard_representative(t, space)


def check_random_axioms(configs: Iterable[DimVector], per_config: int, seed: int) -> Outcome:
    bad = []
    total = 0
    for dv in configs:
        rng = random.Random(f"{seed}:{dv.m}:{dv.dims}")
        space = GradedSpace(dv.m, dv.dims)
        for _ in range(per_config):
            mu = random_cocharacter(space, rng)
            total += 1
            rep = verify_spiral_axioms(Spiral(mu, rng.choice((1, -1))))
            if not rep.ok:
                bad.append(f"{mu!r}: {rep.failures()[0]}")
    return Outcome("axioms: random cocharacters", not bad, f"{total} spirals" + (f"; {bad[0]}" if bad else ""))


def check_canonical_axioms(n_max: int, m_max: int) -> Outcome:
    bad, total = [], 0
    for dv, t, x in orbit_representatives(n_max, m_max):
        total += 1
        if not verify_spiral_axioms(canonical_spiral(x)).ok:
            bad.append(f"{dv.dims} {t}")
    return Outcome("axioms: canonical spirals of orbit representatives", not bad,
                   f"{total} orbits" + (f"; first failure {bad[0]}" if bad else ""))


def check_ad_surjectivity(n_max: int, m_max: int) -> Outcome:
    bad = [f"{dv.dims} {t}" for dv, t, x in orbit_representatives(n_max, m_max)
           if not ad_surjectivity_check(x)]
    return Outcome("ad(x): p_0 -> p_1 surjective", not bad, bad[0] if bad else "")


def check_census(n_max: int, m_max: int) -> Outcome:
    problems = []
    for dv in sweep(n_max, m_max):
        types = enumerate_chain_types(dv)
        if len(set(types)) != len(types):
            problems.append(f"duplicates at {dv.dims}")
        space = GradedSpace(dv.m, dv.dims)
        for t in types:
            if t.dims != dv.dims:
                problems.append(f"{t} has dims {t.dims}")
            x = standard_representative(t, space)
            if chain_type_of(x) != t or chain_type_by_ranks(x) != t:
                problems.append(f"round trip failed for {t}")
        if len(enumerate_pairs(dv)) != sum(component_group_order(t) for t in types):
            problems.append(f"pair count mismatch at {dv.dims}")
    return Outcome("census: closure, round trip, pair counts", not problems,
                   problems[0] if problems else "")


def check_psi_omega(n_max: int, m_max: int) -> Outcome:
    problems = []
    for dv in sweep(n_max, m_max):
        blocks = enumerate_blocks_sl(dv)
        for b in blocks:
            if psi(omega(b, dv), dv) != b:
                problems.append(f"psi(omega(b)) != b for {b.to_json()} at {dv.dims}")
        pairs = enumerate_pairs(dv)
        image = [psi(p, dv) for p in pairs]
        if set(image) != set(blocks):
            problems.append(f"psi not onto the blocks at {dv.dims}")
        if not all(b.satisfies(dv) for b in image):
            problems.append(f"psi output violates the label counts at {dv.dims}")
        if sum(image.count(b) for b in blocks) != len(pairs):
            problems.append(f"fibre sizes do not add up at {dv.dims}")
    return Outcome("blocks: psi o omega = id, psi onto", not problems, problems[0] if problems else "")


def check_splitting_realization(n_max: int, m_max: int) -> Outcome:
    problems = []
    for dv in sweep(n_max, m_max):
        for b in enumerate_blocks_sl(dv):
            mu = admissible_grading_for_block(b, dv)
            s = Spiral(mu, 1)
            if not verify_spiral_axioms(s).ok:
                problems.append(f"axioms fail for {b.to_json()}")
            q = spiral_quiver(mu)
            if (len(q.chains) != dv.n // b.d or any(len(ch) != b.d for ch in q.chains)
                    or tuple(q.heads()) != b.f or any(k != 1 for k in q.vertices.values())):
                problems.append(f"quiver shape wrong for {b.to_json()} at {dv.dims}")
            x = block_representative(b, dv)
            if not s.l(1).contains(x):
                problems.append(f"representative not in l_1 for {b.to_json()}")
            if chain_type_of(x) != omega(b).orbit:
                problems.append(f"representative of {b.to_json()} has the wrong orbit")
    return Outcome("blocks: admissible gradings realise every block", not problems,
                   problems[0] if problems else "")


def check_oracle(n_max: int, m_max: int, primes=(2, 3)) -> Outcome:
    problems = []
    for dv in sweep(min(n_max, 3), m_max):
        want = set(enumerate_chain_types(dv))
        for q in primes:
            if realized_chain_types_fq(dv, q) != want:
                problems.append(f"F_{q} census differs at m={dv.m} dims={dv.dims}")
    return Outcome("oracle: F_q realised types = census", not problems, problems[0] if problems else "")


SUITES: dict[str, Callable[..., list[Outcome]]] = {
    "axioms": lambda n, m, seed: [
        check_random_axioms(list(sweep(min(n, 3), m)), 3, seed),
        check_canonical_axioms(n, m),
        check_ad_surjectivity(n, m),
    ],
    "census": lambda n, m, seed: [check_census(n, m)],
    "psi-omega": lambda n, m, seed: [check_psi_omega(n, m), check_splitting_realization(n, m)],
    "oracle": lambda n, m, seed: [check_oracle(n, m)],
}


def run_suite(name: str, n_max: int = 4, m_max: int = 3, seed: int = 0) -> list[Outcome]:
    if name == "all":
        return [o for key in ("census", "oracle", "axioms", "psi-omega")
                for o in SUITES[key](n_max, m_max, seed)]
    return SUITES[name](n_max, m_max, seed)
