"""Exhaustive and seeded-random sweeps that check the rough set / matroid results.

Each ``check_*`` function returns a :class:`VerifyReport`.  Random sweeps draw
from ``random.Random(f"{seed}:{name}")`` so every check is reproducible from the
seed printed in its report, independently of which other checks ran.
"""

from __future__ import annotations

import functools
import itertools
import random
import time
from dataclasses import dataclass, field
from typing import Callable

from .binrel import (
    is_binary_dependence,
    is_binary_dependence_literal,
    is_equivalence,
    iso_f,
    partition_from_matrix_gf2,
    partition_from_relation,
    relation_from_matrix,
    roundtrip_matroid_equal,
    verify_homomorphism,
)
from .errors import UniverseTooLarge
from .fields import GF2, Q, FieldSpec, field_axiom_violations
from .linalg import ExactMatrix, enumerate_solutions, null_space_basis, solve_ones
from .matroid import (
    SetFamily,
    VectorMatroid,
    bases,
    bases_via_ones,
    circuit_axiom_violations,
    circuits,
    circuits_via_nullspace,
    downward_closure,
    independence_axiom_violations,
    independent,
    independent_sets,
    matroids_equal,
    min_family,
    partition_bases,
    partition_circuits,
    partition_independent,
    support,
)
from .roughsets import (
    Partition,
    Universe,
    all_subsets,
    encode_matrix,
    enumerate_partitions,
    lower_approx,
    upper_approx,
    upper_full_sets,
)

GF3 = FieldSpec("prime", 3)
THEOREMS = ("t1", "t2", "t3", "t4", "props")
MAX_VERIFY_N = 8


@dataclass
class VerifyReport:
    theorem: str
    instances: int = 0
    failures: list[str] = field(default_factory=list)
    wall_time: float = 0.0
    seed: int | None = None

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, msg: str):
        self.failures.append(msg)


def _timed(name: str):
    def deco(fn: Callable[..., VerifyReport]):
        @functools.wraps(fn)
        def run(*args, **kwargs) -> VerifyReport:
            rep = VerifyReport(name, seed=kwargs.get("seed"))
            t0 = time.perf_counter()
            fn(rep, *args, **kwargs)
            rep.wall_time = time.perf_counter() - t0
            rep.failures.sort()
            return rep

        return run

    return deco


def partitions_upto(max_n: int):
    for n in range(1, max_n + 1):
        yield from enumerate_partitions(Universe.of_size(n))


def _rng(seed: int, name: str) -> random.Random:
    return random.Random(f"{seed}:{name}")


def random_matrix(rng: random.Random, spec: FieldSpec, m: int, n: int) -> ExactMatrix:
    return ExactMatrix.from_rows(spec, [[rng.randrange(spec.p) for _ in range(n)] for _ in range(m)])


def random_bdm_gf2(rng: random.Random, m: int, n: int) -> ExactMatrix:
    """Random GF(2) binary dependence matrix: columns drawn from a set of independent vectors."""
    k = rng.randint(1, min(m, n))
    reps: list[int] = []
    basis: list[int] = []
    while len(reps) < k:
        v = rng.randrange(1, 1 << m)
        w = v
        for b in basis:
            w = min(w, w ^ b)
        if w:
            basis.append(w)
            reps.append(v)
    cols = [reps[rng.randrange(k)] for _ in range(n)]
    return ExactMatrix.from_rows(GF2, [[(c >> i) & 1 for c in cols] for i in range(m)])


def _row_mix_gf2(rng: random.Random, A: ExactMatrix) -> ExactMatrix:
    """Apply random invertible row operations (swaps and additions) over GF(2)."""
    rows = [list(r) for r in A.data]
    for _ in range(3 * A.m):
        i, j = rng.randrange(A.m), rng.randrange(A.m)
        if i == j:
            continue
        if rng.random() < 0.3:
            rows[i], rows[j] = rows[j], rows[i]
        else:
            rows[i] = [(a + b) % 2 for a, b in zip(rows[i], rows[j])]
    return ExactMatrix(GF2, tuple(tuple(r) for r in rows), A.col_labels)


def _oracle_independent_family(P: Partition) -> SetFamily:
    return SetFamily(P.universe, (S for S in all_subsets(P.universe) if partition_independent(P, S)))


def _axioms(rep: VerifyReport, tag: str, M: VectorMatroid, circ: SetFamily):
    for v in circuit_axiom_violations(circ):
        rep.fail(f"{tag}: {v}")
    for v in independence_axiom_violations(independent_sets(M)):
        rep.fail(f"{tag}: {v}")


@_timed("t1")
def check_t1(rep: VerifyReport, max_n: int = 6):
    """Partition matroid equals the vector matroid of its block-incidence matrix over GF(2), GF(3), Q."""
    for P in partitions_upto(max_n):
        oracle_indep = _oracle_independent_family(P)
        for spec in (GF2, GF3, Q):
            rep.instances += 1
            M = VectorMatroid(encode_matrix(P, spec))
            tag = f"{P!r} over {spec}"
            circ = circuits(M)
            if circ != partition_circuits(P):
                rep.fail(f"{tag}: circuits {circ!r} != {partition_circuits(P)!r}")
            if bases(M) != partition_bases(P):
                rep.fail(f"{tag}: bases differ")
            if independent_sets(M) != oracle_indep:
                rep.fail(f"{tag}: independent sets differ")
            _axioms(rep, tag, M, circ)


@_timed("t2")
def check_t2(rep: VerifyReport, samples: int = 200, seed: int = 42, max_n: int = 8, max_m: int = 6):
    """Circuits = minimal nonempty null-space supports, on random GF(2) and GF(3) matrices."""
    for spec, count in ((GF2, samples), (GF3, samples // 2)):
        rng = _rng(seed, f"t2:{spec.tag}")
        for k in range(count):
            A = random_matrix(rng, spec, rng.randint(1, max_m), rng.randint(1, max_n))
            rep.instances += 1
            M = VectorMatroid(A)
            brute = circuits(M)
            via = circuits_via_nullspace(A)
            if brute != via:
                rep.fail(f"{spec} sample {k}: brute {brute!r} != kernel {via!r} for {A.data}")
            _axioms(rep, f"{spec} sample {k}", M, brute)


@_timed("t3")
def check_t3(rep: VerifyReport, max_n: int = 6):
    """Bases = minimal supports of Ax = 1 over GF(2) = transversals = Min{X : upper(X) = U}."""
    for P in partitions_upto(max_n):
        rep.instances += 1
        B = encode_matrix(P, GF2)
        tag = repr(P)
        via_ones = bases_via_ones(B)
        trans = partition_bases(P)
        full = upper_full_sets(P)
        if via_ones != trans:
            rep.fail(f"{tag}: ones-supports {via_ones!r} != transversals {trans!r}")
        if min_family(full) != trans:
            rep.fail(f"{tag}: Min(upper-full) != transversals")
        for v in enumerate_solutions(solve_ones(B)):
            S = support(v, P.universe)
            if S not in full:
                rep.fail(f"{tag}: support {S!r} of a solution misses a block")
            if upper_approx(P, S) != P.universe.full():
                rep.fail(f"{tag}: upper approximation of {S!r} is not U")
        indep = downward_closure(via_ones)
        if indep != _oracle_independent_family(P):
            rep.fail(f"{tag}: closure of bases != sets meeting each block at most once")
        M = VectorMatroid(B)
        if indep != independent_sets(M):
            rep.fail(f"{tag}: closure of bases != independent sets of the vector matroid")
        for v in independence_axiom_violations(indep):
            rep.fail(f"{tag}: {v}")


@_timed("t4")
def check_t4(rep: VerifyReport, max_n: int = 5):
    """f(P) = minimal kernel supports of B(P) over GF(2) is injective and maps meets to intersections."""
    for n in range(1, max_n + 1):
        parts = list(enumerate_partitions(Universe.of_size(n)))
        images = {}
        for P in parts:
            rep.instances += 1
            fP = iso_f(P)
            if fP != partition_circuits(P):
                rep.fail(f"{P!r}: f(P) {fP!r} != 2-subsets of blocks")
            if fP in images:
                rep.fail(f"n={n}: f({P!r}) == f({images[fP]!r})")
            images[fP] = P
        for P1 in parts:
            for P2 in parts:
                rep.instances += 1
                if not verify_homomorphism(P1, P2):
                    rep.fail(f"f(meet) != f cap f for {P1!r}, {P2!r}")


@_timed("fields")
def check_field_axioms(rep: VerifyReport, primes=(2, 3, 5, 7)):
    for p in primes:
        rep.instances += 1
        for v in field_axiom_violations(FieldSpec("prime", p)):
            rep.fail(f"GF({p}): {v}")


@_timed("roughsets")
def check_approximations(rep: VerifyReport, max_n: int = 5):
    """lower(X) <= X <= upper(X) and lower(X) = U - upper(U - X), for every partition and subset."""
    for P in partitions_upto(max_n):
        for X in all_subsets(P.universe):
            rep.instances += 1
            lo, up = lower_approx(P, X), upper_approx(P, X)
            if not (lo <= X <= up):
                rep.fail(f"{P!r}, {X!r}: inclusion chain broken")
            if lo != upper_approx(P, X.complement()).complement():
                rep.fail(f"{P!r}, {X!r}: complement duality broken")


@_timed("prop:kernel-dependent")
def check_kernel_supports_dependent(rep: VerifyReport, samples: int = 200, seed: int = 42, max_n: int = 8):
    rng = _rng(seed, "kernel-dependent")
    for k in range(samples):
        spec = GF2 if k % 2 == 0 else GF3
        A = random_matrix(rng, spec, rng.randint(1, 6), rng.randint(1, max_n))
        M = VectorMatroid(A)
        U = M.ground
        for v in enumerate_solutions(null_space_basis(A)):
            S = support(v, U)
            if len(S):
                rep.instances += 1
                if independent(M, S):
                    rep.fail(f"sample {k}: kernel support {S!r} is independent")


@_timed("prop:min-stability")
def check_min_stability(rep: VerifyReport, samples: int = 500, seed: int = 42):
    rng = _rng(seed, "min-stability")
    for k in range(samples):
        U = Universe.of_size(rng.randint(1, 6))
        S = SetFamily(U, (rng.randrange(1 << len(U)) for _ in range(rng.randint(1, 12))))
        minS = min_family(S)
        extra = [s for s in S if rng.random() < 0.5]
        F = SetFamily(U, list(minS) + extra)
        if not (F.issubset(S) and minS.issubset(min_family(F))):
            rep.fail(f"sample {k}: generator broke the hypothesis")
            continue
        rep.instances += 1
        if min_family(S) != min_family(F):
            rep.fail(f"sample {k}: Min(S) {minS!r} != Min(F) {min_family(F)!r}")


@_timed("prop:partition-circuit-axioms")
def check_partition_circuit_axioms(rep: VerifyReport, max_n: int = 6):
    for P in partitions_upto(max_n):
        rep.instances += 1
        for v in circuit_axiom_violations(partition_circuits(P)):
            rep.fail(f"{P!r}: {v}")


@_timed("prop:gf2-relation-equivalence")
def check_gf2_relation_equivalence(rep: VerifyReport, samples: int = 500, seed: int = 42, max_n: int = 8):
    rng = _rng(seed, "gf2-equivalence")
    for k in range(samples):
        A = random_matrix(rng, GF2, rng.randint(1, 6), rng.randint(1, max_n))
        rep.instances += 1
        rel = relation_from_matrix(A)
        if not is_equivalence(rel):
            rep.fail(f"sample {k}: relation of {A.data} is not an equivalence")
        elif partition_from_relation(rel) != partition_from_matrix_gf2(A):
            rep.fail(f"sample {k}: relation classes differ from equal-column classes")


@_timed("prop:equal-matroids-equal-relations")
def check_equal_matroids_equal_relations(rep: VerifyReport, samples: int = 200, seed: int = 42, max_n: int = 8):
    rng = _rng(seed, "equal-matroids")
    for k in range(samples):
        m, n = rng.randint(1, 6), rng.randint(1, max_n)
        A1 = random_matrix(rng, GF2, m, n)
        if any(not any(A1.column(j)) for j in range(n)):
            continue
        A2 = _row_mix_gf2(rng, A1)
        if not matroids_equal(VectorMatroid(A1), VectorMatroid(A2)):
            rep.fail(f"sample {k}: row operations changed the matroid")
            continue
        rep.instances += 1
        if relation_from_matrix(A1) != relation_from_matrix(A2):
            rep.fail(f"sample {k}: equal matroids, different relations")


@_timed("prop:partition-roundtrip")
def check_partition_roundtrip(rep: VerifyReport, max_n: int = 6):
    """R(B(R)) = R and B(R) is a binary dependence matrix (over GF(2), GF(3), Q)."""
    for P in partitions_upto(max_n):
        rep.instances += 1
        B = encode_matrix(P, GF2)
        if partition_from_matrix_gf2(B) != P:
            rep.fail(f"{P!r}: equal-column classes of B(R) differ")
        if partition_from_relation(relation_from_matrix(B)) != P:
            rep.fail(f"{P!r}: null-space relation of B(R) differs")
        for spec in (GF2, GF3, Q):
            verdict = is_binary_dependence(encode_matrix(P, spec))
            if not verdict.is_member:
                rep.fail(f"{P!r}: B(R) over {spec} not a binary dependence matrix, witness {verdict.witness}")


@_timed("prop:bdm-roundtrip")
def check_bdm_roundtrip(rep: VerifyReport, samples: int = 500, seed: int = 42, max_n: int = 8):
    rng = _rng(seed, "bdm-roundtrip")
    for k in range(samples):
        A = random_bdm_gf2(rng, rng.randint(1, 6), rng.randint(1, max_n))
        rep.instances += 1
        if not is_binary_dependence(A).is_member:
            rep.fail(f"sample {k}: generated matrix {A.data} is not a binary dependence matrix")
        elif not roundtrip_matroid_equal(A):
            rep.fail(f"sample {k}: roundtrip changed the matroid of {A.data}")


@_timed("prop:bdm-criterion")
def check_bdm_criterion(rep: VerifyReport, samples: int = 300, seed: int = 42, max_n: int = 6):
    """Circuit-size criterion agrees with the literal subset definition."""
    mats = []
    for n in range(1, 5):
        for bits in itertools.product((0, 1), repeat=2 * n):
            mats.append(ExactMatrix.from_rows(GF2, [bits[:n], bits[n:]]))
    rng = _rng(seed, "bdm-criterion")
    for _ in range(samples):
        mats.append(random_matrix(rng, GF2, rng.randint(1, 5), rng.randint(1, max_n)))
        mats.append(random_bdm_gf2(rng, rng.randint(1, 5), rng.randint(1, max_n)))
    for A in mats:
        rep.instances += 1
        if is_binary_dependence(A).is_member != is_binary_dependence_literal(A):
            rep.fail(f"criterion mismatch on {A.data}")


def run(theorem: str, max_n: int | None = None, seed: int = 42, samples: int | None = None) -> list[VerifyReport]:
    """Run one named sweep (t1..t4, props, all)."""
    if theorem == "all":
        out = []
        for t in THEOREMS:
            out += run(t, max_n, seed, samples)
        return out
    if max_n is not None and not 1 <= max_n <= MAX_VERIFY_N:
        raise UniverseTooLarge(f"--max-n must be in 1..{MAX_VERIFY_N}, got {max_n}")

    def n_or(default):
        return default if max_n is None else max_n

    def s_or(default):
        return default if samples is None else samples

    if theorem == "t1":
        return [check_t1(max_n=n_or(6))]
    if theorem == "t2":
        return [check_t2(samples=s_or(200), seed=seed, max_n=n_or(8))]
    if theorem == "t3":
        return [check_t3(max_n=n_or(6))]
    if theorem == "t4":
        return [check_t4(max_n=n_or(5))]
    if theorem == "props":
        return [
            check_field_axioms(),
            check_approximations(max_n=min(n_or(5), 5)),
            check_kernel_supports_dependent(samples=s_or(200), seed=seed, max_n=n_or(8)),
            check_min_stability(samples=s_or(500), seed=seed),
            check_partition_circuit_axioms(max_n=n_or(6)),
            check_gf2_relation_equivalence(samples=s_or(500), seed=seed, max_n=n_or(8)),
            check_equal_matroids_equal_relations(samples=s_or(200), seed=seed, max_n=n_or(8)),
            check_partition_roundtrip(max_n=n_or(6)),
            check_bdm_roundtrip(samples=s_or(500), seed=seed, max_n=n_or(8)),
            check_bdm_criterion(samples=s_or(300), seed=seed, max_n=min(n_or(6), 6)),
        ]
    raise ValueError(f"unknown theorem {theorem!r}; expected one of {THEOREMS + ('all',)}")
