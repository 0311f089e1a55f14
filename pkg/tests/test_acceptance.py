"""Acceptance criteria 1-8, one PASS/FAIL line each.

Run under pytest, or directly with ``python3 tests/test_acceptance.py``.
"""

import itertools
import random
import sys
import time

import pytest

from quiverhh.algebra import presentation
from quiverhh.derivations import (
    DerivationValues,
    HypothesisError,
    Violation,
    apply,
    cycle_identity_check,
    evaluation_matrix,
    extend_derivation,
    f2_subspace,
    standard_basis,
    truncated_diff_basis,
    vertex_operator,
)
from quiverhh.fixtures import FIXTURES, embedding
from quiverhh.linalg import ExactMatrix, FieldSpec, rank, sparse_rank
from quiverhh.oracle import (
    constraint_system,
    oracle_diff_dim,
    oracle_h1,
    oracle_hh1,
    random_instances,
    random_quiver,
)
from quiverhh.planar import face_operator, h1_basis_planar
from quiverhh.quiver import Quiver, QuiverError, compose, enumerate_paths, is_acyclic_quiver

SEED = 20261016
RANDOM_COUNT = 200


def report(number, ok, detail):
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}"
    print(line, flush=True)
    return ok


def criterion_instances():
    yield from ((name, build()) for name, build in sorted(FIXTURES.items()))
    for i, p in enumerate(random_instances(RANDOM_COUNT, SEED)):
        yield f"random[{i}]", p


def check_1():
    t = time.perf_counter()
    p = FIXTURES["SQ"]()
    s = standard_basis(p)
    f = f2_subspace(p)
    got = (len(s.B2), s.dim_center, s.q_c, s.dim_h1, f.dim_f2, f.dim_hh1)
    elapsed = time.perf_counter() - t
    ok = got == (4, 1, 4, 1, 3, 0) and elapsed < 1
    return report(1, ok, f"SQ |B2|, dim Z, |Q_C|, H1, F2, HH1 = {got} in {elapsed:.3f}s")


def check_2():
    t = time.perf_counter()
    bad = []
    n = 0
    for name, p in criterion_instances():
        n += 1
        if standard_basis(p).dim_h1 != oracle_h1(p) or f2_subspace(p).dim_hh1 != oracle_hh1(p):
            bad.append(name)
    elapsed = time.perf_counter() - t
    ok = not bad and elapsed < 60
    return report(2, ok, f"{n - len(bad)}/{n} instances agree with the oracle in {elapsed:.1f}s (seed {SEED})")


def check_3():
    bad = []
    n = 0
    for name, p in criterion_instances():
        n += 1
        s = standard_basis(p)
        m = evaluation_matrix(p, s.B1 + s.B2)
        r = sparse_rank(m.sparse_rows(), p.field)
        if not (r == s.dim_diff == len(s.B1) + len(s.B2) == oracle_diff_dim(p)):
            bad.append(name)
    return report(3, not bad, f"{n - len(bad)}/{n} evaluation matrices have full rank = oracle dim Diff")


def check_4():
    checks = 0
    failures = []
    for name, build in sorted(FIXTURES.items()):
        p = build()
        s = standard_basis(p)
        ops = s.B1 + s.B2
        fs = embedding(name, p)
        ops += [face_operator(fs, i) for i in range(len(fs.faces))]
        paths = enumerate_paths(p.quiver, p.nilpotency - 1)
        for op in ops:
            for u, v in itertools.product(paths, repeat=2):
                uv = compose(u, v)
                if uv is None or uv.length >= p.nilpotency:
                    continue
                checks += 1
                if apply(p, op, uv) != apply(p, op, u) * p.reduce(v) + p.reduce(u) * apply(p, op, v):
                    failures.append((name, str(op), str(u), str(v)))
    return report(4, not failures, f"{checks - len(failures)}/{checks} Leibniz identities hold exactly")


def check_5():
    notes = []
    ok = True
    for name, build in sorted(FIXTURES.items()):
        t = time.perf_counter()
        p = build()
        fs = embedding(name, p)
        q = p.quiver
        cols = len(q.arrows)
        arrows = [a.id for a in q.arrows]
        faces = [[fs.incidences[i].get(a, 0) for a in arrows] for i in range(len(fs.faces))]
        verts = [list(vertex_operator(p, v)) for v in q.vertices]
        bounded = [faces[i] for i in fs.bounded_indices()]

        def r(rows):
            return rank(ExactMatrix.from_rows(rows, FieldSpec(), cols=cols)) if rows else 0

        good = fs.euler_characteristic == 2
        good &= all(sum(col) == 0 for col in zip(*faces)) if cols else True
        good &= r(verts) == len(q.vertices) - 1
        good &= r(bounded) == len(fs.faces) - 1
        good &= r(verts + bounded) == len(q.arrows)
        try:
            size = len(h1_basis_planar(p, fs))
            good &= size == standard_basis(p).dim_h1
            h1 = f"|basis| = {size}"
        except HypothesisError:
            good &= not p.is_acyclic_algebra
            h1 = "not acyclic, basis skipped"
        elapsed = time.perf_counter() - t
        good &= elapsed < 1
        ok &= good
        notes.append(f"{name}: F={len(fs.faces)} {h1} {elapsed:.3f}s")
    return report(5, ok, "; ".join(notes))


def acyclic_quivers(max_vertices=4, max_arrows=6):
    """Connected acyclic quivers, arrows oriented along a fixed vertex order."""
    for nv in range(1, max_vertices + 1):
        pairs = list(itertools.combinations(range(nv), 2))
        for k in range(max_arrows + 1):
            for multiset in itertools.combinations_with_replacement(pairs, k):
                arrows = [(f"a{j}", f"v{i}", f"v{h}") for j, (i, h) in enumerate(multiset)]
                try:
                    yield Quiver([f"v{i}" for i in range(nv)], arrows)
                except QuiverError:
                    continue


def check_6():
    t = time.perf_counter()
    n = 0
    bad = []
    for q in acyclic_quivers():
        assert is_acyclic_quiver(q)
        for N in (2, 3):
            p = presentation(q, nilpotency=N)
            _, B2 = truncated_diff_basis(p)
            f = f2_subspace(p)
            value = len(B2) + f.dim_center - len(p.Q_C)
            n += 1
            if not (value == f.dim_hh1 == oracle_hh1(p)):
                bad.append((q, N))
    loop = oracle_hh1(FIXTURES["LOOP2"]())
    elapsed = time.perf_counter() - t
    ok = not bad and loop == 1
    return report(6, ok, f"{n - len(bad)}/{n} truncated algebras agree; LOOP2 oracle dim HH1 = {loop}; {elapsed:.1f}s")


def check_7():
    rng = random.Random(SEED)
    cyclic = []
    while len(cyclic) < 15:
        q = random_quiver(rng, max_vertices=3, max_arrows=4)
        if not is_acyclic_quiver(q):
            cyclic.append(presentation(q, nilpotency=rng.choice([2, 3, 4])))
    checked = 0
    ok = True
    for p in [FIXTURES["LOOP2"]()] + cyclic:
        for c in enumerate_paths(p.quiver, p.nilpotency - 1):
            if c.tail == c.head:
                checked += 1
                ok &= cycle_identity_check(p, c)
    for build in FIXTURES.values():
        p = build()
        total = [sum(col) for col in zip(*(vertex_operator(p, v) for v in p.quiver.vertices))]
        ok &= all(x == 0 for x in total)
    return report(7, ok, f"{checked} cycle identities on LOOP2 and 15 seeded cyclic quivers; vertex identity on fixtures")


def check_8():
    rng = random.Random(SEED)
    accepted = rejected = 0
    named = set()
    problems = []
    for name, build in sorted(FIXTURES.items()):
        p = build()
        cs = constraint_system(p)
        sols = cs.solutions()
        for _ in range(20):
            vec = [0] * cs.n_unknowns
            for s in sols:
                c = rng.randint(-3, 3)
                vec = [x + c * y for x, y in zip(vec, s)]
            d = extend_derivation(p, DerivationValues(*cs.unpack(vec)))
            if isinstance(d, Violation) or d.coordinates() != list(vec):
                problems.append((name, "valid point rejected"))
            else:
                accepted += 1
            n = p.dimension
            while True:
                # disturb the value on a single vertex or arrow
                g = rng.randrange(len(cs.generators))
                bad = list(vec)
                for j in range(g * n, (g + 1) * n):
                    bad[j] += rng.choice([0, 0, 1, -1, 2])
                if not cs.satisfied_by(bad):
                    break
            res = extend_derivation(p, DerivationValues(*cs.unpack(bad)))
            if isinstance(res, Violation) and res.constraint in ("vertex-shape", "endpoint-balance", "arrow-shape"):
                rejected += 1
                named.add(res.constraint)
            else:
                problems.append((name, "perturbed point accepted"))
    ok = not problems
    return report(8, ok, f"{accepted} valid points accepted, {rejected} perturbed points rejected ({', '.join(sorted(named))})")


CHECKS = [check_1, check_2, check_3, check_4, check_5, check_6, check_7, check_8]


@pytest.mark.parametrize("check", CHECKS, ids=[f"criterion_{i}" for i in range(1, 9)])
def test_criterion(check, capsys):
    with capsys.disabled():
        ok = check()
    assert ok


if __name__ == "__main__":
    results = [check() for check in CHECKS]
    sys.exit(0 if all(results) else 1)
