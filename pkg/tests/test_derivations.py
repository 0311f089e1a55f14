import itertools
import random

import pytest

from quiverhh.algebra import presentation
from quiverhh.derivations import (
    ArrowType,
    DerivationValues,
    HypothesisError,
    Inner,
    OperatorError,
    Vertex,
    Violation,
    apply,
    cycle_identity_check,
    evaluation_matrix,
    extend_derivation,
    f2_subspace,
    ideal_generators,
    standard_basis,
    truncated_diff_basis,
    vertex_operator,
)
from quiverhh.fixtures import a2, kr2, loop2, sq
from quiverhh.linalg import FieldSpec, rank
from quiverhh.quiver import Quiver, compose, enumerate_paths


def test_standard_basis_counts():
    s = standard_basis(sq())
    assert (len(s.B1), len(s.B2), s.dim_center, s.q_c, s.dim_h1) == (5, 4, 1, 4, 1)
    assert standard_basis(kr2()).dim_h1 == 3
    s = standard_basis(a2())
    assert len(s.B2) == 1 and s.dim_h1 == 0


def test_apply_examples():
    p = sq()
    q = p.quiver
    assert apply(p, ArrowType("a1", q.path("a1")), q.path("a1", "a2")) == p.reduce(q.path("b1", "b2"))
    lp = loop2()
    x = lp.quiver.path("x")
    assert apply(lp, ArrowType("x", lp.quiver.trivial("v")), lp.quiver.path("x", "x")) == lp.reduce(x).scale(2)
    for v in q.vertices:
        assert apply(p, ArrowType("a1", q.path("a1")), q.trivial(v)).is_zero()


def test_apply_rejects_bad_operator():
    p = sq()
    with pytest.raises(OperatorError):
        apply(p, ArrowType("a1", p.quiver.path("b1")), p.quiver.path("a1"))


def test_vertex_operators():
    assert vertex_operator(a2(), "v1") == (1,)
    assert vertex_operator(loop2(), "v") == (0,)
    assert vertex_operator(sq(), "s") == (1, 0, 1, 0)


def test_vertex_operator_is_inner(named):
    _, p = named
    for v in p.quiver.vertices:
        for g in p.quiver.generators():
            assert apply(p, Vertex(v), g) == apply(p, Inner(p.quiver.trivial(v)), g)


def test_vertex_identity(named):
    _, p = named
    total = [sum(col) for col in zip(*(vertex_operator(p, v) for v in p.quiver.vertices))]
    assert all(c == 0 for c in total)


def test_leibniz(named):
    _, p = named
    s = standard_basis(p)
    paths = enumerate_paths(p.quiver, p.nilpotency - 1)
    for op in s.B1 + s.B2:
        for u, v in itertools.product(paths, repeat=2):
            uv = compose(u, v)
            if uv is None or uv.length >= p.nilpotency:
                continue
            assert apply(p, op, uv) == apply(p, op, u) * p.reduce(v) + p.reduce(u) * apply(p, op, v)


def test_evaluation_matrix_full_rank(named):
    _, p = named
    s = standard_basis(p)
    assert rank(evaluation_matrix(p, s.B1 + s.B2)) == s.dim_diff


def _zero_values(p):
    return DerivationValues({v: p.zero() for v in p.quiver.vertices}, {a.id: p.zero() for a in p.quiver.arrows})


def test_extend_zero():
    p = sq()
    d = extend_derivation(p, _zero_values(p))
    assert not isinstance(d, Violation)
    assert all(d(path).is_zero() for path in enumerate_paths(p.quiver, 2))


def test_extend_arrow_type():
    p = sq()
    q = p.quiver
    dv = _zero_values(p)
    dv.D1["a1"] = p.reduce(q.path("a1"))
    d = extend_derivation(p, dv)
    op = ArrowType("a1", q.path("a1"))
    for path in enumerate_paths(q, 2):
        assert d(path) == apply(p, op, path)


def test_extend_reports_endpoint_balance():
    p = sq()
    dv = _zero_values(p)
    dv.D0["s"] = p.reduce(p.quiver.path("a1"))
    res = extend_derivation(p, dv)
    assert isinstance(res, Violation)
    assert res.constraint == "endpoint-balance" and "a1" in res.witness


def test_extend_reports_shapes():
    p = sq()
    dv = _zero_values(p)
    dv.D0["s"] = p.reduce(p.quiver.path("a2"))
    assert extend_derivation(p, dv).constraint == "vertex-shape"
    dv = _zero_values(p)
    dv.D1["a1"] = p.reduce(p.quiver.path("b1"))
    assert extend_derivation(p, dv).constraint == "arrow-shape"
    with pytest.raises(ValueError):
        extend_derivation(p, DerivationValues({}, {}))


def test_cycle_identity_loop():
    p = loop2()
    assert cycle_identity_check(p, p.quiver.path("x"))
    assert cycle_identity_check(p, p.quiver.trivial("v"))


def test_cycle_identity_two_cycle():
    q = Quiver(["a", "b"], [("x", "a", "b"), ("y", "b", "a"), ("z", "a", "a")])
    p = presentation(q, [[(1, ("x", "y")), (-2, ("z", "z"))]], nilpotency=4)
    for c in enumerate_paths(q, 3):
        if c.tail == c.head:
            assert cycle_identity_check(p, c)


def test_f2_examples():
    f = f2_subspace(sq())
    assert f.dim_f2 == 3 and f.dim_hh1 == 0
    assert f.vectors == [[-1, 1, 0, 0], [1, 0, 1, 0], [1, 0, 0, 1]]
    assert len(f.equations) == 1 and [f.equations[0][j] for j in range(4)] == [1, 1, -1, -1]
    f = f2_subspace(loop2())
    assert (f.dim_f2, f.dim_hh1) == (1, 1)
    f = f2_subspace(kr2())
    assert (f.dim_f2, f.dim_hh1) == (4, 3)


def test_f2_vectors_annihilate_generators(named):
    _, p = named
    f = f2_subspace(p)
    for vec in f.vectors:
        for g in ideal_generators(p):
            total = p.zero()
            for op, c in f.operator(vec).items():
                total = total + apply(p, op, g).scale(c)
            assert total.is_zero()


def test_f2_caveat_over_prime_field():
    assert f2_subspace(sq(FieldSpec(5))).caveat
    assert f2_subspace(sq()).caveat is None


def test_truncated_basis():
    _, B2 = truncated_diff_basis(loop2())
    assert [str(o) for o in B2] == ["D[x -> x]"]
    assert len(truncated_diff_basis(kr2())[1]) == 4
    p = a2()
    _, B2 = truncated_diff_basis(p)
    assert len(B2) == 1 and f2_subspace(p).dim_hh1 == 0
    with pytest.raises(HypothesisError):
        truncated_diff_basis(sq())
    with pytest.raises(HypothesisError):
        truncated_diff_basis(loop2(FieldSpec(2)))


def test_loop_characteristic_two():
    # 2x vanishes, so D[x -> e_v] survives
    f = f2_subspace(loop2(FieldSpec(2)))
    assert f.dim_f2 == 2


def test_random_validation_agrees_with_oracle_rows():
    from quiverhh.oracle import constraint_system

    rng = random.Random(5)
    p = kr2()
    cs = constraint_system(p)
    for _ in range(30):
        vec = [rng.choice([0, 0, 1, -1]) for _ in range(cs.n_unknowns)]
        d0, d1 = cs.unpack(vec)
        res = extend_derivation(p, DerivationValues(d0, d1))
        assert isinstance(res, Violation) != cs.satisfied_by(vec)
