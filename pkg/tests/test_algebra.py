import itertools

import pytest

from quiverhh.algebra import AlgebraElement, IdealSpec, NotAdmissibleError, build_presentation, presentation
from quiverhh.fixtures import a2, kr2, loop2, sq, square_quiver
from quiverhh.linalg import FieldSpec
from quiverhh.quiver import Quiver, enumerate_paths


def test_sq_presentation():
    p = sq()
    q = p.quiver
    assert p.dimension == 9
    assert q.path("b1", "b2") in p.basis and q.path("a1", "a2") not in p.basis
    assert p.reduce(q.path("a1", "a2")) == p.reduce(q.path("b1", "b2"))
    assert len(p.all_paths) - len(p.pivots) == 9


def test_small_presentations():
    assert [str(s) for s in a2().basis] == ["e_v1", "e_v2", "a"]
    p = loop2()
    assert [str(s) for s in p.basis] == ["e_v", "x"]
    assert p.reduce(p.quiver.path("x", "x")).is_zero()


def test_vertices_and_arrows_in_basis(named):
    _, p = named
    for g in p.quiver.generators():
        assert g in p.basis
    assert set(p.Q_A) | set(p.Q_C) == set(p.basis)
    assert not set(p.Q_A) & set(p.Q_C)


def test_multiply():
    p = sq()
    q = p.quiver
    a1, a2_ = p.reduce(q.path("a1")), p.reduce(q.path("a2"))
    assert a1 * a2_ == p.reduce(q.path("b1", "b2"))
    one = p.one()
    for s in p.basis:
        x = p.reduce(s)
        assert one * x == x == x * one
    lp = loop2()
    x = lp.reduce(lp.quiver.path("x"))
    assert (x * x).is_zero()


def test_reduce_identity_on_basis(named):
    _, p = named
    for s in p.basis:
        assert p.reduce_path(s) == {s: 1}


def test_reduce_is_homomorphism(named):
    _, p = named
    paths = enumerate_paths(p.quiver, p.nilpotency - 1)
    for u, v in itertools.product(paths, repeat=2):
        eu = AlgebraElement.from_path(p.quiver, p.field, u)
        ev = AlgebraElement.from_path(p.quiver, p.field, v)
        assert p.reduce(eu * ev) == p.reduce(eu) * p.reduce(ev)


def test_center_dimensions():
    assert len(sq().center()) == 1
    assert len(loop2().center()) == 2
    assert len(a2().center()) == 1
    assert len(kr2().center()) == 1


def test_center_commutes_with_basis(named):
    _, p = named
    for z in p.center():
        for s in p.basis:
            x = p.reduce(s)
            assert z * x == x * z


def test_classify():
    Q_A, Q_C, acyclic = sq().classify()
    assert (len(Q_A), len(Q_C), acyclic) == (5, 4, True)
    _, Q_C, acyclic = loop2().classify()
    assert [str(s) for s in Q_C] == ["e_v", "x"] and not acyclic
    assert a2().is_acyclic_algebra


def test_class_predicates():
    assert not sq().is_monomial()
    assert loop2().is_monomial() and a2().is_monomial()
    assert not loop2().is_complete_monomial()
    assert a2().is_complete_monomial() and kr2().is_complete_monomial()
    with pytest.raises(ValueError):
        sq().is_complete_monomial()
    assert loop2().is_truncated() == 2 and kr2().is_truncated() == 2
    assert sq().is_truncated() is None


def test_complete_monomial_detects_mixed_parallels():
    q = square_quiver()
    p = presentation(q, [[(1, ("a1", "a2"))]], nilpotency=3)
    assert p.is_monomial() and not p.is_complete_monomial()
    both = presentation(q, [[(1, ("a1", "a2"))], [(1, ("b1", "b2"))]], nilpotency=3)
    assert both.is_complete_monomial()


def test_rejects_non_admissible():
    q = square_quiver()
    with pytest.raises(NotAdmissibleError):
        presentation(q, [[(1, ("a1",))]], nilpotency=3)
    with pytest.raises(ValueError):
        IdealSpec((), 1)


def test_prime_field_presentation():
    p = sq(FieldSpec(3))
    assert p.dimension == 9 and len(p.center()) == 1


def test_non_homogeneous_relation():
    q = Quiver(["v"], [("x", "v", "v")])
    p = presentation(q, [[(1, ("x", "x")), (-1, ("x", "x", "x"))]], nilpotency=4)
    # x^2 = x^3 = x^4 = 0 after truncation
    assert [str(s) for s in p.basis] == ["e_v", "x"]
    assert build_presentation(q, IdealSpec((), 4)).dimension == 4
