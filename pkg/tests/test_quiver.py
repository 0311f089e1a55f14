import itertools

import pytest

from quiverhh.fixtures import square_quiver
from quiverhh.quiver import (
    Path,
    Quiver,
    QuiverError,
    compose,
    enumerate_paths,
    has_walk_of_length_at_least,
    is_acyclic_quiver,
    parallel,
)

SQ = square_quiver()
A2 = Quiver(["v1", "v2"], [("a", "v1", "v2")])
LOOP = Quiver(["v"], [("x", "v", "v")])
KR = Quiver(["v1", "v2"], [("a", "v1", "v2"), ("b", "v1", "v2")])


def test_compose():
    assert compose(SQ.path("a1"), SQ.path("a2")) == SQ.path("a1", "a2")
    assert compose(SQ.path("a1"), SQ.path("b2")) is None
    assert compose(A2.trivial("v1"), A2.path("a")) == A2.path("a")
    assert compose(A2.path("a"), A2.trivial("v2")) == A2.path("a")
    assert compose(A2.trivial("v1"), A2.trivial("v2")) is None


def test_path_validation():
    with pytest.raises(QuiverError, match="non-composable"):
        SQ.path("a1", "b2")
    with pytest.raises(QuiverError):
        SQ.path("zz")


def test_quiver_validation():
    with pytest.raises(QuiverError):
        Quiver([], [])
    with pytest.raises(QuiverError):
        Quiver(["a", "b"], [])
    with pytest.raises(QuiverError):
        Quiver(["a"], [("x", "a", "b")])
    with pytest.raises(QuiverError):
        Quiver(["a", "b"], [("x", "a", "b"), ("x", "b", "a")])


def test_enumerate_paths():
    assert enumerate_paths(A2, 1) == [A2.trivial("v1"), A2.trivial("v2"), A2.path("a")]
    sq2 = enumerate_paths(SQ, 2)
    assert len(sq2) == 10
    assert [p for p in sq2 if p.length == 2] == [SQ.path("a1", "a2"), SQ.path("b1", "b2")]
    assert [str(p) for p in enumerate_paths(LOOP, 3)] == ["e_v", "x", "x*x", "x*x*x"]


def test_enumerate_is_sorted_and_unique():
    paths = enumerate_paths(KR, 4)
    assert len(set(paths)) == len(paths)
    assert paths == sorted(paths, key=Path.sort_key)


def test_parallel():
    assert parallel(SQ.path("a1", "a2"), SQ.path("b1", "b2"))
    assert not parallel(SQ.path("a1"), SQ.path("b1"))
    for p in enumerate_paths(SQ, 2):
        assert parallel(p, p)


def test_acyclic():
    assert is_acyclic_quiver(SQ)
    assert not is_acyclic_quiver(LOOP)
    assert is_acyclic_quiver(KR)
    assert not is_acyclic_quiver(Quiver(["a", "b"], [("x", "a", "b"), ("y", "b", "a")]))


@pytest.mark.parametrize("q", [SQ, A2, LOOP, KR, Quiver(["a", "b"], [("x", "a", "b"), ("y", "b", "a")])])
def test_acyclic_matches_enumeration(q):
    has_cycle = any(p.length >= 1 and p.tail == p.head for p in enumerate_paths(q, len(q.vertices)))
    assert is_acyclic_quiver(q) == (not has_cycle)


def test_has_walk():
    assert has_walk_of_length_at_least(LOOP, "v", "v", 100)
    assert not has_walk_of_length_at_least(SQ, "s", "t", 3)
    assert has_walk_of_length_at_least(A2, "v1", "v2", 1)
    assert not has_walk_of_length_at_least(A2, "v1", "v2", 2)


def test_has_walk_matches_enumeration():
    q = Quiver(["a", "b", "c"], [("x", "a", "b"), ("y", "b", "c"), ("z", "c", "b")])
    paths = enumerate_paths(q, 12)
    for s, t in itertools.product(q.vertices, repeat=2):
        for length in range(0, 7):
            brute = any(p.tail == s and p.head == t and p.length >= length for p in paths)
            assert has_walk_of_length_at_least(q, s, t, length) == brute


def test_compose_associative_and_unital():
    paths = enumerate_paths(SQ, 2)
    for p in paths:
        assert compose(SQ.trivial(p.tail), p) == p == compose(p, SQ.trivial(p.head))
    for p, q, r in itertools.product(paths, repeat=3):
        pq, qr = compose(p, q), compose(q, r)
        left = compose(pq, r) if pq is not None else None
        right = compose(p, qr) if qr is not None else None
        assert left == right
