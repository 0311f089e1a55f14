"""Small named algebras used throughout the tests and demos.

``SQ``     the commutative square  s -> u -> t, s -> d -> t  with a1*a2 = b1*b2, N = 3
``A2``     one arrow v1 -> v2, N = 2
``LOOP2``  one loop x at v, N = 2 (the algebra k[x]/x^2)
``KR2``    two parallel arrows v1 -> v2, N = 2
"""

from __future__ import annotations

from .algebra import QuotientPresentation, presentation
from .linalg import FieldSpec
from .planar import Dart, FaceSet, RotationSystem, build_embedding
from .quiver import Quiver


def square_quiver() -> Quiver:
    return Quiver(
        ["s", "u", "d", "t"],
        [("a1", "s", "u"), ("a2", "u", "t"), ("b1", "s", "d"), ("b2", "d", "t")],
    )


def sq(field: FieldSpec | None = None) -> QuotientPresentation:
    return presentation(
        square_quiver(), [[(1, ("a1", "a2")), (-1, ("b1", "b2"))]], nilpotency=3, field=field
    )


def a2(field: FieldSpec | None = None) -> QuotientPresentation:
    return presentation(Quiver(["v1", "v2"], [("a", "v1", "v2")]), nilpotency=2, field=field)


def loop2(field: FieldSpec | None = None) -> QuotientPresentation:
    return presentation(Quiver(["v"], [("x", "v", "v")]), nilpotency=2, field=field)


def kr2(field: FieldSpec | None = None) -> QuotientPresentation:
    return presentation(
        Quiver(["v1", "v2"], [("a", "v1", "v2"), ("b", "v1", "v2")]), nilpotency=2, field=field
    )


FIXTURES = {"SQ": sq, "A2": a2, "LOOP2": loop2, "KR2": kr2}

ROTATIONS = {
    "SQ": ({"s": ["a1+", "b1+"], "u": ["a2+", "a1-"], "t": ["a2-", "b2-"], "d": ["b2+", "b1-"]}, "a1+"),
    "A2": ({"v1": ["a+"], "v2": ["a-"]}, "a+"),
    "LOOP2": ({"v": ["x+", "x-"]}, "x-"),
    "KR2": ({"v1": ["a+", "b+"], "v2": ["a-", "b-"]}, "b+"),
}


def embedding(name: str, p: QuotientPresentation | None = None) -> FaceSet:
    """The plane embedding stored for a named fixture."""
    p = p or FIXTURES[name]()
    rot, outer = ROTATIONS[name]
    return build_embedding(p.quiver, RotationSystem.from_strings(rot), Dart.parse(outer))
