"""Combinatorial plane embeddings and the planar H^1 / HH^1 bases.

An embedding is a rotation system: at each vertex, the counterclockwise
cyclic order of the darts leaving it.  Faces are traced with
``next(d) = successor of reverse(d)`` at the end vertex of ``d``, which keeps
the face on the right, so bounded faces are walked clockwise.  A forward
dart (arrow traversed tail to head) then contributes ``+D[a -> a]`` to the
face operator and a reverse dart ``-D[a -> a]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Mapping, Sequence

from .algebra import QuotientPresentation
from .derivations import (
    ArrowType,
    Face,
    HypothesisError,
    b2_operators,
    f2_subspace,
    standard_basis,
)
from .quiver import Quiver, is_acyclic_quiver


class EmbeddingError(ValueError):
    """Malformed rotation system or face set."""


class NotPlanarError(EmbeddingError):
    """The rotation system describes a surface of positive genus."""


class Direction(Enum):
    FORWARD = "+"
    REVERSE = "-"


@dataclass(frozen=True)
class Dart:
    arrow: str
    direction: Direction = Direction.FORWARD

    @classmethod
    def parse(cls, token: str) -> "Dart":
        if len(token) < 2 or token[-1] not in "+-":
            raise EmbeddingError(f"dart must look like 'a+' or 'a-', got {token!r}")
        return cls(token[:-1], Direction(token[-1]))

    @property
    def sign(self) -> int:
        return 1 if self.direction is Direction.FORWARD else -1

    def reverse(self) -> "Dart":
        d = Direction.REVERSE if self.direction is Direction.FORWARD else Direction.FORWARD
        return Dart(self.arrow, d)

    def origin(self, q: Quiver) -> str:
        a = q.arrow(self.arrow)
        return a.tail if self.direction is Direction.FORWARD else a.head

    def end(self, q: Quiver) -> str:
        a = q.arrow(self.arrow)
        return a.head if self.direction is Direction.FORWARD else a.tail

    def __str__(self):
        return f"{self.arrow}{self.direction.value}"


@dataclass(frozen=True)
class RotationSystem:
    """Counterclockwise dart order around each vertex."""

    order: Mapping[str, tuple[Dart, ...]]

    @classmethod
    def from_strings(cls, spec: Mapping[str, Sequence[str]]) -> "RotationSystem":
        return cls({v: tuple(Dart.parse(t) for t in darts) for v, darts in spec.items()})

    def validate(self, q: Quiver) -> None:
        seen: set[Dart] = set()
        for v, darts in self.order.items():
            if v not in q.vertices:
                raise EmbeddingError(f"rotation at unknown vertex {v!r}")
            for d in darts:
                if not q.has_arrow(d.arrow):
                    raise EmbeddingError(f"dart {d} names an unknown arrow")
                if d in seen:
                    raise EmbeddingError(f"dart {d} listed twice")
                if d.origin(q) != v:
                    raise EmbeddingError(f"dart {d} does not leave vertex {v}")
                seen.add(d)
        for a in q.arrows:
            for d in (Dart(a.id), Dart(a.id, Direction.REVERSE)):
                if d not in seen:
                    raise EmbeddingError(f"dart {d} missing from the rotation at {d.origin(q)}")


@dataclass(frozen=True)
class FaceSet:
    quiver: Quiver
    faces: tuple[tuple[Dart, ...], ...]
    outer_face_index: int

    @property
    def incidences(self) -> list[dict[str, int]]:
        """Net signed arrow count per face."""
        out = []
        for face in self.faces:
            net: dict[str, int] = {}
            for d in face:
                net[d.arrow] = net.get(d.arrow, 0) + d.sign
            out.append(net)
        return out

    @property
    def euler_characteristic(self) -> int:
        return len(self.quiver.vertices) - len(self.quiver.arrows) + len(self.faces)

    def bounded_indices(self) -> list[int]:
        return [i for i in range(len(self.faces)) if i != self.outer_face_index]

    def face_of(self, dart: Dart) -> int:
        for i, face in enumerate(self.faces):
            if dart in face:
                return i
        raise EmbeddingError(f"dart {dart} lies on no face")


def trace_faces(q: Quiver, rot: RotationSystem) -> list[tuple[Dart, ...]]:
    rot.validate(q)
    succ: dict[Dart, Dart] = {}
    for darts in rot.order.values():
        for i, d in enumerate(darts):
            succ[d] = darts[(i + 1) % len(darts)]
    faces = []
    visited: set[Dart] = set()
    for a in q.arrows:
        for start in (Dart(a.id), Dart(a.id, Direction.REVERSE)):
            if start in visited:
                continue
            face = []
            d = start
            while d not in visited:
                visited.add(d)
                face.append(d)
                d = succ[d.reverse()]
            faces.append(tuple(face))
    if not q.arrows:
        faces.append(())
    return faces


def build_embedding(q: Quiver, rot: RotationSystem, outer_dart: Dart | None = None) -> FaceSet:
    faces = trace_faces(q, rot)
    chi = len(q.vertices) - len(q.arrows) + len(faces)
    if chi != 2:
        raise NotPlanarError(
            f"|V| - |E| + |F| = {chi}, not 2: the rotation system is not a plane embedding"
        )
    if outer_dart is None:
        if q.arrows:
            raise EmbeddingError("an outer dart is required")
        outer = 0
    else:
        if not q.has_arrow(outer_dart.arrow):
            raise EmbeddingError(f"outer dart {outer_dart} names an unknown arrow")
        outer = next(i for i, f in enumerate(faces) if outer_dart in f)
    return FaceSet(q, tuple(faces), outer)


def face_operator(fs: FaceSet, i: int) -> Face:
    return Face(i, tuple((d.arrow, d.sign) for d in fs.faces[i]))


def face_operators(p: QuotientPresentation, fs: FaceSet) -> list[Face]:
    """One operator per bounded face."""
    if fs.quiver != p.quiver:
        raise EmbeddingError("face set and presentation use different quivers")
    return [face_operator(fs, i) for i in fs.bounded_indices()]


def _planar_preconditions(p: QuotientPresentation, fs: FaceSet) -> None:
    if p.field.characteristic() != 0:
        raise HypothesisError("planar bases require characteristic 0")
    if not p.is_acyclic_algebra:
        raise HypothesisError("algebra is not acyclic (Q_C has a non-vertex class)")
    if fs.quiver != p.quiver:
        raise EmbeddingError("face set and presentation use different quivers")
    if fs.euler_characteristic != 2:
        raise NotPlanarError("Euler count of the face set is not 2")


def h1_basis_planar(p: QuotientPresentation, fs: FaceSet) -> list[ArrowType | Face]:
    """Non-arrow B2 operators plus one face operator per bounded face."""
    _planar_preconditions(p, fs)
    out: list[ArrowType | Face] = [op for op in b2_operators(p) if op.s.arrows != (op.r,)]
    out.extend(face_operators(p, fs))
    expected = standard_basis(p).dim_h1
    if len(out) != expected:
        raise RuntimeError(f"planar basis has {len(out)} elements, dimension is {expected}")
    return out


def hh1_basis_planar(p: QuotientPresentation, fs: FaceSet) -> list[ArrowType | Face]:
    """Planar HH^1 basis for acyclic complete monomial or acyclic truncated algebras."""
    _planar_preconditions(p, fs)
    if p.is_monomial() and is_acyclic_quiver(p.quiver) and p.is_complete_monomial():
        ops = b2_operators(p)
    elif p.is_truncated() is not None:
        ops = [op for op in b2_operators(p) if not op.s.is_trivial]
    else:
        reason = "not monomial" if not p.is_monomial() else "neither complete monomial nor truncated"
        raise HypothesisError(f"no planar HH1 basis: {reason}")
    out: list[ArrowType | Face] = [op for op in ops if op.s.arrows != (op.r,)]
    out.extend(face_operators(p, fs))
    expected = f2_subspace(p).dim_hh1
    if len(out) != expected:
        raise RuntimeError(f"planar basis has {len(out)} elements, dimension is {expected}")
    return out
