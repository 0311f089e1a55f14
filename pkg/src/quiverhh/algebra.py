"""Admissible quotients kQ/I of path algebras.

The ideal is always ``I = <relations> + R^N`` where ``R`` is the arrow ideal and
``N`` the user-supplied nilpotency bound, so kQ/I is spanned by the paths of
length < N and a basis is read off from the row echelon form of the ideal's
image in that span.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence

from .linalg import ExactMatrix, FieldSpec, echelon_sparse, nullspace_from_echelon, rref
from .quiver import (
    Path,
    Quiver,
    compose,
    enumerate_paths,
    has_walk_of_length_at_least,
    is_acyclic_quiver,
)


class NotAdmissibleError(ValueError):
    """The requested ideal is not contained in R^2, or N < 2."""


class _LinearCombination:
    """Finitely supported map from paths to nonzero scalars."""

    __slots__ = ("terms", "field")

    def __init__(self, field: FieldSpec, terms: Mapping[Path, object] | Iterable = ()):
        self.field = field
        acc: dict[Path, object] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for p, c in items:
            c = field.coerce(c)
            if p in acc:
                c = acc[p] + c
            if c == 0:
                acc.pop(p, None)
            else:
                acc[p] = c
        self.terms = acc

    def _new(self, terms):
        raise NotImplementedError

    def _check(self, other):
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")

    def __add__(self, other):
        self._check(other)
        return self._new(list(self.terms.items()) + list(other.terms.items()))

    def __sub__(self, other):
        self._check(other)
        return self._new(list(self.terms.items()) + [(p, -c) for p, c in other.terms.items()])

    def __neg__(self):
        return self._new({p: -c for p, c in self.terms.items()})

    def scale(self, c):
        c = self.field.coerce(c)
        return self._new({p: c * v for p, v in self.terms.items()})

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __iter__(self) -> Iterator[tuple[Path, object]]:
        return iter(sorted(self.terms.items(), key=lambda t: t[0].sort_key()))

    def __len__(self):
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, p: Path):
        return self.terms.get(p, self.field.zero)

    def support(self) -> list[Path]:
        return sorted(self.terms, key=Path.sort_key)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for p, c in self:
            if c == 1:
                parts.append(str(p))
            elif c == -1:
                parts.append(f"-{p}")
            else:
                parts.append(f"{c}*{p}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"{type(self).__name__}({self})"


class AlgebraElement(_LinearCombination):
    """Element of the path algebra kQ."""

    __slots__ = ("quiver",)

    def __init__(self, quiver: Quiver, field: FieldSpec, terms=()):
        self.quiver = quiver
        super().__init__(field, terms)

    def _new(self, terms):
        return AlgebraElement(self.quiver, self.field, terms)

    @classmethod
    def from_path(cls, quiver: Quiver, field: FieldSpec, p: Path, coeff=1) -> "AlgebraElement":
        return cls(quiver, field, {p: coeff})

    @classmethod
    def from_terms(cls, quiver: Quiver, field: FieldSpec, terms: Sequence[tuple[object, Sequence[str]]]):
        """Build from ``[(coeff, arrow ids), ...]``; a bare vertex id string gives a trivial path."""
        items = []
        for c, word in terms:
            p = quiver.trivial(word) if isinstance(word, str) else quiver.path(*word)
            items.append((p, c))
        return cls(quiver, field, items)

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            out = []
            for p, a in self.terms.items():
                for q, b in other.terms.items():
                    pq = compose(p, q)
                    if pq is not None:
                        out.append((pq, a * b))
            return self._new(out)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def truncate(self, n: int) -> "AlgebraElement":
        """Drop all support paths of length >= n."""
        return self._new({p: c for p, c in self.terms.items() if p.length < n})


@dataclass(frozen=True)
class IdealSpec:
    """Generators of the ideal plus the nilpotency bound N (``R^N`` is added)."""

    relations: tuple[AlgebraElement, ...] = ()
    nilpotency: int = 2

    def __post_init__(self):
        object.__setattr__(self, "relations", tuple(self.relations))
        if self.nilpotency < 2:
            raise NotAdmissibleError(f"nilpotency bound must be >= 2, got {self.nilpotency}")
        for g in self.relations:
            for p in g.terms:
                if p.length < 2:
                    raise NotAdmissibleError(f"relation term {p} is not in R^2")


class QuotientElement(_LinearCombination):
    """Element of kQ/I in coordinates over the chosen path basis."""

    __slots__ = ("presentation",)

    def __init__(self, presentation: "QuotientPresentation", terms=()):
        self.presentation = presentation
        super().__init__(presentation.field, terms)

    def _new(self, terms):
        return QuotientElement(self.presentation, terms)

    def __mul__(self, other):
        if isinstance(other, QuotientElement):
            return self.presentation.multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)


class QuotientPresentation:
    """The algebra kQ/(<relations> + R^N) with a fixed path basis.

    Build with :func:`build_presentation`; treat as immutable afterwards.
    """

    def __init__(self, quiver, field, ideal, all_paths, ideal_matrix, echelon, pivots):
        self.quiver: Quiver = quiver
        self.field: FieldSpec = field
        self.ideal: IdealSpec = ideal
        self.all_paths: tuple[Path, ...] = tuple(all_paths)
        self.ideal_matrix: ExactMatrix = ideal_matrix
        self.echelon: ExactMatrix = echelon
        self.pivots: tuple[int, ...] = tuple(pivots)
        pivot_set = set(self.pivots)
        self.basis: tuple[Path, ...] = tuple(
            p for i, p in enumerate(self.all_paths) if i not in pivot_set
        )
        self.index: dict[Path, int] = {p: i for i, p in enumerate(self.basis)}
        self.reduction: dict[Path, dict[Path, object]] = {}
        for r, c in enumerate(self.pivots):
            row = echelon.row(r)
            self.reduction[self.all_paths[c]] = {
                self.all_paths[j]: -v for j, v in enumerate(row) if v != 0 and j != c
            }
        self.Q_A: tuple[Path, ...] = tuple(p for p in self.basis if p.tail != p.head)
        self.Q_C: tuple[Path, ...] = tuple(p for p in self.basis if p.tail == p.head)
        self._reduce_cache: dict[Path, dict] = {}
        self._mul_cache: dict[tuple[Path, Path], dict] = {}

    @property
    def nilpotency(self) -> int:
        return self.ideal.nilpotency

    @property
    def relations(self) -> tuple[AlgebraElement, ...]:
        return self.ideal.relations

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def __repr__(self):
        return (
            f"QuotientPresentation(dim={self.dimension}, N={self.nilpotency}, "
            f"relations={len(self.relations)}, field={self.field})"
        )

    # -- elements ---------------------------------------------------------

    def zero(self) -> QuotientElement:
        return QuotientElement(self)

    def one(self) -> QuotientElement:
        return QuotientElement(self, {Path(v, v): 1 for v in self.quiver.vertices})

    def element(self, terms) -> QuotientElement:
        el = QuotientElement(self, terms)
        for p in el.terms:
            if p not in self.index:
                raise ValueError(f"{p} is not a basis path")
        return el

    def coordinates(self, x: QuotientElement) -> list:
        zero = self.field.zero
        v = [zero] * len(self.basis)
        for p, c in x.terms.items():
            v[self.index[p]] = c
        return v

    def from_coordinates(self, coords: Sequence) -> QuotientElement:
        return QuotientElement(self, zip(self.basis, coords))

    # -- reduction and multiplication ------------------------------------

    def reduce_path(self, p: Path) -> dict[Path, object]:
        """Coordinates of the residue class of ``p`` (shared dict; do not mutate)."""
        hit = self._reduce_cache.get(p)
        if hit is not None:
            return hit
        if p.length >= self.nilpotency:
            out = {}
        elif p in self.index:
            out = {p: self.field.one}
        else:
            out = self.reduction[p]
        self._reduce_cache[p] = out
        return out

    def reduce(self, e: AlgebraElement | Path) -> QuotientElement:
        if isinstance(e, Path):
            return QuotientElement(self, self.reduce_path(e))
        acc = []
        for p, c in e.terms.items():
            acc.extend((q, c * v) for q, v in self.reduce_path(p).items())
        return QuotientElement(self, acc)

    def _mul_basis(self, s: Path, t: Path) -> dict:
        key = (s, t)
        hit = self._mul_cache.get(key)
        if hit is None:
            st = compose(s, t)
            hit = {} if st is None else self.reduce_path(st)
            self._mul_cache[key] = hit
        return hit

    def multiply(self, x: QuotientElement, y: QuotientElement) -> QuotientElement:
        acc = []
        for s, a in x.terms.items():
            for t, b in y.terms.items():
                ab = a * b
                acc.extend((q, ab * v) for q, v in self._mul_basis(s, t).items())
        return QuotientElement(self, acc)

    # -- structure --------------------------------------------------------

    @cached_property
    def _center(self) -> tuple[QuotientElement, ...]:
        n = len(self.basis)
        rows = []
        for g in self.quiver.generators():
            # column j holds the commutator q_j*g - g*q_j
            block: dict[int, dict[int, object]] = {}
            for j, q in enumerate(self.basis):
                comm = QuotientElement(
                    self,
                    list(self._mul_basis(q, g).items())
                    + [(p, -c) for p, c in self._mul_basis(g, q).items()],
                )
                for p, c in comm.terms.items():
                    block.setdefault(self.index[p], {})[j] = c
            rows.extend(block.values())
        piv = echelon_sparse(rows, self.field)
        return tuple(self.from_coordinates(v) for v in nullspace_from_echelon(piv, n, self.field))

    def center(self) -> list[QuotientElement]:
        """Basis of the center: the common commutant of all vertices and arrows."""
        return list(self._center)

    def classify(self) -> tuple[tuple[Path, ...], tuple[Path, ...], bool]:
        acyclic = all(p.is_trivial for p in self.Q_C)
        return self.Q_A, self.Q_C, acyclic

    @property
    def is_acyclic_algebra(self) -> bool:
        return self.classify()[2]

    def is_monomial(self) -> bool:
        """Syntactic: every relation is a single scaled path."""
        return all(len(g.terms) <= 1 for g in self.relations)

    def path_in_ideal(self, p: Path) -> bool:
        return not self.reduce_path(p)

    def is_complete_monomial(self) -> bool:
        if not self.is_monomial():
            raise ValueError("completeness is only defined for monomial presentations")
        N = self.nilpotency
        groups: dict[tuple[str, str], list[bool]] = {}
        for p in self.all_paths:
            groups.setdefault((p.tail, p.head), []).append(self.path_in_ideal(p))
        for flags in groups.values():
            if any(flags) and not all(flags):
                return False
        # every path of length >= N lies in I, so a surviving path must have no such parallel
        for (t, h), flags in groups.items():
            if not all(flags) and has_walk_of_length_at_least(self.quiver, t, h, N):
                return False
        return True

    def is_truncated(self) -> int | None:
        return self.nilpotency if not self.relations else None

    def is_acyclic_quiver(self) -> bool:
        return is_acyclic_quiver(self.quiver)


def _spanning_rows(quiver, ideal, col) -> list[dict[int, object]]:
    N = ideal.nilpotency
    short = enumerate_paths(quiver, N - 2)
    rows, seen = [], set()
    for g in ideal.relations:
        for u in short:
            left = []
            for p, c in g.terms.items():
                up = compose(u, p)
                if up is not None and up.length < N:
                    left.append((up, c))
            if not left:
                continue
            for w in short:
                row: dict[int, object] = {}
                for p, c in left:
                    pw = compose(p, w)
                    if pw is None or pw.length >= N:
                        continue
                    j = col[pw]
                    v = row.get(j, 0) + c
                    if v == 0:
                        row.pop(j, None)
                    else:
                        row[j] = v
                if row:
                    key = tuple(sorted(row.items()))
                    if key not in seen:
                        seen.add(key)
                        rows.append(row)
    return rows


def build_presentation(quiver: Quiver, ideal: IdealSpec, field: FieldSpec | None = None) -> QuotientPresentation:
    """Basis of kQ/(<G> + R^N) by row-reducing the ideal's image below length N.

    Columns are ordered graded-lexicographically, so each pivot (leading) path is
    the smallest path of its echelon row; the non-pivot paths form the basis.
    """
    field = field or FieldSpec()
    for g in ideal.relations:
        if g.quiver != quiver:
            raise ValueError("relation lives on a different quiver")
        for p in g.terms:
            if p.length < 2:
                raise NotAdmissibleError(f"relation term {p} is not in R^2")
    relations = tuple(AlgebraElement(quiver, field, g.terms) for g in ideal.relations)
    ideal = IdealSpec(relations, ideal.nilpotency)
    all_paths = enumerate_paths(quiver, ideal.nilpotency - 1)
    col = {p: i for i, p in enumerate(all_paths)}
    rows = _spanning_rows(quiver, ideal, col)
    zero = field.zero
    dense = []
    for r in rows:
        d = [zero] * len(all_paths)
        for j, v in r.items():
            d[j] = v
        dense.append(d)
    m = ExactMatrix.from_rows(dense, field, cols=len(all_paths))
    echelon, pivots = rref(m)
    return QuotientPresentation(quiver, field, ideal, all_paths, m, echelon, pivots)


def presentation(
    quiver: Quiver,
    relations: Sequence[Sequence[tuple[object, Sequence[str]]]] = (),
    nilpotency: int = 2,
    field: FieldSpec | None = None,
) -> QuotientPresentation:
    """Shorthand: relations given as ``[(coeff, arrow ids), ...]`` lists."""
    field = field or FieldSpec()
    rels = tuple(AlgebraElement.from_terms(quiver, field, r) for r in relations)
    return build_presentation(quiver, IdealSpec(rels, nilpotency), field)
