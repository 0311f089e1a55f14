"""Derivations from kQ into kQ/I and the first Hochschild cohomology.

A derivation D: kQ -> kQ/I is fixed by its values on vertices and arrows.
The standard basis consists of

* inner derivations ``Inner(s)``: x -> s*x - x*s for basis paths s with
  distinct endpoints, and
* arrow-type derivations ``ArrowType(r, s)``: r -> s, every other vertex
  and arrow -> 0, for an arrow r and a basis path s parallel to it.

From the basis one gets dim H^1(kQ, kQ/I) = |B2| + dim Z - |Q_C|, and
dim HH^1(kQ/I) = dim F2 + dim Z - |Q_C| where F2 is the subspace of
span(B2) killing the ideal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .algebra import AlgebraElement, QuotientElement, QuotientPresentation
from .linalg import ExactMatrix, echelon_sparse, nullspace_from_echelon, sparse_rank
from .quiver import Path, compose, enumerate_paths, parallel


class HypothesisError(ValueError):
    """A theorem's hypotheses do not hold for this presentation."""


class OperatorError(ValueError):
    """Operator does not belong to the presentation it is applied in."""


@dataclass(frozen=True)
class Inner:
    s: Path

    def __str__(self):
        return f"D[{self.s}]"


@dataclass(frozen=True)
class ArrowType:
    r: str
    s: Path

    def __str__(self):
        return f"D[{self.r} -> {self.s}]"


@dataclass(frozen=True)
class Vertex:
    v: str

    def __str__(self):
        return f"D[e_{self.v}]"


@dataclass(frozen=True)
class Face:
    """Signed sum of arrow operators D[p -> p] along one face boundary.

    ``boundary`` lists ``(arrow id, +1 | -1)`` per traversed dart;
    ``coefficients`` is the net coefficient per arrow (zeros dropped).
    """

    index: int
    boundary: tuple[tuple[str, int], ...]

    @property
    def coefficients(self) -> dict[str, int]:
        net: dict[str, int] = {}
        for a, sign in self.boundary:
            net[a] = net.get(a, 0) + sign
        return {a: c for a, c in net.items() if c}

    def __str__(self):
        terms = " ".join(f"{'+' if c > 0 else '-'}{abs(c) if abs(c) != 1 else ''}{a}"
                         for a, c in self.coefficients.items())
        return f"D_face{self.index}[{terms or '0'}]"


BasisOperator = Union[Inner, ArrowType, Vertex, Face]


@dataclass
class DerivationValues:
    """Values of a candidate derivation on vertices (``D0``) and arrows (``D1``)."""

    D0: dict[str, QuotientElement]
    D1: dict[str, QuotientElement]


@dataclass
class DerivationSpaceSummary:
    B1: list[Inner]
    B2: list[ArrowType]
    dim_diff: int
    dim_inner: int
    dim_center: int
    dim_h1: int
    q_c: int


@dataclass
class F2Subspace:
    columns: list[ArrowType]
    vectors: list[list]
    equations: list[dict[int, object]]
    dim_f2: int
    dim_center: int
    dim_hh1: int
    characteristic: int = 0

    @property
    def caveat(self) -> str | None:
        if self.characteristic:
            return f"dimension formula evaluated over F_{self.characteristic}; stated in characteristic 0"
        return None

    def operator(self, vector: Sequence) -> dict[ArrowType, object]:
        return {op: c for op, c in zip(self.columns, vector) if c != 0}


# -- operator expansion -------------------------------------------------


def vertex_operator(p: QuotientPresentation, v: str) -> tuple[int, ...]:
    """Coordinates of D[e_v] over the arrow operators D[a -> a], in arrow order."""
    if v not in p.quiver.vertices:
        raise OperatorError(f"unknown vertex {v!r}")
    return tuple(int(a.tail == v) - int(a.head == v) for a in p.quiver.arrows)


def arrow_coefficients(p: QuotientPresentation, op: BasisOperator) -> dict[tuple[str, Path], int]:
    """Expansion of a vertex or face operator as ``{(arrow, arrow path): coeff}``."""
    if isinstance(op, Vertex):
        coeffs = dict(zip((a.id for a in p.quiver.arrows), vertex_operator(p, op.v)))
    elif isinstance(op, Face):
        coeffs = op.coefficients
    else:
        raise OperatorError(f"{op} is not a combination of arrow operators")
    return {(a, p.quiver.arrow_path(a)): c for a, c in coeffs.items() if c}


def expand_arrow_operator(p: QuotientPresentation, r: str, s: Path) -> dict[ArrowType, object]:
    """Rewrite D[r -> s] for an arbitrary parallel path s over basis targets."""
    return {ArrowType(r, b): c for b, c in p.reduce_path(s).items()}


def _check_arrow_type(p: QuotientPresentation, op: ArrowType) -> None:
    if not p.quiver.has_arrow(op.r):
        raise OperatorError(f"unknown arrow {op.r!r}")
    if not parallel(p.quiver.arrow_path(op.r), op.s):
        raise OperatorError(f"{op.s} is not parallel to {op.r}")


def _apply_arrow_type(p: QuotientPresentation, r: str, s: Path, x: Path) -> list[tuple[Path, object]]:
    out = []
    for i, a in enumerate(x.arrows):
        if a == r:
            w = Path(x.tail, x.head, x.arrows[:i] + s.arrows + x.arrows[i + 1:])
            out.extend(p.reduce_path(w).items())
    return out


def apply(p: QuotientPresentation, op: BasisOperator, x: Path | AlgebraElement) -> QuotientElement:
    """Value of the derivation ``op`` on a path or path-algebra element."""
    if isinstance(x, AlgebraElement):
        acc = []
        for path, c in x.terms.items():
            acc.extend((q, c * v) for q, v in apply(p, op, path).terms.items())
        return QuotientElement(p, acc)
    if isinstance(op, Inner):
        sx, xs = compose(op.s, x), compose(x, op.s)
        acc = []
        if sx is not None:
            acc.extend(p.reduce_path(sx).items())
        if xs is not None:
            acc.extend((q, -c) for q, c in p.reduce_path(xs).items())
        return QuotientElement(p, acc)
    if isinstance(op, ArrowType):
        _check_arrow_type(p, op)
        return QuotientElement(p, _apply_arrow_type(p, op.r, op.s, x))
    if isinstance(op, (Vertex, Face)):
        acc = []
        for (a, s), c in arrow_coefficients(p, op).items():
            acc.extend((q, c * v) for q, v in _apply_arrow_type(p, a, s, x))
        return QuotientElement(p, acc)
    raise OperatorError(f"not an operator: {op!r}")


def values(p: QuotientPresentation, op: BasisOperator) -> DerivationValues:
    q = p.quiver
    return DerivationValues(
        {v: apply(p, op, q.trivial(v)) for v in q.vertices},
        {a.id: apply(p, op, q.arrow_path(a.id)) for a in q.arrows},
    )


def evaluation_matrix(p: QuotientPresentation, ops: Sequence[BasisOperator]) -> ExactMatrix:
    """One row per operator: its values on every vertex and arrow, over the basis."""
    gens = p.quiver.generators()
    rows = []
    for op in ops:
        row = []
        for g in gens:
            row.extend(p.coordinates(apply(p, op, g)))
        rows.append(row)
    return ExactMatrix.from_rows(rows, p.field, cols=len(gens) * p.dimension)


# -- the standard basis -------------------------------------------------


def b2_operators(p: QuotientPresentation) -> list[ArrowType]:
    return [
        ArrowType(a.id, s)
        for a in p.quiver.arrows
        for s in p.basis
        if s.tail == a.tail and s.head == a.head
    ]


def standard_basis(p: QuotientPresentation) -> DerivationSpaceSummary:
    B1 = [Inner(s) for s in p.Q_A]
    B2 = b2_operators(p)
    dim_z = len(p.center())
    return DerivationSpaceSummary(
        B1=B1,
        B2=B2,
        dim_diff=len(B1) + len(B2),
        dim_inner=p.dimension - dim_z,
        dim_center=dim_z,
        dim_h1=len(B2) + dim_z - len(p.Q_C),
        q_c=len(p.Q_C),
    )


# -- validating raw derivation data -------------------------------------


@dataclass
class Violation:
    """First failing constraint; ``constraint`` is one of
    ``vertex-shape``, ``endpoint-balance`` or ``arrow-shape``."""

    constraint: str
    witness: str

    def __str__(self):
        return f"{self.constraint} violated: {self.witness}"


class Derivation:
    """Leibniz extension of validated vertex/arrow data to all of kQ."""

    def __init__(self, p: QuotientPresentation, dv: DerivationValues):
        self.presentation = p
        self.values = dv

    def __call__(self, x: Path | AlgebraElement) -> QuotientElement:
        p = self.presentation
        if isinstance(x, AlgebraElement):
            acc = p.zero()
            for path, c in x.terms.items():
                acc = acc + self(path).scale(c)
            return acc
        if x.is_trivial:
            return self.values.D0[x.tail]
        acc = p.zero()
        n = x.length
        for i, a in enumerate(x.arrows):
            term = self.values.D1[a]
            if i > 0:
                term = p.reduce(Path(x.tail, p.quiver.arrow(x.arrows[i - 1]).head, x.arrows[:i])) * term
            if i < n - 1:
                term = term * p.reduce(Path(p.quiver.arrow(x.arrows[i + 1]).tail, x.head, x.arrows[i + 1:]))
            acc = acc + term
        return acc

    def coordinates(self) -> list:
        out = []
        p = self.presentation
        for g in p.quiver.generators():
            out.extend(p.coordinates(self(g)))
        return out


def extend_derivation(p: QuotientPresentation, dv: DerivationValues) -> Derivation | Violation:
    """Validate vertex/arrow data and extend it, or report the first failing constraint.

    Checked in order: each D(v) only involves basis paths with exactly one
    endpoint at v; for each basis path q with distinct endpoints, its
    coefficients in D(tail q) and D(head q) cancel; each D(a) differs from
    D(tail a)*a + a*D(head a) only by paths parallel to a.
    """
    q = p.quiver
    missing = [v for v in q.vertices if v not in dv.D0] + [a.id for a in q.arrows if a.id not in dv.D1]
    if missing:
        raise ValueError(f"derivation data missing for {missing}")
    for v in q.vertices:
        for s in dv.D0[v].terms:
            if s.tail == s.head or v not in (s.tail, s.head):
                return Violation("vertex-shape", f"D(e_{v}) has a component on {s}")
    for s in p.Q_A:
        c = dv.D0[s.tail].coefficient(s) + dv.D0[s.head].coefficient(s)
        if c != 0:
            return Violation(
                "endpoint-balance",
                f"coefficients of {s} in D(e_{s.tail}) and D(e_{s.head}) sum to {c}",
            )
    for a in q.arrows:
        abar = p.reduce(q.arrow_path(a.id))
        residual = dv.D1[a.id] - dv.D0[a.tail] * abar - abar * dv.D0[a.head]
        for s in residual.terms:
            if not (s.tail == a.tail and s.head == a.head):
                return Violation("arrow-shape", f"D({a.id}) has a non-parallel component on {s}")
    return Derivation(p, dv)


# -- cycles -------------------------------------------------------------


def cycle_identity_terms(p: QuotientPresentation, cycle: Path) -> list[tuple[int, ArrowType]]:
    """Arrow-type expansion of the inner derivation of a cycle at v.

    Outgoing arrows r from v contribute +D[r -> cycle*r], incoming ones
    -D[r -> r*cycle].  Targets need not be basis paths.
    """
    v0 = cycle.tail
    q = p.quiver
    terms = []
    for r in q.outgoing(v0):
        terms.append((1, ArrowType(r.id, compose(cycle, q.arrow_path(r.id)))))
    for r in q.incoming(v0):
        terms.append((-1, ArrowType(r.id, compose(q.arrow_path(r.id), cycle))))
    return terms


def cycle_identity_check(p: QuotientPresentation, cycle: Path) -> bool:
    if cycle.tail != cycle.head:
        raise ValueError(f"{cycle} is not a cycle")
    if cycle.length >= p.nilpotency:
        raise ValueError(f"{cycle} has length >= N")
    terms = cycle_identity_terms(p, cycle)
    for g in p.quiver.generators():
        lhs = apply(p, Inner(cycle), g)
        rhs = p.zero()
        for c, op in terms:
            rhs = rhs + apply(p, op, g).scale(c)
        if lhs != rhs:
            return False
    return True


# -- derivations of the quotient ----------------------------------------


def ideal_generators(p: QuotientPresentation) -> list[AlgebraElement]:
    """The relations plus every path of length exactly N."""
    N = p.nilpotency
    q = p.quiver
    gens = list(p.relations)
    gens.extend(
        AlgebraElement.from_path(q, p.field, path)
        for path in enumerate_paths(q, N)
        if path.length == N
    )
    return gens


def f2_subspace(p: QuotientPresentation) -> F2Subspace:
    """Combinations of arrow-type operators vanishing on the ideal.

    A derivation kills I iff it kills a generating set, since
    D(u g w) = u D(g) w modulo I.
    """
    cols = b2_operators(p)
    by_arrow: dict[str, list[int]] = {}
    for j, op in enumerate(cols):
        by_arrow.setdefault(op.r, []).append(j)
    rows = []
    for g in ideal_generators(p):
        arrows_in_g = {a for path in g.terms for a in path.arrows}
        block: dict[int, dict[int, object]] = {}
        for a in arrows_in_g:
            for j in by_arrow.get(a, ()):
                img = apply(p, cols[j], g)
                for s, c in img.terms.items():
                    block.setdefault(p.index[s], {})[j] = c
        rows.extend(block.values())
    piv = echelon_sparse(rows, p.field)
    vectors = nullspace_from_echelon(piv, len(cols), p.field)
    dim_z = len(p.center())
    return F2Subspace(
        columns=cols,
        vectors=vectors,
        equations=[piv[c] for c in sorted(piv)],
        dim_f2=len(vectors),
        dim_center=dim_z,
        dim_hh1=len(vectors) + dim_z - len(p.Q_C),
        characteristic=p.field.characteristic(),
    )


def truncated_diff_basis(p: QuotientPresentation) -> tuple[list[Inner], list[ArrowType]]:
    """Derivation basis of a truncated algebra kQ/R^n in characteristic 0.

    The arrow-type part keeps every D[r -> s] with s not a vertex; the result
    is cross-checked against the vanishing system of :func:`f2_subspace`.
    """
    if p.is_truncated() is None:
        raise HypothesisError("presentation has relations; not a truncated quiver algebra")
    if p.field.characteristic() != 0:
        raise HypothesisError("truncated basis requires characteristic 0")
    B1 = [Inner(s) for s in p.Q_A]
    cols = b2_operators(p)
    keep = [j for j, op in enumerate(cols) if not op.s.is_trivial]
    f2 = f2_subspace(p)
    one, zero = p.field.one, p.field.zero
    expected = [[one if i == j else zero for i in range(len(cols))] for j in keep]
    if f2.vectors != expected:
        raise RuntimeError("vanishing system disagrees with the truncated basis")
    return B1, [cols[j] for j in keep]


def span_rank(p: QuotientPresentation, ops: Sequence[BasisOperator]) -> int:
    """Rank of a family of operators, via their values on vertices and arrows."""
    m = evaluation_matrix(p, ops)
    return sparse_rank(m.sparse_rows(), p.field)
