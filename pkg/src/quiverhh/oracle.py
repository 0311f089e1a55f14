"""Brute-force derivation spaces, straight from the Leibniz constraints.

Nothing here uses the standard basis.  The unknowns are the coordinates of
D(v) and D(a) over the quotient basis, for every vertex v and arrow a; the
rows are the four families of identities a derivation must satisfy on
products of vertices and arrows:

* D(x)x + xD(x) = D(x)                for a vertex x,
* D(x)y + xD(y) = 0                   for distinct vertices x, y,
* D(x)q + xD(q) = D(q)                for an arrow q with tail x,
* D(q)y + qD(y) = D(q)                for an arrow q with head y,

optionally followed by D(g) = 0 for every ideal generator g, expanded with
the product rule.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from typing import Iterator, Sequence

from .algebra import AlgebraElement, IdealSpec, QuotientElement, QuotientPresentation, build_presentation
from .linalg import FieldSpec, echelon_sparse, nullspace_from_echelon, sparse_rank
from .quiver import Path, Quiver, compose, enumerate_paths, parallel

log = logging.getLogger(__name__)


@dataclass
class ConstraintSystem:
    presentation: QuotientPresentation
    generators: list[Path]
    rows: list[dict[int, object]]

    @property
    def n_unknowns(self) -> int:
        return len(self.generators) * self.presentation.dimension

    def column(self, g: int, j: int) -> int:
        return g * self.presentation.dimension + j

    def solutions(self) -> list[list]:
        piv = echelon_sparse(self.rows, self.presentation.field)
        return nullspace_from_echelon(piv, self.n_unknowns, self.presentation.field)

    def nullity(self) -> int:
        return self.n_unknowns - sparse_rank(self.rows, self.presentation.field)

    def satisfied_by(self, vector: Sequence) -> bool:
        for row in self.rows:
            acc = 0
            for c, v in row.items():
                x = vector[c]
                if x != 0:
                    acc = v * x + acc
            if acc != 0:
                return False
        return True

    def unpack(self, vector: Sequence) -> tuple[dict[str, QuotientElement], dict[str, QuotientElement]]:
        """Split a solution vector into vertex values and arrow values."""
        p = self.presentation
        n = p.dimension
        d0, d1 = {}, {}
        for g, gen in enumerate(self.generators):
            el = p.from_coordinates(vector[g * n:(g + 1) * n])
            if gen.is_trivial:
                d0[gen.tail] = el
            else:
                d1[gen.arrows[0]] = el
        return d0, d1


class _RowBuilder:
    def __init__(self, p: QuotientPresentation, generators: list[Path]):
        self.p = p
        self.gen_index = {g: i for i, g in enumerate(generators)}
        self.n = p.dimension

    def term(self, eq: dict, coeff, gen: Path, left: Path | None = None, right: Path | None = None):
        """Add ``coeff * left * D(gen) * right`` to the equation ``eq``."""
        base = self.gen_index[gen] * self.n
        for j, q in enumerate(self.p.basis):
            w = q
            if left is not None:
                w = compose(left, w)
                if w is None:
                    continue
            if right is not None:
                w = compose(w, right)
                if w is None:
                    continue
            for s, c in self.p.reduce_path(w).items():
                row = eq.setdefault(self.p.index[s], {})
                col = base + j
                v = row.get(col, 0) + coeff * c
                if v == 0:
                    row.pop(col, None)
                else:
                    row[col] = v

    @staticmethod
    def flush(eq: dict, rows: list):
        rows.extend(r for r in eq.values() if r)


def constraint_system(p: QuotientPresentation, quotient: bool = False) -> ConstraintSystem:
    q = p.quiver
    gens = q.generators()
    b = _RowBuilder(p, gens)
    rows: list[dict[int, object]] = []
    verts = [q.trivial(v) for v in q.vertices]
    for x in verts:
        eq: dict = {}
        b.term(eq, 1, x, right=x)
        b.term(eq, 1, x, left=x)
        b.term(eq, -1, x)
        b.flush(eq, rows)
    for x in verts:
        for y in verts:
            if x != y:
                eq = {}
                b.term(eq, 1, x, right=y)
                b.term(eq, 1, y, left=x)
                b.flush(eq, rows)
    for a in q.arrows:
        arr = q.arrow_path(a.id)
        x, y = q.trivial(a.tail), q.trivial(a.head)
        eq = {}
        b.term(eq, 1, x, right=arr)
        b.term(eq, 1, arr, left=x)
        b.term(eq, -1, arr)
        b.flush(eq, rows)
        eq = {}
        b.term(eq, 1, arr, right=y)
        b.term(eq, 1, y, left=arr)
        b.term(eq, -1, arr)
        b.flush(eq, rows)
    if quotient:
        N = p.nilpotency
        targets = list(p.relations) + [
            AlgebraElement.from_path(q, p.field, path)
            for path in enumerate_paths(q, N)
            if path.length == N
        ]
        for g in targets:
            eq = {}
            for path, c in g.terms.items():
                arrows = path.arrows
                for i, a in enumerate(arrows):
                    left = Path(path.tail, q.arrow(arrows[i - 1]).head, arrows[:i]) if i else None
                    right = (
                        Path(q.arrow(arrows[i + 1]).tail, path.head, arrows[i + 1:])
                        if i < len(arrows) - 1
                        else None
                    )
                    b.term(eq, c, q.arrow_path(a), left=left, right=right)
            b.flush(eq, rows)
    return ConstraintSystem(p, gens, rows)


def inner_rank(p: QuotientPresentation) -> int:
    """Rank of s -> (x -> s*x - x*s) on vertices and arrows, over all basis paths s."""
    gens = p.quiver.generators()
    n = p.dimension
    rows = []
    for s in p.basis:
        row: dict[int, object] = {}
        for g_i, g in enumerate(gens):
            for w, sign in ((compose(s, g), 1), (compose(g, s), -1)):
                if w is None:
                    continue
                for t, c in p.reduce_path(w).items():
                    col = g_i * n + p.index[t]
                    v = row.get(col, 0) + sign * c
                    if v == 0:
                        row.pop(col, None)
                    else:
                        row[col] = v
        rows.append(row)
    return sparse_rank(rows, p.field)


def oracle_diff_dim(p: QuotientPresentation) -> int:
    return constraint_system(p).nullity()


def oracle_quotient_diff_dim(p: QuotientPresentation) -> int:
    return constraint_system(p, quotient=True).nullity()


def oracle_h1(p: QuotientPresentation) -> int:
    return oracle_diff_dim(p) - inner_rank(p)


def oracle_hh1(p: QuotientPresentation) -> int:
    return oracle_quotient_diff_dim(p) - inner_rank(p)


# -- random instances -----------------------------------------------------


def random_quiver(rng: random.Random, max_vertices: int = 5, max_arrows: int = 8) -> Quiver:
    nv = rng.randint(1, max_vertices)
    verts = [f"v{i}" for i in range(nv)]
    arrows = []
    for i in range(1, nv):
        j = rng.randrange(i)
        ends = (verts[j], verts[i]) if rng.random() < 0.5 else (verts[i], verts[j])
        arrows.append(ends)
    extra = rng.randint(0, max_arrows - len(arrows))
    for _ in range(extra):
        arrows.append((rng.choice(verts), rng.choice(verts)))
    rng.shuffle(arrows)
    return Quiver(verts, [(f"a{k}", t, h) for k, (t, h) in enumerate(arrows)])


def random_relation(rng: random.Random, q: Quiver, N: int) -> list[tuple[int, tuple[str, ...]]]:
    candidates = [p for p in enumerate_paths(q, N) if p.length >= 2]
    if not candidates:
        return []
    seed_path = rng.choice(candidates)
    pool = [p for p in candidates if p != seed_path and (parallel(p, seed_path) or rng.random() < 0.1)]
    others = rng.sample(pool, min(len(pool), rng.randint(0, 2)))
    terms = []
    for p in [seed_path] + others:
        c = rng.choice([-3, -2, -1, 1, 2, 3])
        terms.append((c, p.arrows))
    return terms


def random_instance(
    rng: random.Random,
    max_vertices: int = 5,
    max_arrows: int = 8,
    nilpotency: Sequence[int] = (2, 3),
    max_relations: int = 2,
    field: FieldSpec | None = None,
) -> QuotientPresentation:
    field = field or FieldSpec()
    q = random_quiver(rng, max_vertices, max_arrows)
    N = rng.choice(list(nilpotency))
    rels = []
    for _ in range(rng.randint(0, max_relations)):
        terms = random_relation(rng, q, N)
        if terms:
            rels.append(AlgebraElement.from_terms(q, field, terms))
    return build_presentation(q, IdealSpec(tuple(rels), N), field)


def random_instances(count: int, seed: int, **kwargs) -> Iterator[QuotientPresentation]:
    log.info("random instances: count=%d seed=%d", count, seed)
    rng = random.Random(seed)
    for _ in range(count):
        yield random_instance(rng, **kwargs)
