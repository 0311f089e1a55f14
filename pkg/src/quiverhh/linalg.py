"""Exact dense linear algebra over the rationals and prime fields.

Scalars over Q are :class:`fractions.Fraction`; scalars over F_p are
:class:`ModP`.  Both support the ordinary arithmetic operators, so the
elimination code below is written once for either field.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Union


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class ModP:
    """Residue class modulo a prime ``p``, stored as an int in ``[0, p)``."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _lift(self, other) -> "ModP":
        if isinstance(other, ModP):
            if other.p != self.p:
                raise ValueError(f"mixing F_{self.p} and F_{other.p}")
            return other
        if isinstance(other, int):
            return ModP(other, self.p)
        if isinstance(other, Fraction):
            return ModP(other.numerator, self.p) / ModP(other.denominator, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return ModP(self.value + o.value, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return ModP(self.value - o.value, self.p)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return ModP(o.value - self.value, self.p)

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return ModP(self.value * o.value, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return ModP(-self.value, self.p)

    def inverse(self) -> "ModP":
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.p}")
        return ModP(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __eq__(self, other):
        if isinstance(other, ModP):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"ModP({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


Scalar = Union[Fraction, ModP]


@dataclass(frozen=True)
class FieldSpec:
    """The ground field: ``p == 0`` means Q, otherwise F_p."""

    p: int = 0

    def __post_init__(self):
        if self.p != 0 and not _is_prime(self.p):
            raise ValueError(f"field characteristic must be prime, got {self.p}")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(0)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(p)

    @property
    def is_rational(self) -> bool:
        return self.p == 0

    def characteristic(self) -> int:
        return self.p

    def coerce(self, x) -> Scalar:
        if self.p == 0:
            if isinstance(x, ModP):
                raise TypeError("cannot coerce an F_p residue into Q")
            return Fraction(x)
        if isinstance(x, ModP):
            if x.p != self.p:
                raise ValueError(f"mixing F_{self.p} and F_{x.p}")
            return x
        if isinstance(x, Rational):
            q = Fraction(x)
            if q.denominator % self.p == 0:
                raise ZeroDivisionError(f"{q} is undefined in F_{self.p}")
            return ModP(q.numerator, self.p) / ModP(q.denominator, self.p)
        raise TypeError(f"cannot coerce {x!r} into F_{self.p}")

    @property
    def zero(self) -> Scalar:
        return self.coerce(0)

    @property
    def one(self) -> Scalar:
        return self.coerce(1)

    def __str__(self):
        return "Q" if self.p == 0 else f"F_{self.p}"


@dataclass(frozen=True)
class ExactMatrix:
    rows: int
    cols: int
    entries: tuple
    field: FieldSpec

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(
        cls, rows: Sequence[Sequence], field: FieldSpec = FieldSpec(), cols: int | None = None
    ) -> "ExactMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
        entries = tuple(field.coerce(x) for r in rows for x in r)
        return cls(len(rows), cols, entries, field)

    @classmethod
    def zeros(cls, rows: int, cols: int, field: FieldSpec = FieldSpec()) -> "ExactMatrix":
        z = field.zero
        return cls(rows, cols, (z,) * (rows * cols), field)

    @classmethod
    def identity(cls, n: int, field: FieldSpec = FieldSpec()) -> "ExactMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], field)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list]:
        return [list(self.row(i)) for i in range(self.rows)]

    def sparse_rows(self) -> list[dict]:
        return [{j: v for j, v in enumerate(self.row(i)) if v != 0} for i in range(self.rows)]

    def apply(self, vector: Sequence) -> list:
        if len(vector) != self.cols:
            raise ValueError("dimension mismatch")
        vec = [self.field.coerce(x) for x in vector]
        out = []
        for i in range(self.rows):
            acc = self.field.zero
            for a, b in zip(self.row(i), vec):
                if a != 0 and b != 0:
                    acc = acc + a * b
            out.append(acc)
        return out


def echelon_sparse(rows: Iterable[dict], field: FieldSpec) -> dict[int, dict]:
    """Fully reduced row echelon form of sparse rows ``{col: value}``.

    Returns ``{pivot column: normalized row}``; every returned row has a 1 in
    its pivot column and zeros in all other pivot columns.
    """
    one = field.one
    pivots: dict[int, dict] = {}
    for raw in rows:
        r = {c: field.coerce(v) for c, v in raw.items() if v != 0}
        for c in [c for c in r if c in pivots]:
            f = r.get(c)
            if f is None:
                continue
            for cc, vv in pivots[c].items():
                nv = r.get(cc, 0) - f * vv
                if nv == 0:
                    r.pop(cc, None)
                else:
                    r[cc] = nv
        if not r:
            continue
        lead = min(r)
        inv = one / r[lead]
        if inv != one:
            r = {c: v * inv for c, v in r.items()}
        for prow in pivots.values():
            f = prow.get(lead)
            if f is None:
                continue
            for cc, vv in r.items():
                nv = prow.get(cc, 0) - f * vv
                if nv == 0:
                    prow.pop(cc, None)
                else:
                    prow[cc] = nv
        pivots[lead] = r
    return pivots


def nullspace_from_echelon(pivots: dict[int, dict], cols: int, field: FieldSpec) -> list[list]:
    """Canonical free-variable basis of the kernel described by ``pivots``."""
    zero, one = field.zero, field.one
    basis = []
    for f in range(cols):
        if f in pivots:
            continue
        v = [zero] * cols
        v[f] = one
        for c, prow in pivots.items():
            x = prow.get(f)
            if x is not None:
                v[c] = -x
        basis.append(v)
    return basis


def rref(m: ExactMatrix) -> tuple[ExactMatrix, list[int]]:
    pivots = echelon_sparse(m.sparse_rows(), m.field)
    order = sorted(pivots)
    zero = m.field.zero
    dense = []
    for c in order:
        row = [zero] * m.cols
        for j, v in pivots[c].items():
            row[j] = v
        dense.append(row)
    dense.extend([zero] * m.cols for _ in range(m.rows - len(order)))
    return ExactMatrix.from_rows(dense, m.field, cols=m.cols), order


def rank(m: ExactMatrix) -> int:
    return len(echelon_sparse(m.sparse_rows(), m.field))


def nullspace(m: ExactMatrix) -> list[list]:
    return nullspace_from_echelon(echelon_sparse(m.sparse_rows(), m.field), m.cols, m.field)


def sparse_rank(rows: Iterable[dict], field: FieldSpec) -> int:
    return len(echelon_sparse(rows, field))
