"""Exact row reduction over the rationals and over a prime field."""

from fractions import Fraction

from quiverhh import ExactMatrix, FieldSpec, nullspace, rank, rref

Q = FieldSpec()

# One homogeneous equation a + b - c - d = 0 in four unknowns.
m = ExactMatrix.from_rows([[1, 1, -1, -1]], Q)
print("rank:", rank(m))
print("solution basis:")
for v in nullspace(m):
    print("  ", [str(x) for x in v])

# Fractions never round.
m = ExactMatrix.from_rows([[3, 1, 2], [1, Fraction(1, 3), 5]], Q)
echelon, pivots = rref(m)
print("\nrref with pivots", pivots)
for row in echelon.to_rows():
    print("  ", [str(x) for x in row])

# The same matrix can have a different rank in characteristic p.
rows = [[1, 1], [1, 6]]
print("\nrank over Q:", rank(ExactMatrix.from_rows(rows, Q)))
print("rank over F_5:", rank(ExactMatrix.from_rows(rows, FieldSpec(5))))
