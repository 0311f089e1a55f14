"""Derivations: the standard basis, applying operators, validating raw data,
and the subspace that survives passing to the quotient."""

from quiverhh import ArrowType, DerivationValues, apply, extend_derivation, f2_subspace, standard_basis
from quiverhh.derivations import cycle_identity_check
from quiverhh.fixtures import kr2, loop2, sq

p = sq()
q = p.quiver
s = standard_basis(p)
print("inner part:", ", ".join(map(str, s.B1)))
print("arrow part:", ", ".join(map(str, s.B2)))
print(f"dim H1 = |B2| + dim Z - |Q_C| = {len(s.B2)} + {s.dim_center} - {s.q_c} = {s.dim_h1}")

op = ArrowType("a1", q.path("a1"))
print(f"\n{op} on a1*a2:", apply(p, op, q.path("a1", "a2")))

lp = loop2()
op = ArrowType("x", lp.quiver.trivial("v"))
print(f"{op} on x*x:", apply(lp, op, lp.quiver.path("x", "x")))

# Raw values on vertices and arrows are checked before extending.
zero = {v: p.zero() for v in q.vertices}
arrows = {a.id: p.zero() for a in q.arrows}
print("\nD(e_s) = a1, everything else 0:")
print("  ", extend_derivation(p, DerivationValues(dict(zero, s=p.reduce(q.path("a1"))), arrows)))
good = extend_derivation(p, DerivationValues(zero, dict(arrows, a1=p.reduce(q.path("a1")))))
print("D(a1) = a1, everything else 0: D(a1*a2) =", good(q.path("a1", "a2")))

print("\ncycle identity for x on the loop:", cycle_identity_check(lp, lp.quiver.path("x")))

for name, algebra in (("SQ", p), ("LOOP2", lp), ("KR2", kr2())):
    f = f2_subspace(algebra)
    print(f"\n{name}: dim F2 = {f.dim_f2}, dim HH1 = {f.dim_hh1}")
    for vec in f.vectors:
        terms = [("- " if c < 0 else "+ ") + (f"{abs(c)} " if abs(c) != 1 else "") + str(op)
                 for op, c in f.operator(vec).items()]
        print("   ", " ".join(terms).lstrip("+ "))
