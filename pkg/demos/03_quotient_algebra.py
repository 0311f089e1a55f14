"""The quotient algebra kQ/I: basis, normal forms, products and center."""

from quiverhh.fixtures import loop2, sq

p = sq()
q = p.quiver
print(p)
print("basis:", ", ".join(str(s) for s in p.basis))
print("Q_A:", ", ".join(str(s) for s in p.Q_A))
print("Q_C:", ", ".join(str(s) for s in p.Q_C))

# a1*a2 is a pivot path and rewrites onto the basis
print("\na1*a2 reduces to", p.reduce(q.path("a1", "a2")))
a1, a2 = p.reduce(q.path("a1")), p.reduce(q.path("a2"))
print("a1 . a2 =", a1 * a2)

print("\ncenter:", [str(z) for z in p.center()])
print("monomial:", p.is_monomial(), " truncated:", p.is_truncated(), " acyclic:", p.is_acyclic_algebra)

lp = loop2()
x = lp.reduce(lp.quiver.path("x"))
print("\nk[x]/x^2: x . x =", x * x)
print("center dimension:", len(lp.center()), "of", lp.dimension)
print("complete monomial:", lp.is_complete_monomial())
