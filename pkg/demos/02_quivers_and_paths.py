"""Quivers, path composition and path enumeration."""

from quiverhh import Quiver
from quiverhh.quiver import compose, enumerate_paths, has_walk_of_length_at_least, is_acyclic_quiver

square = Quiver(
    ["s", "u", "d", "t"],
    [("a1", "s", "u"), ("a2", "u", "t"), ("b1", "s", "d"), ("b2", "d", "t")],
)
loop = Quiver(["v"], [("x", "v", "v")])

print("a1 then a2:", compose(square.path("a1"), square.path("a2")))
print("a1 then b2:", compose(square.path("a1"), square.path("b2")), "(heads and tails differ)")

print("\npaths of length <= 2 in the square:")
print("  ", ", ".join(str(p) for p in enumerate_paths(square, 2)))
print("paths of length <= 3 on the loop:")
print("  ", ", ".join(str(p) for p in enumerate_paths(loop, 3)))

print("\nsquare acyclic:", is_acyclic_quiver(square))
print("loop acyclic:", is_acyclic_quiver(loop))
print("walk s -> t of length >= 3:", has_walk_of_length_at_least(square, "s", "t", 3))
print("walk v -> v of length >= 100:", has_walk_of_length_at_least(loop, "v", "v", 100))
