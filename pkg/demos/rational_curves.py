"""Genus-0 curve counts on blow-ups of the plane.

The associativity recursion reproduces the classical numbers 1, 1, 12, 620,
87304, 26312976, then classes with double points.  One class, (6; 2^8), has
too few point conditions for the recursion and no Cremona move lowers it.
"""
from a1count import GWEngine, PlaneClass, UnknownXError, gw_count

for d in range(1, 7):
    print(f"N_{d} = {gw_count(PlaneClass(d, ()))}")

for e, a in [(3, (2,)), (4, (2,)), (4, (3,)), (5, (2, 2)), (6, (2,) * 5), (6, (2,) * 7)]:
    print(f"N{PlaneClass(e, a)} = {gw_count(PlaneClass(e, a))}")

# A different pair of divisor insertions drives a different recursion.
alt = GWEngine(lambda c: (PlaneClass(1, ()), PlaneClass(1, (1,))) if c.a else (PlaneClass(1, ()),) * 2)
print("H, H-E1 route:", alt.gw_count(PlaneClass(6, (2,) * 5)))

try:
    gw_count(PlaneClass(6, (2,) * 8))
except UnknownXError as exc:
    print("as expected:", exc)
