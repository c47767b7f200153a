"""Quartics through a torsion point, counted from the group law alone.

A curve of plane degree d meeting the boundary cubic only at P forces a
relation among P, the six blown-up points and a fixed base point.  Counting
the multiplicity vectors that satisfy it, per Cremona model, gives weights;
multiplying by the count for each model gives n_d.
"""
from a1count import base_points, compute_n, model_weights, ordered_counts

d = 4
for row, p in base_points(d).items():
    print(f"P = {p}  (coset row {row})")
    for cls, k in ordered_counts(d, p).items():
        print(f"   {str(cls):<20} genus {cls.genus}   {k}")

# Both rows give the same weights after grouping by model and dividing by 3.
weights = model_weights(d, base_points(d)["0"])
print({str(m): w for m, w in weights.items()})

r = compute_n(d)
print(f"n_{d} = {r.breakdown()} = {r.value}")
