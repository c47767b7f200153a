"""From the relation tables to the degree-7 count.

The degeneration relations determine every table entry up to one symbol x.
The degree-6 count is known independently from the torsion route, which
pins x down, and the degree-7 count follows.
"""
from a1count import TangencyKey, compute_n, solve_tables, solve_x

sol = solve_tables()
print(f"{len(sol.values)} keys solved, {len(sol.unresolved)} unresolved")

for k in ("3;;", "5;;", "6;;", "6;2^8;", "6;2^5,1;"):
    print(f"{TangencyKey.parse(k).pretty():<14} = {sol[TangencyKey.parse(k)]}")

x = solve_x()
print(f"-6342+81x = 948  gives  x = {x}")

r = compute_n(7)
print(f"n_7 = {r.breakdown()}")
print(f"    = {r.value}  ({r.note})")
