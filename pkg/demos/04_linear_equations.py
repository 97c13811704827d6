"""Solving a*x*b = d and its one-sided relatives.

Run:  python demos/04_linear_equations.py
"""

import random

from cl12 import e0, e1, e2, e3, e4, e5, e6, e7, solve_ax, solve_axb, solve_xb
from cl12.verify import random_multivector

a, b = e0 + e1, e6 + e7
d = e0 + e1 + e6 + e7
print(f"solve a x b = d with a = {a}, b = {b}, d = {d}")
sol = solve_axb(a, b, d)
print(f"solvable: {sol.solvable}")
print(f"particular solution: {sol.particular}")
print(f"homogeneous solution space has dimension {sol.dim}; basis:")
for h in sol.hom_basis:
    print(f"  {h}")
print(f"residual of the particular solution: {sol.residual:g}")
print()

print("sampling the full family: particular + random homogeneous members")
rng = random.Random(0)
for _ in range(3):
    y = random_multivector(rng)
    shift = sum((float(rng.randint(-2, 2)) * h for h in sol.hom_basis), start=0 * e0)
    x = sol.particular + shift
    print(f"  |a x b - d| = {(a * x * b - d).norm():.2e}   for x = {x}")
print()

print("one-sided versions:")
left = solve_ax(e1 + e2, e1 + e2 + e5 + e6)
print(f"  (e1+e2) x = e1+e2+e5+e6   ->  x = {left.particular}  (dim {left.dim})")
right = solve_xb(e6 + e7, e2 - e3 + e4 - e5)
print(f"  x (e6+e7) = e2-e3+e4-e5   ->  x = {right.particular}  (dim {right.dim})")
print()

bad = solve_ax(e1 + e2, e0)
print(f"(e1+e2) x = 1 is unsolvable: solvable={bad.solvable}, "
      f"least-squares residual {bad.residual:.6g}")
print("unsolvable is a value, not an exception; the residual separates")
print("barely-inconsistent systems from wildly inconsistent ones.")
